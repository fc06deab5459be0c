//! Grassmannian Weyl group combinatorics: the dictionary between ascending
//! sequences and minimal coset representatives, inversion sets, the favored
//! reduced decomposition, Bruhat order and face restriction.
//!
//! Composition convention: a word `s_{i1} ... s_{ir}` applies `s_{ir}`
//! first, so `compose(f, g)(x) = f(g(x))` and right multiplication by `s_k`
//! swaps window positions `k` and `k+1`. The convention is pinned by the
//! anchor `s1 s3 s2 -> [2,4,1,3] -> ell = (2,3)` for `n = 3, i = 2`.

use crate::error::Error;
use crate::polytope::{chain_polytope, MultiExponent};
use crate::poset::{LSequence, PosetP};
use crate::Result;
use serde::Serialize;
use std::collections::BTreeSet;

/// A permutation of `1..=n+1` in window (one-line) notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Permutation {
        Permutation {
            window: (1..=size).collect(),
        }
    }

    pub fn from_window(window: Vec<usize>) -> Result<Permutation> {
        let size = window.len();
        let mut seen = vec![false; size + 1];
        for &v in &window {
            if v < 1 || v > size || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "window {window:?} is not a bijection on 1..={size}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { window })
    }

    /// `s_k`: the transposition of values `k`, `k+1`.
    pub fn simple_reflection(size: usize, k: usize) -> Permutation {
        assert!(k >= 1 && k < size, "reflection index out of range");
        let mut window: Vec<usize> = (1..=size).collect();
        window.swap(k - 1, k);
        Permutation { window }
    }

    pub fn size(&self) -> usize {
        self.window.len()
    }

    /// Rank `n` of the ambient `sl_{n+1}`.
    pub fn rank(&self) -> usize {
        self.window.len() - 1
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    pub fn apply(&self, x: usize) -> usize {
        self.window[x - 1]
    }

    /// `(self o other)(x) = self(other(x))`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            window: (1..=self.size())
                .map(|x| self.apply(other.apply(x)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0; self.size()];
        for (x, &y) in self.window.iter().enumerate() {
            window[y - 1] = x + 1;
        }
        Permutation { window }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    /// Coxeter length = number of inversions of the window.
    pub fn coxeter_length(&self) -> usize {
        let w = &self.window;
        let mut len = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    len += 1;
                }
            }
        }
        len
    }
}

/// A set of positive roots `alpha_{k,j} = alpha_k + ... + alpha_j`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RootSet {
    pub roots: BTreeSet<(usize, usize)>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: (usize, usize)) -> bool {
        self.roots.contains(&root)
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.roots.is_subset(&other.roots)
    }
}

/// A word in simple reflections, rightmost letter applied first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
}

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self, size: usize) -> Permutation {
        evaluate_word(&self.letters, size)
    }
}

/// Evaluate a word of simple reflections; the rightmost letter acts first,
/// which on windows is a left-to-right fold of position swaps.
pub fn evaluate_word(letters: &[usize], size: usize) -> Permutation {
    let mut w = Permutation::identity(size);
    for &k in letters {
        assert!(
            k >= 1 && k < size,
            "letter s_{k} out of range for size {size}"
        );
        w.window.swap(k - 1, k);
    }
    w
}

/// Grassmannian condition: increasing on positions `1..=i` and on
/// `i+1..=n+1`.
pub fn is_minimal_rep(w: &Permutation, i: usize) -> bool {
    let win = w.window();
    let inc = |slice: &[usize]| slice.windows(2).all(|p| p[0] < p[1]);
    i >= 1 && i <= w.rank() && inc(&win[..i]) && inc(&win[i..])
}

/// Inversion roots: `{alpha_{k,j} : w(j+1) < w(k)}`; the size equals the
/// Coxeter length.
pub fn inversion_roots(w: &Permutation) -> RootSet {
    let n = w.rank();
    let mut roots = BTreeSet::new();
    for k in 1..=n {
        for j in k..=n {
            if w.apply(j + 1) < w.apply(k) {
                roots.insert((k, j));
            }
        }
    }
    RootSet { roots }
}

/// The sequence of a minimal representative:
/// `l_k = max({i-1} u {j : i <= j <= n, alpha_{k,j} inverted})`.
pub fn ell_of(w: &Permutation, i: usize) -> Result<LSequence> {
    if !is_minimal_rep(w, i) {
        return Err(Error::NotMinimalRep(w.window().to_vec(), i));
    }
    let n = w.rank();
    let inv = inversion_roots(w);
    let mut ell = Vec::with_capacity(i);
    for k in 1..=i {
        let mut best = i - 1;
        for j in i..=n {
            if inv.contains((k, j)) {
                best = best.max(j);
            }
        }
        ell.push(best);
    }
    LSequence::new(i, n, ell)
}

/// The favored reduced decomposition
/// `(s_{l_1-(i-1)} ... s_1)(s_{l_2-(i-2)} ... s_2) ... (s_{l_i} ... s_i)`,
/// with a bracket empty whenever its column is. Returns the word and its
/// evaluated permutation; the word length equals `N`.
pub fn word_of_ell(ell: &LSequence) -> (ReducedWord, Permutation) {
    let i = ell.i();
    let n = ell.n();
    let mut letters = Vec::new();
    for k in 1..=i {
        let top = ell.ell_k(k) as i64 - (i as i64 - k as i64);
        let mut s = top;
        while s >= k as i64 {
            letters.push(s as usize);
            s -= 1;
        }
    }
    let w = evaluate_word(&letters, n + 1);
    debug_assert_eq!(letters.len(), ell.vertex_count());
    (ReducedWord { letters }, w)
}

/// All `C(n+1, i)` minimal coset representatives, ordered by window.
pub fn minimal_representatives(n: usize, i: usize) -> Vec<Permutation> {
    let size = n + 1;
    let mut out = Vec::new();
    let mut subset = Vec::new();
    fn go(size: usize, i: usize, from: usize, subset: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if subset.len() == i {
            let chosen: BTreeSet<usize> = subset.iter().copied().collect();
            let mut window = subset.clone();
            window.extend((1..=size).filter(|v| !chosen.contains(v)));
            out.push(Permutation { window });
            return;
        }
        for v in from..=size {
            subset.push(v);
            go(size, i, v + 1, subset, out);
            subset.pop();
        }
    }
    go(size, i, 1, &mut subset, &mut out);
    out.sort();
    out
}

/// Minimal representative of the longest element of the parabolic quotient:
/// the sequence `(n, ..., n)`.
pub fn longest_minimal_rep(n: usize, i: usize) -> Permutation {
    let ell = LSequence::new(i, n, vec![n; i]).expect("constant-n sequence is valid");
    word_of_ell(&ell).1
}

/// Bruhat order via the sorted-prefix (tableau) criterion.
pub fn bruhat_leq(tau: &Permutation, w: &Permutation, i: usize) -> Result<bool> {
    if !is_minimal_rep(tau, i) {
        return Err(Error::NotMinimalRep(tau.window().to_vec(), i));
    }
    if !is_minimal_rep(w, i) {
        return Err(Error::NotMinimalRep(w.window().to_vec(), i));
    }
    Ok(bruhat_leq_generic(tau, w))
}

/// The tableau criterion on arbitrary permutations: for every prefix length,
/// the sorted prefix of `tau` is dominated entrywise by that of `w`.
pub fn bruhat_leq_generic(tau: &Permutation, w: &Permutation) -> bool {
    let size = tau.size();
    for r in 1..size {
        let mut a: Vec<usize> = tau.window()[..r].to_vec();
        let mut b: Vec<usize> = w.window()[..r].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

/// The face data of a Bruhat pair: zeroing the coordinates of
/// `R^-_w \ R^-_tau` inside the chain polytope of `w` carves out exactly the
/// chain polytope of `tau`.
#[derive(Debug, Clone, Serialize)]
pub struct FaceRestriction {
    /// Roots to set to zero.
    pub zero_roots: Vec<(usize, usize)>,
    /// The same roots as canonical coordinate indices in the big poset.
    pub zero_indices: Vec<usize>,
    /// Lattice points of the face, in the big polytope's coordinates.
    pub face_points: Vec<MultiExponent>,
}

/// Coordinate description of `m C_{ell_tau}` as a face of `m C_{ell_w}`.
///
/// Checks the defining property by enumerating both sides; a mismatch is a
/// bug, never bad input, so it panics rather than returning.
pub fn face_restriction(
    tau: &Permutation,
    w: &Permutation,
    i: usize,
    m: i64,
) -> Result<FaceRestriction> {
    if !bruhat_leq(tau, w, i)? {
        return Err(Error::NotBruhatComparable);
    }
    let inv_tau = inversion_roots(tau);
    let inv_w = inversion_roots(w);
    let zero_roots: Vec<(usize, usize)> = inv_w.roots.difference(&inv_tau.roots).copied().collect();
    let ell_w = ell_of(w, i)?;
    let ell_tau = ell_of(tau, i)?;
    let p_w = PosetP::new(&ell_w);
    let p_tau = PosetP::new(&ell_tau);
    let zero_indices: Vec<usize> = zero_roots
        .iter()
        .map(|&r| {
            p_w.index_of(r)
                .expect("inversion roots of w index its poset vertices")
        })
        .collect();
    let face_points: Vec<MultiExponent> = chain_polytope(&p_w, m)
        .lattice_points()
        .expect("chain polytope is bounded")
        .into_iter()
        .filter(|pt| zero_indices.iter().all(|&z| pt.entries[z] == 0))
        .collect();
    // Embed the small polytope's points into the big coordinate set.
    let embedded: BTreeSet<Vec<i64>> = chain_polytope(&p_tau, m)
        .lattice_points()
        .expect("chain polytope is bounded")
        .into_iter()
        .map(|pt| {
            let mut big = vec![0i64; p_w.len()];
            for (idx, &v) in p_tau.vertices().iter().enumerate() {
                big[p_w.index_of(v).expect("subposet vertices embed")] = pt.entries[idx];
            }
            big
        })
        .collect();
    let face_set: BTreeSet<Vec<i64>> = face_points.iter().map(|p| p.entries.clone()).collect();
    assert_eq!(
        face_set, embedded,
        "face restriction must carve out the subpolytope"
    );
    Ok(FaceRestriction {
        zero_roots,
        zero_indices,
        face_points,
    })
}

/// Demazure character from the chain polytope:
/// `e^{w(m omega_i)} * sum over lattice points s of e^{w(-wt(s))}` with
/// `wt(s) = sum s_alpha alpha`, every term normalized.
pub fn character_via_polytope(
    w: &Permutation,
    i: usize,
    m: i64,
) -> Result<crate::weight::Character> {
    use crate::weight::{fundamental_weight_raw, root_raw, Character, Weight};
    let ell = ell_of(w, i)?;
    let n = ell.n();
    let p = PosetP::new(&ell);
    let points = chain_polytope(&p, m)
        .lattice_points()
        .expect("chain polytope is bounded");
    let mut ch = Character::new();
    for s in points {
        let mut raw: Vec<i64> = fundamental_weight_raw(n, i)
            .into_iter()
            .map(|c| c * m)
            .collect();
        for (idx, &e) in s.entries.iter().enumerate() {
            if e != 0 {
                for (c, r) in raw.iter_mut().zip(root_raw(n, p.vertex(idx))) {
                    *c -= e * r;
                }
            }
        }
        // Apply w coordinatewise: eps_b -> eps_{w(b)}.
        let mut permuted = vec![0i64; n + 1];
        for (b, &c) in raw.iter().enumerate() {
            permuted[w.apply(b + 1) - 1] = c;
        }
        ch.add(Weight::from_raw(permuted));
    }
    Ok(ch)
}

/// All reduced words of `w`, by peeling right descents. Exponential; small
/// ranks only.
pub fn reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    fn rec(w: &Permutation, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let mut any = false;
        for k in 1..w.size() {
            if w.apply(k) > w.apply(k + 1) {
                any = true;
                let mut shorter = w.clone();
                shorter.window.swap(k - 1, k);
                cur.push(k);
                rec(&shorter, cur, out);
                cur.pop();
            }
        }
        if !any {
            let mut word = cur.clone();
            word.reverse();
            out.push(word);
        }
    }
    let mut out = Vec::new();
    rec(w, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Test oracle: all evaluations of subwords of the favored reduced word of
/// `w` form exactly the Bruhat interval below `w`. Exponential; small ranks
/// only.
pub fn bruhat_interval_by_subwords(w: &Permutation, i: usize) -> Result<BTreeSet<Permutation>> {
    let ell = ell_of(w, i)?;
    let (word, _) = word_of_ell(&ell);
    let len = word.len();
    if len > 20 {
        return Err(Error::GuardExceeded(format!(
            "subword oracle is exponential; got word length {len}"
        )));
    }
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << len) {
        let letters: Vec<usize> = (0..len)
            .filter(|&p| mask >> p & 1 == 1)
            .map(|p| word.letters[p])
            .collect();
        out.insert(evaluate_word(&letters, w.size()));
    }
    Ok(out)
}
