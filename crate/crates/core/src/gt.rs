//! Gelfand-Tsetlin patterns for a rectangular highest weight, Kogan faces,
//! their types and ladder moves, implicit-equation closure, maximal faces and
//! the coordinate isomorphism with the order polytope.
//!
//! Only the highest weight `m * omega_{n+1-i}` is supported. The reading
//! convention for face types follows the triangle drawn with row 0 on top:
//! rows are scanned bottom (largest `k`) to top, left to right, appending
//! `s_{k+j}` for each equality `A_{k,j}`. Note the diagram automorphism is
//! baked into the weight of a pattern (the "dualized" row-sum formula), so a
//! face of `GT(m omega_{n+1-i})` carries characters for modules of highest
//! weight `m omega_i`; this silently swaps `i` and `n+1-i` and is the single
//! convention every downstream comparison relies on.

use crate::error::Error;
use crate::polytope::{order_polytope, HPolytope, Inequality};
use crate::poset::{LSequence, PosetP};
use crate::weight::{Character, Weight};
use crate::weyl::{
    ell_of, evaluate_word, is_minimal_rep, longest_minimal_rep, Permutation, ReducedWord,
};
use crate::Result;
use serde::Serialize;
use std::collections::BTreeSet;

/// A triangular integer array; `rows[k]` has `n+1-k` entries, `k = 0..=n`.
/// Row 0 is stored explicitly (fixed by the highest weight); rows `1..=n`
/// are the polytope coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct GTPattern {
    pub rows: Vec<Vec<i64>>,
}

impl GTPattern {
    pub fn n(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn entry(&self, k: usize, j: usize) -> i64 {
        self.rows[k][j - 1]
    }

    /// Interlacing plus the fixed top row for `m * omega_{n+1-i}`.
    pub fn is_valid(&self, n: usize, i: usize, m: i64) -> bool {
        if self.rows.len() != n + 1 || self.rows[0] != top_row(n, i, m) {
            return false;
        }
        for k in 1..=n {
            if self.rows[k].len() != n + 1 - k {
                return false;
            }
            for j in 1..=n + 1 - k {
                if self.entry(k - 1, j) < self.entry(k, j)
                    || self.entry(k, j) < self.entry(k - 1, j + 1)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Dualized weight: with row sums `r_k` (and `r_{n+1} = 0`), the
    /// coordinate of `eps_{k+1}` is `r_{k+1} - r_k`.
    pub fn weight(&self) -> Weight {
        let n = self.n();
        let sums: Vec<i64> = self.rows.iter().map(|r| r.iter().sum()).collect();
        let mut coords = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let next = if k + 1 <= n { sums[k + 1] } else { 0 };
            coords.push(next - sums[k]);
        }
        Weight::from_raw(coords)
    }
}

/// Top row of `GT(m * omega_{n+1-i})`: `m` in the first `n+1-i` slots.
pub fn top_row(n: usize, i: usize, m: i64) -> Vec<i64> {
    (1..=n + 1)
        .map(|j| if j <= n + 1 - i { m } else { 0 })
        .collect()
}

/// A Kogan face: a set of equalities `A_{k,j} : x_{k,j} = x_{k+1,j}` of
/// `GT(m * omega_{n+1-i})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoganFace {
    pub n: usize,
    pub i: usize,
    pub m: i64,
    pub equalities: BTreeSet<(usize, usize)>,
}

impl KoganFace {
    pub fn new(n: usize, i: usize, m: i64, equalities: BTreeSet<(usize, usize)>) -> Result<Self> {
        if i < 1 || i > n {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= i <= n, got i = {i}, n = {n}"
            )));
        }
        for &(k, j) in &equalities {
            if k > n - 1 || j < 1 || j > n - k {
                return Err(Error::InvalidFacePosition(format!(
                    "A_({k},{j}) outside the triangle for n = {n}"
                )));
            }
        }
        Ok(KoganFace {
            n,
            i,
            m,
            equalities,
        })
    }

    pub fn empty(n: usize, i: usize, m: i64) -> Self {
        KoganFace {
            n,
            i,
            m,
            equalities: BTreeSet::new(),
        }
    }
}

/// All equality positions of the triangle, row-major.
fn all_positions(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 0..n {
        for j in 1..=n - k {
            out.push((k, j));
        }
    }
    out
}

/// The H-polytope of `GT(m * omega_{n+1-i})` in row-major coordinates for
/// rows `1..=n`.
pub fn gt_polytope(n: usize, i: usize, m: i64) -> HPolytope {
    assert!(i >= 1 && i <= n && m >= 1, "need 1 <= i <= n and m >= 1");
    let dim = n * (n + 1) / 2;
    let index = |k: usize, j: usize| -> usize {
        // rows 1..=n, row k has n+1-k entries
        let offset: usize = (1..k).map(|r| n + 1 - r).sum();
        offset + (j - 1)
    };
    let top = top_row(n, i, m);
    let mut inequalities = Vec::new();
    for k in 1..=n {
        for j in 1..=n + 1 - k {
            // s_{k,j} <= s_{k-1,j}
            let mut coeffs = vec![0i64; dim];
            coeffs[index(k, j)] = 1;
            let bound = if k == 1 {
                top[j - 1]
            } else {
                coeffs[index(k - 1, j)] = -1;
                0
            };
            inequalities.push(Inequality { coeffs, bound });
            // s_{k,j} >= s_{k-1,j+1}
            let mut coeffs = vec![0i64; dim];
            coeffs[index(k, j)] = -1;
            let bound = if k == 1 {
                -top[j]
            } else {
                coeffs[index(k - 1, j + 1)] = 1;
                0
            };
            inequalities.push(Inequality { coeffs, bound });
        }
    }
    HPolytope { dim, inequalities }
}

/// Lattice points of a Kogan face: all patterns satisfying interlacing, the
/// fixed top row and the face equalities. Deterministic row-major order.
pub fn face_lattice_points(f: &KoganFace) -> Vec<GTPattern> {
    fn next_row(f: &KoganFace, rows: &mut Vec<Vec<i64>>, k: usize, out: &mut Vec<GTPattern>) {
        if k > f.n {
            out.push(GTPattern { rows: rows.clone() });
            return;
        }
        rows.push(Vec::new());
        fill(f, rows, k, 1, out);
        rows.pop();
    }
    fn fill(f: &KoganFace, rows: &mut Vec<Vec<i64>>, k: usize, j: usize, out: &mut Vec<GTPattern>) {
        if j > f.n + 1 - k {
            next_row(f, rows, k + 1, out);
            return;
        }
        // Interlacing: s_{k-1,j} >= s_{k,j} >= s_{k-1,j+1}; the equality
        // A_{k-1,j} pins s_{k,j} to s_{k-1,j}.
        let ub = rows[k - 1][j - 1];
        let lb = rows[k - 1][j];
        let (from, to) = if f.equalities.contains(&(k - 1, j)) {
            (ub.max(lb), ub)
        } else {
            (lb, ub)
        };
        for v in from..=to {
            rows[k].push(v);
            fill(f, rows, k, j + 1, out);
            rows[k].pop();
        }
    }
    let mut rows: Vec<Vec<i64>> = vec![top_row(f.n, f.i, f.m)];
    let mut out = Vec::new();
    next_row(f, &mut rows, 1, &mut out);
    out
}

/// Lattice points of the full polytope.
pub fn gt_lattice_points(n: usize, i: usize, m: i64) -> Vec<GTPattern> {
    face_lattice_points(&KoganFace::empty(n, i, m))
}

/// The type of a face: scan rows bottom to top, each left to right, and
/// append `s_{k+j}` for every equality `A_{k,j}`.
pub fn kogan_type(f: &KoganFace) -> (ReducedWord, Permutation) {
    let mut letters = Vec::new();
    for k in (0..f.n).rev() {
        for j in 1..=f.n - k {
            if f.equalities.contains(&(k, j)) {
                letters.push(k + j);
            }
        }
    }
    let w = evaluate_word(&letters, f.n + 1);
    (ReducedWord { letters }, w)
}

/// Entries forced by the highest weight and the face equalities.
#[derive(Debug, Clone, Serialize)]
pub struct ImplicitClosure {
    /// Positions `(k, j)` pinned to the value `m`.
    pub fixed_m: BTreeSet<(usize, usize)>,
    /// Positions pinned to 0 (the columns `j >= n-i+2`).
    pub fixed_zero: BTreeSet<(usize, usize)>,
    /// Implicit equalities: valid `A_{k,j}` whose two sides are both pinned,
    /// excluding the explicit ones.
    pub implicit: BTreeSet<(usize, usize)>,
    /// `c_k`: how many initial entries of the `k`-th diagonal
    /// `x_{k,1}, x_{k-1,2}, ...` are pinned to `m`.
    pub diagonal_counts: Vec<usize>,
}

/// Fixed-point closure of the forced entries. Independent of `m` as far as
/// positions go: the rules only mention positions.
pub fn implicit_closure(f: &KoganFace) -> ImplicitClosure {
    let n = f.n;
    let i = f.i;
    let position_valid = |k: usize, j: usize| k <= n && j >= 1 && j <= n + 1 - k;
    let mut fixed_m: BTreeSet<(usize, usize)> = BTreeSet::new();
    for k in 0..=n {
        for j in 1..=n + 1 - k {
            if k + j <= n - i + 1 {
                fixed_m.insert((k, j));
            }
        }
    }
    let mut fixed_zero: BTreeSet<(usize, usize)> = BTreeSet::new();
    for k in 0..=n {
        for j in 1..=n + 1 - k {
            if j >= n - i + 2 {
                fixed_zero.insert((k, j));
            }
        }
    }
    // Propagate m-values: up a column, down-left along a diagonal, and down
    // a column through an explicit equality.
    loop {
        let mut new: Vec<(usize, usize)> = Vec::new();
        for &(k, j) in &fixed_m {
            if k >= 1 && !fixed_m.contains(&(k - 1, j)) {
                new.push((k - 1, j));
            }
            if j >= 2 && position_valid(k + 1, j - 1) && !fixed_m.contains(&(k + 1, j - 1)) {
                new.push((k + 1, j - 1));
            }
            if f.equalities.contains(&(k, j))
                && position_valid(k + 1, j)
                && !fixed_m.contains(&(k + 1, j))
            {
                new.push((k + 1, j));
            }
        }
        if new.is_empty() {
            break;
        }
        fixed_m.extend(new);
    }
    let mut implicit = BTreeSet::new();
    for (k, j) in all_positions(n) {
        if f.equalities.contains(&(k, j)) {
            continue;
        }
        let both_m = fixed_m.contains(&(k, j)) && fixed_m.contains(&(k + 1, j));
        let both_zero = j >= n - i + 2;
        if both_m || both_zero {
            implicit.insert((k, j));
        }
    }
    let mut diagonal_counts = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut c = 0;
        for t in 0..=k {
            if fixed_m.contains(&(k - t, t + 1)) {
                c += 1;
            } else {
                break;
            }
        }
        diagonal_counts.push(c);
    }
    ImplicitClosure {
        fixed_m,
        fixed_zero,
        implicit,
        diagonal_counts,
    }
}

/// Replace `A_{j+l,k}` by `A_{j,k+1}`; the face type is unchanged.
///
/// Preconditions (reported precisely on failure): `A_{j,k}`, `A_{j,k+1}`,
/// `A_{j+l,k+1}` absent; `A_{j',k'}` present for `j+1 <= j' <= j+l-1`,
/// `k' in {k, k+1}`; `A_{j+l,k}` present.
pub fn ladder_move(f: &KoganFace, j: usize, k: usize, l: usize) -> Result<KoganFace> {
    if l < 1 {
        return Err(Error::InvalidLadderMove("size l must be >= 1".into()));
    }
    let present = |r: usize, c: usize| f.equalities.contains(&(r, c));
    for (r, c, want) in [
        (j, k, false),
        (j, k + 1, false),
        (j + l, k + 1, false),
        (j + l, k, true),
    ] {
        if present(r, c) != want {
            return Err(Error::InvalidLadderMove(format!(
                "A_({r},{c}) must be {}",
                if want { "present" } else { "absent" }
            )));
        }
    }
    for jp in j + 1..j + l {
        for kp in [k, k + 1] {
            if !present(jp, kp) {
                return Err(Error::InvalidLadderMove(format!(
                    "A_({jp},{kp}) must be present for a size-{l} move"
                )));
            }
        }
    }
    let mut equalities = f.equalities.clone();
    equalities.remove(&(j + l, k));
    equalities.insert((j, k + 1));
    let moved = KoganFace::new(f.n, f.i, f.m, equalities)?;
    debug_assert_eq!(
        kogan_type(&moved).1,
        kogan_type(f).1,
        "ladder moves preserve the type"
    );
    Ok(moved)
}

/// The unique maximal Kogan face of type `tau = w * w0^{-1}` (with `w` a
/// minimal representative): equalities `A_{l_k-i+k, 1..=n-l_k}` per column.
pub fn maximal_kogan_face(tau: &Permutation, n: usize, i: usize, m: i64) -> Result<KoganFace> {
    if tau.rank() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation rank {} does not match n = {n}",
            tau.rank()
        )));
    }
    let w0 = longest_minimal_rep(n, i);
    let w = tau.compose(&w0);
    if !is_minimal_rep(&w, i) {
        return Err(Error::NotBracketForm(tau.window().to_vec(), i));
    }
    let ell = ell_of(&w, i)?;
    let mut equalities = BTreeSet::new();
    for k in 1..=i {
        let lk = ell.ell_k(k);
        let row = lk + k - i; // l_k >= i-1 keeps this nonnegative
        for j in 1..=n - lk {
            equalities.insert((row, j));
        }
    }
    let face = KoganFace::new(n, i, m, equalities)?;
    assert_eq!(
        kogan_type(&face).1,
        *tau,
        "the reading word of the maximal face must evaluate to tau"
    );
    Ok(face)
}

/// The coordinate correspondence between the free entries of a maximal
/// Kogan face and the poset vertices, under which face lattice points match
/// order-polytope lattice points.
#[derive(Debug, Clone, Serialize)]
pub struct OrderIso {
    pub ell: LSequence,
    /// Pairs `((gt_row, gt_col), (k, j))` of free GT positions and poset
    /// vertices, listed in canonical poset order.
    pub pairs: Vec<((usize, usize), (usize, usize))>,
}

/// Build and verify the isomorphism for a maximal face; rejects faces that
/// are not of the maximal form.
pub fn order_polytope_iso(f: &KoganFace) -> Result<OrderIso> {
    let (_, tau) = kogan_type(f);
    let rebuilt = maximal_kogan_face(&tau, f.n, f.i, f.m)?;
    if rebuilt.equalities != f.equalities {
        return Err(Error::NotMaximalFace);
    }
    let n = f.n;
    let i = f.i;
    let w0 = longest_minimal_rep(n, i);
    let w = tau.compose(&w0);
    let ell = ell_of(&w, i)?;
    let poset = PosetP::new(&ell);
    // Free positions on diagonal n-i+p run from t = n-l_p to t = n-i and
    // map to column p of the poset with j = n - t.
    let mut pairs: Vec<((usize, usize), (usize, usize))> = Vec::new();
    for p in 1..=i {
        let lp = ell.ell_k(p);
        for t in (n - lp)..=(n.saturating_sub(i)) {
            let gt_pos = (n - i + p - t, t + 1);
            let vertex = (p, n - t);
            pairs.push((gt_pos, vertex));
        }
    }
    pairs.sort_by_key(|&(_, v)| poset.index_of(v).expect("pair vertices lie in the poset"));
    // The pairs must be exactly the unpinned positions.
    let closure = implicit_closure(f);
    let free: BTreeSet<(usize, usize)> = {
        let mut free = BTreeSet::new();
        for k in 0..=n {
            for j in 1..=n + 1 - k {
                if !closure.fixed_m.contains(&(k, j)) && !closure.fixed_zero.contains(&(k, j)) {
                    free.insert((k, j));
                }
            }
        }
        free
    };
    let pair_positions: BTreeSet<(usize, usize)> = pairs.iter().map(|&(g, _)| g).collect();
    assert_eq!(
        free, pair_positions,
        "free GT positions must match the poset pattern"
    );
    // Point sets agree coordinatewise.
    let face_pts = face_lattice_points(f);
    let mapped: BTreeSet<Vec<i64>> = face_pts
        .iter()
        .map(|pat| pairs.iter().map(|&((k, j), _)| pat.entry(k, j)).collect())
        .collect();
    let order_pts: BTreeSet<Vec<i64>> = order_polytope(&poset, f.m)
        .lattice_points()
        .expect("order polytope is bounded")
        .into_iter()
        .map(|p| p.entries)
        .collect();
    assert_eq!(mapped.len(), face_pts.len(), "free coordinates inject");
    assert_eq!(
        mapped, order_pts,
        "face points must match order-polytope points"
    );
    Ok(OrderIso { ell, pairs })
}

/// Character of a pattern list (weights with multiplicity).
pub fn char_of_patterns<'a>(patterns: impl IntoIterator<Item = &'a GTPattern>) -> Character {
    Character::from_weights(patterns.into_iter().map(|p| p.weight()))
}

/// All Kogan faces with a reduced reading word, brute-forced over equality
/// subsets. Exponential in `n(n+1)/2`; guarded.
pub fn enumerate_reduced_kogan_faces(n: usize, i: usize, m: i64) -> Result<Vec<KoganFace>> {
    let positions = all_positions(n);
    if positions.len() > 16 {
        return Err(Error::GuardExceeded(format!(
            "Kogan-face enumeration is exponential; {} positions exceed the guard of 16",
            positions.len()
        )));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << positions.len()) {
        let equalities: BTreeSet<(usize, usize)> = positions
            .iter()
            .enumerate()
            .filter(|&(idx, _)| mask >> idx & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let face = KoganFace::new(n, i, m, equalities)?;
        let (word, perm) = kogan_type(&face);
        if word.len() == perm.coxeter_length() {
            out.push(face);
        }
    }
    Ok(out)
}
