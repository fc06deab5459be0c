//! Brute-force representation oracle for the Demazure subspace
//! `U(n^-_w) . v_{m omega_i}` inside tensor powers of the wedge
//! representation: PBW-graded dimensions, independence of the chain-polytope
//! monomials, essential monomials under the homogeneous lexicographic order,
//! straightening witnesses and annihilation checks for the defining ideal.
//!
//! Everything here is exact rational linear algebra on explicit basis
//! vectors; it is deliberately independent of the combinatorial identities it
//! certifies.

use crate::error::Error;
use crate::linalg::{rat_int, solve, Rat, Span, SparseVec};
use crate::polytope::{chain_polytope, MultiExponent};
use crate::poset::PosetP;
use crate::weight::{fundamental_weight_raw, root_raw, Character, Weight};
use crate::weyl::{ell_of, Permutation};
use crate::Result;
use num_traits::Zero;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Homogeneous lexicographic comparison of exponent vectors in canonical
/// coordinate order: first by total degree, then lexicographically with the
/// largest root (last canonical index) most significant.
pub fn monomial_cmp(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for idx in (0..a.len()).rev() {
            match a[idx].cmp(&b[idx]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    })
}

/// A multi-exponent carrying the monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedMonomial(pub MultiExponent);

impl PartialOrd for OrderedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrderedMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        monomial_cmp(&self.0.entries, &other.0.entries)
    }
}

/// All exponent vectors of the given degree over `n_vars` variables, in
/// ascending monomial order.
pub fn monomials_of_degree(n_vars: usize, d: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if n_vars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    fn rec(pos: usize, remaining: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == 0 {
            cur[0] = remaining;
            out.push(cur.clone());
            cur[0] = 0;
            return;
        }
        for e in 0..=remaining {
            cur[pos] = e;
            rec(pos - 1, remaining - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut cur = vec![0i64; n_vars];
    rec(n_vars - 1, d, &mut cur, &mut out);
    out
}

/// Per-degree certificate emitted by the independence check.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeCertificate {
    pub degree: i64,
    pub lattice_points: usize,
    pub graded_dim: usize,
    pub independent: bool,
}

/// Graded data of the cyclic module.
#[derive(Debug, Clone)]
pub struct GradedData {
    pub dims: Vec<usize>,
    pub total: usize,
}

/// The oracle for one `(w, i, m)`: the wedge-power tensor model of
/// `V(omega_i)^{tensor m}` restricted to products of root vectors from
/// `n^-_w` applied to the highest vector.
pub struct DemazureOracle {
    n: usize,
    i: usize,
    m: i64,
    poset: PosetP,
    /// Roots of `n^-_w` in canonical order; root `alpha_{k,j}` sits at the
    /// canonical index of vertex `x_{k,j}`.
    roots: Vec<(usize, usize)>,
    subsets: Vec<Vec<usize>>,
    highest_key: usize,
    graded: GradedData,
    /// `spans[d]` spans `M_d`; the last entry is the whole module.
    spans: Vec<Span>,
    /// Ambient keys that became pivots at each degree.
    new_pivots: Vec<Vec<usize>>,
}

fn subsets_of(n_plus_1: usize, i: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(from: usize, max: usize, want: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == want {
            out.push(cur.clone());
            return;
        }
        for v in from..=max {
            cur.push(v);
            go(v + 1, max, want, cur, out);
            cur.pop();
        }
    }
    go(1, n_plus_1, i, &mut cur, &mut out);
    out
}

impl DemazureOracle {
    pub fn new(w: &Permutation, i: usize, m: i64) -> Result<DemazureOracle> {
        let ell = ell_of(w, i)?;
        let n = ell.n();
        if n > 5 || m > 3 {
            return Err(Error::GuardExceeded(format!(
                "oracle dimensions blow up combinatorially; need n <= 5 and m <= 3, got n = {n}, m = {m}"
            )));
        }
        if m < 1 {
            return Err(Error::InvalidArgument("oracle needs m >= 1".into()));
        }
        let poset = PosetP::new(&ell);
        let roots: Vec<(usize, usize)> = poset.vertices().to_vec();
        let subsets = subsets_of(n + 1, i);
        let highest: Vec<usize> = (1..=i).collect();
        let highest_idx = subsets
            .binary_search(&highest)
            .expect("the lowest subset exists");
        let count = subsets.len();
        let mut highest_key = 0usize;
        for _ in 0..m {
            highest_key = highest_key * count + highest_idx;
        }
        let mut oracle = DemazureOracle {
            n,
            i,
            m,
            poset,
            roots,
            subsets,
            highest_key,
            graded: GradedData {
                dims: Vec::new(),
                total: 0,
            },
            spans: Vec::new(),
            new_pivots: Vec::new(),
        };
        oracle.build_graded();
        Ok(oracle)
    }

    pub fn poset(&self) -> &PosetP {
        &self.poset
    }

    pub fn roots(&self) -> &[(usize, usize)] {
        &self.roots
    }

    pub fn graded(&self) -> &GradedData {
        &self.graded
    }

    fn key_to_factors(&self, mut key: usize) -> Vec<usize> {
        let count = self.subsets.len();
        let mut factors = vec![0usize; self.m as usize];
        for t in (0..self.m as usize).rev() {
            factors[t] = key % count;
            key /= count;
        }
        factors
    }

    fn factors_to_key(&self, factors: &[usize]) -> usize {
        let count = self.subsets.len();
        factors.iter().fold(0usize, |acc, &f| acc * count + f)
    }

    /// `f_{alpha_{k,j}}` on a single wedge factor: letter `k` becomes
    /// `j + 1`, vanishing when `k` is absent or `j + 1` present; the sign is
    /// the reordering parity.
    fn wedge_apply(&self, subset_idx: usize, root: (usize, usize)) -> Option<(usize, i64)> {
        let (k, j) = root;
        let s = &self.subsets[subset_idx];
        let p = s.iter().position(|&v| v == k)?;
        if s.contains(&(j + 1)) {
            return None;
        }
        let mut t = s.clone();
        t.remove(p);
        let q = t.partition_point(|&v| v < j + 1);
        t.insert(q, j + 1);
        let idx = self
            .subsets
            .binary_search(&t)
            .expect("replacement stays an i-subset");
        let sign = if (p as i64 - q as i64).abs() % 2 == 0 {
            1
        } else {
            -1
        };
        Some((idx, sign))
    }

    /// Root action extended as a derivation across the tensor factors.
    pub fn root_action(&self, root: (usize, usize), v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (&key, coeff) in &v.entries {
            let factors = self.key_to_factors(key);
            for t in 0..factors.len() {
                if let Some((idx, sign)) = self.wedge_apply(factors[t], root) {
                    let mut nf = factors.clone();
                    nf[t] = idx;
                    out.add_scaled_unit(self.factors_to_key(&nf), coeff * rat_int(sign));
                }
            }
        }
        out
    }

    pub fn highest_vector(&self) -> SparseVec {
        SparseVec::unit(self.highest_key)
    }

    /// Image of `f^s . v` with factors applied in descending canonical
    /// (total) order; in any graded or plain span question the answer is
    /// order-independent, which the tests assert.
    pub fn monomial_image(&self, s: &[i64]) -> SparseVec {
        let mut v = self.highest_vector();
        for idx in (0..self.roots.len()).rev() {
            for _ in 0..s[idx] {
                if v.is_zero() {
                    return v;
                }
                v = self.root_action(self.roots[idx], &v);
            }
        }
        v
    }

    /// Raw epsilon-coordinates of an ambient basis key.
    fn key_weight_raw(&self, key: usize) -> Vec<i64> {
        let mut coords = vec![0i64; self.n + 1];
        for f in self.key_to_factors(key) {
            for &v in &self.subsets[f] {
                coords[v - 1] += 1;
            }
        }
        coords
    }

    fn build_graded(&mut self) {
        let mut span = Span::new();
        let v0 = self.highest_vector();
        let pivot = span
            .insert_returning_pivot(v0.clone())
            .expect("highest vector is nonzero");
        let mut spans = vec![span.clone()];
        let mut dims = vec![1usize];
        let mut new_pivots = vec![vec![pivot]];
        let mut layer = vec![v0];
        loop {
            let mut next_layer = Vec::new();
            let mut pivots_here = Vec::new();
            for b in &layer {
                for &root in &self.roots {
                    let w = self.root_action(root, b);
                    if w.is_zero() {
                        continue;
                    }
                    if let Some(p) = span.insert_returning_pivot(w.clone()) {
                        pivots_here.push(p);
                        next_layer.push(w);
                    }
                }
            }
            if pivots_here.is_empty() {
                break;
            }
            dims.push(pivots_here.len());
            new_pivots.push(pivots_here);
            spans.push(span.clone());
            layer = next_layer;
        }
        self.graded = GradedData {
            total: dims.iter().sum(),
            dims,
        };
        self.spans = spans;
        self.new_pivots = new_pivots;
    }

    /// Span of `M_d` (saturating at the full module).
    pub fn span_at(&self, d: usize) -> &Span {
        let idx = d.min(self.spans.len() - 1);
        &self.spans[idx]
    }

    /// Lattice points of the chain polytope in canonical coordinates.
    pub fn chain_points(&self) -> Vec<MultiExponent> {
        chain_polytope(&self.poset, self.m)
            .lattice_points()
            .expect("chain polytope is bounded")
    }

    /// Independence and spanning of the chain-polytope monomial images in
    /// every graded piece.
    pub fn monomial_independence(&self) -> (bool, Vec<DegreeCertificate>) {
        let mut by_degree: BTreeMap<i64, Vec<MultiExponent>> = BTreeMap::new();
        for p in self.chain_points() {
            by_degree.entry(p.degree()).or_default().push(p);
        }
        let max_deg = by_degree.keys().max().copied().unwrap_or(0);
        let mut certs = Vec::new();
        let mut all_ok = true;
        for d in 0..=max_deg {
            let points = by_degree.get(&d).map_or(&[][..], |v| &v[..]);
            let graded_dim = self.graded.dims.get(d as usize).copied().unwrap_or(0);
            let mut work = if d == 0 {
                Span::new()
            } else {
                self.span_at(d as usize - 1).clone()
            };
            let base = work.dim();
            let mut added = 0usize;
            for s in points {
                if work.insert(self.monomial_image(&s.entries)) {
                    added += 1;
                }
            }
            debug_assert_eq!(work.dim(), base + added);
            let independent = added == points.len() && added == graded_dim;
            all_ok &= independent;
            certs.push(DegreeCertificate {
                degree: d,
                lattice_points: points.len(),
                graded_dim,
                independent,
            });
        }
        // Degrees beyond the polytope must contribute nothing extra.
        if self.graded.dims.len() as i64 > max_deg + 1 {
            all_ok = false;
        }
        (all_ok, certs)
    }

    /// Greedy scan of all monomials in increasing homogeneous-lex order,
    /// keeping those whose image enlarges the span of the kept ones in the
    /// plain (unfiltered) module.
    pub fn essential_monomials(&self) -> Vec<MultiExponent> {
        let target = self.graded.total;
        let n_vars = self.roots.len();
        let mut span = Span::new();
        let mut kept = Vec::new();
        let mut d = 0i64;
        loop {
            for s in monomials_of_degree(n_vars, d) {
                if span.insert(self.monomial_image(&s)) {
                    kept.push(MultiExponent::new(s));
                }
            }
            if span.dim() == target {
                return kept;
            }
            d += 1;
            assert!(
                d <= self.m * (n_vars as i64 + 1) + 1,
                "essential scan failed to saturate the module"
            );
        }
    }

    /// Normalized weight multiset of the module (pivot weights of the
    /// weight-graded span).
    pub fn weight_character(&self) -> Character {
        let mut ch = Character::new();
        for pivots in &self.new_pivots {
            for &p in pivots {
                ch.add(Weight::from_raw(self.key_weight_raw(p)));
            }
        }
        ch
    }

    /// Weight multiset per PBW degree.
    pub fn graded_weight_characters(&self) -> Vec<Character> {
        self.new_pivots
            .iter()
            .map(|pivots| {
                Character::from_weights(
                    pivots
                        .iter()
                        .map(|&p| Weight::from_raw(self.key_weight_raw(p))),
                )
            })
            .collect()
    }

    /// Expected weight of `f^s . v` from the exponents alone.
    pub fn point_weight(&self, s: &[i64]) -> Weight {
        let mut raw: Vec<i64> = fundamental_weight_raw(self.n, self.i)
            .into_iter()
            .map(|c| c * self.m)
            .collect();
        for (idx, &e) in s.iter().enumerate() {
            if e != 0 {
                for (c, r) in raw.iter_mut().zip(root_raw(self.n, self.roots[idx])) {
                    *c -= e * r;
                }
            }
        }
        Weight::from_raw(raw)
    }

    /// Straightening witness: for a chain-supported exponent with degree
    /// above `m`, exact coefficients `c_t` over strictly smaller monomials
    /// with `(f^s + sum c_t f^t) . v = 0` in the graded module. The empty
    /// list means `f^s . v` already vanishes there.
    pub fn straightening_witness(&self, s: &MultiExponent) -> Result<Vec<(MultiExponent, Rat)>> {
        let supp = s.support();
        let chain_supported = supp
            .iter()
            .all(|&a| supp.iter().all(|&b| self.poset.comparable(a, b)));
        if !chain_supported {
            return Err(Error::InvalidArgument(
                "exponent support must lie on a single chain".into(),
            ));
        }
        let d = s.degree();
        if d <= self.m {
            return Err(Error::InvalidArgument(format!(
                "chain budget not exceeded: degree {d} <= m = {}",
                self.m
            )));
        }
        let lower = if d == 0 {
            Span::new()
        } else {
            self.span_at(d as usize - 1).clone()
        };
        let target = lower.reduce(self.monomial_image(&s.entries));
        if target.is_zero() {
            return Ok(Vec::new());
        }
        let candidates: Vec<Vec<i64>> = monomials_of_degree(self.roots.len(), d)
            .into_iter()
            .filter(|t| monomial_cmp(t, &s.entries) == Ordering::Less)
            .collect();
        let columns: Vec<SparseVec> = candidates
            .iter()
            .map(|t| lower.reduce(self.monomial_image(t)))
            .collect();
        let solution = solve(&columns, &target).ok_or_else(|| {
            Error::ConventionViolation(
                "straightening has no solution over smaller monomials".into(),
            )
        })?;
        Ok(candidates
            .into_iter()
            .zip(solution)
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (MultiExponent::new(t), -c))
            .collect())
    }

    /// Orbit of the generators `f_alpha^{m+1}` under the raising derivations,
    /// intersected with polynomials supported on `n^-_w`; every element must
    /// act as zero on the highest vector in its graded piece.
    pub fn annihilation_check(&self) -> bool {
        if self.roots.is_empty() {
            return true;
        }
        let n = self.n;
        // Full positive-root list and the degree-(m+1) monomial universe,
        // unsupported monomials first so supported pivots close the
        // intersection.
        let full_roots: Vec<(usize, usize)> =
            (1..=n).flat_map(|k| (k..=n).map(move |j| (k, j))).collect();
        let root_idx: BTreeMap<(usize, usize), usize> = full_roots
            .iter()
            .enumerate()
            .map(|(a, &r)| (r, a))
            .collect();
        let supported_root: Vec<bool> = full_roots
            .iter()
            .map(|&r| self.poset.index_of(r).is_some())
            .collect();
        let deg = (self.m + 1) as usize;
        let mut universe: Vec<Vec<usize>> = Vec::new();
        fn gen(
            from: usize,
            max: usize,
            left: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for r in from..max {
                cur.push(r);
                gen(r, max, left - 1, cur, out);
                cur.pop();
            }
        }
        gen(0, full_roots.len(), deg, &mut Vec::new(), &mut universe);
        let is_supported = |mono: &Vec<usize>| mono.iter().all(|&r| supported_root[r]);
        universe.sort_by_key(|mono| (is_supported(mono), mono.clone()));
        let mono_index: BTreeMap<Vec<usize>, usize> = universe
            .iter()
            .enumerate()
            .map(|(a, m)| (m.clone(), a))
            .collect();
        let boundary = universe.partition_point(|mono| !is_supported(mono));

        let delta = |c: usize, poly: &SparseVec| -> SparseVec {
            let mut out = SparseVec::zero();
            for (&coord, coeff) in &poly.entries {
                let mono = &universe[coord];
                let mut seen = usize::MAX;
                for (pos, &r) in mono.iter().enumerate() {
                    if r == seen {
                        continue; // identical factors contribute via multiplicity
                    }
                    seen = r;
                    let mult = mono.iter().filter(|&&x| x == r).count() as i64;
                    let (k, j) = full_roots[r];
                    let mut push = |target: (usize, usize), sign: i64| {
                        let mut nm = mono.clone();
                        nm[pos] = root_idx[&target];
                        nm.sort_unstable();
                        out.add_scaled_unit(mono_index[&nm], coeff * rat_int(sign * mult));
                    };
                    if c == j && j > k {
                        push((k, j - 1), 1);
                    }
                    if c == k && k < j {
                        push((k + 1, j), -1);
                    }
                }
            }
            out
        };

        let mut span = Span::new();
        let mut queue: Vec<SparseVec> = Vec::new();
        for &root in &self.roots {
            let mono = vec![root_idx[&root]; deg];
            let v = SparseVec::unit(mono_index[&mono]);
            if let Some(p) = span.insert_returning_pivot(v) {
                queue.push(span.row(p).expect("just inserted").clone());
            }
        }
        while let Some(poly) = queue.pop() {
            for c in 1..=n {
                let image = delta(c, &poly);
                if image.is_zero() {
                    continue;
                }
                if let Some(p) = span.insert_returning_pivot(image) {
                    queue.push(span.row(p).expect("just inserted").clone());
                }
            }
        }
        // Rows with a supported pivot are exactly a basis of the
        // intersection with S(n^-_w); evaluate each in degree m+1.
        let lower = self.span_at(deg - 1);
        for pivot in span.pivots().collect::<Vec<_>>() {
            if pivot < boundary {
                continue;
            }
            let row = span.row(pivot).expect("pivot enumerated from span");
            let mut image = SparseVec::zero();
            for (&coord, coeff) in &row.entries {
                let mono = &universe[coord];
                let mut exps = vec![0i64; self.roots.len()];
                for &r in mono {
                    let v = self
                        .poset
                        .index_of(full_roots[r])
                        .expect("supported monomials only");
                    exps[v] += 1;
                }
                image.add_scaled(&self.monomial_image(&exps), coeff);
            }
            if !lower.reduce(image).is_zero() {
                return false;
            }
        }
        true
    }
}

/// Graded dimensions and total dimension of `U(n^-_w) . v_{m omega_i}`.
pub fn demazure_graded(w: &Permutation, i: usize, m: i64) -> Result<(Vec<usize>, usize)> {
    let oracle = DemazureOracle::new(w, i, m)?;
    Ok((oracle.graded.dims.clone(), oracle.graded.total))
}

/// Independence certificate for the chain-polytope monomial basis.
pub fn monomial_independence(
    w: &Permutation,
    i: usize,
    m: i64,
) -> Result<(bool, Vec<DegreeCertificate>)> {
    Ok(DemazureOracle::new(w, i, m)?.monomial_independence())
}

/// Essential monomials of the plain module under the homogeneous-lex order.
pub fn essential_monomials(w: &Permutation, i: usize, m: i64) -> Result<Vec<MultiExponent>> {
    Ok(DemazureOracle::new(w, i, m)?.essential_monomials())
}

/// Annihilation check for the ideal generators.
pub fn annihilation_check(w: &Permutation, i: usize, m: i64) -> Result<bool> {
    Ok(DemazureOracle::new(w, i, m)?.annihilation_check())
}
