//! Chain and order polytopes of the sequence poset, exact lattice-point
//! machinery, Ehrhart data, facet counts and the equivalence criteria.
//!
//! All coordinates follow the canonical vertex order of [`PosetP`]. Lattice
//! points are enumerated by depth-first search with exact residual bounds:
//! remaining chain budgets for chain polytopes, neighbor intervals for order
//! polytopes, and interval propagation for a general `HPolytope`.

use crate::error::Error;
use crate::jsonnum::{JsonInt, JsonRational};
use crate::linalg::{affine_rank_i64, rank_i64};
use crate::poset::{LSequence, PosetP};
use crate::Result;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

/// Which of the two Stanley polytopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PolytopeKind {
    Chain,
    Order,
}

/// One inequality `coeffs . x <= bound`, all integral.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
    pub bound: i64,
}

/// An H-polytope: an integer inequality system with explicit nonnegativity
/// constraints where the geometry needs them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HPolytope {
    pub dim: usize,
    pub inequalities: Vec<Inequality>,
}

/// A lattice point indexed by the canonical vertex order of the ambient
/// poset (or the row-major Gelfand-Tsetlin order).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct MultiExponent {
    pub entries: Vec<i64>,
}

impl MultiExponent {
    pub fn new(entries: Vec<i64>) -> Self {
        MultiExponent { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        MultiExponent {
            entries: vec![0; dim],
        }
    }

    pub fn degree(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn add(&self, other: &MultiExponent) -> MultiExponent {
        MultiExponent {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &MultiExponent) -> MultiExponent {
        MultiExponent {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Vertex indices with nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&v| self.entries[v] != 0)
            .collect()
    }
}

fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) == (b < 0)) {
        q + 1
    } else {
        q
    }
}

impl HPolytope {
    pub fn contains(&self, point: &[i64]) -> bool {
        self.inequalities.iter().all(|ineq| {
            let lhs: i128 = ineq
                .coeffs
                .iter()
                .zip(point)
                .map(|(&c, &x)| i128::from(c) * i128::from(x))
                .sum();
            lhs <= i128::from(ineq.bound)
        })
    }

    /// Integer interval for every coordinate, derived by propagating the
    /// inequalities to a fixed point. `None` bounds after stabilization mean
    /// the polytope is unbounded in that direction; a crossed interval or a
    /// divergent propagation means it is empty.
    fn integer_boxes(&self) -> Result<Option<Vec<(i64, i64)>>> {
        let dim = self.dim;
        let mut lo: Vec<Option<i128>> = vec![None; dim];
        let mut hi: Vec<Option<i128>> = vec![None; dim];
        let max_passes = 64 * (dim + 2);
        for _pass in 0..max_passes {
            let mut changed = false;
            for ineq in &self.inequalities {
                for v in 0..dim {
                    let c = i128::from(ineq.coeffs[v]);
                    if c == 0 {
                        continue;
                    }
                    // Minimal possible contribution of the other variables.
                    let mut rest_min: i128 = 0;
                    let mut known = true;
                    for u in 0..dim {
                        if u == v {
                            continue;
                        }
                        let cu = i128::from(ineq.coeffs[u]);
                        if cu > 0 {
                            match lo[u] {
                                Some(l) => rest_min += cu * l,
                                None => {
                                    known = false;
                                    break;
                                }
                            }
                        } else if cu < 0 {
                            match hi[u] {
                                Some(h) => rest_min += cu * h,
                                None => {
                                    known = false;
                                    break;
                                }
                            }
                        }
                    }
                    if !known {
                        continue;
                    }
                    let rhs = i128::from(ineq.bound) - rest_min;
                    if c > 0 {
                        let bound = div_floor(rhs, c);
                        if hi[v].map_or(true, |h| bound < h) {
                            hi[v] = Some(bound);
                            changed = true;
                        }
                    } else {
                        let bound = div_ceil(rhs, c);
                        if lo[v].map_or(true, |l| bound > l) {
                            lo[v] = Some(bound);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                let mut boxes = Vec::with_capacity(dim);
                for v in 0..dim {
                    let (Some(l), Some(h)) = (lo[v], hi[v]) else {
                        return Err(Error::Unbounded(v));
                    };
                    if l > h {
                        return Ok(None);
                    }
                    boxes.push((l as i64, h as i64));
                }
                return Ok(Some(boxes));
            }
        }
        // Bounds kept tightening past any reasonable depth: mutually
        // increasing lower bounds, which only an empty polytope produces.
        Ok(None)
    }

    /// Exactly the integer points, in lexicographic order of the canonical
    /// coordinates.
    pub fn lattice_points(&self) -> Result<Vec<MultiExponent>> {
        let mut out = Vec::new();
        self.walk(&mut |point| out.push(MultiExponent::new(point.to_vec())))?;
        Ok(out)
    }

    pub fn count_lattice_points(&self) -> Result<u128> {
        let mut count: u128 = 0;
        self.walk(&mut |_| count += 1)?;
        Ok(count)
    }

    fn walk(&self, emit: &mut dyn FnMut(&[i64])) -> Result<()> {
        for ineq in &self.inequalities {
            if ineq.coeffs.iter().all(|&c| c == 0) && ineq.bound < 0 {
                return Ok(());
            }
        }
        if self.dim == 0 {
            emit(&[]);
            return Ok(());
        }
        let Some(boxes) = self.integer_boxes()? else {
            return Ok(());
        };
        let mut point = vec![0i64; self.dim];
        self.walk_rec(0, &boxes, &mut point, emit);
        Ok(())
    }

    fn walk_rec(
        &self,
        d: usize,
        boxes: &[(i64, i64)],
        point: &mut Vec<i64>,
        emit: &mut dyn FnMut(&[i64]),
    ) {
        if d == self.dim {
            emit(point);
            return;
        }
        let (mut lo, mut hi) = (i128::from(boxes[d].0), i128::from(boxes[d].1));
        for ineq in &self.inequalities {
            let c = i128::from(ineq.coeffs[d]);
            if c == 0 {
                continue;
            }
            let fixed: i128 = (0..d)
                .map(|v| i128::from(ineq.coeffs[v]) * i128::from(point[v]))
                .sum();
            let rest_min: i128 = (d + 1..self.dim)
                .map(|v| {
                    let cv = i128::from(ineq.coeffs[v]);
                    if cv > 0 {
                        cv * i128::from(boxes[v].0)
                    } else {
                        cv * i128::from(boxes[v].1)
                    }
                })
                .sum();
            let rhs = i128::from(ineq.bound) - fixed - rest_min;
            if c > 0 {
                hi = hi.min(div_floor(rhs, c));
            } else {
                lo = lo.max(div_ceil(rhs, c));
            }
        }
        let mut x = lo;
        while x <= hi {
            point[d] = x as i64;
            self.walk_rec(d + 1, boxes, point, emit);
            x += 1;
        }
    }
}

/// `m`-th dilation of the chain polytope: nonnegativity plus one budget
/// inequality per maximal chain.
pub fn chain_polytope(p: &PosetP, m: i64) -> HPolytope {
    let dim = p.len();
    let mut inequalities = Vec::new();
    for v in 0..dim {
        let mut coeffs = vec![0i64; dim];
        coeffs[v] = -1;
        inequalities.push(Inequality { coeffs, bound: 0 });
    }
    for chain in p.maximal_chains() {
        let mut coeffs = vec![0i64; dim];
        for &v in &chain {
            coeffs[v] = 1;
        }
        inequalities.push(Inequality { coeffs, bound: m });
    }
    HPolytope { dim, inequalities }
}

/// `m`-th dilation of the order polytope: a cover inequality per cover,
/// nonnegativity at minimal vertices, upper bound `m` at maximal vertices.
pub fn order_polytope(p: &PosetP, m: i64) -> HPolytope {
    let dim = p.len();
    let mut inequalities = Vec::new();
    for &(upper, lower) in p.covers() {
        let mut coeffs = vec![0i64; dim];
        coeffs[lower] = 1;
        coeffs[upper] = -1;
        inequalities.push(Inequality { coeffs, bound: 0 });
    }
    for v in p.minimal_elements() {
        let mut coeffs = vec![0i64; dim];
        coeffs[v] = -1;
        inequalities.push(Inequality { coeffs, bound: 0 });
    }
    for v in p.maximal_elements() {
        let mut coeffs = vec![0i64; dim];
        coeffs[v] = 1;
        inequalities.push(Inequality { coeffs, bound: m });
    }
    HPolytope { dim, inequalities }
}

pub fn polytope_of(p: &PosetP, kind: PolytopeKind, m: i64) -> HPolytope {
    match kind {
        PolytopeKind::Chain => chain_polytope(p, m),
        PolytopeKind::Order => order_polytope(p, m),
    }
}

/// Count lattice points of `t * chain polytope` by DFS over canonical
/// coordinates with per-chain residual budgets; every branch extends to a
/// point, so the search never dead-ends.
pub fn count_chain_points(p: &PosetP, t: i64) -> u128 {
    struct Ctx<'a> {
        chains_through: &'a [Vec<usize>],
        budget: Vec<i64>,
        n: usize,
    }
    fn rec(ctx: &mut Ctx, d: usize) -> u128 {
        if d == ctx.n {
            return 1;
        }
        let ub = ctx.chains_through[d]
            .iter()
            .map(|&c| ctx.budget[c])
            .min()
            .expect("every vertex lies on a maximal chain");
        let mut total = 0u128;
        for x in 0..=ub {
            for &c in &ctx.chains_through[d] {
                ctx.budget[c] -= x;
            }
            total += rec(ctx, d + 1);
            for &c in &ctx.chains_through[d] {
                ctx.budget[c] += x;
            }
        }
        total
    }
    if t < 0 {
        return 0;
    }
    let chains = p.maximal_chains();
    let mut chains_through = vec![Vec::new(); p.len()];
    for (ci, c) in chains.iter().enumerate() {
        for &v in c {
            chains_through[v].push(ci);
        }
    }
    let mut ctx = Ctx {
        chains_through: &chains_through,
        budget: vec![t; chains.len()],
        n: p.len(),
    };
    rec(&mut ctx, 0)
}

/// Count lattice points of `t * order polytope` by DFS in canonical order:
/// each vertex ranges between its already-assigned lower covers and `t`.
pub fn count_order_points(p: &PosetP, t: i64) -> u128 {
    fn rec(p: &PosetP, t: i64, d: usize, vals: &mut Vec<i64>) -> u128 {
        if d == p.len() {
            return 1;
        }
        let lo = p
            .lower_covers(d)
            .iter()
            .map(|&u| vals[u])
            .max()
            .unwrap_or(0);
        let mut total = 0u128;
        for x in lo..=t {
            vals[d] = x;
            total += rec(p, t, d + 1, vals);
        }
        total
    }
    if t < 0 {
        return 0;
    }
    let mut vals = vec![0i64; p.len()];
    rec(p, t, 0, &mut vals)
}

pub fn count_points(p: &PosetP, kind: PolytopeKind, t: i64) -> u128 {
    match kind {
        PolytopeKind::Chain => count_chain_points(p, t),
        PolytopeKind::Order => count_order_points(p, t),
    }
}

/// Materialized lattice points of the `t`-dilation, lexicographic in the
/// canonical coordinates.
pub fn enumerate_points(p: &PosetP, kind: PolytopeKind, t: i64) -> Vec<MultiExponent> {
    polytope_of(p, kind, t)
        .lattice_points()
        .expect("chain/order polytopes are bounded")
}

/// The constructive Minkowski witness: for a point `s` of some dilation,
/// the unit-dilation point to split off. For chain polytopes this is the
/// indicator of the minimal elements of `supp(s)`; for order polytopes the
/// indicator of `supp(s)` itself.
pub fn minkowski_witness(p: &PosetP, kind: PolytopeKind, s: &MultiExponent) -> MultiExponent {
    let supp = s.support();
    let mut t = MultiExponent::zeros(p.len());
    match kind {
        PolytopeKind::Chain => {
            for &v in &supp {
                let is_min = supp.iter().all(|&u| u == v || !p.geq(v, u));
                if is_min {
                    t.entries[v] = 1;
                }
            }
        }
        PolytopeKind::Order => {
            for &v in &supp {
                t.entries[v] = 1;
            }
        }
    }
    t
}

/// Lattice-point Minkowski identity for the `(m1+m2)`-th dilation:
/// `points(m1+m2) == points(m1) + points(m2)` as sets, with the witness
/// decomposition checked on every point of the sum side.
pub fn minkowski_check(p: &PosetP, kind: PolytopeKind, m1: i64, m2: i64) -> bool {
    let a = enumerate_points(p, kind, m1);
    let b = enumerate_points(p, kind, m2);
    let c = enumerate_points(p, kind, m1 + m2);
    let mut sums = BTreeSet::new();
    for x in &a {
        for y in &b {
            sums.insert(x.add(y));
        }
    }
    let cset: BTreeSet<MultiExponent> = c.iter().cloned().collect();
    if sums != cset {
        return false;
    }
    // Constructive side: the witness splits every point of the big dilation.
    let unit: BTreeSet<MultiExponent> = enumerate_points(p, kind, 1).into_iter().collect();
    let rest = polytope_of(p, kind, m1 + m2 - 1);
    c.iter().all(|s| {
        if s.degree() == 0 {
            return true;
        }
        let w = minkowski_witness(p, kind, s);
        unit.contains(&w) && rest.contains(&s.sub(&w).entries)
    })
}

/// Write a point of the `m`-th dilation as a sum of `m` points of the first
/// dilation by peeling Minkowski witnesses.
pub fn decompose_into_units(
    p: &PosetP,
    kind: PolytopeKind,
    s: &MultiExponent,
    m: i64,
) -> Option<Vec<MultiExponent>> {
    let unit = polytope_of(p, kind, 1);
    let mut rest = s.clone();
    let mut parts = Vec::new();
    for step in (2..=m).rev() {
        let w = minkowski_witness(p, kind, &rest);
        rest = rest.sub(&w);
        if !unit.contains(&w.entries) || !polytope_of(p, kind, step - 1).contains(&rest.entries) {
            return None;
        }
        parts.push(w);
    }
    if !unit.contains(&rest.entries) {
        return None;
    }
    parts.push(rest);
    Some(parts)
}

/// Exact Ehrhart data: counts at `t = 0..=N+1`, the interpolating polynomial
/// and the h*-vector.
#[derive(Debug, Clone)]
pub struct EhrhartData {
    pub values: Vec<i128>,
    pub polynomial: Vec<BigRational>,
    pub hstar: Vec<i128>,
}

impl EhrhartData {
    pub fn evaluate(&self, t: i64) -> BigRational {
        let tt = BigRational::from_integer(BigInt::from(t));
        let mut acc = BigRational::zero();
        for c in self.polynomial.iter().rev() {
            acc = acc * &tt + c;
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "values": self.values.iter().map(|&v| JsonInt(v)).collect::<Vec<_>>(),
            "polynomial": self.polynomial.iter().map(|c| JsonRational(c.clone())).collect::<Vec<_>>(),
            "hstar": self.hstar.iter().map(|&v| JsonInt(v)).collect::<Vec<_>>(),
        })
    }
}

fn binomial_i128(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for r in 0..k {
        acc = acc * (n - r) / (r + 1);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> u128 {
    binomial_i128(n as i128, k as i128) as u128
}

/// Ehrhart counts for `t = 0..=N+1` with exact interpolation in the binomial
/// basis and the h*-vector from the standard series identity.
pub fn ehrhart(p: &PosetP, kind: PolytopeKind) -> EhrhartData {
    let n = p.len();
    let top = n + 1;
    let values: Vec<i128> = (0..=top)
        .map(|t| count_points(p, kind, t as i64) as i128)
        .collect();
    // Finite differences give the binomial-basis coefficients.
    let mut diffs = values.clone();
    let mut binom_coeffs = Vec::with_capacity(top + 1);
    for _ in 0..=top {
        binom_coeffs.push(diffs[0]);
        for r in 0..diffs.len().saturating_sub(1) {
            diffs[r] = diffs[r + 1] - diffs[r];
        }
        diffs.pop();
    }
    assert_eq!(
        binom_coeffs[top], 0,
        "lattice counts of a dim-{n} polytope must interpolate at degree {n}"
    );
    // Expand sum a_k C(t, k) into standard coefficients.
    let mut polynomial = vec![BigRational::zero(); n + 1];
    let mut basis = vec![BigRational::one()]; // C(t,0) = 1
    for (k, &a) in binom_coeffs.iter().take(n + 1).enumerate() {
        if k > 0 {
            // C(t,k) = C(t,k-1) * (t - (k-1)) / k
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            let kk = BigRational::from_integer(BigInt::from(k as i64));
            let shift = BigRational::from_integer(BigInt::from(k as i64 - 1));
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c / &kk;
                next[d] -= c * &shift / &kk;
            }
            basis = next;
        }
        let aa = BigRational::from_integer(BigInt::from(a));
        for (d, c) in basis.iter().enumerate() {
            polynomial[d] += c * &aa;
        }
    }
    // h*_j = sum_p (-1)^p C(N+1, p) L(j - p).
    let mut hstar = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut h: i128 = 0;
        for p_idx in 0..=j {
            let sign = if p_idx % 2 == 0 { 1 } else { -1 };
            h += sign * binomial_i128((n + 1) as i128, p_idx as i128) * values[j - p_idx];
        }
        assert!(h >= 0, "h*-entries of a lattice polytope are nonnegative");
        hstar.push(h);
    }
    let data = EhrhartData {
        values,
        polynomial,
        hstar,
    };
    debug_assert!((0..=top as i64).all(|t| {
        data.evaluate(t) == BigRational::from_integer(BigInt::from(data.values[t as usize]))
    }));
    data
}

/// True iff the h*-vector is palindromic after dropping trailing zeros.
pub fn hstar_palindromic(data: &EhrhartData) -> bool {
    let mut h = data.hstar.clone();
    while h.last() == Some(&0) && h.len() > 1 {
        h.pop();
    }
    let s = h.len();
    (0..s / 2).all(|j| h[j] == h[s - 1 - j])
}

/// Closed-form facet counts `(order, chain)`.
///
/// Order side: maximal elements + the unique minimal element + covers.
/// Chain side: `N` nonnegativity facets plus one facet per maximal chain,
/// `C(l_k - k, i - k)` chains for each column carrying a maximal element.
/// Both match the combinatorial facet descriptions of the two polytopes.
pub fn facet_counts_closed_form(ell: &LSequence) -> Result<(usize, usize)> {
    let n_vertices = ell.vertex_count();
    if n_vertices == 0 {
        return Err(Error::EmptyPoset(
            "a point has no facets; facet counts need N > 0".into(),
        ));
    }
    let i = ell.i();
    let mut maximal = 0usize;
    let mut chain_facets = n_vertices as u128;
    for k in 1..=i {
        if ell.ell_k(k) != ell.ell_k(k - 1) {
            maximal += 1;
            chain_facets += binomial(ell.ell_k(k) - k, i - k);
        }
    }
    let mut covers = 0usize;
    for k in 1..=i {
        let lk = ell.ell_k(k);
        if lk >= i {
            covers += lk - i; // (k,j) -> (k,j-1)
            if k < i {
                covers += lk + 1 - i; // (k,j) -> (k+1,j)
            }
        }
    }
    let order_facets = maximal + 1 + covers;
    Ok((order_facets, chain_facets as usize))
}

/// Certified vertex sets of the unit dilation: indicator vectors of filters
/// (order) or antichains (chain), each checked feasible with a full-rank
/// tight-constraint system.
pub fn vertex_sets(p: &PosetP, kind: PolytopeKind) -> Vec<MultiExponent> {
    let n = p.len();
    let h = polytope_of(p, kind, 1);
    let candidate_sets = match kind {
        PolytopeKind::Chain => p.antichains(),
        PolytopeKind::Order => p.filters(),
    };
    let mut out: Vec<MultiExponent> = candidate_sets
        .into_iter()
        .map(|set| {
            let mut v = MultiExponent::zeros(n);
            for idx in set {
                v.entries[idx] = 1;
            }
            v
        })
        .collect();
    out.sort();
    for v in &out {
        assert!(
            certify_vertex(&h, &v.entries),
            "indicator point {v:?} failed vertex certification"
        );
    }
    out
}

/// A feasible point is a vertex iff its tight constraints have full rank.
pub fn certify_vertex(h: &HPolytope, point: &[i64]) -> bool {
    if !h.contains(point) {
        return false;
    }
    if h.dim == 0 {
        return true;
    }
    let tight: Vec<Vec<i64>> = h
        .inequalities
        .iter()
        .filter(|ineq| {
            let lhs: i128 = ineq
                .coeffs
                .iter()
                .zip(point)
                .map(|(&c, &x)| i128::from(c) * i128::from(x))
                .sum();
            lhs == i128::from(ineq.bound)
        })
        .map(|ineq| ineq.coeffs.clone())
        .collect();
    rank_i64(&tight) == h.dim
}

/// Number of facet-defining inequalities of `h`, decided from vertex-facet
/// incidences: an inequality is a facet iff its tight vertex set has affine
/// rank `dim - 1`. Assumes a lattice polytope (every vertex integral), which
/// holds for all polytopes this crate emits.
pub fn irredundant_facet_count(h: &HPolytope) -> Result<usize> {
    let verts = polytope_vertices(h)?;
    Ok(h.inequalities
        .iter()
        .filter(|ineq| tight_vertex_rank(ineq, &verts) == h.dim.saturating_sub(1))
        .count())
}

fn tight_vertex_rank(ineq: &Inequality, verts: &[Vec<i64>]) -> usize {
    let tight: Vec<Vec<i64>> = verts
        .iter()
        .filter(|v| {
            let lhs: i128 = ineq
                .coeffs
                .iter()
                .zip(v.iter())
                .map(|(&c, &x)| i128::from(c) * i128::from(x))
                .sum();
            lhs == i128::from(ineq.bound)
        })
        .cloned()
        .collect();
    affine_rank_i64(&tight)
}

fn polytope_vertices(h: &HPolytope) -> Result<Vec<Vec<i64>>> {
    Ok(h.lattice_points()?
        .into_iter()
        .map(|p| p.entries)
        .filter(|p| certify_vertex(h, p))
        .collect())
}

/// The f-vector `(f_0, ..., f_{d-1})` of the face lattice, computed from
/// vertex-facet incidences by intersection closure. Guarded at `dim <= 10`;
/// assumes a lattice polytope.
pub fn f_vector(h: &HPolytope) -> Result<Vec<usize>> {
    if h.dim > 10 {
        return Err(Error::GuardExceeded(format!(
            "f-vector face enumeration is held to dim <= 10, got {}",
            h.dim
        )));
    }
    let verts = polytope_vertices(h)?;
    if verts.len() > 128 {
        return Err(Error::GuardExceeded(format!(
            "f-vector bitset supports at most 128 vertices, got {}",
            verts.len()
        )));
    }
    if h.dim == 0 {
        return Ok(Vec::new());
    }
    let full: u128 = if verts.len() == 128 {
        u128::MAX
    } else {
        (1u128 << verts.len()) - 1
    };
    let facet_sets: Vec<u128> = h
        .inequalities
        .iter()
        .filter(|ineq| tight_vertex_rank(ineq, &verts) == h.dim - 1)
        .map(|ineq| {
            let mut mask = 0u128;
            for (idx, v) in verts.iter().enumerate() {
                let lhs: i128 = ineq
                    .coeffs
                    .iter()
                    .zip(v.iter())
                    .map(|(&c, &x)| i128::from(c) * i128::from(x))
                    .sum();
                if lhs == i128::from(ineq.bound) {
                    mask |= 1 << idx;
                }
            }
            mask
        })
        .collect();
    // Every proper face is an intersection of facet vertex sets.
    let mut faces: BTreeSet<u128> = BTreeSet::new();
    let mut frontier: Vec<u128> = vec![full];
    while let Some(f) = frontier.pop() {
        for &fs in &facet_sets {
            let g = f & fs;
            if g != 0 && g != full && faces.insert(g) {
                frontier.push(g);
            }
        }
    }
    let mut counts = vec![0usize; h.dim];
    for &mask in &faces {
        let members: Vec<Vec<i64>> = (0..verts.len())
            .filter(|&idx| mask >> idx & 1 == 1)
            .map(|idx| verts[idx].clone())
            .collect();
        let d = affine_rank_i64(&members);
        if d < h.dim {
            counts[d] += 1;
        }
    }
    Ok(counts)
}

/// The sequence criterion for unimodular equivalence of the two polytopes:
/// `l_{i-2} < i+1` or `l_{i-1} < i+2`, out-of-range indices counting as
/// satisfied.
pub fn unimodular_equivalence_criterion(ell: &LSequence) -> bool {
    let i = ell.i();
    let first = i < 3 || ell.ell_k(i - 2) < i + 1;
    let second = i < 2 || ell.ell_k(i - 1) < i + 2;
    first || second
}

/// Gorenstein criterion: some `K` has `l_j - j = K` whenever `l_j` differs
/// from its predecessor. Coincides with poset purity and h*-palindromicity,
/// which the verification suites check as independent routes.
pub fn gorenstein_criterion(ell: &LSequence) -> bool {
    ell.is_pure_closed_form()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::LSequence;

    fn poset(i: usize, n: usize, ell: &[usize]) -> PosetP {
        PosetP::new(&LSequence::new(i, n, ell.to_vec()).unwrap())
    }

    #[test]
    fn intro_chain_polytope_inequalities() {
        let p = poset(2, 3, &[2, 3]);
        let h = chain_polytope(&p, 1);
        assert_eq!(h.dim, 3);
        assert_eq!(h.inequalities.len(), 5); // 3 nonnegativity + 2 chains
    }

    #[test]
    fn intro_order_polytope_inequalities() {
        let p = poset(2, 3, &[2, 3]);
        let h = order_polytope(&p, 1);
        assert_eq!(h.inequalities.len(), 5); // 2 covers + 1 minimal + 2 maximal
    }

    #[test]
    fn worked_example_all_inequalities_are_facets() {
        let p = poset(4, 6, &[4, 5, 6, 6]);
        let chain = chain_polytope(&p, 1);
        let order = order_polytope(&p, 1);
        assert_eq!(chain.inequalities.len(), 16);
        assert_eq!(order.inequalities.len(), 15);
        assert_eq!(irredundant_facet_count(&chain).unwrap(), 16);
        assert_eq!(irredundant_facet_count(&order).unwrap(), 15);
    }

    #[test]
    fn intro_lattice_points() {
        let p = poset(2, 3, &[2, 3]);
        // Coordinates in canonical order (x22, x12, x23).
        let pts = chain_polytope(&p, 1).lattice_points().unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![0, 0, 0],
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![1, 0, 0],
        ];
        assert_eq!(
            pts.iter().map(|p| p.entries.clone()).collect::<Vec<_>>(),
            expect
        );
        assert_eq!(chain_polytope(&p, 2).count_lattice_points().unwrap(), 14);
        assert_eq!(order_polytope(&p, 1).count_lattice_points().unwrap(), 5);
    }

    #[test]
    fn specialized_counters_match_generic_enumeration() {
        for n in 1..=4 {
            for ell in LSequence::enumerate_all(n) {
                let p = PosetP::new(&ell);
                for t in 0..=3i64 {
                    for kind in [PolytopeKind::Chain, PolytopeKind::Order] {
                        let generic = polytope_of(&p, kind, t).count_lattice_points().unwrap();
                        assert_eq!(
                            generic,
                            count_points(&p, kind, t),
                            "counter mismatch for {ell:?} kind {kind:?} t {t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn empty_poset_is_a_point() {
        let p = poset(2, 3, &[1, 1]);
        let h = chain_polytope(&p, 1);
        assert_eq!(h.dim, 0);
        assert_eq!(h.lattice_points().unwrap().len(), 1);
        let e = ehrhart(&p, PolytopeKind::Chain);
        assert_eq!(e.values, vec![1, 1]);
        assert_eq!(e.polynomial, vec![BigRational::one()]);
        assert_eq!(e.hstar, vec![1]);
        assert!(minkowski_check(&p, PolytopeKind::Order, 2, 1));
        assert_eq!(vertex_sets(&p, PolytopeKind::Chain).len(), 1);
        assert!(facet_counts_closed_form(p.ell()).is_err());
    }

    #[test]
    fn intro_ehrhart_values() {
        // Chain side: frozen values 1, 5, 14, 30, 55 = (t+1)(t+2)(2t+3)/6.
        let p = poset(2, 3, &[2, 3]);
        let chain = ehrhart(&p, PolytopeKind::Chain);
        assert_eq!(chain.values, vec![1, 5, 14, 30, 55]);
        for t in 0..=4i128 {
            assert_eq!(
                chain.values[t as usize],
                (t + 1) * (t + 2) * (2 * t + 3) / 6
            );
        }
        let order = ehrhart(&p, PolytopeKind::Order);
        assert_eq!(order.values, chain.values);
    }

    #[test]
    fn minkowski_examples() {
        let p = poset(2, 3, &[2, 3]);
        assert!(minkowski_check(&p, PolytopeKind::Chain, 1, 1));
        assert!(minkowski_check(&p, PolytopeKind::Order, 2, 1));
        for s in enumerate_points(&p, PolytopeKind::Chain, 3) {
            let parts = decompose_into_units(&p, PolytopeKind::Chain, &s, 3).unwrap();
            assert_eq!(parts.len(), 3);
            let sum = parts
                .iter()
                .fold(MultiExponent::zeros(p.len()), |acc, q| acc.add(q));
            assert_eq!(sum, s);
        }
    }

    #[test]
    fn facet_closed_forms() {
        let ell = LSequence::new(4, 6, vec![4, 5, 6, 6]).unwrap();
        assert_eq!(facet_counts_closed_form(&ell).unwrap(), (15, 16));
        let ell = LSequence::new(2, 3, vec![2, 3]).unwrap();
        assert_eq!(facet_counts_closed_form(&ell).unwrap(), (5, 5));
        // Two-element chain: both polytopes are triangles.
        let ell = LSequence::new(1, 2, vec![2]).unwrap();
        assert_eq!(facet_counts_closed_form(&ell).unwrap(), (3, 3));
        let p = PosetP::new(&ell);
        assert_eq!(vertex_sets(&p, PolytopeKind::Chain).len(), 3);
        assert_eq!(vertex_sets(&p, PolytopeKind::Order).len(), 3);
    }

    #[test]
    fn intro_vertex_sets() {
        let p = poset(2, 3, &[2, 3]);
        assert_eq!(vertex_sets(&p, PolytopeKind::Order).len(), 5);
        assert_eq!(vertex_sets(&p, PolytopeKind::Chain).len(), 5);
    }

    #[test]
    fn f_vector_examples() {
        // Segment: single-vertex poset.
        let ell = LSequence::new(1, 2, vec![1]).unwrap();
        let p = PosetP::new(&ell);
        let f = f_vector(&chain_polytope(&p, 1)).unwrap();
        assert_eq!(f, vec![2]);
        // Intro example: the criterion holds, so f-vectors agree.
        let p = poset(2, 3, &[2, 3]);
        let fc = f_vector(&chain_polytope(&p, 1)).unwrap();
        let fo = f_vector(&order_polytope(&p, 1)).unwrap();
        assert_eq!(fc, fo);
        // Criterion fails for i=3, n=5, ell=(4,5,5): f-vectors differ.
        let p = poset(3, 5, &[4, 5, 5]);
        let fc = f_vector(&chain_polytope(&p, 1)).unwrap();
        let fo = f_vector(&order_polytope(&p, 1)).unwrap();
        assert_ne!(fc, fo);
    }

    #[test]
    fn criteria_examples() {
        let ok = LSequence::new(2, 3, vec![2, 3]).unwrap();
        assert!(unimodular_equivalence_criterion(&ok));
        let bad = LSequence::new(3, 5, vec![4, 5, 5]).unwrap();
        assert!(!unimodular_equivalence_criterion(&bad));
        let any_i1 = LSequence::new(1, 4, vec![3]).unwrap();
        assert!(unimodular_equivalence_criterion(&any_i1));

        assert!(gorenstein_criterion(&ok)); // K = 1
        assert!(gorenstein_criterion(
            &LSequence::new(2, 3, vec![1, 1]).unwrap()
        ));
        let pure_worked = LSequence::new(4, 6, vec![4, 5, 6, 6]).unwrap();
        // All maximal chains have 4 vertices, so the worked example is pure.
        assert!(gorenstein_criterion(&pure_worked));
        assert!(PosetP::new(&pure_worked).is_pure());
        assert!(hstar_palindromic(&ehrhart(
            &PosetP::new(&pure_worked),
            PolytopeKind::Order
        )));
    }

    #[test]
    fn gorenstein_triple_cross_check_small() {
        for n in 1..=4 {
            for ell in LSequence::enumerate_all(n) {
                let p = PosetP::new(&ell);
                let crit = gorenstein_criterion(&ell);
                assert_eq!(crit, p.is_pure(), "purity mismatch {ell:?}");
                assert_eq!(
                    crit,
                    hstar_palindromic(&ehrhart(&p, PolytopeKind::Chain)),
                    "hstar mismatch {ell:?}"
                );
            }
        }
    }
}
