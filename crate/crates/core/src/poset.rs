//! The poset attached to an ascending sequence.
//!
//! For `i`, `n` and a weakly increasing sequence `i-1 <= l_1 <= ... <= l_i
//! <= n`, the poset has vertices `x_{k,j}` with `1 <= k <= i`, `i <= j <=
//! l_k` and relation `x_{k1,j1} >= x_{k2,j2}` iff `k1 <= k2` and `j1 >= j2`.
//! Everything downstream (polytopes, multi-exponents, monomial orders) indexes
//! coordinates by this module's canonical vertex order, which sorts by
//! `j - k`, then by `k`; it refines the partial order and starts at the
//! unique minimal vertex `x_{i,i}`.

use crate::error::Error;
use crate::Result;
use serde::Serialize;
use std::cmp::Ordering;

/// A vertex `x_{k,j}`; serialized as `[k, j]`.
pub type Vertex = (usize, usize);

/// Canonical coordinate order: by `j - k` ascending, then `k` ascending.
pub fn canonical_cmp(a: Vertex, b: Vertex) -> Ordering {
    let key = |(k, j): Vertex| (j as i64 - k as i64, k);
    key(a).cmp(&key(b))
}

/// The ascending sequence `(i-1 <= l_1 <= ... <= l_i <= n)`.
///
/// The sentinel `l_0 = i - 1` is derived, never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LSequence {
    i: usize,
    n: usize,
    ell: Vec<usize>,
}

impl LSequence {
    pub fn new(i: usize, n: usize, ell: Vec<usize>) -> Result<Self> {
        if i < 1 || i > n {
            return Err(Error::InvalidSequence(format!(
                "i = {i} violates 1 <= i <= n = {n}"
            )));
        }
        if ell.len() != i {
            return Err(Error::InvalidSequence(format!(
                "expected i = {i} entries, got {}",
                ell.len()
            )));
        }
        let mut prev = i - 1;
        for (idx, &l) in ell.iter().enumerate() {
            if l < prev {
                return Err(Error::InvalidSequence(format!(
                    "ell[{}] = {l} breaks the lower bound {prev} (weak increase from l_0 = i-1)",
                    idx + 1
                )));
            }
            if l > n {
                return Err(Error::InvalidSequence(format!(
                    "ell[{}] = {l} exceeds n = {n}",
                    idx + 1
                )));
            }
            prev = l;
        }
        Ok(LSequence { i, n, ell })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.ell
    }

    /// `l_k` with the sentinel convention `l_0 = i - 1`; 1-based `k`.
    pub fn ell_k(&self, k: usize) -> usize {
        if k == 0 {
            self.i - 1
        } else {
            self.ell[k - 1]
        }
    }

    /// `N = sum_k (l_k + 1 - i)`.
    pub fn vertex_count(&self) -> usize {
        self.ell.iter().map(|&l| l + 1 - self.i).sum()
    }

    /// All valid sequences for a fixed `i`.
    pub fn enumerate_for_i(i: usize, n: usize) -> Vec<LSequence> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(i);
        fn go(i: usize, n: usize, lo: usize, current: &mut Vec<usize>, out: &mut Vec<LSequence>) {
            if current.len() == i {
                out.push(LSequence {
                    i,
                    n,
                    ell: current.clone(),
                });
                return;
            }
            for l in lo..=n {
                current.push(l);
                go(i, n, l, current, out);
                current.pop();
            }
        }
        go(i, n, i - 1, &mut current, &mut out);
        out
    }

    /// All valid sequences for every `1 <= i <= n`.
    pub fn enumerate_all(n: usize) -> Vec<LSequence> {
        (1..=n)
            .flat_map(|i| LSequence::enumerate_for_i(i, n))
            .collect()
    }

    /// Closed form for purity: the columns carrying a maximal element
    /// (`l_k != l_{k-1}`) must all share the same value of `l_k - k`.
    pub fn is_pure_closed_form(&self) -> bool {
        let mut seen: Option<i64> = None;
        for k in 1..=self.i {
            if self.ell_k(k) != self.ell_k(k - 1) {
                let d = self.ell_k(k) as i64 - k as i64;
                match seen {
                    None => seen = Some(d),
                    Some(prev) if prev != d => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }
}

/// The poset itself, with vertices in canonical order and the cover
/// relation precomputed.
#[derive(Debug, Clone)]
pub struct PosetP {
    ell: LSequence,
    vertices: Vec<Vertex>,
    /// Cover pairs `(upper, lower)` as canonical indices.
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
}

impl PosetP {
    /// Build the poset of a sequence. Covers are generated by
    /// `(k,j) -> (k+1,j)` and `(k,j) -> (k,j-1)` restricted to vertices.
    pub fn new(ell: &LSequence) -> PosetP {
        let i = ell.i();
        let mut vertices: Vec<Vertex> = Vec::new();
        for k in 1..=i {
            for j in i..=ell.ell_k(k) {
                vertices.push((k, j));
            }
        }
        vertices.sort_by(|&a, &b| canonical_cmp(a, b));
        let index = |v: Vertex| vertices.binary_search_by(|&p| canonical_cmp(p, v)).ok();
        let mut covers = Vec::new();
        let mut lower_covers = vec![Vec::new(); vertices.len()];
        let mut upper_covers = vec![Vec::new(); vertices.len()];
        for (a, &(k, j)) in vertices.iter().enumerate() {
            for lower in [(k + 1, j), (k, j.wrapping_sub(1))] {
                if let Some(b) = index(lower) {
                    covers.push((a, b));
                    lower_covers[a].push(b);
                    upper_covers[b].push(a);
                }
            }
        }
        for l in lower_covers.iter_mut().chain(upper_covers.iter_mut()) {
            l.sort_unstable();
        }
        covers.sort_unstable();
        PosetP {
            ell: ell.clone(),
            vertices,
            covers,
            lower_covers,
            upper_covers,
        }
    }

    pub fn ell(&self) -> &LSequence {
        &self.ell
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, idx: usize) -> Vertex {
        self.vertices[idx]
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.vertices
            .binary_search_by(|&p| canonical_cmp(p, v))
            .ok()
    }

    /// Cover pairs `(upper, lower)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, idx: usize) -> &[usize] {
        &self.lower_covers[idx]
    }

    pub fn upper_covers(&self, idx: usize) -> &[usize] {
        &self.upper_covers[idx]
    }

    /// Closed-form comparability: `x_{k1,j1} >= x_{k2,j2}` iff `k1 <= k2`
    /// and `j1 >= j2`.
    pub fn geq(&self, a: usize, b: usize) -> bool {
        let (k1, j1) = self.vertices[a];
        let (k2, j2) = self.vertices[b];
        k1 <= k2 && j1 >= j2
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.geq(a, b) || self.geq(b, a)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.lower_covers[v].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.upper_covers[v].is_empty())
            .collect()
    }

    /// All maximal chains, each listed maximal-first (descending). The empty
    /// poset yields no chains.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for top in self.maximal_elements() {
            self.descend(top, &mut path, &mut out);
        }
        out
    }

    fn descend(&self, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        path.push(v);
        if self.lower_covers[v].is_empty() {
            out.push(path.clone());
        } else {
            for &l in &self.lower_covers[v] {
                self.descend(l, path, out);
            }
        }
        path.pop();
    }

    /// All antichains (as ascending canonical index lists), including the
    /// empty one.
    pub fn antichains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.antichain_rec(0, &mut current, &mut out);
        out
    }

    fn antichain_rec(&self, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if from == self.len() {
            out.push(current.clone());
            return;
        }
        self.antichain_rec(from + 1, current, out);
        if current.iter().all(|&c| !self.comparable(c, from)) {
            current.push(from);
            self.antichain_rec(from + 1, current, out);
            current.pop();
        }
    }

    /// All filters (up-closed subsets), including the empty one. Membership
    /// is decided top-down: a vertex may join only when all its upper covers
    /// already did.
    pub fn filters(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut out = Vec::new();
        let mut member = vec![false; n];
        // Process vertices in descending canonical order so upper covers are
        // decided first (u > v implies u after v canonically).
        fn go(p: &PosetP, pos: usize, member: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if pos == 0 {
                out.push(
                    (0..member.len())
                        .filter(|&v| member[v])
                        .collect::<Vec<usize>>(),
                );
                return;
            }
            let v = pos - 1;
            member[v] = false;
            go(p, pos - 1, member, out);
            if p.upper_covers(v).iter().all(|&u| member[u]) {
                member[v] = true;
                go(p, pos - 1, member, out);
                member[v] = false;
            }
        }
        go(self, n, &mut member, &mut out);
        out.sort();
        out
    }

    /// Antichains and filters in one call.
    pub fn antichains_and_filters(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        (self.antichains(), self.filters())
    }

    /// True iff all maximal chains have the same length.
    pub fn is_pure(&self) -> bool {
        let chains = self.maximal_chains();
        match chains.first() {
            None => true,
            Some(first) => chains.iter().all(|c| c.len() == first.len()),
        }
    }

    /// JSON form: vertices as `[k, j]` arrays, covers as pairs of vertices.
    pub fn to_json(&self) -> serde_json::Value {
        let covers: Vec<[Vertex; 2]> = self
            .covers
            .iter()
            .map(|&(a, b)| [self.vertices[a], self.vertices[b]])
            .collect();
        serde_json::json!({
            "i": self.ell.i(),
            "n": self.ell.n(),
            "ell": self.ell.entries(),
            "vertices": self.vertices,
            "covers": covers,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn seq(i: usize, n: usize, ell: &[usize]) -> LSequence {
        LSequence::new(i, n, ell.to_vec()).unwrap()
    }

    // Brute-force oracles over all vertex subsets, independent of the
    // implementation paths they check.
    fn oracle_chains(p: &PosetP) -> BTreeSet<Vec<usize>> {
        let n = p.len();
        let mut maximal = BTreeSet::new();
        for mask in 0u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let total = subset
                .iter()
                .all(|&a| subset.iter().all(|&b| p.comparable(a, b)));
            if !total || subset.is_empty() {
                continue;
            }
            let extendable =
                (0..n).any(|v| !subset.contains(&v) && subset.iter().all(|&a| p.comparable(a, v)));
            if !extendable {
                let mut sorted = subset;
                sorted.sort_by(|&a, &b| {
                    if p.geq(a, b) && a != b {
                        std::cmp::Ordering::Less
                    } else if a == b {
                        std::cmp::Ordering::Equal
                    } else {
                        std::cmp::Ordering::Greater
                    }
                });
                maximal.insert(sorted);
            }
        }
        maximal
    }

    fn oracle_antichains(p: &PosetP) -> BTreeSet<Vec<usize>> {
        let n = p.len();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if subset
                .iter()
                .all(|&a| subset.iter().all(|&b| a == b || !p.comparable(a, b)))
            {
                out.insert(subset);
            }
        }
        out
    }

    fn oracle_filters(p: &PosetP) -> BTreeSet<Vec<usize>> {
        let n = p.len();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let closed = subset
                .iter()
                .all(|&v| (0..n).all(|u| !p.geq(u, v) || subset.contains(&u)));
            if closed {
                out.insert(subset);
            }
        }
        out
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(LSequence::new(2, 3, vec![0, 2]).is_err());
        assert!(LSequence::new(2, 3, vec![3, 2]).is_err());
        assert!(LSequence::new(2, 3, vec![2, 4]).is_err());
        assert!(LSequence::new(2, 3, vec![2]).is_err());
        assert!(LSequence::new(0, 3, vec![]).is_err());
        assert!(LSequence::new(4, 3, vec![3, 3, 3, 3]).is_err());
    }

    #[test]
    fn worked_nine_vertex_example() {
        let p = PosetP::new(&seq(4, 6, &[4, 5, 6, 6]));
        assert_eq!(p.len(), 9);
        let maxes: BTreeSet<Vertex> = p.maximal_elements().iter().map(|&v| p.vertex(v)).collect();
        assert_eq!(maxes, BTreeSet::from([(1, 4), (2, 5), (3, 6)]));
        // 1 + 3 + 3 maximal chains, per the binomials of the facet example.
        assert_eq!(p.maximal_chains().len(), 7);
        assert_eq!(oracle_chains(&p).len(), 7);
    }

    #[test]
    fn empty_poset() {
        let p = PosetP::new(&seq(2, 3, &[1, 1]));
        assert_eq!(p.len(), 0);
        assert!(p.maximal_chains().is_empty());
        let (a, f) = p.antichains_and_filters();
        assert_eq!(a, vec![Vec::<usize>::new()]);
        assert_eq!(f, vec![Vec::<usize>::new()]);
        assert!(p.is_pure());
    }

    #[test]
    fn intro_example_poset() {
        let p = PosetP::new(&seq(2, 3, &[2, 3]));
        assert_eq!(p.vertices(), &[(2, 2), (1, 2), (2, 3)]);
        // Covers: x_{1,2} -> x_{2,2} and x_{2,3} -> x_{2,2}.
        let covers: BTreeSet<(Vertex, Vertex)> = p
            .covers()
            .iter()
            .map(|&(a, b)| (p.vertex(a), p.vertex(b)))
            .collect();
        assert_eq!(covers, BTreeSet::from([((1, 2), (2, 2)), ((2, 3), (2, 2))]));
        let chains = p.maximal_chains();
        assert_eq!(chains.len(), 2);
        let as_vertices: BTreeSet<Vec<Vertex>> = chains
            .iter()
            .map(|c| c.iter().map(|&v| p.vertex(v)).collect())
            .collect();
        assert_eq!(
            as_vertices,
            BTreeSet::from([vec![(1, 2), (2, 2)], vec![(2, 3), (2, 2)]])
        );
        assert_eq!(
            oracle_chains(&p),
            chains.into_iter().collect::<BTreeSet<_>>()
        );
        assert!(p.is_pure());
    }

    #[test]
    fn intro_example_antichains_and_filters() {
        let p = PosetP::new(&seq(2, 3, &[2, 3]));
        let (antichains, filters) = p.antichains_and_filters();
        assert_eq!(antichains.len(), 5);
        assert_eq!(filters.len(), 5);
        let vertex_antichains: BTreeSet<BTreeSet<Vertex>> = antichains
            .iter()
            .map(|a| a.iter().map(|&v| p.vertex(v)).collect())
            .collect();
        assert_eq!(
            vertex_antichains,
            BTreeSet::from([
                BTreeSet::new(),
                BTreeSet::from([(2, 2)]),
                BTreeSet::from([(1, 2)]),
                BTreeSet::from([(2, 3)]),
                BTreeSet::from([(1, 2), (2, 3)]),
            ])
        );
        assert_eq!(
            oracle_antichains(&p),
            antichains.into_iter().collect::<BTreeSet<_>>()
        );
        assert_eq!(
            oracle_filters(&p),
            filters.into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn grid_antichain_count() {
        // ell = (3,3), i = 2, n = 3: the 2x2 grid has C(4,2) = 6 antichains.
        let p = PosetP::new(&seq(2, 3, &[3, 3]));
        assert_eq!(p.antichains().len(), 6);
        assert_eq!(p.filters().len(), 6);
    }

    #[test]
    fn purity_matches_enumeration_and_closed_form() {
        for n in 1..=6 {
            for ell in LSequence::enumerate_all(n) {
                let p = PosetP::new(&ell);
                assert_eq!(
                    p.is_pure(),
                    ell.is_pure_closed_form(),
                    "purity mismatch for {ell:?}"
                );
            }
        }
        // All maximal chains of (4,5,6,6) have 4 vertices; the poset is pure.
        let p = PosetP::new(&seq(4, 6, &[4, 5, 6, 6]));
        let lengths: BTreeSet<usize> = p.maximal_chains().iter().map(|c| c.len()).collect();
        assert_eq!(lengths, BTreeSet::from([4]));
        assert!(p.is_pure());
    }

    #[test]
    fn closure_of_covers_matches_closed_form() {
        for n in 1..=6 {
            for ell in LSequence::enumerate_all(n) {
                let p = PosetP::new(&ell);
                assert_eq!(p.len(), ell.vertex_count());
                // Reflexive-transitive closure of covers.
                let sz = p.len();
                let mut reach = vec![vec![false; sz]; sz];
                for v in 0..sz {
                    reach[v][v] = true;
                }
                for &(a, b) in p.covers() {
                    reach[a][b] = true;
                }
                for m in 0..sz {
                    for a in 0..sz {
                        for b in 0..sz {
                            reach[a][b] |= reach[a][m] && reach[m][b];
                        }
                    }
                }
                for a in 0..sz {
                    for b in 0..sz {
                        assert_eq!(reach[a][b], p.geq(a, b), "closure mismatch for {ell:?}");
                    }
                }
                if sz > 0 {
                    let min = p.index_of((ell.i(), ell.i())).unwrap();
                    assert_eq!(p.minimal_elements(), vec![min]);
                    for chain in p.maximal_chains() {
                        assert_eq!(*chain.last().unwrap(), min);
                    }
                }
            }
        }
    }

    #[test]
    fn antichain_filter_counts_agree_small_rank() {
        for n in 1..=6 {
            for ell in LSequence::enumerate_all(n) {
                let p = PosetP::new(&ell);
                let (a, f) = p.antichains_and_filters();
                assert_eq!(a.len(), f.len(), "count mismatch for {ell:?}");
            }
        }
    }
}
