//! Randomized invariants over the sequence family.

use minuscule::crystal::{a_s_map, crystal_e, crystal_f};
use minuscule::gt::gt_lattice_points;
use minuscule::pbw::monomial_cmp;
use minuscule::polytope::{
    count_points, ehrhart, enumerate_points, minkowski_witness, polytope_of, PolytopeKind,
};
use minuscule::poset::{LSequence, PosetP};
use minuscule::weyl::{ell_of, inversion_roots, word_of_ell};
use proptest::prelude::*;
use std::cmp::Ordering;

fn arb_lsequence(n_max: usize) -> impl Strategy<Value = LSequence> {
    (1..=n_max)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_flat_map(|(n, i)| (Just(n), Just(i), proptest::collection::vec(i - 1..=n, i)))
        .prop_map(|(n, i, mut ell)| {
            ell.sort_unstable();
            LSequence::new(i, n, ell).expect("sorted in-range sequence is valid")
        })
}

proptest! {
    #[test]
    fn vertex_count_matches_formula(ell in arb_lsequence(8)) {
        let p = PosetP::new(&ell);
        prop_assert_eq!(p.len(), ell.vertex_count());
        if !p.is_empty() {
            let min = p.minimal_elements();
            prop_assert_eq!(min.len(), 1);
            prop_assert_eq!(p.vertex(min[0]), (ell.i(), ell.i()));
            for chain in p.maximal_chains() {
                prop_assert_eq!(*chain.last().unwrap(), min[0]);
            }
        }
    }

    #[test]
    fn word_round_trips(ell in arb_lsequence(8)) {
        let (word, w) = word_of_ell(&ell);
        prop_assert_eq!(word.len(), ell.vertex_count());
        prop_assert_eq!(w.coxeter_length(), ell.vertex_count());
        prop_assert_eq!(inversion_roots(&w).len(), ell.vertex_count());
        let back = ell_of(&w, ell.i()).unwrap();
        prop_assert_eq!(back, ell);
    }

    #[test]
    fn antichain_and_filter_counts_agree(ell in arb_lsequence(6)) {
        let p = PosetP::new(&ell);
        let (antichains, filters) = p.antichains_and_filters();
        prop_assert_eq!(antichains.len(), filters.len());
    }

    #[test]
    fn minkowski_witness_splits_points(
        ell in arb_lsequence(4),
        chain_side in any::<bool>(),
        m in 2..=3i64,
    ) {
        let p = PosetP::new(&ell);
        let kind = if chain_side { PolytopeKind::Chain } else { PolytopeKind::Order };
        let unit = polytope_of(&p, kind, 1);
        let rest = polytope_of(&p, kind, m - 1);
        for s in enumerate_points(&p, kind, m) {
            let w = minkowski_witness(&p, kind, &s);
            prop_assert!(unit.contains(&w.entries));
            prop_assert!(rest.contains(&s.sub(&w).entries));
        }
    }

    #[test]
    fn hstar_sums_to_normalized_volume(ell in arb_lsequence(4), chain_side in any::<bool>()) {
        let kind = if chain_side { PolytopeKind::Chain } else { PolytopeKind::Order };
        let p = PosetP::new(&ell);
        let data = ehrhart(&p, kind);
        let total: i128 = data.hstar.iter().sum();
        // Leading finite difference of the counts = normalized volume.
        let mut diffs: Vec<i128> = data.values.clone();
        for _ in 0..p.len() {
            diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        }
        prop_assert_eq!(total, diffs[0]);
        prop_assert!(data.hstar.iter().all(|&h| h >= 0));
        prop_assert_eq!(data.values[1] as u128, count_points(&p, kind, 1));
    }

    #[test]
    fn monomial_order_is_total_and_degree_compatible(
        a in proptest::collection::vec(0..4i64, 5),
        b in proptest::collection::vec(0..4i64, 5),
    ) {
        let ab = monomial_cmp(&a, &b);
        let ba = monomial_cmp(&b, &a);
        prop_assert_eq!(ab, ba.reverse());
        if ab == Ordering::Equal {
            prop_assert_eq!(&a, &b);
        }
        let da: i64 = a.iter().sum();
        let db: i64 = b.iter().sum();
        if da < db {
            prop_assert_eq!(ab, Ordering::Less);
        }
    }

    #[test]
    fn crystal_operators_invert_each_other(
        seed in 0usize..1_000_000,
        k in 1usize..=3,
        m in 1..=2i64,
    ) {
        // Pick a tableau by decoding a pseudo-random GT point of a random
        // shape at n = 3.
        let i = (seed % 3) + 1;
        let pts = gt_lattice_points(3, i, m);
        let p = &pts[seed % pts.len()];
        let t = a_s_map(p, i, m).unwrap();
        if let Some(ft) = crystal_f(&t, k, 3) {
            prop_assert_eq!(crystal_e(&ft, k, 3), Some(t.clone()));
        }
        if let Some(et) = crystal_e(&t, k, 3) {
            prop_assert_eq!(crystal_f(&et, k, 3), Some(t));
        }
    }
}
