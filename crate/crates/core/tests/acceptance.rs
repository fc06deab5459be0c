//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Every check is exact; the stated ranges are pinned in code.

use minuscule::crystal::{a_s_map, demazure_crystal, Tableau};
use minuscule::gt::{
    char_of_patterns, enumerate_reduced_kogan_faces, face_lattice_points, implicit_closure,
    kogan_type, ladder_move, maximal_kogan_face, order_polytope_iso,
};
use minuscule::pbw::DemazureOracle;
use minuscule::polytope::{
    binomial, chain_polytope, count_points, decompose_into_units, ehrhart, enumerate_points,
    f_vector, facet_counts_closed_form, gorenstein_criterion, hstar_palindromic,
    irredundant_facet_count, minkowski_check, order_polytope, unimodular_equivalence_criterion,
    PolytopeKind,
};
use minuscule::poset::{LSequence, PosetP};
use minuscule::weight::Weight;
use minuscule::weyl::{
    character_via_polytope, ell_of, evaluate_word, inversion_roots, longest_minimal_rep,
    minimal_representatives, word_of_ell,
};
use std::collections::BTreeSet;
use std::time::Instant;

fn criterion<F: FnOnce()>(number: usize, label: &str, body: F) {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(body));
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(()) => println!("[acceptance] criterion {number} ({label}): PASS ({secs:.2} s)"),
        Err(payload) => {
            println!("[acceptance] criterion {number} ({label}): FAIL ({secs:.2} s)");
            std::panic::resume_unwind(payload);
        }
    }
}

#[test]
fn criterion_01_facet_counts() {
    criterion(1, "facet counts for i=4, n=6, ell=(4,5,6,6)", || {
        let ell = LSequence::new(4, 6, vec![4, 5, 6, 6]).unwrap();
        assert_eq!(facet_counts_closed_form(&ell).unwrap(), (15, 16));
        let p = PosetP::new(&ell);
        let chain = chain_polytope(&p, 1);
        let order = order_polytope(&p, 1);
        assert_eq!(order.inequalities.len(), 15);
        assert_eq!(chain.inequalities.len(), 16);
        assert_eq!(irredundant_facet_count(&order).unwrap(), 15);
        assert_eq!(irredundant_facet_count(&chain).unwrap(), 16);
    });
}

#[test]
fn criterion_02_intro_example() {
    criterion(2, "intro example at n=3, i=2, w=s1s3s2", || {
        let w = evaluate_word(&[1, 3, 2], 4);
        let ell = ell_of(&w, 2).unwrap();
        assert_eq!(ell.entries(), &[2, 3]);
        let p = PosetP::new(&ell);
        assert_eq!(count_points(&p, PolytopeKind::Chain, 1), 5);

        let oracle = DemazureOracle::new(&w, 2, 1).unwrap();
        assert_eq!(oracle.graded().total, 5);
        let (independent, _) = oracle.monomial_independence();
        assert!(independent);

        let w0 = longest_minimal_rep(3, 2);
        let tau = w.compose(&w0.inverse());
        assert_eq!(tau.window(), &[1, 3, 2, 4]); // s_2
        let face = maximal_kogan_face(&tau, 3, 2, 1).unwrap();
        let patterns = face_lattice_points(&face);
        assert_eq!(patterns.len(), 5);

        let expected: BTreeSet<Vec<i64>> = [
            vec![0, 1, 0, 1], // eps2 + eps4
            vec![0, 1, 1, 0], // eps2 + eps3
            vec![1, 0, 0, 1], // eps1 + eps4
            vec![1, 0, 1, 0], // eps1 + eps3
            vec![1, 1, 0, 0], // eps1 + eps2
        ]
        .into_iter()
        .collect();
        let as_set = |ch: &minuscule::weight::Character| -> BTreeSet<Vec<i64>> {
            assert!(ch.terms().values().all(|&m| m == 1));
            ch.terms().keys().map(|w| w.coords().to_vec()).collect()
        };

        let crystal_char = demazure_crystal(&word_of_ell(&ell).0, 3, 2, 1)
            .unwrap()
            .character(3);
        let face_char = char_of_patterns(&patterns);
        let poly_char = character_via_polytope(&w, 2, 1).unwrap();
        assert_eq!(as_set(&crystal_char), expected);
        assert_eq!(as_set(&face_char), expected);
        assert_eq!(as_set(&poly_char), expected);
    });
}

#[test]
fn criterion_03_ehrhart_equality() {
    criterion(3, "Ehrhart equality for all ell with n <= 6", || {
        for n in 1..=6 {
            for ell in LSequence::enumerate_all(n) {
                let p = PosetP::new(&ell);
                for t in 0..=p.len() as i64 + 1 {
                    assert_eq!(
                        count_points(&p, PolytopeKind::Chain, t),
                        count_points(&p, PolytopeKind::Order, t),
                        "count mismatch at {ell:?}, t = {t}"
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_04_minkowski_normality() {
    criterion(4, "Minkowski identities and normality for n <= 5", || {
        for n in 1..=5 {
            for ell in LSequence::enumerate_all(n) {
                let p = PosetP::new(&ell);
                for kind in [PolytopeKind::Chain, PolytopeKind::Order] {
                    for m1 in 1..=3i64 {
                        for m2 in 1..=(4 - m1) {
                            assert!(
                                minkowski_check(&p, kind, m1, m2),
                                "Minkowski failure at {ell:?} {kind:?} ({m1},{m2})"
                            );
                        }
                    }
                    for m in 2..=4i64 {
                        for s in enumerate_points(&p, kind, m) {
                            let parts = decompose_into_units(&p, kind, &s, m)
                                .unwrap_or_else(|| panic!("no decomposition for {s:?} at {ell:?}"));
                            assert_eq!(parts.len(), m as usize);
                        }
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_05_weyl_bijection() {
    criterion(5, "Weyl dictionary for n <= 7", || {
        for n in 1..=7 {
            for i in 1..=n {
                let reps = minimal_representatives(n, i);
                assert_eq!(reps.len() as u128, binomial(n + 1, i));
                assert_eq!(
                    LSequence::enumerate_for_i(i, n).len() as u128,
                    binomial(n + 1, i)
                );
                for w in &reps {
                    let ell = ell_of(w, i).unwrap();
                    let (word, back) = word_of_ell(&ell);
                    assert_eq!(&back, w, "round trip failed at n={n}, i={i}");
                    assert_eq!(word.len(), ell.vertex_count());
                    let inv = inversion_roots(w);
                    assert_eq!(inv.len(), ell.vertex_count());
                    // Inversion set as a poset is the sequence poset.
                    let p = PosetP::new(&ell);
                    let verts: BTreeSet<(usize, usize)> = p.vertices().iter().copied().collect();
                    assert_eq!(inv.roots, verts);
                }
            }
        }
    });
}

#[test]
fn criterion_06_character_triple() {
    criterion(6, "character triple identity for n <= 4, m <= 2", || {
        for n in 1..=4 {
            for i in 1..=n {
                let w0 = longest_minimal_rep(n, i);
                for ell in LSequence::enumerate_for_i(i, n) {
                    let (word, w) = word_of_ell(&ell);
                    for m in 1..=2i64 {
                        let crystal_char = demazure_crystal(&word, n, i, m as usize)
                            .unwrap()
                            .character(n);
                        let tau = w.compose(&w0.inverse());
                        let face = maximal_kogan_face(&tau, n, i, m).unwrap();
                        let face_char = char_of_patterns(&face_lattice_points(&face));
                        let poly_char = character_via_polytope(&w, i, m).unwrap();
                        assert_eq!(crystal_char, face_char, "crystal vs face at {ell:?} m={m}");
                        assert_eq!(
                            crystal_char, poly_char,
                            "crystal vs polytope at {ell:?} m={m}"
                        );
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_07_pbw_basis() {
    criterion(7, "PBW monomial basis for n <= 4, m <= 2", || {
        for n in 1..=4 {
            for i in 1..=n {
                for ell in LSequence::enumerate_for_i(i, n) {
                    let (_, w) = word_of_ell(&ell);
                    for m in 1..=2i64 {
                        let oracle = DemazureOracle::new(&w, i, m).unwrap();
                        let (independent, certs) = oracle.monomial_independence();
                        assert!(
                            independent,
                            "independence failed at {ell:?} m={m}: {certs:?}"
                        );
                        assert_eq!(
                            oracle.graded().total,
                            oracle.chain_points().len(),
                            "dimension mismatch at {ell:?} m={m}"
                        );
                    }
                }
            }
        }
        // The worked count: 14 monomials for n=3, i=2, ell=(2,3), m=2.
        let ell = LSequence::new(2, 3, vec![2, 3]).unwrap();
        let oracle = DemazureOracle::new(&word_of_ell(&ell).1, 2, 2).unwrap();
        assert_eq!(oracle.graded().total, 14);
        assert_eq!(oracle.chain_points().len(), 14);
    });
}

#[test]
fn criterion_08_essential_monomials() {
    criterion(8, "essential monomials for n <= 4, m <= 2", || {
        for n in 1..=4 {
            for i in 1..=n {
                for ell in LSequence::enumerate_for_i(i, n) {
                    let (_, w) = word_of_ell(&ell);
                    for m in 1..=2i64 {
                        let oracle = DemazureOracle::new(&w, i, m).unwrap();
                        let essential: BTreeSet<Vec<i64>> = oracle
                            .essential_monomials()
                            .into_iter()
                            .map(|p| p.entries)
                            .collect();
                        let chain: BTreeSet<Vec<i64>> = oracle
                            .chain_points()
                            .into_iter()
                            .map(|p| p.entries)
                            .collect();
                        assert_eq!(essential, chain, "essential mismatch at {ell:?} m={m}");
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_09_equivalence_criteria() {
    criterion(9, "equivalence and Gorenstein criteria for n <= 5", || {
        for n in 1..=5 {
            for ell in LSequence::enumerate_all(n) {
                let p = PosetP::new(&ell);
                if !p.is_empty() {
                    let crit = unimodular_equivalence_criterion(&ell);
                    let (order_facets, chain_facets) = facet_counts_closed_form(&ell).unwrap();
                    assert_eq!(crit, order_facets == chain_facets, "facet iff at {ell:?}");
                    let fc = f_vector(&chain_polytope(&p, 1)).unwrap();
                    let fo = f_vector(&order_polytope(&p, 1)).unwrap();
                    assert_eq!(crit, fc == fo, "f-vector iff at {ell:?}");
                }
                let gor = gorenstein_criterion(&ell);
                assert_eq!(gor, p.is_pure(), "purity iff at {ell:?}");
                assert_eq!(
                    gor,
                    hstar_palindromic(&ehrhart(&p, PolytopeKind::Chain)),
                    "h* iff at {ell:?}"
                );
            }
        }
    });
}

#[test]
fn criterion_10_kogan_maximality() {
    criterion(
        10,
        "Kogan maximality, ladder moves, order isomorphism for n <= 4",
        || {
            for n in 2..=4 {
                for i in 1..=n {
                    let w0 = longest_minimal_rep(n, i);
                    let faces = enumerate_reduced_kogan_faces(n, i, 1).unwrap();
                    // Ladder moves preserve the type.
                    for f in &faces {
                        for j in 0..n {
                            for k in 1..=n {
                                for l in 1..=n {
                                    if let Ok(moved) = ladder_move(f, j, k, l) {
                                        assert_eq!(kogan_type(&moved).1, kogan_type(f).1);
                                    }
                                }
                            }
                        }
                    }
                    for ell in LSequence::enumerate_for_i(i, n) {
                        let w = word_of_ell(&ell).1;
                        let tau = w.compose(&w0.inverse());
                        let max1 = maximal_kogan_face(&tau, n, i, 1).unwrap();
                        let max_pts: BTreeSet<_> = face_lattice_points(&max1).into_iter().collect();
                        let max_c = implicit_closure(&max1).diagonal_counts;
                        for f in faces.iter().filter(|f| kogan_type(f).1 == tau) {
                            let pts: BTreeSet<_> = face_lattice_points(f).into_iter().collect();
                            assert!(
                                pts.is_subset(&max_pts),
                                "containment failed for {:?} of type {:?}",
                                f.equalities,
                                tau.window()
                            );
                            let c = implicit_closure(f).diagonal_counts;
                            assert!(c.iter().zip(&max_c).all(|(a, b)| a >= b));
                        }
                        // Point bijection with the order polytope for m <= 2,
                        // and operator images filling the Demazure crystal.
                        for m in 1..=2i64 {
                            let face = maximal_kogan_face(&tau, n, i, m).unwrap();
                            let iso = order_polytope_iso(&face).unwrap();
                            assert_eq!(iso.ell.entries(), ell.entries());
                            let images: BTreeSet<Tableau> = face_lattice_points(&face)
                                .iter()
                                .map(|p| a_s_map(p, i, m).unwrap())
                                .collect();
                            let dc =
                                demazure_crystal(&word_of_ell(&ell).0, n, i, m as usize).unwrap();
                            assert_eq!(images, dc.elements);
                        }
                    }
                }
            }
            // The operator map is a weight-preserving bijection on the whole
            // polytope at small rank.
            for n in 1..=3 {
                for i in 1..=n {
                    for m in 1..=2i64 {
                        let pts = minuscule::gt::gt_lattice_points(n, i, m);
                        let mut images = BTreeSet::new();
                        for p in &pts {
                            let t = a_s_map(p, i, m).unwrap();
                            assert_eq!(Weight::from_raw(p.weight().coords().to_vec()), t.weight(n));
                            assert!(images.insert(t), "operator map not injective");
                        }
                        assert_eq!(images.len(), pts.len());
                    }
                }
            }
        },
    );
}
