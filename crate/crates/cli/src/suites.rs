//! The verification suites: each runs one of the library's invariants over a
//! parameter range and reports per-case status with full counterexample
//! payloads (the input and both sides of the violated identity).

use clap::ValueEnum;
use minuscule::crystal::{a_s_map, demazure_crystal, Tableau};
use minuscule::gt::{
    char_of_patterns, enumerate_reduced_kogan_faces, face_lattice_points, implicit_closure,
    kogan_type, ladder_move, maximal_kogan_face, order_polytope_iso,
};
use minuscule::pbw::DemazureOracle;
use minuscule::polytope::{
    chain_polytope, count_points, decompose_into_units, ehrhart, enumerate_points, f_vector,
    facet_counts_closed_form, gorenstein_criterion, hstar_palindromic, irredundant_facet_count,
    minkowski_check, order_polytope, unimodular_equivalence_criterion, PolytopeKind,
};
use minuscule::poset::{LSequence, PosetP};
use minuscule::weight::Character;
use minuscule::weyl::{
    bruhat_interval_by_subwords, bruhat_leq, character_via_polytope, ell_of, face_restriction,
    inversion_roots, longest_minimal_rep, minimal_representatives, word_of_ell,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Ehrhart,
    Minkowski,
    Facets,
    Vertices,
    Unimodular,
    Gorenstein,
    WeylBijection,
    PosetIso,
    KoganMaximality,
    Ladder,
    CharacterTriple,
    PbwBasis,
    Essential,
    Annihilation,
    BruhatShadow,
}

impl SuiteName {
    fn as_str(&self) -> &'static str {
        match self {
            SuiteName::Ehrhart => "ehrhart",
            SuiteName::Minkowski => "minkowski",
            SuiteName::Facets => "facets",
            SuiteName::Vertices => "vertices",
            SuiteName::Unimodular => "unimodular",
            SuiteName::Gorenstein => "gorenstein",
            SuiteName::WeylBijection => "weyl-bijection",
            SuiteName::PosetIso => "poset-iso",
            SuiteName::KoganMaximality => "kogan-maximality",
            SuiteName::Ladder => "ladder",
            SuiteName::CharacterTriple => "character-triple",
            SuiteName::PbwBasis => "pbw-basis",
            SuiteName::Essential => "essential",
            SuiteName::Annihilation => "annihilation",
            SuiteName::BruhatShadow => "bruhat-shadow",
        }
    }

    /// Defaults matching the acceptance-criteria ranges.
    fn default_ranges(&self) -> (usize, i64) {
        match self {
            SuiteName::Ehrhart => (6, 1),
            SuiteName::Minkowski => (5, 4),
            SuiteName::Facets => (6, 1),
            SuiteName::Vertices => (6, 1),
            SuiteName::Unimodular => (5, 1),
            SuiteName::Gorenstein => (5, 1),
            SuiteName::WeylBijection => (7, 1),
            SuiteName::PosetIso => (6, 1),
            SuiteName::KoganMaximality => (4, 2),
            SuiteName::Ladder => (4, 1),
            SuiteName::CharacterTriple => (4, 2),
            SuiteName::PbwBasis => (4, 2),
            SuiteName::Essential => (4, 2),
            SuiteName::Annihilation => (4, 2),
            SuiteName::BruhatShadow => (5, 1),
        }
    }

    /// Hard guards: ranges beyond these are a usage error.
    fn guard(&self) -> (usize, i64) {
        match self {
            SuiteName::Ehrhart | SuiteName::Facets | SuiteName::Vertices | SuiteName::PosetIso => {
                (7, 1)
            }
            SuiteName::Minkowski => (6, 6),
            SuiteName::Unimodular | SuiteName::Gorenstein => (6, 1),
            SuiteName::WeylBijection => (8, 1),
            SuiteName::BruhatShadow => (6, 1),
            SuiteName::KoganMaximality | SuiteName::Ladder => (5, 3),
            SuiteName::CharacterTriple => (5, 3),
            SuiteName::PbwBasis | SuiteName::Essential | SuiteName::Annihilation => (5, 3),
        }
    }
}

#[derive(Clone)]
pub struct Scope {
    pub n_max: Option<usize>,
    pub m_max: Option<i64>,
    pub n: Option<usize>,
    pub i: Option<usize>,
    pub ell: Option<Vec<usize>>,
    pub m: Option<i64>,
}

#[derive(Serialize)]
pub struct CaseRecord {
    pub params: Value,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
}

#[derive(Serialize)]
pub struct VerificationReport {
    pub suite: &'static str,
    pub ranges: Value,
    pub cases: usize,
    pub failures: usize,
    pub status: &'static str,
    pub results: Vec<CaseRecord>,
    pub wall_time_ms: u128,
}

/// A violated identity with both sides.
pub struct Mismatch {
    pub identity: String,
    pub lhs: Value,
    pub rhs: Value,
}

type CaseFn = Box<dyn Fn() -> Result<Option<Value>, Mismatch> + Send + Sync>;

struct Case {
    params: Value,
    run: CaseFn,
}

fn fail(identity: impl Into<String>, lhs: Value, rhs: Value) -> Mismatch {
    Mismatch {
        identity: identity.into(),
        lhs,
        rhs,
    }
}

fn expect_eq<T: PartialEq + Serialize>(identity: &str, lhs: T, rhs: T) -> Result<(), Mismatch> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(fail(
            identity,
            serde_json::to_value(&lhs).expect("serializable"),
            serde_json::to_value(&rhs).expect("serializable"),
        ))
    }
}

fn expect_true(identity: &str, cond: bool, detail: Value) -> Result<(), Mismatch> {
    if cond {
        Ok(())
    } else {
        Err(fail(identity, json!(false), detail))
    }
}

/// Sequences selected by the scope.
fn select_ells(scope: &Scope, n_max: usize) -> Result<Vec<LSequence>, String> {
    if let (Some(n), Some(i), Some(ell)) = (scope.n, scope.i, scope.ell.clone()) {
        return LSequence::new(i, n, ell)
            .map(|e| vec![e])
            .map_err(|e| e.to_string());
    }
    let ns: Vec<usize> = match scope.n {
        Some(n) => vec![n],
        None => (1..=n_max).collect(),
    };
    let mut out = Vec::new();
    for n in ns {
        match scope.i {
            Some(i) => {
                if i >= 1 && i <= n {
                    out.extend(LSequence::enumerate_for_i(i, n));
                }
            }
            None => out.extend(LSequence::enumerate_all(n)),
        }
    }
    Ok(out)
}

fn ell_params(ell: &LSequence) -> Value {
    json!({"n": ell.n(), "i": ell.i(), "ell": ell.entries()})
}

fn ell_params_m(ell: &LSequence, m: i64) -> Value {
    json!({"n": ell.n(), "i": ell.i(), "ell": ell.entries(), "m": m})
}

pub fn run_suite(
    name: SuiteName,
    scope: &Scope,
    jobs: usize,
) -> Result<VerificationReport, String> {
    let started = Instant::now();
    let (default_n, default_m) = name.default_ranges();
    let n_max = scope.n_max.unwrap_or(default_n);
    let m_max = scope.m_max.unwrap_or(default_m);
    let (guard_n, guard_m) = name.guard();
    if n_max > guard_n
        || m_max > guard_m
        || scope.n.map_or(false, |n| n > guard_n)
        || scope.m.map_or(false, |m| m > guard_m)
    {
        return Err(format!(
            "requested range exceeds the guard for suite {} (n <= {guard_n}, m <= {guard_m})",
            name.as_str()
        ));
    }
    let cases = build_cases(name, scope, n_max, m_max)?;
    let ranges = json!({
        "n_max": n_max,
        "m_max": m_max,
        "n": scope.n,
        "i": scope.i,
        "ell": scope.ell,
        "m": scope.m,
    });
    let outcomes: Vec<Result<Option<Value>, Mismatch>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| cases.par_iter().map(|c| (c.run)()).collect())
    } else {
        cases.iter().map(|c| (c.run)()).collect()
    };
    let mut results = Vec::with_capacity(cases.len());
    let mut failures = 0usize;
    for (case, outcome) in cases.iter().zip(outcomes) {
        match outcome {
            Ok(data) => results.push(CaseRecord {
                params: case.params.clone(),
                status: "pass",
                data,
                identity: None,
                lhs: None,
                rhs: None,
            }),
            Err(miss) => {
                failures += 1;
                results.push(CaseRecord {
                    params: case.params.clone(),
                    status: "fail",
                    data: None,
                    identity: Some(miss.identity),
                    lhs: Some(miss.lhs),
                    rhs: Some(miss.rhs),
                });
            }
        }
    }
    Ok(VerificationReport {
        suite: name.as_str(),
        ranges,
        cases: results.len(),
        failures,
        status: if failures == 0 { "pass" } else { "fail" },
        results,
        wall_time_ms: started.elapsed().as_millis(),
    })
}

fn build_cases(
    name: SuiteName,
    scope: &Scope,
    n_max: usize,
    m_max: i64,
) -> Result<Vec<Case>, String> {
    let mut cases = Vec::new();
    match name {
        SuiteName::Ehrhart => {
            for ell in select_ells(scope, n_max)? {
                cases.push(Case {
                    params: ell_params(&ell),
                    run: Box::new(move || {
                        let p = PosetP::new(&ell);
                        let top = p.len() as i64 + 1;
                        let chain: Vec<u128> = (0..=top)
                            .map(|t| count_points(&p, PolytopeKind::Chain, t))
                            .collect();
                        let order: Vec<u128> = (0..=top)
                            .map(|t| count_points(&p, PolytopeKind::Order, t))
                            .collect();
                        expect_eq(
                            "chain and order lattice counts agree for all t <= N+1",
                            chain.iter().map(|&v| v as u64).collect::<Vec<_>>(),
                            order.iter().map(|&v| v as u64).collect::<Vec<_>>(),
                        )?;
                        Ok(None)
                    }),
                });
            }
        }
        SuiteName::Minkowski => {
            for ell in select_ells(scope, n_max)? {
                for kind in [PolytopeKind::Chain, PolytopeKind::Order] {
                    for m1 in 1..=m_max - 1 {
                        for m2 in 1..=m_max - m1 {
                            let ell = ell.clone();
                            cases.push(Case {
                                params: json!({
                                    "n": ell.n(), "i": ell.i(), "ell": ell.entries(),
                                    "kind": kind, "m1": m1, "m2": m2,
                                }),
                                run: Box::new(move || {
                                    let p = PosetP::new(&ell);
                                    expect_true(
                                        "lattice-point Minkowski identity",
                                        minkowski_check(&p, kind, m1, m2),
                                        json!("sum-set differs from the big dilation"),
                                    )?;
                                    Ok(None)
                                }),
                            });
                        }
                    }
                    for m in 2..=m_max {
                        let ell = ell.clone();
                        cases.push(Case {
                            params: json!({
                                "n": ell.n(), "i": ell.i(), "ell": ell.entries(),
                                "kind": kind, "m": m,
                            }),
                            run: Box::new(move || {
                                let p = PosetP::new(&ell);
                                for s in enumerate_points(&p, kind, m) {
                                    if decompose_into_units(&p, kind, &s, m).is_none() {
                                        return Err(fail(
                                            "every point of the m-dilation splits into m unit points",
                                            serde_json::to_value(&s).expect("serializable"),
                                            json!("no decomposition"),
                                        ));
                                    }
                                }
                                Ok(None)
                            }),
                        });
                    }
                }
            }
        }
        SuiteName::Facets => {
            for ell in select_ells(scope, n_max)? {
                if ell.vertex_count() == 0 {
                    continue;
                }
                cases.push(Case {
                    params: ell_params(&ell),
                    run: Box::new(move || {
                        let (order_closed, chain_closed) =
                            facet_counts_closed_form(&ell).expect("nonempty poset");
                        let p = PosetP::new(&ell);
                        let chain = chain_polytope(&p, 1);
                        let order = order_polytope(&p, 1);
                        expect_eq(
                            "closed-form facet counts match emitted inequality counts",
                            (order_closed, chain_closed),
                            (order.inequalities.len(), chain.inequalities.len()),
                        )?;
                        let chain_irr = irredundant_facet_count(&chain)
                            .map_err(|e| fail("facet rank", json!(e.to_string()), json!(null)))?;
                        let order_irr = irredundant_facet_count(&order)
                            .map_err(|e| fail("facet rank", json!(e.to_string()), json!(null)))?;
                        expect_eq(
                            "closed-form facet counts match irredundant inequality counts",
                            (order_closed, chain_closed),
                            (order_irr, chain_irr),
                        )?;
                        Ok(Some(json!({
                            "order_facets": order_closed,
                            "chain_facets": chain_closed,
                        })))
                    }),
                });
            }
        }
        SuiteName::Vertices => {
            for ell in select_ells(scope, n_max)? {
                cases.push(Case {
                    params: ell_params(&ell),
                    run: Box::new(move || {
                        let p = PosetP::new(&ell);
                        let chain = minuscule::polytope::vertex_sets(&p, PolytopeKind::Chain);
                        let order = minuscule::polytope::vertex_sets(&p, PolytopeKind::Order);
                        expect_eq("certified vertex counts coincide", chain.len(), order.len())?;
                        Ok(Some(json!({"vertices": chain.len()})))
                    }),
                });
            }
        }
        SuiteName::Unimodular => {
            for ell in select_ells(scope, n_max)? {
                if ell.vertex_count() == 0 {
                    continue;
                }
                cases.push(Case {
                    params: ell_params(&ell),
                    run: Box::new(move || {
                        let crit = unimodular_equivalence_criterion(&ell);
                        let (order_facets, chain_facets) =
                            facet_counts_closed_form(&ell).expect("nonempty");
                        expect_eq(
                            "sequence criterion iff equal facet counts",
                            crit,
                            order_facets == chain_facets,
                        )?;
                        let p = PosetP::new(&ell);
                        let fc = f_vector(&chain_polytope(&p, 1)).map_err(|e| {
                            fail("f-vector guard", json!(e.to_string()), json!(null))
                        })?;
                        let fo = f_vector(&order_polytope(&p, 1)).map_err(|e| {
                            fail("f-vector guard", json!(e.to_string()), json!(null))
                        })?;
                        expect_eq("sequence criterion iff equal f-vectors", crit, fc == fo)?;
                        Ok(None)
                    }),
                });
            }
        }
        SuiteName::Gorenstein => {
            for ell in select_ells(scope, n_max)? {
                cases.push(Case {
                    params: ell_params(&ell),
                    run: Box::new(move || {
                        let crit = gorenstein_criterion(&ell);
                        let p = PosetP::new(&ell);
                        expect_eq("criterion iff pure poset", crit, p.is_pure())?;
                        let chain = ehrhart(&p, PolytopeKind::Chain);
                        let order = ehrhart(&p, PolytopeKind::Order);
                        expect_eq(
                            "criterion iff palindromic h* (chain)",
                            crit,
                            hstar_palindromic(&chain),
                        )?;
                        expect_eq(
                            "criterion iff palindromic h* (order)",
                            crit,
                            hstar_palindromic(&order),
                        )?;
                        Ok(None)
                    }),
                });
            }
        }
        SuiteName::WeylBijection => {
            let ns: Vec<usize> = match scope.n {
                Some(n) => vec![n],
                None => (1..=n_max).collect(),
            };
            for n in ns {
                let is: Vec<usize> = match scope.i {
                    Some(i) if i >= 1 && i <= n => vec![i],
                    Some(_) => continue,
                    None => (1..=n).collect(),
                };
                for i in is {
                    cases.push(Case {
                        params: json!({"n": n, "i": i}),
                        run: Box::new(move || {
                            let reps = minimal_representatives(n, i);
                            let expected = minuscule::polytope::binomial(n + 1, i) as usize;
                            expect_eq("number of minimal representatives", reps.len(), expected)?;
                            let ells = LSequence::enumerate_for_i(i, n);
                            expect_eq("number of valid sequences", ells.len(), expected)?;
                            for w in &reps {
                                let ell = ell_of(w, i).map_err(|e| {
                                    fail("ell_of", json!(e.to_string()), json!(null))
                                })?;
                                let (word, back) = word_of_ell(&ell);
                                expect_eq(
                                    "ell -> word -> permutation round trip",
                                    back.window(),
                                    w.window(),
                                )?;
                                expect_eq(
                                    "word length equals N equals inversion count",
                                    (word.len(), inversion_roots(w).len()),
                                    (ell.vertex_count(), ell.vertex_count()),
                                )?;
                            }
                            Ok(None)
                        }),
                    });
                }
            }
        }
        SuiteName::PosetIso => {
            for ell in select_ells(scope, n_max)? {
                cases.push(Case {
                    params: ell_params(&ell),
                    run: Box::new(move || {
                        let (_, w) = word_of_ell(&ell);
                        let i = ell.i();
                        let inv = inversion_roots(&w);
                        let p = PosetP::new(&ell);
                        // Vertex sets coincide under alpha_{p,q} <-> x_{p,q}.
                        let vertex_set: BTreeSet<(usize, usize)> =
                            p.vertices().iter().copied().collect();
                        expect_eq("inversion roots match poset vertices", &inv.roots, &vertex_set)?;
                        // Order isomorphism: transitive closure of
                        // difference-is-a-root within the set matches geq.
                        let verts: Vec<(usize, usize)> = p.vertices().to_vec();
                        let sz = verts.len();
                        let mut rel = vec![vec![false; sz]; sz];
                        for a in 0..sz {
                            for b in 0..sz {
                                let (k1, j1) = verts[a];
                                let (k2, j2) = verts[b];
                                // alpha_a - alpha_b in R+ or zero
                                rel[a][b] = (a == b)
                                    || (k1 == k2 && j1 > j2)
                                    || (j1 == j2 && k1 < k2);
                            }
                        }
                        for mid in 0..sz {
                            for a in 0..sz {
                                for b in 0..sz {
                                    rel[a][b] |= rel[a][mid] && rel[mid][b];
                                }
                            }
                        }
                        for a in 0..sz {
                            for b in 0..sz {
                                if rel[a][b] != p.geq(a, b) {
                                    return Err(fail(
                                        "root order closure matches poset order",
                                        json!({"alpha": verts[a], "beta": verts[b], "root_leq": rel[a][b]}),
                                        json!(p.geq(a, b)),
                                    ));
                                }
                            }
                        }
                        // Closure property of the inversion set.
                        for k in 1..=i {
                            let lk = ell.ell_k(k);
                            if lk >= i {
                                for q in i..=lk {
                                    expect_true(
                                        "alpha_{k,p} inverted for i <= p <= l_k",
                                        inv.contains((k, q)),
                                        json!({"k": k, "p": q}),
                                    )?;
                                }
                                if k + 1 <= i && lk >= i {
                                    expect_true(
                                        "alpha_{k+1,l_k} inverted when k+1 <= i",
                                        lk < i || inv.contains((k + 1, lk)),
                                        json!({"k": k, "l_k": lk}),
                                    )?;
                                }
                            }
                        }
                        Ok(None)
                    }),
                });
            }
        }
        SuiteName::KoganMaximality => {
            let ns: Vec<usize> = match scope.n {
                Some(n) => vec![n],
                None => (2..=n_max).collect(),
            };
            for n in ns {
                let is: Vec<usize> = match scope.i {
                    Some(i) if i >= 1 && i <= n => vec![i],
                    Some(_) => continue,
                    None => (1..=n).collect(),
                };
                for i in is {
                    let ms: Vec<i64> = match scope.m {
                        Some(m) => vec![m],
                        None => (1..=m_max).collect(),
                    };
                    for m in ms {
                        cases.push(Case {
                            params: json!({"n": n, "i": i, "m": m}),
                            run: Box::new(move || {
                                let faces = enumerate_reduced_kogan_faces(n, i, m)
                                    .map_err(|e| fail("enumeration guard", json!(e.to_string()), json!(null)))?;
                                let w0 = longest_minimal_rep(n, i);
                                for ell in LSequence::enumerate_for_i(i, n) {
                                    let w = word_of_ell(&ell).1;
                                    let tau = w.compose(&w0.inverse());
                                    let maxf = maximal_kogan_face(&tau, n, i, m)
                                        .map_err(|e| fail("maximal face build", json!(e.to_string()), json!(null)))?;
                                    let max_pts: BTreeSet<_> =
                                        face_lattice_points(&maxf).into_iter().collect();
                                    let max_c = implicit_closure(&maxf).diagonal_counts;
                                    // gt-kog diagonal counts.
                                    let mut expect_c = vec![0usize; n + 1];
                                    for (k, e) in expect_c.iter_mut().enumerate() {
                                        *e = if k <= n - i {
                                            k + 1
                                        } else {
                                            n - ell.ell_k(k - (n - i))
                                        };
                                    }
                                    expect_eq("maximal-face diagonal counts", &max_c, &expect_c)?;
                                    for f in faces.iter().filter(|f| kogan_type(f).1 == tau) {
                                        let pts: BTreeSet<_> =
                                            face_lattice_points(f).into_iter().collect();
                                        expect_true(
                                            "face points contained in the maximal face",
                                            pts.is_subset(&max_pts),
                                            json!({"face": f.equalities, "tau_window": tau.window()}),
                                        )?;
                                        let c = implicit_closure(f).diagonal_counts;
                                        expect_true(
                                            "diagonal counts dominate the maximal face's",
                                            c.iter().zip(&max_c).all(|(a, b)| a >= b),
                                            json!({"face": f.equalities, "c": c, "c_tau": max_c}),
                                        )?;
                                    }
                                    // The coordinate isomorphism with the
                                    // order polytope is a point bijection.
                                    order_polytope_iso(&maxf).map_err(|e| {
                                        fail("order polytope isomorphism", json!(e.to_string()), json!(null))
                                    })?;
                                    // Operator images of the face fill the
                                    // Demazure crystal.
                                    let images: BTreeSet<Tableau> = face_lattice_points(&maxf)
                                        .iter()
                                        .map(|p| a_s_map(p, i, m))
                                        .collect::<Result<_, _>>()
                                        .map_err(|e| fail("operator map", json!(e.to_string()), json!(null)))?;
                                    let dc = demazure_crystal(&word_of_ell(&ell).0, n, i, m as usize)
                                        .map_err(|e| fail("crystal build", json!(e.to_string()), json!(null)))?;
                                    expect_true(
                                        "operator images of the maximal face equal the Demazure crystal",
                                        images == dc.elements,
                                        json!({"ell": ell.entries()}),
                                    )?;
                                }
                                Ok(None)
                            }),
                        });
                    }
                }
            }
        }
        SuiteName::Ladder => {
            let ns: Vec<usize> = match scope.n {
                Some(n) => vec![n],
                None => (2..=n_max).collect(),
            };
            for n in ns {
                let is: Vec<usize> = match scope.i {
                    Some(i) if i >= 1 && i <= n => vec![i],
                    Some(_) => continue,
                    None => (1..=n).collect(),
                };
                for i in is {
                    cases.push(Case {
                        params: json!({"n": n, "i": i}),
                        run: Box::new(move || {
                            let faces = enumerate_reduced_kogan_faces(n, i, 1).map_err(|e| {
                                fail("enumeration guard", json!(e.to_string()), json!(null))
                            })?;
                            for f in &faces {
                                for j in 0..n {
                                    for k in 1..=n {
                                        for l in 1..=n {
                                            if let Ok(moved) = ladder_move(f, j, k, l) {
                                                expect_eq(
                                                    "ladder moves preserve the face type",
                                                    kogan_type(&moved).1.window(),
                                                    kogan_type(f).1.window(),
                                                )?;
                                            }
                                        }
                                    }
                                }
                            }
                            Ok(None)
                        }),
                    });
                }
            }
        }
        SuiteName::CharacterTriple => {
            for ell in select_ells(scope, n_max)? {
                let ms: Vec<i64> = match scope.m {
                    Some(m) => vec![m],
                    None => (1..=m_max).collect(),
                };
                for m in ms {
                    let ell = ell.clone();
                    cases.push(Case {
                        params: ell_params_m(&ell, m),
                        run: Box::new(move || {
                            let n = ell.n();
                            let i = ell.i();
                            let (word, w) = word_of_ell(&ell);
                            let crystal_char = demazure_crystal(&word, n, i, m as usize)
                                .map_err(|e| {
                                    fail("crystal build", json!(e.to_string()), json!(null))
                                })?
                                .character(n);
                            let w0 = longest_minimal_rep(n, i);
                            let tau = w.compose(&w0.inverse());
                            let face = maximal_kogan_face(&tau, n, i, m).map_err(|e| {
                                fail("face build", json!(e.to_string()), json!(null))
                            })?;
                            let face_char = char_of_patterns(&face_lattice_points(&face));
                            let poly_char = character_via_polytope(&w, i, m).map_err(|e| {
                                fail("polytope char", json!(e.to_string()), json!(null))
                            })?;
                            expect_eq(
                                "crystal character equals Kogan-face character",
                                crystal_char.to_json(),
                                face_char.to_json(),
                            )?;
                            expect_eq(
                                "crystal character equals polytope character",
                                crystal_char.to_json(),
                                poly_char.to_json(),
                            )?;
                            Ok(Some(json!({"dimension": crystal_char.total()})))
                        }),
                    });
                }
            }
        }
        SuiteName::PbwBasis => {
            for ell in select_ells(scope, n_max)? {
                let ms: Vec<i64> = match scope.m {
                    Some(m) => vec![m],
                    None => (1..=m_max).collect(),
                };
                for m in ms {
                    let ell = ell.clone();
                    cases.push(Case {
                        params: ell_params_m(&ell, m),
                        run: Box::new(move || {
                            let n = ell.n();
                            let i = ell.i();
                            let (word, w) = word_of_ell(&ell);
                            let oracle = DemazureOracle::new(&w, i, m).map_err(|e| {
                                fail("oracle guard", json!(e.to_string()), json!(null))
                            })?;
                            let (ok, certs) = oracle.monomial_independence();
                            expect_true(
                                "chain monomials independent and spanning per degree",
                                ok,
                                serde_json::to_value(&certs).expect("serializable"),
                            )?;
                            let points = oracle.chain_points();
                            expect_eq(
                                "module dimension equals lattice-point count",
                                oracle.graded().total,
                                points.len(),
                            )?;
                            // Dimension chain continues through the crystal
                            // and the Kogan face.
                            let crystal =
                                demazure_crystal(&word, n, i, m as usize).map_err(|e| {
                                    fail("crystal build", json!(e.to_string()), json!(null))
                                })?;
                            expect_eq(
                                "crystal size equals lattice-point count",
                                crystal.len(),
                                points.len(),
                            )?;
                            let w0 = longest_minimal_rep(n, i);
                            let tau = w.compose(&w0.inverse());
                            let face = maximal_kogan_face(&tau, n, i, m).map_err(|e| {
                                fail("face build", json!(e.to_string()), json!(null))
                            })?;
                            expect_eq(
                                "Kogan-face point count equals lattice-point count",
                                face_lattice_points(&face).len(),
                                points.len(),
                            )?;
                            // Graded weight refinement.
                            let by_degree = oracle.graded_weight_characters();
                            let mut expected: Vec<Character> =
                                (0..by_degree.len()).map(|_| Character::new()).collect();
                            for s in &points {
                                let d = s.degree() as usize;
                                expected[d].add(oracle.point_weight(&s.entries));
                            }
                            expect_eq(
                                "graded weight multisets match the points",
                                by_degree.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                                expected.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                            )?;
                            // Conjugation: module weights = w^{-1}(crystal weights).
                            let winv = w.inverse();
                            let mut conj = Character::new();
                            for t in &crystal.elements {
                                conj.add(t.weight(n).permuted(&winv));
                            }
                            expect_eq(
                                "module weight multiset equals w^{-1} of crystal weights",
                                oracle.weight_character().to_json(),
                                conj.to_json(),
                            )?;
                            // Tensor-compatibility: unit sum-set stays inside
                            // the certified basis at m+1.
                            if m == 1 || (m == 2 && n <= 3) {
                                let bigger = DemazureOracle::new(&w, i, m + 1).map_err(|e| {
                                    fail("oracle guard", json!(e.to_string()), json!(null))
                                })?;
                                let (ok_big, _) = bigger.monomial_independence();
                                expect_true("independence at m+1", ok_big, json!(m + 1))?;
                                let big_set: BTreeSet<Vec<i64>> = bigger
                                    .chain_points()
                                    .into_iter()
                                    .map(|p| p.entries)
                                    .collect();
                                let units =
                                    enumerate_points(oracle.poset(), PolytopeKind::Chain, 1);
                                for s in &points {
                                    for u in &units {
                                        let sum = s.add(u);
                                        expect_true(
                                            "sum-set contained in the (m+1)-basis index set",
                                            big_set.contains(&sum.entries),
                                            serde_json::to_value(&sum).expect("serializable"),
                                        )?;
                                    }
                                }
                            }
                            Ok(None)
                        }),
                    });
                }
            }
        }
        SuiteName::Essential => {
            for ell in select_ells(scope, n_max)? {
                let ms: Vec<i64> = match scope.m {
                    Some(m) => vec![m],
                    None => (1..=m_max).collect(),
                };
                for m in ms {
                    let ell = ell.clone();
                    cases.push(Case {
                        params: ell_params_m(&ell, m),
                        run: Box::new(move || {
                            let (_, w) = word_of_ell(&ell);
                            let oracle = DemazureOracle::new(&w, ell.i(), m).map_err(|e| {
                                fail("oracle guard", json!(e.to_string()), json!(null))
                            })?;
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
                            expect_eq(
                                "essential monomials equal chain-polytope points",
                                essential,
                                chain,
                            )?;
                            Ok(None)
                        }),
                    });
                }
            }
        }
        SuiteName::Annihilation => {
            for ell in select_ells(scope, n_max)? {
                let ms: Vec<i64> = match scope.m {
                    Some(m) => vec![m],
                    None => (1..=m_max).collect(),
                };
                for m in ms {
                    let ell = ell.clone();
                    cases.push(Case {
                        params: ell_params_m(&ell, m),
                        run: Box::new(move || {
                            let (_, w) = word_of_ell(&ell);
                            let oracle = DemazureOracle::new(&w, ell.i(), m).map_err(|e| {
                                fail("oracle guard", json!(e.to_string()), json!(null))
                            })?;
                            expect_true(
                                "raising-operator orbit of the generators annihilates",
                                oracle.annihilation_check(),
                                json!(null),
                            )?;
                            Ok(None)
                        }),
                    });
                }
            }
        }
        SuiteName::BruhatShadow => {
            let ns: Vec<usize> = match scope.n {
                Some(n) => vec![n],
                None => (1..=n_max).collect(),
            };
            for n in ns {
                let is: Vec<usize> = match scope.i {
                    Some(i) if i >= 1 && i <= n => vec![i],
                    Some(_) => continue,
                    None => (1..=n).collect(),
                };
                for i in is {
                    cases.push(Case {
                        params: json!({"n": n, "i": i}),
                        run: Box::new(move || {
                            let reps = minimal_representatives(n, i);
                            for tau in &reps {
                                let ell_tau = ell_of(tau, i).expect("minimal rep");
                                let inv_tau = inversion_roots(tau);
                                let interval = if n <= 4 {
                                    Some(
                                        reps.iter()
                                            .map(|w| {
                                                bruhat_interval_by_subwords(w, i)
                                                    .map(|set| set.contains(tau))
                                            })
                                            .collect::<Result<Vec<bool>, _>>()
                                            .map_err(|e| {
                                                fail(
                                                    "oracle guard",
                                                    json!(e.to_string()),
                                                    json!(null),
                                                )
                                            })?,
                                    )
                                } else {
                                    None
                                };
                                for (idx, w) in reps.iter().enumerate() {
                                    let leq = bruhat_leq(tau, w, i).expect("minimal reps");
                                    let ell_w = ell_of(w, i).expect("minimal rep");
                                    let componentwise = ell_tau
                                        .entries()
                                        .iter()
                                        .zip(ell_w.entries())
                                        .all(|(a, b)| a <= b);
                                    expect_eq(
                                        "tableau criterion iff componentwise ell-domination",
                                        (tau.window(), w.window(), leq),
                                        (tau.window(), w.window(), componentwise),
                                    )?;
                                    let contained = inv_tau.is_subset(&inversion_roots(w));
                                    expect_eq(
                                        "tableau criterion iff inversion-set containment",
                                        leq,
                                        contained,
                                    )?;
                                    if leq && n <= 4 {
                                        // Zeroing the complementary coordinates
                                        // carves the small chain polytope out of
                                        // the big one (checked internally).
                                        let fr = face_restriction(tau, w, i, 1).map_err(|e| {
                                            fail(
                                                "face restriction",
                                                json!(e.to_string()),
                                                json!(null),
                                            )
                                        })?;
                                        expect_eq(
                                            "zero set size equals length difference",
                                            fr.zero_roots.len(),
                                            ell_w.vertex_count() - ell_tau.vertex_count(),
                                        )?;
                                    }
                                    if let Some(oracle) = &interval {
                                        expect_eq(
                                            "tableau criterion matches the subword oracle",
                                            leq,
                                            oracle[idx],
                                        )?;
                                    }
                                }
                            }
                            Ok(None)
                        }),
                    });
                }
            }
        }
    }
    Ok(cases)
}
