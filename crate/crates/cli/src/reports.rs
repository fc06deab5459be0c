//! Report documents: byte-deterministic JSON for one parameter set.

use clap::ValueEnum;
use minuscule::crystal::demazure_crystal;
use minuscule::gt::{
    face_lattice_points, gt_polytope, implicit_closure, maximal_kogan_face, order_polytope_iso,
};
use minuscule::polytope::{chain_polytope, count_points, ehrhart, order_polytope, PolytopeKind};
use minuscule::poset::{LSequence, PosetP};
use minuscule::weyl::{longest_minimal_rep, word_of_ell};
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportKind {
    /// Inequality systems, lattice-point counts and Ehrhart data.
    Polytope,
    /// The Demazure character (terms sorted lexicographically).
    Character,
    /// The maximal Kogan face of the matching type with its closure.
    KoganFace,
    /// The chain-polytope exponent vectors of the monomial basis.
    Basis,
    /// Window, favored word and inversion data.
    Weyl,
}

pub fn build_report(
    kind: ReportKind,
    n: usize,
    i: usize,
    ell: &[usize],
    m: i64,
) -> Result<Value, String> {
    let ell = LSequence::new(i, n, ell.to_vec()).map_err(|e| e.to_string())?;
    if m < 1 {
        return Err("m must be at least 1".into());
    }
    let context = json!({"n": n, "i": i, "ell": ell.entries(), "m": m});
    match kind {
        ReportKind::Polytope => {
            let p = PosetP::new(&ell);
            let chain = chain_polytope(&p, m);
            let order = order_polytope(&p, m);
            Ok(json!({
                "context": context,
                "poset": p.to_json(),
                "chain": chain,
                "order": order,
                "lattice_points_chain": count_points(&p, PolytopeKind::Chain, m) as u64,
                "lattice_points_order": count_points(&p, PolytopeKind::Order, m) as u64,
                "ehrhart_chain": ehrhart(&p, PolytopeKind::Chain).to_json(),
                "ehrhart_order": ehrhart(&p, PolytopeKind::Order).to_json(),
            }))
        }
        ReportKind::Character => {
            let (word, _) = word_of_ell(&ell);
            let crystal = demazure_crystal(&word, n, i, m as usize).map_err(|e| e.to_string())?;
            Ok(json!({
                "context": context,
                "dimension": crystal.len(),
                "character": crystal.character(n).to_json(),
            }))
        }
        ReportKind::KoganFace => {
            let (_, w) = word_of_ell(&ell);
            let w0 = longest_minimal_rep(n, i);
            let tau = w.compose(&w0.inverse());
            let face = maximal_kogan_face(&tau, n, i, m).map_err(|e| e.to_string())?;
            let closure = implicit_closure(&face);
            let iso = order_polytope_iso(&face).map_err(|e| e.to_string())?;
            Ok(json!({
                "context": context,
                "type_window": tau.window(),
                "equalities": face.equalities,
                "implicit": closure.implicit,
                "fixed_to_m": closure.fixed_m,
                "fixed_to_zero": closure.fixed_zero,
                "diagonal_counts": closure.diagonal_counts,
                "free_coordinates": iso.pairs,
                "lattice_points": face_lattice_points(&face).len(),
                "gt_polytope_dim": gt_polytope(n, i, m).dim,
            }))
        }
        ReportKind::Basis => {
            let p = PosetP::new(&ell);
            let points = chain_polytope(&p, m)
                .lattice_points()
                .expect("chain polytope is bounded");
            Ok(json!({
                "context": context,
                "coordinate_order": p.vertices(),
                "count": points.len(),
                "exponents": points,
            }))
        }
        ReportKind::Weyl => {
            let (word, w) = word_of_ell(&ell);
            Ok(json!({
                "context": context,
                "window": w.window(),
                "word": word.letters,
                "length": word.len(),
                "inversion_roots": minuscule::weyl::inversion_roots(&w),
            }))
        }
    }
}
