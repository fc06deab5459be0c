//! Exact combinatorics for Demazure modules of Grassmannian Weyl group
//! elements: the poset attached to an ascending sequence, its chain and order
//! polytopes (lattice points, Ehrhart data, facet and vertex counts), the
//! Weyl group dictionary between sequences and minimal coset representatives,
//! Gelfand-Tsetlin polytopes with their Kogan faces, tableau crystals with
//! Kashiwara operators, and a brute-force linear-algebra oracle for
//! PBW-graded monomial bases.
//!
//! All arithmetic is exact (integers and rationals); nothing here floats.

pub mod crystal;
pub mod error;
pub mod gt;
pub mod jsonnum;
pub mod linalg;
pub mod pbw;
pub mod polytope;
pub mod poset;
pub mod weight;
pub mod weyl;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
