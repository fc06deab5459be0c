use thiserror::Error;

/// Errors surfaced by the library.
///
/// Pure combinatorial functions that cannot fail return plain values; the
/// variants below cover invalid inputs, violated preconditions and size
/// guards.
#[derive(Debug, Error)]
pub enum Error {
    /// An ascending-sequence invariant was violated; the message names the
    /// offending bound.
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    /// A window is not a permutation of 1..=n+1.
    #[error("invalid permutation window: {0}")]
    InvalidPermutation(String),

    /// A permutation is not the minimal representative of its coset.
    #[error("window {0:?} is not a minimal coset representative for i = {1}")]
    NotMinimalRep(Vec<usize>, usize),

    /// Bruhat comparability was required but does not hold.
    #[error("the two elements are not Bruhat-comparable in the required direction")]
    NotBruhatComparable,

    /// A reduced word was required.
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    /// The polytope has a direction in which no constraint bounds it.
    #[error("polytope is unbounded in coordinate {0}")]
    Unbounded(usize),

    /// A size guard was exceeded.
    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    /// A requested operation needs a nonempty poset.
    #[error("operation requires a nonempty poset: {0}")]
    EmptyPoset(String),

    /// Ladder-move preconditions failed; the message names the failing one.
    #[error("invalid ladder move: {0}")]
    InvalidLadderMove(String),

    /// The permutation is not of the bracket form required for a
    /// Gelfand-Tsetlin face of that type.
    #[error("permutation {0:?} is not of the bracket form w·w0^-1 for i = {1}")]
    NotBracketForm(Vec<usize>, usize),

    /// The Kogan face is not the maximal face of its type.
    #[error("Kogan face is not the maximal face of its type")]
    NotMaximalFace,

    /// A Kogan-face index pair falls outside the triangle.
    #[error("invalid Kogan equality position: {0}")]
    InvalidFacePosition(String),

    /// An argument failed validation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A Kashiwara operator chain hit null where the convention says it must
    /// not; this indicates a programming error, never bad user input.
    #[error("crystal operator application unexpectedly vanished: {0}")]
    ConventionViolation(String),
}
