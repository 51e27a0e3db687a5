//! Exact-arithmetic geometry of Pascal lines.
//!
//! Six labelled points on the conic `z0*z2 = z1^2` determine sixty Pascal
//! lines, one per arrangement class of the labels. This crate computes those
//! lines over the rationals with no rounding anywhere: the generic closed
//! form, the cross-hair construction with the tangent convention for doubled
//! points, degenerate evaluation on blow-up fibers via t-adic arc limits, the
//! full classification of the row-matched case, and the Kirkman/Steiner
//! incidence layer above the Pascals. Every classical statement involved is
//! an executable check (see [`verify`]).

pub mod exactalg;
pub mod hexagram;
mod linalg;
pub mod pascal;
pub mod projgeom;
pub mod sample;
pub mod sextuple;
pub mod symbols;
pub mod verify;

pub use exactalg::{MultiPoly, Rational, UniPoly};
pub use pascal::{
    classify_222, crosshair_pascal, crosshair_points, degenerate_pascal, eval_pascal,
    pascal_formula, Classification222, DegenerationSpec, FiberPoint, SymbolClass,
};
pub use projgeom::{
    join, meet, polar, polar_triangle, pole, tangent_at, tau, Mobius, P1Point, PlaneMap, ProjLine,
    ProjPoint,
};
pub use sextuple::{
    in_h_circ, in_polydiagonal, is_indeterminate, theta, tri_symmetric, Partition, Sextuple,
};
pub use symbols::{
    enumerate_symbols, indeterminacy_partitions, kirkman_triples, steiner_triples, KTriple, Letter,
    LetterPerm, PascalGrid, PascalSymbol, STriple,
};

/// Errors across the crate. Geometric "undefined element" conditions are
/// errors; indeterminacy of a Pascal is not (it is the `None` case of the
/// evaluators).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero tuple has no projective class")]
    ZeroTuple,
    #[error("coincident elements")]
    CoincidentElements,
    #[error("repeated points")]
    RepeatedPoints,
    #[error("repeated letter")]
    RepeatedLetter,
    #[error("indeterminate limit: arc lies inside the indeterminacy locus")]
    IndeterminateLimit,
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("polynomial is not univariate: contains `{0}`")]
    NotUnivariate(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("invalid degeneration spec: {0}")]
    InvalidSpec(String),
    #[error("fiber lies at a marked point; use L-line coordinates")]
    MarkedPoint,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
