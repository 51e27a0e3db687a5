//! Exact arithmetic substrate: arbitrary-precision rationals, sparse
//! multivariate polynomials, dense univariate polynomials in the arc
//! parameter, and the symbolic identity checks built on them.

mod identities;
mod poly;
mod rational;

pub use identities::{
    coincidence_conditions, delta_poly, p0_q0, p1_q1, verify_prop22_identities, IdentityCheck,
    IdentityReport,
};
pub use poly::{t_strip, MultiPoly, UniPoly};
pub use rational::Rational;
