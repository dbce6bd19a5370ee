//! Exact arithmetic: rationals, one quadratic extension, sparse polynomials,
//! rational functions, resultants and square roots.

pub mod modular;
pub mod multipoly;
pub mod quadext;
pub mod ratfunc;
pub mod rational;
pub mod resultant;
pub mod roots;
pub mod scalar;
pub mod sqrt;
pub mod upoly;

pub use modular::{common_root_modular, CommonRoot};
pub use multipoly::{Monomial, MultiPoly, Var};
pub use quadext::QuadExt;
pub use ratfunc::RatFunc;
pub use rational::{q, Rational};
pub use resultant::{discriminant, gcd, multiplicity, pseudo_rem, resultant, resultant_sylvester};
pub use roots::quadratic_roots;
pub use scalar::Scalar;
pub use sqrt::{poly_sqrt, quartic_square_criterion};
pub use upoly::UPoly;

/// Shorthand for parsing a polynomial literal known to be well formed.
pub fn poly(s: &str) -> MultiPoly {
    MultiPoly::parse(s).unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}
