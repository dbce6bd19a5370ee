//! Exact construction and verification of genus-2 curves with a degree-5
//! elliptic subcover.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: rationals, one-step quadratic extensions, sparse
//!   multivariate polynomials, rational functions, resultants.
//! * [`cover`]: the normalized degree-5 map `φ: P¹ → P¹` built from the
//!   parameters `(a, b)` and its ramification analysis.
//! * [`curve`]: the genus-2 curve `y² = x(x-1)g₃(x)` and its elliptic subcover.
//! * [`igusa`]: Igusa–Clebsch invariants, absolute invariants and a numeric
//!   reduced-automorphism oracle.
//! * [`loci`]: the degenerate loci, the `w`-tower and Nielsen class counts.
//! * [`verify`] and [`cli`]: verification suites and the command-line front end.

pub mod cli;
pub mod cover;
pub mod curve;
pub mod error;
pub mod exactalg;
pub mod report;
pub mod transcription;
pub mod igusa;
pub mod loci;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{MultiPoly, QuadExt, RatFunc, Rational, Scalar, UPoly, Var};
