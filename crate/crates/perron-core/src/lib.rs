//! Exact-arithmetic search for minimal pseudo-Anosov stretch factors on
//! nonorientable surfaces and for orientation-reversing maps on
//! orientable surfaces, plus the explicit minimizing families.
//!
//! The crate has three layers:
//!
//! * exact algebra: integer polynomials, Newton's identities, cyclotomic
//!   stripping, integer-matrix characteristic polynomials, Sturm
//!   sequences ([`poly`], [`cyclotomic`], [`matrix`], [`sturm`]);
//! * numerics with conservative margins: Perron-root descent, full
//!   complex root sets, and the filter verdicts ([`roots`]);
//! * the applications: the elimination pipeline ([`search`]) and the
//!   curve-system constructions ([`constructions`]).

pub mod bounds;
pub mod constructions;
pub mod cyclotomic;
pub mod error;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod search;
pub mod sturm;

pub use poly::IntPolynomial;
