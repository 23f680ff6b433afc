//! Exact scalars, polynomials, rational functions and the determinant and
//! root-counting kernels built on them.

mod intpoly;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod sturm;
pub mod wronskian;

pub use poly::{interpolate, poly_arith, ArithOp, Polynomial};
pub use ratfunc::{rf_normalize, RationalFunction};
pub use rational::{format_rational, parse_rational, Rational};
pub use sturm::sturm_positive_roots;
pub use wronskian::wronskian;
