//! Exact linear algebra over ℚ and ℚ(i): the substrate for everything else.
//! No floating point enters any rank or kernel decision.

mod gaussian;
mod lattice;
mod matrix;

pub use gaussian::{parse_rational, rat, rat_int, GaussianRational, Rational};
pub use lattice::{
    clear_denominators, content, hermite_normal_form, integer_kernel, integer_lattice_kernel,
    LatticeError,
};
pub use matrix::{ExactMatrix, Rref};
