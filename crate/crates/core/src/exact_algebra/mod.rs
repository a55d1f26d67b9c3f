//! Exact arithmetic: big-integer matrices, Smith and Hermite normal forms,
//! full-rank lattices and Laurent polynomials in `v = q^{1/2}`.

mod lattice;
mod laurent;
mod matrix;
mod smith;

pub use lattice::Lattice;
pub use laurent::{rational_pow, LaurentPoly};
pub use matrix::{hermite_normal_form, IntMatrix};
pub use smith::{count_from_divisors, smith_normal_form, solution_count_mod_n, SmithDecomposition};
