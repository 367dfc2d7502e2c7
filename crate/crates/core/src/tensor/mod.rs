//! Exact linear algebra on spaces with typed tensor legs.

mod field;
mod legs;
mod matrix;
mod poly;
mod random;
mod subspace;
mod word;

pub use field::{is_prime, FieldSpec, Rational, Scalar};
pub use legs::{flatten, total_dim, unflatten, LegMap, Space};
pub use matrix::Matrix;
pub use poly::{charpoly, eval_poly, minimal_polynomial};
pub use random::random_invertible;
pub use subspace::{image_basis, kernel_basis, solve, solve_linear, solve_many, Subspace};
pub use word::{sparse_diff_count, Embedded, SparseVec, Word};
