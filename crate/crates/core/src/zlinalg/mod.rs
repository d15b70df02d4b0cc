//! Exact integer linear algebra: dense matrices, Smith normal form,
//! Diophantine solving, and finitely generated abelian groups presented by
//! relation matrices.
//!
//! The matrix type and the normal-form/solver routines are generic over the
//! scalar (anything implementing [`Scalar`], e.g. `i64` or `BigInt`); the
//! group layer is fixed at arbitrary precision.

mod group;
mod hom;
mod mat;
mod snf;

pub use group::{tensor_groups, FgAbelianGroup};
pub use hom::{homology_of_pair, quotient, subgroup, GroupHom, Subquotient, TorsionViolation};
pub use mat::{DimError, Mat};
pub use snf::{determinant, image_basis, kernel_basis, smith_normal_form, solve_diophantine, Snf};

use num_integer::Integer;
use num_traits::Signed;

/// Scalar bound for the generic linear-algebra kernel.
pub trait Scalar:
    Integer + Signed + Clone + std::fmt::Debug + std::fmt::Display + From<i64>
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + std::fmt::Debug + std::fmt::Display + From<i64>
{
}
