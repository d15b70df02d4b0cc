//! Exact computational algebra for nonunital rings and their modules.
//!
//! The crate decides unitality predicates (t-, s-, c-unital), homological
//! criteria (Tor/Ext vanishing), flatness/projectivity/injectivity in the
//! nonunital sense, and the equivalence identities between the categories of
//! t-unital and c-unital modules, for rings given by exact finite data:
//! integer structure constants, monomial level rings with fractional
//! exponents, and chains of such rings representing filtered colimits.
//!
//! All arithmetic is exact. The linear-algebra kernel in [`zlinalg`] is
//! generic over the integer scalar; everything above it is instantiated at
//! arbitrary precision via the [`Int`] alias because intermediate Smith
//! normal form entries overflow machine words even on small inputs.

pub mod corpus;
pub mod flatproj;
pub mod homology;
pub mod homs;
pub mod module;
pub mod ring;
pub mod schema;
pub mod unitality;
pub mod zlinalg;

/// The scalar used by every computation above the linear-algebra kernel.
pub type Int = num_bigint::BigInt;

/// Dense integer matrix at the crate's working precision.
pub type IntMatrix = zlinalg::Mat<Int>;

pub use zlinalg::{FgAbelianGroup, GroupHom};

/// Environment variable capping the number of levels in any chain
/// computation; a safety bound for the CLI and corpus runners.
pub const MAX_LEVEL_ENV: &str = "FIRMHOM_MAX_LEVEL";

/// Convert an `i64` to the working integer type.
pub fn int(n: i64) -> Int {
    Int::from(n)
}
