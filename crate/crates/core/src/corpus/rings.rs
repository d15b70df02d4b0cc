//! The standing example rings used across the verification corpus.

use crate::ring::{a2_quiver_ring, CategoryRing, FiniteRankRing};
use crate::Int;
use num_traits::Zero;

/// Row-matrix ring: free of rank two on `u, v` with
/// `(a, b)(c, d) = (ac, ad)`. Left s-unital with unit `u`, not right
/// s-unital.
pub fn row_ring() -> FiniteRankRing {
    FiniteRankRing::from_i64(&["u", "v"], &[&[&[1, 0], &[0, 1]], &[&[0, 0], &[0, 0]]])
        .expect("the row-matrix table is associative")
}

/// Product of the row ring with its opposite: t-unital, s-unital on
/// neither side.
pub fn row_ring_times_opposite() -> FiniteRankRing {
    let d = row_ring();
    d.direct_product(&d.opposite())
}

/// Path ring of the one-arrow quiver, with its idempotent family.
pub fn quiver_ring() -> CategoryRing {
    a2_quiver_ring()
}

/// One-dimensional square-zero ring `Z·eps`, `eps^2 = 0`.
pub fn square_zero_ring() -> FiniteRankRing {
    FiniteRankRing::from_i64(&["eps"], &[&[&[0]]]).expect("square-zero")
}

/// Positive part of the two-variable polynomial ring truncated above total
/// degree two: basis `x, y, x2, xy, y2`; not idempotent, not t-unital, and
/// its unitalization-module is not flat.
pub fn truncated_poly_ring() -> FiniteRankRing {
    let k = 5usize;
    let mut structure = vec![vec![vec![Int::zero(); k]; k]; k];
    structure[0][0][2] = Int::from(1);
    structure[0][1][3] = Int::from(1);
    structure[1][0][3] = Int::from(1);
    structure[1][1][4] = Int::from(1);
    FiniteRankRing::new(
        vec![
            "x".into(),
            "y".into(),
            "x2".into(),
            "xy".into(),
            "y2".into(),
        ],
        structure,
    )
    .expect("truncation is associative")
}

/// The rings every batch suite iterates over, with stable display names.
pub fn corpus_rings() -> Vec<(&'static str, FiniteRankRing)> {
    vec![
        ("row", row_ring()),
        ("row-times-opposite", row_ring_times_opposite()),
        ("quiver", quiver_ring().ring),
        ("square-zero", square_zero_ring()),
    ]
}
