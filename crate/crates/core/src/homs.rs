//! Unitality of ring homomorphisms and the restriction-of-scalars transfer
//! statements, instantiated as executable checks.

use crate::module::{hom_unitality, left_unitality, right_unitality, Module, ModuleError, Side};
use crate::ring::RingHom;
use crate::unitality::{is_s_unital_ring, s_unital_witness, Flag};
use crate::{Int, IntMatrix};
use num_traits::Zero;

/// Flags of one ring homomorphism `f: K -> R`: s- and t-unitality of the
/// induced `K`-module structures on `R` from both sides, and whether the
/// products `K·R` lie inside `R·K`.
#[derive(Clone, Debug)]
pub struct HomReport {
    pub left_s: Flag,
    pub right_s: Flag,
    pub left_t: Flag,
    pub right_t: Flag,
    pub kr_in_rk: Flag,
    pub left_witness: Option<Vec<Int>>,
}

/// Restrict the codomain to a module over the domain on the given side.
pub fn restricted_regular(f: &RingHom, side: Side) -> Result<Module, ModuleError> {
    Module::regular(f.codomain(), side).restrict_scalars(f)
}

pub fn classify_ring_hom(f: &RingHom) -> Result<HomReport, ModuleError> {
    let left = restricted_regular(f, Side::Left)?;
    let right = restricted_regular(f, Side::Right)?;
    let left_witness = s_unital_witness(&left);
    let left_s = Flag::from_bool(left_witness.is_some());
    let right_s = Flag::from_bool(s_unital_witness(&right).is_some());
    let left_t = Flag::from_bool(left_unitality(&left)?.map.is_isomorphism());
    let right_t = Flag::from_bool(right_unitality(&right)?.map.is_isomorphism());

    // span of the products f(k_i) b_j against the span of b_j f(k_i)
    let ring = f.codomain();
    let krank = ring.rank();
    let mut kr_cols = Vec::new();
    let mut rk_cols = Vec::new();
    for i in 0..f.domain().rank() {
        let fi = f.matrix().col(i);
        for j in 0..krank {
            let mut ej = vec![Int::zero(); krank];
            ej[j] = Int::from(1);
            kr_cols.push(ring.mul(&fi, &ej));
            rk_cols.push(ring.mul(&ej, &fi));
        }
    }
    let rk = IntMatrix::from_fn(krank, rk_cols.len(), |r, c| rk_cols[c][r].clone());
    let ambient = crate::FgAbelianGroup::free(krank);
    let contained = kr_cols.iter().all(|v| ambient.span_contains(&rk, v));
    Ok(HomReport {
        left_s,
        right_s,
        left_t,
        right_t,
        kr_in_rk: Flag::from_bool(contained),
        left_witness,
    })
}

/// One instantiated transfer statement.
#[derive(Clone, Debug)]
pub struct PropVerdict {
    pub statement: String,
    pub verdict: Flag,
}

fn push(out: &mut Vec<PropVerdict>, statement: &str, verdict: Flag) {
    out.push(PropVerdict {
        statement: statement.to_string(),
        verdict,
    });
}

/// Instantiate the applicable transfer statements for `f` on the given test
/// modules over the codomain ring. Statements whose preconditions fail are
/// reported as not-applicable; a `False` verdict is a falsification.
pub fn verify_hom_propositions(
    f: &RingHom,
    test_modules: &[Module],
) -> Result<Vec<PropVerdict>, ModuleError> {
    let mut out = Vec::new();
    let rep = classify_ring_hom(f)?;
    let ring = f.codomain();

    // an s-unital homomorphism forces the ring to be s-unital on that side
    if rep.left_s.is_true() {
        let (rs, _) = is_s_unital_ring(ring, Side::Left);
        push(
            &mut out,
            "left s-unital map makes the ring left s-unital",
            Flag::from_bool(rs),
        );
    } else {
        push(
            &mut out,
            "left s-unital map makes the ring left s-unital",
            Flag::NotApplicable,
        );
    }
    if rep.right_s.is_true() {
        let (rs, _) = is_s_unital_ring(ring, Side::Right);
        push(
            &mut out,
            "right s-unital map makes the ring right s-unital",
            Flag::from_bool(rs),
        );
    } else {
        push(
            &mut out,
            "right s-unital map makes the ring right s-unital",
            Flag::NotApplicable,
        );
    }

    // for a left s-unital map, s-unitality over the two rings coincides on
    // left modules
    if rep.left_s.is_true() {
        let mut ok = true;
        for m in test_modules.iter().filter(|m| m.side() == Side::Left) {
            let over_r = s_unital_witness(m).is_some();
            let restricted = m.restrict_scalars(f)?;
            let over_k = s_unital_witness(&restricted).is_some();
            if over_r != over_k {
                ok = false;
            }
        }
        push(
            &mut out,
            "s-unitality over the two rings coincides on left test modules",
            Flag::from_bool(ok),
        );
    } else {
        push(
            &mut out,
            "s-unitality over the two rings coincides on left test modules",
            Flag::NotApplicable,
        );
    }

    // when K R lies in R K, t-unitality over K forces t-unitality over R for
    // right modules, and c-unitality transfers for left modules
    if rep.kr_in_rk.is_true() {
        let mut ok_t = true;
        let mut ok_c = true;
        for m in test_modules {
            match m.side() {
                Side::Right => {
                    let restricted = m.restrict_scalars(f)?;
                    let over_k = right_unitality(&restricted)?.map.is_isomorphism();
                    if over_k {
                        let over_r = right_unitality(m)?.map.is_isomorphism();
                        if !over_r {
                            ok_t = false;
                        }
                    }
                }
                Side::Left => {
                    let restricted = m.restrict_scalars(f)?;
                    let over_k = hom_unitality(&restricted)?.map.is_isomorphism();
                    if over_k {
                        let over_r = hom_unitality(m)?.map.is_isomorphism();
                        if !over_r {
                            ok_c = false;
                        }
                    }
                }
            }
        }
        push(
            &mut out,
            "with products contained, t-unitality ascends to the codomain on right modules",
            Flag::from_bool(ok_t),
        );
        push(
            &mut out,
            "with products contained, c-unitality ascends to the codomain on left modules",
            Flag::from_bool(ok_c),
        );
    } else {
        push(
            &mut out,
            "with products contained, t-unitality ascends to the codomain on right modules",
            Flag::NotApplicable,
        );
        push(
            &mut out,
            "with products contained, c-unitality ascends to the codomain on left modules",
            Flag::NotApplicable,
        );
    }

    // for a right t-unital map, t-unitality (right) and c-unitality (left)
    // agree over the two rings
    if rep.right_t.is_true() {
        let mut ok = true;
        for m in test_modules {
            match m.side() {
                Side::Right => {
                    let over_r = right_unitality(m)?.map.is_isomorphism();
                    let restricted = m.restrict_scalars(f)?;
                    let over_k = right_unitality(&restricted)?.map.is_isomorphism();
                    if over_r != over_k {
                        ok = false;
                    }
                }
                Side::Left => {
                    let over_r = hom_unitality(m)?.map.is_isomorphism();
                    let restricted = m.restrict_scalars(f)?;
                    let over_k = hom_unitality(&restricted)?.map.is_isomorphism();
                    if over_r != over_k {
                        ok = false;
                    }
                }
            }
        }
        push(
            &mut out,
            "for a right t-unital map the unitality flags agree over both rings",
            Flag::from_bool(ok),
        );
    } else {
        push(
            &mut out,
            "for a right t-unital map the unitality flags agree over both rings",
            Flag::NotApplicable,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::rings;
    use crate::ring::FiniteRankRing;

    #[test]
    fn unit_to_left_unit_flags() {
        let d = rings::row_ring();
        let k = FiniteRankRing::from_i64(&["e"], &[&[&[1]]]).unwrap();
        let f = RingHom::new(k, d, IntMatrix::from_i64(&[&[1], &[0]])).unwrap();
        let rep = classify_ring_hom(&f).unwrap();
        assert!(rep.left_s.is_true());
        assert!(!rep.right_s.is_true());
        assert!(rep.left_t.is_true());
        assert_eq!(rep.left_witness, Some(vec![Int::from(1)]));
        // u v = v is not a right multiple of u
        assert!(!rep.kr_in_rk.is_true());
    }

    #[test]
    fn identity_reproduces_ring_flags() {
        let d = rings::row_ring();
        let f = RingHom::identity(&d);
        let rep = classify_ring_hom(&f).unwrap();
        assert_eq!(rep.left_s.is_true(), is_s_unital_ring(&d, Side::Left).0);
        assert_eq!(rep.right_s.is_true(), is_s_unital_ring(&d, Side::Right).0);
        assert!(rep.kr_in_rk.is_true());
    }

    #[test]
    fn full_idempotent_inclusion_is_two_sided() {
        let cat = rings::quiver_ring();
        let k = FiniteRankRing::from_i64(&["e"], &[&[&[1]]]).unwrap();
        let mut col = IntMatrix::zeros(3, 1);
        for e in &cat.idempotents {
            for (i, c) in e.iter().enumerate() {
                col[(i, 0)] = col[(i, 0)].clone() + c.clone();
            }
        }
        let f = RingHom::new(k, cat.ring.clone(), col).unwrap();
        let rep = classify_ring_hom(&f).unwrap();
        assert!(rep.left_s.is_true() && rep.right_s.is_true());
        assert!(rep.left_t.is_true() && rep.right_t.is_true());
        assert!(rep.kr_in_rk.is_true());
    }

    #[test]
    fn propositions_hold_on_samples() {
        let d = rings::row_ring();
        let k = FiniteRankRing::from_i64(&["e"], &[&[&[1]]]).unwrap();
        let f = RingHom::new(k, d.clone(), IntMatrix::from_i64(&[&[1], &[0]])).unwrap();
        let mods = vec![
            Module::regular(&d, Side::Left),
            Module::regular(&d, Side::Right),
            Module::null_module(&d, Side::Left, crate::FgAbelianGroup::free(1)),
        ];
        let results = verify_hom_propositions(&f, &mods).unwrap();
        assert!(results.iter().all(|r| r.verdict != Flag::False));
    }
}
