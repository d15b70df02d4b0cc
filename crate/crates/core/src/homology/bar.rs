use crate::module::{tensor, Module, ModuleError, Side};
use crate::ring::RingHom;
use crate::unitality::UnitalityError;
use crate::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use num_traits::Zero;

/// Outcome of materializing the initial bar-complex fragment
/// `R⊗R⊗R -> R⊗R -> R -> 0` relative to a ring homomorphism `f: K -> R`
/// (all tensors over `K` through `f`), building the contracting homotopy
/// from the inverse of the unitality isomorphism, and checking the
/// homotopy identities entrywise.
#[derive(Debug)]
pub struct BarReport {
    /// `∂_1 ∘ h_0 = id` on the degree-zero term
    pub degree_zero_identity: bool,
    /// `∂_2 ∘ h_1 + h_0 ∘ ∂_1 = id` on the middle term
    pub homotopy_identity: bool,
    /// right exactness conclusion: the induced map from the cokernel of
    /// `∂_2` onto the ring is an isomorphism, i.e. the multiplication map
    /// of the ring is one
    pub conclusion_multiplication_iso: bool,
    /// cross-check against the definitional ring-level test
    pub cross_check_definitional: bool,
}

impl BarReport {
    pub fn all_verified(&self) -> bool {
        self.degree_zero_identity
            && self.homotopy_identity
            && self.conclusion_multiplication_iso
            && self.cross_check_definitional
    }
}

/// Restrict the codomain ring of `f` to a `K`-module on both sides.
fn scalars_through(f: &RingHom) -> (Module, Module) {
    let r = Module::regular(f.codomain(), Side::Left);
    let left = r.restrict_scalars(f).expect("ring hom is validated");
    let rr = Module::regular(f.codomain(), Side::Right);
    let right = rr.restrict_scalars(f).expect("ring hom is validated");
    (left, right)
}

pub fn bar_fragment_homotopy(f: &RingHom) -> Result<BarReport, UnitalityError> {
    let ring = f.codomain().clone();
    let k_ring = f.domain().clone();
    let kc = k_ring.rank();
    let krank = ring.rank();
    let (r_left_k, r_right_k) = scalars_through(f);

    // precondition: K ⊗_K R -> R is an isomorphism
    let k_reg_right = Module::regular(&k_ring, Side::Right);
    let t0 = tensor(&k_reg_right, &r_left_k).map_err(ModuleError::from_self)?;
    let mut mu0_pairs = IntMatrix::zeros(krank, kc * krank);
    for i in 0..kc {
        let fi = f.matrix().col(i);
        let lm = ring.left_mult_by(&fi);
        for j in 0..krank {
            for r in 0..krank {
                mu0_pairs[(r, i * krank + j)] = lm[(r, j)].clone();
            }
        }
    }
    let mu0 = t0
        .induced_from_pairs(&FgAbelianGroup::free(krank), &mu0_pairs)
        .map_err(ModuleError::from_self)?;
    if !mu0.is_isomorphism() {
        return Err(UnitalityError::PreconditionFailed(
            "the homomorphism is not left t-unital".into(),
        ));
    }

    // B1 = R ⊗_K R with the multiplication boundary to R
    let b1 = tensor(&r_right_k, &r_left_k).map_err(ModuleError::from_self)?;
    let rg = FgAbelianGroup::free(krank);
    let mut d1_pairs = IntMatrix::zeros(krank, krank * krank);
    for i in 0..krank {
        for j in 0..krank {
            let prod = ring.basis_product(i, j);
            for (r, c) in prod.into_iter().enumerate() {
                d1_pairs[(r, i * krank + j)] = c;
            }
        }
    }
    let d1 = b1
        .induced_from_pairs(&rg, &d1_pairs)
        .map_err(ModuleError::from_self)?;

    // B1 as a left K-module: k.(r ⊗ r') = (f(k) r) ⊗ r'
    let b1_actions: Vec<GroupHom> = (0..kc)
        .map(|i| {
            let lm = ring.left_mult_by(&f.matrix().col(i));
            let mut pair = IntMatrix::zeros(krank * krank, krank * krank);
            for a in 0..krank {
                for aa in 0..krank {
                    if lm[(aa, a)].is_zero() {
                        continue;
                    }
                    for j in 0..krank {
                        pair[(aa * krank + j, a * krank + j)] = lm[(aa, a)].clone();
                    }
                }
            }
            let m = b1
                .group
                .basis_transform()
                .mul(&pair)
                .mul(b1.group.lift_matrix());
            GroupHom::new(b1.group.clone(), b1.group.clone(), m)
                .expect("left action descends to the tensor")
        })
        .collect();
    let b1_mod = Module::new(k_ring.clone(), Side::Left, b1.group.clone(), b1_actions)
        .map_err(ModuleError::from_self)?;

    // B2 = R ⊗_K B1
    let b2 = tensor(&r_right_k, &b1_mod).map_err(ModuleError::from_self)?;
    let m1 = b1.group.num_gens();

    // ∂_2 : r' ⊗ (class of r'' ⊗ r''') -> r'r'' ⊗ r''' − r' ⊗ r''r'''
    let mut d2_pairs = IntMatrix::zeros(m1, krank * m1);
    for i in 0..krank {
        for q in 0..m1 {
            let mut eq = vec![Int::zero(); m1];
            eq[q] = Int::from(1);
            let lifted = b1.lift(&eq);
            let mut acc = vec![Int::zero(); m1];
            for j in 0..krank {
                for l in 0..krank {
                    let c = lifted[j * krank + l].clone();
                    if c.is_zero() {
                        continue;
                    }
                    // (b_i b_j) ⊗ b_l
                    let prod = ring.basis_product(i, j);
                    let mut el = vec![Int::zero(); krank];
                    el[l] = Int::from(1);
                    let t1 = b1.tensor_elems(&prod, &el);
                    // b_i ⊗ (b_j b_l)
                    let mut ei = vec![Int::zero(); krank];
                    ei[i] = Int::from(1);
                    let prod2 = ring.basis_product(j, l);
                    let t2 = b1.tensor_elems(&ei, &prod2);
                    for r in 0..m1 {
                        acc[r] += c.clone() * (t1[r].clone() - t2[r].clone());
                    }
                }
            }
            let acc = b1.group.reduce(&acc);
            for (r, c) in acc.into_iter().enumerate() {
                d2_pairs[(r, i * m1 + q)] = c;
            }
        }
    }
    let d2 = b2
        .induced_from_pairs(&b1.group, &d2_pairs)
        .map_err(ModuleError::from_self)?;

    // h_0 : R ≅ K ⊗_K R -> R ⊗_K R
    let mut f_tensor_id = IntMatrix::zeros(b1.group.num_gens(), kc * krank);
    for i in 0..kc {
        let fi = f.matrix().col(i);
        for j in 0..krank {
            let mut ej = vec![Int::zero(); krank];
            ej[j] = Int::from(1);
            let cls = b1.tensor_elems(&fi, &ej);
            for (r, c) in cls.into_iter().enumerate() {
                f_tensor_id[(r, i * krank + j)] = c;
            }
        }
    }
    let f_tensor_id = t0
        .induced_from_pairs(&b1.group, &f_tensor_id)
        .map_err(ModuleError::from_self)?;
    let h0 = f_tensor_id.compose(&mu0.inverse());

    // h_1 : B1 ≅ K ⊗_K B1 -> R ⊗_K B1 = B2
    let tk1 = tensor(&k_reg_right, &b1_mod).map_err(ModuleError::from_self)?;
    let mut mu1_pairs = IntMatrix::zeros(m1, kc * m1);
    for i in 0..kc {
        let act = b1_mod.action(i).matrix();
        for q in 0..m1 {
            for r in 0..m1 {
                mu1_pairs[(r, i * m1 + q)] = act[(r, q)].clone();
            }
        }
    }
    let mu1 = tk1
        .induced_from_pairs(&b1.group, &mu1_pairs)
        .map_err(ModuleError::from_self)?;
    if !mu1.is_isomorphism() {
        return Err(UnitalityError::PreconditionFailed(
            "the unitality isomorphism does not extend to the middle term".into(),
        ));
    }
    let mut f_id_id = IntMatrix::zeros(b2.group.num_gens(), kc * m1);
    for i in 0..kc {
        let fi = f.matrix().col(i);
        for q in 0..m1 {
            let mut eq = vec![Int::zero(); m1];
            eq[q] = Int::from(1);
            let cls = b2.tensor_elems(&fi, &eq);
            for (r, c) in cls.into_iter().enumerate() {
                f_id_id[(r, i * m1 + q)] = c;
            }
        }
    }
    let f_id_id = tk1
        .induced_from_pairs(&b2.group, &f_id_id)
        .map_err(ModuleError::from_self)?;
    let h1 = f_id_id.compose(&mu1.inverse());

    // identities, entrywise on normalized coordinates
    let degree_zero_identity = d1.compose(&h0).equals(&GroupHom::identity(&rg));
    let lhs = d2.compose(&h1).add(&h0.compose(&d1));
    let homotopy_identity = lhs.equals(&GroupHom::identity(&b1.group));

    // right exactness: coker(∂_2) maps isomorphically onto R under the
    // induced multiplication, which is the multiplication map of R ⊗_R R
    let (coker, proj) = d2.cokernel();
    let induced = d1.matrix().mul(coker.lift_matrix());
    let induced = GroupHom::new(coker.clone(), rg.clone(), induced)
        .map_err(|_| UnitalityError::Module(ModuleError::NotAHom))?;
    let _ = proj;
    let conclusion_multiplication_iso = induced.is_isomorphism();
    let cross_check_definitional = crate::unitality::is_t_unital_ring(&ring);

    Ok(BarReport {
        degree_zero_identity,
        homotopy_identity,
        conclusion_multiplication_iso,
        cross_check_definitional,
    })
}

trait FromSelf {
    fn from_self(e: ModuleError) -> UnitalityError;
}

impl FromSelf for ModuleError {
    fn from_self(e: ModuleError) -> UnitalityError {
        UnitalityError::Module(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::test_rings::*;
    use crate::ring::{a2_quiver_ring, FiniteRankRing, Unitalization};

    #[test]
    fn left_unit_target_splits() {
        // the map sending the generator of a rank-one idempotent ring to the
        // left unit induces a split bar fragment
        let d = left_unit_ring();
        let k = FiniteRankRing::from_i64(&["e"], &[&[&[1]]]).unwrap();
        let f = RingHom::new(k, d, IntMatrix::from_i64(&[&[1], &[0]])).unwrap();
        let rep = bar_fragment_homotopy(&f).unwrap();
        assert!(rep.degree_zero_identity);
        assert!(rep.homotopy_identity);
        assert!(rep.conclusion_multiplication_iso);
        assert!(rep.cross_check_definitional);
    }

    #[test]
    fn identity_on_a_unital_ring_splits_trivially() {
        let d = left_unit_ring();
        let full = Unitalization::new(d).full().clone();
        let f = RingHom::identity(&full);
        let rep = bar_fragment_homotopy(&f).unwrap();
        assert!(rep.all_verified());
    }

    #[test]
    fn full_idempotent_inclusion_into_quiver_ring() {
        let a2 = a2_quiver_ring();
        let k = FiniteRankRing::from_i64(&["e"], &[&[&[1]]]).unwrap();
        // e -> e_1 + e_2
        let mut col = IntMatrix::zeros(3, 1);
        for (i, c) in a2.idempotents.iter().flat_map(|e| e.iter().enumerate()) {
            col[(i, 0)] = col[(i, 0)].clone() + c.clone();
        }
        let f = RingHom::new(k, a2.ring.clone(), col).unwrap();
        let rep = bar_fragment_homotopy(&f).unwrap();
        assert!(rep.all_verified());
    }

    #[test]
    fn corner_inclusion_fails_the_precondition() {
        let a2 = a2_quiver_ring();
        let k = FiniteRankRing::from_i64(&["e"], &[&[&[1]]]).unwrap();
        let mut col = IntMatrix::zeros(3, 1);
        for (i, c) in a2.idempotents[0].iter().enumerate() {
            col[(i, 0)] = c.clone();
        }
        let f = RingHom::new(k, a2.ring.clone(), col).unwrap();
        assert!(matches!(
            bar_fragment_homotopy(&f),
            Err(UnitalityError::PreconditionFailed(_))
        ));
    }
}
