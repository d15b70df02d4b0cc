use super::{kernel_basis, solve_diophantine, FgAbelianGroup};
use crate::{Int, IntMatrix};
use num_traits::Zero;

/// Homomorphism error: a matrix column sends a torsion generator to an
/// element not annihilated by its order.
#[derive(Debug, Clone)]
pub struct TorsionViolation {
    pub generator: usize,
    pub order: Int,
}

impl std::fmt::Display for TorsionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "image of generator {} of order {} is not annihilated by the order",
            self.generator, self.order
        )
    }
}

impl std::error::Error for TorsionViolation {}

/// Group homomorphism in normalized coordinates. The matrix is kept in
/// canonical form (torsion rows reduced), so equality of maps is equality
/// of matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupHom {
    domain: FgAbelianGroup,
    codomain: FgAbelianGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(
        domain: FgAbelianGroup,
        codomain: FgAbelianGroup,
        matrix: IntMatrix,
    ) -> Result<Self, TorsionViolation> {
        assert_eq!(matrix.rows(), codomain.num_gens());
        assert_eq!(matrix.cols(), domain.num_gens());
        for j in 0..domain.num_gens() {
            let o = domain.order(j);
            if o.is_zero() {
                continue;
            }
            let scaled: Vec<Int> = (0..codomain.num_gens())
                .map(|i| matrix[(i, j)].clone() * o.clone())
                .collect();
            if !codomain.is_zero_elem(&scaled) {
                return Err(TorsionViolation {
                    generator: j,
                    order: o,
                });
            }
        }
        let matrix = codomain.reduce_matrix(&matrix);
        Ok(GroupHom {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn identity(g: &FgAbelianGroup) -> Self {
        GroupHom {
            domain: g.clone(),
            codomain: g.clone(),
            matrix: IntMatrix::identity(g.num_gens()),
        }
    }

    pub fn zero(domain: &FgAbelianGroup, codomain: &FgAbelianGroup) -> Self {
        GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: IntMatrix::zeros(codomain.num_gens(), domain.num_gens()),
        }
    }

    pub fn domain(&self) -> &FgAbelianGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FgAbelianGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn eval(&self, v: &[Int]) -> Vec<Int> {
        self.codomain.reduce(&self.matrix.mul_vec(v))
    }

    pub fn is_zero_map(&self) -> bool {
        self.matrix.is_zero()
    }

    /// self ∘ other
    pub fn compose(&self, other: &GroupHom) -> GroupHom {
        assert!(
            other.codomain.is_isomorphic(&self.domain)
                && other.codomain.num_gens() == self.domain.num_gens(),
            "composition domain mismatch"
        );
        GroupHom {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.codomain.reduce_matrix(&self.matrix.mul(&other.matrix)),
        }
    }

    pub fn add(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.codomain.reduce_matrix(&self.matrix.add(&other.matrix)),
        }
    }

    pub fn sub(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.codomain.reduce_matrix(&self.matrix.sub(&other.matrix)),
        }
    }

    pub fn scale(&self, s: &Int) -> GroupHom {
        GroupHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.codomain.reduce_matrix(&self.matrix.scale(s)),
        }
    }

    /// One preimage of `v` (normalized codomain coords), if any.
    pub fn preimage(&self, v: &[Int]) -> Option<Vec<Int>> {
        let sys = self.matrix.hstack(&self.codomain.relation_lattice());
        let x = solve_diophantine(&sys, v).expect("shape checked")?;
        Some(self.domain.reduce(&x[..self.domain.num_gens()]))
    }

    /// Kernel subgroup with its inclusion.
    pub fn kernel(&self) -> (FgAbelianGroup, GroupHom) {
        let sys = self.matrix.hstack(&self.codomain.relation_lattice());
        let ker = kernel_basis(&sys);
        let span = IntMatrix::from_fn(self.domain.num_gens(), ker.cols(), |r, c| {
            ker[(r, c)].clone()
        });
        subgroup(&self.domain, &span)
    }

    /// Cokernel with the projection from the codomain.
    pub fn cokernel(&self) -> (FgAbelianGroup, GroupHom) {
        quotient(&self.codomain, &self.matrix)
    }

    /// Image subgroup with its inclusion into the codomain.
    pub fn image(&self) -> (FgAbelianGroup, GroupHom) {
        subgroup(&self.codomain, &self.matrix)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().0.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().0.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> GroupHom {
        assert!(self.is_isomorphism(), "inverse of a non-isomorphism");
        let m = self.codomain.num_gens();
        let mut cols = IntMatrix::zeros(self.domain.num_gens(), m);
        for i in 0..m {
            let mut e = vec![Int::zero(); m];
            e[i] = Int::from(1);
            let x = self.preimage(&e).expect("isomorphism is surjective");
            for r in 0..self.domain.num_gens() {
                cols[(r, i)] = x[r].clone();
            }
        }
        let inv = GroupHom::new(self.codomain.clone(), self.domain.clone(), cols)
            .expect("inverse respects torsion");
        debug_assert!(inv.compose(self).equals(&GroupHom::identity(&self.domain)));
        inv
    }

    /// Equality as maps: canonical matrices agree.
    pub fn equals(&self, other: &GroupHom) -> bool {
        self.matrix == other.matrix
    }
}

/// Subgroup of `ambient` generated by the columns of `span`, together with
/// the inclusion homomorphism. Coordinates are normalized ambient coords.
pub fn subgroup(ambient: &FgAbelianGroup, span: &IntMatrix) -> (FgAbelianGroup, GroupHom) {
    assert_eq!(span.rows(), ambient.num_gens());
    let s = span.cols();
    // relations among the chosen generators: integer combinations that die
    // in the ambient group
    let sys = span.hstack(&ambient.relation_lattice());
    let ker = kernel_basis(&sys);
    let rel_rows: Vec<Vec<Int>> = (0..ker.cols())
        .map(|c| (0..s).map(|r| ker[(r, c)].clone()).collect())
        .collect();
    let rel = if rel_rows.is_empty() {
        IntMatrix::zeros(0, s)
    } else {
        IntMatrix::from_rows(rel_rows)
    };
    let group = FgAbelianGroup::from_presentation(&rel, s);
    let incl_matrix = span.mul(group.lift_matrix());
    let incl = GroupHom::new(group.clone(), ambient.clone(), incl_matrix)
        .expect("subgroup inclusion respects torsion");
    (group, incl)
}

/// Quotient of `ambient` by the subgroup generated by the columns of
/// `span`, together with the projection onto it.
pub fn quotient(ambient: &FgAbelianGroup, span: &IntMatrix) -> (FgAbelianGroup, GroupHom) {
    assert_eq!(span.rows(), ambient.num_gens());
    let rel = span
        .transpose()
        .vstack(&ambient.relation_lattice().transpose());
    let group = FgAbelianGroup::from_presentation(&rel, ambient.num_gens());
    let proj = GroupHom::new(
        ambient.clone(),
        group.clone(),
        group.basis_transform().clone(),
    )
    .expect("quotient projection respects torsion");
    (group, proj)
}

/// Subquotient `ker(a) / im(b)` for a composable pair with `a ∘ b = 0`,
/// with the bookkeeping needed to map cycles to classes and back.
pub struct Subquotient {
    pub group: FgAbelianGroup,
    pub kernel_group: FgAbelianGroup,
    pub kernel_incl: GroupHom,
    /// presentation of `group` lives on the kernel's normalized generators
    class_proj: FgAbelianGroup,
}

impl Subquotient {
    /// Class of a cycle given in the middle group's coordinates.
    pub fn class_of(&self, cycle: &[Int]) -> Vec<Int> {
        let k = self
            .kernel_incl
            .preimage(cycle)
            .expect("vector is not a cycle");
        self.class_proj.normalize(&k)
    }

    /// A cycle representing the given homology class.
    pub fn representative(&self, class: &[Int]) -> Vec<Int> {
        let k = self.class_proj.lift_matrix().mul_vec(class);
        self.kernel_incl.eval(&k)
    }
}

/// Homology at the middle of `X --b--> Y --a--> Z`.
pub fn homology_of_pair(a: &GroupHom, b: &GroupHom) -> Subquotient {
    assert!(
        a.compose(b).is_zero_map(),
        "composite differential not zero"
    );
    let (kernel_group, kernel_incl) = a.kernel();
    // express boundary generators inside the kernel
    let cols = b.matrix().cols();
    let mut rel_rows = Vec::new();
    for c in 0..cols {
        let v: Vec<Int> = b.matrix().col(c);
        let v = a.domain().reduce(&v);
        let in_k = kernel_incl
            .preimage(&v)
            .expect("boundary lies in the kernel");
        rel_rows.push(in_k);
    }
    let boundary = if rel_rows.is_empty() {
        IntMatrix::zeros(0, kernel_group.num_gens())
    } else {
        IntMatrix::from_rows(rel_rows)
    };
    // the kernel's own torsion persists in the subquotient presentation
    let rel = boundary.vstack(&kernel_group.relation_lattice().transpose());
    let group = FgAbelianGroup::from_presentation(&rel, kernel_group.num_gens());
    Subquotient {
        class_proj: group.clone(),
        group,
        kernel_group,
        kernel_incl,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn z(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn torsion_respect_is_enforced() {
        let z2 = FgAbelianGroup::with_orders(0, vec![z(2)]);
        let zz = FgAbelianGroup::free(1);
        // Z/2 -> Z by 1 is not a homomorphism
        assert!(GroupHom::new(z2.clone(), zz.clone(), IntMatrix::from_i64(&[&[1]])).is_err());
        // Z -> Z/2 by anything is fine
        assert!(GroupHom::new(zz, z2, IntMatrix::from_i64(&[&[3]])).is_ok());
    }

    #[test]
    fn kernel_cokernel_of_multiplication_by_two() {
        let zz = FgAbelianGroup::free(1);
        let f = GroupHom::new(zz.clone(), zz.clone(), IntMatrix::from_i64(&[&[2]])).unwrap();
        let (k, _) = f.kernel();
        assert!(k.is_trivial());
        let (c, proj) = f.cokernel();
        assert_eq!(c.invariant_factors(), &[z(2)]);
        assert!(proj.is_surjective());
        assert!(!f.is_surjective());
        assert!(f.is_injective());
    }

    #[test]
    fn kernel_with_torsion_target() {
        // Z -> Z/4 by 2: kernel = 2Z (free of rank 1), image = Z/2
        let zz = FgAbelianGroup::free(1);
        let z4 = FgAbelianGroup::with_orders(0, vec![z(4)]);
        let f = GroupHom::new(zz, z4, IntMatrix::from_i64(&[&[2]])).unwrap();
        let (k, incl) = f.kernel();
        assert_eq!(k.free_rank(), 1);
        assert_eq!(incl.matrix()[(0, 0)].clone().abs(), z(2));
        let (im, _) = f.image();
        assert_eq!(im.invariant_factors(), &[z(2)]);
    }

    #[test]
    fn inverse_of_unimodular_map() {
        let g = FgAbelianGroup::free(2);
        let f = GroupHom::new(
            g.clone(),
            g.clone(),
            IntMatrix::from_i64(&[&[1, 1], &[0, 1]]),
        )
        .unwrap();
        assert!(f.is_isomorphism());
        let inv = f.inverse();
        assert!(f.compose(&inv).equals(&GroupHom::identity(&g)));
    }

    #[test]
    fn homology_of_two_step_complex() {
        // Z --2--> Z --0--> Z : homology at middle is Z/2
        let zz = FgAbelianGroup::free(1);
        let a = GroupHom::zero(&zz, &zz);
        let b = GroupHom::new(zz.clone(), zz.clone(), IntMatrix::from_i64(&[&[2]])).unwrap();
        let h = homology_of_pair(&a, &b);
        assert_eq!(h.group.invariant_factors(), &[z(2)]);
        // class mapping roundtrip
        let cls = h.class_of(&[z(1)]);
        assert!(!h.group.is_zero_elem(&cls));
        let rep = h.representative(&cls);
        let back = h.class_of(&rep);
        assert_eq!(back, cls);
    }

    #[test]
    fn quotient_projection() {
        let g = FgAbelianGroup::free(2);
        let span = IntMatrix::from_i64(&[&[2], &[0]]);
        let (q, proj) = quotient(&g, &span);
        assert_eq!(q.free_rank(), 1);
        assert_eq!(q.invariant_factors(), &[z(2)]);
        assert!(proj.is_surjective());
    }
}
