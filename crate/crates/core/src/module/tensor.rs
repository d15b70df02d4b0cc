use super::{Bimodule, Module, ModuleError, Side};
use crate::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use num_traits::Zero;

/// Tensor product over the ring, computed through the unitalization: the
/// plain tensor of the underlying groups modulo the balancing relations
/// `n·r ⊗ m − n ⊗ r·m` with `r` ranging over the ring basis (bilinearity
/// extends this finite relation set to the whole ring).
#[derive(Clone, Debug)]
pub struct Tensor {
    pub group: FgAbelianGroup,
    rows: usize,
    cols: usize,
}

impl Tensor {
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.rows && j < self.cols);
        i * self.cols + j
    }

    /// Class of a vector written on the elementary-pair presentation.
    pub fn class_of_pairs(&self, v: &[Int]) -> Vec<Int> {
        self.group.normalize(v)
    }

    /// Class of the elementary tensor of two generators.
    pub fn pure(&self, i: usize, j: usize) -> Vec<Int> {
        let mut v = vec![Int::zero(); self.rows * self.cols];
        v[self.pair_index(i, j)] = Int::from(1);
        self.class_of_pairs(&v)
    }

    /// Class of the tensor of two arbitrary elements.
    pub fn tensor_elems(&self, n: &[Int], m: &[Int]) -> Vec<Int> {
        let mut v = vec![Int::zero(); self.rows * self.cols];
        for i in 0..self.rows {
            if n[i].is_zero() {
                continue;
            }
            for j in 0..self.cols {
                if m[j].is_zero() {
                    continue;
                }
                v[self.pair_index(i, j)] += n[i].clone() * m[j].clone();
            }
        }
        self.class_of_pairs(&v)
    }

    /// Section: normalized tensor coordinates back to pair coordinates.
    pub fn lift(&self, t: &[Int]) -> Vec<Int> {
        self.group.lift_matrix().mul_vec(t)
    }

    /// Push a pair-space linear map `P` (codomain rows x pair coords) to a
    /// map out of the tensor group.
    pub fn induced_from_pairs(
        &self,
        codomain: &FgAbelianGroup,
        pair_map: &IntMatrix,
    ) -> Result<GroupHom, ModuleError> {
        let matrix = pair_map.mul(self.group.lift_matrix());
        GroupHom::new(self.group.clone(), codomain.clone(), matrix)
            .map_err(|_| ModuleError::NotAHom)
    }
}

/// `N ⊗_R M` for a right module `N` and a left module `M` over the same
/// ring. The result is an abelian group with pair bookkeeping.
pub fn tensor(n: &Module, m: &Module) -> Result<Tensor, ModuleError> {
    if n.ring() != m.ring() {
        return Err(ModuleError::RingMismatch);
    }
    if n.side() != Side::Right || m.side() != Side::Left {
        return Err(ModuleError::SideMismatch);
    }
    tensor_raw(n.group(), m.group(), n.actions(), m.actions())
}

/// Shared construction: `right_actions` act on the left factor from the
/// right, `left_actions` act on the right factor from the left, one per
/// ring basis element.
pub(crate) fn tensor_raw(
    ng: &FgAbelianGroup,
    mg: &FgAbelianGroup,
    n_actions: &[GroupHom],
    m_actions: &[GroupHom],
) -> Result<Tensor, ModuleError> {
    let (rows, cols) = (ng.num_gens(), mg.num_gens());
    let gens = rows * cols;
    let mut rel_rows: Vec<Vec<Int>> = Vec::new();
    // torsion of the plain tensor of groups
    for i in 0..rows {
        for j in 0..cols {
            let o = if ng.order(i).is_zero() {
                mg.order(j)
            } else if mg.order(j).is_zero() {
                ng.order(i)
            } else {
                num_integer::gcd(ng.order(i), mg.order(j))
            };
            if !o.is_zero() {
                let mut row = vec![Int::zero(); gens];
                row[i * cols + j] = o;
                rel_rows.push(row);
            }
        }
    }
    // balancing relations over the ring basis
    for (a_n, a_m) in n_actions.iter().zip(m_actions) {
        for i in 0..rows {
            for j in 0..cols {
                let mut row = vec![Int::zero(); gens];
                for ii in 0..rows {
                    let c = a_n.matrix()[(ii, i)].clone();
                    if !c.is_zero() {
                        row[ii * cols + j] += c;
                    }
                }
                for jj in 0..cols {
                    let c = a_m.matrix()[(jj, j)].clone();
                    if !c.is_zero() {
                        row[i * cols + jj] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rel_rows.push(row);
                }
            }
        }
    }
    let rel = if rel_rows.is_empty() {
        IntMatrix::zeros(0, gens)
    } else {
        IntMatrix::from_rows(rel_rows)
    };
    let group = FgAbelianGroup::from_presentation(&rel, gens);
    Ok(Tensor { group, rows, cols })
}

/// `B ⊗_{R''} M` as a left module over the left ring of the bimodule.
pub fn tensor_bimodule_left(b: &Bimodule, m: &Module) -> Result<(Module, Tensor), ModuleError> {
    if m.ring() != &b.right_ring || m.side() != Side::Left {
        return Err(ModuleError::RingMismatch);
    }
    let t = tensor_raw(&b.group, m.group(), &b.right_actions, m.actions())?;
    let cols = m.group().num_gens();
    let actions: Vec<GroupHom> = (0..b.left_ring.rank())
        .map(|r| {
            let a = b.left_actions[r].matrix();
            let pair_dim = b.group.num_gens() * cols;
            let mut pair_map = IntMatrix::zeros(pair_dim, pair_dim);
            for i in 0..b.group.num_gens() {
                for ii in 0..b.group.num_gens() {
                    if a[(ii, i)].is_zero() {
                        continue;
                    }
                    for j in 0..cols {
                        pair_map[(ii * cols + j, i * cols + j)] = a[(ii, i)].clone();
                    }
                }
            }
            let matrix = t
                .group
                .basis_transform()
                .mul(&pair_map)
                .mul(t.group.lift_matrix());
            GroupHom::new(t.group.clone(), t.group.clone(), matrix)
                .expect("left action descends to the tensor")
        })
        .collect();
    let module = Module::new(b.left_ring.clone(), Side::Left, t.group.clone(), actions)?;
    Ok((module, t))
}

/// `N ⊗_{R'} B` as a right module over the right ring of the bimodule.
pub fn tensor_right_bimodule(n: &Module, b: &Bimodule) -> Result<(Module, Tensor), ModuleError> {
    if n.ring() != &b.left_ring || n.side() != Side::Right {
        return Err(ModuleError::RingMismatch);
    }
    let t = tensor_raw(n.group(), &b.group, n.actions(), &b.left_actions)?;
    let rows = n.group().num_gens();
    let cols = b.group.num_gens();
    let actions: Vec<GroupHom> = (0..b.right_ring.rank())
        .map(|r| {
            let a = b.right_actions[r].matrix();
            let pair_dim = rows * cols;
            let mut pair_map = IntMatrix::zeros(pair_dim, pair_dim);
            for j in 0..cols {
                for jj in 0..cols {
                    if a[(jj, j)].is_zero() {
                        continue;
                    }
                    for i in 0..rows {
                        pair_map[(i * cols + jj, i * cols + j)] = a[(jj, j)].clone();
                    }
                }
            }
            let matrix = t
                .group
                .basis_transform()
                .mul(&pair_map)
                .mul(t.group.lift_matrix());
            GroupHom::new(t.group.clone(), t.group.clone(), matrix)
                .expect("right action descends to the tensor")
        })
        .collect();
    let module = Module::new(b.right_ring.clone(), Side::Right, t.group.clone(), actions)?;
    Ok((module, t))
}

#[cfg(test)]
mod tests {
    use super::super::test_rings::*;
    use super::*;
    use crate::ring::FiniteRankRing;

    #[test]
    fn coprime_torsion_tensor_vanishes_over_zero_ring() {
        let z = FiniteRankRing::zero_ring();
        let a = Module::null_module(
            &z,
            Side::Right,
            FgAbelianGroup::with_orders(0, vec![Int::from(2)]),
        );
        let b = Module::null_module(
            &z,
            Side::Left,
            FgAbelianGroup::with_orders(0, vec![Int::from(3)]),
        );
        let t = tensor(&a, &b).unwrap();
        assert!(t.group.is_trivial());
    }

    #[test]
    fn square_zero_self_tensor_is_free_of_rank_one() {
        // the single pair eps (x) eps has no balancing relations
        let s2 = square_zero_ring();
        let n = Module::regular(&s2, Side::Right);
        let m = Module::regular(&s2, Side::Left);
        let t = tensor(&n, &m).unwrap();
        assert_eq!(t.group.free_rank(), 1);
        assert!(t.group.invariant_factors().is_empty());
        assert!(!t.group.is_zero_elem(&t.pure(0, 0)));
    }

    #[test]
    fn self_tensor_of_row_ring_has_rank_two() {
        let d = left_unit_ring();
        let b = Bimodule::regular(&d);
        let m = Module::regular(&d, Side::Left);
        let (module, t) = tensor_bimodule_left(&b, &m).unwrap();
        assert_eq!(t.group.free_rank(), 2);
        assert!(t.group.invariant_factors().is_empty());
        // (v, u) and (v, v) die: v*anything = 0 pushes them across
        assert!(t.group.is_zero_elem(&t.pure(1, 0)));
        assert!(t.group.is_zero_elem(&t.pure(1, 1)));
        assert!(!module.is_null());
    }

    #[test]
    fn tensor_is_presentation_invariant() {
        // permuting the generator enumeration of a factor leaves the
        // invariant factors unchanged
        let d = left_unit_ring();
        let n = Module::regular(&d, Side::Right);
        let g = FgAbelianGroup::free(2);
        let swap = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let acts = vec![
            GroupHom::new(g.clone(), g.clone(), swap.mul(&d.left_mult(0)).mul(&swap)).unwrap(),
            GroupHom::new(g.clone(), g.clone(), swap.mul(&d.left_mult(1)).mul(&swap)).unwrap(),
        ];
        let m_perm = Module::new(d.clone(), Side::Left, g, acts).unwrap();
        let m = Module::regular(&d, Side::Left);
        let t1 = tensor(&n, &m).unwrap();
        let t2 = tensor(&n, &m_perm).unwrap();
        assert!(t1.group.is_isomorphic(&t2.group));
    }
}
