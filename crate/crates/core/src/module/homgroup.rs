use super::{Module, ModuleError};
use crate::ring::FiniteRankRing;
use crate::zlinalg::{image_basis, kernel_basis, solve_diophantine};
use crate::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use num_traits::Zero;

/// The group of module homomorphisms `L -> M`, solved as the subgroup of
/// group homomorphisms commuting with every action (an integer linear
/// system with torsion congruences), modulo the matrices representing the
/// zero map. Elements are addressed both abstractly (normalized group
/// coordinates) and concretely (representative matrices).
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub group: FgAbelianGroup,
    /// lattice basis of achievable matrices, one `vec(F)` per column
    basis: IntMatrix,
    /// generators of the zero-map lattice
    zero_lattice: IntMatrix,
    dom: FgAbelianGroup,
    cod: FgAbelianGroup,
}

impl HomGroup {
    pub fn dom(&self) -> &FgAbelianGroup {
        &self.dom
    }

    pub fn cod(&self) -> &FgAbelianGroup {
        &self.cod
    }

    fn vec_of(&self, f: &IntMatrix) -> Vec<Int> {
        let (mc, md) = (self.cod.num_gens(), self.dom.num_gens());
        assert_eq!((f.rows(), f.cols()), (mc, md));
        let mut v = Vec::with_capacity(mc * md);
        for i in 0..mc {
            for j in 0..md {
                v.push(f[(i, j)].clone());
            }
        }
        v
    }

    fn unvec(&self, v: &[Int]) -> IntMatrix {
        let (mc, md) = (self.cod.num_gens(), self.dom.num_gens());
        IntMatrix::from_fn(mc, md, |i, j| v[i * md + j].clone())
    }

    /// Representative matrix of a hom-group element.
    pub fn matrix_of(&self, coords: &[Int]) -> IntMatrix {
        let pres = self.group.lift_matrix().mul_vec(coords);
        let v = self.basis.mul_vec(&pres);
        self.cod.reduce_matrix(&self.unvec(&v))
    }

    /// Coordinates of a concrete matrix, if it lies in the hom lattice.
    pub fn coords_of(&self, f: &IntMatrix) -> Option<Vec<Int>> {
        let sys = self.basis.hstack(&self.zero_lattice);
        let sol = solve_diophantine(&sys, &self.vec_of(f)).expect("shapes agree")?;
        let pres = &sol[..self.basis.cols()];
        Some(self.group.normalize(pres))
    }

    /// The element as an actual group homomorphism.
    pub fn hom_of(&self, coords: &[Int]) -> GroupHom {
        GroupHom::new(self.dom.clone(), self.cod.clone(), self.matrix_of(coords))
            .expect("hom lattice elements respect torsion")
    }
}

/// Solve for `Hom_R(L, M)`; both modules must share the ring and side.
pub fn hom_group(l: &Module, m: &Module) -> Result<HomGroup, ModuleError> {
    if l.ring() != m.ring() {
        return Err(ModuleError::RingMismatch);
    }
    if l.side() != m.side() {
        return Err(ModuleError::SideMismatch);
    }
    let (dom, cod) = (l.group().clone(), m.group().clone());
    let (md, mc) = (dom.num_gens(), cod.num_gens());
    let nf = mc * md;
    let fidx = |i: usize, j: usize| i * md + j;

    // Unknowns: the nf matrix entries followed by slack variables, one per
    // torsion congruence. Rows are built as (coefficients on F | slacks).
    let mut rows: Vec<Vec<Int>> = Vec::new();
    let mut slack_count = 0usize;
    let push = |row: Vec<(usize, Int)>,
                slack_order: Option<Int>,
                rows: &mut Vec<Vec<Int>>,
                slack_count: &mut usize| {
        let mut r = vec![Int::zero(); nf];
        for (idx, c) in row {
            r[idx] += c;
        }
        if let Some(o) = slack_order {
            r.push(o);
            *slack_count += 1;
        }
        rows.push(r);
    };

    // torsion respect: o_j * F[i][j] ≡ 0 (mod order of codomain gen i)
    for j in 0..md {
        let oj = dom.order(j);
        if oj.is_zero() {
            continue;
        }
        for i in 0..mc {
            let oi = cod.order(i);
            let slack = if oi.is_zero() { None } else { Some(oi) };
            push(
                vec![(fidx(i, j), oj.clone())],
                slack,
                &mut rows,
                &mut slack_count,
            );
        }
    }
    // commutation with each action: F * A_r - B_r * F ≡ 0
    for r in 0..l.ring().rank() {
        let a = l.action(r).matrix();
        let b = m.action(r).matrix();
        for i in 0..mc {
            let oi = cod.order(i);
            for j in 0..md {
                let mut row: Vec<(usize, Int)> = Vec::new();
                for t in 0..md {
                    let c = a[(t, j)].clone();
                    if !c.is_zero() {
                        row.push((fidx(i, t), c));
                    }
                }
                for t in 0..mc {
                    let c = b[(i, t)].clone();
                    if !c.is_zero() {
                        row.push((fidx(t, j), -c));
                    }
                }
                let slack = if oi.is_zero() { None } else { Some(oi.clone()) };
                push(row, slack, &mut rows, &mut slack_count);
            }
        }
    }

    // pad rows to full width
    let width = nf + slack_count;
    let mut mat_rows = Vec::with_capacity(rows.len());
    let mut used = 0usize;
    for r in rows {
        let mut full = vec![Int::zero(); width];
        full[..nf].clone_from_slice(&r[..nf]);
        if r.len() > nf {
            full[nf + used] = r[nf].clone();
            used += 1;
        }
        mat_rows.push(full);
    }
    let system = if mat_rows.is_empty() {
        IntMatrix::zeros(0, width)
    } else {
        IntMatrix::from_rows(mat_rows)
    };

    let ker = kernel_basis(&system);
    let achievable = IntMatrix::from_fn(nf, ker.cols(), |r, c| ker[(r, c)].clone());
    let basis = image_basis(&achievable);

    // zero-map lattice: order(i) * E_ij for torsion codomain generators
    let mut zero_cols: Vec<Vec<Int>> = Vec::new();
    for i in 0..mc {
        let oi = cod.order(i);
        if oi.is_zero() {
            continue;
        }
        for j in 0..md {
            let mut v = vec![Int::zero(); nf];
            v[fidx(i, j)] = oi.clone();
            zero_cols.push(v);
        }
    }
    let zero_lattice = if zero_cols.is_empty() {
        IntMatrix::zeros(nf, 0)
    } else {
        IntMatrix::from_fn(nf, zero_cols.len(), |r, c| zero_cols[c][r].clone())
    };

    // quotient presentation: express each zero-lattice generator in the basis
    let mut rel_rows = Vec::new();
    for c in 0..zero_lattice.cols() {
        let target = zero_lattice.col(c);
        let sol = solve_diophantine(&basis, &target)
            .expect("shapes agree")
            .expect("zero maps satisfy the hom constraints");
        rel_rows.push(sol);
    }
    let rel = if rel_rows.is_empty() {
        IntMatrix::zeros(0, basis.cols())
    } else {
        IntMatrix::from_rows(rel_rows)
    };
    let group = FgAbelianGroup::from_presentation(&rel, basis.cols());

    Ok(HomGroup {
        group,
        basis,
        zero_lattice,
        dom,
        cod,
    })
}

/// Left module structure on a hom group induced by precomposition:
/// `(s . f)(x) = f(x . s)`. `precompose` holds, per basis element of
/// `ring`, the endomorphism of the hom DOMAIN that multiplies by it on the
/// appropriate side (right multiplication for the regular bimodule case).
pub fn hom_left_module_structure(
    hg: &HomGroup,
    ring: &FiniteRankRing,
    precompose: &[GroupHom],
) -> Result<Module, ModuleError> {
    let n = hg.group.num_gens();
    let actions: Vec<GroupHom> = (0..ring.rank())
        .map(|s| {
            let mut cols = IntMatrix::zeros(n, n);
            for g in 0..n {
                let mut e = vec![Int::zero(); n];
                e[g] = Int::from(1);
                let f = hg.matrix_of(&e);
                let shifted = f.mul(precompose[s].matrix());
                let coords = hg
                    .coords_of(&hg.cod().reduce_matrix(&shifted))
                    .ok_or(ModuleError::NotAHom)?;
                for i in 0..n {
                    cols[(i, g)] = coords[i].clone();
                }
            }
            GroupHom::new(hg.group.clone(), hg.group.clone(), cols)
                .map_err(|_| ModuleError::NotAHom)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Module::new(ring.clone(), super::Side::Left, hg.group.clone(), actions)
}

#[cfg(test)]
mod tests {
    use super::super::test_rings::*;
    use super::super::Side;
    use super::*;
    use crate::module::Module;

    /// Independent commutant-rank oracle: rational row reduction of the
    /// commutation system for free modules (no torsion).
    fn free_commutant_rank(
        acts_l: &[IntMatrix],
        acts_m: &[IntMatrix],
        md: usize,
        mc: usize,
    ) -> usize {
        // unknowns F (mc x md): rows of constraints as f64 is unsafe; use
        // exact fraction-free elimination over Int
        let nf = mc * md;
        let mut rows: Vec<Vec<Int>> = Vec::new();
        for (a, b) in acts_l.iter().zip(acts_m) {
            for i in 0..mc {
                for j in 0..md {
                    let mut row = vec![Int::zero(); nf];
                    for t in 0..md {
                        row[i * md + t] += a[(t, j)].clone();
                    }
                    for t in 0..mc {
                        row[t * md + j] -= b[(i, t)].clone();
                    }
                    rows.push(row);
                }
            }
        }
        let m = if rows.is_empty() {
            IntMatrix::zeros(0, nf)
        } else {
            IntMatrix::from_rows(rows)
        };
        let snf = crate::zlinalg::smith_normal_form(&m);
        nf - snf.rank()
    }

    #[test]
    fn endomorphisms_of_row_ring_regular_module() {
        // left module homs D -> D are all 2x2 matrices: the commutation
        // constraints are vacuous because left multiplications are I and 0
        let d = left_unit_ring();
        let m = Module::regular(&d, Side::Left);
        let hg = hom_group(&m, &m).unwrap();
        assert_eq!(hg.group.free_rank(), 4);
        let oracle = free_commutant_rank(
            &[d.left_mult(0), d.left_mult(1)],
            &[d.left_mult(0), d.left_mult(1)],
            2,
            2,
        );
        assert_eq!(oracle, 4);
    }

    #[test]
    fn hom_from_zero_module_is_zero() {
        let d = left_unit_ring();
        let zero = Module::null_module(&d, Side::Left, FgAbelianGroup::trivial());
        let m = Module::regular(&d, Side::Left);
        let hg = hom_group(&zero, &m).unwrap();
        assert!(hg.group.is_trivial());
    }

    #[test]
    fn square_zero_jordan_block_commutant() {
        // endomorphisms of the unitalization of the square-zero ring as a
        // module over it: matrices commuting with the nilpotent Jordan
        // block, a rank-2 lattice (scaling plus eps-multiple)
        let s2 = square_zero_ring();
        let g = FgAbelianGroup::free(2);
        let jordan = IntMatrix::from_i64(&[&[0, 0], &[1, 0]]);
        let m = Module::from_action_matrices(s2, Side::Left, g, vec![jordan]).unwrap();
        let hg = hom_group(&m, &m).unwrap();
        assert_eq!(hg.group.free_rank(), 2);
        assert!(hg.group.invariant_factors().is_empty());
    }

    #[test]
    fn literal_self_homs_of_square_zero_ideal() {
        // the ideal itself is rank 1 with zero action; every integer scalar
        // commutes, so the hom group is free of rank 1
        let s2 = square_zero_ring();
        let m = Module::regular(&s2, Side::Left);
        let hg = hom_group(&m, &m).unwrap();
        assert_eq!(hg.group.free_rank(), 1);
    }

    #[test]
    fn coords_matrix_roundtrip_with_torsion() {
        let d = left_unit_ring();
        // Z/2 with u acting as 1, v acting as 0
        let g = FgAbelianGroup::with_orders(0, vec![Int::from(2)]);
        let m = Module::from_action_matrices(
            d.clone(),
            Side::Left,
            g,
            vec![IntMatrix::identity(1), IntMatrix::zeros(1, 1)],
        )
        .unwrap();
        let hg = hom_group(&m, &m).unwrap();
        assert_eq!(hg.group.invariant_factors(), &[Int::from(2)]);
        let mut e = vec![Int::from(1)];
        let f = hg.matrix_of(&e);
        let back = hg.coords_of(&f).unwrap();
        e = hg.group.reduce(&e);
        assert_eq!(back, e);
    }
}
