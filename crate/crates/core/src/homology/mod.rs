//! Free-resolution prefixes over unitalizations, Tor/Ext by resolving and
//! tensoring/Hom-ing, Koszul-complex homology for monomial level rings,
//! colimit Tor tables for chains, the Künneth comparison, and the
//! bar-complex homotopy for ring homomorphisms.

mod bar;
mod ind;
mod koszul;
mod kuenneth;

pub use bar::{bar_fragment_homotopy, BarReport};
pub use ind::{
    ind_tor_module_chain, ind_tor_ring_chain, koszul_transition_on_tor, ColimitVerdict,
    ModuleChain, TorRow, TorTable,
};
pub use koszul::{direct_sum_groups, koszul_chain_map, koszul_ext, koszul_tor, KoszulComplex};
pub use kuenneth::{kuenneth_check, KuennethLine};

use crate::module::{hom_group, tensor, FreeModule, Module, ModuleError, Side};
use crate::ring::Unitalization;
use crate::unitality::{Flag, UnitalityError};
use crate::zlinalg::homology_of_pair;
use crate::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use num_traits::Zero;

/// How the free cover enumerates kernel generators; the reversed order
/// produces a genuinely different resolution for independence checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PivotOrder {
    #[default]
    Forward,
    Reversed,
}

/// An exact prefix `F_L -> ... -> F_1 -> F_0 -> M -> 0` of a resolution of
/// `M` by finitely generated free modules over the unitalization.
pub struct ResolutionPrefix {
    pub target: Module,
    pub frees: Vec<FreeModule>,
    /// `differentials[i]` is `F_{i+1} -> F_i`
    pub differentials: Vec<GroupHom>,
    pub augmentation: GroupHom,
}

/// Free cover of a module over the unitalization: one free generator per
/// member of a pruned generating subset, with the evaluation surjection.
pub fn free_cover(unital: &Unitalization, m: &Module, order: PivotOrder) -> (FreeModule, GroupHom) {
    let chosen = m.generating_subset(order == PivotOrder::Reversed);
    let gens = chosen.len();
    let free = FreeModule::new(unital, m.side(), gens);
    let n = unital.rank();
    let mut pi = IntMatrix::zeros(m.group().num_gens(), n * gens);
    for (j, &gj) in chosen.iter().enumerate() {
        for t in 0..n {
            let col = if t == 0 {
                let mut e = vec![Int::zero(); m.group().num_gens()];
                e[gj] = Int::from(1);
                e
            } else {
                m.action(t - 1).matrix().col(gj)
            };
            for (r, c) in col.into_iter().enumerate() {
                pi[(r, j * n + t)] = c;
            }
        }
    }
    let pi = GroupHom::new(free.module.group().clone(), m.group().clone(), pi)
        .expect("cover respects torsion");
    (free, pi)
}

/// Build the prefix by repeatedly covering kernels; the kernels are
/// computed at the group level and re-presented as modules.
pub fn free_resolution_prefix(
    m: &Module,
    length: usize,
    order: PivotOrder,
) -> Result<ResolutionPrefix, ModuleError> {
    let unital = Unitalization::new(m.ring().clone());
    let (f0, aug) = free_cover(&unital, m, order);
    let mut frees = vec![f0];
    let mut differentials: Vec<GroupHom> = Vec::new();
    let mut prev_map = aug.clone();
    for _ in 0..length {
        let (_ker, incl) = prev_map.kernel();
        // present the kernel as a module inside the previous free module
        let prev_module = frees.last().expect("nonempty").module.clone();
        let (kmod, kincl) = prev_module.submodule(incl.matrix());
        let (fi, pi) = free_cover(&unital, &kmod, order);
        let d = kincl.hom().compose(&pi);
        // the inclusion is injective, so the kernel of the next step is the
        // kernel of the composite differential
        prev_map = d.clone();
        differentials.push(d);
        frees.push(fi);
    }
    Ok(ResolutionPrefix {
        target: m.clone(),
        frees,
        differentials,
        augmentation: aug,
    })
}

impl ResolutionPrefix {
    /// `d_{i} ∘ d_{i+1} = 0` and the augmentation kills `d_1`.
    pub fn verify_complex(&self) -> bool {
        if let Some(d1) = self.differentials.first() {
            if !self.augmentation.compose(d1).is_zero_map() {
                return false;
            }
        }
        for w in self.differentials.windows(2) {
            if !w[0].compose(&w[1]).is_zero_map() {
                return false;
            }
        }
        true
    }

    /// Exactness of the prefix: homology vanishes at every interior spot
    /// and the augmentation is surjective.
    pub fn verify_exact(&self) -> bool {
        if !self.verify_complex() {
            return false;
        }
        if !self.augmentation.is_surjective() {
            return false;
        }
        let mut maps = vec![self.augmentation.clone()];
        maps.extend(self.differentials.iter().cloned());
        for i in 0..maps.len() - 1 {
            let h = homology_of_pair(&maps[i], &maps[i + 1]);
            if !h.group.is_trivial() {
                return false;
            }
        }
        true
    }
}

/// `Tor_i` over the unitalization, computed by tensoring a resolution
/// prefix of the left module `b` with the right module `a`.
pub fn tor(
    i: usize,
    a: &Module,
    b: &Module,
    order: PivotOrder,
) -> Result<FgAbelianGroup, ModuleError> {
    if a.ring() != b.ring() {
        return Err(ModuleError::RingMismatch);
    }
    if a.side() != Side::Right || b.side() != Side::Left {
        return Err(ModuleError::SideMismatch);
    }
    let res = free_resolution_prefix(b, i + 1, order)?;
    // tensors of the resolution with induced differentials
    let mut tensors = Vec::new();
    for f in &res.frees {
        tensors.push(tensor(a, &f.module)?);
    }
    let ma = a.group().num_gens();
    let mut diffs: Vec<GroupHom> = Vec::new();
    for (j, d) in res.differentials.iter().enumerate() {
        let src = &tensors[j + 1];
        let dst = &tensors[j];
        let n_src = res.frees[j + 1].module.group().num_gens();
        let n_dst = res.frees[j].module.group().num_gens();
        let mut pair_map = IntMatrix::zeros(dst.group.num_gens(), ma * n_src);
        for p in 0..ma {
            for q in 0..n_src {
                let mut v = vec![Int::zero(); ma * n_dst];
                for r in 0..n_dst {
                    let c = d.matrix()[(r, q)].clone();
                    if !c.is_zero() {
                        v[p * n_dst + r] = c;
                    }
                }
                let cls = dst.class_of_pairs(&v);
                for (r, c) in cls.into_iter().enumerate() {
                    pair_map[(r, p * n_src + q)] = c;
                }
            }
        }
        diffs.push(src.induced_from_pairs(&dst.group, &pair_map)?);
    }
    if i == 0 {
        let zero = GroupHom::zero(&tensors[0].group, &FgAbelianGroup::trivial());
        return Ok(homology_of_pair(&zero, &diffs[0]).group);
    }
    Ok(homology_of_pair(&diffs[i - 1], &diffs[i]).group)
}

/// `Ext^i` over the unitalization, via Hom out of a resolution prefix of
/// the left module `a` into the left module `b`.
pub fn ext(
    i: usize,
    a: &Module,
    b: &Module,
    order: PivotOrder,
) -> Result<FgAbelianGroup, ModuleError> {
    if a.ring() != b.ring() {
        return Err(ModuleError::RingMismatch);
    }
    if a.side() != Side::Left || b.side() != Side::Left {
        return Err(ModuleError::SideMismatch);
    }
    let res = free_resolution_prefix(a, i + 1, order)?;
    let homs: Vec<_> = res
        .frees
        .iter()
        .map(|f| hom_group(&f.module, b))
        .collect::<Result<Vec<_>, _>>()?;
    // cochain maps: precompose with the differentials
    let mut deltas: Vec<GroupHom> = Vec::new();
    for (j, d) in res.differentials.iter().enumerate() {
        let src = &homs[j];
        let dst = &homs[j + 1];
        let mut cols = IntMatrix::zeros(dst.group.num_gens(), src.group.num_gens());
        for g in 0..src.group.num_gens() {
            let mut e = vec![Int::zero(); src.group.num_gens()];
            e[g] = Int::from(1);
            let f = src.matrix_of(&e);
            let composed = f.mul(d.matrix());
            let coords = dst
                .coords_of(&b.group().reduce_matrix(&composed))
                .ok_or(ModuleError::NotAHom)?;
            for (r, c) in coords.into_iter().enumerate() {
                cols[(r, g)] = c;
            }
        }
        deltas.push(
            GroupHom::new(src.group.clone(), dst.group.clone(), cols)
                .map_err(|_| ModuleError::NotAHom)?,
        );
    }
    if i == 0 {
        let zero = GroupHom::zero(&FgAbelianGroup::trivial(), &homs[0].group);
        return Ok(homology_of_pair(&deltas[0], &zero).group);
    }
    Ok(homology_of_pair(&deltas[i], &deltas[i - 1]).group)
}

/// The trivial module `Z` (the quotient of the unitalization by the ideal)
/// on the requested side.
pub fn trivial_integers(ring: &crate::ring::FiniteRankRing, side: Side) -> Module {
    Module::null_module(ring, side, FgAbelianGroup::free(1))
}

/// Homological t-unitality criterion for a ring: the first two Tor groups
/// of the trivial module against itself vanish over the unitalization.
pub fn t_unital_via_tor_ring(ring: &crate::ring::FiniteRankRing) -> Result<bool, ModuleError> {
    let zl = trivial_integers(ring, Side::Left);
    let zr = trivial_integers(ring, Side::Right);
    Ok(tor(1, &zr, &zl, PivotOrder::Forward)?.is_trivial()
        && tor(2, &zr, &zl, PivotOrder::Forward)?.is_trivial())
}

/// Homological t-unitality criterion for a left module: the trivial right
/// module tensors to zero against it in degrees 0 and 1.
pub fn t_unital_via_tor_module(m: &Module) -> Result<bool, ModuleError> {
    let zr = trivial_integers(m.ring(), Side::Right);
    Ok(tor(0, &zr, m, PivotOrder::Forward)?.is_trivial()
        && tor(1, &zr, m, PivotOrder::Forward)?.is_trivial())
}

/// All four vanishing statements for a null module over a t-unital ring:
/// the ideal tensors and Homs to zero in degrees 0 and 1.
pub struct NullVanishing {
    pub tensor_degree0: FgAbelianGroup,
    pub tor1: FgAbelianGroup,
    pub hom_degree0: FgAbelianGroup,
    pub ext1: FgAbelianGroup,
    pub all_zero: bool,
}

pub fn null_vanishing_check(n: &Module) -> Result<NullVanishing, UnitalityError> {
    if !crate::unitality::is_t_unital_ring(n.ring()) {
        return Err(UnitalityError::RingNotTUnital);
    }
    if !n.is_null() {
        return Err(UnitalityError::PreconditionFailed(
            "module is not null".into(),
        ));
    }
    if n.side() != Side::Left {
        return Err(UnitalityError::PreconditionFailed(
            "left module expected".into(),
        ));
    }
    let r_right = Module::regular(n.ring(), Side::Right);
    let r_left = Module::regular(n.ring(), Side::Left);
    let tensor_degree0 = tor(0, &r_right, n, PivotOrder::Forward)?;
    let tor1 = tor(1, &r_right, n, PivotOrder::Forward)?;
    let hom_degree0 = hom_group(&r_left, n)?.group;
    let ext1 = ext(1, &r_left, n, PivotOrder::Forward)?;
    let all_zero = tensor_degree0.is_trivial()
        && tor1.is_trivial()
        && hom_degree0.is_trivial()
        && ext1.is_trivial();
    Ok(NullVanishing {
        tensor_degree0,
        tor1,
        hom_degree0,
        ext1,
        all_zero,
    })
}

/// Cross-check container: the homological and definitional verdicts for
/// one ring.
pub struct TUnitalCross {
    pub definitional: Flag,
    pub homological: Flag,
    pub agree: bool,
}

pub fn t_unital_cross_check(
    ring: &crate::ring::FiniteRankRing,
) -> Result<TUnitalCross, ModuleError> {
    let def = crate::unitality::is_t_unital_ring(ring);
    let hom = t_unital_via_tor_ring(ring)?;
    Ok(TUnitalCross {
        definitional: Flag::from_bool(def),
        homological: Flag::from_bool(hom),
        agree: def == hom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::test_rings::*;
    use crate::ring::FiniteRankRing;

    fn z(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn resolution_of_trivial_module_is_exact() {
        let d = left_unit_ring();
        let m = trivial_integers(&d, Side::Left);
        let res = free_resolution_prefix(&m, 2, PivotOrder::Forward).unwrap();
        assert!(res.verify_complex());
        assert!(res.verify_exact());
        let rev = free_resolution_prefix(&m, 2, PivotOrder::Reversed).unwrap();
        assert!(rev.verify_exact());
    }

    #[test]
    fn resolution_of_torsion_null_module() {
        let d = left_unit_ring();
        let m = Module::null_module(&d, Side::Left, FgAbelianGroup::with_orders(0, vec![z(2)]));
        let res = free_resolution_prefix(&m, 1, PivotOrder::Forward).unwrap();
        assert!(res.verify_exact());
    }

    #[test]
    fn free_module_resolves_instantly() {
        let d = left_unit_ring();
        let u = Unitalization::new(d.clone());
        let f = FreeModule::new(&u, Side::Left, 1);
        let res = free_resolution_prefix(&f.module, 1, PivotOrder::Forward).unwrap();
        assert!(res.verify_exact());
        // Tor_1 against anything vanishes for a free module
        let a = Module::regular(&d, Side::Right);
        assert!(tor(1, &a, &f.module, PivotOrder::Forward)
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn tor_detects_t_unitality_of_the_row_ring() {
        let d = left_unit_ring();
        assert!(t_unital_via_tor_ring(&d).unwrap());
        let cross = t_unital_cross_check(&d).unwrap();
        assert!(cross.agree);
    }

    #[test]
    fn tor_degree_zero_is_the_tensor() {
        let d = left_unit_ring();
        let a = Module::regular(&d, Side::Right);
        let b = Module::regular(&d, Side::Left);
        let t0 = tor(0, &a, &b, PivotOrder::Forward).unwrap();
        let direct = tensor(&a, &b).unwrap();
        assert!(t0.is_isomorphic(&direct.group));
    }

    #[test]
    fn classical_ext_over_the_integers() {
        // over the zero ring, modules are abelian groups; Ext^1(Z/2, Z) = Z/2
        let zr = FiniteRankRing::zero_ring();
        let z2 = Module::null_module(&zr, Side::Left, FgAbelianGroup::with_orders(0, vec![z(2)]));
        let zz = Module::null_module(&zr, Side::Left, FgAbelianGroup::free(1));
        let e1 = ext(1, &z2, &zz, PivotOrder::Forward).unwrap();
        assert_eq!(e1.invariant_factors(), &[z(2)]);
        // and Ext^0 = Hom(Z/2, Z) = 0
        assert!(ext(0, &z2, &zz, PivotOrder::Forward).unwrap().is_trivial());
        // dual order: Ext^0(Z, Z/2) = Z/2
        let e0 = ext(0, &zz, &z2, PivotOrder::Forward).unwrap();
        assert_eq!(e0.invariant_factors(), &[z(2)]);
    }

    #[test]
    fn tor_is_resolution_independent_on_samples() {
        let d = left_unit_ring();
        let zl = trivial_integers(&d, Side::Left);
        let zr = trivial_integers(&d, Side::Right);
        for i in 0..=2 {
            let a = tor(i, &zr, &zl, PivotOrder::Forward).unwrap();
            let b = tor(i, &zr, &zl, PivotOrder::Reversed).unwrap();
            assert!(a.is_isomorphic(&b), "Tor_{i} differs between resolutions");
        }
    }

    #[test]
    fn null_vanishing_over_the_row_ring() {
        let d = left_unit_ring();
        let n = Module::null_module(&d, Side::Left, FgAbelianGroup::free(1));
        let v = null_vanishing_check(&n).unwrap();
        assert!(v.all_zero);
        let n2 = Module::null_module(
            &d.direct_product(&d.opposite()),
            Side::Left,
            FgAbelianGroup::with_orders(0, vec![z(2)]),
        );
        let v2 = null_vanishing_check(&n2).unwrap();
        assert!(v2.all_zero);
    }

    #[test]
    fn truncated_two_variable_positive_part_is_not_t_unital() {
        // positive part of Z[x,y] modulo (x,y)^3: rank five, not idempotent,
        // detected by Tor_1 over the rank-six unitalization
        let r = crate::corpus::rings::truncated_poly_ring();
        assert!(!r.is_idempotent());
        assert!(!t_unital_via_tor_ring(&r).unwrap());
        let cross = t_unital_cross_check(&r).unwrap();
        assert!(cross.agree);
    }
}
