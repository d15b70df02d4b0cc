//! Modules over unitalizations that are finitely generated over the
//! integers: validated action endomorphisms, module homs, bimodules, free
//! modules, submodule/quotient constructions, and the tensor/Hom machinery
//! with its comparison maps.

mod degree;
mod homgroup;
mod maps;
mod nilpotent;
mod tensor;

pub use degree::{degree_comparison_upto, degree_component_tensor_square, DegreeComponent};
pub use homgroup::{hom_group, hom_left_module_structure, HomGroup};
pub use maps::{
    check_tensor_associativity, check_tensor_hom_adjunction, hom_unitality, left_unitality,
    right_unitality, HomUnitality, TensorUnitality,
};
pub use nilpotent::{prufer_module, NilModule};
pub use tensor::{tensor, tensor_bimodule_left, tensor_right_bimodule, Tensor};

use crate::ring::{FiniteRankRing, RingHom, Unitalization};
use crate::zlinalg::{quotient, subgroup};
use crate::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use num_traits::Zero;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone)]
pub enum ModuleError {
    /// `action(b_i)` and `action(b_j)` do not satisfy the structure-constant
    /// relation on the group generators.
    ActionIncompatibility {
        i: usize,
        j: usize,
    },
    RingMismatch,
    SideMismatch,
    ShapeMismatch(String),
    /// A comparison map failed to land in the expected hom lattice.
    NotAHom,
    NonNilpotentAction {
        var: usize,
    },
    DegreeDenominator {
        den: u64,
        level: u32,
    },
}

impl std::fmt::Display for ModuleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModuleError::ActionIncompatibility { i, j } => write!(
                f,
                "actions of basis elements {i} and {j} violate the ring relations"
            ),
            ModuleError::RingMismatch => write!(f, "modules are over different rings"),
            ModuleError::SideMismatch => write!(f, "module side does not match the operation"),
            ModuleError::ShapeMismatch(s) => write!(f, "shape mismatch: {s}"),
            ModuleError::NotAHom => write!(f, "map does not commute with the module actions"),
            ModuleError::NonNilpotentAction { var } => {
                write!(f, "action of variable {var} is not nilpotent")
            }
            ModuleError::DegreeDenominator { den, level } => {
                write!(
                    f,
                    "degree denominator {den} does not divide the level {level}"
                )
            }
        }
    }
}

impl std::error::Error for ModuleError {}

/// Nonunital module over a finite-rank ring, i.e. a unital module over the
/// unitalization whose underlying group is finitely generated. The unit acts
/// as the identity implicitly; `actions` holds one endomorphism per base
/// ring basis element.
#[derive(Clone, Debug)]
pub struct Module {
    ring: FiniteRankRing,
    side: Side,
    group: FgAbelianGroup,
    actions: Vec<GroupHom>,
}

impl Module {
    pub fn new(
        ring: FiniteRankRing,
        side: Side,
        group: FgAbelianGroup,
        actions: Vec<GroupHom>,
    ) -> Result<Self, ModuleError> {
        if actions.len() != ring.rank() {
            return Err(ModuleError::ShapeMismatch(format!(
                "need {} actions, got {}",
                ring.rank(),
                actions.len()
            )));
        }
        for a in &actions {
            if a.domain().num_gens() != group.num_gens()
                || a.codomain().num_gens() != group.num_gens()
            {
                return Err(ModuleError::ShapeMismatch(
                    "actions must be endomorphisms of the module group".into(),
                ));
            }
        }
        let m = Module {
            ring,
            side,
            group,
            actions,
        };
        m.check_compatibility()?;
        Ok(m)
    }

    pub fn from_action_matrices(
        ring: FiniteRankRing,
        side: Side,
        group: FgAbelianGroup,
        matrices: Vec<IntMatrix>,
    ) -> Result<Self, ModuleError> {
        let actions = matrices
            .into_iter()
            .map(|m| GroupHom::new(group.clone(), group.clone(), m))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ModuleError::ShapeMismatch("action violates torsion orders".into()))?;
        Module::new(ring, side, group, actions)
    }

    fn check_compatibility(&self) -> Result<(), ModuleError> {
        let k = self.ring.rank();
        for i in 0..k {
            for j in 0..k {
                // b_i b_j acting: for left modules compose i after j, for
                // right modules j after i
                let composed = match self.side {
                    Side::Left => self.actions[i].compose(&self.actions[j]),
                    Side::Right => self.actions[j].compose(&self.actions[i]),
                };
                let mut expected = GroupHom::zero(&self.group, &self.group);
                let coeffs = self.ring.basis_product(i, j);
                for (l, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        expected = expected.add(&self.actions[l].scale(c));
                    }
                }
                if !composed.equals(&expected) {
                    return Err(ModuleError::ActionIncompatibility { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &FiniteRankRing {
        &self.ring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn action(&self, i: usize) -> &GroupHom {
        &self.actions[i]
    }

    pub fn actions(&self) -> &[GroupHom] {
        &self.actions
    }

    /// Action of an arbitrary ring element.
    pub fn action_of(&self, x: &[Int]) -> GroupHom {
        let mut out = GroupHom::zero(&self.group, &self.group);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.actions[i].scale(c));
            }
        }
        out
    }

    /// The ring acts by zero.
    pub fn is_null(&self) -> bool {
        self.actions.iter().all(GroupHom::is_zero_map)
    }

    /// The ring acting on itself.
    pub fn regular(ring: &FiniteRankRing, side: Side) -> Module {
        let group = FgAbelianGroup::free(ring.rank());
        let actions = (0..ring.rank())
            .map(|i| {
                let m = match side {
                    Side::Left => ring.left_mult(i),
                    Side::Right => ring.right_mult(i),
                };
                GroupHom::new(group.clone(), group.clone(), m).expect("free group")
            })
            .collect();
        Module::new(ring.clone(), side, group, actions).expect("ring acts on itself")
    }

    /// Any group with the zero action.
    pub fn null_module(ring: &FiniteRankRing, side: Side, group: FgAbelianGroup) -> Module {
        let actions = (0..ring.rank())
            .map(|_| GroupHom::zero(&group, &group))
            .collect();
        Module::new(ring.clone(), side, group, actions).expect("zero actions are compatible")
    }

    /// Direct sum with the canonical injections.
    pub fn direct_sum(parts: &[&Module]) -> Result<(Module, Vec<ModuleHom>), ModuleError> {
        let first = parts.first().expect("nonempty direct sum");
        let ring = first.ring.clone();
        let side = first.side;
        for p in parts {
            if p.ring != ring {
                return Err(ModuleError::RingMismatch);
            }
            if p.side != side {
                return Err(ModuleError::SideMismatch);
            }
        }
        // a direct-sum group in normalized coordinates must re-sort orders;
        // work on the concatenated presentation instead
        let total: usize = parts.iter().map(|p| p.group.num_gens()).sum();
        let mut rel_rows = Vec::new();
        let mut offset = 0usize;
        let mut offsets = Vec::new();
        for p in parts {
            offsets.push(offset);
            for (i, o) in p.group.orders().iter().enumerate() {
                if !o.is_zero() {
                    let mut row = vec![Int::zero(); total];
                    row[offset + i] = o.clone();
                    rel_rows.push(row);
                }
            }
            offset += p.group.num_gens();
        }
        let rel = if rel_rows.is_empty() {
            IntMatrix::zeros(0, total)
        } else {
            IntMatrix::from_rows(rel_rows)
        };
        let group = FgAbelianGroup::from_presentation(&rel, total);
        let actions: Vec<GroupHom> = (0..ring.rank())
            .map(|r| {
                // block diagonal action in presentation coordinates
                let mut block = IntMatrix::zeros(total, total);
                for (pi, p) in parts.iter().enumerate() {
                    let a = p.action(r).matrix();
                    for i in 0..a.rows() {
                        for j in 0..a.cols() {
                            block[(offsets[pi] + i, offsets[pi] + j)] = a[(i, j)].clone();
                        }
                    }
                }
                let normd = group.basis_transform().mul(&block).mul(group.lift_matrix());
                GroupHom::new(group.clone(), group.clone(), normd).expect("sum action")
            })
            .collect();
        let module = Module::new(ring, side, group.clone(), actions)?;
        let injections = parts
            .iter()
            .enumerate()
            .map(|(pi, p)| {
                let mut emb = IntMatrix::zeros(total, p.group.num_gens());
                for i in 0..p.group.num_gens() {
                    emb[(offsets[pi] + i, i)] = Int::from(1);
                }
                let hom = GroupHom::new(
                    p.group.clone(),
                    group.clone(),
                    group.basis_transform().mul(&emb),
                )
                .expect("injection");
                ModuleHom::new(p, &module, hom).expect("injection is a module hom")
            })
            .collect();
        Ok((module, injections))
    }

    /// Close a set of elements under the ring action; returns a spanning
    /// matrix of the generated submodule.
    pub fn submodule_span(&self, seeds: &[Vec<Int>]) -> IntMatrix {
        let m = self.group.num_gens();
        let mut span = IntMatrix::zeros(m, 0);
        self.extend_span(&mut span, seeds);
        span
    }

    fn extend_span(&self, span: &mut IntMatrix, seeds: &[Vec<Int>]) {
        let mut frontier: Vec<Vec<Int>> = seeds.to_vec();
        while let Some(v) = frontier.pop() {
            let v = self.group.reduce(&v);
            if self.group.span_contains(span, &v) {
                continue;
            }
            *span = span.hstack(&IntMatrix::col_vector(v.clone()));
            for a in &self.actions {
                frontier.push(a.eval(&v));
            }
        }
    }

    /// A generating subset of the group generators, scanned in the given
    /// direction: a generator is skipped when the previously kept ones
    /// already generate it. Keeps free covers small.
    pub fn generating_subset(&self, reversed: bool) -> Vec<usize> {
        let m = self.group.num_gens();
        let order: Vec<usize> = if reversed {
            (0..m).rev().collect()
        } else {
            (0..m).collect()
        };
        let mut span = IntMatrix::zeros(m, 0);
        let mut chosen = Vec::new();
        for j in order {
            let mut e = vec![Int::zero(); m];
            e[j] = Int::from(1);
            if self.group.span_contains(&span, &e) {
                continue;
            }
            chosen.push(j);
            self.extend_span(&mut span, &[e]);
        }
        chosen
    }

    /// Submodule generated by the span, with induced actions.
    pub fn submodule(&self, span: &IntMatrix) -> (Module, ModuleHom) {
        let span = self.submodule_span(&(0..span.cols()).map(|c| span.col(c)).collect::<Vec<_>>());
        let (sub, incl) = subgroup(&self.group, &span);
        let actions: Vec<GroupHom> = self
            .actions
            .iter()
            .map(|a| {
                let mut cols = IntMatrix::zeros(sub.num_gens(), sub.num_gens());
                for j in 0..sub.num_gens() {
                    let mut e = vec![Int::zero(); sub.num_gens()];
                    e[j] = Int::from(1);
                    let img = a.eval(&incl.eval(&e));
                    let back = incl
                        .preimage(&img)
                        .expect("submodule is closed under the action");
                    for i in 0..sub.num_gens() {
                        cols[(i, j)] = back[i].clone();
                    }
                }
                GroupHom::new(sub.clone(), sub.clone(), cols).expect("induced action")
            })
            .collect();
        let module =
            Module::new(self.ring.clone(), self.side, sub, actions).expect("induced submodule");
        let hom = ModuleHom::new(&module, self, incl).expect("inclusion is a module hom");
        (module, hom)
    }

    /// Quotient by the submodule generated by the span.
    pub fn quotient(&self, span: &IntMatrix) -> (Module, ModuleHom) {
        let closed =
            self.submodule_span(&(0..span.cols()).map(|c| span.col(c)).collect::<Vec<_>>());
        let (q, proj) = quotient(&self.group, &closed);
        let actions: Vec<GroupHom> = self
            .actions
            .iter()
            .map(|a| {
                let m = proj.matrix().mul(a.matrix()).mul(q.lift_matrix());
                GroupHom::new(q.clone(), q.clone(), m).expect("induced quotient action")
            })
            .collect();
        let module =
            Module::new(self.ring.clone(), self.side, q, actions).expect("induced quotient module");
        let hom = ModuleHom::new(self, &module, proj).expect("projection is a module hom");
        (module, hom)
    }

    /// Restriction of scalars along a ring homomorphism into this module's
    /// ring: `k` acts as `f(k)` does. Re-validation catches maps that are
    /// not multiplicative.
    pub fn restrict_scalars(&self, f: &RingHom) -> Result<Module, ModuleError> {
        if f.codomain() != &self.ring {
            return Err(ModuleError::RingMismatch);
        }
        let actions = (0..f.domain().rank())
            .map(|i| self.action_of(&f.matrix().col(i)))
            .collect();
        Module::new(f.domain().clone(), self.side, self.group.clone(), actions)
    }
}

/// Free module of the given rank over the unitalization, with the generator
/// coordinates exposed.
pub struct FreeModule {
    pub module: Module,
    pub copies: usize,
    unit_rank: usize,
}

impl FreeModule {
    pub fn new(unital: &Unitalization, side: Side, copies: usize) -> FreeModule {
        let n = unital.rank();
        let group = FgAbelianGroup::free(n * copies);
        let actions = (0..unital.base().rank())
            .map(|i| {
                let full = match side {
                    Side::Left => unital.full().left_mult(i + 1),
                    Side::Right => unital.full().right_mult(i + 1),
                };
                let mut block = IntMatrix::zeros(n * copies, n * copies);
                for c in 0..copies {
                    for a in 0..n {
                        for b in 0..n {
                            block[(c * n + a, c * n + b)] = full[(a, b)].clone();
                        }
                    }
                }
                GroupHom::new(group.clone(), group.clone(), block).expect("free group")
            })
            .collect();
        let module = Module::new(unital.base().clone(), side, group, actions)
            .expect("free module over the unitalization");
        FreeModule {
            module,
            copies,
            unit_rank: n,
        }
    }

    /// Coordinate vector of the `j`-th free generator.
    pub fn generator(&self, j: usize) -> Vec<Int> {
        let mut v = vec![Int::zero(); self.unit_rank * self.copies];
        v[j * self.unit_rank] = Int::from(1);
        v
    }

    /// The index block of the `j`-th copy.
    pub fn copy_range(&self, j: usize) -> std::ops::Range<usize> {
        j * self.unit_rank..(j + 1) * self.unit_rank
    }
}

/// Module homomorphism: a group hom commuting with every action.
#[derive(Clone, Debug)]
pub struct ModuleHom {
    hom: GroupHom,
}

impl ModuleHom {
    pub fn new(domain: &Module, codomain: &Module, hom: GroupHom) -> Result<Self, ModuleError> {
        if domain.ring != codomain.ring {
            return Err(ModuleError::RingMismatch);
        }
        if domain.side != codomain.side {
            return Err(ModuleError::SideMismatch);
        }
        for i in 0..domain.ring.rank() {
            if !hom
                .compose(domain.action(i))
                .equals(&codomain.action(i).compose(&hom))
            {
                return Err(ModuleError::NotAHom);
            }
        }
        Ok(ModuleHom { hom })
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    pub fn into_hom(self) -> GroupHom {
        self.hom
    }
}

/// Module carrying commuting left and right actions for a pair of rings.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub left_ring: FiniteRankRing,
    pub right_ring: FiniteRankRing,
    pub group: FgAbelianGroup,
    pub left_actions: Vec<GroupHom>,
    pub right_actions: Vec<GroupHom>,
}

impl Bimodule {
    pub fn new(
        left_ring: FiniteRankRing,
        right_ring: FiniteRankRing,
        group: FgAbelianGroup,
        left_actions: Vec<GroupHom>,
        right_actions: Vec<GroupHom>,
    ) -> Result<Self, ModuleError> {
        let left = Module::new(left_ring.clone(), Side::Left, group.clone(), left_actions)?;
        let right = Module::new(
            right_ring.clone(),
            Side::Right,
            group.clone(),
            right_actions,
        )?;
        for (i, l) in left.actions().iter().enumerate() {
            for (j, r) in right.actions().iter().enumerate() {
                if !l.compose(r).equals(&r.compose(l)) {
                    return Err(ModuleError::ActionIncompatibility { i, j });
                }
            }
        }
        Ok(Bimodule {
            left_ring,
            right_ring,
            group,
            left_actions: left.actions().to_vec(),
            right_actions: right.actions().to_vec(),
        })
    }

    /// The ring as a bimodule over itself.
    pub fn regular(ring: &FiniteRankRing) -> Bimodule {
        let left = Module::regular(ring, Side::Left);
        let right = Module::regular(ring, Side::Right);
        Bimodule::new(
            ring.clone(),
            ring.clone(),
            left.group().clone(),
            left.actions().to_vec(),
            right.actions().to_vec(),
        )
        .expect("regular bimodule")
    }

    pub fn as_left_module(&self) -> Module {
        Module::new(
            self.left_ring.clone(),
            Side::Left,
            self.group.clone(),
            self.left_actions.clone(),
        )
        .expect("validated at construction")
    }

    pub fn as_right_module(&self) -> Module {
        Module::new(
            self.right_ring.clone(),
            Side::Right,
            self.group.clone(),
            self.right_actions.clone(),
        )
        .expect("validated at construction")
    }
}

#[cfg(test)]
pub(crate) mod test_rings {
    use crate::ring::FiniteRankRing;

    /// Row-matrix ring with left unit `u` and `v u = v v = 0`.
    pub fn left_unit_ring() -> FiniteRankRing {
        FiniteRankRing::from_i64(&["u", "v"], &[&[&[1, 0], &[0, 1]], &[&[0, 0], &[0, 0]]]).unwrap()
    }

    /// One-dimensional square-zero ring.
    pub fn square_zero_ring() -> FiniteRankRing {
        FiniteRankRing::from_i64(&["eps"], &[&[&[0]]]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_rings::*;
    use super::*;

    #[test]
    fn regular_module_validates() {
        let d = left_unit_ring();
        let m = Module::regular(&d, Side::Left);
        assert!(!m.is_null());
        let r = Module::regular(&d, Side::Right);
        assert!(!r.is_null());
    }

    #[test]
    fn null_module_and_incompatible_action() {
        let d = left_unit_ring();
        let null = Module::null_module(&d, Side::Left, FgAbelianGroup::free(1));
        assert!(null.is_null());

        // eps acting as the identity contradicts eps^2 = 0
        let s2 = square_zero_ring();
        let g = FgAbelianGroup::free(1);
        let bad = Module::from_action_matrices(s2, Side::Left, g, vec![IntMatrix::identity(1)]);
        assert!(matches!(
            bad,
            Err(ModuleError::ActionIncompatibility { .. })
        ));
    }

    #[test]
    fn free_module_generators() {
        let d = left_unit_ring();
        let u = Unitalization::new(d);
        let f = FreeModule::new(&u, Side::Left, 2);
        assert_eq!(f.module.group().free_rank(), 6);
        let g0 = f.generator(0);
        // u * generator lands inside the first copy
        let img = f.module.action(0).eval(&g0);
        assert!(img[f.copy_range(1)].iter().all(|x| x == &Int::from(0)));
    }

    #[test]
    fn direct_sum_mixes_torsion() {
        let d = left_unit_ring();
        let a = Module::regular(&d, Side::Left);
        let b = Module::null_module(
            &d,
            Side::Left,
            FgAbelianGroup::with_orders(0, vec![Int::from(2)]),
        );
        let (s, injs) = Module::direct_sum(&[&a, &b]).unwrap();
        assert_eq!(s.group().free_rank(), 2);
        assert_eq!(s.group().invariant_factors(), &[Int::from(2)]);
        assert_eq!(injs.len(), 2);
    }

    #[test]
    fn submodule_and_quotient_of_regular() {
        let d = left_unit_ring();
        let m = Module::regular(&d, Side::Left);
        // left ideal generated by v: D*v = Z*v
        let span = m.submodule_span(&[vec![Int::from(0), Int::from(1)]]);
        let (sub, _incl) = m.submodule(&span);
        assert_eq!(sub.group().free_rank(), 1);
        let (q, proj) = m.quotient(&span);
        assert_eq!(q.group().free_rank(), 1);
        assert!(proj.hom().is_surjective());
    }

    #[test]
    fn restrict_scalars_identity_and_zero() {
        use crate::ring::RingHom;
        let d = left_unit_ring();
        let m = Module::regular(&d, Side::Left);
        let id = RingHom::identity(&d);
        let same = m.restrict_scalars(&id).unwrap();
        assert!(same.action(0).equals(m.action(0)));

        let z = FiniteRankRing::from_i64(&["e"], &[&[&[1]]]).unwrap();
        let zero = RingHom::zero(&z, &d);
        let nulled = m.restrict_scalars(&zero).unwrap();
        assert!(nulled.is_null());

        // e -> u gives a module where e acts as the identity
        let f = RingHom::new(z, d.clone(), IntMatrix::from_i64(&[&[1], &[0]])).unwrap();
        let res = m.restrict_scalars(&f).unwrap();
        assert!(res.action(0).equals(&GroupHom::identity(m.group())));
    }
}
