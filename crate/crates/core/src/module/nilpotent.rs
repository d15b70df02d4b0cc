use super::ModuleError;
use crate::ring::MonomialLevelRing;
use crate::zlinalg::subgroup;
use crate::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use num_traits::Zero;

/// Module over a monomial level ring, finitely generated over the integers,
/// given by one commuting nilpotent endomorphism per level variable
/// (the action of `z_i^{1/N}`). Nilpotence makes it a genuine module over
/// the whole level ring rather than a formal approximation.
#[derive(Clone, Debug)]
pub struct NilModule {
    pub ring: MonomialLevelRing,
    group: FgAbelianGroup,
    var_actions: Vec<GroupHom>,
}

impl NilModule {
    pub fn new(
        ring: MonomialLevelRing,
        group: FgAbelianGroup,
        var_actions: Vec<GroupHom>,
    ) -> Result<Self, ModuleError> {
        if var_actions.len() != ring.vars {
            return Err(ModuleError::ShapeMismatch(format!(
                "need {} variable actions, got {}",
                ring.vars,
                var_actions.len()
            )));
        }
        for (i, a) in var_actions.iter().enumerate() {
            for b in var_actions.iter().skip(i + 1) {
                if !a.compose(b).equals(&b.compose(a)) {
                    return Err(ModuleError::ActionIncompatibility { i, j: i + 1 });
                }
            }
        }
        for (v, a) in var_actions.iter().enumerate() {
            if nilpotency_exponent(a).is_none() {
                return Err(ModuleError::NonNilpotentAction { var: v });
            }
        }
        Ok(NilModule {
            ring,
            group,
            var_actions,
        })
    }

    pub fn from_matrices(
        ring: MonomialLevelRing,
        group: FgAbelianGroup,
        matrices: Vec<IntMatrix>,
    ) -> Result<Self, ModuleError> {
        let actions = matrices
            .into_iter()
            .map(|m| GroupHom::new(group.clone(), group.clone(), m))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ModuleError::ShapeMismatch("action violates torsion orders".into()))?;
        NilModule::new(ring, group, actions)
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn action(&self, var: usize) -> &GroupHom {
        &self.var_actions[var]
    }

    pub fn actions(&self) -> &[GroupHom] {
        &self.var_actions
    }

    pub fn is_null(&self) -> bool {
        self.var_actions.iter().all(GroupHom::is_zero_map)
    }

    /// The trivial module: the group of integers with all variables acting
    /// by zero (the quotient of the unitalization by its ideal).
    pub fn trivial_integers(ring: MonomialLevelRing) -> NilModule {
        let group = FgAbelianGroup::free(1);
        let actions = (0..ring.vars)
            .map(|_| GroupHom::zero(&group, &group))
            .collect();
        NilModule {
            ring,
            group,
            var_actions: actions,
        }
    }

    /// Plain tensor over the integers of two modules over disjoint variable
    /// sets; the result lives over the ring with the concatenated variables.
    pub fn tensor_disjoint(&self, other: &NilModule) -> Result<NilModule, ModuleError> {
        if self.ring.level != other.ring.level {
            return Err(ModuleError::ShapeMismatch(
                "tensor factors must share the level".into(),
            ));
        }
        let t = super::tensor::tensor_raw(&self.group, &other.group, &[], &[])?;
        let (ra, rb) = (self.group.num_gens(), other.group.num_gens());
        let mut actions = Vec::new();
        for a in &self.var_actions {
            let mut pair = IntMatrix::zeros(ra * rb, ra * rb);
            for i in 0..ra {
                for ii in 0..ra {
                    if a.matrix()[(ii, i)].is_zero() {
                        continue;
                    }
                    for j in 0..rb {
                        pair[(ii * rb + j, i * rb + j)] = a.matrix()[(ii, i)].clone();
                    }
                }
            }
            let m = t
                .group
                .basis_transform()
                .mul(&pair)
                .mul(t.group.lift_matrix());
            actions.push(
                GroupHom::new(t.group.clone(), t.group.clone(), m)
                    .map_err(|_| ModuleError::NotAHom)?,
            );
        }
        for b in &other.var_actions {
            let mut pair = IntMatrix::zeros(ra * rb, ra * rb);
            for j in 0..rb {
                for jj in 0..rb {
                    if b.matrix()[(jj, j)].is_zero() {
                        continue;
                    }
                    for i in 0..ra {
                        pair[(i * rb + jj, i * rb + j)] = b.matrix()[(jj, j)].clone();
                    }
                }
            }
            let m = t
                .group
                .basis_transform()
                .mul(&pair)
                .mul(t.group.lift_matrix());
            actions.push(
                GroupHom::new(t.group.clone(), t.group.clone(), m)
                    .map_err(|_| ModuleError::NotAHom)?,
            );
        }
        let ring = MonomialLevelRing::new(self.ring.vars + other.ring.vars, self.ring.level);
        NilModule::new(ring, t.group.clone(), actions)
    }

    /// Submodule generated by the given elements, with the inclusion.
    pub fn submodule(&self, seeds: &[Vec<Int>]) -> (NilModule, GroupHom) {
        let m = self.group.num_gens();
        let mut span = IntMatrix::zeros(m, 0);
        let mut frontier: Vec<Vec<Int>> = seeds.to_vec();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in frontier.drain(..) {
                let v = self.group.reduce(&v);
                if self.group.span_contains(&span, &v) {
                    continue;
                }
                span = span.hstack(&IntMatrix::col_vector(v.clone()));
                for a in &self.var_actions {
                    next.push(a.eval(&v));
                }
            }
            frontier = next;
        }
        let (sub, incl) = subgroup(&self.group, &span);
        let actions: Vec<GroupHom> = self
            .var_actions
            .iter()
            .map(|a| {
                let mut cols = IntMatrix::zeros(sub.num_gens(), sub.num_gens());
                for j in 0..sub.num_gens() {
                    let mut e = vec![Int::zero(); sub.num_gens()];
                    e[j] = Int::from(1);
                    let img = a.eval(&incl.eval(&e));
                    let back = incl.preimage(&img).expect("closed under the action");
                    for i in 0..sub.num_gens() {
                        cols[(i, j)] = back[i].clone();
                    }
                }
                GroupHom::new(sub.clone(), sub.clone(), cols).expect("induced action")
            })
            .collect();
        (
            NilModule::new(self.ring, sub, actions).expect("submodule of a nil module"),
            incl,
        )
    }
}

/// Truncated shift module: rank `n` free group with the variable acting as
/// the nilpotent one-step shift that kills the first generator.
pub fn prufer_module(level: u32, n: usize) -> NilModule {
    let ring = MonomialLevelRing::new(1, level);
    let group = FgAbelianGroup::free(n);
    let mut shift = IntMatrix::zeros(n, n);
    for j in 1..n {
        shift[(j - 1, j)] = Int::from(1);
    }
    NilModule::from_matrices(ring, group, vec![shift]).expect("shift is nilpotent")
}

/// Smallest `e` with `a^e = 0`, or `None` when the map is not nilpotent.
/// The exponent of a nilpotent endomorphism is bounded by the free rank
/// plus the bit length of the torsion cardinality.
pub fn nilpotency_exponent(a: &GroupHom) -> Option<usize> {
    let g = a.domain();
    let torsion_bits: u64 = g.invariant_factors().iter().map(|d| d.bits()).sum();
    let bound = g.free_rank() + torsion_bits as usize + 1;
    let mut power = a.clone();
    for e in 1..=bound {
        if power.is_zero_map() {
            return Some(e);
        }
        power = power.compose(a);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_shift_is_nilpotent() {
        let p = prufer_module(1, 3);
        assert_eq!(nilpotency_exponent(p.action(0)), Some(3));
    }

    #[test]
    fn identity_action_is_rejected() {
        let ring = MonomialLevelRing::new(1, 1);
        let g = FgAbelianGroup::free(1);
        let bad = NilModule::from_matrices(ring, g, vec![IntMatrix::identity(1)]);
        assert!(matches!(
            bad,
            Err(ModuleError::NonNilpotentAction { var: 0 })
        ));
    }

    #[test]
    fn disjoint_tensor_of_shifts() {
        let p = prufer_module(1, 2);
        let t = p.tensor_disjoint(&p).unwrap();
        assert_eq!(t.group().free_rank(), 4);
        assert_eq!(t.actions().len(), 2);
        // the two variable actions commute by construction
        assert!(t
            .action(0)
            .compose(t.action(1))
            .equals(&t.action(1).compose(t.action(0))));
    }

    #[test]
    fn multiplication_by_two_is_not_nilpotent_and_detected() {
        let g = FgAbelianGroup::free(1);
        let two = GroupHom::new(g.clone(), g.clone(), IntMatrix::from_i64(&[&[2]])).unwrap();
        assert_eq!(nilpotency_exponent(&two), None);
    }
}
