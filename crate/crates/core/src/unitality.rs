//! The core unitality predicates and functors: t-, s-, and c-unitality of
//! modules and rings, null-module analysis, the unitalization adjoints, the
//! explicit inverse map for s-unital modules, and the roundtrip identities
//! of the equivalence between t-unital and c-unital modules.

use crate::module::{
    hom_group, hom_unitality, left_unitality, right_unitality, tensor_bimodule_left, Bimodule,
    HomGroup, Module, ModuleError, Side,
};
use crate::ring::FiniteRankRing;
use crate::zlinalg::{kernel_basis, solve_diophantine};
use crate::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use num_traits::Zero;

/// Three-valued verdict used wherever a predicate may be out of scope for
/// the given backend or precondition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flag {
    True,
    False,
    NotApplicable,
}

impl Flag {
    pub fn from_bool(b: bool) -> Flag {
        if b {
            Flag::True
        } else {
            Flag::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Flag::True
    }
}

impl std::fmt::Display for Flag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Flag::True => write!(f, "true"),
            Flag::False => write!(f, "false"),
            Flag::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// Classification of one module: the three unitality flags, nullity, the
/// s-unitality witness when one exists, and the defect groups of the two
/// comparison maps.
#[derive(Clone, Debug)]
pub struct UnitalityReport {
    pub t_unital: Flag,
    pub s_unital: Flag,
    pub c_unital: Flag,
    pub null: Flag,
    pub s_witness: Option<Vec<Int>>,
    /// kernel and cokernel of the multiplication comparison map
    pub t_defect: Option<(FgAbelianGroup, FgAbelianGroup)>,
    /// kernel and cokernel of the Hom comparison map
    pub c_defect: Option<(FgAbelianGroup, FgAbelianGroup)>,
}

/// A common unit witness on the module generators; one Diophantine solve.
/// An element acting as the identity on every generator acts as the
/// identity everywhere by linearity, so witness existence is equivalent to
/// s-unitality for modules finitely generated over the integers, and
/// nonexistence is a definitive no.
pub fn s_unital_witness(m: &Module) -> Option<Vec<Int>> {
    let k = m.ring().rank();
    let mg = m.group();
    let n = mg.num_gens();
    if n == 0 {
        return Some(vec![Int::zero(); k]);
    }
    // unknowns: e_1..e_k then one slack per torsion congruence
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut slack_cols = 0usize;
    for i in 0..n {
        for r in 0..n {
            let mut row: Vec<Int> = (0..k)
                .map(|l| m.action(l).matrix()[(r, i)].clone())
                .collect();
            let o = mg.order(r);
            if !o.is_zero() {
                slack_cols += 1;
                row.push(o);
            }
            rows.push(row);
            rhs.push(if r == i { Int::from(1) } else { Int::zero() });
        }
    }
    let width = k + slack_cols;
    let mut used = 0usize;
    let mat_rows: Vec<Vec<Int>> = rows
        .into_iter()
        .map(|r| {
            let mut full = vec![Int::zero(); width];
            full[..k].clone_from_slice(&r[..k]);
            if r.len() > k {
                full[k + used] = r[k].clone();
                used += 1;
            }
            full
        })
        .collect();
    let sys = IntMatrix::from_rows(mat_rows);
    solve_diophantine(&sys, &rhs)
        .expect("shapes agree")
        .map(|x| x[..k].to_vec())
}

/// Basis of ring elements acting by zero on all generators (the homogeneous
/// part of the witness system); used to vary witnesses.
pub fn witness_ambiguity(m: &Module) -> Vec<Vec<Int>> {
    let k = m.ring().rank();
    let mg = m.group();
    let n = mg.num_gens();
    let mut rows = Vec::new();
    let mut slack_cols = 0usize;
    for i in 0..n {
        for r in 0..n {
            let mut row: Vec<Int> = (0..k)
                .map(|l| m.action(l).matrix()[(r, i)].clone())
                .collect();
            let o = mg.order(r);
            if !o.is_zero() {
                slack_cols += 1;
                row.push(o);
            }
            rows.push(row);
        }
    }
    let width = k + slack_cols;
    let mut used = 0usize;
    let mat_rows: Vec<Vec<Int>> = rows
        .into_iter()
        .map(|r| {
            let mut full = vec![Int::zero(); width];
            full[..k].clone_from_slice(&r[..k]);
            if r.len() > k {
                full[k + used] = r[k].clone();
                used += 1;
            }
            full
        })
        .collect();
    if mat_rows.is_empty() {
        return Vec::new();
    }
    let sys = IntMatrix::from_rows(mat_rows);
    let ker = kernel_basis(&sys);
    (0..ker.cols())
        .map(|c| (0..k).map(|r| ker[(r, c)].clone()).collect())
        .collect()
}

/// Full classification of a finite-rank-backend module.
pub fn classify_module(m: &Module) -> Result<UnitalityReport, ModuleError> {
    let (t_unital, t_defect) = match m.side() {
        Side::Left => {
            let u = left_unitality(m)?;
            let (ker, _) = u.map.kernel();
            let (cok, _) = u.map.cokernel();
            (
                Flag::from_bool(ker.is_trivial() && cok.is_trivial()),
                Some((ker, cok)),
            )
        }
        Side::Right => {
            let u = right_unitality(m)?;
            let (ker, _) = u.map.kernel();
            let (cok, _) = u.map.cokernel();
            (
                Flag::from_bool(ker.is_trivial() && cok.is_trivial()),
                Some((ker, cok)),
            )
        }
    };
    let s_witness = s_unital_witness(m);
    let s_unital = Flag::from_bool(s_witness.is_some());
    let (c_unital, c_defect) = match m.side() {
        Side::Left => {
            let h = hom_unitality(m)?;
            let (ker, _) = h.map.kernel();
            let (cok, _) = h.map.cokernel();
            (
                Flag::from_bool(ker.is_trivial() && cok.is_trivial()),
                Some((ker, cok)),
            )
        }
        // the Hom comparison for right modules is the left-module statement
        // over the opposite ring; report it as out of scope here
        Side::Right => (Flag::NotApplicable, None),
    };
    let null = Flag::from_bool(m.is_null());
    Ok(UnitalityReport {
        t_unital,
        s_unital,
        c_unital,
        null,
        s_witness,
        t_defect,
        c_defect,
    })
}

/// Is the multiplication map `R ⊗_R R -> R` an isomorphism?
pub fn is_t_unital_ring(ring: &FiniteRankRing) -> bool {
    let m = Module::regular(ring, Side::Left);
    left_unitality(&m)
        .map(|u| u.map.is_isomorphism())
        .unwrap_or(false)
}

/// Witness solve for the ring acting on itself from the given side.
pub fn is_s_unital_ring(ring: &FiniteRankRing, side: Side) -> (bool, Option<Vec<Int>>) {
    let m = Module::regular(ring, side);
    let w = s_unital_witness(&m);
    (w.is_some(), w)
}

#[derive(Debug, Clone)]
pub enum UnitalityError {
    RingNotTUnital,
    PreconditionFailed(String),
    Module(ModuleError),
}

impl From<ModuleError> for UnitalityError {
    fn from(e: ModuleError) -> Self {
        UnitalityError::Module(e)
    }
}

impl std::fmt::Display for UnitalityError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnitalityError::RingNotTUnital => write!(f, "the ring is not t-unital"),
            UnitalityError::PreconditionFailed(s) => write!(f, "precondition failed: {s}"),
            UnitalityError::Module(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for UnitalityError {}

/// `R ⊗_R M` with the counit of the coreflection onto t-unital modules.
/// The output is guaranteed (and re-verified) t-unital.
pub fn t_unitalization(m: &Module) -> Result<(Module, GroupHom), UnitalityError> {
    if !is_t_unital_ring(m.ring()) {
        return Err(UnitalityError::RingNotTUnital);
    }
    let u = left_unitality(m)?;
    debug_assert!(classify_module(&u.module)?.t_unital.is_true());
    Ok((u.module, u.map))
}

/// `Hom_R(R, P)` with the unit of the reflection onto c-unital modules.
/// The output is guaranteed (and re-verified) c-unital.
pub fn c_unitalization(p: &Module) -> Result<(Module, GroupHom), UnitalityError> {
    if !is_t_unital_ring(p.ring()) {
        return Err(UnitalityError::RingNotTUnital);
    }
    let h = hom_unitality(p)?;
    debug_assert!(classify_module(&h.module)?.c_unital.is_true());
    Ok((h.module, h.map))
}

/// Kernel and cokernel of a comparison map, realized as modules, with the
/// verdict that the ring acts by zero on both.
#[derive(Debug)]
pub struct NullDefect {
    pub kernel: FgAbelianGroup,
    pub cokernel: FgAbelianGroup,
    pub both_null: bool,
}

fn induced_on_kernel(source: &Module, map: &GroupHom) -> (FgAbelianGroup, bool) {
    let (ker, incl) = map.kernel();
    let mut null = true;
    'outer: for a in source.actions() {
        for j in 0..ker.num_gens() {
            let mut e = vec![Int::zero(); ker.num_gens()];
            e[j] = Int::from(1);
            let img = a.eval(&incl.eval(&e));
            // the kernel is a submodule, so the image lies in it
            let back = incl.preimage(&img).expect("kernel is a submodule");
            if !ker.is_zero_elem(&back) {
                null = false;
                break 'outer;
            }
        }
    }
    (ker, null)
}

fn induced_on_cokernel(target: &Module, map: &GroupHom) -> (FgAbelianGroup, bool) {
    let (cok, proj) = map.cokernel();
    let mut null = true;
    'outer: for a in target.actions() {
        let induced = proj.matrix().mul(a.matrix()).mul(cok.lift_matrix());
        let induced = cok.reduce_matrix(&induced);
        if !induced.is_zero() {
            null = false;
            break 'outer;
        }
    }
    let _ = proj;
    (cok, null)
}

/// Defects of the multiplication comparison map: both are null-modules for
/// every module over every ring; a falsification is a build-stopping bug.
pub fn null_defect(m: &Module) -> Result<NullDefect, ModuleError> {
    let u = match m.side() {
        Side::Left => left_unitality(m)?,
        Side::Right => right_unitality(m)?,
    };
    let (kernel, kernel_null) = induced_on_kernel(&u.module, &u.map);
    let (cokernel, cokernel_null) = induced_on_cokernel(m, &u.map);
    Ok(NullDefect {
        kernel,
        cokernel,
        both_null: kernel_null && cokernel_null,
    })
}

/// Defects of the Hom comparison map, dually.
pub fn hom_null_defect(p: &Module) -> Result<NullDefect, ModuleError> {
    let h = hom_unitality(p)?;
    let (kernel, kernel_null) = induced_on_kernel(p, &h.map);
    let (cokernel, cokernel_null) = induced_on_cokernel(&h.module, &h.map);
    Ok(NullDefect {
        kernel,
        cokernel,
        both_null: kernel_null && cokernel_null,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RoundtripVerdict {
    Holds,
    Fails,
    NotApplicable,
}

/// For a t-unital module over a t-unital ring: the composite
/// `M -> R ⊗ Hom(R, M) -> M` of the explicit unit and the evaluation
/// counit is the identity, and both maps are isomorphisms.
pub fn equivalence_roundtrip(m: &Module) -> Result<RoundtripVerdict, UnitalityError> {
    if m.side() != Side::Left {
        return Err(UnitalityError::PreconditionFailed(
            "left module expected".into(),
        ));
    }
    if !is_t_unital_ring(m.ring()) {
        return Ok(RoundtripVerdict::NotApplicable);
    }
    let mu = left_unitality(m)?;
    if !mu.map.is_isomorphism() {
        return Ok(RoundtripVerdict::NotApplicable);
    }
    let ring = m.ring().clone();
    let k = ring.rank();
    let can = hom_unitality(m)?;
    let hmod = can.module.clone();
    let hg = can.homs.clone();
    let b = Bimodule::regular(&ring);
    let (_tmod, t) = tensor_bimodule_left(&b, &hmod)?;
    let mh = hmod.group().num_gens();
    let mm = m.group().num_gens();

    // evaluation counit: r ⊗ f -> f(r)
    let mut ev_pairs = IntMatrix::zeros(mm, k * mh);
    for h in 0..mh {
        let mut e = vec![Int::zero(); mh];
        e[h] = Int::from(1);
        let f = hg.matrix_of(&e);
        for i in 0..k {
            for r in 0..mm {
                ev_pairs[(r, i * mh + h)] = f[(r, i)].clone();
            }
        }
    }
    let ev = t.induced_from_pairs(m.group(), &ev_pairs)?;

    // unit: M ≅ R ⊗ M -> R ⊗ Hom(R, M)
    let mut unit_pairs = IntMatrix::zeros(t.group.num_gens(), k * mm);
    for i in 0..k {
        for j in 0..mm {
            let canj = can.map.matrix().col(j);
            let mut pair = vec![Int::zero(); k * mh];
            for (h, c) in canj.iter().enumerate() {
                if !c.is_zero() {
                    pair[i * mh + h] = c.clone();
                }
            }
            let cls = t.class_of_pairs(&pair);
            for (r, c) in cls.into_iter().enumerate() {
                unit_pairs[(r, i * mm + j)] = c;
            }
        }
    }
    let id_tensor_can = mu.tensor.induced_from_pairs(&t.group, &unit_pairs)?;
    let unit = id_tensor_can.compose(&mu.map.inverse());

    let composite = ev.compose(&unit);
    let identity = GroupHom::identity(m.group());
    let holds = composite.equals(&identity) && ev.is_isomorphism() && unit.is_isomorphism();
    Ok(if holds {
        RoundtripVerdict::Holds
    } else {
        RoundtripVerdict::Fails
    })
}

/// Dual roundtrip for a c-unital module: `P -> Hom(R, R ⊗ P) -> P` is the
/// identity.
pub fn equivalence_roundtrip_dual(p: &Module) -> Result<RoundtripVerdict, UnitalityError> {
    if p.side() != Side::Left {
        return Err(UnitalityError::PreconditionFailed(
            "left module expected".into(),
        ));
    }
    if !is_t_unital_ring(p.ring()) {
        return Ok(RoundtripVerdict::NotApplicable);
    }
    let nu = hom_unitality(p)?;
    if !nu.map.is_isomorphism() {
        return Ok(RoundtripVerdict::NotApplicable);
    }
    let ring = p.ring().clone();
    let k = ring.rank();
    let tu = left_unitality(p)?;
    let regular = Module::regular(&ring, Side::Left);
    let hg2 = hom_group(&regular, &tu.module)?;
    let mp = p.group().num_gens();
    let mt = tu.module.group().num_gens();

    // unit: p -> (r -> r ⊗ p)
    let mut unit_cols = IntMatrix::zeros(hg2.group.num_gens(), mp);
    for j in 0..mp {
        let mut f = IntMatrix::zeros(mt, k);
        for i in 0..k {
            let cls = tu.tensor.pure(i, j);
            for (r, c) in cls.into_iter().enumerate() {
                f[(r, i)] = c;
            }
        }
        let coords = hg2
            .coords_of(&tu.module.group().reduce_matrix(&f))
            .ok_or(ModuleError::NotAHom)?;
        for r in 0..hg2.group.num_gens() {
            unit_cols[(r, j)] = coords[r].clone();
        }
    }
    let unit = GroupHom::new(p.group().clone(), hg2.group.clone(), unit_cols)
        .map_err(|_| ModuleError::NotAHom)?;

    // counit: postcompose with the multiplication, then invert the Hom
    // comparison of the c-unital module
    let mut post_cols = IntMatrix::zeros(nu.homs.group.num_gens(), hg2.group.num_gens());
    for g in 0..hg2.group.num_gens() {
        let mut e = vec![Int::zero(); hg2.group.num_gens()];
        e[g] = Int::from(1);
        let f = hg2.matrix_of(&e);
        let composed = tu.map.matrix().mul(&f);
        let coords = nu
            .homs
            .coords_of(&p.group().reduce_matrix(&composed))
            .ok_or(ModuleError::NotAHom)?;
        for r in 0..nu.homs.group.num_gens() {
            post_cols[(r, g)] = coords[r].clone();
        }
    }
    let post = GroupHom::new(hg2.group.clone(), nu.homs.group.clone(), post_cols)
        .map_err(|_| ModuleError::NotAHom)?;
    let counit = nu.map.inverse().compose(&post);

    let composite = counit.compose(&unit);
    let holds = composite.equals(&GroupHom::identity(p.group()))
        && unit.is_isomorphism()
        && counit.is_isomorphism();
    Ok(if holds {
        RoundtripVerdict::Holds
    } else {
        RoundtripVerdict::Fails
    })
}

/// The explicit inverse to the multiplication map for an s-unital module
/// over a left s-unital ring: `m -> e ⊗ m` for a solved witness `e`.
pub struct InverseMapReport {
    pub witness: Vec<Int>,
    pub map: GroupHom,
    /// the map does not depend on the witness choice
    pub witness_independent: bool,
    pub mutually_inverse: bool,
}

pub fn s_unital_inverse_map(m: &Module) -> Result<InverseMapReport, UnitalityError> {
    if m.side() != Side::Left {
        return Err(UnitalityError::PreconditionFailed(
            "left module expected".into(),
        ));
    }
    let (ring_s, _) = is_s_unital_ring(m.ring(), Side::Left);
    if !ring_s {
        return Err(UnitalityError::PreconditionFailed(
            "ring is not left s-unital".into(),
        ));
    }
    let Some(witness) = s_unital_witness(m) else {
        return Err(UnitalityError::PreconditionFailed(
            "module is not s-unital".into(),
        ));
    };
    let u = left_unitality(m)?;
    let mm = m.group().num_gens();
    let mut cols = IntMatrix::zeros(u.tensor.group.num_gens(), mm);
    for j in 0..mm {
        let mut ej = vec![Int::zero(); mm];
        ej[j] = Int::from(1);
        let cls = u.tensor.tensor_elems(&witness, &ej);
        for (r, c) in cls.into_iter().enumerate() {
            cols[(r, j)] = c.clone();
        }
    }
    let map = GroupHom::new(m.group().clone(), u.tensor.group.clone(), cols)
        .map_err(|_| ModuleError::NotAHom)?;

    // any two witnesses differ by a ring element killing all generators;
    // such differences tensor to zero against every generator
    let mut witness_independent = true;
    for h in witness_ambiguity(m) {
        for j in 0..mm {
            let mut ej = vec![Int::zero(); mm];
            ej[j] = Int::from(1);
            let diff = u.tensor.tensor_elems(&h, &ej);
            if !u.tensor.group.is_zero_elem(&diff) {
                witness_independent = false;
            }
        }
    }

    let back = u.map.compose(&map);
    let forth = map.compose(&u.map);
    let mutually_inverse = back.equals(&GroupHom::identity(m.group()))
        && forth.equals(&GroupHom::identity(&u.tensor.group));
    Ok(InverseMapReport {
        witness,
        map,
        witness_independent,
        mutually_inverse,
    })
}

/// Hom-group carrier reused by callers that need both the group and the
/// module structure of `Hom_R(R, -)`.
pub fn hom_from_ring(p: &Module) -> Result<(HomGroup, Module), ModuleError> {
    let h = hom_unitality(p)?;
    Ok((h.homs, h.module))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::test_rings::*;

    fn z(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn regular_left_module_of_row_ring() {
        let d = left_unit_ring();
        let m = Module::regular(&d, Side::Left);
        let rep = classify_module(&m).unwrap();
        assert!(rep.t_unital.is_true());
        assert!(rep.s_unital.is_true());
        // the witness is the left unit u
        assert_eq!(rep.s_witness, Some(vec![z(1), z(0)]));
        assert_eq!(rep.c_unital, Flag::False);
        assert_eq!(rep.null, Flag::False);
    }

    #[test]
    fn regular_right_module_of_row_ring_is_not_s_unital() {
        let d = left_unit_ring();
        let n = Module::regular(&d, Side::Right);
        let rep = classify_module(&n).unwrap();
        assert_eq!(rep.s_unital, Flag::False);
        assert!(rep.s_witness.is_none());
    }

    #[test]
    fn null_module_flags() {
        let d = left_unit_ring();
        let m = Module::null_module(&d, Side::Left, FgAbelianGroup::free(1));
        let rep = classify_module(&m).unwrap();
        assert!(rep.null.is_true());
        assert_eq!(rep.t_unital, Flag::False);
        assert_eq!(rep.s_unital, Flag::False);
        assert_eq!(rep.c_unital, Flag::False);
    }

    #[test]
    fn ring_level_flags_for_the_standard_examples() {
        let d = left_unit_ring();
        assert!(is_t_unital_ring(&d));
        assert!(is_s_unital_ring(&d, Side::Left).0);
        assert!(!is_s_unital_ring(&d, Side::Right).0);

        let r = d.direct_product(&d.opposite());
        assert!(is_t_unital_ring(&r));
        assert!(!is_s_unital_ring(&r, Side::Left).0);
        assert!(!is_s_unital_ring(&r, Side::Right).0);

        let a2 = crate::ring::a2_quiver_ring().ring;
        assert!(is_t_unital_ring(&a2));
        assert!(is_s_unital_ring(&a2, Side::Left).0);
        assert!(is_s_unital_ring(&a2, Side::Right).0);
    }

    #[test]
    fn t_unitalization_kills_null_modules() {
        let d = left_unit_ring();
        let n = Module::null_module(&d, Side::Left, FgAbelianGroup::free(1));
        let (t, counit) = t_unitalization(&n).unwrap();
        assert!(t.group().is_trivial());
        assert!(counit.is_zero_map());

        let m = Module::regular(&d, Side::Left);
        let (t2, counit2) = t_unitalization(&m).unwrap();
        assert!(t2.group().is_isomorphic(m.group()));
        assert!(counit2.is_isomorphism());
    }

    #[test]
    fn c_unitalization_output_is_c_unital() {
        let d = left_unit_ring();
        // P = Z with u = 1, v = 0
        let p = Module::from_action_matrices(
            d,
            Side::Left,
            FgAbelianGroup::free(1),
            vec![IntMatrix::identity(1), IntMatrix::zeros(1, 1)],
        )
        .unwrap();
        let (h, unit) = c_unitalization(&p).unwrap();
        let rep = classify_module(&h).unwrap();
        assert!(rep.c_unital.is_true());
        assert!(unit.is_injective());
        assert!(!unit.is_surjective());
    }

    #[test]
    fn null_defects_are_null() {
        let d = left_unit_ring();
        let m = Module::regular(&d, Side::Left);
        let nd = null_defect(&m).unwrap();
        assert!(nd.kernel.is_trivial() && nd.cokernel.is_trivial() && nd.both_null);

        let n = Module::null_module(&d, Side::Left, FgAbelianGroup::free(1));
        let nd2 = null_defect(&n).unwrap();
        assert!(nd2.kernel.is_trivial());
        assert_eq!(nd2.cokernel.free_rank(), 1);
        assert!(nd2.both_null);

        // direct sum with a torsion null part
        let t = Module::null_module(&d, Side::Left, FgAbelianGroup::with_orders(0, vec![z(2)]));
        let (sum, _) = Module::direct_sum(&[&m, &t]).unwrap();
        let nd3 = null_defect(&sum).unwrap();
        assert!(nd3.kernel.is_trivial());
        assert_eq!(nd3.cokernel.invariant_factors(), &[z(2)]);
        assert!(nd3.both_null);
    }

    #[test]
    fn roundtrip_on_regular_module() {
        let d = left_unit_ring();
        let m = Module::regular(&d, Side::Left);
        assert_eq!(equivalence_roundtrip(&m).unwrap(), RoundtripVerdict::Holds);
    }

    #[test]
    fn dual_roundtrip_on_a_c_unital_module() {
        let d = left_unit_ring();
        let p = Module::from_action_matrices(
            d.clone(),
            Side::Left,
            FgAbelianGroup::free(1),
            vec![IntMatrix::identity(1), IntMatrix::zeros(1, 1)],
        )
        .unwrap();
        let (h, _) = c_unitalization(&p).unwrap();
        assert_eq!(
            equivalence_roundtrip_dual(&h).unwrap(),
            RoundtripVerdict::Holds
        );
        // a null module is not c-unital: not applicable, not a failure
        let n = Module::null_module(&d, Side::Left, FgAbelianGroup::free(1));
        assert_eq!(
            equivalence_roundtrip_dual(&n).unwrap(),
            RoundtripVerdict::NotApplicable
        );
    }

    #[test]
    fn inverse_map_for_the_regular_module() {
        let d = left_unit_ring();
        let m = Module::regular(&d, Side::Left);
        let rep = s_unital_inverse_map(&m).unwrap();
        assert_eq!(rep.witness, vec![z(1), z(0)]);
        assert!(rep.witness_independent);
        assert!(rep.mutually_inverse);
    }

    #[test]
    fn inverse_map_on_a_direct_square_uses_a_common_witness() {
        let d = left_unit_ring();
        let m = Module::regular(&d, Side::Left);
        let (sq, _) = Module::direct_sum(&[&m, &m]).unwrap();
        let rep = s_unital_inverse_map(&sq).unwrap();
        assert!(rep.mutually_inverse);
        assert!(rep.witness_independent);
    }
}
