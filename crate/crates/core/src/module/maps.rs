use super::{
    hom_group, hom_left_module_structure, tensor, tensor_bimodule_left, tensor_right_bimodule,
    Bimodule, HomGroup, Module, ModuleError, ModuleHom, Side, Tensor,
};
use crate::{GroupHom, Int, IntMatrix};
use num_traits::Zero;

/// The multiplication comparison map `R ⊗_R M -> M` (or `N ⊗_R R -> N`)
/// materialized on normalized coordinates, with the tensor carried both as
/// a group and as a module.
pub struct TensorUnitality {
    pub tensor: Tensor,
    pub module: Module,
    pub map: GroupHom,
}

/// `R ⊗_R M -> M`, `r ⊗ m -> r m`, for a left module.
pub fn left_unitality(m: &Module) -> Result<TensorUnitality, ModuleError> {
    if m.side() != Side::Left {
        return Err(ModuleError::SideMismatch);
    }
    let ring = m.ring().clone();
    let b = Bimodule::regular(&ring);
    let (module, t) = tensor_bimodule_left(&b, m)?;
    let mm = m.group().num_gens();
    let k = ring.rank();
    let mut pair_map = IntMatrix::zeros(mm, k * mm);
    for i in 0..k {
        let a = m.action(i).matrix();
        for j in 0..mm {
            for r in 0..mm {
                pair_map[(r, i * mm + j)] = a[(r, j)].clone();
            }
        }
    }
    let map = t.induced_from_pairs(m.group(), &pair_map)?;
    ModuleHom::new(&module, m, map.clone())?;
    Ok(TensorUnitality {
        tensor: t,
        module,
        map,
    })
}

/// `N ⊗_R R -> N`, `n ⊗ r -> n r`, for a right module.
pub fn right_unitality(n: &Module) -> Result<TensorUnitality, ModuleError> {
    if n.side() != Side::Right {
        return Err(ModuleError::SideMismatch);
    }
    let ring = n.ring().clone();
    let b = Bimodule::regular(&ring);
    let (module, t) = tensor_right_bimodule(n, &b)?;
    let mn = n.group().num_gens();
    let k = ring.rank();
    let mut pair_map = IntMatrix::zeros(mn, mn * k);
    for i in 0..mn {
        for l in 0..k {
            let a = n.action(l).matrix();
            for r in 0..mn {
                pair_map[(r, i * k + l)] = a[(r, i)].clone();
            }
        }
    }
    let map = t.induced_from_pairs(n.group(), &pair_map)?;
    ModuleHom::new(&module, n, map.clone())?;
    Ok(TensorUnitality {
        tensor: t,
        module,
        map,
    })
}

/// The Hom comparison map `P -> Hom_R(R, P)`, `p -> (r -> r p)`.
pub struct HomUnitality {
    pub homs: HomGroup,
    pub module: Module,
    pub map: GroupHom,
}

pub fn hom_unitality(p: &Module) -> Result<HomUnitality, ModuleError> {
    if p.side() != Side::Left {
        return Err(ModuleError::SideMismatch);
    }
    let ring = p.ring().clone();
    let regular = Module::regular(&ring, Side::Left);
    let homs = hom_group(&regular, p)?;
    // (s.f)(x) = f(x s): precompose with right multiplication on the ring
    let rg = regular.group().clone();
    let precompose: Vec<GroupHom> = (0..ring.rank())
        .map(|s| GroupHom::new(rg.clone(), rg.clone(), ring.right_mult(s)).expect("free group"))
        .collect();
    let module = hom_left_module_structure(&homs, &ring, &precompose)?;
    let mp = p.group().num_gens();
    let mut cols = IntMatrix::zeros(homs.group.num_gens(), mp);
    for j in 0..mp {
        // the hom r -> r p_j, as a matrix column per ring basis element
        let f = IntMatrix::from_fn(mp, ring.rank(), |r, i| p.action(i).matrix()[(r, j)].clone());
        let coords = homs
            .coords_of(&p.group().reduce_matrix(&f))
            .ok_or(ModuleError::NotAHom)?;
        for i in 0..homs.group.num_gens() {
            cols[(i, j)] = coords[i].clone();
        }
    }
    let map = GroupHom::new(p.group().clone(), homs.group.clone(), cols)
        .map_err(|_| ModuleError::NotAHom)?;
    ModuleHom::new(p, &module, map.clone())?;
    Ok(HomUnitality { homs, module, map })
}

fn triple_index(mb: usize, mm: usize, i: usize, j: usize, l: usize) -> usize {
    (i * mb + j) * mm + l
}

/// Both bracketings of `N ⊗ B ⊗ M` computed through their own intermediate
/// normalizations, with the canonical comparison constructed on elementary
/// triples and verified to be an isomorphism.
pub fn check_tensor_associativity(
    n: &Module,
    b: &Bimodule,
    m: &Module,
) -> Result<bool, ModuleError> {
    let (nb_mod, t_nb) = tensor_right_bimodule(n, b)?;
    let t_a = tensor(&nb_mod, m)?;
    let (bm_mod, t_bm) = tensor_bimodule_left(b, m)?;
    let t_b = tensor(n, &bm_mod)?;

    let (mn, mb, mm) = (
        n.group().num_gens(),
        b.group.num_gens(),
        m.group().num_gens(),
    );
    let triples = mn * mb * mm;
    let ga = t_a.group.num_gens();
    let gb = t_b.group.num_gens();

    // canonical projections from the elementary triple space to both sides
    let mut phi_a = IntMatrix::zeros(ga, triples);
    let mut phi_b = IntMatrix::zeros(gb, triples);
    for i in 0..mn {
        for j in 0..mb {
            let v1 = t_nb.pure(i, j);
            let v2pre = |l: usize| t_bm.pure(j, l);
            for l in 0..mm {
                let col = triple_index(mb, mm, i, j, l);
                // embed v1 ⊗ e_l into route A pairs
                let m1 = t_nb.group.num_gens();
                let mut pa = vec![Int::zero(); m1 * mm];
                for (p, c) in v1.iter().enumerate() {
                    if !c.is_zero() {
                        pa[p * mm + l] = c.clone();
                    }
                }
                for (r, c) in t_a.class_of_pairs(&pa).into_iter().enumerate() {
                    phi_a[(r, col)] = c;
                }
                // embed e_i ⊗ v2 into route B pairs
                let m2 = t_bm.group.num_gens();
                let v2 = v2pre(l);
                let mut pb = vec![Int::zero(); mn * m2];
                for (q, c) in v2.iter().enumerate() {
                    if !c.is_zero() {
                        pb[i * m2 + q] = c.clone();
                    }
                }
                for (r, c) in t_b.class_of_pairs(&pb).into_iter().enumerate() {
                    phi_b[(r, col)] = c;
                }
            }
        }
    }

    // comparison G_A -> G_B by lifting through the two stages
    let mut psi = IntMatrix::zeros(gb, ga);
    for g in 0..ga {
        let mut e = vec![Int::zero(); ga];
        e[g] = Int::from(1);
        let w = t_a.lift(&e); // coords on (t_nb gen, M gen) pairs
        let m1 = t_nb.group.num_gens();
        let mut triple = vec![Int::zero(); triples];
        for p in 0..m1 {
            for l in 0..mm {
                let c = w[p * mm + l].clone();
                if c.is_zero() {
                    continue;
                }
                let mut ep = vec![Int::zero(); m1];
                ep[p] = Int::from(1);
                let u = t_nb.lift(&ep); // coords on (N gen, B gen) pairs
                for i in 0..mn {
                    for j in 0..mb {
                        let cu = u[i * mb + j].clone();
                        if !cu.is_zero() {
                            triple[triple_index(mb, mm, i, j, l)] += c.clone() * cu;
                        }
                    }
                }
            }
        }
        let img = t_b.group.reduce(&phi_b.mul_vec(&triple));
        for r in 0..gb {
            psi[(r, g)] = img[r].clone();
        }
    }

    let Ok(psi) = GroupHom::new(t_a.group.clone(), t_b.group.clone(), psi) else {
        return Ok(false);
    };
    // the comparison must match the canonical projections on every triple
    let lhs = t_b.group.reduce_matrix(&psi.matrix().mul(&phi_a));
    let rhs = t_b.group.reduce_matrix(&phi_b);
    if lhs != rhs {
        return Ok(false);
    }
    Ok(psi.is_isomorphism())
}

/// The adjunction between `Hom(B ⊗ M, P)` and `Hom(M, Hom(B, P))`, with the
/// unit/counit constructed explicitly on generators and verified mutually
/// inverse.
pub fn check_tensor_hom_adjunction(
    b: &Bimodule,
    m: &Module,
    p: &Module,
) -> Result<bool, ModuleError> {
    let (bm_mod, t_bm) = tensor_bimodule_left(b, m)?;
    let hl = hom_group(&bm_mod, p)?;

    let bl = b.as_left_module();
    let hbp = hom_group(&bl, p)?;
    let hmod = hom_left_module_structure(&hbp, &b.right_ring, &b.right_actions)?;
    let hr = hom_group(m, &hmod)?;

    let (mb, mm, mp) = (
        b.group.num_gens(),
        m.group().num_gens(),
        p.group().num_gens(),
    );
    let (gl, gr) = (hl.group.num_gens(), hr.group.num_gens());
    let mh = hbp.group.num_gens();

    // forward: F : B⊗M -> P  ~~>  Phi : M -> Hom(B, P)
    let mut fwd = IntMatrix::zeros(gr, gl);
    for g in 0..gl {
        let mut e = vec![Int::zero(); gl];
        e[g] = Int::from(1);
        let f = hl.matrix_of(&e);
        let mut phi = IntMatrix::zeros(mh, mm);
        for j in 0..mm {
            let mut gj = IntMatrix::zeros(mp, mb);
            for i in 0..mb {
                let v = f.mul_vec(&t_bm.pure(i, j));
                for r in 0..mp {
                    gj[(r, i)] = v[r].clone();
                }
            }
            let Some(coords) = hbp.coords_of(&p.group().reduce_matrix(&gj)) else {
                return Ok(false);
            };
            for r in 0..mh {
                phi[(r, j)] = coords[r].clone();
            }
        }
        let Some(coords) = hr.coords_of(&hmod.group().reduce_matrix(&phi)) else {
            return Ok(false);
        };
        for r in 0..gr {
            fwd[(r, g)] = coords[r].clone();
        }
    }
    let Ok(fwd) = GroupHom::new(hl.group.clone(), hr.group.clone(), fwd) else {
        return Ok(false);
    };

    // backward: Phi : M -> Hom(B, P)  ~~>  F : B⊗M -> P on elementary pairs
    let mut bwd = IntMatrix::zeros(gl, gr);
    for g in 0..gr {
        let mut e = vec![Int::zero(); gr];
        e[g] = Int::from(1);
        let phi = hr.matrix_of(&e);
        let mut pair_map = IntMatrix::zeros(mp, mb * mm);
        for j in 0..mm {
            let fj = hbp.matrix_of(&phi.col(j));
            for i in 0..mb {
                for r in 0..mp {
                    pair_map[(r, i * mm + j)] = fj[(r, i)].clone();
                }
            }
        }
        let f = pair_map.mul(t_bm.group.lift_matrix());
        let Some(coords) = hl.coords_of(&p.group().reduce_matrix(&f)) else {
            return Ok(false);
        };
        for r in 0..gl {
            bwd[(r, g)] = coords[r].clone();
        }
    }
    let Ok(bwd) = GroupHom::new(hr.group.clone(), hl.group.clone(), bwd) else {
        return Ok(false);
    };

    let id_l = GroupHom::identity(&hl.group);
    let id_r = GroupHom::identity(&hr.group);
    Ok(bwd.compose(&fwd).equals(&id_l) && fwd.compose(&bwd).equals(&id_r))
}

#[cfg(test)]
mod tests {
    use super::super::test_rings::*;
    use super::*;
    use crate::FgAbelianGroup;

    #[test]
    fn left_unitality_iso_for_the_regular_module() {
        let d = left_unit_ring();
        let m = Module::regular(&d, Side::Left);
        let u = left_unitality(&m).unwrap();
        assert!(u.map.is_isomorphism());
    }

    #[test]
    fn left_unitality_zero_into_null_target() {
        let d = left_unit_ring();
        let m = Module::null_module(&d, Side::Left, FgAbelianGroup::free(1));
        let u = left_unitality(&m).unwrap();
        // R ⊗ M = 0 -> Z is the zero map out of the trivial group
        assert!(u.tensor.group.is_trivial());
        assert!(!u.map.is_surjective());
    }

    #[test]
    fn hom_unitality_on_rank_one_idempotent_action() {
        // P = Z with u acting as 1 and v as 0 over the row ring: the
        // comparison P -> Hom(R, P) is injective but not surjective
        let d = left_unit_ring();
        let g = FgAbelianGroup::free(1);
        let p = Module::from_action_matrices(
            d,
            Side::Left,
            g,
            vec![IntMatrix::identity(1), IntMatrix::zeros(1, 1)],
        )
        .unwrap();
        let h = hom_unitality(&p).unwrap();
        assert_eq!(h.homs.group.free_rank(), 2);
        assert!(h.map.is_injective());
        assert!(!h.map.is_surjective());
    }

    #[test]
    fn hom_unitality_of_square_zero_ideal_is_the_zero_map() {
        // the ideal acts by zero on itself, so p -> (r -> r p) kills all of P
        let s2 = square_zero_ring();
        let p = Module::regular(&s2, Side::Left);
        let h = hom_unitality(&p).unwrap();
        assert_eq!(h.homs.group.free_rank(), 1);
        assert!(h.map.is_zero_map());
    }

    #[test]
    fn associativity_regular_triple() {
        let d = left_unit_ring();
        let n = Module::regular(&d, Side::Right);
        let b = Bimodule::regular(&d);
        let m = Module::regular(&d, Side::Left);
        assert!(check_tensor_associativity(&n, &b, &m).unwrap());
    }

    #[test]
    fn adjunction_with_null_target_both_sides_trivial() {
        let d = left_unit_ring();
        let b = Bimodule::regular(&d);
        let m = Module::regular(&d, Side::Left);
        let p = Module::null_module(&d, Side::Left, FgAbelianGroup::trivial());
        assert!(check_tensor_hom_adjunction(&b, &m, &p).unwrap());
    }

    #[test]
    fn adjunction_regular_case() {
        let d = left_unit_ring();
        let b = Bimodule::regular(&d);
        let m = Module::regular(&d, Side::Left);
        let p = Module::regular(&d, Side::Left);
        assert!(check_tensor_hom_adjunction(&b, &m, &p).unwrap());
    }
}
