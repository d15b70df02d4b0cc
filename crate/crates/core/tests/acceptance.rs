//! The acceptance gate: one test per criterion, every expected value pinned
//! exactly (all arithmetic is exact, so every tolerance is equality of
//! normalized groups and maps). Each test prints a single pass line on
//! success; a failed assertion names the violated statement.

#[path = "support/mod.rs"]
mod support;

use firmhom::corpus::{rings, run_example, RunOptions};
use firmhom::flatproj::{character_dual, closure_criteria, is_c_projective, is_t_flat};
use firmhom::homology::{
    bar_fragment_homotopy, ind_tor_module_chain, ind_tor_ring_chain, kuenneth_check,
    null_vanishing_check, t_unital_via_tor_ring, tor, ColimitVerdict, ModuleChain, PivotOrder,
};
use firmhom::module::{
    degree_comparison_upto, degree_component_tensor_square, prufer_module, Module, NilModule, Side,
};
use firmhom::ring::{FiniteRankRing, IndRing, MonomialLevelRing, RingHom};
use firmhom::unitality::{
    classify_module, equivalence_roundtrip, equivalence_roundtrip_dual, is_s_unital_ring,
    is_t_unital_ring, RoundtripVerdict,
};
use firmhom::{FgAbelianGroup, GroupHom, Int, IntMatrix};

fn opts() -> RunOptions {
    RunOptions::default()
}

#[test]
fn criterion_01_row_ring_and_opposite_product() {
    let d = rings::row_ring();
    let m = Module::regular(&d, Side::Left);
    let rep = classify_module(&m).expect("finite backend");
    assert!(rep.t_unital.is_true());
    assert_eq!(rep.s_witness, Some(vec![Int::from(1), Int::from(0)]));
    assert!(!is_s_unital_ring(&d, Side::Right).0);

    let r = rings::row_ring_times_opposite();
    assert!(is_t_unital_ring(&r), "definitional test");
    assert!(t_unital_via_tor_ring(&r).unwrap(), "homological test");
    let zl = firmhom::homology::trivial_integers(&r, Side::Left);
    let zr = firmhom::homology::trivial_integers(&r, Side::Right);
    for i in [1usize, 2] {
        assert!(
            tor(i, &zr, &zl, PivotOrder::Forward).unwrap().is_trivial(),
            "Tor_{i} over the rank-five unitalization must vanish"
        );
    }
    assert!(!is_s_unital_ring(&r, Side::Left).0);
    assert!(!is_s_unital_ring(&r, Side::Right).0);
    assert!(run_example("ex-2.9-D", &opts()).unwrap().passed());
    println!("criterion 01 row ring and opposite product: PASS");
}

#[test]
fn criterion_02_level_chain() {
    let ind = IndRing::new(1, vec![1, 2, 4]).unwrap();
    let table = ind_tor_ring_chain(&ind, 2, 3).unwrap();
    let row1 = table.row(1);
    for g in &row1.levels {
        assert_eq!(g.describe(), "Z", "per-level first Tor group");
    }
    assert!(row1.transitions.iter().all(GroupHom::is_zero_map));
    assert!(matches!(row1.verdict, ColimitVerdict::ZeroCertified { .. }));
    assert!(matches!(
        table.row(2).verdict,
        ColimitVerdict::ZeroCertified { .. }
    ));

    for n in [1u32, 2, 4] {
        let ring = MonomialLevelRing::new(1, n);
        let c = degree_component_tensor_square(&ring, false, 1, u64::from(n)).unwrap();
        assert!(
            c.group.is_trivial() && c.target.num_gens() == 1,
            "level {n}: the tensor square misses degree 1/{n}, so the level ring is not t-unital"
        );
    }
    // s-unitality certified no: multiplication strictly raises the minimal
    // degree of every generator
    for idx in 0..3 {
        let r = ind.ring_at(idx);
        let g = r.monomial(&[1]);
        let sq = r.mul(&g, &g);
        let min = sq.keys().map(|k| r.total_degree(k).0).min().unwrap();
        assert!(min > 1);
    }
    assert!(run_example("ex-4.1-levels", &opts()).unwrap().passed());
    println!("criterion 02 level chain zero-certified: PASS");
}

#[test]
fn criterion_03_degree_components_at_level_four() {
    let ring = MonomialLevelRing::new(1, 4);
    let s = degree_component_tensor_square(&ring, true, 1, 1).unwrap();
    assert_eq!(s.group.describe(), "Z");
    assert!(s.map_to_target.is_zero_map() && s.target.is_trivial());

    let r = degree_component_tensor_square(&ring, false, 1, 1).unwrap();
    assert!(r.map_to_target.is_isomorphism());

    for (d, _, iso) in degree_comparison_upto(4, 1, 1).unwrap() {
        assert!(iso, "comparison must be an isomorphism in degree {d}/4");
    }
    assert!(run_example("ex-4.3-degree1", &opts()).unwrap().passed());
    println!("criterion 03 degree-one kernel class and comparison: PASS");
}

#[test]
fn criterion_04_truncated_square_chains() {
    let ring2 = MonomialLevelRing::new(2, 1);
    // per-level values for the squares of the truncated shifts
    for n in 1..=6usize {
        let p = prufer_module(1, n);
        let sq = p.tensor_disjoint(&p).unwrap();
        let t0 = firmhom::homology::koszul_tor(&sq, 0);
        let t1 = firmhom::homology::koszul_tor(&sq, 1);
        let t2 = firmhom::homology::koszul_tor(&sq, 2);
        assert_eq!(
            (t0.describe(), t1.describe(), t2.describe()),
            ("Z".to_string(), "Z^2".to_string(), "Z".to_string()),
            "per-level Tor of the square at truncation {n}"
        );
    }
    // chain verdicts
    let report = run_example("ex-4.5-kernel-failure", &opts()).unwrap();
    assert!(report.passed());

    // the kernel chain alone: first Tor stabilizes at Z
    let kernels: Vec<NilModule> = (1..=6)
        .map(|n| {
            let g = FgAbelianGroup::free(n);
            let mut shift = IntMatrix::zeros(n, n);
            for j in 1..n {
                shift[(j - 1, j)] = Int::from(1);
            }
            NilModule::from_matrices(ring2, g, vec![IntMatrix::zeros(n, n), shift]).unwrap()
        })
        .collect();
    let trans: Vec<GroupHom> = (0..5)
        .map(|j| {
            let mut m = IntMatrix::zeros(j + 2, j + 1);
            for i in 0..=j {
                m[(i, i)] = Int::from(1);
            }
            GroupHom::new(
                kernels[j].group().clone(),
                kernels[j + 1].group().clone(),
                m,
            )
            .unwrap()
        })
        .collect();
    let chain = ModuleChain::new(ring2, kernels, trans, true).unwrap();
    let table = ind_tor_module_chain(&chain, 1, 3);
    for g in &table.row(1).levels {
        assert_eq!(g.describe(), "Z^2", "kernel chain first Tor per level");
    }
    match &table.row(1).verdict {
        ColimitVerdict::Stable(g) => assert_eq!(g.describe(), "Z"),
        v => panic!("kernel chain first Tor expected STABLE(Z), got {v}"),
    }
    println!("criterion 04 kernel of multiplication breaks t-unitality: PASS");
}

#[test]
fn criterion_05_kuenneth() {
    let cases = [
        (prufer_module(1, 2), prufer_module(1, 2)),
        (prufer_module(1, 3), prufer_module(1, 3)),
        (prufer_module(1, 2), prufer_module(1, 4)),
        (prufer_module(1, 3), prufer_module(1, 6)),
    ];
    for (a, b) in &cases {
        for line in kuenneth_check(a, b, 2).unwrap() {
            assert!(
                line.equal,
                "graded tensor formula fails at degree {}: {} vs {}",
                line.degree,
                line.direct.describe(),
                line.graded_sum.describe()
            );
        }
    }
    let flat = NilModule::new(
        MonomialLevelRing::new(0, 1),
        FgAbelianGroup::free(2),
        vec![],
    )
    .unwrap();
    for line in kuenneth_check(&flat, &prufer_module(1, 3), 1).unwrap() {
        assert!(line.equal);
    }
    println!("criterion 05 graded tensor decomposition exact: PASS");
}

#[test]
fn criterion_06_equivalence_roundtrips() {
    for (name, ring) in [
        ("row", rings::row_ring()),
        ("product", rings::row_ring_times_opposite()),
        ("quiver", rings::quiver_ring().ring),
    ] {
        let mut samples = vec![Module::regular(&ring, Side::Left)];
        // t-unitalizations of a spread of modules are t-unital
        let null = Module::null_module(&ring, Side::Left, FgAbelianGroup::free(1));
        let (t, _) = firmhom::unitality::t_unitalization(&null).unwrap();
        samples.push(t);
        if name == "quiver" {
            let cat = rings::quiver_ring();
            let r = Module::regular(&cat.ring, Side::Left);
            for e in &cat.idempotents {
                let span = r.submodule_span(&[e.clone()]);
                samples.push(r.submodule(&span).0);
            }
        }
        let mut verified = 0usize;
        for m in &samples {
            match equivalence_roundtrip(m).unwrap() {
                RoundtripVerdict::Holds => verified += 1,
                RoundtripVerdict::NotApplicable => {}
                RoundtripVerdict::Fails => panic!("roundtrip failed over {name}"),
            }
            let (c, _) = firmhom::unitality::c_unitalization(m).unwrap();
            match equivalence_roundtrip_dual(&c).unwrap() {
                RoundtripVerdict::Fails => panic!("dual roundtrip failed over {name}"),
                _ => {}
            }
        }
        assert!(verified > 0, "no t-unital instance over {name}");
    }
    assert!(run_example("thm-5.8-equivalence", &opts())
        .unwrap()
        .passed());
    println!("criterion 06 equivalence roundtrip identities: PASS");
}

#[test]
fn criterion_07_null_suite() {
    // 100 seeded random modules of rank at most three per corpus ring
    support::null_defect_suite(100);
    // all four vanishing groups for null corpus modules
    for (_, ring) in rings::corpus_rings() {
        if !is_t_unital_ring(&ring) {
            continue;
        }
        for g in [
            FgAbelianGroup::free(1),
            FgAbelianGroup::with_orders(0, vec![Int::from(2)]),
            FgAbelianGroup::trivial(),
        ] {
            let n = Module::null_module(&ring, Side::Left, g);
            let v = null_vanishing_check(&n).unwrap();
            assert!(v.all_zero);
        }
    }
    println!("criterion 07 null defect and vanishing suite: PASS");
}

#[test]
fn criterion_08_quiver_corner_equivalences() {
    assert!(run_example("prop-6.6-A2", &opts()).unwrap().passed());
    println!("criterion 08 quiver corner equivalences: PASS");
}

#[test]
fn criterion_09_flat_proj_inj_suite() {
    // implication and invariance over every t-unital corpus ring
    for (name, ring) in rings::corpus_rings() {
        if !is_t_unital_ring(&ring) {
            continue;
        }
        let samples = [
            Module::regular(&ring, Side::Left),
            Module::null_module(&ring, Side::Left, FgAbelianGroup::free(1)),
            Module::null_module(
                &ring,
                Side::Left,
                FgAbelianGroup::with_orders(0, vec![Int::from(2)]),
            ),
        ];
        for m in &samples {
            let cp = is_c_projective(m).unwrap();
            let tf = is_t_flat(m).unwrap();
            assert!(!cp || tf, "c-projective must imply t-flat over {name}");
            let (orig, t, c) = firmhom::flatproj::replacement_triple(m).unwrap();
            assert_eq!(
                is_c_projective(&orig).unwrap(),
                is_c_projective(&t).unwrap()
            );
            assert_eq!(
                is_c_projective(&orig).unwrap(),
                is_c_projective(&c).unwrap()
            );
            assert_eq!(is_t_flat(&orig).unwrap(), is_t_flat(&t).unwrap());
            assert_eq!(is_t_flat(&orig).unwrap(), is_t_flat(&c).unwrap());
        }
    }
    // character double-duality preserves flags on finite modules
    let d = rings::row_ring();
    let mut acts = vec![IntMatrix::zeros(1, 1); 2];
    acts[0] = IntMatrix::identity(1);
    let finite = Module::from_action_matrices(
        d.clone(),
        Side::Left,
        FgAbelianGroup::with_orders(0, vec![Int::from(2)]),
        acts,
    )
    .unwrap();
    let double = character_dual(&character_dual(&finite).unwrap()).unwrap();
    let a = classify_module(&finite).unwrap();
    let b = classify_module(&double).unwrap();
    assert_eq!(a.t_unital, b.t_unital);
    assert_eq!(a.s_unital, b.s_unital);
    assert_eq!(a.c_unital, b.c_unital);

    let rep = closure_criteria(&d);
    assert!(rep.kernels_closed && rep.cokernels_closed && rep.certified);
    assert!(run_example("sec-8-flatproj", &opts()).unwrap().passed());
    println!("criterion 09 flatness/projectivity/injectivity suite: PASS");
}

#[test]
fn criterion_10_bar_homotopy_and_hom_transfer() {
    let d = rings::row_ring();
    let k = FiniteRankRing::from_i64(&["e"], &[&[&[1]]]).unwrap();
    let f = RingHom::new(k, d, IntMatrix::from_i64(&[&[1], &[0]])).unwrap();
    let rep = bar_fragment_homotopy(&f).unwrap();
    assert!(rep.degree_zero_identity, "boundary-section identity");
    assert!(
        rep.homotopy_identity,
        "contracting homotopy identity, entrywise"
    );
    assert!(rep.conclusion_multiplication_iso && rep.cross_check_definitional);
    assert!(run_example("prop-9.4-bar", &opts()).unwrap().passed());
    assert!(run_example("sec-9-homs", &opts()).unwrap().passed());
    println!("criterion 10 bar homotopy and homomorphism transfer: PASS");
}

#[test]
fn criterion_11_property_suites() {
    support::snf_reconstruction_suite(1000, 0x5eed);
    support::tor_resolution_independence_suite();
    support::closure_suite();
    println!("criterion 11 standalone property suites: PASS");
}
