//! Standalone property suites: normal-form reconstruction on random
//! matrices, resolution independence of the derived functors, closure laws
//! of the unitality classes on generated short exact sequences, and a few
//! structural invariants driven by proptest.

#[path = "support/mod.rs"]
mod support;

use firmhom::corpus::rings;
use firmhom::module::{tensor, Module, Side};
use firmhom::unitality::classify_module;
use firmhom::zlinalg::smith_normal_form;
use firmhom::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use proptest::prelude::*;

#[test]
fn snf_reconstruction_on_a_thousand_random_matrices() {
    support::snf_reconstruction_suite(1000, 0x5eed);
}

#[test]
fn tor_is_resolution_independent_on_all_corpus_pairs() {
    support::tor_resolution_independence_suite();
}

#[test]
fn closure_laws_on_generated_short_exact_sequences() {
    support::closure_suite();
}

#[test]
fn s_flag_equals_t_flag_over_left_s_unital_rings() {
    support::s_equals_t_over_s_unital_rings_suite();
}

#[test]
fn character_bridge_at_low_degrees() {
    support::character_bridge_suite();
}

#[test]
fn witness_existence_matches_the_classification() {
    for (_, ring) in rings::corpus_rings() {
        for side in [Side::Left, Side::Right] {
            support::witness_consistency(&Module::regular(&ring, side));
        }
    }
}

#[test]
fn homological_and_definitional_t_unitality_agree() {
    use firmhom::homology::{t_unital_via_tor_module, t_unital_via_tor_ring};
    for (name, ring) in rings::corpus_rings() {
        let def = firmhom::unitality::is_t_unital_ring(&ring);
        let hom = t_unital_via_tor_ring(&ring).unwrap();
        assert_eq!(def, hom, "ring-level verdicts disagree over {name}");
        let mut rng = firmhom::corpus::gen::SplitMix64::new(0x70f2);
        let mut mods = vec![
            Module::regular(&ring, Side::Left),
            Module::null_module(&ring, Side::Left, FgAbelianGroup::free(1)),
        ];
        for _ in 0..5 {
            mods.push(firmhom::corpus::gen::random_module(
                &ring,
                Side::Left,
                &mut rng,
                3,
            ));
        }
        for m in &mods {
            let def = classify_module(m).unwrap().t_unital.is_true();
            let hom = t_unital_via_tor_module(m).unwrap();
            assert_eq!(def, hom, "module-level verdicts disagree over {name}");
        }
    }
    // the truncated positive part disagrees with nothing: both say no
    let tr = rings::truncated_poly_ring();
    assert!(!firmhom::unitality::is_t_unital_ring(&tr));
    assert!(!firmhom::homology::t_unital_via_tor_ring(&tr).unwrap());
}

#[test]
fn associativity_and_adjunction_on_small_bimodule_triples() {
    use firmhom::module::{check_tensor_associativity, check_tensor_hom_adjunction, Bimodule};
    let d = rings::row_ring();
    let b = Bimodule::regular(&d);
    let rights = [
        Module::regular(&d, Side::Right),
        Module::null_module(&d, Side::Right, FgAbelianGroup::free(1)),
        Module::null_module(
            &d,
            Side::Right,
            FgAbelianGroup::with_orders(0, vec![Int::from(2)]),
        ),
    ];
    let lefts = [
        Module::regular(&d, Side::Left),
        Module::null_module(&d, Side::Left, FgAbelianGroup::free(1)),
        Module::null_module(
            &d,
            Side::Left,
            FgAbelianGroup::with_orders(0, vec![Int::from(3)]),
        ),
    ];
    let targets = [
        Module::regular(&d, Side::Left),
        Module::null_module(&d, Side::Left, FgAbelianGroup::free(1)),
    ];
    for n in &rights {
        for m in &lefts {
            assert!(
                check_tensor_associativity(n, &b, m).unwrap(),
                "associativity comparison failed"
            );
        }
    }
    for m in &lefts {
        for p in &targets {
            assert!(
                check_tensor_hom_adjunction(&b, m, p).unwrap(),
                "adjunction comparison failed"
            );
        }
    }
    // and over the square-zero ring, whose regular bimodule has nilpotent
    // actions on both sides
    let s2 = rings::square_zero_ring();
    let bs = Bimodule::regular(&s2);
    let n = Module::regular(&s2, Side::Right);
    let m = Module::regular(&s2, Side::Left);
    assert!(check_tensor_associativity(&n, &bs, &m).unwrap());
    assert!(check_tensor_hom_adjunction(&bs, &m, &m).unwrap());
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_reconstruction_property(rows in small_matrix()) {
        let a = IntMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect(),
        );
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
    }

    #[test]
    fn presentation_is_isomorphism_invariant(rows in small_matrix(), seed in 0u64..1000) {
        // unimodular row/column perturbations leave the invariant factors
        // unchanged
        let a = IntMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect(),
        );
        let g1 = FgAbelianGroup::from_presentation(&a, a.cols());
        let mut rng = firmhom::corpus::gen::SplitMix64::new(seed);
        let mut b = a.clone();
        for _ in 0..4 {
            let q = Int::from(rng.int_in(-2, 2));
            if b.rows() >= 2 {
                let i = rng.below(b.rows() as u64) as usize;
                let j = rng.below(b.rows() as u64) as usize;
                if i != j {
                    b.add_row_multiple(i, j, &q);
                }
            }
            if b.cols() >= 2 {
                let i = rng.below(b.cols() as u64) as usize;
                let j = rng.below(b.cols() as u64) as usize;
                if i != j {
                    b.add_col_multiple(i, j, &q);
                }
            }
        }
        let g2 = FgAbelianGroup::from_presentation(&b, b.cols());
        prop_assert!(g1.is_isomorphic(&g2));
    }

    #[test]
    fn tensor_is_symmetric_in_presentation(perm_seed in 0u64..64) {
        // permuting the generator enumeration of either factor leaves the
        // invariant factors of the tensor unchanged
        let d = rings::row_ring();
        let n = Module::regular(&d, Side::Right);
        let m = Module::regular(&d, Side::Left);
        let base = tensor(&n, &m).unwrap();

        let swap = if perm_seed % 2 == 0 {
            IntMatrix::identity(2)
        } else {
            IntMatrix::from_i64(&[&[0, 1], &[1, 0]])
        };
        let g = FgAbelianGroup::free(2);
        let acts: Vec<GroupHom> = (0..2)
            .map(|i| {
                GroupHom::new(
                    g.clone(),
                    g.clone(),
                    swap.mul(&d.left_mult(i)).mul(&swap),
                )
                .unwrap()
            })
            .collect();
        let m2 = Module::new(d.clone(), Side::Left, g, acts).unwrap();
        let permuted = tensor(&n, &m2).unwrap();
        prop_assert!(base.group.is_isomorphic(&permuted.group));
    }

    #[test]
    fn classification_flags_are_consistent(seed in 0u64..200) {
        // structural coherence on random modules: null forces every other
        // flag off (except for the zero module), and s implies t over the
        // left s-unital row ring
        let d = rings::row_ring();
        let mut rng = firmhom::corpus::gen::SplitMix64::new(seed);
        let m = firmhom::corpus::gen::random_module(&d, Side::Left, &mut rng, 3);
        let rep = classify_module(&m).unwrap();
        if rep.null.is_true() && !m.group().is_trivial() {
            prop_assert!(!rep.t_unital.is_true());
            prop_assert!(!rep.s_unital.is_true());
        }
        if rep.s_unital.is_true() {
            prop_assert!(rep.t_unital.is_true());
        }
    }
}
