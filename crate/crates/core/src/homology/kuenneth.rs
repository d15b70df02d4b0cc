use super::koszul::{direct_sum_groups, koszul_tor};
use crate::module::{ModuleError, NilModule};
use crate::zlinalg::tensor_groups;
use crate::FgAbelianGroup;

/// One degree of the comparison: the directly computed Tor of the tensor
/// module against the graded sum of tensors of the factor Tors.
#[derive(Debug)]
pub struct KuennethLine {
    pub degree: usize,
    pub direct: FgAbelianGroup,
    pub graded_sum: FgAbelianGroup,
    pub equal: bool,
}

/// Tor of a product module computed two ways: directly over the combined
/// variable set, and as the graded tensor of the factor Tor groups. Valid
/// when every involved group and every factor Tor group is torsion-free;
/// hypothesis violations are reported as an error, not a falsification.
pub fn kuenneth_check(
    a: &NilModule,
    b: &NilModule,
    max_degree: usize,
) -> Result<Vec<KuennethLine>, ModuleError> {
    if !a.group().invariant_factors().is_empty() || !b.group().invariant_factors().is_empty() {
        return Err(ModuleError::ShapeMismatch(
            "factor groups must be torsion-free".into(),
        ));
    }
    let tor_a: Vec<FgAbelianGroup> = (0..=a.ring.vars).map(|i| koszul_tor(a, i)).collect();
    let tor_b: Vec<FgAbelianGroup> = (0..=b.ring.vars).map(|j| koszul_tor(b, j)).collect();
    for t in tor_a.iter().chain(&tor_b) {
        if !t.invariant_factors().is_empty() {
            return Err(ModuleError::ShapeMismatch(
                "factor Tor groups must be torsion-free".into(),
            ));
        }
    }
    let product = a.tensor_disjoint(b)?;
    let mut out = Vec::new();
    for n in 0..=max_degree.min(product.ring.vars) {
        let direct = koszul_tor(&product, n);
        let mut parts = Vec::new();
        for i in 0..=n {
            let j = n - i;
            if i < tor_a.len() && j < tor_b.len() {
                parts.push(tensor_groups(&tor_a[i], &tor_b[j]));
            }
        }
        let graded_sum = direct_sum_groups(&parts);
        let equal = direct.is_isomorphic(&graded_sum);
        out.push(KuennethLine {
            degree: n,
            direct,
            graded_sum,
            equal,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::prufer_module;
    use crate::ring::MonomialLevelRing;
    use crate::{FgAbelianGroup, GroupHom};

    #[test]
    fn shift_squared_matches_in_all_degrees() {
        let p = prufer_module(1, 2);
        for line in kuenneth_check(&p, &p, 2).unwrap() {
            assert!(line.equal, "mismatch at degree {}", line.degree);
        }
    }

    #[test]
    fn flat_factor_contributes_only_through_degree_zero() {
        // a zero-variable factor has Tor concentrated in degree zero, so
        // every line equals the other factor's Tor scaled by its rank
        let flat = NilModule::new(
            MonomialLevelRing::new(0, 1),
            FgAbelianGroup::free(2),
            vec![],
        )
        .unwrap();
        let p = prufer_module(1, 3);
        let lines = kuenneth_check(&flat, &p, 1).unwrap();
        assert!(lines.iter().all(|l| l.equal));
        assert_eq!(lines[1].direct.free_rank(), 2);
    }

    #[test]
    fn torsion_hypothesis_is_enforced() {
        let ring = MonomialLevelRing::new(1, 1);
        let g = FgAbelianGroup::with_orders(0, vec![crate::int(2)]);
        let m = NilModule::new(ring, g.clone(), vec![GroupHom::zero(&g, &g)]).unwrap();
        let p = prufer_module(1, 2);
        assert!(kuenneth_check(&m, &p, 1).is_err());
    }
}
