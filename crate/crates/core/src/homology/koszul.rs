use crate::module::NilModule;
use crate::zlinalg::{homology_of_pair, Subquotient};
use crate::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use num_traits::Zero;

/// Subsets of `{0..n}` of the given size, in lexicographic order of their
/// sorted element lists; the fixed order indexes the exterior-power copies.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        start: usize,
        n: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(v + 1, n, size, current, out);
            current.pop();
        }
    }
    rec(0, n, size, &mut current, &mut out);
    out
}

/// Direct sum of copies of one group via the concatenated presentation.
pub fn direct_sum_of_copies(g: &FgAbelianGroup, copies: usize) -> FgAbelianGroup {
    let m = g.num_gens();
    let total = m * copies;
    let mut rel_rows = Vec::new();
    for c in 0..copies {
        for (i, o) in g.orders().iter().enumerate() {
            if !o.is_zero() {
                let mut row = vec![Int::zero(); total];
                row[c * m + i] = o.clone();
                rel_rows.push(row);
            }
        }
    }
    let rel = if rel_rows.is_empty() {
        IntMatrix::zeros(0, total)
    } else {
        IntMatrix::from_rows(rel_rows)
    };
    FgAbelianGroup::from_presentation(&rel, total)
}

/// Direct sum of arbitrary groups, renormalized.
pub fn direct_sum_groups(parts: &[FgAbelianGroup]) -> FgAbelianGroup {
    let total: usize = parts.iter().map(FgAbelianGroup::num_gens).sum();
    let mut rel_rows = Vec::new();
    let mut offset = 0;
    for p in parts {
        for (i, o) in p.orders().iter().enumerate() {
            if !o.is_zero() {
                let mut row = vec![Int::zero(); total];
                row[offset + i] = o.clone();
                rel_rows.push(row);
            }
        }
        offset += p.num_gens();
    }
    let rel = if rel_rows.is_empty() {
        IntMatrix::zeros(0, total)
    } else {
        IntMatrix::from_rows(rel_rows)
    };
    FgAbelianGroup::from_presentation(&rel, total)
}

/// The Koszul complex of a module over a monomial level ring: exterior
/// powers of the variable space tensored with the module, with the usual
/// signed contraction differential. Its homology computes Tor against the
/// trivial module, and its cochain version computes Ext into the module,
/// by pure integer linear algebra on the module's group.
pub struct KoszulComplex {
    pub vars: usize,
    pub groups: Vec<FgAbelianGroup>,
    /// `diffs[p]` is the map from degree `p+1` to degree `p`
    pub diffs: Vec<GroupHom>,
    module_group: FgAbelianGroup,
    subset_tables: Vec<Vec<Vec<usize>>>,
}

impl KoszulComplex {
    pub fn new(m: &NilModule) -> KoszulComplex {
        let n = m.ring.vars;
        let g = m.group();
        let mg = g.num_gens();
        let subset_tables: Vec<Vec<Vec<usize>>> = (0..=n).map(|p| subsets(n, p)).collect();
        let groups: Vec<FgAbelianGroup> = (0..=n)
            .map(|p| direct_sum_of_copies(g, subset_tables[p].len()))
            .collect();
        let mut diffs = Vec::new();
        for p in 0..n {
            // degree p+1 -> degree p
            let src_sets = &subset_tables[p + 1];
            let dst_sets = &subset_tables[p];
            let dst_index = |s: &Vec<usize>| dst_sets.iter().position(|t| t == s).expect("subset");
            let src_total = mg * src_sets.len();
            let dst_total = mg * dst_sets.len();
            let mut pres = IntMatrix::zeros(dst_total, src_total);
            for (si, s) in src_sets.iter().enumerate() {
                for (t, &var) in s.iter().enumerate() {
                    let mut reduced = s.clone();
                    reduced.remove(t);
                    let di = dst_index(&reduced);
                    let sign = if t % 2 == 0 { 1i64 } else { -1i64 };
                    let a = m.action(var).matrix();
                    for r in 0..mg {
                        for c in 0..mg {
                            if !a[(r, c)].is_zero() {
                                pres[(di * mg + r, si * mg + c)] = pres[(di * mg + r, si * mg + c)]
                                    .clone()
                                    + Int::from(sign) * a[(r, c)].clone();
                            }
                        }
                    }
                }
            }
            let normd = groups[p]
                .basis_transform()
                .mul(&pres)
                .mul(groups[p + 1].lift_matrix());
            diffs.push(
                GroupHom::new(groups[p + 1].clone(), groups[p].clone(), normd)
                    .expect("differential respects torsion"),
            );
        }
        let kc = KoszulComplex {
            vars: n,
            groups,
            diffs,
            module_group: g.clone(),
            subset_tables,
        };
        debug_assert!(kc.verify_complex());
        kc
    }

    pub fn verify_complex(&self) -> bool {
        self.diffs
            .windows(2)
            .all(|w| w[0].compose(&w[1]).is_zero_map())
    }

    /// Homology in the given degree with cycle bookkeeping.
    pub fn tor(&self, i: usize) -> Subquotient {
        assert!(i <= self.vars, "degree exceeds the variable count");
        let out = GroupHom::zero(&self.groups[i], &FgAbelianGroup::trivial());
        let outgoing = if i == 0 { &out } else { &self.diffs[i - 1] };
        let zero_in = GroupHom::zero(&FgAbelianGroup::trivial(), &self.groups[i]);
        let incoming = if i == self.vars {
            &zero_in
        } else {
            &self.diffs[i]
        };
        homology_of_pair(outgoing, incoming)
    }

    /// The cochain differential from degree `p` to `p+1` (insertion with
    /// signs), for Ext.
    fn codiff(&self, m: &NilModule, p: usize) -> GroupHom {
        let mg = self.module_group.num_gens();
        let src_sets = &self.subset_tables[p];
        let dst_sets = &self.subset_tables[p + 1];
        let src_total = mg * src_sets.len();
        let dst_total = mg * dst_sets.len();
        let mut pres = IntMatrix::zeros(dst_total, src_total);
        for (di, dset) in dst_sets.iter().enumerate() {
            for (t, &var) in dset.iter().enumerate() {
                let mut reduced = dset.clone();
                reduced.remove(t);
                let si = src_sets.iter().position(|s| *s == reduced).expect("subset");
                let sign = if t % 2 == 0 { 1i64 } else { -1i64 };
                let a = m.action(var).matrix();
                for r in 0..mg {
                    for c in 0..mg {
                        if !a[(r, c)].is_zero() {
                            pres[(di * mg + r, si * mg + c)] = pres[(di * mg + r, si * mg + c)]
                                .clone()
                                + Int::from(sign) * a[(r, c)].clone();
                        }
                    }
                }
            }
        }
        let normd = self.groups[p + 1]
            .basis_transform()
            .mul(&pres)
            .mul(self.groups[p].lift_matrix());
        GroupHom::new(self.groups[p].clone(), self.groups[p + 1].clone(), normd)
            .expect("codifferential respects torsion")
    }
}

/// `Tor_i` of the trivial module against `m`, as Koszul homology.
pub fn koszul_tor(m: &NilModule, i: usize) -> FgAbelianGroup {
    KoszulComplex::new(m).tor(i).group
}

/// `Ext^i` of the trivial module into `m`, as Koszul cohomology.
pub fn koszul_ext(m: &NilModule, i: usize) -> FgAbelianGroup {
    assert!(i <= m.ring.vars);
    let kc = KoszulComplex::new(m);
    let zero_from = GroupHom::zero(&FgAbelianGroup::trivial(), &kc.groups[0]);
    let top = GroupHom::zero(&kc.groups[m.ring.vars], &FgAbelianGroup::trivial());
    let outgoing = if i == m.ring.vars {
        top
    } else {
        kc.codiff(m, i)
    };
    let incoming = if i == 0 {
        zero_from
    } else {
        kc.codiff(m, i - 1)
    };
    homology_of_pair(&outgoing, &incoming).group
}

/// Chain map between the Koszul complexes of two modules over the same
/// ring, induced by a map commuting with all variable actions.
pub fn koszul_chain_map(src: &KoszulComplex, dst: &KoszulComplex, f: &GroupHom) -> Vec<GroupHom> {
    assert_eq!(src.vars, dst.vars);
    let (ms, md) = (src.module_group.num_gens(), dst.module_group.num_gens());
    (0..=src.vars)
        .map(|p| {
            let copies = src.subset_tables[p].len();
            let mut pres = IntMatrix::zeros(md * copies, ms * copies);
            for c in 0..copies {
                for r in 0..md {
                    for q in 0..ms {
                        let v = f.matrix()[(r, q)].clone();
                        if !v.is_zero() {
                            pres[(c * md + r, c * ms + q)] = v;
                        }
                    }
                }
            }
            let normd = dst.groups[p]
                .basis_transform()
                .mul(&pres)
                .mul(src.groups[p].lift_matrix());
            GroupHom::new(src.groups[p].clone(), dst.groups[p].clone(), normd)
                .expect("chain map respects torsion")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::prufer_module;
    use crate::ring::MonomialLevelRing;

    fn z(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn one_variable_zero_action() {
        // Z with the variable acting by zero: both Tor groups are Z
        let m = NilModule::trivial_integers(MonomialLevelRing::new(1, 1));
        assert_eq!(koszul_tor(&m, 0).free_rank(), 1);
        assert_eq!(koszul_tor(&m, 1).free_rank(), 1);
        assert_eq!(koszul_ext(&m, 0).free_rank(), 1);
        assert_eq!(koszul_ext(&m, 1).free_rank(), 1);
    }

    #[test]
    fn shift_module_tor_kernel_and_cokernel() {
        // rank-n truncated shift: Tor_0 = coker = Z, Tor_1 = ker = Z
        for n in 1..=4 {
            let p = prufer_module(1, n);
            assert_eq!(koszul_tor(&p, 0).free_rank(), 1);
            assert!(koszul_tor(&p, 0).invariant_factors().is_empty());
            assert_eq!(koszul_tor(&p, 1).free_rank(), 1);
        }
    }

    #[test]
    fn two_variable_shift_square() {
        // tensor square of the truncated shift: Tor = (Z, Z^2, Z)
        let p = prufer_module(1, 3);
        let sq = p.tensor_disjoint(&p).unwrap();
        assert_eq!(koszul_tor(&sq, 0).free_rank(), 1);
        assert_eq!(koszul_tor(&sq, 1).free_rank(), 2);
        assert_eq!(koszul_tor(&sq, 2).free_rank(), 1);
        for i in 0..=2 {
            assert!(koszul_tor(&sq, i).invariant_factors().is_empty());
        }
    }

    #[test]
    fn torsion_module_homology() {
        // Z/4 with the variable acting as multiplication by 2:
        // Tor_0 = Z/2, Tor_1 = ker(2: Z/4 -> Z/4) = Z/2
        let ring = MonomialLevelRing::new(1, 1);
        let g = FgAbelianGroup::with_orders(0, vec![z(4)]);
        let m = NilModule::from_matrices(ring, g, vec![IntMatrix::from_i64(&[&[2]])]).unwrap();
        assert_eq!(koszul_tor(&m, 0).invariant_factors(), &[z(2)]);
        assert_eq!(koszul_tor(&m, 1).invariant_factors(), &[z(2)]);
    }

    #[test]
    fn chain_map_commutes() {
        let p2 = prufer_module(1, 2);
        let p3 = prufer_module(1, 3);
        // inclusion of the rank-2 shift into the rank-3 one
        let incl = GroupHom::new(
            p2.group().clone(),
            p3.group().clone(),
            IntMatrix::from_i64(&[&[1, 0], &[0, 1], &[0, 0]]),
        )
        .unwrap();
        assert!(incl
            .compose(p2.action(0))
            .equals(&p3.action(0).compose(&incl)));
        let ka = KoszulComplex::new(&p2);
        let kb = KoszulComplex::new(&p3);
        let maps = koszul_chain_map(&ka, &kb, &incl);
        for p in 0..1 {
            let lhs = kb.diffs[p].compose(&maps[p + 1]);
            let rhs = maps[p].compose(&ka.diffs[p]);
            assert!(lhs.equals(&rhs));
        }
    }
}
