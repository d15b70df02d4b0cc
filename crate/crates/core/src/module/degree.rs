use super::ModuleError;
use crate::ring::MonomialLevelRing;
use crate::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use std::collections::BTreeMap;

/// A fixed-degree piece of the tensor square `R ⊗_R R` for a one-variable
/// level ring (or its truncation killing degrees at least one), presented
/// on pair-monomial generators `(a, b)` with `a + b = d`, modulo the shift
/// relations `(a + c, b) ~ (a, b + c)`. Degrees are rationals with
/// denominator the level; only numerators are stored.
#[derive(Clone, Debug)]
pub struct DegreeComponent {
    pub degree_num: u64,
    pub level: u32,
    pub truncated: bool,
    /// free group on the surviving pair classes
    pub group: FgAbelianGroup,
    /// the degree-d piece of the target ring (rank one or trivial)
    pub target: FgAbelianGroup,
    pub map_to_target: GroupHom,
    /// pair key `a` (first coordinate) -> surviving class index, `None`
    /// when the pair is identified with zero
    classes: BTreeMap<u64, Option<usize>>,
}

impl DegreeComponent {
    pub fn class_of_first_coord(&self, a: u64) -> Option<usize> {
        self.classes.get(&a).copied().flatten()
    }

    pub fn num_classes(&self) -> usize {
        self.group.num_gens()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Degree-`d` component of the tensor square. `truncated` selects the
/// quotient ring where all monomials of degree at least one vanish.
pub fn degree_component_tensor_square(
    ring: &MonomialLevelRing,
    truncated: bool,
    degree_num: u64,
    degree_den: u64,
) -> Result<DegreeComponent, ModuleError> {
    assert_eq!(ring.vars, 1, "degree components are one-variable");
    let level = ring.level as u64;
    if level % degree_den != 0 {
        return Err(ModuleError::DegreeDenominator {
            den: degree_den,
            level: ring.level,
        });
    }
    let d = degree_num * (level / degree_den);

    // a monomial z^{a/N} vanishes in the truncation exactly when a >= N
    let dead = |a: u64| truncated && a >= level;
    let live_pair = |a: u64| a >= 1 && d > a && !dead(a) && !dead(d - a);

    let keys: Vec<u64> = (1..d).filter(|&a| live_pair(a)).collect();
    let index: BTreeMap<u64, usize> = keys.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    // one extra node stands for the zero class
    let zero_node = keys.len();
    let mut uf = UnionFind::new(keys.len() + 1);

    // shift relations (a+c, b) ~ (a, b+c) for a+c+b = d, all parts positive;
    // a pair with a vanishing coordinate is the zero element
    for a in 1..d {
        for c in 1..d.saturating_sub(a) {
            let node1 = if live_pair(a + c) {
                Some(index[&(a + c)])
            } else {
                None
            };
            let node2 = if live_pair(a) { Some(index[&a]) } else { None };
            match (node1, node2) {
                (Some(x), Some(y)) => uf.union(x, y),
                (Some(x), None) => uf.union(x, zero_node),
                (None, Some(y)) => uf.union(y, zero_node),
                (None, None) => {}
            }
        }
    }

    // collect surviving classes in ascending key order
    let zero_root = uf.find(zero_node);
    let mut class_index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut classes: BTreeMap<u64, Option<usize>> = BTreeMap::new();
    for &a in &keys {
        let root = uf.find(index[&a]);
        if root == zero_root {
            classes.insert(a, None);
        } else {
            let next = class_index.len();
            let ci = *class_index.entry(root).or_insert(next);
            classes.insert(a, Some(ci));
        }
    }
    let n_classes = class_index.len();
    let group = FgAbelianGroup::free(n_classes);

    // target: the degree-d piece of the ring itself
    let target_rank = if d >= 1 && !(truncated && d >= level) {
        1
    } else {
        0
    };
    let target = FgAbelianGroup::free(target_rank);
    let mut map = IntMatrix::zeros(target_rank, n_classes);
    if target_rank == 1 {
        for (&_a, ci) in &classes {
            if let Some(ci) = ci {
                map[(0, *ci)] = Int::from(1);
            }
        }
    }
    let map_to_target = GroupHom::new(group.clone(), target.clone(), map).expect("free groups");

    Ok(DegreeComponent {
        degree_num: d,
        level: ring.level,
        truncated,
        group,
        target,
        map_to_target,
        classes,
    })
}

/// Comparison of the tensor squares of the ideal and of its truncation in
/// every positive degree up to the cutoff (inclusive), as induced maps on
/// degree components. Returns `(degree numerator, map, is_isomorphism)`per
/// degree on the `1/level` grid.
pub fn degree_comparison_upto(
    level: u32,
    cutoff_num: u64,
    cutoff_den: u64,
) -> Result<Vec<(u64, GroupHom, bool)>, ModuleError> {
    let ring = MonomialLevelRing::new(1, level);
    if u64::from(level) % cutoff_den != 0 {
        return Err(ModuleError::DegreeDenominator {
            den: cutoff_den,
            level,
        });
    }
    let top = cutoff_num * (u64::from(level) / cutoff_den);
    let mut out = Vec::new();
    for d in 1..=top {
        let full = degree_component_tensor_square(&ring, false, d, u64::from(level))?;
        let trunc = degree_component_tensor_square(&ring, true, d, u64::from(level))?;
        let mut m = IntMatrix::zeros(trunc.group.num_gens(), full.group.num_gens());
        // a pair class maps to the class of the same pair, or to zero when
        // the pair dies in the truncation
        let mut seen = vec![false; full.group.num_gens()];
        for a in 1..d {
            let (Some(src), dst) = (full.class_of_first_coord(a), trunc.class_of_first_coord(a))
            else {
                continue;
            };
            if seen[src] {
                // well-definedness: all pairs in one source class must land
                // in the same target class; verified by re-deriving
                let expected: Vec<Int> = m.col(src);
                let mut fresh = vec![Int::from(0); trunc.group.num_gens()];
                if let Some(t) = dst {
                    fresh[t] = Int::from(1);
                }
                if expected != fresh {
                    return Err(ModuleError::NotAHom);
                }
            } else {
                seen[src] = true;
                if let Some(t) = dst {
                    m[(t, src)] = Int::from(1);
                }
            }
        }
        let hom = GroupHom::new(full.group.clone(), trunc.group.clone(), m)
            .map_err(|_| ModuleError::NotAHom)?;
        let iso = hom.is_isomorphism();
        out.push((d, hom, iso));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_pair_no_relations_at_level_two() {
        // level 2, ideal, degree 1: only the pair (1/2, 1/2)
        let ring = MonomialLevelRing::new(1, 2);
        let c = degree_component_tensor_square(&ring, false, 1, 1).unwrap();
        assert_eq!(c.num_classes(), 1);
        assert!(c.map_to_target.is_isomorphism());
    }

    #[test]
    fn truncated_degree_one_is_nonzero_kernel_class() {
        // level 4 truncation, degree 1: all three pairs identified, target 0
        let ring = MonomialLevelRing::new(1, 4);
        let c = degree_component_tensor_square(&ring, true, 1, 1).unwrap();
        assert_eq!(c.num_classes(), 1);
        assert_eq!(c.target.num_gens(), 0);
        assert!(c.map_to_target.is_zero_map());
    }

    #[test]
    fn ideal_three_quarters_identifies_two_pairs() {
        let ring = MonomialLevelRing::new(1, 4);
        let c = degree_component_tensor_square(&ring, false, 3, 4).unwrap();
        assert_eq!(c.num_classes(), 1);
        assert_eq!(c.class_of_first_coord(1), c.class_of_first_coord(2));
        assert!(c.map_to_target.is_isomorphism());
    }

    #[test]
    fn denominator_must_divide_level() {
        let ring = MonomialLevelRing::new(1, 4);
        assert!(matches!(
            degree_component_tensor_square(&ring, false, 1, 3),
            Err(ModuleError::DegreeDenominator { .. })
        ));
    }

    #[test]
    fn ideal_components_are_isomorphisms_from_degree_two_grid_steps() {
        // for the untruncated ideal, every component at degree 2/N or at
        // least 3/N maps isomorphically onto the ring's degree piece
        for level in [2u32, 3, 4, 6] {
            let ring = MonomialLevelRing::new(1, level);
            for d in 2..=(2 * level as u64) {
                let c = degree_component_tensor_square(&ring, false, d, u64::from(level)).unwrap();
                assert!(
                    c.map_to_target.is_isomorphism(),
                    "degree {d}/{level} component is not an isomorphism"
                );
            }
        }
    }

    #[test]
    fn comparison_is_iso_up_to_degree_one() {
        for (d, _hom, iso) in degree_comparison_upto(4, 1, 1).unwrap() {
            assert!(iso, "comparison failed at degree {d}/4");
        }
    }
}
