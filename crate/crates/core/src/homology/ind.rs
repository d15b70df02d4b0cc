use super::koszul::{koszul_chain_map, KoszulComplex};
use crate::module::NilModule;
use crate::ring::{IndRing, MonomialLevelRing, RingError};
use crate::{FgAbelianGroup, GroupHom, Int, IntMatrix};
use num_traits::Zero;

/// Colimit verdict for one homological degree of a chain. Certification is
/// deliberately conservative: nothing is ever extrapolated beyond what the
/// computed levels and the declared self-similarity rule support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColimitVerdict {
    /// every transition from `onset` on is the zero map and the chain obeys
    /// its declared self-similar pattern, so the colimit vanishes
    ZeroCertified {
        onset: usize,
    },
    /// the last `window` transitions are isomorphisms onto the stabilized
    /// group (possibly after passing to the image chain)
    Stable(FgAbelianGroup),
    Inconclusive,
}

impl std::fmt::Display for ColimitVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ColimitVerdict::ZeroCertified { onset } => write!(f, "ZERO (from level {onset})"),
            ColimitVerdict::Stable(g) => write!(f, "STABLE({})", g.describe()),
            ColimitVerdict::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

/// One homological degree across the chain levels.
#[derive(Clone, Debug)]
pub struct TorRow {
    pub degree: usize,
    pub levels: Vec<FgAbelianGroup>,
    pub transitions: Vec<GroupHom>,
    pub verdict: ColimitVerdict,
}

/// Tor groups per homological degree per chain level, with induced
/// transition maps and the per-degree colimit verdicts.
#[derive(Clone, Debug)]
pub struct TorTable {
    pub rows: Vec<TorRow>,
}

impl TorTable {
    pub fn row(&self, degree: usize) -> &TorRow {
        &self.rows[degree]
    }
}

fn decide_verdict(
    levels: &[FgAbelianGroup],
    transitions: &[GroupHom],
    window: usize,
    self_similar: bool,
) -> ColimitVerdict {
    if levels.iter().all(FgAbelianGroup::is_trivial) {
        return ColimitVerdict::ZeroCertified { onset: 0 };
    }
    if transitions.is_empty() {
        return ColimitVerdict::Inconclusive;
    }
    // zero certification: a tail of zero transitions (at least two when the
    // chain affords them) under the declared self-similarity rule
    let mut onset = transitions.len();
    while onset > 0 && transitions[onset - 1].is_zero_map() {
        onset -= 1;
    }
    let zero_tail = transitions.len() - onset;
    if self_similar && zero_tail >= 2.min(transitions.len()) && zero_tail >= 1 {
        return ColimitVerdict::ZeroCertified { onset };
    }
    // direct stabilization: the last `window` transitions are isomorphisms
    if transitions.len() >= window
        && transitions[transitions.len() - window..]
            .iter()
            .all(GroupHom::is_isomorphism)
    {
        return ColimitVerdict::Stable(levels.last().expect("nonempty").clone());
    }
    // image-chain stabilization: restrict to the images of the transitions
    // and ask the induced maps to be isomorphisms (heuristic)
    if transitions.len() >= window.max(2) {
        if let Some(stable) = image_chain_stabilizes(transitions) {
            return ColimitVerdict::Stable(stable);
        }
    }
    ColimitVerdict::Inconclusive
}

fn image_chain_stabilizes(transitions: &[GroupHom]) -> Option<FgAbelianGroup> {
    let mut images = Vec::new();
    let mut incls = Vec::new();
    for t in transitions {
        let (im, incl) = t.image();
        images.push(im);
        incls.push(incl);
    }
    for j in 0..transitions.len() - 1 {
        let im = &images[j];
        if im.is_trivial() {
            return None;
        }
        let mut cols = IntMatrix::zeros(images[j + 1].num_gens(), im.num_gens());
        for g in 0..im.num_gens() {
            let mut e = vec![Int::zero(); im.num_gens()];
            e[g] = Int::from(1);
            let y = incls[j].eval(&e);
            let z = transitions[j + 1].eval(&y);
            let back = incls[j + 1].preimage(&z)?;
            for r in 0..images[j + 1].num_gens() {
                cols[(r, g)] = back[r].clone();
            }
        }
        let h = GroupHom::new(images[j].clone(), images[j + 1].clone(), cols).ok()?;
        if !h.is_isomorphism() {
            return None;
        }
    }
    images.pop()
}

/// Transition on the degree-`p` Tor group of the trivial module along a
/// level inclusion with ratio `r`: the comparison lift of the Koszul
/// complexes divides each mapped generator monomial by the target variable,
/// leaving the coefficient monomial of total numerator `p (r - 1)`; the
/// augmentation kills it unless it is empty.
pub fn koszul_transition_on_tor(vars: usize, p: usize, ratio: u64) -> Result<IntMatrix, RingError> {
    if ratio == 0 {
        return Err(RingError::BadLevelChain { prev: 0, next: 0 });
    }
    let dim = binomial(vars, p);
    if p == 0 || ratio == 1 {
        return Ok(IntMatrix::identity(dim));
    }
    Ok(IntMatrix::zeros(dim, dim))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Tor of the trivial module over each level ring of the chain, with
/// comparison transitions. For ring chains the trivial module has zero
/// variable actions, so every Koszul differential vanishes and the Tor
/// group at degree `p` is free on the exterior-power basis.
pub fn ind_tor_ring_chain(
    ind: &IndRing,
    tor_max: usize,
    window: usize,
) -> Result<TorTable, RingError> {
    let mut rows = Vec::new();
    for p in 0..=tor_max {
        let mut levels = Vec::new();
        let mut transitions = Vec::new();
        for (idx, &_n) in ind.levels.iter().enumerate() {
            let dim = binomial(ind.vars, p);
            levels.push(FgAbelianGroup::free(dim));
            if idx + 1 < ind.levels.len() {
                let ratio = u64::from(ind.levels[idx + 1] / ind.levels[idx]);
                let m = koszul_transition_on_tor(ind.vars, p, ratio)?;
                transitions.push(
                    GroupHom::new(FgAbelianGroup::free(dim), FgAbelianGroup::free(dim), m)
                        .expect("free groups"),
                );
            }
        }
        // self-similarity: consecutive transition matrices are identical
        let self_similar = transitions
            .windows(2)
            .all(|w| w[0].matrix() == w[1].matrix());
        let verdict = decide_verdict(&levels, &transitions, window, self_similar);
        rows.push(TorRow {
            degree: p,
            levels,
            transitions,
            verdict,
        });
    }
    Ok(TorTable { rows })
}

/// A chain of modules over one fixed level ring with transition maps.
pub struct ModuleChain {
    pub ring: MonomialLevelRing,
    pub modules: Vec<NilModule>,
    /// `transitions[j]` maps `modules[j]` into `modules[j+1]`
    pub transitions: Vec<GroupHom>,
    /// set by constructors that verify the growth pattern; gates zero
    /// certification
    pub self_similar: bool,
}

impl ModuleChain {
    pub fn new(
        ring: MonomialLevelRing,
        modules: Vec<NilModule>,
        transitions: Vec<GroupHom>,
        self_similar: bool,
    ) -> Result<Self, crate::module::ModuleError> {
        assert_eq!(transitions.len() + 1, modules.len());
        for (j, t) in transitions.iter().enumerate() {
            for v in 0..ring.vars {
                if !t
                    .compose(modules[j].action(v))
                    .equals(&modules[j + 1].action(v).compose(t))
                {
                    return Err(crate::module::ModuleError::NotAHom);
                }
            }
        }
        Ok(ModuleChain {
            ring,
            modules,
            transitions,
            self_similar,
        })
    }

    /// Truncated shift modules of ranks `1..=count` with the canonical
    /// inclusions; the pattern is verified, which certifies self-similarity.
    pub fn prufer(level: u32, count: usize) -> ModuleChain {
        use crate::module::prufer_module;
        let modules: Vec<NilModule> = (1..=count).map(|n| prufer_module(level, n)).collect();
        let transitions: Vec<GroupHom> = (0..count - 1)
            .map(|j| {
                let (a, b) = (&modules[j], &modules[j + 1]);
                let mut m = IntMatrix::zeros(j + 2, j + 1);
                for i in 0..=j {
                    m[(i, i)] = Int::from(1);
                }
                GroupHom::new(a.group().clone(), b.group().clone(), m).expect("free groups")
            })
            .collect();
        ModuleChain::new(MonomialLevelRing::new(1, level), modules, transitions, true)
            .expect("canonical inclusions commute with the shifts")
    }
}

/// Tor of the trivial module against each chain level, with the induced
/// transition maps on homology.
pub fn ind_tor_module_chain(chain: &ModuleChain, tor_max: usize, window: usize) -> TorTable {
    let complexes: Vec<KoszulComplex> = chain.modules.iter().map(KoszulComplex::new).collect();
    let chain_maps: Vec<Vec<GroupHom>> = chain
        .transitions
        .iter()
        .enumerate()
        .map(|(j, t)| koszul_chain_map(&complexes[j], &complexes[j + 1], t))
        .collect();
    let tor_max = tor_max.min(chain.ring.vars);
    let mut rows = Vec::new();
    for p in 0..=tor_max {
        let subquotients: Vec<_> = complexes.iter().map(|c| c.tor(p)).collect();
        let levels: Vec<FgAbelianGroup> = subquotients.iter().map(|s| s.group.clone()).collect();
        let mut transitions = Vec::new();
        for j in 0..chain.transitions.len() {
            let src = &subquotients[j];
            let dst = &subquotients[j + 1];
            let mut cols = IntMatrix::zeros(dst.group.num_gens(), src.group.num_gens());
            for g in 0..src.group.num_gens() {
                let mut e = vec![Int::zero(); src.group.num_gens()];
                e[g] = Int::from(1);
                let cycle = src.representative(&e);
                let image = chain_maps[j][p].eval(&cycle);
                let cls = dst.class_of(&image);
                for (r, c) in cls.into_iter().enumerate() {
                    cols[(r, g)] = c;
                }
            }
            transitions.push(
                GroupHom::new(src.group.clone(), dst.group.clone(), cols)
                    .expect("induced map on homology"),
            );
        }
        let verdict = decide_verdict(&levels, &transitions, window, chain.self_similar);
        rows.push(TorRow {
            degree: p,
            levels,
            transitions,
            verdict,
        });
    }
    TorTable { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::IndRing;

    #[test]
    fn one_variable_ring_chain_tor_one_is_zero_certified() {
        let ind = IndRing::new(1, vec![1, 2, 4]).unwrap();
        let table = ind_tor_ring_chain(&ind, 2, 3).unwrap();
        // degree 1: Z at each level, zero transitions
        let row = table.row(1);
        assert!(row.levels.iter().all(|g| g.free_rank() == 1));
        assert!(row.transitions.iter().all(GroupHom::is_zero_map));
        assert!(matches!(row.verdict, ColimitVerdict::ZeroCertified { .. }));
        // degree 2 is empty in one variable
        assert!(matches!(
            table.row(2).verdict,
            ColimitVerdict::ZeroCertified { .. }
        ));
    }

    #[test]
    fn two_variable_ring_chain_is_zero_certified_in_both_degrees() {
        let ind = IndRing::new(2, vec![1, 2, 4]).unwrap();
        let table = ind_tor_ring_chain(&ind, 2, 3).unwrap();
        assert!(matches!(
            table.row(1).verdict,
            ColimitVerdict::ZeroCertified { .. }
        ));
        assert_eq!(table.row(1).levels[0].free_rank(), 2);
        assert!(matches!(
            table.row(2).verdict,
            ColimitVerdict::ZeroCertified { .. }
        ));
        assert_eq!(table.row(2).levels[0].free_rank(), 1);
    }

    #[test]
    fn prufer_chain_degree_zero_dies_degree_one_stabilizes() {
        let chain = ModuleChain::prufer(1, 5);
        let table = ind_tor_module_chain(&chain, 1, 3);
        let row0 = table.row(0);
        assert!(row0.levels.iter().all(|g| g.free_rank() == 1));
        assert!(row0.transitions.iter().all(GroupHom::is_zero_map));
        assert!(matches!(row0.verdict, ColimitVerdict::ZeroCertified { .. }));
        let row1 = table.row(1);
        assert!(row1.levels.iter().all(|g| g.free_rank() == 1));
        assert!(row1.transitions.iter().all(GroupHom::is_isomorphism));
        match &row1.verdict {
            ColimitVerdict::Stable(g) => assert_eq!(g.free_rank(), 1),
            v => panic!("expected stable, got {v:?}"),
        }
    }
}
