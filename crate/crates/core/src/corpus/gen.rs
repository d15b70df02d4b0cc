//! Deterministic seeded generation of small test modules: quotients of
//! free modules over the unitalization, mixed with null summands. Every
//! output validates the module axioms by construction.

use crate::module::{FreeModule, Module, Side};
use crate::ring::{FiniteRankRing, Unitalization};
use crate::{FgAbelianGroup, Int};

/// Small deterministic generator (splitmix64); fixed here so seeds mean the
/// same thing forever, independent of external crates.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound.max(1)
    }

    /// Uniform in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// A random quotient of the rank-one free module, possibly summed with a
/// random null module, trimmed until the group has at most `max_gens`
/// generators.
pub fn random_module(
    ring: &FiniteRankRing,
    side: Side,
    rng: &mut SplitMix64,
    max_gens: usize,
) -> Module {
    let unital = Unitalization::new(ring.clone());
    for _ in 0..64 {
        let free = FreeModule::new(&unital, side, 1);
        let n = unital.rank();
        // quotient by a submodule generated by a few small random elements
        let rel_count = rng.below(3) as usize;
        let mut seeds = Vec::new();
        for _ in 0..rel_count {
            let v: Vec<Int> = (0..n).map(|_| Int::from(rng.int_in(-2, 2))).collect();
            seeds.push(v);
        }
        let span = free.module.submodule_span(&seeds);
        let (q, _) = free.module.quotient(&span);
        let candidate = if rng.below(2) == 0 {
            let torsion = match rng.below(4) {
                0 => vec![],
                1 => vec![Int::from(2)],
                2 => vec![Int::from(3)],
                _ => vec![Int::from(4)],
            };
            let free_rank = rng.below(2) as usize;
            if free_rank == 0 && torsion.is_empty() {
                q
            } else {
                let null = Module::null_module(
                    ring,
                    side,
                    FgAbelianGroup::with_orders(free_rank, torsion),
                );
                Module::direct_sum(&[&q, &null])
                    .expect("same ring and side")
                    .0
            }
        } else {
            q
        };
        if candidate.group().num_gens() <= max_gens {
            return candidate;
        }
        // otherwise cut down to a generated submodule
        let m = candidate.group().num_gens();
        let seeds: Vec<Vec<Int>> = (0..2)
            .map(|_| {
                let mut v = vec![Int::from(0); m];
                let pos = rng.below(m as u64) as usize;
                v[pos] = Int::from(1);
                v
            })
            .collect();
        let span = candidate.submodule_span(&seeds);
        let (sub, _) = candidate.submodule(&span);
        if sub.group().num_gens() <= max_gens && !sub.group().is_trivial() {
            return sub;
        }
    }
    // deterministic fallback
    Module::null_module(ring, side, FgAbelianGroup::free(1))
}
