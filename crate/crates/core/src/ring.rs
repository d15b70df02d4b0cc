//! Nonunital rings in two exact backends: finite-rank structure constants
//! over the integers, and monomial level rings with fractional exponents
//! (plus chains of those standing for filtered colimits). Every ring is
//! paired with its unitalization, which adjoins a unit basis element in
//! position zero.

use crate::zlinalg::{smith_normal_form, solve_diophantine};
use crate::{Int, IntMatrix};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Validation failure when building a ring or a ring homomorphism.
#[derive(Debug, Clone)]
pub enum RingError {
    /// `(b_i b_j) b_l != b_i (b_j b_l)`; carries the two expansions.
    AssociativityViolation {
        i: usize,
        j: usize,
        l: usize,
        lhs: Vec<Int>,
        rhs: Vec<Int>,
    },
    ShapeMismatch(String),
    /// Hom-groups of a preadditive category must be free in this backend.
    TorsionHomGroup {
        from: usize,
        to: usize,
    },
    MissingIdentity {
        object: usize,
    },
    CompositionNotAssociative {
        x: usize,
        y: usize,
        z: usize,
        w: usize,
    },
    NotMultiplicative {
        i: usize,
        j: usize,
    },
    /// Level chains must ascend by divisibility.
    BadLevelChain {
        prev: u32,
        next: u32,
    },
}

impl std::fmt::Display for RingError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingError::AssociativityViolation { i, j, l, lhs, rhs } => write!(
                f,
                "associativity fails on basis triple ({i},{j},{l}): ({lhs:?}) != ({rhs:?})"
            ),
            RingError::ShapeMismatch(s) => write!(f, "shape mismatch: {s}"),
            RingError::TorsionHomGroup { from, to } => write!(
                f,
                "hom-group {from}->{to} has torsion; this backend requires free hom-groups"
            ),
            RingError::MissingIdentity { object } => {
                write!(f, "object {object} has no identity in its hom-group data")
            }
            RingError::CompositionNotAssociative { x, y, z, w } => write!(
                f,
                "composition not associative on objects ({x},{y},{z},{w})"
            ),
            RingError::NotMultiplicative { i, j } => {
                write!(f, "map is not multiplicative on basis pair ({i},{j})")
            }
            RingError::BadLevelChain { prev, next } => {
                write!(f, "level {next} is not a multiple of level {prev}")
            }
        }
    }
}

impl std::error::Error for RingError {}

/// Associative nonunital ring that is free of finite rank as an abelian
/// group, with integer structure constants `b_i b_j = sum_l c[i][j][l] b_l`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteRankRing {
    basis_labels: Vec<String>,
    /// `structure[i][j]` is the coordinate vector of `b_i * b_j`.
    structure: Vec<Vec<Vec<Int>>>,
}

impl FiniteRankRing {
    pub fn new(
        basis_labels: Vec<String>,
        structure: Vec<Vec<Vec<Int>>>,
    ) -> Result<Self, RingError> {
        let k = basis_labels.len();
        if structure.len() != k
            || structure
                .iter()
                .any(|row| row.len() != k || row.iter().any(|v| v.len() != k))
        {
            return Err(RingError::ShapeMismatch(format!(
                "structure constants must have shape {k}x{k}x{k}"
            )));
        }
        let ring = FiniteRankRing {
            basis_labels,
            structure,
        };
        ring.check_associativity()?;
        Ok(ring)
    }

    pub fn from_i64(labels: &[&str], structure: &[&[&[i64]]]) -> Result<Self, RingError> {
        Self::new(
            labels.iter().map(|s| s.to_string()).collect(),
            structure
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| v.iter().map(|&x| Int::from(x)).collect())
                        .collect()
                })
                .collect(),
        )
    }

    /// The zero ring.
    pub fn zero_ring() -> Self {
        FiniteRankRing {
            basis_labels: Vec::new(),
            structure: Vec::new(),
        }
    }

    fn check_associativity(&self) -> Result<(), RingError> {
        let k = self.rank();
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let lhs = self.mul(&self.basis_product(i, j), &basis_vec(k, l));
                    let rhs = self.mul(&basis_vec(k, i), &self.basis_product(j, l));
                    if lhs != rhs {
                        return Err(RingError::AssociativityViolation { i, j, l, lhs, rhs });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Int> {
        self.structure[i][j].clone()
    }

    /// Product of two coordinate vectors.
    pub fn mul(&self, x: &[Int], y: &[Int]) -> Vec<Int> {
        let k = self.rank();
        let mut out = vec![Int::zero(); k];
        for i in 0..k {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..k {
                if y[j].is_zero() {
                    continue;
                }
                let coef = x[i].clone() * y[j].clone();
                for l in 0..k {
                    if !self.structure[i][j][l].is_zero() {
                        out[l] += coef.clone() * self.structure[i][j][l].clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `b_i`.
    pub fn left_mult(&self, i: usize) -> IntMatrix {
        let k = self.rank();
        IntMatrix::from_fn(k, k, |l, j| self.structure[i][j][l].clone())
    }

    /// Matrix of right multiplication by `b_i`.
    pub fn right_mult(&self, i: usize) -> IntMatrix {
        let k = self.rank();
        IntMatrix::from_fn(k, k, |l, j| self.structure[j][i][l].clone())
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, x: &[Int]) -> IntMatrix {
        let k = self.rank();
        let mut m = IntMatrix::zeros(k, k);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.left_mult(i).scale(c));
            }
        }
        m
    }

    pub fn right_mult_by(&self, x: &[Int]) -> IntMatrix {
        let k = self.rank();
        let mut m = IntMatrix::zeros(k, k);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.right_mult(i).scale(c));
            }
        }
        m
    }

    /// Opposite ring: structure constants transposed in the first two
    /// indices.
    pub fn opposite(&self) -> FiniteRankRing {
        let k = self.rank();
        let structure = (0..k)
            .map(|i| (0..k).map(|j| self.structure[j][i].clone()).collect())
            .collect();
        FiniteRankRing {
            basis_labels: self
                .basis_labels
                .iter()
                .map(|s| format!("{s}^op"))
                .collect(),
            structure,
        }
    }

    /// Direct product with componentwise operations; block-diagonal
    /// structure constants.
    pub fn direct_product(&self, other: &FiniteRankRing) -> FiniteRankRing {
        let (ka, kb) = (self.rank(), other.rank());
        let k = ka + kb;
        let mut structure = vec![vec![vec![Int::zero(); k]; k]; k];
        for i in 0..ka {
            for j in 0..ka {
                for l in 0..ka {
                    structure[i][j][l] = self.structure[i][j][l].clone();
                }
            }
        }
        for i in 0..kb {
            for j in 0..kb {
                for l in 0..kb {
                    structure[ka + i][ka + j][ka + l] = other.structure[i][j][l].clone();
                }
            }
        }
        let mut labels: Vec<String> = self
            .basis_labels
            .iter()
            .map(|s| format!("({s},0)"))
            .collect();
        labels.extend(other.basis_labels.iter().map(|s| format!("(0,{s})")));
        FiniteRankRing {
            basis_labels: labels,
            structure,
        }
    }

    /// Is the subgroup spanned by all basis products the whole ring?
    pub fn is_idempotent(&self) -> bool {
        let k = self.rank();
        if k == 0 {
            return true;
        }
        let mut rows = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                rows.push(self.basis_product(i, j));
            }
        }
        let m = IntMatrix::from_rows(rows);
        let snf = smith_normal_form(&m);
        let diag = snf.diag();
        diag.len() == k && diag.iter().all(|d| d.is_one())
    }

    /// A two-sided unit element inside the ring itself, when one exists.
    pub fn two_sided_unit(&self) -> Option<Vec<Int>> {
        let k = self.rank();
        if k == 0 {
            return None;
        }
        // e with e*b_j = b_j and b_j*e = b_j for all j
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..k {
            for l in 0..k {
                // sum_i e_i (b_i b_j)_l = (b_j)_l
                rows.push((0..k).map(|i| self.structure[i][j][l].clone()).collect());
                rhs.push(if l == j { Int::one() } else { Int::zero() });
                rows.push((0..k).map(|i| self.structure[j][i][l].clone()).collect());
                rhs.push(if l == j { Int::one() } else { Int::zero() });
            }
        }
        let a = IntMatrix::from_rows(rows);
        solve_diophantine(&a, &rhs).expect("shapes agree")
    }
}

fn basis_vec(k: usize, i: usize) -> Vec<Int> {
    let mut v = vec![Int::zero(); k];
    v[i] = Int::one();
    v
}

/// `Z ⊕ R` with the adjoined unit as basis element 0 and the base ring
/// embedded as the two-sided ideal spanned by basis elements `1..=k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Unitalization {
    base: FiniteRankRing,
    full: FiniteRankRing,
    /// present when the base ring already had a two-sided unit; the
    /// unitalization then behaves like a product `Z x R`
    base_unit: Option<Vec<Int>>,
}

impl Unitalization {
    pub fn new(base: FiniteRankRing) -> Self {
        let k = base.rank();
        let n = k + 1;
        let mut structure = vec![vec![vec![Int::zero(); n]; n]; n];
        for i in 0..n {
            // unit acts as identity on both sides
            structure[0][i][i] = Int::one();
            if i > 0 {
                structure[i][0][i] = Int::one();
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    structure[i + 1][j + 1][l + 1] = base.structure[i][j][l].clone();
                }
            }
        }
        let mut labels = vec!["1".to_string()];
        labels.extend_from_slice(base.labels());
        let full = FiniteRankRing {
            basis_labels: labels,
            structure,
        };
        debug_assert!(full.check_associativity().is_ok());
        let base_unit = base.two_sided_unit();
        Unitalization {
            base,
            full,
            base_unit,
        }
    }

    pub fn base(&self) -> &FiniteRankRing {
        &self.base
    }

    /// The unital ring of rank `k + 1`.
    pub fn full(&self) -> &FiniteRankRing {
        &self.full
    }

    pub fn rank(&self) -> usize {
        self.full.rank()
    }

    /// Unit already present inside the base ring; the construction is still
    /// valid (it gives the `Z x R` pattern) but callers may want to know.
    pub fn base_already_unital(&self) -> Option<&Vec<Int>> {
        self.base_unit.as_ref()
    }

    /// Coordinates of a base-ring element inside the full ring.
    pub fn embed(&self, x: &[Int]) -> Vec<Int> {
        let mut v = vec![Int::zero()];
        v.extend_from_slice(x);
        v
    }

    /// Restrict a full-ring element lying in the ideal to base coordinates.
    pub fn restrict(&self, x: &[Int]) -> Option<Vec<Int>> {
        if x[0].is_zero() {
            Some(x[1..].to_vec())
        } else {
            None
        }
    }
}

/// Homomorphism of finite-rank nonunital rings, stored as the matrix taking
/// domain basis coordinates to codomain coordinates.
#[derive(Clone, Debug)]
pub struct RingHom {
    domain: FiniteRankRing,
    codomain: FiniteRankRing,
    matrix: IntMatrix,
}

impl RingHom {
    pub fn new(
        domain: FiniteRankRing,
        codomain: FiniteRankRing,
        matrix: IntMatrix,
    ) -> Result<Self, RingError> {
        if matrix.rows() != codomain.rank() || matrix.cols() != domain.rank() {
            return Err(RingError::ShapeMismatch(format!(
                "hom matrix must be {}x{}",
                codomain.rank(),
                domain.rank()
            )));
        }
        // multiplicativity on basis pairs; additivity is built into the
        // linear representation
        for i in 0..domain.rank() {
            for j in 0..domain.rank() {
                let lhs = matrix.mul_vec(&domain.basis_product(i, j));
                let rhs = codomain.mul(&matrix.col(i), &matrix.col(j));
                if lhs != rhs {
                    return Err(RingError::NotMultiplicative { i, j });
                }
            }
        }
        Ok(RingHom {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn identity(ring: &FiniteRankRing) -> Self {
        RingHom {
            domain: ring.clone(),
            codomain: ring.clone(),
            matrix: IntMatrix::identity(ring.rank()),
        }
    }

    pub fn zero(domain: &FiniteRankRing, codomain: &FiniteRankRing) -> Self {
        RingHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: IntMatrix::zeros(codomain.rank(), domain.rank()),
        }
    }

    pub fn domain(&self) -> &FiniteRankRing {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteRankRing {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Int]) -> Vec<Int> {
        self.matrix.mul_vec(x)
    }
}

/// Preadditive-category input: free hom-groups with composition given by
/// structure constants on the chosen bases. Hom-groups with torsion have no
/// free basis and are rejected up front by [`PreadditiveData::from_groups`];
/// the structure-constant backend requires the ring to be a free module
/// over the integers.
pub struct PreadditiveData {
    pub objects: usize,
    /// `hom_rank[x][y]` = rank of the morphism group x -> y.
    pub hom_rank: Vec<Vec<usize>>,
    /// `compose[x][y][z][g][f]` = coordinates (length `hom_rank[x][z]`) of
    /// the composite of the g-th basis morphism of y->z with the f-th basis
    /// morphism of x->y.
    pub compose: Vec<Vec<Vec<Vec<Vec<Vec<Int>>>>>>,
    /// identity coordinates in each `hom[x][x]`.
    pub identities: Vec<Vec<Int>>,
}

impl PreadditiveData {
    /// Validate hom data given as abelian groups: every hom-group must be
    /// free for this backend; a torsion group is rejected with the pair it
    /// sits at.
    pub fn from_groups(
        objects: usize,
        hom_groups: &[Vec<crate::FgAbelianGroup>],
        compose: Vec<Vec<Vec<Vec<Vec<Vec<Int>>>>>>,
        identities: Vec<Vec<Int>>,
    ) -> Result<PreadditiveData, RingError> {
        let mut hom_rank = vec![vec![0usize; objects]; objects];
        for (x, row) in hom_groups.iter().enumerate() {
            for (y, g) in row.iter().enumerate() {
                if !g.invariant_factors().is_empty() {
                    return Err(RingError::TorsionHomGroup { from: x, to: y });
                }
                hom_rank[x][y] = g.free_rank();
            }
        }
        Ok(PreadditiveData {
            objects,
            hom_rank,
            compose,
            identities,
        })
    }
}

/// Ring built from a small preadditive category: the direct sum of all
/// hom-groups with composition as multiplication, together with the
/// complete orthogonal idempotent family of identity morphisms.
pub struct CategoryRing {
    pub ring: FiniteRankRing,
    /// coordinates of `e_x = id_x` inside the ring
    pub idempotents: Vec<Vec<Int>>,
    /// basis index ranges per (source, target) pair
    pub blocks: BTreeMap<(usize, usize), std::ops::Range<usize>>,
}

pub fn ring_from_preadditive_category(data: &PreadditiveData) -> Result<CategoryRing, RingError> {
    let n = data.objects;
    let mut blocks = BTreeMap::new();
    let mut offset = 0usize;
    for x in 0..n {
        for y in 0..n {
            let r = data.hom_rank[x][y];
            blocks.insert((x, y), offset..offset + r);
            offset += r;
        }
    }
    let k = offset;
    let mut labels = Vec::with_capacity(k);
    for x in 0..n {
        for y in 0..n {
            for b in 0..data.hom_rank[x][y] {
                labels.push(format!("h{x}to{y}_{b}"));
            }
        }
    }
    let mut structure = vec![vec![vec![Int::zero(); k]; k]; k];
    // multiplication: (g: y->z) * (f: x->y) = g∘f; non-composable pairs are 0
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let bf = blocks[&(x, y)].clone();
                let bg = blocks[&(y, z)].clone();
                let bo = blocks[&(x, z)].clone();
                for (gi, g) in bg.clone().enumerate() {
                    for (fi, f) in bf.clone().enumerate() {
                        let coords = &data.compose[x][y][z][gi][fi];
                        if coords.len() != data.hom_rank[x][z] {
                            return Err(RingError::ShapeMismatch(format!(
                                "composition table ({x},{y},{z}) has wrong length"
                            )));
                        }
                        for (li, l) in bo.clone().enumerate() {
                            structure[g][f][l] = coords[li].clone();
                        }
                    }
                }
            }
        }
    }
    let ring = FiniteRankRing::new(labels, structure).map_err(|e| match e {
        RingError::AssociativityViolation { i, j, l, .. } => RingError::CompositionNotAssociative {
            x: i,
            y: j,
            z: l,
            w: 0,
        },
        other => other,
    })?;

    // identities e_x, their axioms, and the complete orthogonal family
    let mut idempotents = Vec::new();
    for x in 0..n {
        if data.identities[x].len() != data.hom_rank[x][x] {
            return Err(RingError::MissingIdentity { object: x });
        }
        let mut e = vec![Int::zero(); k];
        for (bi, b) in blocks[&(x, x)].clone().enumerate() {
            e[b] = data.identities[x][bi].clone();
        }
        idempotents.push(e);
    }
    for (x, e) in idempotents.iter().enumerate() {
        if ring.mul(e, e) != *e {
            return Err(RingError::MissingIdentity { object: x });
        }
        for (y, f) in idempotents.iter().enumerate() {
            if x != y && ring.mul(e, f).iter().any(|c| !c.is_zero()) {
                return Err(RingError::MissingIdentity { object: x });
            }
        }
    }
    // id_y ∘ f = f = f ∘ id_x for every basis morphism f: x -> y
    for x in 0..n {
        for y in 0..n {
            for b in blocks[&(x, y)].clone() {
                let f = basis_vec(k, b);
                if ring.mul(&idempotents[y], &f) != f || ring.mul(&f, &idempotents[x]) != f {
                    return Err(RingError::MissingIdentity { object: y });
                }
            }
        }
    }
    Ok(CategoryRing {
        ring,
        idempotents,
        blocks,
    })
}

/// Quiver `1 -> 2` over the integers: hom-groups `Z` at (1,1), (2,2), (1,2)
/// and zero at (2,1). Isomorphic to upper-triangular 2x2 integer matrices.
pub fn a2_quiver_ring() -> CategoryRing {
    let one = vec![Int::one()];
    let data = PreadditiveData {
        objects: 2,
        hom_rank: vec![vec![1, 1], vec![0, 1]],
        compose: build_compose_tables(2, &[vec![1, 1], vec![0, 1]], |x, y, z, _g, _f| {
            // all nonzero compositions multiply the single generators
            let _ = (x, y, z);
            vec![Int::one()]
        }),
        identities: vec![one.clone(), one],
    };
    ring_from_preadditive_category(&data).expect("the quiver data is valid")
}

/// Helper: build the nested composition table, calling `f` only for pairs
/// where all three hom-groups are nonzero.
pub fn build_compose_tables(
    objects: usize,
    hom_rank: &[Vec<usize>],
    mut f: impl FnMut(usize, usize, usize, usize, usize) -> Vec<Int>,
) -> Vec<Vec<Vec<Vec<Vec<Vec<Int>>>>>> {
    (0..objects)
        .map(|x| {
            (0..objects)
                .map(|y| {
                    (0..objects)
                        .map(|z| {
                            (0..hom_rank[y][z])
                                .map(|g| {
                                    (0..hom_rank[x][y])
                                        .map(|ff| {
                                            let out = f(x, y, z, g, ff);
                                            debug_assert_eq!(out.len(), hom_rank[x][z]);
                                            out
                                        })
                                        .collect()
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Monomial level rings and their chains
// ---------------------------------------------------------------------------

/// Exponent vector with implicit denominator equal to the ring level:
/// numerators of the fractional exponents of each variable.
pub type Exponent = Vec<u64>;

/// Sparse integer combination of monomials, keyed by exponent vector in a
/// fixed lexicographic order so equality is syntactic.
pub type MonomialElem = BTreeMap<Exponent, Int>;

/// `Z[z_1^{1/N}, ..., z_n^{1/N}]` together with its ideal of elements whose
/// monomials all have positive total degree. The nonunital ring is that
/// ideal; the full polynomial ring is its unitalization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MonomialLevelRing {
    pub vars: usize,
    pub level: u32,
}

impl MonomialLevelRing {
    pub fn new(vars: usize, level: u32) -> Self {
        assert!(level >= 1, "level must be at least 1");
        MonomialLevelRing { vars, level }
    }

    pub fn mul(&self, a: &MonomialElem, b: &MonomialElem) -> MonomialElem {
        let mut out = MonomialElem::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = out.entry(e).or_insert_with(Int::zero);
                *entry += ca.clone() * cb.clone();
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn monomial(&self, numerators: &[u64]) -> MonomialElem {
        assert_eq!(numerators.len(), self.vars);
        let mut m = MonomialElem::new();
        m.insert(numerators.to_vec(), Int::one());
        m
    }

    /// Total degree of an exponent vector, as a (numerator, level) pair.
    pub fn total_degree(&self, e: &Exponent) -> (u64, u32) {
        (e.iter().sum(), self.level)
    }

    /// Does the element lie in the nonunital ideal (all monomials of
    /// positive total degree)?
    pub fn in_ideal(&self, a: &MonomialElem) -> bool {
        a.keys().all(|e| e.iter().any(|&x| x > 0))
    }

    /// The ideal is never idempotent at a fixed level: a degree-`1/N`
    /// generator cannot be a product of two positive-degree elements.
    /// Returns the witness degree numerator (over the level).
    pub fn idempotency_witness(&self) -> Option<u64> {
        if self.vars == 0 {
            None
        } else {
            Some(1)
        }
    }
}

/// Ascending chain of monomial level rings along divisible levels, with the
/// exponent-preserving relabelings as transition homomorphisms. Stands for
/// the colimit ring spanned by all fractional-exponent monomials.
#[derive(Clone, Debug)]
pub struct IndRing {
    pub vars: usize,
    pub levels: Vec<u32>,
}

impl IndRing {
    pub fn new(vars: usize, levels: Vec<u32>) -> Result<Self, RingError> {
        assert!(!levels.is_empty());
        for w in levels.windows(2) {
            if w[1] % w[0] != 0 || w[1] <= w[0] {
                return Err(RingError::BadLevelChain {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        let ind = IndRing { vars, levels };
        ind.check_transitions();
        Ok(ind)
    }

    /// Doubling chain `N, 2N, 4N, ...`, cofinal in divisibility order.
    pub fn doubling(vars: usize, start: u32, count: usize) -> Self {
        let levels = (0..count).map(|i| start << i).collect();
        IndRing::new(vars, levels).expect("doubling chain is divisible")
    }

    pub fn ring_at(&self, idx: usize) -> MonomialLevelRing {
        MonomialLevelRing::new(self.vars, self.levels[idx])
    }

    /// Relabel an element of level `levels[idx]` into level `levels[idx+1]`
    /// coordinates: numerators scale by the level ratio.
    pub fn transition(&self, idx: usize, a: &MonomialElem) -> MonomialElem {
        let ratio = (self.levels[idx + 1] / self.levels[idx]) as u64;
        a.iter()
            .map(|(e, c)| (e.iter().map(|&x| x * ratio).collect(), c.clone()))
            .collect()
    }

    /// Transitions are ring homomorphisms on monomial generators and
    /// compose coherently across consecutive levels.
    fn check_transitions(&self) {
        for idx in 0..self.levels.len().saturating_sub(1) {
            let r = self.ring_at(idx);
            for v in 0..self.vars {
                for w in 0..self.vars {
                    let mut ev = vec![0u64; self.vars];
                    ev[v] += 1;
                    let mut ew = vec![0u64; self.vars];
                    ew[w] += 1;
                    let prod = r.mul(&r.monomial(&ev), &r.monomial(&ew));
                    let lhs = self.transition(idx, &prod);
                    let next = self.ring_at(idx + 1);
                    let rhs = next.mul(
                        &self.transition(idx, &r.monomial(&ev)),
                        &self.transition(idx, &r.monomial(&ew)),
                    );
                    assert_eq!(lhs, rhs, "transition fails multiplicativity");
                }
            }
        }
        // coherence across triples: scaling numerators twice equals scaling once
        for idx in 0..self.levels.len().saturating_sub(2) {
            let r = self.ring_at(idx);
            for v in 0..self.vars {
                let mut ev = vec![0u64; self.vars];
                ev[v] = 1;
                let one_step = self.transition(idx + 1, &self.transition(idx, &r.monomial(&ev)));
                let ratio = (self.levels[idx + 2] / self.levels[idx]) as u64;
                let direct: MonomialElem = r
                    .monomial(&ev)
                    .iter()
                    .map(|(e, c)| {
                        (
                            e.iter().map(|&x| x * ratio).collect::<Vec<u64>>(),
                            c.clone(),
                        )
                    })
                    .collect();
                assert_eq!(one_step, direct, "transition composition incoherent");
            }
        }
    }

    /// Each level generator becomes a product at the first later level whose
    /// level is at least twice as large; reports the certifying level per
    /// chain level, `None` for levels that cannot be certified in the chain.
    pub fn idempotency_certificates(&self) -> Vec<Option<u32>> {
        self.levels
            .iter()
            .map(|&n| {
                self.levels
                    .iter()
                    .copied()
                    .find(|&m| m % n == 0 && m >= 2 * n)
            })
            .collect()
    }

    /// The colimit ring is idempotent along the chain when every level with
    /// a successor is certified; the chain's self-similar relabeling rule
    /// extends the certificate to the colimit.
    pub fn is_idempotent_along_chain(&self) -> bool {
        let certs = self.idempotency_certificates();
        certs[..certs.len().saturating_sub(1)]
            .iter()
            .all(Option::is_some)
    }
}
