use super::{smith_normal_form, solve_diophantine, Mat};
use crate::{Int, IntMatrix};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Normalized finitely generated abelian group: free part first, then
/// torsion coordinates with ascending invariant factors `d_1 | d_2 | ...`,
/// each at least 2. Carries the change of coordinates from the presentation
/// it was computed from, so elements written on presentation generators can
/// be moved to normalized coordinates and back.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FgAbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<Int>,
    /// presentation generator count
    generators: usize,
    /// (num_gens x generators): presentation coords -> normalized coords
    basis_transform: IntMatrix,
    /// (generators x num_gens): section of `basis_transform`
    lift: IntMatrix,
}

impl FgAbelianGroup {
    /// Free group of the given rank in normalized coordinates.
    pub fn free(rank: usize) -> Self {
        Self::with_orders(rank, Vec::new())
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// Group `Z^free ⊕ ⊕ Z/d_i` already in normalized coordinates.
    /// The factors must form a divisibility chain with every `d_i >= 2`.
    pub fn with_orders(free_rank: usize, invariant_factors: Vec<Int>) -> Self {
        for w in invariant_factors.windows(2) {
            assert!(
                (w[1].clone() % w[0].clone()).is_zero(),
                "invariant factors must form a divisibility chain"
            );
        }
        assert!(invariant_factors.iter().all(|d| *d >= Int::from(2)));
        let m = free_rank + invariant_factors.len();
        FgAbelianGroup {
            free_rank,
            invariant_factors,
            generators: m,
            basis_transform: Mat::identity(m),
            lift: Mat::identity(m),
        }
    }

    /// Cokernel of the relation matrix: the group on `generators` generators
    /// subject to one relation per row.
    pub fn from_presentation(relations: &IntMatrix, generators: usize) -> Self {
        assert_eq!(
            relations.cols(),
            generators,
            "presentation relations must have one column per generator"
        );
        // Relation vectors become columns; the cokernel of the column span is
        // normalized by u-coordinates of the SNF.
        let m = relations.transpose();
        let snf = smith_normal_form(&m);
        let diag = snf.diag();
        let mut torsion_idx = Vec::new();
        let mut free_idx = Vec::new();
        for i in 0..generators {
            let d = diag.get(i).cloned().unwrap_or_else(Int::zero);
            if d.is_zero() {
                free_idx.push(i);
            } else if d > Int::one() {
                torsion_idx.push(i);
            }
        }
        let invariant_factors: Vec<Int> = torsion_idx.iter().map(|&i| diag[i].clone()).collect();
        let selected: Vec<usize> = free_idx.iter().chain(torsion_idx.iter()).copied().collect();
        let basis_transform = IntMatrix::from_fn(selected.len(), generators, |r, c| {
            snf.u[(selected[r], c)].clone()
        });
        let lift = snf.u_inv.submatrix_cols(&selected);
        FgAbelianGroup {
            free_rank: free_idx.len(),
            invariant_factors,
            generators,
            basis_transform,
            lift,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    /// Number of normalized generators.
    pub fn num_gens(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    /// Number of presentation generators this group was computed from.
    pub fn presentation_gens(&self) -> usize {
        self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.num_gens() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the i-th normalized generator; zero for free generators.
    pub fn order(&self, i: usize) -> Int {
        if i < self.free_rank {
            Int::zero()
        } else {
            self.invariant_factors[i - self.free_rank].clone()
        }
    }

    pub fn orders(&self) -> Vec<Int> {
        (0..self.num_gens()).map(|i| self.order(i)).collect()
    }

    /// Same isomorphism class: equal free rank and invariant factors.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank && self.invariant_factors == other.invariant_factors
    }

    pub fn basis_transform(&self) -> &IntMatrix {
        &self.basis_transform
    }

    pub fn lift_matrix(&self) -> &IntMatrix {
        &self.lift
    }

    /// Reduce a normalized coordinate vector: torsion coordinates into
    /// `[0, d)`. Canonical form for element comparison.
    pub fn reduce(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.num_gens());
        v.iter()
            .enumerate()
            .map(|(i, x)| {
                let d = self.order(i);
                if d.is_zero() {
                    x.clone()
                } else {
                    x.mod_floor(&d)
                }
            })
            .collect()
    }

    /// Reduce every entry of a matrix whose rows live in this group.
    pub fn reduce_matrix(&self, m: &IntMatrix) -> IntMatrix {
        assert_eq!(m.rows(), self.num_gens());
        IntMatrix::from_fn(m.rows(), m.cols(), |r, c| {
            let d = self.order(r);
            if d.is_zero() {
                m[(r, c)].clone()
            } else {
                m[(r, c)].mod_floor(&d)
            }
        })
    }

    /// Presentation coordinates -> normalized coordinates, reduced.
    pub fn normalize(&self, pres: &[Int]) -> Vec<Int> {
        self.reduce(&self.basis_transform.mul_vec(pres))
    }

    /// Is the normalized vector the zero element?
    pub fn is_zero_elem(&self, v: &[Int]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Columns generating the relation lattice in normalized coordinates:
    /// `d_i * e_i` for each torsion generator.
    pub fn relation_lattice(&self) -> IntMatrix {
        let m = self.num_gens();
        let t = self.invariant_factors.len();
        let mut rel = IntMatrix::zeros(m, t);
        for (k, d) in self.invariant_factors.iter().enumerate() {
            rel[(self.free_rank + k, k)] = d.clone();
        }
        rel
    }

    /// Does the subgroup spanned by the columns of `span` contain `v`
    /// (everything in normalized coordinates)?
    pub fn span_contains(&self, span: &IntMatrix, v: &[Int]) -> bool {
        let sys = span.hstack(&self.relation_lattice());
        solve_diophantine(&sys, v).expect("shape checked").is_some()
    }

    /// Total order when finite.
    pub fn cardinality(&self) -> Option<Int> {
        if self.free_rank > 0 {
            return None;
        }
        let mut n = Int::one();
        for d in &self.invariant_factors {
            n *= d.clone();
        }
        Some(n)
    }

    /// Display form such as `Z^2 + Z/2 + Z/6`, `0` for the trivial group.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Plain tensor product of abstract groups over the integers.
pub fn tensor_groups(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let (ma, mb) = (a.num_gens(), b.num_gens());
    let gens = ma * mb;
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for i in 0..ma {
        for j in 0..mb {
            let g = num_integer::gcd(a.order(i), b.order(j));
            let o = if a.order(i).is_zero() {
                b.order(j)
            } else if b.order(j).is_zero() {
                a.order(i)
            } else {
                g
            };
            if !o.is_zero() {
                let mut row = vec![Int::zero(); gens];
                row[i * mb + j] = o;
                rows.push(row);
            }
        }
    }
    let rel = if rows.is_empty() {
        IntMatrix::zeros(0, gens)
    } else {
        IntMatrix::from_rows(rows)
    };
    FgAbelianGroup::from_presentation(&rel, gens)
}
