use super::Scalar;
use num_traits::Zero;

/// Dimension mismatch in a matrix operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimError {
    pub expected: (usize, usize),
    pub got: (usize, usize),
}

impl std::fmt::Display for DimError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "dimension mismatch: expected {}x{}, got {}x{}",
            self.expected.0, self.expected.1, self.got.0, self.got.1
        )
    }
}

impl std::error::Error for DimError {}

/// Dense matrix in row-major order. Entries are exact; all operations are
/// total for matching shapes.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<I> {
    rows: usize,
    cols: usize,
    entries: Vec<I>,
}

impl<I: Scalar> Mat<I> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![I::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = I::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> I) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Mat {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<I>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from machine integers (tests, fixtures).
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| I::from(x)).collect())
                .collect(),
        )
    }

    pub fn col_vector(v: Vec<I>) -> Self {
        let rows = v.len();
        Mat {
            rows,
            cols: 1,
            entries: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[I] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<I> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| -self[(r, c)].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + other[(r, c)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - other[(r, c)].clone()
        })
    }

    pub fn scale(&self, s: &I) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() * s.clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = a.clone() * other[(k, c)].clone();
                    out[(r, c)] = out[(r, c)].clone() + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[I]) -> Vec<I> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = I::zero();
                for c in 0..self.cols {
                    acc = acc + self[(r, c)].clone() * v[c].clone();
                }
                acc
            })
            .collect()
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self[(r, c)].clone()
            } else {
                other[(r - self.rows, c)].clone()
            }
        })
    }

    pub fn submatrix_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[target] += q * row[src]
    pub fn add_row_multiple(&mut self, target: usize, src: usize, q: &I) {
        for c in 0..self.cols {
            let add = self[(src, c)].clone() * q.clone();
            self[(target, c)] = self[(target, c)].clone() + add;
        }
    }

    /// col[target] += q * col[src]
    pub fn add_col_multiple(&mut self, target: usize, src: usize, q: &I) {
        for r in 0..self.rows {
            let add = self[(r, src)].clone() * q.clone();
            self[(r, target)] = self[(r, target)].clone() + add;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            self[(r, c)] = -self[(r, c)].clone();
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            self[(r, c)] = -self[(r, c)].clone();
        }
    }
}

impl<I> std::ops::Index<(usize, usize)> for Mat<I> {
    type Output = I;
    fn index(&self, (r, c): (usize, usize)) -> &I {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl<I> std::ops::IndexMut<(usize, usize)> for Mat<I> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut I {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

impl<I: std::fmt::Display> std::fmt::Debug for Mat<I> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.entries[r * self.cols + c].to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
