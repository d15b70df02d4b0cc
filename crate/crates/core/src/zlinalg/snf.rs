use super::{DimError, Mat, Scalar};

/// Smith normal form `U * A * V = D` with `U`, `V` unimodular and `D`
/// diagonal, nonnegative, each diagonal entry dividing the next.
/// The inverses of the transforms are accumulated alongside.
pub struct Snf<I> {
    pub d: Mat<I>,
    pub u: Mat<I>,
    pub v: Mat<I>,
    pub u_inv: Mat<I>,
    pub v_inv: Mat<I>,
}

impl<I: Scalar> Snf<I> {
    /// Diagonal entries of `D` (length `min(rows, cols)`).
    pub fn diag(&self) -> Vec<I> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diag().iter().filter(|x| !x.is_zero()).count()
    }
}

fn find_min_pivot<I: Scalar>(d: &Mat<I>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            if d[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if d[(i, j)].abs() < d[(bi, bj)].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Elimination with minimal-absolute-value pivot selection; the small pivot
/// keeps intermediate coefficient growth down without modular arithmetic.
pub fn smith_normal_form<I: Scalar>(a: &Mat<I>) -> Snf<I> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Mat::identity(rows);
    let mut u_inv = Mat::identity(rows);
    let mut v = Mat::identity(cols);
    let mut v_inv = Mat::identity(cols);

    // Row op row[x] += q*row[y] on D corresponds to the same op on U and the
    // inverse column op col[y] -= q*col[x] on U_inv; dually for columns.
    macro_rules! row_add {
        ($x:expr, $y:expr, $q:expr) => {{
            let q = $q;
            d.add_row_multiple($x, $y, &q);
            u.add_row_multiple($x, $y, &q);
            u_inv.add_col_multiple($y, $x, &-q);
        }};
    }
    macro_rules! col_add {
        ($x:expr, $y:expr, $q:expr) => {{
            let q = $q;
            d.add_col_multiple($x, $y, &q);
            v.add_col_multiple($x, $y, &q);
            v_inv.add_row_multiple($y, $x, &-q);
        }};
    }

    for t in 0..rows.min(cols) {
        'pivot: loop {
            let Some((pi, pj)) = find_min_pivot(&d, t) else {
                break 'pivot;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if !d[(i, t)].is_zero() {
                    let q = d[(i, t)].clone() / d[(t, t)].clone();
                    row_add!(i, t, -q);
                    if !d[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !d[(t, j)].is_zero() {
                    let q = d[(t, j)].clone() / d[(t, t)].clone();
                    col_add!(j, t, -q);
                    if !d[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }

            // Pull a non-divisible entry into the working row so the next
            // pivot round shrinks it; this is what produces the chain
            // d_t | d_{t+1}.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(d[(i, j)].clone() % d[(t, t)].clone()).is_zero() {
                        row_add!(t, i, I::one());
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }

    Snf {
        d,
        u,
        v,
        u_inv,
        v_inv,
    }
}

/// One integer solution of `A x = b`, or `None` when the system is
/// infeasible (the SNF-transformed right-hand side has a coordinate not
/// divisible by the corresponding diagonal entry).
pub fn solve_diophantine<I: Scalar>(a: &Mat<I>, b: &[I]) -> Result<Option<Vec<I>>, DimError> {
    if b.len() != a.rows() {
        return Err(DimError {
            expected: (a.rows(), 1),
            got: (b.len(), 1),
        });
    }
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let diag = snf.diag();
    let mut y = vec![I::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        let di = diag.get(i).cloned().unwrap_or_else(I::zero);
        if di.is_zero() {
            if !ci.is_zero() {
                return Ok(None);
            }
        } else {
            let (q, r) = num_integer::Integer::div_rem(ci, &di);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    Ok(Some(snf.v.mul_vec(&y)))
}

/// Columns spanning the integer kernel `{x : A x = 0}` (a basis).
pub fn kernel_basis<I: Scalar>(a: &Mat<I>) -> Mat<I> {
    let snf = smith_normal_form(a);
    let diag = snf.diag();
    let free: Vec<usize> = (0..a.cols())
        .filter(|&j| j >= diag.len() || diag[j].is_zero())
        .collect();
    snf.v.submatrix_cols(&free)
}

/// Columns forming a basis of the column span of `A`.
pub fn image_basis<I: Scalar>(a: &Mat<I>) -> Mat<I> {
    let snf = smith_normal_form(a);
    let diag = snf.diag();
    let cols: Vec<usize> = (0..diag.len()).filter(|&j| !diag[j].is_zero()).collect();
    let picked = snf.u_inv.submatrix_cols(&cols);
    let mut out = picked.clone();
    for (k, &j) in cols.iter().enumerate() {
        for r in 0..out.rows() {
            out[(r, k)] = picked[(r, k)].clone() * diag[j].clone();
        }
    }
    out
}

/// Fraction-free determinant (Bareiss); exact for any square matrix.
pub fn determinant<I: Scalar>(a: &Mat<I>) -> I {
    assert_eq!(a.rows(), a.cols(), "determinant of non-square matrix");
    let n = a.rows();
    if n == 0 {
        return I::one();
    }
    let mut m = a.clone();
    let mut sign = I::one();
    let mut prev = I::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return I::zero();
            };
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num =
                    m[(i, j)].clone() * m[(k, k)].clone() - m[(i, k)].clone() * m[(k, j)].clone();
                m[(i, j)] = num / prev.clone();
            }
        }
        prev = m[(k, k)].clone();
    }
    sign * m[(n - 1, n - 1)].clone()
}
