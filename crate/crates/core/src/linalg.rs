//! Deterministic exact linear algebra over a field scalar.
//!
//! All higher layers reduce to the routines in this module, so the bases
//! produced here follow fixed canonical conventions:
//!
//! * [`Mat::rref`] computes the reduced row echelon form with pivots chosen
//!   as the first nonzero entry of each row, scanning columns left to right;
//! * kernel bases come from the echelon form's free columns, one vector per
//!   free column in column order, rescaled so the first nonzero entry is 1;
//! * image bases are the reduced column echelon form (echelon form of the
//!   transpose), ordered by pivot row;
//! * quotient projections send a vector to its free coordinates after
//!   reduction modulo the subspace.
//!
//! Given equal inputs the outputs are bitwise identical — no randomness, no
//! hashing, no floating point.

use crate::scalar::Scalar;

/// Dense matrix, row-major.  Rows or columns may be zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> std::fmt::Debug for Mat<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> std::ops::Index<(usize, usize)> for Mat<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<S: Scalar> std::ops::IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix whose columns are the given vectors (each of length
    /// `rows`).  An empty list yields a `rows x 0` matrix.
    pub fn from_cols(rows: usize, cols: Vec<Vec<S>>) -> Self {
        let c = cols.len();
        assert!(cols.iter().all(|col| col.len() == rows), "ragged columns");
        let mut m = Mat::zeros(rows, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn column_vector(entries: Vec<S>) -> Self {
        let rows = entries.len();
        Mat { rows, cols: 1, data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out: Mat<S> = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b.clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| -a.clone()).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &S) -> Self {
        let data = self.data.iter().map(|a| a.clone() * s.clone()).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Vertical concatenation, `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[&Mat<S>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(ro + i, co + j)] = b[(i, j)].clone();
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> Rref<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // Find the first row at or below `row` with a nonzero entry.
            let Some(pr) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if pr != row {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, row * m.cols + j);
                }
            }
            let inv = S::one() / m[(row, col)].clone();
            for j in col..m.cols {
                let v = m[(row, j)].clone() * inv.clone();
                m[(row, j)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let delta = factor.clone() * m[(row, j)].clone();
                    m[(r, j)] = m[(r, j)].clone() - delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Canonical kernel basis, returned as the columns of a matrix.
    ///
    /// One basis vector per free column of the echelon form, in column
    /// order, rescaled so that its first nonzero entry equals 1.
    pub fn kernel_basis(&self) -> Mat<S> {
        let rref = self.rref();
        let free: Vec<usize> =
            (0..self.cols).filter(|c| !rref.pivots.contains(c)).collect();
        let mut cols = Vec::new();
        for &f in &free {
            let mut v = vec![S::zero(); self.cols];
            v[f] = S::one();
            for (r, &p) in rref.pivots.iter().enumerate() {
                v[p] = -rref.mat[(r, f)].clone();
            }
            // Rescale so the first nonzero coordinate is 1.
            if let Some(first) = v.iter().position(|x| !x.is_zero()) {
                let inv = S::one() / v[first].clone();
                for x in v.iter_mut() {
                    *x = x.clone() * inv.clone();
                }
            }
            cols.push(v);
        }
        Mat::from_cols(self.cols, cols)
    }

    /// Canonical basis of the column space, returned as the columns of a
    /// matrix in reduced column echelon form ordered by pivot row.
    pub fn image_basis(&self) -> Mat<S> {
        let rref_t = self.transpose().rref();
        let cols: Vec<Vec<S>> =
            (0..rref_t.pivots.len()).map(|r| rref_t.mat.row(r)).collect();
        Mat::from_cols(self.rows, cols)
    }

    /// Solves `self * x = b` for a single right-hand column vector.
    ///
    /// Returns the canonical particular solution (free variables set to
    /// zero) or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Mat<S>) -> Option<Mat<S>> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        assert_eq!(b.cols, 1, "solve expects a column vector");
        let aug = self.hstack(b).rref();
        if aug.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.cols, 1);
        for (r, &p) in aug.pivots.iter().enumerate() {
            x[(p, 0)] = aug.mat[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Solves `self * X = B` column by column; `None` if any column fails.
    pub fn solve_matrix(&self, b: &Mat<S>) -> Option<Mat<S>> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let aug = self.hstack(b).rref();
        if aug.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.cols, b.cols);
        for (r, &p) in aug.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = aug.mat[(r, self.cols + j)].clone();
            }
        }
        Some(x)
    }
}

/// Result of [`Mat::rref`].
pub struct Rref<S> {
    pub mat: Mat<S>,
    pub pivots: Vec<usize>,
}

/// Summary of rank, kernel and image with canonical bases.
pub struct RankData<S> {
    pub rank: usize,
    /// Kernel basis vectors as matrix columns.
    pub kernel: Mat<S>,
    /// Image basis vectors as matrix columns.
    pub image: Mat<S>,
}

/// Computes rank, canonical kernel basis and canonical image basis at once.
pub fn rank_kernel_image<S: Scalar>(m: &Mat<S>) -> RankData<S> {
    RankData { rank: m.rank(), kernel: m.kernel_basis(), image: m.image_basis() }
}

/// A quotient of an ambient coordinate space by a spanned subspace.
///
/// `proj` maps ambient coordinates onto quotient coordinates; `section` is a
/// right inverse (`proj * section` is the identity) whose image is the span
/// of the standard basis vectors at the free columns of the subspace's
/// echelon form.
pub struct Quotient<S> {
    pub dim: usize,
    pub proj: Mat<S>,
    pub section: Mat<S>,
}

/// Quotient of an `ambient_dim`-dimensional space by the span of the given
/// vectors (the columns of `subspace`).
pub fn quotient_by_subspace<S: Scalar>(ambient_dim: usize, subspace: &Mat<S>) -> Quotient<S> {
    assert_eq!(subspace.rows(), ambient_dim, "subspace ambient mismatch");
    let rref = subspace.transpose().rref();
    let pivots = rref.pivots.clone();
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let dim = free.len();
    // proj(x) = coordinates of x - sum_p x_p * row_p at the free positions,
    // where row_p is the echelon row with pivot p.
    let mut proj = Mat::zeros(dim, ambient_dim);
    for (qi, &f) in free.iter().enumerate() {
        proj[(qi, f)] = S::one();
        for (r, &p) in pivots.iter().enumerate() {
            proj[(qi, p)] = -rref.mat[(r, f)].clone();
        }
    }
    let mut section = Mat::zeros(ambient_dim, dim);
    for (qi, &f) in free.iter().enumerate() {
        section[(f, qi)] = S::one();
    }
    Quotient { dim, proj, section }
}
