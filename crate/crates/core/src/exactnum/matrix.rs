//! Dense matrices over the active field with exact elimination.

use std::fmt;

use super::field::{Field, Scalar};
use super::poly::Poly;
use crate::error::{Error, Result};

/// A dense `rows x cols` matrix of field scalars, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    /// Build from integer entries given row by row.
    pub fn from_rows_i64(field: &Field, rows: &[Vec<i64>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Mat::from_fn(r, c, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn add(&self, field: &Field, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            field.add(&self[(r, c)], &other[(r, c)])
        })
    }

    pub fn sub(&self, field: &Field, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            field.sub(&self[(r, c)], &other[(r, c)])
        })
    }

    pub fn scale(&self, field: &Field, s: &Scalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| field.mul(&self[(r, c)], s))
    }

    pub fn mul(&self, field: &Field, other: &Mat) -> Mat {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Mat::zero(field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if field.is_zero(&self[(r, k)]) {
                    continue;
                }
                for c in 0..other.cols {
                    let t = field.mul(&self[(r, k)], &other[(k, c)]);
                    out[(r, c)] = field.add(&out[(r, c)], &t);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, field: &Field, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = field.zero();
                for c in 0..self.cols {
                    acc = field.add(&acc, &field.mul(&self[(r, c)], &v[c]));
                }
                acc
            })
            .collect()
    }

    pub fn is_zero_mat(&self, field: &Field) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    /// Paste `other` into self at the given offset.
    pub fn paste(&mut self, other: &Mat, row_off: usize, col_off: usize) {
        for r in 0..other.rows {
            for c in 0..other.cols {
                self[(row_off + r, col_off + c)] = other[(r, c)].clone();
            }
        }
    }

    /// Block diagonal assembly.
    pub fn block_diag(field: &Field, blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zero(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            out.paste(b, ro, co);
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    /// Horizontal concatenation.
    pub fn hcat(field: &Field, blocks: &[&Mat]) -> Mat {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zero(field, rows, cols);
        let mut co = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            out.paste(b, 0, co);
            co += b.cols;
        }
        out
    }

    /// Columns selected from a matrix, as a new matrix.
    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        Mat::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    /// Row echelon reduction in place; returns pivot columns.
    /// Exact division by pivots keeps everything in the field.
    pub fn row_reduce(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !field.is_zero(&self[(r, col)])) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = field.inv(&self[(row, col)]).expect("pivot nonzero");
            for c in col..self.cols {
                self[(row, c)] = field.mul(&self[(row, c)], &inv);
            }
            for r in 0..self.rows {
                if r != row && !field.is_zero(&self[(r, col)]) {
                    let factor = self[(r, col)].clone();
                    for c in col..self.cols {
                        let t = field.mul(&factor, &self[(row, c)]);
                        self[(r, c)] = field.sub(&self[(r, c)], &t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut m = self.clone();
        m.row_reduce(field).len()
    }

    /// Basis of the kernel, returned as the columns of a matrix.
    pub fn kernel(&self, field: &Field) -> Mat {
        let mut m = self.clone();
        let pivots = m.row_reduce(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zero(field, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis[(fc, k)] = field.one();
            for (prow, &pc) in pivots.iter().enumerate() {
                basis[(pc, k)] = field.neg(&m[(prow, fc)]);
            }
        }
        basis
    }

    /// Solve `self * x = b` for a single solution; `None` if inconsistent.
    pub fn solve(&self, field: &Field, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.row_reduce(field);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![field.zero(); self.cols];
        for (prow, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(prow, self.cols)].clone();
        }
        Some(x)
    }

    /// Solve `self * X = B` column by column; `None` if any column fails.
    pub fn solve_mat(&self, field: &Field, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows);
        let mut out = Mat::zero(field, self.cols, b.cols);
        for c in 0..b.cols {
            let x = self.solve(field, &b.col(c))?;
            for r in 0..self.cols {
                out[(r, c)] = x[r].clone();
            }
        }
        Some(out)
    }

    pub fn inverse(&self, field: &Field) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let inv = self.solve_mat(field, &Mat::identity(field, self.rows))?;
        // A full solution of A X = I for square A is a two-sided inverse.
        if self.rank(field) < self.rows {
            return None;
        }
        Some(inv)
    }

    pub fn is_invertible(&self, field: &Field) -> bool {
        self.is_square() && self.rank(field) == self.rows
    }

    /// Basis of the left kernel (kernel of the transpose), rows of the result.
    pub fn left_kernel(&self, field: &Field) -> Mat {
        self.transpose().kernel(field).transpose()
    }

    /// Characteristic polynomial det(xI - A) via the Samuelson-Berkowitz
    /// recursion. Division-free, so it is exact over any field here.
    pub fn char_poly(&self, field: &Field) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "char_poly needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(field));
        }
        // Vector of coefficients of det(xI - A_k), leading coefficient first,
        // grown one principal minor at a time via Toeplitz products.
        let mut coeffs: Vec<Scalar> = vec![field.one(), field.neg(&self[(0, 0)])];
        for k in 1..n {
            // a = A[k][k], row = A[k][0..k], col = A[0..k][k], sub = A[0..k][0..k]
            let a = self[(k, k)].clone();
            let sub = Mat::from_fn(k, k, |r, c| self[(r, c)].clone());
            let row = Mat::from_fn(1, k, |_, c| self[(k, c)].clone());
            let col = Mat::from_fn(k, 1, |r, _| self[(r, k)].clone());
            // toeplitz column: [1, -a, -row*col, -row*sub*col, -row*sub^2*col, ...]
            let mut tcol: Vec<Scalar> = Vec::with_capacity(k + 2);
            tcol.push(field.one());
            tcol.push(field.neg(&a));
            let mut acc = col.clone();
            for _ in 0..k {
                let val = row.mul(field, &acc)[(0, 0)].clone();
                tcol.push(field.neg(&val));
                acc = sub.mul(field, &acc);
            }
            // Multiply the lower-triangular Toeplitz matrix generated by tcol
            // with the previous coefficient vector.
            let mut next = vec![field.zero(); coeffs.len() + 1];
            for (i, t) in tcol.iter().enumerate() {
                if field.is_zero(t) {
                    continue;
                }
                for (j, cprev) in coeffs.iter().enumerate() {
                    if i + j < next.len() {
                        let prod = field.mul(t, cprev);
                        next[i + j] = field.add(&next[i + j], &prod);
                    }
                }
            }
            coeffs = next;
        }
        coeffs.reverse(); // ascending degree
        Ok(Poly::new(field, coeffs))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_one_by_one_over_f7() {
        let f = Field::fp(7);
        let m = Mat::from_rows_i64(&f, &[vec![5]]);
        let cp = m.char_poly(&f).unwrap();
        // x - 5
        assert_eq!(cp, Poly::new(&f, vec![f.from_i64(-5), f.one()]));
    }

    #[test]
    fn char_poly_identity_over_q() {
        let f = Field::Rational;
        let m = Mat::identity(&f, 2);
        let cp = m.char_poly(&f).unwrap();
        // (x-1)^2 = x^2 - 2x + 1
        assert_eq!(
            cp,
            Poly::new(&f, vec![f.from_i64(1), f.from_i64(-2), f.one()])
        );
    }

    #[test]
    fn char_poly_swap_matrix() {
        let f = Field::Rational;
        let m = Mat::from_rows_i64(&f, &[vec![0, 1], vec![1, 0]]);
        let cp = m.char_poly(&f).unwrap();
        // x^2 - 1
        assert_eq!(cp, Poly::new(&f, vec![f.from_i64(-1), f.zero(), f.one()]));
    }

    #[test]
    fn kernel_and_solve_are_consistent() {
        let f = Field::fp(7);
        let m = Mat::from_rows_i64(&f, &[vec![1, 2, 3], vec![2, 4, 1]]);
        let k = m.kernel(&f);
        assert_eq!(k.cols, 1);
        assert!(m.mul(&f, &k).is_zero_mat(&f));
        let b = vec![f.from_i64(1), f.from_i64(2)];
        let x = m.solve(&f, &b).unwrap();
        assert_eq!(m.mul_vec(&f, &x), b);
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::Rational;
        let m = Mat::from_rows_i64(&f, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), Mat::identity(&f, 2));
        let sing = Mat::from_rows_i64(&f, &[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse(&f).is_none());
    }
}
