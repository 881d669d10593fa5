//! Dense exact matrices and deterministic Gaussian elimination.
//!
//! Everything downstream (kernels, quotients, pullbacks) leans on the
//! determinism contract here: `rref` scans columns left to right and rows top
//! to bottom, so the pivot set is the lexicographically first one, and `solve`
//! zeroes every free variable. Same input, same output, always.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// A rows x cols matrix over a fixed field, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Output of [`Matrix::rref`]: the reduced matrix plus its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Builds from row vectors, validating shape and scalar membership.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            for (j, s) in r.iter().enumerate() {
                if !field.contains(s) {
                    return Err(Error::DimensionMismatch(format!(
                        "entry ({i}, {j}) is not an element of {field}"
                    )));
                }
            }
        }
        let nrows = rows.len();
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Matrix product self * rhs.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch in matrix product");
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let f = self.field;
        Matrix::from_fn(f, self.rows, rhs.cols, |r, c| {
            let mut acc = f.zero();
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                acc = f.add_mul(&acc, a, &rhs[(k, c)]);
            }
            acc
        })
    }

    /// self * v for a column vector v.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for k in 0..self.cols {
                    let a = &self[(r, k)];
                    if a.is_zero() || v[k].is_zero() {
                        continue;
                    }
                    acc = f.add_mul(&acc, a, &v[k]);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| {
            self.field.add(&self[(r, c)], &rhs[(r, c)])
        })
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| {
            self.field.sub(&self[(r, c)], &rhs[(r, c)])
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| {
            self.field.neg(&self[(r, c)])
        })
    }

    /// Horizontal concatenation [self | rhs].
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                rhs[(r, c - self.cols)].clone()
            }
        })
    }

    /// Vertical concatenation of self on top of rhs.
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&rhs.entries);
        Matrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Reduced row echelon form. Pivot search takes the first nonzero entry
    /// in each column scanning top down, which makes the result (and the
    /// pivot column list) a pure function of the input.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(r0) = found else { continue };
            m.swap_rows(pivot_row, r0);
            let inv = f
                .inv(&m[(pivot_row, col)])
                .expect("pivot entry is nonzero");
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m[(r, col)].is_zero() {
                    let c = f.neg(&m[(r, col)]);
                    m.add_scaled_row(r, pivot_row, &c);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// A basis of the null space {v : self * v = 0}, one row per basis
    /// vector. For each free column the vector has a 1 there, the pivot
    /// coordinates are back-filled, and other free coordinates are 0; rows
    /// are ordered by free column index.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let Rref { matrix: m, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&m[(pr, fc)]);
            }
            rows.push(v);
        }
        Matrix::from_rows(f, rows, self.cols).expect("kernel rows are well formed")
    }

    /// One solution of self * x = b, or `None` if inconsistent. Free
    /// variables are set to zero, so the answer is canonical.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "shape mismatch in solve");
        let f = self.field;
        let rhs = Matrix::from_rows(f, b.iter().map(|s| vec![s.clone()]).collect(), 1)
            .expect("column vector");
        let aug = self.hstack(&rhs);
        let Rref { matrix: m, pivots } = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the constants column
        }
        let mut x = vec![f.zero(); self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = m[(pr, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let Rref { matrix: m, pivots } = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |r, c| {
            m[(r, n + c)].clone()
        }))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.field.mul(&self[(r, c)], s);
            self[(r, c)] = v;
        }
    }

    /// row[r] += s * row[src].
    fn add_scaled_row(&mut self, r: usize, src: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.field.add_mul(&self[(r, c)], s, &self[(src, c)]);
            self[(r, c)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

/// Reduces `v` against RREF basis rows: subtracts `v[pivot] * row` for each
/// row. The result has zeros in every pivot coordinate; it is zero exactly
/// when `v` lies in the row span.
pub fn reduce_mod_rows(basis: &Rref, v: &[Scalar]) -> Vec<Scalar> {
    let f = basis.matrix.field();
    assert_eq!(basis.matrix.cols(), v.len());
    let mut out = v.to_vec();
    for (r, &p) in basis.pivots.iter().enumerate() {
        if out[p].is_zero() {
            continue;
        }
        let c = f.neg(&out[p]);
        for j in 0..out.len() {
            let nv = f.add_mul(&out[j], &c, &basis.matrix[(r, j)]);
            out[j] = nv;
        }
    }
    out
}

/// Row-span membership test against an RREF basis.
pub fn row_span_contains(basis: &Rref, v: &[Scalar]) -> bool {
    reduce_mod_rows(basis, v).iter().all(Scalar::is_zero)
}

/// The coordinates of `v` in the RREF basis rows, or `None` if outside the
/// span. Because the basis is in RREF the coordinates are read directly off
/// the pivot positions.
pub fn coords_in_rows(basis: &Rref, v: &[Scalar]) -> Option<Vec<Scalar>> {
    if !row_span_contains(basis, v) {
        return None;
    }
    Some(basis.pivots.iter().map(|&p| v[p].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn m(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
            rows.first().map_or(0, |r| r.len()),
        )
        .unwrap()
    }

    #[test]
    fn rref_rank_one_over_f2() {
        let a = m(f2(), &[&[1, 1], &[1, 1]]);
        let r = a.rref();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.matrix, m(f2(), &[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn rref_rational() {
        let q = Field::rational();
        let a = m(q, &[&[2, 4], &[1, 3]]);
        let r = a.rref();
        assert_eq!(r.rank(), 2);
        assert_eq!(r.matrix, Matrix::identity(q, 2));
    }

    #[test]
    fn kernel_of_sum_map() {
        let a = m(f2(), &[&[1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), m(f2(), &[&[1, 1]]).row(0));
    }

    #[test]
    fn kernel_annihilates() {
        let q = Field::rational();
        let a = m(q, &[&[1, 2, 3], &[0, 1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.rows(), 1);
        for r in 0..k.rows() {
            assert!(a.mul_vec(k.row(r)).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_zeroes_free_variables() {
        let a = m(f2(), &[&[1, 1]]);
        let x = a.solve(&[f2().one()]).unwrap();
        assert_eq!(x, vec![f2().one(), f2().zero()]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let q = Field::rational();
        let a = m(q, &[&[1, 1], &[1, 1]]);
        assert_eq!(a.solve(&[q.one(), q.zero()]), None);
        let b = a.solve(&[q.one(), q.one()]).unwrap();
        assert_eq!(a.mul_vec(&b), vec![q.one(), q.one()]);
    }

    #[test]
    fn inverse_round_trips() {
        let q = Field::rational();
        let a = m(q, &[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(q, 2));
        assert_eq!(inv.mul(&a), Matrix::identity(q, 2));
        let s = m(q, &[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn reduction_and_membership() {
        let f = f2();
        let basis = m(f, &[&[1, 0, 1], &[0, 1, 1]]).rref();
        assert!(row_span_contains(&basis, &[f.one(), f.one(), f.zero()]));
        assert!(!row_span_contains(&basis, &[f.zero(), f.zero(), f.one()]));
        let coords = coords_in_rows(&basis, &[f.one(), f.one(), f.zero()]).unwrap();
        assert_eq!(coords, vec![f.one(), f.one()]);
    }

    #[test]
    fn deterministic_pivots_prefer_left_columns() {
        let q = Field::rational();
        let a = m(q, &[&[0, 1, 1], &[1, 1, 0]]);
        let r = a.rref();
        assert_eq!(r.pivots, vec![0, 1]);
    }
}
