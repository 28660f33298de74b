use std::fmt;
use std::ops::{Index, IndexMut};

use super::echelon::{Certificate, Echelon, Insert};
use super::rat::Rat;
use super::sparse::{to_sparse, SparseVec};

pub type RatVec = Vec<Rat>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("dimension mismatch: expected {expected}, got {got}")]
pub struct DimensionMismatch {
    pub expected: usize,
    pub got: usize,
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> RatMat {
        RatMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> RatMat {
        let mut m = RatMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds from explicit rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<RatVec>) -> Result<RatMat, DimensionMismatch> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend(r);
        }
        Ok(RatMat { rows: n, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> RatMat {
        let cols = rows.first().map_or(0, |r| r.len());
        let v = rows.iter().map(|r| r.iter().map(|&x| Rat::from_int(x)).collect()).collect();
        RatMat::from_rows(cols, v).expect("ragged rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<RatVec> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> RatMat {
        let mut t = RatMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn mul(&self, other: &RatMat) -> Result<RatMat, DimensionMismatch> {
        if self.cols != other.rows {
            return Err(DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = RatMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &RatMat) -> Result<RatMat, DimensionMismatch> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(DimensionMismatch { expected: self.rows * self.cols, got: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(RatMat { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &RatMat) -> Result<RatMat, DimensionMismatch> {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> RatMat {
        RatMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// `A x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[Rat]) -> Result<RatVec, DimensionMismatch> {
        if x.len() != self.cols {
            return Err(DimensionMismatch { expected: self.cols, got: x.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `x A` for a row vector `x`.
    pub fn vec_mul(&self, x: &[Rat]) -> Result<RatVec, DimensionMismatch> {
        if x.len() != self.rows {
            return Err(DimensionMismatch { expected: self.rows, got: x.len() });
        }
        let mut out = vec![Rat::zero(); self.cols];
        for (r, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, b) in self.row(r).iter().enumerate() {
                if !b.is_zero() {
                    out[c] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &RatMat) -> Result<RatMat, DimensionMismatch> {
        if self.rows != other.rows {
            return Err(DimensionMismatch { expected: self.rows, got: other.rows });
        }
        let rows = (0..self.rows)
            .map(|r| self.row(r).iter().chain(other.row(r)).cloned().collect())
            .collect();
        RatMat::from_rows(self.cols + other.cols, rows)
    }

    fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|r| to_sparse(self.row(r))).collect()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols, false);
        for r in self.sparse_rows() {
            e.insert(r, Rat::zero());
        }
        e
    }
}

impl Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|r| self.row(r))).finish()
    }
}

/// Reduced row echelon form and its pivot columns. Zero rows are kept at the
/// bottom so the result has the shape of the input.
pub fn rref(m: &RatMat) -> (RatMat, Vec<usize>) {
    let e = m.echelon();
    let mut out = RatMat::zeros(m.rows, m.cols);
    let mut pivots = Vec::new();
    for (i, (p, coeffs, _)) in e.reduced_rows().into_iter().enumerate() {
        pivots.push(p);
        for (c, x) in coeffs {
            out[(i, c)] = x;
        }
    }
    (out, pivots)
}

pub fn rank(m: &RatMat) -> usize {
    m.echelon().rank()
}

/// Null space basis, one vector per non-pivot column in increasing order.
pub fn kernel_basis(m: &RatMat) -> Vec<RatVec> {
    m.echelon().kernel_basis()
}

/// Outcome of [`solve`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    /// Particular solution with every free variable set to zero.
    Consistent(RatVec),
    /// `row` is the first original row whose reduction reads `0 = c`, `c != 0`.
    Inconsistent { row: usize, certificate: Certificate },
}

impl Solution {
    pub fn ok(self) -> Option<RatVec> {
        match self {
            Solution::Consistent(x) => Some(x),
            Solution::Inconsistent { .. } => None,
        }
    }
}

pub fn solve(a: &RatMat, b: &[Rat]) -> Result<Solution, DimensionMismatch> {
    if b.len() != a.rows {
        return Err(DimensionMismatch { expected: a.rows, got: b.len() });
    }
    let mut e = Echelon::new(a.cols, true);
    for (r, row) in a.sparse_rows().into_iter().enumerate() {
        if let Insert::Inconsistent(certificate) = e.insert(row, b[r].clone()) {
            return Ok(Solution::Inconsistent { row: r, certificate });
        }
    }
    Ok(Solution::Consistent(e.particular_solution()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> RatVec {
        x.iter().map(|&a| Rat::from_int(a)).collect()
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&RatMat::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, RatMat::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
        let (r, p) = rref(&RatMat::identity(3));
        assert_eq!(r, RatMat::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        let (r, p) = rref(&RatMat::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(r, RatMat::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn solve_examples() {
        let x = solve(&RatMat::identity(2), &v(&[3, 5])).unwrap().ok().unwrap();
        assert_eq!(x, v(&[3, 5]));
        let x = solve(&RatMat::from_i64(&[&[1, 1]]), &v(&[7])).unwrap().ok().unwrap();
        assert_eq!(x, v(&[7, 0]));
        let a = RatMat::from_i64(&[&[1], &[1]]);
        match solve(&a, &v(&[1, 2])).unwrap() {
            Solution::Inconsistent { row, certificate } => {
                assert_eq!(row, 1);
                let rows: Vec<_> = a.sparse_rows();
                assert!(certificate.verify(&rows, &v(&[1, 2]), 1));
            }
            s => panic!("unexpected {s:?}"),
        }
        assert!(solve(&a, &v(&[1])).is_err());
    }

    #[test]
    fn kernel_and_rank_examples() {
        assert_eq!(kernel_basis(&RatMat::zeros(2, 3)).len(), 3);
        assert!(kernel_basis(&RatMat::identity(4)).is_empty());
        let k = kernel_basis(&RatMat::from_i64(&[&[1, 1, 0]]));
        assert_eq!(k, vec![v(&[-1, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(rank(&RatMat::zeros(3, 2)), 0);
        assert_eq!(rank(&RatMat::identity(5)), 5);
        assert_eq!(rank(&RatMat::from_i64(&[&[1, 2], &[2, 4]])), 1);
    }
}
