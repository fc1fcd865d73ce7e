//! Dense rational matrices and vectors.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Rows must share one length; `cols` disambiguates the empty case.
    pub fn from_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Result<RatMatrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(RatMatrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(columns: &[Vec<Rat>], rows: usize) -> Result<RatMatrix> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_strings(rows: &[Vec<String>], cols: usize) -> Result<RatMatrix> {
        let parsed = rows
            .iter()
            .map(|r| rational::parse_vec(r))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed, cols)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| rational::format_vec(self.row(i)))
            .collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Rat] {
        &self.data
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<Rat>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = Rat::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Rat::zero();
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            let pivot = a[k][k].clone();
            det *= &pivot;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let factor = &a[i][k] / &pivot;
                for j in k..n {
                    let delta = &factor * &a[k][j];
                    a[i][j] -= delta;
                }
            }
        }
        det
    }

    /// Kronecker product; `(A ⊗ B)(x ⊗ y) = Ax ⊗ By` with row-major `⊗`.
    pub fn kron(&self, other: &RatMatrix) -> RatMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        m
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// First nonzero coordinate is positive.
pub fn is_lex_positive(v: &[Rat]) -> bool {
    v.iter()
        .find(|x| !x.is_zero())
        .is_some_and(Signed::is_positive)
}

/// Row-major `a ⊗ b`.
pub fn outer(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

pub fn neg_vec(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| -x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
            cols,
        )
        .unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[&[1, 2], &[3, 4]]).determinant(), int(-2));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), int(0));
        assert_eq!(RatMatrix::identity(3).determinant(), int(1));
        assert_eq!(RatMatrix::identity(0).determinant(), int(1));
        let a = RatMatrix::from_rows(vec![vec![frac(1, 2), int(1)], vec![int(0), frac(2, 3)]], 2)
            .unwrap();
        assert_eq!(a.determinant(), frac(1, 3));
    }

    #[test]
    fn kron_matches_outer() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[3, 0, 1], &[1, 1, 0], &[0, 2, 5]]);
        let x = vec![int(1), int(-2)];
        let y = vec![int(2), int(0), int(-1)];
        let lhs = a.kron(&b).mul_vec(&outer(&x, &y)).unwrap();
        let rhs = outer(&a.mul_vec(&x).unwrap(), &b.mul_vec(&y).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lex_positivity() {
        assert!(is_lex_positive(&[int(0), int(1), int(-9)]));
        assert!(!is_lex_positive(&[int(0), int(-1), int(9)]));
        assert!(!is_lex_positive(&[int(0), int(0)]));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RatMatrix::from_rows(vec![vec![int(1)], vec![int(1), int(2)]], 1).is_err());
    }
}
