//! Counting paths that avoid a family of forbidden subpaths through a single determinant.
//!
//! For forbidden paths `pi_1..pi_n` from `I_j` to `F_j` in a DAG with source `I` and sink `F`,
//! the number of `I -> F` paths containing none of them as a contiguous subpath is the
//! determinant of
//!
//! ```text
//! M[i][i] = 1
//! M[i][j] = wt(pi_j) * gamma(F_j -> I_i)          i != j, both < n
//! M[i][n] = gamma(I -> I_i)
//! M[n][j] = wt(pi_j) * gamma(F_j -> F)
//! M[n][n] = gamma(I -> F)
//! ```
//!
//! provided no forbidden path overlaps another.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Square matrix over a ring, stored by rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    pub rows: Vec<Vec<R>>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(rows: Vec<Vec<R>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == rows.len()));
        Matrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix::new(
            self.rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        )
    }
}

impl Matrix<BigInt> {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }
}

/// Fraction-free Gaussian elimination with row pivoting.
pub fn determinant<R: Ring>(m: &Matrix<R>) -> Result<R> {
    let n = m.dim();
    let result = bareiss(m.rows.clone())?;
    if cfg!(debug_assertions) && n <= 4 {
        let check = cofactor(&m.rows);
        if check != result {
            return Err(Error::Internal(format!(
                "Bareiss gave {result:?}, cofactor expansion gave {check:?}"
            )));
        }
    }
    Ok(result)
}

fn bareiss<R: Ring>(mut a: Vec<Vec<R>>) -> Result<R> {
    let n = a.len();
    if n == 0 {
        return Ok(R::one());
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num.div_exact(&prev).ok_or_else(|| {
                    Error::Internal("inexact division during Bareiss elimination".into())
                })?;
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.negated() } else { d })
}

/// Laplace expansion along the first row.
pub fn cofactor<R: Ring>(a: &[Vec<R>]) -> R {
    let n = a.len();
    if n == 0 {
        return R::one();
    }
    let mut total = R::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<R>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = a[0][j].times(&cofactor(&minor));
        total = if j % 2 == 0 { total.plus(&term) } else { total.minus(&term) };
    }
    total
}

/// Assembles the avoidance matrix from its pieces.
///
/// `between(j, i)` is `gamma(F_j -> I_i)`, `from_source(i)` is `gamma(I -> I_i)`,
/// `to_sink(j)` is `gamma(F_j -> F)` and `total` is `gamma(I -> F)`.
pub fn avoidance_matrix<R: Ring>(
    weights: &[R],
    mut between: impl FnMut(usize, usize) -> R,
    mut from_source: impl FnMut(usize) -> R,
    mut to_sink: impl FnMut(usize) -> R,
    total: R,
) -> Matrix<R> {
    let n = weights.len();
    let mut rows = vec![vec![R::zero(); n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            rows[i][j] = if i == j {
                R::one()
            } else {
                weights[j].times(&between(j, i))
            };
        }
        rows[i][n] = from_source(i);
    }
    for j in 0..n {
        rows[n][j] = weights[j].times(&to_sink(j));
    }
    rows[n][n] = total;
    Matrix::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Poly;
    use num_traits::Zero;

    #[test]
    fn integer_determinants() {
        let m = Matrix::from_i64(&[&[1, 0, 1], &[0, 1, 2], &[1, 1, 5]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::from(2));
        let m = Matrix::from_i64(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::from(-3));
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::from(0));
        let big = Matrix::from_i64(&[
            &[2, -1, 0, 0, 3],
            &[1, 4, -2, 0, 0],
            &[0, 3, 1, 5, -1],
            &[7, 0, 0, 1, 2],
            &[0, 0, 6, -3, 1],
        ]);
        assert_eq!(determinant(&big).unwrap(), cofactor(&big.rows));
    }

    #[test]
    fn polynomial_determinant() {
        let one = Poly::from_i64(&[1]);
        let t = Poly::t();
        let m = Matrix::new(vec![
            vec![one.clone(), Poly::zero(), one.clone()],
            vec![Poly::zero(), one.clone(), Poly::from_i64(&[1, 1])],
            vec![t.clone(), t.clone(), Poly::from_i64(&[1, 3, 1])],
        ]);
        assert_eq!(determinant(&m).unwrap(), Poly::from_i64(&[1, 1]));
    }
}
