//! Exact dense linear algebra over the scalar field and over `Q`.
//!
//! Gaussian elimination serves rank, kernel and solve; determinants use
//! fraction-free (Bareiss) elimination on a polynomial matrix obtained by
//! clearing each row's denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{IPoly, LaurentPoly, Scalar};

/// The field operations elimination needs.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Division by a nonzero element.
    fn div(&self, other: &Self) -> Self;
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self.checked_div(other).expect("pivot is nonzero")
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce<F: Field>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one().div(&rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = v.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..ncols].iter_mut().zip(&pivot_row[c..ncols]) {
                *x = x.sub(&factor.mul(p));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

/// Basis of `{v : A v = 0}` for the matrix given by its rows.
pub fn kernel<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = F::zero().sub(&m[r][f]);
            }
            v
        })
        .collect()
}

/// Unique solution of `A u = b`, where `A` is given by its columns.
pub fn solve_columns<F: Field>(columns: &[Vec<F>], b: &[F]) -> Result<Vec<F>> {
    let n = columns.len();
    let mut aug: Vec<Vec<F>> = (0..b.len())
        .map(|i| {
            let mut row: Vec<F> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.contains(&n) {
        return Err(Error::Inconsistent("right-hand side outside column span".into()));
    }
    if pivots.len() < n {
        return Err(Error::Inconsistent("columns are linearly dependent".into()));
    }
    Ok((0..n).map(|r| aug[r][n].clone()).collect())
}

/// Determinant by fraction-free elimination.
///
/// Each row is multiplied by the lcm of its denominators, Bareiss
/// elimination runs over the Laurent polynomial ring with exact divisions,
/// and the row factors are divided back out at the end.
pub fn det(matrix: &[Vec<Scalar>]) -> Scalar {
    let n = matrix.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut row_dens = Scalar::one();
    let mut m: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
    for row in matrix {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
        let d = row.iter().fold(LaurentPoly::one(), |acc, s| acc.lcm(s.den()));
        m.push(
            row.iter()
                .map(|s| s.num() * &d.div_exact(s.den()).expect("lcm is a multiple"))
                .collect(),
        );
        row_dens = &row_dens * &Scalar::from_poly(d);
    }
    let det = bareiss(m);
    Scalar::from_poly(det)
        .checked_div(&row_dens)
        .expect("row denominators are nonzero")
}

/// Bareiss elimination over the Laurent polynomial ring.
///
/// Rows are scaled to integer coefficients first; every intermediate
/// quotient is then exact in `Z[x^±, y^±, q^±]`.
pub fn bareiss(m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<IPoly>> = Vec::with_capacity(n);
    for row in &m {
        let s = row
            .iter()
            .flat_map(|p| p.terms().map(|(_, c)| c.denom().clone()))
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        rows.push(
            row.iter()
                .map(|p| {
                    let (ip, ps) = IPoly::scaled_from_laurent(p);
                    ip.scale(&(&s / ps))
                })
                .collect(),
        );
        scale *= s;
    }
    let mut negate = false;
    let mut prev = IPoly::one();
    for k in 0..n - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&r| !rows[r][k].is_zero()) {
                Some(r) => {
                    rows.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = rows[i][j].mul(&rows[k][k]).sub(&rows[i][k].mul(&rows[k][j]));
                rows[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = rows[k][k].clone();
    }
    let d = rows[n - 1][n - 1]
        .to_laurent()
        .scale(&BigRational::new(BigInt::one(), scale));
    if negate {
        -d
    } else {
        d
    }
}
