//! Exact linear algebra over F_p, Q and Z: rank, Smith normal form and linear solving.

mod dense;
mod elim;
mod error;
mod fp;
mod ring;
mod snf;
mod sparse;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use dense::FpMatrix;
pub use error::LinAlgError;
pub use fp::{is_prime, PrimeField};
pub use ring::CoefficientRing;
pub use snf::{smith_normal_form, SmithForm};
pub use sparse::SparseMatrix;

use elim::{BigDomain, Eliminator, FpDomain, I128Domain};

/// Rank over a field. The integers are rejected; use [`smith_normal_form`].
pub fn rank(m: &SparseMatrix, ring: CoefficientRing) -> Result<usize, LinAlgError> {
    match ring {
        CoefficientRing::PrimeField(p) => Ok(rank_mod_p(m, PrimeField::new(p as u64)?)),
        CoefficientRing::Rationals => Ok(rank_rational(m)),
        CoefficientRing::Integers => Err(LinAlgError::NotAField),
    }
}

pub fn rank_mod_p(m: &SparseMatrix, field: PrimeField) -> usize {
    let dom = FpDomain(field);
    Eliminator::new(&dom, m.rows(), m.cols(), m.entries().iter().copied())
        .run()
        .expect("field arithmetic never overflows")
        .len()
}

/// Rank over Q, which is the number of nonzero diagonal entries after integral elimination.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    match Eliminator::new(&I128Domain, m.rows(), m.cols(), m.entries().iter().copied()).run() {
        Ok(d) => d.len(),
        Err(_) => Eliminator::new(&BigDomain, m.rows(), m.cols(), m.entries().iter().copied())
            .run()
            .expect("arbitrary precision never overflows")
            .len(),
    }
}

/// A solution vector over the requested field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldVector {
    Fp(Vec<u64>),
    Rational(Vec<BigRational>),
}

pub fn solve_linear(m: &SparseMatrix, b: &[i64], ring: CoefficientRing) -> Result<FieldVector, LinAlgError> {
    match ring {
        CoefficientRing::PrimeField(p) => {
            let f = PrimeField::new(p as u64)?;
            let rhs: Vec<u64> = b.iter().map(|&v| f.reduce(v)).collect();
            m.to_fp(f)
                .solve(&rhs)?
                .map(FieldVector::Fp)
                .ok_or(LinAlgError::NoSolution)
        }
        CoefficientRing::Rationals => solve_rational(m, b).map(FieldVector::Rational),
        CoefficientRing::Integers => Err(LinAlgError::NotAField),
    }
}

pub fn solve_rational(m: &SparseMatrix, b: &[i64]) -> Result<Vec<BigRational>, LinAlgError> {
    if b.len() != m.rows() {
        return Err(LinAlgError::DimensionMismatch {
            expected: m.rows(),
            got: b.len(),
        });
    }
    let cols = m.cols();
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); cols + 1]; m.rows()];
    for &(r, c, v) in m.entries() {
        a[r][c] = q(v);
    }
    for (r, &v) in b.iter().enumerate() {
        a[r][cols] = q(v);
    }
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(pr) = (row..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        let inv = BigRational::one() / a[row][c].clone();
        for k in c..=cols {
            a[row][k] = &a[row][k] * &inv;
        }
        for i in 0..a.len() {
            if i != row && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for k in c..=cols {
                    let t = &factor * &a[row][k];
                    a[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    if a[row..].iter().any(|r| !r[cols].is_zero()) {
        return Err(LinAlgError::NoSolution);
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][cols].clone();
    }
    Ok(x)
}
