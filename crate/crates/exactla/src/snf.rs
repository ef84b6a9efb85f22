use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::elim::{BigDomain, Eliminator, I128Domain};
use crate::SparseMatrix;

/// Invariant factors d₁ | d₂ | … | d_r of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigUint>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors larger than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion().iter().map(|d| d.to_u64()).collect()
    }

    pub fn factors_u64(&self) -> Option<Vec<u64>> {
        self.invariant_factors.iter().map(|d| d.to_u64()).collect()
    }
}

pub fn smith_normal_form(m: &SparseMatrix) -> SmithForm {
    let diag: Vec<BigUint> = match Eliminator::new(&I128Domain, m.rows(), m.cols(), m.entries().iter().copied()).run() {
        Ok(d) => d.into_iter().map(|v| BigUint::from(v.unsigned_abs())).collect(),
        Err(_) => Eliminator::new(&BigDomain, m.rows(), m.cols(), m.entries().iter().copied())
            .run()
            .expect("arbitrary precision never overflows")
            .into_iter()
            .map(|v: BigInt| v.magnitude().clone())
            .collect(),
    };
    SmithForm {
        invariant_factors: normalize_diagonal(diag),
    }
}

/// Turns an arbitrary nonzero diagonal into a divisibility chain with the same cokernel.
fn normalize_diagonal(diag: Vec<BigUint>) -> Vec<BigUint> {
    let ones = diag.iter().filter(|d| d.is_one()).count();
    let mut rest: Vec<BigUint> = diag.into_iter().filter(|d| !d.is_one()).collect();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            if g != rest[i] {
                let l = &rest[i] / &g * &rest[j];
                rest[i] = g;
                rest[j] = l;
            }
        }
    }
    let mut out = vec![BigUint::one(); ones];
    out.extend(rest);
    out.sort();
    out
}
