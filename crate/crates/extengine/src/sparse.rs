//! Sparse subsets of {1..u} and the maps Θ_{u,k} from free Γ-modules onto B_u.

use exactla::{FpMatrix, PrimeField};
use serde::{Deserialize, Serialize};

use crate::bu::subsets;
use crate::decompose::rank_of;
use crate::{barcode, build_bu, ell, ExtError};

/// S is sparse when |S ∩ {1..i}| ≤ i/2 for every i. Element j of {1..u} is bit j−1.
pub fn is_sparse(set: u32, u: usize) -> bool {
    (1..=u).all(|i| 2 * (set & ((1u32 << i) - 1)).count_ones() as usize <= i)
}

pub fn sparse_subsets(u: usize, k: usize) -> Vec<u32> {
    subsets(u, k).into_iter().filter(|&s| is_sparse(s, u)).collect()
}

/// y^{[j]} z_S = Σ z_T over T ⊇ S with |T| = |S| + j, as a column in the weight −2(|S|+j) basis.
fn divided_power_image(u: usize, j: usize, set: u32) -> Vec<u64> {
    let target = subsets(u, set.count_ones() as usize + j);
    target.iter().map(|&t| (t & set == set) as u64).collect()
}

/// Θ_{u,k} in weight −2m: columns y^{[m−|S|]} X_S for sparse S with |S| ≤ k.
pub fn theta_matrix(u: usize, k: usize, m: usize, field: PrimeField) -> FpMatrix {
    let rows = subsets(u, m).len();
    let cols: Vec<Vec<u64>> = (0..=k.min(m))
        .flat_map(|s| sparse_subsets(u, s).into_iter().map(move |set| (s, set)))
        .map(|(s, set)| divided_power_image(u, m - s, set))
        .collect();
    FpMatrix::from_columns(field, rows, &cols)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseReport {
    pub u: usize,
    pub p: u64,
    /// k with #sparse k-subsets ≠ ℓ_{u,k}.
    pub count_failures: Vec<usize>,
    /// Weights −2m where Θ_u is not surjective.
    pub surjectivity_failures: Vec<i64>,
    /// (k, weight) where Θ_{u,k} fails to be injective in weights ≥ −2(u−k).
    pub injectivity_failures: Vec<(usize, i64)>,
    /// (k, |T|) where some z_T with |T| ≥ (u+k)/2 is outside the submodule generated in weights ≥ −u+k.
    pub lefschetz_failures: Vec<(usize, usize)>,
    /// Whether the dual of B_u has the barcode of B_u shifted by 2u.
    pub duality_shift: bool,
}

impl SparseReport {
    pub fn passes(&self) -> bool {
        self.count_failures.is_empty()
            && self.surjectivity_failures.is_empty()
            && self.injectivity_failures.is_empty()
            && self.lefschetz_failures.is_empty()
            && self.duality_shift
    }
}

pub fn sparse_report(u: usize, field: PrimeField) -> Result<SparseReport, ExtError> {
    let half = u / 2;
    let count_failures = (0..=half)
        .filter(|&k| sparse_subsets(u, k).len() as u64 != ell(u, k))
        .collect();
    let surjectivity_failures = (0..=u)
        .filter(|&m| theta_matrix(u, half, m, field).rank() != subsets(u, m).len())
        .map(|m| -2 * m as i64)
        .collect();
    let mut injectivity_failures = Vec::new();
    for k in 0..=half {
        for m in 0..=u - k {
            let t = theta_matrix(u, k, m, field);
            if t.rank() != t.cols() {
                injectivity_failures.push((k, -2 * m as i64));
            }
        }
    }
    let mut lefschetz_failures = Vec::new();
    for k in 0..=u {
        let low = (u - k) / 2;
        for t in (u + k).div_ceil(2)..=u {
            let rows = subsets(u, t).len();
            let generated: Vec<Vec<u64>> = (0..=low.min(t))
                .flat_map(|s| subsets(u, s).into_iter().map(move |set| (s, set)))
                .map(|(s, set)| divided_power_image(u, t - s, set))
                .collect();
            let base = rank_of(field, rows, &generated);
            for target in subsets(u, t) {
                let mut with = generated.clone();
                with.push(subsets(u, t).iter().map(|&x| (x == target) as u64).collect());
                if rank_of(field, rows, &with) != base {
                    lefschetz_failures.push((k, t));
                    break;
                }
            }
        }
    }
    let bu = build_bu(u, field, false);
    let duality_shift = barcode(&bu.dualize(), 0)? == barcode(&bu, 0)?.shift(2 * u as i64);
    Ok(SparseReport {
        u,
        p: field.modulus(),
        count_failures,
        surjectivity_failures,
        injectivity_failures,
        lefschetz_failures,
        duality_shift,
    })
}
