use std::collections::BTreeMap;

use exactla::FpMatrix;
use serde::{Deserialize, Serialize};

use crate::{barcode, ExtError, WeightedModule};

/// Violations found by [`check_tame`]; an empty report means every check passed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TameReport {
    /// Variables whose barcode is not palindromic around −u size by size.
    pub not_palindromic: Vec<usize>,
    /// (variable, bar start, bar size) for narrow bars outside ]−u−D_k, −u+D_k[.
    pub off_centre: Vec<(usize, i64, u32)>,
    /// Thresholds k for which ψ_k fails to be bijective in weights ≥ k or injective in [−k, k].
    pub not_free: Vec<i64>,
}

impl TameReport {
    pub fn passes(&self) -> bool {
        self.not_palindromic.is_empty() && self.off_centre.is_empty() && self.not_free.is_empty()
    }
}

/// Checks that M[u] is tame as far as it can be read from the data: the barcode
/// conditions for each variable and the freeness of M[u] in the range [−k, ∞).
pub fn check_tame(module: &WeightedModule, u: i64) -> Result<TameReport, ExtError> {
    let mut report = TameReport::default();
    let alg = module.algebra();
    for k in 0..module.variables() {
        let code = barcode(module, k)?;
        let unit = alg.unit(k) as i64;
        let mut by_size: BTreeMap<u32, Vec<i64>> = BTreeMap::new();
        for bar in &code.bars {
            let c = code.barycentre(bar);
            by_size.entry(bar.size).or_default().push(c);
            if bar.size < code.height && !(c > -u - unit && c < -u + unit) {
                report.off_centre.push((k, bar.start, bar.size));
            }
        }
        let symmetric = by_size.values().all(|cs| {
            let mut mirrored: Vec<i64> = cs.iter().map(|&c| -2 * u - c).collect();
            let mut cs = cs.clone();
            mirrored.sort_unstable();
            cs.sort_unstable();
            cs == mirrored
        });
        if !symmetric {
            report.not_palindromic.push(k);
        }
    }
    let shifted = module.shift(u);
    let top = shifted.weights().iter().map(|w| w.abs()).max().unwrap_or(0);
    for k in 0..=top + 1 {
        if !psi_is_free(&shifted, k)? {
            report.not_free.push(k);
        }
    }
    Ok(report)
}

/// Builds ψ_k: F_k → M from lifts of a basis of (M/A₊M) in weights ≥ k, and tests
/// bijectivity in weights ≥ k and injectivity in [−k, k).
fn psi_is_free(module: &WeightedModule, k: i64) -> Result<bool, ExtError> {
    let f = module.field();
    let alg = module.algebra();
    let mut generators: Vec<(i64, Vec<u64>)> = Vec::new();
    for w in module.weights().into_iter().filter(|&w| w >= k) {
        let d = module.dim(w);
        let mut cols: Vec<Vec<u64>> = Vec::new();
        for j in 0..module.variables() {
            let src = w - alg.var_weight(j);
            let a = module.matrix(j, src);
            cols.extend((0..a.cols()).map(|c| a.column(c)));
        }
        let decomposable = cols.len();
        for i in 0..d {
            let mut e = vec![0; d];
            e[i] = 1;
            cols.push(e);
        }
        let (_, pivots) = FpMatrix::from_columns(f, d, &cols).rref();
        for &c in pivots.iter().filter(|&&c| c >= decomposable) {
            generators.push((w, cols[c].clone()));
        }
    }
    let top = generators.iter().map(|g| g.0).max().unwrap_or(k);
    for t in -k..=top {
        // free generators times monomials landing in weight t
        let mut cols = Vec::new();
        for (gw, v) in &generators {
            if *gw < t || (gw - t) % 2 != 0 {
                continue;
            }
            let s = ((gw - t) / 2) as u64;
            let vars = alg.variables_within(gw - t);
            for e in alg.monomials(vars, s) {
                let image = if e.len() > module.variables() && e[module.variables()..].iter().any(|&x| x > 0) {
                    vec![0; module.dim(t)]
                } else {
                    let trimmed: Vec<u32> = e.iter().take(module.variables()).copied().collect();
                    module.monomial(&trimmed, *gw).mul_vec(v)
                };
                cols.push(image);
            }
        }
        let rank = if cols.is_empty() {
            0
        } else {
            FpMatrix::from_columns(f, module.dim(t), &cols).rank()
        };
        let injective = rank == cols.len();
        if !injective || (t >= k && rank != module.dim(t)) {
            return Ok(false);
        }
    }
    for t in module.weights().into_iter().filter(|&t| t > top && t >= k) {
        if module.dim(t) > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
