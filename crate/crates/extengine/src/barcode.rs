use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{ExtError, WeightedModule};

/// A cyclic summand F_p[ŷ]/(ŷ^size) generated in weight `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bar {
    pub start: i64,
    pub size: u32,
}

/// Decomposition of a module over one variable ŷ of weight −step and height `height`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Barcode {
    pub step: i64,
    pub height: u32,
    pub bars: Vec<Bar>,
}

impl Barcode {
    /// Barycentre m − (c−1)·step/2.
    pub fn barycentre(&self, bar: &Bar) -> i64 {
        bar.start - (bar.size as i64 - 1) * self.step / 2
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn total_dim(&self) -> u64 {
        self.bars.iter().map(|b| b.size as u64).sum()
    }

    /// Weight → dimension of the module the bars describe.
    pub fn poincare(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for b in &self.bars {
            for j in 0..b.size as i64 {
                *out.entry(b.start - j * self.step).or_insert(0) += 1;
            }
        }
        out
    }

    /// rank of ŷ^j out of weight m, read off the bars.
    pub fn rank(&self, j: u32, m: i64) -> usize {
        self.bars
            .iter()
            .filter(|b| {
                let offset = b.start - m;
                offset >= 0 && offset % self.step == 0 && (offset / self.step) as u32 + j < b.size
            })
            .count()
    }

    pub fn shift(&self, s: i64) -> Barcode {
        let mut bars: Vec<Bar> = self
            .bars
            .iter()
            .map(|b| Bar {
                start: b.start + s,
                size: b.size,
            })
            .collect();
        bars.sort();
        Barcode { bars, ..*self }
    }

    /// Bars of full height, i.e. free summands.
    pub fn free_count(&self) -> usize {
        self.bars.iter().filter(|b| b.size == self.height).count()
    }
}

impl fmt::Display for Barcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bars.iter().map(|b| format!("({}, {})", b.start, b.size)).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Barcode of M over the variable ŷ_k, by rank inclusion–exclusion:
/// #bars starting at m of size ≥ c is r_{c−1}(m) − r_c(m + step).
pub fn barcode(module: &WeightedModule, k: usize) -> Result<Barcode, ExtError> {
    let step = -module.algebra().var_weight(k);
    let height = module.algebra().height(k);
    let mut ranks: BTreeMap<(i64, u32), usize> = BTreeMap::new();
    for m in module.weights() {
        for j in 0..height {
            ranks.insert((m, j), module.power(k, j, m).rank());
        }
    }
    let r = |j: u32, m: i64| ranks.get(&(m, j)).copied().unwrap_or(0) as i64;
    let at_least = |c: u32, m: i64| r(c - 1, m) - r(c, m + step);
    let mut bars = Vec::new();
    for m in module.weights() {
        for c in 1..=height {
            let count = at_least(c, m) - at_least(c + 1, m);
            if count < 0 {
                return Err(ExtError::BarcodeMismatch { var: k });
            }
            bars.extend(std::iter::repeat_n(Bar { start: m, size: c }, count as usize));
        }
    }
    bars.sort();
    let code = Barcode { step, height, bars };
    verify_reconstruction(module, k, &code)?;
    Ok(code)
}

fn verify_reconstruction(module: &WeightedModule, k: usize, code: &Barcode) -> Result<(), ExtError> {
    let dims = code.poincare();
    if dims != module.poincare() {
        return Err(ExtError::BarcodeMismatch { var: k });
    }
    for m in module.weights() {
        for j in 1..code.height {
            if code.rank(j, m) != module.power(k, j, m).rank() {
                return Err(ExtError::BarcodeMismatch { var: k });
            }
        }
    }
    Ok(())
}
