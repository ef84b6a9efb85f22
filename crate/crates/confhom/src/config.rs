use std::str::FromStr;

use exactla::{CoefficientRing, PrimeField};
use serde::Serialize;

use crate::ConfhomError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pipeline {
    Cellular,
    Structured,
    Both,
}

impl FromStr for Pipeline {
    type Err = ConfhomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cellular" => Ok(Pipeline::Cellular),
            "structured" => Ok(Pipeline::Structured),
            "both" => Ok(Pipeline::Both),
            _ => Err(ConfhomError::Usage(format!("unknown pipeline {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = ConfhomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(ConfhomError::Usage(format!("unknown format {s:?}"))),
        }
    }
}

/// Coefficients as given on the command line: `--coeff q|z|fp` together with `--p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Coeff {
    Prime(u64),
    Rationals,
    Integers,
}

impl Coeff {
    pub fn parse(coeff: Option<&str>, p: Option<u64>) -> Result<Coeff, ConfhomError> {
        let c = match (coeff.map(str::to_ascii_lowercase).as_deref(), p) {
            (Some("q"), None) => Coeff::Rationals,
            (Some("z"), None) => Coeff::Integers,
            (Some("q" | "z"), Some(_)) => return Err(ConfhomError::Usage("--p only applies to --coeff fp".into())),
            (Some("fp") | None, Some(p)) => Coeff::Prime(p),
            (Some("fp") | None, None) => return Err(ConfhomError::Usage("--coeff fp needs --p".into())),
            (Some(other), _) => return Err(ConfhomError::Usage(format!("unknown coefficients {other:?}"))),
        };
        if let Coeff::Prime(p) = c {
            PrimeField::new(p).map_err(|_| ConfhomError::Usage(format!("{p} is not a prime")))?;
        }
        Ok(c)
    }

    pub fn ring(&self) -> CoefficientRing {
        match *self {
            Coeff::Prime(p) => CoefficientRing::PrimeField(p as u32),
            Coeff::Rationals => CoefficientRing::Rationals,
            Coeff::Integers => CoefficientRing::Integers,
        }
    }

    /// (p column, coeff column) of the CSV output.
    pub fn columns(&self) -> (String, &'static str) {
        match *self {
            Coeff::Prime(p) => (p.to_string(), "fp"),
            Coeff::Rationals => (String::new(), "q"),
            Coeff::Integers => (String::new(), "z"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct JobConfig {
    pub command: String,
    pub g: usize,
    pub coeff: Coeff,
    pub max_n: u32,
    pub pipeline: Pipeline,
    pub format: Format,
    pub max_cells: u64,
}

/// Default cap on the total number of cells over all slices of a job.
pub const DEFAULT_MAX_CELLS: u64 = 2_000_000;

/// Number of cells of C_n(Σ_{g,1}) summed over n ≤ max_n: records (b, P, v) with
/// P a composition and v ∈ N^{2g}.
pub fn estimated_cells(g: usize, max_n: u32) -> u64 {
    let mut total = 0u64;
    for n in 0..=max_n as u64 {
        for s in 0..=n {
            let compositions = if s == 0 { 1 } else { 1u64 << (s - 1).min(62) };
            let monomials = if g == 0 {
                (s == n) as u64
            } else {
                num_binomial(n - s + 2 * g as u64 - 1, 2 * g as u64 - 1)
            };
            total = total.saturating_add(compositions.saturating_mul(monomials));
        }
    }
    total
}

fn num_binomial(n: u64, k: u64) -> u64 {
    let mut acc: u128 = 1;
    for j in 0..k as u128 {
        acc = acc * (n as u128 - j) / (j + 1);
    }
    acc.min(u64::MAX as u128) as u64
}

pub fn guard(g: usize, max_n: u32, cap: u64) -> Result<(), ConfhomError> {
    let estimate = estimated_cells(g, max_n);
    if estimate > cap {
        return Err(ConfhomError::TooLarge { estimate, cap });
    }
    Ok(())
}
