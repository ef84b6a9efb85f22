use exactla::PrimeField;
use grading::{BigradedSeries, HomologyEntry, HomologyTable};
use serde::{Deserialize, Serialize};

use crate::decompose::binomial;
use crate::{compute_nui, Barcode, ExtError};

/// How a generator of Ext(B_u) generates its summand, as a module over
/// F_p[α_0, β_0, α_1, β_1, …].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shape {
    /// F_p[α_j, β_j : j ≥ from], every earlier generator acting as zero.
    Free { from: usize },
    /// F_p[β_index] ⊗ F_p[α_j, β_j : j > index], with α_index acting as zero.
    AlphaKilled { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtGenerator {
    pub weight: i64,
    pub bar: i64,
    pub shape: Shape,
}

/// Dimensions in a truncation window together with a list of module generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtSummary {
    pub series: BigradedSeries,
    pub generators: Vec<ExtGenerator>,
}

fn step(p: u64, i: usize) -> i64 {
    2 * p.pow(i as u32) as i64
}

/// Ext over F_p[ŷ_i]/(ŷ_i^p) of the cyclic modules of a barcode, ŷ_i in weight −2p^i.
pub fn ext_of_barcode(code: &Barcode, i: usize, p: u64, weight_bound: i64, bar_bound: i64) -> ExtSummary {
    let w = step(p, i);
    assert_eq!(code.step, w, "barcode belongs to a different variable");
    let pw = p as i64 * w;
    let mut series = BigradedSeries::new(weight_bound, bar_bound);
    let mut generators = Vec::new();
    for bar in &code.bars {
        let (m, c) = (bar.start, bar.size as i64);
        if c == p as i64 {
            series.add(-m, 0, 1);
            generators.push(ExtGenerator {
                weight: -m,
                bar: 0,
                shape: Shape::Free { from: i + 1 },
            });
            continue;
        }
        let mut j = 0;
        while -m + j * pw <= weight_bound && -2 * j >= -bar_bound {
            series.add(-m + j * pw, -2 * j, 1);
            series.add(-m + j * pw + c * w, -2 * j - 1, 1);
            j += 1;
        }
        let low = ExtGenerator {
            weight: -m,
            bar: 0,
            shape: Shape::AlphaKilled { index: i },
        };
        let high = ExtGenerator {
            weight: -m + c * w,
            bar: -1,
            shape: Shape::AlphaKilled { index: i },
        };
        if c == 1 {
            // α_i·(low) = high
            generators.push(ExtGenerator {
                shape: Shape::Free { from: i },
                ..low
            });
        } else if c == p as i64 - 1 {
            // α_i·(high) = β_i·(low), so high generates a free summand and low a trivial one
            generators.push(ExtGenerator {
                shape: Shape::Free { from: i },
                ..high
            });
            generators.push(ExtGenerator {
                shape: Shape::Free { from: i + 1 },
                ..low
            });
        } else {
            generators.push(low);
            generators.push(high);
        }
    }
    ExtSummary { series, generators }
}

/// Series of F_p[α_j, β_j : j ≥ from] with α_j at (2p^j, −1) and β_j at (2p^{j+1}, −2).
pub fn polynomial_series(from: usize, p: u64, weight_bound: i64, bar_bound: i64) -> BigradedSeries {
    let mut out = BigradedSeries::new(weight_bound, bar_bound);
    out.add(0, 0, 1);
    let mut j = from;
    while step(p, j) <= weight_bound {
        let unit = Barcode {
            step: step(p, j),
            height: p as u32,
            bars: vec![crate::Bar { start: 0, size: 1 }],
        };
        out = out.tensor(&ext_of_barcode(&unit, j, p, weight_bound, bar_bound).series);
        j += 1;
    }
    out
}

/// Series of the summand generated in bidegree (0, 0) with the given shape.
pub fn shape_series(shape: Shape, p: u64, weight_bound: i64, bar_bound: i64) -> BigradedSeries {
    match shape {
        Shape::Free { from } => polynomial_series(from, p, weight_bound, bar_bound),
        Shape::AlphaKilled { index } => {
            let mut beta = BigradedSeries::new(weight_bound, bar_bound);
            let b = step(p, index + 1);
            let mut j = 0;
            while j * b <= weight_bound && 2 * j <= bar_bound {
                beta.add(j * b, -2 * j, 1);
                j += 1;
            }
            beta.tensor(&polynomial_series(index + 1, p, weight_bound, bar_bound))
        }
    }
}

/// Σ_i Ext_{ŷ_i}(N_{u,i}) ⊗ F_p[α_j, β_j : j > i], truncated.
pub fn assemble_ext(
    u: usize,
    field: PrimeField,
    doubled: bool,
    weight_bound: i64,
    bar_bound: i64,
) -> Result<ExtSummary, ExtError> {
    let p = field.modulus();
    let nui = compute_nui(u, field, doubled)?;
    let mut series = BigradedSeries::new(weight_bound, bar_bound);
    let mut generators = Vec::new();
    for st in &nui.stages {
        let piece = ext_of_barcode(&st.narrow, st.index, p, weight_bound, bar_bound);
        series.add_series(
            &piece
                .series
                .tensor(&polynomial_series(st.index + 1, p, weight_bound, bar_bound)),
        );
        generators.extend(piece.generators);
    }
    generators.sort_by_key(|g| (g.weight, -g.bar));
    Ok(ExtSummary { series, generators })
}

/// The series generated by a list of generators, for comparison with the assembled dims.
pub fn descriptor_series(generators: &[ExtGenerator], p: u64, weight_bound: i64, bar_bound: i64) -> BigradedSeries {
    let mut out = BigradedSeries::new(weight_bound, bar_bound);
    for g in generators {
        let s = shape_series(g.shape, p, weight_bound - g.weight, bar_bound + g.bar);
        for ((w, b), d) in s.iter() {
            out.add(w + g.weight, b + g.bar, d);
        }
    }
    out
}

/// M_g ≅ ⊕_r binom(g, r)·2^{g−r} copies of 2B_r shifted down by g − r, as (r, shift, multiplicity).
pub fn split_mg(g: usize) -> Vec<(usize, i64, u64)> {
    (0..=g)
        .map(|r| (r, r as i64 - g as i64, binomial(g as u64, r as u64) << (g - r)))
        .collect()
}

/// ℓ_{u,k} = binom(u, k) − binom(u, k−1), for k ≤ u/2.
pub fn ell(u: usize, k: usize) -> u64 {
    let prev = if k == 0 { 0 } else { binomial(u as u64, k as u64 - 1) };
    binomial(u as u64, k as u64) - prev
}

/// Ext over Q[y] of B_u ⊗ Q ≅ ⊕_k ℓ_{u,k}·Q[y]/(y^{u+1−2k}) generated in weight −2k.
pub fn ext_rational_bu(u: usize, weight_bound: i64, bar_bound: i64) -> BigradedSeries {
    let mut out = BigradedSeries::new(weight_bound, bar_bound);
    for k in 0..=u / 2 {
        let len = (u + 1 - 2 * k) as i64;
        let l = ell(u, k);
        out.add(2 * k as i64, 0, l);
        out.add(2 * k as i64 + 2 * len, -1, l);
    }
    out
}

/// Coefficients for the structured pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    Prime(PrimeField),
    Rationals,
}

impl Coefficients {
    pub fn label(&self) -> String {
        match self {
            Coefficients::Prime(f) => format!("F{}", f.modulus()),
            Coefficients::Rationals => "Q".to_string(),
        }
    }
}

/// Ext of M_g in the window weight ≤ `weight_bound`, bar-degree ≥ −`bar_bound`.
pub fn ext_mg(g: usize, coeffs: Coefficients, weight_bound: i64, bar_bound: i64) -> Result<BigradedSeries, ExtError> {
    let mut out = BigradedSeries::new(weight_bound, bar_bound);
    for (r, shift, mult) in split_mg(g) {
        let ext = match coeffs {
            Coefficients::Prime(field) => assemble_ext(r, field, true, weight_bound + shift, bar_bound)?.series,
            Coefficients::Rationals => ext_rational_bu(r, weight_bound + shift, bar_bound),
        };
        // a module shifted down in weight has Ext shifted up
        out.add_series(&ext.shift_weight(-shift).scaled(mult));
    }
    Ok(out)
}

/// dim H_i(C_n(Σ_{g,1})) from F[ε] ⊗ Ext(M_g) ⊗ F[H_g], reindexed (n, i) = (•, • + ⋆).
pub fn structured_betti(g: usize, coeffs: Coefficients, max_n: u32) -> Result<HomologyTable, ExtError> {
    let n = max_n as i64;
    let mut eps = BigradedSeries::new(n, n);
    for a in 0..=n {
        eps.add(a, -a, 1);
    }
    let mut hg = BigradedSeries::new(n, n);
    for m in 0..=n / 2 {
        let d = if g == 0 {
            (m == 0) as u64
        } else {
            binomial((m as usize + 2 * g - 1) as u64, (2 * g - 1) as u64)
        };
        hg.add(2 * m, 0, d);
    }
    let total = eps.tensor(&ext_mg(g, coeffs, n, n)?).tensor(&hg);
    let mut table = HomologyTable::new(coeffs.label(), max_n);
    for ((w, b), d) in total.iter() {
        let i = w + b;
        if !(0..=w).contains(&i) {
            return Err(ExtError::Malformed(format!(
                "class at ({w}, {b}) outside the homology range"
            )));
        }
        table.set(
            w as u32,
            i as u32,
            HomologyEntry {
                rank: d,
                torsion: Vec::new(),
            },
        );
    }
    Ok(table)
}
