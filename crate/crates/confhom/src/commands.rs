use exactla::PrimeField;
use extengine::{assemble_ext, compute_nui, structured_betti, Coefficients};
use grading::{BigradedSeries, HomologyTable};
use mcg::{check_chain_triviality, check_umor_triviality, xi, xi_p, MappingClassCandidate};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{guard, Coeff, JobConfig, Pipeline};
use crate::ConfhomError;

/// Version of the JSON layout below.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Envelope {
    pub version: u32,
    pub command: String,
    pub config: Value,
    pub bounds: Value,
    pub result: Value,
    pub discrepancies: Vec<String>,
}

impl Envelope {
    pub fn ok(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub n: u32,
    pub i: u32,
    pub dim: u64,
    pub torsion: Vec<u64>,
    pub pipeline: &'static str,
}

fn field(p: u64) -> Result<PrimeField, ConfhomError> {
    PrimeField::new(p).map_err(|_| ConfhomError::Usage(format!("{p} is not a prime")))
}

fn structured_table(cfg: &JobConfig) -> Result<Option<HomologyTable>, ConfhomError> {
    match cfg.coeff {
        Coeff::Prime(2) => Ok(None),
        Coeff::Prime(p) => Ok(Some(structured_betti(
            cfg.g,
            Coefficients::Prime(field(p)?),
            cfg.max_n,
        )?)),
        Coeff::Rationals => Ok(Some(structured_betti(cfg.g, Coefficients::Rationals, cfg.max_n)?)),
        Coeff::Integers => Err(ConfhomError::Usage(
            "the structured pipeline has no integral version".into(),
        )),
    }
}

/// H_i(C_n(Σ_{g,1})) for n ≤ max_n from the chosen pipeline(s).
pub fn betti(cfg: &JobConfig) -> Result<(Envelope, Vec<BettiRow>), ConfhomError> {
    let cellular = match cfg.pipeline {
        Pipeline::Cellular | Pipeline::Both => {
            guard(cfg.g, cfg.max_n, cfg.max_cells)?;
            Some(cellcx::homology_table(cfg.g, cfg.max_n, cfg.coeff.ring())?)
        }
        Pipeline::Structured => None,
    };
    let structured = match cfg.pipeline {
        Pipeline::Structured | Pipeline::Both => structured_table(cfg)?,
        Pipeline::Cellular => None,
    };
    // F_2 has no structured route, so it is always answered cellularly
    let cellular = match (&cellular, &structured, cfg.pipeline) {
        (None, None, Pipeline::Structured) => {
            guard(cfg.g, cfg.max_n, cfg.max_cells)?;
            Some(cellcx::homology_table(cfg.g, cfg.max_n, cfg.coeff.ring())?)
        }
        _ => cellular,
    };
    let mut discrepancies = Vec::new();
    let (table, provenance) = match (&cellular, &structured) {
        (Some(c), Some(s)) => {
            for (n, i, a, b) in c.differences(s) {
                discrepancies.push(format!("H_{i}(C_{n}): cellular {a:?}, structured {b:?}"));
            }
            (c, "cellular+structured")
        }
        (Some(c), None) => (c, "cellular"),
        (None, Some(s)) => (s, "structured"),
        (None, None) => unreachable!("one pipeline always runs"),
    };
    let rows: Vec<BettiRow> = table
        .rows()
        .into_iter()
        .map(|(n, i, e)| BettiRow {
            n,
            i,
            dim: e.rank,
            torsion: e.torsion,
            pipeline: provenance,
        })
        .collect();
    let envelope = Envelope {
        version: SCHEMA_VERSION,
        command: "betti".into(),
        config: serde_json::to_value(cfg).expect("config serializes"),
        bounds: json!({ "max_n": cfg.max_n }),
        result: json!({ "rows": rows }),
        discrepancies,
    };
    Ok((envelope, rows))
}

pub const CSV_HEADER: &str = "g,p,coeff,n,i,dim,torsion";

pub fn betti_csv(cfg: &JobConfig, rows: &[BettiRow]) -> String {
    let (p, coeff) = cfg.coeff.columns();
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let torsion: Vec<String> = r.torsion.iter().map(u64::to_string).collect();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            cfg.g,
            p,
            coeff,
            r.n,
            r.i,
            r.dim,
            torsion.join(";")
        ));
    }
    out
}

/// N_{u,i} barcodes and the checks that accompany them.
pub fn nui(u: usize, p: u64) -> Result<Envelope, ConfhomError> {
    let result = compute_nui(u, field(p)?, false)?;
    let doubled = compute_nui(u, field(p)?, true)?;
    let mut discrepancies = Vec::new();
    let identity = result.poincare_identity_holds();
    let window = result.narrow_window_holds();
    if !identity {
        discrepancies.push("Poincaré polynomial identity fails".to_string());
    }
    if !window {
        discrepancies.push("a narrow piece leaves its weight window".to_string());
    }
    if result.stages.len() > result.expected_top() + 1 {
        discrepancies.push(format!("nonzero pieces beyond i = {}", result.expected_top()));
    }
    let same = result
        .stages
        .iter()
        .map(|s| &s.narrow)
        .eq(doubled.stages.iter().map(|s| &s.narrow));
    if !same {
        discrepancies.push("doubled and plain modules give different pieces".to_string());
    }
    let stages: Vec<Value> = result
        .stages
        .iter()
        .map(|s| {
            let bars: Vec<[i64; 2]> = s.narrow.bars.iter().map(|b| [b.start, b.size as i64]).collect();
            json!({ "i": s.index, "shift": s.shift, "bars": bars, "free_dim": s.free_dim, "tame": s.tame.passes() })
        })
        .collect();
    Ok(Envelope {
        version: SCHEMA_VERSION,
        command: "nui".into(),
        config: json!({ "u": u, "p": p }),
        bounds: json!({}),
        result: json!({
            "h": result.expected_top(),
            "stages": stages,
            "identity": identity,
            "window": window,
            "doubled_agrees": same,
        }),
        discrepancies,
    })
}

/// The barcode of N_{u,i} over ŷ_i; empty beyond the last stage.
pub fn barcode(u: usize, p: u64, i: usize) -> Result<Envelope, ConfhomError> {
    let result = compute_nui(u, field(p)?, false)?;
    let bars: Vec<[i64; 2]> = result
        .barcode(i)
        .map(|c| c.bars.iter().map(|b| [b.start, b.size as i64]).collect())
        .unwrap_or_default();
    Ok(Envelope {
        version: SCHEMA_VERSION,
        command: "barcode".into(),
        config: json!({ "u": u, "p": p, "i": i }),
        bounds: json!({}),
        result: json!({ "bars": bars }),
        discrepancies: Vec::new(),
    })
}

fn series_rows(s: &BigradedSeries) -> Vec<[i64; 3]> {
    s.iter().map(|((w, b), d)| [w, b, d as i64]).collect()
}

/// Ext(B_u) from the assembly, from the brute-force bar complex, or both.
pub fn ext(u: usize, p: u64, weight_bound: i64, bar_bound: i64, pipeline: Pipeline) -> Result<Envelope, ConfhomError> {
    let f = field(p)?;
    let structured = match pipeline {
        Pipeline::Structured | Pipeline::Both => Some(assemble_ext(u, f, false, weight_bound, bar_bound)?),
        Pipeline::Cellular => None,
    };
    let brute = match pipeline {
        Pipeline::Cellular | Pipeline::Both => Some(cobar::cobar_ext_dims(
            &cobar::GammaModule::square_free(u, f, false),
            weight_bound,
            bar_bound,
        )),
        Pipeline::Structured => None,
    };
    let mut discrepancies = Vec::new();
    if let (Some(s), Some(b)) = (&structured, &brute) {
        for ((w, bar), x, y) in s.series.differences(b) {
            discrepancies.push(format!("({w}, {bar}): assembled {x}, bar complex {y}"));
        }
    }
    let series = structured
        .as_ref()
        .map(|s| &s.series)
        .or(brute.as_ref())
        .expect("one pipeline runs");
    let generators = structured
        .as_ref()
        .map(|s| serde_json::to_value(&s.generators).expect("serializes"));
    Ok(Envelope {
        version: SCHEMA_VERSION,
        command: "ext".into(),
        config: json!({ "u": u, "p": p, "pipeline": pipeline }),
        bounds: json!({ "weight": weight_bound, "bar": bar_bound }),
        result: json!({ "classes": series_rows(series), "generators": generators }),
        discrepancies,
    })
}

/// Validation flags, ξ, ξ mod p and the triviality checks for each candidate.
pub fn mcg_report(candidates: &[MappingClassCandidate], p: u64, max_n: u32) -> Result<Envelope, ConfhomError> {
    let mut entries = Vec::new();
    for c in candidates {
        let v = c.validate();
        let x = xi(c);
        let xp = xi_p(c, p)?;
        let umor = check_umor_triviality(c, p, max_n).map_err(|e| e.to_string());
        let chain = check_chain_triviality(c, p, max_n).map_err(|e| e.to_string());
        entries.push(json!({
            "label": c.label,
            "map": c.to_string(),
            "boundary_conjugate": v.boundary_conjugate,
            "boundary_exact": v.boundary_exact,
            "symplectic": v.symplectic,
            "xi": x.to_string(),
            "xi_zero": x.is_zero(),
            "xi_mod_p_zero": xp.is_zero(),
            "umor_trivial": result_value(umor),
            "chain_trivial": result_value(chain),
        }));
    }
    let genus = candidates.first().map_or(0, |c| c.genus());
    Ok(Envelope {
        version: SCHEMA_VERSION,
        command: "mcg".into(),
        config: json!({ "g": genus, "p": p }),
        bounds: json!({ "max_n": max_n }),
        result: json!({ "candidates": entries }),
        discrepancies: Vec::new(),
    })
}

fn result_value(r: Result<bool, String>) -> Value {
    match r {
        Ok(b) => json!(b),
        Err(e) => json!({ "not_applicable": e }),
    }
}
