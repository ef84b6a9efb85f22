//! Command-line orchestration: the betti/nui/barcode/ext/mcg commands, their JSON and
//! CSV output, the memory guard, and the acceptance suite.

mod commands;
mod config;
mod error;
pub mod verify;

pub use commands::{barcode, betti, betti_csv, ext, mcg_report, nui, BettiRow, Envelope, CSV_HEADER, SCHEMA_VERSION};
pub use config::{estimated_cells, guard, Coeff, Format, JobConfig, Pipeline, DEFAULT_MAX_CELLS};
pub use error::ConfhomError;

/// Thread count: the flag, then `CONFHOM_THREADS`, then the hardware default (None).
pub fn resolve_threads(flag: Option<usize>, env: Option<&str>) -> Result<Option<usize>, ConfhomError> {
    if let Some(t) = flag {
        return Ok(Some(t));
    }
    match env {
        None | Some("") => Ok(None),
        Some(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| ConfhomError::Usage(format!("CONFHOM_THREADS={s:?} is not a thread count"))),
    }
}
