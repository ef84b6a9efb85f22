use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use confhom::verify::{self, Suite};
use confhom::{
    barcode, betti, betti_csv, ext, mcg_report, nui, resolve_threads, Coeff, ConfhomError, Envelope, Format, JobConfig,
    Pipeline, DEFAULT_MAX_CELLS,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "confhom",
    about = "Homology of configuration spaces of surfaces with one boundary component"
)]
struct Cli {
    /// Worker threads; overrides CONFHOM_THREADS.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// H_i(C_n(Σ_{g,1})) for n ≤ max-n.
    Betti {
        #[arg(long)]
        g: usize,
        /// q, z or fp (fp needs --p; --p alone implies fp)
        #[arg(long)]
        coeff: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long = "max-n")]
        max_n: u32,
        #[arg(long, default_value = "cellular")]
        pipeline: String,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long = "max-cells", default_value_t = DEFAULT_MAX_CELLS)]
        max_cells: u64,
    },
    /// The narrow pieces N_{u,i} of B_u.
    Nui {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        p: u64,
    },
    /// The barcode of N_{u,i}.
    Barcode {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        i: usize,
    },
    /// Ext(B_u) in a window of weights and bar-degrees.
    Ext {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 24)]
        weight: i64,
        #[arg(long, default_value_t = 8)]
        bar: i64,
        #[arg(long, default_value = "structured")]
        pipeline: String,
    },
    /// Checks on mapping class candidates, from a file or the built-in catalog.
    Mcg {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        p: u64,
        /// File with lines `label: g1 -> word; g2 -> word`.
        #[arg(long)]
        candidates: Option<std::path::PathBuf>,
        /// Catalog names such as id, Da, Da^3, sep.
        #[arg(long, value_delimiter = ',')]
        catalog: Vec<String>,
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: u32,
    },
    /// Runs the acceptance suite (fast or full).
    Verify { suite: String },
}

/// Writes to stdout; a closed pipe (as with `| head`) is not an error.
fn out(text: &str) -> Result<(), ConfhomError> {
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(envelope: &Envelope) -> Result<u8, ConfhomError> {
    out(&(envelope.to_json() + "\n"))?;
    Ok(if envelope.ok() { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8, ConfhomError> {
    let env = std::env::var("CONFHOM_THREADS").ok();
    if let Some(t) = resolve_threads(cli.threads, env.as_deref())? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| ConfhomError::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Betti {
            g,
            coeff,
            p,
            max_n,
            pipeline,
            format,
            max_cells,
        } => {
            let cfg = JobConfig {
                command: "betti".into(),
                g,
                coeff: Coeff::parse(coeff.as_deref(), p)?,
                max_n,
                pipeline: pipeline.parse::<Pipeline>()?,
                format: format.parse::<Format>()?,
                max_cells,
            };
            let (envelope, rows) = betti(&cfg)?;
            match cfg.format {
                Format::Json => out(&(envelope.to_json() + "\n"))?,
                Format::Csv => {
                    out(&betti_csv(&cfg, &rows))?;
                    for d in &envelope.discrepancies {
                        eprintln!("discrepancy: {d}");
                    }
                }
            }
            Ok(if envelope.ok() { 0 } else { 1 })
        }
        Command::Nui { u, p } => emit(&nui(u, p)?),
        Command::Barcode { u, p, i } => emit(&barcode(u, p, i)?),
        Command::Ext {
            u,
            p,
            weight,
            bar,
            pipeline,
        } => {
            if weight < 0 || bar < 0 {
                return Err(ConfhomError::Usage("bounds must be nonnegative".into()));
            }
            emit(&ext(u, p, weight, bar, pipeline.parse()?)?)
        }
        Command::Mcg {
            g,
            p,
            candidates,
            catalog,
            max_n,
        } => {
            let mut list = Vec::new();
            if let Some(path) = candidates {
                list.extend(mcg::load_candidates(g, &std::fs::read_to_string(path)?)?);
            }
            for name in &catalog {
                list.push(
                    mcg::catalog_entry(name, g)
                        .ok_or_else(|| ConfhomError::Usage(format!("no catalog entry {name:?} in genus {g}")))?,
                );
            }
            if list.is_empty() {
                return Err(ConfhomError::Usage("give --candidates or --catalog".into()));
            }
            emit(&mcg_report(&list, p, max_n)?)
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let outcomes = verify::all(suite);
            for o in &outcomes {
                eprintln!("{}", o.line());
            }
            let passed = verify::suite_passes(&outcomes);
            let report = json!({ "suite": suite, "passed": passed, "criteria": outcomes });
            out(&(serde_json::to_string_pretty(&report).expect("report serializes") + "\n"))?;
            Ok(if passed { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
