//! Command-line front end: read plain text or FASTA, print per-position SUS
//! tables, check them against the brute-force oracle, or time them.

mod bench;
mod emit;
mod ingest;
mod verify;

use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use thiserror::Error;

use crate::buffers::WorkBuffers;
use crate::error::SusError;
use crate::sus::find_all_sus_into;

pub use bench::{run_bench, BenchRow};
pub use emit::emit_tsv;
pub use ingest::{ingest, Record};
pub use verify::{run_verify, Divergence, VERIFY_MAX_LEN};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Fasta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Tsv,
    None,
}

/// Shortest unique substrings (exact or k-mismatch) for every position.
#[derive(Debug, Clone, Parser)]
#[command(name = "sus", version)]
pub struct RunConfig {
    /// Mismatch budget; must be smaller than every record's length.
    #[arg(long = "k", default_value_t = 0)]
    pub k: usize,

    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    pub input: PathBuf,

    #[arg(long, value_enum, default_value_t = Output::Tsv)]
    pub output: Output,

    /// Append the substring itself as a fifth column.
    #[arg(long)]
    pub show_substring: bool,

    /// Compare against the brute-force oracle (records up to 512 bytes).
    #[arg(long)]
    pub verify: bool,

    /// Time the pipeline on doubling prefixes instead of printing tables.
    #[arg(long)]
    pub bench: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("record {0:?} is empty")]
    EmptyRecord(String),
    #[error("line {0}: sequence data before the first FASTA header")]
    MissingHeader(usize),
    #[error("record {name:?}: {source}")]
    Sus {
        name: String,
        #[source]
        source: SusError,
    },
    #[error("write failed: {0}")]
    Write(#[from] io::Error),
}

fn read_input(config: &RunConfig, stdin: &mut dyn Read) -> Result<Vec<u8>, CliError> {
    let mut data = Vec::new();
    let path = config.input.to_string_lossy().into_owned();
    let res = if path == "-" {
        stdin.read_to_end(&mut data)
    } else {
        std::fs::File::open(&config.input).and_then(|mut f| f.read_to_end(&mut data))
    };
    res.map_err(|source| CliError::Io { path, source })?;
    Ok(data)
}

fn execute(
    config: &RunConfig,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let data = read_input(config, stdin)?;
    let records = ingest(&data, config.format)?;
    for rec in &records {
        if config.k >= rec.seq.len() {
            return Err(CliError::Sus {
                name: rec.name.clone(),
                source: SusError::InvalidMismatchBudget {
                    k: config.k,
                    min: 0,
                    n: rec.seq.len(),
                },
            });
        }
    }

    if config.bench {
        for rec in &records {
            writeln!(out, "# bench record {} n={} k={}", rec.name, rec.seq.len(), config.k)?;
            writeln!(out, "n\tseconds\tratio")?;
            for row in run_bench(&rec.seq, config.k) {
                match row.ratio {
                    Some(r) => writeln!(out, "{}\t{:.6}\t{:.3}", row.n, row.seconds, r)?,
                    None => writeln!(out, "{}\t{:.6}\t-", row.n, row.seconds)?,
                }
            }
        }
        return Ok(EXIT_OK);
    }

    let capacity = records.iter().map(|r| r.seq.len()).max().unwrap_or(0);
    let mut buffers = WorkBuffers::with_capacity(capacity);
    let mut status = EXIT_OK;
    for rec in &records {
        let table = find_all_sus_into(&rec.seq, config.k, &mut buffers).map_err(|source| {
            CliError::Sus {
                name: rec.name.clone(),
                source,
            }
        })?;
        if config.output == Output::Tsv {
            emit_tsv(out, &rec.name, &rec.seq, &table, config.k, config.show_substring)?;
        }
        if config.verify {
            if rec.seq.len() > VERIFY_MAX_LEN {
                writeln!(err, "verify {}: skipped (n={} > {VERIFY_MAX_LEN})", rec.name, rec.seq.len())?;
                continue;
            }
            match run_verify(&rec.seq, config.k, &table) {
                None => writeln!(err, "verify {}: ok", rec.name)?,
                Some(d) => {
                    writeln!(
                        err,
                        "verify {}: MISMATCH at position {}: pipeline {}..{}, oracle {}..{}",
                        rec.name,
                        d.pos + 1,
                        d.pipeline.0 + 1,
                        d.pipeline.1 + 1,
                        d.oracle.0 + 1,
                        d.oracle.1 + 1
                    )?;
                    status = EXIT_VERIFY_FAILED;
                }
            }
        }
    }
    out.flush()?;
    Ok(status)
}

/// Runs one invocation and returns the process exit status.
pub fn run(
    config: &RunConfig,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match execute(config, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
