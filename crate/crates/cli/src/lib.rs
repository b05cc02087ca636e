//! Grid verification driver behind the `qwrt` binary.

pub mod args;
pub mod config;
pub mod report;
pub mod series;
pub mod suite;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::Instant;

use qwrt_core::eichler::ChiFunction;
use qwrt_core::record::VerificationRecord;
use rayon::prelude::*;

pub use config::{Command, Format, MMode, RunConfig};
pub use report::ReportRecord;
pub use series::emit_series;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs every instance of `config` and returns the records in instance order.
pub fn collect(config: &RunConfig) -> Result<Vec<VerificationRecord>, String> {
    let inst = suite::instances(&config.command)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = config.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| e.to_string())?;
    let results: Vec<_> = pool.install(|| inst.par_iter().map(|i| i.run()).collect());
    results
        .into_iter()
        .zip(&inst)
        .map(|(r, i)| r.map_err(|e| format!("{i:?}: {e}")))
        .collect()
}

/// Executes `config`, writing the report to its output (or `out`) and the
/// summary line to `err`. Returns the process exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(config, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn run_inner(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let start = Instant::now();
    let mut file;
    let sink: &mut dyn Write = match &config.output {
        Some(path) => {
            file = BufWriter::new(File::create(path).map_err(|e| format!("{}: {e}", path.display()))?);
            &mut file
        }
        None => out,
    };
    if let Command::Series { p, ell, terms } = &config.command {
        let chi = ChiFunction::new(*p, *ell).map_err(|e| e.to_string())?;
        sink.write_all(emit_series(&chi, *terms).as_bytes())
            .map_err(|e| e.to_string())?;
        sink.flush().map_err(|e| e.to_string())?;
        return Ok(EXIT_PASS);
    }
    let records = collect(config)?;
    let report: Vec<ReportRecord> = records
        .iter()
        .map(|r| ReportRecord::from_record(r, config.timings))
        .collect();
    report::write_report(sink, &report, config.format).map_err(|e| e.to_string())?;
    sink.flush().map_err(|e| e.to_string())?;
    let passed = records.iter().filter(|r| r.pass).count();
    let failed = records.len() - passed;
    let max_order = records.iter().map(|r| r.order).max().unwrap_or(0);
    let _ = writeln!(
        err,
        "instances={} passed={passed} failed={failed} max_order={max_order} wall={:.3}s",
        records.len(),
        start.elapsed().as_secs_f64()
    );
    Ok(if failed == 0 { EXIT_PASS } else { EXIT_FAIL })
}
