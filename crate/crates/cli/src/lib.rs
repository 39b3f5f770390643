//! Library side of the `bircones` binary, shared with its integration tests.

pub mod commands;
pub mod document;

use std::io::Write;

use bircones_core::selftest;
use clap::Parser;

pub use commands::{Cli, Command, Failure, Format};
pub use document::{OutputDocument, Payload, Subject};

pub const THREADS_VAR: &str = "BIRCONES_THREADS";

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| Failure {
        code: 2,
        message: format!("{THREADS_VAR} must be a positive integer, got {value:?}"),
    })?;
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

fn run_selftest(quick: bool, corrupt: bool, out: &mut impl Write) -> i32 {
    let options = selftest::Options {
        quick,
        mutation: corrupt.then_some(selftest::Mutation::MoriTableEntry),
    };
    let results = selftest::run(&options);
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        if r.detail.is_empty() {
            let _ = writeln!(out, "{status} {} ({} ms)", r.name, r.millis);
        } else {
            let _ = writeln!(out, "{status} {} ({}; {} ms)", r.name, r.detail, r.millis);
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let _ = writeln!(out, "{} checks, {failed} failed", results.len());
    if failed == 0 {
        0
    } else {
        1
    }
}

/// Parses `args` and runs the command, writing the document to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    if let Err(f) = configure_threads() {
        let _ = writeln!(err, "error: {}", f.message);
        return f.code;
    }
    if let Command::Selftest { quick, corrupt_table } = cli.command {
        return run_selftest(quick, corrupt_table, out);
    }
    match commands::execute(&cli.command) {
        Ok(doc) => {
            let text = match cli.format {
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
            };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            if f.code == 2 {
                let _ = writeln!(err, "run `bircones --help` for usage");
            }
            f.code
        }
    }
}
