//! Command-line front end.
//!
//! Without a subcommand the binary behaves as a competition solver:
//!
//! ```text
//! afkit --formats
//! afkit --problems
//! afkit -p EE-PR -f graph.apx -fo apx
//! afkit -p DC-GR -f graph.tgf -fo tgf -a h
//! ```
//!
//! `generate`, `classify`, `select`, `run`, `report` and `oracle` drive the
//! benchmark pipeline; see `afkit help`.

mod commands;
mod solver;

use std::ffi::OsString;
use std::io::Write;

pub use commands::{Manifest, ManifestInstance, Classification, ClassifiedInstance};

const SUBCOMMANDS: &[&str] = &["generate", "classify", "select", "run", "report", "oracle", "help"];

/// Runs the command line and returns the process exit code. Output goes to
/// the given writers so tests can capture it.
pub fn run(args: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let sub = args.get(1).and_then(|a| a.to_str());
    let code = if sub.is_some_and(|s| SUBCOMMANDS.contains(&s)) {
        commands::run(args, out, err)
    } else {
        solver::run(&args[1.min(args.len())..], out, err)
    };
    let _ = out.flush();
    code
}
