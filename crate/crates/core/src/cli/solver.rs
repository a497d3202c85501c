//! The competition flag contract.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use crate::engine::{Engine, Oracle, Reasoner};
use crate::io::{write_solution, InputFormat};
use crate::task::{TaskKind, TaskSpec};

#[derive(Debug, Default)]
struct Flags {
    formats: bool,
    problems: bool,
    task: Option<String>,
    file: Option<PathBuf>,
    format: Option<String>,
    query: Option<String>,
    engine: Option<String>,
}

fn parse(args: &[OsString]) -> Result<Flags, String> {
    let mut f = Flags::default();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let arg = arg.to_str().ok_or("arguments must be valid UTF-8")?;
        let mut value = |name: &str| -> Result<String, String> {
            it.next()
                .and_then(|v| v.to_str())
                .map(str::to_string)
                .ok_or_else(|| format!("{name} needs a value"))
        };
        match arg {
            "--formats" => f.formats = true,
            "--problems" => f.problems = true,
            "-p" => f.task = Some(value("-p")?),
            "-f" => f.file = Some(value("-f")?.into()),
            "-fo" => f.format = Some(value("-fo")?),
            "-a" => f.query = Some(value("-a")?),
            "--engine" => f.engine = Some(value("--engine")?),
            other => return Err(format!("unknown flag `{other}`")),
        }
    }
    Ok(f)
}

/// Bracketed, comma-separated, no spaces.
fn listing<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let items: Vec<String> = items.into_iter().map(|t| t.to_string()).collect();
    format!("[{}]", items.join(","))
}

pub(super) fn run(args: &[OsString], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match solve(args, out) {
        Ok(()) => 0,
        Err(msg) => {
            let _ = writeln!(err, "afkit: {msg}");
            1
        }
    }
}

fn solve(args: &[OsString], out: &mut dyn Write) -> Result<(), String> {
    let flags = parse(args)?;
    let io = |e: std::io::Error| e.to_string();
    if flags.formats {
        return writeln!(out, "{}", listing(InputFormat::ALL.iter().map(|f| f.name()))).map_err(io);
    }
    if flags.problems {
        return writeln!(out, "{}", listing(TaskKind::all())).map_err(io);
    }
    if flags.task.is_none() && flags.file.is_none() {
        return writeln!(out, "afkit {}", env!("CARGO_PKG_VERSION")).map_err(io);
    }
    let task_name = flags.task.ok_or("missing -p <task>")?;
    let file = flags.file.ok_or("missing -f <file>")?;
    let format: InputFormat = match flags.format {
        Some(f) => f.parse().map_err(|e| format!("{e}"))?,
        None => InputFormat::from_path(&file).ok_or("missing -fo <format>")?,
    };
    let task = TaskSpec::parse(&task_name, flags.query.as_deref()).map_err(|e| e.to_string())?;
    let reasoner: Box<dyn Reasoner> = match flags.engine.as_deref() {
        None | Some("optimized") => Box::new(Engine::default()),
        Some("oracle") => Box::new(Oracle::default()),
        Some(other) => return Err(format!("unknown engine `{other}` (oracle|optimized)")),
    };
    let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
    let af = format.parse(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let answer = reasoner.solve(&task, &af).map_err(|e| e.to_string())?;
    let printed = write_solution(task.kind, &answer).map_err(|e| e.to_string())?;
    writeln!(out, "{printed}").map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let args: Vec<OsString> = args.iter().map(OsString::from).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&args, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn listings() {
        assert_eq!(call(&["--formats"]).1, "[apx,tgf]\n");
        let problems = call(&["--problems"]).1;
        assert!(problems.starts_with("[DC-CO,DS-CO,SE-CO,EE-CO,"));
        assert!(problems.ends_with(",D3]\n"));
        assert!(!problems.contains(' '));
    }

    #[test]
    fn bad_invocations_fail_without_output() {
        for args in [
            &["-p", "EE-XX", "-f", "x.apx", "-fo", "apx"][..],
            &["-p", "EE-PR", "-f", "/nonexistent.apx", "-fo", "apx"],
            &["-p", "EE-PR", "-f", "x.apx", "-fo", "cnf"],
            &["--bogus"],
            &["-p"],
        ] {
            let (code, out, err) = call(args);
            assert_ne!(code, 0, "{args:?}");
            assert!(out.is_empty());
            assert!(err.starts_with("afkit: "));
        }
    }
}
