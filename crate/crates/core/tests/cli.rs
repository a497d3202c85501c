//! The `afkit` binary: solver flags and the benchmark pipeline.

use std::path::Path;
use std::process::{Command, Output};

const EXE: &str = env!("CARGO_BIN_EXE_afkit");

fn afkit(dir: &Path, args: &[&str]) -> Output {
    Command::new(EXE).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn example_dir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let af = afkit::examples::example1();
    std::fs::write(dir.path().join("ex.apx"), afkit::io::write_apx(&af)).unwrap();
    std::fs::write(dir.path().join("ex.tgf"), afkit::io::write_tgf(&af)).unwrap();
    dir
}

#[test]
fn listings_and_version() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(stdout(&afkit(dir.path(), &["--formats"])), "[apx,tgf]\n");
    let problems = stdout(&afkit(dir.path(), &["--problems"]));
    assert_eq!(problems.trim().trim_matches(['[', ']']).split(',').count(), 25);
    assert!(stdout(&afkit(dir.path(), &[])).starts_with("afkit "));
}

#[test]
fn solves_example_in_both_formats_and_engines() {
    let dir = example_dir();
    let d = dir.path();
    for file in ["ex.apx", "ex.tgf"] {
        let fo = &file[3..];
        for engine in ["oracle", "optimized"] {
            let run = |task: &str, q: Option<&str>| {
                let mut args = vec!["--engine", engine, "-p", task, "-f", file, "-fo", fo];
                if let Some(q) = q {
                    args.extend(["-a", q]);
                }
                stdout(&afkit(d, &args)).trim().to_string()
            };
            assert_eq!(run("EE-PR", None), "[[a,h],[b,d,h]]");
            assert_eq!(run("SE-ST", None), "NO");
            assert_eq!(run("SE-ID", None), "[h]");
            assert_eq!(run("DC-CO", Some("d")), "YES");
            assert_eq!(run("DS-PR", Some("a")), "NO");
            assert_eq!(run("DS-PR", Some("h")), "YES");
            assert_eq!(run("DC-GR", Some("h")), "NO");
        }
    }
}

#[test]
fn errors_exit_nonzero_with_empty_stdout() {
    let dir = example_dir();
    for args in [
        &["-p", "DC-CO", "-f", "ex.apx", "-fo", "apx"][..],
        &["-p", "EE-PR", "-f", "missing.apx", "-fo", "apx"],
        &["-p", "EE-XY", "-f", "ex.apx", "-fo", "apx"],
        &["-p", "DC-CO", "-f", "ex.apx", "-fo", "apx", "-a", "zz"],
    ] {
        let o = afkit(dir.path(), args);
        assert!(!o.status.success(), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn oracle_subcommand_agrees() {
    let dir = example_dir();
    let o = afkit(dir.path(), &["oracle", "-p", "EE-SST", "-f", "ex.apx"]);
    assert_eq!(stdout(&o).trim(), "[[b,d,h]]");
}

#[test]
fn generate_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for out in ["one", "two"] {
        stdout(&afkit(d, &["generate", "--out", out, "--seed", "4", "erdos n=12 probAttacks=0.2 instances=3"]));
    }
    let names: Vec<_> = std::fs::read_dir(d.join("one"))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".apx"))
        .collect();
    assert_eq!(names.len(), 3);
    for n in &names {
        let a = std::fs::read_to_string(d.join("one").join(n)).unwrap();
        let b = std::fs::read_to_string(d.join("two").join(n)).unwrap();
        assert_eq!(a, b);
        assert_eq!(afkit::io::parse_apx(&a).unwrap().len(), 12);
    }
}

fn write_descriptor(dir: &Path, id: &str, engine: &str) -> String {
    let path = dir.join(format!("{id}.json"));
    let body = serde_json::json!({
        "id": id,
        "command": [EXE, "--engine", engine],
        "tasks": afkit::TaskKind::all(),
        "formats": ["apx", "tgf"],
    });
    std::fs::write(&path, body.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn pipeline_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    stdout(&afkit(d, &["generate", "--out", "inst/erdos", "--seed", "1", "erdos n=8 probAttacks=0.25 instances=4"]));
    stdout(&afkit(d, &["generate", "--out", "inst/watts", "--seed", "2", "watts n=8 k=2 beta=0.3 probCycles=0.5 instances=4"]));
    let refs: Vec<String> = ["r1", "r2", "r3"].iter().map(|id| write_descriptor(d, id, "optimized")).collect();

    let mut args = vec!["classify", "--group", "A", "--instances", "inst", "--out", "cls"];
    for r in &refs {
        args.extend(["--solver", r.as_str()]);
    }
    stdout(&afkit(d, &args));
    let cls: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(d.join("cls/classification.json")).unwrap()).unwrap();
    assert!(cls.to_string().contains("very_easy"));

    stdout(&afkit(
        d,
        &["select", "--classification", "cls/classification.json", "--group", "A", "--quota", "6,0,0,0,0", "--out", "m.json", "--seed", "3"],
    ));
    let manifest: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("m.json")).unwrap()).unwrap();
    assert_eq!(manifest["instances"].as_array().unwrap().len(), 6);

    let oracle = write_descriptor(d, "oracle", "oracle");
    let table = stdout(&afkit(
        d,
        &["run", "--manifest", "m.json", "--solver", &oracle, "--solver", &refs[0], "--log", "jobs.jsonl", "--jobs", "2"],
    ));
    assert!(table.contains("oracle"));
    let judged = std::fs::read_to_string(d.join("jobs.judged.jsonl")).unwrap();
    let lines: Vec<serde_json::Value> = judged.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!lines.is_empty());
    assert!(!judged.contains("incorrect"), "{judged}");

    stdout(&afkit(d, &["report", "--results", "jobs.judged.jsonl", "--out", "rep"]));
    let summary = std::fs::read_to_string(d.join("rep/summary.csv")).unwrap();
    assert!(summary.lines().count() >= 3, "{summary}");
    assert!(d.join("rep/cactus.csv").exists());
}

#[test]
fn report_ranks_counts() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(
        d.join("c.csv"),
        "solver,correct,wrong,timeouts,other,time\nslow,10,0,0,0,90\nfast,10,0,0,0,30\nsloppy,12,1,0,0,5\n",
    )
    .unwrap();
    let out = stdout(&afkit(d, &["report", "--counts", "c.csv", "--out", "rep"]));
    let order: Vec<usize> = ["fast", "slow", "sloppy"].iter().map(|s| out.find(s).unwrap()).collect();
    assert!(order[0] < order[1] && order[1] < order[2], "{out}");
}
