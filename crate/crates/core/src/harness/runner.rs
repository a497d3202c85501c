//! Runs external solvers under time and memory limits and judges the
//! collected outputs.

use std::collections::{BTreeMap, HashMap};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::{Child, Command, Stdio};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use wait_timeout::ChildExt;

use crate::engine::{Engine, Oracle, Reasoner};
use crate::framework::ArgumentationFramework;
use crate::io::{parse_solution, InputFormat};
use crate::task::{TaskKind, TaskSpec};

use super::judge::{reference_for, verify_cascade, Judgement};
use super::log::JobLog;
use super::score::{JobRecord, RunStatus};
use super::ResourceLimits;

/// Program plus leading arguments; the task flags are appended.
pub type SolverCommand = Vec<String>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverDescriptor {
    pub id: String,
    pub command: SolverCommand,
    pub tasks: Vec<TaskKind>,
    pub formats: Vec<InputFormat>,
}

impl SolverDescriptor {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut d: SolverDescriptor =
            serde_json::from_str(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
        // relative executables resolve against the descriptor's directory
        let exe = PathBuf::from(&d.command[0]);
        if exe.is_relative() && exe.components().count() > 1 {
            if let Some(dir) = path.parent() {
                d.command[0] = dir.join(exe).to_string_lossy().into_owned();
            }
        }
        Ok(d)
    }

    pub fn supports(&self, task: TaskKind, format: InputFormat) -> bool {
        self.tasks.contains(&task) && self.formats.contains(&format)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobSpec {
    pub task: TaskSpec,
    pub instance: String,
    pub path: PathBuf,
    pub format: InputFormat,
}

const WATCHDOG_PERIOD: Duration = Duration::from_millis(100);

#[cfg(unix)]
fn confine(cmd: &mut Command, memory_bytes: u64) {
    use std::os::unix::process::CommandExt;
    // SAFETY: only async-signal-safe libc calls between fork and exec.
    unsafe {
        cmd.pre_exec(move || {
            libc::setpgid(0, 0);
            let lim = libc::rlimit {
                rlim_cur: memory_bytes as libc::rlim_t,
                rlim_max: memory_bytes as libc::rlim_t,
            };
            if libc::setrlimit(libc::RLIMIT_AS, &lim) != 0 {
                return Err(std::io::Error::last_os_error());
            }
            Ok(())
        });
    }
}

#[cfg(not(unix))]
fn confine(_cmd: &mut Command, _memory_bytes: u64) {}

/// Kills the solver and anything it spawned.
fn kill_tree(child: &mut Child) {
    #[cfg(unix)]
    unsafe {
        libc::kill(-(child.id() as i32), libc::SIGKILL);
    }
    let _ = child.kill();
}

/// Resident set size in bytes, where the platform exposes it.
fn resident_bytes(pid: u32) -> Option<u64> {
    let status = std::fs::read_to_string(format!("/proc/{pid}/status")).ok()?;
    let line = status.lines().find(|l| l.starts_with("VmRSS:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

/// Polls resident memory until `done` hangs up; returns whether it fired.
fn watchdog(pid: u32, limit: u64, done: mpsc::Receiver<()>) -> thread::JoinHandle<bool> {
    thread::spawn(move || loop {
        if resident_bytes(pid).is_some_and(|rss| rss > limit) {
            #[cfg(unix)]
            unsafe {
                libc::kill(-(pid as i32), libc::SIGKILL);
            }
            return true;
        }
        if !matches!(done.recv_timeout(WATCHDOG_PERIOD), Err(mpsc::RecvTimeoutError::Timeout)) {
            return false;
        }
    })
}

/// Launches the solver on one job and records its raw output, unjudged.
pub fn run_job(solver: &SolverDescriptor, job: &JobSpec, limits: ResourceLimits) -> JobRecord {
    let mut record = JobRecord {
        solver: solver.id.clone(),
        task: job.task.clone(),
        instance: job.instance.clone(),
        output: parse_solution(job.task.kind, ""),
        elapsed: 0.0,
        status: RunStatus::Exited(0),
        judgement: None,
    };
    let Some((program, args)) = solver.command.split_first() else {
        record.status = RunStatus::SpawnFailed("empty command".into());
        return record;
    };
    let mut cmd = Command::new(program);
    cmd.args(args)
        .arg("-p")
        .arg(job.task.kind.to_string())
        .arg("-f")
        .arg(&job.path)
        .arg("-fo")
        .arg(job.format.name());
    if let Some(q) = &job.task.query {
        cmd.arg("-a").arg(q);
    }
    cmd.stdin(Stdio::null()).stdout(Stdio::piped()).stderr(Stdio::null());
    confine(&mut cmd, limits.memory_bytes);

    let start = Instant::now();
    let mut child = match cmd.spawn() {
        Ok(c) => c,
        Err(e) => {
            record.status = RunStatus::SpawnFailed(format!("{program}: {e}"));
            return record;
        }
    };
    let mut stdout = child.stdout.take().expect("piped stdout");
    let reader = thread::spawn(move || {
        let mut buf = Vec::new();
        let _ = stdout.read_to_end(&mut buf);
        buf
    });
    let (done, done_rx) = mpsc::channel();
    let dog = watchdog(child.id(), limits.memory_bytes, done_rx);

    let waited = child.wait_timeout(Duration::from_secs_f64(limits.time_secs));
    let status = match waited {
        Ok(Some(status)) => status_of(status),
        Ok(None) => {
            kill_tree(&mut child);
            let _ = child.wait();
            RunStatus::Timeout
        }
        Err(e) => {
            kill_tree(&mut child);
            let _ = child.wait();
            RunStatus::SpawnFailed(format!("wait failed: {e}"))
        }
    };
    record.elapsed = start.elapsed().as_secs_f64();
    drop(done);
    let tripped = dog.join().unwrap_or(false);
    // a grandchild may still hold the pipe open; take the group down first
    #[cfg(unix)]
    unsafe {
        libc::kill(-(child.id() as i32), libc::SIGKILL);
    }
    let raw = reader.join().unwrap_or_default();
    record.status = if tripped {
        RunStatus::MemoryOut
    } else {
        status
    };
    record.output = parse_solution(job.task.kind, &String::from_utf8_lossy(&raw));
    record
}

fn status_of(status: std::process::ExitStatus) -> RunStatus {
    if let Some(code) = status.code() {
        return RunStatus::Exited(code);
    }
    #[cfg(unix)]
    {
        use std::os::unix::process::ExitStatusExt;
        if let Some(sig) = status.signal() {
            return RunStatus::Signaled(sig);
        }
    }
    RunStatus::Exited(-1)
}

/// Runs every solver on every job it advertises, `threads` at a time. The
/// result is sorted by solver, instance and task regardless of completion
/// order; each record is appended to `log` as soon as it finishes.
pub fn run_roster(
    solvers: &[SolverDescriptor],
    jobs: &[JobSpec],
    limits: impl Fn(TaskKind) -> ResourceLimits + Sync,
    threads: usize,
    log: Option<&JobLog>,
) -> anyhow::Result<Vec<JobRecord>> {
    let pairs: Vec<(&SolverDescriptor, &JobSpec)> = solvers
        .iter()
        .flat_map(|s| jobs.iter().filter(|j| s.supports(j.task.kind, j.format)).map(move |j| (s, j)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build()?;
    let mut records: Vec<JobRecord> = pool.install(|| {
        pairs
            .par_iter()
            .map(|(s, j)| {
                let r = run_job(s, j, limits(j.task.kind));
                if let Some(log) = log {
                    if let Err(e) = log.append(&r) {
                        ::log::error!("job log {}: {e}", log.path().display());
                    }
                }
                r
            })
            .collect()
    });
    records.sort_by(|a, b| {
        (&a.solver, &a.instance, a.task.to_string()).cmp(&(&b.solver, &b.instance, b.task.to_string()))
    });
    Ok(records)
}

/// Judges every record. The reference comes from the oracle for frameworks
/// within `oracle_cap` and from the budgeted engine otherwise; where neither
/// finishes, the verification cascade decides using the other solvers'
/// answers on the same job.
pub fn judge_records(
    records: &mut [JobRecord],
    instances: &HashMap<String, ArgumentationFramework>,
    oracle_cap: usize,
    engine: &Engine,
) {
    let mut jobs: BTreeMap<(String, String), Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        jobs.entry(r.job_key()).or_default().push(i);
    }
    let oracle = Oracle::with_cap(oracle_cap);
    let verdicts: Vec<(usize, Judgement)> = jobs
        .par_iter()
        .flat_map_iter(|(_, idx)| {
            let first = &records[idx[0]];
            let Some(af) = instances.get(&first.instance) else {
                ::log::warn!("no framework loaded for instance {}", first.instance);
                return Vec::new();
            };
            let reasoner: &dyn Reasoner = if af.len() <= oracle.cap() { &oracle } else { engine };
            let reference = reference_for(&first.task, af, reasoner).ok();
            idx.iter()
                .map(|&i| {
                    let r = &records[i];
                    if let Some(cause) = r.status.failure_cause() {
                        return (i, Judgement::zero(cause));
                    }
                    let peers: Vec<_> = idx
                        .iter()
                        .filter(|&&k| k != i && records[k].status.is_success())
                        .map(|&k| records[k].output.clone())
                        .collect();
                    (i, verify_cascade(&r.task, af, &r.output, &peers, reference.as_ref(), engine))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    for (i, j) in verdicts {
        records[i].judgement = Some(j);
    }
}

#[cfg(all(test, unix))]
mod tests {
    use super::*;
    use crate::harness::judge::{Verdict, ZeroCause};
    use std::os::unix::fs::PermissionsExt;

    fn script(dir: &Path, name: &str, body: &str) -> SolverDescriptor {
        let path = dir.join(name);
        std::fs::write(&path, format!("#!/bin/sh\n{body}\n")).unwrap();
        std::fs::set_permissions(&path, std::fs::Permissions::from_mode(0o755)).unwrap();
        SolverDescriptor {
            id: name.into(),
            command: vec![path.to_string_lossy().into_owned()],
            tasks: TaskKind::all(),
            formats: vec![InputFormat::Apx],
        }
    }

    fn job(dir: &Path) -> JobSpec {
        let path = dir.join("ex.apx");
        std::fs::write(&path, crate::examples::EXAMPLE1_APX).unwrap();
        JobSpec {
            task: TaskSpec::parse("SE-ST", None).unwrap(),
            instance: "ex".into(),
            path,
            format: InputFormat::Apx,
        }
    }

    fn limits(secs: f64) -> ResourceLimits {
        ResourceLimits {
            time_secs: secs,
            memory_bytes: 1 << 30,
        }
    }

    #[test]
    fn captures_output_and_flags() {
        let dir = tempfile::tempdir().unwrap();
        let s = script(dir.path(), "echo", "echo \"$@\" >&2; echo NO");
        let r = run_job(&s, &job(dir.path()), limits(10.0));
        assert_eq!(r.status, RunStatus::Exited(0));
        assert_eq!(r.output.raw, "NO\n");
    }

    #[test]
    fn timeout_kills_the_process_group() {
        let dir = tempfile::tempdir().unwrap();
        let s = script(dir.path(), "slow", "sleep 30; echo NO");
        let start = Instant::now();
        let r = run_job(&s, &job(dir.path()), limits(0.3));
        assert_eq!(r.status, RunStatus::Timeout);
        assert!(start.elapsed() < Duration::from_secs(10));
    }

    #[test]
    fn crash_and_spawn_failure() {
        let dir = tempfile::tempdir().unwrap();
        let s = script(dir.path(), "crash", "echo NO; exit 3");
        let mut recs = vec![run_job(&s, &job(dir.path()), limits(10.0))];
        assert_eq!(recs[0].status, RunStatus::Exited(3));
        let missing = SolverDescriptor {
            command: vec![dir.path().join("nope").to_string_lossy().into_owned()],
            ..s.clone()
        };
        recs.push(run_job(&missing, &job(dir.path()), limits(10.0)));
        assert!(matches!(recs[1].status, RunStatus::SpawnFailed(_)));
        let afs = HashMap::from([("ex".to_string(), crate::examples::example1())]);
        judge_records(&mut recs, &afs, 20, &Engine::default());
        assert_eq!(recs[0].judgement, Some(Judgement::zero(ZeroCause::Crash)));
        assert_eq!(recs[1].judgement, Some(Judgement::zero(ZeroCause::SpawnFailed)));
    }

    #[test]
    fn roster_is_sorted_and_judged() {
        let dir = tempfile::tempdir().unwrap();
        let good = script(dir.path(), "good", "echo NO");
        let bad = script(dir.path(), "bad", "echo '[a]'");
        let jobs = vec![job(dir.path())];
        let mut recs = run_roster(&[good, bad], &jobs, |_| limits(10.0), 2, None).unwrap();
        assert_eq!(recs.iter().map(|r| r.solver.as_str()).collect::<Vec<_>>(), ["bad", "good"]);
        let afs = HashMap::from([("ex".to_string(), crate::examples::example1())]);
        judge_records(&mut recs, &afs, 20, &Engine::default());
        assert_eq!(recs[0].verdict(), Some(Verdict::Incorrect));
        assert_eq!(recs[1].verdict(), Some(Verdict::Correct));
    }
}
