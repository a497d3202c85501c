//! Pipeline subcommands: generate, classify, select, run, report, oracle.

use std::collections::{BTreeMap, HashMap};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{Engine, Oracle};
use crate::framework::{ArgumentId, ArgumentationFramework};
use crate::gen::{expand_batch, generate, parse_batch, preset, traffic_to_af, BatchEntry, GeneratorConfig, SeededRng};
use crate::harness::{
    classify_hardness, emit_report, judge_records, rank_rows, read_log, run_roster, select_arguments_balanced,
    select_ideal_argument, select_with_quota, stable_existence_report, query_count, HardnessCategory, JobLog,
    JobRecord, JobSpec, Pools, RefRun, ResourceLimits, RunStatus, ScoreRow, SelectionQuota, SolverDescriptor,
    StableCounts, TaskGroup,
};
use crate::io::{write_solution, InputFormat};
use crate::semantics::SemanticsKind;
use crate::task::TaskSpec;

#[derive(Parser)]
#[command(
    name = "afkit",
    version,
    about = "Argumentation benchmark pipeline. Run without a subcommand for the solver interface (-p/-f/-fo/-a)."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write benchmark instances from presets, batch files or an inline spec.
    Generate(GenerateArgs),
    /// Time three reference solvers on every instance and assign hardness categories.
    Classify(ClassifyArgs),
    /// Pick a group's benchmark set and query arguments; writes a manifest.
    Select(SelectArgs),
    /// Run solvers over a manifest, then judge every answer.
    Run(RunArgs),
    /// Rank judged results or replayed counts.
    Report(ReportArgs),
    /// Solve one task with the exhaustive oracle.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value = "apx")]
    format: InputFormat,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Built-in batch (adm-buster, barabasi, erdos, grounded, scc, sem-buster, stable, watts).
    #[arg(long)]
    preset: Vec<String>,
    /// Batch file, one `generator key=value ... instances=N` per line.
    #[arg(long)]
    batch: Vec<PathBuf>,
    /// Undirected graph (TGF) for the traffic generator.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Inline batch line, e.g. `erdos n=50 probAttacks=0.2 instances=3`.
    spec: Vec<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Group whose representative task is timed (A, B or C).
    #[arg(long)]
    group: TaskGroup,
    /// Reference solver descriptors; exactly three.
    #[arg(long = "solver", num_args = 1.., required = true)]
    solvers: Vec<PathBuf>,
    /// Directory of instances; the first sub-directory level names the domain.
    #[arg(long)]
    instances: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, env = "AFKIT_JOBS")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct SelectArgs {
    /// `classification.json` written by `classify`.
    #[arg(long)]
    classification: PathBuf,
    #[arg(long)]
    group: TaskGroup,
    /// Manifest to write.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Per-category counts `very_easy,easy,medium,hard,too_hard`; defaults to the group's quota.
    #[arg(long)]
    quota: Option<String>,
    /// Minimum share of yes and of no answers among the query arguments.
    #[arg(long, default_value_t = 0.2)]
    min_fraction: f64,
    /// Search-node budget used when balancing query arguments.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    /// Earlier manifest whose query arguments are reused per instance.
    #[arg(long)]
    arguments_from: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    manifest: PathBuf,
    #[arg(long = "solver", num_args = 1.., required = true)]
    solvers: Vec<PathBuf>,
    /// Append-only log of raw job records.
    #[arg(long)]
    log: PathBuf,
    /// Judged records; defaults to the log path with a `.judged.jsonl` extension.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "AFKIT_JOBS")]
    jobs: Option<usize>,
    /// Largest framework the oracle computes references for.
    #[arg(long, default_value_t = 20)]
    oracle_cap: usize,
    /// Search-node budget of the reference engine above the oracle cap.
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
}

#[derive(Args)]
struct ReportArgs {
    /// Judged records from `run`.
    #[arg(long, conflicts_with = "counts", required_unless_present = "counts")]
    results: Option<PathBuf>,
    /// CSV `solver,correct,wrong,timeouts,other,time` to rank directly.
    #[arg(long)]
    counts: Option<PathBuf>,
    /// Directory for summary.csv, summary.json and cactus.csv.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(short = 'p')]
    task: String,
    #[arg(short = 'f')]
    file: PathBuf,
    #[arg(long)]
    format: Option<InputFormat>,
    #[arg(short = 'a')]
    query: Option<String>,
    #[arg(long, default_value_t = 20)]
    cap: usize,
}

pub(super) fn run(args: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = match cli.cmd {
        Cmd::Generate(a) => cmd_generate(a, out),
        Cmd::Classify(a) => cmd_classify(a, out),
        Cmd::Select(a) => cmd_select(a, out),
        Cmd::Run(a) => cmd_run(a, out),
        Cmd::Report(a) => cmd_report(a, out),
        Cmd::Oracle(a) => cmd_oracle(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "afkit: {e:#}");
            1
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
    serde_json::from_str(&text).with_context(|| path.display().to_string())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n").with_context(|| path.display().to_string())
}

fn load_af(path: &Path, format: InputFormat) -> Result<ArgumentationFramework> {
    let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
    format.parse(&text).with_context(|| path.display().to_string())
}

fn threads(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

// ---- generate

#[derive(Debug, Serialize, Deserialize)]
struct GeneratedInstance {
    name: String,
    file: String,
    seed: u64,
    config: GeneratorConfig,
}

fn cmd_generate(a: GenerateArgs, out: &mut dyn Write) -> Result<()> {
    let mut sources: Vec<(String, String)> = Vec::new();
    for p in &a.preset {
        let text = preset(p).ok_or_else(|| anyhow!("unknown preset `{p}`"))?;
        sources.push((p.clone(), text.to_string()));
    }
    for path in &a.batch {
        let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
        let stem = path.file_stem().map_or("batch".into(), |s| s.to_string_lossy().into_owned());
        sources.push((stem, text));
    }
    if !a.spec.is_empty() {
        sources.push(("inline".into(), a.spec.join(" ")));
    }
    if sources.is_empty() {
        bail!("nothing to generate: give --preset, --batch or an inline spec");
    }
    let graph = match &a.graph {
        Some(p) => Some(load_af(p, InputFormat::Tgf)?),
        None => None,
    };

    let mut entries: Vec<BatchEntry> = Vec::new();
    let many = sources.len() > 1;
    for (i, (label, text)) in sources.iter().enumerate() {
        let lines = parse_batch(label, text)?;
        for mut e in expand_batch(&lines, a.seed.wrapping_add(i as u64)).map_err(|e| with_file(e, label))? {
            if many {
                e.name = format!("{label}-{}", e.name);
            }
            entries.push(e);
        }
    }

    std::fs::create_dir_all(&a.out).with_context(|| a.out.display().to_string())?;
    let mut written = Vec::with_capacity(entries.len());
    for e in entries {
        let af = match &e.config {
            GeneratorConfig::Traffic { p_symmetric } => {
                let g = graph.as_ref().ok_or_else(|| anyhow!("traffic needs --graph <file.tgf>"))?;
                let edges: Vec<(String, String)> =
                    g.attacks_by_name().map(|(u, v)| (u.to_string(), v.to_string())).collect();
                traffic_to_af(g.names(), &edges, *p_symmetric, SeededRng::new(e.seed))?
            }
            cfg => generate(cfg, SeededRng::new(e.seed))?,
        };
        let file = format!("{}.{}", e.name, a.format.name());
        std::fs::write(a.out.join(&file), a.format.write(&af))?;
        written.push(GeneratedInstance {
            name: e.name,
            file,
            seed: e.seed,
            config: e.config,
        });
    }
    write_json(&a.out.join("instances.json"), &written)?;
    writeln!(out, "wrote {} instances to {}", written.len(), a.out.display())?;
    Ok(())
}

fn with_file(e: crate::gen::GenError, label: &str) -> crate::gen::GenError {
    match e {
        crate::gen::GenError::Batch { line, message, .. } => crate::gen::GenError::Batch {
            file: label.to_string(),
            line,
            message,
        },
        other => other,
    }
}

// ---- classify

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifiedInstance {
    pub instance: String,
    pub domain: String,
    pub path: PathBuf,
    pub format: InputFormat,
    pub runs: Vec<RefRun>,
    pub category: HardnessCategory,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub group: TaskGroup,
    pub instances: Vec<ClassifiedInstance>,
}

/// Instance files under `root`, with their ids and domains.
fn scan_instances(root: &Path) -> Result<Vec<(String, String, PathBuf, InputFormat)>> {
    let mut found = Vec::new();
    for entry in walkdir::WalkDir::new(root).sort_by_file_name() {
        let entry = entry.with_context(|| root.display().to_string())?;
        let path = entry.path();
        let Some(format) = InputFormat::from_path(path).filter(|_| entry.file_type().is_file()) else {
            continue;
        };
        let rel = path.strip_prefix(root)?.with_extension("");
        let id = rel.to_string_lossy().replace('\\', "/");
        let domain = match id.split_once('/') {
            Some((d, _)) => d.to_string(),
            // flat layout: generator prefix of `<generator>_<index>`
            None => id.rsplit_once('_').map_or(id.clone(), |(d, _)| d.to_string()),
        };
        found.push((id, domain, path.to_path_buf(), format));
    }
    found.sort();
    Ok(found)
}

fn ref_run(r: &JobRecord) -> RefRun {
    match r.status {
        RunStatus::Timeout => RefRun::Timeout,
        ref s if s.is_success() && r.output.parsed.is_ok() => RefRun::Solved(r.elapsed),
        _ => RefRun::Crash,
    }
}

fn cmd_classify(a: ClassifyArgs, out: &mut dyn Write) -> Result<()> {
    let task = a
        .group
        .representative()
        .ok_or_else(|| anyhow!("group {} is not classified; it uses group A's benchmarks", a.group))?;
    if a.solvers.len() != 3 {
        bail!("classification needs exactly three reference solvers, got {}", a.solvers.len());
    }
    let solvers: Vec<SolverDescriptor> = a.solvers.iter().map(|p| SolverDescriptor::load(p)).collect::<Result<_>>()?;
    let found = scan_instances(&a.instances)?;
    let jobs: Vec<JobSpec> = found
        .iter()
        .map(|(id, _, path, format)| JobSpec {
            task: TaskSpec { kind: task, query: None },
            instance: id.clone(),
            path: path.clone(),
            format: *format,
        })
        .collect();
    let limits = |k| ResourceLimits::for_task(k).with_env_overrides().doubled();
    let records = run_roster(&solvers, &jobs, limits, threads(a.jobs), None)?;
    let mut runs: HashMap<(&str, &str), RefRun> = HashMap::new();
    for r in &records {
        runs.insert((r.solver.as_str(), r.instance.as_str()), ref_run(r));
    }

    let mut classified = Vec::with_capacity(found.len());
    for (id, domain, path, format) in found {
        // a solver that does not take this format counts as crashed
        let triple: [RefRun; 3] =
            std::array::from_fn(|i| runs.get(&(solvers[i].id.as_str(), id.as_str())).copied().unwrap_or(RefRun::Crash));
        classified.push(ClassifiedInstance {
            category: classify_hardness(&triple),
            instance: id,
            domain,
            path,
            format,
            runs: triple.to_vec(),
        });
    }
    std::fs::create_dir_all(&a.out)?;
    let mut table: BTreeMap<&str, BTreeMap<HardnessCategory, usize>> = BTreeMap::new();
    let mut lists: BTreeMap<HardnessCategory, Vec<&str>> = BTreeMap::new();
    for c in &classified {
        *table.entry(&c.domain).or_default().entry(c.category).or_default() += 1;
        lists.entry(c.category).or_default().push(&c.instance);
    }
    for (cat, ids) in &lists {
        std::fs::write(a.out.join(format!("{cat}.txt")), ids.join("\n") + "\n")?;
    }
    let categories = [
        HardnessCategory::VeryEasy,
        HardnessCategory::Easy,
        HardnessCategory::Medium,
        HardnessCategory::Hard,
        HardnessCategory::TooHard,
        HardnessCategory::NotClassified,
    ];
    write!(out, "{:<16}", "domain")?;
    for c in categories {
        write!(out, " {:>14}", c.name())?;
    }
    writeln!(out)?;
    for (domain, counts) in &table {
        write!(out, "{domain:<16}")?;
        for c in categories {
            write!(out, " {:>14}", counts.get(&c).copied().unwrap_or(0))?;
        }
        writeln!(out)?;
    }
    write_json(
        &a.out.join("classification.json"),
        &Classification {
            group: a.group,
            instances: classified,
        },
    )
}

// ---- select

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestInstance {
    pub instance: String,
    pub domain: String,
    pub category: HardnessCategory,
    pub path: PathBuf,
    pub format: InputFormat,
}

/// A group's benchmark set with the jobs to run on it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub group: TaskGroup,
    pub seed: u64,
    pub instances: Vec<ManifestInstance>,
    /// Query arguments per instance, keyed by task name.
    pub queries: BTreeMap<String, BTreeMap<String, Vec<ArgumentId>>>,
    pub jobs: Vec<JobSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable: Option<BTreeMap<HardnessCategory, StableCounts>>,
}

fn parse_quota(s: &str) -> Result<SelectionQuota> {
    let v: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse())
        .collect::<Result<_, _>>()
        .with_context(|| format!("bad quota `{s}`"))?;
    let [very_easy, easy, medium, hard, too_hard] = v[..] else {
        bail!("quota needs five counts, got `{s}`");
    };
    Ok(SelectionQuota {
        very_easy,
        easy,
        medium,
        hard,
        too_hard,
    })
}

fn cmd_select(a: SelectArgs, out: &mut dyn Write) -> Result<()> {
    let cls: Classification = read_json(&a.classification)?;
    if cls.group != a.group.benchmarks_from() {
        bail!(
            "{} holds group {} benchmarks; group {} needs group {}",
            a.classification.display(),
            cls.group,
            a.group,
            a.group.benchmarks_from()
        );
    }
    let quota = match &a.quota {
        Some(q) => parse_quota(q)?,
        None => SelectionQuota::for_group(a.group.benchmarks_from()),
    };
    let mut classified: BTreeMap<HardnessCategory, Pools> = BTreeMap::new();
    let by_id: HashMap<&str, &ClassifiedInstance> = cls.instances.iter().map(|c| (c.instance.as_str(), c)).collect();
    for c in &cls.instances {
        classified
            .entry(c.category)
            .or_default()
            .entry(c.domain.clone())
            .or_default()
            .push(c.instance.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let picked = select_with_quota(&classified, quota, &mut rng)?;
    let instances: Vec<ManifestInstance> = picked
        .into_iter()
        .flat_map(|(category, sel)| sel.into_iter().map(move |s| (category, s)))
        .map(|(category, s)| {
            let c = by_id[s.instance.as_str()];
            ManifestInstance {
                instance: s.instance,
                domain: s.domain,
                category,
                path: c.path.clone(),
                format: c.format,
            }
        })
        .collect();
    let afs: Vec<ArgumentationFramework> =
        instances.iter().map(|m| load_af(&m.path, m.format)).collect::<Result<_>>()?;

    let reuse: Option<Manifest> = match &a.arguments_from {
        Some(p) => Some(read_json(p)?),
        None => None,
    };
    let engine = Engine::with_budget(a.budget);
    let mut queries: BTreeMap<String, BTreeMap<String, Vec<ArgumentId>>> = BTreeMap::new();
    let mut jobs = Vec::new();
    for task in a.group.tasks() {
        let job = |m: &ManifestInstance, query: Option<ArgumentId>| JobSpec {
            task: TaskSpec { kind: task, query },
            instance: m.instance.clone(),
            path: m.path.clone(),
            format: m.format,
        };
        if !task.problem.needs_query() {
            jobs.extend(instances.iter().map(|m| job(m, None)));
            continue;
        }
        let per_instance: Vec<Vec<ArgumentId>> = if task.semantics == Some(SemanticsKind::Ideal) {
            let mut all = Vec::new();
            for (m, af) in instances.iter().zip(&afs) {
                let mut args: Vec<ArgumentId> = Vec::new();
                for _ in 0..query_count(m.category) {
                    if let Some(p) = select_ideal_argument(af, &engine, &mut rng)? {
                        if !args.contains(&p.argument) {
                            args.push(p.argument);
                        }
                    }
                }
                all.push(args);
            }
            all
        } else if let Some(prev) = reuse.as_ref().and_then(|r| shared_queries(r, a.group)) {
            instances
                .iter()
                .map(|m| prev.get(&m.instance).cloned().unwrap_or_default())
                .collect()
        } else {
            let input: Vec<(&ArgumentationFramework, HardnessCategory)> =
                afs.iter().zip(&instances).map(|(af, m)| (af, m.category)).collect();
            let sel = select_arguments_balanced(&input, task, a.min_fraction, &engine, &mut rng);
            writeln!(out, "{task}: {} yes, {} no, {} undecided", sel.yes, sel.no, sel.unknown)?;
            sel.queries
        };
        let table = queries.entry(task.to_string()).or_default();
        for (m, args) in instances.iter().zip(per_instance) {
            jobs.extend(args.iter().map(|q| job(m, Some(q.clone()))));
            table.insert(m.instance.clone(), args);
        }
    }
    let stable = (a.group == TaskGroup::B).then(|| {
        let sel: Vec<(HardnessCategory, &ArgumentationFramework)> =
            instances.iter().zip(&afs).map(|(m, af)| (m.category, af)).collect();
        stable_existence_report(&sel, &engine)
    });
    let manifest = Manifest {
        group: a.group,
        seed: a.seed,
        instances,
        queries,
        jobs,
        stable,
    };
    write_json(&a.out, &manifest)?;
    writeln!(
        out,
        "selected {} instances, {} jobs -> {}",
        manifest.instances.len(),
        manifest.jobs.len(),
        a.out.display()
    )?;
    Ok(())
}

/// Queries of the reused manifest's first query task, when that manifest
/// belongs to the group this one borrows arguments from.
fn shared_queries(prev: &Manifest, group: TaskGroup) -> Option<&BTreeMap<String, Vec<ArgumentId>>> {
    if group.arguments_from() == group || prev.group != group.arguments_from() {
        return None;
    }
    prev.queries.values().next()
}

// ---- run

fn cmd_run(a: RunArgs, out: &mut dyn Write) -> Result<()> {
    let manifest: Manifest = read_json(&a.manifest)?;
    let solvers: Vec<SolverDescriptor> = a.solvers.iter().map(|p| SolverDescriptor::load(p)).collect::<Result<_>>()?;
    let log = JobLog::open(&a.log).with_context(|| a.log.display().to_string())?;
    let limits = |k| ResourceLimits::for_task(k).with_env_overrides();
    let mut records = run_roster(&solvers, &manifest.jobs, limits, threads(a.jobs), Some(&log))?;

    let mut afs = HashMap::new();
    for m in &manifest.instances {
        afs.insert(m.instance.clone(), load_af(&m.path, m.format)?);
    }
    for j in &manifest.jobs {
        if !afs.contains_key(&j.instance) {
            afs.insert(j.instance.clone(), load_af(&j.path, j.format)?);
        }
    }
    judge_records(&mut records, &afs, a.oracle_cap, &Engine::with_budget(a.budget));

    let judged = a.out.unwrap_or_else(|| a.log.with_extension("judged.jsonl"));
    let _ = std::fs::remove_file(&judged);
    let sink = JobLog::open(&judged)?;
    for r in &records {
        sink.append(r)?;
    }
    print_rows(out, &crate::harness::rank(&records))?;
    writeln!(out, "{} records -> {}", records.len(), judged.display())?;
    Ok(())
}

// ---- report

fn print_rows(out: &mut dyn Write, rows: &[ScoreRow]) -> Result<()> {
    writeln!(
        out,
        "{:>4}  {:<20} {:>7} {:>10} {:>7} {:>6} {:>8} {:>6} {:>5}",
        "rank", "solver", "points", "time", "correct", "wrong", "timeouts", "other", "usc"
    )?;
    for (i, r) in rows.iter().enumerate() {
        writeln!(
            out,
            "{:>4}  {:<20} {:>7} {:>10.2} {:>7} {:>6} {:>8} {:>6} {:>5}{}",
            i + 1,
            r.solver,
            r.points,
            r.time,
            r.correct,
            r.wrong,
            r.timeouts,
            r.other,
            r.usc,
            if r.tied { "  (tied)" } else { "" }
        )?;
    }
    Ok(())
}

#[derive(Debug, Deserialize)]
struct CountsRow {
    solver: String,
    correct: u64,
    wrong: u64,
    timeouts: u64,
    other: u64,
    time: f64,
}

fn cmd_report(a: ReportArgs, out: &mut dyn Write) -> Result<()> {
    if let Some(path) = &a.counts {
        let mut rdr = csv::Reader::from_path(path).with_context(|| path.display().to_string())?;
        let rows = rdr
            .deserialize::<CountsRow>()
            .map(|r| r.map(|c| ScoreRow::from_counts(&c.solver, c.correct, c.wrong, c.timeouts, c.other, c.time)))
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| path.display().to_string())?;
        return print_rows(out, &rank_rows(rows));
    }
    let path = a.results.expect("clap enforces one of --results/--counts");
    let records = read_log(&path).with_context(|| path.display().to_string())?;
    if records.iter().any(|r| r.judgement.is_none()) {
        log::warn!("{} holds unjudged records; they count as `other`", path.display());
    }
    let report = emit_report(&records);
    print_rows(out, &report.overall)?;
    if let Some(dir) = &a.out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("summary.csv"), report.to_csv()?)?;
        std::fs::write(dir.join("summary.json"), report.to_json() + "\n")?;
        std::fs::write(dir.join("cactus.csv"), report.cactus_csv()?)?;
    }
    Ok(())
}

// ---- oracle

fn cmd_oracle(a: OracleArgs, out: &mut dyn Write) -> Result<()> {
    let format = match a.format {
        Some(f) => f,
        None => InputFormat::from_path(&a.file).ok_or_else(|| anyhow!("cannot tell the format; pass --format"))?,
    };
    let task = TaskSpec::parse(&a.task, a.query.as_deref())?;
    let af = load_af(&a.file, format)?;
    let answer = Oracle::with_cap(a.cap).solve(&task, &af)?;
    writeln!(out, "{}", write_solution(task.kind, &answer)?)?;
    Ok(())
}
