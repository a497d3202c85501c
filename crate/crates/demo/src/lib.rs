//! Browser front end over `afkit`. The `#[wasm_bindgen]` exports are thin
//! wrappers around the plain functions below, which are what the tests call.

use afkit::engine::Engine;
use afkit::framework::grounded;
use afkit::gen::{expand_batch, generate, parse_batch, SeededRng};
use afkit::harness::{select_ideal_argument, IdealBranch};
use afkit::io::{parse_apx, write_apx, write_solution};
use afkit::{ArgumentationFramework, TaskSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest framework the page will solve; the search is exponential.
pub const MAX_ARGUMENTS: usize = 200;

fn load(apx: &str) -> Result<ArgumentationFramework, String> {
    let af = parse_apx(apx).map_err(|e| e.to_string())?;
    if af.len() > MAX_ARGUMENTS {
        return Err(format!("{} arguments; the demo stops at {MAX_ARGUMENTS}", af.len()));
    }
    Ok(af)
}

/// Solves `task` (e.g. `EE-PR`, `DC-GR` with `query`) and returns the answer
/// in competition output syntax.
pub fn solve_text(apx: &str, task: &str, query: Option<&str>) -> Result<String, String> {
    let af = load(apx)?;
    let query = query.map(str::trim).filter(|q| !q.is_empty());
    let task = TaskSpec::parse(task.trim(), query).map_err(|e| e.to_string())?;
    let answer = Engine::with_budget(2_000_000).solve(&task, &af).map_err(|e| e.to_string())?;
    write_solution(task.kind, &answer).map_err(|e| e.to_string())
}

#[derive(Debug, Serialize)]
pub struct Drawing {
    pub apx: String,
    pub names: Vec<String>,
    pub attacks: Vec<(usize, usize)>,
    pub grounded: Vec<usize>,
}

/// Generates one framework from a batch-style line such as
/// `watts n=20 k=4 beta=0.2 probCycles=0.5`.
pub fn generate_drawing(spec: &str, seed: u64) -> Result<Drawing, String> {
    let lines = parse_batch("spec", spec).map_err(|e| e.to_string())?;
    let entry = expand_batch(&lines, seed)
        .map_err(|e| e.to_string())?
        .into_iter()
        .next()
        .ok_or("empty spec")?;
    let af = generate(&entry.config, SeededRng::new(seed)).map_err(|e| e.to_string())?;
    if af.len() > MAX_ARGUMENTS {
        return Err(format!("{} arguments; the demo stops at {MAX_ARGUMENTS}", af.len()));
    }
    Ok(drawing(&af))
}

fn drawing(af: &ArgumentationFramework) -> Drawing {
    let g = grounded(af);
    Drawing {
        apx: write_apx(af),
        names: af.names().to_vec(),
        attacks: af.attacks().to_vec(),
        grounded: (0..af.len()).filter(|&i| g.contains(af.name(i))).collect(),
    }
}

/// Parses APX text into the same shape `generate_drawing` returns.
pub fn describe_apx(apx: &str) -> Result<Drawing, String> {
    load(apx).map(|af| drawing(&af))
}

#[derive(Debug, Default, Serialize, PartialEq, Eq)]
pub struct IdealTally {
    pub draws: u32,
    pub interesting: u32,
    pub grounded: u32,
    pub rest: u32,
}

/// Runs the ideal-semantics query selector `draws` times and counts which
/// branch each pick came from.
pub fn ideal_tally(apx: &str, draws: u32, seed: u64) -> Result<IdealTally, String> {
    let af = load(apx)?;
    let engine = Engine::with_budget(2_000_000);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = IdealTally {
        draws,
        ..Default::default()
    };
    for _ in 0..draws {
        let Some(pick) = select_ideal_argument(&af, &engine, &mut rng).map_err(|e| e.to_string())? else {
            return Err("empty framework".into());
        };
        match pick.branch {
            IdealBranch::Interesting => t.interesting += 1,
            IdealBranch::Grounded => t.grounded += 1,
            IdealBranch::Rest => t.rest += 1,
        }
    }
    Ok(t)
}

fn js<T: Serialize>(r: Result<T, String>) -> Result<String, JsValue> {
    r.map(|v| serde_json::to_string(&v).expect("plain data serializes"))
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn solve(apx: &str, task: &str, query: &str) -> Result<String, JsValue> {
    solve_text(apx, task, Some(query)).map_err(|e| JsValue::from_str(&e))
}

/// JSON `{apx, names, attacks, grounded}`.
#[wasm_bindgen]
pub fn generate_graph(spec: &str, seed: u32) -> Result<String, JsValue> {
    js(generate_drawing(spec, seed as u64))
}

/// JSON `{apx, names, attacks, grounded}` for the given text.
#[wasm_bindgen]
pub fn describe(apx: &str) -> Result<String, JsValue> {
    js(describe_apx(apx))
}

/// JSON `{draws, interesting, grounded, rest}`.
#[wasm_bindgen]
pub fn sample_ideal(apx: &str, draws: u32, seed: u32) -> Result<String, JsValue> {
    js(ideal_tally(apx, draws, seed as u64))
}

#[wasm_bindgen]
pub fn example_apx() -> String {
    afkit::examples::EXAMPLE1_APX.to_string()
}
