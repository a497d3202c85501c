//! Benchmark selection per hardness category and query-argument selection.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{Engine, EngineError};
use crate::framework::{grounded, ArgumentId, ArgumentationFramework, Extension};
use crate::gen::{pick, shuffle};
use crate::semantics::SemanticsKind;
use crate::task::{Answer, Problem, TaskKind, TaskSpec};

use super::hardness::HardnessCategory;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SelectError {
    #[error("need {needed} {category} instances, only {available} available")]
    InsufficientPool {
        category: String,
        needed: usize,
        available: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TaskGroup {
    A,
    B,
    C,
    D,
    E,
}

impl TaskGroup {
    pub const ALL: [TaskGroup; 5] = [TaskGroup::A, TaskGroup::B, TaskGroup::C, TaskGroup::D, TaskGroup::E];

    pub fn tasks(self) -> Vec<TaskKind> {
        use Problem::*;
        use SemanticsKind::*;
        let t = TaskKind::new;
        match self {
            TaskGroup::A => vec![t(DS, Preferred), t(EE, Preferred), t(EE, Complete)],
            TaskGroup::B => vec![
                t(DC, Stable),
                t(DS, Stable),
                t(EE, Stable),
                t(SE, Stable),
                t(DC, Preferred),
                t(SE, Preferred),
                t(DC, Complete),
            ],
            TaskGroup::C => vec![t(DS, Complete), t(SE, Complete), t(DC, Grounded), t(SE, Grounded)],
            TaskGroup::D => vec![t(DC, Ideal), t(SE, Ideal)],
            TaskGroup::E => [SemiStable, Stage]
                .into_iter()
                .flat_map(|s| [t(DC, s), t(DS, s), t(EE, s), t(SE, s)])
                .collect(),
        }
    }

    /// Task used to classify instances for this group. D and E have none;
    /// they take group A's benchmarks.
    pub fn representative(self) -> Option<TaskKind> {
        match self {
            TaskGroup::A => Some(TaskKind::new(Problem::EE, SemanticsKind::Preferred)),
            TaskGroup::B => Some(TaskKind::new(Problem::EE, SemanticsKind::Stable)),
            TaskGroup::C => Some(TaskKind::new(Problem::SE, SemanticsKind::Grounded)),
            TaskGroup::D | TaskGroup::E => None,
        }
    }

    /// Group whose benchmark set this group uses.
    pub fn benchmarks_from(self) -> TaskGroup {
        match self {
            TaskGroup::D | TaskGroup::E => TaskGroup::A,
            g => g,
        }
    }

    /// Group whose query arguments this group reuses.
    pub fn arguments_from(self) -> TaskGroup {
        match self {
            TaskGroup::E => TaskGroup::A,
            g => g,
        }
    }

    pub fn of(task: TaskKind) -> Option<TaskGroup> {
        TaskGroup::ALL.into_iter().find(|g| g.tasks().contains(&task))
    }
}

impl fmt::Display for TaskGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for TaskGroup {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TaskGroup::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown task group `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectionQuota {
    pub very_easy: usize,
    pub easy: usize,
    pub medium: usize,
    pub hard: usize,
    pub too_hard: usize,
}

impl SelectionQuota {
    pub const STANDARD: SelectionQuota = SelectionQuota {
        very_easy: 50,
        easy: 50,
        medium: 100,
        hard: 100,
        too_hard: 50,
    };

    pub fn for_group(group: TaskGroup) -> Self {
        match group {
            TaskGroup::C => SelectionQuota {
                hard: 150,
                too_hard: 0,
                ..Self::STANDARD
            },
            _ => Self::STANDARD,
        }
    }

    pub fn get(&self, c: HardnessCategory) -> usize {
        match c {
            HardnessCategory::VeryEasy => self.very_easy,
            HardnessCategory::Easy => self.easy,
            HardnessCategory::Medium => self.medium,
            HardnessCategory::Hard => self.hard,
            HardnessCategory::TooHard => self.too_hard,
            HardnessCategory::NotClassified => 0,
        }
    }

    pub fn total(&self) -> usize {
        HardnessCategory::RANKED.iter().map(|&c| self.get(c)).sum()
    }
}

/// Instances of one category keyed by domain.
pub type Pools = BTreeMap<String, Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selected {
    pub domain: String,
    pub instance: String,
}

/// Round-robin over the domains with instances left, one random pick each.
/// When fewer picks remain than such domains, the domains served in that
/// last round are drawn at random.
pub fn select_benchmarks<R: Rng>(pools: &Pools, n: usize, rng: &mut R) -> Result<Vec<Selected>, SelectError> {
    let available: usize = pools.values().map(Vec::len).sum();
    if available < n {
        return Err(SelectError::InsufficientPool {
            category: String::new(),
            needed: n,
            available,
        });
    }
    let mut left: Vec<(&String, Vec<&String>)> = pools.iter().map(|(d, v)| (d, v.iter().collect())).collect();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let mut live: Vec<usize> = (0..left.len()).filter(|&i| !left[i].1.is_empty()).collect();
        let need = n - out.len();
        if live.len() > need {
            shuffle(rng, &mut live);
            live.truncate(need);
            live.sort_unstable();
        }
        for d in live {
            let items = &mut left[d].1;
            let inst = items.swap_remove(pick(rng, items.len()));
            out.push(Selected {
                domain: left[d].0.clone(),
                instance: inst.clone(),
            });
        }
    }
    Ok(out)
}

/// Applies the group's quota to every category.
pub fn select_group<R: Rng>(
    classified: &BTreeMap<HardnessCategory, Pools>,
    group: TaskGroup,
    rng: &mut R,
) -> Result<BTreeMap<HardnessCategory, Vec<Selected>>, SelectError> {
    select_with_quota(classified, SelectionQuota::for_group(group), rng)
}

pub fn select_with_quota<R: Rng>(
    classified: &BTreeMap<HardnessCategory, Pools>,
    quota: SelectionQuota,
    rng: &mut R,
) -> Result<BTreeMap<HardnessCategory, Vec<Selected>>, SelectError> {
    let empty = Pools::new();
    let mut out = BTreeMap::new();
    for c in HardnessCategory::RANKED {
        let pools = classified.get(&c).unwrap_or(&empty);
        let picked = select_benchmarks(pools, quota.get(c), rng).map_err(|e| match e {
            SelectError::InsufficientPool { needed, available, .. } => SelectError::InsufficientPool {
                category: c.to_string(),
                needed,
                available,
            },
        })?;
        out.insert(c, picked);
    }
    Ok(out)
}

/// Number of query arguments drawn for an instance of category `c`.
pub fn query_count(c: HardnessCategory) -> usize {
    match c {
        HardnessCategory::VeryEasy | HardnessCategory::NotClassified => 0,
        HardnessCategory::TooHard => 2,
        _ => 1,
    }
}

fn random_arguments<R: Rng>(af: &ArgumentationFramework, k: usize, rng: &mut R) -> Vec<ArgumentId> {
    let mut idx: Vec<usize> = (0..af.len()).collect();
    shuffle(rng, &mut idx);
    idx.into_iter().take(k).map(|i| af.name(i).to_string()).collect()
}

/// Uniform query arguments for one instance, without yes/no balancing.
pub fn select_arguments<R: Rng>(af: &ArgumentationFramework, category: HardnessCategory, rng: &mut R) -> Vec<ArgumentId> {
    random_arguments(af, query_count(category), rng)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArgumentSelection {
    pub queries: Vec<Vec<ArgumentId>>,
    pub yes: usize,
    pub no: usize,
    pub unknown: usize,
}

/// Query arguments for a whole selection under `task`, keeping at least
/// `min_fraction` of the queries on each side of the yes/no divide where
/// the instances allow it. Answers come from `engine`; instances it cannot
/// decide get uniform picks.
pub fn select_arguments_balanced<R: Rng>(
    instances: &[(&ArgumentationFramework, HardnessCategory)],
    task: TaskKind,
    min_fraction: f64,
    engine: &Engine,
    rng: &mut R,
) -> ArgumentSelection {
    let total: usize = instances.iter().map(|(_, c)| query_count(*c)).sum();
    let need = (min_fraction * total as f64).ceil() as usize;
    let mut sel = ArgumentSelection {
        queries: Vec::with_capacity(instances.len()),
        yes: 0,
        no: 0,
        unknown: 0,
    };
    let mut remaining = total;
    for &(af, category) in instances {
        let mut order: Vec<usize> = (0..af.len()).collect();
        shuffle(rng, &mut order);
        let mut chosen: Vec<ArgumentId> = Vec::new();
        for _ in 0..query_count(category).min(af.len()) {
            let want = if need.saturating_sub(sel.yes) >= remaining {
                Some(true)
            } else if need.saturating_sub(sel.no) >= remaining {
                Some(false)
            } else if sel.yes < need && sel.no >= need {
                Some(true)
            } else if sel.no < need && sel.yes >= need {
                Some(false)
            } else {
                None
            };
            let mut fallback = None;
            let mut pickd = None;
            for &i in &order {
                let name = af.name(i);
                if chosen.iter().any(|c| c == name) {
                    continue;
                }
                let answer = TaskSpec::new(task.problem, task.semantics, Some(name.to_string()))
                    .ok()
                    .and_then(|t| engine.solve(&t, af).ok());
                let verdict = match answer {
                    Some(Answer::Verdict(v)) => Some(v),
                    _ => None,
                };
                if fallback.is_none() {
                    fallback = Some((name, verdict));
                }
                if want.is_none() || verdict == want {
                    pickd = Some((name, verdict));
                    break;
                }
            }
            let Some((name, verdict)) = pickd.or(fallback) else { break };
            match verdict {
                Some(true) => sel.yes += 1,
                Some(false) => sel.no += 1,
                None => sel.unknown += 1,
            }
            remaining -= 1;
            chosen.push(name.to_string());
        }
        sel.queries.push(chosen);
    }
    sel
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealBranch {
    /// From `∩PR \ G`.
    Interesting,
    /// From the grounded extension `G`.
    Grounded,
    /// From `A \ ∩PR` (all of `A` when that set is empty).
    Rest,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealPick {
    pub argument: ArgumentId,
    pub branch: IdealBranch,
}

/// Query argument for `DC-ID`: with probability 0.9 an argument in every
/// preferred extension but outside the grounded one, else with probability
/// 0.6 a grounded argument, else one outside the preferred intersection.
/// Both uniforms are drawn on every call so streams stay aligned.
pub fn select_ideal_argument<R: Rng>(
    af: &ArgumentationFramework,
    engine: &Engine,
    rng: &mut R,
) -> Result<Option<IdealPick>, EngineError> {
    if af.is_empty() {
        return Ok(None);
    }
    let preferred = engine.enumerate(SemanticsKind::Preferred, af)?;
    let common: Vec<bool> = (0..af.len())
        .map(|i| preferred.iter().all(|e| e.contains(af.name(i))))
        .collect();
    let g: Extension = grounded(af);
    let in_g: Vec<bool> = (0..af.len()).map(|i| g.contains(af.name(i))).collect();
    let collect = |f: &dyn Fn(usize) -> bool| -> Vec<usize> { (0..af.len()).filter(|&i| f(i)).collect() };
    let interesting = collect(&|i| common[i] && !in_g[i]);
    let grounded_args = collect(&|i| in_g[i]);
    let mut rest = collect(&|i| !common[i]);
    if rest.is_empty() {
        rest = (0..af.len()).collect();
    }
    let alpha: f64 = rng.gen();
    let beta: f64 = rng.gen();
    let (branch, pool) = if !interesting.is_empty() && alpha < 0.9 {
        (IdealBranch::Interesting, interesting)
    } else if !grounded_args.is_empty() && beta < 0.6 {
        (IdealBranch::Grounded, grounded_args)
    } else {
        (IdealBranch::Rest, rest)
    };
    let i = pool[pick(rng, pool.len())];
    Ok(Some(IdealPick {
        argument: af.name(i).to_string(),
        branch,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StableCounts {
    pub nonempty: usize,
    pub empty: usize,
    pub unknown: usize,
}

/// Tallies, per category, whether `SE-ST` finds a stable extension within
/// the engine's budget.
pub fn stable_existence_report(
    selection: &[(HardnessCategory, &ArgumentationFramework)],
    engine: &Engine,
) -> BTreeMap<HardnessCategory, StableCounts> {
    let task = TaskSpec {
        kind: TaskKind::new(Problem::SE, SemanticsKind::Stable),
        query: None,
    };
    let mut out: BTreeMap<HardnessCategory, StableCounts> = BTreeMap::new();
    for &(c, af) in selection {
        let row = out.entry(c).or_default();
        match engine.solve(&task, af) {
            Ok(Answer::Single(Some(_))) => row.nonempty += 1,
            Ok(Answer::Single(None)) => row.empty += 1,
            _ => row.unknown += 1,
        }
    }
    out
}
