//! Task solving: an exhaustive oracle for small frameworks and a search
//! engine for everything else, both behind [`Reasoner`].

mod oracle;
mod search;

use thiserror::Error;

pub use oracle::Oracle;

use crate::framework::{self, AfError, ArgumentationFramework, Extension};
use crate::semantics::SemanticsKind;
use crate::task::{self, Answer, Problem, TaskError, TaskSpec, Triathlon};

use search::{Budget, Clause, Flow, Mode, Search, IN, OUT, UND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Framework(#[from] AfError),
    #[error(transparent)]
    Task(#[from] TaskError),
    #[error("framework has {size} arguments, oracle cap is {cap}")]
    OracleCapExceeded { size: usize, cap: usize },
    #[error("search budget of {limit} nodes exhausted")]
    BudgetExhausted { limit: u64 },
}

/// Anything that answers tasks on a framework.
pub trait Reasoner: Send + Sync {
    fn solve(&self, task: &TaskSpec, af: &ArgumentationFramework) -> Result<Answer, EngineError>;

    fn enumerate(&self, sem: SemanticsKind, af: &ArgumentationFramework) -> Result<Vec<Extension>, EngineError>;
}

/// Exact enumeration via the exhaustive oracle (default cap).
pub fn oracle_enumerate(sem: SemanticsKind, af: &ArgumentationFramework) -> Result<Vec<Extension>, EngineError> {
    Oracle::default().enumerate(sem, af)
}

/// Oracle-backed task solving.
pub fn solve(task: &TaskSpec, af: &ArgumentationFramework) -> Result<Answer, EngineError> {
    Oracle::default().solve(task, af)
}

/// Search-engine task solving, no budget.
pub fn solve_optimized(task: &TaskSpec, af: &ArgumentationFramework) -> Result<Answer, EngineError> {
    Engine::default().solve(task, af)
}

pub fn d3(af: &ArgumentationFramework) -> Result<Answer, EngineError> {
    Engine::default().d3(af)
}

/// Derives any task answer from a full enumeration. Used by the oracle and
/// as the definition the search engine is tested against.
pub(crate) fn answer_from_enumerations(
    task: &TaskSpec,
    af: &ArgumentationFramework,
    mut enumerate: impl FnMut(SemanticsKind) -> Result<Vec<Extension>, EngineError>,
) -> Result<Answer, EngineError> {
    task::check_query(task, af)?;
    let Some(sem) = task.semantics() else {
        return Ok(Answer::Triathlon(Triathlon {
            grounded: enumerate(SemanticsKind::Grounded)?,
            stable: enumerate(SemanticsKind::Stable)?,
            preferred: enumerate(SemanticsKind::Preferred)?,
        }));
    };
    let exts = enumerate(sem)?;
    Ok(match task.problem() {
        Problem::DC => {
            let q = task.query.as_deref().unwrap();
            Answer::Verdict(exts.iter().any(|e| e.contains(q)))
        }
        Problem::DS => {
            let q = task.query.as_deref().unwrap();
            Answer::Verdict(exts.iter().all(|e| e.contains(q)))
        }
        Problem::SE => Answer::Single(exts.into_iter().next()),
        Problem::EE => Answer::Extensions(exts),
        Problem::D3 => unreachable!("D3 has no semantics"),
    })
}

/// Labelling-based search engine with an optional node budget.
#[derive(Debug, Clone, Copy, Default)]
pub struct Engine {
    budget: Option<u64>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Limits every call to `limit` search nodes.
    pub fn with_budget(limit: u64) -> Self {
        Engine { budget: Some(limit) }
    }

    pub fn solve(&self, task: &TaskSpec, af: &ArgumentationFramework) -> Result<Answer, EngineError> {
        task::check_query(task, af)?;
        let budget = Budget::new(self.budget);
        let run = Run { af, budget: &budget };
        let Some(sem) = task.semantics() else {
            return run.d3();
        };
        let query = task.query.as_deref().map(|q| af.index_of(q).unwrap());
        use SemanticsKind::*;
        Ok(match (task.problem(), sem) {
            (Problem::EE, _) => Answer::Extensions(run.enumerate(sem)?),
            (Problem::SE, Grounded | Complete) => Answer::Single(Some(framework::grounded(af))),
            (Problem::SE, Ideal) => Answer::Single(Some(run.ideal()?)),
            (Problem::SE, Stable) => Answer::Single(run.stable(Some(1))?.into_iter().next().map(|m| run.ext(&m))),
            (Problem::SE, Preferred) => {
                Answer::Single(run.preferred(&mut |_| Flow::Stop)?.into_iter().next().map(|m| run.ext(&m)))
            }
            (Problem::SE, SemiStable | Stage) => {
                Answer::Single(run.range_maximal(mode_for(sem), Some(1))?.into_iter().next().map(|m| run.ext(&m)))
            }
            (Problem::DC, Grounded) | (Problem::DS, Complete) => {
                Answer::Verdict(framework::grounded_mask(af)[query.unwrap()])
            }
            (Problem::DC, Ideal) => Answer::Verdict(run.ideal_mask()?[query.unwrap()]),
            (Problem::DC, Complete | Preferred) => Answer::Verdict(run.credulous_complete(query.unwrap())?),
            (Problem::DC, Stable) => Answer::Verdict(run.stable_with(query.unwrap(), IN)?),
            (Problem::DS, Stable) => Answer::Verdict(!run.stable_with(query.unwrap(), OUT)?),
            (Problem::DS, Preferred) => Answer::Verdict(run.skeptical_preferred(query.unwrap())?),
            (Problem::DC, SemiStable | Stage) => {
                let q = query.unwrap();
                Answer::Verdict(run.range_maximal(mode_for(sem), None)?.iter().any(|m| m[q]))
            }
            (Problem::DS, SemiStable | Stage) => {
                let q = query.unwrap();
                Answer::Verdict(run.range_maximal(mode_for(sem), None)?.iter().all(|m| m[q]))
            }
            (Problem::DS, Grounded | Ideal) | (Problem::D3, _) => {
                return Err(TaskError::UnknownTask(task.kind.to_string()).into())
            }
        })
    }

    pub fn enumerate(&self, sem: SemanticsKind, af: &ArgumentationFramework) -> Result<Vec<Extension>, EngineError> {
        let budget = Budget::new(self.budget);
        Run { af, budget: &budget }.enumerate(sem)
    }

    pub fn ideal(&self, af: &ArgumentationFramework) -> Result<Extension, EngineError> {
        let budget = Budget::new(self.budget);
        Run { af, budget: &budget }.ideal()
    }

    pub fn d3(&self, af: &ArgumentationFramework) -> Result<Answer, EngineError> {
        let budget = Budget::new(self.budget);
        Run { af, budget: &budget }.d3()
    }
}

impl Reasoner for Engine {
    fn solve(&self, task: &TaskSpec, af: &ArgumentationFramework) -> Result<Answer, EngineError> {
        Engine::solve(self, task, af)
    }

    fn enumerate(&self, sem: SemanticsKind, af: &ArgumentationFramework) -> Result<Vec<Extension>, EngineError> {
        Engine::enumerate(self, sem, af)
    }
}

fn mode_for(sem: SemanticsKind) -> Mode {
    if sem == SemanticsKind::Stage {
        Mode::ConflictFree
    } else {
        Mode::Complete
    }
}

struct Run<'a> {
    af: &'a ArgumentationFramework,
    budget: &'a Budget,
}

impl<'a> Run<'a> {
    fn ext(&self, mask: &[bool]) -> Extension {
        self.af.extension_from_mask(mask)
    }

    fn exts(&self, masks: &[Vec<bool>]) -> Vec<Extension> {
        let mut exts: Vec<Extension> = masks.iter().map(|m| self.ext(m)).collect();
        task::canonicalize(&mut exts);
        exts
    }

    fn search(&self, mode: Mode) -> Search<'a> {
        let mut search = Search::new(self.af, mode, self.budget);
        if mode == Mode::Complete {
            search.seed_grounded(&framework::grounded_mask(self.af));
        }
        search
    }

    fn enumerate(&self, sem: SemanticsKind) -> Result<Vec<Extension>, EngineError> {
        use SemanticsKind::*;
        Ok(match sem {
            Complete => {
                let mut all = Vec::new();
                self.search(Mode::Complete).for_each(&mut |lab| {
                    all.push(search::in_set(lab));
                    Flow::Continue
                })?;
                self.exts(&all)
            }
            Preferred => self.exts(&self.preferred(&mut |_| Flow::Continue)?),
            Stable => self.exts(&self.stable(None)?),
            SemiStable | Stage => self.exts(&self.range_maximal(mode_for(sem), None)?),
            Grounded => vec![framework::grounded(self.af)],
            Ideal => vec![self.ideal()?],
        })
    }

    fn stable(&self, limit: Option<usize>) -> Result<Vec<Vec<bool>>, EngineError> {
        let mut search = self.search(Mode::Complete);
        for a in 0..self.af.len() {
            search.restrict(a, IN | OUT);
        }
        collect(&mut search, limit)
    }

    fn stable_with(&self, arg: usize, label: u8) -> Result<bool, EngineError> {
        let mut search = self.search(Mode::Complete);
        for a in 0..self.af.len() {
            search.restrict(a, IN | OUT);
        }
        search.restrict(arg, label);
        Ok(search.first()?.is_some())
    }

    fn credulous_complete(&self, arg: usize) -> Result<bool, EngineError> {
        let mut search = self.search(Mode::Complete);
        search.restrict(arg, IN);
        Ok(search.first()?.is_some())
    }

    /// Preferred extensions: find a complete labelling outside every known
    /// preferred extension, then grow it until no complete superset remains.
    /// `found` sees each new extension and may stop the enumeration.
    fn preferred(&self, found: &mut dyn FnMut(&[bool]) -> Flow) -> Result<Vec<Vec<bool>>, EngineError> {
        let n = self.af.len();
        let mut preferred: Vec<Vec<bool>> = Vec::new();
        loop {
            let mut search = self.search(Mode::Complete);
            for p in &preferred {
                search.add_clause(Clause::SomeIn(outside(p)));
            }
            let Some(lab) = search.first()? else { break };
            let mut current = search::in_set(&lab);
            loop {
                let mut grow = self.search(Mode::Complete);
                for a in (0..n).filter(|&a| current[a]) {
                    grow.restrict(a, IN);
                }
                grow.add_clause(Clause::SomeIn(outside(&current)));
                match grow.first()? {
                    Some(lab) => current = search::in_set(&lab),
                    None => break,
                }
            }
            let flow = found(&current);
            preferred.push(current);
            if flow == Flow::Stop {
                break;
            }
        }
        Ok(preferred)
    }

    fn skeptical_preferred(&self, arg: usize) -> Result<bool, EngineError> {
        if framework::grounded_mask(self.af)[arg] {
            return Ok(true);
        }
        if !self.credulous_complete(arg)? {
            return Ok(false);
        }
        let mut accepted = true;
        self.preferred(&mut |p| {
            if p[arg] {
                Flow::Continue
            } else {
                accepted = false;
                Flow::Stop
            }
        })?;
        Ok(accepted)
    }

    /// Semi-stable (complete mode) or stage (conflict-free mode) extensions:
    /// labellings whose UNDEC set is subset-minimal. Stable extensions are
    /// returned directly when they exist.
    fn range_maximal(&self, mode: Mode, limit: Option<usize>) -> Result<Vec<Vec<bool>>, EngineError> {
        let stable = self.stable(limit)?;
        if !stable.is_empty() {
            return Ok(stable);
        }
        let n = self.af.len();
        let mut result = Vec::new();
        let mut undec_sets: Vec<Vec<usize>> = Vec::new();
        loop {
            let mut search = self.search(mode);
            for u in &undec_sets {
                search.add_clause(Clause::SomeDecided(u.clone()));
            }
            let Some(lab) = search.first()? else { break };
            let mut undec = search::undec_set(&lab);
            loop {
                let mut shrink = self.search(mode);
                let mut in_undec = vec![false; n];
                for &u in &undec {
                    in_undec[u] = true;
                }
                for a in (0..n).filter(|&a| !in_undec[a]) {
                    shrink.restrict(a, IN | OUT);
                }
                shrink.add_clause(Clause::SomeDecided(undec.clone()));
                match shrink.first()? {
                    Some(lab) => undec = search::undec_set(&lab),
                    None => break,
                }
            }
            let mut exact = self.search(mode);
            let mut in_undec = vec![false; n];
            for &u in &undec {
                in_undec[u] = true;
            }
            for (a, &u) in in_undec.iter().enumerate() {
                exact.restrict(a, if u { UND } else { IN | OUT });
            }
            let remaining = limit.map(|l| l - result.len());
            result.extend(collect(&mut exact, remaining)?);
            undec_sets.push(undec);
            if limit.is_some_and(|l| result.len() >= l) {
                break;
            }
        }
        Ok(result)
    }

    fn ideal_mask(&self) -> Result<Vec<bool>, EngineError> {
        let n = self.af.len();
        let preferred = self.preferred(&mut |_| Flow::Continue)?;
        let mut candidate: Vec<bool> = (0..n).map(|a| preferred.iter().all(|p| p[a])).collect();
        loop {
            let defended = framework::defended_mask(self.af, &candidate);
            let next: Vec<bool> = (0..n).map(|a| candidate[a] && defended[a]).collect();
            if next == candidate {
                return Ok(candidate);
            }
            candidate = next;
        }
    }

    fn ideal(&self) -> Result<Extension, EngineError> {
        Ok(self.ext(&self.ideal_mask()?))
    }

    fn d3(&self) -> Result<Answer, EngineError> {
        let grounded = framework::grounded(self.af);
        Ok(Answer::Triathlon(Triathlon {
            grounded: vec![grounded],
            stable: self.exts(&self.stable(None)?),
            preferred: self.exts(&self.preferred(&mut |_| Flow::Continue)?),
        }))
    }
}

fn outside(mask: &[bool]) -> Vec<usize> {
    (0..mask.len()).filter(|&a| !mask[a]).collect()
}

fn collect(search: &mut Search<'_>, limit: Option<usize>) -> Result<Vec<Vec<bool>>, EngineError> {
    let mut out = Vec::new();
    if limit == Some(0) {
        return Ok(out);
    }
    search.for_each(&mut |lab| {
        out.push(search::in_set(lab));
        if limit.is_some_and(|l| out.len() >= l) {
            Flow::Stop
        } else {
            Flow::Continue
        }
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::example1;

    fn ext(names: &[&str]) -> Extension {
        names.iter().copied().collect()
    }

    fn sets(list: &[&[&str]]) -> Vec<Extension> {
        let mut v: Vec<Extension> = list.iter().map(|s| ext(s)).collect();
        task::canonicalize(&mut v);
        v
    }

    #[test]
    fn example1_enumerations() {
        let af = example1();
        let engine = Engine::default();
        assert_eq!(
            engine.enumerate(SemanticsKind::Complete, &af).unwrap(),
            sets(&[&[], &["a"], &["h"], &["a", "h"], &["b", "d", "h"]])
        );
        assert_eq!(
            engine.enumerate(SemanticsKind::SemiStable, &af).unwrap(),
            sets(&[&["b", "d", "h"]])
        );
        assert_eq!(
            engine.enumerate(SemanticsKind::Stage, &af).unwrap(),
            sets(&[&["a", "e", "h"], &["b", "e", "h"], &["b", "d", "h"]])
        );
        assert_eq!(engine.ideal(&af).unwrap(), ext(&["h"]));
    }

    #[test]
    fn solve_examples() {
        let af = example1();
        let task = |name: &str, q: Option<&str>| TaskSpec::parse(name, q).unwrap();
        assert_eq!(solve_optimized(&task("SE-ST", None), &af).unwrap(), Answer::Single(None));
        assert_eq!(solve_optimized(&task("DS-ST", Some("f")), &af).unwrap(), Answer::Verdict(true));
        assert_eq!(solve_optimized(&task("DC-PR", Some("e")), &af).unwrap(), Answer::Verdict(false));
        assert!(matches!(
            solve_optimized(&task("DC-PR", Some("zz")), &af),
            Err(EngineError::Framework(AfError::UnknownArgument(_)))
        ));
    }

    #[test]
    fn empty_framework() {
        let af = ArgumentationFramework::default();
        for sem in SemanticsKind::ALL {
            assert_eq!(Engine::default().enumerate(sem, &af).unwrap(), vec![Extension::new()], "{sem}");
        }
    }

    #[test]
    fn d3_examples() {
        let af = example1();
        assert_eq!(
            d3(&af).unwrap(),
            Answer::Triathlon(Triathlon {
                grounded: vec![Extension::new()],
                stable: vec![],
                preferred: sets(&[&["a", "h"], &["b", "d", "h"]]),
            })
        );
        let single = ArgumentationFramework::new(["a"], Vec::<(&str, &str)>::new()).unwrap();
        let a = vec![ext(&["a"])];
        assert_eq!(
            d3(&single).unwrap(),
            Answer::Triathlon(Triathlon {
                grounded: a.clone(),
                stable: a.clone(),
                preferred: a
            })
        );
    }

    #[test]
    fn budget_is_enforced() {
        let af = crate::gen::sembuster(6).unwrap();
        let err = Engine::with_budget(3).enumerate(SemanticsKind::Preferred, &af).unwrap_err();
        assert_eq!(err, EngineError::BudgetExhausted { limit: 3 });
    }
}
