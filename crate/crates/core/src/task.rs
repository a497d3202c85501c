//! Reasoning tasks (`DC-PR`, `EE-ST`, `D3`, ...) and their typed answers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::framework::{ArgumentId, ArgumentationFramework, Extension};
use crate::semantics::SemanticsKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Problem {
    /// Credulous acceptance.
    DC,
    /// Skeptical acceptance.
    DS,
    /// Some extension.
    SE,
    /// Enumerate all extensions.
    EE,
    /// Grounded, stable and preferred enumeration in one run.
    D3,
}

impl Problem {
    pub fn code(self) -> &'static str {
        match self {
            Problem::DC => "DC",
            Problem::DS => "DS",
            Problem::SE => "SE",
            Problem::EE => "EE",
            Problem::D3 => "D3",
        }
    }

    pub fn needs_query(self) -> bool {
        matches!(self, Problem::DC | Problem::DS)
    }
}

/// Task name without the query argument, e.g. `EE-PR`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaskKind {
    pub problem: Problem,
    pub semantics: Option<SemanticsKind>,
}

impl TaskKind {
    pub const fn new(problem: Problem, semantics: SemanticsKind) -> Self {
        TaskKind {
            problem,
            semantics: Some(semantics),
        }
    }

    pub const D3: TaskKind = TaskKind {
        problem: Problem::D3,
        semantics: None,
    };

    /// The 24 single-semantics tasks followed by `D3`.
    pub fn all() -> Vec<TaskKind> {
        let mut tasks = Vec::with_capacity(25);
        for sem in SemanticsKind::ALL {
            let problems: &[Problem] = if sem.is_single_status() {
                &[Problem::DC, Problem::SE]
            } else {
                &[Problem::DC, Problem::DS, Problem::SE, Problem::EE]
            };
            for &problem in problems {
                tasks.push(TaskKind::new(problem, sem));
            }
        }
        tasks.push(TaskKind::D3);
        tasks
    }

    pub fn with_query(self, query: Option<ArgumentId>) -> Result<TaskSpec, TaskError> {
        TaskSpec::new(self.problem, self.semantics, query)
    }
}

impl fmt::Display for TaskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.semantics {
            Some(sem) => write!(f, "{}-{}", self.problem.code(), sem.code()),
            None => f.write_str(self.problem.code()),
        }
    }
}

impl FromStr for TaskKind {
    type Err = TaskError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "D3" {
            return Ok(TaskKind::D3);
        }
        let (p, sem) = s
            .split_once('-')
            .ok_or_else(|| TaskError::UnknownTask(s.to_string()))?;
        let problem = match p {
            "DC" => Problem::DC,
            "DS" => Problem::DS,
            "SE" => Problem::SE,
            "EE" => Problem::EE,
            _ => return Err(TaskError::UnknownTask(s.to_string())),
        };
        let sem: SemanticsKind = sem.parse().map_err(|_| TaskError::UnknownTask(s.to_string()))?;
        let kind = TaskKind::new(problem, sem);
        if !TaskKind::all().contains(&kind) {
            return Err(TaskError::UnknownTask(s.to_string()));
        }
        Ok(kind)
    }
}

impl Serialize for TaskKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TaskKind {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TaskError {
    #[error("unknown or unsupported task `{0}`")]
    UnknownTask(String),
    #[error("task {0} requires a query argument")]
    MissingQuery(TaskKind),
    #[error("task {0} does not take a query argument")]
    UnexpectedQuery(TaskKind),
    #[error("answer shape does not match task {0}")]
    ShapeMismatch(TaskKind),
}

/// A task together with its query argument, when it has one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TaskSpec {
    pub kind: TaskKind,
    pub query: Option<ArgumentId>,
}

impl TaskSpec {
    pub fn new(problem: Problem, semantics: Option<SemanticsKind>, query: Option<ArgumentId>) -> Result<Self, TaskError> {
        let kind = TaskKind { problem, semantics };
        if problem == Problem::D3 {
            if let Some(sem) = semantics {
                return Err(TaskError::UnknownTask(format!("D3-{sem}")));
            }
        } else if !TaskKind::all().contains(&kind) {
            return Err(TaskError::UnknownTask(match semantics {
                Some(sem) => format!("{}-{}", problem.code(), sem),
                None => problem.code().to_string(),
            }));
        }
        match (problem.needs_query(), &query) {
            (true, None) => Err(TaskError::MissingQuery(kind)),
            (false, Some(_)) => Err(TaskError::UnexpectedQuery(kind)),
            _ => Ok(TaskSpec { kind, query }),
        }
    }

    pub fn parse(name: &str, query: Option<&str>) -> Result<Self, TaskError> {
        name.parse::<TaskKind>()?.with_query(query.map(str::to_string))
    }

    pub fn problem(&self) -> Problem {
        self.kind.problem
    }

    pub fn semantics(&self) -> Option<SemanticsKind> {
        self.kind.semantics
    }
}

impl fmt::Display for TaskSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.query {
            Some(q) => write!(f, "{} ({q})", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

/// Extension lists for the three parts of the triathlon.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triathlon {
    pub grounded: Vec<Extension>,
    pub stable: Vec<Extension>,
    pub preferred: Vec<Extension>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Answer {
    Verdict(bool),
    /// `None` is the distinguished `NO` answer of `SE`.
    Single(Option<Extension>),
    Extensions(Vec<Extension>),
    Triathlon(Triathlon),
}

impl Answer {
    /// Whether this answer has the shape `problem` expects.
    pub fn fits(&self, problem: Problem) -> bool {
        matches!(
            (problem, self),
            (Problem::DC | Problem::DS, Answer::Verdict(_))
                | (Problem::SE, Answer::Single(_))
                | (Problem::EE, Answer::Extensions(_))
                | (Problem::D3, Answer::Triathlon(_))
        )
    }

    /// Sorted and deduplicated extension lists, so equal answers compare equal.
    pub fn canonical(mut self) -> Self {
        match &mut self {
            Answer::Extensions(exts) => canonicalize(exts),
            Answer::Triathlon(t) => {
                canonicalize(&mut t.grounded);
                canonicalize(&mut t.stable);
                canonicalize(&mut t.preferred);
            }
            _ => {}
        }
        self
    }
}

pub fn canonicalize(exts: &mut Vec<Extension>) {
    exts.sort();
    exts.dedup();
}

/// Checks the task against a concrete framework (query argument present).
pub fn check_query(task: &TaskSpec, af: &ArgumentationFramework) -> Result<(), crate::framework::AfError> {
    match &task.query {
        Some(q) if !af.contains(q) => Err(crate::framework::AfError::UnknownArgument(q.clone())),
        _ => Ok(()),
    }
}
