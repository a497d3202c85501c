//! Competition machinery: judging, scoring, hardness classification,
//! benchmark and query selection, reports, and (with the `cli` feature)
//! running external solvers under resource limits.

mod hardness;
mod judge;
mod report;
mod score;
mod select;

#[cfg(feature = "cli")]
mod log;
#[cfg(feature = "cli")]
mod runner;

use serde::{Deserialize, Serialize};

use crate::task::{Problem, TaskKind};

pub use hardness::{classify_hardness, HardnessCategory, RefRun};
pub use judge::{judge, reference_for, verify_cascade, Judgement, Reference, Verdict, ZeroCause};
pub use report::{cactus_series, emit_report, Report};
pub use score::{rank, rank_rows, JobRecord, RunStatus, ScoreRow};
pub use select::{
    query_count, select_arguments, select_arguments_balanced, select_benchmarks, select_group, select_ideal_argument,
    select_with_quota,
    stable_existence_report, ArgumentSelection, IdealBranch, IdealPick, Pools, SelectError, Selected,
    SelectionQuota, StableCounts, TaskGroup,
};

#[cfg(feature = "cli")]
pub use log::{read_log, JobLog};
#[cfg(feature = "cli")]
pub use runner::{judge_records, run_job, run_roster, JobSpec, SolverCommand, SolverDescriptor};

pub const GIB: u64 = 1 << 30;

/// Wall-clock and memory caps for one solver process.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResourceLimits {
    pub time_secs: f64,
    pub memory_bytes: u64,
}

impl ResourceLimits {
    pub const DEFAULT: ResourceLimits = ResourceLimits {
        time_secs: 600.0,
        memory_bytes: 4 * GIB,
    };
    pub const D3: ResourceLimits = ResourceLimits {
        time_secs: 1800.0,
        memory_bytes: 13 * GIB / 2,
    };

    pub fn for_task(task: TaskKind) -> Self {
        if task.problem == Problem::D3 {
            Self::D3
        } else {
            Self::DEFAULT
        }
    }

    /// Applies `AFKIT_TIME_LIMIT` (seconds) and `AFKIT_MEMORY_LIMIT` (bytes)
    /// when set and well-formed.
    pub fn with_env_overrides(mut self) -> Self {
        if let Some(t) = std::env::var("AFKIT_TIME_LIMIT").ok().and_then(|v| v.parse().ok()) {
            self.time_secs = t;
        }
        if let Some(m) = std::env::var("AFKIT_MEMORY_LIMIT").ok().and_then(|v| v.parse().ok()) {
            self.memory_bytes = m;
        }
        self
    }

    /// The classification protocol runs reference solvers at twice the timeout.
    pub fn doubled(self) -> Self {
        ResourceLimits {
            time_secs: self.time_secs * 2.0,
            ..self
        }
    }
}
