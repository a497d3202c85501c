//! Job accounting and ranking.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::io::SolutionText;
use crate::task::TaskSpec;

use super::judge::{Judgement, Verdict, ZeroCause};

/// How the solver process ended.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RunStatus {
    Exited(i32),
    Signaled(i32),
    Timeout,
    MemoryOut,
    SpawnFailed(String),
}

impl RunStatus {
    pub fn is_success(&self) -> bool {
        matches!(self, RunStatus::Exited(0))
    }

    /// The zero-verdict cause a failed run maps to.
    pub fn failure_cause(&self) -> Option<ZeroCause> {
        match self {
            RunStatus::Exited(0) => None,
            RunStatus::Exited(_) | RunStatus::Signaled(_) => Some(ZeroCause::Crash),
            RunStatus::Timeout => Some(ZeroCause::Timeout),
            RunStatus::MemoryOut => Some(ZeroCause::MemoryOut),
            RunStatus::SpawnFailed(_) => Some(ZeroCause::SpawnFailed),
        }
    }
}

/// One solver on one task instance. `judgement` is empty until judged.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobRecord {
    pub solver: String,
    pub task: TaskSpec,
    pub instance: String,
    pub output: SolutionText,
    pub elapsed: f64,
    pub status: RunStatus,
    pub judgement: Option<Judgement>,
}

impl JobRecord {
    pub fn verdict(&self) -> Option<Verdict> {
        self.judgement.as_ref().map(|j| j.verdict)
    }

    pub fn points(&self) -> i64 {
        self.judgement.as_ref().map_or(0, Judgement::points)
    }

    /// Key identifying the job independent of the solver.
    pub fn job_key(&self) -> (String, String) {
        (self.task.to_string(), self.instance.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ScoreRow {
    pub solver: String,
    pub points: i64,
    /// Total seconds spent on correctly answered jobs.
    pub time: f64,
    pub correct: u64,
    pub wrong: u64,
    pub timeouts: u64,
    pub other: u64,
    /// Jobs answered correctly by this solver alone.
    pub usc: u64,
    /// Of those, how many were accepted unchecked.
    pub usc_unchecked: u64,
    /// Set when score and time both equal a neighbour's; order then falls
    /// back to the solver id.
    pub tied: bool,
}

impl ScoreRow {
    /// A row from published counts: points are recomputed, never copied.
    pub fn from_counts(solver: &str, correct: u64, wrong: u64, timeouts: u64, other: u64, time: f64) -> Self {
        ScoreRow {
            solver: solver.to_string(),
            points: correct as i64 - 5 * wrong as i64,
            time,
            correct,
            wrong,
            timeouts,
            other,
            ..Default::default()
        }
    }
}

/// Aggregates judged records per solver and ranks them: points descending,
/// then correct-answer time ascending, then solver id.
pub fn rank(records: &[JobRecord]) -> Vec<ScoreRow> {
    let mut rows: BTreeMap<&str, ScoreRow> = BTreeMap::new();
    let mut solved_by: BTreeMap<(String, String), Vec<(&str, bool)>> = BTreeMap::new();
    for r in records {
        let row = rows.entry(&r.solver).or_insert_with(|| ScoreRow {
            solver: r.solver.clone(),
            ..Default::default()
        });
        let Some(j) = &r.judgement else {
            row.other += 1;
            continue;
        };
        row.points += j.points();
        match j.verdict {
            Verdict::Correct => {
                row.correct += 1;
                row.time += r.elapsed;
                solved_by.entry(r.job_key()).or_default().push((&r.solver, j.unchecked));
            }
            Verdict::Incorrect => row.wrong += 1,
            Verdict::Zero if j.cause == Some(ZeroCause::Timeout) => row.timeouts += 1,
            Verdict::Zero => row.other += 1,
        }
    }
    for solvers in solved_by.values() {
        if let [(solver, unchecked)] = solvers.as_slice() {
            let row = rows.get_mut(solver).unwrap();
            row.usc += 1;
            row.usc_unchecked += u64::from(*unchecked);
        }
    }
    rank_rows(rows.into_values().collect())
}

/// Orders precomputed rows and flags exact ties.
pub fn rank_rows(mut rows: Vec<ScoreRow>) -> Vec<ScoreRow> {
    rows.sort_by(|a, b| {
        b.points
            .cmp(&a.points)
            .then(a.time.total_cmp(&b.time))
            .then_with(|| a.solver.cmp(&b.solver))
    });
    for i in 1..rows.len() {
        if rows[i].points == rows[i - 1].points && rows[i].time == rows[i - 1].time {
            rows[i].tied = true;
            rows[i - 1].tied = true;
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_solution;
    use crate::task::TaskKind;

    fn record(solver: &str, instance: &str, judgement: Judgement, elapsed: f64) -> JobRecord {
        let task = TaskSpec::parse("EE-PR", None).unwrap();
        JobRecord {
            solver: solver.into(),
            output: parse_solution(TaskKind::D3, ""),
            task,
            instance: instance.into(),
            elapsed,
            status: RunStatus::Exited(0),
            judgement: Some(judgement),
        }
    }

    #[test]
    fn published_rows() {
        assert_eq!(ScoreRow::from_counts("goDIAMOND", 1176, 4, 0, 0, 0.0).points, 1156);
        assert_eq!(ScoreRow::from_counts("gg-sts", 264, 427, 0, 0, 0.0).points, -1871);
        assert_eq!(ScoreRow::from_counts("pyglaf", 1229, 0, 168, 3, 0.0).points, 1229);
    }

    #[test]
    fn time_breaks_ties() {
        let rows = rank_rows(vec![
            ScoreRow::from_counts("cegartix", 695, 0, 0, 0, 1152.51),
            ScoreRow::from_counts("CoQuiAAS", 695, 0, 0, 0, 335.85),
        ]);
        assert_eq!(rows[0].solver, "CoQuiAAS");
        assert!(!rows[0].tied);
    }

    #[test]
    fn exact_ties_are_flagged() {
        let rows = rank_rows(vec![
            ScoreRow::from_counts("b", 3, 0, 0, 0, 1.0),
            ScoreRow::from_counts("a", 3, 0, 0, 0, 1.0),
        ]);
        assert_eq!(rows[0].solver, "a");
        assert!(rows[0].tied && rows[1].tied);
    }

    #[test]
    fn aggregation_and_usc() {
        let unchecked = Judgement {
            unchecked: true,
            ..Judgement::correct()
        };
        let records = vec![
            record("x", "i1", Judgement::correct(), 1.0),
            record("x", "i2", Judgement::correct(), 2.0),
            record("x", "i3", unchecked, 3.0),
            record("y", "i1", Judgement::correct(), 0.5),
            record("y", "i2", Judgement::incorrect(), 0.5),
            record("y", "i3", Judgement::zero(ZeroCause::Timeout), 600.0),
        ];
        let rows = rank(&records);
        assert_eq!(rows[0].solver, "x");
        assert_eq!((rows[0].points, rows[0].time, rows[0].usc, rows[0].usc_unchecked), (3, 6.0, 2, 1));
        assert_eq!((rows[1].points, rows[1].wrong, rows[1].timeouts), (-4, 1, 1));
        assert!(rank(&[]).is_empty());
    }
}
