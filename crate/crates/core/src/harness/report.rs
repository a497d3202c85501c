//! Summary tables (CSV and JSON) and cactus-plot series.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::judge::Verdict;
use super::score::{rank, JobRecord, ScoreRow};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Ranked rows over all records.
    pub overall: Vec<ScoreRow>,
    /// Ranked rows per task name.
    pub per_task: BTreeMap<String, Vec<ScoreRow>>,
    /// Per solver: `(k, t)` where `t` is the total time of its `k` fastest
    /// correct answers.
    pub cactus: BTreeMap<String, Vec<(usize, f64)>>,
}

pub fn cactus_series(records: &[JobRecord]) -> BTreeMap<String, Vec<(usize, f64)>> {
    let mut times: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    for r in records {
        let entry = times.entry(r.solver.clone()).or_default();
        if r.verdict() == Some(Verdict::Correct) {
            entry.push(r.elapsed);
        }
    }
    times
        .into_iter()
        .map(|(solver, mut t)| {
            t.sort_by(f64::total_cmp);
            let mut acc = 0.0;
            let series = t
                .into_iter()
                .enumerate()
                .map(|(i, x)| {
                    acc += x;
                    (i + 1, acc)
                })
                .collect();
            (solver, series)
        })
        .collect()
}

pub fn emit_report(records: &[JobRecord]) -> Report {
    let mut by_task: BTreeMap<String, Vec<JobRecord>> = BTreeMap::new();
    for r in records {
        by_task.entry(r.task.kind.to_string()).or_default().push(r.clone());
    }
    Report {
        overall: rank(records),
        per_task: by_task.into_iter().map(|(t, rs)| (t, rank(&rs))).collect(),
        cactus: cactus_series(records),
    }
}

impl Report {
    /// `rank,solver,points,time,correct,wrong,timeouts,other,usc,usc_unchecked,tied`
    /// for the overall table; per-task rows follow with the task in a leading column.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "task",
            "rank",
            "solver",
            "points",
            "time",
            "correct",
            "wrong",
            "timeouts",
            "other",
            "usc",
            "usc_unchecked",
            "tied",
        ])?;
        let tables = std::iter::once(("ALL", &self.overall)).chain(self.per_task.iter().map(|(t, r)| (t.as_str(), r)));
        for (task, rows) in tables {
            for (i, row) in rows.iter().enumerate() {
                w.write_record([
                    task.to_string(),
                    (i + 1).to_string(),
                    row.solver.clone(),
                    row.points.to_string(),
                    format!("{:.2}", row.time),
                    row.correct.to_string(),
                    row.wrong.to_string(),
                    row.timeouts.to_string(),
                    row.other.to_string(),
                    row.usc.to_string(),
                    row.usc_unchecked.to_string(),
                    row.tied.to_string(),
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// `solver,k,cumulative_time`
    pub fn cactus_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["solver", "k", "cumulative_time"])?;
        for (solver, series) in &self.cactus {
            for (k, t) in series {
                w.write_record([solver.clone(), k.to_string(), format!("{t:.3}")])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::judge::Judgement;
    use crate::harness::score::RunStatus;
    use crate::io::parse_solution;
    use crate::task::TaskSpec;

    fn correct(solver: &str, instance: &str, t: f64) -> JobRecord {
        let task = TaskSpec::parse("SE-GR", None).unwrap();
        JobRecord {
            solver: solver.into(),
            output: parse_solution(task.kind, "[]"),
            task,
            instance: instance.into(),
            elapsed: t,
            status: RunStatus::Exited(0),
            judgement: Some(Judgement::correct()),
        }
    }

    #[test]
    fn single_solver_row_and_cactus() {
        let recs = vec![correct("s", "i1", 3.0), correct("s", "i2", 1.0), correct("s", "i3", 2.0)];
        let rep = emit_report(&recs);
        let row = &rep.overall[0];
        assert_eq!((row.points, row.time, row.correct, row.wrong, row.usc), (3, 6.0, 3, 0, 3));
        assert_eq!(rep.cactus["s"], vec![(1, 1.0), (2, 3.0), (3, 6.0)]);
        let csv = rep.to_csv().unwrap();
        assert!(csv.starts_with("task,rank,solver,points"));
        assert!(csv.contains("ALL,1,s,3,6.00,3,0,0,0,3,0,false"));
        assert!(rep.cactus_csv().unwrap().contains("s,3,6.000"));
        let back: Report = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
    }
}
