use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HardnessCategory {
    VeryEasy,
    Easy,
    Medium,
    Hard,
    TooHard,
    NotClassified,
}

impl HardnessCategory {
    /// The five categories that take part in selection, easiest first.
    pub const RANKED: [HardnessCategory; 5] = [
        HardnessCategory::VeryEasy,
        HardnessCategory::Easy,
        HardnessCategory::Medium,
        HardnessCategory::Hard,
        HardnessCategory::TooHard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HardnessCategory::VeryEasy => "very_easy",
            HardnessCategory::Easy => "easy",
            HardnessCategory::Medium => "medium",
            HardnessCategory::Hard => "hard",
            HardnessCategory::TooHard => "too_hard",
            HardnessCategory::NotClassified => "not_classified",
        }
    }
}

impl fmt::Display for HardnessCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HardnessCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HardnessCategory::RANKED
            .into_iter()
            .chain([HardnessCategory::NotClassified])
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown hardness category `{s}`"))
    }
}

/// Outcome of one reference solver on one instance, run at twice the timeout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RefRun {
    Solved(f64),
    Timeout,
    /// Nonzero exit or unparsable output.
    Crash,
}

impl RefRun {
    fn solved_below(self, limit: f64) -> bool {
        matches!(self, RefRun::Solved(t) if t < limit)
    }
}

/// Topmost matching category for three reference runs.
pub fn classify_hardness(runs: &[RefRun; 3]) -> HardnessCategory {
    if runs.iter().filter(|r| matches!(r, RefRun::Crash)).count() >= 2 {
        return HardnessCategory::NotClassified;
    }
    let all_below = |limit| runs.iter().all(|r| r.solved_below(limit));
    if all_below(6.0) {
        HardnessCategory::VeryEasy
    } else if all_below(60.0) {
        HardnessCategory::Easy
    } else if all_below(600.0) {
        HardnessCategory::Medium
    } else if runs.iter().any(|r| matches!(r, RefRun::Solved(t) if *t <= 1200.0)) {
        HardnessCategory::Hard
    } else {
        HardnessCategory::TooHard
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use HardnessCategory::*;
    use RefRun::*;

    #[test]
    fn thresholds() {
        assert_eq!(classify_hardness(&[Solved(3.0), Solved(5.0), Solved(2.0)]), VeryEasy);
        assert_eq!(classify_hardness(&[Solved(50.0), Solved(400.0), Solved(1100.0)]), Hard);
        assert_eq!(classify_hardness(&[Crash, Crash, Solved(1.0)]), NotClassified);
        assert_eq!(classify_hardness(&[Crash, Solved(1.0), Solved(1.0)]), Hard);
        assert_eq!(classify_hardness(&[Timeout, Timeout, Timeout]), TooHard);
    }

    #[test]
    fn names_round_trip() {
        for c in HardnessCategory::RANKED {
            assert_eq!(c.name().parse::<HardnessCategory>(), Ok(c));
        }
    }
}
