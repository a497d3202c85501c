//! Exhaustive subset scan. Slow, obviously correct, and independent of the
//! labelling search: every semantics is evaluated straight from its
//! set-theoretic definition over bitmasks.

use crate::framework::{ArgumentationFramework, Extension};
use crate::semantics::SemanticsKind;
use crate::task::{self, Answer, TaskSpec};

use super::{EngineError, Reasoner};

/// Hard ceiling imposed by the `u64` subset representation.
const MAX_CAP: usize = 63;

#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: 20 }
    }
}

struct Masks {
    n: usize,
    attackers: Vec<u64>,
    targets: Vec<u64>,
}

impl Masks {
    fn new(af: &ArgumentationFramework) -> Self {
        let n = af.len();
        let mut attackers = vec![0u64; n];
        let mut targets = vec![0u64; n];
        for &(a, b) in af.attacks() {
            attackers[b] |= 1 << a;
            targets[a] |= 1 << b;
        }
        Masks { n, attackers, targets }
    }

    fn members(&self, set: u64) -> impl Iterator<Item = usize> {
        (0..self.n).filter(move |&i| set >> i & 1 == 1)
    }

    fn attacked_by(&self, set: u64) -> u64 {
        self.members(set).fold(0, |acc, i| acc | self.targets[i])
    }

    fn conflict_free(&self, set: u64) -> bool {
        self.attacked_by(set) & set == 0
    }

    fn defended_by(&self, set: u64) -> u64 {
        let attacked = self.attacked_by(set);
        (0..self.n)
            .filter(|&a| self.attackers[a] & !attacked == 0)
            .fold(0, |acc, a| acc | 1 << a)
    }

    fn range(&self, set: u64) -> u64 {
        set | self.attacked_by(set)
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

fn is_strict_subset(a: u64, b: u64) -> bool {
    a & b == a && a != b
}

/// Elements whose key has no strict superset among the keys of the others.
fn maximal_by(items: &[u64], key: impl Fn(u64) -> u64) -> Vec<u64> {
    items
        .iter()
        .copied()
        .filter(|&s| !items.iter().any(|&t| is_strict_subset(key(s), key(t))))
        .collect()
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap: cap.min(MAX_CAP) }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn enumerate(&self, sem: SemanticsKind, af: &ArgumentationFramework) -> Result<Vec<Extension>, EngineError> {
        if af.len() > self.cap {
            return Err(EngineError::OracleCapExceeded {
                size: af.len(),
                cap: self.cap,
            });
        }
        let m = Masks::new(af);
        let subsets = 0..=m.full();
        let conflict_free: Vec<u64> = subsets.filter(|&s| m.conflict_free(s)).collect();
        let admissible: Vec<u64> = conflict_free
            .iter()
            .copied()
            .filter(|&s| s & m.defended_by(s) == s)
            .collect();
        let complete: Vec<u64> = admissible.iter().copied().filter(|&s| m.defended_by(s) == s).collect();
        let sets: Vec<u64> = match sem {
            SemanticsKind::Complete => complete,
            SemanticsKind::Preferred => maximal_by(&complete, |s| s),
            SemanticsKind::Stable => complete.into_iter().filter(|&s| m.range(s) == m.full()).collect(),
            SemanticsKind::SemiStable => maximal_by(&complete, |s| m.range(s)),
            SemanticsKind::Stage => {
                let mut ranges: Vec<u64> = conflict_free.iter().map(|&s| m.range(s)).collect();
                ranges.sort_unstable();
                ranges.dedup();
                let top = maximal_by(&ranges, |r| r);
                conflict_free.into_iter().filter(|&s| top.contains(&m.range(s))).collect()
            }
            SemanticsKind::Grounded => complete
                .iter()
                .copied()
                .filter(|&s| !complete.iter().any(|&t| is_strict_subset(t, s)))
                .collect(),
            SemanticsKind::Ideal => {
                let preferred = maximal_by(&complete, |s| s);
                let common = preferred.iter().fold(m.full(), |acc, &p| acc & p);
                let inside: Vec<u64> = admissible.into_iter().filter(|&s| s & common == s).collect();
                maximal_by(&inside, |s| s)
            }
        };
        let mut exts: Vec<Extension> = sets
            .into_iter()
            .map(|s| af.extension_from_indices(m.members(s)))
            .collect();
        task::canonicalize(&mut exts);
        Ok(exts)
    }

    /// Every task answered from full enumerations; `SE` returns the first
    /// extension in canonical order.
    pub fn solve(&self, task: &TaskSpec, af: &ArgumentationFramework) -> Result<Answer, EngineError> {
        super::answer_from_enumerations(task, af, |sem| self.enumerate(sem, af))
    }
}

impl Reasoner for Oracle {
    fn solve(&self, task: &TaskSpec, af: &ArgumentationFramework) -> Result<Answer, EngineError> {
        Oracle::solve(self, task, af)
    }

    fn enumerate(&self, sem: SemanticsKind, af: &ArgumentationFramework) -> Result<Vec<Extension>, EngineError> {
        Oracle::enumerate(self, sem, af)
    }
}
