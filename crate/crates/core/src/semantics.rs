use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::{Engine, EngineError};
use crate::framework::{self, ArgumentationFramework, Extension};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SemanticsKind {
    #[serde(rename = "CO")]
    Complete,
    #[serde(rename = "PR")]
    Preferred,
    #[serde(rename = "ST")]
    Stable,
    #[serde(rename = "SST")]
    SemiStable,
    #[serde(rename = "STG")]
    Stage,
    #[serde(rename = "GR")]
    Grounded,
    #[serde(rename = "ID")]
    Ideal,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 7] = [
        SemanticsKind::Complete,
        SemanticsKind::Preferred,
        SemanticsKind::Stable,
        SemanticsKind::SemiStable,
        SemanticsKind::Stage,
        SemanticsKind::Grounded,
        SemanticsKind::Ideal,
    ];

    pub fn code(self) -> &'static str {
        match self {
            SemanticsKind::Complete => "CO",
            SemanticsKind::Preferred => "PR",
            SemanticsKind::Stable => "ST",
            SemanticsKind::SemiStable => "SST",
            SemanticsKind::Stage => "STG",
            SemanticsKind::Grounded => "GR",
            SemanticsKind::Ideal => "ID",
        }
    }

    /// Grounded and ideal always have exactly one extension.
    pub fn is_single_status(self) -> bool {
        matches!(self, SemanticsKind::Grounded | SemanticsKind::Ideal)
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown semantics `{0}`")]
pub struct UnknownSemantics(pub String);

impl FromStr for SemanticsKind {
    type Err = UnknownSemantics;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SemanticsKind::ALL
            .into_iter()
            .find(|k| k.code() == s)
            .ok_or_else(|| UnknownSemantics(s.to_string()))
    }
}

/// Decides whether `set` is a `sem`-extension of `af`.
///
/// Local conditions are checked first; semantics defined by comparison with
/// other extensions fall back to the search engine. A complete set with full
/// range is stable and therefore also preferred, semi-stable and stage.
pub fn verify(
    sem: SemanticsKind,
    af: &ArgumentationFramework,
    set: &Extension,
    engine: &Engine,
) -> Result<bool, EngineError> {
    let mask = af.mask(set)?;
    let conflict_free = framework::conflict_free_mask(af, &mask);
    if !conflict_free {
        return Ok(false);
    }
    let stable = framework::full_range(af, &mask);
    Ok(match sem {
        SemanticsKind::Complete => framework::complete_mask(af, &mask),
        SemanticsKind::Stable => stable,
        SemanticsKind::Stage => stable || engine.enumerate(SemanticsKind::Stage, af)?.contains(set),
        SemanticsKind::Grounded => framework::grounded_mask(af) == mask,
        SemanticsKind::Preferred | SemanticsKind::SemiStable => {
            if !framework::complete_mask(af, &mask) {
                false
            } else if stable {
                true
            } else {
                engine.enumerate(sem, af)?.contains(set)
            }
        }
        SemanticsKind::Ideal => {
            framework::admissible_mask(af, &mask) && engine.ideal(af)? == *set
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext(names: &[&str]) -> Extension {
        names.iter().copied().collect()
    }

    #[test]
    fn verify_examples() {
        let af = crate::examples::example1();
        let engine = Engine::default();
        assert!(!verify(SemanticsKind::Complete, &af, &ext(&["b", "d"]), &engine).unwrap());
        assert!(verify(SemanticsKind::Ideal, &af, &ext(&["h"]), &engine).unwrap());
        let single = ArgumentationFramework::new(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(verify(SemanticsKind::Stable, &single, &ext(&["a"]), &engine).unwrap());
        assert!(verify(SemanticsKind::Stable, &af, &ext(&["x"]), &engine).is_err());
    }

    #[test]
    fn codes_round_trip() {
        for sem in SemanticsKind::ALL {
            assert_eq!(sem.code().parse::<SemanticsKind>().unwrap(), sem);
        }
        assert!("XX".parse::<SemanticsKind>().is_err());
    }
}
