//! Seeded benchmark generators.
//!
//! Every generator is a pure function of its config and a [`SeededRng`].
//! Randomness is drawn from ChaCha8 with one stream per generator phase, and
//! all integer sampling goes through `u64` so 32-bit targets (wasm) produce
//! the same frameworks as 64-bit hosts.

mod batch;
mod crafted;
mod iccma15;
mod random;
mod traffic;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::framework::{ArgumentId, ArgumentationFramework};

pub use batch::{expand_batch, parse_batch, preset, BatchEntry, BatchLine, PRESETS};
pub use crafted::{admbuster, sembuster};
pub use iccma15::{gen_grounded, gen_scc, gen_stable};
pub use random::{gen_barabasi, gen_erdos, gen_watts, scc_count};
pub use traffic::traffic_to_af;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("{file}:{line}: {message}")]
    Batch { file: String, line: usize, message: String },
}

/// Per-generator parameter records, named after the benchmark table symbols.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "kebab-case")]
pub enum GeneratorConfig {
    #[serde(rename_all = "camelCase")]
    Grounded { n: usize, prob_attacks: f64 },
    #[serde(rename_all = "camelCase")]
    Scc {
        n: usize,
        #[serde(rename = "nSCCs")]
        n_sccs: usize,
        inner_attack_prob: f64,
        outer_attack_prob: f64,
    },
    #[serde(rename_all = "camelCase")]
    Stable {
        n: usize,
        min_num_extensions: usize,
        max_num_extensions: usize,
        min_size_of_extensions: usize,
        max_size_of_extensions: usize,
        min_size_of_grounded_extension: usize,
        max_size_of_grounded_extension: usize,
    },
    #[serde(rename_all = "camelCase")]
    Erdos { n: usize, prob_attacks: f64 },
    #[serde(rename_all = "camelCase")]
    Watts { n: usize, k: usize, beta: f64, prob_cycles: f64 },
    #[serde(rename_all = "camelCase")]
    Barabasi { n: usize, prob_cycles: f64 },
    AdmBuster { n: usize },
    SemBuster { n: usize },
    /// Needs an input graph; see [`traffic_to_af`].
    #[serde(rename_all = "camelCase")]
    Traffic { p_symmetric: f64 },
}

impl GeneratorConfig {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorConfig::Grounded { .. } => "grounded",
            GeneratorConfig::Scc { .. } => "scc",
            GeneratorConfig::Stable { .. } => "stable",
            GeneratorConfig::Erdos { .. } => "erdos",
            GeneratorConfig::Watts { .. } => "watts",
            GeneratorConfig::Barabasi { .. } => "barabasi",
            GeneratorConfig::AdmBuster { .. } => "adm-buster",
            GeneratorConfig::SemBuster { .. } => "sem-buster",
            GeneratorConfig::Traffic { .. } => "traffic",
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        use GeneratorConfig::*;
        match *self {
            Grounded { n, prob_attacks } | Erdos { n, prob_attacks } => {
                positive("n", n)?;
                probability("probAttacks", prob_attacks)
            }
            Scc {
                n,
                n_sccs,
                inner_attack_prob,
                outer_attack_prob,
            } => {
                positive("n", n)?;
                positive("nSCCs", n_sccs)?;
                check(n_sccs <= n, "nSCCs must not exceed n")?;
                probability("innerAttackProb", inner_attack_prob)?;
                probability("outerAttackProb", outer_attack_prob)
            }
            Stable {
                n,
                min_num_extensions,
                max_num_extensions,
                min_size_of_extensions,
                max_size_of_extensions,
                min_size_of_grounded_extension,
                max_size_of_grounded_extension,
            } => {
                positive("n", n)?;
                positive("minNumExtensions", min_num_extensions)?;
                check(min_num_extensions <= max_num_extensions, "minNumExtensions > maxNumExtensions")?;
                check(min_size_of_extensions <= max_size_of_extensions, "minSizeOfExtensions > maxSizeOfExtensions")?;
                check(
                    min_size_of_grounded_extension <= max_size_of_grounded_extension,
                    "minSizeOfGroundedExtension > maxSizeOfGroundedExtension",
                )?;
                check(min_size_of_extensions <= n, "minSizeOfExtensions exceeds n")?;
                check(
                    min_size_of_grounded_extension <= max_size_of_extensions.min(n),
                    "grounded extension cannot fit inside a stable extension",
                )
            }
            Watts { n, k, beta, prob_cycles } => {
                positive("n", n)?;
                check(k % 2 == 0, "k must be even")?;
                check(k < n, "k must be smaller than n")?;
                probability("beta", beta)?;
                probability("probCycles", prob_cycles)
            }
            Barabasi { n, prob_cycles } => {
                positive("n", n)?;
                probability("probCycles", prob_cycles)
            }
            AdmBuster { n } => check(n >= 4, "AdmBuster needs n >= 4"),
            SemBuster { n } => check(n >= 1, "SemBuster needs n >= 1"),
            Traffic { p_symmetric } => probability("pSymmetric", p_symmetric),
        }
    }
}

fn check(ok: bool, msg: &str) -> Result<(), GenError> {
    if ok {
        Ok(())
    } else {
        Err(GenError::InvalidConfig(msg.to_string()))
    }
}

fn positive(name: &str, v: usize) -> Result<(), GenError> {
    check(v > 0, &format!("{name} must be positive"))
}

fn probability(name: &str, p: f64) -> Result<(), GenError> {
    check((0.0..=1.0).contains(&p), &format!("{name} must lie in [0,1], got {p}"))
}

/// Named randomness phases; each gets its own ChaCha stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Structure = 0,
    Connect = 1,
    Rewire = 2,
    Cycles = 3,
    Orientation = 4,
    Batch = 5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeededRng {
    pub seed: u64,
}

impl SeededRng {
    pub const ALGORITHM: &'static str = "ChaCha8";

    pub fn new(seed: u64) -> Self {
        SeededRng { seed }
    }

    pub fn stream(&self, phase: Phase) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(phase as u64);
        rng
    }
}

/// Uniform index in `0..n`, identical on 32- and 64-bit targets.
pub(crate) fn pick<R: Rng>(rng: &mut R, n: usize) -> usize {
    rng.gen_range(0..n as u64) as usize
}

/// Uniform integer in `lo..=hi`.
pub(crate) fn pick_between<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo as u64..=hi as u64) as usize
}

/// Fisher-Yates over `pick`, for the same portability reason.
pub(crate) fn shuffle<R: Rng, T>(rng: &mut R, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = pick(rng, i + 1);
        items.swap(i, j);
    }
}

pub(crate) fn arg_names(prefix: &str, n: usize) -> Vec<ArgumentId> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub(crate) fn numbered(n: usize, attacks: Vec<(usize, usize)>) -> ArgumentationFramework {
    ArgumentationFramework::from_indexed(arg_names("a", n), attacks).expect("generator produced valid indices")
}

/// Runs the generator named by `cfg`. Traffic needs an input graph and is
/// rejected here.
pub fn generate(cfg: &GeneratorConfig, rng: SeededRng) -> Result<ArgumentationFramework, GenError> {
    cfg.validate()?;
    Ok(match *cfg {
        GeneratorConfig::Grounded { .. } => gen_grounded(cfg, rng)?,
        GeneratorConfig::Scc { .. } => gen_scc(cfg, rng)?,
        GeneratorConfig::Stable { .. } => gen_stable(cfg, rng)?,
        GeneratorConfig::Erdos { .. } => gen_erdos(cfg, rng)?,
        GeneratorConfig::Watts { .. } => gen_watts(cfg, rng)?,
        GeneratorConfig::Barabasi { .. } => gen_barabasi(cfg, rng)?,
        GeneratorConfig::AdmBuster { n } => admbuster(n)?,
        GeneratorConfig::SemBuster { n } => sembuster(n)?,
        GeneratorConfig::Traffic { .. } => {
            return Err(GenError::InvalidConfig("traffic needs an input graph".into()))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_json_uses_table_symbols() {
        let cfg = GeneratorConfig::Scc {
            n: 10,
            n_sccs: 2,
            inner_attack_prob: 0.5,
            outer_attack_prob: 0.1,
        };
        let json = serde_json::to_string(&cfg).unwrap();
        assert_eq!(
            json,
            r#"{"generator":"scc","n":10,"nSCCs":2,"innerAttackProb":0.5,"outerAttackProb":0.1}"#
        );
        assert_eq!(serde_json::from_str::<GeneratorConfig>(&json).unwrap(), cfg);
    }

    #[test]
    fn validation() {
        assert!(GeneratorConfig::Watts { n: 6, k: 3, beta: 0.0, prob_cycles: 0.0 }.validate().is_err());
        assert!(GeneratorConfig::Watts { n: 6, k: 6, beta: 0.0, prob_cycles: 0.0 }.validate().is_err());
        assert!(GeneratorConfig::AdmBuster { n: 3 }.validate().is_err());
        assert!(GeneratorConfig::SemBuster { n: 0 }.validate().is_err());
        assert!(GeneratorConfig::Erdos { n: 3, prob_attacks: 1.5 }.validate().is_err());
        assert!(GeneratorConfig::Scc {
            n: 3,
            n_sccs: 4,
            inner_attack_prob: 0.5,
            outer_attack_prob: 0.5
        }
        .validate()
        .is_err());
    }

    #[test]
    fn streams_differ_per_phase() {
        let r = SeededRng::new(7);
        let a: u64 = r.stream(Phase::Structure).gen();
        let b: u64 = r.stream(Phase::Cycles).gen();
        assert_ne!(a, b);
        assert_eq!(a, r.stream(Phase::Structure).gen::<u64>());
    }
}
