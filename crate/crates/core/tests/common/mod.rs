//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use afkit::gen::{gen_erdos, gen_watts, GeneratorConfig, SeededRng};
use afkit::ArgumentationFramework;

/// Seeded random frameworks with 1 to 10 arguments, alternating between
/// the Erdos-Renyi and Watts-Strogatz generators (Erdos-Renyi below four
/// arguments, where a ring lattice has no room).
pub fn small_corpus(count: usize) -> Vec<(String, ArgumentationFramework)> {
    (0..count as u64)
        .map(|seed| {
            let n = 1 + (seed as usize % 10);
            let p = [0.1, 0.2, 0.3, 0.45, 0.6][(seed / 10) as usize % 5];
            let rng = SeededRng::new(seed);
            if seed % 2 == 0 || n < 4 {
                let cfg = GeneratorConfig::Erdos { n, prob_attacks: p };
                (format!("erdos-{seed}"), gen_erdos(&cfg, rng).unwrap())
            } else {
                let cfg = GeneratorConfig::Watts {
                    n,
                    k: if n > 5 { 4 } else { 2 },
                    beta: p,
                    prob_cycles: 0.5,
                };
                (format!("watts-{seed}"), gen_watts(&cfg, rng).unwrap())
            }
        })
        .collect()
}

/// Every subset of the framework's arguments, as name lists.
pub fn all_subsets(af: &ArgumentationFramework) -> Vec<afkit::Extension> {
    let n = af.len();
    (0..1u64 << n)
        .map(|bits| af.extension_from_indices((0..n).filter(|i| bits >> i & 1 == 1)))
        .collect()
}

pub fn ext(names: &[&str]) -> afkit::Extension {
    names.iter().copied().collect()
}

pub fn exts(sets: &[&[&str]]) -> Vec<afkit::Extension> {
    let mut v: Vec<_> = sets.iter().map(|s| ext(s)).collect();
    v.sort();
    v
}
