//! Batch files: one generator line per config family.
//!
//! ```text
//! # comment
//! erdos n={100,200,...,500} probAttacks={0.1,0.2,...,1.0} instances=10
//! watts n={100,...,500} k={log2(n),2*log2(n)} beta=0.1 probCycles=0.5
//! scc n=random[100,1500] nSCCs=random[1,50] innerAttackProb=0.3 outerAttackProb=0.05
//! ```
//!
//! Sets expand as a cartesian product in the order the keys appear. `...`
//! continues the arithmetic step of the two values before it up to the value
//! after it. `random[a,b]` is an integer drawn per instance. `c*log2(n)` is
//! evaluated against the instance's `n`. For `watts`, `k` is rounded to the
//! nearest even number of at least 2 and kept below `n`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{pick_between, GenError, GeneratorConfig};

pub const PRESETS: &[(&str, &str)] = &[
    ("adm-buster", include_str!("../../presets/adm-buster.txt")),
    ("barabasi", include_str!("../../presets/barabasi.txt")),
    ("erdos", include_str!("../../presets/erdos.txt")),
    ("grounded", include_str!("../../presets/grounded.txt")),
    ("scc", include_str!("../../presets/scc.txt")),
    ("sem-buster", include_str!("../../presets/sem-buster.txt")),
    ("stable", include_str!("../../presets/stable.txt")),
    ("watts", include_str!("../../presets/watts.txt")),
];

pub fn preset(name: &str) -> Option<&'static str> {
    PRESETS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

#[derive(Debug, Clone, PartialEq)]
enum Atom {
    Number(f64),
    /// `c * log2(n)`
    Log2N(f64),
    Random(u64, u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatchLine {
    pub line: usize,
    pub generator: String,
    params: Vec<(String, Vec<Atom>)>,
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchEntry {
    pub name: String,
    pub seed: u64,
    pub config: GeneratorConfig,
}

const GENERATORS: &[(&str, &[&str])] = &[
    ("grounded", &["n", "probAttacks"]),
    ("scc", &["n", "nSCCs", "innerAttackProb", "outerAttackProb"]),
    (
        "stable",
        &[
            "n",
            "minNumExtensions",
            "maxNumExtensions",
            "minSizeOfExtensions",
            "maxSizeOfExtensions",
            "minSizeOfGroundedExtension",
            "maxSizeOfGroundedExtension",
        ],
    ),
    ("erdos", &["n", "probAttacks"]),
    ("watts", &["n", "k", "beta", "probCycles"]),
    ("barabasi", &["n", "probCycles"]),
    ("adm-buster", &["n"]),
    ("sem-buster", &["n"]),
    ("traffic", &["pSymmetric"]),
];

pub fn parse_batch(source: &str, text: &str) -> Result<Vec<BatchLine>, GenError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_line(line, i + 1).map_err(|message| GenError::Batch {
            file: source.to_string(),
            line: i + 1,
            message,
        })?);
    }
    Ok(out)
}

fn parse_line(line: &str, line_no: usize) -> Result<BatchLine, String> {
    let mut tokens = line.split_whitespace();
    let generator = tokens.next().unwrap().to_string();
    let keys = GENERATORS
        .iter()
        .find(|(g, _)| *g == generator)
        .map(|(_, k)| *k)
        .ok_or_else(|| format!("unknown generator `{generator}`"))?;
    let mut params: Vec<(String, Vec<Atom>)> = Vec::new();
    let mut instances = 1;
    for tok in tokens {
        let (key, value) = tok.split_once('=').ok_or_else(|| format!("expected key=value, got `{tok}`"))?;
        if key == "instances" {
            instances = value.parse().map_err(|_| format!("bad instance count `{value}`"))?;
            continue;
        }
        if !keys.contains(&key) {
            return Err(format!("`{generator}` has no parameter `{key}`"));
        }
        if params.iter().any(|(k, _)| k == key) {
            return Err(format!("parameter `{key}` given twice"));
        }
        params.push((key.to_string(), parse_value(value)?));
    }
    for key in keys {
        if !params.iter().any(|(k, _)| k == key) {
            return Err(format!("missing parameter `{key}`"));
        }
    }
    Ok(BatchLine {
        line: line_no,
        generator,
        params,
        instances,
    })
}

fn parse_value(value: &str) -> Result<Vec<Atom>, String> {
    let Some(inner) = value.strip_prefix('{') else {
        return Ok(vec![parse_atom(value)?]);
    };
    let inner = inner.strip_suffix('}').ok_or_else(|| format!("unclosed set `{value}`"))?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    let mut atoms: Vec<Atom> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        if parts[i] != "..." {
            atoms.push(parse_atom(parts[i])?);
            i += 1;
            continue;
        }
        let (Some(Atom::Number(a)), Some(Atom::Number(b))) = (
            atoms.len().checked_sub(2).map(|j| atoms[j].clone()),
            atoms.last().cloned(),
        ) else {
            return Err(format!("`...` needs two numbers before it in `{value}`"));
        };
        let Some(Ok(Atom::Number(end))) = parts.get(i + 1).map(|p| parse_atom(p)) else {
            return Err(format!("`...` needs a number after it in `{value}`"));
        };
        let step = b - a;
        if step <= 0.0 || end < b {
            return Err(format!("`...` needs an increasing progression in `{value}`"));
        }
        let steps = ((end - b) / step + 1e-9).floor() as i64;
        for s in 1..=steps {
            atoms.push(Atom::Number(tidy(b + s as f64 * step)));
        }
        if (tidy(b + steps as f64 * step) - end).abs() > 1e-9 {
            atoms.push(Atom::Number(end));
        }
        i += 2;
    }
    if atoms.is_empty() {
        return Err(format!("empty set `{value}`"));
    }
    Ok(atoms)
}

/// Strips binary noise from progressions such as 0.1, 0.2, ..., 1.0.
fn tidy(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

fn parse_atom(s: &str) -> Result<Atom, String> {
    if let Some(range) = s.strip_prefix("random[").and_then(|r| r.strip_suffix(']')) {
        let (lo, hi) = range.split_once(',').ok_or_else(|| format!("bad range `{s}`"))?;
        let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range `{s}`"))?;
        let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range `{s}`"))?;
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        return Ok(Atom::Random(lo, hi));
    }
    if let Some(head) = s.strip_suffix("log2(n)") {
        let mult = match head.strip_suffix('*') {
            Some(c) => c.parse().map_err(|_| format!("bad multiplier in `{s}`"))?,
            None if head.is_empty() => 1.0,
            None => return Err(format!("bad expression `{s}`")),
        };
        return Ok(Atom::Log2N(mult));
    }
    s.parse::<f64>()
        .map(Atom::Number)
        .map_err(|_| format!("bad value `{s}`"))
}

/// Expands parsed lines into concrete configs with per-instance seeds. The
/// same `seed` always yields the same entries.
pub fn expand_batch(lines: &[BatchLine], seed: u64) -> Result<Vec<BatchEntry>, GenError> {
    let mut out = Vec::new();
    for bl in lines {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(bl.line as u64);
        let err = |message: String| GenError::Batch {
            file: String::new(),
            line: bl.line,
            message,
        };
        let total: usize = bl.params.iter().map(|(_, atoms)| atoms.len()).product();
        for index in 0..total {
            // decode the combination, last key varying fastest
            let mut combo = vec![0usize; bl.params.len()];
            let mut rest = index;
            for (p, (_, atoms)) in bl.params.iter().enumerate().rev() {
                combo[p] = rest % atoms.len();
                rest /= atoms.len();
            }
            for _ in 0..bl.instances {
                let mut values: HashMap<&str, f64> = HashMap::new();
                let mut deferred = Vec::new();
                for (p, (key, atoms)) in bl.params.iter().enumerate() {
                    match atoms[combo[p]] {
                        Atom::Number(x) => {
                            values.insert(key, x);
                        }
                        Atom::Random(lo, hi) => {
                            values.insert(key, pick_between(&mut rng, lo as usize, hi as usize) as f64);
                        }
                        Atom::Log2N(c) => deferred.push((key.as_str(), c)),
                    }
                }
                for (key, c) in deferred {
                    let n = *values.get("n").ok_or_else(|| err("log2(n) needs a concrete n".into()))?;
                    values.insert(key, c * n.log2());
                }
                let config = build_config(&bl.generator, &values).map_err(err)?;
                config.validate().map_err(|e| err(e.to_string()))?;
                out.push(BatchEntry {
                    name: format!("{}_{:05}", bl.generator, out.len()),
                    seed: rng.gen(),
                    config,
                });
            }
        }
    }
    Ok(out)
}

fn build_config(generator: &str, v: &HashMap<&str, f64>) -> Result<GeneratorConfig, String> {
    let int = |key: &str| -> Result<usize, String> {
        let x = v[key];
        if x < 0.0 || x.fract() != 0.0 {
            return Err(format!("`{key}` must be a non-negative integer, got {x}"));
        }
        Ok(x as usize)
    };
    let real = |key: &str| v[key];
    Ok(match generator {
        "grounded" => GeneratorConfig::Grounded {
            n: int("n")?,
            prob_attacks: real("probAttacks"),
        },
        "erdos" => GeneratorConfig::Erdos {
            n: int("n")?,
            prob_attacks: real("probAttacks"),
        },
        "scc" => GeneratorConfig::Scc {
            n: int("n")?,
            n_sccs: int("nSCCs")?,
            inner_attack_prob: real("innerAttackProb"),
            outer_attack_prob: real("outerAttackProb"),
        },
        "stable" => GeneratorConfig::Stable {
            n: int("n")?,
            min_num_extensions: int("minNumExtensions")?,
            max_num_extensions: int("maxNumExtensions")?,
            min_size_of_extensions: int("minSizeOfExtensions")?,
            max_size_of_extensions: int("maxSizeOfExtensions")?,
            min_size_of_grounded_extension: int("minSizeOfGroundedExtension")?,
            max_size_of_grounded_extension: int("maxSizeOfGroundedExtension")?,
        },
        "watts" => {
            let n = int("n")?;
            GeneratorConfig::Watts {
                n,
                k: even_k(real("k"), n),
                beta: real("beta"),
                prob_cycles: real("probCycles"),
            }
        }
        "barabasi" => GeneratorConfig::Barabasi {
            n: int("n")?,
            prob_cycles: real("probCycles"),
        },
        "adm-buster" => GeneratorConfig::AdmBuster { n: int("n")? },
        "sem-buster" => GeneratorConfig::SemBuster { n: int("n")? },
        "traffic" => GeneratorConfig::Traffic {
            p_symmetric: real("pSymmetric"),
        },
        other => return Err(format!("unknown generator `{other}`")),
    })
}

fn even_k(k: f64, n: usize) -> usize {
    let mut even = ((k / 2.0).round() as usize * 2).max(2);
    while even >= n && even >= 2 {
        even -= 2;
    }
    even
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(text: &str, seed: u64) -> Vec<BatchEntry> {
        expand_batch(&parse_batch("t", text).unwrap(), seed).unwrap()
    }

    #[test]
    fn ellipsis_follows_the_last_step() {
        assert_eq!(
            parse_value("{1000,2000,4000,...,10000,20000}").unwrap(),
            [1000., 2000., 4000., 6000., 8000., 10000., 20000.].map(Atom::Number).to_vec()
        );
        let tenths = parse_value("{0.1,0.2,...,1.0}").unwrap();
        assert_eq!(tenths.len(), 10);
        assert_eq!(tenths[9], Atom::Number(1.0));
        assert_eq!(tenths[2], Atom::Number(0.3));
    }

    #[test]
    fn cartesian_product_and_instances() {
        let entries = expand("erdos n={10,20} probAttacks={0.1,0.2,0.3} instances=2", 1);
        assert_eq!(entries.len(), 12);
        assert_eq!(
            entries[0].config,
            GeneratorConfig::Erdos {
                n: 10,
                prob_attacks: 0.1
            }
        );
        assert_eq!(
            entries[2].config,
            GeneratorConfig::Erdos {
                n: 10,
                prob_attacks: 0.2
            }
        );
        assert_eq!(entries, expand("erdos n={10,20} probAttacks={0.1,0.2,0.3} instances=2", 1));
    }

    #[test]
    fn random_ranges_and_log2() {
        for e in expand("scc n=random[100,150] nSCCs=random[1,5] innerAttackProb=0.3 outerAttackProb=0.1 instances=20", 3) {
            let GeneratorConfig::Scc { n, n_sccs, .. } = e.config else { panic!() };
            assert!((100..=150).contains(&n) && (1..=5).contains(&n_sccs));
        }
        let w = expand("watts n=256 k={log2(n),3*log2(n)} beta=0.1 probCycles=0.1", 0);
        let ks: Vec<usize> = w
            .iter()
            .map(|e| match e.config {
                GeneratorConfig::Watts { k, .. } => k,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(ks, vec![8, 24]);
    }

    #[test]
    fn errors_carry_lines() {
        let err = parse_batch("f.txt", "erdos n=3 probAttacks=0.1\nerdos n=3").unwrap_err();
        assert_eq!(
            err,
            GenError::Batch {
                file: "f.txt".into(),
                line: 2,
                message: "missing parameter `probAttacks`".into()
            }
        );
        assert!(parse_batch("f", "nope n=1").is_err());
        assert!(parse_batch("f", "erdos n={1,2 probAttacks=0.1").is_err());
    }

    #[test]
    fn preset_sizes() {
        let expected = [
            ("adm-buster", 13),
            ("barabasi", 500),
            ("erdos", 500),
            ("grounded", 50),
            ("scc", 600),
            ("sem-buster", 16),
            ("stable", 500),
            ("watts", 400),
        ];
        for (name, count) in expected {
            let lines = parse_batch(name, preset(name).unwrap()).unwrap();
            assert_eq!(expand_batch(&lines, 0).unwrap().len(), count, "{name}");
        }
    }

    #[test]
    fn k_rounding() {
        assert_eq!(even_k(6.64, 100), 6);
        assert_eq!(even_k(7.0, 100), 8);
        assert_eq!(even_k(1.0, 100), 2);
        assert_eq!(even_k(9.0, 8), 6);
    }
}
