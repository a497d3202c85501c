//! GroundedGenerator, SccGenerator and StableGenerator.

use std::collections::HashSet;

use rand::Rng;

use crate::framework::ArgumentationFramework;

use super::{numbered, pick, pick_between, shuffle, GenError, GeneratorConfig, Phase, SeededRng};

/// Forward attacks over a linear order, then one random attack for each
/// argument left without any.
pub fn gen_grounded(cfg: &GeneratorConfig, rng: SeededRng) -> Result<ArgumentationFramework, GenError> {
    cfg.validate()?;
    let &GeneratorConfig::Grounded { n, prob_attacks } = cfg else {
        return Err(GenError::InvalidConfig(format!("expected grounded, got {}", cfg.name())));
    };
    let mut r = rng.stream(Phase::Structure);
    let mut attacks = Vec::new();
    let mut touched = vec![false; n];
    for a in 0..n {
        for b in a + 1..n {
            if r.gen_bool(prob_attacks) {
                attacks.push((a, b));
                touched[a] = true;
                touched[b] = true;
            }
        }
    }
    let mut c = rng.stream(Phase::Connect);
    for x in 0..n {
        if touched[x] {
            continue;
        }
        let component: Vec<usize> = (0..n).filter(|&y| touched[y]).collect();
        let pool: Vec<usize> = if component.is_empty() {
            (0..n).filter(|&y| y != x).collect()
        } else {
            component
        };
        if pool.is_empty() {
            continue;
        }
        let y = pool[pick(&mut c, pool.len())];
        attacks.push(if c.gen_bool(0.5) { (x, y) } else { (y, x) });
        touched[x] = true;
        touched[y] = true;
    }
    Ok(numbered(n, attacks))
}

/// Component of argument `i` when `n` arguments are split into `k`
/// contiguous blocks whose sizes differ by at most one.
pub(crate) fn block_of(i: usize, n: usize, k: usize) -> usize {
    let small = n / k;
    let big = n % k; // the first `big` blocks have one extra member
    let cut = big * (small + 1);
    if i < cut {
        i / (small + 1)
    } else {
        big + (i - cut) / small
    }
}

pub fn gen_scc(cfg: &GeneratorConfig, rng: SeededRng) -> Result<ArgumentationFramework, GenError> {
    cfg.validate()?;
    let &GeneratorConfig::Scc {
        n,
        n_sccs,
        inner_attack_prob,
        outer_attack_prob,
    } = cfg
    else {
        return Err(GenError::InvalidConfig(format!("expected scc, got {}", cfg.name())));
    };
    let block: Vec<usize> = (0..n).map(|i| block_of(i, n, n_sccs)).collect();
    let mut r = rng.stream(Phase::Structure);
    let mut attacks = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let p = match block[a].cmp(&block[b]) {
                std::cmp::Ordering::Equal => inner_attack_prob,
                std::cmp::Ordering::Less => outer_attack_prob,
                std::cmp::Ordering::Greater => continue,
            };
            if r.gen_bool(p) {
                attacks.push((a, b));
            }
        }
    }
    Ok(numbered(n, attacks))
}

const STABLE_RETRIES: usize = 200;

/// Unattacked grounded core `G`, a layer `D` defeated by `G`, and a number
/// of designated subsets `S` of the rest. Each `S` gets attacks onto every
/// remaining argument outside it, so `G ∪ S` is stable. An attack is never
/// placed inside an already designated set, which keeps earlier sets
/// conflict-free; candidates that cannot be completed are rejected and
/// redrawn.
pub fn gen_stable(cfg: &GeneratorConfig, rng: SeededRng) -> Result<ArgumentationFramework, GenError> {
    cfg.validate()?;
    let &GeneratorConfig::Stable {
        n,
        min_num_extensions,
        max_num_extensions,
        min_size_of_extensions,
        max_size_of_extensions,
        min_size_of_grounded_extension,
        max_size_of_grounded_extension,
    } = cfg
    else {
        return Err(GenError::InvalidConfig(format!("expected stable, got {}", cfg.name())));
    };
    let mut r = rng.stream(Phase::Structure);
    let max_ext = max_size_of_extensions.min(n);
    let g_size = pick_between(
        &mut r,
        min_size_of_grounded_extension,
        max_size_of_grounded_extension.min(max_ext),
    );
    let mut order: Vec<usize> = (0..n).collect();
    shuffle(&mut r, &mut order);
    let grounded = order[..g_size].to_vec();
    let rest = &order[g_size..];

    let mut attacks: HashSet<(usize, usize)> = HashSet::new();
    let mut defeated = Vec::new();
    if !grounded.is_empty() {
        let d_size = pick_between(&mut r, 0, rest.len() / 4);
        for &d in &rest[..d_size] {
            attacks.insert((grounded[pick(&mut r, grounded.len())], d));
            defeated.push(d);
        }
    }
    let free: Vec<usize> = rest[defeated.len()..].to_vec();
    // Defeated arguments attack forward into the free part; harmless for
    // stability and it keeps the seed acyclic.
    for &d in &defeated {
        if !free.is_empty() {
            attacks.insert((d, free[pick(&mut r, free.len())]));
        }
    }

    let wanted = pick_between(&mut r, min_num_extensions, max_num_extensions);
    let lo = min_size_of_extensions.saturating_sub(g_size).min(free.len());
    let hi = max_ext.saturating_sub(g_size).min(free.len()).max(lo);
    let mut chosen: Vec<Vec<bool>> = Vec::new();
    let mut tries = 0;
    while chosen.len() < wanted && tries < STABLE_RETRIES * wanted {
        tries += 1;
        let size = pick_between(&mut r, lo, hi);
        let mut pool = free.clone();
        shuffle(&mut r, &mut pool);
        let mut member = vec![false; n];
        for &a in &pool[..size] {
            member[a] = true;
        }
        if let Some(planned) = complete_candidate(&member, &free, &attacks, &chosen, &mut r) {
            attacks.extend(planned);
            if !chosen.contains(&member) {
                chosen.push(member);
            }
        }
    }
    let mut attacks: Vec<(usize, usize)> = attacks.into_iter().collect();
    attacks.sort_unstable();
    Ok(numbered(n, attacks))
}

/// Attacks that make `member` attack every free argument outside it, or
/// `None` when that would break conflict-freeness somewhere.
fn complete_candidate<R: Rng>(
    member: &[bool],
    free: &[usize],
    attacks: &HashSet<(usize, usize)>,
    chosen: &[Vec<bool>],
    r: &mut R,
) -> Option<Vec<(usize, usize)>> {
    if attacks.iter().any(|&(a, b)| member[a] && member[b]) {
        return None;
    }
    let inside: Vec<usize> = free.iter().copied().filter(|&a| member[a]).collect();
    let mut planned = Vec::new();
    for &v in free.iter().filter(|&&v| !member[v]) {
        if inside.iter().any(|&u| attacks.contains(&(u, v))) {
            continue;
        }
        let ok: Vec<usize> = inside
            .iter()
            .copied()
            .filter(|&u| !chosen.iter().any(|s| s[u] && s[v]))
            .collect();
        if ok.is_empty() {
            return None;
        }
        planned.push((ok[pick(r, ok.len())], v));
    }
    Some(planned)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Oracle;
    use crate::framework::grounded;
    use crate::semantics::SemanticsKind;

    #[test]
    fn grounded_full_density_is_a_dag() {
        let af = gen_grounded(&GeneratorConfig::Grounded { n: 5, prob_attacks: 1.0 }, SeededRng::new(4)).unwrap();
        assert_eq!(af.attack_count(), 10);
        assert!(!grounded(&af).is_empty());
        let one = gen_grounded(&GeneratorConfig::Grounded { n: 1, prob_attacks: 0.5 }, SeededRng::new(4)).unwrap();
        assert_eq!((one.len(), one.attack_count()), (1, 0));
    }

    #[test]
    fn grounded_leaves_no_isolated_argument() {
        let af = gen_grounded(&GeneratorConfig::Grounded { n: 30, prob_attacks: 0.01 }, SeededRng::new(8)).unwrap();
        for i in 0..af.len() {
            assert!(!af.attackers(i).is_empty() || !af.targets(i).is_empty(), "{i} isolated");
        }
    }

    #[test]
    fn blocks_are_balanced_and_contiguous() {
        for (n, k) in [(10, 3), (7, 7), (100, 6), (5, 1)] {
            let ids: Vec<usize> = (0..n).map(|i| block_of(i, n, k)).collect();
            assert!(ids.windows(2).all(|w| w[0] <= w[1] && w[1] - w[0] <= 1));
            let sizes: Vec<usize> = (0..k).map(|b| ids.iter().filter(|&&x| x == b).count()).collect();
            assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1, "{sizes:?}");
        }
    }

    #[test]
    fn scc_isolated_when_every_argument_is_its_own_block() {
        let cfg = GeneratorConfig::Scc {
            n: 4,
            n_sccs: 4,
            inner_attack_prob: 1.0,
            outer_attack_prob: 0.0,
        };
        assert_eq!(gen_scc(&cfg, SeededRng::new(2)).unwrap().attack_count(), 0);
    }

    #[test]
    fn stable_small_has_a_stable_extension() {
        let cfg = GeneratorConfig::Stable {
            n: 15,
            min_num_extensions: 2,
            max_num_extensions: 3,
            min_size_of_extensions: 3,
            max_size_of_extensions: 5,
            min_size_of_grounded_extension: 1,
            max_size_of_grounded_extension: 2,
        };
        for seed in 0..10 {
            let af = gen_stable(&cfg, SeededRng::new(seed)).unwrap();
            let st = Oracle::default().enumerate(SemanticsKind::Stable, &af).unwrap();
            assert!(!st.is_empty(), "seed {seed}");
        }
    }

    #[test]
    fn stable_degenerate_is_attack_free() {
        let cfg = GeneratorConfig::Stable {
            n: 6,
            min_num_extensions: 1,
            max_num_extensions: 1,
            min_size_of_extensions: 6,
            max_size_of_extensions: 6,
            min_size_of_grounded_extension: 0,
            max_size_of_grounded_extension: 0,
        };
        let af = gen_stable(&cfg, SeededRng::new(1)).unwrap();
        assert_eq!(af.attack_count(), 0);
    }
}
