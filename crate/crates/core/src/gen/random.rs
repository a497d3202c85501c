//! The three random graph classes: Erdős-Rényi, Watts-Strogatz and
//! Barabási-Albert, plus the shared cycle-adding post-processing.

use std::collections::HashSet;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use rand::Rng;

use crate::framework::ArgumentationFramework;

use super::{numbered, pick, GenError, GeneratorConfig, Phase, SeededRng};

pub fn gen_erdos(cfg: &GeneratorConfig, rng: SeededRng) -> Result<ArgumentationFramework, GenError> {
    cfg.validate()?;
    let &GeneratorConfig::Erdos { n, prob_attacks } = cfg else {
        return Err(GenError::InvalidConfig(format!("expected erdos, got {}", cfg.name())));
    };
    let mut r = rng.stream(Phase::Structure);
    let mut attacks = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if r.gen_bool(prob_attacks) {
                attacks.push(if r.gen_bool(0.5) { (a, b) } else { (b, a) });
            }
        }
    }
    Ok(numbered(n, attacks))
}

pub fn gen_watts(cfg: &GeneratorConfig, rng: SeededRng) -> Result<ArgumentationFramework, GenError> {
    cfg.validate()?;
    let &GeneratorConfig::Watts { n, k, beta, prob_cycles } = cfg else {
        return Err(GenError::InvalidConfig(format!("expected watts, got {}", cfg.name())));
    };
    // Undirected ring lattice, each node joined to k/2 successors.
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut present: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..n {
        for j in 1..=k / 2 {
            let e = undirected(i, (i + j) % n);
            if present.insert(e) {
                edges.push(e);
            }
        }
    }
    // Rewire the far endpoint of each lattice edge with probability beta.
    let mut r = rng.stream(Phase::Rewire);
    for e in edges.iter_mut() {
        if !r.gen_bool(beta) {
            continue;
        }
        let (u, _) = *e;
        let free = (0..n).filter(|&w| w != u && !present.contains(&undirected(u, w))).count();
        if free == 0 {
            continue;
        }
        let w = loop {
            let w = pick(&mut r, n);
            if w != u && !present.contains(&undirected(u, w)) {
                break w;
            }
        };
        present.remove(e);
        *e = undirected(u, w);
        present.insert(*e);
    }
    let mut o = rng.stream(Phase::Orientation);
    let mut attacks: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| if o.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect();
    add_cycles(n, &mut attacks, prob_cycles, rng);
    Ok(numbered(n, attacks))
}

fn undirected(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Growth by preferential attachment, one edge per new node.
pub fn gen_barabasi(cfg: &GeneratorConfig, rng: SeededRng) -> Result<ArgumentationFramework, GenError> {
    cfg.validate()?;
    let &GeneratorConfig::Barabasi { n, prob_cycles } = cfg else {
        return Err(GenError::InvalidConfig(format!("expected barabasi, got {}", cfg.name())));
    };
    let mut r = rng.stream(Phase::Structure);
    let mut o = rng.stream(Phase::Orientation);
    // Each node appears once per incident edge, so a uniform draw from
    // `ends` is a degree-proportional draw.
    let mut ends: Vec<usize> = Vec::with_capacity(2 * n);
    let mut attacks = Vec::with_capacity(n);
    for v in 1..n {
        let u = if ends.is_empty() { 0 } else { ends[pick(&mut r, ends.len())] };
        ends.push(u);
        ends.push(v);
        attacks.push(if o.gen_bool(0.5) { (u, v) } else { (v, u) });
    }
    add_cycles(n, &mut attacks, prob_cycles, rng);
    Ok(numbered(n, attacks))
}

pub fn scc_count(n: usize, attacks: &[(usize, usize)]) -> usize {
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, attacks.len());
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for &(a, b) in attacks {
        g.add_edge(nodes[a], nodes[b], ());
    }
    tarjan_scc(&g).len()
}

fn scc_ids(n: usize, attacks: &[(usize, usize)]) -> (usize, Vec<usize>) {
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, attacks.len());
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for &(a, b) in attacks {
        g.add_edge(nodes[a], nodes[b], ());
    }
    let sccs = tarjan_scc(&g);
    let mut id = vec![0; n];
    for (c, comp) in sccs.iter().enumerate() {
        for v in comp {
            id[v.index()] = c;
        }
    }
    (sccs.len(), id)
}

/// Adds random attacks while the SCC count exceeds `n * (1 - probCycles)`.
/// The bound is floored at one component, which a strongly connected graph
/// always meets. Only attacks joining two different components can merge
/// them, so only those trigger a recount.
fn add_cycles(n: usize, attacks: &mut Vec<(usize, usize)>, prob_cycles: f64, rng: SeededRng) {
    if n < 2 {
        return;
    }
    let bound = (n as f64 * (1.0 - prob_cycles)).max(1.0);
    let mut present: HashSet<(usize, usize)> = attacks.iter().copied().collect();
    let (mut count, mut id) = scc_ids(n, attacks);
    let mut r = rng.stream(Phase::Cycles);
    while count as f64 > bound {
        let a = pick(&mut r, n);
        let b = pick(&mut r, n);
        if a == b || !present.insert((a, b)) {
            continue;
        }
        attacks.push((a, b));
        if id[a] != id[b] {
            (count, id) = scc_ids(n, attacks);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erdos_extremes() {
        let none = gen_erdos(&GeneratorConfig::Erdos { n: 6, prob_attacks: 0.0 }, SeededRng::new(1)).unwrap();
        assert_eq!(none.attack_count(), 0);
        let full = gen_erdos(&GeneratorConfig::Erdos { n: 4, prob_attacks: 1.0 }, SeededRng::new(1)).unwrap();
        assert_eq!(full.attack_count(), 6);
        for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            assert!(full.has_attack(a, b) ^ full.has_attack(b, a));
        }
    }

    #[test]
    fn watts_pure_ring() {
        let cfg = GeneratorConfig::Watts {
            n: 6,
            k: 2,
            beta: 0.0,
            prob_cycles: 0.0,
        };
        let af = gen_watts(&cfg, SeededRng::new(3)).unwrap();
        assert_eq!(af.attack_count(), 6);
        for i in 0..6 {
            let j = (i + 1) % 6;
            assert!(af.has_attack(i, j) ^ af.has_attack(j, i));
        }
    }

    #[test]
    fn watts_full_cycles_is_strongly_connected() {
        let cfg = GeneratorConfig::Watts {
            n: 12,
            k: 4,
            beta: 0.3,
            prob_cycles: 1.0,
        };
        let af = gen_watts(&cfg, SeededRng::new(5)).unwrap();
        assert_eq!(scc_count(af.len(), af.attacks()), 1);
    }

    #[test]
    fn barabasi_single_and_tree() {
        let one = gen_barabasi(&GeneratorConfig::Barabasi { n: 1, prob_cycles: 0.5 }, SeededRng::new(0)).unwrap();
        assert_eq!((one.len(), one.attack_count()), (1, 0));
        let tree = gen_barabasi(&GeneratorConfig::Barabasi { n: 30, prob_cycles: 0.0 }, SeededRng::new(9)).unwrap();
        assert_eq!(tree.attack_count(), 29);
    }

    #[test]
    fn barabasi_cycle_bound() {
        for seed in 0..20 {
            let af = gen_barabasi(&GeneratorConfig::Barabasi { n: 20, prob_cycles: 0.9 }, SeededRng::new(seed)).unwrap();
            assert!(scc_count(af.len(), af.attacks()) <= 2);
        }
    }

    #[test]
    fn same_seed_same_framework() {
        let cfg = GeneratorConfig::Watts {
            n: 40,
            k: 4,
            beta: 0.5,
            prob_cycles: 0.5,
        };
        assert_eq!(gen_watts(&cfg, SeededRng::new(11)).unwrap(), gen_watts(&cfg, SeededRng::new(11)).unwrap());
        assert_ne!(gen_watts(&cfg, SeededRng::new(11)).unwrap(), gen_watts(&cfg, SeededRng::new(12)).unwrap());
    }
}
