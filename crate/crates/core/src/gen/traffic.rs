use rand::Rng;

use crate::framework::ArgumentationFramework;

use super::{GenError, Phase, SeededRng};

/// Turns an undirected graph into a framework on the same vertices: each
/// edge becomes a mutual attack with probability `p_sym`, otherwise a
/// single attack in a uniformly chosen direction.
pub fn traffic_to_af(
    nodes: &[String],
    edges: &[(String, String)],
    p_sym: f64,
    rng: SeededRng,
) -> Result<ArgumentationFramework, GenError> {
    if !(0.0..=1.0).contains(&p_sym) {
        return Err(GenError::InvalidConfig(format!("pSymmetric must lie in [0,1], got {p_sym}")));
    }
    let index: std::collections::HashMap<&str, usize> =
        nodes.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    if index.len() != nodes.len() {
        return Err(GenError::MalformedGraph("duplicate vertex".into()));
    }
    let mut r = rng.stream(Phase::Orientation);
    let mut attacks = Vec::with_capacity(edges.len() * 2);
    for (u, v) in edges {
        let lookup = |x: &String| {
            index
                .get(x.as_str())
                .copied()
                .ok_or_else(|| GenError::MalformedGraph(format!("edge endpoint `{x}` is not a vertex")))
        };
        let (a, b) = (lookup(u)?, lookup(v)?);
        if r.gen_bool(p_sym) {
            attacks.push((a, b));
            attacks.push((b, a));
        } else if r.gen_bool(0.5) {
            attacks.push((a, b));
        } else {
            attacks.push((b, a));
        }
    }
    ArgumentationFramework::from_indexed(nodes.to_vec(), attacks).map_err(|e| GenError::MalformedGraph(e.to_string()))
}
