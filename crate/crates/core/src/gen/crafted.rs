//! The two crafted families. Argument names follow the block structure.

use crate::framework::ArgumentationFramework;

use super::GenError;

/// Starting argument `s`, terminal argument `t`, and intermediate blocks
/// `b*` and `c*` sharing the remaining `n - 2` arguments. `s` attacks every
/// `b`, each `b` attacks `t`, and `b_i`, `c_i` attack each other. The only
/// complete extension is `{s, t} ∪ C`.
pub fn admbuster(n: usize) -> Result<ArgumentationFramework, GenError> {
    if n < 4 {
        return Err(GenError::InvalidConfig("AdmBuster needs n >= 4".into()));
    }
    let inner = n - 2;
    let bs = inner.div_ceil(2);
    let cs = inner / 2;
    let mut names = Vec::with_capacity(n);
    names.push("s".to_string());
    names.extend((0..bs).map(|i| format!("b{i}")));
    names.extend((0..cs).map(|i| format!("c{i}")));
    names.push("t".to_string());
    let (s, t) = (0, n - 1);
    let b = |i: usize| 1 + i;
    let c = |i: usize| 1 + bs + i;
    let mut attacks = Vec::with_capacity(2 * bs + 2 * cs);
    for i in 0..bs {
        attacks.push((s, b(i)));
        attacks.push((b(i), t));
    }
    for i in 0..cs {
        attacks.push((b(i), c(i)));
        attacks.push((c(i), b(i)));
    }
    Ok(ArgumentationFramework::from_indexed(names, attacks).expect("valid wiring"))
}

/// Blocks `a*`, `b*`, `c*` of `n` arguments each. `a_i` and `b_i` attack
/// each other, the `b` block is a clique of mutual attacks, `a_i` attacks
/// `c_i`, and every `c_i` attacks itself and all `a_j` with `j != i`.
///
/// The preferred extensions are the `n` sets `{b_i}` and `A`; only `A`
/// reaches the full range, so it is the single semi-stable extension.
pub fn sembuster(n: usize) -> Result<ArgumentationFramework, GenError> {
    if n < 1 {
        return Err(GenError::InvalidConfig("SemBuster needs n >= 1".into()));
    }
    let mut names = Vec::with_capacity(3 * n);
    for block in ["a", "b", "c"] {
        names.extend((0..n).map(|i| format!("{block}{i}")));
    }
    let (a, b, c) = (|i: usize| i, |i: usize| n + i, |i: usize| 2 * n + i);
    let mut attacks = Vec::new();
    for i in 0..n {
        attacks.push((a(i), b(i)));
        attacks.push((b(i), a(i)));
        attacks.push((a(i), c(i)));
        attacks.push((c(i), c(i)));
        for j in 0..n {
            if i != j {
                attacks.push((b(i), b(j)));
                attacks.push((c(i), a(j)));
            }
        }
    }
    Ok(ArgumentationFramework::from_indexed(names, attacks).expect("valid wiring"))
}
