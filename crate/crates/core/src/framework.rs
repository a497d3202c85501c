//! Argumentation frameworks and the set-level predicates every semantics is
//! built from.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Opaque, case-sensitive argument name.
pub type ArgumentId = String;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AfError {
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
}

/// A set of arguments, ordered lexicographically by name.
///
/// The derived ordering compares the sorted member lists lexicographically,
/// which is the canonical order used when printing enumerations.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Extension(BTreeSet<ArgumentId>);

impl Extension {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn members(&self) -> &BTreeSet<ArgumentId> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, arg: &str) -> bool {
        self.0.contains(arg)
    }

    pub fn insert(&mut self, arg: impl Into<ArgumentId>) -> bool {
        self.0.insert(arg.into())
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn is_subset(&self, other: &Extension) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl<S: Into<ArgumentId>> FromIterator<S> for Extension {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Extension(iter.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, arg) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(arg)?;
        }
        f.write_str("]")
    }
}

/// The range of a set: the set itself plus everything it attacks.
pub type Range = Extension;

/// Dung-style argumentation framework `(A, R)`.
///
/// Arguments keep their declaration order; internally every argument is
/// addressed by its position in that order.
#[derive(Debug, Clone, Default)]
pub struct ArgumentationFramework {
    names: Vec<ArgumentId>,
    index: HashMap<ArgumentId, usize>,
    attacks: Vec<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
}

impl PartialEq for ArgumentationFramework {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.attacks == other.attacks
    }
}

impl Eq for ArgumentationFramework {}

impl ArgumentationFramework {
    /// Builds a framework from argument names and attacks given by name.
    ///
    /// Duplicate attacks are collapsed; duplicate arguments and attacks on
    /// undeclared arguments are rejected.
    pub fn new<A, I, P>(args: A, attacks: P) -> Result<Self, AfError>
    where
        A: IntoIterator<Item = I>,
        I: Into<ArgumentId>,
        P: IntoIterator<Item = (I, I)>,
    {
        let mut builder = FrameworkBuilder::default();
        for arg in args {
            builder.add_argument(arg)?;
        }
        for (from, to) in attacks {
            let (from, to) = (from.into(), to.into());
            let a = builder.lookup(&from)?;
            let b = builder.lookup(&to)?;
            builder.add_attack_by_index(a, b);
        }
        Ok(builder.build())
    }

    /// Builds a framework over `n` generated names from index pairs.
    pub fn from_indexed(names: Vec<ArgumentId>, attacks: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, AfError> {
        let mut builder = FrameworkBuilder::default();
        for name in names {
            builder.add_argument(name)?;
        }
        for (a, b) in attacks {
            assert!(a < builder.names.len() && b < builder.names.len(), "attack index out of bounds");
            builder.add_attack_by_index(a, b);
        }
        Ok(builder.build())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[ArgumentId] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Attacks as index pairs, in first-declaration order without duplicates.
    pub fn attacks(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn attackers(&self, idx: usize) -> &[usize] {
        &self.attackers[idx]
    }

    pub fn targets(&self, idx: usize) -> &[usize] {
        &self.targets[idx]
    }

    pub fn attacks_by_name(&self) -> impl Iterator<Item = (&str, &str)> {
        self.attacks
            .iter()
            .map(move |&(a, b)| (self.names[a].as_str(), self.names[b].as_str()))
    }

    pub fn has_attack(&self, from: usize, to: usize) -> bool {
        self.targets[from].contains(&to)
    }

    pub fn is_self_attacking(&self, idx: usize) -> bool {
        self.has_attack(idx, idx)
    }

    /// Resolves an extension to a membership mask over argument indices.
    pub fn mask(&self, ext: &Extension) -> Result<Vec<bool>, AfError> {
        let mut mask = vec![false; self.len()];
        for name in ext.iter() {
            let idx = self
                .index_of(name)
                .ok_or_else(|| AfError::UnknownArgument(name.to_string()))?;
            mask[idx] = true;
        }
        Ok(mask)
    }

    /// Inverse of [`mask`](Self::mask).
    pub fn extension_from_mask(&self, mask: &[bool]) -> Extension {
        mask.iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.names[i].clone())
            .collect()
    }

    pub fn extension_from_indices(&self, indices: impl IntoIterator<Item = usize>) -> Extension {
        indices.into_iter().map(|i| self.names[i].clone()).collect()
    }

    pub fn all_arguments(&self) -> Extension {
        self.names.iter().cloned().collect()
    }
}

#[derive(Default)]
struct FrameworkBuilder {
    names: Vec<ArgumentId>,
    index: HashMap<ArgumentId, usize>,
    attacks: Vec<(usize, usize)>,
    seen: std::collections::HashSet<(usize, usize)>,
}

impl FrameworkBuilder {
    fn add_argument(&mut self, name: impl Into<ArgumentId>) -> Result<usize, AfError> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(AfError::DuplicateArgument(name));
        }
        let idx = self.names.len();
        self.index.insert(name.clone(), idx);
        self.names.push(name);
        Ok(idx)
    }

    fn lookup(&self, name: &str) -> Result<usize, AfError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| AfError::UnknownArgument(name.to_string()))
    }

    fn add_attack_by_index(&mut self, a: usize, b: usize) {
        if self.seen.insert((a, b)) {
            self.attacks.push((a, b));
        }
    }

    fn build(self) -> ArgumentationFramework {
        let n = self.names.len();
        let mut attackers = vec![Vec::new(); n];
        let mut targets = vec![Vec::new(); n];
        for &(a, b) in &self.attacks {
            targets[a].push(b);
            attackers[b].push(a);
        }
        ArgumentationFramework {
            names: self.names,
            index: self.index,
            attacks: self.attacks,
            attackers,
            targets,
        }
    }
}

/// True iff no member of `set` attacks a member of `set`.
pub fn is_conflict_free(af: &ArgumentationFramework, set: &Extension) -> Result<bool, AfError> {
    let mask = af.mask(set)?;
    Ok(conflict_free_mask(af, &mask))
}

/// True iff every attacker of `arg` is attacked by some member of `set`.
pub fn defends(af: &ArgumentationFramework, set: &Extension, arg: &str) -> Result<bool, AfError> {
    let mask = af.mask(set)?;
    let idx = af
        .index_of(arg)
        .ok_or_else(|| AfError::UnknownArgument(arg.to_string()))?;
    let attacked = attacked_mask(af, &mask);
    Ok(af.attackers(idx).iter().all(|&b| attacked[b]))
}

/// `set` together with every argument it attacks.
pub fn range_of(af: &ArgumentationFramework, set: &Extension) -> Result<Range, AfError> {
    let mask = af.mask(set)?;
    let mut range = attacked_mask(af, &mask);
    for (r, m) in range.iter_mut().zip(&mask) {
        *r |= *m;
    }
    Ok(af.extension_from_mask(&range))
}

pub fn is_admissible(af: &ArgumentationFramework, set: &Extension) -> Result<bool, AfError> {
    let mask = af.mask(set)?;
    Ok(admissible_mask(af, &mask))
}

pub fn is_complete(af: &ArgumentationFramework, set: &Extension) -> Result<bool, AfError> {
    let mask = af.mask(set)?;
    Ok(complete_mask(af, &mask))
}

/// The grounded extension: least fixed point of the defense operator.
pub fn grounded(af: &ArgumentationFramework) -> Extension {
    af.extension_from_mask(&grounded_mask(af))
}

pub(crate) fn conflict_free_mask(af: &ArgumentationFramework, mask: &[bool]) -> bool {
    af.attacks().iter().all(|&(a, b)| !(mask[a] && mask[b]))
}

pub(crate) fn attacked_mask(af: &ArgumentationFramework, mask: &[bool]) -> Vec<bool> {
    let mut attacked = vec![false; af.len()];
    for &(a, b) in af.attacks() {
        if mask[a] {
            attacked[b] = true;
        }
    }
    attacked
}

pub(crate) fn defended_mask(af: &ArgumentationFramework, mask: &[bool]) -> Vec<bool> {
    let attacked = attacked_mask(af, mask);
    (0..af.len())
        .map(|i| af.attackers(i).iter().all(|&b| attacked[b]))
        .collect()
}

pub(crate) fn admissible_mask(af: &ArgumentationFramework, mask: &[bool]) -> bool {
    if !conflict_free_mask(af, mask) {
        return false;
    }
    let defended = defended_mask(af, mask);
    mask.iter().zip(&defended).all(|(&m, &d)| !m || d)
}

pub(crate) fn complete_mask(af: &ArgumentationFramework, mask: &[bool]) -> bool {
    conflict_free_mask(af, mask) && defended_mask(af, mask) == mask
}

pub(crate) fn full_range(af: &ArgumentationFramework, mask: &[bool]) -> bool {
    let attacked = attacked_mask(af, mask);
    mask.iter().zip(&attacked).all(|(&m, &a)| m || a)
}

/// Worklist form of the defense-operator iteration: an argument joins once
/// all of its attackers are attacked by the current set.
pub(crate) fn grounded_mask(af: &ArgumentationFramework) -> Vec<bool> {
    let n = af.len();
    let mut undefeated_attackers: Vec<usize> = (0..n).map(|i| af.attackers(i).len()).collect();
    let mut inside = vec![false; n];
    let mut defeated = vec![false; n];
    let mut queue: Vec<usize> = (0..n).filter(|&i| undefeated_attackers[i] == 0).collect();
    while let Some(a) = queue.pop() {
        if inside[a] {
            continue;
        }
        inside[a] = true;
        for &b in af.targets(a) {
            if defeated[b] {
                continue;
            }
            defeated[b] = true;
            for &c in af.targets(b) {
                undefeated_attackers[c] -= 1;
                if undefeated_attackers[c] == 0 && !inside[c] {
                    queue.push(c);
                }
            }
        }
    }
    inside
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example1() -> ArgumentationFramework {
        ArgumentationFramework::new(
            ["a", "b", "c", "d", "e", "f", "g", "h"],
            [
                ("a", "b"),
                ("b", "a"),
                ("b", "c"),
                ("c", "d"),
                ("d", "e"),
                ("d", "g"),
                ("e", "c"),
                ("e", "f"),
                ("f", "f"),
                ("g", "g"),
                ("g", "h"),
                ("h", "g"),
            ],
        )
        .unwrap()
    }

    fn ext(names: &[&str]) -> Extension {
        names.iter().copied().collect()
    }

    #[test]
    fn shipped_example_matches() {
        assert_eq!(crate::examples::example1(), example1());
    }

    #[test]
    fn conflict_freeness() {
        let af = example1();
        assert!(is_conflict_free(&af, &ext(&["a", "c", "h"])).unwrap());
        assert!(!is_conflict_free(&af, &ext(&["f"])).unwrap());
        assert!(is_conflict_free(&af, &Extension::new()).unwrap());
        assert_eq!(
            is_conflict_free(&af, &ext(&["z"])),
            Err(AfError::UnknownArgument("z".into()))
        );
    }

    #[test]
    fn defense() {
        let af = example1();
        assert!(!defends(&af, &ext(&["a", "d"]), "d").unwrap());
        let chain = ArgumentationFramework::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        assert!(defends(&chain, &Extension::new(), "a").unwrap());
        assert!(defends(&chain, &ext(&["a"]), "c").unwrap());
        assert!(defends(&af, &ext(&["a"]), "q").is_err());
    }

    #[test]
    fn ranges() {
        let af = example1();
        assert_eq!(
            range_of(&af, &ext(&["b", "d", "h"])).unwrap(),
            ext(&["a", "b", "c", "d", "e", "g", "h"])
        );
        assert_eq!(range_of(&af, &Extension::new()).unwrap(), Extension::new());
        assert_eq!(range_of(&af, &ext(&["f"])).unwrap(), ext(&["f"]));
    }

    #[test]
    fn grounded_examples() {
        assert_eq!(grounded(&example1()), Extension::new());
        let single = ArgumentationFramework::new(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(grounded(&single), ext(&["a"]));
        let chain = ArgumentationFramework::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(grounded(&chain), ext(&["a", "c"]));
    }

    #[test]
    fn rejects_bad_construction() {
        assert_eq!(
            ArgumentationFramework::new(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(AfError::DuplicateArgument("a".into()))
        );
        assert_eq!(
            ArgumentationFramework::new(["a"], [("a", "b")]),
            Err(AfError::UnknownArgument("b".into()))
        );
        let dup = ArgumentationFramework::new(["a", "b"], [("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(dup.attack_count(), 1);
    }

    #[test]
    fn display_is_bracketed_and_sorted() {
        assert_eq!(ext(&["h", "a"]).to_string(), "[a,h]");
        assert_eq!(Extension::new().to_string(), "[]");
    }
}
