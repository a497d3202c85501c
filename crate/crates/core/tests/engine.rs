//! Engine against brute force on random small frameworks.

mod common;

use afkit::engine::oracle_enumerate;
use afkit::framework::{grounded, is_admissible, is_complete, is_conflict_free, range_of};
use afkit::{ArgumentationFramework, Engine, Extension, SemanticsKind};
use common::all_subsets;
use proptest::prelude::*;

fn arb_af() -> impl Strategy<Value = ArgumentationFramework> {
    (1usize..=8).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let attacks = (0..n * n).filter(|&k| bits[k]).map(|k| (k / n, k % n));
            ArgumentationFramework::from_indexed(names, attacks).unwrap()
        })
    })
}

fn maximal_by(sets: &[Extension], key: impl Fn(&Extension) -> Extension) -> Vec<Extension> {
    let mut out: Vec<Extension> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| key(s) != key(t) && key(s).is_subset(&key(t))))
        .cloned()
        .collect();
    out.sort();
    out
}

fn range(af: &ArgumentationFramework, s: &Extension) -> Extension {
    let r = range_of(af, s).unwrap();
    af.names().iter().filter(|a| r.contains(a)).cloned().collect()
}

/// Every semantics straight from its definition over all subsets.
fn brute(af: &ArgumentationFramework, sem: SemanticsKind) -> Vec<Extension> {
    let subsets = all_subsets(af);
    let cf: Vec<Extension> = subsets.iter().filter(|s| is_conflict_free(af, s).unwrap()).cloned().collect();
    let adm: Vec<Extension> = cf.iter().filter(|s| is_admissible(af, s).unwrap()).cloned().collect();
    let co: Vec<Extension> = adm.iter().filter(|s| is_complete(af, s).unwrap()).cloned().collect();
    let all = af.all_arguments();
    let mut out = match sem {
        SemanticsKind::Complete => co.clone(),
        SemanticsKind::Preferred => maximal_by(&co, |s| s.clone()),
        SemanticsKind::Stable => cf.iter().filter(|s| range(af, s) == all).cloned().collect(),
        SemanticsKind::SemiStable => maximal_by(&co, |s| range(af, s)),
        SemanticsKind::Stage => maximal_by(&cf, |s| range(af, s)),
        SemanticsKind::Grounded => co.iter().filter(|s| co.iter().all(|t| s.is_subset(t))).cloned().collect(),
        SemanticsKind::Ideal => {
            let pr = maximal_by(&co, |s| s.clone());
            let inside: Vec<Extension> = adm.iter().filter(|s| pr.iter().all(|p| s.is_subset(p))).cloned().collect();
            maximal_by(&inside, |s| s.clone())
        }
    };
    out.sort();
    out
}

fn sorted(mut v: Vec<Extension>) -> Vec<Extension> {
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn engine_and_oracle_match_definitions(af in arb_af()) {
        let eng = Engine::default();
        for sem in SemanticsKind::ALL {
            let want = brute(&af, sem);
            prop_assert_eq!(&sorted(oracle_enumerate(sem, &af).unwrap()), &want, "oracle {}", sem);
            prop_assert_eq!(&sorted(eng.enumerate(sem, &af).unwrap()), &want, "engine {}", sem);
        }
        prop_assert_eq!(vec![grounded(&af)], brute(&af, SemanticsKind::Grounded));
        prop_assert_eq!(vec![eng.ideal(&af).unwrap()], brute(&af, SemanticsKind::Ideal));
    }
}

#[test]
fn tiny_budget_is_reported_not_guessed() {
    let af = common::small_corpus(60).pop().unwrap().1;
    let eng = Engine::with_budget(1);
    if let Ok(mut got) = eng.enumerate(SemanticsKind::Preferred, &af) {
        got.sort();
        assert_eq!(got, brute(&af, SemanticsKind::Preferred));
    }
}

#[test]
fn empty_framework() {
    let af = ArgumentationFramework::new(Vec::<&str>::new(), Vec::<(&str, &str)>::new()).unwrap();
    for sem in SemanticsKind::ALL {
        assert_eq!(Engine::default().enumerate(sem, &af).unwrap(), vec![Extension::new()], "{sem}");
    }
}
