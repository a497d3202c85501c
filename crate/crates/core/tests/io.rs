//! Instance formats and answer text.

use afkit::io::{parse_apx, parse_solution, parse_tgf, write_apx, write_solution, write_solution_styled, SolutionStyle};
use afkit::{Answer, ArgumentationFramework, Extension, TaskKind, Triathlon};
use proptest::prelude::*;

fn arb_af() -> impl Strategy<Value = ArgumentationFramework> {
    proptest::collection::btree_set("[a-z][a-z0-9_]{0,6}", 1..12).prop_flat_map(|names| {
        let names: Vec<String> = names.into_iter().collect();
        let n = names.len();
        proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |attacks| {
            ArgumentationFramework::from_indexed(names.clone(), attacks).unwrap()
        })
    })
}

fn arb_ext(names: Vec<String>) -> impl Strategy<Value = Extension> {
    proptest::sample::subsequence(names.clone(), 0..=names.len()).prop_map(|v| v.into_iter().collect())
}

fn same(a: &ArgumentationFramework, b: &ArgumentationFramework) -> bool {
    let mut x: Vec<_> = a.attacks_by_name().collect();
    let mut y: Vec<_> = b.attacks_by_name().collect();
    x.sort();
    y.sort();
    let mut na = a.names().to_vec();
    let mut nb = b.names().to_vec();
    na.sort();
    nb.sort();
    na == nb && x == y
}

proptest! {
    #[test]
    fn apx_round_trip(af in arb_af()) {
        prop_assert!(same(&af, &parse_apx(&write_apx(&af)).unwrap()));
    }

    #[test]
    fn tgf_round_trip(af in arb_af()) {
        prop_assert!(same(&af, &parse_tgf(&afkit::io::write_tgf(&af)).unwrap()));
    }

    #[test]
    fn answers_round_trip(
        (exts, single) in proptest::collection::vec(arb_ext(vec!["a".into(), "b".into(), "c1".into(), "d_2".into()]), 0..5)
            .prop_flat_map(|v| (Just(v), proptest::option::of(arb_ext(vec!["a".into(), "zz".into()]))))
    ) {
        let mut canon = exts.clone();
        canon.sort();
        canon.dedup();
        for kind in TaskKind::all() {
            let answer = match kind.problem {
                afkit::Problem::DC | afkit::Problem::DS => Answer::Verdict(exts.len() % 2 == 0),
                afkit::Problem::SE => Answer::Single(single.clone()),
                afkit::Problem::EE => Answer::Extensions(canon.clone()),
                afkit::Problem::D3 => Answer::Triathlon(Triathlon {
                    grounded: canon.iter().take(1).cloned().collect(),
                    stable: canon.clone(),
                    preferred: canon.clone(),
                }),
            };
            for style in [SolutionStyle::SingleLine, SolutionStyle::LinePerExtension] {
                let text = write_solution_styled(kind, &answer, style).unwrap();
                let back = parse_solution(kind, &text);
                prop_assert_eq!(back.answer(), Some(&answer), "{} {:?}", kind, text);
            }
        }
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,40}|[\\[\\],a-c YESNO\\n ]{0,40}") {
        for kind in TaskKind::all() {
            let s = parse_solution(kind, &text);
            prop_assert_eq!(&s.raw, &text);
        }
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    for bad in ["arg(a).\natt(a,b).", "arg(a)\n", "att(a).", "arg(a).\narg(a).", "arg(a b)."] {
        assert!(parse_apx(bad).is_err(), "{bad:?}");
    }
    assert!(parse_tgf("1\n2\n#\n1 3\n").is_err());
}

#[test]
fn answer_text_shapes() {
    let ee: TaskKind = "EE-PR".parse().unwrap();
    let e = |v: &[&str]| v.iter().copied().collect::<Extension>();
    let text = write_solution(ee, &Answer::Extensions(vec![e(&["a", "h"]), e(&["b", "d", "h"])])).unwrap();
    assert_eq!(text, "[[a,h],[b,d,h]]");
    assert_eq!(parse_solution("SE-ST".parse().unwrap(), "NO").answer(), Some(&Answer::Single(None)));
    assert_eq!(parse_solution("DC-CO".parse().unwrap(), " YES \n").answer(), Some(&Answer::Verdict(true)));
    assert!(parse_solution("DC-CO".parse().unwrap(), "[a]").answer().is_none());
    assert!(parse_solution(ee, "").answer().is_none());
}
