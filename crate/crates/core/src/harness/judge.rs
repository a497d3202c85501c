//! Answer judging: against a reference, by verifying extensions, or by
//! majority vote among participants.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::engine::{Engine, EngineError, Reasoner};
use crate::framework::{ArgumentationFramework, Extension};
use crate::io::SolutionText;
use crate::semantics::{verify, SemanticsKind};
use crate::task::{Answer, Problem, TaskSpec, Triathlon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Correct,
    Incorrect,
    Zero,
}

impl Verdict {
    pub fn points(self) -> i64 {
        match self {
            Verdict::Correct => 1,
            Verdict::Incorrect => -5,
            Verdict::Zero => 0,
        }
    }
}

/// Why an answer earned nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroCause {
    Timeout,
    MemoryOut,
    Crash,
    SpawnFailed,
    Unparsable,
    /// Only some of the extensions were listed.
    Incomplete,
    /// Participants split evenly and nothing could be verified.
    NoMajority,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Judgement {
    pub verdict: Verdict,
    /// Accepted without any check (lone unverifiable answer).
    pub unchecked: bool,
    pub cause: Option<ZeroCause>,
}

impl Judgement {
    pub fn correct() -> Self {
        Judgement {
            verdict: Verdict::Correct,
            unchecked: false,
            cause: None,
        }
    }

    pub fn incorrect() -> Self {
        Judgement {
            verdict: Verdict::Incorrect,
            unchecked: false,
            cause: None,
        }
    }

    pub fn zero(cause: ZeroCause) -> Self {
        Judgement {
            verdict: Verdict::Zero,
            unchecked: false,
            cause: Some(cause),
        }
    }

    pub fn points(&self) -> i64 {
        self.verdict.points()
    }
}

/// Ground truth for one task on one framework. For `SE` the full
/// extension set is kept, since any member is an acceptable answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reference {
    Verdict(bool),
    Extensions(Vec<Extension>),
    Triathlon(Triathlon),
}

pub fn reference_for(
    task: &TaskSpec,
    af: &ArgumentationFramework,
    reasoner: &dyn Reasoner,
) -> Result<Reference, EngineError> {
    Ok(match (task.problem(), task.semantics()) {
        (Problem::SE | Problem::EE, Some(sem)) => Reference::Extensions(reasoner.enumerate(sem, af)?),
        _ => match reasoner.solve(task, af)? {
            Answer::Verdict(v) => Reference::Verdict(v),
            Answer::Triathlon(t) => Reference::Triathlon(t),
            other => unreachable!("{task} answered with {other:?}"),
        },
    })
}

fn judge_list(claimed: &[Extension], truth: &[Extension]) -> Judgement {
    if claimed.iter().any(|e| !truth.contains(e)) {
        return Judgement::incorrect();
    }
    let claimed: BTreeSet<&Extension> = claimed.iter().collect();
    if claimed.len() == truth.iter().collect::<BTreeSet<_>>().len() {
        Judgement::correct()
    } else {
        Judgement::zero(ZeroCause::Incomplete)
    }
}

/// Componentwise: any wrong part is wrong, all correct parts are correct,
/// anything else earns nothing.
fn combine(parts: [Judgement; 3]) -> Judgement {
    if parts.iter().any(|j| j.verdict == Verdict::Incorrect) {
        Judgement::incorrect()
    } else if parts.iter().all(|j| j.verdict == Verdict::Correct) {
        Judgement::correct()
    } else {
        parts.into_iter().find(|j| j.verdict == Verdict::Zero).unwrap()
    }
}

pub fn judge(task: &TaskSpec, raw: &SolutionText, reference: &Reference) -> Judgement {
    let Some(answer) = raw.answer() else {
        return Judgement::zero(ZeroCause::Unparsable);
    };
    match (task.problem(), answer, reference) {
        (Problem::DC | Problem::DS, Answer::Verdict(v), Reference::Verdict(r)) => {
            if v == r {
                Judgement::correct()
            } else {
                Judgement::incorrect()
            }
        }
        (Problem::SE, Answer::Single(claim), Reference::Extensions(truth)) => {
            let ok = match claim {
                None => truth.is_empty(),
                Some(e) => truth.contains(e),
            };
            if ok {
                Judgement::correct()
            } else {
                Judgement::incorrect()
            }
        }
        (Problem::EE, Answer::Extensions(claimed), Reference::Extensions(truth)) => judge_list(claimed, truth),
        (Problem::D3, Answer::Triathlon(c), Reference::Triathlon(t)) => combine([
            judge_list(&c.grounded, &t.grounded),
            judge_list(&c.stable, &t.stable),
            judge_list(&c.preferred, &t.preferred),
        ]),
        _ => Judgement::zero(ZeroCause::Unparsable),
    }
}

/// Result of checking each claimed extension on its own.
enum Soundness {
    /// Some claimed set is not an extension.
    Refuted,
    /// Every claimed set verified.
    Sound,
    /// Nothing claimed, or verification ran out of budget.
    Unknown,
}

fn check_all(sem: SemanticsKind, af: &ArgumentationFramework, exts: &[Extension], engine: &Engine) -> Soundness {
    let mut unknown = exts.is_empty();
    for e in exts {
        match verify(sem, af, e, engine) {
            Ok(false) | Err(EngineError::Framework(_)) => return Soundness::Refuted,
            Ok(true) => {}
            Err(_) => unknown = true,
        }
    }
    if unknown {
        Soundness::Unknown
    } else {
        Soundness::Sound
    }
}

fn soundness(task: &TaskSpec, af: &ArgumentationFramework, answer: &Answer, engine: &Engine) -> Soundness {
    match (answer, task.semantics()) {
        (Answer::Single(Some(e)), Some(sem)) => check_all(sem, af, std::slice::from_ref(e), engine),
        (Answer::Extensions(exts), Some(sem)) => check_all(sem, af, exts, engine),
        (Answer::Triathlon(t), None) => {
            let parts = [
                check_all(SemanticsKind::Grounded, af, &t.grounded, engine),
                check_all(SemanticsKind::Stable, af, &t.stable, engine),
                check_all(SemanticsKind::Preferred, af, &t.preferred, engine),
            ];
            if parts.iter().any(|s| matches!(s, Soundness::Refuted)) || t.grounded.len() > 1 {
                Soundness::Refuted
            } else {
                Soundness::Unknown
            }
        }
        _ => Soundness::Unknown,
    }
}

/// What participants vote on. Different `SE` extensions are all fine, so
/// `SE` votes only on whether an extension exists.
fn ballot(answer: &Answer) -> Answer {
    match answer {
        Answer::Single(e) => Answer::Verdict(e.is_some()),
        other => other.clone().canonical(),
    }
}

fn is_sub_answer(small: &Answer, big: &Answer) -> bool {
    let sub = |a: &[Extension], b: &[Extension]| a.iter().all(|e| b.contains(e));
    match (small, big) {
        (Answer::Extensions(a), Answer::Extensions(b)) => sub(a, b),
        (Answer::Triathlon(a), Answer::Triathlon(b)) => {
            sub(&a.grounded, &b.grounded) && sub(&a.stable, &b.stable) && sub(&a.preferred, &b.preferred)
        }
        _ => false,
    }
}

/// Judges `raw` when a reference may be missing. In order: the reference
/// answer; per-extension verification; majority vote over `peers` (the
/// other participants' outputs on the same job). A lone answer that
/// survives all of this is accepted and flagged unchecked.
pub fn verify_cascade(
    task: &TaskSpec,
    af: &ArgumentationFramework,
    raw: &SolutionText,
    peers: &[SolutionText],
    reference: Option<&Reference>,
    engine: &Engine,
) -> Judgement {
    if let Some(r) = reference {
        return judge(task, raw, r);
    }
    let Some(answer) = raw.answer() else {
        return Judgement::zero(ZeroCause::Unparsable);
    };
    let sound = soundness(task, af, answer, engine);
    match (&sound, answer) {
        (Soundness::Refuted, _) => return Judgement::incorrect(),
        (Soundness::Sound, Answer::Single(Some(_))) => return Judgement::correct(),
        _ => {}
    }

    let mine = ballot(answer);
    let votes: Vec<Answer> = peers
        .iter()
        .filter_map(SolutionText::answer)
        .filter(|a| !matches!(soundness(task, af, a, engine), Soundness::Refuted))
        .map(ballot)
        .chain([mine.clone()])
        .collect();
    if votes.len() == 1 {
        return Judgement {
            unchecked: true,
            ..Judgement::correct()
        };
    }
    let count = |a: &Answer| votes.iter().filter(|v| *v == a).count();
    let top = votes.iter().map(count).max().unwrap();
    let mut leaders: Vec<&Answer> = Vec::new();
    for v in &votes {
        if count(v) == top && !leaders.contains(&v) {
            leaders.push(v);
        }
    }
    if leaders.len() > 1 {
        return Judgement::zero(ZeroCause::NoMajority);
    }
    let winner = leaders[0];
    if *winner == mine {
        Judgement::correct()
    } else if matches!(sound, Soundness::Sound) && is_sub_answer(&mine, winner) {
        Judgement::zero(ZeroCause::Incomplete)
    } else {
        Judgement::incorrect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Oracle;
    use crate::examples::example1;
    use crate::io::parse_solution;
    use crate::task::TaskKind;

    fn spec(name: &str, q: Option<&str>) -> TaskSpec {
        TaskSpec::parse(name, q).unwrap()
    }

    fn text(task: &TaskSpec, s: &str) -> SolutionText {
        parse_solution(task.kind, s)
    }

    fn judged(name: &str, out: &str) -> Judgement {
        let af = example1();
        let task = spec(name, None);
        let r = reference_for(&task, &af, &Oracle::default()).unwrap();
        judge(&task, &text(&task, out), &r)
    }

    #[test]
    fn enumeration_cases() {
        assert_eq!(judged("EE-PR", "[[a,h],[b,d,h]]").verdict, Verdict::Correct);
        assert_eq!(judged("EE-PR", "[[a,h]]"), Judgement::zero(ZeroCause::Incomplete));
        assert_eq!(judged("EE-PR", "[[a,h],[a,e,h]]").points(), -5);
        assert_eq!(judged("EE-PR", "[[a,h],[b,d,h"), Judgement::zero(ZeroCause::Unparsable));
        assert_eq!(judged("EE-ST", "[]").verdict, Verdict::Correct);
    }

    #[test]
    fn single_extension_cases() {
        assert_eq!(judged("SE-ST", "NO").points(), 1);
        assert_eq!(judged("SE-PR", "NO").points(), -5);
        assert_eq!(judged("SE-PR", "[b,d,h]").points(), 1);
        assert_eq!(judged("SE-PR", "[a]").points(), -5);
    }

    #[test]
    fn d3_componentwise() {
        assert_eq!(judged("D3", "[[]]\n[]\n[[a,h],[b,d,h]]").verdict, Verdict::Correct);
        assert_eq!(judged("D3", "[[]]\n[]\n[[a,h]]").verdict, Verdict::Zero);
        assert_eq!(judged("D3", "[[a]]\n[]\n[[a,h]]").verdict, Verdict::Incorrect);
    }

    #[test]
    fn majority_vote() {
        let af = example1();
        let task = spec("DS-PR", Some("h"));
        let yes = text(&task, "YES");
        let no = text(&task, "NO");
        let engine = Engine::default();
        let peers = vec![yes.clone(), yes.clone(), yes.clone()];
        assert_eq!(verify_cascade(&task, &af, &no, &peers, None, &engine).points(), -5);
        assert_eq!(verify_cascade(&task, &af, &yes, &peers[..2], None, &engine).points(), 1);
        let tie = verify_cascade(&task, &af, &no, std::slice::from_ref(&yes), None, &engine);
        assert_eq!(tie, Judgement::zero(ZeroCause::NoMajority));
    }

    #[test]
    fn lone_answers_are_unchecked() {
        let af = example1();
        let task = spec("EE-PR", None);
        let lone = verify_cascade(&task, &af, &text(&task, "[[a,h],[b,d,h]]"), &[], None, &Engine::default());
        assert_eq!((lone.verdict, lone.unchecked), (Verdict::Correct, true));
        let bad = verify_cascade(&task, &af, &text(&task, "[[a]]"), &[], None, &Engine::default());
        assert_eq!(bad.verdict, Verdict::Incorrect);
    }

    #[test]
    fn se_checked_by_verification() {
        let af = example1();
        let task = spec("SE-SST", None);
        let j = verify_cascade(&task, &af, &text(&task, "[b,d,h]"), &[], None, &Engine::default());
        assert_eq!(j, Judgement::correct());
    }

    #[test]
    fn incomplete_against_majority() {
        let af = example1();
        let task = TaskSpec {
            kind: TaskKind::new(Problem::EE, SemanticsKind::Complete),
            query: None,
        };
        let full = text(&task, "[[],[a],[h],[a,h],[b,d,h]]");
        let part = text(&task, "[[],[a]]");
        let j = verify_cascade(&task, &af, &part, &[full.clone(), full], None, &Engine::default());
        assert_eq!(j, Judgement::zero(ZeroCause::Incomplete));
    }
}
