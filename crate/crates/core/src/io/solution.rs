//! Answer text: `YES`/`NO`, `[a,b]`, `[[a],[b,c]]`, and three lists for `D3`.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::framework::Extension;
use crate::task::{canonicalize, Answer, Problem, TaskError, TaskKind, Triathlon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolutionStyle {
    #[default]
    SingleLine,
    /// One extension per line inside the outer brackets.
    LinePerExtension,
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[error("unparsable answer: {0}")]
pub struct ParseFailure(pub String);

/// Raw solver output plus its reading under a task.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionText {
    pub raw: String,
    pub parsed: Result<Answer, ParseFailure>,
}

impl SolutionText {
    pub fn answer(&self) -> Option<&Answer> {
        self.parsed.as_ref().ok()
    }
}

pub fn write_solution(task: TaskKind, ans: &Answer) -> Result<String, TaskError> {
    write_solution_styled(task, ans, SolutionStyle::SingleLine)
}

pub fn write_solution_styled(task: TaskKind, ans: &Answer, style: SolutionStyle) -> Result<String, TaskError> {
    if !ans.fits(task.problem) {
        return Err(TaskError::ShapeMismatch(task));
    }
    let mut out = String::new();
    match ans {
        Answer::Verdict(yes) => out.push_str(if *yes { "YES" } else { "NO" }),
        Answer::Single(None) => out.push_str("NO"),
        Answer::Single(Some(ext)) => write_extension(&mut out, ext),
        Answer::Extensions(exts) => write_list(&mut out, exts, style),
        Answer::Triathlon(t) => {
            write_list(&mut out, &t.grounded, style);
            out.push('\n');
            write_list(&mut out, &t.stable, style);
            out.push('\n');
            write_list(&mut out, &t.preferred, style);
        }
    }
    Ok(out)
}

fn write_extension(out: &mut String, ext: &Extension) {
    out.push('[');
    for (i, arg) in ext.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(arg);
    }
    out.push(']');
}

fn write_list(out: &mut String, exts: &[Extension], style: SolutionStyle) {
    let mut sorted = exts.to_vec();
    canonicalize(&mut sorted);
    out.push('[');
    for (i, ext) in sorted.iter().enumerate() {
        match style {
            SolutionStyle::SingleLine if i > 0 => out.push(','),
            SolutionStyle::SingleLine => {}
            SolutionStyle::LinePerExtension => {
                let _ = write!(out, "{}\n  ", if i > 0 { "," } else { "" });
            }
        }
        write_extension(out, ext);
    }
    if style == SolutionStyle::LinePerExtension && !sorted.is_empty() {
        out.push('\n');
    }
    out.push(']');
}

/// Reads solver output for `task`. Whitespace is ignored everywhere; any
/// other deviation from the answer grammar becomes a [`ParseFailure`].
pub fn parse_solution(task: TaskKind, text: &str) -> SolutionText {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    SolutionText {
        raw: text.to_string(),
        parsed: parse_compact(task.problem, &compact),
    }
}

fn parse_compact(problem: Problem, s: &str) -> Result<Answer, ParseFailure> {
    match problem {
        Problem::DC | Problem::DS => match s {
            "YES" => Ok(Answer::Verdict(true)),
            "NO" => Ok(Answer::Verdict(false)),
            _ => Err(fail(format!("expected YES or NO, got `{}`", preview(s)))),
        },
        Problem::SE => {
            if s == "NO" {
                return Ok(Answer::Single(None));
            }
            let mut cur = Cursor { s, pos: 0 };
            let ext = cur.extension()?;
            cur.finish()?;
            Ok(Answer::Single(Some(ext)))
        }
        Problem::EE => {
            let mut cur = Cursor { s, pos: 0 };
            let exts = cur.list()?;
            cur.finish()?;
            Ok(Answer::Extensions(exts))
        }
        Problem::D3 => {
            let mut cur = Cursor { s, pos: 0 };
            let grounded = cur.list()?;
            let stable = cur.list()?;
            let preferred = cur.list()?;
            cur.finish()?;
            Ok(Answer::Triathlon(Triathlon {
                grounded,
                stable,
                preferred,
            }))
        }
    }
}

fn fail(msg: impl Into<String>) -> ParseFailure {
    ParseFailure(msg.into())
}

fn preview(s: &str) -> String {
    s.chars().take(40).collect()
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseFailure> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(fail(format!("expected `{}` at offset {}", b as char, self.pos)))
        }
    }

    fn finish(&self) -> Result<(), ParseFailure> {
        if self.pos == self.s.len() {
            Ok(())
        } else {
            Err(fail(format!("trailing text at offset {}", self.pos)))
        }
    }

    fn ident(&mut self) -> Result<&str, ParseFailure> {
        let start = self.pos;
        while let Some(b) = self.peek() {
            if matches!(b, b'[' | b']' | b',') {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(fail(format!("empty argument name at offset {start}")));
        }
        // positions only ever stop at ASCII delimiters, so this is a char boundary
        Ok(&self.s[start..self.pos])
    }

    fn extension(&mut self) -> Result<Extension, ParseFailure> {
        self.expect(b'[')?;
        let mut ext = Extension::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(ext);
        }
        loop {
            let id = self.ident()?.to_string();
            ext.insert(id);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(ext);
                }
                _ => return Err(fail(format!("unterminated extension at offset {}", self.pos))),
            }
        }
    }

    fn list(&mut self) -> Result<Vec<Extension>, ParseFailure> {
        self.expect(b'[')?;
        let mut exts = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(exts);
        }
        loop {
            exts.push(self.extension()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    canonicalize(&mut exts);
                    return Ok(exts);
                }
                _ => return Err(fail(format!("unterminated list at offset {}", self.pos))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::SemanticsKind::*;

    fn ext(names: &[&str]) -> Extension {
        names.iter().copied().collect()
    }

    fn kind(p: Problem, s: crate::semantics::SemanticsKind) -> TaskKind {
        TaskKind::new(p, s)
    }

    #[test]
    fn writes_each_shape() {
        assert_eq!(write_solution(kind(Problem::SE, Stable), &Answer::Single(None)).unwrap(), "NO");
        assert_eq!(write_solution(kind(Problem::DC, Complete), &Answer::Verdict(true)).unwrap(), "YES");
        let pr = Answer::Extensions(vec![ext(&["b", "d", "h"]), ext(&["h", "a"])]);
        assert_eq!(write_solution(kind(Problem::EE, Preferred), &pr).unwrap(), "[[a,h],[b,d,h]]");
        let d3 = Answer::Triathlon(Triathlon {
            grounded: vec![ext(&[])],
            stable: vec![],
            preferred: vec![ext(&["a", "h"]), ext(&["b", "d", "h"])],
        });
        assert_eq!(write_solution(TaskKind::D3, &d3).unwrap(), "[[]]\n[]\n[[a,h],[b,d,h]]");
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        assert!(write_solution(kind(Problem::EE, Complete), &Answer::Verdict(true)).is_err());
    }

    #[test]
    fn parses_verdicts_and_lists() {
        assert_eq!(
            parse_solution(kind(Problem::DC, Complete), "YES\n").parsed,
            Ok(Answer::Verdict(true))
        );
        assert_eq!(
            parse_solution(kind(Problem::EE, Preferred), " [ [a, h],\n[b,d,h] ]").parsed,
            Ok(Answer::Extensions(vec![ext(&["a", "h"]), ext(&["b", "d", "h"])]))
        );
        assert_eq!(
            parse_solution(kind(Problem::SE, Stable), "[]").parsed,
            Ok(Answer::Single(Some(Extension::new())))
        );
    }

    #[test]
    fn rejects_malformed_text() {
        for (p, text) in [
            (Problem::EE, "[[a],[b"),
            (Problem::EE, "[[a]]x"),
            (Problem::EE, "[a]"),
            (Problem::SE, "[a,,b]"),
            (Problem::DS, "yes please"),
            (Problem::DS, ""),
            (Problem::SE, "[[a]]"),
        ] {
            assert!(parse_solution(kind(p, Complete), text).parsed.is_err(), "{text:?}");
        }
        assert!(parse_solution(TaskKind::D3, "[[]]\n[]").parsed.is_err());
    }

    #[test]
    fn line_per_extension_reads_back() {
        let ans = Answer::Extensions(vec![ext(&["a"]), ext(&["b", "c"])]);
        let k = kind(Problem::EE, Complete);
        let text = write_solution_styled(k, &ans, SolutionStyle::LinePerExtension).unwrap();
        assert_eq!(text, "[\n  [a],\n  [b,c]\n]");
        assert_eq!(parse_solution(k, &text).parsed, Ok(ans));
    }
}
