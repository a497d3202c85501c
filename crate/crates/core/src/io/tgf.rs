use std::fmt::Write;

use crate::framework::ArgumentationFramework;

use super::apx::build;
use super::FormatError;

/// Node ids (one per line, optional label ignored), a `#` line, then
/// `source target` edge lines.
pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework, FormatError> {
    let mut args = Vec::new();
    let mut attacks = Vec::new();
    let mut in_edges = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if in_edges {
                return Err(FormatError::Syntax {
                    line: line_no,
                    message: "second `#` separator".into(),
                });
            }
            in_edges = true;
            continue;
        }
        let mut tokens = line.split_whitespace();
        let first = tokens.next().unwrap().to_string();
        if in_edges {
            let second = tokens.next().ok_or_else(|| FormatError::Syntax {
                line: line_no,
                message: "edge needs a source and a target".into(),
            })?;
            attacks.push((line_no, first, second.to_string()));
        } else {
            args.push((line_no, first));
        }
    }
    if !in_edges {
        return Err(FormatError::MissingSeparator);
    }
    build(args, attacks)
}

pub fn write_tgf(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for name in af.names() {
        let _ = writeln!(out, "{name}");
    }
    out.push_str("#\n");
    for (a, b) in af.attacks_by_name() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}
