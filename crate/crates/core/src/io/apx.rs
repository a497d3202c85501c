use std::fmt::Write;

use crate::framework::ArgumentationFramework;

use super::{is_identifier, FormatError};

/// Parses `arg(x).` / `att(x,y).` statements, one per line.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework, FormatError> {
    let mut args: Vec<(usize, String)> = Vec::new();
    let mut attacks: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: &str| FormatError::Syntax {
            line: line_no,
            message: message.to_string(),
        };
        let body = line
            .strip_suffix('.')
            .ok_or_else(|| syntax("statement must end with `.`"))?
            .trim_end();
        let (head, rest) = body.split_once('(').ok_or_else(|| syntax("expected `arg(..)` or `att(..)`"))?;
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| syntax("missing closing parenthesis"))?;
        match head.trim() {
            "arg" => {
                let id = inner.trim();
                if !is_identifier(id) {
                    return Err(syntax(&format!("invalid argument identifier `{id}`")));
                }
                args.push((line_no, id.to_string()));
            }
            "att" => {
                let (from, to) = inner.split_once(',').ok_or_else(|| syntax("`att` takes two arguments"))?;
                let (from, to) = (from.trim(), to.trim());
                if !is_identifier(from) || !is_identifier(to) {
                    return Err(syntax(&format!("invalid attack `{inner}`")));
                }
                attacks.push((line_no, from.to_string(), to.to_string()));
            }
            other => return Err(syntax(&format!("unknown predicate `{other}`"))),
        }
    }
    build(args, attacks)
}

pub(super) fn build(
    args: Vec<(usize, String)>,
    attacks: Vec<(usize, String, String)>,
) -> Result<ArgumentationFramework, FormatError> {
    let mut seen = std::collections::HashMap::new();
    for (line, name) in &args {
        if seen.insert(name.as_str(), *line).is_some() {
            return Err(FormatError::Framework {
                line: *line,
                source: crate::framework::AfError::DuplicateArgument(name.clone()),
            });
        }
    }
    for (line, from, to) in &attacks {
        for endpoint in [from, to] {
            if !seen.contains_key(endpoint.as_str()) {
                return Err(FormatError::Framework {
                    line: *line,
                    source: crate::framework::AfError::UnknownArgument(endpoint.clone()),
                });
            }
        }
    }
    ArgumentationFramework::new(
        args.into_iter().map(|(_, a)| a),
        attacks.into_iter().map(|(_, a, b)| (a, b)),
    )
    .map_err(|source| FormatError::Framework { line: 0, source })
}

pub fn write_apx(af: &ArgumentationFramework) -> String {
    let mut out = String::with_capacity(16 * (af.len() + af.attack_count()));
    for name in af.names() {
        let _ = writeln!(out, "arg({name}).");
    }
    for (a, b) in af.attacks_by_name() {
        let _ = writeln!(out, "att({a},{b}).");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::example1;

    #[test]
    fn parses_small_instance() {
        let af = parse_apx("arg(a).\narg(b).\natt(a,b).").unwrap();
        assert_eq!(af, ArgumentationFramework::new(["a", "b"], [("a", "b")]).unwrap());
    }

    #[test]
    fn crlf_and_blank_lines() {
        let af = parse_apx("arg(a).\r\n\r\narg(b).\r\natt( a , b ).\r\n").unwrap();
        assert_eq!(af.attack_count(), 1);
    }

    #[test]
    fn example_round_trip() {
        let af = example1();
        assert_eq!(parse_apx(&write_apx(&af)).unwrap(), af);
    }

    #[test]
    fn undeclared_endpoint() {
        let err = parse_apx("att(a,b).").unwrap_err();
        assert!(matches!(err, FormatError::Framework { line: 1, .. }), "{err}");
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        assert_eq!(
            parse_apx("arg(a).\narg(b)\n"),
            Err(FormatError::Syntax {
                line: 2,
                message: "statement must end with `.`".into()
            })
        );
        assert!(matches!(parse_apx("arg(a-b)."), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_apx("foo(a)."), Err(FormatError::Syntax { line: 1, .. })));
    }
}
