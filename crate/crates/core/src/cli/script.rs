//! Script files: a basis declaration followed by labelled statements.
//!
//! ```text
//! # two graded atoms and their superposition
//! basis: p0 p1
//! a: |-[0.6] p0
//! b: |-[0.8i] p1
//! s: compose a b
//! |- p0 [0.6, 0.8i]& p1
//! ```
//!
//! Unlabelled statements are labelled `line<N>` after their line number.

use std::fmt;

use crate::error::{Error, Result};
use crate::semantics::Basis;
use crate::syntax::{is_identifier, parse_assertion, Assertion};

#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    Assert(Assertion),
    /// Compose earlier statements, by index into [`Script::statements`].
    Compose(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub line: usize,
    pub label: String,
    pub body: Body,
    /// Source text after the label.
    pub text: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Script {
    pub basis: Basis,
    pub statements: Vec<Statement>,
}

/// An error tied to a 1-based script line.
#[derive(Debug, Clone, PartialEq)]
pub struct ScriptError {
    pub line: usize,
    pub error: Error,
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error)
    }
}

impl ScriptError {
    fn new(line: usize, error: Error) -> Self {
        ScriptError { line, error }
    }
}

/// Strips a trailing `# comment` and surrounding whitespace, keeping the
/// byte position of the remaining text.
fn content(raw: &str) -> (usize, &str) {
    let code = raw.split_once('#').map_or(raw, |(c, _)| c);
    let trimmed = code.trim_start();
    (code.len() - trimmed.len(), trimmed.trim_end())
}

/// Splits `label: rest` when the line starts with an identifier and a colon.
fn split_label(text: &str) -> Option<(&str, &str, usize)> {
    let (label, rest) = text.split_once(':')?;
    let label = label.trim_end();
    is_identifier(label).then(|| {
        let body = rest.trim_start();
        (label, body, text.len() - body.len())
    })
}

impl Script {
    pub fn parse(source: &str) -> std::result::Result<Script, ScriptError> {
        let mut lines = source
            .lines()
            .enumerate()
            .map(|(i, raw)| (i + 1, content(raw)))
            .filter(|(_, (_, text))| !text.is_empty());

        let Some((first, (_, header))) = lines.next() else {
            return Err(ScriptError::new(1, missing_basis()));
        };
        let basis = match split_label(header) {
            Some(("basis", atoms, _)) => {
                Basis::new(atoms.split_whitespace()).map_err(|e| ScriptError::new(first, e))?
            }
            _ => return Err(ScriptError::new(first, missing_basis())),
        };

        let mut statements: Vec<Statement> = Vec::new();
        for (line, (indent, text)) in lines {
            let (label, body, body_at) = match split_label(text) {
                Some((label, body, at)) => (label.to_string(), body, indent + at),
                None => (format!("line{line}"), text, indent),
            };
            let at_line = |e| ScriptError::new(line, e);
            if label == "basis" {
                return Err(at_line(Error::Usage("basis declared twice".into())));
            }
            if statements.iter().any(|s| s.label == label) {
                return Err(at_line(Error::Usage(format!("duplicate label `{label}`"))));
            }
            let parsed = match body.strip_prefix("compose") {
                Some(refs) if refs.is_empty() || refs.starts_with(char::is_whitespace) => {
                    let indices = refs
                        .split_whitespace()
                        .map(|r| {
                            statements.iter().position(|s| s.label == r).ok_or_else(|| {
                                Error::Usage(format!("`{r}` is not an earlier statement label"))
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                        .map_err(at_line)?;
                    Body::Compose(indices)
                }
                _ => Body::Assert(parse_assertion(body).map_err(|e| at_line(shift(e, body_at)))?),
            };
            statements.push(Statement {
                line,
                label,
                body: parsed,
                text: body.to_string(),
            });
        }
        Ok(Script { basis, statements })
    }
}

fn missing_basis() -> Error {
    Error::Usage("script must start with a `basis: <atoms>` declaration".into())
}

/// Makes a syntax error offset relative to the start of the line.
fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { offset, expected } => Error::Syntax {
            offset: offset + by,
            expected,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_statements() {
        let s = Script::parse(
            "# header\n\nbasis: p0 p1  # two atoms\na: |-[0.6] p0\nb: |-[0.8i] p1\nc: compose a b\n|- p0\n",
        )
        .unwrap();
        assert_eq!(s.basis.atoms(), ["p0", "p1"]);
        let labels: Vec<_> = s.statements.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, ["a", "b", "c", "line7"]);
        assert_eq!(s.statements[2].body, Body::Compose(vec![0, 1]));
        assert_eq!(s.statements[3].line, 7);
    }

    #[test]
    fn syntax_offsets_are_line_relative() {
        let err = Script::parse("basis: p0\n  a: |-[0.6+x] p0\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(
            err.error,
            Error::Syntax {
                offset: 12,
                expected: vec!["real number"]
            }
        );
    }

    #[test]
    fn structural_errors() {
        let usage = |src| {
            matches!(
                Script::parse(src),
                Err(ScriptError {
                    error: Error::Usage(_),
                    ..
                })
            )
        };
        assert!(usage(""));
        assert!(usage("a: |- p0\n"));
        assert!(usage("basis: p0\na: |- p0\na: |- p0\n"));
        assert!(usage("basis: p0\nc: compose x\n"));
        assert!(usage("basis: p0\nbasis: p0\n"));
        assert!(matches!(
            Script::parse("basis: p0 p0\n"),
            Err(ScriptError {
                error: Error::DuplicateAtom(_),
                line: 1
            })
        ));
    }
}
