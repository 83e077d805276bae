//! Template text syntax: `{}` is a hole, `{{` and `}}` are literal braces,
//! everything else is literal text.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Template, TemplateElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnmatchedOpen,
    UnmatchedClose,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Zero-based character offset of the offending brace.
    pub column: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let brace = match self.kind {
            ParseErrorKind::UnmatchedOpen => '{',
            ParseErrorKind::UnmatchedClose => '}',
        };
        write!(f, "unbalanced `{brace}` at column {}", self.column)
    }
}

impl core::error::Error for ParseError {}

pub fn parse_template(text: &str) -> Result<Template, ParseError> {
    let mut elements = Vec::new();
    let mut literal = String::new();
    let mut chars = text.chars().enumerate().peekable();

    while let Some((column, c)) = chars.next() {
        match c {
            '{' => match chars.peek() {
                Some((_, '{')) => {
                    chars.next();
                    literal.push('{');
                }
                Some((_, '}')) => {
                    chars.next();
                    if !literal.is_empty() {
                        elements.push(TemplateElement::Literal(core::mem::take(&mut literal)));
                    }
                    elements.push(TemplateElement::Hole);
                }
                _ => return Err(ParseError { kind: ParseErrorKind::UnmatchedOpen, column }),
            },
            '}' => match chars.peek() {
                Some((_, '}')) => {
                    chars.next();
                    literal.push('}');
                }
                _ => return Err(ParseError { kind: ParseErrorKind::UnmatchedClose, column }),
            },
            c => literal.push(c),
        }
    }
    if !literal.is_empty() {
        elements.push(TemplateElement::Literal(literal));
    }
    Ok(Template::new(elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use TemplateElement::{Hole, Literal};

    #[test]
    fn hello_hole() {
        let tpl = parse_template("Hello {}").unwrap();
        assert_eq!(tpl.elements(), &[Literal("Hello ".into()), Hole]);
        assert_eq!(tpl.arity(), 1);
    }

    #[test]
    fn empty() {
        assert!(parse_template("").unwrap().elements().is_empty());
    }

    #[test]
    fn escapes_merge_into_one_literal() {
        assert_eq!(parse_template("a{{b").unwrap().elements(), &[Literal("a{b".into())]);
        assert_eq!(parse_template("{{}}").unwrap().elements(), &[Literal("{}".into())]);
        assert_eq!(
            parse_template("x{}}}{}").unwrap().elements(),
            &[Literal("x".into()), Hole, Literal("}".into()), Hole]
        );
    }

    #[test]
    fn adjacent_holes() {
        assert_eq!(parse_template("{}{}").unwrap().elements(), &[Hole, Hole]);
    }

    #[test]
    fn unbalanced_braces_report_column() {
        let err = |s| parse_template(s).unwrap_err();
        assert_eq!(err("ab{c"), ParseError { kind: ParseErrorKind::UnmatchedOpen, column: 2 });
        assert_eq!(err("{"), ParseError { kind: ParseErrorKind::UnmatchedOpen, column: 0 });
        assert_eq!(err("a}"), ParseError { kind: ParseErrorKind::UnmatchedClose, column: 1 });
        assert_eq!(err("{{}"), ParseError { kind: ParseErrorKind::UnmatchedClose, column: 2 });
        assert_eq!(err("{}}"), ParseError { kind: ParseErrorKind::UnmatchedClose, column: 2 });
        // columns count characters, not bytes
        assert_eq!(err("éé{"), ParseError { kind: ParseErrorKind::UnmatchedOpen, column: 2 });
    }

    #[test]
    fn round_trips_through_printer() {
        for text in ["", "Hello {}", "a{{b", "{{}}", "{}{}x}}", "ünïcode {} {{{}}}"] {
            assert_eq!(parse_template(text).unwrap().to_source(), text);
        }
    }
}
