use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::fault::{Fault, FaultCode};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TemplateElement {
    /// Text copied verbatim. Braces here are literal characters, not escapes.
    Literal(String),
    Hole,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Template {
    elements: Vec<TemplateElement>,
    arity: usize,
}

impl Template {
    pub fn new(elements: Vec<TemplateElement>) -> Self {
        let arity = elements.iter().filter(|e| matches!(e, TemplateElement::Hole)).count();
        Template { elements, arity }
    }

    pub fn elements(&self) -> &[TemplateElement] {
        &self.elements
    }

    /// Number of holes.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Renders back to template syntax: holes as `{}`, literal braces doubled.
    pub fn to_source(&self) -> String {
        self.to_string()
    }
}

impl From<Vec<TemplateElement>> for Template {
    fn from(elements: Vec<TemplateElement>) -> Self {
        Template::new(elements)
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for element in &self.elements {
            match element {
                TemplateElement::Hole => f.write_str("{}")?,
                TemplateElement::Literal(text) => {
                    for c in text.chars() {
                        match c {
                            '{' => f.write_str("{{")?,
                            '}' => f.write_str("}}")?,
                            c => fmt::Write::write_char(f, c)?,
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Fills holes with `args` in order.
///
/// Faults with `TOO_FEW_ARGS` when a hole has no argument left. Arguments
/// beyond the template's arity are ignored.
pub fn format_dynamic(tpl: &Template, args: &[&dyn ToString]) -> Result<String, Fault> {
    let mut args = args.iter();
    let mut out = String::new();
    for element in &tpl.elements {
        match element {
            TemplateElement::Literal(text) => out.push_str(text),
            TemplateElement::Hole => {
                let arg = args.next().ok_or(Fault::new(FaultCode::TooFewArgs))?;
                out.push_str(&arg.to_string());
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArityError {
    pub expected: usize,
    pub got: usize,
}

impl fmt::Display for ArityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arity error: expected {}, got {}", self.expected, self.got)
    }
}

impl core::error::Error for ArityError {}

/// Like [`format_dynamic`], but rejects any argument count that differs from
/// the template's arity.
pub fn format_checked(tpl: &Template, args: &[&dyn ToString]) -> Result<String, ArityError> {
    if args.len() != tpl.arity {
        return Err(ArityError { expected: tpl.arity, got: args.len() });
    }
    Ok(format_dynamic(tpl, args).expect("argument count matches arity"))
}
