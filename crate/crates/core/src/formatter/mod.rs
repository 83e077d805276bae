//! Printf-style formatting with two lists in parallel: template holes and
//! arguments.
//!
//! The dynamic encoding ([`Template`], [`format_dynamic`]) keeps both lists as
//! vectors, so a length mismatch is only discovered while formatting: too few
//! arguments fault with [`FaultCode::TooFewArgs`], too many are silently
//! dropped. [`format_checked`] is the strict runtime variant used by the CLI.
//!
//! The static encoding ([`HNil`]/[`HCons`] with the [`Format`] trait) makes
//! the shape of both lists part of their types. `Format<Args>` is implemented
//! only when every [`Hole`] lines up with exactly one argument, so a mismatch
//! is a type error. Static templates are written in source with
//! [`template!`](crate::template); runtime text can only ever become a dynamic
//! [`Template`], since its shape is unknown at compile time.
//!
//! [`FaultCode::TooFewArgs`]: crate::fault::FaultCode::TooFewArgs

mod dynamic;
mod hlist;
mod parse;

pub use dynamic::{format_checked, format_dynamic, ArityError, Template, TemplateElement};
pub use hlist::{format_static, Format, HCons, HNil, Hole, Lit, StaticArgs, StaticTemplate};
pub use parse::{parse_template, ParseError, ParseErrorKind};
