use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Template, TemplateElement};

/// The empty list, for both templates and arguments.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HNil;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HCons<H, T> {
    pub head: H,
    pub tail: T,
}

/// Literal template text.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lit(pub String);

impl From<&str> for Lit {
    fn from(s: &str) -> Self {
        Lit(s.into())
    }
}

impl From<String> for Lit {
    fn from(s: String) -> Self {
        Lit(s)
    }
}

/// A template hole; consumes one argument.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Hole;

/// Formatting by simultaneous induction over a template list and an argument
/// list.
///
/// - `HNil` formats the empty argument list to `""`.
/// - `HCons<Lit, _>` emits its text and recurses with the same arguments.
/// - `HCons<Hole, _>` takes the head of an `HCons<T, _>` argument list and
///   recurses on both tails.
///
/// No other combination is implemented, so a template can only be formatted
/// with as many arguments as it has holes.
#[diagnostic::on_unimplemented(
    message = "template `{Self}` cannot be filled with arguments `{Args}`",
    label = "hole count and argument count differ",
    note = "every `{{}}` in the template needs exactly one argument"
)]
pub trait Format<Args> {
    fn format_into(&self, args: Args, out: &mut String);

    fn format(&self, args: Args) -> String {
        let mut out = String::new();
        self.format_into(args, &mut out);
        out
    }
}

impl Format<HNil> for HNil {
    fn format_into(&self, _args: HNil, _out: &mut String) {}
}

impl<Args, Rest> Format<Args> for HCons<Lit, Rest>
where
    Rest: Format<Args>,
{
    fn format_into(&self, args: Args, out: &mut String) {
        out.push_str(&self.head.0);
        self.tail.format_into(args, out);
    }
}

impl<T, Args, Rest> Format<HCons<T, Args>> for HCons<Hole, Rest>
where
    Rest: Format<Args>,
    T: ToString,
{
    fn format_into(&self, args: HCons<T, Args>, out: &mut String) {
        out.push_str(&args.head.to_string());
        self.tail.format_into(args.tail, out);
    }
}

pub fn format_static<Args, T: Format<Args>>(tpl: &T, args: Args) -> String {
    tpl.format(args)
}

/// A template h-list: every head is a [`Lit`] or a [`Hole`].
pub trait StaticTemplate {
    const HOLES: usize;

    fn push_elements(&self, out: &mut Vec<TemplateElement>);

    /// The equivalent dynamic template. Elements map one-to-one, so adjacent
    /// literals stay separate.
    fn to_template(&self) -> Template {
        let mut elements = Vec::new();
        self.push_elements(&mut elements);
        Template::new(elements)
    }
}

impl StaticTemplate for HNil {
    const HOLES: usize = 0;

    fn push_elements(&self, _out: &mut Vec<TemplateElement>) {}
}

impl<Rest: StaticTemplate> StaticTemplate for HCons<Lit, Rest> {
    const HOLES: usize = Rest::HOLES;

    fn push_elements(&self, out: &mut Vec<TemplateElement>) {
        out.push(TemplateElement::Literal(self.head.0.clone()));
        self.tail.push_elements(out);
    }
}

impl<Rest: StaticTemplate> StaticTemplate for HCons<Hole, Rest> {
    const HOLES: usize = 1 + Rest::HOLES;

    fn push_elements(&self, out: &mut Vec<TemplateElement>) {
        out.push(TemplateElement::Hole);
        self.tail.push_elements(out);
    }
}

/// An argument h-list of stringifiable values.
pub trait StaticArgs {
    const LEN: usize;

    fn render_into(&self, out: &mut Vec<String>);
}

impl StaticArgs for HNil {
    const LEN: usize = 0;

    fn render_into(&self, _out: &mut Vec<String>) {}
}

impl<H: ToString, Rest: StaticArgs> StaticArgs for HCons<H, Rest> {
    const LEN: usize = 1 + Rest::LEN;

    fn render_into(&self, out: &mut Vec<String>) {
        out.push(self.head.to_string());
        self.tail.render_into(out);
    }
}

/// Builds a static template. `{}` is a hole; any other expression becomes a
/// [`Lit`] through `From`.
///
/// ```
/// use typed_patterns::{args, template};
/// use typed_patterns::formatter::Format;
///
/// let tpl = template!["Hello ", {}, "!"];
/// assert_eq!(tpl.format(args!["World"]), "Hello World!");
/// ```
#[macro_export]
macro_rules! template {
    () => { $crate::formatter::HNil };
    ({} $(, $($rest:tt)*)?) => {
        $crate::formatter::HCons {
            head: $crate::formatter::Hole,
            tail: $crate::template!($($($rest)*)?),
        }
    };
    ($lit:expr $(, $($rest:tt)*)?) => {
        $crate::formatter::HCons {
            head: <$crate::formatter::Lit as ::core::convert::From<_>>::from($lit),
            tail: $crate::template!($($($rest)*)?),
        }
    };
}

/// Builds an argument h-list.
#[macro_export]
macro_rules! args {
    () => { $crate::formatter::HNil };
    ($head:expr $(, $rest:expr)* $(,)?) => {
        $crate::formatter::HCons { head: $head, tail: $crate::args!($($rest),*) }
    };
}
