// EXPECT: expected `HCons<_, HNil>`, found `HNil`
// Formatting a one-hole template with no arguments.
use typed_patterns::formatter::Format;
use typed_patterns::{args, template};

fn main() {
    let tpl = template!["Hello ", {}];
    assert_eq!("Hello World", tpl.format(args!["World"]));
    let _ = tpl.format(args![]); // MISUSE
}
