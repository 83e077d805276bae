// EXPECT: expected `HNil`, found `HCons<&str, HNil>`
// Formatting an empty template with one argument.
use typed_patterns::formatter::Format;
use typed_patterns::{args, template};

fn main() {
    assert_eq!("", template![].format(args![]));
    let _ = template![].format(args!["extra"]); // MISUSE
}
