// EXPECT: cannot find struct, variant or union type `OnClack`
// Triggering an event type that does not exist.
use typed_patterns::registry::events::{OnClick, OnKeyPress};
use typed_patterns::registry::TypedRegistry;

fn main() {
    let mut events = TypedRegistry::new();
    events.register(|ev: &OnClick| assert_eq!(ev.mouse_x, 1));
    events.register(|_: &OnKeyPress| {});
    events.trigger(&OnClick { mouse_x: 1, mouse_y: 3 });
    events.trigger(&OnKeyPress { key: 'a' });
    events.trigger(&OnClack { mouse_x: 1, mouse_y: 3 }); // MISUSE
}
