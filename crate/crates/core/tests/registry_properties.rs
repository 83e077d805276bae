use proptest::prelude::*;
use typed_patterns::registry::events::{OnClick, OnKeyPress, OnScroll};
use typed_patterns::registry::{Invocation, InvocationLog, LoggedEvent, StringRegistry, TypedRegistry};

#[derive(Debug, Clone)]
enum Step {
    Register(usize),
    Trigger(usize, u8),
}

fn step() -> impl Strategy<Value = Step> {
    prop_oneof![(0usize..3).prop_map(Step::Register), (0usize..3, any::<u8>()).prop_map(|(k, p)| Step::Trigger(k, p))]
}

fn name(kind: usize) -> &'static str {
    [OnClick::NAME, OnKeyPress::NAME, OnScroll::NAME][kind]
}

fn payload_text(kind: usize, p: u8) -> String {
    match kind {
        0 => OnClick { mouse_x: p as usize, mouse_y: 3 }.render(),
        1 => OnKeyPress { key: char::from(b'a' + p % 26) }.render(),
        _ => OnScroll { delta: p as i32 - 128 }.render(),
    }
}

/// What a correct registry must log: every listener registered for the
/// triggered kind so far, in registration order, and nothing else.
fn model(script: &[Step]) -> Vec<Invocation> {
    let mut counts = [0usize; 3];
    let mut log = Vec::new();
    for step in script {
        match *step {
            Step::Register(k) => counts[k] += 1,
            Step::Trigger(k, p) => {
                for listener in 0..counts[k] {
                    log.push(Invocation { event: name(k).into(), payload: payload_text(k, p), listener });
                }
            }
        }
    }
    log
}

fn run_typed(script: &[Step]) -> Vec<Invocation> {
    let log = InvocationLog::shared();
    let mut events = TypedRegistry::new();
    for step in script {
        match *step {
            Step::Register(0) => {
                events.register_logger::<OnClick>(&log);
            }
            Step::Register(1) => {
                events.register_logger::<OnKeyPress>(&log);
            }
            Step::Register(_) => {
                events.register_logger::<OnScroll>(&log);
            }
            Step::Trigger(0, p) => events.trigger(&OnClick { mouse_x: p as usize, mouse_y: 3 }),
            Step::Trigger(1, p) => events.trigger(&OnKeyPress { key: char::from(b'a' + p % 26) }),
            Step::Trigger(_, p) => events.trigger(&OnScroll { delta: p as i32 - 128 }),
        }
    }
    let entries = log.borrow().entries().to_vec();
    entries
}

fn run_string(script: &[Step]) -> Vec<Invocation> {
    let log = InvocationLog::shared();
    let mut events = StringRegistry::new();
    for step in script {
        let result = match *step {
            Step::Register(0) => {
                events.register_logger::<OnClick>(OnClick::NAME, &log);
                Ok(())
            }
            Step::Register(1) => {
                events.register_logger::<OnKeyPress>(OnKeyPress::NAME, &log);
                Ok(())
            }
            Step::Register(_) => {
                events.register_logger::<OnScroll>(OnScroll::NAME, &log);
                Ok(())
            }
            Step::Trigger(0, p) => events.trigger(OnClick::NAME, &OnClick { mouse_x: p as usize, mouse_y: 3 }),
            Step::Trigger(1, p) => events.trigger(OnKeyPress::NAME, &OnKeyPress { key: char::from(b'a' + p % 26) }),
            Step::Trigger(_, p) => events.trigger(OnScroll::NAME, &OnScroll { delta: p as i32 - 128 }),
        };
        result.expect("consistent keys and payloads never fault");
    }
    let entries = log.borrow().entries().to_vec();
    entries
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn typed_registry_matches_model(script in prop::collection::vec(step(), 0..40)) {
        prop_assert_eq!(run_typed(&script), model(&script));
    }

    #[test]
    fn encodings_agree_on_consistent_scripts(script in prop::collection::vec(step(), 0..40)) {
        prop_assert_eq!(run_string(&script), run_typed(&script));
    }

    #[test]
    fn counts_are_isolated(script in prop::collection::vec(0usize..3, 0..30)) {
        let mut events = TypedRegistry::new();
        for &k in &script {
            match k {
                0 => events.register(|_: &OnClick| {}),
                1 => events.register(|_: &OnKeyPress| {}),
                _ => events.register(|_: &OnScroll| {}),
            }
        }
        let expected = |kind| script.iter().filter(|&&k| k == kind).count();
        prop_assert_eq!(events.count::<OnClick>(), expected(0));
        prop_assert_eq!(events.count::<OnKeyPress>(), expected(1));
        prop_assert_eq!(events.count::<OnScroll>(), expected(2));
    }
}

#[test]
fn click_scenario_values() {
    let log = InvocationLog::shared();
    let mut events = TypedRegistry::new();
    events.register_logger::<OnClick>(&log);
    events.register(|ev: &OnClick| assert_eq!((ev.mouse_x, ev.mouse_y), (1, 3)));
    events.register_logger::<OnKeyPress>(&log);
    events.trigger(&OnClick { mouse_x: 1, mouse_y: 3 });
    events.trigger(&OnKeyPress { key: 'k' });
    assert_eq!(log.borrow().render(), "OnClick#0 mouse_x=1 mouse_y=3\nOnKeyPress#0 key=k\n");
}
