//! The demo subcommands, as pure functions from arguments to output.

use std::fmt::Write;
use std::num::NonZeroUsize;

use typed_patterns::file::drain;
use typed_patterns::formatter::{format_checked, parse_template};
use typed_patterns::registry::events::{OnClick, OnKeyPress};
use typed_patterns::registry::{InvocationLog, TypedRegistry};
use typed_patterns::syscall::{serialize_trace, FakeFs};
use typed_patterns::witness::{find_fixture_user, route_admin_panel};

use crate::exit;

/// What a command prints and how it exits.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: exit::SUCCESS, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

/// Splits a comma-separated argument list. An absent or empty list means no
/// arguments.
pub fn split_args(csv: Option<&str>) -> Vec<String> {
    match csv {
        None | Some("") => Vec::new(),
        Some(csv) => csv.split(',').map(str::to_owned).collect(),
    }
}

pub fn cmd_format(template: &str, args: Option<&str>) -> Outcome {
    let tpl = match parse_template(template) {
        Ok(tpl) => tpl,
        Err(e) => return Outcome::fail(exit::USAGE, format!("parse error: {e}\n")),
    };
    let args = split_args(args);
    let refs: Vec<&dyn ToString> = args.iter().map(|a| a as &dyn ToString).collect();
    match format_checked(&tpl, &refs) {
        Ok(text) => Outcome::ok(format!("{text}\n")),
        Err(e) => Outcome::fail(exit::USAGE, format!("{e}\n")),
    }
}

/// Seeds `path`, drains it through the typestate file API and prints the
/// chunks followed by the syscall trace.
pub fn cmd_file(path: &str, content: &str, chunk_size: usize) -> Outcome {
    let Some(chunk_size) = NonZeroUsize::new(chunk_size) else {
        return Outcome::fail(exit::USAGE, "usage error: --chunk-size must be at least 1\n".into());
    };
    let mut fs = FakeFs::new();
    fs.fixture_seed(path, content.as_bytes(), chunk_size);
    let chunks = drain(&mut fs, path).expect("path was just seeded");

    let mut out = String::new();
    for (i, chunk) in chunks.iter().enumerate() {
        let _ = writeln!(out, "chunk {i}: {}", chunk.escape_ascii());
    }
    out.push_str(&serialize_trace(fs.trace()));
    Outcome::ok(out)
}

/// Replays the click/key-press scenario on the typed registry.
pub fn cmd_events(empty: bool) -> Outcome {
    let log = InvocationLog::shared();
    if !empty {
        let mut events = TypedRegistry::new();
        events.register_logger::<OnClick>(&log);
        events.register_logger::<OnClick>(&log);
        events.register_logger::<OnKeyPress>(&log);
        events.trigger(&OnClick { mouse_x: 1, mouse_y: 3 });
        events.trigger(&OnKeyPress { key: 'a' });
    }
    let rendered = log.borrow().render();
    Outcome::ok(rendered)
}

pub fn cmd_admin(user: &str) -> Outcome {
    match find_fixture_user(user) {
        Some(user) => Outcome::ok(format!("{}\n", route_admin_panel(&user).body)),
        None => Outcome::fail(exit::USAGE, format!("unknown user `{user}`\n")),
    }
}
