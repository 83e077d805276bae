//! Command-line front end for `typed-patterns`, plus the harness that checks
//! every "does not compile" claim against the real compiler.

pub mod commands;
pub mod misuse;

pub use commands::Outcome;
pub use misuse::{CorpusReport, EntryOutcome, Harness, HarnessError, MisuseEntry};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// A runtime hazard was demonstrated, or a corpus check failed.
    pub const HAZARD: i32 = 1;
    pub const USAGE: i32 = 2;
}
