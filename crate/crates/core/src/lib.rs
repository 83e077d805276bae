//! Four typed design patterns, each shipped twice: once in an encoding that
//! compiles but lets callers trip runtime faults, and once in an encoding where
//! the same mistakes are type errors.
//!
//! | pattern        | hazard encoding                  | typed encoding                    |
//! |----------------|----------------------------------|-----------------------------------|
//! | Witness        | [`witness::is_admin`] flag       | [`witness::AdminToken`]           |
//! | State machine  | [`file::NaiveFile`], [`file::CheckedFile`] | [`file::TypedFile`]     |
//! | Parallel lists | [`formatter::format_dynamic`]    | [`formatter::Format`] over h-lists |
//! | Registry       | [`registry::StringRegistry`]     | [`registry::TypedRegistry`]       |
//!
//! The crate is `no_std` and needs only `alloc`. The simulated filesystem in
//! [`syscall`] stands in for the operating system.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod fault;
pub mod file;
pub mod formatter;
pub mod registry;
pub mod syscall;
pub mod witness;

pub use fault::{Fault, FaultCode};
