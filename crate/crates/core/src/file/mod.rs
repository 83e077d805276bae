//! Client-facing encodings of the file protocol over [`FakeFs`].
//!
//! ```text
//!  sys_open    sys_read (loop)
//!     │          ┌──┐
//!     ▼          ▼  │  sys_read
//!   Read ───────────────────▶ Eof
//!     │                        │
//!     └── sys_close ─▶ Close ◀─┘ sys_close
//! ```
//!
//! - [`NaiveFile`] forwards straight to the syscalls and lets every misuse
//!   reach the simulated kernel.
//! - [`CheckedFile`] tracks the state in a field and answers illegal calls with
//!   `None`. It never issues a faulting syscall, but callers still find out
//!   about mistakes only at runtime.
//! - [`TypedFile`] carries the state in its type parameter and consumes itself
//!   on every transition, so the mistakes above do not compile.
//!
//! Each handle holds the `&mut FakeFs` it was opened on, so at most one
//! handle per filesystem is alive at a time.
//!
//! [`FakeFs`]: crate::syscall::FakeFs

mod checked;
mod naive;
mod typestate;

pub use checked::{CheckedFile, State};
pub use naive::NaiveFile;
pub use typestate::{drain, EofState, ReadTransition, ReadingState, TypedFile};
