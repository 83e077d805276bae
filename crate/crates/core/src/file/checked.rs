use alloc::vec::Vec;

use crate::syscall::{Descriptor, FakeFs, FixtureError, SysError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum State {
    Read,
    Eof,
    Close,
}

/// File whose protocol state lives in a runtime field.
///
/// Invariant: `state == Read` implies the cursor is strictly before the end
/// of the file, so `sys_read` is only ever issued when it cannot fault. The
/// end-of-file check runs right after `open` and right after each read, which
/// is what lets an empty file start out in `Eof`.
#[derive(Debug)]
pub struct CheckedFile<'fs> {
    fs: &'fs mut FakeFs,
    fd: Descriptor,
    state: State,
}

impl<'fs> CheckedFile<'fs> {
    pub fn open(fs: &'fs mut FakeFs, path: &str) -> Result<Self, FixtureError> {
        let fd = fs.sys_open(path)?;
        let at_eof = legal(fs.sys_eof(&fd));
        let state = if at_eof { State::Eof } else { State::Read };
        Ok(CheckedFile { fs, fd, state })
    }

    pub fn state(&self) -> State {
        self.state
    }

    /// Next chunk, or `None` when reading is not legal in the current state.
    pub fn read(&mut self) -> Option<Vec<u8>> {
        match self.state {
            State::Read => {
                let buf = legal(self.fs.sys_read(&mut self.fd));
                if legal(self.fs.sys_eof(&self.fd)) {
                    self.state = State::Eof;
                }
                Some(buf)
            }
            State::Eof | State::Close => None,
        }
    }

    /// `None` signals a double close.
    pub fn close(&mut self) -> Option<()> {
        match self.state {
            State::Read | State::Eof => {
                legal(self.fs.sys_close(&mut self.fd));
                self.state = State::Close;
                Some(())
            }
            State::Close => None,
        }
    }
}

fn legal<T>(result: Result<T, SysError>) -> T {
    match result {
        Ok(v) => v,
        Err(e) => panic!("checked file issued an illegal syscall: {e}"),
    }
}
