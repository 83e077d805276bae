use alloc::vec::Vec;
use core::marker::PhantomData;

use crate::syscall::{Descriptor, FakeFs, FixtureError, SysError};

/// Reading state: more data may be available.
#[derive(Debug)]
pub enum ReadingState {}

/// End-of-file state: the only legal move is closing.
#[derive(Debug)]
pub enum EofState {}

/// File whose protocol state is the type parameter `S`.
///
/// Every transition takes `self` by value, so a handle that has been read or
/// closed can no longer be named. `read` exists only on
/// `TypedFile<ReadingState>`; `close` is defined once for every state.
///
/// ```
/// use core::num::NonZeroUsize;
/// use typed_patterns::file::{ReadTransition, TypedFile};
/// use typed_patterns::syscall::FakeFs;
///
/// let mut fs = FakeFs::new();
/// fs.fixture_seed("f.txt", *b"hello", NonZeroUsize::new(2).unwrap());
/// let mut f = TypedFile::open(&mut fs, "f.txt").unwrap();
/// let mut data = Vec::new();
/// let f = loop {
///     f = match f.read() {
///         ReadTransition::Continue(f, chunk) => {
///             data.extend(chunk);
///             f
///         }
///         ReadTransition::Finished(f) => break f,
///     };
/// };
/// f.close();
/// assert_eq!(data, b"hello");
/// ```
#[derive(Debug)]
pub struct TypedFile<'fs, S> {
    fs: &'fs mut FakeFs,
    fd: Descriptor,
    _state: PhantomData<S>,
}

/// Outcome of reading: either a chunk and a handle still in the reading
/// state, or a handle that has reached the end of the file.
#[derive(Debug)]
pub enum ReadTransition<'fs> {
    Continue(TypedFile<'fs, ReadingState>, Vec<u8>),
    Finished(TypedFile<'fs, EofState>),
}

impl<'fs> TypedFile<'fs, ReadingState> {
    pub fn open(fs: &'fs mut FakeFs, path: &str) -> Result<Self, FixtureError> {
        let fd = fs.sys_open(path)?;
        Ok(TypedFile { fs, fd, _state: PhantomData })
    }

    pub fn read(mut self) -> ReadTransition<'fs> {
        if legal(self.fs.sys_eof(&self.fd)) {
            ReadTransition::Finished(self.transition())
        } else {
            let buf = legal(self.fs.sys_read(&mut self.fd));
            ReadTransition::Continue(self, buf)
        }
    }
}

impl<'fs, S> TypedFile<'fs, S> {
    pub fn close(mut self) {
        legal(self.fs.sys_close(&mut self.fd));
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.fd
    }

    fn transition<T>(self) -> TypedFile<'fs, T> {
        TypedFile { fs: self.fs, fd: self.fd, _state: PhantomData }
    }
}

// A typed handle can only reach a syscall in a state where it is legal, so an
// error here means the filesystem was tampered with behind the handle.
fn legal<T>(result: Result<T, SysError>) -> T {
    match result {
        Ok(v) => v,
        Err(e) => panic!("typestate file issued an illegal syscall: {e}"),
    }
}

/// Opens `path`, reads it to the end through the typestate API and closes it.
pub fn drain(fs: &mut FakeFs, path: &str) -> Result<Vec<Vec<u8>>, FixtureError> {
    let mut chunks = Vec::new();
    let mut f = TypedFile::open(fs, path)?;
    let f = loop {
        f = match f.read() {
            ReadTransition::Continue(f, chunk) => {
                chunks.push(chunk);
                f
            }
            ReadTransition::Finished(f) => break f,
        };
    };
    f.close();
    Ok(chunks)
}
