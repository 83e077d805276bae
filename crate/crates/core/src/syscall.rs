//! In-memory stand-in for the operating system's low-level file API.
//!
//! [`FakeFs`] owns seeded file contents and the live descriptor table. The
//! four syscalls (`sys_open`, `sys_eof`, `sys_read`, `sys_close`) enforce the
//! file protocol at runtime: misuse is reported as a [`Fault`] rather than
//! being prevented. Every successful syscall appends one [`SyscallRecord`] to
//! the trace; a faulting call aborts before it completes and records nothing.
//!
//! Reads are chunked: each `sys_read` returns `min(chunk_size, remaining)`
//! bytes, so a file is never signalled as finished in-band. Callers learn
//! about the end of the file only through `sys_eof`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::num::NonZeroUsize;

use crate::fault::{Fault, FaultCode};

/// Chunk size used until a fixture overrides it.
pub const DEFAULT_CHUNK_SIZE: NonZeroUsize = match NonZeroUsize::new(1024) {
    Some(n) => n,
    None => unreachable!(),
};

/// Opaque handle naming one live entry in a [`FakeFs`].
///
/// Not `Clone`: every descriptor value is produced by exactly one `sys_open`.
#[derive(Debug, PartialEq, Eq)]
pub struct Descriptor {
    id: u64,
}

impl Descriptor {
    pub fn id(&self) -> u64 {
        self.id
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescriptorState {
    pub path: String,
    pub cursor: usize,
    pub open: bool,
}

/// One completed syscall.
///
/// `Display` gives the canonical one-line serialization used by golden tests
/// and the CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyscallRecord {
    Open { path: String, id: u64 },
    Eof { id: u64, result: bool },
    Read { id: u64, bytes_returned: usize },
    Close { id: u64 },
}

impl fmt::Display for SyscallRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyscallRecord::Open { path, id } => write!(f, "open({path}) -> {id}"),
            SyscallRecord::Eof { id, result } => write!(f, "eof({id}) -> {result}"),
            SyscallRecord::Read { id, bytes_returned } => write!(f, "read({id}) -> {bytes_returned}"),
            SyscallRecord::Close { id } => write!(f, "close({id})"),
        }
    }
}

/// A test-setup bug, as opposed to a protocol violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureError {
    UnseededPath(String),
    /// The descriptor was not issued by this filesystem.
    UnknownDescriptor(u64),
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureError::UnseededPath(path) => write!(f, "fixture error: no file seeded at `{path}`"),
            FixtureError::UnknownDescriptor(id) => {
                write!(f, "fixture error: descriptor {id} does not belong to this filesystem")
            }
        }
    }
}

impl core::error::Error for FixtureError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SysError {
    Misuse(Fault),
    Fixture(FixtureError),
}

impl SysError {
    /// The fault code, if this is a protocol violation.
    pub fn fault_code(&self) -> Option<FaultCode> {
        match self {
            SysError::Misuse(fault) => Some(fault.code()),
            SysError::Fixture(_) => None,
        }
    }
}

impl From<Fault> for SysError {
    fn from(fault: Fault) -> Self {
        SysError::Misuse(fault)
    }
}

impl From<FixtureError> for SysError {
    fn from(err: FixtureError) -> Self {
        SysError::Fixture(err)
    }
}

impl fmt::Display for SysError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SysError::Misuse(fault) => fault.fmt(f),
            SysError::Fixture(err) => err.fmt(f),
        }
    }
}

impl core::error::Error for SysError {}

#[derive(Debug, Clone)]
pub struct FakeFs {
    files: BTreeMap<String, Vec<u8>>,
    chunk_size: NonZeroUsize,
    live: BTreeMap<u64, DescriptorState>,
    next_id: u64,
    trace: Vec<SyscallRecord>,
    faults: Vec<FaultCode>,
}

impl Default for FakeFs {
    fn default() -> Self {
        Self::new()
    }
}

impl FakeFs {
    pub fn new() -> Self {
        FakeFs {
            files: BTreeMap::new(),
            chunk_size: DEFAULT_CHUNK_SIZE,
            live: BTreeMap::new(),
            next_id: 1,
            trace: Vec::new(),
            faults: Vec::new(),
        }
    }

    /// Seeds `path` with `content` and sets the read chunk size.
    ///
    /// Overwrites any existing file at `path`. Does not touch the trace.
    pub fn fixture_seed(&mut self, path: &str, content: impl Into<Vec<u8>>, chunk_size: NonZeroUsize) {
        self.files.insert(path.into(), content.into());
        self.chunk_size = chunk_size;
    }

    pub fn chunk_size(&self) -> NonZeroUsize {
        self.chunk_size
    }

    pub fn sys_open(&mut self, path: &str) -> Result<Descriptor, FixtureError> {
        if !self.files.contains_key(path) {
            return Err(FixtureError::UnseededPath(path.into()));
        }
        let id = self.next_id;
        self.next_id += 1;
        self.live.insert(id, DescriptorState { path: path.into(), cursor: 0, open: true });
        self.trace.push(SyscallRecord::Open { path: path.into(), id });
        Ok(Descriptor { id })
    }

    pub fn sys_eof(&mut self, fd: &Descriptor) -> Result<bool, SysError> {
        let (state, content) = self.lookup(fd)?;
        if !state.open {
            return Err(self.fault(FaultCode::EofAfterClose));
        }
        // `>=`: re-seeding a path can shrink it under an open descriptor.
        let result = state.cursor >= content.len();
        self.trace.push(SyscallRecord::Eof { id: fd.id, result });
        Ok(result)
    }

    pub fn sys_read(&mut self, fd: &mut Descriptor) -> Result<Vec<u8>, SysError> {
        let (state, content) = self.lookup(fd)?;
        if !state.open {
            return Err(self.fault(FaultCode::ReadAfterClose));
        }
        let start = state.cursor;
        if start >= content.len() {
            return Err(self.fault(FaultCode::ReadPastEof));
        }
        let end = start + self.chunk_size.get().min(content.len() - start);
        let chunk = content[start..end].to_vec();
        if let Some(state) = self.live.get_mut(&fd.id) {
            state.cursor = end;
        }
        self.trace.push(SyscallRecord::Read { id: fd.id, bytes_returned: chunk.len() });
        Ok(chunk)
    }

    pub fn sys_close(&mut self, fd: &mut Descriptor) -> Result<(), SysError> {
        let (state, _) = self.lookup(fd)?;
        if !state.open {
            return Err(self.fault(FaultCode::DoubleClose));
        }
        if let Some(state) = self.live.get_mut(&fd.id) {
            state.open = false;
        }
        self.trace.push(SyscallRecord::Close { id: fd.id });
        Ok(())
    }

    pub fn trace_snapshot(&self) -> Vec<SyscallRecord> {
        self.trace.clone()
    }

    pub fn trace(&self) -> &[SyscallRecord] {
        &self.trace
    }

    /// Every fault raised so far, in order.
    pub fn faults(&self) -> &[FaultCode] {
        &self.faults
    }

    pub fn descriptor_state(&self, fd: &Descriptor) -> Option<&DescriptorState> {
        self.live.get(&fd.id)
    }

    fn lookup(&self, fd: &Descriptor) -> Result<(&DescriptorState, &[u8]), FixtureError> {
        let state = self.live.get(&fd.id).ok_or(FixtureError::UnknownDescriptor(fd.id))?;
        let content = self.files.get(&state.path).map(Vec::as_slice).unwrap_or(&[]);
        Ok((state, content))
    }

    fn fault(&mut self, code: FaultCode) -> SysError {
        self.faults.push(code);
        SysError::Misuse(Fault::new(code))
    }
}

/// Renders a trace one record per line, each line newline-terminated.
pub fn serialize_trace(trace: &[SyscallRecord]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for record in trace {
        let _ = writeln!(out, "{record}");
    }
    out
}
