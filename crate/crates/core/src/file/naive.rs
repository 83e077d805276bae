use alloc::vec::Vec;

use crate::syscall::{Descriptor, FakeFs, FixtureError, SysError};

/// Thin wrapper over the syscalls. Offers no protection at all.
#[derive(Debug)]
pub struct NaiveFile<'fs> {
    fs: &'fs mut FakeFs,
    fd: Descriptor,
}

impl<'fs> NaiveFile<'fs> {
    pub fn open(fs: &'fs mut FakeFs, path: &str) -> Result<Self, FixtureError> {
        let fd = fs.sys_open(path)?;
        Ok(NaiveFile { fs, fd })
    }

    pub fn eof(&mut self) -> Result<bool, SysError> {
        self.fs.sys_eof(&self.fd)
    }

    pub fn read(&mut self) -> Result<Vec<u8>, SysError> {
        self.fs.sys_read(&mut self.fd)
    }

    pub fn close(&mut self) -> Result<(), SysError> {
        self.fs.sys_close(&mut self.fd)
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.fd
    }
}
