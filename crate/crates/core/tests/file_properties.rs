use std::num::NonZeroUsize;

use proptest::prelude::*;
use typed_patterns::file::{drain, CheckedFile, NaiveFile};
use typed_patterns::syscall::{FakeFs, SyscallRecord};

fn seeded(content: &[u8], chunk: usize) -> FakeFs {
    let mut fs = FakeFs::new();
    fs.fixture_seed("f.txt", content, NonZeroUsize::new(chunk).unwrap());
    fs
}

/// Trace of open, read to EOF, close, computed from the chunking rule alone.
fn expected_drain_trace(path: &str, len: usize, chunk: usize) -> Vec<SyscallRecord> {
    let mut trace = vec![SyscallRecord::Open { path: path.into(), id: 1 }];
    let mut offset = 0;
    while offset < len {
        let n = chunk.min(len - offset);
        trace.push(SyscallRecord::Eof { id: 1, result: false });
        trace.push(SyscallRecord::Read { id: 1, bytes_returned: n });
        offset += n;
    }
    trace.push(SyscallRecord::Eof { id: 1, result: true });
    trace.push(SyscallRecord::Close { id: 1 });
    trace
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Eof,
    Read,
    Close,
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![Just(Op::Eof), Just(Op::Read), Just(Op::Close)]
}

proptest! {
    #[test]
    fn drain_conserves_content(content in prop::collection::vec(any::<u8>(), 0..200), chunk in 1usize..40) {
        let mut fs = seeded(&content, chunk);
        let chunks = drain(&mut fs, "f.txt").unwrap();
        prop_assert_eq!(chunks.concat(), content.clone());
        prop_assert!(chunks.iter().all(|c| !c.is_empty() && c.len() <= chunk));
        let expected = expected_drain_trace("f.txt", content.len(), chunk);
        prop_assert_eq!(fs.trace(), expected.as_slice());
        prop_assert!(fs.faults().is_empty());
    }

    #[test]
    fn checked_and_typestate_traces_match(len in 0usize..100, chunk in 1usize..20) {
        let content = vec![7u8; len];
        let mut typed = seeded(&content, chunk);
        drain(&mut typed, "f.txt").unwrap();

        let mut checked = seeded(&content, chunk);
        let mut f = CheckedFile::open(&mut checked, "f.txt").unwrap();
        while f.read().is_some() {}
        f.close().unwrap();

        prop_assert_eq!(typed.trace(), checked.trace());
    }

    /// Naive calls: the trace is a function of the call sequence, faulted
    /// calls leave no record, and a final EOF probe agrees with the bytes read.
    #[test]
    fn naive_read_accounting(len in 0usize..30, chunk in 1usize..8, ops in prop::collection::vec(op(), 0..40)) {
        let run = || {
            let mut fs = seeded(&vec![1u8; len], chunk);
            let mut f = NaiveFile::open(&mut fs, "f.txt").unwrap();
            for op in &ops {
                let _ = match op {
                    Op::Eof => f.eof().map(drop),
                    Op::Read => f.read().map(drop),
                    Op::Close => f.close(),
                };
            }
            let probe = f.eof().ok();
            (fs, probe)
        };
        let (fs, probe) = run();
        let (again, _) = run();
        prop_assert_eq!(fs.trace(), again.trace());

        let read: usize = fs.trace().iter().map(|r| match r {
            SyscallRecord::Read { bytes_returned, .. } => *bytes_returned,
            _ => 0,
        }).sum();
        prop_assert!(read <= len);
        if let Some(at_eof) = probe {
            prop_assert_eq!(at_eof, read == len);
        }
        // open + every op + the probe, each either recorded or faulted
        prop_assert_eq!(fs.trace().len() + fs.faults().len(), ops.len() + 2);
    }

    #[test]
    fn checked_calls_never_fault(len in 0usize..30, chunk in 1usize..8, ops in prop::collection::vec(any::<bool>(), 0..40)) {
        let mut fs = seeded(&vec![0u8; len], chunk);
        let mut f = CheckedFile::open(&mut fs, "f.txt").unwrap();

        #[derive(PartialEq)]
        enum Model { Read, Eof, Close }
        let mut remaining = len;
        let mut model = if len == 0 { Model::Eof } else { Model::Read };
        for read in ops {
            if read {
                let expected = (model == Model::Read).then(|| {
                    let n = chunk.min(remaining);
                    remaining -= n;
                    if remaining == 0 { model = Model::Eof; }
                    n
                });
                prop_assert_eq!(f.read().map(|c| c.len()), expected);
            } else {
                let expected = (model != Model::Close).then_some(());
                model = Model::Close;
                prop_assert_eq!(f.close(), expected);
            }
        }
        prop_assert!(fs.faults().is_empty());
    }
}

#[test]
fn canonical_three_chunk_trace() {
    let mut fs = seeded(b"0123456789", 4);
    drain(&mut fs, "f.txt").unwrap();
    let lines: Vec<String> = fs.trace().iter().map(ToString::to_string).collect();
    assert_eq!(
        lines,
        [
            "open(f.txt) -> 1",
            "eof(1) -> false",
            "read(1) -> 4",
            "eof(1) -> false",
            "read(1) -> 4",
            "eof(1) -> false",
            "read(1) -> 2",
            "eof(1) -> true",
            "close(1)",
        ]
    );
}

#[test]
fn naive_misuse_sequence() {
    // read x3 past EOF, close twice, read after close
    let mut fs = seeded(b"abcd", 2);
    let mut f = NaiveFile::open(&mut fs, "f.txt").unwrap();
    let reads: Vec<_> = (0..3).map(|_| f.read().map_err(|e| e.fault_code())).collect();
    assert!(reads[0].is_ok() && reads[1].is_ok());
    assert_eq!(reads[2], Err(Some(typed_patterns::FaultCode::ReadPastEof)));
    f.close().unwrap();
    assert!(f.close().is_err());
    assert!(f.read().is_err());
}
