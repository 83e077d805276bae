// EXPECT: no method named `read` found
// Reading from a file that has already reached end-of-file.
use core::num::NonZeroUsize;
use typed_patterns::file::{ReadTransition, TypedFile};
use typed_patterns::syscall::FakeFs;

fn main() {
    let mut fs = FakeFs::new();
    fs.fixture_seed("f.txt", *b"hello", NonZeroUsize::new(2).unwrap());
    let mut f = TypedFile::open(&mut fs, "f.txt").unwrap();
    let f = loop {
        f = match f.read() {
            ReadTransition::Continue(f, _data) => f,
            ReadTransition::Finished(f) => break f,
        };
    };
    let _ = f.read(); // MISUSE
    f.close();
}
