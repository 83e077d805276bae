// EXPECT: use of moved value
// Closing a file twice: the first close consumes the handle.
use core::num::NonZeroUsize;
use typed_patterns::file::TypedFile;
use typed_patterns::syscall::FakeFs;

fn main() {
    let mut fs = FakeFs::new();
    fs.fixture_seed("f.txt", *b"hello", NonZeroUsize::new(2).unwrap());
    let f = TypedFile::open(&mut fs, "f.txt").unwrap();
    f.close();
    f.close(); // MISUSE
}
