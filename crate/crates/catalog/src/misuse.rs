//! Negative-compilation harness.
//!
//! A corpus is a directory of standalone `.rs` programs that use
//! `typed-patterns`. Each file starts with a header comment
//! `// EXPECT: <marker>` and tags exactly one line with a trailing
//! `// MISUSE` comment. An entry passes when it fails to compile and the
//! compiler's diagnostics contain the marker. In sanity mode the tagged line is
//! deleted and the program must then compile cleanly, which shows the entry
//! fails for the reason it claims to.
//!
//! Entries are checked with `cargo check` in a scratch package that depends on
//! the `typed-patterns` crate by path.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

pub const EXPECT_PREFIX: &str = "// EXPECT:";
pub const MISUSE_TAG: &str = "// MISUSE";

#[derive(Debug)]
pub enum HarnessError {
    /// `cargo` could not be started.
    CompilerUnavailable(io::Error),
    MissingCrate(PathBuf),
    MalformedEntry {
        id: String,
        reason: &'static str,
    },
    Io(io::Error),
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::CompilerUnavailable(e) => write!(f, "environment error: cannot run cargo: {e}"),
            HarnessError::MissingCrate(path) => {
                write!(f, "environment error: no Cargo.toml under {}", path.display())
            }
            HarnessError::MalformedEntry { id, reason } => write!(f, "malformed entry {id}: {reason}"),
            HarnessError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for HarnessError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            HarnessError::CompilerUnavailable(e) | HarnessError::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for HarnessError {
    fn from(e: io::Error) -> Self {
        HarnessError::Io(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisuseEntry {
    pub id: String,
    pub source: String,
    pub expected_marker: String,
}

impl MisuseEntry {
    pub fn parse(id: impl Into<String>, source: impl Into<String>) -> Result<Self, HarnessError> {
        let id = id.into();
        let source = source.into();
        let malformed = |reason| HarnessError::MalformedEntry { id: id.clone(), reason };

        let marker = source
            .lines()
            .find_map(|line| line.trim().strip_prefix(EXPECT_PREFIX))
            .map(str::trim)
            .ok_or_else(|| malformed("missing `// EXPECT:` header"))?;
        if marker.is_empty() {
            return Err(malformed("empty expected marker"));
        }
        let tagged = source.lines().filter(|line| line.trim_end().ends_with(MISUSE_TAG)).count();
        if tagged != 1 {
            return Err(malformed("exactly one line must carry the `// MISUSE` tag"));
        }
        let expected_marker = marker.to_owned();
        Ok(MisuseEntry { id, source, expected_marker })
    }

    /// The entry with its tagged line removed.
    pub fn without_marked_line(&self) -> String {
        let mut out = String::with_capacity(self.source.len());
        for line in self.source.lines().filter(|line| !line.trim_end().ends_with(MISUSE_TAG)) {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

/// Loads every `*.rs` file in `dir`, sorted by id (the file stem).
pub fn load_corpus(dir: &Path) -> Result<Vec<MisuseEntry>, HarnessError> {
    let mut entries = Vec::new();
    for dirent in fs::read_dir(dir)? {
        let path = dirent?.path();
        if path.extension().is_some_and(|ext| ext == "rs") && path.is_file() {
            let id = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            entries.push(MisuseEntry::parse(id, fs::read_to_string(&path)?)?);
        }
    }
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryOutcome {
    RejectedAsExpected,
    CompiledUnexpectedly,
    WrongDiagnostic,
}

impl EntryOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryOutcome::RejectedAsExpected => "rejected as expected",
            EntryOutcome::CompiledUnexpectedly => "compiled unexpectedly",
            EntryOutcome::WrongDiagnostic => "wrong diagnostic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SanityOutcome {
    CompilesClean,
    StillFails,
}

#[derive(Debug, Clone)]
pub struct EntryResult<O> {
    pub id: String,
    pub outcome: O,
    /// Compiler stderr, kept for diagnosing failures.
    pub diagnostics: String,
}

#[derive(Debug, Clone, Default)]
pub struct CorpusReport {
    pub entries: Vec<EntryResult<EntryOutcome>>,
}

impl CorpusReport {
    pub fn total(&self) -> usize {
        self.entries.len()
    }

    pub fn count(&self, outcome: EntryOutcome) -> usize {
        self.entries.iter().filter(|e| e.outcome == outcome).count()
    }

    pub fn all_rejected(&self) -> bool {
        self.count(EntryOutcome::RejectedAsExpected) == self.total()
    }

    pub fn outcome_of(&self, id: &str) -> Option<EntryOutcome> {
        self.entries.iter().find(|e| e.id == id).map(|e| e.outcome)
    }
}

impl fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            writeln!(f, "{}: {}", entry.id, entry.outcome.as_str())?;
        }
        writeln!(
            f,
            "{} entries: {} rejected as expected, {} compiled unexpectedly, {} wrong diagnostic",
            self.total(),
            self.count(EntryOutcome::RejectedAsExpected),
            self.count(EntryOutcome::CompiledUnexpectedly),
            self.count(EntryOutcome::WrongDiagnostic),
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct SanityReport {
    pub entries: Vec<EntryResult<SanityOutcome>>,
}

impl SanityReport {
    pub fn total(&self) -> usize {
        self.entries.len()
    }

    pub fn all_clean(&self) -> bool {
        self.entries.iter().all(|e| e.outcome == SanityOutcome::CompilesClean)
    }
}

impl fmt::Display for SanityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut clean = 0;
        for entry in &self.entries {
            let text = match entry.outcome {
                SanityOutcome::CompilesClean => {
                    clean += 1;
                    "compiles clean without the marked line"
                }
                SanityOutcome::StillFails => "still fails without the marked line",
            };
            writeln!(f, "{}: {text}", entry.id)?;
        }
        writeln!(f, "{} entries: {clean} compile clean", self.total())
    }
}

/// Default location of the `typed-patterns` crate, relative to this crate's
/// source tree.
pub fn default_crate_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("..").join("core")
}

/// Default location of the shipped corpus.
pub fn default_corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("misuse")
}

struct Compilation {
    success: bool,
    stderr: String,
}

pub struct Harness {
    cargo: OsString,
    work: TempDir,
}

impl Harness {
    /// Prepares a scratch package depending on the crate at `crate_path`.
    pub fn new(crate_path: &Path) -> Result<Self, HarnessError> {
        let crate_path = crate_path.canonicalize().map_err(|_| HarnessError::MissingCrate(crate_path.to_owned()))?;
        if !crate_path.join("Cargo.toml").is_file() {
            return Err(HarnessError::MissingCrate(crate_path));
        }
        let cargo = std::env::var_os("CARGO").unwrap_or_else(|| "cargo".into());
        Command::new(&cargo).arg("--version").output().map_err(HarnessError::CompilerUnavailable)?;

        let work = tempfile::Builder::new().prefix("misuse-corpus-").tempdir()?;
        let manifest = format!(
            "[package]\nname = \"misuse-corpus\"\nversion = \"0.0.0\"\nedition = \"2021\"\npublish = false\n\n\
             [dependencies]\ntyped-patterns = {{ path = {:?} }}\n\n[workspace]\n",
            crate_path.display().to_string()
        );
        fs::write(work.path().join("Cargo.toml"), manifest)?;
        fs::create_dir_all(work.path().join("src").join("bin"))?;
        Ok(Harness { cargo, work })
    }

    pub fn run(&self, entries: &[MisuseEntry]) -> Result<CorpusReport, HarnessError> {
        let mut report = CorpusReport::default();
        for entry in entries {
            let compiled = self.compile(&entry.id, &entry.source)?;
            let outcome = if compiled.success {
                EntryOutcome::CompiledUnexpectedly
            } else if compiled.stderr.contains(&entry.expected_marker) {
                EntryOutcome::RejectedAsExpected
            } else {
                EntryOutcome::WrongDiagnostic
            };
            report.entries.push(EntryResult { id: entry.id.clone(), outcome, diagnostics: compiled.stderr });
        }
        report.entries.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(report)
    }

    pub fn sanity(&self, entries: &[MisuseEntry]) -> Result<SanityReport, HarnessError> {
        let mut report = SanityReport::default();
        for entry in entries {
            let compiled = self.compile(&entry.id, &entry.without_marked_line())?;
            let outcome = if compiled.success { SanityOutcome::CompilesClean } else { SanityOutcome::StillFails };
            report.entries.push(EntryResult { id: entry.id.clone(), outcome, diagnostics: compiled.stderr });
        }
        report.entries.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(report)
    }

    fn compile(&self, id: &str, source: &str) -> Result<Compilation, HarnessError> {
        let bin = bin_name(id);
        fs::write(self.work.path().join("src").join("bin").join(format!("{bin}.rs")), source)?;
        let output = Command::new(&self.cargo)
            .current_dir(self.work.path())
            .env("CARGO_TARGET_DIR", self.work.path().join("target"))
            .args(["check", "--offline", "--quiet", "--color", "never", "--bin", &bin])
            .output()
            .map_err(HarnessError::CompilerUnavailable)?;
        Ok(Compilation {
            success: output.status.success(),
            stderr: String::from_utf8_lossy(&output.stderr).into_owned(),
        })
    }
}

fn bin_name(id: &str) -> String {
    let cleaned: String =
        id.chars().map(|c| if c.is_ascii_alphanumeric() { c.to_ascii_lowercase() } else { '_' }).collect();
    format!("entry_{cleaned}")
}
