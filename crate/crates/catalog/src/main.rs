use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use typed_patterns_catalog::misuse::{self, load_corpus, Harness};
use typed_patterns_catalog::{commands, exit, Outcome};

#[derive(Parser)]
#[command(name = "catalog", about = "Demos for the typed design pattern catalog")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Fill a `{}` template with comma-separated arguments.
    Format {
        #[arg(long)]
        template: String,
        #[arg(long)]
        args: Option<String>,
    },
    /// Read a seeded in-memory file to the end and print the syscall trace.
    File {
        #[arg(long)]
        path: String,
        #[arg(long)]
        content: String,
        #[arg(long)]
        chunk_size: usize,
    },
    /// Replay the event scenario on the typed registry.
    Events {
        #[arg(long)]
        empty: bool,
    },
    /// Route the admin panel for a fixture user.
    Admin {
        #[arg(long)]
        user: String,
    },
    /// Check the negative-compilation corpus.
    Misuse {
        #[command(subcommand)]
        mode: MisuseMode,
    },
}

#[derive(Subcommand)]
enum MisuseMode {
    /// Every entry must fail to compile with its expected diagnostic.
    Run {
        /// Directory of `*.rs` entries.
        dir: PathBuf,
        /// The `typed-patterns` crate to compile against [default: the workspace copy].
        #[arg(long)]
        crate_path: Option<PathBuf>,
    },
    /// Every entry must compile once its marked line is removed.
    Sanity {
        /// Directory of `*.rs` entries.
        dir: PathBuf,
        /// The `typed-patterns` crate to compile against [default: the workspace copy].
        #[arg(long)]
        crate_path: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { exit::SUCCESS as u8 });
        }
    };
    let outcome = match cli.command {
        Cmd::Format { template, args } => commands::cmd_format(&template, args.as_deref()),
        Cmd::File { path, content, chunk_size } => commands::cmd_file(&path, &content, chunk_size),
        Cmd::Events { empty } => commands::cmd_events(empty),
        Cmd::Admin { user } => commands::cmd_admin(&user),
        Cmd::Misuse { mode } => run_misuse(mode),
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}

fn run_misuse(mode: MisuseMode) -> Outcome {
    let (dir, crate_path, sanity) = match mode {
        MisuseMode::Run { dir, crate_path } => (dir, crate_path, false),
        MisuseMode::Sanity { dir, crate_path } => (dir, crate_path, true),
    };
    let crate_path = crate_path.unwrap_or_else(misuse::default_crate_path);
    let fail = |e: misuse::HarnessError| Outcome { code: exit::USAGE, stderr: format!("{e}\n"), ..Outcome::default() };

    let entries = match load_corpus(&dir) {
        Ok(entries) => entries,
        Err(e) => return fail(e),
    };
    let mut stderr = String::new();
    if entries.is_empty() {
        stderr = format!("warning: no misuse entries in {}\n", dir.display());
    }
    let harness = match Harness::new(&crate_path) {
        Ok(h) => h,
        Err(e) => return fail(e),
    };
    let (stdout, passed) = if sanity {
        match harness.sanity(&entries) {
            Ok(report) => (report.to_string(), report.all_clean()),
            Err(e) => return fail(e),
        }
    } else {
        match harness.run(&entries) {
            Ok(report) => (report.to_string(), report.all_rejected()),
            Err(e) => return fail(e),
        }
    };
    Outcome { code: if passed { exit::SUCCESS } else { exit::HAZARD }, stdout, stderr }
}
