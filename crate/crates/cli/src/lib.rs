//! The `argon` command line: competition-style solving tasks over a
//! framework file, and the meta-property checker.
//!
//! [`run`] does all the work and returns the exit status with the buffered
//! output, so the binary is a thin wrapper and tests need no subprocess.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use argon_core::io::{self, InputFormat, NO_EXTENSION};
use argon_core::meta::{self, CheckOptions, MetaError};
use argon_core::{Extensions, Framework, Labellings, SemanticsId, Strategy};
use clap::error::ErrorKind;
use clap::Parser;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TaskKind {
    /// Some extension.
    SE,
    /// Every extension.
    EE,
    /// Credulous acceptance.
    DC,
    /// Skeptical acceptance.
    DS,
    /// Every labelling.
    LE,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Task {
    pub kind: TaskKind,
    pub semantics: SemanticsId,
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, sem) = s
            .split_once('-')
            .ok_or_else(|| format!("expected <SE|EE|DC|DS|LE>-<semantics>, got `{s}`"))?;
        let kind = match kind {
            "SE" => TaskKind::SE,
            "EE" => TaskKind::EE,
            "DC" => TaskKind::DC,
            "DS" => TaskKind::DS,
            "LE" => TaskKind::LE,
            other => return Err(format!("unknown task kind `{other}`")),
        };
        let semantics = sem.parse().map_err(|e| format!("{e}"))?;
        Ok(Task { kind, semantics })
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "argon",
    version,
    about = "Solver and meta-property checker for abstract argumentation"
)]
struct Cli {
    /// Framework file (.apx, .tgf or .af).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Input format, overriding detection by file extension.
    #[arg(long, value_parser = InputFormat::from_str)]
    format: Option<InputFormat>,
    /// Task such as SE-PR, EE-ST, DC-CO, DS-GR or LE-SST.
    #[arg(long, value_parser = Task::from_str)]
    task: Option<Task>,
    /// Query argument for DC and DS.
    #[arg(long)]
    arg: Option<String>,
    /// Check a built-in property, or `all`, instead of solving.
    #[arg(long, conflicts_with_all = ["file", "task"])]
    meta: Option<String>,
    /// Largest framework size for --meta.
    #[arg(long, default_value_t = 4, requires = "meta")]
    max_n: usize,
    /// Deduplicate frameworks up to isomorphism at every size.
    #[arg(long, requires = "meta")]
    dedup: bool,
    /// Allow --meta sizes beyond the default budget.
    #[arg(long, requires = "meta")]
    allow_large: bool,
    /// Use the backtracking enumerators.
    #[arg(long)]
    pruned: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(status: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            status,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_USAGE, text),
            };
        }
    };
    if let Some(target) = &cli.meta {
        return run_meta(&cli, target);
    }
    let (Some(path), Some(task)) = (&cli.file, cli.task) else {
        return Outcome::fail(
            EXIT_USAGE,
            "either --file with --task, or --meta, is required",
        );
    };
    let needs_arg = matches!(task.kind, TaskKind::DC | TaskKind::DS);
    if needs_arg != cli.arg.is_some() {
        return Outcome::fail(
            EXIT_USAGE,
            if needs_arg {
                "DC and DS tasks require --arg"
            } else {
                "--arg is only allowed with DC and DS tasks"
            },
        );
    }
    let Some(format) = cli.format.or_else(|| InputFormat::from_path(path)) else {
        return Outcome::fail(
            EXIT_USAGE,
            format!(
                "cannot tell the format of {}; pass --format",
                path.display()
            ),
        );
    };
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("{}: {e}", path.display())),
    };
    let af = match io::parse(&text, format) {
        Ok(af) => af,
        Err(e) => return Outcome::fail(EXIT_PARSE, format!("{}: {e}", path.display())),
    };
    let strategy = if cli.pruned {
        Strategy::Pruned
    } else {
        Strategy::Naive
    };
    solve(&af, task, cli.arg.as_deref(), strategy)
}

/// Answers `task` on an already parsed framework.
pub fn solve(af: &Framework, task: Task, arg: Option<&str>, strategy: Strategy) -> Outcome {
    let sem = task.semantics;
    let ext = Extensions::new(af).with_strategy(strategy);
    let mut out = String::new();
    match task.kind {
        TaskKind::SE => {
            let found = if sem == SemanticsId::Grounded {
                Some(ext.grounded())
            } else {
                ext.enumerate(sem).into_iter().next()
            };
            match found {
                Some(e) => out.push_str(&io::serialize_extension(af, &e)),
                None => out.push_str(NO_EXTENSION),
            }
            out.push('\n');
        }
        TaskKind::EE => {
            let all = ext.enumerate(sem);
            for e in &all {
                let _ = writeln!(out, "{}", io::serialize_extension(af, e));
            }
            let _ = writeln!(out, "# {}", all.len());
        }
        TaskKind::DC | TaskKind::DS => {
            let name = arg.expect("checked by the caller");
            let Some(id) = af.id(name) else {
                return Outcome::fail(EXIT_USAGE, format!("unknown argument `{name}`"));
            };
            let accepted = if task.kind == TaskKind::DC {
                ext.credulous(sem, id)
            } else {
                ext.skeptical(sem, id)
            };
            out.push_str(if accepted { "YES\n" } else { "NO\n" });
        }
        TaskKind::LE => {
            let labs = Labellings::new(af).with_strategy(strategy);
            for l in labs.enumerate(sem) {
                let _ = writeln!(out, "{}", io::serialize_labelling(af, &l));
            }
        }
    }
    Outcome::ok(out)
}

fn run_meta(cli: &Cli, target: &str) -> Outcome {
    let properties = if target == "all" {
        meta::builtin_properties()
    } else {
        match meta::find_property(target) {
            Ok(p) => vec![p],
            Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
        }
    };
    let mut options = CheckOptions::new(cli.max_n);
    if cli.dedup {
        options = options.dedup_all();
    }
    options.allow_large = cli.allow_large;
    let mut out = String::new();
    for p in &properties {
        match meta::check_with(p, options) {
            Ok(verdict) => out.push_str(&meta::report(p, &verdict)),
            Err(e @ (MetaError::Budget { .. } | MetaError::TooLarge(_))) => {
                return Outcome::fail(EXIT_USAGE, format!("{e}; use --dedup or --allow-large"))
            }
            Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
        }
    }
    Outcome::ok(out)
}
