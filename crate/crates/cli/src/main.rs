use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use ufdlab::groebner::Caps;
use ufdlab_cli::{exit_code, export_ring, registry, run_claim_with_timeout, run_many, suite, ClaimError, ExportFormat, SuiteItem, SuiteReport, DEFAULT_TIMEOUT, TOOL_VERSION};

const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "ufdlab", version, about = "Finite checks for graded rings, rewriting systems and certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered claims.
    #[command(subcommand)]
    Claim(ClaimCmd),
    /// Work with presented rings.
    #[command(subcommand)]
    Ring(RingCmd),
}

#[derive(Subcommand)]
enum ClaimCmd {
    /// Print the claim registry.
    List,
    /// Run one claim.
    Run {
        id: String,
        /// JSON object with the claim's parameters.
        #[arg(long)]
        params: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-claim time limit in seconds.
        #[arg(long, default_value_t = DEFAULT_TIMEOUT.as_secs())]
        timeout: u64,
    },
    /// Run every fixture of a suite.
    RunAll {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TIMEOUT.as_secs())]
        timeout: u64,
    },
}

#[derive(Subcommand)]
enum RingCmd {
    /// Print a ring as JSON or as line-oriented text.
    Export {
        /// A presentation, or `{"builder": ..., "params": ...}`.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::CasText)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    CasText,
}

fn read_json(path: &Path) -> Result<Value, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{} is not valid JSON: {e}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn list() -> u8 {
    for e in registry() {
        println!("{}\n    {}\n    params: {}", e.id, e.anchor, e.params);
    }
    0
}

fn run_one(id: &str, params: Option<&Path>, out: Option<&Path>, timeout: u64) -> Result<u8, String> {
    let params = match params {
        Some(p) => read_json(p)?,
        None => Value::Object(Default::default()),
    };
    let report = run_claim_with_timeout(id, &params, Duration::from_secs(timeout)).map_err(|e| e.to_string())?;
    emit(&to_json(&report), out)?;
    Ok(exit_code([&report]) as u8)
}

fn run_all(name: &str, out: Option<&Path>, timeout: u64) -> Result<u8, String> {
    let fixtures = suite::load(name).map_err(|e| e.to_string())?;
    let mut jobs = Vec::new();
    let mut criteria = Vec::new();
    for f in &fixtures {
        for item in &f.items {
            jobs.push((item.claim.clone(), item.params.clone()));
            criteria.push(f.criterion);
        }
    }
    let results = run_many(&jobs, Duration::from_secs(timeout));
    let mut items = Vec::new();
    for (criterion, r) in criteria.into_iter().zip(results) {
        let report = r.map_err(|e: ClaimError| format!("criterion {criterion}: {e}"))?;
        eprintln!("[{criterion}] {} {:?} {} ms", report.claim_id, report.status, report.elapsed_ms);
        items.push(SuiteItem { criterion, report });
    }
    let code = exit_code(items.iter().map(|i| &i.report));
    let report = SuiteReport { suite: name.to_string(), tool_version: TOOL_VERSION.to_string(), items };
    emit(&to_json(&report), out)?;
    Ok(code as u8)
}

fn export(input: &Path, format: Format, out: Option<&Path>) -> Result<u8, String> {
    let value = read_json(input)?;
    let format = match format {
        Format::Json => ExportFormat::Json,
        Format::CasText => ExportFormat::CasText,
    };
    emit(&export_ring(&value, format).map_err(|e| e.to_string())?, out)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    if let Ok(s) = std::env::var("UFDLAB_CAPS") {
        match Caps::parse(&s) {
            Ok(c) => Caps::set_current(c),
            Err(e) => {
                eprintln!("error: UFDLAB_CAPS: {e}");
                return ExitCode::from(USAGE);
            }
        }
    }
    let result = match cli.command {
        Command::Claim(ClaimCmd::List) => Ok(list()),
        Command::Claim(ClaimCmd::Run { id, params, out, timeout }) => run_one(&id, params.as_deref(), out.as_deref(), timeout),
        Command::Claim(ClaimCmd::RunAll { suite, out, timeout }) => run_all(&suite, out.as_deref(), timeout),
        Command::Ring(RingCmd::Export { input, format, out }) => export(&input, format, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}
