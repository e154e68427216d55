use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use latroid::cli::{error_report, execute, render_text, Command, DEFAULT_CAP};
use latroid::config::ProblemConfig;
use latroid::selftest::DEFAULT_SEED;
use latroid::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Latroids, generalized weights and weight enumerators of codes over
/// finite principal ideal rings.
#[derive(Parser, Debug)]
#[command(name = "latroid", version)]
struct Args {
    /// Problem description (key = value lines).
    #[arg(long)]
    config: Option<PathBuf>,
    /// validate-support, latroid, axioms, crypto-roundtrip, weights,
    /// enumerator, tutte, circuits, isometry or selftest; overrides the
    /// `command` key of the config.
    #[arg(long)]
    command: Option<String>,
    /// Write the report here (atomically) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized corpora.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest |R|^n enumerated exhaustively.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
}

fn write_atomic(path: &Path, body: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(body.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

fn resolve(args: &Args) -> Result<(Command, ProblemConfig), Error> {
    let cfg = match &args.config {
        Some(p) => ProblemConfig::from_path(p)?,
        None => ProblemConfig::default(),
    };
    let name = args
        .command
        .clone()
        .or_else(|| cfg.command.clone())
        .ok_or_else(|| Error::InvalidArgument("no command given (use --command)".into()))?;
    let cmd: Command = name.parse()?;
    if args.config.is_none() && cmd != Command::Selftest {
        return Err(Error::InvalidArgument(format!("{name} needs --config")));
    }
    Ok((cmd, cfg))
}

fn failure(cmd: Option<&str>, e: Error) -> (serde_json::Value, i32) {
    eprintln!("error: {e}");
    (error_report(cmd, &e), e.exit_code())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (report, code) = match resolve(&args) {
        Err(e) => failure(args.command.as_deref(), e),
        Ok((cmd, cfg)) => match execute(cmd, &cfg, args.seed, args.cap) {
            Ok(out) => (out.report, out.status),
            Err(e) => failure(Some(cmd.name()), e),
        },
    };
    let body = match args.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("json")),
        Format::Text => render_text(&report),
    };
    let written = match &args.out {
        Some(p) => write_atomic(p, &body),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code as u8)
}
