use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qeuclid_cli::config::Config;
use qeuclid_cli::eval;
use qeuclid_cli::suites::{self, Suite};

#[derive(Parser)]
#[command(name = "qeuclid", version, about = "Exact checks and evaluation on q-deformed Euclidean space")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite (or `all`) and print a JSON report.
    Verify {
        suite: String,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Degree cap for the star-product oracle comparison.
        #[arg(long)]
        deg: Option<u16>,
        /// Omit runtimes so the report is reproducible byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
    /// Evaluate an expression and print it in the series grammar.
    Eval {
        #[command(subcommand)]
        kind: EvalKind,
    },
}

#[derive(Subcommand)]
enum EvalKind {
    /// `f ⊛ g`
    Star { f: String, g: String },
    /// `f(x ⊕ y)`
    Translate {
        f: String,
        #[arg(long)]
        bar: bool,
    },
    /// `f(⊖x)`
    Invert {
        f: String,
        #[arg(long)]
        bar: bool,
    },
    /// `Û f`, or `Û⁻¹ f` with `--inverse`
    Uhat {
        f: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Quantum space conjugation.
    Conj { f: String },
    /// `∂^A ▷ f`; `--co` for the covariant index.
    Dleft {
        axis: String,
        f: String,
        #[arg(long)]
        co: bool,
    },
    /// Any of the four derivative actions.
    Action {
        name: String,
        axis: String,
        f: String,
        #[arg(long)]
        co: bool,
    },
    /// Truncated q-exponential.
    Exp {
        #[arg(long, default_value_t = 3)]
        cap: u32,
        #[arg(long, default_value = "xp")]
        which: String,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn verify(suite: &str, config: Option<PathBuf>, deg: Option<u16>, no_timing: bool) -> ExitCode {
    let selection: Vec<Suite> = match suite {
        "all" => Suite::ALL.to_vec(),
        s => match Suite::from_name(s) {
            Some(x) => vec![x],
            None => {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                return usage(format!("unknown suite `{s}` (expected one of {}, all)", names.join(", ")));
            }
        },
    };
    let mut cfg = match config {
        None => Config::default(),
        Some(p) => match std::fs::read_to_string(&p)
            .map_err(|e| e.to_string())
            .and_then(|t| Config::parse(&t).map_err(|e| e.to_string()))
        {
            Ok(c) => c,
            Err(e) => return usage(format!("{}: {e}", p.display())),
        },
    };
    if let Some(d) = deg {
        cfg.star_deg = d;
    }
    if no_timing {
        cfg.timing = false;
    }
    let report = suites::run(&selection, &cfg);
    println!("{}", report.to_json());
    eprintln!("{} passed, {} failed, {} findings", report.passed, report.failed, report.findings);
    if report.mandatory_failure() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Verify { suite, config, deg, no_timing } => verify(&suite, config, deg, no_timing),
        Cmd::Eval { kind } => {
            let out = match kind {
                EvalKind::Star { f, g } => eval::star(&f, &g),
                EvalKind::Translate { f, bar } => eval::translate(&f, bar),
                EvalKind::Invert { f, bar } => eval::invert(&f, bar),
                EvalKind::Uhat { f, inverse } => eval::uhat_op(&f, inverse),
                EvalKind::Conj { f } => eval::conj(&f),
                EvalKind::Dleft { axis, f, co } => eval::action("left", &axis, co, &f),
                EvalKind::Action { name, axis, f, co } => eval::action(&name, &axis, co, &f),
                EvalKind::Exp { cap, which } => eval::exp(cap, &which),
            };
            match out {
                Ok(p) => {
                    println!("{p}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
    }
}
