use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use modalg::algebra::{Field, GroupAlgebra};
use modalg::classifier::{
    computed_verdict, run_paper_verification, theorem_classify, ClassifierError, VerificationConfig,
};
use modalg::group::{structural_report, GroupError, GroupTableFile};
use modalg::presentation::PresentationError;
use modalg::unit_lab::{all_involutions_commute, witness_search, ScanConfig, UnitLabError, DEFAULT_MAX_DIM};

mod spec;

/// Exit status for bad input or I/O failures.
const EXIT_ERROR: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("no catalog entry named `{0}`")]
    UnknownCatalogEntry(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    UnitLab(#[from] UnitLabError),
    #[error(transparent)]
    Classifier(#[from] ClassifierError),
}

#[derive(Parser)]
#[command(name = "modalg", version, about = "Involutions in unit groups of modular 2-group algebras")]
struct Cli {
    /// Largest search dimension for exhaustive scans.
    #[arg(long, global = true, env = "MODALG_MAX_DIM", default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
    /// Scan worker threads; 0 uses every available CPU.
    #[arg(long, global = true, env = "MODALG_WORKERS", default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a group and print or save its multiplication table.
    Build {
        /// Presentation file or builtin:NAME[params].
        group: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the structural invariants of a group.
    Report { group: String },
    /// Decide whether all involutions of V(KG) commute.
    CheckGood {
        group: String,
        #[arg(long, value_enum, default_value_t = FieldArg::Gf2)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
    },
    /// Classify a group against the theorem families.
    Classify { group: String },
    /// Run the catalog and every check; exit 0, 1 or 2.
    VerifyPaper {
        #[arg(long)]
        json: Option<PathBuf>,
        /// Skip GF(4) verdicts.
        #[arg(long)]
        gf2_only: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Gf2,
    Gf4,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Gf2 => Field::Gf2,
            FieldArg::Gf4 => Field::Gf4,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    /// Exhaustive scan, falling back to constructed witnesses.
    Auto,
    Exhaustive,
    Witness,
}

fn print_json(v: &impl serde::Serialize) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut a, b) {
        a.extend(b);
    }
    a
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let scan = ScanConfig {
        max_dim: cli.max_dim,
        workers: cli.workers,
    };
    match cli.command {
        Command::Build { group, out } => {
            let g = spec::resolve(&group)?;
            match out {
                Some(path) => {
                    GroupTableFile::write(&g.group, &path)?;
                    eprintln!("{}: order {} written to {}", g.name, g.group.order(), path.display());
                }
                None => print_json(&GroupTableFile::from_group(&g.group)),
            }
            Ok(0)
        }
        Command::Report { group } => {
            let g = spec::resolve(&group)?;
            print_json(&merge(json!({ "group": g.name }), json!(structural_report(&g.group))));
            Ok(0)
        }
        Command::CheckGood {
            group,
            field,
            strategy,
        } => {
            let g = spec::resolve(&group)?;
            let alg = GroupAlgebra::new(&g.group, field.into());
            let (tag, report) = match strategy {
                Strategy::Auto => {
                    let (verdict, mut report, method) = computed_verdict(&alg, scan)?;
                    report.group = g.name.clone();
                    (verdict.tag(), merge(json!({ "method": method }), json!(report)))
                }
                Strategy::Exhaustive => {
                    let r = all_involutions_commute(&alg, scan)?;
                    (r.verdict.tag(), merge(json!({ "method": "scan" }), json!(r.report(&g.name, &alg))))
                }
                Strategy::Witness => match witness_search(&alg) {
                    Some(w) => (
                        "bad",
                        json!({
                            "method": "witness",
                            "group": g.name,
                            "field": alg.field(),
                            "verdict": "bad",
                            "witness": [alg.format(&w.x), alg.format(&w.y)],
                            "witness_shape": w.shape,
                        }),
                    ),
                    None => (
                        "unknown",
                        json!({
                            "method": "witness",
                            "group": g.name,
                            "field": alg.field(),
                            "verdict": "unknown",
                            "reason": "no constructed witness applies",
                        }),
                    ),
                },
            };
            print_json(&merge(report, json!({ "structure": structural_report(&g.group) })));
            Ok(if tag == "unknown" { 2 } else { 0 })
        }
        Command::Classify { group } => {
            let g = spec::resolve(&group)?;
            let c = theorem_classify(&g.group)?;
            print_json(&json!({ "group": g.name, "order": g.group.order(), "classification": c, "summary": c.to_string() }));
            Ok(0)
        }
        Command::VerifyPaper { json, gf2_only } => {
            let mut config = VerificationConfig {
                scan,
                ..VerificationConfig::default()
            };
            if gf2_only {
                config.fields = vec![Field::Gf2];
            }
            let report = run_paper_verification(&config)?;
            for e in &report.entries {
                let verdicts: Vec<String> = e
                    .verdicts
                    .iter()
                    .map(|v| format!("{}={}{}", v.verdict.field, v.verdict.verdict, if v.agreement { "" } else { "!" }))
                    .collect();
                println!("{:<12} {:>4}  {:<24} {}", e.name, e.order, e.classification.to_string(), verdicts.join(" "));
            }
            for c in &report.checks {
                println!("{} {} ({})", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
            }
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&report).expect("serializable");
                std::fs::write(&path, text).map_err(|source| CliError::Write {
                    path: path.display().to_string(),
                    source,
                })?;
            }
            println!("exit status {}", report.exit_status);
            Ok(report.exit_status as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_ERROR);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
