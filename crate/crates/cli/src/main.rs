use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use parallelotope::atlas::{
    atlas_of, classify_all, emit_table, verify_with, Atlas, Context, Prop, Selection, TableFormat,
};
use parallelotope::{exec, Error};

#[derive(Parser)]
#[command(name = "parallelotope", version, about = "Enumerate and check the 52 types of four-dimensional parallelotopes")]
struct Cli {
    /// Worker threads for the scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Zonotopal,
    Sums,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum VerifyProp {
    Pnz,
    Pzs,
    Sum,
    Sdn,
    Unext,
    Pvz,
    Mcmullen,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build atlas records and print them as JSON.
    Enumerate {
        #[arg(value_enum)]
        which: Which,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Merge both enumerations and run the per-record checks.
    Classify {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Print one of the two classification tables.
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the statements behind the classification.
    Verify {
        #[arg(value_enum, default_value = "all")]
        prop: VerifyProp,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Print one record with its polytope.
    Show {
        #[arg(long)]
        id: String,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Write the atlas JSON, rebuilding it or normalising an existing file.
    Export {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Verification(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Parse(_) | Error::OutOfRange(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

fn load(input: &Option<PathBuf>) -> Result<Atlas, Failure> {
    match input {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(Atlas::from_json(&text)?)
        }
        None => Ok(atlas_of(Selection::All)?),
    }
}

fn write(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Enumerate { which, out } => {
            let selection = match which {
                Which::Zonotopal => Selection::Zonotopal,
                Which::Sums => Selection::Sums,
                Which::All => Selection::All,
            };
            write(&out, &atlas_of(selection)?.to_json())
        }
        Command::Classify { input, format } => {
            let atlas = load(&input)?;
            let summary = classify_all(&atlas)?;
            let text = match format {
                ReportFormat::Json => serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n",
                ReportFormat::Text => {
                    let mut s = format!(
                        "{} records: {} zonotopal, {} with the 24-cell; {} distinct certificates; {} shared\n",
                        summary.total,
                        summary.zonotopal,
                        summary.sums,
                        summary.distinct_certificates,
                        summary.zonotopal_sum_overlap
                    );
                    for r in &summary.records {
                        s.push_str(&format!(
                            "{} {}: core {}, {} directions checked\n",
                            if r.ok() { "ok  " } else { "FAIL" },
                            r.id,
                            r.core,
                            r.directions
                        ));
                    }
                    for m in &summary.nd0_mismatches {
                        s.push_str(&format!("FAIL shape label {m}\n"));
                    }
                    s
                }
            };
            print!("{text}");
            if summary.ok() {
                Ok(())
            } else {
                Err(Failure::Verification("classification checks failed".into()))
            }
        }
        Command::Tables { which, format, input, out } => {
            let atlas = load(&input)?;
            let format = match format {
                Format::Tsv => TableFormat::Tsv,
                Format::Json => TableFormat::Json,
            };
            write(&out, &emit_table(&atlas, which, format)?)
        }
        Command::Verify { prop, format, input } => {
            let props: Vec<Prop> = match prop {
                VerifyProp::All => Prop::ALL.to_vec(),
                VerifyProp::Pnz => vec![Prop::Pnz],
                VerifyProp::Pzs => vec![Prop::Pzs],
                VerifyProp::Sum => vec![Prop::Sum],
                VerifyProp::Sdn => vec![Prop::Sdn],
                VerifyProp::Unext => vec![Prop::Unext],
                VerifyProp::Pvz => vec![Prop::Pvz],
                VerifyProp::Mcmullen => vec![Prop::Mcmullen],
            };
            let mut ctx = match &input {
                Some(_) => Context::with_atlas(load(&input)?)?,
                None => Context::new(),
            };
            let report = verify_with(&mut ctx, &props)?;
            match format {
                ReportFormat::Text => print!("{}", report.to_text()),
                ReportFormat::Json => print!("{}", report.to_json()),
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "{} of {} checks failed",
                    report.checks.iter().filter(|c| !c.passed).count(),
                    report.checks.len()
                )))
            }
        }
        Command::Show { id, input } => {
            let atlas = load(&input)?;
            let record = atlas.get(&id).ok_or_else(|| Failure::Usage(format!("no record with id {id:?}")))?;
            let polytope = record.polytope()?;
            let value = serde_json::json!({ "record": record, "polytope": polytope.to_json() });
            print!("{}", serde_json::to_string_pretty(&value).expect("record serializes") + "\n");
            Ok(())
        }
        Command::Export { input, out } => write(&out, &load(&input)?.to_json()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match exec::with_jobs(cli.jobs, move || run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
