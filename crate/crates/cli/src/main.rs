//! `tercode`: build, inspect and verify ternary codes from spread functions.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tercode_core::code::{
    build_code, weight_distribution_bruteforce_with, weight_distribution_closed,
    weight_distribution_from_spectrum,
};
use tercode_core::function::FamilyKind;
use tercode_core::minimality::{
    is_minimal_bruteforce_with, walsh_criterion_report, MinimalityReport,
};
use tercode_core::report::{reproduce, RunConfig};
use tercode_core::walsh::{walsh_table, SpectrumClassifier};
use tercode_core::{Error, Execution};

const EXIT_INVALID: u8 = 2;
const EXIT_NOT_MINIMAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tercode",
    version,
    about = "Ternary codes from spread functions"
)]
struct Cli {
    /// Run every sweep on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build C_f, write its generator matrix and metadata, print [length,dimension].
    Construct {
        #[command(flatten)]
        code: CodeArgs,
        /// Generator matrix path; metadata goes next to it with a .json extension.
        #[arg(long, default_value = "generator.gmatrix")]
        output: PathBuf,
    },
    /// Weight distribution of C_f.
    Weights {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = WeightMethod::Spectrum)]
        method: WeightMethod,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Walsh spectrum of f with the case of every w.
    Walsh {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide minimality of C_f. Exit 0 when minimal, 3 when not.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = VerifyMethod::Both)]
        method: VerifyMethod,
        /// Leave runtime_ms out so repeated runs give identical output.
        #[arg(long)]
        no_timing: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the reproduction checks and print the JSON report. Exit 0 iff nothing mismatches.
    Reproduce {
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the generator matrix of C_f.
    Export {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = ExportFormat::Gmatrix)]
        format: ExportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// Ambient dimension, even, 2..=8.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    s: usize,
    /// Spread member indices, comma separated. Defaults to the first s (or 2s).
    #[arg(long, value_delimiter = ',')]
    indices: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Char,
    Ternary,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightMethod {
    Brute,
    Spectrum,
    Closed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyMethod {
    Brute,
    Walsh,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Gmatrix,
    Json,
}

enum Failure {
    Invalid(String),
    Io(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type CmdResult = Result<ExitCode, Failure>;

impl CodeArgs {
    fn config(&self) -> Result<RunConfig, Failure> {
        let family = match self.family {
            Family::Char => FamilyKind::Characteristic,
            Family::Ternary => FamilyKind::Ternary,
        };
        Ok(RunConfig::new(
            self.n,
            family,
            self.s,
            self.indices.clone(),
        )?)
    }
}

fn config_json(c: &RunConfig) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(1));
    m.insert("n".into(), json!(c.n));
    m.insert("family".into(), json!(c.family));
    m.insert("s".into(), json!(c.s));
    m.insert("indices".into(), json!(c.indices));
    m
}

fn to_json_string(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn emit(output: Option<&Path>, content: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, content).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_construct(code: &CodeArgs, output: &Path) -> CmdResult {
    let config = code.config()?;
    let c = build_code(&config.function()?)?;
    emit(Some(output), &c.to_gmatrix())?;
    let mut meta = config_json(&config);
    meta.insert("length".into(), json!(c.length()));
    meta.insert("dimension".into(), json!(c.dimension()));
    meta.insert(
        "generator".into(),
        json!(output.file_name().map(|n| n.to_string_lossy())),
    );
    emit(Some(&output.with_extension("json")), &to_json_string(&meta))?;
    println!("[{},{}]", c.length(), c.dimension());
    Ok(ExitCode::SUCCESS)
}

fn cmd_weights(
    code: &CodeArgs,
    method: WeightMethod,
    format: TableFormat,
    output: Option<&Path>,
    exec: Execution,
) -> CmdResult {
    let config = code.config()?;
    let f = config.function()?;
    let dist = match method {
        WeightMethod::Brute => weight_distribution_bruteforce_with(&build_code(&f)?, exec),
        WeightMethod::Spectrum => weight_distribution_from_spectrum(&walsh_table(&f))?,
        WeightMethod::Closed => weight_distribution_closed(config.family, config.n, config.s)?,
    };
    let text = match format {
        TableFormat::Csv => dist.to_csv(),
        TableFormat::Json => {
            let mut m = config_json(&config);
            m.insert("distribution".into(), json!(dist));
            to_json_string(&m)
        }
    };
    emit(output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_walsh(code: &CodeArgs, format: TableFormat, output: Option<&Path>) -> CmdResult {
    let config = code.config()?;
    let f = config.function()?;
    let table = walsh_table(&f);
    let classifier = SpectrumClassifier::new(&f)?;
    let text = match format {
        TableFormat::Csv => {
            let mut out = String::from("w_index,a,b,twice_re,case\n");
            for (i, v) in table.values().iter().enumerate() {
                let case = classifier.classify_index(i).label();
                out.push_str(&format!("{i},{},{},{},{case}\n", v.a, v.b, v.twice_re()));
            }
            out
        }
        TableFormat::Json => {
            let rows: Vec<Value> = table
                .values()
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    json!({
                        "w_index": i,
                        "a": v.a,
                        "b": v.b,
                        "twice_re": v.twice_re(),
                        "case": classifier.classify_index(i).label(),
                    })
                })
                .collect();
            let mut m = config_json(&config);
            m.insert("spectrum".into(), Value::Array(rows));
            to_json_string(&m)
        }
    };
    emit(output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn report_json(r: &MinimalityReport) -> serde_json::Map<String, Value> {
    match serde_json::to_value(r).expect("report serializes") {
        Value::Object(m) => m,
        _ => unreachable!("report is a struct"),
    }
}

fn cmd_verify(
    code: &CodeArgs,
    method: VerifyMethod,
    no_timing: bool,
    output: Option<&Path>,
    exec: Execution,
) -> CmdResult {
    let config = code.config()?;
    let f = config.function()?;
    let start = Instant::now();
    let brute = match method {
        VerifyMethod::Walsh => None,
        _ => Some(is_minimal_bruteforce_with(&build_code(&f)?, exec)?),
    };
    let walsh = match method {
        VerifyMethod::Brute => None,
        _ => Some(walsh_criterion_report(&walsh_table(&f), exec)?),
    };
    let runtime_ms = start.elapsed().as_millis() as u64;

    let mut out = config_json(&config);
    let verdict = match (&brute, &walsh) {
        (Some(b), Some(w)) => {
            if b.verdict != w.verdict {
                return Err(Failure::Internal(format!(
                    "methods disagree: brute {:?}, walsh {:?}",
                    b.verdict, w.verdict
                )));
            }
            out.extend(report_json(w));
            out.insert("method".into(), json!("both"));
            out.insert(
                "witness".into(),
                json!(b.witness.as_ref().or(w.witness.as_ref())),
            );
            out.insert("methods_agree".into(), json!(true));
            out.insert(
                "witnesses".into(),
                json!({ "brute": b.witness, "walsh": w.witness }),
            );
            b.verdict
        }
        (Some(r), None) | (None, Some(r)) => {
            out.extend(report_json(r));
            r.verdict
        }
        (None, None) => unreachable!("at least one method runs"),
    };
    out.insert("hypotheses".into(), json!(config.hypotheses()));
    if !no_timing {
        out.insert("runtime_ms".into(), json!(runtime_ms));
    }
    emit(output, &to_json_string(&out))?;
    Ok(if verdict == tercode_core::minimality::Verdict::Minimal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NOT_MINIMAL)
    })
}

fn cmd_reproduce(output: Option<&Path>, exec: Execution) -> CmdResult {
    let report = reproduce(exec)?;
    emit(output, &to_json_string(&report))?;
    Ok(if report.has_mismatch() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_export(code: &CodeArgs, format: ExportFormat, output: Option<&Path>) -> CmdResult {
    let config = code.config()?;
    let c = build_code(&config.function()?)?;
    let text = match format {
        ExportFormat::Gmatrix => c.to_gmatrix(),
        ExportFormat::Json => {
            let mut m = config_json(&config);
            m.insert("length".into(), json!(c.length()));
            m.insert("dimension".into(), json!(c.dimension()));
            let rows: Vec<String> = c.generator().iter().map(|r| r.to_string()).collect();
            m.insert("generator".into(), json!(rows));
            to_json_string(&m)
        }
    };
    emit(output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let result = match &cli.command {
        Command::Construct { code, output } => cmd_construct(code, output),
        Command::Weights {
            code,
            method,
            format,
            output,
        } => cmd_weights(code, *method, *format, output.as_deref(), exec),
        Command::Walsh {
            code,
            format,
            output,
        } => cmd_walsh(code, *format, output.as_deref()),
        Command::Verify {
            code,
            method,
            no_timing,
            output,
        } => cmd_verify(code, *method, *no_timing, output.as_deref(), exec),
        Command::Reproduce { output } => cmd_reproduce(output.as_deref(), exec),
        Command::Export {
            code,
            format,
            output,
        } => cmd_export(code, *format, output.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(Failure::Io(msg)) | Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
