use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use wbroadcast::analysis::{point_params, to_csv_string, to_json_string};
use wbroadcast::separability::DEFAULT_THRESHOLD_TOL;
use wbroadcast::svg::render_svg;
use wbroadcast::{analyze, sweep, table2, thresholds, AnalysisRecord, SweepGrid};

#[derive(Parser)]
#[command(
    name = "wbroadcast",
    version,
    about = "Entanglement broadcasting of W-type states through local Buzek-Hillery cloning"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the four two-qubit outputs at one parameter point.
    Analyze {
        #[arg(long, allow_negative_numbers = true)]
        alpha2: f64,
        /// Defaults to (1 - alpha2)/2, i.e. beta = gamma.
        #[arg(long, allow_negative_numbers = true)]
        beta2: Option<f64>,
        #[arg(long, value_enum, default_value_t = PointFormat::Text)]
        format: PointFormat,
    },
    /// Evaluate an evenly spaced alpha^2 grid (beta = gamma), endpoints included.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Also write an SVG chart of concurrence and linear entropy.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Evaluate grid points on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Locate the separability thresholds by bisection.
    Thresholds {
        #[arg(long, default_value_t = DEFAULT_THRESHOLD_TOL, allow_negative_numbers = true)]
        tol: f64,
    },
    /// Reproduce the published range table and audit the closed forms.
    ///
    /// The command is named after the source's label for its only table;
    /// there is no Table 1.
    Table2 {
        /// Write the underlying sweep here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PointFormat {
    Text,
    Csv,
    Json,
}

fn render(records: &[AnalysisRecord], format: Format) -> wbroadcast::Result<String> {
    match format {
        Format::Csv => to_csv_string(records),
        Format::Json => to_json_string(records).map(|s| s + "\n"),
    }
}

fn emit(path: Option<&Path>, body: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, body).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| format!("cannot write to stdout: {e}")),
    }
}

fn text_record(r: &AnalysisRecord) -> String {
    let mut s = format!("alpha2 = {}\n", r.alpha2);
    s.push_str(&format!(
        "{:<7} {:>13} {:>13} {:>13} {:>11} {:>9} {:>11} {:>11} {:>11}\n",
        "output", "w3", "w4", "min_pt_eig", "negativity", "separable", "concurrence", "eof", "S_L"
    ));
    for pair in wbroadcast::OutputPair::ALL {
        let o = r.get(pair);
        s.push_str(&format!(
            "{:<7} {:>13.6e} {:>13.6e} {:>13.6e} {:>11.6} {:>9} {:>11.6} {:>11.6} {:>11.6}\n",
            pair.name(),
            o.w3,
            o.w4,
            o.min_pt_eigenvalue,
            o.negativity,
            o.separable,
            o.concurrence,
            o.eof,
            o.linear_entropy
        ));
    }
    s
}

fn run(cli: Cli) -> Result<(), String> {
    let fail = |e: wbroadcast::Error| e.to_string();
    match cli.command {
        Command::Analyze {
            alpha2,
            beta2,
            format,
        } => {
            let record = analyze(&point_params(alpha2, beta2).map_err(fail)?).map_err(fail)?;
            let body = match format {
                PointFormat::Text => text_record(&record),
                PointFormat::Csv => render(&[record], Format::Csv).map_err(fail)?,
                PointFormat::Json => {
                    serde_json::to_string_pretty(&record).map_err(|e| e.to_string())? + "\n"
                }
            };
            emit(None, &body)
        }
        Command::Sweep {
            from,
            to,
            steps,
            out,
            format,
            svg,
            serial,
        } => {
            let grid = SweepGrid::new(from, to, steps).map_err(fail)?;
            let records = sweep(&grid, !serial).map_err(fail)?;
            emit(out.as_deref(), &render(&records, format).map_err(fail)?)?;
            if let Some(p) = svg {
                emit(Some(&p), &render_svg(&records))?;
            }
            Ok(())
        }
        Command::Thresholds { tol } => {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(format!("--tol must be a positive number, got {tol}"));
            }
            let report = thresholds(tol).map_err(fail)?;
            emit(None, &format!("{report}\n"))
        }
        Command::Table2 { out, format, svg } => {
            let report = table2(true).map_err(fail)?;
            emit(None, &format!("{report}\n"))?;
            if let Some(p) = out {
                emit(Some(&p), &render(&report.records, format).map_err(fail)?)?;
            }
            if let Some(p) = svg {
                emit(Some(&p), &render_svg(&report.records))?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            eprintln!(
                "error: missing subcommand (analyze, sweep, thresholds or table2); see --help"
            );
            return ExitCode::from(2);
        }
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let line = rendered
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("invalid arguments");
            eprintln!("{}", line.trim());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {}", msg.replace('\n', " "));
            ExitCode::FAILURE
        }
    }
}
