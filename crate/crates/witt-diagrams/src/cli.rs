//! Command line front end. Exit codes: 0 success, 1 failed verification or
//! an unresolved decomposition, 2 usage errors including exceeded bounds.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::derivation::{decompose, DerivationTrace};
use crate::diagram::{make_diagram, Frame, PlacedDiagram};
use crate::enumeration::{poincare_polynomial, rect_enumerate, recursive_enumerate};
use crate::error::Error;
use crate::render::{render_ascii, render_ascii_color, render_svg, RenderSpec};
use crate::verify::run_all;
use crate::witt::GradedWittModule;

#[derive(Parser)]
#[command(
    name = "witt-diagrams",
    version,
    about = "Even shifted Young diagrams and the graded Witt modules they index"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
    Svg,
}

impl OutputFormat {
    fn name(self) -> &'static str {
        match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Svg => "svg",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the even shifted diagrams in the staircase for one n.
    Enumerate {
        /// Spinor parameter n.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=40))]
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the graded module, its rank table and the derivation trace.
    Module {
        /// Spinor parameter n.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=40))]
        n: u32,
        /// Keep the DetEnTilde twist instead of assuming det E is trivial.
        #[arg(long)]
        no_trivial_det: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in cross-checks.
    Verify {
        /// Largest n for the exhaustive oracle comparison.
        #[arg(long, default_value_t = 14, value_parser = clap::value_parser!(u32).range(1..=26))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Poincare polynomial of the diagram set.
    Poincare {
        /// Spinor parameter n.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=40))]
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the diagram set as ASCII art or an SVG gallery.
    Render {
        /// Spinor parameter n.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=16))]
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the even diagrams in a rectangle, as on an orthogonal Grassmannian.
    Rect {
        /// Rectangle height.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
        /// Rectangle width.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        cols: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    0
                }
                _ => {
                    eprint!("{err}");
                    2
                }
            };
        }
    };
    let (out, result) = match cli.command {
        Command::Enumerate { n, format, out } => (out, enumerate_cmd(n, format)),
        Command::Module {
            n,
            no_trivial_det,
            format,
            out,
        } => (out, module_cmd(n, !no_trivial_det, format)),
        Command::Verify { max_n, format, out } => (out, verify_cmd(max_n, format)),
        Command::Poincare { n, format, out } => (out, poincare_cmd(n, format)),
        Command::Render { n, format, out } => (out, render_cmd(n, format)),
        Command::Rect {
            rows,
            cols,
            format,
            out,
        } => (out, rect_cmd(rows, cols, format)),
    };
    let (content, code) = match result {
        Ok(pair) => pair,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            return 2;
        }
        Err(Failure::Domain(error)) => {
            eprintln!("error: {error}");
            return match error {
                Error::BoundExceeded { .. } => 2,
                _ => 1,
            };
        }
    };
    match out {
        Some(path) => {
            if let Err(error) = std::fs::write(&path, content) {
                eprintln!("error: cannot write {}: {error}", path.display());
                return 1;
            }
        }
        None => {
            use std::io::Write;
            // A consumer that stops reading early is not an error.
            if let Err(error) = std::io::stdout().write_all(content.as_bytes()) {
                if error.kind() == std::io::ErrorKind::BrokenPipe {
                    return code;
                }
                eprintln!("error: cannot write to stdout: {error}");
                return 1;
            }
        }
    }
    code
}

fn require_format(
    format: OutputFormat,
    allowed: &[OutputFormat],
    command: &str,
) -> Result<(), Failure> {
    if allowed.contains(&format) {
        return Ok(());
    }
    let names: Vec<&str> = allowed.iter().map(|f| f.name()).collect();
    Err(Failure::Usage(format!(
        "format '{}' is not supported by '{command}' (choose from {})",
        format.name(),
        names.join(", ")
    )))
}

const TABULAR: [OutputFormat; 3] = [OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv];

fn to_json(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    text.push('\n');
    text
}

fn csv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("csv write to memory");
    for row in rows {
        writer.write_record(&row).expect("csv write to memory");
    }
    String::from_utf8(writer.into_inner().expect("csv flush to memory"))
        .expect("csv output is UTF-8")
}

fn diagram_rows(diagrams: &[PlacedDiagram]) -> Vec<Vec<String>> {
    diagrams
        .iter()
        .map(|d| {
            let parts: Vec<String> = d.parts().iter().map(u32::to_string).collect();
            vec![parts.join(" "), d.weight().to_string()]
        })
        .collect()
}

fn enumerate_cmd(n: u32, format: OutputFormat) -> Result<(String, i32), Failure> {
    require_format(format, &TABULAR, "enumerate")?;
    let set = recursive_enumerate(n);
    let content = match format {
        OutputFormat::Text => {
            let mut text = String::new();
            for member in set.iter() {
                text.push_str(&member.to_string());
                text.push('\n');
            }
            text
        }
        OutputFormat::Json => to_json(&set.placed()),
        OutputFormat::Csv => csv_rows(&["parts", "weight"], diagram_rows(&set.placed())),
        OutputFormat::Svg => unreachable!(),
    };
    Ok((content, 0))
}

fn module_cmd(n: u32, trivial_det: bool, format: OutputFormat) -> Result<(String, i32), Failure> {
    require_format(format, &TABULAR, "module")?;
    let (decomposed, trace) = decompose(n, trivial_det)?;
    let module = GradedWittModule::from_diagrams(&recursive_enumerate(n));
    if decomposed.degree_twist_multiset() != module.degree_twist_multiset() {
        return Err(Failure::Domain(
            crate::derivation::cross_check(n)
                .expect_err("multisets differ, so the cross-check must report the mismatch"),
        ));
    }
    let content = match format {
        OutputFormat::Text => module_text(n, trivial_det, &module, &trace),
        OutputFormat::Json => {
            let table: Vec<serde_json::Value> = module
                .rank_table()
                .into_iter()
                .map(|((residue, twist), rank)| {
                    serde_json::json!({"residue": residue, "twist": twist, "rank": rank})
                })
                .collect();
            to_json(&serde_json::json!({
                "n": n,
                "trivial_det": trivial_det,
                "generators": module,
                "rank_table": table,
                "trace": trace,
            }))
        }
        OutputFormat::Csv => csv_rows(
            &["degree", "residue", "twist", "provenance"],
            module.generators().iter().map(|g| {
                let twist: Vec<&str> = g.twist.symbols().iter().map(|s| s.name()).collect();
                vec![
                    g.degree.degree().to_string(),
                    g.degree.residue().to_string(),
                    twist.join("+"),
                    g.provenance.to_string(),
                ]
            }),
        ),
        OutputFormat::Svg => unreachable!(),
    };
    Ok((content, 0))
}

fn module_text(
    n: u32,
    trivial_det: bool,
    module: &GradedWittModule,
    trace: &DerivationTrace,
) -> String {
    let mut text = format!(
        "graded Witt module for n = {n} ({})\n",
        if trivial_det {
            "trivial determinant"
        } else {
            "determinant kept"
        }
    );
    text.push_str(&format!("rank {} over W^tot(S)\n", module.rank()));
    text.push_str("generators:\n");
    for g in module.generators() {
        text.push_str(&format!(
            "  degree {:>3}  residue {}  twist {}  from {}\n",
            g.degree.degree(),
            g.degree.residue(),
            g.twist,
            g.provenance
        ));
    }
    text.push_str("rank table:\n");
    for ((residue, twist), rank) in module.rank_table() {
        text.push_str(&format!(
            "  residue {residue}  twist {twist}  rank {rank}\n"
        ));
    }
    text.push_str("derivation trace:\n");
    for step in trace.iter() {
        text.push_str(&format!(
            "  {} at n = {}: shift {}, twist {}\n      {}\n",
            step.rule, step.n, step.shift, step.twist, step.cite
        ));
    }
    text
}

fn verify_cmd(max_n: u32, format: OutputFormat) -> Result<(String, i32), Failure> {
    require_format(format, &TABULAR, "verify")?;
    let results = run_all(max_n);
    let ok = results.iter().all(|r| r.ok);
    let content = match format {
        OutputFormat::Text => {
            let mut text = String::new();
            for r in &results {
                let status = if r.ok { "ok  " } else { "FAIL" };
                text.push_str(&format!("{status} {}: {}\n", r.name, r.detail));
            }
            if ok {
                text.push_str(&format!("all {} checks passed\n", results.len()));
            } else {
                let failed = results.iter().filter(|r| !r.ok).count();
                text.push_str(&format!("{failed} of {} checks failed\n", results.len()));
            }
            text
        }
        OutputFormat::Json => {
            let checks: Vec<serde_json::Value> = results
                .iter()
                .map(|r| serde_json::json!({"name": r.name, "ok": r.ok, "detail": r.detail}))
                .collect();
            to_json(&serde_json::json!({"max_n": max_n, "checks": checks, "ok": ok}))
        }
        OutputFormat::Csv => csv_rows(
            &["check", "status"],
            results
                .iter()
                .map(|r| vec![r.name.clone(), if r.ok { "ok" } else { "fail" }.to_string()]),
        ),
        OutputFormat::Svg => unreachable!(),
    };
    Ok((content, if ok { 0 } else { 1 }))
}

fn poincare_cmd(n: u32, format: OutputFormat) -> Result<(String, i32), Failure> {
    require_format(format, &TABULAR, "poincare")?;
    let p = poincare_polynomial(n);
    let content = match format {
        OutputFormat::Text => format!("P_{n}(q) = {p}\n"),
        OutputFormat::Json => {
            let coefficients: Vec<serde_json::Value> = p
                .coefficients()
                .map(|(degree, coefficient)| {
                    serde_json::json!({"degree": degree, "coefficient": coefficient})
                })
                .collect();
            to_json(&serde_json::json!({"n": n, "coefficients": coefficients}))
        }
        OutputFormat::Csv => csv_rows(
            &["degree", "coefficient"],
            p.coefficients()
                .map(|(degree, coefficient)| vec![degree.to_string(), coefficient.to_string()]),
        ),
        OutputFormat::Svg => unreachable!(),
    };
    Ok((content, 0))
}

fn render_cmd(n: u32, format: OutputFormat) -> Result<(String, i32), Failure> {
    require_format(format, &[OutputFormat::Text, OutputFormat::Svg], "render")?;
    let set = recursive_enumerate(n);
    let spec = RenderSpec::default();
    let content = match format {
        OutputFormat::Text => {
            let color = std::env::var("WITT_DIAGRAMS_COLOR").as_deref() == Ok("1");
            let mut text = String::new();
            for diagram in set.placed() {
                text.push_str(&diagram.to_string());
                text.push('\n');
                if color {
                    text.push_str(&render_ascii_color(&diagram, &spec));
                } else {
                    text.push_str(&render_ascii(&diagram, &spec));
                }
                text.push('\n');
            }
            text
        }
        OutputFormat::Svg => render_svg(&set, &spec),
        _ => unreachable!(),
    };
    Ok((content, 0))
}

fn rect_cmd(rows: u32, cols: u32, format: OutputFormat) -> Result<(String, i32), Failure> {
    require_format(format, &TABULAR, "rect")?;
    let members = rect_enumerate(rows, cols)?;
    let placed: Vec<PlacedDiagram> = members
        .iter()
        .map(|p| {
            let parts: Vec<i64> = p.parts().iter().map(|&x| i64::from(x)).collect();
            make_diagram(Frame::rectangle(rows, cols), &parts)
                .expect("enumerated members fit their frame")
        })
        .collect();
    let content = match format {
        OutputFormat::Text => {
            let mut text = String::new();
            for member in &members {
                text.push_str(&member.to_string());
                text.push('\n');
            }
            text
        }
        OutputFormat::Json => to_json(&placed),
        OutputFormat::Csv => csv_rows(&["parts", "weight"], diagram_rows(&placed)),
        OutputFormat::Svg => unreachable!(),
    };
    Ok((content, 0))
}
