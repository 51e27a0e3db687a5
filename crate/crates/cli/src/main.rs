//! Command-line interface: one subcommand per library capability, JSON
//! in/out with exact rational strings, deterministic verification suites,
//! and SVG rendering. Exit codes: 0 success, 1 verification failure,
//! 2 usage/parse error, 3 domain error.

mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hexagrammum::verify::{run_suite, Suite, SuiteReport};
use hexagrammum::{
    classify_222, degenerate_pascal, eval_pascal, kirkman_triples, steiner_triples, tri_symmetric,
    DegenerationSpec, P1Point, PascalSymbol, Sextuple,
};
use render::RenderOptions;

#[derive(Parser)]
#[command(
    name = "hexagrammum",
    version,
    about = "Exact Pascal lines on a conic: evaluation, degenerations, incidence theorems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct IoArgs {
    /// Input: a file path, inline JSON (starting with '{'), or '-' for stdin
    #[arg(long)]
    input: String,
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Pascal line of one symbol at a sextuple
    Pascal {
        #[command(flatten)]
        io: IoArgs,
        /// Pascal symbol, e.g. ABC/FED (any of its 12 representatives)
        #[arg(long)]
        symbol: String,
    },
    /// Evaluate all 60 Pascal lines at a sextuple
    AllPascals {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Evaluate the resolved Pascal at a blow-up fiber point
    Degenerate {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Classify all 60 Pascals over a row-matched base {"P","Q","R"}
    #[command(name = "classify-222")]
    Classify222 {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Compute the 60 Kirkman points of a sextuple
    Kirkman {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Compute the 20 Steiner points of a sextuple
    Steiner {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Search for a tri-symmetry witness of a sextuple
    TriSymmetric {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Run a named verification suite (or all of them)
    Verify {
        /// Suite name, or 'all'
        #[arg(long)]
        suite: String,
        /// RNG seed; fully determines every sweep
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override the suite's main sample count
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a configuration as SVG (sextuple or {"P","Q","R"} triple)
    Render {
        /// Input: a file path, inline JSON, or '-' for stdin
        #[arg(long)]
        input: String,
        /// Draw this symbol's cross-hairs and Pascal line (sextuple mode)
        #[arg(long)]
        symbol: Option<String>,
        /// Mark the defined Kirkman points
        #[arg(long)]
        kirkman: bool,
        /// Mark the defined Steiner points
        #[arg(long)]
        steiner: bool,
        /// Pixel size of the square canvas
        #[arg(long, default_value_t = 800)]
        size: u32,
        /// Stroke width in chart units (default depends on the frame)
        #[arg(long)]
        stroke_width: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    /// Malformed input or unknown name: exit 2.
    Usage(String),
    /// Well-formed input that names no geometric value: exit 3.
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

/// Maps library errors onto the exit-code contract.
fn lift(e: hexagrammum::Error) -> CliError {
    match e {
        hexagrammum::Error::Parse(_) => CliError::Usage(e.to_string()),
        _ => CliError::Domain(e.to_string()),
    }
}

fn read_input(input: &str) -> Result<String, CliError> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') {
        return Ok(input.to_string());
    }
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(input)
        .map_err(|e| CliError::Usage(format!("cannot read `{input}`: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(input: &str) -> Result<T, CliError> {
    let text = read_input(input)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid input: {e}")))
}

fn parse_symbol(s: &str) -> Result<PascalSymbol, CliError> {
    s.parse().map_err(lift)
}

fn line_json(line: &hexagrammum::ProjLine) -> Value {
    serde_json::to_value(line).expect("serializable")
}

fn point_json(p: &hexagrammum::ProjPoint) -> Value {
    serde_json::to_value(p).expect("serializable")
}

fn emit(payload: &str, out: &Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| CliError::Usage(format!("cannot write `{}`: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn emit_value(value: &Value, io_format: Format, out: &Option<PathBuf>) -> Result<(), CliError> {
    let payload = match io_format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value).expect("json")),
        Format::Text => format!("{}\n", value_to_text(value)),
    };
    emit(&payload, out)
}

/// Plain-text rendering of a JSON payload: one `key: value` line per field,
/// arrays inline.
fn value_to_text(v: &Value) -> String {
    fn scalar(v: &Value) -> String {
        match v {
            Value::Array(items) => {
                let inner: Vec<String> = items.iter().map(scalar).collect();
                format!("[{}]", inner.join(", "))
            }
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    fn go(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(map) => {
                for (k, val) in map {
                    match val {
                        Value::Object(_) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            go(val, indent + 1, out);
                        }
                        Value::Array(items)
                            if items.iter().any(|i| i.is_object() || i.is_array()) =>
                        {
                            out.push_str(&format!("{pad}{k}:\n"));
                            for item in items {
                                go(item, indent + 1, out);
                            }
                        }
                        _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                    }
                }
            }
            Value::Array(items) => {
                for item in items {
                    go(item, indent, out);
                }
            }
            other => out.push_str(&format!("{pad}{}\n", scalar(other))),
        }
        if indent == 0 && out.ends_with('\n') {
            out.pop();
        }
    }
    let mut out = String::new();
    go(v, 0, &mut out);
    out
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Pascal { io, symbol } => {
            let h: Sextuple = parse_json(&io.input)?;
            let s = parse_symbol(&symbol)?;
            let value = match eval_pascal(&h, &s) {
                Some(line) => json!({ "defined": true, "line": line_json(&line) }),
                None => json!({ "defined": false }),
            };
            emit_value(&value, io.format, &io.out)?;
            Ok(0)
        }
        Command::AllPascals { io } => {
            let h: Sextuple = parse_json(&io.input)?;
            let pascals: Vec<Value> = hexagrammum::enumerate_symbols()
                .iter()
                .map(|s| match eval_pascal(&h, s) {
                    Some(line) => json!({
                        "symbol": s.to_string(),
                        "defined": true,
                        "line": line_json(&line),
                    }),
                    None => json!({ "symbol": s.to_string(), "defined": false }),
                })
                .collect();
            emit_value(&json!({ "pascals": pascals }), io.format, &io.out)?;
            Ok(0)
        }
        Command::Degenerate { io } => {
            let spec: DegenerationSpec = parse_json(&io.input)?;
            let line = degenerate_pascal(&spec).map_err(lift)?;
            emit_value(&json!({ "line": line_json(&line) }), io.format, &io.out)?;
            Ok(0)
        }
        Command::Classify222 { io } => {
            let points: TriplePoints = parse_json(&io.input)?;
            let c = classify_222(&points.p, &points.q, &points.r).map_err(lift)?;
            let entries: Vec<Value> = c
                .entries
                .iter()
                .map(|(s, class)| {
                    let mut obj = serde_json::to_value(class).expect("serializable");
                    obj.as_object_mut()
                        .expect("object")
                        .insert("symbol".to_string(), json!(s.to_string()));
                    obj
                })
                .collect();
            let value = json!({
                "P": points.p.to_string(),
                "Q": points.q.to_string(),
                "R": points.r.to_string(),
                "counts": serde_json::to_value(&c.counts).expect("serializable"),
                "entries": entries,
            });
            emit_value(&value, io.format, &io.out)?;
            Ok(0)
        }
        Command::Kirkman { io } => {
            let h: Sextuple = parse_json(&io.input)?;
            let points: Vec<Value> = kirkman_triples()
                .iter()
                .map(|kt| {
                    let triple: Vec<String> = kt.members().iter().map(|s| s.to_string()).collect();
                    match hexagrammum::hexagram::kirkman_point(&h, kt) {
                        Some(p) => {
                            json!({ "triple": triple, "defined": true, "point": point_json(&p) })
                        }
                        None => json!({ "triple": triple, "defined": false }),
                    }
                })
                .collect();
            emit_value(&json!({ "kirkman_points": points }), io.format, &io.out)?;
            Ok(0)
        }
        Command::Steiner { io } => {
            let h: Sextuple = parse_json(&io.input)?;
            let points: Vec<Value> = steiner_triples()
                .iter()
                .map(|st| {
                    let triple: Vec<String> = st.members().iter().map(|s| s.to_string()).collect();
                    match hexagrammum::hexagram::steiner_point(&h, st) {
                        Some(p) => {
                            json!({ "triple": triple, "defined": true, "point": point_json(&p) })
                        }
                        None => json!({ "triple": triple, "defined": false }),
                    }
                })
                .collect();
            emit_value(&json!({ "steiner_points": points }), io.format, &io.out)?;
            Ok(0)
        }
        Command::TriSymmetric { io } => {
            let h: Sextuple = parse_json(&io.input)?;
            let value = match tri_symmetric(&h).map_err(lift)? {
                Some(alpha) => json!({ "tri_symmetric": true, "alpha": alpha.to_string() }),
                None => json!({ "tri_symmetric": false }),
            };
            emit_value(&value, io.format, &io.out)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            seed,
            samples,
            format,
            out,
        } => {
            let reports: Vec<SuiteReport> = if suite == "all" {
                Suite::ALL
                    .iter()
                    .map(|&s| run_suite(s, seed, samples))
                    .collect()
            } else {
                let s = Suite::from_name(&suite).ok_or_else(|| {
                    let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                    CliError::Usage(format!(
                        "unknown suite `{suite}`; known suites: all, {}",
                        names.join(", ")
                    ))
                })?;
                vec![run_suite(s, seed, samples)]
            };
            let passed = reports.iter().all(SuiteReport::passed);
            let value = json!({
                "passed": passed,
                "reports": serde_json::to_value(&reports).expect("serializable"),
            });
            emit_value(&value, format, &out)?;
            Ok(if passed { 0 } else { 1 })
        }
        Command::Render {
            input,
            symbol,
            kirkman,
            steiner,
            size,
            stroke_width,
            out,
        } => {
            let text = read_input(&input)?;
            let raw: Value = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("invalid input: {e}")))?;
            let opts = RenderOptions {
                size,
                stroke_width,
                kirkman,
                steiner,
            };
            let svg = if raw.get("A").is_some() {
                let h: Sextuple = serde_json::from_value(raw)
                    .map_err(|e| CliError::Usage(format!("invalid sextuple: {e}")))?;
                let s = symbol.map(|s| parse_symbol(&s)).transpose()?;
                render::render_sextuple(&h, s.as_ref(), &opts)
            } else if raw.get("P").is_some() {
                let points: TriplePoints = serde_json::from_value(raw)
                    .map_err(|e| CliError::Usage(format!("invalid triple: {e}")))?;
                render::render_triangle(&points.p, &points.q, &points.r, &opts).map_err(lift)?
            } else {
                return Err(CliError::Usage(
                    "render input must be a sextuple {\"A\"..\"F\"} or a triple {\"P\",\"Q\",\"R\"}"
                        .to_string(),
                ));
            };
            emit(&svg, &out)?;
            Ok(0)
        }
    }
}

/// A row-matched base: three distinct conic parameters.
#[derive(serde::Deserialize)]
struct TriplePoints {
    #[serde(rename = "P")]
    p: P1Point,
    #[serde(rename = "Q")]
    q: P1Point,
    #[serde(rename = "R")]
    r: P1Point,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
