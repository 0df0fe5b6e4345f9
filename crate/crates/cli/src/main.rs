use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lucaskit::analysis::{self, AnalysisError};
use lucaskit::coxcat::{self, CoxError, CoxeterType};
use lucaskit::exec::{configure_threads, Exec};
use lucaskit::involution::{iota_traced, ExtendedTiling, InvolutionError};
use lucaskit::lucas;
use lucaskit::shapes::{
    distinct_partials, enumerate_tilings, partial_from_tiling, path_from_tiling, render_ascii, render_svg,
    render_tiling_ascii, render_tiling_svg, shape_weight, tiling_weight, verify_block_partition, PartialTiling,
    Shape, ShapeError, Strip, Tiling, Variant,
};
use lucaskit::{Poly2, PolyError};
use serde_json::{json, Value};
use thiserror::Error;

mod output;
mod verify;

use output::{Format, Output};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Cox(#[from] CoxError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Lucas analogues of binomial coefficients, Catalan numbers and their
/// tiling models.
#[derive(Debug, Parser)]
#[command(name = "lucaskit", version)]
struct Cli {
    /// Output format; not every command supports every format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The Lucas polynomial {n}
    Lucas {
        #[arg(long)]
        n: u32,
    },
    /// {n}! = {1}{2}...{n}
    Lucastorial {
        #[arg(long)]
        n: u32,
    },
    /// {n brace k}, zero outside 0 <= k <= n
    Lucasnomial {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// The d-divisible Lucasnomial {n brace k}_d
    Dlucasnomial {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long)]
        d: u32,
    },
    /// The Lucas-Catalan polynomial C_n
    Catalan {
        #[arg(long)]
        n: u32,
    },
    /// The Fuss-Catalan polynomial C_{n,k}
    Fuss {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Coxeter-Catalan or Coxeter-Fuss-Catalan polynomial of a Weyl or
    /// Coxeter group
    Coxeter {
        /// A, B, D, I2, H3, H4, F4, E6, E7 or E8
        #[arg(long = "type")]
        family: String,
        /// Rank for A, B and D
        #[arg(long)]
        n: Option<u32>,
        /// Dihedral parameter for I2
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        fuss_k: Option<u32>,
    },
    /// Rational Catalan analogue for coprime a, b
    Rational {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    /// Narayana analogues N(n, k); all k when --k is omitted
    Narayana {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Domino tilings of staircase and skew shapes
    #[command(subcommand)]
    Tilings(TilingsCmd),
    /// The sign-free involution on extended tilings
    #[command(subcommand)]
    Involution(InvolutionCmd),
    /// Check an identity or theorem over a range of parameters
    Verify {
        #[command(subcommand)]
        target: verify::Target,
    },
    /// Unimodality, log-concavity and real-rootedness of coefficients
    Analyze {
        /// e.g. lucasnomial:6:3, catalan:4, coxeter:E6, coxeter-fuss:B3:2
        #[arg(long, required = true)]
        expr: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
enum TilingsCmd {
    /// List the tilings of a shape with their weights
    Enumerate {
        /// delta:n, ddelta:n:d, row:m or skew:outer/inner
        #[arg(long)]
        shape: String,
        /// Print at most this many tilings (the totals are always exact)
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Group tilings into blocks by partial tiling and compare the sum of
    /// block weights with the closed form
    Partition {
        /// binomial:n:k, catalan:n, fuss:n:k or ddiv:n:k:d
        #[arg(long)]
        variant: String,
        /// Also list every partial tiling
        #[arg(long)]
        list: bool,
    },
    /// Draw one tiling as ASCII or SVG
    Render(RenderArgs),
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long, conflicts_with = "variant", required_unless_present = "variant")]
    shape: Option<String>,
    /// Draw the lattice path of this variant as well
    #[arg(long)]
    variant: Option<String>,
    /// Rows from the bottom separated by '/', e.g. "MDM/DM/M"; '-' is an
    /// empty row
    #[arg(long)]
    tiling: String,
    /// Draw the partial tiling of the block instead of the full tiling
    #[arg(long, requires = "variant")]
    partial: bool,
}

#[derive(Debug, Subcommand)]
enum InvolutionCmd {
    /// Apply the involution to one extended tiling
    Apply {
        /// A JSON file, '-' for stdin, or the JSON text itself
        #[arg(long)]
        input: String,
    },
    /// Exhaustively check the involution on type (n, k, r)
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = std::env::var("LUCASKIT_THREADS").ok().and_then(|v| v.trim().parse().ok()) {
        configure_threads(n);
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let out = dispatch(&cli.command)?;
    let text = out
        .render(cli.format)
        .ok_or_else(|| usage(format!("--format {} is not available for this command", cli.format)))?;
    match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
        None => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not worth an error
            let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
        }
    }
    Ok(if out.passed { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn dispatch(cmd: &Command) -> Result<Output, CliError> {
    Ok(match cmd {
        Command::Lucas { n } => Output::poly(&lucas::lucas(*n)),
        Command::Lucastorial { n } => Output::poly(&lucas::lucastorial(*n)),
        Command::Lucasnomial { n, k } => Output::poly(&lucas::lucasnomial(*n, *k)?),
        Command::Dlucasnomial { n, k, d } => {
            if *d == 0 {
                return Err(usage("--d must be positive"));
            }
            Output::poly(&lucas::d_lucasnomial(*n, *k, *d)?)
        }
        Command::Catalan { n } => Output::poly(&coxcat::lucas_catalan(*n)?),
        Command::Fuss { n, k } => {
            if *k == 0 {
                return Err(usage("--k must be positive"));
            }
            Output::poly(&coxcat::fuss_catalan(*n, *k)?)
        }
        Command::Coxeter { family, n, m, fuss_k } => {
            let param = match (n, m) {
                (Some(_), Some(_)) => return Err(usage("give --n or --m, not both")),
                (p, q) => p.or(*q),
            };
            let w = CoxeterType::from_family(family, param)?;
            match fuss_k {
                Some(k) => Output::poly(&coxcat::coxeter_fuss_catalan(w, *k)?),
                None => Output::poly(&coxcat::coxeter_catalan(w)?),
            }
        }
        Command::Rational { a, b } => conjectural(Output::poly, &coxcat::rational_catalan(*a, *b)?),
        Command::Narayana { n, k: Some(k) } => conjectural(Output::poly, &coxcat::narayana(*n, *k)?),
        Command::Narayana { n, k: None } => narayana_row(*n)?,
        Command::Tilings(cmd) => tilings(cmd)?,
        Command::Involution(cmd) => involution(cmd)?,
        Command::Verify { target } => verify::run(target.clone()),
        Command::Analyze { expr } => analyze(expr)?,
    })
}

/// Nonnegativity of these is only conjectured, so a negative coefficient
/// is reported through the exit code.
fn conjectural(show: fn(&Poly2) -> Output, p: &Poly2) -> Output {
    let out = show(p);
    let ok = p.has_nonnegative_coeffs();
    out.passed(ok)
}

fn narayana_row(n: u32) -> Result<Output, CliError> {
    let mut pretty = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for k in 1..=n.max(1) {
        let p = coxcat::narayana(n, k)?;
        ok &= p.has_nonnegative_coeffs();
        pretty.push(format!("N({n},{k}) = {p}"));
        rows.push(json!({"n": n, "k": k, "poly": p.to_json_value()}));
    }
    Ok(Output::new(pretty.join("\n")).json(Value::Array(rows)).passed(ok))
}

fn tiling_string(t: &Tiling) -> String {
    let rows: Vec<String> = t
        .strips()
        .iter()
        .map(|s| if s.is_empty() { "-".to_string() } else { s.to_string() })
        .collect();
    rows.join("/")
}

fn partial_string(p: &PartialTiling) -> String {
    let rows: Vec<String> = p.rows.iter().map(|r| r.tokens().concat()).collect();
    format!("{} [{}]", rows.join("/"), p.path)
}

fn parse_tiling(shape: &Shape, text: &str) -> Result<Tiling, CliError> {
    let strips = text.split('/').map(str::parse).collect::<Result<Vec<Strip>, _>>()?;
    Ok(Tiling::from_strips(shape, &strips)?)
}

fn tilings(cmd: &TilingsCmd) -> Result<Output, CliError> {
    match cmd {
        TilingsCmd::Enumerate { shape, limit } => {
            let shape = Shape::parse(shape)?;
            let all = enumerate_tilings(&shape);
            let shown = &all[..limit.unwrap_or(all.len()).min(all.len())];
            let weight = shape_weight(&shape);
            let mut pretty = Vec::new();
            let mut csv = String::from("index,tiling,weight\n");
            let mut listed = Vec::new();
            for (i, t) in shown.iter().enumerate() {
                let w = tiling_weight(t);
                pretty.push(format!("{:>4}  {}  {}", i + 1, tiling_string(t), w));
                csv.push_str(&format!("{},{},{}\n", i + 1, tiling_string(t), w));
                listed.push(json!({"tiling": tiling_string(t), "weight": w.to_json_value()}));
            }
            pretty.push(format!("{} tilings, total weight {}", all.len(), weight));
            let json = json!({
                "rows": shape.row_lengths(),
                "count": all.len(),
                "weight": weight.to_json_value(),
                "tilings": listed,
            });
            Ok(Output::new(pretty.join("\n")).json(json).csv(csv))
        }
        TilingsCmd::Partition { variant, list } => {
            let variant: Variant = variant.parse()?;
            let report = verify_block_partition(&variant)?;
            let mut pretty = vec![format!(
                "{}: {} tilings in {} blocks, sum of block weights {}, expected {}: {}",
                variant.name(),
                report.tilings,
                report.blocks,
                report.partial_sum,
                report.expected,
                if report.passed() { "PASS" } else { "FAIL" }
            )];
            pretty.extend(report.violations.iter().map(|v| format!("  {v}")));
            let mut json = json!({
                "variant": variant,
                "tilings": report.tilings,
                "blocks": report.blocks,
                "partial_sum": report.partial_sum.to_json_value(),
                "expected": report.expected.to_json_value(),
                "violations": report.violations,
                "passed": report.passed(),
            });
            if *list {
                let partials = distinct_partials(&variant, Exec::default())?;
                for p in &partials {
                    pretty.push(format!("  {}  {}", partial_string(p), p.weight()));
                }
                json["partials"] = Value::Array(partials.iter().map(|p| p.to_json_value()).collect());
            }
            Ok(Output::new(pretty.join("\n")).json(json).passed(report.passed()))
        }
        TilingsCmd::Render(args) => render(args),
    }
}

fn render(args: &RenderArgs) -> Result<Output, CliError> {
    let variant: Option<Variant> = args.variant.as_deref().map(str::parse).transpose()?;
    let shape = match (&variant, &args.shape) {
        (Some(v), _) => v.shape(),
        (None, Some(s)) => Shape::parse(s)?,
        (None, None) => return Err(usage("give --shape or --variant")),
    };
    let tiling = parse_tiling(&shape, &args.tiling)?;
    let (ascii, svg, json) = match &variant {
        Some(v) if args.partial => {
            let p = partial_from_tiling(&tiling, v);
            (render_ascii(&p), render_svg(&p), p.to_json_value())
        }
        Some(v) => {
            let path = path_from_tiling(&tiling, v);
            (
                render_tiling_ascii(&shape, &tiling, Some(&path)),
                render_tiling_svg(&shape, &tiling, Some(&path)),
                json!({"tiling": tiling.to_json_value(), "path": path.to_string()}),
            )
        }
        None => (
            render_tiling_ascii(&shape, &tiling, None),
            render_tiling_svg(&shape, &tiling, None),
            json!({"tiling": tiling.to_json_value()}),
        ),
    };
    let mut out = Output::new(ascii.clone()).json(json);
    out.ascii = Some(ascii);
    out.svg = Some(svg);
    Ok(out)
}

fn read_input(input: &str) -> Result<String, CliError> {
    if input.trim_start().starts_with('{') {
        return Ok(input.to_string());
    }
    let io_err = |source| CliError::Io { path: input.to_string(), source };
    if input == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
        return Ok(text);
    }
    std::fs::read_to_string(input).map_err(io_err)
}

fn involution(cmd: &InvolutionCmd) -> Result<Output, CliError> {
    match cmd {
        InvolutionCmd::Apply { input } => {
            let e = ExtendedTiling::from_json(&read_input(input)?)?;
            let outcome = iota_traced(&e)?;
            let out = &outcome.output;
            let (n, k, r) = e.kind();
            let (_, k2, r2) = out.kind();
            let mut pretty = vec![format!("input type ({n},{k},{r}), output type ({n},{k2},{r2})")];
            for (level, case) in outcome.trace.iter().enumerate() {
                pretty.push(format!("level {}: case ({})", level + 1, case.letter()));
            }
            pretty.push(format!("trace: {}", outcome.trace_string()));
            pretty.push(out.to_json());
            let strips: Vec<String> = out.strips.iter().map(|s| s.to_string()).collect();
            let ascii = format!("{}strips: [{}]\n", render_ascii(&out.b), strips.join("], ["));
            let json = json!({
                "input_type": [n, k, r],
                "output_type": [n, k2, r2],
                "trace": outcome.trace.iter().map(|c| c.letter().to_string()).collect::<Vec<_>>(),
                "output": out.to_json_value(),
            });
            let mut o = Output::new(pretty.join("\n")).json(json);
            o.ascii = Some(ascii);
            o.svg = Some(render_svg(&out.b));
            Ok(o)
        }
        InvolutionCmd::Verify { n, k, r } => {
            Ok(verify::run(verify::Target::Involution { n: Some(*n), k: Some(*k), r: Some(*r), max_n: 0 }))
        }
    }
}

fn analyze(exprs: &[String]) -> Result<Output, CliError> {
    let mut pretty = Vec::new();
    let mut reports = Vec::new();
    for (expr, res) in analysis::analyze_all(exprs) {
        let r = res?;
        let coeffs: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
        pretty.push(format!(
            "{expr}: weight {}, coefficients [{}], unimodal {}, log-concave {}, real-rooted {}",
            r.weight,
            coeffs.join(", "),
            r.unimodal,
            r.log_concave,
            r.real_rooted
        ));
        let mut v = serde_json::to_value(&r).expect("report serializes");
        v["expr"] = Value::String(expr);
        reports.push((v, r.to_csv()));
    }
    let mut out = Output::new(pretty.join("\n"));
    if reports.len() == 1 {
        let (v, csv) = reports.pop().expect("one report");
        out = out.json(v).csv(csv);
    } else {
        out = out.json(Value::Array(reports.into_iter().map(|(v, _)| v).collect()));
    }
    Ok(out)
}
