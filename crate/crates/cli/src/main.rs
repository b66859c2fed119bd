use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use webtab::csp::csp_check;
use webtab::enumerate::{enumerate_dominant_strings, enumerate_got};
use webtab::rotation::{rotate_string, rotate_string_oracle, verify_main_theorem, RotationMethod};
use webtab::strings::SignatureStateString;
use webtab::tableaux::{promote_growth, promote_growth_n, promote_tableau, Got};
use webtab::web::{grow_web, grow_web_traced, to_dot, GrowthPolicy};

mod input;
mod render;
mod verify;

/// Promotion of generalized oscillating tableaux and rotation of A2 webs.
#[derive(Parser)]
#[command(name = "webtab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List dominant strings or generalized oscillating tableaux, one JSON value per line.
    Enumerate {
        #[arg(long)]
        length: usize,
        /// Number of rows of the tableaux.
        #[arg(long, default_value_t = 3)]
        parts: usize,
        /// Only strings that grow into webs.
        #[arg(long)]
        webs_only: bool,
    },
    /// Promote tableaux (or the tableaux of strings) read from a file or `-`.
    Promote {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Growth)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// Fail unless both modes agree.
        #[arg(long)]
        check: bool,
        /// Also print the rows and rules of the growth diagram (one step only).
        #[arg(long)]
        trace: bool,
    },
    /// Grow the web of each string.
    Grow {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = WebFormat::Json)]
        format: WebFormat,
        #[arg(long, value_enum, default_value_t = Policy::Leftmost)]
        policy: Policy,
        /// Print the frontier after each growth step instead of the web.
        #[arg(long)]
        trace: bool,
    },
    /// Rotate each string one position.
    Rotate {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        /// Also compare with promotion and fail on a mismatch.
        #[arg(long)]
        check: bool,
    },
    /// Run an exhaustive suite; exit status 1 on any failure.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        max_length: usize,
        #[arg(long, default_value_t = 3)]
        parts: usize,
        #[arg(long, default_value_t = 3)]
        rows: usize,
        #[arg(long, default_value_t = 3)]
        cols: usize,
    },
    /// Cyclic sieving table for promotion on a rectangle.
    Csp {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Human-readable table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Draw a web given as JSON or DOT, or grown from `--string`.
    Render {
        #[arg(long, conflicts_with = "string")]
        input: Option<PathBuf>,
        #[arg(long)]
        string: Option<String>,
        #[arg(long, value_enum, default_value_t = WebFormat::Svg)]
        format: WebFormat,
        #[arg(long, default_value = "-")]
        output: PathBuf,
        #[arg(long, default_value_t = 200.0)]
        radius: f64,
        #[arg(long, default_value_t = 40.0)]
        spacing: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Growth,
    Tableau,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WebFormat {
    Json,
    Dot,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    MainTheorem,
    Equivalence,
    Invariants,
    Csp,
    Orbits,
}

/// Runs to completion but some check failed.
struct Failed;

type Outcome = Result<Result<(), Failed>>;

fn emit<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    if path == Path::new("-") {
        io::stdout().write_all(text.as_bytes())?;
    } else {
        fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn promote_once(t: &Got, mode: Mode) -> Result<Got> {
    Ok(match mode {
        Mode::Growth => promote_growth(t)?.0,
        Mode::Tableau => promote_tableau(t)?,
    })
}

fn cmd_promote(input: &Path, mode: Mode, steps: usize, check: bool, trace: bool) -> Outcome {
    if trace && steps != 1 {
        bail!("--trace needs --steps 1");
    }
    let mut out = BufWriter::new(io::stdout().lock());
    let mut ok = true;
    for rec in input::read_records(input)? {
        let t = rec.into_got()?;
        let mut cur = t.clone();
        for _ in 0..steps {
            cur = promote_once(&cur, mode)?;
        }
        if check {
            let other = match mode {
                Mode::Growth => (0..steps).try_fold(t.clone(), |c, _| promote_tableau(&c))?,
                Mode::Tableau => promote_growth_n(&t, steps)?,
            };
            if other != cur {
                ok = false;
                eprintln!("modes disagree on {t}");
            }
        }
        if trace {
            let (_, tr) = promote_growth(&t)?;
            emit(&mut out, &serde_json::json!({ "output": cur, "rows": tr.rows, "rules": tr.rules.iter().map(|r| r.to_string()).collect::<Vec<_>>() }))?;
        } else {
            emit(&mut out, &cur)?;
        }
    }
    out.flush()?;
    Ok(if ok { Ok(()) } else { Err(Failed) })
}

fn cmd_grow(input: &Path, format: WebFormat, policy: Policy, trace: bool) -> Outcome {
    let policy = match policy {
        Policy::Leftmost => GrowthPolicy::LeftmostFirst,
        Policy::Rightmost => GrowthPolicy::RightmostFirst,
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for rec in input::read_records(input)? {
        let s = rec.into_string()?;
        let (w, frontier) = grow_web_traced(&s, policy).with_context(|| format!("string {s}"))?;
        if trace {
            let steps: Vec<String> = frontier.iter().map(|f| f.to_string()).collect();
            emit(&mut out, &steps)?;
            continue;
        }
        match format {
            WebFormat::Json => emit(&mut out, &w)?,
            WebFormat::Dot => out.write_all(to_dot(&w).as_bytes())?,
            WebFormat::Svg => out.write_all(render::to_svg(&w, &render::Layout::default()).as_bytes())?,
        }
    }
    out.flush()?;
    Ok(Ok(()))
}

#[derive(Serialize)]
struct Rotated {
    input: SignatureStateString,
    rotated: SignatureStateString,
    method: RotationMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches_promotion: Option<bool>,
}

fn cmd_rotate(input: &Path, check: bool) -> Outcome {
    let mut out = BufWriter::new(io::stdout().lock());
    let mut ok = true;
    for rec in input::read_records(input)? {
        let s = rec.into_string()?;
        let web = grow_web(&s).with_context(|| format!("string {s}"))?;
        let (rotated, method) = if s.is_empty() || web.contains_identity_component() {
            (rotate_string_oracle(&s)?, RotationMethod::GraphSearch)
        } else {
            (rotate_string(&s, &web)?, RotationMethod::Formula)
        };
        let matches_promotion = if check {
            let passed = verify_main_theorem(&s)?.passed();
            ok &= passed;
            Some(passed)
        } else {
            None
        };
        emit(&mut out, &Rotated { input: s, rotated, method, matches_promotion })?;
    }
    out.flush()?;
    Ok(if ok { Ok(()) } else { Err(Failed) })
}

fn cmd_verify(suite: Suite, max_length: usize, parts: usize, rows: usize, cols: usize) -> Outcome {
    let summary = match suite {
        Suite::MainTheorem => verify::main_theorem(max_length),
        Suite::Equivalence => verify::equivalence(parts, max_length),
        Suite::Invariants => verify::invariants(parts, max_length),
        Suite::Csp => verify::csp(rows, cols)?,
        Suite::Orbits => verify::orbits(parts, max_length)?,
    };
    let mut out = io::stdout().lock();
    emit(&mut out, &summary)?;
    Ok(if summary.pass { Ok(()) } else { Err(Failed) })
}

fn cmd_csp(rows: usize, cols: usize, table: bool) -> Outcome {
    let rep = csp_check(rows, cols)?;
    let mut out = io::stdout().lock();
    if table {
        writeln!(out, "{rows}x{cols}: {} tableaux, X(q) = {}", rep.tableaux, rep.polynomial)?;
        writeln!(out, "{:>4} {:>8} {:>8} {:>6}", "d", "fixed", "X(z^d)", "match")?;
        for r in &rep.rows {
            writeln!(out, "{:>4} {:>8} {:>8} {:>6}", r.d, r.fixed_points, r.x_value, r.matches)?;
        }
        writeln!(out, "{}", if rep.pass { "pass" } else { "FAIL" })?;
    } else {
        emit(&mut out, &rep)?;
    }
    Ok(if rep.pass { Ok(()) } else { Err(Failed) })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Enumerate { length, parts, webs_only } => {
            if parts == 0 {
                bail!("--parts must be at least 1");
            }
            let mut out = BufWriter::new(io::stdout().lock());
            if webs_only {
                for s in enumerate_dominant_strings(length) {
                    emit(&mut out, &s)?;
                }
            } else {
                for t in enumerate_got(length, parts) {
                    emit(&mut out, &t)?;
                }
            }
            out.flush()?;
            Ok(Ok(()))
        }
        Command::Promote { input, mode, steps, check, trace } => cmd_promote(&input, mode, steps, check, trace),
        Command::Grow { input, format, policy, trace } => cmd_grow(&input, format, policy, trace),
        Command::Rotate { input, check } => cmd_rotate(&input, check),
        Command::Verify { suite, max_length, parts, rows, cols } => cmd_verify(suite, max_length, parts, rows, cols),
        Command::Csp { rows, cols, table } => cmd_csp(rows, cols, table),
        Command::Render { input, string, format, output, radius, spacing, seed } => {
            let web = match (input, string) {
                (Some(path), None) => input::read_web(&path)?,
                (None, Some(s)) => {
                    let s: SignatureStateString = s.parse()?;
                    grow_web(&s)?
                }
                _ => bail!("give exactly one of --input and --string"),
            };
            web.validate()?;
            let layout = render::Layout { radius, spacing, seed, ..Default::default() };
            let text = match format {
                WebFormat::Svg => render::to_svg(&web, &layout),
                WebFormat::Dot => to_dot(&web),
                WebFormat::Json => serde_json::to_string(&web)? + "\n",
            };
            write_output(&output, &text)?;
            Ok(Ok(()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
