//! Command-line front end: evaluate curve points, emit digit sequences
//! and their generating automata, render polylines, and run the
//! verification suites.

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;
use std::path::PathBuf;
use std::process::ExitCode;

use levy_dragon::binary::{parse_point, to_word, PointInput};
use levy_dragon::curve::{decode, evaluate_at, ifs_limit, recursion_value, CurvePoint};
use levy_dragon::ifs::{
    curve_maps, general_family_float, subdivide, FloatMap, DEFAULT_MAX_DEPTH,
};
use levy_dragon::render::{to_csv, to_svg, ColorMode, RenderSpec};
use levy_dragon::revolving::{digit_sequence, DigitAutomaton};
use levy_dragon::verify::run_named;
use levy_dragon::{Curve, Error};

#[derive(Parser)]
#[command(
    name = "levy-dragon",
    about = "Evaluate, verify and render the Lévy dragon curve and its shifted twin",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveArg {
    Levy,
    Shifted,
}

impl From<CurveArg> for Curve {
    fn from(arg: CurveArg) -> Curve {
        match arg {
            CurveArg::Levy => Curve::Levy,
            CurveArg::Shifted => Curve::Shifted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    /// Unwind the two-branch functional equation (terminating inputs only).
    Recursion,
    /// Compose the contraction maps along the digits.
    Ifs,
    /// Regenerate the digit sequence and decode it back to a value.
    Decode,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderCurveArg {
    Levy,
    Shifted,
    /// The two-parameter family; see --lambda and --tau.
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Svg,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    /// The machine emitting Lévy digits (with silent states).
    G1,
    /// The machine emitting shifted digits (never silent).
    G2,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormatArg {
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorArg {
    Solid,
    Gradient,
}

fn point_arg(s: &str) -> Result<PointInput, Error> {
    parse_point(s)
}

fn complex_arg(s: &str) -> Result<Complex64, String> {
    parse_complex(s).ok_or_else(|| format!("'{s}' is not a complex literal like 1, -0.5+0.5i, or i"))
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a curve point, exactly when the input terminates.
    Eval {
        #[arg(long, value_enum)]
        curve: CurveArg,
        /// The parameter: "p/q", a decimal, or a binary literal like 0.1011b.
        #[arg(long, value_parser = point_arg)]
        x: PointInput,
        /// Series terms (or composition depth with --oracle ifs) for
        /// non-terminating inputs.
        #[arg(long, default_value_t = 64)]
        terms: usize,
        /// Print only the exact value; fails on non-terminating inputs.
        #[arg(long)]
        exact: bool,
        /// Evaluate through an independent oracle instead of the series.
        #[arg(long, value_enum)]
        oracle: Option<OracleArg>,
    },
    /// Print the unit-digit sequence of a curve point.
    Digits {
        #[arg(long, value_enum)]
        curve: CurveArg,
        #[arg(long, value_parser = point_arg)]
        x: PointInput,
        /// How many digits to emit.
        #[arg(short)]
        n: usize,
        /// Emit a JSON array instead of comma-separated text.
        #[arg(long)]
        json: bool,
    },
    /// Emit a digit-generating machine in DOT form.
    Graph {
        #[arg(long, value_enum)]
        which: GraphArg,
        #[arg(long, value_enum, default_value_t = GraphFormatArg::Dot)]
        format: GraphFormatArg,
    },
    /// Subdivide a curve into a polyline and write SVG or CSV.
    Render {
        #[arg(long, value_enum)]
        curve: RenderCurveArg,
        /// Scale parameter of the general family (default 1).
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        lambda: Option<Complex64>,
        /// Translation parameter of the general family (default 0).
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        tau: Option<Complex64>,
        #[arg(long)]
        depth: u32,
        #[arg(long, value_enum)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ColorArg::Solid)]
        color: ColorArg,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
    },
    /// Run invariant suites; nonzero exit on any failure.
    Verify {
        /// One of: exact, binary, revolving, curve, geometry, render, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

/// Decimal "re±im*i" form, shortest round-trip digits.
fn format_complex(z: Complex64) -> String {
    let re = if z.re == 0.0 { 0.0 } else { z.re };
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    if im < 0.0 {
        format!("{re}-{}*i", -im)
    } else {
        format!("{re}+{im}*i")
    }
}

/// Accepts "a", "bi", "a+bi", "a-bi" with unit shorthands "i"/"-i".
fn parse_complex(s: &str) -> Option<Complex64> {
    let t = s.trim();
    if let Some(imag) = t.strip_suffix('i') {
        // Split off a trailing real±imag pair if present. Walk from the
        // end to find a sign that is not an exponent's.
        let body = imag;
        for (pos, ch) in body.char_indices().rev() {
            if (ch == '+' || ch == '-') && pos > 0 {
                let prev = body.as_bytes()[pos - 1];
                if prev == b'e' || prev == b'E' {
                    continue;
                }
                let re: f64 = body[..pos].parse().ok()?;
                let im_str = &body[pos..];
                let im: f64 = match im_str {
                    "+" => 1.0,
                    "-" => -1.0,
                    _ => im_str.parse().ok()?,
                };
                return Some(Complex64::new(re, im));
            }
        }
        let im: f64 = match body {
            "" => 1.0,
            "-" => -1.0,
            _ => body.parse().ok()?,
        };
        return Some(Complex64::new(0.0, im));
    }
    t.parse().ok().map(|re| Complex64::new(re, 0.0))
}

fn print_point(p: &CurvePoint, exact_only: bool) -> Result<(), Error> {
    if exact_only {
        match &p.exact {
            Some(v) => println!("{v}"),
            None => return Err(Error::NonDyadic),
        }
        return Ok(());
    }
    if let Some(v) = &p.exact {
        println!("exact: {v}");
    }
    println!("approx: {}", format_complex(p.approx));
    println!("tail_bound: {}", p.tail_bound);
    Ok(())
}

fn float_maps(curve: Curve) -> [FloatMap; 2] {
    let maps = curve_maps(curve);
    [maps[0].to_float(), maps[1].to_float()]
}

fn max_depth() -> u32 {
    std::env::var("DRAGON_MAX_DEPTH")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DEPTH)
}

fn complete_word(x: &PointInput, budget: usize) -> Result<levy_dragon::binary::BinaryWord, Error> {
    let (w, complete) = to_word(x, budget)?;
    if complete {
        Ok(w)
    } else {
        Err(Error::NonDyadic)
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Eval { curve, x, terms, exact, oracle } => {
            let curve = Curve::from(curve);
            match oracle {
                None => {
                    let p = evaluate_at(curve, &x, terms)?;
                    print_point(&p, exact)?;
                }
                Some(OracleArg::Recursion) => {
                    let w = complete_word(&x, terms)?;
                    let v = recursion_value(curve, &w)?;
                    if exact {
                        println!("{v}");
                    } else {
                        println!("exact: {v}");
                        println!("approx: {}", format_complex(v.to_complex()));
                        println!("tail_bound: 0");
                    }
                }
                Some(OracleArg::Ifs) => {
                    if exact {
                        return Err(Error::InvalidParameter(
                            "the composition oracle is approximate; drop --exact".into(),
                        ));
                    }
                    let (w, _) = to_word(&x, terms)?;
                    let z = ifs_limit(&float_maps(curve), &w, terms)?;
                    println!("approx: {}", format_complex(z));
                    // Depth-n compositions land within L^n · 2 of the limit.
                    println!("tail_bound: {}", 2.0 * FRAC_1_SQRT_2.powi(terms as i32));
                }
                Some(OracleArg::Decode) => {
                    let w = complete_word(&x, terms)?;
                    let count = match curve {
                        Curve::Levy => w.width(),
                        Curve::Shifted => w.width().saturating_sub(1),
                    };
                    let seq = digit_sequence(curve, &w, count);
                    let p = decode(curve, &seq)?;
                    print_point(&p, exact)?;
                }
            }
            Ok(0)
        }
        Command::Digits { curve, x, n, json } => {
            let curve = Curve::from(curve);
            let (w, _) = to_word(&x, n)?;
            let seq = digit_sequence(curve, &w, n);
            if json {
                let body: Vec<String> = seq.iter().map(|d| format!("\"{d}\"")).collect();
                println!("[{}]", body.join(","));
            } else {
                let body: Vec<&str> = seq.iter().map(|d| d.as_str()).collect();
                println!("{}", body.join(","));
            }
            Ok(0)
        }
        Command::Graph { which, format: GraphFormatArg::Dot } => {
            let curve = match which {
                GraphArg::G1 => Curve::Levy,
                GraphArg::G2 => Curve::Shifted,
            };
            print!("{}", DigitAutomaton::for_curve(curve).to_dot());
            Ok(0)
        }
        Command::Render { curve, lambda, tau, depth, format, output, color, width, height } => {
            let (maps, tag): ([FloatMap; 2], String) = match curve {
                RenderCurveArg::Levy => (float_maps(Curve::Levy), "levy".into()),
                RenderCurveArg::Shifted => (float_maps(Curve::Shifted), "shifted".into()),
                RenderCurveArg::General => {
                    let lambda = lambda.unwrap_or(Complex64::new(1.0, 0.0));
                    let tau = tau.unwrap_or(Complex64::new(0.0, 0.0));
                    let maps = general_family_float(lambda, tau)?;
                    (maps, format!("general λ={} τ={}", format_complex(lambda), format_complex(tau)))
                }
            };
            let polyline = subdivide(&maps[0], &maps[1], depth, max_depth(), tag)?;
            let text = match format {
                FormatArg::Svg => {
                    let spec = RenderSpec {
                        width,
                        height,
                        color_mode: match color {
                            ColorArg::Solid => ColorMode::Solid,
                            ColorArg::Gradient => ColorMode::ParameterGradient,
                        },
                        ..Default::default()
                    };
                    to_svg(&polyline, &spec)?
                }
                FormatArg::Csv => to_csv(&polyline),
            };
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::InvalidParameter(format!("cannot write {path:?}: {e}")))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Verify { suite, seed } => {
            let results = run_named(&suite, seed)?;
            let mut first_failure = None;
            for r in &results {
                let status = if r.passed { "ok  " } else { "FAIL" };
                println!("[{}] {status} {} — {}", r.suite, r.property, r.detail);
                if !r.passed && first_failure.is_none() {
                    first_failure = Some(r);
                }
            }
            match first_failure {
                Some(r) => {
                    println!("first failing property: [{}] {}", r.suite, r.property);
                    Ok(1)
                }
                None => {
                    println!("all {} properties passed (seed {seed})", results.len());
                    Ok(0)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
