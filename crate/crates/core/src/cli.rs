//! Command-line front end. Every subcommand writes JSON (or CSV where a
//! table makes sense) to stdout or to `--out`.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 math-domain error,
//! 3 convergence failure.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::experiments::{lemma_suite, run_report, UnitSequenceSpec};
use crate::homspace::{
    discrete_hom_energy, lift, pushforward_pi, quad_hom_energy, res_hommap, zeros_by_direction,
    EnergyTarget,
};
use crate::experiments::mu_sequence_polydisk;
use crate::planar::{
    cantor_capacity, gamma_matrix, height, robin_constant, sample_nu_k, GameMatrix2, PlanarSet,
};
use crate::polycore::{resultant_dd, roots_int, IntPoly};
use crate::robinson::{j14_endpoints, solve_tau, sss_trace, sss_trace_quadrature};

#[derive(Parser, Debug)]
#[command(name = "unitequi", version, about = "Capacity with respect to 0 and infinity, homogeneous capacity, and unit equidistribution")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cantor capacity of a planar set.
    Capacity {
        /// JSON set descriptor.
        #[arg(long)]
        set: String,
    },
    /// Value and equalizing vector of a 2x2 game.
    Game {
        /// Entries `g11,g12,g21,g22`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Robinson interval `J_tau` with its capacity and trace.
    Robinson {
        #[arg(long, allow_hyphen_values = true)]
        tau: f64,
    },
    /// First moment of the limiting measure on `J_tau`, closed form and quadrature.
    Trace {
        #[arg(long, allow_hyphen_values = true)]
        tau: f64,
    },
    /// Height of an integer polynomial relative to a set.
    Height {
        #[arg(long)]
        set: String,
        /// Coefficients `c0 c1 ... cd`, lowest degree first.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Randomized checks of the wedge-product identity and inequality.
    LemmaCheck {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Homogeneous energies: quadrature for a polydisk or ball, or the
    /// discrete energies of the torus sequences.
    HomEnergy {
        /// `r1,r2`
        #[arg(long, conflicts_with_all = ["ball", "n"])]
        polydisk: Option<String>,
        #[arg(long, conflicts_with = "n")]
        ball: Option<f64>,
        /// Degree of `(z1^n - 1, z2^n - 1)` and `(z1^n, z2^n - 1)`.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Resultant closed form and pushforward of the zeros of a lift.
    LiftCheck {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        m: usize,
    },
    /// Convergence report for a unit-polynomial sequence.
    Equidist {
        /// Path to a sequence spec JSON file.
        #[arg(long)]
        spec: PathBuf,
        /// Comma-separated list of indices.
        #[arg(long, default_value = "10,20,40,80")]
        m: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample the limiting measure of a preimage set.
    SampleMeasure {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Rendered output of a command.
pub enum Output {
    Json(Value),
    Text(String),
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad {what} entry '{t}'"))))
        .collect()
}

fn csv_or_json(fmt: Format, csv: String, value: Value) -> Output {
    match fmt {
        Format::Csv => Output::Text(csv),
        Format::Json => Output::Json(value),
    }
}

/// Executes a parsed command.
pub fn execute(cmd: &Command, fmt: Format) -> Result<Output> {
    match cmd {
        Command::Capacity { set } => {
            let k = PlanarSet::from_json(set)?;
            let matrix = match &k {
                PlanarSet::RationalPreimage { .. } => Value::Null,
                _ => {
                    let g = gamma_matrix(&k)?;
                    json!([[g.g11, g.g12], [g.g21, g.g22]])
                }
            };
            let gamma = robin_constant(&k)?;
            Ok(Output::Json(json!({
                "set": serde_json::from_str::<Value>(&k.to_json()).unwrap(),
                "matrix": matrix,
                "robin_constant": gamma,
                "capacity": cantor_capacity(&k)?,
            })))
        }
        Command::Game { matrix } => {
            let v: Vec<f64> = parse_list(matrix, "matrix")?;
            if v.len() != 4 {
                return Err(Error::Parse("matrix needs four entries g11,g12,g21,g22".into()));
            }
            let g = GameMatrix2::new(v[0], v[1], v[2], v[3]);
            let s = g.equalizing_vector();
            Ok(Output::Json(json!({
                "value": g.value(),
                "equalizing_vector": s.map(|s| json!([s.s1, s.s2])),
            })))
        }
        Command::Robinson { tau } => {
            let j = solve_tau(*tau)?;
            let g = gamma_matrix(&j.as_set())?;
            let s = g.equalizing_vector().ok_or(Error::NoEqualizingVector)?;
            let mut out = json!({
                "tau": j.tau,
                "a": j.a,
                "b": j.b,
                "M": j.m,
                "s1": s.s1,
                "s2": s.s2,
                "capacity": cantor_capacity(&j.as_set())?,
                "trace": sss_trace(&j, &s),
            });
            if *tau == 0.25 {
                let (w, a, b) = j14_endpoints();
                out["w"] = json!(w);
                out["a_from_w"] = json!(a);
                out["b_from_w"] = json!(b);
            }
            Ok(Output::Json(out))
        }
        Command::Trace { tau } => {
            let j = solve_tau(*tau)?;
            let s = gamma_matrix(&j.as_set())?
                .equalizing_vector()
                .ok_or(Error::NoEqualizingVector)?;
            Ok(Output::Json(json!({
                "tau": j.tau,
                "s1": s.s1,
                "s2": s.s2,
                "trace": sss_trace(&j, &s),
                "trace_quadrature": sss_trace_quadrature(&j, &s),
            })))
        }
        Command::Height { set, poly } => {
            let k = PlanarSet::from_json(set)?;
            let p: IntPoly = poly.parse()?;
            Ok(Output::Json(serde_json::to_value(height(&k, &p)?).unwrap()))
        }
        Command::LemmaCheck {
            trials,
            max_degree,
            seed,
        } => {
            let r = lemma_suite(*trials, *max_degree, *seed)?;
            Ok(Output::Json(serde_json::to_value(r).unwrap()))
        }
        Command::HomEnergy { polydisk, ball, n } => {
            if let Some(n) = n {
                let seq = mu_sequence_polydisk(*n)?;
                let g = discrete_hom_energy(&seq.generic_selection);
                let ng = discrete_hom_energy(&seq.nongeneric);
                let show = |v: f64| if v.is_finite() { json!(v) } else { json!("inf") };
                return Ok(Output::Json(json!({
                    "n": n,
                    "generic_energy": show(g),
                    "nongeneric_energy": show(ng),
                })));
            }
            let (target, expected) = match (polydisk, ball) {
                (Some(r), None) => {
                    let r: Vec<f64> = parse_list(r, "polydisk")?;
                    if r.len() != 2 {
                        return Err(Error::Parse("polydisk needs r1,r2".into()));
                    }
                    (EnergyTarget::Polydisk { r1: r[0], r2: r[1] }, -(r[0] * r[1]).ln())
                }
                (None, Some(r)) => (EnergyTarget::Ball { r: *r }, -2.0 * r.ln() + 0.5),
                _ => return Err(Error::Parse("give one of --polydisk, --ball or --n".into())),
            };
            let v = quad_hom_energy(target)?;
            Ok(Output::Json(json!({
                "target": target,
                "energy": v,
                "closed_form": expected,
                "capacity": (-v).exp(),
            })))
        }
        Command::LiftCheck { poly, m } => {
            let p: IntPoly = poly.parse()?;
            let f = lift(&p, *m)?;
            let d = f.degree();
            let res = resultant_dd(&f.dehom1(), &f.dehom2(), d)?;
            let closed = p.lead().unwrap().pow((d - m) as u32) * p.constant_term().pow(*m as u32);
            let classes = zeros_by_direction(&f)?;
            let rts = roots_int(&p)?;
            let mu = crate::homspace::DiscreteMeasure2D::uniform(classes.into_iter().flatten().collect())?;
            let proj = pushforward_pi(&mu);
            let err = proj
                .points
                .iter()
                .map(|z| rts.iter().map(|r| (z - r).norm()).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max);
            Ok(Output::Json(json!({
                "degree": d,
                "m": m,
                "resultant": res.to_string(),
                "closed_form_abs": closed.magnitude().to_string(),
                "closed_form_match": res.magnitude() == closed.magnitude(),
                "resultant_fast_path": res_hommap(&f).to_string(),
                "pushforward_max_err": err,
                "mass_at_infinity": proj.mass_at_infinity,
            })))
        }
        Command::Equidist { spec, m, seed } => {
            let text = std::fs::read_to_string(spec)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", spec.display())))?;
            let spec = UnitSequenceSpec::from_json(&text)?;
            let ms: Vec<usize> = parse_list(m, "m")?;
            let report = run_report(&spec, &ms, *seed)?;
            Ok(csv_or_json(fmt, report.to_csv(), serde_json::to_value(&report).unwrap()))
        }
        Command::SampleMeasure { set, count, seed } => {
            let k = PlanarSet::from_json(set)?;
            let PlanarSet::RationalPreimage { map, .. } = &k else {
                return Err(Error::Domain("sample-measure needs a preimage set".into()));
            };
            let n = map.degree() as f64;
            let j = map.pole_order() as f64;
            let s = crate::planar::ProbVector2 { s1: j / n, s2: (n - j) / n };
            let nu = sample_nu_k(&k, &s, *count, *seed)?;
            let mut csv = String::from("re,im,weight\n");
            for (z, w) in nu.points.iter().zip(&nu.weights) {
                csv.push_str(&format!("{:e},{:e},{:e}\n", z.re, z.im, w));
            }
            let mean: Complex64 = nu.mean();
            Ok(csv_or_json(
                fmt,
                csv,
                json!({ "count": nu.len(), "mean": [mean.re, mean.im], "points": nu.points, "weights": nu.weights }),
            ))
        }
    }
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_parse() {
        1
    } else if e.is_convergence() {
        3
    } else {
        2
    }
}

/// Parses `argv`, runs the command and writes the result; returns the exit
/// status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let out = match execute(&cli.command, cli.output.format) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let text = match out {
        Output::Json(v) => serde_json::to_string_pretty(&v).unwrap() + "\n",
        Output::Text(t) => t,
    };
    match &cli.output.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
                Ok(()) => {}
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    return 1;
                }
            }
        }
    }
    0
}
