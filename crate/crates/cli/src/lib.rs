//! Command implementations for the `trace-horizon` binary.
//!
//! Every command produces a [`RunReport`] and an exit code:
//! 0 success, 1 internal numerical failure, 2 parse or I/O error,
//! 3 precondition violation, 4 search exhausted or input below threshold,
//! 5 bound violation.

pub mod args;
pub mod report;

use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use trace_horizon::bounds::{bound_report, SurfaceParams};
use trace_horizon::lefschetz::{dilatation_lower_with, LefschetzOutcome};
use trace_horizon::penner::upper_bound_table;
use trace_horizon::trace_search::{
    classify, dirichlet_nu, fejer_disk_minimum, fejer_value_exact, find_nu_cyclotomic,
    find_nu_expanding_with, find_nu_with, newton_girard_nu, HorizonMode, SearchConfig,
    SearchOutcome,
};
use trace_horizon::{parse_matrix, Error, IntMatrix};

use args::{BoundsArgs, Cli, Command, FindNuArgs, LefschetzArgs, Lemma, Mode, PennerArgs};
use report::{ResultKind, RunReport, RunResult};

/// Environment variable capping every scan.
pub const MAX_NU_ENV: &str = "TRACE_HORIZON_MAX_NU";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_EXHAUSTED: i32 = 4;
pub const EXIT_VIOLATION: i32 = 5;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("I/O error on {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid argument: {0}")]
    Parse(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Parse { .. }) => EXIT_PARSE,
            CliError::Core(Error::Contract(_) | Error::Domain(_)) => EXIT_PRECONDITION,
            CliError::Core(Error::Exhausted { .. } | Error::BelowThreshold(_)) => EXIT_EXHAUSTED,
            CliError::Core(Error::Numerical(_) | Error::Overflow(_)) => EXIT_INTERNAL,
            CliError::Io { .. } | CliError::Parse(_) => EXIT_PARSE,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A finished command: the report to print and the process exit code.
#[derive(Debug)]
pub struct Completed {
    pub report: RunReport,
    pub exit_code: i32,
}

/// Settings read from the environment.
#[derive(Clone, Copy, Debug, Default)]
pub struct Context {
    pub max_nu: Option<u64>,
}

impl Context {
    pub fn from_env() -> CliResult<Self> {
        let max_nu = match std::env::var(MAX_NU_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse::<u64>()
                    .map_err(|e| CliError::Parse(format!("{MAX_NU_ENV}={v:?}: {e}")))?,
            ),
            Err(_) => None,
        };
        Ok(Self { max_nu })
    }
}

struct Payload {
    kind: ResultKind,
    data: Value,
    params: Value,
    exit_code: i32,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

pub fn run(cli: &Cli, ctx: &Context) -> CliResult<Completed> {
    let start = Instant::now();
    let (name, payload) = match &cli.command {
        Command::FindNu(a) => ("find-nu", find_nu_cmd(a, ctx)?),
        Command::Bounds(a) => ("bounds", bounds_cmd(a)?),
        Command::Lefschetz(a) => ("lefschetz", lefschetz_cmd(a, ctx)?),
        Command::Penner(a) => ("penner", penner_cmd(a)?),
        Command::Lemmas(a) => ("lemmas", lemmas_cmd(&a.which)?),
    };
    let report = RunReport {
        command: name.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        params: payload.params,
        result: RunResult {
            kind: payload.kind,
            data: payload.data,
        },
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    Ok(Completed {
        report,
        exit_code: payload.exit_code,
    })
}

fn read_matrix(path: &Path) -> CliResult<IntMatrix> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(parse_matrix(&text)?)
}

fn with_max_nu(mut params: Value, ctx: &Context) -> Value {
    params["max_nu"] = to_value(&ctx.max_nu);
    params
}

fn find_nu_cmd(a: &FindNuArgs, ctx: &Context) -> CliResult<Payload> {
    let m = read_matrix(&a.matrix)?;
    let horizon = match a.linear_slope {
        Some(slope) => HorizonMode::ConjecturalLinear { slope },
        None => HorizonMode::Proven,
    };
    let config = SearchConfig {
        horizon,
        max_nu: ctx.max_nu,
    };
    let params = with_max_nu(to_value(a), ctx);
    let found = |cert: &trace_horizon::NuCertificate| Payload {
        kind: ResultKind::Certificate,
        data: to_value(cert),
        params: params.clone(),
        exit_code: EXIT_OK,
    };
    let mode = match a.mode {
        Mode::Auto if classify(&m)?.complete => Mode::Cyclotomic,
        Mode::Auto => Mode::Expanding,
        other => other,
    };
    Ok(match mode {
        Mode::Scan => match find_nu_with(&m, a.b, a.epsilon, &config)? {
            SearchOutcome::Found(c) => found(&c),
            SearchOutcome::Exhausted(f) => Payload {
                kind: ResultKind::Failure,
                data: to_value(&f),
                params,
                exit_code: EXIT_EXHAUSTED,
            },
        },
        Mode::Expanding => found(&find_nu_expanding_with(&m, a.b, a.epsilon, a.c, &config)?),
        Mode::Cyclotomic => found(&find_nu_cyclotomic(&m, a.b)?),
        Mode::Auto => unreachable!("auto resolved above"),
    })
}

fn bounds_cmd(a: &BoundsArgs) -> CliResult<Payload> {
    let c = match a.c.as_str() {
        "auto" => None,
        s => Some(
            s.parse::<f64>()
                .map_err(|e| CliError::Parse(format!("--C {s:?}: {e}")))?,
        ),
    };
    let p = SurfaceParams::new(a.g, a.n);
    let r = bound_report(&p, a.alpha, c, a.n_threshold, a.c_upper)?;
    Ok(Payload {
        kind: ResultKind::Bounds,
        data: to_value(&r),
        params: to_value(a),
        exit_code: EXIT_OK,
    })
}

fn lefschetz_cmd(a: &LefschetzArgs, ctx: &Context) -> CliResult<Payload> {
    let m = read_matrix(&a.matrix)?;
    let p = SurfaceParams::new(a.g, a.n);
    let config = SearchConfig {
        max_nu: ctx.max_nu,
        ..Default::default()
    };
    let params = with_max_nu(to_value(a), ctx);
    let outcome = dilatation_lower_with(&m, &p, a.epsilon, &config)?;
    let symplectic = match &outcome {
        LefschetzOutcome::Certified(c) => c.symplectic,
        LefschetzOutcome::Failed { symplectic, .. } => *symplectic,
    };
    if !symplectic {
        eprintln!("warning: the matrix is not symplectic, so it is not the homology action of a mapping class");
    }
    Ok(match outcome {
        LefschetzOutcome::Certified(c) => {
            let mut data = to_value(&c);
            data["conditional"] = json!(
                "valid if the matrix is the closed-surface homology action of a pseudo-Anosov map"
            );
            Payload {
                kind: ResultKind::Certificate,
                data,
                params,
                exit_code: EXIT_OK,
            }
        }
        LefschetzOutcome::Failed {
            failure,
            symplectic,
        } => Payload {
            kind: ResultKind::Failure,
            data: json!({ "failure": failure, "symplectic": symplectic }),
            params,
            exit_code: EXIT_EXHAUSTED,
        },
    })
}

/// `a..b` or `a..=b` (both inclusive), or a single value.
pub fn parse_range(s: &str) -> CliResult<std::ops::RangeInclusive<u32>> {
    let bad = |e: std::num::ParseIntError| CliError::Parse(format!("range {s:?}: {e}"));
    let s = s.trim();
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok(lo.trim().parse().map_err(bad)?..=hi.trim().parse().map_err(bad)?)
        }
        None => {
            let v = s.parse().map_err(bad)?;
            Ok(v..=v)
        }
    }
}

fn penner_cmd(a: &PennerArgs) -> CliResult<Payload> {
    let rows = upper_bound_table(parse_range(&a.g)?, parse_range(&a.n)?)?;
    if let Some(path) = &a.out {
        let io = |e: &dyn std::fmt::Display| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        };
        let mut w = csv::Writer::from_path(path).map_err(|e| io(&e))?;
        if rows.is_empty() {
            w.write_record([
                "g",
                "n",
                "k",
                "l",
                "max_entry",
                "entry_bound",
                "rho",
                "row_sum_bound",
                "rho_bound",
                "ok",
            ])
            .map_err(|e| io(&e))?;
        }
        for r in &rows {
            w.serialize(r).map_err(|e| io(&e))?;
        }
        w.flush().map_err(|e| io(&e))?;
    }
    let violations: Vec<Value> = rows
        .iter()
        .filter(|r| !r.ok)
        .map(|r| json!({ "g": r.g, "n": r.n }))
        .collect();
    let exit_code = if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    Ok(Payload {
        kind: ResultKind::Table,
        data: json!({ "rows": rows, "violations": violations }),
        params: to_value(a),
        exit_code,
    })
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
}

fn lemmas_cmd(which: &Lemma) -> CliResult<Payload> {
    let params = to_value(which);
    match which {
        Lemma::Dirichlet {
            zs,
            m,
            cap,
            seed,
            trials,
        } => match zs {
            Some(zs) => {
                let zs = split_list(zs)
                    .map(|t| {
                        Complex64::from_str(t)
                            .map_err(|e| CliError::Parse(format!("complex number {t:?}: {e}")))
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                let r = dirichlet_nu(&zs, *cap)?;
                Ok(Payload {
                    kind: ResultKind::Certificate,
                    data: json!({
                        "nu": r.nu,
                        "real_sum": r.real_sum,
                        "guaranteed": r.modulus_sum / std::f64::consts::SQRT_2,
                    }),
                    params,
                    exit_code: EXIT_OK,
                })
            }
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut rows = Vec::with_capacity(*trials);
                let mut bad = 0;
                let floor = *m as f64 / std::f64::consts::SQRT_2;
                for _ in 0..*trials {
                    let zs: Vec<Complex64> = (0..*m)
                        .map(|_| {
                            Complex64::from_polar(1.0, rng.gen::<f64>() * std::f64::consts::TAU)
                        })
                        .collect();
                    let r = dirichlet_nu(&zs, *cap)?;
                    let ok = r.real_sum >= floor - 1e-9 && r.nu <= 8u64.pow(*m as u32);
                    bad += usize::from(!ok);
                    rows.push(json!({ "nu": r.nu, "real_sum": r.real_sum, "ok": ok }));
                }
                Ok(Payload {
                    kind: ResultKind::Table,
                    data: json!({ "floor": floor, "violations": bad, "rows": rows }),
                    params,
                    exit_code: if bad == 0 { EXIT_OK } else { EXIT_VIOLATION },
                })
            }
        },
        Lemma::Newton {
            coeffs,
            max_degree,
            seed,
            trials,
        } => match coeffs {
            Some(coeffs) => {
                let q = split_list(coeffs)
                    .map(|t| {
                        BigRational::from_str(t)
                            .map_err(|e| CliError::Parse(format!("rational {t:?}: {e}")))
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                let (nu, s) = newton_girard_nu(&q)?;
                Ok(Payload {
                    kind: ResultKind::Certificate,
                    data: json!({ "nu": nu, "S": s.to_string() }),
                    params,
                    exit_code: EXIT_OK,
                })
            }
            None => {
                if *max_degree == 0 {
                    return Err(Error::Contract("--max-degree must be at least 1".into()).into());
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut bad = 0;
                let mut worst_nu_ratio = 0.0f64;
                for _ in 0..*trials {
                    let deg = rng.gen_range(1..=*max_degree);
                    let mut q: Vec<BigRational> = (0..=deg)
                        .map(|_| {
                            BigRational::new(
                                rng.gen_range(-50..=50).into(),
                                rng.gen_range(1..=9).into(),
                            )
                        })
                        .collect();
                    if q[deg].is_zero() {
                        q[deg] = BigRational::one();
                    }
                    let (nu, s) = newton_girard_nu(&q)?;
                    if nu as usize > deg + 1 || s.is_negative() {
                        bad += 1;
                    }
                    worst_nu_ratio = worst_nu_ratio.max(nu as f64 / (deg + 1) as f64);
                }
                Ok(Payload {
                    kind: ResultKind::Table,
                    data: json!({ "trials": trials, "violations": bad, "max_nu_over_deg_plus_one": worst_nu_ratio }),
                    params,
                    exit_code: if bad == 0 { EXIT_OK } else { EXIT_VIOLATION },
                })
            }
        },
        Lemma::Fejer { k, samples } => {
            let (min, at) = fejer_disk_minimum(*k, *samples)?;
            let p1 = fejer_value_exact(&BigRational::one(), *k)?;
            let ok = min >= -1e-10;
            Ok(Payload {
                kind: ResultKind::Table,
                data: json!({
                    "K": k,
                    "samples": samples,
                    "min_re": min,
                    "argmin": [at.re, at.im],
                    "p_at_one": p1.to_string(),
                    "ok": ok,
                }),
                params,
                exit_code: if ok { EXIT_OK } else { EXIT_VIOLATION },
            })
        }
    }
}
