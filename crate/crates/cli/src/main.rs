use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use golden_bounds::certify::{
    compare_constants_remark, convergence_study, run_campaign, CampaignConfig, ConvergenceFactor, InequalityId,
    Overrides, DEFAULT_P_SEQUENCE, DEFAULT_TOLERANCE,
};
use golden_bounds::constants::{
    fm_factor, kantorovich_eval, kantorovich_lower_bound, scalar_specht_amgm_check, specht_eval, specht_p_root,
};
use golden_bounds::sampling::{Sampler, SamplerConfig, SamplingMode};
use golden_bounds::Error;

/// Reference values of the two constant differences and the allowed error.
const REMARK_VALUES: [(f64, f64); 2] = [(2.0, -0.0134963), (8.0, 0.0631159)];
const REMARK_TOLERANCE: f64 = 1e-6;

#[derive(Parser)]
#[command(name = "golden-bounds", version, about = "Certify reversed Golden-Thompson bounds on seeded random matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a scalar constant at full precision.
    Constants {
        #[arg(value_enum)]
        name: ConstantArg,
        /// Arguments, in order: specht t | specht-root t p | kantorovich w alpha |
        /// kantorovich-bound w | fm h alpha scale | amgm x1 x2 ...
        #[arg(allow_negative_numbers = true, required = true)]
        args: Vec<f64>,
        /// Print the evaluation as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run a seeded certification campaign for one inequality.
    Certify(CertifyArgs),
    /// Print the two reference constant differences and check them to 1e-6.
    ReproduceRemark,
    /// Table of the reverse Golden-Thompson gap as p decreases.
    Convergence(ConvergenceArgs),
    /// List the inequality ids accepted by `certify`.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstantArg {
    Specht,
    SpechtRoot,
    Kantorovich,
    KantorovichBound,
    Fm,
    Amgm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct CertifyArgs {
    /// Inequality id (see `list`).
    id: String,
    #[arg(long, env = "GOLDEN_BOUNDS_SEED", default_value_t = 0)]
    seed: u64,
    /// Matrix dimension.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Number of instances.
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    q: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<f64>,
    /// Lower spectral bound.
    #[arg(long, allow_negative_numbers = true)]
    m: Option<f64>,
    /// Upper spectral bound.
    #[arg(long = "M", allow_negative_numbers = true)]
    big_m: Option<f64>,
    /// Lower sandwich constant.
    #[arg(long, allow_negative_numbers = true)]
    s: Option<f64>,
    /// Upper sandwich constant.
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,
    /// Relative margin tolerance.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Draw every instance from a shared eigenbasis. By default odd
    /// instances commute and even ones do not.
    #[arg(long)]
    commuting: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorArg {
    Specht,
    Kantorovich,
    BoundedSpecht,
    BoundedKantorovich,
}

#[derive(Args)]
struct ConvergenceArgs {
    #[arg(long, env = "GOLDEN_BOUNDS_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = FactorArg::Specht)]
    factor: FactorArg,
    /// Descending comma-separated p values.
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_P_SEQUENCE.to_vec())]
    p_sequence: Vec<f64>,
    /// Use K = H.
    #[arg(long)]
    identical: bool,
    #[arg(long)]
    commuting: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoConvergence { .. } | Error::IdentityCheck(_) => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn emit(out: Option<&PathBuf>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| usage(e.to_string())),
    }
}

fn arity(name: &str, args: &[f64], want: usize) -> Outcome {
    if args.len() == want {
        Ok(())
    } else {
        Err(usage(format!("{name} takes {want} argument(s), got {}", args.len())))
    }
}

fn print_value(value: f64, json: bool, record: serde_json::Value) {
    if json {
        println!("{record}");
    } else {
        println!("{value}");
    }
}

fn cmd_constants(name: ConstantArg, args: &[f64], json: bool) -> Outcome {
    match name {
        ConstantArg::Specht => {
            arity("specht", args, 1)?;
            let e = specht_eval(args[0])?;
            print_value(e.value, json, serde_json::to_value(&e).unwrap());
        }
        ConstantArg::SpechtRoot => {
            arity("specht-root", args, 2)?;
            let v = specht_p_root(args[0], args[1])?;
            let rec = serde_json::json!({ "name": "specht-root", "arguments": args, "value": v });
            print_value(v, json, rec);
        }
        ConstantArg::Kantorovich => {
            arity("kantorovich", args, 2)?;
            let e = kantorovich_eval(args[0], args[1])?;
            print_value(e.value, json, serde_json::to_value(&e).unwrap());
        }
        ConstantArg::KantorovichBound => {
            arity("kantorovich-bound", args, 1)?;
            let v = kantorovich_lower_bound(args[0])?;
            let rec = serde_json::json!({ "name": "kantorovich-lower-bound", "arguments": args, "value": v });
            print_value(v, json, rec);
        }
        ConstantArg::Fm => {
            arity("fm", args, 3)?;
            let v = fm_factor(args[0], args[1], args[2])?;
            let rec = serde_json::json!({ "name": "fm-factor", "arguments": args, "value": v });
            print_value(v, json, rec);
        }
        ConstantArg::Amgm => {
            let c = scalar_specht_amgm_check(args)?;
            if json {
                println!("{}", serde_json::to_string(&c).unwrap());
            } else {
                println!("arithmetic mean {}", c.arithmetic_mean);
                println!("specht bound    {}", c.specht_bound);
                println!("margin          {}", c.margin);
            }
        }
    }
    Ok(())
}

fn cmd_certify(a: &CertifyArgs) -> Outcome {
    let id: InequalityId = a.id.parse().map_err(|e: Error| usage(format!("{e}; run `golden-bounds list`")))?;
    let mut cfg = CampaignConfig::new(id, a.seed, a.count);
    cfg.dim = Some(a.n);
    cfg.commuting = a.commuting.then_some(true);
    cfg.tolerance = a.tol;
    cfg.overrides = Overrides { alpha: a.alpha, p: a.p, q: a.q, r: a.r, m: a.m, big_m: a.big_m, s: a.s, t: a.t };
    let res = run_campaign(&cfg)?;
    let text = match a.format {
        Format::Json => res.to_json_lines()?,
        Format::Csv => res.to_csv(),
    };
    emit(a.out.as_ref(), &text)?;
    let worst = res.worst().map(|w| w.report.min_relative_margin()).unwrap_or(f64::INFINITY);
    eprintln!(
        "{id}: {} of {} instances hold, worst relative margin {worst:.3e}",
        res.outcomes.len() - res.violations(),
        res.outcomes.len()
    );
    if res.all_hold() {
        Ok(())
    } else {
        Err(Failure::Violation(format!("{} violation(s)", res.violations())))
    }
}

fn cmd_reproduce_remark() -> Outcome {
    let mut bad = Vec::new();
    for (h, reference) in REMARK_VALUES {
        let c = compare_constants_remark(0.5, 0.5, h)?;
        println!(
            "alpha=0.5 p=0.5 h={h}: kantorovich {:.10} - fm {:.10} = {:.10} (reference {reference})",
            c.first, c.second, c.difference
        );
        if (c.difference - reference).abs() > REMARK_TOLERANCE {
            bad.push(h);
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violation(format!("mismatch at h = {bad:?}")))
    }
}

fn cmd_convergence(a: &ConvergenceArgs) -> Outcome {
    let mode = if a.commuting { SamplingMode::Commuting } else { SamplingMode::General };
    let mut smp = Sampler::new(SamplerConfig::new(a.n, a.seed, 0.5, 3.0, mode))?;
    let (m, big_m) = (-1.0, 1.0);
    let pair = smp.olson_exponential_pair(m, big_m)?;
    let (h, k, s, t) = if a.identical { (pair.h.clone(), pair.h, 0.0, 0.0) } else { (pair.h, pair.k, pair.s, pair.t) };
    let factor = match a.factor {
        FactorArg::Specht => ConvergenceFactor::Specht { s, t },
        FactorArg::Kantorovich => ConvergenceFactor::Kantorovich { s, t },
        FactorArg::BoundedSpecht => ConvergenceFactor::BoundedSpecht { m, big_m },
        FactorArg::BoundedKantorovich => ConvergenceFactor::BoundedKantorovich { m, big_m },
    };
    let rows = convergence_study(&h, &k, a.alpha, &a.p_sequence, factor)?;
    let mut text = String::from("p,k,lhs,rhs,gap\n");
    for r in rows {
        text.push_str(&format!("{:.16e},{},{:.16e},{:.16e},{:.16e}\n", r.p, r.k, r.lhs, r.rhs, r.gap));
    }
    emit(a.out.as_ref(), &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Constants { name, args, json } => cmd_constants(*name, args, *json),
        Command::Certify(a) => cmd_certify(a),
        Command::ReproduceRemark => cmd_reproduce_remark(),
        Command::Convergence(a) => cmd_convergence(a),
        Command::List => {
            for id in InequalityId::ALL {
                println!("{id}");
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
