mod random;
mod sink;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qaffine::basis::{basis_report, delta_matrix, determinant_report, Normalization};
use qaffine::extremal::{alpha_direct, omega, phi, Convention, ExtremalKind, ExtremalVector};
use qaffine::repmod::{Legs, TensorShape};
use qaffine::scalars::{parse_rational, Point};

use sink::run_ordered;
use verify::{Scope, SweepConfig};

const DEFAULT_SEED: u64 = 20_240_601;

/// Exact computations in evaluation modules of quantum affine sl2.
#[derive(Parser)]
#[command(name = "qaffine", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
    /// Print JSON (one record per line for verify)
    #[arg(long, global = true)]
    json: bool,
    /// Evaluate the left factor at y and the right one at x
    #[arg(long, global = true)]
    swap_legs: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification sweep; exits 0 iff every check passes
    Verify {
        #[arg(value_enum)]
        scope: Scope,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Build Δ (or Λ with --dual), evaluate the criterion and certify the rank
    Basis {
        m: usize,
        n: usize,
        #[arg(long)]
        dual: bool,
        #[arg(long, default_value = "unit")]
        norm: Normalization,
        /// Rank over the rational function field instead of at a point
        #[arg(long, conflicts_with_all = ["q", "x", "y"])]
        symbolic: bool,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Print a single object
    Show {
        #[command(subcommand)]
        what: Show,
    },
}

#[derive(Args)]
struct PointArgs {
    /// Specialization of q, as "p" or "p/r"
    #[arg(long, default_value = "2")]
    q: String,
    #[arg(long, default_value = "3")]
    x: String,
    #[arg(long, default_value = "5")]
    y: String,
}

impl PointArgs {
    fn point(&self) -> Result<Point> {
        let r = |s: &str, name: &str| parse_rational(s).with_context(|| format!("--{name} {s:?}"));
        Ok(Point::new(r(&self.q, "q")?, r(&self.x, "x")?, r(&self.y, "y")?)?)
    }
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_m: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_l: Option<u64>,
    /// Restrict determinant and basis sweeps to one normalization
    #[arg(long)]
    norm: Option<Normalization>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random cases for the scalar sweep
    #[arg(long, default_value_t = 1000)]
    cases: u32,
    /// Also check the displayed determinant prefactor, inductive step and
    /// dual degeneration points
    #[arg(long)]
    as_printed: bool,
    #[command(flatten)]
    point: PointArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    AsPrinted,
    UnitLeading,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::AsPrinted => Convention::AsPrinted,
            ConventionArg::UnitLeading => Convention::UnitLeading,
        }
    }
}

#[derive(Subcommand)]
enum Show {
    /// Extremal vector Ω_l
    Omega {
        m: usize,
        n: usize,
        l: usize,
        #[arg(long, value_enum, default_value = "as-printed")]
        convention: ConventionArg,
    },
    /// Extremal vector Φ_l
    Phi {
        m: usize,
        n: usize,
        l: usize,
        #[arg(long, value_enum, default_value = "as-printed")]
        convention: ConventionArg,
    },
    /// α_l, computed from e_0 f Ω_l
    Alpha { m: usize, n: usize, l: usize },
    /// Coefficient matrix (Δ_l)
    Matrix {
        m: usize,
        n: usize,
        l: usize,
        #[arg(long, default_value = "unit")]
        norm: Normalization,
    },
    /// |Δ_l| with its closed form and factorization, l >= 1
    Det {
        m: usize,
        n: usize,
        l: usize,
        #[arg(long, default_value = "unit")]
        norm: Normalization,
    },
}

fn legs(swap: bool) -> Legs {
    if swap {
        Legs::LeftY
    } else {
        Legs::LeftX
    }
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("QAFFINE_THREADS") {
        let n: usize = v.parse().with_context(|| format!("QAFFINE_THREADS={v:?}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn cmd_verify(scope: Scope, args: SweepArgs, json: bool, swap: bool) -> Result<bool> {
    let cfg = SweepConfig {
        max_m: args.max_m.map(|v| v as usize),
        max_n: args.max_n.map(|v| v as usize),
        max_l: args.max_l.map(|v| v as usize),
        norm: args.norm,
        point: args.point.point()?,
        legs: legs(swap),
        seed: args.seed,
        cases: args.cases,
        as_printed: args.as_printed,
    };
    let (mut total, mut failed) = (0usize, 0usize);
    let stdout = std::io::stdout();
    run_ordered(verify::jobs(scope, &cfg), |rec| {
        total += 1;
        let mut out = stdout.lock();
        if json {
            let _ = writeln!(out, "{}", serde_json::to_string(&rec).expect("record serializes"));
        } else {
            let _ = writeln!(out, "{}", rec.text());
        }
        if !rec.pass {
            failed += 1;
            if !json {
                eprintln!("{}", serde_json::to_string(&rec).expect("record serializes"));
            }
        }
    });
    let summary = if json {
        serde_json::json!({ "summary": { "checks": total, "failed": failed } }).to_string()
    } else {
        format!("{total} checks, {failed} failed")
    };
    let _ = writeln!(stdout.lock(), "{summary}");
    Ok(failed == 0)
}

fn cmd_basis(
    m: usize,
    n: usize,
    dual: bool,
    norm: Normalization,
    point: Option<Point>,
    json: bool,
) -> Result<()> {
    let r = basis_report(m, n, point.as_ref(), dual, norm)?;
    if json {
        println!("{}", serde_json::to_string(&r)?);
        return Ok(());
    }
    let set = if dual { "Λ" } else { "Δ" };
    let at = match &r.specialization {
        Some(p) => format!("at {p}"),
        None => "over Q(q, x, y)".into(),
    };
    let norm = serde_json::to_value(norm)?;
    println!(
        "{set} for V_{m}(x)⊗V_{n}(y), {} normalization, {at}",
        norm.as_str().unwrap_or_default()
    );
    if r.specialization.is_some() {
        if r.criterion_pass {
            println!("criterion: pass");
        } else {
            println!("criterion: fail at j = {:?}", r.failing_j);
        }
    }
    let verdict = if r.is_basis() { "basis" } else { "not a basis" };
    println!("rank: {} of {} ({verdict})", r.rank, r.expected_rank);
    if r.specialization.is_some() && !r.consistent() {
        println!("note: the rank disagrees with the criterion");
    }
    Ok(())
}

fn print_extremal(v: &ExtremalVector, m: usize, n: usize, json: bool) -> Result<()> {
    if v.degenerate {
        let name = match v.kind {
            ExtremalKind::Omega => "Ω",
            ExtremalKind::Phi => "Φ",
        };
        eprintln!(
            "warning: {name}_{} is degenerate for (m, n) = ({m}, {n}): its coefficients vanish identically",
            v.l
        );
    }
    if json {
        println!("{}", serde_json::to_string(v)?);
    } else {
        println!("{}", v.value);
    }
    Ok(())
}

fn cmd_show(what: Show, json: bool, swap: bool) -> Result<()> {
    let shape = |m, n| TensorShape::with_legs(m, n, legs(swap));
    match what {
        Show::Omega { m, n, l, convention } => {
            print_extremal(&omega(&shape(m, n), l, convention.into())?, m, n, json)
        }
        Show::Phi { m, n, l, convention } => {
            print_extremal(&phi(&shape(m, n), l, convention.into())?, m, n, json)
        }
        Show::Alpha { m, n, l } => {
            let a = alpha_direct(&shape(m, n), l, Convention::AsPrinted)?;
            if json {
                println!("{}", serde_json::to_string(&a)?);
            } else {
                println!("{}", a.value);
            }
            Ok(())
        }
        Show::Matrix { m, n, l, norm } => {
            let mat = delta_matrix(m, n, l, norm)?;
            if json {
                println!("{}", serde_json::to_string(&mat)?);
            } else {
                println!("{}", serde_json::to_value(&mat)?["entries"]);
            }
            Ok(())
        }
        Show::Det { m, n, l, norm } => {
            if l == 0 {
                bail!("l must be at least 1");
            }
            let r = determinant_report(m, n, l - 1, norm)?;
            if json {
                println!("{}", serde_json::to_string(&r)?);
                return Ok(());
            }
            println!("det = {}", r.det);
            println!("displayed form = {}", r.closed_form);
            println!("constant factor = {}", r.prefactor);
            for f in &r.factored[1..] {
                println!("({})^{}", f.factor, f.multiplicity);
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = init_threads().and_then(|()| match cli.cmd {
        Command::Verify { scope, sweep } => cmd_verify(scope, sweep, cli.json, cli.swap_legs),
        Command::Basis {
            m,
            n,
            dual,
            norm,
            symbolic,
            point,
        } => {
            if cli.swap_legs {
                bail!("basis is defined on V_m(x)⊗V_n(y) only; --swap-legs does not apply");
            }
            let p = if symbolic { None } else { Some(point.point()?) };
            cmd_basis(m, n, dual, norm, p, cli.json).map(|()| true)
        }
        Command::Show { what } => cmd_show(what, cli.json, cli.swap_legs).map(|()| true),
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
