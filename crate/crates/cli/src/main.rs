use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gradus_core::kappa::{KappaCalculus, KappaExpression, RewriteConfig};
use gradus_core::specfile::SpecFile;
use gradus_core::suite::{self, SuiteOptions};
use gradus_core::{groebner_basis, hilbert_series, rank_of_span, MonomialOrdering, Polynomial, RationalSeries};

#[derive(Parser)]
#[command(name = "gradus", version, about = "Exact graded-ring computations over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series of the quotient described by a ring file.
    Hilbert {
        file: PathBuf,
        /// Keep the standard denominator instead of cancelling common factors.
        #[arg(long)]
        no_reduce: bool,
        #[arg(long, value_enum, default_value_t = Order::Grevlex)]
        order: Order,
    },
    /// Normal form of an expression modulo the ideal.
    Nf {
        file: PathBuf,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Order::Grevlex)]
        order: Order,
    },
    /// Ideal membership; exits 1 when the expression is not a member.
    Member {
        file: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// Rank of the span of `;`-separated expressions.
    Rank {
        file: PathBuf,
        #[arg(long)]
        exprs: String,
    },
    /// Rational series arithmetic in `T`.
    Series {
        #[arg(value_enum)]
        op: SeriesOp,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: Option<String>,
        /// Number of coefficients past the constant term for `leq` and `expand`.
        #[arg(long, default_value_t = 100)]
        n: usize,
    },
    /// Rewrite twisted-kappa expressions into the six generators.
    Kappa {
        #[arg(value_enum)]
        op: KappaOp,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..=2))]
        vanish_threshold: i64,
        /// Use the degree-three value of k[-1,3,0].
        #[arg(long)]
        enable_d3_kappa130: bool,
    },
    /// Run every check of the verification suite.
    VerifyPaper {
        /// One JSON record per check.
        #[arg(long)]
        machine: bool,
        #[arg(long, hide = true)]
        perturb: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Grevlex,
    Lex,
}

impl From<Order> for MonomialOrdering {
    fn from(o: Order) -> Self {
        match o {
            Order::Grevlex => MonomialOrdering::Grevlex,
            Order::Lex => MonomialOrdering::Lex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesOp {
    Eq,
    Leq,
    Expand,
    Add,
    Mul,
}

#[derive(Clone, Copy, ValueEnum)]
enum KappaOp {
    Rewrite,
    Nf,
}

/// Usage and parse failures exit with 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(ok) => ExitCode::from(if ok { 0 } else { 1 }),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(file: &PathBuf) -> Result<SpecFile, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure(format!("{}: {e}", file.display())))?;
    Ok(SpecFile::parse(&text)?)
}

fn series(text: &str) -> Result<RationalSeries, Failure> {
    RationalSeries::parse(text).map_err(|e| Failure(format!("`{text}`: {e}")))
}

fn print_bool(b: bool) -> bool {
    println!("{b}");
    b
}

fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Hilbert { file, no_reduce, order } => {
            let spec = load(&file)?;
            let h = hilbert_series(&spec.ideal, order.into())?;
            println!("{}", if no_reduce { h } else { h.reduce() });
            Ok(true)
        }
        Command::Nf { file, expr, order } => {
            let spec = load(&file)?;
            let p = spec.parse_expr(&expr)?;
            let nf = if spec.ideal.generators().is_empty() {
                p
            } else {
                groebner_basis(&spec.ideal, order.into())?.normal_form(&p)?
            };
            println!("{nf}");
            Ok(true)
        }
        Command::Member { file, expr } => {
            let spec = load(&file)?;
            let p = spec.parse_expr(&expr)?;
            let member = if spec.ideal.generators().is_empty() {
                p.is_zero()
            } else {
                groebner_basis(&spec.ideal, MonomialOrdering::Grevlex)?.contains(&p)?
            };
            Ok(print_bool(member))
        }
        Command::Rank { file, exprs } => {
            let spec = load(&file)?;
            let polys = exprs
                .split(';')
                .map(str::trim)
                .filter(|e| !e.is_empty())
                .map(|e| spec.parse_expr(e))
                .collect::<Result<Vec<Polynomial>, _>>()?;
            println!("{}", rank_of_span(&polys)?);
            Ok(true)
        }
        Command::Series { op, lhs, rhs, n } => {
            let a = series(&lhs)?;
            let rhs = || -> Result<RationalSeries, Failure> {
                series(rhs.as_deref().ok_or_else(|| Failure("--rhs is required".into()))?)
            };
            match op {
                SeriesOp::Eq => Ok(print_bool(a.series_eq(&rhs()?))),
                SeriesOp::Leq => Ok(print_bool(a.leq(&rhs()?, n)?)),
                SeriesOp::Expand => {
                    let coeffs: Vec<String> = a.expand(n)?.iter().map(|c| c.to_string()).collect();
                    println!("{}", coeffs.join(","));
                    Ok(true)
                }
                SeriesOp::Add => {
                    println!("{}", a.add(&rhs()?).reduce());
                    Ok(true)
                }
                SeriesOp::Mul => {
                    println!("{}", a.mul(&rhs()?).reduce());
                    Ok(true)
                }
            }
        }
        Command::Kappa {
            op,
            d,
            expr,
            vanish_threshold,
            enable_d3_kappa130,
        } => {
            let config = RewriteConfig {
                vanish_threshold,
                d3_pack: enable_d3_kappa130,
            };
            let e = KappaExpression::parse(&expr)?;
            let calc = KappaCalculus::cached(d, config);
            let rewritten = calc.rewrite(&e);
            if !rewritten.unreduced.is_empty() {
                let names: Vec<String> = rewritten.unreduced.iter().map(|s| s.to_string()).collect();
                eprintln!("warning: unreduced symbols: {}", names.join(", "));
            }
            match op {
                KappaOp::Rewrite => {
                    println!("{rewritten}");
                    Ok(true)
                }
                KappaOp::Nf if !rewritten.unreduced.is_empty() => {
                    println!("{rewritten}");
                    Ok(false)
                }
                KappaOp::Nf => {
                    println!("{}", calc.normal_form(&e)?);
                    Ok(true)
                }
            }
        }
        Command::VerifyPaper { machine, perturb } => {
            let results = suite::run_all_with(&SuiteOptions { perturb });
            if machine {
                for r in &results {
                    let record = serde_json::json!({
                        "id": r.id,
                        "status": r.status.to_string(),
                        "detail": r.detail,
                    });
                    println!("{record}");
                }
            } else {
                print!("{}", suite::format_report(&results));
            }
            Ok(results.iter().all(|r| r.passed()))
        }
    }
}
