use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bicomplex::report::{self, InputEcho, Report, Verb};
use bicomplex::{
    parse_matrix, parse_vector, BicomplexMatrix, BicomplexVector, ExactComplex, FloatComplex, RankPolicy, Scalar,
};

const TOL_ENV: &str = "BCX_TOL";

/// Bicomplex linear algebra: decomposition, ranks, and linear systems.
#[derive(Debug, Parser)]
#[command(name = "bcx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Use binary64 arithmetic with a pivot tolerance instead of exact rationals.
    #[arg(long, global = true)]
    approx: bool,

    /// Relative pivot tolerance (approx mode only; default 1e-10 or $BCX_TOL).
    #[arg(long, global = true, value_name = "T")]
    tol: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Structured,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the idempotent components of a matrix.
    Decompose(MatrixArg),
    /// Print all rank quantities of a matrix.
    Rank(MatrixArg),
    /// Solve A·X = B.
    Solve(SystemArgs),
    /// Classify A·X = 0, and A·X = B when a right-hand side is given.
    Classify {
        matrix: String,
        rhs: Option<String>,
    },
    /// Check whether a candidate vector solves A·X = B.
    Verify {
        matrix: String,
        rhs: String,
        candidate: String,
    },
}

#[derive(Debug, Args)]
struct MatrixArg {
    matrix: String,
}

#[derive(Debug, Args)]
struct SystemArgs {
    matrix: String,
    rhs: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {}", path, e)))
}

fn load_matrix<S: Scalar>(path: &str) -> Result<BicomplexMatrix<S>, Failure> {
    parse_matrix(&read(path)?).map_err(|e| Failure::Input(format!("{}: {}", path, e)))
}

fn load_vector<S: Scalar>(path: &str) -> Result<BicomplexVector<S>, Failure> {
    parse_vector(&read(path)?).map_err(|e| Failure::Input(format!("{}: {}", path, e)))
}

fn policy(cli: &Cli) -> Result<RankPolicy, Failure> {
    if !cli.approx {
        if cli.tol.is_some() {
            return Err(Failure::Usage("--tol requires --approx".into()));
        }
        return Ok(RankPolicy::exact());
    }
    let tol = match cli.tol {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(v) => v
                .trim()
                .parse::<f64>()
                .map_err(|_| Failure::Usage(format!("{} is not a number: {:?}", TOL_ENV, v)))?,
            Err(_) => bicomplex::scalar::DEFAULT_PIVOT_TOLERANCE,
        },
    };
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Failure::Usage(format!("tolerance must be a nonnegative number, got {}", tol)));
    }
    Ok(RankPolicy::approx(tol))
}

fn run<S: Scalar>(cmd: &Command, policy: &RankPolicy) -> Result<Report, Failure> {
    let lib = |e: bicomplex::Error| Failure::Input(e.to_string());
    let (verb, input, result) = match cmd {
        Command::Decompose(m) => {
            let a = load_matrix::<S>(&m.matrix)?;
            (Verb::Decompose, InputEcho::new(&m.matrix, &a), report::decompose_payload(&a))
        }
        Command::Rank(m) => {
            let a = load_matrix::<S>(&m.matrix)?;
            let p = report::rank_payload(&a, policy).map_err(lib)?;
            (Verb::Rank, InputEcho::new(&m.matrix, &a), p)
        }
        Command::Solve(s) => {
            let a = load_matrix::<S>(&s.matrix)?;
            let b = load_vector::<S>(&s.rhs)?;
            let p = report::solve_payload(&a, &b, policy).map_err(lib)?;
            (Verb::Solve, InputEcho::new(&s.matrix, &a).with_rhs(&s.rhs, &b), p)
        }
        Command::Classify { matrix, rhs } => {
            let a = load_matrix::<S>(matrix)?;
            let mut input = InputEcho::new(matrix, &a);
            let b = match rhs {
                Some(path) => {
                    let b = load_vector::<S>(path)?;
                    input = input.with_rhs(path, &b);
                    Some(b)
                }
                None => None,
            };
            let p = report::classify_payload(&a, b.as_ref(), policy).map_err(lib)?;
            (Verb::Classify, input, p)
        }
        Command::Verify { matrix, rhs, candidate } => {
            let a = load_matrix::<S>(matrix)?;
            let b = load_vector::<S>(rhs)?;
            let y = load_vector::<S>(candidate)?;
            let p = report::verify_payload(&a, &b, &y, policy).map_err(lib)?;
            let input = InputEcho::new(matrix, &a).with_rhs(rhs, &b).with_candidate(candidate, &y);
            (Verb::Verify, input, p)
        }
    };
    Ok(Report {
        format: report::FORMAT_VERSION,
        verb,
        input,
        policy: policy.into(),
        result,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = policy(&cli).and_then(|p| {
        if cli.approx {
            run::<FloatComplex>(&cli.command, &p)
        } else {
            run::<ExactComplex>(&cli.command, &p)
        }
    });
    match outcome {
        Ok(report) => {
            match cli.output {
                Output::Human => print!("{}", report.to_human()),
                Output::Structured => print!("{}", report.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("bcx: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("bcx: {}", msg);
            ExitCode::from(1)
        }
    }
}
