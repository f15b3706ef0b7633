//! `blade`: multivector calculator and verification driver.

use std::fmt::Display;
use std::io::{BufWriter, Write};
use std::process::ExitCode;
use std::sync::Arc;

use blade_core::check::run_checks;
use blade_core::{
    evaluate, is_independent, orthogonalize, parse_scalar, GramMatrix, Multivector, Rational,
    Scalar, Signature,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "blade", version, about = "Clifford / geometric algebra calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print its canonical form.
    Eval {
        #[command(flatten)]
        sig: SigArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the geometric product of every pair of blades.
    Table {
        #[command(flatten)]
        sig: SigArgs,
        /// Only blades of grade at most this.
        #[arg(long)]
        max_grade: Option<usize>,
    },
    /// Run the randomized invariant suites.
    Check {
        #[command(flatten)]
        sig: SigArgs,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide linear independence of vectors via their wedge product.
    Indep {
        #[command(flatten)]
        sig: SigArgs,
        /// Rows separated by `;`, coefficients by `,`, e.g. "1,0;0,1".
        #[arg(long, allow_hyphen_values = true)]
        vectors: String,
    },
    /// Diagonalize a symmetric Gram matrix read from a file.
    Orth {
        #[arg(long)]
        gram: std::path::PathBuf,
        #[arg(long, value_enum, default_value_t = ScalarArg::Rational)]
        scalar: ScalarArg,
    },
}

#[derive(Args)]
struct SigArgs {
    #[command(flatten)]
    form: FormArgs,
    #[arg(long, value_enum, default_value_t = ScalarArg::Rational)]
    scalar: ScalarArg,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FormArgs {
    /// Counts p,q,r: indices 1..p square to +1, the next q to -1, the next r to 0.
    #[arg(long)]
    sig: Option<String>,
    /// Explicit squares q(1),q(2),... as rational or decimal literals.
    #[arg(long, allow_hyphen_values = true)]
    diag: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScalarArg {
    Rational,
    F64,
}

enum Failure {
    /// Bad arguments or input text; exit code 2.
    Usage(String),
    /// A verification did not hold; exit code 1.
    Verification(String),
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn build_signature<S: Scalar>(args: &SigArgs) -> Result<Arc<Signature<S>>, Failure> {
    if let Some(pqr) = &args.form.sig {
        let counts = pqr
            .split(',')
            .map(|c| c.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Failure::Usage(format!("--sig expects p,q,r counts, got `{pqr}`")))?;
        let (p, q, r) = match counts[..] {
            [p] => (p, 0, 0),
            [p, q] => (p, q, 0),
            [p, q, r] => (p, q, r),
            _ => return Err(Failure::Usage(format!("--sig expects p,q,r counts, got `{pqr}`"))),
        };
        return Ok(Arc::new(Signature::from_pqr(p, q, r)));
    }
    let diag = args.form.diag.as_deref().unwrap_or_default();
    let squares = diag
        .split(',')
        .map(parse_scalar::<S>)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Arc::new(Signature::from_diag(squares)))
}

fn eval_cmd<S: Scalar>(sig: &SigArgs, expr: &str) -> Outcome {
    let sig = build_signature::<S>(sig)?;
    println!("{}", evaluate(expr, &sig)?);
    Ok(())
}

fn table_cmd<S: Scalar>(sig: &SigArgs, max_grade: Option<usize>) -> Outcome {
    let sig = build_signature::<S>(sig)?;
    let blades: Vec<_> = sig
        .blades()
        .into_iter()
        .filter(|b| max_grade.is_none_or(|g| b.len() <= g))
        .collect();
    let mut out = BufWriter::new(std::io::stdout().lock());
    for h in &blades {
        let x = Multivector::blade(&sig, h.clone())?;
        for j in &blades {
            let y = Multivector::blade(&sig, j.clone())?;
            // A closed pipe (e.g. `| head`) just ends the listing.
            if writeln!(out, "{h} * {j} = {}", x.gp(&y)?).is_err() {
                return Ok(());
            }
        }
    }
    let _ = out.flush();
    Ok(())
}

fn check_cmd<S: Scalar>(sig_args: &SigArgs, trials: u64, seed: u64) -> Outcome {
    let sig = build_signature::<S>(sig_args)?;
    let squares: Vec<String> = sig.squares().map(|(_, q)| q.to_string()).collect();
    println!("signature: [{}], trials: {trials}, seed: {seed}", squares.join(", "));
    let report = run_checks(&sig, trials, seed);
    println!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} suite(s) failed", report.failures())))
    }
}

fn indep_cmd<S: Scalar>(sig: &SigArgs, rows: &str) -> Outcome {
    let sig = build_signature::<S>(sig)?;
    let vectors = rows
        .split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|row| {
            let coeffs = row
                .split(',')
                .map(parse_scalar::<S>)
                .collect::<Result<Vec<_>, _>>()?;
            Multivector::vector(&sig, &coeffs)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = if is_independent(&vectors)? {
        "independent"
    } else {
        "dependent"
    };
    println!("{verdict}");
    Ok(())
}

fn orth_cmd<S: Scalar>(path: &std::path::Path) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let gram = GramMatrix::<S>::parse(&text)?;
    let result = orthogonalize(&gram);
    println!("P:");
    print!("{}", result.p);
    let d: Vec<String> = result.d.iter().map(ToString::to_string).collect();
    println!("d: {}", d.join(" "));
    if result.verify(&gram).map_err(|e| Failure::Verification(e.to_string()))? {
        println!("verified: P*G*P^T = diag(d), det(P) != 0");
        Ok(())
    } else {
        Err(Failure::Verification("congruence check failed".into()))
    }
}

fn run(cli: Cli) -> Outcome {
    macro_rules! dispatch {
        ($kind:expr, $f:ident($($arg:expr),*)) => {
            match $kind {
                ScalarArg::Rational => $f::<Rational>($($arg),*),
                ScalarArg::F64 => $f::<f64>($($arg),*),
            }
        };
    }
    match &cli.command {
        Command::Eval { sig, expr } => dispatch!(sig.scalar, eval_cmd(sig, expr)),
        Command::Table { sig, max_grade } => dispatch!(sig.scalar, table_cmd(sig, *max_grade)),
        Command::Check { sig, trials, seed } => dispatch!(sig.scalar, check_cmd(sig, *trials, *seed)),
        Command::Indep { sig, vectors } => dispatch!(sig.scalar, indep_cmd(sig, vectors)),
        Command::Orth { gram, scalar } => dispatch!(scalar, orth_cmd(gram)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
