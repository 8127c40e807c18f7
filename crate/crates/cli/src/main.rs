//! `detring`: command-line front end for determinantal-ring computations.
//!
//! Output is JSON on stdout by default (`--format table` for a plain
//! listing). Exit codes: 0 success, 1 usage or validation error, 2 an
//! internal cross-check failed.

mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use detring::cone::{default_epsilon, parse_rational};
use detring::{
    certify_with_epsilon, classify, conic_equality_check, enumerate_standard, hilbert_function,
    is_standard, mu_power, mu_power_direct, multiplicity, rank1_mcm_classes, semigroup_vs_cone,
    straightening, verify_d_tilde, verify_ladder, Error, HilbertMethod, Ideal, Minor, Params,
    Polynomial, SubstitutionMap, Variant, Witness,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "detring",
    version,
    about = "Exact computations in determinantal rings through the generic point X -> YZ"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Dims {
    /// number of rows of X
    #[arg(long)]
    m: usize,
    /// number of columns of X
    #[arg(long)]
    n: usize,
    /// rank bound: the ring is K[X] modulo the (r+1)-minors
    #[arg(long)]
    r: usize,
    /// output format
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FormatArg {
    Json,
    Table,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum IdealArg {
    P,
    Q,
}

impl From<IdealArg> for Ideal {
    fn from(v: IdealArg) -> Self {
        match v {
            IdealArg::P => Ideal::P,
            IdealArg::Q => Ideal::Q,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum MethodArg {
    Bitableaux,
    Lattice,
    Rank,
}

impl From<MethodArg> for HilbertMethod {
    fn from(v: MethodArg) -> Self {
        match v {
            MethodArg::Bitableaux => HilbertMethod::Bitableaux,
            MethodArg::Lattice => HilbertMethod::Lattice,
            MethodArg::Rank => HilbertMethod::Rank,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct PolyInput {
    /// polynomial in x[i,j], e.g. "x[1,2]*x[2,1] - 1/2*x[1,1]"
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// draw a random polynomial from this seed when --poly is absent
    #[arg(long)]
    seed: Option<u64>,
    /// maximal degree of the random polynomial
    #[arg(long, default_value_t = 3)]
    deg: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the standard bitableaux of degree --deg (a basis of the degree slice)
    Basis {
        #[command(flatten)]
        dims: Dims,
        /// degree
        #[arg(long)]
        deg: usize,
    },
    /// Write a polynomial as a combination of standard bitableaux
    Straighten {
        #[command(flatten)]
        dims: Dims,
        #[command(flatten)]
        input: PolyInput,
    },
    /// Decide membership in the ideal of (r+1)-minors
    Member {
        #[command(flatten)]
        dims: Dims,
        #[command(flatten)]
        input: PolyInput,
    },
    /// Hilbert function in degree --deg; all three methods unless --method is given
    Hilbert {
        #[command(flatten)]
        dims: Dims,
        /// degree
        #[arg(long)]
        deg: usize,
        /// run only this method
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Minimal number of generators of p^t or q^t
    Mu {
        #[command(flatten)]
        dims: Dims,
        /// exponent t of the power
        #[arg(long)]
        t: usize,
        /// p: r-minors of the first r rows; q: of the first r columns
        #[arg(long, value_enum)]
        ideal: IdealArg,
    },
    /// Multiplicity of the ring
    Mult {
        #[command(flatten)]
        dims: Dims,
    },
    /// Cohen-Macaulay / Ulrich verdict for p^t or q^t
    Classify {
        #[command(flatten)]
        dims: Dims,
        /// exponent t of the power
        #[arg(long)]
        t: usize,
        /// p: r-minors of the first r rows; q: of the first r columns
        #[arg(long, value_enum)]
        ideal: IdealArg,
    },
    /// Verdict with a desk-scale certificate
    Certify {
        #[command(flatten)]
        dims: Dims,
        /// exponent t of the power
        #[arg(long)]
        t: usize,
        /// p: r-minors of the first r rows; q: of the first r columns
        #[arg(long, value_enum)]
        ideal: IdealArg,
        /// largest total degree checked
        #[arg(long, default_value_t = 6)]
        deg_bound: i64,
        /// epsilon of the conic witness, as p/q in (0,1)
        #[arg(long)]
        eps: Option<String>,
    },
    /// Semigroup versus cone lattice points; with --t, the conic equality for a power
    ConeCheck {
        #[command(flatten)]
        dims: Dims,
        /// largest total degree checked
        #[arg(long, default_value_t = 6)]
        deg_bound: i64,
        /// exponent t of the power
        #[arg(long)]
        t: Option<usize>,
        /// p: r-minors of the first r rows; q: of the first r columns
        #[arg(long, value_enum, requires = "t")]
        ideal: Option<IdealArg>,
        /// epsilon of the conic witness, as p/q in (0,1)
        #[arg(long, requires = "t")]
        eps: Option<String>,
    },
    /// Initial algebra of the SL-invariant ring
    TildeCheck {
        #[command(flatten)]
        dims: Dims,
        /// largest total degree checked
        #[arg(long, default_value_t = 6)]
        deg_bound: i64,
    },
    /// Initial ideal of I(X; delta) against the predicted variable set
    LadderCheck {
        #[command(flatten)]
        dims: Dims,
        /// the minor delta, e.g. "[2|2]" or "[1 2|1 3]"
        #[arg(long)]
        delta: String,
        /// maximal degree checked
        #[arg(long, default_value_t = 3)]
        deg: usize,
    },
    /// Rank-one maximal Cohen-Macaulay classes
    McmClasses {
        #[command(flatten)]
        dims: Dims,
    },
}

/// Why a run stopped.
enum Failure {
    Usage(String),
    /// a cross-check failed; the report is still printed
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(msg) => Failure::Check(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(Value, Option<String>), Failure>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn check(ok: bool, msg: &str) -> Option<String> {
    (!ok).then(|| msg.to_string())
}

fn params(d: &Dims) -> Result<Params, Failure> {
    Ok(Params::new(d.m, d.n, d.r)?)
}

fn read_poly(input: &PolyInput, p: &Params) -> Result<Polynomial, Failure> {
    match (&input.poly, input.seed) {
        (Some(text), _) => Ok(Polynomial::parse(text, p.x_space())?),
        (None, Some(seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(Polynomial::random(p.x_space(), &mut rng, input.deg, 4))
        }
        (None, None) => Err(Failure::Usage("either --poly or --seed is required".into())),
    }
}

fn parse_eps(eps: &Option<String>) -> Result<num_rational::BigRational, Failure> {
    match eps {
        Some(s) => Ok(parse_rational(s)?),
        None => Ok(default_epsilon()),
    }
}

fn run(command: &Command) -> Outcome {
    match command {
        Command::Basis { dims, deg } => {
            let p = params(dims)?;
            let basis = enumerate_standard(&p, *deg);
            let ok = basis.iter().all(is_standard);
            Ok((
                json!({"params": p, "degree": deg, "count": basis.len(), "bitableaux": basis}),
                check(ok, "enumerated a non-standard bitableau"),
            ))
        }
        Command::Straighten { dims, input } => {
            let p = params(dims)?;
            let f = read_poly(input, &p)?;
            let map = SubstitutionMap::new(p);
            let out = straightening::straighten_with(&f, &map)?;
            let back = out.combination.to_polynomial(&map)?;
            let verified = map.phi(&back)? == map.phi(&f)?;
            Ok((
                json!({
                    "params": p,
                    "input": f.to_string(),
                    "combination": out.combination,
                    "iterations": out.iterations,
                    "verified": verified,
                }),
                check(verified, "straightened form differs from the input modulo the ideal"),
            ))
        }
        Command::Member { dims, input } => {
            let p = params(dims)?;
            let f = read_poly(input, &p)?;
            let member = straightening::is_in_ideal(&f, &p)?;
            let combination_empty = straightening::straighten(&f, &p)?.is_empty();
            Ok((
                json!({"params": p, "input": f.to_string(), "member": member}),
                check(
                    member == combination_empty,
                    "membership and straightening disagree",
                ),
            ))
        }
        Command::Hilbert { dims, deg, method } => {
            let p = params(dims)?;
            match method {
                Some(m) => {
                    let method: HilbertMethod = (*m).into();
                    let value = hilbert_function(&p, *deg, method)?;
                    Ok((
                        json!({"params": p, "degree": deg, "method": method, "value": value}),
                        None,
                    ))
                }
                None => {
                    let a = hilbert_function(&p, *deg, HilbertMethod::Bitableaux)?;
                    let b = hilbert_function(&p, *deg, HilbertMethod::Lattice)?;
                    let c = hilbert_function(&p, *deg, HilbertMethod::Rank)?;
                    let agree = a == b && b == c;
                    Ok((
                        json!({
                            "params": p,
                            "degree": deg,
                            "values": {"bitableaux": a, "lattice": b, "rank": c},
                            "agree": agree,
                        }),
                        check(agree, "Hilbert function methods disagree"),
                    ))
                }
            }
        }
        Command::Mu { dims, t, ideal } => {
            let p = params(dims)?;
            let ideal: Ideal = (*ideal).into();
            let mu = mu_power(&p, ideal, *t)?;
            let direct = mu_power_direct(&p, ideal, *t)?;
            Ok((
                json!({"mu": output::big(&mu)}),
                check(mu == direct, "determinant and enumeration disagree"),
            ))
        }
        Command::Mult { dims } => {
            let p = params(dims)?;
            let e = multiplicity(&p)?;
            let via_mu = mu_power(&p, Ideal::P, p.m - p.r)?;
            Ok((
                json!({"e": output::big(&e)}),
                check(e == via_mu, "multiplicity differs from mu(p^(m-r))"),
            ))
        }
        Command::Classify { dims, t, ideal } => {
            let p = params(dims)?;
            Ok((to_value(&classify(&p, (*ideal).into(), *t)?), None))
        }
        Command::Certify {
            dims,
            t,
            ideal,
            deg_bound,
            eps,
        } => {
            let p = params(dims)?;
            let eps = parse_eps(eps)?;
            let c = certify_with_epsilon(&p, (*ideal).into(), *t, *deg_bound, eps)?;
            Ok((
                to_value(&c),
                check(c.agrees, "certificate does not support the verdict"),
            ))
        }
        Command::ConeCheck {
            dims,
            deg_bound,
            t,
            ideal,
            eps,
        } => {
            let p = params(dims)?;
            match t {
                None => {
                    let report = semigroup_vs_cone(&p, Variant::E, *deg_bound)?;
                    Ok((
                        to_value(&report),
                        check(report.passed(), "semigroup and cone differ"),
                    ))
                }
                Some(t) => {
                    let ideal: Ideal = ideal.map(Into::into).unwrap_or(Ideal::P);
                    let q = match ideal {
                        Ideal::P => p,
                        Ideal::Q => p.transpose(),
                    };
                    let witness = Witness::new(&q, *t, parse_eps(eps)?)?;
                    let report = conic_equality_check(&q, *t, &witness, *deg_bound)?;
                    let ok = report.agrees_with_prediction();
                    Ok((
                        json!({"ideal": ideal, "report": report}),
                        check(ok, "conic equality contradicts the predicted boundary"),
                    ))
                }
            }
        }
        Command::TildeCheck { dims, deg_bound } => {
            let p = params(dims)?;
            let report = verify_d_tilde(&p, *deg_bound)?;
            Ok((
                to_value(&report),
                check(report.passed(), "SL-invariant initial algebra check failed"),
            ))
        }
        Command::LadderCheck { dims, delta, deg } => {
            let p = params(dims)?;
            let delta: Minor = delta.parse()?;
            let report = verify_ladder(&p, &delta, *deg)?;
            Ok((
                to_value(&report),
                check(report.passed(), "initial ideal differs from the predicted variable set"),
            ))
        }
        Command::McmClasses { dims } => {
            let p = params(dims)?;
            let classes = rank1_mcm_classes(&p)?;
            Ok((json!({"params": p, "classes": classes}), None))
        }
    }
}

fn format_of(command: &Command) -> Format {
    let dims = match command {
        Command::Basis { dims, .. }
        | Command::Straighten { dims, .. }
        | Command::Member { dims, .. }
        | Command::Hilbert { dims, .. }
        | Command::Mu { dims, .. }
        | Command::Mult { dims }
        | Command::Classify { dims, .. }
        | Command::Certify { dims, .. }
        | Command::ConeCheck { dims, .. }
        | Command::TildeCheck { dims, .. }
        | Command::LadderCheck { dims, .. }
        | Command::McmClasses { dims } => dims,
    };
    match dims.format {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok((value, failure)) => {
            let text = output::render(&value, format_of(&cli.command));
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout(), "{text}");
            match failure {
                None => ExitCode::SUCCESS,
                Some(msg) => {
                    eprintln!("check failed: {msg}");
                    ExitCode::from(2)
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(2)
        }
    }
}
