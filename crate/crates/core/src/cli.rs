//! Command-line front end.
//!
//! Exit codes: 0 success, 1 infeasible result or failed check, 2 malformed
//! input, 3 search budget exceeded.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::bounds::{
    k_closed, k_product, root_bound_alpha, root_bound_constant_term, root_bound_first_principle,
    BoundCertificate,
};
use crate::chains::chain_count_exact;
use crate::enumeration::{
    enumerate_pair_with, tightness_search, PairConstraint, SearchOptions, Status, Strategy,
    DEFAULT_LEADERBOARD, DEFAULT_NODE_BUDGET,
};
use crate::error::Error;
use crate::inequalities::check_all;
use crate::json::{
    BoundJson, ChainBoundJson, ChainJson, CheckReportJson, EnumerationJson, PolynomialJson,
    SweepJson, TightnessJson,
};
use crate::poly::{family, family_roots, from_roots, multiplier_f, IntPolynomial, RootMultiset};
use crate::verify::verify_sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "intpoly",
    version,
    about = "Exact tools for monic polynomials whose roots are nonzero integers"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every polynomial with a prescribed consecutive coefficient pair.
    Enumerate(EnumerateArgs),
    /// Compute a certified root bound or the chain-bound function.
    Bound(BoundArgs),
    /// Run every coefficient inequality on a polynomial.
    Check(CheckArgs),
    /// Count binary chains containing "11" or ending with 1.
    Chains(ChainsArgs),
    /// Build prod (x^2 - r^2) over the given values.
    Family(FamilyArgs),
    /// Build the degree-m multiplier polynomial with roots in {-1, 1}.
    Multiplier(MultiplierArgs),
    /// Exhaustively re-check every inequality and bound on small root sets.
    Verify(VerifyArgs),
    /// Rank small root sets by how close they come to the alpha bound.
    Tightness(TightnessArgs),
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("'{s}' is not an integer"))
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Degree.
    #[arg(long)]
    pub n: usize,
    /// Position of the first prescribed coefficient, 1 <= j <= n-1.
    #[arg(long)]
    pub j: usize,
    /// Value of a_j.
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    pub aj: BigInt,
    /// Value of a_{j+1}.
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    pub aj1: BigInt,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Maximum number of search nodes.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Force the radius search even for the last coefficient pair.
    #[arg(long)]
    pub radius_search: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Alpha,
    SumOfSquares,
    ConstantTerm,
    Chain,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, value_enum)]
    pub method: BoundKind,
    /// Degree (alpha).
    #[arg(long)]
    pub n: Option<usize>,
    /// Bound on the pair of coefficients (alpha).
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    pub m: Option<BigInt>,
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    pub a1: Option<BigInt>,
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    pub a2: Option<BigInt>,
    /// Constant term (constant-term).
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    pub an: Option<BigInt>,
    /// Chain length (chain).
    #[arg(long)]
    pub t: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Coefficients a_0,...,a_n, leading first; a_0 must be 1.
    #[arg(long, value_parser = parse_int, value_delimiter = ',', allow_hyphen_values = true,
          conflicts_with = "roots", required_unless_present = "roots")]
    pub coeffs: Vec<BigInt>,
    /// Build the polynomial from these nonzero roots instead.
    #[arg(long, value_parser = parse_int, value_delimiter = ',', allow_hyphen_values = true)]
    pub roots: Vec<BigInt>,
}

#[derive(Debug, Args)]
pub struct ChainsArgs {
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Comma-separated nonzero values r_1,...,r_k.
    #[arg(long, value_parser = parse_int, value_delimiter = ',', allow_hyphen_values = true,
          required = true)]
    pub rs: Vec<BigInt>,
}

#[derive(Debug, Args)]
pub struct MultiplierArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub m: i64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub radius: u64,
    /// Maximum number of root multisets.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct TightnessArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub j: usize,
    #[arg(long)]
    pub radius: u64,
    #[arg(long, default_value_t = DEFAULT_LEADERBOARD)]
    pub top: usize,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
}

/// Rendered output plus the exit code it implies.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn new(text: String, code: i32) -> Self {
        Self { text, code }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

fn missing(flag: &str, method: &str) -> Error {
    Error::invalid(format!("--{flag} is required for --method {method}"))
}

/// Parses `args` (program name first), runs the command and writes output.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let _ = writeln!(out, "{}", outcome.text.trim_end());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_budget() {
                EXIT_BUDGET
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Enumerate(a) => enumerate(a, json),
        Command::Bound(a) => bound(a, json),
        Command::Check(a) => check(a, json),
        Command::Chains(a) => {
            let c = chain_count_exact(a.n)?;
            let text = if json {
                to_json(&ChainJson::from(&c))
            } else {
                format!(
                    "n:      {}\ngood:   {}\ntotal:  {}\nbad:    {}\nratio:  {}\n",
                    c.n,
                    c.good,
                    c.total,
                    c.complement(),
                    c.ratio()
                )
            };
            Ok(Outcome::new(text, EXIT_OK))
        }
        Command::Family(a) => {
            let p = family(&a.rs)?;
            let roots = family_roots(&a.rs)?;
            Ok(Outcome::new(render_poly(&p, Some(&roots), json), EXIT_OK))
        }
        Command::Multiplier(a) => {
            let p = multiplier_f(a.m)?;
            let m = a.m as usize;
            let mut roots = vec![BigInt::from(-1); m.div_ceil(2)];
            roots.extend(std::iter::repeat_n(BigInt::from(1), m / 2));
            let roots = RootMultiset::new(roots)?;
            Ok(Outcome::new(render_poly(&p, Some(&roots), json), EXIT_OK))
        }
        Command::Verify(a) => {
            let report = verify_sweep(a.n_max, a.radius, a.budget)?;
            let code = if report.violations() == 0 {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            let record = SweepJson::from(&report);
            let text = if json {
                to_json(&record)
            } else {
                let mut s = format!(
                    "degrees 2..={}, roots in [-{r}, {r}] \\ {{0}}\npolynomials: {}\nchecks:      {}\nviolations:  {}\n",
                    record.n_max,
                    record.polynomials,
                    record.checks,
                    record.violations,
                    r = record.radius,
                );
                for t in &record.per_check {
                    s += &format!(
                        "  {:<22} {:>10} evaluated {:>6} violations\n",
                        t.name, t.evaluated, t.violations
                    );
                }
                if let Some(c) = &report.first_counterexample {
                    s += &format!(
                        "first counterexample: {} at index {} for roots {} ({} vs {})\n",
                        c.check, c.index, c.roots, c.lhs, c.rhs
                    );
                }
                s
            };
            Ok(Outcome::new(text, code))
        }
        Command::Tightness(a) => {
            let top = tightness_search(a.n, a.j, a.radius, a.top, a.budget)?;
            let text = if json {
                to_json(&top.iter().map(TightnessJson::from).collect::<Vec<_>>())
            } else {
                top.iter()
                    .map(|e| format!("{:>12}  {}  {}\n", e.ratio_squared, e.roots, e.poly))
                    .collect()
            };
            Ok(Outcome::new(text, EXIT_OK))
        }
    }
}

fn render_poly(p: &IntPolynomial, roots: Option<&RootMultiset>, json: bool) -> String {
    if json {
        return to_json(&PolynomialJson::new(p, roots));
    }
    let mut s = format!("{p}\ndegree: {}\n", p.degree());
    if let Some(r) = roots {
        s += &format!("roots:  {r}\n");
    }
    s
}

fn enumerate(a: &EnumerateArgs, json: bool) -> Result<Outcome, Error> {
    let c = PairConstraint::new(a.n, a.j, a.aj.clone(), a.aj1.clone())?;
    let opts = SearchOptions {
        threads: a.threads,
        node_budget: a.budget,
        strategy: if a.radius_search {
            Strategy::RadiusSearch
        } else {
            Strategy::Auto
        },
    };
    let result = enumerate_pair_with(&c, &opts)?;
    let code = if result.status == Status::Complete {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    let text = if json {
        to_json(&EnumerationJson::from(&result))
    } else {
        let mut s = format!(
            "constraint: {c}\nstatus:     {}\nradius:     {} ({})\nnodes:      {}\nsolutions:  {}\n",
            result.status,
            result.certificate.radius,
            result.certificate.method,
            result.nodes_visited,
            result.solutions.len()
        );
        for sol in &result.solutions {
            s += &format!("  {}  {}\n", sol.roots, sol.poly);
        }
        s
    };
    Ok(Outcome::new(text, code))
}

fn bound(a: &BoundArgs, json: bool) -> Result<Outcome, Error> {
    let cert: BoundCertificate = match a.method {
        BoundKind::Alpha => {
            let n = a.n.ok_or_else(|| missing("n", "alpha"))?;
            let m = a.m.as_ref().ok_or_else(|| missing("m", "alpha"))?;
            root_bound_alpha(n, m)?
        }
        BoundKind::SumOfSquares => {
            let a1 =
                a.a1.as_ref()
                    .ok_or_else(|| missing("a1", "sum-of-squares"))?;
            let a2 =
                a.a2.as_ref()
                    .ok_or_else(|| missing("a2", "sum-of-squares"))?;
            root_bound_first_principle(a1, a2)
        }
        BoundKind::ConstantTerm => {
            let an =
                a.an.as_ref()
                    .ok_or_else(|| missing("an", "constant-term"))?;
            root_bound_constant_term(an)?
        }
        BoundKind::Chain => {
            let t = a.t.ok_or_else(|| missing("t", "chain"))?;
            let product = k_product(t)?;
            let closed = if t >= 5 { Some(k_closed(t)?) } else { None };
            let record = ChainBoundJson::new(&product, closed.as_ref());
            let text = if json {
                to_json(&record)
            } else {
                let mut s = format!("t:         {}\nk_product: {}\n", record.t, record.k_product);
                if let Some(c) = &record.k_closed {
                    s += &format!("k_closed:  {c}\n");
                }
                s
            };
            return Ok(Outcome::new(text, EXIT_OK));
        }
    };
    let code = if cert.is_feasible() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    let record = BoundJson::from(&cert);
    let text = if json {
        to_json(&record)
    } else {
        let mut s = format!("method: {}\nradius: {}\n", record.method, record.radius);
        for (name, value) in &cert.inputs {
            s += &format!("{name:<6}  {value}\n");
        }
        if let Some(al) = &cert.alpha {
            s += &format!("alpha_{}^2: {al}\n", al.n());
        }
        s
    };
    Ok(Outcome::new(text, code))
}

fn check(a: &CheckArgs, json: bool) -> Result<Outcome, Error> {
    let p = if a.roots.is_empty() {
        IntPolynomial::from_coeffs(a.coeffs.clone())?
    } else {
        from_roots(&RootMultiset::new(a.roots.clone())?)
    };
    let report = check_all(&p)?;
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    let text = if json {
        to_json(&CheckReportJson::from(&report))
    } else {
        let mut s = format!("polynomial: {p}\n");
        s += &format!(
            "{:<22} {:>5}  {:>12}  {:>12}  {}\n",
            "check", "index", "lhs", "rhs", "result"
        );
        for v in &report.verdicts {
            let verdict = match (v.pass, v.lhs == v.rhs) {
                (true, true) => "pass (equality)",
                (true, false) => "pass",
                (false, _) => "FAIL",
            };
            s += &format!(
                "{:<22} {:>5}  {:>12}  {:>12}  {}\n",
                v.name.as_str(),
                v.index,
                v.lhs.to_string(),
                v.rhs.to_string(),
                verdict
            );
        }
        s += if report.passed() {
            "all checks pass\n"
        } else {
            "some checks FAIL\n"
        };
        s
    };
    Ok(Outcome::new(text, code))
}
