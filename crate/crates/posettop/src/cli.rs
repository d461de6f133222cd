//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails, 2 on usage
//! errors and malformed input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use posettop_core::cm::{is_cm_complex, is_cm_poset, CmCoefficients};
use posettop_core::constructions::{
    antichain, boolean, boolean_minus_bottom, chain, fiber_ideal, minors, product, rank_select, rees, rees_deranged,
    subword, weighted_segre, ConstructionError,
};
use posettop_core::enumerative::{
    derangements, falling_chains_segre_square, flag_vector_boolean, no_common_ascent_pairs, EnumerativeError,
};
use posettop_core::homology::{homology, is_prime, Coefficients, HomologyError};
use posettop_core::semigroup::{koszul_necessary_test, lambda_d, vector_label, SemigroupError, DEFAULT_LAYER_CAP};
use posettop_core::simplicial::{barycentric_subdivision, complex_segre, order_complex, type_select, ComplexError};
use posettop_core::{Coloring, Poset, PosetError, PosetMap, SimplicialComplex};
use serde_json::json;

use crate::io::{self, Document, IoError};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "posettop", version, about = "Topology of finite posets, Segre and Rees products")]
pub struct Cli {
    /// Worker threads for parallel checks.
    #[arg(long, env = "POSETTOP_THREADS", global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output to a file instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A coefficient selector: `q`, `gf:p`, `z` or `z-spherical`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(u64),
    Integers,
}

impl Field {
    fn homology(self) -> Coefficients {
        match self {
            Field::Rationals => Coefficients::Rationals,
            Field::Prime(p) => Coefficients::Prime(p),
            Field::Integers => Coefficients::Integers,
        }
    }

    fn cm(self) -> CmCoefficients {
        match self {
            Field::Rationals => CmCoefficients::Rationals,
            Field::Prime(p) => CmCoefficients::Prime(p),
            Field::Integers => CmCoefficients::IntegralSpherical,
        }
    }
}

pub fn parse_field(s: &str) -> Result<Field, String> {
    match s.to_ascii_lowercase().as_str() {
        "q" => Ok(Field::Rationals),
        "z" | "z-spherical" => Ok(Field::Integers),
        t => {
            let Some(p) = t.strip_prefix("gf:") else {
                return Err(format!("unknown field {s}; expected q, gf:p, z or z-spherical"));
            };
            let p: u64 = p.parse().map_err(|_| format!("{p} is not a number"))?;
            if is_prime(p) {
                Ok(Field::Prime(p))
            } else {
                Err(format!("{p} is not prime"))
            }
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Products of posets given as JSON files.
    #[command(subcommand)]
    Construct(Construct),
    /// Named poset families.
    #[command(subcommand)]
    Family(Family),
    /// Simplicial complex operations.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Reduced homology of a complex, or of the order complex of a poset.
    Homology {
        input: PathBuf,
        #[arg(long, default_value = "z", value_parser = parse_field)]
        field: Field,
    },
    /// Cohen-Macaulay test of a poset or complex.
    Cm {
        input: PathBuf,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: Field,
    },
    /// Affine semigroups.
    #[command(subcommand)]
    Semigroup(SemigroupCmd),
    /// Enumerative invariants.
    #[command(subcommand)]
    Enumerate(EnumerateCmd),
    /// Runs the reproduction suite.
    VerifyPaper {
        /// Bound for the Table 1 and R_n blocks; K_n and Mobius use min(max-n, 5).
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u16).range(1..=8))]
        max_n: u16,
        /// Also computes R_7.
        #[arg(long)]
        include_r7: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Cartesian product.
    Product { p: PathBuf, q: PathBuf },
    /// Weighted Segre product graded by rank on P and `g` on Q.
    Segre {
        p: PathBuf,
        q: PathBuf,
        /// Values of `g` on the elements of Q in file order; defaults to rank.
        #[arg(long, value_delimiter = ',')]
        g_values: Option<Vec<usize>>,
    },
    /// Rees product.
    Rees { p: PathBuf, q: PathBuf },
    /// Rank selection.
    RankSelect {
        p: PathBuf,
        #[arg(long, value_delimiter = ',')]
        ranks: Vec<usize>,
    },
}

#[derive(Args, Debug)]
pub struct Size {
    #[arg(long)]
    pub n: usize,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    Boolean(Size),
    BooleanMinusBottom(Size),
    Chain(Size),
    Antichain(Size),
    Minors(Size),
    Subword(Size),
    ReesDeranged(Size),
    /// Order ideal of K_n over `(A, i)`.
    FiberIdeal {
        #[arg(long)]
        n: usize,
        /// The letter set A; defaults to 1..n.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        #[arg(long)]
        i: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ComplexCmd {
    OrderComplex { input: PathBuf },
    Subdivision { input: PathBuf },
    /// Faces whose colors lie in `types`. Posets are colored by rank + 1.
    TypeSelect {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        colors: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        types: Vec<usize>,
    },
    /// Segre product of colored complexes. Posets are colored by rank + 1.
    Segre {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_delimiter = ',')]
        colors1: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        colors2: Option<Vec<usize>>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SemigroupCmd {
    /// Interval homology test up to a rank.
    KoszulTest {
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        max_rank: u16,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: Field,
    },
    /// Elements by degree.
    Enumerate {
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        max_rank: u16,
        #[arg(long, default_value_t = DEFAULT_LAYER_CAP)]
        layer_cap: usize,
    },
    /// The semigroup generated by vectors in N^d of sum d other than (1,...,1).
    Lambda {
        #[arg(long)]
        d: usize,
    },
    /// The interval (0, lambda) as a poset.
    Interval {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum EnumerateCmd {
    Derangements(Size),
    NcaPairs(Size),
    FlagVector(Size),
    FallingChains(Size),
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Enumerative(#[from] EnumerativeError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
}

/// Output of a command and whether its mathematical check passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn read_document(path: &Path) -> Result<Document, CliError> {
    Ok(io::parse_document(&io::read_source(path)?)?)
}

fn read_poset(path: &Path) -> Result<Poset, CliError> {
    match read_document(path)? {
        Document::Poset(p) => Ok(p),
        _ => Err(CliError::Usage(format!("{}: expected a poset", path.display()))),
    }
}

fn read_complex_or_poset(path: &Path) -> Result<(SimplicialComplex, Option<Poset>), CliError> {
    match read_document(path)? {
        Document::Poset(p) => Ok((order_complex(&p), Some(p))),
        Document::Complex(c) => Ok((c, None)),
        Document::Semigroup(_) => Err(CliError::Usage(format!("{}: expected a poset or complex", path.display()))),
    }
}

fn read_semigroup(path: &Path) -> Result<posettop_core::semigroup::HomogeneousSemigroup, CliError> {
    match read_document(path)? {
        Document::Semigroup(s) => Ok(s),
        _ => Err(CliError::Usage(format!("{}: expected a semigroup", path.display()))),
    }
}

fn coloring(
    name: &str,
    colors: Option<Vec<usize>>,
    poset: Option<&Poset>,
) -> Result<Coloring, CliError> {
    match (colors, poset) {
        (Some(c), _) => Ok(Coloring(c)),
        (None, Some(p)) => Ok(Coloring::from_ranks(p, 1)?),
        (None, None) => Err(CliError::Usage(format!("--{name} is required for a complex input"))),
    }
}

fn json_or_text(format: Format, json: serde_json::Value, text: String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json).expect("serialisable");
            s.push('\n');
            s
        }
        Format::Text => text,
    }
}

fn construct(cmd: Construct) -> Result<Outcome, CliError> {
    let p = match cmd {
        Construct::Product { p, q } => product(&read_poset(&p)?, &read_poset(&q)?).into_poset(),
        Construct::Segre { p, q, g_values } => {
            let (p, q) = (read_poset(&p)?, read_poset(&q)?);
            let g = match g_values {
                Some(v) => PosetMap::to_naturals(&q, v)?,
                None => PosetMap::rank(&q)?,
            };
            let (s, hyp) = weighted_segre(&p, &q, &g)?;
            if !hyp.g_strict {
                eprintln!("warning: g is not strictly order-preserving");
            }
            if !hyp.image_in_ranks {
                eprintln!("warning: g takes values outside the ranks of P");
            }
            s.into_poset()
        }
        Construct::Rees { p, q } => rees(&read_poset(&p)?, &read_poset(&q)?)?.into_poset(),
        Construct::RankSelect { p, ranks } => rank_select(&read_poset(&p)?, &ranks)?,
    };
    Ok(Outcome::ok(io::poset_json(&p)))
}

fn family(cmd: Family) -> Result<Outcome, CliError> {
    let p = match cmd {
        Family::Boolean(s) => boolean(s.n)?,
        Family::BooleanMinusBottom(s) => boolean_minus_bottom(s.n)?,
        Family::Chain(s) => chain(s.n),
        Family::Antichain(s) => antichain(s.n),
        Family::Minors(s) => minors(s.n)?.into_poset(),
        Family::Subword(s) => subword(s.n)?.poset,
        Family::ReesDeranged(s) => rees_deranged(s.n)?.into_poset(),
        Family::FiberIdeal { n, set, i } => {
            let set = set.unwrap_or_else(|| (1..=n).collect());
            let letters = set
                .iter()
                .map(|&a| u8::try_from(a).ok().filter(|&a| a >= 1 && a as usize <= n))
                .collect::<Option<Vec<u8>>>()
                .ok_or_else(|| CliError::Usage(format!("--set must be a subset of 1..{n}")))?;
            let f = fiber_ideal(n, &letters, i)?;
            if !f.consistent {
                eprintln!("warning: the fiber differs from the ideal generated by words with {} descents", i - 1);
            }
            f.ideal.poset
        }
    };
    Ok(Outcome::ok(io::poset_json(&p)))
}

fn complex(cmd: ComplexCmd) -> Result<Outcome, CliError> {
    let c = match cmd {
        ComplexCmd::OrderComplex { input } => order_complex(&read_poset(&input)?),
        ComplexCmd::Subdivision { input } => barycentric_subdivision(&read_complex_or_poset(&input)?.0),
        ComplexCmd::TypeSelect { input, colors, types } => {
            let (c, p) = read_complex_or_poset(&input)?;
            type_select(&c, &coloring("colors", colors, p.as_ref())?, &types)?
        }
        ComplexCmd::Segre { first, second, colors1, colors2 } => {
            let (c1, p1) = read_complex_or_poset(&first)?;
            let (c2, p2) = read_complex_or_poset(&second)?;
            let g1 = coloring("colors1", colors1, p1.as_ref())?;
            let g2 = coloring("colors2", colors2, p2.as_ref())?;
            let (c, report) = complex_segre(&c1, &g1, &c2, &g2)?;
            if report.colors_outside_range {
                eprintln!("warning: the second coloring leaves the range of the first");
            }
            c
        }
    };
    Ok(Outcome::ok(io::complex_json(&c)))
}

fn semigroup(cmd: SemigroupCmd, format: Format) -> Result<Outcome, CliError> {
    match cmd {
        SemigroupCmd::KoszulTest { input, max_rank, field } => {
            let s = read_semigroup(&input)?;
            let report = koszul_necessary_test(&s, max_rank as usize, field.cm())?;
            let text = match format {
                Format::Json => io::koszul_json(&report),
                Format::Text => io::koszul_text(&report),
            };
            Ok(Outcome { text, passed: report.passed() })
        }
        SemigroupCmd::Enumerate { input, max_rank, layer_cap } => {
            let s = read_semigroup(&input)?;
            let layers = s.enumerate_with_cap(max_rank as usize, layer_cap)?;
            let mut text = String::new();
            for d in 0..=layers.max_degree() {
                let elems: Vec<String> = layers.layer(d).iter().map(|v| vector_label(v)).collect();
                let _ = writeln!(text, "degree {d} ({}): {}", elems.len(), elems.join(" "));
            }
            let json = json!({
                "max_degree": layers.max_degree(),
                "layers": (0..=layers.max_degree()).map(|d| layers.layer(d).to_vec()).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(json_or_text(format, json, text)))
        }
        SemigroupCmd::Lambda { d } => Ok(Outcome::ok(io::semigroup_json(&lambda_d(d)?))),
        SemigroupCmd::Interval { input, lambda } => {
            let s = read_semigroup(&input)?;
            let deg = s.degree(&lambda).ok_or_else(|| SemigroupError::NotMember(vector_label(&lambda)))?;
            let layers = s.enumerate(deg)?;
            Ok(Outcome::ok(io::poset_json(&layers.lower_interval(&lambda)?.poset)))
        }
    }
}

fn enumerate(cmd: EnumerateCmd, format: Format) -> Result<Outcome, CliError> {
    let (name, n, json, text) = match cmd {
        EnumerateCmd::Derangements(Size { n }) => {
            let v = derangements(n)?;
            ("derangements", n, json!(v.to_string()), v.to_string())
        }
        EnumerateCmd::NcaPairs(Size { n }) => {
            let v = no_common_ascent_pairs(n)?;
            ("nca-pairs", n, json!(v), v.to_string())
        }
        EnumerateCmd::FallingChains(Size { n }) => {
            let v = falling_chains_segre_square(n)?;
            ("falling-chains", n, json!(v), v.to_string())
        }
        EnumerateCmd::FlagVector(Size { n }) => {
            let fv = flag_vector_boolean(n)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (mask, (a, b)) in fv.alpha.iter().zip(&fv.beta).enumerate() {
                let set: Vec<usize> = (0..usize::BITS as usize).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
                let label: Vec<String> = set.iter().map(|k| k.to_string()).collect();
                let _ = writeln!(text, "{{{}}}: alpha {a}, beta {b}", label.join(","));
                rows.push(json!({ "set": set, "alpha": a, "beta": b }));
            }
            let _ = writeln!(text, "sum alpha*beta = {}", fv.alpha_beta_sum());
            let json = json!({ "n": n, "rows": rows, "alpha_beta_sum": fv.alpha_beta_sum() });
            return Ok(Outcome::ok(json_or_text(format, json, text)));
        }
    };
    let json = json!({ "quantity": name, "n": n, "value": json });
    Ok(Outcome::ok(json_or_text(format, json, format!("{text}\n"))))
}

fn verify_report(report: &verify::Report, format: Format) -> String {
    match format {
        Format::Text => verify::render(report),
        Format::Json => {
            let cells: Vec<_> = report
                .table
                .iter()
                .map(|c| json!({ "n": c.n, "i": c.i, "faces": c.faces, "homology": serde_json::from_str::<serde_json::Value>(&io::homology_json(&c.homology)).expect("valid json") }))
                .collect();
            let criteria: Vec<_> = report
                .criteria
                .iter()
                .map(|c| json!({ "criterion": c.number, "title": c.title, "passed": c.passed, "details": c.details }))
                .collect();
            json_or_text(Format::Json, json!({ "passed": report.passed(), "table": cells, "criteria": criteria }), String::new())
        }
    }
}

fn dispatch(cli: Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Construct(c) => construct(c),
        Command::Family(f) => family(f),
        Command::Complex(c) => complex(c),
        Command::Homology { input, field } => {
            let (c, _) = read_complex_or_poset(&input)?;
            let h = homology(&c, field.homology())?;
            let text = match format {
                Format::Json => io::homology_json(&h),
                Format::Text => io::homology_text(&h),
            };
            Ok(Outcome::ok(text))
        }
        Command::Cm { input, field } => {
            let report = match read_complex_or_poset(&input)? {
                (_, Some(p)) => is_cm_poset(&p, field.cm()),
                (c, None) => is_cm_complex(&c, field.cm())?,
            };
            let text = match format {
                Format::Json => io::cm_json(&report),
                Format::Text => io::cm_text(&report),
            };
            Ok(Outcome { text, passed: report.verdict })
        }
        Command::Semigroup(s) => semigroup(s, format),
        Command::Enumerate(e) => enumerate(e, format),
        Command::VerifyPaper { max_n, include_r7 } => {
            let config = verify::Config { include_r7, ..verify::Config::new(max_n as usize) };
            let report = verify::run(config);
            Ok(Outcome { text: verify_report(&report, format), passed: report.passed() })
        }
    }
}

/// Runs the CLI on explicit arguments and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global();
    }
    let output = cli.output.clone();
    match dispatch(cli) {
        Ok(outcome) => {
            let written = match &output {
                Some(path) => std::fs::write(path, &outcome.text)
                    .map_err(|source| CliError::Write { path: path.display().to_string(), source }),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) if outcome.passed => 0,
                Ok(()) => 1,
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}
