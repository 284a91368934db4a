//! Command-line front end.
//!
//! [`run`] parses arguments, performs the computation and returns the
//! complete output together with the exit code, so nothing is printed when
//! arguments are rejected. Exit codes: 0 success, 1 verification failures,
//! 2 invalid input.

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{Abelian, FreeNilpotent, LieAlgebra};
use crate::bch::{bch_product, bernoulli_operator, universal_bch};
use crate::expr;
use crate::freelie::{lyndon_words, Alphabet};
use crate::rational::{bernoulli_numbers, format_rational};
use crate::realization::{check_cosimplicial_identities, verify_iso, Corruption, HomSimplex, IsoConfig, Realization};
use crate::sample::seeded_rng;
use crate::simplicial::{check_simplicial_identities, BarConstruction, BarSimplex, IdentityReport};
use crate::structure::StructureConstants;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "lierealize",
    version,
    about = "Free nilpotent Lie algebras, the BCH group and the realization/bar-construction isomorphism"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for all random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override the weight/nilpotency cap of the algebra.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CorruptArg {
    /// Drop the inverse in the second entry of Ψ.
    Psi,
    /// Swap d_0 and d_1 of the bar construction.
    Face,
}

impl From<CorruptArg> for Corruption {
    fn from(c: CorruptArg) -> Self {
        match c {
            CorruptArg::Psi => Corruption::Psi,
            CorruptArg::Face => Corruption::BarFace,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List Lyndon words and the dimension of each weight.
    Basis {
        /// Letters, one per character ("xyz") or comma separated ("a,b,c").
        alphabet: String,
        max_weight: usize,
    },
    /// BCH product of two expressions, or the universal table with --table.
    Bch {
        /// free:<letters>:<cap> | abelian:<dim> | sc:<path>:<cap>
        algebra: Option<String>,
        left: Option<String>,
        right: Option<String>,
        /// Print log(exp(x) exp(y)) up to this weight.
        #[arg(long, value_name = "CAP", conflicts_with_all = ["algebra", "left", "right"])]
        table: Option<usize>,
    },
    /// Apply ad_x/(e^{ad_x} - 1) to y, or list Bernoulli numbers with --numbers.
    Bernoulli {
        algebra: Option<String>,
        x: Option<String>,
        y: Option<String>,
        #[arg(long, value_name = "N", conflicts_with_all = ["algebra", "x", "y"])]
        numbers: Option<usize>,
    },
    /// Check that Ψ is an isomorphism onto the bar construction.
    IsoCheck {
        algebra: String,
        /// Largest simplex dimension.
        #[arg(long, default_value_t = 4)]
        dims: usize,
        /// Random simplices per dimension.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Negative control.
        #[arg(long, value_enum)]
        corrupt: Option<CorruptArg>,
    },
    /// Check the simplicial identities on both sides and the cosimplicial
    /// identities on generators.
    SimplicialCheck {
        algebra: String,
        #[arg(long, default_value_t = 4)]
        dims: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Negative control: only `face` applies.
        #[arg(long, value_enum)]
        corrupt: Option<CorruptArg>,
    },
}

/// Parsed form of `free:<letters>:<cap>`, `abelian:<dim>` or
/// `sc:<path>:<cap>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Free { letters: Vec<String>, cap: usize },
    Abelian { dim: usize },
    StructureConstants { path: String, cap: usize },
}

fn letters_of(s: &str) -> Vec<String> {
    if s.contains(',') {
        s.split(',').map(|l| l.trim().to_string()).collect()
    } else {
        s.chars().map(String::from).collect()
    }
}

impl FromStr for AlgebraSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let positive = |v: &str, what: &str| -> Result<usize, String> {
            match v.parse::<usize>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(format!("invalid {what} '{v}' in algebra '{s}'")),
            }
        };
        match s.split_once(':') {
            Some(("free", rest)) => {
                let (letters, cap) = rest
                    .rsplit_once(':')
                    .ok_or_else(|| format!("expected free:<letters>:<cap>, got '{s}'"))?;
                Ok(AlgebraSpec::Free {
                    letters: letters_of(letters),
                    cap: positive(cap, "cap")?,
                })
            }
            Some(("abelian", dim)) => Ok(AlgebraSpec::Abelian {
                dim: positive(dim, "dimension")?,
            }),
            Some(("sc", rest)) => {
                let (path, cap) = rest
                    .rsplit_once(':')
                    .ok_or_else(|| format!("expected sc:<path>:<cap>, got '{s}'"))?;
                Ok(AlgebraSpec::StructureConstants {
                    path: path.to_string(),
                    cap: positive(cap, "cap")?,
                })
            }
            _ => Err(format!(
                "unknown algebra '{s}' (expected free:<letters>:<cap>, abelian:<dim> or sc:<path>:<cap>)"
            )),
        }
    }
}

/// A constructed algebra of any supported kind.
pub enum AnyAlgebra {
    Free(FreeNilpotent),
    Abelian(Abelian),
    StructureConstants(StructureConstants),
}

macro_rules! with_algebra {
    ($any:expr, $alg:ident => $body:expr) => {
        match $any {
            AnyAlgebra::Free($alg) => $body,
            AnyAlgebra::Abelian($alg) => $body,
            AnyAlgebra::StructureConstants($alg) => $body,
        }
    };
}

impl AlgebraSpec {
    /// Builds and validates the algebra. `cap` overrides the declared cap
    /// (ignored for abelian algebras, whose cap is 1).
    pub fn build(&self, cap: Option<usize>) -> Result<AnyAlgebra, String> {
        match self {
            AlgebraSpec::Free { letters, cap: declared } => {
                let alphabet = Alphabet::new(letters.clone()).map_err(|e| e.to_string())?;
                let ctx = crate::freelie::FreeLieContext::new(alphabet, cap.unwrap_or(*declared))
                    .map_err(|e| e.to_string())?;
                Ok(AnyAlgebra::Free(FreeNilpotent::from_context(ctx)))
            }
            AlgebraSpec::Abelian { dim } => Ok(AnyAlgebra::Abelian(Abelian::new(*dim))),
            AlgebraSpec::StructureConstants { path, cap: declared } => {
                StructureConstants::load(path, cap.unwrap_or(*declared))
                    .map(AnyAlgebra::StructureConstants)
                    .map_err(|e| format!("{path}: {e}"))
            }
        }
    }
}

/// Everything a CLI invocation produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
        }
    }
}

fn render(format: Format, text: String, json: impl Serialize) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json).expect("serializable report");
            s.push('\n');
            s
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome::ok(rendered)
            } else {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::invalid(message),
    }
}

fn parse_algebra(spec: &str, cap: Option<usize>) -> Result<AnyAlgebra, String> {
    spec.parse::<AlgebraSpec>()?.build(cap)
}

fn execute(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Basis { alphabet, max_weight } => cmd_basis(cli.format, alphabet, *max_weight),
        Command::Bch { table: Some(cap), .. } => Ok(cmd_bch_table(cli.format, cli.cap.unwrap_or(*cap))),
        Command::Bch {
            algebra: Some(alg),
            left: Some(left),
            right: Some(right),
            ..
        } => {
            let any = parse_algebra(alg, cli.cap)?;
            with_algebra!(&any, a => cmd_bch(cli.format, a, left, right))
        }
        Command::Bch { .. } => Err("bch needs <ALGEBRA> <LEFT> <RIGHT> or --table <CAP>".into()),
        Command::Bernoulli { numbers: Some(n), .. } => Ok(cmd_bernoulli_numbers(cli.format, *n)),
        Command::Bernoulli {
            algebra: Some(alg),
            x: Some(x),
            y: Some(y),
            ..
        } => {
            let any = parse_algebra(alg, cli.cap)?;
            with_algebra!(&any, a => cmd_bernoulli(cli.format, a, x, y))
        }
        Command::Bernoulli { .. } => Err("bernoulli needs <ALGEBRA> <X> <Y> or --numbers <N>".into()),
        Command::IsoCheck {
            algebra,
            dims,
            samples,
            corrupt,
        } => {
            check_counts(*dims, *samples)?;
            let any = parse_algebra(algebra, cli.cap)?;
            let config = IsoConfig {
                n_max: *dims,
                samples: *samples,
                seed: cli.seed,
                corruption: corrupt.map(Corruption::from),
            };
            Ok(with_algebra!(&any, a => cmd_iso_check(cli.format, a, &config)))
        }
        Command::SimplicialCheck {
            algebra,
            dims,
            samples,
            corrupt,
        } => {
            check_counts(*dims, *samples)?;
            if *corrupt == Some(CorruptArg::Psi) {
                return Err("simplicial-check has no Ψ to corrupt; use --corrupt face".into());
            }
            let any = parse_algebra(algebra, cli.cap)?;
            let swap = corrupt.is_some();
            Ok(with_algebra!(&any, a => cmd_simplicial_check(cli.format, a, *dims, *samples, cli.seed, swap)))
        }
    }
}

fn check_counts(dims: usize, samples: usize) -> Result<(), String> {
    if dims == 0 {
        return Err("--dims must be at least 1".into());
    }
    if samples == 0 {
        return Err("--samples must be at least 1".into());
    }
    Ok(())
}

fn cmd_basis(format: Format, alphabet: &str, max_weight: usize) -> Result<Outcome, String> {
    if max_weight == 0 {
        return Err("max_weight must be at least 1".into());
    }
    let alphabet = Alphabet::new(letters_of(alphabet)).map_err(|e| e.to_string())?;
    let words = lyndon_words(&alphabet, max_weight);
    let dims: Vec<usize> = (1..=max_weight)
        .map(|w| words.iter().filter(|l| l.weight() == w).count())
        .collect();
    let mut text = String::new();
    for w in &words {
        text.push_str(&format!(
            "{:>3}  {:<12} {}\n",
            w.weight(),
            w.spell(&alphabet),
            w.bracketing(&alphabet)
        ));
    }
    let dims_text: Vec<String> = dims.iter().map(ToString::to_string).collect();
    text.push_str(&format!("words: {}\n", words.len()));
    text.push_str(&format!("dimensions: {}\n", dims_text.join("/")));
    let json = json!({
        "alphabet": alphabet.letters(),
        "max_weight": max_weight,
        "words": words.iter().map(|w| json!({
            "word": w.spell(&alphabet),
            "bracketing": w.bracketing(&alphabet),
            "weight": w.weight(),
        })).collect::<Vec<_>>(),
        "dimensions": dims,
    });
    Ok(Outcome::ok(render(format, text, json)))
}

fn cmd_bch_table(format: Format, cap: usize) -> Outcome {
    let table = universal_bch(cap);
    let alphabet = table.element().context().alphabet().clone();
    let text = format!("{}\n", table.element());
    let json = json!({
        "cap": table.cap(),
        "table": table.element().to_string(),
        "coefficients": table.coefficients().map(|(w, c)| json!({
            "word": w.spell(&alphabet),
            "bracketing": w.bracketing(&alphabet),
            "coefficient": format_rational(c),
        })).collect::<Vec<_>>(),
    });
    Outcome::ok(render(format, text, json))
}

fn cmd_bch<A: LieAlgebra>(format: Format, alg: &A, left: &str, right: &str) -> Result<Outcome, String> {
    let a = expr::parse_in(left, alg).map_err(|e| format!("left operand: {e}"))?;
    let b = expr::parse_in(right, alg).map_err(|e| format!("right operand: {e}"))?;
    let product = alg.format(&bch_product(alg, &a, &b));
    let json = json!({
        "algebra": alg.describe(),
        "left": alg.format(&a),
        "right": alg.format(&b),
        "product": product,
    });
    Ok(Outcome::ok(render(format, format!("{product}\n"), json)))
}

fn cmd_bernoulli_numbers(format: Format, n: usize) -> Outcome {
    let numbers: Vec<String> = bernoulli_numbers(n).iter().map(format_rational).collect();
    let text: String = numbers
        .iter()
        .enumerate()
        .map(|(k, b)| format!("B_{k} = {b}\n"))
        .collect();
    Outcome::ok(render(format, text, json!({ "bernoulli": numbers })))
}

fn cmd_bernoulli<A: LieAlgebra>(format: Format, alg: &A, x: &str, y: &str) -> Result<Outcome, String> {
    let xv = expr::parse_in(x, alg).map_err(|e| format!("x: {e}"))?;
    let yv = expr::parse_in(y, alg).map_err(|e| format!("y: {e}"))?;
    let result = alg.format(&bernoulli_operator(alg, &xv, &yv));
    let json = json!({
        "algebra": alg.describe(),
        "x": alg.format(&xv),
        "y": alg.format(&yv),
        "result": result,
    });
    Ok(Outcome::ok(render(format, format!("{result}\n"), json)))
}

fn exit_code(passed: bool) -> i32 {
    if passed {
        EXIT_OK
    } else {
        EXIT_VIOLATIONS
    }
}

fn cmd_iso_check<A: LieAlgebra>(format: Format, alg: &A, config: &IsoConfig) -> Outcome {
    let report = verify_iso(alg, config);
    Outcome {
        code: exit_code(report.passed()),
        stdout: render(format, report.to_text(), &report),
        stderr: String::new(),
    }
}

#[derive(Serialize)]
struct SimplicialCheckReport {
    algebra: String,
    n_max: usize,
    samples: usize,
    seed: u64,
    bar: IdentityReport,
    realization: IdentityReport,
    cosimplicial: crate::realization::CosimplicialReport,
}

/// Bar construction with `d_0` and `d_1` swapped in dimension >= 2.
struct SwappedBar<'g, G>(&'g BarConstruction<G>);

impl<G: crate::simplicial::Group> crate::simplicial::SimplicialSet for SwappedBar<'_, G> {
    type Simplex = BarSimplex<G::Element>;

    fn dimension(&self, s: &Self::Simplex) -> usize {
        s.dimension()
    }

    fn face(&self, i: usize, s: &Self::Simplex) -> Result<Self::Simplex, crate::simplicial::IndexError> {
        let i = match i {
            0 | 1 if s.dimension() >= 2 => 1 - i,
            other => other,
        };
        self.0.face(i, s)
    }

    fn degeneracy(&self, i: usize, s: &Self::Simplex) -> Result<Self::Simplex, crate::simplicial::IndexError> {
        self.0.degeneracy(i, s)
    }

    fn describe(&self, s: &Self::Simplex) -> String {
        self.0.describe(s)
    }
}

fn cmd_simplicial_check<A: LieAlgebra>(
    format: Format,
    alg: &A,
    n_max: usize,
    samples: usize,
    seed: u64,
    swap_faces: bool,
) -> Outcome {
    let real = Realization::new(alg);
    let bar = BarConstruction::new(real.group().clone());
    let mut rng = seeded_rng(seed);
    let mut homs = Vec::new();
    let mut bars = Vec::new();
    for n in 0..=n_max {
        for _ in 0..samples {
            homs.push(HomSimplex::new((0..n).map(|_| alg.sample(&mut rng)).collect()));
            bars.push(BarSimplex::new((0..n).map(|_| alg.sample(&mut rng)).collect()));
        }
    }
    let bar_report = if swap_faces {
        check_simplicial_identities(&SwappedBar(&bar), &bars, n_max)
    } else {
        check_simplicial_identities(&bar, &bars, n_max)
    };
    let report = SimplicialCheckReport {
        algebra: alg.describe(),
        n_max,
        samples,
        seed,
        bar: bar_report,
        realization: check_simplicial_identities(&real, &homs, n_max),
        cosimplicial: check_cosimplicial_identities(n_max),
    };
    let passed = report.bar.passed() && report.realization.passed() && report.cosimplicial.passed();
    let mut text = format!(
        "simplicial-check {} dims<={} samples={} seed={}{}\n",
        report.algebra,
        n_max,
        samples,
        seed,
        if swap_faces { " corrupt=face" } else { "" }
    );
    text.push_str("[bar construction]\n");
    text.push_str(&report.bar.to_text());
    text.push_str("[realization]\n");
    text.push_str(&report.realization.to_text());
    text.push_str(&format!(
        "[cosimplicial generators]\nchecked {}  failed {}\n",
        report.cosimplicial.checked,
        report.cosimplicial.violations.len()
    ));
    for v in &report.cosimplicial.violations {
        text.push_str(&format!(
            "VIOLATION {} i={} j={} generator={} lhs={} rhs={}\n",
            v.family.name(),
            v.i,
            v.j,
            v.generator,
            v.lhs,
            v.rhs
        ));
    }
    text.push_str(&format!("result: {}\n", if passed { "PASS" } else { "FAIL" }));
    Outcome {
        code: exit_code(passed),
        stdout: render(format, text, &report),
        stderr: String::new(),
    }
}
