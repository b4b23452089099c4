//! Command-line front end.
//!
//! Exit codes: 0 success, 2 invalid input, 3 internal invariant violation,
//! 4 survey budget exceeded, 5 a theorem guarantee failed to hold.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cyclotomic::{
    dispatch_factored, phi_from_index, psi_from_index, psi_moree_from_phi, CoreRule, FactoredIndex,
    GapAnswer, GapValue, ReductionStep, Sieve, DEFAULT_LIMIT,
};
use crate::error::{Error, Result};
use crate::gaps::{max_gap, render_diagram, DiagramFormat};
use crate::poly::SparsePoly;
use crate::survey::{self, ExportFormat, SurveyConfig, DEFAULT_BUDGET_P1};
use crate::theorems::{self, gap_product_bound, lam_leung, VerificationRecord};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INVARIANT: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;
pub const EXIT_THEOREM: u8 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Phi,
    Psi,
}

#[derive(Debug, Parser)]
#[command(name = "cyclogap", version, about = "Cyclotomic and inverse cyclotomic polynomials and their maximum gaps")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Largest accepted index n.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    pub limit_n: u64,
    /// Worker threads for `survey` (default: available cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest p1 that `survey` accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET_P1)]
    pub budget_p1: u64,
    /// Write output (survey: the records) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print Φ_n. N is decimal or a product such as 3*5*7.
    Phi {
        n: String,
        /// Cross-check against an independent constructor.
        #[arg(long)]
        check: bool,
    },
    /// Print Ψ_n.
    Psi {
        n: String,
        #[arg(long)]
        check: bool,
    },
    /// Brute-force maximum gap next to the closed-form prediction.
    Gap {
        #[arg(value_enum)]
        kind: Kind,
        n: String,
        /// Append the exponent bar diagram.
        #[arg(long)]
        diagram: bool,
    },
    /// Lam–Leung decomposition of Φ_{p1 p2}.
    Decompose { p1: u64, p2: u64 },
    /// Check the gap formulas and bounds for Ψ_{p1 p2 p3}.
    Verify { p1: u64, p2: u64, p3: u64 },
    /// Classify the exceptional pairs (p2, p3) for p1.
    Survey { p1: u64 },
    /// Render the exponent bar diagram of Φ_n, Ψ_n or a given polynomial.
    Diagram {
        #[arg(value_enum)]
        kind: Option<Kind>,
        n: Option<String>,
        /// Polynomial in sparse text form, e.g. "1 - x + x^3".
        #[arg(long, conflicts_with_all = ["kind", "n", "poly_json"])]
        poly: Option<String>,
        /// Polynomial as JSON {"terms": [[e, c], ...]}.
        #[arg(long, conflicts_with_all = ["kind", "n"])]
        poly_json: Option<String>,
        #[arg(long)]
        svg: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliConfig {
    pub limit_n: u64,
    pub budget_p1: u64,
    pub threads: usize,
    pub output_format: OutputFormat,
}

impl CliConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let threads = cli
            .threads
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        if cli.limit_n < 1 {
            return Err(Error::Parse("--limit-n must be at least 1".into()));
        }
        if threads < 1 {
            return Err(Error::Parse("--threads must be at least 1".into()));
        }
        Ok(CliConfig {
            limit_n: cli.limit_n,
            budget_p1: cli.budget_p1,
            threads,
            output_format: cli.format,
        })
    }
}

/// Result of one command: what to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvariantViolation(_) | Error::OverflowDetected | Error::NonExactDivision | Error::DivisionByZero => {
            EXIT_INVARIANT
        }
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Io(_) => 1,
        _ => EXIT_INPUT,
    }
}

/// Runs a parsed command line. Errors become an [`Outcome`] with the
/// matching exit code.
pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let config = CliConfig::from_cli(cli)?;
    let sieve = if config.limit_n == DEFAULT_LIMIT {
        Sieve::shared().clone()
    } else {
        Sieve::new(config.limit_n)
    };
    let ctx = Ctx { config, sieve };

    let outcome = match &cli.command {
        Command::Phi { n, check } => ctx.cmd_poly(Kind::Phi, n, *check)?,
        Command::Psi { n, check } => ctx.cmd_poly(Kind::Psi, n, *check)?,
        Command::Gap { kind, n, diagram } => ctx.cmd_gap(*kind, n, *diagram)?,
        Command::Decompose { p1, p2 } => ctx.cmd_decompose(*p1, *p2)?,
        Command::Verify { p1, p2, p3 } => ctx.cmd_verify(*p1, *p2, *p3)?,
        Command::Survey { p1 } => return ctx.cmd_survey(*p1, cli.out.as_ref()),
        Command::Diagram {
            kind,
            n,
            poly,
            poly_json,
            svg,
        } => ctx.cmd_diagram(*kind, n.as_deref(), poly.as_deref(), poly_json.as_deref(), *svg)?,
    };

    match &cli.out {
        Some(path) => {
            std::fs::write(path, &outcome.stdout)?;
            Ok(Outcome {
                stdout: String::new(),
                ..outcome
            })
        }
        None => Ok(outcome),
    }
}

struct Ctx {
    config: CliConfig,
    sieve: Sieve,
}

fn symbol(kind: Kind) -> &'static str {
    match kind {
        Kind::Phi => "Φ",
        Kind::Psi => "Ψ",
    }
}

impl Ctx {
    fn format(&self) -> OutputFormat {
        self.config.output_format
    }

    fn index(&self, text: &str) -> Result<FactoredIndex> {
        self.sieve.parse_index(text)
    }

    fn build(&self, kind: Kind, idx: &FactoredIndex) -> Result<SparsePoly> {
        match kind {
            Kind::Phi => phi_from_index(idx),
            Kind::Psi => psi_from_index(idx),
        }
    }

    fn render_poly(&self, f: &SparsePoly) -> String {
        match self.format() {
            OutputFormat::Text => format!("{f}\n"),
            OutputFormat::Json => format!("{}\n", f.to_json()),
            OutputFormat::Csv => {
                let mut s = String::from("exponent,coefficient\n");
                for &(e, c) in f.terms() {
                    let _ = writeln!(s, "{e},{c}");
                }
                s
            }
        }
    }

    fn cmd_poly(&self, kind: Kind, n: &str, check: bool) -> Result<Outcome> {
        let idx = self.index(n)?;
        let f = self.build(kind, &idx)?;
        let mut out = Outcome::ok(self.render_poly(&f));
        if check {
            self.cross_check(kind, &idx, &f)?;
            let note = "constructors agree\n";
            match self.format() {
                OutputFormat::Text => out.stdout.push_str(note),
                _ => out.stderr.push_str(note),
            }
        }
        Ok(out)
    }

    /// Compares `f` against constructors that take a different route.
    fn cross_check(&self, kind: Kind, idx: &FactoredIndex, f: &SparsePoly) -> Result<()> {
        let n = idx.n;
        let binomial = SparsePoly::binomial(n);
        let disagree = |what: &str| {
            Err(Error::InvariantViolation(format!(
                "{}_{n}: constructors disagree ({what})",
                symbol(kind)
            )))
        };
        let odd_primes = if idx.is_squarefree && idx.is_odd {
            idx.distinct_primes()
        } else {
            Vec::new()
        };
        match kind {
            Kind::Phi => {
                let psi = psi_from_index(idx)?;
                if binomial.exact_div(&psi)? != *f {
                    return disagree("(x^n - 1) / Ψ_n");
                }
                if let [p1, p2] = odd_primes[..] {
                    if lam_leung(p1, p2)?.reconstruct()? != *f {
                        return disagree("Lam–Leung AB + CD");
                    }
                }
            }
            Kind::Psi => {
                let phi = phi_from_index(idx)?;
                if binomial.exact_div(&phi)? != *f {
                    return disagree("long division by Φ_n");
                }
                if let [p1, p2, p3] = odd_primes[..] {
                    let phi12 = phi_from_index(&self.sieve.factor(p1 * p2)?)?;
                    if psi_moree_from_phi(&phi12, p1, p2, p3)? != *f {
                        return disagree("three-factor product");
                    }
                }
            }
        }
        Ok(())
    }

    fn cmd_gap(&self, kind: Kind, n: &str, diagram: bool) -> Result<Outcome> {
        let idx = self.index(n)?;
        let f = self.build(kind, &idx)?;
        let g = max_gap(&f)?;
        let answer = dispatch_factored(&idx);
        let (line, agree) = describe_gap(kind, g, &answer);
        let prediction = match kind {
            Kind::Phi => answer.phi,
            Kind::Psi => answer.psi,
        };
        let code = if agree == Some(false) { EXIT_THEOREM } else { EXIT_OK };
        let picture = if diagram {
            Some(render_diagram(&f, DiagramFormat::Ascii)?)
        } else {
            None
        };

        let stdout = match self.format() {
            OutputFormat::Text => {
                let mut s = format!("{line}\n");
                if let Some(p) = &picture {
                    let _ = writeln!(s, "{p}");
                }
                s
            }
            OutputFormat::Json => {
                #[derive(Serialize)]
                struct GapReport<'a> {
                    kind: &'a str,
                    n: u64,
                    g: u64,
                    prediction: GapValue,
                    agree: Option<bool>,
                    answer: &'a GapAnswer,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    diagram: Option<&'a str>,
                }
                let report = GapReport {
                    kind: match kind {
                        Kind::Phi => "phi",
                        Kind::Psi => "psi",
                    },
                    n: idx.n,
                    g,
                    prediction,
                    agree,
                    answer: &answer,
                    diagram: picture.as_deref(),
                };
                format!("{}\n", serde_json::to_string(&report)?)
            }
            OutputFormat::Csv => {
                let (pred, lo, hi) = match prediction {
                    GapValue::Exact { value } => ("exact", value.to_string(), (value + 1).to_string()),
                    GapValue::Bounded {
                        lower,
                        upper_exclusive,
                    } => ("bounded", lower.to_string(), upper_exclusive.to_string()),
                    GapValue::BruteForceOnly => ("none", String::new(), String::new()),
                };
                let agree = agree.map_or(String::new(), |a| a.to_string());
                format!(
                    "kind,n,g,prediction,lower,upper_exclusive,agree\n{},{},{g},{pred},{lo},{hi},{agree}\n",
                    symbol(kind),
                    idx.n
                )
            }
        };
        Ok(Outcome {
            stdout,
            stderr: String::new(),
            code,
        })
    }

    fn cmd_decompose(&self, p1: u64, p2: u64) -> Result<Outcome> {
        self.require_primes(&[p1, p2])?;
        let form = lam_leung(p1, p2)?;
        let ab_bound = gap_product_bound(&form.a, &form.b)?;
        let cd_bound = gap_product_bound(&form.c, &form.d)?;
        let g_ab = max_gap(&form.ab)?;
        let g_cd = max_gap(&form.cd)?;

        let stdout = match self.format() {
            OutputFormat::Json => {
                #[derive(Serialize)]
                struct Report<'a> {
                    form: &'a theorems::LamLeungForm,
                    reconstruction_ok: bool,
                    disjoint: bool,
                    ab_gap: u64,
                    ab_bound: u64,
                    cd_gap: u64,
                    cd_bound: u64,
                }
                let r = Report {
                    form: &form,
                    reconstruction_ok: true,
                    disjoint: form.is_disjoint(),
                    ab_gap: g_ab,
                    ab_bound,
                    cd_gap: g_cd,
                    cd_bound,
                };
                format!("{}\n", serde_json::to_string(&r)?)
            }
            _ => {
                let mut s = String::new();
                let _ = writeln!(s, "rho={} sigma={}", form.rho, form.sigma);
                let _ = writeln!(s, "A = {}", form.a);
                let _ = writeln!(s, "B = {}", form.b);
                let _ = writeln!(s, "C = {}", form.c);
                let _ = writeln!(s, "D = {}", form.d);
                let _ = writeln!(s, "AB = {}", form.ab);
                let _ = writeln!(s, "CD = {}", form.cd);
                let _ = writeln!(
                    s,
                    "reconstruction OK: AB + CD = Φ_{}, exponent sets disjoint",
                    p1 * p2
                );
                let _ = writeln!(s, "g(AB)={g_ab} <= {ab_bound} (product bound)");
                let _ = writeln!(s, "g(CD)={g_cd} <= {cd_bound} (product bound)");
                s
            }
        };
        Ok(Outcome::ok(stdout))
    }

    fn require_primes(&self, primes: &[u64]) -> Result<()> {
        self.sieve.require_odd_prime_chain(primes)?;
        let n = primes.iter().fold(1u64, |a, &p| a.saturating_mul(p));
        if n > self.config.limit_n {
            return Err(Error::LimitExceeded {
                n,
                limit: self.config.limit_n,
            });
        }
        Ok(())
    }

    fn cmd_verify(&self, p1: u64, p2: u64, p3: u64) -> Result<Outcome> {
        self.require_primes(&[p1, p2, p3])?;
        let phi12 = phi_from_index(&self.sieve.factor(p1 * p2)?)?;
        let record = theorems::verify_with_phi(&phi12, p1, p2, p3)?;
        let code = if record.guarantees_hold() {
            EXIT_OK
        } else {
            EXIT_THEOREM
        };
        let stdout = match self.format() {
            OutputFormat::Json => format!("{}\n", serde_json::to_string(&record)?),
            OutputFormat::Csv => verification_csv(&record)?,
            OutputFormat::Text => {
                let v = serde_json::to_value(record)?;
                let mut s = String::new();
                for key in VERIFY_KEYS {
                    let _ = writeln!(s, "{key}={}", v[key]);
                }
                s
            }
        };
        Ok(Outcome {
            stdout,
            stderr: String::new(),
            code,
        })
    }

    fn cmd_survey(&self, p1: u64, out: Option<&PathBuf>) -> Result<Outcome> {
        self.sieve.require_odd_prime(p1)?;
        let config = SurveyConfig {
            budget_p1: self.config.budget_p1,
            threads: self.config.threads,
        };
        let row = survey::classify(p1, &config)?;
        if let Some(path) = out {
            let format = match self.format() {
                OutputFormat::Json => ExportFormat::Json,
                _ => ExportFormat::Csv,
            };
            survey::export(&row.records, format, path)?;
        }
        let stdout = match self.format() {
            OutputFormat::Json => format!(
                "{}\n",
                serde_json::json!({
                    "p1": row.p1, "total": row.total, "v1": row.v1, "v2": row.v2, "v3": row.v3
                })
            ),
            _ => format!("{} {} {} {}\n", row.total, row.v1, row.v2, row.v3),
        };
        let code = if row.records.iter().all(|r| r.bounds_hold()) {
            EXIT_OK
        } else {
            EXIT_THEOREM
        };
        Ok(Outcome {
            stdout,
            stderr: String::new(),
            code,
        })
    }

    fn cmd_diagram(
        &self,
        kind: Option<Kind>,
        n: Option<&str>,
        poly: Option<&str>,
        poly_json: Option<&str>,
        svg: bool,
    ) -> Result<Outcome> {
        let f = match (kind, n, poly, poly_json) {
            (_, _, Some(text), _) => text.parse::<SparsePoly>()?,
            (_, _, _, Some(json)) => SparsePoly::from_json(json)?,
            (Some(kind), Some(n), _, _) => self.build(kind, &self.index(n)?)?,
            _ => {
                return Err(Error::Parse(
                    "diagram needs KIND and N, --poly or --poly-json".into(),
                ))
            }
        };
        let format = if svg {
            DiagramFormat::Svg
        } else {
            DiagramFormat::Ascii
        };
        let mut s = render_diagram(&f, format)?;
        if !s.ends_with('\n') {
            s.push('\n');
        }
        Ok(Outcome::ok(s))
    }
}

const VERIFY_KEYS: [&str; 16] = [
    "p1",
    "p2",
    "p3",
    "n",
    "g",
    "lambda",
    "lower",
    "upper_exclusive",
    "C1",
    "C2",
    "D1",
    "D2",
    "eq2",
    "exact_match",
    "trivial_match",
    "bounds_hold",
];

fn verification_csv(record: &VerificationRecord) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.serialize(record)?;
    w.flush()?;
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// One-line explanation of a brute-force gap against the dispatch answer.
/// The second value is `Some(false)` when a proven prediction failed.
pub fn describe_gap(kind: Kind, g: u64, answer: &GapAnswer) -> (String, Option<bool>) {
    let sym = symbol(kind);
    let core_text = match (&answer.rule, kind) {
        (CoreRule::Unit, Kind::Phi) => "closed form g(Φ_1)=1".to_string(),
        (CoreRule::Unit, Kind::Psi) => "closed form g(Ψ_1)=0".to_string(),
        (CoreRule::OnePrime { .. }, _) => "closed form 1".to_string(),
        (CoreRule::TwoPrimes { p1, .. }, Kind::Phi) => format!("closed form p1-1={}", p1 - 1),
        (CoreRule::TwoPrimes { p1, p2 }, Kind::Psi) => {
            format!("closed form p2-(p1-1)={}", p2 - (p1 - 1))
        }
        (CoreRule::ThreePrimes { lambda, eq2, .. }, Kind::Psi) => {
            format!("lambda={lambda}, eq2={eq2}")
        }
        (CoreRule::ThreePrimes { .. }, Kind::Phi) | (CoreRule::NoClosedForm { .. }, _) => {
            "brute force only; no closed form in scope".to_string()
        }
    };

    let prediction = match kind {
        Kind::Phi => answer.phi,
        Kind::Psi => answer.psi,
    };
    let agree = prediction.admits(g);
    let status = match prediction {
        GapValue::Exact { value } if value == g => "agree".to_string(),
        GapValue::Exact { value } => format!("DISAGREE, predicted {value}"),
        GapValue::Bounded {
            lower,
            upper_exclusive,
        } => {
            let lambda_hit = match answer.rule {
                CoreRule::ThreePrimes { lambda, .. } if answer.chain.steps.is_empty() => {
                    g as i64 == lambda
                }
                _ => false,
            };
            match (agree, lambda_hit) {
                (Some(true), true) => "agree".to_string(),
                (Some(true), false) => format!("within bounds [{lower}, {upper_exclusive})"),
                _ => format!("OUTSIDE bounds [{lower}, {upper_exclusive})"),
            }
        }
        GapValue::BruteForceOnly => String::new(),
    };

    let via: Vec<String> = answer
        .chain
        .steps
        .iter()
        .map(|step| match (*step, kind) {
            (ReductionStep::Radical { to, multiplier, .. }, _) => {
                format!("radical rule {multiplier}*g({sym}_{to})")
            }
            (ReductionStep::Even { to, .. }, Kind::Phi) => format!("even rule g(Φ_{to})"),
            (ReductionStep::Even { to, .. }, Kind::Psi) => {
                format!("even rule max{{g(Ψ_{to}), deg Φ_{to}}}")
            }
        })
        .collect();

    let line = if via.is_empty() {
        if status.is_empty() {
            format!("g={g} ({core_text})")
        } else {
            format!("g={g} ({core_text}, {status})")
        }
    } else {
        let predicted = match prediction {
            GapValue::Exact { value } => format!("predicted {value}; "),
            _ => String::new(),
        };
        let tail = if status.is_empty() {
            String::new()
        } else {
            format!("; {predicted}{status}")
        };
        format!(
            "g={g} via {} (core {}: {core_text}{tail})",
            via.join(", then "),
            answer.chain.core
        )
    };
    (line, agree)
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let outcome = run(&cli);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut full = vec!["cyclogap"];
        full.extend_from_slice(args);
        run(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn phi_and_psi_text() {
        let o = run_args(&["phi", "15"]);
        assert_eq!(o.stdout, "1 - x + x^3 - x^4 + x^5 - x^7 + x^8\n");
        assert_eq!(run_args(&["psi", "1"]).stdout, "1\n");
        let o = run_args(&["psi", "105", "--check"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.ends_with("constructors agree\n"));
        let o = run_args(&["phi", "3*5", "--check"]);
        assert_eq!(o.code, 0);
    }

    #[test]
    fn gap_lines() {
        assert_eq!(
            run_args(&["gap", "phi", "15"]).stdout,
            "g=2 (closed form p1-1=2, agree)\n"
        );
        assert_eq!(
            run_args(&["gap", "psi", "105"]).stdout,
            "g=13 (lambda=13, eq2=false, agree)\n"
        );
        let o = run_args(&["gap", "psi", "30"]);
        assert!(
            o.stdout.starts_with("g=8 via even rule max{g(Ψ_15), deg Φ_15}"),
            "{}",
            o.stdout
        );
        assert_eq!(o.code, 0);
        let o = run_args(&["gap", "phi", "1155"]);
        assert!(o.stdout.contains("no closed form in scope"));
    }

    #[test]
    fn decompose_and_errors() {
        let o = run_args(&["decompose", "3", "5"]);
        assert!(o.stdout.starts_with("rho=1 sigma=1\n"));
        assert!(o.stdout.contains("reconstruction OK"));
        let o = run_args(&["decompose", "4", "5"]);
        assert_eq!(o.code, EXIT_INPUT);
        assert!(o.stderr.contains("4 is not an odd prime"));
    }

    #[test]
    fn verify_and_survey() {
        let o = run_args(&["verify", "3", "5", "7"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("exact_match=true"));
        assert_eq!(run_args(&["verify", "3", "5", "4"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["survey", "3"]).stdout, "1 1 0 0\n");
        assert_eq!(run_args(&["survey", "29"]).code, EXIT_BUDGET);
    }

    #[test]
    fn limit_flag() {
        let o = run_args(&["--limit-n", "100", "phi", "101"]);
        assert_eq!(o.code, EXIT_INPUT);
    }
}
