//! Command-line front end for `polymon`. Every command prints one JSON
//! document, or a human-readable rendering with `--pretty`.

pub mod expr;

use clap::{Parser, Subcommand};
use polymon::analysis::{run_suite, Suite, SuiteConfig, DEFAULT_SEED};
use polymon::extension::{s_multiply, un_member, FilterDesc, SElement, SNbhd};
use polymon::green::{
    chain_prefix, d_witness, is_omega_chain_prefix, related, ChainSpec, Relation,
};
use polymon::polycyclic::nat_leq;
use polymon::report::{CheckReport, SuiteReport};
use polymon::topology::{
    chain_intersection_check, coarseness_identity_report, left_translation_witness,
    multiplication_witness, right_translation_witness, u_member, verify_left_inclusion,
    verify_product_inclusion, verify_right_inclusion, BasicNbhd,
};
use polymon::{invert, multiply, Exec, PElement, Word, WordSet};
use serde_json::{json, Value};

pub use expr::{parse, parse_s, render, Expr};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Polymon(#[from] polymon::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "polymon",
    version,
    about = "Polycyclic monoid arithmetic, topology witnesses and law suites"
)]
pub struct Cli {
    /// Number of generators.
    #[arg(long, global = true, default_value_t = 2)]
    pub lambda: u32,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of a generator expression.
    Nf { expr: String },
    /// Product of two expressions.
    Mul { left: String, right: String },
    /// Inverse of an expression.
    Inv { expr: String },
    /// Whether two elements are related by R, L, H or D.
    Green {
        relation: Relation,
        left: String,
        right: String,
    },
    /// Natural partial order: left ≤ right.
    Order { left: String, right: String },
    /// Membership in the basic neighbourhood U_A(0).
    Member {
        #[arg(long = "A", default_value = "")]
        a: String,
        expr: String,
    },
    /// Continuity witnesses for U_A(0), checked over a ball.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// The preimage description of U_A(0), checked over a ball.
    CoarseCheck {
        #[arg(long = "A", default_value = "")]
        a: String,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Prefix of the idempotent chain given by a preperiod and a period.
    Chain {
        #[arg(long, default_value = "e")]
        pre: String,
        #[arg(long)]
        per: String,
        #[arg(short = 'n', default_value_t = 20)]
        n: usize,
        #[arg(long = "A")]
        a: Option<String>,
    },
    /// Product in the extension S of P_2 (filter literals F[a|b] allowed).
    ExtMul { left: String, right: String },
    /// Membership in the neighbourhood U_n of a filter point.
    ExtMember {
        /// The filter words `a,b`.
        #[arg(long)]
        center: String,
        #[arg(short = 'n')]
        n: usize,
        expr: String,
    },
    /// Filter points against the matrix units on indices below the bound.
    IsoCheck {
        #[arg(long, default_value_t = 50)]
        max_index: u64,
    },
    /// Run a verification suite.
    Check {
        suite: Suite,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, env = "POLYMON_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum WitnessKind {
    /// B with x·U_B(0) ⊆ U_A(0).
    Right {
        #[arg(long = "A", default_value = "")]
        a: String,
        #[arg(long)]
        max_len: Option<usize>,
        expr: String,
    },
    /// D with U_D(0)·x ⊆ U_A(0).
    Left {
        #[arg(long = "A", default_value = "")]
        a: String,
        #[arg(long)]
        max_len: Option<usize>,
        expr: String,
    },
    /// T with U_T(0)·U_T(0) ⊆ U_A(0).
    Mul {
        #[arg(long = "A", default_value = "")]
        a: String,
        #[arg(long)]
        max_len: Option<usize>,
    },
}

/// What a command produced: exit status, JSON document and its
/// human-readable form.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub code: i32,
    pub json: Value,
    pub text: String,
}

impl Output {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Output {
            code: 0,
            json,
            text: text.into(),
        }
    }

    fn check(json: Value, passed: bool, text: impl Into<String>) -> Self {
        Output {
            code: if passed { 0 } else { 1 },
            json,
            text: text.into(),
        }
    }

    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            self.text.clone()
        } else {
            self.json.to_string()
        }
    }
}

fn element(text: &str, lambda: u32) -> Result<PElement, CliError> {
    Ok(parse(text, lambda)?.element()?)
}

fn s_element(text: &str) -> Result<SElement, CliError> {
    Ok(parse_s(text)?.s_element()?)
}

fn nbhd(words: &str, lambda: u32) -> Result<BasicNbhd, CliError> {
    Ok(BasicNbhd::new(WordSet::parse(words, lambda)?))
}

fn describe(x: &PElement) -> String {
    match x {
        PElement::Zero => "0".to_string(),
        _ => format!("{x}    ({})", x.pretty()),
    }
}

fn describe_check(report: &CheckReport) -> String {
    match &report.counterexample {
        None => format!("ok ({} cases)", report.cases),
        Some(c) => format!(
            "FAILED after {} cases: {}: {}",
            report.cases,
            c.law,
            c.elements.join(", ")
        ),
    }
}

fn describe_suite(report: &SuiteReport) -> String {
    let mut out = format!(
        "{}: {} ({} cases",
        report.suite,
        if report.passed() { "passed" } else { "FAILED" },
        report.cases
    );
    if let Some(seed) = report.seed {
        out.push_str(&format!(", seed {seed}"));
    }
    out.push(')');
    for f in &report.failures {
        out.push_str(&format!("\n  {}: {}", f.law, f.elements.join(", ")));
    }
    out
}

fn element_output(x: &PElement) -> Output {
    Output::ok(json!(x), describe(x))
}

fn witness_output(witness: &BasicNbhd, report: CheckReport) -> Output {
    let text = format!("{}\n{}", witness.excluded(), describe_check(&report));
    let passed = report.ok;
    Output::check(json!({ "witness": witness, "check": report }), passed, text)
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let lambda = cli.lambda;
    let exec = Exec::default();
    Ok(match &cli.command {
        Command::Nf { expr } => element_output(&element(expr, lambda)?),
        Command::Mul { left, right } => element_output(&multiply(
            &element(left, lambda)?,
            &element(right, lambda)?,
        )?),
        Command::Inv { expr } => element_output(&invert(&element(expr, lambda)?)),
        Command::Green {
            relation,
            left,
            right,
        } => {
            let (x, y) = (element(left, lambda)?, element(right, lambda)?);
            let holds = related(*relation, &x, &y)?;
            let mut json = json!({ "relation": relation.to_string(), "holds": holds });
            if *relation == Relation::D && holds && !x.is_zero() {
                json["witness"] = json!(&d_witness(&x, &y)?);
            }
            Output::ok(json, holds.to_string())
        }
        Command::Order { left, right } => {
            let holds = nat_leq(&element(left, lambda)?, &element(right, lambda)?)?;
            Output::ok(json!({ "leq": holds }), holds.to_string())
        }
        Command::Member { a, expr } => {
            let nb = nbhd(a, lambda)?;
            let member = u_member(&nb, &element(expr, lambda)?)?;
            Output::ok(json!({ "member": member }), member.to_string())
        }
        Command::Witness { kind } => match kind {
            WitnessKind::Right { a, max_len, expr } => {
                let target = nbhd(a, lambda)?;
                let x = element(expr, lambda)?;
                let witness = right_translation_witness(&x, &target)?;
                let len = max_len.unwrap_or(witness.default_radius());
                let report = verify_right_inclusion(&x, &witness, &target, len, exec)?;
                witness_output(&witness, report)
            }
            WitnessKind::Left { a, max_len, expr } => {
                let target = nbhd(a, lambda)?;
                let x = element(expr, lambda)?;
                let witness = left_translation_witness(&x, &target)?;
                let len = max_len.unwrap_or(witness.default_radius());
                let report = verify_left_inclusion(&x, &witness, &target, len, exec)?;
                witness_output(&witness, report)
            }
            WitnessKind::Mul { a, max_len } => {
                let target = nbhd(a, lambda)?;
                let witness = multiplication_witness(&target);
                let len = max_len.unwrap_or(witness.default_radius());
                let report = verify_product_inclusion(&witness, &target, len, exec)?;
                witness_output(&witness, report)
            }
        },
        Command::CoarseCheck { a, max_len } => {
            let report = coarseness_identity_report(&nbhd(a, lambda)?, *max_len, exec)?;
            let text = describe_check(&report);
            let passed = report.ok;
            Output::check(json!(&report), passed, text)
        }
        Command::Chain { pre, per, n, a } => {
            let spec = ChainSpec::new(Word::parse(pre, lambda)?, Word::parse(per, lambda)?)?;
            let chain = chain_prefix(&spec, *n)?;
            let omega = is_omega_chain_prefix(&chain);
            let mut json = json!({ "chain": chain, "omega": omega });
            let mut text: Vec<String> = chain.iter().map(|e| e.to_string()).collect();
            text.push(format!("omega: {omega}"));
            if let Some(a) = a {
                let hits = chain_intersection_check(&nbhd(a, lambda)?, &spec, *n)?;
                json["hits"] = json!(hits.hits);
                json["misses"] = json!(hits.misses);
                text.push(format!(
                    "in U_A(0): {}, outside: {}",
                    hits.hits, hits.misses
                ));
            }
            Output::ok(json, text.join("\n"))
        }
        Command::ExtMul { left, right } => {
            let product = s_multiply(&s_element(left)?, &s_element(right)?)?;
            Output::ok(json!(&product), product.to_string())
        }
        Command::ExtMember { center, n, expr } => {
            let (a, b) = center
                .split_once(',')
                .ok_or_else(|| CliError::Usage("--center expects two words a,b".into()))?;
            let center = FilterDesc::new(Word::parse(a, 2)?, Word::parse(b, 2)?)?;
            let x = s_element(expr)?;
            let member = un_member(&SNbhd::new(center, *n)?, &x);
            Output::ok(json!({ "member": member }), member.to_string())
        }
        Command::IsoCheck { max_index } => {
            let report = polymon::analysis::isomorphism_report(*max_index, exec);
            let text = describe_check(&report);
            let passed = report.ok;
            Output::check(json!(&report), passed, text)
        }
        Command::Check {
            suite,
            max_len,
            samples,
            seed,
        } => {
            let config = SuiteConfig {
                max_len: *max_len,
                samples: *samples,
                seed: *seed,
                exec,
            };
            let report = run_suite(*suite, &config);
            let text = describe_suite(&report);
            let passed = report.passed();
            Output::check(json!(&report), passed, text)
        }
    })
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit status and what would be printed on standard output.
pub fn run_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return (e.exit_code(), e.to_string()),
    };
    match run(&cli) {
        Ok(out) => (out.code, out.render(cli.pretty)),
        Err(e) => (2, json!({ "error": e.to_string() }).to_string()),
    }
}
