//! The `mrb` command-line tool.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 usage or
//! configuration error, 3 parse error.

pub mod config;
pub mod parse;
pub mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use mrb_core::checks::{self, SuiteBounds, SuiteReport};
use mrb_core::gsb::{Bounds, Verifier};
use mrb_core::hopf::{antipode, coproduct_mrb, coproduct_rt, MrbCarrier, Route, RtCarrier};
use mrb_core::{theta, theta_inv, Execution, Forest, LinComb, Mrba, Signature, Word};

use config::ConfigFile;
use parse::{parse, parse_forest, ParseError};
use render::{render, Format, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "mrb",
    version,
    about = "Free matching Rota-Baxter algebras: normal forms, products, coproducts, checks"
)]
pub struct Cli {
    /// Signature file; defaults to letters x y z and operators a (weight 1), b (weight -1).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CarrierKind {
    /// Decorated planar forests with the Connes-Kreimer style coproduct.
    Rt,
    /// Matching Rota-Baxter words with the transported coproduct.
    Mrb,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    Word,
    Forest,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Gsb,
    Hopf,
    Mrba,
    Order,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Diamond product of two expressions, each reduced to normal form first.
    Eval { left: String, right: String },
    /// Normal form modulo the matching Rota-Baxter relations.
    Nf { expr: String },
    /// Coproduct of an expression.
    Coproduct {
        #[arg(long, value_enum, default_value_t = CarrierKind::Mrb)]
        carrier: CarrierKind,
        expr: String,
    },
    /// Antipode of an expression.
    Antipode {
        #[arg(long, value_enum, default_value_t = CarrierKind::Mrb)]
        carrier: CarrierKind,
        expr: String,
    },
    /// Word to forest or forest to word.
    Convert {
        #[arg(long, value_enum, default_value_t = InputKind::Word)]
        from: InputKind,
        input: String,
    },
    /// Parse an expression and print it in the chosen format.
    Render { expr: String },
    /// Run property suites over bounded corpora.
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        /// Use the first N letters of the signature.
        #[arg(long, default_value_t = 1)]
        letters: usize,
        /// Use the first N operators of the signature.
        #[arg(long, default_value_t = 2)]
        operators: usize,
        #[arg(long, default_value_t = 2)]
        context_depth: usize,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
        #[arg(long, hide = true)]
        mutate_relations: bool,
    },
}

enum Failure {
    Usage(String),
    Parse { input: String, error: ParseError },
}

impl From<config::ConfigError> for Failure {
    fn from(e: config::ConfigError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn words(input: &str, sig: &Signature) -> Result<LinComb<Word>, Failure> {
    parse(input, sig).map_err(|error| Failure::Parse {
        input: input.to_string(),
        error,
    })
}

fn signature(cli: &Cli) -> Result<Signature, Failure> {
    match &cli.config {
        Some(path) => Ok(ConfigFile::load(path)?.signature()?),
        None => Ok(config::default_signature()),
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Parse { input, error }) => {
            let _ = writeln!(
                err,
                "error: {error}\n  {input}\n  {}^",
                " ".repeat(error.column.saturating_sub(1))
            );
            EXIT_PARSE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let sig = signature(cli)?;
    let mrba = Mrba::new(sig.clone());
    let nf = |v: &LinComb<Word>| mrba.rewriting().normal_form(v);
    let value = match &cli.command {
        Command::Eval { left, right } => {
            let (l, r) = (nf(&words(left, &sig)?), nf(&words(right, &sig)?));
            Value::Words(mrba.product(&l, &r))
        }
        Command::Nf { expr } => Value::Words(nf(&words(expr, &sig)?)),
        Command::Coproduct { carrier, expr } => {
            let v = words(expr, &sig)?;
            match carrier {
                CarrierKind::Rt => Value::ForestPairs(
                    v.map_keys(theta)
                        .map_basis(|f| coproduct_rt(f, Route::Subforest)),
                ),
                CarrierKind::Mrb => Value::WordPairs(nf(&v).map_basis(|w| coproduct_mrb(&mrba, w))),
            }
        }
        Command::Antipode { carrier, expr } => {
            let v = words(expr, &sig)?;
            match carrier {
                CarrierKind::Rt => {
                    let c = RtCarrier::new(sig.operators(), Route::Subforest);
                    Value::Forests(antipode(&c, &v.map_keys(theta)))
                }
                CarrierKind::Mrb => Value::Words(antipode(&MrbCarrier::new(mrba.clone()), &nf(&v))),
            }
        }
        Command::Convert { from, input } => match from {
            InputKind::Word => Value::Forests(words(input, &sig)?.map_keys(theta)),
            InputKind::Forest => {
                let f: Forest = parse_forest(input, &sig).map_err(|error| Failure::Parse {
                    input: input.clone(),
                    error,
                })?;
                Value::Words(LinComb::basis(theta_inv(&f)))
            }
        },
        Command::Render { expr } => Value::Words(words(expr, &sig)?),
        Command::Check {
            suite,
            max_degree,
            letters,
            operators,
            context_depth,
            sequential,
            mutate_relations,
        } => {
            let sig = sig
                .truncated(*letters, *operators)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let reports = run_suites(
                &sig,
                *suite,
                *max_degree,
                *context_depth,
                *mutate_relations,
                exec,
            );
            return Ok(print_reports(&reports, out));
        }
    };
    let _ = writeln!(out, "{}", render(&sig, &value, cli.format));
    Ok(EXIT_OK)
}

fn run_suites(
    sig: &Signature,
    suite: Suite,
    max_degree: usize,
    context_depth: usize,
    mutate: bool,
    exec: Execution,
) -> Vec<SuiteReport> {
    let b = SuiteBounds {
        max_degree,
        context_depth,
    };
    let wanted = |s: Suite| suite == s || suite == Suite::All;
    let mut reports = Vec::new();
    if wanted(Suite::Order) {
        reports.push(checks::order_suite(sig, &b, exec));
    }
    if wanted(Suite::Mrba) {
        reports.push(checks::mrba_suite(sig, &b, exec));
    }
    if wanted(Suite::Hopf) {
        reports.push(checks::hopf_suite(sig, max_degree, max_degree + 1, exec));
    }
    if wanted(Suite::Gsb) {
        let verifier = if mutate {
            Verifier::mutated(sig.clone())
        } else {
            Verifier::new(sig.clone())
        };
        reports.push(checks::gsb_suite(
            &verifier,
            &Bounds::from_max_degree(max_degree, context_depth),
            exec,
        ));
    }
    reports
}

fn print_reports(reports: &[SuiteReport], out: &mut dyn Write) -> i32 {
    let mut code = EXIT_OK;
    for report in reports {
        for c in &report.checks {
            match &c.witness {
                None => {
                    let _ = writeln!(
                        out,
                        "PASS [{}] {} ({} cases)",
                        report.suite, c.name, c.checked
                    );
                }
                Some(w) => {
                    let _ = writeln!(
                        out,
                        "FAIL [{}] {} ({} cases): {w}",
                        report.suite, c.name, c.checked
                    );
                    code = EXIT_PROPERTY;
                }
            }
        }
    }
    code
}
