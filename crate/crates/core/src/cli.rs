//! The `vvmf` command line.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::acceptance::{self, Faults, Options};
use crate::error::{Error, Result};
use crate::mlde::{check_incongruent, operator_from_roots};
use crate::modforms::{delta, dim_mk, eisenstein, eta_power};
use crate::multsys::MultiplierSystem;
use crate::qseries::QSeries;
use crate::rational::{fmt_rational, parse_rational, Rational};
use crate::vvmf::{
    classify, construct_basis, hilbert_poincare, wronskian_eta_test, ClassificationReport,
    RepClass, VectorJson,
};

pub const DEFAULT_ORDER: usize = 25;
pub const DEFAULT_PROBE_DEPTH: usize = 15;
pub const ORDER_ENV: &str = "VVMF_DEFAULT_ORDER";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "vvmf",
    version,
    about = "Exact q-expansions, MLDEs and vector-valued modular forms"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Truncation order [default: 25, or $VVMF_DEFAULT_ORDER].
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Number of coefficients inspected by rank checks.
    #[arg(long, default_value_t = DEFAULT_PROBE_DEPTH, global = true)]
    probe_depth: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalized Eisenstein series E_K.
    Eis {
        #[arg(value_parser = eisenstein_weight)]
        k: u32,
    },
    /// The discriminant Δ.
    Delta,
    /// A rational power of the Dedekind eta function.
    Eta {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        power: Rational,
    },
    /// Dimension of M_K.
    Dim {
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// Multiplier system υ_k χⁿ.
    Mult {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        weight: Rational,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
    },
    /// Modular linear differential equations.
    #[command(subcommand)]
    Mlde(MldeCommand),
    /// Vector-valued modular forms.
    #[command(subcommand)]
    Vvmf(VvmfCommand),
    /// Run the acceptance checks.
    Selftest {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(acceptance::tags()))]
        only: Option<String>,
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Fault {
    Bernoulli,
}

#[derive(Subcommand, Debug)]
enum MldeCommand {
    /// Eisenstein operator with the given indicial roots.
    FromRoots {
        #[arg(required = true, num_args = 1.., value_parser = rational_arg, allow_hyphen_values = true)]
        roots: Vec<Rational>,
    },
    /// Frobenius solutions of the operator with the given roots.
    Solve {
        #[arg(long, required = true, value_delimiter = ',', value_parser = rational_arg, allow_hyphen_values = true)]
        roots: Vec<Rational>,
    },
}

#[derive(Subcommand, Debug)]
enum VvmfCommand {
    /// Classify a representation by its T-exponents.
    Classify(RepArgs),
    /// Free-module basis with q-expansions.
    Basis(RepArgs),
    /// Wronskian of a vector read as JSON.
    Wronskian {
        /// Input file; stdin when absent.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Hilbert–Poincaré series.
    Hp {
        #[command(flatten)]
        rep: RepArgs,
        /// Number of graded pieces to expand.
        #[arg(long, default_value_t = 30)]
        terms: usize,
    },
}

#[derive(Args, Debug)]
struct RepArgs {
    #[arg(short = 'd', long = "dimension")]
    dimension: usize,
    #[arg(short = 'r', long = "exponents", required = true, value_delimiter = ',', value_parser = rational_arg)]
    exponents: Vec<Rational>,
    #[arg(short = 'm', long = "cusp", default_value = "0", value_parser = rational_arg)]
    cusp: Rational,
    #[arg(long, value_parser = rep_class)]
    class: Option<RepClass>,
}

impl RepArgs {
    fn classify(&self) -> Result<ClassificationReport> {
        classify(self.dimension, &self.exponents, &self.cusp, self.class)
    }
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn rep_class(s: &str) -> std::result::Result<RepClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn eisenstein_weight(s: &str) -> std::result::Result<u32, String> {
    let k: u32 = s.parse().map_err(|_| format!("'{s}' is not a weight"))?;
    if k >= 4 && k % 2 == 0 {
        Ok(k)
    } else {
        Err(format!("E_k needs an even weight k >= 4, got {k}"))
    }
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct Ctx<'a> {
    format: Format,
    order: usize,
    probe_depth: usize,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, json: &impl Serialize, text: impl FnOnce() -> String) {
        let s = match self.format {
            Format::Json => serde_json::to_string_pretty(json).expect("serializable"),
            Format::Text => text(),
        };
        let _ = writeln!(self.out, "{s}");
    }

    fn series(&mut self, s: &QSeries) {
        self.emit(&s.to_json(), || s.to_text());
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "{}: {e}", e.name());
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\n{}", Cli::command().render_usage());
            2
        }
    }
}

fn resolve_order(flag: Option<usize>) -> std::result::Result<usize, Failure> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{ORDER_ENV}='{v}' is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_ORDER),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let mut ctx = Ctx {
        format: cli.format,
        order: resolve_order(cli.order)?,
        probe_depth: cli.probe_depth,
        out,
    };
    match cli.command {
        Command::Eis { k } => ctx.series(&eisenstein(k, ctx.order).series),
        Command::Delta => ctx.series(&delta(ctx.order).series),
        Command::Eta { power } => ctx.series(&eta_power(&power, ctx.order)),
        Command::Dim { k } => {
            let _ = writeln!(ctx.out, "{}", dim_mk(k));
        }
        Command::Mult { weight, twist } => mult(&mut ctx, &weight, twist),
        Command::Mlde(c) => mlde(&mut ctx, c)?,
        Command::Vvmf(c) => vvmf(&mut ctx, c)?,
        Command::Selftest { only, inject_fault } => {
            let opts = Options {
                only,
                faults: Faults {
                    corrupt_bernoulli: inject_fault == Some(Fault::Bernoulli),
                },
            };
            let results = acceptance::run(&opts);
            for r in &results {
                let _ = writeln!(ctx.out, "{}", r.line());
            }
            let _ = writeln!(ctx.out, "{}", acceptance::summary(&results));
            return Ok(if results.iter().all(|r| r.passed) {
                0
            } else {
                1
            });
        }
    }
    Ok(0)
}

fn mult(ctx: &mut Ctx, weight: &Rational, twist: i64) {
    let u = MultiplierSystem::new(weight, twist);
    let j = json!({
        "multiplier": u.to_string(),
        "weight_class": fmt_rational(u.weight_class()),
        "twist": u.twist(),
        "t_exponent": fmt_rational(&u.t_exponent()),
        "s_exponent": fmt_rational(&u.s_exponent()),
        "st_exponent": fmt_rational(&u.st_exponent()),
        "cusp_parameter": fmt_rational(&u.cusp_parameter()),
    });
    ctx.emit(&j, || {
        format!(
            "multiplier      {u}\nT exponent      {}\nS exponent      {}\nST exponent     {}\ncusp parameter  {}",
            fmt_rational(&u.t_exponent()),
            fmt_rational(&u.s_exponent()),
            fmt_rational(&u.st_exponent()),
            fmt_rational(&u.cusp_parameter())
        )
    });
}

fn mlde(ctx: &mut Ctx, c: MldeCommand) -> Result<()> {
    match c {
        MldeCommand::FromRoots { roots } => {
            check_incongruent(&roots)?;
            let op = operator_from_roots(&roots)?;
            let alphas: Vec<String> = op.alphas.iter().map(fmt_rational).collect();
            let sorted: Vec<String> = op.indicial_roots()?.iter().map(fmt_rational).collect();
            let j = json!({
                "weight": fmt_rational(&op.weight),
                "alphas": alphas,
                "indicial_polynomial": op.indicial_polynomial().to_text("r"),
                "roots": sorted,
            });
            ctx.emit(&j, || {
                let terms: Vec<String> = alphas
                    .iter()
                    .enumerate()
                    .map(|(i, a)| format!("alpha_{} = {a}  (E{})", 2 * (i + 2), 2 * (i + 2)))
                    .collect();
                format!("weight {}\n{}", fmt_rational(&op.weight), terms.join("\n"))
            });
        }
        MldeCommand::Solve { roots } => {
            check_incongruent(&roots)?;
            let op = operator_from_roots(&roots)?;
            let sols = op.solve_fundamental_system(ctx.order)?;
            let j: Vec<_> = sols.iter().map(QSeries::to_json).collect();
            ctx.emit(&j, || {
                sols.iter()
                    .map(QSeries::to_text)
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct LabelledVector {
    label: String,
    #[serde(flatten)]
    vector: VectorJson,
}

fn vvmf(ctx: &mut Ctx, c: VvmfCommand) -> std::result::Result<(), Failure> {
    match c {
        VvmfCommand::Classify(rep) => {
            let report = rep.classify()?;
            ctx.emit(&report.to_json(), || report.to_text());
        }
        VvmfCommand::Basis(rep) => {
            if ctx.order < ctx.probe_depth + 5 {
                return Err(Failure::Usage(format!(
                    "--order {} is too small for --probe-depth {}; need at least {}",
                    ctx.order,
                    ctx.probe_depth,
                    ctx.probe_depth + 5
                )));
            }
            let report = rep.classify()?;
            let basis = construct_basis(&report, ctx.order, ctx.probe_depth)?;
            let labelled: Vec<LabelledVector> = report
                .basis_recipe
                .iter()
                .zip(&basis)
                .map(|(e, v)| LabelledVector {
                    label: e.label.clone(),
                    vector: v.to_json(),
                })
                .collect();
            ctx.emit(&labelled, || {
                let mut s = String::new();
                for (e, v) in report.basis_recipe.iter().zip(&basis) {
                    s.push_str(&format!(
                        "{} (weight {})\n",
                        e.label,
                        fmt_rational(&v.weight)
                    ));
                    for comp in &v.components {
                        s.push_str(&format!("  {}\n", comp.to_text()));
                    }
                }
                s.trim_end().to_string()
            });
        }
        VvmfCommand::Wronskian { input } => {
            let raw = match input {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
                None => {
                    let mut s = String::new();
                    std::io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
                    s
                }
            };
            let v: VectorJson =
                serde_json::from_str(&raw).map_err(|e| Error::Parse(e.to_string()))?;
            let (weight, comps) = v.parse()?;
            let t = wronskian_eta_test(&comps, &weight)?;
            let j = json!({
                "g": t.quotient.to_json(),
                "is_pure_eta_power": t.is_pure_eta_power,
                "lambda": fmt_rational(&t.lambda),
                "g_weight": fmt_rational(&t.quotient_weight),
                "wronskian": t.wronskian.to_json(),
            });
            ctx.emit(&j, || {
                format!(
                    "lambda             {}\nis_pure_eta_power  {}\ng (weight {})      {}\nW                  {}",
                    fmt_rational(&t.lambda),
                    t.is_pure_eta_power,
                    fmt_rational(&t.quotient_weight),
                    t.quotient.to_text(),
                    t.wronskian.to_text()
                )
            });
        }
        VvmfCommand::Hp { rep, terms } => {
            let report = rep.classify()?;
            let hp = hilbert_poincare(&report, terms.saturating_sub(1));
            ctx.emit(&hp.to_json(), || hp.to_text());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = dispatch(
            std::iter::once("vvmf").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn negative_roots_are_not_flags() {
        let (code, out, _) = call(&["mlde", "from-roots", "-1/12", "1/4"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"weight\""));
    }

    #[test]
    fn odd_eisenstein_weight_is_a_usage_error() {
        let (code, _, err) = call(&["eis", "5"]);
        assert_eq!(code, 2);
        assert!(err.contains("even weight"));
    }

    #[test]
    fn basis_order_must_exceed_probe_depth() {
        let (code, _, err) = call(&[
            "--order",
            "10",
            "vvmf",
            "basis",
            "-d",
            "2",
            "-r",
            "1/12,5/12",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("--probe-depth"));
    }

    #[test]
    fn unknown_selftest_tag_is_rejected() {
        assert_eq!(call(&["selftest", "--only", "nope"]).0, 2);
    }
}
