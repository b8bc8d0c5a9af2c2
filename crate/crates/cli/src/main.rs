use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hilbert_fock::hilbert::{self, ClassName, ClassSpec, Target};
use hilbert_fock::json::{fock_to_json, parse_partition, partition_to_json, rational_to_json};
use hilbert_fock::verify::{self, Suite};
use hilbert_fock::{Rational, ENGINE_VERSION};
use serde_json::{json, Map, Value};

const DEFAULT_ORDER: usize = 12;

#[derive(Parser)]
#[command(name = "hilbert-fock", version, about = "Exact characteristic classes and cup products on Hilb^n(C^2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print g_1..g_N for a multiplicative class
    Gseries {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand a class on Hilb^N in the creation-operator basis
    Class {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        weight: usize,
        /// Keep only the part of this algebraic degree
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cup product of two basis classes q_ν|0⟩ and q_ν'|0⟩
    Cup {
        left: String,
        right: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a self-check suite
    Verify {
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassKind {
    Chern,
    Segre,
    SqrtTodd,
    CprimePow,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Tangent,
    Tautological,
}

#[derive(Args)]
struct ClassArgs {
    class: ClassKind,
    target: TargetArg,
    /// Exponent for cprime-pow, e.g. 2 or -1/2
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    /// Coefficients of a custom f, e.g. 1,1/2,0
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
}

impl ClassArgs {
    fn name(&self) -> anyhow::Result<ClassName> {
        if self.r.is_some() && !matches!(self.class, ClassKind::CprimePow) {
            bail!("--r only applies to cprime-pow");
        }
        if self.f.is_some() && !matches!(self.class, ClassKind::Custom) {
            bail!("--f only applies to custom");
        }
        Ok(match self.class {
            ClassKind::Chern => ClassName::Chern,
            ClassKind::Segre => ClassName::Segre,
            ClassKind::SqrtTodd => ClassName::SqrtTodd,
            ClassKind::CprimePow => {
                let r = self.r.as_deref().context("cprime-pow needs --r")?;
                ClassName::CprimePow(r.trim().parse().with_context(|| format!("bad --r {r:?}"))?)
            }
            ClassKind::Custom => {
                let raw = self.f.as_deref().context("custom needs --f")?;
                ClassName::Custom(parse_coeffs(raw)?)
            }
        })
    }

    fn target(&self) -> Target {
        match self.target {
            TargetArg::Tangent => Target::Tangent,
            TargetArg::Tautological => Target::Tautological,
        }
    }

    fn spec(&self, order: usize) -> anyhow::Result<ClassSpec> {
        Ok(ClassSpec::new(self.name()?.series(order.max(1))?, self.target())?)
    }

    fn echo(&self, req: &mut Map<String, Value>) -> anyhow::Result<()> {
        let name = self.name()?;
        req.insert("class".into(), json!(name.label()));
        req.insert("target".into(), json!(self.target().to_string()));
        match &name {
            ClassName::CprimePow(r) => {
                req.insert("r".into(), rational_to_json(r));
            }
            ClassName::Custom(cs) => {
                req.insert("f".into(), Value::Array(cs.iter().map(rational_to_json).collect()));
            }
            _ => {}
        }
        Ok(())
    }
}

fn parse_coeffs(raw: &str) -> anyhow::Result<Vec<Rational>> {
    let inner = raw.trim().trim_start_matches('[').trim_end_matches(']');
    let coeffs = inner
        .split(',')
        .map(|t| t.trim().trim_matches('"'))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Rational>().with_context(|| format!("bad coefficient {t:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if coeffs.is_empty() {
        bail!("--f needs at least one coefficient");
    }
    Ok(coeffs)
}

enum Outcome {
    Done(Value, Option<PathBuf>),
    Failed(Value, Option<PathBuf>),
}

fn document(mut request: Map<String, Value>, subcommand: &str, payload: Value) -> Value {
    request.insert("subcommand".into(), json!(subcommand));
    request.sort_keys();
    json!({"request": request, "payload": payload, "version": ENGINE_VERSION})
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let mut req = Map::new();
    match cli.command {
        Command::Gseries { class, order, out } => {
            class.echo(&mut req)?;
            req.insert("order".into(), json!(order));
            let g = hilbert::g_series(&class.spec(order)?, order)?;
            let payload = Value::Array(g.coeffs().iter().skip(1).map(rational_to_json).collect());
            Ok(Outcome::Done(document(req, "gseries", payload), out))
        }
        Command::Class { class, weight, degree, out } => {
            class.echo(&mut req)?;
            req.insert("weight".into(), json!(weight));
            if let Some(d) = degree {
                req.insert("degree".into(), json!(d));
            }
            let mut element = hilbert::hilbert_class(&class.spec(weight)?, weight)?.component(weight)?;
            if let Some(d) = degree {
                element = element.degree_component(d);
            }
            Ok(Outcome::Done(document(req, "class", fock_to_json(&element)), out))
        }
        Command::Cup { left, right, out } => {
            let a = parse_partition(&left)?;
            let b = parse_partition(&right)?;
            req.insert("left".into(), partition_to_json(&a));
            req.insert("right".into(), partition_to_json(&b));
            let product = hilbert::cup_basis(&a, &b)?;
            Ok(Outcome::Done(document(req, "cup", fock_to_json(&product)), out))
        }
        Command::Verify { suite, out } => {
            let suite: Suite = suite.parse()?;
            req.insert("suite".into(), json!(suite.to_string()));
            let checks = verify::run(suite)?;
            let passed = checks.iter().all(|c| c.passed);
            let payload = json!({
                "passed": passed,
                "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            });
            let doc = document(req, "verify", payload);
            Ok(if passed { Outcome::Done(doc, out) } else { Outcome::Failed(doc, out) })
        }
    }
}

fn emit(doc: &Value, out: Option<PathBuf>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(doc)? + "\n";
    match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, out, status) = match run(cli) {
        Ok(Outcome::Done(doc, out)) => (doc, out, ExitCode::SUCCESS),
        Ok(Outcome::Failed(doc, out)) => (doc, out, ExitCode::from(1)),
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&doc, out) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    status
}
