use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use stw_core::algebra::{find_symmetric_form, AlgebraJson};
use stw_core::catalog::{catalog_by_name, string_module, CatalogAlgebra, StringWord};
use stw_core::module::ModuleJson;
use stw_core::stable::{grothendieck_class, is_stably_isomorphic, omega_power, stable_hom};
use stw_core::suite::{run_suite, Level, Verdict};
use stw_core::twist::TwistContext;
use stw_core::{Error, IsoOptions, Module};

#[derive(Parser)]
#[command(name = "stw", version, about = "Stable twist functors over local symmetric algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Spherical,
    Pn,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra JSON file and look for a symmetrizing form.
    Validate {
        file: PathBuf,
        /// Treat a missing symmetric form as a failure rather than a warning.
        #[arg(long)]
        require_symmetric: bool,
    },
    /// Print a catalog algebra as JSON.
    Export { alg: String },
    /// Apply a twist functor to a module and report the result.
    Twist {
        #[arg(long)]
        alg: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: Option<String>,
        /// simple, regular, T, string:<word>, or a module JSON file.
        #[arg(long, default_value = "simple")]
        module: String,
        #[arg(long, default_value_t = 1)]
        iter: usize,
        /// Compare against a syzygy shift of the input, e.g. omega:-2.
        #[arg(long, allow_hyphen_values = true)]
        compare: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the acceptance suite.
    Suite {
        #[arg(long, default_value = "quick")]
        level: Level,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Zero the timing fields in the JSON report.
        #[arg(long)]
        no_timing: bool,
    },
}

/// An error together with the exit code it maps to.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        let code = match err.downcast_ref::<Error>() {
            Some(Error::Parse(_) | Error::BadParameter(_) | Error::InvalidWord(_)) => 2,
            Some(_) => 1,
            None => 2,
        };
        Failure { code, err }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::new(e).into()
    }
}

fn usage(err: anyhow::Error) -> Failure {
    Failure { code: 2, err }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())).map_err(usage)
}

fn validate(file: &Path, require_symmetric: bool) -> Result<u8, Failure> {
    let text = read_file(file)?;
    let json = AlgebraJson::from_json_str(&text).map_err(|e| usage(e.into()))?;
    let a = json.validate()?;
    for w in a.warnings() {
        println!("warning: {w}");
    }
    match find_symmetric_form(&a, 0) {
        Ok(_) => println!("local symmetric, d={}", a.dim()),
        Err(e) if require_symmetric => return Err(e.into()),
        Err(e) => println!("local, d={}; warning: {e}", a.dim()),
    }
    Ok(0)
}

fn export(alg: &str) -> Result<u8, Failure> {
    let c = catalog_by_name(alg)?;
    println!("{}", AlgebraJson::from_algebra(&c.algebra).to_json_string());
    Ok(0)
}

fn load_module(c: &CatalogAlgebra, ctx: &TwistContext, spec: &str) -> Result<Module, Failure> {
    let a = &c.algebra;
    Ok(match spec {
        "simple" | "k" => Module::simple(a.clone()),
        "regular" | "A" => Module::regular(a.clone()),
        "T" => ctx.t().clone(),
        _ => {
            if let Some(word) = spec.strip_prefix("string:") {
                let w: StringWord = word.parse()?;
                string_module(a, &w)?
            } else {
                let text = read_file(Path::new(spec))?;
                ModuleJson::from_json_str(&text).map_err(|e| usage(e.into()))?.into_module(a.clone())?
            }
        }
    })
}

fn parse_compare(s: &str) -> Result<i32, Failure> {
    s.strip_prefix("omega:")
        .and_then(|k| k.parse().ok())
        .ok_or_else(|| usage(anyhow!("--compare expects omega:<integer>, got {s:?}")))
}

#[allow(clippy::too_many_arguments)]
fn twist(
    alg: &str,
    kind: Kind,
    x: &str,
    y: Option<&str>,
    module: &str,
    iter: usize,
    compare: Option<&str>,
    seed: u64,
) -> Result<u8, Failure> {
    let shift = compare.map(parse_compare).transpose()?;
    let c = catalog_by_name(alg)?;
    let xv = c.element(x)?;
    let yv = y.map(|n| c.element(n)).transpose()?;
    let ctx = TwistContext::new(c.algebra.clone(), &xv, yv.as_deref(), seed)?;
    let input = load_module(&c, &ctx, module)?;
    let mut out = input.clone();
    for _ in 0..iter {
        out = match kind {
            Kind::Spherical => ctx.spherical_twist(&out)?,
            Kind::Pn => ctx.pn_twist(&out)?,
        };
    }
    let class = grothendieck_class(&out);
    println!("input dim: {}", input.dim());
    println!("twisted dim: {}", out.dim());
    println!("class: {} mod {}", class.value, class.modulus);
    println!("stable End dim: {}", stable_hom(&out, &out)?.stable_dim());
    if let Some(k) = shift {
        let target = omega_power(&input, k);
        let verdict = is_stably_isomorphic(&out, &target, &IsoOptions::with_seed(seed))?;
        let text = match (verdict.is_yes(), verdict.is_no()) {
            (true, _) => "stably isomorphic".to_string(),
            (_, true) => format!("not stably isomorphic ({})", verdict.reason().unwrap_or_default()),
            _ => "inconclusive".to_string(),
        };
        println!("compare omega^{k}: {text}");
    }
    Ok(0)
}

fn suite(level: Level, seed: u64, jobs: usize, json: Option<&Path>, no_timing: bool) -> Result<u8, Failure> {
    let report = run_suite(level, seed, jobs);
    for c in &report.cases {
        let tag = match c.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        };
        match &c.witness {
            Some(w) => println!("{tag} [{}] {}: {w}", c.criterion, c.id),
            None => println!("{tag} [{}] {}", c.criterion, c.id),
        }
    }
    println!(
        "{} cases: {} passed, {} failed, {} inconclusive",
        report.cases.len(),
        report.passed,
        report.failed,
        report.inconclusive
    );
    if let Some(path) = json {
        std::fs::write(path, report.to_json(!no_timing))
            .with_context(|| format!("cannot write {}", path.display()))
            .map_err(|err| Failure { code: 1, err })?;
    }
    Ok(if report.ok { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Validate { file, require_symmetric } => validate(file, *require_symmetric),
        Command::Export { alg } => export(alg),
        Command::Twist { alg, kind, x, y, module, iter, compare, seed } => {
            twist(alg, *kind, x, y.as_deref(), module, *iter, compare.as_deref(), *seed)
        }
        Command::Suite { level, seed, jobs, json, no_timing } => suite(*level, *seed, *jobs, json.as_deref(), *no_timing),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, err }) => {
            if err.is::<Error>() {
                eprintln!("error: {err}");
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(code)
        }
    }
}
