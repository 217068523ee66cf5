//! Command-line front end: exact convolution algebra, arithmetic series,
//! characters, representations, the Δ expansion and Hecke action, coefficient
//! flows, and the named verification suites.
//!
//! Exit codes: 0 success, 1 for failed verification or runtime errors,
//! 2 for usage errors (from argument parsing).

mod config;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use config::{OutputFormat, RunConfig};
use etaconv::algebra::AlgElem;
use etaconv::characters;
use etaconv::coeff::parse_rational;
use etaconv::flows::{cauchy_flow, dirichlet_flow, time_reversal};
use etaconv::io as eio;
use etaconv::modular::{delta_expansion, hecke_operator, HeckeVariant};
use etaconv::numfield::NFElem;
use etaconv::series::ArithSeries;
use etaconv::verify::{run_all, run_suite, SuiteReport, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "etaconv",
    about = "Exact Cauchy/Dirichlet convolution algebra on number-field exponents",
    version
)]
struct Cli {
    /// Config file with key=value lines (flags override it).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Truncation bound for series produced by this invocation.
    #[arg(short = 'N', long, global = true)]
    truncation: Option<usize>,

    /// Prime bound for prime-vector operations.
    #[arg(short = 'P', long, global = true)]
    prime_bound: Option<u64>,

    /// Comparison tolerance for binary64 paths, in (0, 1e-3].
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Bit cap for exact sign resolution.
    #[arg(long, global = true)]
    precision_cap: Option<u32>,

    /// Seed for randomized verification sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output format for series data: json or csv.
    #[arg(long, global = true)]
    format: Option<String>,

    /// Record seed/config header in outputs.
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set)]
    emit_seed_header: bool,

    /// Write the primary artifact here instead of stdout.
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Formal-sum operations on elements over a number field.
    Algebra(AlgebraCmd),
    /// Truncated arithmetic-function series operations.
    Series(SeriesCmd),
    /// Dirichlet characters: enumeration and coefficient actions.
    Char(CharCmd),
    /// Diagonal Galois representations: Euler factors and actions.
    Rep(RepCmd),
    /// Coefficients of Δ = q·Π(1−qⁿ)²⁴ as CSV `n,a_n`.
    Delta,
    /// Hecke operator on Δ at a prime, in either coefficient convention.
    Hecke {
        #[arg(short)]
        p: u64,
        /// `paper` (t_p = η^p + p^{k-1}η^{1/p}) or `classical` (swapped).
        #[arg(long)]
        variant: String,
    },
    /// Coefficient flows on a formal sum (promotes exact input to binary64).
    Flow {
        /// cauchy (additive twist) or dirichlet (multiplicative twist).
        #[arg(long)]
        mode: String,
        /// Flow time: comma-separated reals, one per embedding.
        #[arg(short)]
        r: String,
        elem: PathBuf,
    },
    /// Exponent inversion q ↦ 1/q of a formal sum.
    Reverse { elem: PathBuf },
    /// Run a named verification suite (or `all`).
    Verify {
        suite: String,
        /// Lattice scale for orthonormality quadrature.
        #[arg(short = 'M', long)]
        lattice_scale: Option<u64>,
        /// Total quadrature points.
        #[arg(long)]
        points: Option<usize>,
        /// Sample count for randomized properties.
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Args)]
struct AlgebraCmd {
    #[command(subcommand)]
    op: AlgebraOp,
}

#[derive(Subcommand)]
enum AlgebraOp {
    /// Convolve two elements.
    Mul {
        /// cauchy or dirichlet.
        #[arg(long)]
        op: String,
        a: PathBuf,
        b: PathBuf,
    },
    /// Coefficient sum T(f).
    Trace { elem: PathBuf },
    /// Scale to the unit-sum representative.
    Normalize { elem: PathBuf },
    /// Sign-graded decomposition of the support.
    Grade { elem: PathBuf },
    /// Bilateral shift by an exponent.
    Shift {
        /// cauchy (S_α) or dirichlet (T_α).
        #[arg(long)]
        mode: String,
        /// Exponent coordinates, comma-separated rationals.
        #[arg(long)]
        alpha: String,
        elem: PathBuf,
    },
}

#[derive(Args)]
struct SeriesCmd {
    #[command(subcommand)]
    op: SeriesOp,
}

#[derive(Subcommand)]
enum SeriesOp {
    /// Dirichlet convolution of two series.
    Dconv { a: PathBuf, b: PathBuf },
    /// Dirichlet inverse.
    Dinv { a: PathBuf },
    /// Coprime-restricted convolution.
    Rpconv { a: PathBuf, b: PathBuf },
    /// Coprime-restricted inverse.
    Rpinv { a: PathBuf },
    /// Polylogarithm coefficients a_n = 1/n^s.
    Polylog {
        #[arg(short)]
        s: f64,
    },
    /// Multiplicativity classification of a series.
    Classify { a: PathBuf },
}

#[derive(Args)]
struct CharCmd {
    #[command(subcommand)]
    op: CharOp,
}

#[derive(Subcommand)]
enum CharOp {
    /// All characters of the given modulus, as JSON descriptors.
    List { modulus: u64 },
    /// Multiply a series coefficientwise by χ(n).
    Apply {
        #[arg(long)]
        modulus: u64,
        /// Index into the enumeration order of `char list`.
        #[arg(long)]
        index: usize,
        series: PathBuf,
    },
}

#[derive(Args)]
struct RepCmd {
    #[command(subcommand)]
    op: RepOp,
}

#[derive(Subcommand)]
enum RepOp {
    /// Multiply a series coefficientwise by χ_ρ(n).
    Apply {
        /// JSON descriptor {"summands": [<character>...]}.
        #[arg(long)]
        rep: PathBuf,
        series: PathBuf,
    },
    /// Local Euler factor coefficients at a prime, rows `k,re,im`.
    Euler {
        #[arg(long)]
        rep: PathBuf,
        #[arg(short)]
        p: u64,
        /// Expansion depth in powers of p.
        #[arg(short)]
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg.load_file(path)?;
    }
    if let Some(n) = cli.truncation {
        cfg.truncation = n;
    }
    if let Some(p) = cli.prime_bound {
        cfg.prime_bound = p;
    }
    if let Some(t) = cli.tolerance {
        cfg.tolerance = t;
    }
    if let Some(c) = cli.precision_cap {
        cfg.precision_cap = c;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(f) = &cli.format {
        cfg.format = OutputFormat::parse(f)?;
    }
    cfg.emit_seed_header = cli.emit_seed_header;
    cfg.validate()?;

    let out = Output::new(cli.output.clone());
    let flag_truncation = cli.truncation;
    let flag_prime_bound = cli.prime_bound;
    match cli.command {
        Command::Algebra(cmd) => algebra(cmd, &cfg, &out)?,
        Command::Series(cmd) => series(cmd, &cfg, &out)?,
        Command::Char(cmd) => characters_cmd(cmd, &cfg, &out)?,
        Command::Rep(cmd) => rep(cmd, &cfg, &out)?,
        Command::Delta => delta(&cfg, &out)?,
        Command::Hecke { p, variant } => hecke(p, &variant, &cfg, &out)?,
        Command::Flow { mode, r, elem } => flow(&mode, &r, &elem, &cfg, &out)?,
        Command::Reverse { elem } => reverse(&elem, &cfg, &out)?,
        Command::Verify { suite, lattice_scale, points, samples } => {
            return verify(
                &suite,
                lattice_scale,
                points,
                samples,
                flag_truncation,
                flag_prime_bound,
                &cfg,
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Destination for the primary artifact.
struct Output {
    path: Option<PathBuf>,
}

impl Output {
    fn new(path: Option<PathBuf>) -> Self {
        Output { path }
    }

    fn write(&self, content: &str) -> Result<()> {
        match &self.path {
            Some(path) => std::fs::write(path, content)
                .with_context(|| format!("writing {}", path.display())),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(content.as_bytes())?;
                if !content.ends_with('\n') {
                    stdout.write_all(b"\n")?;
                }
                Ok(())
            }
        }
    }
}

fn header_of(cfg: &RunConfig) -> Option<Vec<(String, String)>> {
    cfg.emit_seed_header.then(|| cfg.header())
}

fn read_elem(path: &Path) -> Result<AlgElem> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    Ok(eio::elem_from_json(&value)?)
}

fn read_series(path: &Path) -> Result<ArithSeries> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    if text.trim_start().starts_with('{') {
        bail!("expected series CSV, found JSON: {}", path.display());
    }
    Ok(eio::series_from_csv(&text)?)
}

fn write_elem(elem: &AlgElem, cfg: &RunConfig, out: &Output) -> Result<()> {
    let value = eio::elem_to_json(elem, header_of(cfg).as_ref());
    out.write(&serde_json::to_string_pretty(&value)?)
}

fn write_series(series: &ArithSeries, cfg: &RunConfig, out: &Output) -> Result<()> {
    match cfg.format {
        OutputFormat::Csv => out.write(&eio::series_to_csv(series, header_of(cfg).as_ref())),
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = (1..=series.truncation())
                .map(|n| {
                    let (re, im) = series.get(n).to_parts_strings();
                    serde_json::json!([n, re, im])
                })
                .collect();
            let mut obj = serde_json::Map::new();
            if let Some(h) = header_of(cfg) {
                obj.insert(
                    "header".into(),
                    serde_json::Value::Object(
                        h.into_iter()
                            .map(|(k, v)| (k, serde_json::Value::String(v)))
                            .collect(),
                    ),
                );
            }
            obj.insert("coeffs".into(), serde_json::Value::Array(rows));
            out.write(&serde_json::to_string_pretty(&serde_json::Value::Object(obj))?)
        }
    }
}

fn parse_exponent(spec: &str, elem: &AlgElem) -> Result<NFElem> {
    let coords = spec
        .split(',')
        .map(|c| Ok(parse_rational(c.trim())?))
        .collect::<Result<Vec<_>>>()?;
    let degree = elem.field().degree();
    if coords.len() != degree {
        bail!("exponent needs {degree} coordinates, got {}", coords.len());
    }
    Ok(NFElem::from_coords(coords))
}

fn algebra(cmd: AlgebraCmd, cfg: &RunConfig, out: &Output) -> Result<()> {
    match cmd.op {
        AlgebraOp::Mul { op, a, b } => {
            let x = read_elem(&a)?;
            let y = read_elem(&b)?;
            let product = match op.as_str() {
                "cauchy" => x.cauchy_product(&y)?,
                "dirichlet" => x.dirichlet_product(&y)?,
                other => bail!("unknown product {other:?} (expected cauchy or dirichlet)"),
            };
            write_elem(&product, cfg, out)
        }
        AlgebraOp::Trace { elem } => {
            let x = read_elem(&elem)?;
            let (re, im) = x.coeff_sum().to_parts_strings();
            out.write(&serde_json::json!({ "trace": [re, im] }).to_string())
        }
        AlgebraOp::Normalize { elem } => {
            let x = read_elem(&elem)?;
            write_elem(&x.normalize()?, cfg, out)
        }
        AlgebraOp::Grade { elem } => {
            let x = read_elem(&elem)?;
            let graded = x.grade_with_cap(cfg.precision_cap)?;
            let mut components = serde_json::Map::new();
            for (sign, part) in graded.components() {
                components.insert(sign.to_string(), eio::elem_to_json(part, None));
            }
            let (re, im) = graded.constant().to_parts_strings();
            out.write(&serde_json::to_string_pretty(&serde_json::json!({
                "constant": [re, im],
                "components": components,
            }))?)
        }
        AlgebraOp::Shift { mode, alpha, elem } => {
            let x = read_elem(&elem)?;
            let alpha = parse_exponent(&alpha, &x)?;
            let shifted = match mode.as_str() {
                "cauchy" => x.cauchy_shift(&alpha),
                "dirichlet" => x.dirichlet_shift(&alpha)?,
                other => bail!("unknown shift mode {other:?}"),
            };
            write_elem(&shifted, cfg, out)
        }
    }
}

fn series(cmd: SeriesCmd, cfg: &RunConfig, out: &Output) -> Result<()> {
    match cmd.op {
        SeriesOp::Dconv { a, b } => {
            let result = read_series(&a)?.dconv(&read_series(&b)?)?;
            write_series(&result, cfg, out)
        }
        SeriesOp::Dinv { a } => write_series(&read_series(&a)?.dinv()?, cfg, out),
        SeriesOp::Rpconv { a, b } => {
            let result = read_series(&a)?.coprime_conv(&read_series(&b)?)?;
            write_series(&result, cfg, out)
        }
        SeriesOp::Rpinv { a } => write_series(&read_series(&a)?.coprime_inv()?, cfg, out),
        SeriesOp::Polylog { s } => {
            let series = etaconv::series::polylog_coeffs(s, cfg.truncation);
            write_series(&series, cfg, out)
        }
        SeriesOp::Classify { a } => {
            let class = read_series(&a)?.classify_multiplicativity();
            out.write(&serde_json::json!({ "multiplicativity": class.to_string() }).to_string())
        }
    }
}

fn characters_cmd(cmd: CharCmd, cfg: &RunConfig, out: &Output) -> Result<()> {
    match cmd.op {
        CharOp::List { modulus } => {
            let chars = characters::enumerate(modulus)?;
            let list: Vec<serde_json::Value> =
                chars.iter().map(eio::character_to_json).collect();
            out.write(&serde_json::to_string_pretty(&serde_json::Value::Array(list))?)
        }
        CharOp::Apply { modulus, index, series } => {
            let chars = characters::enumerate(modulus)?;
            let chi = chars
                .get(index)
                .ok_or_else(|| anyhow!("index {index} out of range: {} characters", chars.len()))?;
            let twisted = chi.twist(&read_series(&series)?)?;
            write_series(&twisted, cfg, out)
        }
    }
}

fn rep(cmd: RepCmd, cfg: &RunConfig, out: &Output) -> Result<()> {
    match cmd.op {
        RepOp::Apply { rep, series } => {
            let text = std::fs::read_to_string(&rep)?;
            let rho = eio::rep_from_json(&serde_json::from_str(&text)?)?;
            let twisted = rho.twist(&read_series(&series)?)?;
            write_series(&twisted, cfg, out)
        }
        RepOp::Euler { rep, p, k } => {
            let text = std::fs::read_to_string(&rep)?;
            let rho = eio::rep_from_json(&serde_json::from_str(&text)?)?;
            let coeffs = rho.euler_factor_coeffs(p, k)?;
            let mut body = String::new();
            if let Some(h) = header_of(cfg) {
                body.push('#');
                for (key, value) in h {
                    body.push_str(&format!(" {key}={value}"));
                }
                body.push('\n');
            }
            for (i, c) in coeffs.iter().enumerate() {
                let (re, im) = c.to_parts_strings();
                body.push_str(&format!("{i},{re},{im}\n"));
            }
            out.write(&body)
        }
    }
}

fn delta(cfg: &RunConfig, out: &Output) -> Result<()> {
    let coeffs = delta_expansion(cfg.truncation)?;
    let mut body = String::new();
    if let Some(h) = header_of(cfg) {
        body.push('#');
        for (key, value) in h {
            body.push_str(&format!(" {key}={value}"));
        }
        body.push('\n');
    }
    for n in 1..=coeffs.truncation() {
        body.push_str(&format!("{n},{}\n", coeffs.coeff(n)));
    }
    out.write(&body)
}

fn hecke(p: u64, variant: &str, cfg: &RunConfig, out: &Output) -> Result<()> {
    let variant = HeckeVariant::parse(variant)?;
    let delta = delta_expansion(cfg.truncation)?;
    let image = hecke_operator(&delta, p, variant)?;
    let mut body = String::new();
    if let Some(h) = header_of(cfg) {
        body.push('#');
        for (key, value) in h {
            body.push_str(&format!(" {key}={value}"));
        }
        body.push_str(&format!(" p={p}\n"));
    }
    for n in 1..=image.truncation() {
        body.push_str(&format!("{n},{}\n", image.coeff(n)));
    }
    out.write(&body)
}

fn flow(mode: &str, r_spec: &str, elem: &Path, cfg: &RunConfig, out: &Output) -> Result<()> {
    let x = read_elem(elem)?.promote(etaconv::coeff::Domain::Complex)?;
    let r: Vec<f64> = r_spec
        .split(',')
        .map(|v| v.trim().parse().map_err(|_| anyhow!("bad flow time {v:?}")))
        .collect::<Result<Vec<_>>>()?;
    let field = x.field().clone();
    let moved = match mode {
        "cauchy" => cauchy_flow(&field, &r, &x)?,
        "dirichlet" => dirichlet_flow(&field, &r, &x)?,
        other => bail!("unknown flow mode {other:?}"),
    };
    write_elem(&moved, cfg, out)
}

fn reverse(elem: &Path, cfg: &RunConfig, out: &Output) -> Result<()> {
    let x = read_elem(elem)?;
    write_elem(&time_reversal(&x)?, cfg, out)
}

fn verify(
    suite: &str,
    lattice_scale: Option<u64>,
    points: Option<usize>,
    samples: Option<usize>,
    truncation: Option<usize>,
    prime_bound: Option<u64>,
    cfg: &RunConfig,
) -> Result<ExitCode> {
    let vcfg = VerifyConfig {
        seed: cfg.seed,
        n: truncation,
        prime_bound,
        samples,
        points,
        lattice_scale,
    };
    let start = Instant::now();
    let reports: Vec<SuiteReport> = if suite == "all" {
        run_all(&vcfg)?
    } else {
        vec![run_suite(suite, &vcfg)?]
    };
    let mut all_ok = true;
    println!("# seed={}", cfg.seed);
    for report in &reports {
        for p in &report.properties {
            let total = p.passed + p.failed;
            let status = if p.ok() { "PASS" } else { "FAIL" };
            all_ok &= p.ok();
            match &p.note {
                Some(note) => {
                    println!("{}: {}: {}/{} {} ({note})", report.suite, p.name, p.passed, total, status)
                }
                None => println!("{}: {}: {}/{} {}", report.suite, p.name, p.passed, total, status),
            }
        }
    }
    println!("verify {}: {}", suite, if all_ok { "PASS" } else { "FAIL" });
    eprintln!("elapsed: {:.2?}", start.elapsed());
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;
    use etaconv::verify::SUITE_NAMES;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn suite_names_resolve() {
        // Every advertised suite name must dispatch.
        for name in SUITE_NAMES {
            let cfg = VerifyConfig {
                n: Some(10),
                samples: Some(1),
                points: Some(64),
                ..VerifyConfig::default()
            };
            run_suite(name, &cfg).unwrap();
        }
    }
}
