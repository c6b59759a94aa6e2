//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error, 3 I/O error. Output depends only on the resolved configuration.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::io::{
    self, csv_writer, grid_to_json, parse_coin, scalar_csv, scalar_to_json, window_to_json,
    JsonScalar,
};
use crate::qw::{self, QwState, UnitaryCoin};
use crate::scalar::{MaxScalar, Numeric};
use crate::spectral;
use crate::ud::ultradiscretization_check;
use crate::verify::{run_suite, Suite, VerifyOptions, DEFAULT_SEED};
use crate::walk::coin::Coin;
use crate::walk::eigen::{
    branch_eigenvalue, check_condition_a, eigen_sum, eigen_sum_closed_form, position_eigen_sum,
    sdm_eigenvalue,
};
use crate::walk::sdm::{positions, sdm_closed_form_grid, sdm_recursive};
use crate::walk::state::WalkState;
use crate::window::{build_window, stationary_vector, window_eigenvector, Side};

pub const DEFAULT_STEPS: usize = 10;
pub const DEFAULT_QW_STEPS: usize = 1000;
pub const DEFAULT_RADIUS: usize = 10;
pub const DEFAULT_UD_EPS: f64 = 1e-3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("verification failed")]
    Verification,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification => 1,
            CliError::Config(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "maxplus-walk",
    version,
    about = "Max-plus walk simulator and verifier"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand. Unset flags fall back to `--config`.
#[derive(Debug, Default, Clone, Args)]
pub struct CommonArgs {
    /// Coin as `a=..,b=..,c=..,d=..`.
    #[arg(long, global = true)]
    pub coin: Option<String>,
    /// Coin file: key=value lines or JSON.
    #[arg(long, global = true)]
    pub coin_file: Option<PathBuf>,
    /// Number of steps.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Window radius.
    #[arg(long = "K", global = true)]
    pub radius: Option<usize>,
    #[arg(long, value_enum, global = true)]
    pub mode: Option<Mode>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Flat key=value file with the same keys as the flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evolve the walk from a single seed and report per-site eigenvalues.
    Evolve {
        /// Run the quantum walk instead and report the distribution.
        #[arg(long)]
        qw: bool,
        /// Use the Hadamard coin for the quantum walk.
        #[arg(long)]
        hadamard: bool,
    },
    /// State-decision matrices by recursion and by closed form.
    Sdm {
        /// Exit with status 1 unless every cell agrees.
        #[arg(long)]
        check: bool,
    },
    /// Eigenvalues of the state-decision matrices.
    Eig,
    /// Eigenvalue sums over time and the condition-A report.
    Conserve,
    /// Spectrum and eigenvector of the finite window operator.
    Spectrum,
    /// Compare the soft-max walk with the max-plus walk.
    Ud {
        /// Scale of the positive weights.
        #[arg(long, default_value_t = DEFAULT_UD_EPS)]
        eps: f64,
    },
    /// Quantum walk weak-limit comparison.
    Qw {
        #[arg(long)]
        hadamard: bool,
    },
    /// Run a verification suite.
    Verify {
        /// One of thm3-1, thm4-1, thm5-1, table1, ud, weak-limit.
        suite: Suite,
    },
}

/// Flags merged with the config file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunConfig {
    pub coin: Option<String>,
    pub coin_file: Option<PathBuf>,
    pub n: Option<usize>,
    pub radius: Option<usize>,
    pub mode: Option<Mode>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> CliResult<T> {
    value
        .parse()
        .map_err(|_| CliError::Config(format!("bad value for {key}: {value:?}")))
}

fn parse_enum<T: ValueEnum>(key: &str, value: &str) -> CliResult<T> {
    T::from_str(value, true)
        .map_err(|_| CliError::Config(format!("bad value for {key}: {value:?}")))
}

impl RunConfig {
    /// Parses a flat `key=value` file. `#` starts a comment line.
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut cfg = RunConfig::default();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!("config line {}: expected key=value", idx + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "coin" => cfg.coin = Some(value.to_string()),
                "coin-file" | "coin_file" => cfg.coin_file = Some(PathBuf::from(value)),
                "n" => cfg.n = Some(parse_value(key, value)?),
                "K" => cfg.radius = Some(parse_value(key, value)?),
                "mode" => cfg.mode = Some(parse_enum(key, value)?),
                "out" => cfg.out = Some(PathBuf::from(value)),
                "format" => cfg.format = Some(parse_enum(key, value)?),
                "seed" => cfg.seed = Some(parse_value(key, value)?),
                "trials" => cfg.trials = Some(parse_value(key, value)?),
                other => {
                    return Err(CliError::Config(format!(
                        "config line {}: unknown key {other:?}",
                        idx + 1
                    )))
                }
            }
        }
        Ok(cfg)
    }

    /// Flags take precedence over the file.
    pub fn resolve(flags: &CommonArgs) -> CliResult<Self> {
        let file = match &flags.config {
            Some(path) => RunConfig::parse(&read_file(path)?)?,
            None => RunConfig::default(),
        };
        let (coin, coin_file) = if flags.coin.is_some() || flags.coin_file.is_some() {
            (flags.coin.clone(), flags.coin_file.clone())
        } else {
            (file.coin, file.coin_file)
        };
        Ok(RunConfig {
            coin,
            coin_file,
            n: flags.n.or(file.n),
            radius: flags.radius.or(file.radius),
            mode: flags.mode.or(file.mode),
            out: flags.out.clone().or(file.out),
            format: flags.format.or(file.format),
            seed: flags.seed.or(file.seed),
            trials: flags.trials.or(file.trials),
        })
    }

    fn coin_text(&self) -> CliResult<Option<String>> {
        if self.coin.is_some() && self.coin_file.is_some() {
            return Err(CliError::Config(
                "give either --coin or --coin-file, not both".into(),
            ));
        }
        match (&self.coin, &self.coin_file) {
            (Some(c), _) => Ok(Some(c.clone())),
            (None, Some(path)) => read_file(path).map(Some),
            (None, None) => Ok(None),
        }
    }

    fn maxplus_coin<T: Numeric>(&self) -> CliResult<Coin<T>> {
        let text = self
            .coin_text()?
            .ok_or_else(|| CliError::Config("this command needs --coin or --coin-file".into()))?;
        Ok(parse_coin(&text)?)
    }

    fn unitary_coin(&self, hadamard: bool) -> CliResult<UnitaryCoin> {
        match self.coin_text()? {
            Some(_) if hadamard => Err(CliError::Config(
                "--hadamard cannot be combined with a coin".into(),
            )),
            Some(text) => {
                let c: Coin<f64> = parse_coin(&text)?;
                let z = |x: f64| Complex64::new(x, 0.0);
                Ok(UnitaryCoin::new(z(c.a), z(c.b), z(c.c), z(c.d))?)
            }
            None => Ok(UnitaryCoin::hadamard()),
        }
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn json_bytes(v: &Value) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s.into_bytes()
}

fn csv_bytes(header: &[&str], rows: Vec<Vec<String>>) -> CliResult<Vec<u8>> {
    let mut buf = Vec::new();
    {
        let mut w = csv_writer(&mut buf, header)?;
        for row in rows {
            w.write_record(&row)
                .map_err(|e| CliError::Config(e.to_string()))?;
        }
        w.flush().map_err(|e| CliError::Io {
            path: "<buffer>".into(),
            source: e,
        })?;
    }
    Ok(buf)
}

fn emit(out: &Option<PathBuf>, bytes: &[u8], stdout: &mut dyn Write) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => stdout.write_all(bytes).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "maxplus-walk: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> CliResult<()> {
    let cfg = RunConfig::resolve(&cli.common)?;
    match &cli.command {
        Command::Evolve { qw: true, hadamard } => evolve_qw(&cfg, *hadamard, stdout),
        Command::Evolve { hadamard: true, .. } => Err(CliError::Config(
            "--hadamard applies to the quantum walk; add --qw".into(),
        )),
        Command::Qw { hadamard } => weak_limit(&cfg, *hadamard, stdout),
        Command::Ud { eps } => ud(&cfg, *eps, stdout),
        Command::Verify { suite } => verify(&cfg, *suite, stdout),
        command => match cfg.mode.unwrap_or(Mode::Exact) {
            Mode::Exact => maxplus::<i64>(command, &cfg, stdout),
            Mode::Float => maxplus::<f64>(command, &cfg, stdout),
        },
    }
}

fn maxplus<T>(command: &Command, cfg: &RunConfig, stdout: &mut dyn Write) -> CliResult<()>
where
    T: JsonScalar,
    T::Mean: JsonScalar,
{
    let coin: Coin<T> = cfg.maxplus_coin()?;
    let n = cfg.n.unwrap_or(DEFAULT_STEPS);
    let bytes = match command {
        Command::Evolve { .. } => evolve(&coin, n, cfg.format.unwrap_or(Format::Csv))?,
        Command::Sdm { check } => {
            let (bytes, all_equal) = sdm(&coin, n, cfg.format.unwrap_or(Format::Json))?;
            emit(&cfg.out, &bytes, stdout)?;
            return if *check && !all_equal {
                Err(CliError::Verification)
            } else {
                Ok(())
            };
        }
        Command::Eig => eig(&coin, n, cfg.format.unwrap_or(Format::Csv))?,
        Command::Conserve => conserve(&coin, n, cfg.format.unwrap_or(Format::Csv))?,
        Command::Spectrum => spectrum(
            &coin,
            cfg.radius.unwrap_or(DEFAULT_RADIUS),
            cfg.format.unwrap_or(Format::Json),
        )?,
        _ => unreachable!("dispatched in execute"),
    };
    emit(&cfg.out, &bytes, stdout)
}

fn amplitude_json<T: JsonScalar>(x: &[MaxScalar<T>; 2]) -> Value {
    json!([scalar_to_json(x[0]), scalar_to_json(x[1])])
}

fn evolve<T>(coin: &Coin<T>, n: usize, format: Format) -> CliResult<Vec<u8>>
where
    T: JsonScalar,
    T::Mean: JsonScalar,
{
    match format {
        Format::Json => {
            let seed = WalkState::single_seed(MaxScalar::e(), MaxScalar::e())?;
            let state = seed.evolve(coin, n);
            let mut cells = Map::new();
            for (k, amp) in state.cells() {
                cells.insert(k.to_string(), amplitude_json(amp));
            }
            Ok(json_bytes(
                &json!({ "n": n, "cells": Value::Object(cells) }),
            ))
        }
        Format::Csv => {
            let grid = sdm_recursive(coin, n);
            let mut rows = Vec::new();
            for (k, m) in grid.cells() {
                let lambda = spectral::max_cycle_mean(m)?;
                rows.push(vec![n.to_string(), k.to_string(), scalar_csv(lambda)]);
            }
            csv_bytes(&["n", "k", "lambda"], rows)
        }
    }
}

fn sdm<T: JsonScalar>(coin: &Coin<T>, n: usize, format: Format) -> CliResult<(Vec<u8>, bool)> {
    let recursive = sdm_recursive(coin, n);
    let closed = sdm_closed_form_grid(coin, n);
    let eps = crate::matrix::MaxMatrix::epsilon(2, 2);
    let mut equal = Vec::new();
    for k in positions(n) {
        let r = recursive.get(k).unwrap_or(&eps);
        let c = closed.get(k).unwrap_or(&eps);
        equal.push((k, r, c, r == c));
    }
    let all_equal = equal.iter().all(|e| e.3);
    let bytes = match format {
        Format::Json => {
            let flags: Map<String, Value> = equal
                .iter()
                .map(|(k, _, _, eq)| (k.to_string(), json!(eq)))
                .collect();
            json_bytes(&json!({
                "n": n,
                "recursive": grid_to_json(&recursive)["cells"],
                "closed_form": grid_to_json(&closed)["cells"],
                "equal": Value::Object(flags),
                "all_equal": all_equal,
            }))
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (k, r, c, eq) in &equal {
                for i in 0..2 {
                    for j in 0..2 {
                        rows.push(vec![
                            n.to_string(),
                            k.to_string(),
                            i.to_string(),
                            j.to_string(),
                            scalar_csv(r.get(i, j)),
                            scalar_csv(c.get(i, j)),
                            eq.to_string(),
                        ]);
                    }
                }
            }
            csv_bytes(
                &["n", "k", "row", "col", "recursive", "closed_form", "equal"],
                rows,
            )?
        }
    };
    Ok((bytes, all_equal))
}

fn eig<T>(coin: &Coin<T>, n: usize, format: Format) -> CliResult<Vec<u8>>
where
    T: JsonScalar,
    T::Mean: JsonScalar,
{
    let grid = sdm_recursive(coin, n);
    let mut rows = Vec::new();
    for (k, m) in grid.cells() {
        let lambda = spectral::max_cycle_mean(m)?;
        let closed = sdm_eigenvalue(coin, n, k)?;
        let published = branch_eigenvalue(coin, n, k);
        rows.push((
            k,
            lambda,
            closed.value,
            published.value,
            closed.branch.as_str(),
        ));
    }
    Ok(match format {
        Format::Csv => csv_bytes(
            &["n", "k", "lambda", "closed_form", "published", "branch"],
            rows.iter()
                .map(|(k, l, c, p, b)| {
                    vec![
                        n.to_string(),
                        k.to_string(),
                        scalar_csv(*l),
                        c.to_string(),
                        p.to_string(),
                        b.to_string(),
                    ]
                })
                .collect(),
        )?,
        Format::Json => json_bytes(&Value::Array(
            rows.iter()
                .map(|(k, l, c, p, b)| {
                    json!({
                        "n": n,
                        "k": k,
                        "lambda": scalar_to_json(*l),
                        "closed_form": c.to_json(),
                        "published": p.to_json(),
                        "branch": b,
                    })
                })
                .collect(),
        )),
    })
}

fn conserve<T>(coin: &Coin<T>, max_n: usize, format: Format) -> CliResult<Vec<u8>>
where
    T: JsonScalar,
    T::Mean: JsonScalar,
{
    let rows: Vec<_> = (1..=max_n)
        .map(|n| {
            (
                n,
                eigen_sum(coin, n),
                eigen_sum_closed_form(coin, n),
                position_eigen_sum(coin, n),
            )
        })
        .collect();
    Ok(match format {
        Format::Csv => csv_bytes(
            &["n", "eig_sum", "closed_form", "position_sum"],
            rows.iter()
                .map(|(n, s, c, p)| {
                    vec![n.to_string(), s.to_string(), c.to_string(), p.to_string()]
                })
                .collect(),
        )?,
        Format::Json => {
            let report = check_condition_a(coin);
            let conserved = rows.windows(2).all(|w| w[0].1.close_to(w[1].1));
            json_bytes(&json!({
                "condition_a": report.satisfied,
                "a_plus_d": report.a_plus_d.to_json(),
                "b_plus_c": report.b_plus_c.to_json(),
                "tropdet_h": scalar_to_json(report.tropdet_h),
                "conserved": conserved,
                "sums": rows.iter().map(|(n, s, c, p)| json!({
                    "n": n,
                    "eig_sum": s.to_json(),
                    "closed_form": c.to_json(),
                    "position_sum": p.to_json(),
                })).collect::<Vec<_>>(),
            }))
        }
    })
}

fn spectrum<T>(coin: &Coin<T>, radius: usize, format: Format) -> CliResult<Vec<u8>>
where
    T: JsonScalar,
    T::Mean: JsonScalar,
{
    let window = build_window(coin, radius)?;
    let lambda = spectral::max_cycle_mean(window.matrix())?;
    let eigenvector = window_eigenvector(coin, radius)?;
    let stationary = if coin.satisfies_condition_a() {
        Some(stationary_vector(coin, radius)?)
    } else {
        None
    };
    let r = radius as i64;
    Ok(match format {
        Format::Json => {
            let mut v = window_to_json(&window);
            v["max_cycle_mean"] = scalar_to_json(lambda);
            v["eigenvector"] = Value::Array(
                (-r..=r)
                    .map(|k| amplitude_json(&eigenvector.get(k)))
                    .collect(),
            );
            v["stationary"] = match &stationary {
                Some(s) => Value::Array((-r..=r).map(|k| amplitude_json(&s.get(k))).collect()),
                None => Value::Null,
            };
            json_bytes(&v)
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for k in -r..=r {
                for side in [Side::L, Side::R] {
                    let i = side as usize;
                    let st = stationary
                        .as_ref()
                        .map(|s| scalar_csv(s.get(k)[i]))
                        .unwrap_or_default();
                    rows.push(vec![
                        k.to_string(),
                        format!("{side:?}"),
                        scalar_csv(eigenvector.get(k)[i]),
                        st,
                    ]);
                }
            }
            csv_bytes(&["k", "side", "eigenvector", "stationary"], rows)?
        }
    })
}

fn require_float_mode(cfg: &RunConfig, what: &str) -> CliResult<()> {
    if cfg.mode == Some(Mode::Exact) {
        return Err(CliError::Config(format!("{what} runs in float mode only")));
    }
    Ok(())
}

fn evolve_qw(cfg: &RunConfig, hadamard: bool, stdout: &mut dyn Write) -> CliResult<()> {
    require_float_mode(cfg, "the quantum walk")?;
    let coin = cfg.unitary_coin(hadamard)?;
    let n = cfg.n.unwrap_or(DEFAULT_STEPS);
    let state = QwState::single_seed(qw::symmetric_initial_state()).evolve(&coin, n);
    let mu: Vec<(i64, f64)> = state.distribution().into_iter().collect();
    let bytes = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut buf = Vec::new();
            io::write_mu_csv(&mut buf, n, &mu)?;
            buf
        }
        Format::Json => {
            let cells: Map<String, Value> =
                mu.iter().map(|(k, m)| (k.to_string(), json!(m))).collect();
            json_bytes(&json!({ "n": n, "mu": Value::Object(cells) }))
        }
    };
    emit(&cfg.out, &bytes, stdout)
}

fn weak_limit(cfg: &RunConfig, hadamard: bool, stdout: &mut dyn Write) -> CliResult<()> {
    require_float_mode(cfg, "the quantum walk")?;
    let coin = cfg.unitary_coin(hadamard)?;
    let n = cfg.n.unwrap_or(DEFAULT_QW_STEPS);
    let grid = qw::uniform_grid(-0.6, 0.6, 0.05);
    let report = qw::weak_limit_check(&coin, &qw::symmetric_initial_state(), n, &grid)?;
    let bytes = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut buf = Vec::new();
            io::write_weak_limit_csv(&mut buf, &report.rows)?;
            buf
        }
        Format::Json => json_bytes(&json!({
            "n": n,
            "sup_discrepancy": report.sup_discrepancy,
            "rows": report.rows.iter().map(|r| json!({
                "u": r.u,
                "empirical_cdf": r.empirical_cdf,
                "limit_cdf": r.limit_cdf,
                "abs_diff": r.abs_diff,
            })).collect::<Vec<_>>(),
        })),
    };
    emit(&cfg.out, &bytes, stdout)
}

fn ud(cfg: &RunConfig, eps: f64, stdout: &mut dyn Write) -> CliResult<()> {
    if cfg.mode == Some(Mode::Float) {
        return Err(CliError::Config(
            "ud compares against an integer coin; use exact mode".into(),
        ));
    }
    let coin: Coin<i64> = cfg.maxplus_coin()?;
    let n = cfg.n.unwrap_or(DEFAULT_STEPS);
    let report = ultradiscretization_check(&coin, eps, n)?;
    let bytes = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => csv_bytes(
            &["n", "k", "row", "col", "soft", "exact", "deviation"],
            report
                .entries
                .iter()
                .map(|e| {
                    vec![
                        n.to_string(),
                        e.k.to_string(),
                        e.row.to_string(),
                        e.col.to_string(),
                        scalar_csv(e.soft),
                        scalar_csv(e.exact),
                        e.deviation.to_string(),
                    ]
                })
                .collect(),
        )?,
        Format::Json => json_bytes(&json!({
            "n": n,
            "epsilon": eps,
            "bound": report.bound(),
            "max_deviation": report.max_deviation,
            "within_bound": report.within_bound(),
            "entries": report.entries.iter().map(|e| json!({
                "k": e.k,
                "row": e.row,
                "col": e.col,
                "soft": scalar_to_json(e.soft),
                "exact": scalar_to_json(e.exact),
                "deviation": e.deviation,
            })).collect::<Vec<_>>(),
        })),
    };
    emit(&cfg.out, &bytes, stdout)
}

fn verify(cfg: &RunConfig, suite: Suite, stdout: &mut dyn Write) -> CliResult<()> {
    let options = VerifyOptions {
        seed: cfg.seed.unwrap_or(DEFAULT_SEED),
        trials: cfg.trials,
        steps: cfg.n,
        radius: cfg.radius,
    };
    let report = run_suite(suite, &options)?;
    emit(&cfg.out, report.to_string().as_bytes(), stdout)?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}
