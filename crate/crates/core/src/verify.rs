//! Randomized and exhaustive verification suites for the walk's closed forms,
//! conserved quantity, window spectrum, product table, ultradiscretization
//! and quantum weak limit.
//!
//! Every suite is driven by a seeded ChaCha8 generator, so a given
//! [`VerifyOptions`] always produces the same report.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::matrix::MaxMatrix;
use crate::qw::{self, UnitaryCoin};
use crate::scalar::{MaxScalar, Numeric};
use crate::ud::ultradiscretization_check;
use crate::walk::coin::{Basis, Coin};
use crate::walk::eigen::{eigen_sum, eigen_sum_closed_form, position_eigen_sum};
use crate::walk::sdm::{positions, sdm_closed_form, sdm_recursive, sdm_recursive_history};
use crate::window::{
    build_window, interior_blocks, local_eigen_equation_holds, stationary_vector,
    window_eigenvector, window_powers, window_spectrum,
};

pub const DEFAULT_SEED: u64 = 7;

/// Integer coin entries are drawn from `-COIN_RANGE..=COIN_RANGE`.
pub const COIN_RANGE: i64 = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Thm31,
    Thm41,
    Thm51,
    Table1,
    Ud,
    WeakLimit,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Thm31,
        Suite::Thm41,
        Suite::Thm51,
        Suite::Table1,
        Suite::Ud,
        Suite::WeakLimit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm31 => "thm3-1",
            Suite::Thm41 => "thm4-1",
            Suite::Thm51 => "thm5-1",
            Suite::Table1 => "table1",
            Suite::Ud => "ud",
            Suite::WeakLimit => "weak-limit",
        }
    }

    pub fn default_trials(self) -> usize {
        match self {
            Suite::Thm31 | Suite::Thm41 => 200,
            Suite::Table1 => 100,
            Suite::Ud => 20,
            Suite::Thm51 => 3,
            Suite::WeakLimit => 1,
        }
    }

    pub fn default_steps(self) -> usize {
        match self {
            Suite::Thm31 => 12,
            Suite::Thm41 => 50,
            Suite::Ud => 8,
            Suite::WeakLimit => 1000,
            Suite::Thm51 | Suite::Table1 => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite {s:?}; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub trials: Option<usize>,
    pub steps: Option<usize>,
    pub radius: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            trials: None,
            steps: None,
            radius: None,
        }
    }
}

/// Outcome of one suite run.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(counterexample());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{}: {status} ({}/{} checks)",
            self.suite,
            self.checks - self.failures.len(),
            self.checks
        )?;
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        for failure in self.failures.iter().take(10) {
            writeln!(f, "  counterexample: {failure}")?;
        }
        if self.failures.len() > 10 {
            writeln!(f, "  ... {} more", self.failures.len() - 10)?;
        }
        Ok(())
    }
}

/// Classes of integer coins with different conserved-quantity behaviour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stratum {
    /// `a + d = 0` and `b + c = 0`.
    ConditionA,
    NegativeDelta,
    /// `Δ = 0` but `a + d ≠ 0`.
    ZeroDeltaNonzeroTrace,
    PositiveDelta,
}

impl Stratum {
    pub const ALL: [Stratum; 4] = [
        Stratum::ConditionA,
        Stratum::NegativeDelta,
        Stratum::ZeroDeltaNonzeroTrace,
        Stratum::PositiveDelta,
    ];

    pub fn of(coin: &Coin<i64>) -> Self {
        let delta = coin.delta();
        if coin.satisfies_condition_a() {
            Stratum::ConditionA
        } else if delta < 0 {
            Stratum::NegativeDelta
        } else if delta == 0 {
            Stratum::ZeroDeltaNonzeroTrace
        } else {
            Stratum::PositiveDelta
        }
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn entry<R: Rng>(rng: &mut R) -> i64 {
    rng.gen_range(-COIN_RANGE..=COIN_RANGE)
}

/// Uniform integer coin with entries in `[-9, 9]`.
pub fn random_coin<R: Rng>(rng: &mut R) -> Coin<i64> {
    Coin::new(entry(rng), entry(rng), entry(rng), entry(rng))
}

/// Uniform coin of the form `(a, b, -b, -a)`.
pub fn random_condition_a_coin<R: Rng>(rng: &mut R) -> Coin<i64> {
    Coin::condition_a(entry(rng), entry(rng))
}

/// Rejection-samples a coin in `[-9, 9]^4` from the given stratum.
pub fn random_coin_in<R: Rng>(rng: &mut R, stratum: Stratum) -> Coin<i64> {
    if stratum == Stratum::ConditionA {
        return random_condition_a_coin(rng);
    }
    loop {
        let coin = if stratum == Stratum::ZeroDeltaNonzeroTrace {
            let (a, b, c) = (entry(rng), entry(rng), entry(rng));
            Coin::new(a, b, c, b + c - a)
        } else {
            random_coin(rng)
        };
        if coin.d.abs() <= COIN_RANGE && Stratum::of(&coin) == stratum {
            return coin;
        }
    }
}

/// `count` coins cycling through the four strata.
pub fn stratified_coins<R: Rng>(rng: &mut R, count: usize) -> Vec<Coin<i64>> {
    (0..count)
        .map(|i| random_coin_in(rng, Stratum::ALL[i % Stratum::ALL.len()]))
        .collect()
}

pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Result<SuiteReport> {
    let trials = options.trials.unwrap_or(suite.default_trials());
    let steps = options.steps.unwrap_or(suite.default_steps());
    let mut rng = seeded_rng(options.seed);
    match suite {
        Suite::Thm31 => closed_form_suite(&mut rng, trials, steps),
        Suite::Thm41 => conservation_suite(&mut rng, trials, steps),
        Suite::Thm51 => window_suite(&mut rng, trials, options.radius.unwrap_or(20)),
        Suite::Table1 => Ok(table_suite(&mut rng, trials)),
        Suite::Ud => ud_suite(&mut rng, trials, steps),
        Suite::WeakLimit => weak_limit_suite(steps),
    }
}

fn closed_form_suite<R: Rng>(rng: &mut R, trials: usize, max_n: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Thm31);
    for _ in 0..trials {
        let coin = random_coin(rng);
        for (n, grid) in sdm_recursive_history(&coin, max_n).iter().enumerate() {
            for k in positions(n) {
                let closed = sdm_closed_form(&coin, n, k)?;
                let recursive = grid
                    .get(k)
                    .cloned()
                    .unwrap_or_else(|| MaxMatrix::epsilon(2, 2));
                report.check(closed == recursive, || format!("coin {coin}, n={n}, k={k}"));
            }
        }
    }
    report.notes.push(format!(
        "{trials} coins in [-{COIN_RANGE},{COIN_RANGE}]^4, n <= {max_n}, closed form vs recursion"
    ));
    Ok(report)
}

fn is_constant<T: PartialEq>(values: &[T]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

fn conservation_suite<R: Rng>(rng: &mut R, trials: usize, max_n: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Thm41);
    let mut classified = 0;
    for coin in stratified_coins(rng, trials) {
        let condition_a = coin.satisfies_condition_a();
        let sums: Vec<_> = (1..=max_n).map(|n| eigen_sum(&coin, n)).collect();
        for (n, sum) in (1..=max_n).zip(&sums) {
            let expected = eigen_sum_closed_form(&coin, n);
            report.check(*sum == expected, || {
                format!("coin {coin}, n={n}: eigen sum {sum} but closed form {expected}")
            });
        }
        let positional: Vec<_> = (1..=max_n).map(|n| position_eigen_sum(&coin, n)).collect();
        let conserved = max_n < 2 || is_constant(&sums);
        let ok = conserved == condition_a
            && (max_n < 2 || is_constant(&positional) == condition_a)
            && (!condition_a || sums.iter().all(|s| s.is_zero_value()));
        if ok {
            classified += 1;
        }
        report.check(ok, || {
            format!(
                "coin {coin} ({:?}): conserved={conserved}, condition A={condition_a}",
                Stratum::of(&coin)
            )
        });
    }
    report.notes.push(format!(
        "{classified}/{trials} coins classified correctly, n = 1..={max_n}"
    ));
    Ok(report)
}

fn window_suite<R: Rng>(rng: &mut R, trials: usize, radius: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Thm51);
    let r = radius as i64;
    for _ in 0..trials {
        let coin = random_condition_a_coin(rng);
        let spectrum = window_spectrum(&coin, radius)?;
        report.check(spectrum == MaxScalar::e(), || {
            format!("coin {coin}, K={radius}: spectrum {spectrum}")
        });
        for k in -r + 1..r {
            report.check(local_eigen_equation_holds(&coin, k), || {
                format!("coin {coin}, k={k}: stationary profile not fixed")
            });
        }
        let eigenvector = window_eigenvector(&coin, radius)?;
        let stationary = stationary_vector(&coin, radius)?.to_mean();
        report.check(
            eigenvector
                .restrict(radius - 1)
                .is_proportional_to(&stationary.restrict(radius - 1)),
            || format!("coin {coin}, K={radius}: eigenvector not proportional to the stationary vector"),
        );
        let window = build_window(&coin, radius)?;
        let powers = window_powers(&window, radius)?;
        let history = sdm_recursive_history(&coin, radius);
        for (n, power) in powers.iter().enumerate() {
            for ((i, j), block) in interior_blocks(power, radius, n) {
                let expected = history[n]
                    .get(i - j)
                    .cloned()
                    .unwrap_or_else(|| MaxMatrix::epsilon(2, 2));
                report.check(block == expected, || {
                    format!("coin {coin}, K={radius}, n={n}, block ({i},{j})")
                });
            }
        }
    }
    report.notes.push(format!(
        "{trials} condition-A coins, K={radius}: spectrum 0, stationarity on |k| < K, eigenvector, interior power blocks"
    ));
    Ok(report)
}

fn table_suite<R: Rng>(rng: &mut R, trials: usize) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Table1);
    let mut worked = 0;
    for _ in 0..trials {
        let coin = random_coin(rng);
        for x in Basis::ALL {
            for y in Basis::ALL {
                let product = coin.basis(x).otimes(&coin.basis(y)).expect("2x2 product");
                let (coeff, basis) = coin.product_rule(x, y);
                let tabulated = coin.basis(basis).scale(MaxScalar::Finite(coeff));
                report.check(product == tabulated, || {
                    format!("coin {coin}: {x}{y} = {product} but table gives {coeff} {basis}")
                });
            }
        }
        let Coin { a, b, c, d } = coin;
        let f = MaxScalar::Finite;
        let expected = MaxMatrix::from_rows(vec![
            vec![f(b + c + d), f(b + 2 * d)],
            vec![f((b + 2 * c).max(a + c + d)), f(b + c + d)],
        ])
        .expect("2x2");
        let actual = sdm_recursive(&coin, 3).get(1).cloned();
        if actual.as_ref() == Some(&expected) {
            worked += 1;
        }
        report.check(actual.as_ref() == Some(&expected), || {
            format!("coin {coin}: A_1^3 differs from the worked example")
        });
    }
    report.notes.push(format!(
        "{}/{} products over {trials} coins; A_1^3 worked example {worked}/{trials}",
        16 * trials,
        16 * trials
    ));
    report
}

fn ud_suite<R: Rng>(rng: &mut R, trials: usize, max_n: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Ud);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let coin = random_condition_a_coin(rng);
        for n in 1..=max_n {
            let coarse = ultradiscretization_check(&coin, 1e-2, n)?;
            let fine = ultradiscretization_check(&coin, 1e-3, n)?;
            for r in [&coarse, &fine] {
                worst = worst.max(r.max_deviation / r.bound());
                report.check(r.within_bound(), || {
                    format!(
                        "coin {coin}, n={n}, ε={}: deviation {} exceeds {}",
                        r.eps,
                        r.max_deviation,
                        r.bound()
                    )
                });
            }
            let shrinks = fine
                .entries
                .iter()
                .zip(&coarse.entries)
                .all(|(f, c)| f.deviation <= c.deviation)
                && (coarse.max_deviation == 0.0 || fine.max_deviation < coarse.max_deviation);
            report.check(shrinks, || {
                format!("coin {coin}, n={n}: deviation does not shrink with ε")
            });
        }
    }
    report.notes.push(format!(
        "{trials} condition-A coins, n = 1..={max_n}, ε in {{1e-2, 1e-3}}; worst deviation / bound = {worst:.4}"
    ));
    Ok(report)
}

/// Sup-discrepancy allowed between the rescaled CDF and its limit on `|u| <= 0.6`.
pub const WEAK_LIMIT_TOLERANCE: f64 = 0.05;

fn weak_limit_suite(n: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::WeakLimit);
    let coin = UnitaryCoin::hadamard();
    let abs_a = coin.a.norm();
    let density = qw::konno_density(0.0, abs_a)?;
    report.check((density - 1.0 / PI).abs() <= 1e-12, || {
        format!("f_K(0) = {density}, expected 1/π")
    });
    let grid = qw::uniform_grid(-0.6, 0.6, 0.05);
    let result = qw::weak_limit_check(&coin, &qw::symmetric_initial_state(), n, &grid)?;
    report.check(result.sup_discrepancy <= WEAK_LIMIT_TOLERANCE, || {
        format!(
            "n={n}: sup discrepancy {} > {WEAK_LIMIT_TOLERANCE}",
            result.sup_discrepancy
        )
    });
    report.notes.push(format!(
        "Hadamard, n={n}, u in [-0.6, 0.6]: sup discrepancy {:.5}",
        result.sup_discrepancy
    ));
    Ok(report)
}
