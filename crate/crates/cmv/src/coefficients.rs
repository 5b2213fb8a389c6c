//! Coefficient families and assumption validators.
//!
//! A coefficient set supplies the four fields of the dynamics at a point:
//! drift `b(t, x, y, mu)` (d-vector), idiosyncratic diffusion `sigma` (d x d),
//! common-noise loading `rho` (d-vector, the observation is scalar), and the
//! sensor `h` (scalar). `y` enters as the discrete observation prefix, so both
//! state dependence and genuine path dependence are expressible; `mu` is the
//! current conditional law.
//!
//! Mean-field evaluation is two-phase: [`CoefficientSet::prepare`] captures
//! the law functionals once per step (the mean, for the built-in families) and
//! the returned [`Prepared`] evaluates per particle without touching the
//! measure again. This keeps a step linear in the particle count.
//!
//! Built-in families:
//!
//! * `constant`: all four fields constant; covers the degenerate and
//!   closed-form corner cases.
//! * `common_noise`: linear mean-field drift, `h = 0` identically. With no
//!   sensor the weights never move and the unnormalized and normalized flows
//!   coincide.
//! * `linear_gaussian`: `b = a x`, constant diffusions, `h = c x_1`. Exact
//!   filter available; linear growth violates the boundedness assumptions, so
//!   the family is flagged `assumption_violating` and meant for oracle runs.
//! * `mean_field_linear`: adds `a_bar <mu, x>` to the linear drift.
//! * `bounded_smooth`: tanh-saturated drift, mean-field term and sensor;
//!   honest bounds and Lipschitz constants, the general-theory workhorse.
//!
//! Declared bounds are trusted by the fast paths but verified by the
//! probe-based validators [`check_lipschitz`] and [`check_nondegeneracy`].

use crate::error::{Error, Result};
use crate::measures::{wasserstein1, ProbabilityAtomMeasure, WeightedAtomMeasure};
use crate::rng::{substream, StreamPurpose};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use std::sync::Arc;

/// How the coefficients read the observation argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YDependence {
    /// Only the current value `Y_t`.
    State,
    /// The whole discrete prefix `(Y_s)_{s <= t}`.
    PathPrefix,
}

/// How the coefficients read the measure argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuDependence {
    None,
    /// Through functionals of the current conditional law.
    State,
}

/// Declared envelope: trusted by consumers, verified by validators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeclaredBounds {
    /// Joint Lipschitz constant: `|phi(t,x,y,mu) - phi(t,x',y,mu')| <=
    /// c_lip (|x - x'| + W1(mu, mu'))` for each coefficient field.
    pub c_lip: f64,
    /// Nondegeneracy floor: smallest eigenvalue of `sigma sigma^T - rho rho^T`
    /// is declared to stay at or above this.
    pub sigma0: f64,
    pub sup_b: f64,
    pub sup_sigma: f64,
    pub sup_rho: f64,
    pub sup_h: f64,
}

/// Coefficient values at one evaluation point.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffValues {
    pub b: Vec<f64>,
    /// Row-major d x d.
    pub sigma: Vec<f64>,
    pub rho: Vec<f64>,
    pub h: f64,
}

impl CoeffValues {
    pub fn zeros(dim: usize) -> Self {
        CoeffValues {
            b: vec![0.0; dim],
            sigma: vec![0.0; dim * dim],
            rho: vec![0.0; dim],
            h: 0.0,
        }
    }
}

/// Discrete observation prefix `(t_k, Y_{t_k})_{k <= current}`; the last entry
/// is the current state.
#[derive(Debug, Clone, Copy)]
pub struct YPrefix<'a> {
    times: &'a [f64],
    values: &'a [f64],
}

impl<'a> YPrefix<'a> {
    pub fn new(times: &'a [f64], values: &'a [f64]) -> Result<Self> {
        if times.is_empty() {
            return Err(Error::param("y_prefix", "must contain at least one point"));
        }
        if times.len() != values.len() {
            return Err(Error::dim("y_prefix", times.len(), values.len()));
        }
        Ok(YPrefix { times, values })
    }

    /// Current observation value `Y_t`.
    pub fn state(&self) -> f64 {
        *self.values.last().expect("prefix is non-empty")
    }

    pub fn t(&self) -> f64 {
        *self.times.last().expect("prefix is non-empty")
    }

    pub fn times(&self) -> &'a [f64] {
        self.times
    }

    pub fn values(&self) -> &'a [f64] {
        self.values
    }

    /// Running trapezoid integral of the prefix, a convenient smooth path
    /// functional for path-dependent families.
    pub fn integral(&self) -> f64 {
        let mut acc = 0.0;
        for k in 1..self.times.len() {
            acc +=
                0.5 * (self.values[k] + self.values[k - 1]) * (self.times[k] - self.times[k - 1]);
        }
        acc
    }
}

/// User-supplied coefficient callback for custom (possibly path-dependent)
/// families. Called once per particle per step; anything that needs the
/// measure should precompute its functionals outside if performance matters.
pub trait CoefficientFn: Send + Sync {
    fn eval(
        &self,
        t: f64,
        x: &[f64],
        y: &YPrefix,
        mu: Option<&ProbabilityAtomMeasure>,
        out: &mut CoeffValues,
    ) -> Result<()>;
}

#[derive(Clone)]
enum Family {
    Constant {
        b: Vec<f64>,
        sigma_diag: Vec<f64>,
        rho: Vec<f64>,
        h: f64,
    },
    CommonNoise {
        a: f64,
        a_bar: f64,
        sigma: f64,
        rho_1: f64,
    },
    LinearGaussian {
        a: f64,
        sigma: f64,
        rho_1: f64,
        c: f64,
    },
    MeanFieldLinear {
        a: f64,
        a_bar: f64,
        sigma: f64,
        rho_1: f64,
        c: f64,
    },
    BoundedSmooth {
        drift_gain: f64,
        mean_gain: f64,
        sigma: f64,
        rho_1: f64,
        obs_gain: f64,
    },
    Custom(Arc<dyn CoefficientFn>),
}

impl std::fmt::Debug for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Constant { .. } => write!(f, "Constant"),
            Family::CommonNoise { .. } => write!(f, "CommonNoise"),
            Family::LinearGaussian { .. } => write!(f, "LinearGaussian"),
            Family::MeanFieldLinear { .. } => write!(f, "MeanFieldLinear"),
            Family::BoundedSmooth { .. } => write!(f, "BoundedSmooth"),
            Family::Custom(_) => write!(f, "Custom"),
        }
    }
}

/// A complete coefficient set: the four fields plus their dependence
/// declarations and declared bounds.
#[derive(Debug, Clone)]
pub struct CoefficientSet {
    family: Family,
    dim: usize,
    y_dependence: YDependence,
    mu_dependence: MuDependence,
    bounds: DeclaredBounds,
    assumption_violating: bool,
    /// Envelope radius used to turn unbounded (linear) fields into declared
    /// effective sup-norms; irrelevant for genuinely bounded families.
    state_range: f64,
}

const DEFAULT_STATE_RANGE: f64 = 6.0;

impl CoefficientSet {
    pub fn constant(b: Vec<f64>, sigma_diag: Vec<f64>, rho: Vec<f64>, h: f64) -> Result<Self> {
        let dim = b.len();
        if dim == 0 {
            return Err(Error::param("b", "dimension must be at least 1"));
        }
        if sigma_diag.len() != dim || rho.len() != dim {
            return Err(Error::dim(
                "constant coefficients",
                dim,
                sigma_diag.len().max(rho.len()),
            ));
        }
        for v in b.iter().chain(&sigma_diag).chain(&rho).chain([&h]) {
            if !v.is_finite() {
                return Err(Error::param("constant coefficients", "must be finite"));
            }
        }
        let family = Family::Constant {
            b,
            sigma_diag,
            rho,
            h,
        };
        Ok(Self::assemble(
            family,
            dim,
            YDependence::State,
            MuDependence::None,
            false,
            DEFAULT_STATE_RANGE,
        ))
    }

    pub fn common_noise(dim: usize, a: f64, a_bar: f64, sigma: f64, rho: f64) -> Result<Self> {
        check_dim(dim)?;
        let family = Family::CommonNoise {
            a,
            a_bar,
            sigma,
            rho_1: rho,
        };
        let mu_dep = if a_bar == 0.0 {
            MuDependence::None
        } else {
            MuDependence::State
        };
        Ok(Self::assemble(
            family,
            dim,
            YDependence::State,
            mu_dep,
            true,
            DEFAULT_STATE_RANGE,
        ))
    }

    pub fn linear_gaussian(dim: usize, a: f64, sigma: f64, rho: f64, c: f64) -> Result<Self> {
        check_dim(dim)?;
        let family = Family::LinearGaussian {
            a,
            sigma,
            rho_1: rho,
            c,
        };
        Ok(Self::assemble(
            family,
            dim,
            YDependence::State,
            MuDependence::None,
            true,
            DEFAULT_STATE_RANGE,
        ))
    }

    pub fn mean_field_linear(
        dim: usize,
        a: f64,
        a_bar: f64,
        sigma: f64,
        rho: f64,
        c: f64,
    ) -> Result<Self> {
        check_dim(dim)?;
        let family = Family::MeanFieldLinear {
            a,
            a_bar,
            sigma,
            rho_1: rho,
            c,
        };
        Ok(Self::assemble(
            family,
            dim,
            YDependence::State,
            MuDependence::State,
            true,
            DEFAULT_STATE_RANGE,
        ))
    }

    pub fn bounded_smooth(
        dim: usize,
        drift_gain: f64,
        mean_gain: f64,
        sigma: f64,
        rho: f64,
        obs_gain: f64,
    ) -> Result<Self> {
        check_dim(dim)?;
        let family = Family::BoundedSmooth {
            drift_gain,
            mean_gain,
            sigma,
            rho_1: rho,
            obs_gain,
        };
        let mu_dep = if mean_gain == 0.0 {
            MuDependence::None
        } else {
            MuDependence::State
        };
        Ok(Self::assemble(
            family,
            dim,
            YDependence::State,
            mu_dep,
            false,
            DEFAULT_STATE_RANGE,
        ))
    }

    /// Wrap a user callback. The caller declares the dependence structure and
    /// bounds; validators can be used to sanity-check them.
    pub fn custom(
        dim: usize,
        f: Arc<dyn CoefficientFn>,
        y_dependence: YDependence,
        mu_dependence: MuDependence,
        bounds: DeclaredBounds,
        assumption_violating: bool,
    ) -> Result<Self> {
        check_dim(dim)?;
        Ok(CoefficientSet {
            family: Family::Custom(f),
            dim,
            y_dependence,
            mu_dependence,
            bounds,
            assumption_violating,
            state_range: DEFAULT_STATE_RANGE,
        })
    }

    fn assemble(
        family: Family,
        dim: usize,
        y_dependence: YDependence,
        mu_dependence: MuDependence,
        assumption_violating: bool,
        state_range: f64,
    ) -> Self {
        let bounds = default_bounds(&family, dim, state_range);
        CoefficientSet {
            family,
            dim,
            y_dependence,
            mu_dependence,
            bounds,
            assumption_violating,
            state_range,
        }
    }

    /// Override the declared Lipschitz constant (for validator exercises and
    /// deliberately mis-declared configurations).
    pub fn with_declared_c_lip(mut self, c_lip: f64) -> Self {
        self.bounds.c_lip = c_lip;
        self
    }

    /// Override the declared nondegeneracy floor.
    pub fn with_declared_sigma0(mut self, sigma0: f64) -> Self {
        self.bounds.sigma0 = sigma0;
        self
    }

    /// Change the envelope radius for the effective sup-norms of unbounded
    /// families and recompute the declared bounds.
    pub fn with_state_range(mut self, range: f64) -> Result<Self> {
        if !(range > 0.0) || !range.is_finite() {
            return Err(Error::param("state_range", "must be finite positive"));
        }
        self.state_range = range;
        if !matches!(self.family, Family::Custom(_)) {
            self.bounds = default_bounds(&self.family, self.dim, range);
        }
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn y_dependence(&self) -> YDependence {
        self.y_dependence
    }

    pub fn mu_dependence(&self) -> MuDependence {
        self.mu_dependence
    }

    pub fn bounds(&self) -> &DeclaredBounds {
        &self.bounds
    }

    /// True for families admitted only as oracles (unbounded fields).
    pub fn assumption_violating(&self) -> bool {
        self.assumption_violating
    }

    /// Capture the law functionals for one evaluation step. `mu` is required
    /// when the family declares measure dependence.
    pub fn prepare<'a>(
        &'a self,
        t: f64,
        y: YPrefix<'a>,
        mu: Option<&'a ProbabilityAtomMeasure>,
    ) -> Result<Prepared<'a>> {
        if !t.is_finite() {
            return Err(Error::param("t", "must be finite"));
        }
        if self.mu_dependence == MuDependence::State && mu.is_none() {
            return Err(Error::param("mu", "family depends on the conditional law"));
        }
        if let Some(m) = mu {
            if m.dim() != self.dim {
                return Err(Error::dim("prepare mu", self.dim, m.dim()));
            }
        }
        let mut mean = Vec::new();
        let mut tanh_mean = Vec::new();
        if self.mu_dependence == MuDependence::State {
            let m = mu.expect("checked above");
            mean = m.mean();
            if matches!(self.family, Family::BoundedSmooth { .. }) {
                tanh_mean = mean.iter().map(|v| v.tanh()).collect();
            }
        }
        Ok(Prepared {
            set: self,
            t,
            y,
            mu,
            mean,
            tanh_mean,
        })
    }

    /// One-shot evaluation at a single point.
    pub fn eval(
        &self,
        t: f64,
        x: &[f64],
        y: YPrefix,
        mu: Option<&ProbabilityAtomMeasure>,
    ) -> Result<CoeffValues> {
        let prepared = self.prepare(t, y, mu)?;
        let mut out = CoeffValues::zeros(self.dim);
        prepared.eval_into(x, &mut out)?;
        Ok(out)
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        Err(Error::param("dim", "must be at least 1"))
    } else {
        Ok(())
    }
}

fn default_bounds(family: &Family, dim: usize, range: f64) -> DeclaredBounds {
    match family {
        Family::Constant {
            b,
            sigma_diag,
            rho,
            h,
        } => {
            let mut ssr = vec![0.0; dim * dim];
            for i in 0..dim {
                ssr[i * dim + i] = sigma_diag[i] * sigma_diag[i];
            }
            for i in 0..dim {
                for j in 0..dim {
                    ssr[i * dim + j] -= rho[i] * rho[j];
                }
            }
            DeclaredBounds {
                c_lip: 0.0,
                sigma0: sym_min_eig(&ssr, dim),
                sup_b: norm2(b),
                sup_sigma: sigma_diag.iter().fold(0.0f64, |m, v| m.max(v.abs())),
                sup_rho: norm2(rho),
                sup_h: h.abs(),
            }
        }
        Family::CommonNoise {
            a,
            a_bar,
            sigma,
            rho_1,
        } => linear_bounds(*a, *a_bar, *sigma, *rho_1, 0.0, range),
        Family::LinearGaussian { a, sigma, rho_1, c } => {
            linear_bounds(*a, 0.0, *sigma, *rho_1, *c, range)
        }
        Family::MeanFieldLinear {
            a,
            a_bar,
            sigma,
            rho_1,
            c,
        } => linear_bounds(*a, *a_bar, *sigma, *rho_1, *c, range),
        Family::BoundedSmooth {
            drift_gain,
            mean_gain,
            sigma,
            rho_1,
            obs_gain,
        } => DeclaredBounds {
            c_lip: drift_gain.abs().max(mean_gain.abs()).max(obs_gain.abs()),
            sigma0: sigma * sigma - rho_1 * rho_1,
            sup_b: (dim as f64).sqrt() * (drift_gain.abs() + mean_gain.abs()),
            sup_sigma: sigma.abs(),
            sup_rho: rho_1.abs(),
            sup_h: obs_gain.abs(),
        },
        Family::Custom(_) => DeclaredBounds {
            c_lip: f64::INFINITY,
            sigma0: 0.0,
            sup_b: f64::INFINITY,
            sup_sigma: f64::INFINITY,
            sup_rho: f64::INFINITY,
            sup_h: f64::INFINITY,
        },
    }
}

fn linear_bounds(a: f64, a_bar: f64, sigma: f64, rho_1: f64, c: f64, range: f64) -> DeclaredBounds {
    DeclaredBounds {
        c_lip: a.abs().max(a_bar.abs()).max(c.abs()),
        sigma0: sigma * sigma - rho_1 * rho_1,
        sup_b: (a.abs() + a_bar.abs()) * range,
        sup_sigma: sigma.abs(),
        sup_rho: rho_1.abs(),
        sup_h: c.abs() * range,
    }
}

fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// A coefficient set with its per-step law functionals captured; evaluates at
/// particle positions without re-reading the measure.
pub struct Prepared<'a> {
    set: &'a CoefficientSet,
    t: f64,
    y: YPrefix<'a>,
    mu: Option<&'a ProbabilityAtomMeasure>,
    mean: Vec<f64>,
    tanh_mean: Vec<f64>,
}

impl Prepared<'_> {
    pub fn eval_into(&self, x: &[f64], out: &mut CoeffValues) -> Result<()> {
        let d = self.set.dim;
        if x.len() != d {
            return Err(Error::dim("eval x", d, x.len()));
        }
        debug_assert_eq!(out.b.len(), d);
        debug_assert_eq!(out.sigma.len(), d * d);
        debug_assert_eq!(out.rho.len(), d);

        match &self.set.family {
            Family::Constant {
                b,
                sigma_diag,
                rho,
                h,
            } => {
                out.b.copy_from_slice(b);
                out.sigma.fill(0.0);
                for i in 0..d {
                    out.sigma[i * d + i] = sigma_diag[i];
                }
                out.rho.copy_from_slice(rho);
                out.h = *h;
            }
            Family::CommonNoise {
                a,
                a_bar,
                sigma,
                rho_1,
            } => {
                self.linear_fields(x, *a, *a_bar, *sigma, *rho_1, 0.0, out);
            }
            Family::LinearGaussian { a, sigma, rho_1, c } => {
                self.linear_fields(x, *a, 0.0, *sigma, *rho_1, *c, out);
            }
            Family::MeanFieldLinear {
                a,
                a_bar,
                sigma,
                rho_1,
                c,
            } => {
                self.linear_fields(x, *a, *a_bar, *sigma, *rho_1, *c, out);
            }
            Family::BoundedSmooth {
                drift_gain,
                mean_gain,
                sigma,
                rho_1,
                obs_gain,
            } => {
                for k in 0..d {
                    let mf = if self.tanh_mean.is_empty() {
                        0.0
                    } else {
                        self.tanh_mean[k]
                    };
                    out.b[k] = drift_gain * x[k].tanh() + mean_gain * mf;
                }
                out.sigma.fill(0.0);
                for i in 0..d {
                    out.sigma[i * d + i] = *sigma;
                }
                out.rho.fill(0.0);
                out.rho[0] = *rho_1;
                out.h = obs_gain * x[0].tanh();
            }
            Family::Custom(f) => {
                f.eval(self.t, x, &self.y, self.mu, out)?;
            }
        }

        // Finite-value contract: a silent NaN here would poison every
        // downstream sum, so fail with the offending coefficient.
        for (which, bad) in [
            ("b", out.b.iter().any(|v| !v.is_finite())),
            ("sigma", out.sigma.iter().any(|v| !v.is_finite())),
            ("rho", out.rho.iter().any(|v| !v.is_finite())),
            ("h", !out.h.is_finite()),
        ] {
            if bad {
                return Err(Error::Coefficient {
                    which,
                    t: self.t,
                    detail: format!("at x = {x:?}"),
                });
            }
        }
        Ok(())
    }

    pub fn eval(&self, x: &[f64]) -> Result<CoeffValues> {
        let mut out = CoeffValues::zeros(self.set.dim);
        self.eval_into(x, &mut out)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn linear_fields(
        &self,
        x: &[f64],
        a: f64,
        a_bar: f64,
        sigma: f64,
        rho_1: f64,
        c: f64,
        out: &mut CoeffValues,
    ) {
        let d = self.set.dim;
        for k in 0..d {
            let mf = if self.mean.is_empty() {
                0.0
            } else {
                self.mean[k]
            };
            out.b[k] = a * x[k] + a_bar * mf;
        }
        out.sigma.fill(0.0);
        for i in 0..d {
            out.sigma[i * d + i] = sigma;
        }
        out.rho.fill(0.0);
        out.rho[0] = rho_1;
        out.h = c * x[0];
    }
}

/// Piecewise-constant (cadlag) path of conditional laws on a time grid; the
/// frozen input for decoupled reruns.
#[derive(Debug, Clone)]
pub struct FrozenMuPath {
    times: Vec<f64>,
    measures: Vec<ProbabilityAtomMeasure>,
}

impl FrozenMuPath {
    pub fn new(times: Vec<f64>, measures: Vec<ProbabilityAtomMeasure>) -> Result<Self> {
        if times.len() != measures.len() {
            return Err(Error::dim("frozen path", times.len(), measures.len()));
        }
        if times.is_empty() {
            return Err(Error::param(
                "times",
                "frozen path needs at least one point",
            ));
        }
        if times.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::grid(
                "frozen path times must be strictly increasing".to_string(),
            ));
        }
        let dim = measures[0].dim();
        if measures.iter().any(|m| m.dim() != dim) {
            return Err(Error::grid(
                "frozen path measures must share one dimension".to_string(),
            ));
        }
        Ok(FrozenMuPath { times, measures })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.measures[0].dim()
    }

    /// Value at time `t` under the piecewise-constant rule: the measure at
    /// the last grid point `<= t` (with a small tolerance for grid round-off).
    pub fn at(&self, t: f64) -> Result<&ProbabilityAtomMeasure> {
        let tol = 1e-9;
        if t < self.times[0] - tol {
            return Err(Error::grid(format!(
                "queried frozen path at t={t} before its start {}",
                self.times[0]
            )));
        }
        let idx = self.times.partition_point(|s| *s <= t + tol);
        Ok(&self.measures[idx.saturating_sub(1).min(self.measures.len() - 1)])
    }
}

/// Probe-based Lipschitz validation report.
#[derive(Debug, Clone)]
pub struct LipschitzReport {
    pub declared: f64,
    pub max_ratio: f64,
    pub pass: bool,
    /// True when the W1 in the denominator is the sliced estimate (d > 1).
    pub approximate_w1: bool,
    pub worst: Option<LipschitzWitness>,
}

/// The probe pair realizing the worst ratio.
#[derive(Debug, Clone)]
pub struct LipschitzWitness {
    pub which: &'static str,
    pub t: f64,
    pub x1: Vec<f64>,
    pub x2: Vec<f64>,
    pub ratio: f64,
}

/// Sample probe pairs `(t, x, mu)`, `(t, x', mu')` and compare each
/// coefficient field's increment against `c_lip (|x - x'| + W1(mu, mu'))`.
/// Passes when the worst observed ratio is within `declared * (1 + tolerance)`.
pub fn check_lipschitz(
    coeffs: &CoefficientSet,
    n_probes: usize,
    seed: u64,
    tolerance: f64,
) -> Result<LipschitzReport> {
    if n_probes == 0 {
        return Err(Error::param("n_probes", "must be at least 1"));
    }
    if !(tolerance >= 0.0) {
        return Err(Error::param("tolerance", "must be nonnegative"));
    }
    let d = coeffs.dim();
    let mut rng = substream(seed, 0, StreamPurpose::Probe, 0);
    let mut max_ratio = 0.0f64;
    let mut worst = None;
    let mut approximate = false;

    let scale = 2.0;
    let atoms = 8;
    for _ in 0..n_probes {
        let t: f64 = rng.gen_range(0.0..1.0);
        let y_t = [t];
        let y_v = [scale * rng.gen_range(-1.0..1.0)];
        let y = YPrefix::new(&y_t, &y_v)?;
        let sample_x = |rng: &mut rand_chacha::ChaCha12Rng| -> Vec<f64> {
            (0..d)
                .map(|_| {
                    let z: f64 = StandardNormal.sample(rng);
                    scale * z
                })
                .collect()
        };
        let sample_mu = |rng: &mut rand_chacha::ChaCha12Rng| -> Result<ProbabilityAtomMeasure> {
            let pos: Vec<f64> = (0..atoms * d)
                .map(|_| {
                    let z: f64 = StandardNormal.sample(rng);
                    scale * z
                })
                .collect();
            let mut w: Vec<f64> = (0..atoms).map(|_| rng.gen_range(0.1..1.0)).collect();
            let total: f64 = w.iter().sum();
            for v in w.iter_mut() {
                *v /= total;
            }
            ProbabilityAtomMeasure::new(WeightedAtomMeasure::from_flat(d, pos, w)?)
        };

        let x1 = sample_x(&mut rng);
        let x2 = sample_x(&mut rng);
        let mu1 = sample_mu(&mut rng)?;
        let mu2 = sample_mu(&mut rng)?;

        let w1 = wasserstein1(&mu1, &mu2)?;
        approximate |= !w1.exact;
        let dx: f64 = x1
            .iter()
            .zip(&x2)
            .map(|(p, q)| (p - q) * (p - q))
            .sum::<f64>()
            .sqrt();
        let denom = dx + w1.value;
        if denom < 1e-12 {
            continue;
        }

        let v1 = coeffs.eval(t, &x1, y, Some(&mu1))?;
        let v2 = coeffs.eval(t, &x2, y, Some(&mu2))?;
        let gaps: [(&'static str, f64); 4] = [
            ("b", diff_norm(&v1.b, &v2.b)),
            ("sigma", diff_norm(&v1.sigma, &v2.sigma)),
            ("rho", diff_norm(&v1.rho, &v2.rho)),
            ("h", (v1.h - v2.h).abs()),
        ];
        for (which, gap) in gaps {
            let ratio = gap / denom;
            if ratio > max_ratio {
                max_ratio = ratio;
                worst = Some(LipschitzWitness {
                    which,
                    t,
                    x1: x1.clone(),
                    x2: x2.clone(),
                    ratio,
                });
            }
        }
    }

    let declared = coeffs.bounds().c_lip;
    Ok(LipschitzReport {
        declared,
        max_ratio,
        pass: max_ratio <= declared * (1.0 + tolerance),
        approximate_w1: approximate,
        worst,
    })
}

fn diff_norm(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(p, q)| (p - q) * (p - q))
        .sum::<f64>()
        .sqrt()
}

/// Probe-based nondegeneracy validation report.
#[derive(Debug, Clone)]
pub struct NondegeneracyReport {
    pub declared_sigma0: f64,
    pub min_eig: f64,
    pub pass: bool,
    pub worst: Option<(f64, Vec<f64>)>,
}

/// Sample probe points and check that the smallest eigenvalue of
/// `sigma sigma^T - rho rho^T` stays at or above the declared floor.
pub fn check_nondegeneracy(
    coeffs: &CoefficientSet,
    n_probes: usize,
    seed: u64,
) -> Result<NondegeneracyReport> {
    if n_probes == 0 {
        return Err(Error::param("n_probes", "must be at least 1"));
    }
    let d = coeffs.dim();
    let mut rng = substream(seed, 0, StreamPurpose::Probe, 1);
    let mut min_eig = f64::INFINITY;
    let mut worst = None;
    for _ in 0..n_probes {
        let t: f64 = rng.gen_range(0.0..1.0);
        let y_t = [t];
        let y_val: f64 = StandardNormal.sample(&mut rng);
        let y_v = [2.0 * y_val];
        let y = YPrefix::new(&y_t, &y_v)?;
        let x: Vec<f64> = (0..d)
            .map(|_| {
                let z: f64 = StandardNormal.sample(&mut rng);
                2.0 * z
            })
            .collect();
        let mu = ProbabilityAtomMeasure::dirac(x.clone())?;
        let v = coeffs.eval(t, &x, y, Some(&mu))?;
        // sigma sigma^T - rho rho^T, row-major symmetric
        let mut m = vec![0.0; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0.0;
                for k in 0..d {
                    acc += v.sigma[i * d + k] * v.sigma[j * d + k];
                }
                m[i * d + j] = acc - v.rho[i] * v.rho[j];
            }
        }
        let lam = sym_min_eig(&m, d);
        if lam < min_eig {
            min_eig = lam;
            worst = Some((t, x));
        }
    }
    let declared = coeffs.bounds().sigma0;
    Ok(NondegeneracyReport {
        declared_sigma0: declared,
        min_eig,
        pass: min_eig >= declared - 1e-12,
        worst,
    })
}

/// Smallest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
/// Dimensions here are tiny (state dimension or basis truncation), so
/// simplicity wins.
pub(crate) fn sym_min_eig(a: &[f64], d: usize) -> f64 {
    if d == 1 {
        return a[0];
    }
    let mut m = a.to_vec();
    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for i in 0..d {
            for j in (i + 1)..d {
                off += m[i * d + j] * m[i * d + j];
            }
        }
        let scale: f64 = (0..d).map(|i| m[i * d + i].abs()).fold(1e-300, f64::max);
        if off.sqrt() <= 1e-14 * scale {
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                let apq = m[p * d + q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = m[p * d + p];
                let aqq = m[q * d + q];
                let theta = 0.5 * (aqq - app) / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..d {
                    let mkp = m[k * d + p];
                    let mkq = m[k * d + q];
                    m[k * d + p] = c * mkp - s * mkq;
                    m[k * d + q] = s * mkp + c * mkq;
                }
                for k in 0..d {
                    let mpk = m[p * d + k];
                    let mqk = m[q * d + k];
                    m[p * d + k] = c * mpk - s * mqk;
                    m[q * d + k] = s * mpk + c * mqk;
                }
            }
        }
    }
    (0..d).map(|i| m[i * d + i]).fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y0() -> ([f64; 1], [f64; 1]) {
        ([0.0], [0.0])
    }

    #[test]
    fn linear_family_evaluates_to_known_point() {
        let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
        let (t, v) = y0();
        let y = YPrefix::new(&t, &v).unwrap();
        let out = coeffs.eval(0.0, &[2.0], y, None).unwrap();
        assert_eq!(out.b, vec![-1.0]);
        assert_eq!(out.sigma, vec![1.0]);
        assert_eq!(out.rho, vec![0.3]);
        assert_eq!(out.h, 2.0);
        assert!(coeffs.assumption_violating());
    }

    #[test]
    fn mean_field_term_uses_the_prepared_mean() {
        let coeffs = CoefficientSet::mean_field_linear(1, -0.5, 0.4, 1.0, 0.3, 1.0).unwrap();
        let (t, v) = y0();
        let y = YPrefix::new(&t, &v).unwrap();
        let mu = ProbabilityAtomMeasure::new(
            WeightedAtomMeasure::from_flat(1, vec![1.0, 3.0], vec![0.5, 0.5]).unwrap(),
        )
        .unwrap();
        let out = coeffs.eval(0.0, &[1.0], y, Some(&mu)).unwrap();
        // b = a x + a_bar <mu, x> = -0.5 + 0.4 * 2
        assert!((out.b[0] - 0.3).abs() < 1e-15);
        // missing mu is an error for measure-dependent families
        assert!(coeffs.eval(0.0, &[1.0], y, None).is_err());
    }

    #[test]
    fn common_noise_sensor_is_identically_zero() {
        let coeffs = CoefficientSet::common_noise(1, -1.0, 0.5, 1.0, 0.4).unwrap();
        let (t, v) = y0();
        let y = YPrefix::new(&t, &v).unwrap();
        let mu = ProbabilityAtomMeasure::dirac(vec![0.7]).unwrap();
        for x in [-3.0, 0.0, 2.5] {
            let out = coeffs.eval(0.0, &[x], y, Some(&mu)).unwrap();
            assert_eq!(out.h, 0.0);
        }
    }

    #[test]
    fn tanh_family_passes_unit_lipschitz_check() {
        let coeffs = CoefficientSet::bounded_smooth(1, 1.0, 0.0, 1.0, 0.3, 1.0).unwrap();
        assert_eq!(coeffs.bounds().c_lip, 1.0);
        let report = check_lipschitz(&coeffs, 200, 99, 0.01).unwrap();
        assert!(report.pass, "max ratio {}", report.max_ratio);
        assert!(report.max_ratio <= 1.0 + 1e-9);
        assert!(!report.approximate_w1);
    }

    #[test]
    fn slope_two_drift_fails_declared_unit_lipschitz() {
        let coeffs = CoefficientSet::linear_gaussian(1, 2.0, 1.0, 0.0, 0.0)
            .unwrap()
            .with_declared_c_lip(1.0);
        let report = check_lipschitz(&coeffs, 200, 99, 0.01).unwrap();
        assert!(!report.pass, "max ratio {}", report.max_ratio);
        assert!(report.max_ratio > 1.5);
        let w = report.worst.unwrap();
        assert_eq!(w.which, "b");
    }

    #[test]
    fn nondegeneracy_reports_the_min_eigenvalue() {
        // sigma = diag(1, 2), rho = (0.3, 0): min eig(sigma^2 - rho rho^T) = 0.91
        let coeffs =
            CoefficientSet::constant(vec![0.0, 0.0], vec![1.0, 2.0], vec![0.3, 0.0], 0.0).unwrap();
        let report = check_nondegeneracy(&coeffs, 50, 7).unwrap();
        assert!(
            (report.min_eig - 0.91).abs() < 1e-12,
            "min eig {}",
            report.min_eig
        );
        assert!(report.pass);
    }

    #[test]
    fn degenerate_sigma_equals_rho_fails() {
        let coeffs = CoefficientSet::constant(vec![0.0], vec![1.0], vec![1.0], 0.0)
            .unwrap()
            .with_declared_sigma0(0.1);
        let report = check_nondegeneracy(&coeffs, 50, 7).unwrap();
        assert!(report.min_eig.abs() < 1e-12);
        assert!(!report.pass);
    }

    #[test]
    fn frozen_path_is_piecewise_constant() {
        let m0 = ProbabilityAtomMeasure::dirac(vec![0.0]).unwrap();
        let m1 = ProbabilityAtomMeasure::dirac(vec![1.0]).unwrap();
        let path = FrozenMuPath::new(vec![0.0, 0.5], vec![m0, m1]).unwrap();
        assert_eq!(path.at(0.0).unwrap().position(0)[0], 0.0);
        assert_eq!(path.at(0.49).unwrap().position(0)[0], 0.0);
        assert_eq!(path.at(0.5).unwrap().position(0)[0], 1.0);
        assert_eq!(path.at(9.0).unwrap().position(0)[0], 1.0);
        assert!(path.at(-1.0).is_err());
    }

    #[test]
    fn custom_family_sees_the_path_prefix() {
        struct PathCoeffs;
        impl CoefficientFn for PathCoeffs {
            fn eval(
                &self,
                _t: f64,
                _x: &[f64],
                y: &YPrefix,
                _mu: Option<&ProbabilityAtomMeasure>,
                out: &mut CoeffValues,
            ) -> Result<()> {
                out.b[0] = y.integral();
                out.sigma[0] = 1.0;
                out.rho[0] = 0.0;
                out.h = 0.0;
                Ok(())
            }
        }
        let coeffs = CoefficientSet::custom(
            1,
            Arc::new(PathCoeffs),
            YDependence::PathPrefix,
            MuDependence::None,
            DeclaredBounds {
                c_lip: 0.0,
                sigma0: 1.0,
                sup_b: 10.0,
                sup_sigma: 1.0,
                sup_rho: 0.0,
                sup_h: 0.0,
            },
            false,
        )
        .unwrap();
        let times = [0.0, 0.5, 1.0];
        let values = [0.0, 1.0, 1.0];
        let y = YPrefix::new(&times, &values).unwrap();
        let out = coeffs.eval(1.0, &[0.0], y, None).unwrap();
        // trapezoid: 0.5*(0+1)*0.5 + 0.5*(1+1)*0.5 = 0.75
        assert!((out.b[0] - 0.75).abs() < 1e-15);
    }

    #[test]
    fn non_finite_coefficients_are_reported() {
        struct BadCoeffs;
        impl CoefficientFn for BadCoeffs {
            fn eval(
                &self,
                _t: f64,
                _x: &[f64],
                _y: &YPrefix,
                _mu: Option<&ProbabilityAtomMeasure>,
                out: &mut CoeffValues,
            ) -> Result<()> {
                out.h = f64::NAN;
                Ok(())
            }
        }
        let coeffs = CoefficientSet::custom(
            1,
            Arc::new(BadCoeffs),
            YDependence::State,
            MuDependence::None,
            DeclaredBounds {
                c_lip: 0.0,
                sigma0: 0.0,
                sup_b: 0.0,
                sup_sigma: 0.0,
                sup_rho: 0.0,
                sup_h: 0.0,
            },
            false,
        )
        .unwrap();
        let (t, v) = ([0.0], [0.0]);
        let y = YPrefix::new(&t, &v).unwrap();
        match coeffs.eval(0.0, &[0.0], y, None) {
            Err(Error::Coefficient { which, .. }) => assert_eq!(which, "h"),
            other => panic!("expected coefficient error, got {other:?}"),
        }
    }
}
