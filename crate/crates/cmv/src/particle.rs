//! Weighted-particle simulation on the canonical (reference-measure) space.
//!
//! Under the reference measure the observation is a standard Brownian path,
//! and the signal particle follows
//!
//! ```text
//! X <- X + (b - rho h) dt + sigma dB1 + rho dY,     l <- l + h dY - h^2/2 dt
//! ```
//!
//! with all coefficients read at the left endpoint and the mean-field
//! argument taken from the ensemble at step start. The log-weight update is
//! the exact stochastic exponential, so the weights `L = e^l` stay positive
//! by construction and keep the discrete martingale structure `E[L_t] = 1`.
//!
//! The unnormalized empirical law is `nu_t = (1/N) sum_i e^{l_i} delta_{X_i}`
//! and the conditional law is its normalization; when the sensor vanishes the
//! weights never move and the two coincide exactly.
//!
//! There is no resampling anywhere: resampling would destroy the
//! unnormalized flow the residual checkers certify. The effective sample
//! size is tracked per step instead, and consumers decide what to do with
//! degenerate runs.
//!
//! Determinism: every random draw comes from a purpose-keyed substream of
//! the master seed (observation path, per-particle noise, initial law,
//! initial weight spread), and all reductions run in atom order, so a run is
//! byte-identical regardless of how many threads execute it.

use crate::basis::TestFunction;
use crate::coefficients::{CoeffValues, CoefficientSet, FrozenMuPath, MuDependence, YPrefix};
use crate::error::{Error, Result};
use crate::measures::{ProbabilityAtomMeasure, WeightedAtomMeasure};
use crate::rng::{substream, StreamPurpose};
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

/// Log-weights above this abort the run before `exp` overflows a mass sum.
const LOG_WEIGHT_CAP: f64 = 650.0;

/// Ensemble of weighted particles plus the observation prefix seen so far.
#[derive(Debug, Clone)]
pub struct EnsembleState {
    t: f64,
    step: usize,
    dim: usize,
    positions: Vec<f64>,
    log_weights: Vec<f64>,
    h_integrals: Vec<f64>,
    y_times: Vec<f64>,
    y_values: Vec<f64>,
}

impl EnsembleState {
    /// Fresh ensemble at time zero: unit weights, empty sensor integrals,
    /// observation prefix `{(0, 0)}`.
    pub fn new(dim: usize, positions: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::param("dim", "must be at least 1"));
        }
        if positions.is_empty() || !positions.len().is_multiple_of(dim) {
            return Err(Error::dim("ensemble positions", dim, positions.len()));
        }
        if positions.iter().any(|v| !v.is_finite()) {
            return Err(Error::param("positions", "must be finite"));
        }
        let n = positions.len() / dim;
        Ok(EnsembleState {
            t: 0.0,
            step: 0,
            dim,
            positions,
            log_weights: vec![0.0; n],
            h_integrals: vec![0.0; n],
            y_times: vec![0.0],
            y_values: vec![0.0],
        })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn step_index(&self) -> usize {
        self.step
    }

    pub fn len(&self) -> usize {
        self.log_weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.log_weights.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn log_weights(&self) -> &[f64] {
        &self.log_weights
    }

    /// Accumulated left-endpoint Riemann sums of the sensor per particle.
    pub fn h_integrals(&self) -> &[f64] {
        &self.h_integrals
    }

    pub fn y_prefix(&self) -> YPrefix<'_> {
        YPrefix::new(&self.y_times, &self.y_values).expect("state prefix is always valid")
    }

    /// Overwrite the initial log-weights (time zero only, mass spread
    /// experiments). Weights are centered so that `E[e^l] = 1`.
    pub fn spread_initial_weights(&mut self, scale: f64, rng: &mut ChaCha12Rng) -> Result<()> {
        if self.step != 0 {
            return Err(Error::param(
                "spread",
                "initial weights can only be set at t = 0",
            ));
        }
        if !(scale >= 0.0) || !scale.is_finite() {
            return Err(Error::param("scale", "must be finite nonnegative"));
        }
        for l in self.log_weights.iter_mut() {
            let z: f64 = StandardNormal.sample(rng);
            *l = scale * z - 0.5 * scale * scale;
        }
        Ok(())
    }

    /// Unnormalized empirical law `(1/N) sum e^{l_i} delta_{X_i}`.
    pub fn nu_hat(&self) -> WeightedAtomMeasure {
        let n = self.len() as f64;
        let w: Vec<f64> = self.log_weights.iter().map(|l| l.exp() / n).collect();
        WeightedAtomMeasure::from_flat(self.dim, self.positions.clone(), w)
            .expect("ensemble invariants imply a valid measure")
    }

    /// Normalized conditional law.
    pub fn mu_hat(&self) -> Result<ProbabilityAtomMeasure> {
        self.nu_hat().normalize_unit()
    }
}

/// `(sum e^l)^2 / sum e^{2l}`, computed with a max shift so extreme weights
/// cannot overflow. Always in `[1, N]`.
pub fn effective_sample_size(state: &EnsembleState) -> f64 {
    let m = state
        .log_weights
        .iter()
        .fold(f64::NEG_INFINITY, |acc, l| acc.max(*l));
    let mut s1 = 0.0;
    let mut s2 = 0.0;
    for l in &state.log_weights {
        let e = (l - m).exp();
        s1 += e;
        s2 += e * e;
    }
    s1 * s1 / s2
}

/// One explicit Euler step of the canonical scheme. `db1` holds the
/// pre-scaled idiosyncratic increments (`N x d`, already multiplied by
/// `sqrt(dt)`), `dy` the observation increment over the step.
pub fn step_canonical(
    state: &mut EnsembleState,
    db1: &[f64],
    dy: f64,
    dt: f64,
    coeffs: &CoefficientSet,
) -> Result<()> {
    let mu = if coeffs.mu_dependence() == MuDependence::State {
        Some(state.mu_hat()?)
    } else {
        None
    };
    step_with_mu(state, db1, dy, dt, coeffs, mu.as_ref())
}

/// The same step with the mean-field argument supplied by the caller
/// (live ensembles pass their own law, frozen reruns a stored one).
pub fn step_with_mu(
    state: &mut EnsembleState,
    db1: &[f64],
    dy: f64,
    dt: f64,
    coeffs: &CoefficientSet,
    mu: Option<&ProbabilityAtomMeasure>,
) -> Result<()> {
    let d = state.dim;
    let n = state.len();
    if coeffs.dim() != d {
        return Err(Error::dim("step coefficients", d, coeffs.dim()));
    }
    if db1.len() != n * d {
        return Err(Error::dim("step noise", n * d, db1.len()));
    }
    if !(dt > 0.0) || !dt.is_finite() || !dy.is_finite() {
        return Err(Error::param("step", "dt must be positive and dy finite"));
    }

    let EnsembleState {
        t,
        step,
        positions,
        log_weights,
        h_integrals,
        y_times,
        y_values,
        ..
    } = state;
    let y = YPrefix::new(y_times, y_values).expect("state prefix is always valid");
    let prepared = coeffs.prepare(*t, y, mu)?;

    positions
        .par_chunks_mut(d)
        .zip(db1.par_chunks(d))
        .zip(log_weights.par_iter_mut())
        .zip(h_integrals.par_iter_mut())
        .try_for_each_init(
            || CoeffValues::zeros(d),
            |v, (((x, noise), lw), hi)| -> Result<()> {
                prepared.eval_into(x, v)?;
                let h = v.h;
                for r in 0..d {
                    let mut drift = v.b[r] - v.rho[r] * h;
                    let mut diffusion = 0.0;
                    for c in 0..d {
                        diffusion += v.sigma[r * d + c] * noise[c];
                    }
                    drift = drift * dt + diffusion + v.rho[r] * dy;
                    x[r] += drift;
                }
                *lw += h * dy - 0.5 * h * h * dt;
                *hi += h * dt;
                Ok(())
            },
        )?;

    for (i, l) in log_weights.iter().enumerate() {
        if !l.is_finite() || *l > LOG_WEIGHT_CAP {
            return Err(Error::NumericalBlowup {
                step: *step,
                detail: format!("log-weight of particle {i} reached {l}"),
            });
        }
    }
    if let Some(i) = positions
        .chunks(d)
        .position(|x| x.iter().any(|v| !v.is_finite()))
    {
        return Err(Error::NumericalBlowup {
            step: *step,
            detail: format!("non-finite position for particle {i}"),
        });
    }

    *t += dt;
    *step += 1;
    y_times.push(*t);
    y_values.push(y_values.last().copied().unwrap_or(0.0) + dy);
    Ok(())
}

/// Initial state distribution.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialLaw {
    /// Every particle starts at the same point (the default of the model).
    Point(Vec<f64>),
    /// Isotropic Gaussian around a mean.
    Gaussian { mean: Vec<f64>, std: f64 },
}

/// Initial weight profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialWeights {
    /// `l_i = 0`: the canonical start.
    Unit,
    /// `l_i = s xi_i - s^2/2` with standard normal `xi`: non-Dirac initial
    /// mass with `E[e^l] = 1`.
    Spread { scale: f64 },
}

/// Static description of one simulation run (per observation replica).
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationConfig {
    pub n_particles: usize,
    pub dim: usize,
    pub t_horizon: f64,
    pub dt: f64,
    pub initial_law: InitialLaw,
    pub initial_weights: InitialWeights,
    /// Full measures are stored every `record_stride` steps (plus the final
    /// step); per-step scalars are always stored.
    pub record_stride: usize,
}

impl SimulationConfig {
    /// Validate and return the number of steps.
    pub fn validate(&self, coeffs: &CoefficientSet) -> Result<usize> {
        if self.n_particles < 2 {
            return Err(Error::param("n_particles", "need at least 2 particles"));
        }
        if self.dim == 0 || self.dim != coeffs.dim() {
            return Err(Error::dim("config dim", coeffs.dim(), self.dim));
        }
        if !(self.dt > 0.0) || !self.dt.is_finite() {
            return Err(Error::param("dt", "must be finite positive"));
        }
        if !(self.t_horizon > 0.0) || !self.t_horizon.is_finite() {
            return Err(Error::param("t_horizon", "must be finite positive"));
        }
        let steps = (self.t_horizon / self.dt).round();
        if steps < 1.0 || (steps * self.dt - self.t_horizon).abs() > 1e-9 * self.t_horizon.max(1.0)
        {
            return Err(Error::grid(format!(
                "horizon {} is not an integer multiple of dt {}",
                self.t_horizon, self.dt
            )));
        }
        if self.record_stride == 0 {
            return Err(Error::param("record_stride", "must be at least 1"));
        }
        match &self.initial_law {
            InitialLaw::Point(x) => {
                if x.len() != self.dim {
                    return Err(Error::dim("initial point", self.dim, x.len()));
                }
            }
            InitialLaw::Gaussian { mean, std } => {
                if mean.len() != self.dim {
                    return Err(Error::dim("initial mean", self.dim, mean.len()));
                }
                if !(*std >= 0.0) || !std.is_finite() {
                    return Err(Error::param("initial std", "must be finite nonnegative"));
                }
            }
        }
        if let InitialWeights::Spread { scale } = self.initial_weights {
            if !(scale >= 0.0) || !scale.is_finite() {
                return Err(Error::param("weight spread", "must be finite nonnegative"));
            }
        }
        Ok(steps as usize)
    }
}

/// One complete simulated path: per-step scalars, strided full measures, and
/// the final ensemble.
#[derive(Debug, Clone)]
pub struct Trajectory {
    times: Vec<f64>,
    y: Vec<f64>,
    mass: Vec<f64>,
    ess: Vec<f64>,
    means: Vec<f64>,
    recorded: Vec<(usize, WeightedAtomMeasure)>,
    final_state: EnsembleState,
    master_seed: u64,
    replica: u32,
}

impl Trajectory {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    /// Total mass of the unnormalized law at each grid point.
    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    pub fn ess(&self) -> &[f64] {
        &self.ess
    }

    /// Conditional mean at grid point `k`.
    pub fn mean_at(&self, k: usize) -> &[f64] {
        let d = self.final_state.dim;
        &self.means[k * d..(k + 1) * d]
    }

    pub fn dim(&self) -> usize {
        self.final_state.dim
    }

    pub fn n_steps(&self) -> usize {
        self.times.len() - 1
    }

    /// Recorded unnormalized measure at grid index `k`, if that step was
    /// within the record stride.
    pub fn nu_at(&self, k: usize) -> Option<&WeightedAtomMeasure> {
        self.recorded
            .binary_search_by_key(&k, |(idx, _)| *idx)
            .ok()
            .map(|pos| &self.recorded[pos].1)
    }

    /// All recorded `(grid index, measure)` pairs in time order.
    pub fn recorded(&self) -> &[(usize, WeightedAtomMeasure)] {
        &self.recorded
    }

    pub fn final_state(&self) -> &EnsembleState {
        &self.final_state
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn replica(&self) -> u32 {
        self.replica
    }

    /// Observation prefix up to grid index `k` inclusive.
    pub fn y_prefix(&self, k: usize) -> Result<YPrefix<'_>> {
        if k >= self.times.len() {
            return Err(Error::grid(format!(
                "prefix index {k} beyond grid of {} points",
                self.times.len()
            )));
        }
        YPrefix::new(&self.times[..=k], &self.y[..=k])
    }
}

/// How a frozen rerun draws its idiosyncratic noise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrozenNoiseMode {
    /// Independent streams: the decoupled rerun of the same observation.
    Fresh,
    /// The live run's own streams: reproduces the canonical trajectory
    /// bitwise when the frozen law path matches.
    MirrorLive,
}

enum YSource<'a> {
    Generate(Box<ChaCha12Rng>),
    Given(&'a [f64]),
}

enum MuSource<'a> {
    Live,
    Frozen(&'a FrozenMuPath),
}

/// Simulate the coupled ensemble under the reference measure: the
/// observation path is a fresh Brownian path, the mean-field argument is the
/// live ensemble law.
pub fn simulate_canonical(
    config: &SimulationConfig,
    coeffs: &CoefficientSet,
    seed: u64,
    replica: u32,
) -> Result<Trajectory> {
    let y_rng = Box::new(substream(seed, replica, StreamPurpose::Observation, 0));
    run_simulation(
        config,
        coeffs,
        seed,
        replica,
        StreamPurpose::ParticleNoise,
        YSource::Generate(y_rng),
        MuSource::Live,
    )
}

/// Rerun the scheme against a stored law path and a given observation path.
/// The observation grid must be the config grid.
#[allow(clippy::too_many_arguments)]
pub fn simulate_frozen_mu(
    config: &SimulationConfig,
    coeffs: &CoefficientSet,
    mu_path: &FrozenMuPath,
    y_times: &[f64],
    y_values: &[f64],
    seed: u64,
    replica: u32,
    mode: FrozenNoiseMode,
) -> Result<Trajectory> {
    let steps = config.validate(coeffs)?;
    check_given_grid(config, steps, y_times, y_values)?;
    if coeffs.mu_dependence() == MuDependence::State && mu_path.dim() != config.dim {
        return Err(Error::dim("frozen law path", config.dim, mu_path.dim()));
    }
    let purpose = match mode {
        FrozenNoiseMode::Fresh => StreamPurpose::FrozenNoise,
        FrozenNoiseMode::MirrorLive => StreamPurpose::ParticleNoise,
    };
    run_simulation(
        config,
        coeffs,
        seed,
        replica,
        purpose,
        YSource::Given(y_values),
        MuSource::Frozen(mu_path),
    )
}

/// Live-ensemble run against a supplied observation path: the conditional
/// replica of a run that already produced `y`. The idiosyncratic noise comes
/// from the decoupled streams, so with distinct replica indices the ensemble
/// is independent of whichever run generated the path.
pub fn simulate_conditional(
    config: &SimulationConfig,
    coeffs: &CoefficientSet,
    y_times: &[f64],
    y_values: &[f64],
    seed: u64,
    replica: u32,
) -> Result<Trajectory> {
    let steps = config.validate(coeffs)?;
    check_given_grid(config, steps, y_times, y_values)?;
    run_simulation(
        config,
        coeffs,
        seed,
        replica,
        StreamPurpose::FrozenNoise,
        YSource::Given(y_values),
        MuSource::Live,
    )
}

fn check_given_grid(
    config: &SimulationConfig,
    steps: usize,
    y_times: &[f64],
    y_values: &[f64],
) -> Result<()> {
    if y_times.len() != steps + 1 || y_values.len() != steps + 1 {
        return Err(Error::grid(format!(
            "observation path has {} points, config grid has {}",
            y_times.len().min(y_values.len()),
            steps + 1
        )));
    }
    for (k, tk) in y_times.iter().enumerate() {
        if (tk - k as f64 * config.dt).abs() > 1e-9 * config.t_horizon.max(1.0) {
            return Err(Error::grid(format!(
                "observation grid point {k} at {tk} does not match dt {}",
                config.dt
            )));
        }
    }
    Ok(())
}

fn run_simulation(
    config: &SimulationConfig,
    coeffs: &CoefficientSet,
    seed: u64,
    replica: u32,
    noise_purpose: StreamPurpose,
    mut y_source: YSource<'_>,
    mu_source: MuSource<'_>,
) -> Result<Trajectory> {
    let steps = config.validate(coeffs)?;
    let n = config.n_particles;
    let d = config.dim;

    // initial positions
    let mut init_rng = substream(seed, replica, StreamPurpose::InitialLaw, 0);
    let positions = match &config.initial_law {
        InitialLaw::Point(x) => x.iter().copied().cycle().take(n * d).collect(),
        InitialLaw::Gaussian { mean, std } => {
            let mut out = Vec::with_capacity(n * d);
            for _ in 0..n {
                for m in mean {
                    let z: f64 = StandardNormal.sample(&mut init_rng);
                    out.push(m + std * z);
                }
            }
            out
        }
    };
    let mut state = EnsembleState::new(d, positions)?;
    if let InitialWeights::Spread { scale } = config.initial_weights {
        let mut w_rng = substream(seed, replica, StreamPurpose::InitialMass, 0);
        state.spread_initial_weights(scale, &mut w_rng)?;
    }

    let mut particle_rngs: Vec<ChaCha12Rng> = (0..n)
        .map(|i| substream(seed, replica, noise_purpose, i as u32))
        .collect();

    let need_mu = coeffs.mu_dependence() == MuDependence::State;
    let sdt = config.dt.sqrt();
    let mut db1 = vec![0.0; n * d];
    let mut weights = vec![0.0; n];

    let mut times = Vec::with_capacity(steps + 1);
    let mut y_path = Vec::with_capacity(steps + 1);
    let mut mass = Vec::with_capacity(steps + 1);
    let mut ess = Vec::with_capacity(steps + 1);
    let mut means = Vec::with_capacity((steps + 1) * d);
    let mut recorded = Vec::new();

    for k in 0..=steps {
        // per-step scalars from the state at t_k
        for (w, l) in weights.iter_mut().zip(state.log_weights.iter()) {
            *w = l.exp();
        }
        let total: f64 = weights.iter().sum();
        if !(total > 0.0) {
            return Err(Error::WeightDegeneracy {
                mass: total / n as f64,
                floor: 0.0,
            });
        }
        times.push(state.t);
        y_path.push(*state.y_values.last().expect("prefix non-empty"));
        mass.push(total / n as f64);
        ess.push(effective_sample_size(&state));
        for r in 0..d {
            let num: f64 = weights
                .iter()
                .zip(state.positions.chunks(d))
                .map(|(w, x)| w * x[r])
                .sum();
            means.push(num / total);
        }

        let record_here = k % config.record_stride == 0 || k == steps;
        let live_mu_needed = need_mu && matches!(mu_source, MuSource::Live);
        let nu = if record_here || live_mu_needed {
            let w: Vec<f64> = weights.iter().map(|w| w / n as f64).collect();
            Some(WeightedAtomMeasure::from_flat(
                d,
                state.positions.clone(),
                w,
            )?)
        } else {
            None
        };
        let mu_live = if live_mu_needed {
            Some(nu.as_ref().expect("built above").normalize_unit()?)
        } else {
            None
        };
        if record_here {
            recorded.push((k, nu.clone().expect("built above")));
        }
        if k == steps {
            break;
        }

        // observation increment: always the difference of consecutive path
        // values, so a rerun from the stored path reproduces it bitwise
        let y_prev = *state.y_values.last().expect("prefix non-empty");
        let y_next = match &mut y_source {
            YSource::Generate(rng) => {
                let z: f64 = StandardNormal.sample(rng.as_mut());
                y_prev + sdt * z
            }
            YSource::Given(values) => values[k + 1],
        };
        let dy = y_next - y_prev;

        db1.par_chunks_mut(d)
            .zip(particle_rngs.par_iter_mut())
            .for_each(|(chunk, rng)| {
                for v in chunk.iter_mut() {
                    let z: f64 = StandardNormal.sample(rng);
                    *v = sdt * z;
                }
            });

        let mu_ref = if need_mu {
            match &mu_source {
                MuSource::Live => mu_live.as_ref(),
                MuSource::Frozen(path) => Some(path.at(state.t)?),
            }
        } else {
            None
        };
        step_with_mu(&mut state, &db1, dy, config.dt, coeffs, mu_ref)?;
    }

    Ok(Trajectory {
        times,
        y: y_path,
        mass,
        ess,
        means,
        recorded,
        final_state: state,
        master_seed: seed,
        replica,
    })
}

/// Self-normalized change-of-measure statistic at the horizon.
#[derive(Debug, Clone)]
pub struct TiltedExpectation {
    /// `sum L_i phi(X_i) / sum L_i`
    pub value: f64,
    /// Delta-method standard error of the self-normalized estimate.
    pub std_error: f64,
    /// Reconstructed second Brownian driver per particle,
    /// `B2_T = Y_T - int_0^T h ds`.
    pub b2_terminal: Vec<f64>,
}

/// Estimate the model-measure expectation of `phi(X_T)` from a completed
/// trajectory via the terminal weights.
pub fn girsanov_tilt(trajectory: &Trajectory, phi: &dyn TestFunction) -> Result<TiltedExpectation> {
    let state = trajectory.final_state();
    if phi.dim() != state.dim() {
        return Err(Error::dim("tilt statistic", state.dim(), phi.dim()));
    }
    let mu = state.mu_hat()?;
    let mut value = 0.0;
    for i in 0..mu.len() {
        value += mu.weight(i) * phi.value(mu.position(i));
    }
    let mut var = 0.0;
    for i in 0..mu.len() {
        let dev = phi.value(mu.position(i)) - value;
        var += mu.weight(i) * mu.weight(i) * dev * dev;
    }
    let y_t = *trajectory.y().last().expect("non-empty path");
    let b2 = state.h_integrals().iter().map(|hi| y_t - hi).collect();
    Ok(TiltedExpectation {
        value,
        std_error: var.sqrt(),
        b2_terminal: b2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{Bump, Constant, Coordinate};
    use crate::oracles::{kalman_bucy_correlated, LinearModel};

    fn base_config(n: usize, t: f64, dt: f64) -> SimulationConfig {
        SimulationConfig {
            n_particles: n,
            dim: 1,
            t_horizon: t,
            dt,
            initial_law: InitialLaw::Point(vec![0.0]),
            initial_weights: InitialWeights::Unit,
            record_stride: 1,
        }
    }

    #[test]
    fn single_step_arithmetic() {
        let coeffs = CoefficientSet::constant(vec![1.0], vec![1.0], vec![0.0], 0.0).unwrap();
        let mut state = EnsembleState::new(1, vec![0.0, 1.0]).unwrap();
        step_canonical(&mut state, &[0.05, -0.02], 0.3, 0.01, &coeffs).unwrap();
        assert!((state.positions()[0] - 0.06).abs() < 1e-15);
        assert!((state.positions()[1] - 0.99).abs() < 1e-15);
        assert_eq!(state.log_weights(), &[0.0, 0.0]);
        assert!((state.t() - 0.01).abs() < 1e-15);
    }

    #[test]
    fn zero_sensor_keeps_weights_at_unity() {
        // common-noise family: h = 0, so l stays exactly 0 and the
        // unnormalized and normalized laws coincide
        let coeffs = CoefficientSet::common_noise(1, -0.8, 0.5, 1.0, 0.4).unwrap();
        let config = SimulationConfig {
            n_particles: 64, // power of two: the mass sum is exact
            ..base_config(64, 0.25, 0.0125)
        };
        let traj = simulate_canonical(&config, &coeffs, 11, 0).unwrap();
        for m in traj.mass() {
            assert_eq!(*m, 1.0);
        }
        assert!(traj.final_state().log_weights().iter().all(|l| *l == 0.0));
        let nu = traj.nu_at(traj.n_steps()).unwrap();
        let mu = nu.normalize_unit().unwrap();
        let phi = Bump::new(vec![0.0], 2.0).unwrap();
        assert_eq!(nu.pair(&phi).unwrap(), mu.pair(&phi).unwrap());
    }

    #[test]
    fn frozen_coefficients_closed_form_weights() {
        // b = sigma = rho = 0, h = 1: positions frozen, l = Y_t - t/2
        let coeffs = CoefficientSet::constant(vec![0.0], vec![0.0], vec![0.0], 1.0).unwrap();
        let config = base_config(4, 0.5, 0.05);
        let traj = simulate_canonical(&config, &coeffs, 5, 0).unwrap();
        let state = traj.final_state();
        assert!(state.positions().iter().all(|x| *x == 0.0));
        let y_t = *traj.y().last().unwrap();
        let want = y_t - 0.25;
        for l in state.log_weights() {
            assert!((l - want).abs() < 1e-12);
        }
        for (k, m) in traj.mass().iter().enumerate() {
            let expect = (traj.y()[k] - 0.5 * traj.times()[k]).exp();
            assert!((m - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn terminal_mass_is_a_reference_martingale() {
        // E[<nu_T, 1>] = 1 across observation replicas
        let coeffs = CoefficientSet::constant(vec![0.0], vec![0.5], vec![0.0], 1.0).unwrap();
        let config = base_config(16, 0.25, 0.0125);
        let replicas = 200;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for r in 0..replicas {
            let traj = simulate_canonical(&config, &coeffs, 77, r).unwrap();
            let m = *traj.mass().last().unwrap();
            sum += m;
            sumsq += m * m;
        }
        let mean = sum / replicas as f64;
        let var = (sumsq / replicas as f64 - mean * mean).max(0.0);
        let se = (var / replicas as f64).sqrt();
        assert!((mean - 1.0).abs() <= 3.0 * se, "mean mass {mean}, se {se}");
    }

    #[test]
    fn permuting_particles_leaves_the_law_invariant() {
        let coeffs = CoefficientSet::bounded_smooth(1, 0.8, 0.5, 1.0, 0.4, 0.9).unwrap();
        let positions = vec![0.3, -0.7, 1.1, 0.2, -0.4, 0.9, -1.3, 0.6];
        let n = positions.len();
        let perm: Vec<usize> = vec![5, 2, 7, 0, 3, 6, 1, 4];
        let permuted: Vec<f64> = perm.iter().map(|i| positions[*i]).collect();

        let mut a = EnsembleState::new(1, positions).unwrap();
        let mut b = EnsembleState::new(1, permuted).unwrap();
        let mut rng = substream(13, 0, StreamPurpose::Probe, 0);
        for _ in 0..3 {
            let noise: Vec<f64> = (0..n)
                .map(|_| {
                    let z: f64 = StandardNormal.sample(&mut rng);
                    0.1 * z
                })
                .collect();
            let noise_perm: Vec<f64> = perm.iter().map(|i| noise[*i]).collect();
            let z: f64 = StandardNormal.sample(&mut rng);
            let dy = 0.1 * z;
            step_canonical(&mut a, &noise, dy, 0.01, &coeffs).unwrap();
            step_canonical(&mut b, &noise_perm, dy, 0.01, &coeffs).unwrap();
        }
        let phi1 = Bump::new(vec![0.0], 2.0).unwrap();
        let phi2 = Coordinate { dim: 1, index: 0 };
        for phi in [&phi1 as &dyn TestFunction, &phi2] {
            let pa = a.nu_hat().pair(phi).unwrap();
            let pb = b.nu_hat().pair(phi).unwrap();
            assert!((pa - pb).abs() < 1e-12, "{pa} vs {pb}");
        }
    }

    #[test]
    fn runs_are_deterministic_across_thread_counts() {
        let coeffs = CoefficientSet::mean_field_linear(1, -0.5, 0.3, 1.0, 0.3, 1.0).unwrap();
        let config = base_config(128, 0.2, 0.01);
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| simulate_canonical(&config, &coeffs, 99, 3).unwrap());
        let quad = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap()
            .install(|| simulate_canonical(&config, &coeffs, 99, 3).unwrap());
        assert_eq!(single.y(), quad.y());
        assert_eq!(single.mass(), quad.mass());
        assert_eq!(
            single.final_state().positions(),
            quad.final_state().positions()
        );
        assert_eq!(
            single.final_state().log_weights(),
            quad.final_state().log_weights()
        );
    }

    #[test]
    fn freezing_the_live_law_reproduces_the_run_bitwise() {
        let coeffs = CoefficientSet::mean_field_linear(1, -0.6, 0.4, 1.0, 0.3, 1.0).unwrap();
        let config = base_config(64, 0.2, 0.005);
        let live = simulate_canonical(&config, &coeffs, 21, 0).unwrap();

        let mut mu_times = Vec::new();
        let mut mu_measures = Vec::new();
        for (k, nu) in live.recorded() {
            if *k == 0 {
                mu_times.push(-1e-9); // cover t = 0 queries exactly
            } else {
                mu_times.push(live.times()[*k]);
            }
            mu_measures.push(nu.normalize_unit().unwrap());
        }
        let path = FrozenMuPath::new(mu_times, mu_measures).unwrap();
        let frozen = simulate_frozen_mu(
            &config,
            &coeffs,
            &path,
            live.times(),
            live.y(),
            21,
            0,
            FrozenNoiseMode::MirrorLive,
        )
        .unwrap();
        assert_eq!(live.y(), frozen.y());
        assert_eq!(live.mass(), frozen.mass());
        assert_eq!(
            live.final_state().positions(),
            frozen.final_state().positions()
        );
        assert_eq!(
            live.final_state().log_weights(),
            frozen.final_state().log_weights()
        );
    }

    #[test]
    fn frozen_rerun_ignores_the_path_for_mu_free_coefficients() {
        let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
        let config = base_config(32, 0.1, 0.005);
        let live = simulate_canonical(&config, &coeffs, 31, 0).unwrap();
        // an arbitrary frozen path: never consulted
        let path = FrozenMuPath::new(
            vec![0.0],
            vec![ProbabilityAtomMeasure::dirac(vec![42.0]).unwrap()],
        )
        .unwrap();
        let frozen = simulate_frozen_mu(
            &config,
            &coeffs,
            &path,
            live.times(),
            live.y(),
            31,
            0,
            FrozenNoiseMode::MirrorLive,
        )
        .unwrap();
        assert_eq!(
            live.final_state().positions(),
            frozen.final_state().positions()
        );
    }

    #[test]
    fn particle_mean_tracks_the_exact_linear_filter() {
        let model = LinearModel {
            a: -0.5,
            a_bar: 0.0,
            sigma: 1.0,
            rho: 0.3,
            c: 1.0,
            m0: 1.0,
            p0: 0.0,
        };
        let coeffs =
            CoefficientSet::linear_gaussian(1, model.a, model.sigma, model.rho, model.c).unwrap();
        let config = SimulationConfig {
            record_stride: 500,
            initial_law: InitialLaw::Point(vec![model.m0]),
            ..base_config(5_000, 0.25, 5e-4)
        };
        let traj = simulate_canonical(&config, &coeffs, 7, 0).unwrap();
        let kalman = kalman_bucy_correlated(&model, traj.times(), traj.y()).unwrap();
        let last = kalman.last().unwrap();
        let got = traj.mean_at(traj.n_steps())[0];
        assert!(
            (got - last.mean).abs() < 0.08,
            "particle mean {got}, filter mean {}",
            last.mean
        );
    }

    #[test]
    fn tilt_statistics() {
        let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
        let config = base_config(256, 0.1, 0.005);
        let traj = simulate_canonical(&config, &coeffs, 17, 0).unwrap();

        // phi = 1 integrates to exactly one under the normalized weights
        let one = Constant { dim: 1, value: 1.0 };
        let tilt = girsanov_tilt(&traj, &one).unwrap();
        assert!((tilt.value - 1.0).abs() < 1e-14);
        assert!(tilt.std_error < 1e-14);
        assert_eq!(tilt.b2_terminal.len(), 256);

        // the reconstructed second driver differs from Y by the h integral
        let y_t = *traj.y().last().unwrap();
        for (b2, hi) in tilt
            .b2_terminal
            .iter()
            .zip(traj.final_state().h_integrals())
        {
            assert!((b2 - (y_t - hi)).abs() < 1e-15);
        }

        // with h = 0 the tilted mean is the plain ensemble mean
        let coeffs0 = CoefficientSet::common_noise(1, -0.5, 0.0, 1.0, 0.3).unwrap();
        let traj0 = simulate_canonical(&config, &coeffs0, 17, 0).unwrap();
        let id = Coordinate { dim: 1, index: 0 };
        let tilt0 = girsanov_tilt(&traj0, &id).unwrap();
        let state = traj0.final_state();
        let plain: f64 = state.positions().iter().sum::<f64>() / state.len() as f64;
        assert!((tilt0.value - plain).abs() < 1e-13);
    }

    #[test]
    fn effective_sample_size_bounds_and_formula() {
        let mut state = EnsembleState::new(1, vec![0.0; 8]).unwrap();
        assert!((effective_sample_size(&state) - 8.0).abs() < 1e-12);

        state.log_weights = vec![50.0, -50.0, -50.0, -50.0, -50.0, -50.0, -50.0, -50.0];
        assert!((effective_sample_size(&state) - 1.0).abs() < 1e-12);

        let mut rng = substream(3, 0, StreamPurpose::Probe, 1);
        let lw: Vec<f64> = (0..8)
            .map(|_| {
                let z: f64 = StandardNormal.sample(&mut rng);
                0.5 * z
            })
            .collect();
        state.log_weights = lw.clone();
        let naive = {
            let s1: f64 = lw.iter().map(|l| l.exp()).sum();
            let s2: f64 = lw.iter().map(|l| (2.0 * l).exp()).sum();
            s1 * s1 / s2
        };
        assert!((effective_sample_size(&state) - naive).abs() < 1e-10);
    }

    #[test]
    fn config_rejects_degenerate_setups() {
        let coeffs = CoefficientSet::constant(vec![0.0], vec![1.0], vec![0.0], 0.0).unwrap();
        let mut config = base_config(1, 1.0, 0.1);
        assert!(config.validate(&coeffs).is_err());
        config.n_particles = 8;
        config.t_horizon = 0.35;
        config.dt = 0.1;
        assert!(config.validate(&coeffs).is_err());
        config.t_horizon = 0.4;
        assert_eq!(config.validate(&coeffs).unwrap(), 4);
    }

    #[test]
    fn blowup_is_reported_with_the_step() {
        // a huge constant sensor drives the log-weight to -inf in one step
        let coeffs = CoefficientSet::constant(vec![0.0], vec![1.0], vec![0.0], 1e200).unwrap();
        let config = base_config(4, 0.5, 0.1);
        match simulate_canonical(&config, &coeffs, 1, 0) {
            Err(Error::NumericalBlowup { step, .. }) => assert_eq!(step, 0),
            other => panic!("expected blowup, got {other:?}"),
        }

        // a huge constant drift overflows positions after enough steps
        let coeffs = CoefficientSet::constant(vec![1e308], vec![1.0], vec![0.0], 0.0).unwrap();
        let config = base_config(4, 2.0, 0.1);
        match simulate_canonical(&config, &coeffs, 1, 0) {
            Err(Error::NumericalBlowup { step, .. }) => assert!(step > 0),
            other => panic!("expected blowup, got {other:?}"),
        }
    }
}
