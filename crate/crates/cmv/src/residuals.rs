//! Weak-form residual checkers.
//!
//! Every dynamic object the simulator produces is supposed to solve a
//! discrete equation along the simulated observation path: the unnormalized
//! law solves the linear filtering equation, projection coordinates solve
//! their lifted scalar equations, and the law-of-the-law solves the measure
//! evolution driven by `generator_measure`. Each checker here forms the
//! corresponding Ito residual with left-point sums and the *simulated*
//! increments, never re-sampled noise: the statements being tested are
//! pathwise.
//!
//! Residuals are random; their size is calibrated by a particle (or member)
//! bootstrap with 200 resamples, and the reports carry both the bootstrap
//! standard error and a crude `N^{-1/2} + dt` scale for orientation. A
//! standardized terminal residual of a few units is consistent with the
//! martingale structure of the discretization error; tens are not.
//!
//! All checkers are read-only over trajectories and deterministic: the
//! bootstrap draws from a dedicated substream keyed by the trajectory's own
//! seed.

use crate::basis::{TestFunction, TestFunctionBasis};
use crate::coefficients::{CoefficientSet, FrozenMuPath, MuDependence, YDependence};
use crate::error::{Error, Result};
use crate::measures::{metric_d, mollified_inner, mollified_l2_distance, WeightedAtomMeasure};
use crate::operators::{
    generator_measure, lh_profile, lifted_coefficients, sensor_measure, CylindricalFunction,
};
use crate::particle::{
    simulate_canonical, simulate_conditional, simulate_frozen_mu, FrozenNoiseMode,
    SimulationConfig, Trajectory,
};
use crate::rng::{substream, StreamPurpose};
use rand::Rng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;

const BOOTSTRAP_RESAMPLES: usize = 200;

/// Outcome of one residual check along a trajectory.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    /// Which test (or cylinder) function the residual belongs to.
    pub label: String,
    pub times: Vec<f64>,
    /// `R(t_m)`: the accumulated equation error up to each grid point.
    pub residual: Vec<f64>,
    pub terminal_residual: f64,
    /// Bootstrap standard error of the terminal residual.
    pub bootstrap_se: f64,
    /// `terminal / bootstrap_se`; 0 when both vanish.
    pub standardized_terminal: f64,
    /// Crude theoretical error scale `N^{-1/2} + dt`.
    pub predicted_scale: f64,
    pub pass: bool,
}

/// Root mean square of terminal residuals across reports (replicas).
pub fn terminal_rms(reports: &[ResidualReport]) -> f64 {
    if reports.is_empty() {
        return 0.0;
    }
    let s: f64 = reports
        .iter()
        .map(|r| r.terminal_residual * r.terminal_residual)
        .sum();
    (s / reports.len() as f64).sqrt()
}

fn finish_report(
    label: String,
    times: Vec<f64>,
    residual: Vec<f64>,
    sample_size: usize,
    dt: f64,
    bootstrap_se: f64,
) -> ResidualReport {
    let terminal_residual = *residual.last().expect("non-empty residual path");
    let predicted_scale = (sample_size as f64).powf(-0.5) + dt;
    let standardized_terminal = if bootstrap_se > 0.0 {
        terminal_residual / bootstrap_se
    } else if terminal_residual == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    let pass = standardized_terminal.abs() <= 5.0 || terminal_residual.abs() <= predicted_scale;
    ResidualReport {
        label,
        times,
        residual,
        terminal_residual,
        bootstrap_se,
        standardized_terminal,
        predicted_scale,
        pass,
    }
}

/// Sample standard deviation of resampled sums of `contributions`.
fn bootstrap_se(contributions: &[f64], rng: &mut ChaCha12Rng) -> f64 {
    let n = contributions.len();
    if n < 2 {
        return 0.0;
    }
    let mut stats = [0.0; BOOTSTRAP_RESAMPLES];
    for s in stats.iter_mut() {
        let mut acc = 0.0;
        for _ in 0..n {
            acc += contributions[rng.gen_range(0..n)];
        }
        *s = acc;
    }
    let mean = stats.iter().sum::<f64>() / BOOTSTRAP_RESAMPLES as f64;
    let var = stats.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>()
        / (BOOTSTRAP_RESAMPLES - 1) as f64;
    var.sqrt()
}

fn require_full_recording(traj: &Trajectory) -> Result<()> {
    if traj.recorded().len() != traj.n_steps() + 1 {
        return Err(Error::grid(
            "residual checks need the full measure path; rerun with record_stride = 1",
        ));
    }
    Ok(())
}

/// Residual of the linear filtering equation along one trajectory:
///
/// ```text
/// R(t_m) = <nu_m, phi> - <nu_0, phi>
///          - sum_{k<m} <nu_k, L phi> dt - sum_{k<m} <nu_k, H phi> dY_k
/// ```
///
/// Up to `O(dt)` the residual is the idiosyncratic-noise martingale
/// `(1/N) sum_i int L^i (sigma^T grad phi)(X^i) dB1^i`, so its terminal
/// value standardized by the particle bootstrap should land within a few
/// units.
pub fn zakai_residual(
    traj: &Trajectory,
    coeffs: &CoefficientSet,
    phi: &dyn TestFunction,
) -> Result<ResidualReport> {
    zakai_core(traj, coeffs, phi, "phi".to_owned())
}

/// `zakai_residual` over a family of test functions, sharing the trajectory
/// pass structure; reports come back in input order.
pub fn zakai_residuals(
    traj: &Trajectory,
    coeffs: &CoefficientSet,
    phis: &[&dyn TestFunction],
) -> Result<Vec<ResidualReport>> {
    phis.par_iter()
        .enumerate()
        .map(|(r, phi)| zakai_core(traj, coeffs, *phi, format!("phi[{r}]")))
        .collect()
}

fn zakai_core(
    traj: &Trajectory,
    coeffs: &CoefficientSet,
    phi: &dyn TestFunction,
    label: String,
) -> Result<ResidualReport> {
    require_full_recording(traj)?;
    let d = traj.dim();
    if phi.dim() != d {
        return Err(Error::dim("residual test function", d, phi.dim()));
    }
    if coeffs.dim() != d {
        return Err(Error::dim("residual coefficients", d, coeffs.dim()));
    }
    let steps = traj.n_steps();
    let n = traj.final_state().len();
    let times = traj.times();
    let y = traj.y();

    let nu0 = traj.nu_at(0).expect("full recording");
    let z0 = nu0.pair(phi)?;
    // per-particle share of the terminal residual, for the bootstrap
    let mut contrib: Vec<f64> = (0..n)
        .map(|i| -nu0.weight(i) * phi.value(nu0.position(i)))
        .collect();

    let mut residual = vec![0.0; steps + 1];
    let mut drift_sum = 0.0;
    let mut obs_sum = 0.0;
    let mut l_buf = vec![0.0; n];
    let mut h_buf = vec![0.0; n];
    for k in 0..=steps {
        let nu = traj.nu_at(k).expect("full recording");
        residual[k] = nu.pair(phi)? - z0 - drift_sum - obs_sum;
        if k == steps {
            for i in 0..n {
                contrib[i] += nu.weight(i) * phi.value(nu.position(i));
            }
            break;
        }
        let prefix = traj.y_prefix(k)?;
        let mu;
        let mu_ref = if coeffs.mu_dependence() == MuDependence::State {
            mu = nu.normalize_unit()?;
            Some(&mu)
        } else {
            None
        };
        let prepared = coeffs.prepare(times[k], prefix, mu_ref)?;
        lh_profile(nu, phi, &prepared, &mut l_buf, &mut h_buf)?;
        let dt_k = times[k + 1] - times[k];
        let dy_k = y[k + 1] - y[k];
        let mut pl = 0.0;
        let mut ph = 0.0;
        for i in 0..n {
            let w = nu.weight(i);
            pl += w * l_buf[i];
            ph += w * h_buf[i];
            contrib[i] -= w * (l_buf[i] * dt_k + h_buf[i] * dy_k);
        }
        drift_sum += pl * dt_k;
        obs_sum += ph * dy_k;
    }

    let mut rng = substream(
        traj.master_seed(),
        traj.replica(),
        StreamPurpose::Bootstrap,
        0,
    );
    let se = bootstrap_se(&contrib, &mut rng);
    let dt = times[times.len() - 1] / steps as f64;
    Ok(finish_report(label, times.to_vec(), residual, n, dt, se))
}

/// Bayes-consistency of the two laws carried by a measure: the normalized
/// pairing times the total mass must reproduce the unnormalized pairing.
#[derive(Debug, Clone, Serialize)]
pub struct KsIdentityReport {
    pub max_abs: f64,
    /// Discrepancy relative to `max(1, |<nu, phi>|)`.
    pub max_rel: f64,
    pub pass: bool,
}

/// Worst identity violation of one measure over a family of test functions.
pub fn ks_identity_measure(
    nu: &WeightedAtomMeasure,
    phis: &[&dyn TestFunction],
) -> Result<(f64, f64)> {
    let mu = nu.normalize_unit()?;
    let mass = nu.total_mass();
    let mut max_abs = 0.0_f64;
    let mut max_rel = 0.0_f64;
    for phi in phis {
        let via_mu = mu.pair(*phi)? * mass;
        let direct = nu.pair(*phi)?;
        let gap = (via_mu - direct).abs();
        max_abs = max_abs.max(gap);
        max_rel = max_rel.max(gap / direct.abs().max(1.0));
    }
    Ok((max_abs, max_rel))
}

/// Check the normalization identity at every recorded grid point.
pub fn ks_identity_check(
    traj: &Trajectory,
    phis: &[&dyn TestFunction],
) -> Result<KsIdentityReport> {
    let mut max_abs = 0.0_f64;
    let mut max_rel = 0.0_f64;
    for (_, nu) in traj.recorded() {
        let (a, r) = ks_identity_measure(nu, phis)?;
        max_abs = max_abs.max(a);
        max_rel = max_rel.max(r);
    }
    Ok(KsIdentityReport {
        max_abs,
        max_rel,
        pass: max_rel <= 1e-12,
    })
}

/// Mean, spread and z-score of the terminal total mass across observation
/// replicas. Under the reference measure the mass is a martingale started
/// at one.
#[derive(Debug, Clone, Serialize)]
pub struct MartingaleReport {
    pub replicas: usize,
    pub mean: f64,
    pub std_error: f64,
    pub z_score: f64,
    pub pass: bool,
}

pub fn martingale_check(trajectories: &[Trajectory]) -> Result<MartingaleReport> {
    let m = trajectories.len();
    if m < 30 {
        return Err(Error::param(
            "trajectories",
            format!("martingale check needs at least 30 replicas, got {m}"),
        ));
    }
    let terminal: Vec<f64> = trajectories
        .iter()
        .map(|t| *t.mass().last().expect("non-empty mass path"))
        .collect();
    let mean = terminal.iter().sum::<f64>() / m as f64;
    let var = terminal
        .iter()
        .map(|v| (v - mean) * (v - mean))
        .sum::<f64>()
        / (m - 1) as f64;
    let std_error = (var / m as f64).sqrt();
    let z_score = if std_error > 0.0 {
        (mean - 1.0) / std_error
    } else if mean == 1.0 {
        0.0
    } else {
        f64::INFINITY
    };
    Ok(MartingaleReport {
        replicas: m,
        mean,
        std_error,
        z_score,
        pass: z_score.abs() <= 3.0,
    })
}

/// Uniform mixture over measure paths that share one observation path: the
/// sampled stand-in for the conditional law of the unnormalized law itself.
#[derive(Debug, Clone)]
pub struct EmpiricalLaw {
    members: Vec<Trajectory>,
}

impl EmpiricalLaw {
    /// Wrap member trajectories. They must sit on one grid and one
    /// observation path, bit for bit.
    pub fn from_trajectories(members: Vec<Trajectory>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::param("members", "need at least one trajectory"));
        }
        let (t0, y0, d0) = (members[0].times(), members[0].y(), members[0].dim());
        for (j, m) in members.iter().enumerate().skip(1) {
            if m.dim() != d0 {
                return Err(Error::dim("law member", d0, m.dim()));
            }
            if m.times() != t0 || m.y() != y0 {
                return Err(Error::grid(format!(
                    "law member {j} sits on a different grid or observation path"
                )));
            }
        }
        Ok(EmpiricalLaw { members })
    }

    /// Draw one observation path and `m` conditionally independent ensemble
    /// replicas along it. Member `j` uses replica index `base_replica + j`,
    /// so space base indices at least `m` apart across laws.
    pub fn generate(
        config: &SimulationConfig,
        coeffs: &CoefficientSet,
        seed: u64,
        base_replica: u32,
        m: usize,
    ) -> Result<Self> {
        if m == 0 {
            return Err(Error::param("m", "need at least one member"));
        }
        let first = simulate_canonical(config, coeffs, seed, base_replica)?;
        let times = first.times().to_vec();
        let y = first.y().to_vec();
        let mut members = Vec::with_capacity(m);
        members.push(first);
        for j in 1..m {
            members.push(simulate_conditional(
                config,
                coeffs,
                &times,
                &y,
                seed,
                base_replica + j as u32,
            )?);
        }
        EmpiricalLaw::from_trajectories(members)
    }

    pub fn m(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Trajectory] {
        &self.members
    }

    pub fn member(&self, j: usize) -> &Trajectory {
        &self.members[j]
    }

    pub fn times(&self) -> &[f64] {
        self.members[0].times()
    }

    pub fn y(&self) -> &[f64] {
        self.members[0].y()
    }

    pub fn dim(&self) -> usize {
        self.members[0].dim()
    }
}

/// Residual of the measure-level evolution of `F(nu_t)` along the shared
/// observation path, averaged over the law members:
///
/// ```text
/// R(t_m) = <P_m, F> - <P_0, F> - sum_{k<m} <P_k, G F> dt
///          - sum_{k<m} <P_k, sum_i d_i f(z(n)) <n, H psi_i>> dY_k
/// ```
///
/// where `<P, G> = (1/M) sum_j G(nu^j)`. The bootstrap resamples members.
pub fn cfpe_residual(
    law: &EmpiricalLaw,
    f: &CylindricalFunction<'_>,
    coeffs: &CoefficientSet,
) -> Result<ResidualReport> {
    if coeffs.y_dependence() != YDependence::State {
        return Err(Error::param(
            "coefficients",
            "measure-level residuals need state observation dependence",
        ));
    }
    if f.dim() != law.dim() || coeffs.dim() != law.dim() {
        return Err(Error::dim("cfpe", law.dim(), f.dim().min(coeffs.dim())));
    }
    for member in law.members() {
        require_full_recording(member)?;
    }
    let m = law.m();
    let steps = law.member(0).n_steps();
    let times = law.times();
    let y = law.y();

    let mut member_f0 = vec![0.0; m];
    for (j, member) in law.members().iter().enumerate() {
        member_f0[j] = f.value(member.nu_at(0).expect("full recording"))?;
    }
    let avg_f0 = member_f0.iter().sum::<f64>() / m as f64;
    // per-member share of the terminal residual, for the bootstrap
    let mut contrib: Vec<f64> = member_f0.iter().map(|v| -v / m as f64).collect();

    let mut residual = vec![0.0; steps + 1];
    let mut drift_sum = 0.0;
    let mut obs_sum = 0.0;
    for k in 0..=steps {
        let mut avg_f = 0.0;
        for member in law.members() {
            avg_f += f.value(member.nu_at(k).expect("full recording"))?;
        }
        avg_f /= m as f64;
        residual[k] = avg_f - avg_f0 - drift_sum - obs_sum;
        if k == steps {
            for (j, member) in law.members().iter().enumerate() {
                contrib[j] += f.value(member.nu_at(k).expect("full recording"))? / m as f64;
            }
            break;
        }
        let dt_k = times[k + 1] - times[k];
        let dy_k = y[k + 1] - y[k];
        let mut sum_g = 0.0;
        let mut sum_s = 0.0;
        for (j, member) in law.members().iter().enumerate() {
            let nu = member.nu_at(k).expect("full recording");
            let prefix = member.y_prefix(k)?;
            let g = generator_measure(f, nu, times[k], prefix, coeffs)?;
            let prefix = member.y_prefix(k)?;
            let s = sensor_measure(f, nu, times[k], prefix, coeffs)?;
            sum_g += g;
            sum_s += s;
            contrib[j] -= (g * dt_k + s * dy_k) / m as f64;
        }
        drift_sum += sum_g / m as f64 * dt_k;
        obs_sum += sum_s / m as f64 * dy_k;
    }

    let mut rng = substream(
        law.member(0).master_seed(),
        law.member(0).replica(),
        StreamPurpose::Bootstrap,
        1,
    );
    // member resampling draws sums of m terms scaled by 1/m: rescale so the
    // statistic is the resampled average
    let se = bootstrap_se(&contrib, &mut rng);
    let dt = times[times.len() - 1] / steps as f64;
    Ok(finish_report(
        "cylinder".to_owned(),
        times.to_vec(),
        residual,
        m * law.member(0).final_state().len(),
        dt,
        se,
    ))
}

/// Residuals of the lifted scalar equations `dZ^i = beta_i dt + gamma_i dY`
/// along `Z^i_t = <nu_t, phi_i>`, for the first `k_lift` basis functions.
///
/// The lifted path is computed through `lifted_coefficients`; the same
/// residual is recomputed through `zakai_residual`, and the two must agree
/// to `1e-12` relative. A mismatch is reported as an error: it means the
/// crate's two readings of the same equation have drifted apart.
pub fn rinf_sde_residual(
    traj: &Trajectory,
    coeffs: &CoefficientSet,
    basis: &TestFunctionBasis,
    k_lift: usize,
) -> Result<Vec<ResidualReport>> {
    require_full_recording(traj)?;
    if k_lift == 0 || k_lift > basis.len() {
        return Err(Error::param(
            "k_lift",
            format!("must be in 1..={}, got {k_lift}", basis.len()),
        ));
    }
    if basis.dim() != traj.dim() {
        return Err(Error::dim("lift basis", traj.dim(), basis.dim()));
    }
    let steps = traj.n_steps();
    let times = traj.times();
    let y = traj.y();

    // z[k][i] and the lifted residual path per coordinate
    let mut lifted = vec![vec![0.0; steps + 1]; k_lift];
    let mut z0 = vec![0.0; k_lift];
    let mut sums = vec![0.0; k_lift];
    for k in 0..=steps {
        let nu = traj.nu_at(k).expect("full recording");
        for i in 0..k_lift {
            let zki = nu.pair(basis.get(i)?)?;
            if k == 0 {
                z0[i] = zki;
            }
            lifted[i][k] = zki - z0[i] - sums[i];
        }
        if k == steps {
            break;
        }
        let prefix = traj.y_prefix(k)?;
        let lc = lifted_coefficients(times[k], prefix, nu, coeffs, basis, k_lift)?;
        let dt_k = times[k + 1] - times[k];
        let dy_k = y[k + 1] - y[k];
        for i in 0..k_lift {
            sums[i] += lc.beta[i] * dt_k + lc.gamma[i] * dy_k;
        }
    }

    let mut reports = Vec::with_capacity(k_lift);
    for (i, lifted_path) in lifted.into_iter().enumerate() {
        let direct = zakai_core(traj, coeffs, basis.get(i)?, format!("Z[{i}]"))?;
        let scale = lifted_path.iter().fold(1.0_f64, |acc, v| acc.max(v.abs()));
        for (k, (a, b)) in lifted_path.iter().zip(direct.residual.iter()).enumerate() {
            if (a - b).abs() > 1e-12 * scale {
                return Err(Error::oracle(format!(
                    "lifted residual of coordinate {i} diverges from the direct \
                     form at step {k}: {a} vs {b}"
                )));
            }
        }
        reports.push(ResidualReport {
            residual: lifted_path,
            ..direct
        });
    }
    Ok(reports)
}

/// Riemann-sum regularity functional of an empirical law.
#[derive(Debug, Clone, Serialize)]
pub struct RegularityEstimate {
    pub value: f64,
    pub finite: bool,
}

/// Time integral, over the law, of the atom-weighted L1 norms
/// `||b||^p + ||sigma sigma^T||^p + ||rho||^{2p} + ||h||^{2p}`,
/// left-point in time.
pub fn regularity_phi(
    law: &EmpiricalLaw,
    coeffs: &CoefficientSet,
    p: f64,
) -> Result<RegularityEstimate> {
    if !(p > 1.0) {
        return Err(Error::param(
            "p",
            format!("exponent must exceed 1, got {p}"),
        ));
    }
    if coeffs.dim() != law.dim() {
        return Err(Error::dim(
            "regularity coefficients",
            law.dim(),
            coeffs.dim(),
        ));
    }
    for member in law.members() {
        require_full_recording(member)?;
    }
    let d = law.dim();
    let steps = law.member(0).n_steps();
    let times = law.times();
    let mut v = crate::coefficients::CoeffValues::zeros(d);
    let mut ssq = vec![0.0; d * d];
    let mut value = 0.0;
    for k in 0..steps {
        let dt_k = times[k + 1] - times[k];
        let mut level = 0.0;
        for member in law.members() {
            let nu = member.nu_at(k).expect("full recording");
            let prefix = member.y_prefix(k)?;
            let mu;
            let mu_ref = if coeffs.mu_dependence() == MuDependence::State {
                mu = nu.normalize_unit()?;
                Some(&mu)
            } else {
                None
            };
            let prepared = coeffs.prepare(times[k], prefix, mu_ref)?;
            let mut nb = 0.0;
            let mut ns = 0.0;
            let mut nr = 0.0;
            let mut nh = 0.0;
            for a in 0..nu.len() {
                let w = nu.weight(a);
                prepared.eval_into(nu.position(a), &mut v)?;
                nb += w * v.b.iter().map(|u| u * u).sum::<f64>().sqrt();
                for r in 0..d {
                    for c in 0..d {
                        let mut acc = 0.0;
                        for q in 0..d {
                            acc += v.sigma[r * d + q] * v.sigma[c * d + q];
                        }
                        ssq[r * d + c] = acc;
                    }
                }
                ns += w * ssq.iter().map(|u| u * u).sum::<f64>().sqrt();
                nr += w * v.rho.iter().map(|u| u * u).sum::<f64>().sqrt();
                nh += w * v.h.abs();
            }
            level += nb.powf(p) + ns.powf(p) + nr.powf(2.0 * p) + nh.powf(2.0 * p);
        }
        value += dt_k * level / law.m() as f64;
    }
    Ok(RegularityEstimate {
        value,
        finite: value.is_finite(),
    })
}

/// Averaged path of the damped squared mollified norm and its worst uptick.
#[derive(Debug, Clone, Serialize)]
pub struct LyapunovReport {
    pub times: Vec<f64>,
    /// `(1/M) sum_r beta_t ||T^{nu_r, delta}_t||^2` at the recorded points.
    pub path: Vec<f64>,
    /// The damping exponent rate: `beta_t = exp(-k_const * alpha * t)`.
    pub alpha: f64,
    /// Largest increase between consecutive points, relative to the start.
    pub max_uptick: f64,
}

/// Monitor the decay functional over observation replicas: with the damping
/// built from the declared coefficient bounds the averaged path must not
/// rise beyond Monte Carlo noise.
pub fn lyapunov_decay(
    trajectories: &[Trajectory],
    delta: f64,
    coeffs: &CoefficientSet,
    k_const: f64,
) -> Result<LyapunovReport> {
    if trajectories.is_empty() {
        return Err(Error::param("trajectories", "need at least one replica"));
    }
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::param("delta", "must be finite positive"));
    }
    if !(k_const >= 0.0) || !k_const.is_finite() {
        return Err(Error::param("k_const", "must be finite nonnegative"));
    }
    let b = coeffs.bounds();
    let alpha = b.sup_b + b.sup_h + b.sup_rho * b.sup_rho + b.sup_sigma * b.sup_sigma;
    let grid: Vec<usize> = trajectories[0].recorded().iter().map(|(k, _)| *k).collect();
    for traj in trajectories.iter().skip(1) {
        let same: Vec<usize> = traj.recorded().iter().map(|(k, _)| *k).collect();
        if same != grid {
            return Err(Error::grid("replicas record different grid points"));
        }
    }
    let times: Vec<f64> = grid.iter().map(|k| trajectories[0].times()[*k]).collect();
    let mut path = vec![0.0; grid.len()];
    for traj in trajectories {
        for (i, (k, nu)) in traj.recorded().iter().enumerate() {
            let t = traj.times()[*k];
            let damp = (-k_const * alpha * t).exp();
            path[i] += damp * mollified_inner(nu, nu, delta)?;
        }
    }
    for v in path.iter_mut() {
        *v /= trajectories.len() as f64;
    }
    let start = path[0];
    let mut max_uptick = 0.0_f64;
    for w in path.windows(2) {
        if start > 0.0 {
            max_uptick = max_uptick.max((w[1] - w[0]) / start);
        }
    }
    Ok(LyapunovReport {
        times,
        path,
        alpha,
        max_uptick: max_uptick.max(0.0),
    })
}

/// One row of the live-versus-frozen comparison.
#[derive(Debug, Clone, Serialize)]
pub struct RoundtripRow {
    pub n_particles: usize,
    pub median_metric: f64,
    pub median_mollified: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RoundtripTable {
    pub rows: Vec<RoundtripRow>,
    /// True when the metric medians do not increase with the ensemble size.
    pub nonincreasing: bool,
}

/// For each ensemble size: simulate, freeze the run's own conditional law,
/// rerun the decoupled scheme along the same observation path, and compare
/// the terminal unnormalized laws. As the ensemble grows the frozen law
/// approaches the live one and the gap must shrink.
#[allow(clippy::too_many_arguments)]
pub fn roundtrip_check(
    config_proto: &SimulationConfig,
    coeffs: &CoefficientSet,
    n_list: &[usize],
    m_y: usize,
    seed: u64,
    basis: &TestFunctionBasis,
    k_trunc: usize,
    delta: f64,
    mode: FrozenNoiseMode,
) -> Result<RoundtripTable> {
    if n_list.is_empty() || n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::param("n_list", "must be strictly increasing"));
    }
    if m_y == 0 {
        return Err(Error::param("m_y", "need at least one observation replica"));
    }
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let config = SimulationConfig {
            n_particles: n,
            record_stride: 1,
            ..config_proto.clone()
        };
        let mut metric_gaps = Vec::with_capacity(m_y);
        let mut mollified_gaps = Vec::with_capacity(m_y);
        for r in 0..m_y {
            let live = simulate_canonical(&config, coeffs, seed, r as u32)?;
            let mut mu_times = Vec::with_capacity(live.recorded().len());
            let mut mu_measures = Vec::with_capacity(live.recorded().len());
            for (k, nu) in live.recorded() {
                mu_times.push(live.times()[*k]);
                mu_measures.push(nu.normalize_unit()?);
            }
            let path = FrozenMuPath::new(mu_times, mu_measures)?;
            let rerun = simulate_frozen_mu(
                &config,
                coeffs,
                &path,
                live.times(),
                live.y(),
                seed,
                r as u32,
                mode,
            )?;
            let last = live.n_steps();
            let nu_live = live.nu_at(last).expect("full recording");
            let nu_rerun = rerun.nu_at(last).expect("full recording");
            metric_gaps.push(metric_d(nu_live, nu_rerun, basis, k_trunc)?.value);
            mollified_gaps.push(mollified_l2_distance(nu_live, nu_rerun, delta)?);
        }
        rows.push(RoundtripRow {
            n_particles: n,
            median_metric: median(&mut metric_gaps),
            median_mollified: median(&mut mollified_gaps),
        });
    }
    let nonincreasing = rows
        .windows(2)
        .all(|w| w[1].median_metric <= w[0].median_metric);
    Ok(RoundtripTable {
        rows,
        nonincreasing,
    })
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite distances"));
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{Bump, Constant, Coordinate};
    use crate::operators::Outer;
    use crate::particle::{InitialLaw, InitialWeights};

    fn config(n: usize, t: f64, dt: f64) -> SimulationConfig {
        SimulationConfig {
            n_particles: n,
            dim: 1,
            t_horizon: t,
            dt,
            initial_law: InitialLaw::Gaussian {
                mean: vec![0.0],
                std: 0.5,
            },
            initial_weights: InitialWeights::Unit,
            record_stride: 1,
        }
    }

    #[test]
    fn frozen_world_has_zero_residual() {
        // nothing moves and nothing is observed: every sum vanishes exactly
        let coeffs = CoefficientSet::constant(vec![0.0], vec![0.0], vec![0.0], 0.0).unwrap();
        let traj = simulate_canonical(&config(16, 0.2, 0.01), &coeffs, 2, 0).unwrap();
        let phi = Bump::new(vec![0.0], 2.0).unwrap();
        let report = zakai_residual(&traj, &coeffs, &phi).unwrap();
        assert!(report.residual.iter().all(|r| *r == 0.0));
        assert!(report.pass);
    }

    #[test]
    fn constant_function_sees_mass_conservation() {
        // h = 0: the mass never moves, and L1 = H1 = 0, so R is exactly 0
        let coeffs = CoefficientSet::common_noise(1, -0.5, 0.3, 1.0, 0.4).unwrap();
        let traj = simulate_canonical(&config(32, 0.2, 0.01), &coeffs, 3, 0).unwrap();
        let one = Constant { dim: 1, value: 1.0 };
        let report = zakai_residual(&traj, &coeffs, &one).unwrap();
        assert!(report.residual.iter().all(|r| *r == 0.0));
    }

    #[test]
    fn zakai_residual_is_within_bootstrap_band() {
        let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
        let traj = simulate_canonical(&config(512, 0.25, 2.5e-3), &coeffs, 4, 0).unwrap();
        let phi = Bump::new(vec![0.0], 2.0).unwrap();
        let report = zakai_residual(&traj, &coeffs, &phi).unwrap();
        assert!(report.bootstrap_se > 0.0);
        assert!(
            report.standardized_terminal.abs() <= 5.0,
            "standardized terminal {}",
            report.standardized_terminal
        );
    }

    #[test]
    fn doubling_particles_shrinks_the_residual() {
        // same observation paths and shared particle streams across arms:
        // the terminal residual at 2N is the average of the N-arm residual
        // and an independent copy, so the RMS ratio concentrates near sqrt 2
        let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
        let phi = Bump::new(vec![0.5], 2.0).unwrap();
        let paths = 32;
        let mut rms = [0.0, 0.0];
        for (arm, n) in [128usize, 256].iter().enumerate() {
            let cfg = config(*n, 0.1, 2e-3);
            let mut acc = 0.0;
            for r in 0..paths {
                let traj = simulate_canonical(&cfg, &coeffs, 41, r).unwrap();
                let term = zakai_residual(&traj, &coeffs, &phi)
                    .unwrap()
                    .terminal_residual;
                acc += term * term;
            }
            rms[arm] = (acc / paths as f64).sqrt();
        }
        let ratio = rms[0] / rms[1];
        assert!(
            (1.2..=1.7).contains(&ratio),
            "RMS ratio {ratio}, arms {rms:?}"
        );
    }

    #[test]
    fn normalization_identity_holds_along_runs_and_for_random_weights() {
        let coeffs = CoefficientSet::linear_gaussian(1, -0.4, 1.0, 0.2, 0.8).unwrap();
        let traj = simulate_canonical(&config(64, 0.2, 0.01), &coeffs, 6, 0).unwrap();
        let phi1 = Bump::new(vec![0.0], 2.0).unwrap();
        let phi2 = Coordinate { dim: 1, index: 0 };
        let phis: Vec<&dyn TestFunction> = vec![&phi1, &phi2];
        let report = ks_identity_check(&traj, &phis).unwrap();
        assert!(report.pass, "relative violation {}", report.max_rel);

        // h = 0 keeps nu a probability measure: the gap is exactly zero
        let coeffs0 = CoefficientSet::common_noise(1, -0.4, 0.0, 1.0, 0.2).unwrap();
        let traj0 = simulate_canonical(&config(64, 0.2, 0.01), &coeffs0, 6, 0).unwrap();
        let report0 = ks_identity_check(&traj0, &phis).unwrap();
        assert_eq!(report0.max_abs, 0.0);

        // direct recomputation on a measure with injected random weights
        let mut rng = substream(9, 0, StreamPurpose::Probe, 2);
        let positions: Vec<f64> = (0..40).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let weights: Vec<f64> = (0..40).map(|_| rng.gen_range(0.01..3.0)).collect();
        let nu = WeightedAtomMeasure::from_flat(1, positions, weights).unwrap();
        let (_, rel) = ks_identity_measure(&nu, &phis).unwrap();
        assert!(rel <= 1e-12);
    }

    #[test]
    fn mass_martingale_reports() {
        // h = 0: every terminal mass is exactly one
        let coeffs0 = CoefficientSet::common_noise(1, -0.5, 0.0, 1.0, 0.3).unwrap();
        let cfg = config(16, 0.1, 0.01);
        let trajs: Vec<Trajectory> = (0..30)
            .map(|r| simulate_canonical(&cfg, &coeffs0, 8, r).unwrap())
            .collect();
        let report = martingale_check(&trajs).unwrap();
        assert_eq!(report.mean, 1.0);
        assert_eq!(report.std_error, 0.0);
        assert_eq!(report.z_score, 0.0);
        assert!(report.pass);

        // closed-form exponential martingale
        let coeffs = CoefficientSet::constant(vec![0.0], vec![0.0], vec![0.0], 1.0).unwrap();
        let trajs: Vec<Trajectory> = (0..60)
            .map(|r| simulate_canonical(&cfg, &coeffs, 8, r).unwrap())
            .collect();
        let report = martingale_check(&trajs).unwrap();
        assert!(report.pass, "z = {}", report.z_score);

        assert!(martingale_check(&trajs[..20]).is_err());
    }

    #[test]
    fn dirac_law_reduces_to_the_linear_residual() {
        let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
        let traj = simulate_canonical(&config(64, 0.1, 0.005), &coeffs, 10, 0).unwrap();
        let phi = Bump::new(vec![0.0], 2.0).unwrap();
        let direct = zakai_residual(&traj, &coeffs, &phi).unwrap();

        let law = EmpiricalLaw::from_trajectories(vec![traj]).unwrap();
        let inner: Vec<&dyn TestFunction> = vec![&phi];
        let f = CylindricalFunction::new(Outer::Linear { weights: vec![1.0] }, inner).unwrap();
        let measure_level = cfpe_residual(&law, &f, &coeffs).unwrap();
        for (a, b) in measure_level.residual.iter().zip(direct.residual.iter()) {
            assert!((a - b).abs() <= 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn constant_cylinder_has_zero_residual() {
        let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
        let traj = simulate_canonical(&config(32, 0.1, 0.01), &coeffs, 11, 0).unwrap();
        let law = EmpiricalLaw::from_trajectories(vec![traj]).unwrap();
        let phi = Bump::new(vec![0.0], 2.0).unwrap();
        let inner: Vec<&dyn TestFunction> = vec![&phi];
        // zero loading: f(z) = exp(0) = 1 identically
        let f = CylindricalFunction::new(Outer::Exp { weights: vec![0.0] }, inner).unwrap();
        let report = cfpe_residual(&law, &f, &coeffs).unwrap();
        assert!(report.residual.iter().all(|r| *r == 0.0));
    }

    #[test]
    fn multi_member_law_satisfies_the_measure_equation() {
        let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
        let cfg = SimulationConfig {
            initial_weights: InitialWeights::Spread { scale: 0.3 },
            ..config(64, 0.1, 0.002)
        };
        let law = EmpiricalLaw::generate(&cfg, &coeffs, 12, 0, 4).unwrap();
        assert_eq!(law.m(), 4);
        let phi = Bump::new(vec![0.0], 2.0).unwrap();
        let inner: Vec<&dyn TestFunction> = vec![&phi];
        // f(u) = u^2 through the quadratic outer with loading 2
        let f = CylindricalFunction::new(Outer::Quadratic { weights: vec![2.0] }, inner).unwrap();
        let report = cfpe_residual(&law, &f, &coeffs).unwrap();
        assert!(
            report.standardized_terminal.abs() <= 5.0,
            "standardized {}",
            report.standardized_terminal
        );
    }

    #[test]
    fn lifted_and_direct_residuals_are_one_equation() {
        let coeffs = CoefficientSet::mean_field_linear(1, -0.5, 0.3, 1.0, 0.3, 1.0).unwrap();
        let traj = simulate_canonical(&config(128, 0.1, 0.005), &coeffs, 13, 0).unwrap();
        let basis = TestFunctionBasis::dyadic(1, 3.0, 8).unwrap();
        let reports = rinf_sde_residual(&traj, &coeffs, &basis, 4).unwrap();
        assert_eq!(reports.len(), 4);
        for r in &reports {
            assert!(r.bootstrap_se > 0.0);
        }
    }

    #[test]
    fn static_world_lift_residuals_vanish() {
        let coeffs = CoefficientSet::constant(vec![0.0], vec![0.0], vec![0.0], 0.0).unwrap();
        let traj = simulate_canonical(&config(16, 0.1, 0.01), &coeffs, 14, 0).unwrap();
        let basis = TestFunctionBasis::dyadic(1, 3.0, 4).unwrap();
        let reports = rinf_sde_residual(&traj, &coeffs, &basis, 4).unwrap();
        for r in reports {
            assert!(r.residual.iter().all(|v| *v == 0.0));
        }
    }

    #[test]
    fn regularity_functional_plugin_values() {
        // all zero coefficients: the functional vanishes
        let zero = CoefficientSet::constant(vec![0.0], vec![0.0], vec![0.0], 0.0).unwrap();
        let traj = simulate_canonical(&config(8, 1.0, 0.1), &zero, 15, 0).unwrap();
        let law = EmpiricalLaw::from_trajectories(vec![traj]).unwrap();
        assert_eq!(regularity_phi(&law, &zero, 2.0).unwrap().value, 0.0);

        // b = 1 with unit mass and p = 2 integrates to exactly T = 1
        let drift = CoefficientSet::constant(vec![1.0], vec![0.0], vec![0.0], 0.0).unwrap();
        let traj = simulate_canonical(&config(8, 1.0, 0.1), &drift, 15, 0).unwrap();
        let law = EmpiricalLaw::from_trajectories(vec![traj]).unwrap();
        let est = regularity_phi(&law, &drift, 2.0).unwrap();
        assert!((est.value - 1.0).abs() < 1e-12, "value {}", est.value);
        assert!(est.finite);

        assert!(regularity_phi(&law, &drift, 1.0).is_err());
    }

    #[test]
    fn regularity_matches_direct_summation() {
        let coeffs = CoefficientSet::bounded_smooth(1, 0.7, 0.4, 0.9, 0.3, 0.6).unwrap();
        let cfg = SimulationConfig {
            initial_weights: InitialWeights::Spread { scale: 0.4 },
            ..config(24, 0.1, 0.02)
        };
        let law = EmpiricalLaw::generate(&cfg, &coeffs, 16, 0, 2).unwrap();
        let p = 1.5;
        let est = regularity_phi(&law, &coeffs, p).unwrap();

        // independent direct summation from raw pieces
        let times = law.times().to_vec();
        let mut direct = 0.0;
        for k in 0..law.member(0).n_steps() {
            let mut level = 0.0;
            for member in law.members() {
                let nu = member.nu_at(k).unwrap();
                let mu = nu.normalize_unit().unwrap();
                let prefix = member.y_prefix(k).unwrap();
                let mut nb = 0.0;
                let mut ns = 0.0;
                let mut nr = 0.0;
                let mut nh = 0.0;
                for a in 0..nu.len() {
                    let vals = coeffs
                        .eval(times[k], nu.position(a), prefix, Some(&mu))
                        .unwrap();
                    nb += nu.weight(a) * vals.b[0].abs();
                    ns += nu.weight(a) * (vals.sigma[0] * vals.sigma[0]).abs();
                    nr += nu.weight(a) * vals.rho[0].abs();
                    nh += nu.weight(a) * vals.h.abs();
                }
                level += nb.powf(p) + ns.powf(p) + nr.powf(2.0 * p) + nh.powf(2.0 * p);
            }
            direct += (times[k + 1] - times[k]) * level / law.m() as f64;
        }
        assert!(
            (est.value - direct).abs() <= 1e-12 * direct.max(1.0),
            "{} vs {direct}",
            est.value
        );
    }

    #[test]
    fn lyapunov_path_is_flat_for_a_static_world() {
        let zero = CoefficientSet::constant(vec![0.0], vec![0.0], vec![0.0], 0.0).unwrap();
        let cfg = SimulationConfig {
            record_stride: 4,
            ..config(16, 0.2, 0.01)
        };
        let trajs: Vec<Trajectory> = (0..3)
            .map(|r| simulate_canonical(&cfg, &zero, 18, r).unwrap())
            .collect();
        let report = lyapunov_decay(&trajs, 0.1, &zero, 1.0).unwrap();
        assert_eq!(report.alpha, 0.0);
        assert_eq!(report.max_uptick, 0.0);
        let first = report.path[0];
        assert!(report.path.iter().all(|v| (v - first).abs() < 1e-15));
    }

    #[test]
    fn damped_functional_does_not_rise_for_a_pure_sensor() {
        // b = sigma = rho = 0, h = 1: mass grows like an exponential
        // martingale, the damping from the declared bounds wins
        let coeffs = CoefficientSet::constant(vec![0.0], vec![0.0], vec![0.0], 1.0).unwrap();
        let cfg = SimulationConfig {
            record_stride: 5,
            initial_law: InitialLaw::Gaussian {
                mean: vec![0.0],
                std: 1.0,
            },
            ..config(32, 0.25, 0.0125)
        };
        let trajs: Vec<Trajectory> = (0..200)
            .map(|r| simulate_canonical(&cfg, &coeffs, 19, r).unwrap())
            .collect();
        let report = lyapunov_decay(&trajs, 0.1, &coeffs, 2.0).unwrap();
        assert!(
            report.max_uptick <= 0.02,
            "max uptick {}",
            report.max_uptick
        );
    }

    #[test]
    fn roundtrip_gap_is_zero_when_nothing_is_frozen() {
        // mu-free coefficients with mirrored streams: the rerun IS the run
        let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
        let basis = TestFunctionBasis::dyadic(1, 3.0, 8).unwrap();
        let table = roundtrip_check(
            &config(16, 0.1, 0.01),
            &coeffs,
            &[16, 32],
            2,
            20,
            &basis,
            8,
            0.1,
            FrozenNoiseMode::MirrorLive,
        )
        .unwrap();
        for row in &table.rows {
            assert_eq!(row.median_metric, 0.0);
            assert_eq!(row.median_mollified, 0.0);
        }
        assert!(table.nonincreasing);
    }

    #[test]
    fn roundtrip_gap_shrinks_with_ensemble_size() {
        let coeffs = CoefficientSet::bounded_smooth(1, 0.8, 0.6, 1.0, 0.3, 0.5).unwrap();
        let basis = TestFunctionBasis::dyadic(1, 3.0, 8).unwrap();
        let table = roundtrip_check(
            &config(0, 0.2, 0.01),
            &coeffs,
            &[32, 256],
            9,
            22,
            &basis,
            8,
            0.1,
            FrozenNoiseMode::Fresh,
        )
        .unwrap();
        assert!(
            table.rows[1].median_metric < table.rows[0].median_metric,
            "{:?}",
            table.rows
        );
    }
}
