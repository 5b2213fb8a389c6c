//! Independent reference computations.
//!
//! Everything here is deliberately slow, simple, and derived through a
//! different route than the fast paths it validates:
//!
//! * [`w1_bruteforce`]: optimal transport as an explicit linear program
//!   (transportation simplex) for tiny inputs; validates the quantile-coupling
//!   Wasserstein-1.
//! * [`quadrature_mollified`]: the mollified inner product by adaptive
//!   tensor-product Gauss-Legendre quadrature; validates the Gaussian
//!   convolution closed form.
//! * [`kalman_bucy_correlated`]: the exact finite-dimensional filter for the
//!   linear-Gaussian model with signal/observation noise correlation. The
//!   conditional variance solves a deterministic Riccati equation (integrated
//!   by RK4 on a 10x refined grid); the conditional mean is driven by the
//!   observed increments.
//! * [`meanfield_linear_mean`]: the same filter for the linear mean-field
//!   model, where the law-dependent drift term `a_bar <mu, x>` is, given the
//!   observation history, a known input: it shifts the mean dynamics and
//!   leaves gain and variance untouched.
//!
//! The linear-Gaussian family violates the boundedness assumptions of the
//! general theory (its sensor grows linearly); it is admitted here purely as
//! an oracle, and the coefficient family mirrors that with an
//! `assumption_violating` flag.

use crate::error::{Error, Result};
use crate::measures::ProbabilityAtomMeasure;
use crate::measures::WeightedAtomMeasure;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Largest atom count per side accepted by the brute-force transport LP.
pub const W1_BRUTEFORCE_MAX_ATOMS: usize = 8;

/// Conditional mean/variance of the exact linear filter at one grid time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KalmanState {
    pub t: f64,
    pub mean: f64,
    pub var: f64,
}

/// Parameters of the scalar linear-Gaussian model
/// `dX = (a X + a_bar m) dt + sigma dB1 + rho dB2`, `dY = c X dt + dB2`,
/// with `m` the conditional mean itself (`a_bar = 0` recovers the plain model).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearModel {
    pub a: f64,
    pub a_bar: f64,
    pub sigma: f64,
    pub rho: f64,
    pub c: f64,
    pub m0: f64,
    pub p0: f64,
}

impl LinearModel {
    fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("a", self.a),
            ("a_bar", self.a_bar),
            ("sigma", self.sigma),
            ("rho", self.rho),
            ("c", self.c),
            ("m0", self.m0),
            ("p0", self.p0),
        ] {
            if !v.is_finite() {
                return Err(Error::param("model", format!("{name} must be finite")));
            }
        }
        if self.p0 < 0.0 {
            return Err(Error::param("p0", "initial variance must be nonnegative"));
        }
        Ok(())
    }
}

/// Exact correlated-noise Kalman-Bucy filter along one observation path.
///
/// The variance solves `dP/dt = 2 a P + sigma^2 + rho^2 - (c P + rho)^2`
/// (RK4 with 10 substeps per observation interval); the mean is advanced by
/// Euler on the observation grid with gain `c P + rho`:
/// `dm = a m dt + (c P + rho)(dY - c m dt)`.
pub fn kalman_bucy_correlated(
    model: &LinearModel,
    times: &[f64],
    y: &[f64],
) -> Result<Vec<KalmanState>> {
    linear_filter(model, times, y, 0.0)
}

/// Conditional mean/variance for the linear mean-field model: the mean-field
/// drift `a_bar m_t` is observation-measurable, so it shifts the mean drift to
/// `(a + a_bar) m` and leaves the Riccati equation and the gain unchanged.
pub fn meanfield_linear_mean(
    model: &LinearModel,
    times: &[f64],
    y: &[f64],
) -> Result<Vec<KalmanState>> {
    linear_filter(model, times, y, model.a_bar)
}

fn linear_filter(
    model: &LinearModel,
    times: &[f64],
    y: &[f64],
    mean_drift_shift: f64,
) -> Result<Vec<KalmanState>> {
    model.validate()?;
    if times.len() != y.len() {
        return Err(Error::dim("linear filter path", times.len(), y.len()));
    }
    if times.len() < 2 {
        return Err(Error::param("times", "need at least two grid points"));
    }
    let riccati = |p: f64| -> f64 {
        let gain = model.c * p + model.rho;
        2.0 * model.a * p + model.sigma * model.sigma + model.rho * model.rho - gain * gain
    };

    let mut out = Vec::with_capacity(times.len());
    let mut m = model.m0;
    let mut p = model.p0;
    out.push(KalmanState {
        t: times[0],
        mean: m,
        var: p,
    });
    for k in 1..times.len() {
        let dt = times[k] - times[k - 1];
        if !(dt > 0.0) {
            return Err(Error::grid(format!(
                "times must be strictly increasing, got dt={dt} at index {k}"
            )));
        }
        let dy = y[k] - y[k - 1];
        // mean: Euler on the observation grid, gain frozen at the left endpoint
        let gain = model.c * p + model.rho;
        m += ((model.a + mean_drift_shift) * m) * dt + gain * (dy - model.c * m * dt);
        // variance: deterministic Riccati, RK4 on a 10x refined grid
        let sub = dt / 10.0;
        for _ in 0..10 {
            let k1 = riccati(p);
            let k2 = riccati(p + 0.5 * sub * k1);
            let k3 = riccati(p + 0.5 * sub * k2);
            let k4 = riccati(p + sub * k3);
            p += sub / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        if !p.is_finite() || !m.is_finite() {
            return Err(Error::oracle(format!(
                "linear filter diverged at t={} (mean={m}, var={p})",
                times[k]
            )));
        }
        if p < 0.0 {
            if p < -1e-12 {
                return Err(Error::oracle(format!(
                    "Riccati variance went negative at t={}: {p}",
                    times[k]
                )));
            }
            p = 0.0;
        }
        out.push(KalmanState {
            t: times[k],
            mean: m,
            var: p,
        });
    }
    Ok(out)
}

/// Exact Wasserstein-1 between small atomic probability measures, solved as a
/// transportation linear program. Rejects inputs beyond
/// [`W1_BRUTEFORCE_MAX_ATOMS`] atoms per side: this is an oracle for tiny
/// cases, not a production solver.
pub fn w1_bruteforce(a: &ProbabilityAtomMeasure, b: &ProbabilityAtomMeasure) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::dim("w1_bruteforce", a.dim(), b.dim()));
    }
    if a.len() > W1_BRUTEFORCE_MAX_ATOMS || b.len() > W1_BRUTEFORCE_MAX_ATOMS {
        return Err(Error::oracle(format!(
            "w1_bruteforce accepts at most {W1_BRUTEFORCE_MAX_ATOMS} atoms per side, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let m = a.len();
    let n = b.len();
    let mut cost = vec![0.0; m * n];
    for i in 0..m {
        for j in 0..n {
            let xi = a.position(i);
            let yj = b.position(j);
            let d2: f64 = xi.iter().zip(yj).map(|(p, q)| (p - q) * (p - q)).sum();
            cost[i * n + j] = d2.sqrt();
        }
    }
    let supply: Vec<f64> = (0..m).map(|i| a.weight(i)).collect();
    let demand: Vec<f64> = (0..n).map(|j| b.weight(j)).collect();
    transport_lp(&supply, &demand, &cost, n)
}

/// Transportation simplex on an `m x n` cost table (row-major). Supplies and
/// demands are perturbed to break degeneracy while pivoting; the final value
/// is recomputed from the optimal basis with the original masses, which by LP
/// duality gives the exact optimum.
fn transport_lp(supply: &[f64], demand: &[f64], cost: &[f64], n: usize) -> Result<f64> {
    let m = supply.len();
    let eps = 1e-11;
    let mut s: Vec<f64> = supply.iter().map(|v| v + eps).collect();
    let mut d: Vec<f64> = demand.to_vec();
    d[n - 1] += eps * m as f64;

    // Northwest-corner initial basic feasible solution.
    let mut flow = vec![0.0; m * n];
    let mut basic = vec![false; m * n];
    {
        let (mut i, mut j) = (0usize, 0usize);
        let mut rs = s.clone();
        let mut rd = d.clone();
        loop {
            let q = rs[i].min(rd[j]);
            flow[i * n + j] = q;
            basic[i * n + j] = true;
            rs[i] -= q;
            rd[j] -= q;
            if i + 1 == m && j + 1 == n {
                break;
            }
            if rs[i] <= rd[j] && i + 1 < m {
                i += 1;
            } else {
                j += 1;
            }
        }
    }

    for _iter in 0..2000 {
        // Potentials u_i + v_j = c_ij on the basis tree.
        let mut u = vec![f64::NAN; m];
        let mut v = vec![f64::NAN; n];
        u[0] = 0.0;
        let mut assigned = 1;
        while assigned < m + n {
            let before = assigned;
            for i in 0..m {
                for j in 0..n {
                    if !basic[i * n + j] {
                        continue;
                    }
                    if u[i].is_nan() && !v[j].is_nan() {
                        u[i] = cost[i * n + j] - v[j];
                        assigned += 1;
                    } else if !u[i].is_nan() && v[j].is_nan() {
                        v[j] = cost[i * n + j] - u[i];
                        assigned += 1;
                    }
                }
            }
            if assigned == before {
                return Err(Error::oracle("transport basis disconnected".to_string()));
            }
        }

        // Most negative reduced cost enters.
        let mut enter = None;
        let mut best = -1e-12;
        for i in 0..m {
            for j in 0..n {
                if basic[i * n + j] {
                    continue;
                }
                let rc = cost[i * n + j] - u[i] - v[j];
                if rc < best {
                    best = rc;
                    enter = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = enter else {
            // Optimal basis found: re-solve flows against the original masses
            // by leaf elimination on the basis tree, then price.
            return basis_value(supply, demand, cost, &basic, n);
        };

        // Unique cycle in basis + entering cell: alternating row/col path from
        // row pi back to col pj. Find via DFS over basic cells.
        let cycle = find_cycle(&basic, m, n, pi, pj)
            .ok_or_else(|| Error::oracle("transport cycle not found".to_string()))?;
        // cycle alternates starting with the entering cell (even = +, odd = -)
        let mut theta = f64::INFINITY;
        let mut leave = None;
        for (pos, &(ci, cj)) in cycle.iter().enumerate() {
            if pos % 2 == 1 {
                let f = flow[ci * n + cj];
                if f < theta {
                    theta = f;
                    leave = Some((ci, cj));
                }
            }
        }
        let (li, lj) = leave
            .ok_or_else(|| Error::oracle("transport pivot without leaving cell".to_string()))?;
        for (pos, &(ci, cj)) in cycle.iter().enumerate() {
            if pos % 2 == 0 {
                flow[ci * n + cj] += theta;
            } else {
                flow[ci * n + cj] -= theta;
            }
        }
        basic[pi * n + pj] = true;
        basic[li * n + lj] = false;
        flow[li * n + lj] = 0.0;
        // Keep the perturbed masses consistent (they never change; s, d are
        // only read by the NW start, but clippy would flag the unused mut).
        let _ = (&mut s, &mut d);
    }
    Err(Error::oracle(
        "transportation simplex failed to converge".to_string(),
    ))
}

/// Alternating cycle through basic cells, starting at the entering cell
/// `(pi, pj)`: returns `[(pi, pj), (i1, pj), (i1, j1), ...]` closing back on
/// row `pi`.
fn find_cycle(
    basic: &[bool],
    m: usize,
    n: usize,
    pi: usize,
    pj: usize,
) -> Option<Vec<(usize, usize)>> {
    // Search for a path col pj -> ... -> row pi alternating through basic
    // cells; stack holds (cell, true if we arrived at the cell's row side).
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        basic: &[bool],
        m: usize,
        n: usize,
        target_row: usize,
        at_col: usize,
        visited_rows: &mut Vec<bool>,
        visited_cols: &mut Vec<bool>,
        path: &mut Vec<(usize, usize)>,
    ) -> bool {
        visited_cols[at_col] = true;
        for i in 0..m {
            if !basic[i * n + at_col] || visited_rows[i] {
                continue;
            }
            path.push((i, at_col));
            if i == target_row {
                return true;
            }
            visited_rows[i] = true;
            for j in 0..n {
                if j != at_col && basic[i * n + j] && !visited_cols[j] {
                    path.push((i, j));
                    if dfs(basic, m, n, target_row, j, visited_rows, visited_cols, path) {
                        return true;
                    }
                    path.pop();
                }
            }
            path.pop();
        }
        false
    }

    let mut path = vec![(pi, pj)];
    let mut vr = vec![false; m];
    let mut vc = vec![false; n];
    if dfs(basic, m, n, pi, pj, &mut vr, &mut vc, &mut path) {
        // path currently: (pi,pj), then alternating (i,pj), (i,j'), ..., ending (pi, j_last)
        Some(path)
    } else {
        None
    }
}

/// Flows for a given spanning basis under the original (unperturbed) masses,
/// by leaf elimination; returns the priced value.
fn basis_value(
    supply: &[f64],
    demand: &[f64],
    cost: &[f64],
    basic: &[bool],
    n: usize,
) -> Result<f64> {
    let m = supply.len();
    let mut rs = supply.to_vec();
    let mut rd = demand.to_vec();
    let mut remaining: Vec<(usize, usize)> = (0..m * n)
        .filter(|k| basic[*k])
        .map(|k| (k / n, k % n))
        .collect();
    let mut value = 0.0;
    while !remaining.is_empty() {
        let mut progressed = false;
        let mut k = 0;
        while k < remaining.len() {
            let (i, j) = remaining[k];
            let row_deg = remaining.iter().filter(|(a, _)| *a == i).count();
            let col_deg = remaining.iter().filter(|(_, b)| *b == j).count();
            if row_deg == 1 {
                let f = rs[i];
                value += f.max(0.0) * cost[i * n + j];
                rd[j] -= f;
                rs[i] = 0.0;
                remaining.swap_remove(k);
                progressed = true;
            } else if col_deg == 1 {
                let f = rd[j];
                value += f.max(0.0) * cost[i * n + j];
                rs[i] -= f;
                rd[j] = 0.0;
                remaining.swap_remove(k);
                progressed = true;
            } else {
                k += 1;
            }
        }
        if !progressed {
            return Err(Error::oracle("transport basis is not a forest".to_string()));
        }
    }
    Ok(value)
}

/// 16-point Gauss-Legendre nodes (positive half) and weights on [-1, 1].
const GL16: [(f64, f64); 8] = [
    (0.0950125098376374, 0.1894506104550685),
    (0.2816035507792589, 0.1826034150449236),
    (0.4580167776572274, 0.1691565193950025),
    (0.6178762444026438, 0.1495959888165767),
    (0.755404408355003, 0.1246289712555339),
    (0.8656312023878318, 0.0951585116824928),
    (0.9445750230732326, 0.0622535239386479),
    (0.9894009349916499, 0.0271524594117541),
];

/// Mollified inner product by adaptive quadrature: integrates
/// `(G_delta * nu1)(x) (G_delta * nu2)(x)` over a padded bounding box with
/// composite 16-point Gauss-Legendre panels, doubling the panel count until
/// two successive refinements agree to 1e-9 relative. Supports d = 1 and
/// d = 2; this exists to validate the closed form, not to be fast.
pub fn quadrature_mollified(
    nu1: &WeightedAtomMeasure,
    nu2: &WeightedAtomMeasure,
    delta: f64,
) -> Result<f64> {
    if nu1.dim() != nu2.dim() {
        return Err(Error::dim("quadrature_mollified", nu1.dim(), nu2.dim()));
    }
    let d = nu1.dim();
    if d > 2 {
        return Err(Error::oracle(format!(
            "quadrature_mollified supports d <= 2, got {d}"
        )));
    }
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::param("delta", "must be finite positive"));
    }

    let pad = 10.0 * delta.sqrt();
    let mut lo = vec![f64::INFINITY; d];
    let mut hi = vec![f64::NEG_INFINITY; d];
    for nu in [nu1, nu2] {
        for i in 0..nu.len() {
            for (k, xk) in nu.position(i).iter().enumerate() {
                lo[k] = lo[k].min(*xk);
                hi[k] = hi[k].max(*xk);
            }
        }
    }
    for k in 0..d {
        lo[k] -= pad;
        hi[k] += pad;
    }

    let field = |nu: &WeightedAtomMeasure, x: &[f64]| -> f64 {
        let norm = (2.0 * std::f64::consts::PI * delta)
            .powi(-(d as i32))
            .sqrt();
        let mut acc = 0.0;
        for i in 0..nu.len() {
            let mut dist2 = 0.0;
            for (k, xk) in x.iter().enumerate() {
                let dk = xk - nu.position(i)[k];
                dist2 += dk * dk;
            }
            acc += nu.weight(i) * (-dist2 / (2.0 * delta)).exp();
        }
        acc * norm
    };

    let integrate = |panels: usize| -> f64 {
        // tensor-product composite GL16 over the box
        let axis_nodes = |k: usize| -> Vec<(f64, f64)> {
            let width = (hi[k] - lo[k]) / panels as f64;
            let mut pts = Vec::with_capacity(panels * 16);
            for p in 0..panels {
                let c = lo[k] + (p as f64 + 0.5) * width;
                let half = 0.5 * width;
                for (x, w) in GL16 {
                    pts.push((c - half * x, w * half));
                    pts.push((c + half * x, w * half));
                }
            }
            pts
        };
        match d {
            1 => {
                let pts = axis_nodes(0);
                let mut acc = 0.0;
                for (x, w) in pts {
                    let xv = [x];
                    acc += w * field(nu1, &xv) * field(nu2, &xv);
                }
                acc
            }
            _ => {
                let px = axis_nodes(0);
                let py = axis_nodes(1);
                let mut acc = 0.0;
                for &(x, wx) in &px {
                    let mut inner = 0.0;
                    for &(y, wy) in &py {
                        let xv = [x, y];
                        inner += wy * field(nu1, &xv) * field(nu2, &xv);
                    }
                    acc += wx * inner;
                }
                acc
            }
        }
    };

    let mut panels = 4;
    let mut prev = integrate(panels);
    let max_panels = if d == 1 { 512 } else { 64 };
    while panels < max_panels {
        panels *= 2;
        let next = integrate(panels);
        let scale = next.abs().max(1e-300);
        if (next - prev).abs() <= 1e-9 * scale {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::oracle(
        "quadrature_mollified did not converge within the panel budget".to_string(),
    ))
}

/// One validated oracle value, recorded with everything needed to regenerate
/// it. Fixtures are produced at test time and written as JSON next to the
/// reports; nothing is hard-coded.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleFixture {
    pub oracle: String,
    pub parameters: BTreeMap<String, f64>,
    pub seed: u64,
    pub value: f64,
    pub tolerance: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{wasserstein1, ProbabilityAtomMeasure, WeightedAtomMeasure};
    use rand::Rng;
    use rand::SeedableRng;

    fn prob(dim: usize, pos: Vec<f64>, w: Vec<f64>) -> ProbabilityAtomMeasure {
        let total: f64 = w.iter().sum();
        let w = w.into_iter().map(|x| x / total).collect();
        ProbabilityAtomMeasure::new(WeightedAtomMeasure::from_flat(dim, pos, w).unwrap()).unwrap()
    }

    #[test]
    fn transport_matches_quantile_on_random_pairs() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(1234);
        for trial in 0..20 {
            let na = rng.gen_range(1..=8);
            let nb = rng.gen_range(1..=8);
            let pa: Vec<f64> = (0..na).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let pb: Vec<f64> = (0..nb).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let wa: Vec<f64> = (0..na).map(|_| rng.gen_range(0.05..1.0)).collect();
            let wb: Vec<f64> = (0..nb).map(|_| rng.gen_range(0.05..1.0)).collect();
            let a = prob(1, pa, wa);
            let b = prob(1, pb, wb);
            let lp = w1_bruteforce(&a, &b).unwrap();
            let fast = wasserstein1(&a, &b).unwrap();
            assert!(fast.exact);
            assert!(
                (lp - fast.value).abs() <= 1e-9,
                "trial {trial}: LP {lp} vs quantile {}",
                fast.value
            );
        }
    }

    #[test]
    fn transport_handles_degenerate_equal_measures() {
        let a = prob(1, vec![0.0, 1.0, 2.0], vec![1.0, 1.0, 1.0]);
        let v = w1_bruteforce(&a, &a).unwrap();
        assert!(v.abs() <= 1e-10, "self distance {v}");
    }

    #[test]
    fn transport_rejects_large_inputs() {
        let pos: Vec<f64> = (0..9).map(|i| i as f64).collect();
        let w = vec![1.0; 9];
        let a = prob(1, pos, w);
        let b = prob(1, vec![0.0], vec![1.0]);
        assert!(matches!(w1_bruteforce(&a, &b), Err(Error::Oracle { .. })));
    }

    #[test]
    fn quadrature_agrees_with_closed_form_in_1d() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        for _ in 0..3 {
            let pos1: Vec<f64> = (0..5).map(|_| rng.gen_range(-1.5..1.5)).collect();
            let pos2: Vec<f64> = (0..5).map(|_| rng.gen_range(-1.5..1.5)).collect();
            let w1: Vec<f64> = (0..5).map(|_| rng.gen_range(0.1..1.0)).collect();
            let w2: Vec<f64> = (0..5).map(|_| rng.gen_range(0.1..1.0)).collect();
            let nu1 = WeightedAtomMeasure::from_flat(1, pos1, w1).unwrap();
            let nu2 = WeightedAtomMeasure::from_flat(1, pos2, w2).unwrap();
            let delta = rng.gen_range(0.05..0.5);
            let quad = quadrature_mollified(&nu1, &nu2, delta).unwrap();
            let closed = crate::measures::mollified_inner(&nu1, &nu2, delta).unwrap();
            assert!(
                (quad - closed).abs() <= 1e-6 * closed.abs().max(1e-12),
                "quad {quad} vs closed {closed} at delta {delta}"
            );
        }
    }

    #[test]
    fn quadrature_agrees_with_closed_form_in_2d() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(8);
        let pos1: Vec<f64> = (0..10).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let pos2: Vec<f64> = (0..10).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let w1: Vec<f64> = (0..5).map(|_| rng.gen_range(0.1..1.0)).collect();
        let w2: Vec<f64> = (0..5).map(|_| rng.gen_range(0.1..1.0)).collect();
        let nu1 = WeightedAtomMeasure::from_flat(2, pos1, w1).unwrap();
        let nu2 = WeightedAtomMeasure::from_flat(2, pos2, w2).unwrap();
        let quad = quadrature_mollified(&nu1, &nu2, 0.2).unwrap();
        let closed = crate::measures::mollified_inner(&nu1, &nu2, 0.2).unwrap();
        assert!(
            (quad - closed).abs() <= 1e-6 * closed.abs().max(1e-12),
            "quad {quad} vs closed {closed}"
        );
    }

    #[test]
    fn riccati_reaches_the_unit_fixed_point() {
        // a = 0, sigma = 1, rho = 0, c = 1: dP/dt = 1 - P^2, P* = 1
        let model = LinearModel {
            a: 0.0,
            a_bar: 0.0,
            sigma: 1.0,
            rho: 0.0,
            c: 1.0,
            m0: 0.0,
            p0: 0.25,
        };
        let steps = 800;
        let dt = 5e-3;
        let times: Vec<f64> = (0..=steps).map(|k| k as f64 * dt).collect();
        let y = vec![0.0; times.len()];
        let path = kalman_bucy_correlated(&model, &times, &y).unwrap();
        let p_end = path.last().unwrap().var;
        // closed form: P(t) = tanh(t + atanh(P0))
        let expected = (times.last().unwrap() + 0.25f64.atanh()).tanh();
        assert!(
            (p_end - expected).abs() < 1e-9,
            "P_end {p_end} vs {expected}"
        );
    }

    #[test]
    fn linear_variance_closed_form_without_observations() {
        // c = 0, rho = 0: dP = 2aP + sigma^2, P(t) = (P0 + s2/(2a)) e^{2at} - s2/(2a)
        let model = LinearModel {
            a: -0.7,
            a_bar: 0.0,
            sigma: 0.9,
            rho: 0.0,
            c: 0.0,
            m0: 1.0,
            p0: 0.1,
        };
        let times: Vec<f64> = (0..=200).map(|k| k as f64 * 5e-3).collect();
        let y = vec![0.0; times.len()];
        let path = kalman_bucy_correlated(&model, &times, &y).unwrap();
        let t = *times.last().unwrap();
        let s2 = model.sigma * model.sigma;
        let expected =
            (model.p0 + s2 / (2.0 * model.a)) * (2.0 * model.a * t).exp() - s2 / (2.0 * model.a);
        let got = path.last().unwrap().var;
        assert!((got - expected).abs() < 1e-10, "{got} vs {expected}");
        // with c = 0, rho = 0 the mean ignores Y: m(t) = m0 e^{at}
        let m_expected = model.m0 * (model.a * t).exp();
        let m_got = path.last().unwrap().mean;
        assert!((m_got - m_expected).abs() < 2e-3, "{m_got} vs {m_expected}");
    }

    #[test]
    fn meanfield_shift_changes_only_the_mean() {
        let base = LinearModel {
            a: -0.5,
            a_bar: 0.4,
            sigma: 1.0,
            rho: 0.3,
            c: 1.0,
            m0: 1.0,
            p0: 0.2,
        };
        let times: Vec<f64> = (0..=100).map(|k| k as f64 * 0.01).collect();
        // deterministic pseudo-observations
        let y: Vec<f64> = times.iter().map(|t| (3.0 * t).sin() * 0.2).collect();
        let plain = kalman_bucy_correlated(&base, &times, &y).unwrap();
        let mf = meanfield_linear_mean(&base, &times, &y).unwrap();
        let var_gap = plain
            .iter()
            .zip(&mf)
            .map(|(p, q)| (p.var - q.var).abs())
            .fold(0.0, f64::max);
        assert_eq!(var_gap, 0.0);
        let mean_gap = plain
            .iter()
            .zip(&mf)
            .map(|(p, q)| (p.mean - q.mean).abs())
            .fold(0.0, f64::max);
        assert!(mean_gap > 1e-3);
    }
}
