//! Weighted atomic measures and the geometries used on them.
//!
//! Everything downstream manipulates finite nonnegative atomic measures
//! `nu = sum_i w_i delta_{x_i}` on `R^d`. This module provides:
//!
//! * pairings `<nu, phi>` against test functions,
//! * normalization to probability measures (the Kallianpur-Striebel step),
//!   guarded by a mass floor so weight collapse fails loudly,
//! * the Wasserstein-1 distance (exact quantile coupling in d = 1, sliced
//!   projection estimate in d > 1),
//! * the truncated pairing metric `d(nu1, nu2) = sum_k 2^{-k} (|<nu1 - nu2,
//!   phi_k>| ∧ 1)` and its sequence-space twin `d_infinity`,
//! * the coordinate map `nu -> (<nu, phi_1>, ..., <nu, phi_K>)` into sequence
//!   space, and
//! * a mollified L2 geometry: `<G_delta * nu1, G_delta * nu2>_{L2}` has the
//!   closed form `sum_ij w_i v_j G_{2 delta}(x_i - y_j)` because the
//!   convolution of two centered Gaussians of variance `delta` is one of
//!   variance `2 delta`.
//!
//! Sums are accumulated in atom-index order, unconditionally: pairings and
//! masses are part of the reproducibility contract.

use crate::basis::{TestFunction, TestFunctionBasis};
use crate::error::{Error, Result};
use crate::rng::{substream, StreamPurpose};
use rand_distr::{Distribution, StandardNormal};

/// Relative mass floor: normalization refuses to divide by a total mass at or
/// below `MASS_FLOOR_REL` times the run's initial mass.
pub const MASS_FLOOR_REL: f64 = 1e-12;

/// Number of random directions used by the sliced Wasserstein-1 estimate.
pub const SLICED_W1_PROJECTIONS: usize = 64;

/// Fixed stream seed for the sliced-W1 directions, so the estimate is a
/// deterministic function of its arguments.
const SLICED_W1_SEED: u64 = 0x5ca1ab1e;

/// Finite nonnegative atomic measure on `R^d`.
///
/// Positions are stored flat, row-major (`n * dim` values). Weights are
/// nonnegative and finite; at least one atom is required.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedAtomMeasure {
    dim: usize,
    positions: Vec<f64>,
    weights: Vec<f64>,
}

impl WeightedAtomMeasure {
    pub fn from_flat(dim: usize, positions: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::param("dim", "must be at least 1"));
        }
        if weights.is_empty() {
            return Err(Error::param("weights", "measure needs at least one atom"));
        }
        if positions.len() != weights.len() * dim {
            return Err(Error::dim(
                "atom positions",
                weights.len() * dim,
                positions.len(),
            ));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::param(
                "weights",
                format!("must be finite nonnegative, got {w}"),
            ));
        }
        if positions.iter().any(|p| !p.is_finite()) {
            return Err(Error::param("positions", "must be finite"));
        }
        Ok(WeightedAtomMeasure {
            dim,
            positions,
            weights,
        })
    }

    /// Point mass `delta_x` with unit weight.
    pub fn dirac(position: Vec<f64>) -> Result<Self> {
        let dim = position.len();
        Self::from_flat(dim, position, vec![1.0])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of atoms.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn position(&self, i: usize) -> &[f64] {
        &self.positions[i * self.dim..(i + 1) * self.dim]
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn positions_flat(&self) -> &[f64] {
        &self.positions
    }

    /// Total mass `<nu, 1>`, accumulated in atom order.
    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Pairing `<nu, phi> = sum_i w_i phi(x_i)`.
    pub fn pair(&self, phi: &dyn TestFunction) -> Result<f64> {
        if phi.dim() != self.dim {
            return Err(Error::dim("pair", self.dim, phi.dim()));
        }
        let mut acc = 0.0;
        for i in 0..self.len() {
            acc += self.weights[i] * phi.value(self.position(i));
        }
        Ok(acc)
    }

    /// Kallianpur-Striebel normalization: divide by total mass, refusing when
    /// the mass is at or below `mass_floor` (weight degeneracy).
    pub fn normalize(&self, mass_floor: f64) -> Result<ProbabilityAtomMeasure> {
        let mass = self.total_mass();
        if !(mass > mass_floor) || !mass.is_finite() {
            return Err(Error::WeightDegeneracy {
                mass,
                floor: mass_floor,
            });
        }
        let weights = self.weights.iter().map(|w| w / mass).collect();
        Ok(ProbabilityAtomMeasure(WeightedAtomMeasure {
            dim: self.dim,
            positions: self.positions.clone(),
            weights,
        }))
    }

    /// Convenience for unit initial mass (the canonical scheme starts at
    /// `<nu_0, 1> = 1`): floor is [`MASS_FLOOR_REL`].
    pub fn normalize_unit(&self) -> Result<ProbabilityAtomMeasure> {
        self.normalize(MASS_FLOOR_REL)
    }
}

/// Atomic probability measure: a [`WeightedAtomMeasure`] whose total mass is
/// 1 within 1e-12 by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityAtomMeasure(WeightedAtomMeasure);

impl ProbabilityAtomMeasure {
    /// Wraps a measure that is already normalized; rejects anything whose
    /// mass strays from 1 by more than 1e-12.
    pub fn new(measure: WeightedAtomMeasure) -> Result<Self> {
        let mass = measure.total_mass();
        if (mass - 1.0).abs() > 1e-12 {
            return Err(Error::param(
                "measure",
                format!("probability measure must have unit mass, got {mass}"),
            ));
        }
        Ok(ProbabilityAtomMeasure(measure))
    }

    pub fn dirac(position: Vec<f64>) -> Result<Self> {
        Ok(ProbabilityAtomMeasure(WeightedAtomMeasure::dirac(
            position,
        )?))
    }

    pub fn as_weighted(&self) -> &WeightedAtomMeasure {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, i: usize) -> &[f64] {
        self.0.position(i)
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.0.weight(i)
    }

    pub fn pair(&self, phi: &dyn TestFunction) -> Result<f64> {
        self.0.pair(phi)
    }

    /// Mean `<mu, x>` as a vector.
    pub fn mean(&self) -> Vec<f64> {
        let d = self.0.dim;
        let mut m = vec![0.0; d];
        for i in 0..self.0.len() {
            let w = self.0.weights[i];
            for (mk, xk) in m.iter_mut().zip(self.0.position(i)) {
                *mk += w * xk;
            }
        }
        m
    }
}

/// Wasserstein-1 value together with whether it is the exact distance or the
/// sliced-projection estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct W1Estimate {
    pub value: f64,
    pub exact: bool,
}

/// Wasserstein-1 distance between atomic probability measures.
///
/// In d = 1 this is the exact quantile coupling `int_0^1 |F_a^{-1} - F_b^{-1}|`.
/// In d > 1 it falls back to the sliced estimate with
/// [`SLICED_W1_PROJECTIONS`] fixed random directions, flagged `exact: false`.
pub fn wasserstein1(a: &ProbabilityAtomMeasure, b: &ProbabilityAtomMeasure) -> Result<W1Estimate> {
    if a.dim() != b.dim() {
        return Err(Error::dim("wasserstein1", a.dim(), b.dim()));
    }
    if a.dim() == 1 {
        let va: Vec<(f64, f64)> = (0..a.len())
            .map(|i| (a.position(i)[0], a.weight(i)))
            .collect();
        let vb: Vec<(f64, f64)> = (0..b.len())
            .map(|i| (b.position(i)[0], b.weight(i)))
            .collect();
        Ok(W1Estimate {
            value: quantile_w1(va, vb),
            exact: true,
        })
    } else {
        Ok(W1Estimate {
            value: sliced_w1(a, b, SLICED_W1_PROJECTIONS, SLICED_W1_SEED)?,
            exact: false,
        })
    }
}

/// Sliced Wasserstein-1: average of the one-dimensional distances between the
/// projections of `a` and `b` onto `projections` random unit directions.
pub fn sliced_w1(
    a: &ProbabilityAtomMeasure,
    b: &ProbabilityAtomMeasure,
    projections: usize,
    seed: u64,
) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::dim("sliced_w1", a.dim(), b.dim()));
    }
    if projections == 0 {
        return Err(Error::param("projections", "must be at least 1"));
    }
    let d = a.dim();
    let mut rng = substream(seed, 0, StreamPurpose::Projection, 0);
    let mut acc = 0.0;
    let mut dir = vec![0.0; d];
    for _ in 0..projections {
        loop {
            let mut norm2 = 0.0f64;
            for v in dir.iter_mut() {
                *v = StandardNormal.sample(&mut rng);
                norm2 += *v * *v;
            }
            if norm2 > 1e-24 {
                let inv = norm2.sqrt().recip();
                for v in dir.iter_mut() {
                    *v *= inv;
                }
                break;
            }
        }
        let proj = |m: &ProbabilityAtomMeasure| -> Vec<(f64, f64)> {
            (0..m.len())
                .map(|i| {
                    let x = m.position(i);
                    (
                        x.iter().zip(&dir).map(|(xi, ui)| xi * ui).sum(),
                        m.weight(i),
                    )
                })
                .collect()
        };
        acc += quantile_w1(proj(a), proj(b));
    }
    Ok(acc / projections as f64)
}

/// Exact 1-d W1 by merging the two quantile functions. Weights must sum to 1
/// within rounding; the final cumulative is forced to 1 so the merge is total.
fn quantile_w1(mut a: Vec<(f64, f64)>, mut b: Vec<(f64, f64)>) -> f64 {
    a.retain(|(_, w)| *w > 0.0);
    b.retain(|(_, w)| *w > 0.0);
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    a.sort_by(|p, q| p.0.partial_cmp(&q.0).expect("positions are finite"));
    b.sort_by(|p, q| p.0.partial_cmp(&q.0).expect("positions are finite"));

    let (mut i, mut j) = (0usize, 0usize);
    let (mut ca, mut cb) = (a[0].1, b[0].1);
    let mut q = 0.0;
    let mut total = 0.0;
    loop {
        let last_a = i + 1 == a.len();
        let last_b = j + 1 == b.len();
        let ca_eff = if last_a { 1.0 } else { ca };
        let cb_eff = if last_b { 1.0 } else { cb };
        let qn = ca_eff.min(cb_eff);
        total += (qn - q).max(0.0) * (a[i].0 - b[j].0).abs();
        q = qn;
        if last_a && last_b {
            break;
        }
        if !last_a && ca_eff <= qn {
            i += 1;
            ca += a[i].1;
        } else {
            j += 1;
            cb += b[j].1;
        }
    }
    total
}

/// Truncated pairing metric with its truncation tail bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedMetric {
    pub value: f64,
    /// The discarded tail `sum_{k > K} 2^{-k} (.. ∧ 1)` is at most this.
    pub tail_bound: f64,
}

/// `sum_{k=1}^{K} 2^{-k} (|<nu1, phi_k> - <nu2, phi_k>| ∧ 1)` over the first
/// `k_trunc` members of the basis, plus the `2^{-K}` tail bound.
pub fn metric_d(
    nu1: &WeightedAtomMeasure,
    nu2: &WeightedAtomMeasure,
    basis: &TestFunctionBasis,
    k_trunc: usize,
) -> Result<TruncatedMetric> {
    if nu1.dim() != nu2.dim() {
        return Err(Error::dim("metric_d", nu1.dim(), nu2.dim()));
    }
    if basis.dim() != nu1.dim() {
        return Err(Error::dim("metric_d basis", nu1.dim(), basis.dim()));
    }
    if k_trunc == 0 || k_trunc > basis.len() {
        return Err(Error::param(
            "k_trunc",
            format!("must be in 1..={}, got {k_trunc}", basis.len()),
        ));
    }
    let mut value = 0.0;
    let mut pow = 1.0;
    for k in 0..k_trunc {
        pow *= 0.5;
        let phi = basis.get(k)?;
        let gap = (nu1.pair(phi)? - nu2.pair(phi)?).abs().min(1.0);
        value += pow * gap;
    }
    Ok(TruncatedMetric {
        value,
        tail_bound: pow,
    })
}

/// Coordinate map into sequence space: `(<nu, phi_1>, ..., <nu, phi_K>)`.
pub fn project_coordinates(
    nu: &WeightedAtomMeasure,
    basis: &TestFunctionBasis,
    k_trunc: usize,
) -> Result<Vec<f64>> {
    if basis.dim() != nu.dim() {
        return Err(Error::dim(
            "project_coordinates basis",
            nu.dim(),
            basis.dim(),
        ));
    }
    if k_trunc == 0 || k_trunc > basis.len() {
        return Err(Error::param(
            "k_trunc",
            format!("must be in 1..={}, got {k_trunc}", basis.len()),
        ));
    }
    (0..k_trunc).map(|k| nu.pair(basis.get(k)?)).collect()
}

/// Sequence-space metric `sum_{k=1}^{K} 2^{-k} (|z1_k - z2_k| ∧ 1)`, the same
/// formula as [`metric_d`] applied to coordinates.
pub fn d_infinity(z1: &[f64], z2: &[f64], k_trunc: usize) -> Result<f64> {
    if z1.len() != z2.len() {
        return Err(Error::dim("d_infinity", z1.len(), z2.len()));
    }
    if k_trunc == 0 || k_trunc > z1.len() {
        return Err(Error::param(
            "k_trunc",
            format!("must be in 1..={}, got {k_trunc}", z1.len()),
        ));
    }
    let mut value = 0.0;
    let mut pow = 1.0;
    for k in 0..k_trunc {
        pow *= 0.5;
        value += pow * (z1[k] - z2[k]).abs().min(1.0);
    }
    Ok(value)
}

/// `<G_delta * nu1, G_delta * nu2>_{L2(R^d)}`, in closed form:
/// `sum_ij w_i v_j G_{2 delta}(x_i - y_j)` with
/// `G_s(z) = (2 pi s)^{-d/2} exp(-|z|^2 / (2 s))`.
pub fn mollified_inner(
    nu1: &WeightedAtomMeasure,
    nu2: &WeightedAtomMeasure,
    delta: f64,
) -> Result<f64> {
    if nu1.dim() != nu2.dim() {
        return Err(Error::dim("mollified_inner", nu1.dim(), nu2.dim()));
    }
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::param(
            "delta",
            format!("must be finite positive, got {delta}"),
        ));
    }
    let d = nu1.dim();
    let s = 2.0 * delta;
    let norm = (2.0 * std::f64::consts::PI * s).powi(-(d as i32)).sqrt();
    let inv2s = 1.0 / (2.0 * s);
    let mut acc = 0.0;
    for i in 0..nu1.len() {
        let xi = nu1.position(i);
        let wi = nu1.weight(i);
        if wi == 0.0 {
            continue;
        }
        let mut row = 0.0;
        for j in 0..nu2.len() {
            let yj = nu2.position(j);
            let mut dist2 = 0.0;
            for k in 0..d {
                let dk = xi[k] - yj[k];
                dist2 += dk * dk;
            }
            row += nu2.weight(j) * (-dist2 * inv2s).exp();
        }
        acc += wi * row;
    }
    Ok(acc * norm)
}

/// Mollified L2 distance `|| G_delta * (nu1 - nu2) ||_{L2}`.
///
/// The squared distance is assembled from three inner products; negative
/// round-off above `-1e-12` is clamped to zero.
pub fn mollified_l2_distance(
    nu1: &WeightedAtomMeasure,
    nu2: &WeightedAtomMeasure,
    delta: f64,
) -> Result<f64> {
    let i11 = mollified_inner(nu1, nu1, delta)?;
    let i12 = mollified_inner(nu1, nu2, delta)?;
    let i22 = mollified_inner(nu2, nu2, delta)?;
    let sq = i11 - 2.0 * i12 + i22;
    debug_assert!(
        sq > -1e-12,
        "mollified squared distance {sq} below clamp window"
    );
    Ok(sq.max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Monomial2;

    fn atoms1(data: &[(f64, f64)]) -> WeightedAtomMeasure {
        let positions = data.iter().map(|(x, _)| *x).collect();
        let weights = data.iter().map(|(_, w)| *w).collect();
        WeightedAtomMeasure::from_flat(1, positions, weights).unwrap()
    }

    fn prob1(data: &[(f64, f64)]) -> ProbabilityAtomMeasure {
        ProbabilityAtomMeasure::new(atoms1(data)).unwrap()
    }

    #[test]
    fn pair_is_the_weighted_sum() {
        let nu = atoms1(&[(0.0, 0.3), (2.0, 0.7)]);
        let sq = Monomial2 { dim: 1, i: 0, j: 0 };
        assert!((nu.pair(&sq).unwrap() - 2.8).abs() < 1e-15);
    }

    #[test]
    fn pair_rejects_dimension_mismatch() {
        let nu = atoms1(&[(0.0, 1.0)]);
        let phi = Monomial2 { dim: 2, i: 0, j: 1 };
        assert!(matches!(nu.pair(&phi), Err(Error::Dimension { .. })));
    }

    #[test]
    fn normalize_divides_by_mass_and_guards_degeneracy() {
        let nu = atoms1(&[(0.0, 2.0), (1.0, 6.0)]);
        let mu = nu.normalize(MASS_FLOOR_REL).unwrap();
        assert_eq!(mu.weight(0), 0.25);
        assert_eq!(mu.weight(1), 0.75);

        let tiny = atoms1(&[(0.0, 1e-15), (1.0, 2e-15)]);
        match tiny.normalize(1e-12) {
            Err(Error::WeightDegeneracy { mass, floor }) => {
                assert!(mass < floor);
            }
            other => panic!("expected weight degeneracy, got {other:?}"),
        }
    }

    #[test]
    fn w1_point_masses_and_splits() {
        let d0 = prob1(&[(0.0, 1.0)]);
        let d1 = prob1(&[(1.0, 1.0)]);
        let w = wasserstein1(&d0, &d1).unwrap();
        assert!(w.exact);
        assert!((w.value - 1.0).abs() < 1e-15);

        let split = prob1(&[(0.0, 0.5), (1.0, 0.5)]);
        let mid = prob1(&[(0.5, 1.0)]);
        let w = wasserstein1(&split, &mid).unwrap();
        assert!((w.value - 0.5).abs() < 1e-15);

        // identical measures, shuffled atom order
        let p = prob1(&[(0.3, 0.2), (-1.0, 0.5), (2.0, 0.3)]);
        let q = prob1(&[(2.0, 0.3), (0.3, 0.2), (-1.0, 0.5)]);
        let w = wasserstein1(&p, &q).unwrap();
        assert!(w.value.abs() < 1e-15);
    }

    #[test]
    fn w1_translation_invariance_of_shifts() {
        // shifting both measures by c leaves W1 unchanged; shifting one by c
        // moves W1 by exactly |c| when supports are ordered
        let p = prob1(&[(0.0, 0.5), (1.0, 0.5)]);
        let q = prob1(&[(3.0, 0.25), (4.0, 0.75)]);
        let w = wasserstein1(&p, &q).unwrap().value;
        let p2 = prob1(&[(10.0, 0.5), (11.0, 0.5)]);
        let q2 = prob1(&[(13.0, 0.25), (14.0, 0.75)]);
        let w2 = wasserstein1(&p2, &q2).unwrap().value;
        assert!((w - w2).abs() < 1e-12);
    }

    #[test]
    fn sliced_w1_is_deterministic_and_flagged() {
        let a = ProbabilityAtomMeasure::new(
            WeightedAtomMeasure::from_flat(2, vec![0.0, 0.0, 1.0, 1.0], vec![0.5, 0.5]).unwrap(),
        )
        .unwrap();
        let b = ProbabilityAtomMeasure::dirac(vec![0.5, 0.5]).unwrap();
        let w1 = wasserstein1(&a, &b).unwrap();
        assert!(!w1.exact);
        let w2 = wasserstein1(&a, &b).unwrap();
        assert_eq!(w1.value, w2.value);
        assert!(w1.value > 0.0);
    }

    #[test]
    fn metric_d_matches_d_infinity_on_projections() {
        let basis = TestFunctionBasis::dyadic(1, 4.0, 12).unwrap();
        let nu1 = atoms1(&[(0.0, 0.4), (0.7, 0.6)]);
        let nu2 = atoms1(&[(-0.2, 1.1)]);
        let m = metric_d(&nu1, &nu2, &basis, 12).unwrap();
        let z1 = project_coordinates(&nu1, &basis, 12).unwrap();
        let z2 = project_coordinates(&nu2, &basis, 12).unwrap();
        let di = d_infinity(&z1, &z2, 12).unwrap();
        assert_eq!(m.value, di);
        assert!((m.tail_bound - 0.5f64.powi(12)).abs() < 1e-18);
        // identical measures: zero
        let zero = metric_d(&nu1, &nu1, &basis, 12).unwrap();
        assert_eq!(zero.value, 0.0);
    }

    #[test]
    fn mollified_inner_unit_normalization() {
        // two unit point masses at the origin, delta = 1/(4 pi), d = 1:
        // <G_delta * delta_0, G_delta * delta_0> = G_{2 delta}(0) = 1
        let nu = atoms1(&[(0.0, 1.0)]);
        let delta = 1.0 / (4.0 * std::f64::consts::PI);
        let v = mollified_inner(&nu, &nu, delta).unwrap();
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn mollified_distance_is_zero_on_equal_and_symmetric() {
        let nu1 = atoms1(&[(0.0, 0.5), (1.5, 0.5), (-0.4, 0.25)]);
        let nu2 = atoms1(&[(0.2, 0.9), (2.0, 0.1)]);
        assert_eq!(mollified_l2_distance(&nu1, &nu1, 0.3).unwrap(), 0.0);
        let a = mollified_inner(&nu1, &nu2, 0.3).unwrap();
        let b = mollified_inner(&nu2, &nu1, 0.3).unwrap();
        assert!((a - b).abs() <= 1e-14 * a.abs().max(1.0));
        let dist = mollified_l2_distance(&nu1, &nu2, 0.3).unwrap();
        assert!(dist > 0.0);
    }

    #[test]
    fn probability_constructor_rejects_unnormalized() {
        let nu = atoms1(&[(0.0, 0.5), (1.0, 0.6)]);
        assert!(ProbabilityAtomMeasure::new(nu).is_err());
    }
}
