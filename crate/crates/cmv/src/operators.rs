//! Differential operators on test functions and on measures.
//!
//! Two operators act pointwise on a test function:
//!
//! * `L phi = 1/2 (sigma sigma^T + rho rho^T) : hess phi + b . grad phi`,
//!   the state generator. Both diffusions contribute: the particle sees
//!   its own noise and the common channel.
//! * `H phi = rho . grad phi + h phi`, the observation coupling. This is the
//!   integrand of the stochastic term of the weak filtering equation.
//!
//! On measure space, functions of the form `F(nu) = f(<nu, psi_1>, ...,
//! <nu, psi_k>)` (cylindrical) admit closed-form derivatives. The convention
//! stacks value under gradient: `D psi(x) = (grad psi(x), psi(x))` lives in
//! `R^{d+1}`, so that the contraction `D psi . (rho, h)` reproduces `H psi`.
//! With that convention the generator of the unnormalized conditional flow is
//!
//! ```text
//! G F(n) = int [ dF.(b,0) + 1/2 (ss^T + rr^T) : hess-block dxdF ] dn
//!          + 1/2 int int d2F(x, x') : H(x) H(x')^T dn(x) dn(x')
//! ```
//!
//! with coefficients read at the normalized law `m = n / n(R^d)`. The double
//! integral factors through the rank-one structure of `H H^T`, so the whole
//! generator costs one pass over the atoms.
//!
//! Projecting on basis coordinates `z_i = <n, phi_i>` gives the lifted
//! coefficients `gamma_i = <n, H phi_i>`, `beta_i = <n, L phi_i>`,
//! `alpha_ij = gamma_i gamma_j`, and the flat generator
//! `A f = 1/2 sum a_ij d_ij f + sum b_i d_i f + 1/2 d_yy f` on functions of
//! `(z, y)`.

use crate::basis::{TestFunction, TestFunctionBasis};
use crate::coefficients::{CoeffValues, CoefficientSet, Prepared, YPrefix};
use crate::error::{Error, Result};
use crate::measures::{ProbabilityAtomMeasure, WeightedAtomMeasure};

/// Outer function of a cylindrical `F(nu) = f(<nu, psi>)`.
#[derive(Debug, Clone)]
pub enum Outer {
    /// `f(z) = w . z`
    Linear { weights: Vec<f64> },
    /// `f(z) = 1/2 sum_i w_i z_i^2`
    Quadratic { weights: Vec<f64> },
    /// `f(z) = exp(w . z)`
    Exp { weights: Vec<f64> },
    /// `f(z) = z_1 z_2` (arity exactly 2)
    Bilinear,
}

impl Outer {
    fn arity(&self) -> usize {
        match self {
            Outer::Linear { weights } | Outer::Quadratic { weights } | Outer::Exp { weights } => {
                weights.len()
            }
            Outer::Bilinear => 2,
        }
    }

    fn value(&self, z: &[f64]) -> f64 {
        match self {
            Outer::Linear { weights } => dot(weights, z),
            Outer::Quadratic { weights } => {
                0.5 * weights.iter().zip(z).map(|(w, v)| w * v * v).sum::<f64>()
            }
            Outer::Exp { weights } => dot(weights, z).exp(),
            Outer::Bilinear => z[0] * z[1],
        }
    }

    fn gradient(&self, z: &[f64], out: &mut [f64]) {
        match self {
            Outer::Linear { weights } => out.copy_from_slice(weights),
            Outer::Quadratic { weights } => {
                for ((o, w), v) in out.iter_mut().zip(weights).zip(z) {
                    *o = w * v;
                }
            }
            Outer::Exp { weights } => {
                let e = dot(weights, z).exp();
                for (o, w) in out.iter_mut().zip(weights) {
                    *o = e * w;
                }
            }
            Outer::Bilinear => {
                out[0] = z[1];
                out[1] = z[0];
            }
        }
    }

    fn hessian(&self, z: &[f64], out: &mut [f64]) {
        let k = self.arity();
        out.fill(0.0);
        match self {
            Outer::Linear { .. } => {}
            Outer::Quadratic { weights } => {
                for (i, w) in weights.iter().enumerate() {
                    out[i * k + i] = *w;
                }
            }
            Outer::Exp { weights } => {
                let e = dot(weights, z).exp();
                for i in 0..k {
                    for j in 0..k {
                        out[i * k + j] = e * weights[i] * weights[j];
                    }
                }
            }
            Outer::Bilinear => {
                out[1] = 1.0;
                out[k] = 1.0;
            }
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `F(nu) = f(<nu, psi_1>, ..., <nu, psi_k>)` with a smooth outer `f`.
pub struct CylindricalFunction<'a> {
    outer: Outer,
    inner: Vec<&'a dyn TestFunction>,
}

impl<'a> CylindricalFunction<'a> {
    pub fn new(outer: Outer, inner: Vec<&'a dyn TestFunction>) -> Result<Self> {
        if inner.is_empty() {
            return Err(Error::param(
                "inner",
                "cylinder needs at least one test function",
            ));
        }
        if outer.arity() != inner.len() {
            return Err(Error::dim("cylinder arity", outer.arity(), inner.len()));
        }
        let d = inner[0].dim();
        if inner.iter().any(|psi| psi.dim() != d) {
            return Err(Error::param(
                "inner",
                "test functions must share one dimension",
            ));
        }
        Ok(CylindricalFunction { outer, inner })
    }

    /// Cylinder over the first `k` functions of a dyadic basis.
    pub fn from_basis(outer: Outer, basis: &'a TestFunctionBasis, k: usize) -> Result<Self> {
        let mut inner: Vec<&'a dyn TestFunction> = Vec::with_capacity(k);
        for idx in 0..k {
            inner.push(basis.get(idx)?);
        }
        CylindricalFunction::new(outer, inner)
    }

    pub fn k(&self) -> usize {
        self.inner.len()
    }

    pub fn dim(&self) -> usize {
        self.inner[0].dim()
    }

    /// Projection coordinates `z_i = <nu, psi_i>`.
    pub fn project(&self, nu: &WeightedAtomMeasure) -> Result<Vec<f64>> {
        self.inner.iter().map(|psi| nu.pair(*psi)).collect()
    }

    pub fn value(&self, nu: &WeightedAtomMeasure) -> Result<f64> {
        Ok(self.outer.value(&self.project(nu)?))
    }
}

/// State generator applied to one test function at one point.
pub fn apply_l(
    phi: &dyn TestFunction,
    t: f64,
    x: &[f64],
    y: YPrefix,
    mu: Option<&ProbabilityAtomMeasure>,
    coeffs: &CoefficientSet,
) -> Result<f64> {
    check_point(phi, x, coeffs)?;
    let prepared = coeffs.prepare(t, y, mu)?;
    let v = prepared.eval(x)?;
    let d = x.len();
    let mut grad = vec![0.0; d];
    let mut hess = vec![0.0; d * d];
    phi.eval(x, Some(&mut grad), Some(&mut hess));
    Ok(l_value(&v, &grad, &hess, d))
}

/// Observation coupling applied to one test function at one point.
pub fn apply_h(
    phi: &dyn TestFunction,
    t: f64,
    x: &[f64],
    y: YPrefix,
    mu: Option<&ProbabilityAtomMeasure>,
    coeffs: &CoefficientSet,
) -> Result<f64> {
    check_point(phi, x, coeffs)?;
    let prepared = coeffs.prepare(t, y, mu)?;
    let v = prepared.eval(x)?;
    let d = x.len();
    let mut grad = vec![0.0; d];
    let val = phi.eval(x, Some(&mut grad), None);
    Ok(h_value(&v, val, &grad))
}

fn check_point(phi: &dyn TestFunction, x: &[f64], coeffs: &CoefficientSet) -> Result<()> {
    if phi.dim() != coeffs.dim() {
        return Err(Error::dim(
            "operator test function",
            coeffs.dim(),
            phi.dim(),
        ));
    }
    if x.len() != coeffs.dim() {
        return Err(Error::dim("operator point", coeffs.dim(), x.len()));
    }
    Ok(())
}

fn l_value(v: &CoeffValues, grad: &[f64], hess: &[f64], d: usize) -> f64 {
    let mut first = 0.0;
    for i in 0..d {
        first += v.b[i] * grad[i];
    }
    let mut quad = 0.0;
    for i in 0..d {
        for j in 0..d {
            let mut a = v.rho[i] * v.rho[j];
            for k in 0..d {
                a += v.sigma[i * d + k] * v.sigma[j * d + k];
            }
            quad += a * hess[i * d + j];
        }
    }
    first + 0.5 * quad
}

fn h_value(v: &CoeffValues, phi_val: f64, grad: &[f64]) -> f64 {
    dot(&v.rho, grad) + v.h * phi_val
}

/// Pair `<n, L phi_r>` and `<n, H phi_r>` for several test functions in one
/// pass over the atoms, with coefficients evaluated once per atom.
pub fn pair_lh(
    n: &WeightedAtomMeasure,
    phis: &[&dyn TestFunction],
    prepared: &Prepared<'_>,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let d = n.dim();
    for phi in phis {
        if phi.dim() != d {
            return Err(Error::dim("pair_lh test function", d, phi.dim()));
        }
    }
    let mut v = CoeffValues::zeros(d);
    let mut grad = vec![0.0; d];
    let mut hess = vec![0.0; d * d];
    let mut l_out = vec![0.0; phis.len()];
    let mut h_out = vec![0.0; phis.len()];
    for a in 0..n.len() {
        let x = n.position(a);
        let w = n.weight(a);
        prepared.eval_into(x, &mut v)?;
        for (r, phi) in phis.iter().enumerate() {
            let val = phi.eval(x, Some(&mut grad), Some(&mut hess));
            l_out[r] += w * l_value(&v, &grad, &hess, d);
            h_out[r] += w * h_value(&v, val, &grad);
        }
    }
    Ok((l_out, h_out))
}

/// Per-atom generator and sensor actions of one test function: `l_out[a] =
/// L phi(x_a)`, `h_out[a] = H phi(x_a)`, unweighted. Residual checkers use
/// these to decompose pairings into per-particle contributions.
pub fn lh_profile(
    n: &WeightedAtomMeasure,
    phi: &dyn TestFunction,
    prepared: &Prepared<'_>,
    l_out: &mut [f64],
    h_out: &mut [f64],
) -> Result<()> {
    let d = n.dim();
    if phi.dim() != d {
        return Err(Error::dim("lh_profile test function", d, phi.dim()));
    }
    if l_out.len() != n.len() || h_out.len() != n.len() {
        return Err(Error::dim(
            "lh_profile output",
            n.len(),
            l_out.len().min(h_out.len()),
        ));
    }
    let mut v = CoeffValues::zeros(d);
    let mut grad = vec![0.0; d];
    let mut hess = vec![0.0; d * d];
    for a in 0..n.len() {
        let x = n.position(a);
        prepared.eval_into(x, &mut v)?;
        let val = phi.eval(x, Some(&mut grad), Some(&mut hess));
        l_out[a] = l_value(&v, &grad, &hess, d);
        h_out[a] = h_value(&v, val, &grad);
    }
    Ok(())
}

/// Observation loading of a cylindrical function along the lifted dynamics:
/// `sum_i d_i f(z(n)) <n, H psi_i>`, the dY-coefficient matching
/// `generator_measure`'s dt-coefficient. Coefficients are read at the
/// normalized law of `n`.
pub fn sensor_measure(
    f: &CylindricalFunction<'_>,
    n: &WeightedAtomMeasure,
    t: f64,
    y: YPrefix,
    coeffs: &CoefficientSet,
) -> Result<f64> {
    let d = n.dim();
    if f.dim() != d {
        return Err(Error::dim("sensor cylinder", d, f.dim()));
    }
    if coeffs.dim() != d {
        return Err(Error::dim("sensor coefficients", d, coeffs.dim()));
    }
    let m = n.normalize_unit()?;
    let prepared = coeffs.prepare(t, y, Some(&m))?;
    let z = f.project(n)?;
    let mut gf = vec![0.0; f.k()];
    f.outer.gradient(&z, &mut gf);
    let (_, g) = pair_lh(n, &f.inner, &prepared)?;
    Ok(gf.iter().zip(g.iter()).map(|(s, gi)| s * gi).sum())
}

/// The three cylindrical derivative objects at `(nu, x, x')`, in the stacked
/// `(gradient, value)` convention.
#[derive(Debug, Clone)]
pub struct CylinderDerivatives {
    /// `sum_i d_i f  D psi_i(x)`, length `d + 1`.
    pub d_mu: Vec<f64>,
    /// `sum_i d_i f  d_x D psi_i(x)`, row-major `(d + 1) x d`: Hessian rows
    /// on top, the plain gradient as the last row.
    pub dx_d_mu: Vec<f64>,
    /// `sum_ij d_ij f  D psi_i(x) D psi_j(x')^T`, row-major `(d+1) x (d+1)`.
    pub d2_mu: Vec<f64>,
}

/// Closed-form first and second measure derivatives of a cylindrical
/// function, evaluated at atoms `x` and `x'`.
pub fn l_derivative_cylinder(
    f: &CylindricalFunction<'_>,
    nu: &WeightedAtomMeasure,
    x: &[f64],
    x_prime: &[f64],
) -> Result<CylinderDerivatives> {
    let d = f.dim();
    if nu.dim() != d {
        return Err(Error::dim("cylinder measure", d, nu.dim()));
    }
    if x.len() != d || x_prime.len() != d {
        return Err(Error::dim("cylinder point", d, x.len().min(x_prime.len())));
    }
    let k = f.k();
    let z = f.project(nu)?;
    let mut gf = vec![0.0; k];
    let mut hf = vec![0.0; k * k];
    f.outer.gradient(&z, &mut gf);
    f.outer.hessian(&z, &mut hf);

    let dp1 = d + 1;
    let mut d_mu = vec![0.0; dp1];
    let mut dx_d_mu = vec![0.0; dp1 * d];
    let mut stack_x = vec![0.0; k * dp1];
    let mut stack_xp = vec![0.0; k * dp1];
    let mut grad = vec![0.0; d];
    let mut hess = vec![0.0; d * d];
    for (i, psi) in f.inner.iter().enumerate() {
        let val = psi.eval(x, Some(&mut grad), Some(&mut hess));
        stack_x[i * dp1..i * dp1 + d].copy_from_slice(&grad);
        stack_x[i * dp1 + d] = val;
        for r in 0..d {
            d_mu[r] += gf[i] * grad[r];
            for c in 0..d {
                dx_d_mu[r * d + c] += gf[i] * hess[r * d + c];
            }
            dx_d_mu[d * d + r] += gf[i] * grad[r];
        }
        d_mu[d] += gf[i] * val;

        let val_p = psi.eval(x_prime, Some(&mut grad), None);
        stack_xp[i * dp1..i * dp1 + d].copy_from_slice(&grad);
        stack_xp[i * dp1 + d] = val_p;
    }

    let mut d2_mu = vec![0.0; dp1 * dp1];
    for i in 0..k {
        for j in 0..k {
            let w = hf[i * k + j];
            if w == 0.0 {
                continue;
            }
            for r in 0..dp1 {
                let left = w * stack_x[i * dp1 + r];
                for c in 0..dp1 {
                    d2_mu[r * dp1 + c] += left * stack_xp[j * dp1 + c];
                }
            }
        }
    }

    Ok(CylinderDerivatives {
        d_mu,
        dx_d_mu,
        d2_mu,
    })
}

/// Generator of the unnormalized conditional flow applied to a cylindrical
/// function at the weighted atom measure `n`. Coefficients are evaluated at
/// the normalized law; degeneracy of the total mass is an error.
pub fn generator_measure(
    f: &CylindricalFunction<'_>,
    n: &WeightedAtomMeasure,
    t: f64,
    y: YPrefix,
    coeffs: &CoefficientSet,
) -> Result<f64> {
    let d = n.dim();
    if f.dim() != d {
        return Err(Error::dim("generator cylinder", d, f.dim()));
    }
    if coeffs.dim() != d {
        return Err(Error::dim("generator coefficients", d, coeffs.dim()));
    }
    let m = n.normalize_unit()?;
    let prepared = coeffs.prepare(t, y, Some(&m))?;

    let k = f.k();
    let z = f.project(n)?;
    let mut gf = vec![0.0; k];
    let mut hf = vec![0.0; k * k];
    f.outer.gradient(&z, &mut gf);
    f.outer.hessian(&z, &mut hf);

    let mut v = CoeffValues::zeros(d);
    let mut grad = vec![0.0; d];
    let mut hess = vec![0.0; d * d];
    let mut first_order = 0.0;
    // g[i] = <n, H psi_i>; the double integral collapses onto these.
    let mut g = vec![0.0; k];
    for a in 0..n.len() {
        let x = n.position(a);
        let w = n.weight(a);
        prepared.eval_into(x, &mut v)?;
        for (i, psi) in f.inner.iter().enumerate() {
            let val = psi.eval(x, Some(&mut grad), Some(&mut hess));
            first_order += w * gf[i] * l_value(&v, &grad, &hess, d);
            g[i] += w * h_value(&v, val, &grad);
        }
    }

    let mut second_order = 0.0;
    for i in 0..k {
        for j in 0..k {
            second_order += hf[i * k + j] * g[i] * g[j];
        }
    }
    Ok(first_order + 0.5 * second_order)
}

/// Lifted drift and noise loadings of the first `k` projection coordinates.
#[derive(Debug, Clone)]
pub struct LiftedCoefficients {
    /// `beta_i = <n, L phi_i>`
    pub beta: Vec<f64>,
    /// `gamma_i = <n, H phi_i>`
    pub gamma: Vec<f64>,
}

impl LiftedCoefficients {
    /// `alpha_ij = gamma_i gamma_j`; the diffusion matrix of the projected
    /// coordinates is rank one by construction.
    pub fn alpha(&self, i: usize, j: usize) -> f64 {
        self.gamma[i] * self.gamma[j]
    }
}

/// Compute `beta` and `gamma` for the first `k` basis functions in one pass.
/// Coefficients are read at the normalized law of `n`.
pub fn lifted_coefficients(
    t: f64,
    y: YPrefix,
    n: &WeightedAtomMeasure,
    coeffs: &CoefficientSet,
    basis: &TestFunctionBasis,
    k: usize,
) -> Result<LiftedCoefficients> {
    if basis.dim() != n.dim() || coeffs.dim() != n.dim() {
        return Err(Error::dim(
            "lifted coefficients",
            n.dim(),
            basis.dim().min(coeffs.dim()),
        ));
    }
    if k > basis.len() {
        return Err(Error::param("k", "exceeds basis truncation"));
    }
    let m = n.normalize_unit()?;
    let prepared = coeffs.prepare(t, y, Some(&m))?;
    let mut phis: Vec<&dyn TestFunction> = Vec::with_capacity(k);
    for idx in 0..k {
        phis.push(basis.get(idx)?);
    }
    let (beta, gamma) = pair_lh(n, &phis, &prepared)?;
    Ok(LiftedCoefficients { beta, gamma })
}

/// One `(alpha_ij, beta_i, gamma_i)` triple for basis indices `i, j`
/// (0-based). The measure is passed explicitly; the projected point is
/// recoverable from it and never inverted for.
pub fn alpha_beta_gamma(
    t: f64,
    y: YPrefix,
    n: &WeightedAtomMeasure,
    coeffs: &CoefficientSet,
    basis: &TestFunctionBasis,
    i: usize,
    j: usize,
) -> Result<(f64, f64, f64)> {
    let k = i.max(j) + 1;
    let lifted = lifted_coefficients(t, y, n, coeffs, basis, k)?;
    Ok((lifted.alpha(i, j), lifted.beta[i], lifted.gamma[i]))
}

/// Flat generator of the projected pair `(Z, Y)` applied to `f(z, y)`;
/// the observation coordinate is the last argument of `f`. The first
/// `f.dim() - 1` coordinates pair with the basis, and `z` is the projected
/// point the caller tracks alongside `n`.
pub fn generator_a(
    f: &dyn TestFunction,
    t: f64,
    y: YPrefix,
    z: &[f64],
    n: &WeightedAtomMeasure,
    coeffs: &CoefficientSet,
    basis: &TestFunctionBasis,
) -> Result<f64> {
    let kp1 = f.dim();
    if kp1 == 0 {
        return Err(Error::param(
            "f",
            "needs at least the observation coordinate",
        ));
    }
    let k = kp1 - 1;
    if z.len() != k {
        return Err(Error::dim("generator_a projection", k, z.len()));
    }
    let lifted = if k > 0 {
        lifted_coefficients(t, y, n, coeffs, basis, k)?
    } else {
        LiftedCoefficients {
            beta: Vec::new(),
            gamma: Vec::new(),
        }
    };

    let mut u = Vec::with_capacity(kp1);
    u.extend_from_slice(z);
    u.push(y.state());
    let mut grad = vec![0.0; kp1];
    let mut hess = vec![0.0; kp1 * kp1];
    f.eval(&u, Some(&mut grad), Some(&mut hess));

    let mut acc = 0.0;
    for i in 0..k {
        acc += grad[i] * lifted.beta[i];
        for j in 0..k {
            acc += 0.5 * hess[i * kp1 + j] * lifted.alpha(i, j);
        }
    }
    acc += 0.5 * hess[k * kp1 + k];
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{Bump, Coordinate, Monomial2};
    use crate::coefficients::sym_min_eig;
    use crate::rng::{substream, StreamPurpose};
    use rand::Rng;
    use rand_distr::{Distribution, StandardNormal};

    fn y_zero() -> ([f64; 1], [f64; 1]) {
        ([0.0], [0.0])
    }

    fn normals(rng: &mut rand_chacha::ChaCha12Rng, n: usize) -> Vec<f64> {
        (0..n).map(|_| StandardNormal.sample(rng)).collect()
    }

    fn random_measure(
        rng: &mut rand_chacha::ChaCha12Rng,
        dim: usize,
        atoms: usize,
    ) -> WeightedAtomMeasure {
        let pos = normals(rng, atoms * dim);
        let w: Vec<f64> = (0..atoms).map(|_| rng.gen_range(0.2..1.2)).collect();
        WeightedAtomMeasure::from_flat(dim, pos, w).unwrap()
    }

    #[test]
    fn l_on_linear_function_with_zero_drift_vanishes() {
        let coeffs = CoefficientSet::constant(vec![0.0], vec![1.0], vec![0.5], 0.0).unwrap();
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let phi = Coordinate { dim: 1, index: 0 };
        let out = apply_l(&phi, 0.0, &[0.7], y, None, &coeffs).unwrap();
        assert_eq!(out, 0.0);
    }

    #[test]
    fn l_on_square_is_the_total_diffusion() {
        // phi = x^2, sigma = 1, rho = 0, b = 0: L phi = 1
        let coeffs = CoefficientSet::constant(vec![0.0], vec![1.0], vec![0.0], 0.0).unwrap();
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let phi = Monomial2 { dim: 1, i: 0, j: 0 };
        let out = apply_l(&phi, 0.0, &[2.0], y, None, &coeffs).unwrap();
        assert!((out - 1.0).abs() < 1e-15);
        // and with rho = 0.5 as well: L phi = 1/2 (1 + 0.25) * 2
        let coeffs = CoefficientSet::constant(vec![0.0], vec![1.0], vec![0.5], 0.0).unwrap();
        let out = apply_l(&phi, 0.0, &[2.0], y, None, &coeffs).unwrap();
        assert!((out - 1.25).abs() < 1e-15);
    }

    #[test]
    fn h_trivial_cases() {
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let bump = Bump::new(vec![0.0], 2.0).unwrap();
        // rho = 0, h = 1: H phi = phi
        let coeffs = CoefficientSet::constant(vec![0.0], vec![1.0], vec![0.0], 1.0).unwrap();
        let x = [0.4];
        let out = apply_h(&bump, 0.0, &x, y, None, &coeffs).unwrap();
        assert!((out - bump.value(&x)).abs() < 1e-15);
        // h = 0, rho = 1, phi = x: H phi = 1
        let coeffs = CoefficientSet::constant(vec![0.0], vec![1.0], vec![1.0], 0.0).unwrap();
        let phi = Coordinate { dim: 1, index: 0 };
        let out = apply_h(&phi, 0.0, &x, y, None, &coeffs).unwrap();
        assert!((out - 1.0).abs() < 1e-15);
    }

    #[test]
    fn h_matches_independent_recomputation() {
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let mut rng = substream(31, 0, StreamPurpose::Probe, 2);
        let d = 2;
        let coeffs = CoefficientSet::bounded_smooth(d, 0.7, 0.0, 0.9, 0.4, 0.6).unwrap();
        let bump = Bump::new(vec![0.1, -0.2], 2.5).unwrap();
        for _ in 0..20 {
            let x = normals(&mut rng, d);
            let got = apply_h(&bump, 0.3, &x, y, None, &coeffs).unwrap();
            let mut grad = vec![0.0; d];
            let val = bump.eval(&x, Some(&mut grad), None);
            let v = coeffs.eval(0.3, &x, y, None).unwrap();
            let want = v.rho.iter().zip(&grad).map(|(r, g)| r * g).sum::<f64>() + v.h * val;
            assert!((got - want).abs() < 1e-14);
        }
    }

    struct LinComb<'a> {
        a: f64,
        f: &'a dyn TestFunction,
        b: f64,
        g: &'a dyn TestFunction,
    }

    impl TestFunction for LinComb<'_> {
        fn dim(&self) -> usize {
            self.f.dim()
        }

        fn eval(&self, x: &[f64], grad: Option<&mut [f64]>, hess: Option<&mut [f64]>) -> f64 {
            let d = self.dim();
            let mut gf = vec![0.0; d];
            let mut hf = vec![0.0; d * d];
            let mut gg = vec![0.0; d];
            let mut hg = vec![0.0; d * d];
            let vf = self.f.eval(x, Some(&mut gf), Some(&mut hf));
            let vg = self.g.eval(x, Some(&mut gg), Some(&mut hg));
            if let Some(out) = grad {
                for i in 0..d {
                    out[i] = self.a * gf[i] + self.b * gg[i];
                }
            }
            if let Some(out) = hess {
                for i in 0..d * d {
                    out[i] = self.a * hf[i] + self.b * hg[i];
                }
            }
            self.a * vf + self.b * vg
        }
    }

    #[test]
    fn operators_are_linear_in_the_test_function() {
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let coeffs = CoefficientSet::bounded_smooth(1, 0.8, 0.0, 1.1, 0.3, 0.5).unwrap();
        let f = Bump::new(vec![0.2], 1.5).unwrap();
        let g = Bump::new(vec![-0.4], 2.0).unwrap();
        let mut rng = substream(32, 0, StreamPurpose::Probe, 3);
        for _ in 0..10 {
            let a: f64 = rng.gen_range(-2.0..2.0);
            let b: f64 = rng.gen_range(-2.0..2.0);
            let combo = LinComb { a, f: &f, b, g: &g };
            let x = [rng.gen_range(-1.5..1.5)];
            let lc = apply_l(&combo, 0.0, &x, y, None, &coeffs).unwrap();
            let lf = apply_l(&f, 0.0, &x, y, None, &coeffs).unwrap();
            let lg = apply_l(&g, 0.0, &x, y, None, &coeffs).unwrap();
            assert!((lc - (a * lf + b * lg)).abs() < 1e-12);
            let hc = apply_h(&combo, 0.0, &x, y, None, &coeffs).unwrap();
            let hf = apply_h(&f, 0.0, &x, y, None, &coeffs).unwrap();
            let hg = apply_h(&g, 0.0, &x, y, None, &coeffs).unwrap();
            assert!((hc - (a * hf + b * hg)).abs() < 1e-12);
        }
    }

    #[test]
    fn l_derivative_of_linear_cylinder_is_the_stacked_gradient() {
        let psi = Bump::new(vec![0.0], 2.0).unwrap();
        let f = CylindricalFunction::new(Outer::Linear { weights: vec![1.0] }, vec![&psi]).unwrap();
        let nu = WeightedAtomMeasure::from_flat(1, vec![0.3, -0.5], vec![1.0, 2.0]).unwrap();
        let x = [0.4];
        let xp = [-0.1];
        let der = l_derivative_cylinder(&f, &nu, &x, &xp).unwrap();
        let mut grad = vec![0.0; 1];
        let val = psi.eval(&x, Some(&mut grad), None);
        assert!((der.d_mu[0] - grad[0]).abs() < 1e-15);
        assert!((der.d_mu[1] - val).abs() < 1e-15);
        assert!(der.d2_mu.iter().all(|v| *v == 0.0));

        // constant outer: everything vanishes
        let f0 =
            CylindricalFunction::new(Outer::Linear { weights: vec![0.0] }, vec![&psi]).unwrap();
        let der0 = l_derivative_cylinder(&f0, &nu, &x, &xp).unwrap();
        assert!(der0.d_mu.iter().all(|v| *v == 0.0));
        assert!(der0.dx_d_mu.iter().all(|v| *v == 0.0));
        assert!(der0.d2_mu.iter().all(|v| *v == 0.0));
    }

    #[test]
    fn gateaux_difference_matches_weight_component() {
        // F(nu) = <nu, psi>^2 and an exp cylinder, perturbed by random
        // atomic xi: (F(nu + eps xi) - F(nu)) / eps, Richardson-extrapolated,
        // must equal <xi, weight component of d_mu F>.
        let mut rng = substream(33, 0, StreamPurpose::Probe, 4);
        let d = 2;
        let psi1 = Bump::new(vec![0.2, 0.0], 2.2).unwrap();
        let psi2 = Bump::new(vec![-0.3, 0.4], 1.8).unwrap();
        let cases: Vec<CylindricalFunction> = vec![
            CylindricalFunction::new(Outer::Quadratic { weights: vec![2.0] }, vec![&psi1]).unwrap(),
            CylindricalFunction::new(
                Outer::Exp {
                    weights: vec![0.6, -0.4],
                },
                vec![&psi1, &psi2],
            )
            .unwrap(),
            CylindricalFunction::new(Outer::Bilinear, vec![&psi1, &psi2]).unwrap(),
        ];
        for f in &cases {
            for _ in 0..5 {
                let nu = random_measure(&mut rng, d, 6);
                let xi = random_measure(&mut rng, d, 4);
                // directional derivative via two step sizes
                let perturb = |eps: f64| -> f64 {
                    let mut pos = nu.positions_flat().to_vec();
                    pos.extend_from_slice(xi.positions_flat());
                    let mut w = nu.weights().to_vec();
                    w.extend(xi.weights().iter().map(|v| eps * v));
                    let m = WeightedAtomMeasure::from_flat(d, pos, w).unwrap();
                    f.value(&m).unwrap()
                };
                let base = f.value(&nu).unwrap();
                let e1 = 1e-3;
                let d1 = (perturb(e1) - base) / e1;
                let d2 = (perturb(e1 / 2.0) - base) / (e1 / 2.0);
                let extrapolated = 2.0 * d2 - d1;

                // pair the weight component of d_mu F against xi
                let mut want = 0.0;
                for a in 0..xi.len() {
                    let der =
                        l_derivative_cylinder(f, &nu, xi.position(a), xi.position(a)).unwrap();
                    want += xi.weight(a) * der.d_mu[d];
                }
                assert!(
                    (extrapolated - want).abs() < 1e-6,
                    "gateaux {extrapolated} vs {want}"
                );
            }
        }
    }

    #[test]
    fn gradient_part_is_the_space_derivative_of_the_weight_part() {
        let mut rng = substream(34, 0, StreamPurpose::Probe, 5);
        let d = 2;
        let psi1 = Bump::new(vec![0.0, 0.1], 2.0).unwrap();
        let psi2 = Bump::new(vec![0.5, -0.2], 2.4).unwrap();
        let f = CylindricalFunction::new(
            Outer::Exp {
                weights: vec![0.5, 0.3],
            },
            vec![&psi1, &psi2],
        )
        .unwrap();
        let nu = random_measure(&mut rng, d, 5);
        for _ in 0..10 {
            let x = normals(&mut rng, d);
            let der = l_derivative_cylinder(&f, &nu, &x, &x).unwrap();
            let h = 1e-5;
            for r in 0..d {
                let mut xp = x.clone();
                let mut xm = x.clone();
                xp[r] += h;
                xm[r] -= h;
                let wp = l_derivative_cylinder(&f, &nu, &xp, &xp).unwrap().d_mu[d];
                let wm = l_derivative_cylinder(&f, &nu, &xm, &xm).unwrap().d_mu[d];
                let fd = (wp - wm) / (2.0 * h);
                assert!((der.d_mu[r] - fd).abs() < 1e-6, "component {r}");
            }
        }
    }

    #[test]
    fn second_derivative_matches_cross_differences() {
        // For quadratic outer the mixed second difference in two directions
        // is exact: it equals the d2 pairing against xi (x) eta.
        let mut rng = substream(35, 0, StreamPurpose::Probe, 6);
        let d = 1;
        let psi = Bump::new(vec![0.0], 2.0).unwrap();
        let f =
            CylindricalFunction::new(Outer::Quadratic { weights: vec![2.0] }, vec![&psi]).unwrap();
        let nu = random_measure(&mut rng, d, 5);
        let xi = random_measure(&mut rng, d, 3);
        let eta = random_measure(&mut rng, d, 3);
        let eps = 0.5;
        let combine = |a: f64, b: f64| -> f64 {
            let mut pos = nu.positions_flat().to_vec();
            pos.extend_from_slice(xi.positions_flat());
            pos.extend_from_slice(eta.positions_flat());
            let mut w = nu.weights().to_vec();
            w.extend(xi.weights().iter().map(|v| a * v));
            w.extend(eta.weights().iter().map(|v| b * v));
            let m = WeightedAtomMeasure::from_flat(d, pos, w).unwrap();
            f.value(&m).unwrap()
        };
        let mixed = (combine(eps, eps) - combine(eps, 0.0) - combine(0.0, eps) + combine(0.0, 0.0))
            / (eps * eps);
        let mut want = 0.0;
        for a in 0..xi.len() {
            for b in 0..eta.len() {
                let der = l_derivative_cylinder(&f, &nu, xi.position(a), eta.position(b)).unwrap();
                want += xi.weight(a) * eta.weight(b) * der.d2_mu[d * (d + 1) + d];
            }
        }
        assert!((mixed - want).abs() < 1e-10, "{mixed} vs {want}");
    }

    #[test]
    fn generator_on_linear_cylinder_is_the_paired_state_generator() {
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        // all coefficients zero: generator vanishes
        let zero = CoefficientSet::constant(vec![0.0], vec![0.0], vec![0.0], 0.0).unwrap();
        let psi = Bump::new(vec![0.0], 2.0).unwrap();
        let f = CylindricalFunction::new(Outer::Linear { weights: vec![1.0] }, vec![&psi]).unwrap();
        let mut rng = substream(36, 0, StreamPurpose::Probe, 7);
        let n = random_measure(&mut rng, 1, 6);
        assert_eq!(generator_measure(&f, &n, 0.0, y, &zero).unwrap(), 0.0);

        // linear f, general coefficients: the second-order term drops and
        // the generator is <n, L psi>
        let coeffs = CoefficientSet::bounded_smooth(1, 0.9, 0.4, 1.0, 0.4, 0.8).unwrap();
        let got = generator_measure(&f, &n, 0.0, y, &coeffs).unwrap();
        let m = n.normalize_unit().unwrap();
        let prepared = coeffs.prepare(0.0, y, Some(&m)).unwrap();
        let phis: Vec<&dyn TestFunction> = vec![&psi];
        let (l, _) = pair_lh(&n, &phis, &prepared).unwrap();
        assert!((got - l[0]).abs() < 1e-14);
    }

    #[test]
    fn generator_matches_the_lderivative_route() {
        // Two independent code paths: the fast factored pass and the full
        // double integral through the stacked derivative objects.
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let mut rng = substream(37, 0, StreamPurpose::Probe, 8);
        let d = 2;
        let coeffs = CoefficientSet::bounded_smooth(d, 0.7, 0.5, 1.1, 0.5, 0.9).unwrap();
        let psi1 = Bump::new(vec![0.2, -0.1], 2.1).unwrap();
        let psi2 = Bump::new(vec![-0.4, 0.3], 1.7).unwrap();
        let f = CylindricalFunction::new(
            Outer::Exp {
                weights: vec![0.7, -0.5],
            },
            vec![&psi1, &psi2],
        )
        .unwrap();
        for _ in 0..5 {
            let n = random_measure(&mut rng, d, 7);
            let fast = generator_measure(&f, &n, 0.0, y, &coeffs).unwrap();

            let m = n.normalize_unit().unwrap();
            let prepared = coeffs.prepare(0.0, y, Some(&m)).unwrap();
            let mut v = CoeffValues::zeros(d);
            let mut slow = 0.0;
            for a in 0..n.len() {
                let x = n.position(a);
                prepared.eval_into(x, &mut v).unwrap();
                let der = l_derivative_cylinder(&f, &n, x, x).unwrap();
                // first-order: gradient block against b, hessian block
                // against the full diffusion
                let mut term = 0.0;
                for r in 0..d {
                    term += der.d_mu[r] * v.b[r];
                }
                for r in 0..d {
                    for c in 0..d {
                        let mut aa = v.rho[r] * v.rho[c];
                        for kk in 0..d {
                            aa += v.sigma[r * d + kk] * v.sigma[c * d + kk];
                        }
                        term += 0.5 * aa * der.dx_d_mu[r * d + c];
                    }
                }
                slow += n.weight(a) * term;
            }
            // second-order: full (d+1)-stacked contraction of d2 against
            // H(x) H(x')^T over both atoms
            let mut vx = CoeffValues::zeros(d);
            let mut vxp = CoeffValues::zeros(d);
            for a in 0..n.len() {
                let x = n.position(a);
                prepared.eval_into(x, &mut vx).unwrap();
                let mut hx = vx.rho.clone();
                hx.push(vx.h);
                for bb in 0..n.len() {
                    let xp = n.position(bb);
                    prepared.eval_into(xp, &mut vxp).unwrap();
                    let mut hxp = vxp.rho.clone();
                    hxp.push(vxp.h);
                    let der = l_derivative_cylinder(&f, &n, x, xp).unwrap();
                    let dp1 = d + 1;
                    let mut contract = 0.0;
                    for r in 0..dp1 {
                        for c in 0..dp1 {
                            contract += der.d2_mu[r * dp1 + c] * hx[r] * hxp[c];
                        }
                    }
                    slow += 0.5 * n.weight(a) * n.weight(bb) * contract;
                }
            }
            assert!((fast - slow).abs() < 1e-12, "fast {fast} slow {slow}");
        }
    }

    #[test]
    fn generator_matches_one_step_ito_regression() {
        // Brute-force one-step expectation of Delta F / Delta t for the
        // canonical weighted-particle update, against the measure generator
        // plus the finite-ensemble idiosyncratic correction
        //   1/2 sum_ij d_ij f (1/N^2) sum_a e^{2 l_a} (s^T grad psi_i)(s^T grad psi_j)(x_a).
        let mut rng = substream(38, 0, StreamPurpose::Probe, 9);
        let d = 1;
        let coeffs = CoefficientSet::bounded_smooth(d, 0.6, 0.4, 0.8, 0.5, 0.7).unwrap();
        let psi1 = Bump::new(vec![0.1], 2.0).unwrap();
        let psi2 = Bump::new(vec![-0.3], 1.6).unwrap();
        let f = CylindricalFunction::new(
            Outer::Exp {
                weights: vec![0.8, -0.6],
            },
            vec![&psi1, &psi2],
        )
        .unwrap();

        let n_particles = 64;
        let positions: Vec<f64> = normals(&mut rng, n_particles);
        let logw: Vec<f64> = normals(&mut rng, n_particles)
            .iter()
            .map(|z| 0.3 * z)
            .collect();
        let weights: Vec<f64> = logw.iter().map(|l| l.exp() / n_particles as f64).collect();
        let n = WeightedAtomMeasure::from_flat(d, positions.clone(), weights.clone()).unwrap();

        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let predicted = generator_measure(&f, &n, 0.0, y, &coeffs).unwrap();

        // finite-N correction and frozen per-atom coefficients
        let m = n.normalize_unit().unwrap();
        let prepared = coeffs.prepare(0.0, y, Some(&m)).unwrap();
        let z = f.project(&n).unwrap();
        let k = f.k();
        let mut hf = vec![0.0; k * k];
        f.outer.hessian(&z, &mut hf);
        let mut frozen = Vec::with_capacity(n_particles);
        let mut grads = vec![vec![0.0; n_particles]; k];
        for a in 0..n_particles {
            let v = prepared.eval(&[positions[a]]).unwrap();
            let mut g = vec![0.0; d];
            for (i, psi) in [&psi1, &psi2].iter().enumerate() {
                psi.eval(&[positions[a]], Some(&mut g), None);
                grads[i][a] = g[0];
            }
            frozen.push(v);
        }
        let mut correction = 0.0;
        for i in 0..k {
            for j in 0..k {
                let mut acc = 0.0;
                for a in 0..n_particles {
                    let s = frozen[a].sigma[0];
                    acc += weights[a] * weights[a] * (s * grads[i][a]) * (s * grads[j][a]);
                }
                correction += 0.5 * hf[i * k + j] * acc;
            }
        }

        let dt = 5e-3_f64;
        let sdt = dt.sqrt();
        let trials = 150_000;
        let base = f.value(&n).unwrap();
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        let mut new_pos = vec![0.0; n_particles];
        let mut new_w = vec![0.0; n_particles];
        for _ in 0..trials {
            let dy: f64 = {
                let zn: f64 = StandardNormal.sample(&mut rng);
                sdt * zn
            };
            for a in 0..n_particles {
                let v = &frozen[a];
                let zn: f64 = StandardNormal.sample(&mut rng);
                let b_tilde = v.b[0] - v.rho[0] * v.h;
                new_pos[a] = positions[a] + b_tilde * dt + v.sigma[0] * sdt * zn + v.rho[0] * dy;
                new_w[a] = (logw[a] + v.h * dy - 0.5 * v.h * v.h * dt).exp() / n_particles as f64;
            }
            let np = WeightedAtomMeasure::from_flat(d, new_pos.clone(), new_w.clone()).unwrap();
            let g = (f.value(&np).unwrap() - base) / dt;
            sum += g;
            sumsq += g * g;
        }
        let mean = sum / trials as f64;
        let var = (sumsq / trials as f64 - mean * mean).max(0.0);
        let se = (var / trials as f64).sqrt();
        let want = predicted + correction;
        assert!(
            (mean - want).abs() < 4.0 * se + 0.05 * dt.sqrt(),
            "regression {mean} vs generator {want} (se {se})"
        );
    }

    #[test]
    fn lifted_coefficients_trivial_and_consistency() {
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let basis = TestFunctionBasis::dyadic(1, 2.0, 6).unwrap();
        let mut rng = substream(39, 0, StreamPurpose::Probe, 10);
        let n = random_measure(&mut rng, 1, 8);

        // h = 0, rho = 0: alpha and gamma vanish
        let silent = CoefficientSet::constant(vec![0.3], vec![1.0], vec![0.0], 0.0).unwrap();
        let (alpha, _, gamma) = alpha_beta_gamma(0.0, y, &n, &silent, &basis, 1, 2).unwrap();
        assert_eq!(alpha, 0.0);
        assert_eq!(gamma, 0.0);

        // alpha_ii is exactly gamma_i squared, and beta matches a direct pairing
        let coeffs = CoefficientSet::bounded_smooth(1, 0.8, 0.3, 1.0, 0.4, 0.9).unwrap();
        let lifted = lifted_coefficients(0.0, y, &n, &coeffs, &basis, 6).unwrap();
        for i in 0..6 {
            let (a_ii, beta_i, gamma_i) =
                alpha_beta_gamma(0.0, y, &n, &coeffs, &basis, i, i).unwrap();
            assert_eq!(a_ii, gamma_i * gamma_i);
            assert_eq!(gamma_i, lifted.gamma[i]);
            let m = n.normalize_unit().unwrap();
            let want_beta = {
                let prepared = coeffs.prepare(0.0, y, Some(&m)).unwrap();
                let phis: Vec<&dyn TestFunction> = vec![basis.get(i).unwrap()];
                pair_lh(&n, &phis, &prepared).unwrap().0[0]
            };
            assert!((beta_i - want_beta).abs() < 1e-15);
        }

        // alpha as a matrix: symmetric exactly, PSD up to round-off
        let kk = 6;
        let mut alpha_mat = vec![0.0; kk * kk];
        for i in 0..kk {
            for j in 0..kk {
                alpha_mat[i * kk + j] = lifted.alpha(i, j);
            }
        }
        for i in 0..kk {
            for j in 0..kk {
                assert_eq!(alpha_mat[i * kk + j], alpha_mat[j * kk + i]);
            }
        }
        assert!(sym_min_eig(&alpha_mat, kk) >= -1e-10);
    }

    struct SeparableQuadratic {
        k: usize,
    }

    // f(z, y) = z_1^2 + 0.5 z_1 z_2 + y^2 (no z-y cross terms)
    impl TestFunction for SeparableQuadratic {
        fn dim(&self) -> usize {
            self.k + 1
        }

        fn eval(&self, u: &[f64], grad: Option<&mut [f64]>, hess: Option<&mut [f64]>) -> f64 {
            let kp1 = self.k + 1;
            let yy = u[self.k];
            let val = u[0] * u[0] + 0.5 * u[0] * u[1] + yy * yy;
            if let Some(g) = grad {
                g.fill(0.0);
                g[0] = 2.0 * u[0] + 0.5 * u[1];
                g[1] = 0.5 * u[0];
                g[self.k] = 2.0 * yy;
            }
            if let Some(h) = hess {
                h.fill(0.0);
                h[0] = 2.0;
                h[1] = 0.5;
                h[kp1] = 0.5;
                h[self.k * kp1 + self.k] = 2.0;
            }
            val
        }
    }

    #[test]
    fn generator_a_trivial_cases() {
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let basis = TestFunctionBasis::dyadic(1, 2.0, 4).unwrap();
        let coeffs = CoefficientSet::bounded_smooth(1, 0.8, 0.0, 1.0, 0.4, 0.9).unwrap();
        let mut rng = substream(40, 0, StreamPurpose::Probe, 11);
        let n = random_measure(&mut rng, 1, 6);

        // f depending only on y, f = y^2: A f = 1
        let fy = Monomial2 { dim: 1, i: 0, j: 0 };
        let got = generator_a(&fy, 0.0, y, &[], &n, &coeffs, &basis).unwrap();
        assert!((got - 1.0).abs() < 1e-15);

        // f linear in z: A f = sum_i d_i f beta_i
        struct LinearZ;
        impl TestFunction for LinearZ {
            fn dim(&self) -> usize {
                3
            }
            fn eval(&self, u: &[f64], grad: Option<&mut [f64]>, hess: Option<&mut [f64]>) -> f64 {
                if let Some(g) = grad {
                    g.copy_from_slice(&[0.7, -0.4, 0.0]);
                }
                if let Some(h) = hess {
                    h.fill(0.0);
                }
                0.7 * u[0] - 0.4 * u[1]
            }
        }
        let z = crate::measures::project_coordinates(&n, &basis, 2).unwrap();
        let got = generator_a(&LinearZ, 0.0, y, &z, &n, &coeffs, &basis).unwrap();
        let lifted = lifted_coefficients(0.0, y, &n, &coeffs, &basis, 2).unwrap();
        let want = 0.7 * lifted.beta[0] - 0.4 * lifted.beta[1];
        assert!((got - want).abs() < 1e-14);
    }

    #[test]
    fn generator_a_matches_coupled_one_step_regression() {
        // Simulate the projected pair one Euler step and regress
        // E[Delta f] / Delta t; for a separable quadratic f the estimate is
        // unbiased up to O(dt), so it must land on A f within noise.
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let basis = TestFunctionBasis::dyadic(1, 2.0, 4).unwrap();
        let coeffs = CoefficientSet::bounded_smooth(1, 0.7, 0.3, 0.9, 0.5, 0.8).unwrap();
        let mut rng = substream(41, 0, StreamPurpose::Probe, 12);
        let n = random_measure(&mut rng, 1, 8);
        let k = 2;
        let z = crate::measures::project_coordinates(&n, &basis, k).unwrap();
        let f = SeparableQuadratic { k };
        let predicted = generator_a(&f, 0.0, y, &z, &n, &coeffs, &basis).unwrap();

        let lifted = lifted_coefficients(0.0, y, &n, &coeffs, &basis, k).unwrap();
        let dt = 1e-3_f64;
        let sdt = dt.sqrt();
        let mut u0 = z.clone();
        u0.push(0.0);
        let base = f.value(&u0);
        let trials = 400_000;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..trials {
            let zn: f64 = StandardNormal.sample(&mut rng);
            let dy = sdt * zn;
            let mut u = vec![0.0; k + 1];
            for i in 0..k {
                u[i] = z[i] + lifted.beta[i] * dt + lifted.gamma[i] * dy;
            }
            u[k] = dy;
            let g = (f.value(&u) - base) / dt;
            sum += g;
            sumsq += g * g;
        }
        let mean = sum / trials as f64;
        let var = (sumsq / trials as f64 - mean * mean).max(0.0);
        let se = (var / trials as f64).sqrt();
        assert!(
            (mean - predicted).abs() < 4.0 * se + 10.0 * dt,
            "regression {mean} vs generator {predicted} (se {se})"
        );
    }

    #[test]
    fn l_matches_one_step_euler_expectation() {
        // Monte Carlo one-step expansion of the uncontrolled pair dynamics:
        // (E[phi(X_dt)] - phi(x)) / dt with Richardson extrapolation in dt
        // converges to L phi(x). The simulation uses the original system with
        // two independent noises, so this checks the full diffusion
        // sigma sigma^T + rho rho^T.
        let (tt, vv) = y_zero();
        let y = YPrefix::new(&tt, &vv).unwrap();
        let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.6, 1.0).unwrap();
        let phi = Bump::new(vec![0.3], 2.0).unwrap();
        let x0 = 0.4;
        let predicted = apply_l(&phi, 0.0, &[x0], y, None, &coeffs).unwrap();

        let v = coeffs.eval(0.0, &[x0], y, None).unwrap();
        let mut rng = substream(42, 0, StreamPurpose::Probe, 13);
        let dt = 0.02;
        let trials = 200_000;
        let base = phi.value(&[x0]);
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..trials {
            let z1: f64 = StandardNormal.sample(&mut rng);
            let z2: f64 = StandardNormal.sample(&mut rng);
            // same noise pair drives both step sizes
            let step = |h: f64| -> f64 {
                let xh = x0 + v.b[0] * h + v.sigma[0] * h.sqrt() * z1 + v.rho[0] * h.sqrt() * z2;
                (phi.value(&[xh]) - base) / h
            };
            let g = 2.0 * step(dt / 2.0) - step(dt);
            sum += g;
            sumsq += g * g;
        }
        let mean = sum / trials as f64;
        let var = (sumsq / trials as f64 - mean * mean).max(0.0);
        let se = (var / trials as f64).sqrt();
        assert!(
            (mean - predicted).abs() < 4.0 * se + 0.01 * dt,
            "euler {mean} vs L {predicted} (se {se})"
        );
    }
}
