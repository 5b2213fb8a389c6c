//! Smooth test functions with analytic derivatives.
//!
//! Weak-form checks pair measures against a countable ordered family of smooth
//! compactly supported bumps. The family is a dyadic grid of translates and
//! dilates of the standard mollifier profile
//!
//! ```text
//! B(u) = exp(1 / (|u|^2 - 1))   for |u| < 1,   B(u) = 0 otherwise,
//! ```
//!
//! so every member is C-infinity, bounded by `exp(-1)`, and supported in an
//! explicit ball. Gradients and Hessians are closed-form; there is no numerical
//! differentiation anywhere in the hot paths.
//!
//! A few unbounded statistics (coordinates, second monomials, constants) also
//! implement [`TestFunction`]; they are used for moment comparisons against
//! filtering oracles, not as members of the dyadic family.

use crate::error::{Error, Result};

/// A twice continuously differentiable scalar field on `R^d`.
///
/// `eval` writes the gradient (length `d`) and Hessian (length `d*d`,
/// row-major) into caller-provided buffers when requested; implementations
/// share work between value and derivatives. Buffer lengths are the caller's
/// responsibility (checked in debug builds).
pub trait TestFunction: Send + Sync {
    fn dim(&self) -> usize;

    fn eval(&self, x: &[f64], grad: Option<&mut [f64]>, hess: Option<&mut [f64]>) -> f64;

    fn value(&self, x: &[f64]) -> f64 {
        self.eval(x, None, None)
    }
}

/// Bump `amplitude * B((x - center)/radius)`: smooth, supported in the open
/// ball of the given radius around the center.
#[derive(Debug, Clone, PartialEq)]
pub struct Bump {
    center: Vec<f64>,
    radius: f64,
    amplitude: f64,
}

/// Beyond this squared relative distance the profile has underflowed to zero;
/// returning exact zeros avoids 0 * inf in the derivative formulas.
const BUMP_CUTOFF: f64 = 1.0 - 1e-6;

impl Bump {
    pub fn new(center: Vec<f64>, radius: f64) -> Result<Self> {
        Self::with_amplitude(center, radius, 1.0)
    }

    pub fn with_amplitude(center: Vec<f64>, radius: f64, amplitude: f64) -> Result<Self> {
        if center.is_empty() {
            return Err(Error::param("center", "must have at least one coordinate"));
        }
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::param(
                "radius",
                format!("must be finite positive, got {radius}"),
            ));
        }
        if !amplitude.is_finite() {
            return Err(Error::param("amplitude", "must be finite"));
        }
        Ok(Bump {
            center,
            radius,
            amplitude,
        })
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Supremum of the bump: attained at the center.
    pub fn sup_value(&self) -> f64 {
        self.amplitude.abs() * (-1.0f64).exp()
    }

    pub fn support_contains(&self, x: &[f64]) -> bool {
        let mut s = 0.0;
        for (xk, ck) in x.iter().zip(&self.center) {
            let u = (xk - ck) / self.radius;
            s += u * u;
        }
        s < BUMP_CUTOFF
    }
}

impl TestFunction for Bump {
    fn dim(&self) -> usize {
        self.center.len()
    }

    fn eval(&self, x: &[f64], grad: Option<&mut [f64]>, hess: Option<&mut [f64]>) -> f64 {
        let d = self.center.len();
        debug_assert_eq!(x.len(), d);

        // u = (x - c)/r, s = |u|^2; profile g(s) = exp(1/(s-1)) on s < 1.
        let mut s = 0.0;
        for k in 0..d {
            let u = (x[k] - self.center[k]) / self.radius;
            s += u * u;
        }
        if s >= BUMP_CUTOFF {
            if let Some(g) = grad {
                debug_assert_eq!(g.len(), d);
                g.fill(0.0);
            }
            if let Some(h) = hess {
                debug_assert_eq!(h.len(), d * d);
                h.fill(0.0);
            }
            return 0.0;
        }

        let sm1 = s - 1.0;
        let g = (1.0 / sm1).exp() * self.amplitude;
        if grad.is_none() && hess.is_none() {
            return g;
        }

        // g'(s) = -g/(s-1)^2, g''(s) = g (2s-1)/(s-1)^4.
        let inv2 = 1.0 / (sm1 * sm1);
        let gp = -g * inv2;
        let two_over_r2 = 2.0 / (self.radius * self.radius);

        if let Some(gr) = grad {
            debug_assert_eq!(gr.len(), d);
            for k in 0..d {
                gr[k] = gp * two_over_r2 * (x[k] - self.center[k]);
            }
        }
        if let Some(he) = hess {
            debug_assert_eq!(he.len(), d * d);
            let gpp = g * (2.0 * s - 1.0) * inv2 * inv2;
            for i in 0..d {
                let di = x[i] - self.center[i];
                for j in 0..d {
                    let dj = x[j] - self.center[j];
                    let mut v = gpp * two_over_r2 * two_over_r2 * di * dj;
                    if i == j {
                        v += gp * two_over_r2;
                    }
                    he[i * d + j] = v;
                }
            }
        }
        g
    }
}

/// The constant field; admitted so that mass checks are expressible as
/// pairings even though constants are not compactly supported.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constant {
    pub dim: usize,
    pub value: f64,
}

impl TestFunction for Constant {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, _x: &[f64], grad: Option<&mut [f64]>, hess: Option<&mut [f64]>) -> f64 {
        if let Some(g) = grad {
            g.fill(0.0);
        }
        if let Some(h) = hess {
            h.fill(0.0);
        }
        self.value
    }
}

/// Coordinate projection `x -> x_i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coordinate {
    pub dim: usize,
    pub index: usize,
}

impl TestFunction for Coordinate {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[f64], grad: Option<&mut [f64]>, hess: Option<&mut [f64]>) -> f64 {
        debug_assert!(self.index < self.dim);
        if let Some(g) = grad {
            g.fill(0.0);
            g[self.index] = 1.0;
        }
        if let Some(h) = hess {
            h.fill(0.0);
        }
        x[self.index]
    }
}

/// Second monomial `x -> x_i * x_j` (conditional second moments).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monomial2 {
    pub dim: usize,
    pub i: usize,
    pub j: usize,
}

impl TestFunction for Monomial2 {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[f64], grad: Option<&mut [f64]>, hess: Option<&mut [f64]>) -> f64 {
        let (i, j) = (self.i, self.j);
        if let Some(g) = grad {
            g.fill(0.0);
            g[i] += x[j];
            g[j] += x[i];
        }
        if let Some(h) = hess {
            h.fill(0.0);
            h[i * self.dim + j] += 1.0;
            h[j * self.dim + i] += 1.0;
        }
        x[i] * x[j]
    }
}

/// Ordered countable family of bumps on a dyadic grid.
///
/// Level 0 is a single bump of radius `extent` at the origin; level `l >= 1`
/// uses radius `extent / 2^l` and centers on the grid of that spacing inside
/// `[-extent, extent]^d`, ordered by squared norm then lexicographically.
/// The enumeration is deterministic, so index `k` always names the same
/// function for a given `(dim, extent)`.
#[derive(Debug, Clone)]
pub struct TestFunctionBasis {
    dim: usize,
    extent: f64,
    functions: Vec<Bump>,
}

impl TestFunctionBasis {
    pub fn dyadic(dim: usize, extent: f64, count: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::param("dim", "must be at least 1"));
        }
        if !(extent > 0.0) || !extent.is_finite() {
            return Err(Error::param("extent", "must be finite positive"));
        }
        if count == 0 {
            return Err(Error::param("count", "must be at least 1"));
        }
        let mut functions = Vec::with_capacity(count);
        let mut level: u32 = 0;
        while functions.len() < count {
            if level > 24 {
                return Err(Error::param(
                    "count",
                    "dyadic enumeration too deep; request fewer functions",
                ));
            }
            let radius = extent * 0.5f64.powi(level as i32);
            for center in level_centers(dim, extent, level) {
                if functions.len() == count {
                    break;
                }
                functions.push(Bump::new(center, radius)?);
            }
            level += 1;
        }
        Ok(TestFunctionBasis {
            dim,
            extent,
            functions,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn extent(&self) -> f64 {
        self.extent
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    /// Zero-based access; the k-th member of the enumeration.
    pub fn get(&self, k: usize) -> Result<&Bump> {
        self.functions.get(k).ok_or_else(|| {
            Error::param(
                "k",
                format!(
                    "basis has {} functions, asked for index {k}",
                    self.functions.len()
                ),
            )
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = &Bump> {
        self.functions.iter()
    }
}

/// Grid centers for one dyadic level, ordered by (squared norm, lexicographic).
fn level_centers(dim: usize, extent: f64, level: u32) -> Vec<Vec<f64>> {
    if level == 0 {
        return vec![vec![0.0; dim]];
    }
    let spacing = extent * 0.5f64.powi(level as i32);
    let half = 1i64 << level; // extent / spacing
    let mut lattice = vec![Vec::new()];
    for _ in 0..dim {
        let mut next = Vec::with_capacity(lattice.len() * (2 * half as usize + 1));
        for prefix in &lattice {
            for v in -half..=half {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        lattice = next;
    }
    lattice.sort_by_key(|iv| (iv.iter().map(|v| v * v).sum::<i64>(), iv.clone()));
    lattice
        .into_iter()
        .map(|iv| iv.iter().map(|v| *v as f64 * spacing).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn central_diff(f: &dyn TestFunction, x: &[f64], k: usize, h: f64) -> f64 {
        let mut xp = x.to_vec();
        let mut xm = x.to_vec();
        xp[k] += h;
        xm[k] -= h;
        (f.value(&xp) - f.value(&xm)) / (2.0 * h)
    }

    #[test]
    fn bump_matches_profile_at_center_and_vanishes_outside() {
        let b = Bump::new(vec![0.5, -1.0], 2.0).unwrap();
        assert!((b.value(&[0.5, -1.0]) - (-1.0f64).exp()).abs() < 1e-15);
        assert_eq!(b.value(&[4.0, -1.0]), 0.0);
        assert_eq!(b.value(&[0.5 + 2.0, -1.0]), 0.0); // boundary
    }

    #[test]
    fn gradient_and_hessian_match_central_differences() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(42);
        for dim in [1usize, 2, 3] {
            let center: Vec<f64> = (0..dim).map(|_| rng.gen_range(-0.5..0.5)).collect();
            let b = Bump::new(center.clone(), 1.7).unwrap();
            for _ in 0..40 {
                // interior points, away from the support boundary
                let x: Vec<f64> = center
                    .iter()
                    .map(|c| c + rng.gen_range(-0.9..0.9))
                    .collect();
                let s: f64 = x
                    .iter()
                    .zip(&center)
                    .map(|(a, c)| ((a - c) / 1.7).powi(2))
                    .sum();
                if s > 0.85 {
                    continue;
                }
                let mut grad = vec![0.0; dim];
                let mut hess = vec![0.0; dim * dim];
                let v = b.eval(&x, Some(&mut grad), Some(&mut hess));
                assert!(v > 0.0);
                let h = 1e-5;
                for k in 0..dim {
                    let fd = central_diff(&b, &x, k, h);
                    let scale = fd.abs().max(grad[k].abs()).max(1e-8);
                    assert!(
                        (fd - grad[k]).abs() / scale < 1e-6,
                        "grad mismatch dim={dim} k={k}: {fd} vs {}",
                        grad[k]
                    );
                }
                for i in 0..dim {
                    for j in 0..dim {
                        let mut xp = x.clone();
                        let mut xm = x.clone();
                        xp[j] += h;
                        xm[j] -= h;
                        let mut gp = vec![0.0; dim];
                        let mut gm = vec![0.0; dim];
                        b.eval(&xp, Some(&mut gp), None);
                        b.eval(&xm, Some(&mut gm), None);
                        let fd = (gp[i] - gm[i]) / (2.0 * h);
                        let scale = fd.abs().max(hess[i * dim + j].abs()).max(1e-6);
                        assert!(
                            (fd - hess[i * dim + j]).abs() / scale < 1e-5,
                            "hess mismatch ({i},{j}): {fd} vs {}",
                            hess[i * dim + j]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dyadic_enumeration_is_stable_and_bounded() {
        let basis = TestFunctionBasis::dyadic(1, 8.0, 50).unwrap();
        assert_eq!(basis.len(), 50);
        // level 0: radius 8 at 0; level 1: radius 4 at 0, +-4, +-8 (norm order)
        assert_eq!(basis.get(0).unwrap().radius(), 8.0);
        assert_eq!(basis.get(0).unwrap().center(), &[0.0]);
        assert_eq!(basis.get(1).unwrap().radius(), 4.0);
        assert_eq!(basis.get(1).unwrap().center(), &[0.0]);
        for b in basis.iter() {
            assert!(b.sup_value() <= (-1.0f64).exp() + 1e-15);
        }
        // deterministic: rebuild gives the same family
        let again = TestFunctionBasis::dyadic(1, 8.0, 50).unwrap();
        for (a, b) in basis.iter().zip(again.iter()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn dyadic_works_in_two_dimensions() {
        let basis = TestFunctionBasis::dyadic(2, 4.0, 30).unwrap();
        assert_eq!(basis.len(), 30);
        assert_eq!(basis.get(0).unwrap().center(), &[0.0, 0.0]);
        for b in basis.iter() {
            assert_eq!(b.dim(), 2);
        }
    }

    #[test]
    fn coordinate_and_monomial_derivatives() {
        let c = Coordinate { dim: 3, index: 1 };
        let mut g = vec![0.0; 3];
        let v = c.eval(&[1.0, 2.0, 3.0], Some(&mut g), None);
        assert_eq!(v, 2.0);
        assert_eq!(g, vec![0.0, 1.0, 0.0]);

        let m = Monomial2 { dim: 2, i: 0, j: 1 };
        let mut g = vec![0.0; 2];
        let mut h = vec![0.0; 4];
        let v = m.eval(&[3.0, 5.0], Some(&mut g), Some(&mut h));
        assert_eq!(v, 15.0);
        assert_eq!(g, vec![5.0, 3.0]);
        assert_eq!(h, vec![0.0, 1.0, 1.0, 0.0]);

        let sq = Monomial2 { dim: 1, i: 0, j: 0 };
        let mut g = vec![0.0; 1];
        let mut h = vec![0.0; 1];
        let v = sq.eval(&[3.0], Some(&mut g), Some(&mut h));
        assert_eq!(v, 9.0);
        assert_eq!(g, vec![6.0]);
        assert_eq!(h, vec![2.0]);
    }
}
