//! Weighted-particle solver and weak-form verification toolkit for conditional
//! McKean-Vlasov dynamics with common noise.
//!
//! The object of study is a signal/observation pair
//!
//! ```text
//! dX_t = b(t, X_t, Y, mu_t) dt + sigma(t, X_t, Y, mu_t) dB1_t + rho(t, X_t, Y, mu_t) dB2_t,
//! dY_t = h(t, X_t, Y, mu_t) dt + dB2_t,        X_0 = x,  Y_0 = 0,
//! ```
//!
//! where `mu_t` is the conditional law of `X_t` given the observation history
//! and the coefficients may depend on that law (mean-field coupling). Everything
//! here is built around the unnormalized conditional measure `nu_t` produced by
//! a Girsanov change of measure: particles carry log-weights, the
//! Kallianpur-Striebel formula turns `nu_t` into `mu_t`, and a family of weak-form
//! residual checks quantifies how well the simulated measures satisfy the Zakai
//! equation, its measure-space Fokker-Planck lift, and the sequence-space
//! projection of that lift.
//!
//! Modules, roughly bottom-up:
//!
//! * [`measures`]: weighted atomic measures, pairings, normalization,
//!   Wasserstein-1, mollified L2 geometry, and the truncated metric used on
//!   measure space.
//! * [`basis`]: smooth compactly supported test functions with analytic
//!   gradients and Hessians, organized as a countable ordered family.
//! * [`coefficients`]: coefficient families (drift, diffusions, sensor), their
//!   declared bounds, and probe-based assumption validators.
//! * [`particle`]: the weighted-particle scheme itself.
//! * [`operators`]: generator / sensor operators on test functions, the
//!   cylindrical calculus of measure derivatives, and the lifted coefficients.
//! * [`residuals`]: weak-form residual checks with bootstrap error bars.
//! * [`oracles`]: independent reference computations (correlated-noise
//!   Kalman-Bucy filter, brute-force optimal transport, quadrature) used to
//!   validate the fast paths.
//! * [`rng`]: deterministic stream layout so that results are reproducible and
//!   independent of the parallel schedule.

#![forbid(unsafe_code)]
// Guards written as `!(x > 0.0)` are deliberate: they reject NaN, which the
// clippy-suggested `x <= 0.0` would wave through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Index loops in the numerical kernels follow the subscripts of the formulas
// they implement; zipped iterator chains read worse with mixed strides.
#![allow(clippy::needless_range_loop)]

pub mod basis;
pub mod coefficients;
pub mod error;
pub mod measures;
pub mod operators;
pub mod oracles;
pub mod particle;
pub mod residuals;
pub mod rng;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    //! Doc-tested copies of the guide chapters; `cargo test --doc` keeps the
    //! book's code blocks compiling against the current API.

    #[doc = include_str!("../../../book/src/measures.md")]
    mod measures {}

    #[doc = include_str!("../../../book/src/coefficients.md")]
    mod coefficients {}

    #[doc = include_str!("../../../book/src/particles.md")]
    mod particles {}

    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}

    #[doc = include_str!("../../../book/src/residuals.md")]
    mod residuals {}

    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
}
