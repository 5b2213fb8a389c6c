//! Run configuration: one JSON file describes the model, the discretization,
//! the replica counts, and the tolerances. The seed is mandatory; there is
//! no wall-clock fallback anywhere.
//!
//! The struct round-trips losslessly through serde, and the sha256 of its
//! canonical serialization stamps every output file, so runs can always be
//! traced back to the exact configuration that produced them.

use crate::error::{CliError, CliResult};
use cmv::basis::TestFunctionBasis;
use cmv::coefficients::CoefficientSet;
use cmv::particle::{InitialLaw, InitialWeights, SimulationConfig};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Master seed; every random stream in a run derives from it.
    pub seed: u64,
    pub family: FamilyConfig,
    #[serde(default = "default_dim")]
    pub dim: usize,
    pub n_particles: usize,
    pub t_horizon: f64,
    pub dt: f64,
    /// Observation replicas.
    #[serde(default = "default_one")]
    pub m_y: usize,
    /// Ensemble replicas per observation path (measure-level checks).
    #[serde(default = "default_one")]
    pub m_nu: usize,
    #[serde(default = "default_basis_size")]
    pub basis_size: usize,
    #[serde(default = "default_basis_extent")]
    pub basis_extent: f64,
    #[serde(default)]
    pub initial: InitialConfig,
    #[serde(default)]
    pub initial_weights: WeightConfig,
    #[serde(default = "default_one")]
    pub record_stride: usize,
    /// Checker selection for `verify` when `--check` is not given.
    #[serde(default)]
    pub checks: Vec<String>,
    #[serde(default)]
    pub tolerances: Tolerances,
    /// Override the family's declared joint Lipschitz constant.
    #[serde(default)]
    pub declared_c_lip: Option<f64>,
    /// Override the family's declared nondegeneracy floor.
    #[serde(default)]
    pub declared_sigma0: Option<f64>,
    /// State-range envelope used for the effective sup-norms of unbounded
    /// families.
    #[serde(default)]
    pub state_range: Option<f64>,
    /// Ensemble sizes for the roundtrip check.
    #[serde(default)]
    pub roundtrip_n: Option<Vec<usize>>,
    /// Mollification width for the Lyapunov and roundtrip checks.
    #[serde(default = "default_delta")]
    pub delta: f64,
    #[serde(default = "default_p")]
    pub regularity_p: f64,
    /// Number of lifted coordinates checked by `rinf`.
    #[serde(default = "default_k_lift")]
    pub k_lift: usize,
    /// Damping constant for the Lyapunov functional; 0 means "use the
    /// declared Lipschitz constant".
    #[serde(default)]
    pub k_const: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FamilyConfig {
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
        rho: f64,
    },
    LinearGaussian {
        a: f64,
        sigma: f64,
        rho: f64,
        c: f64,
    },
    MeanFieldLinear {
        a: f64,
        a_bar: f64,
        sigma: f64,
        rho: f64,
        c: f64,
    },
    BoundedSmooth {
        drift_gain: f64,
        mean_gain: f64,
        sigma: f64,
        rho: f64,
        obs_gain: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialConfig {
    Point { position: Vec<f64> },
    Gaussian { mean: Vec<f64>, std: f64 },
}

impl Default for InitialConfig {
    fn default() -> Self {
        InitialConfig::Point { position: vec![] }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WeightConfig {
    #[default]
    Unit,
    Spread { scale: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    #[serde(default = "d_ks_rel")]
    pub ks_rel: f64,
    #[serde(default = "d_z")]
    pub martingale_z: f64,
    #[serde(default = "d_standardized")]
    pub standardized: f64,
    #[serde(default = "d_fraction")]
    pub zakai_pass_fraction: f64,
    #[serde(default = "d_uptick")]
    pub lyapunov_uptick: f64,
    #[serde(default = "d_lip_margin")]
    pub lipschitz_margin: f64,
    #[serde(default = "d_probes")]
    pub probes: usize,
    #[serde(default = "d_slope_lo")]
    pub slope_lo: f64,
    #[serde(default = "d_slope_hi")]
    pub slope_hi: f64,
    #[serde(default = "d_oracle_l2")]
    pub oracle_l2_rel: f64,
}

fn d_ks_rel() -> f64 {
    1e-12
}
fn d_z() -> f64 {
    3.0
}
fn d_standardized() -> f64 {
    5.0
}
fn d_fraction() -> f64 {
    0.9
}
fn d_uptick() -> f64 {
    0.02
}
fn d_lip_margin() -> f64 {
    1e-9
}
fn d_probes() -> usize {
    64
}
fn d_slope_lo() -> f64 {
    -0.65
}
fn d_slope_hi() -> f64 {
    -0.35
}
fn d_oracle_l2() -> f64 {
    0.05
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            ks_rel: d_ks_rel(),
            martingale_z: d_z(),
            standardized: d_standardized(),
            zakai_pass_fraction: d_fraction(),
            lyapunov_uptick: d_uptick(),
            lipschitz_margin: d_lip_margin(),
            probes: d_probes(),
            slope_lo: d_slope_lo(),
            slope_hi: d_slope_hi(),
            oracle_l2_rel: d_oracle_l2(),
        }
    }
}

fn default_dim() -> usize {
    1
}
fn default_one() -> usize {
    1
}
fn default_basis_size() -> usize {
    8
}
fn default_basis_extent() -> f64 {
    3.0
}
fn default_delta() -> f64 {
    0.1
}
fn default_p() -> f64 {
    2.0
}
fn default_k_lift() -> usize {
    8
}

impl RunConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        let config: RunConfig = serde_json::from_str(&text).map_err(|e| {
            CliError::Config(format!(
                "config {} line {} column {}: {e}",
                path.display(),
                e.line(),
                e.column()
            ))
        })?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.dim == 0 {
            return Err(CliError::Config("dim must be at least 1".into()));
        }
        if self.n_particles < 2 {
            return Err(CliError::Config("n_particles must be at least 2".into()));
        }
        if !(self.dt > 0.0) || !(self.t_horizon > 0.0) {
            return Err(CliError::Config("dt and t_horizon must be positive".into()));
        }
        if self.m_y == 0 || self.m_nu == 0 {
            return Err(CliError::Config("m_y and m_nu must be at least 1".into()));
        }
        if self.basis_size == 0 {
            return Err(CliError::Config("basis_size must be at least 1".into()));
        }
        if self.record_stride == 0 {
            return Err(CliError::Config("record_stride must be at least 1".into()));
        }
        Ok(())
    }

    /// One canonical serialization; its hash stamps every output.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    pub fn config_hash(&self) -> String {
        sha256_hex(self.canonical_json().as_bytes())
    }

    /// Hash of the parts that define the coefficient functions alone.
    pub fn coefficients_hash(&self) -> String {
        let payload = serde_json::json!({
            "family": self.family,
            "declared_c_lip": self.declared_c_lip,
            "declared_sigma0": self.declared_sigma0,
            "state_range": self.state_range,
            "dim": self.dim,
        });
        sha256_hex(payload.to_string().as_bytes())
    }

    pub fn coefficients(&self) -> CliResult<CoefficientSet> {
        let d = self.dim;
        let base = match &self.family {
            FamilyConfig::Constant {
                b,
                sigma_diag,
                rho,
                h,
            } => CoefficientSet::constant(b.clone(), sigma_diag.clone(), rho.clone(), *h),
            FamilyConfig::CommonNoise {
                a,
                a_bar,
                sigma,
                rho,
            } => CoefficientSet::common_noise(d, *a, *a_bar, *sigma, *rho),
            FamilyConfig::LinearGaussian { a, sigma, rho, c } => {
                CoefficientSet::linear_gaussian(d, *a, *sigma, *rho, *c)
            }
            FamilyConfig::MeanFieldLinear {
                a,
                a_bar,
                sigma,
                rho,
                c,
            } => CoefficientSet::mean_field_linear(d, *a, *a_bar, *sigma, *rho, *c),
            FamilyConfig::BoundedSmooth {
                drift_gain,
                mean_gain,
                sigma,
                rho,
                obs_gain,
            } => {
                CoefficientSet::bounded_smooth(d, *drift_gain, *mean_gain, *sigma, *rho, *obs_gain)
            }
        }?;
        let mut coeffs = base;
        if let Some(c) = self.declared_c_lip {
            coeffs = coeffs.with_declared_c_lip(c);
        }
        if let Some(s) = self.declared_sigma0 {
            coeffs = coeffs.with_declared_sigma0(s);
        }
        if let Some(r) = self.state_range {
            coeffs = coeffs.with_state_range(r)?;
        }
        Ok(coeffs)
    }

    pub fn simulation(&self) -> CliResult<SimulationConfig> {
        let initial_law = match &self.initial {
            InitialConfig::Point { position } => {
                if position.is_empty() {
                    InitialLaw::Point(vec![0.0; self.dim])
                } else {
                    InitialLaw::Point(position.clone())
                }
            }
            InitialConfig::Gaussian { mean, std } => InitialLaw::Gaussian {
                mean: mean.clone(),
                std: *std,
            },
        };
        let initial_weights = match self.initial_weights {
            WeightConfig::Unit => InitialWeights::Unit,
            WeightConfig::Spread { scale } => InitialWeights::Spread { scale },
        };
        Ok(SimulationConfig {
            n_particles: self.n_particles,
            dim: self.dim,
            t_horizon: self.t_horizon,
            dt: self.dt,
            initial_law,
            initial_weights,
            record_stride: self.record_stride,
        })
    }

    pub fn basis(&self) -> CliResult<TestFunctionBasis> {
        Ok(TestFunctionBasis::dyadic(
            self.dim,
            self.basis_extent,
            self.basis_size,
        )?)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal() -> &'static str {
        r#"{
            "seed": 7,
            "family": {"kind": "linear_gaussian", "a": -0.5, "sigma": 1.0, "rho": 0.3, "c": 1.0},
            "n_particles": 100,
            "t_horizon": 0.5,
            "dt": 0.005
        }"#
    }

    #[test]
    fn config_round_trips_losslessly() {
        let parsed: RunConfig = serde_json::from_str(minimal()).unwrap();
        let reserialized = parsed.canonical_json();
        let reparsed: RunConfig = serde_json::from_str(&reserialized).unwrap();
        assert_eq!(parsed, reparsed);
        assert_eq!(parsed.config_hash(), reparsed.config_hash());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"seed": 1, "family": {"kind": "linear_gaussian", "a": 0.0,
            "sigma": 1.0, "rho": 0.0, "c": 1.0}, "n_particles": 10,
            "t_horizon": 1.0, "dt": 0.1, "wall_clock": true}"#;
        assert!(serde_json::from_str::<RunConfig>(text).is_err());
    }

    #[test]
    fn seed_is_mandatory() {
        let text = r#"{"family": {"kind": "linear_gaussian", "a": 0.0,
            "sigma": 1.0, "rho": 0.0, "c": 1.0}, "n_particles": 10,
            "t_horizon": 1.0, "dt": 0.1}"#;
        assert!(serde_json::from_str::<RunConfig>(text).is_err());
    }

    #[test]
    fn hashes_separate_configs_and_coefficients() {
        let a: RunConfig = serde_json::from_str(minimal()).unwrap();
        let mut b = a.clone();
        b.n_particles = 200;
        assert_ne!(a.config_hash(), b.config_hash());
        // particle count does not change the coefficient functions
        assert_eq!(a.coefficients_hash(), b.coefficients_hash());
        let mut c = a.clone();
        c.family = FamilyConfig::LinearGaussian {
            a: -0.4,
            sigma: 1.0,
            rho: 0.3,
            c: 1.0,
        };
        assert_ne!(a.coefficients_hash(), c.coefficients_hash());
    }
}
