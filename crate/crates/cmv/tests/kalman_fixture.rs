//! Cross-validation of the closed-form linear filter against a large
//! weighted ensemble on one fixed observation path. The outcome is written
//! to `tests/fixtures/` together with the seed that produced it, so the
//! recorded numbers are always regenerable from this test alone.

use cmv::coefficients::CoefficientSet;
use cmv::oracles::{kalman_bucy_correlated, LinearModel};
use cmv::particle::{simulate_canonical, InitialLaw, InitialWeights, SimulationConfig};
use cmv::rng::{substream, StreamPurpose};
use rand::Rng;
use std::path::PathBuf;

const SEED: u64 = 271_828;
const RESAMPLES: usize = 200;

#[test]
fn closed_form_filter_matches_a_million_particle_ensemble() {
    let (a, sigma, rho, c) = (-0.5, 1.0, 0.3, 1.0);
    let t_horizon = 0.05;
    let dt = 2.5e-4;
    let n = 1_000_000usize;

    let coeffs = CoefficientSet::linear_gaussian(1, a, sigma, rho, c).unwrap();
    let config = SimulationConfig {
        n_particles: n,
        dim: 1,
        t_horizon,
        dt,
        initial_law: InitialLaw::Point(vec![0.0]),
        initial_weights: InitialWeights::Unit,
        record_stride: 200,
    };
    let traj = simulate_canonical(&config, &coeffs, SEED, 0).unwrap();

    let model = LinearModel {
        a,
        a_bar: 0.0,
        sigma,
        rho,
        c,
        m0: 0.0,
        p0: 0.0,
    };
    let kalman = kalman_bucy_correlated(&model, traj.times(), traj.y()).unwrap();
    let k_term = traj.n_steps();
    let particle_mean = traj.mean_at(k_term)[0];
    let reference = kalman[k_term].mean;

    // Bootstrap spread of the self-normalized mean over the terminal atoms.
    let nu = traj.nu_at(k_term).expect("terminal snapshot recorded");
    let mut rng = substream(SEED, 0, StreamPurpose::Bootstrap, 3);
    let mut means = Vec::with_capacity(RESAMPLES);
    for _ in 0..RESAMPLES {
        let mut sw = 0.0;
        let mut swx = 0.0;
        for _ in 0..n {
            let j = rng.gen_range(0..n);
            let w = nu.weight(j);
            sw += w;
            swx += w * nu.position(j)[0];
        }
        means.push(swx / sw);
    }
    let mean_of_means = means.iter().sum::<f64>() / RESAMPLES as f64;
    let se = (means
        .iter()
        .map(|v| (v - mean_of_means) * (v - mean_of_means))
        .sum::<f64>()
        / (RESAMPLES - 1) as f64)
        .sqrt();

    let tolerance = 3.0 * se;
    let error = (particle_mean - reference).abs();
    assert!(
        error <= tolerance,
        "ensemble mean {particle_mean} vs filter mean {reference}: error {error:.3e} above 3 SE {tolerance:.3e}"
    );

    let fixture = serde_json::json!({
        "oracle": "kalman_bucy_correlated",
        "parameters": {
            "a": a,
            "sigma": sigma,
            "rho": rho,
            "c": c,
            "m0": 0.0,
            "p0": 0.0,
            "t_horizon": t_horizon,
            "dt": dt,
            "n_particles": n,
        },
        "seed": SEED,
        "value": reference,
        "observed": particle_mean,
        "tolerance": tolerance,
    });
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    let mut text = serde_json::to_string_pretty(&fixture).unwrap();
    text.push('\n');
    std::fs::write(dir.join("kalman_crossvalidation.json"), text).unwrap();
}
