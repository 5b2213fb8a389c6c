//! Acceptance gate. Each test covers one numbered criterion, prints a single
//! PASS/FAIL line, and asserts it. Library-level criteria call `cmv`
//! directly; command-level criteria run the built binary in a temp dir.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use cmv::basis::{TestFunction, TestFunctionBasis};
use cmv::coefficients::{CoefficientSet, YPrefix};
use cmv::measures::{mollified_inner, wasserstein1, ProbabilityAtomMeasure, WeightedAtomMeasure};
use cmv::operators::{lifted_coefficients, CylindricalFunction, Outer};
use cmv::oracles::{kalman_bucy_correlated, quadrature_mollified, w1_bruteforce, LinearModel};
use cmv::particle::{
    simulate_canonical, FrozenNoiseMode, InitialLaw, InitialWeights, SimulationConfig,
};
use cmv::residuals::{
    cfpe_residual, ks_identity_check, lyapunov_decay, martingale_check, rinf_sde_residual,
    roundtrip_check, zakai_residual, zakai_residuals, EmpiricalLaw,
};
use cmv::rng::{substream, StreamPurpose};
use rand::Rng;
use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

fn verdict(label: &str, started: Instant, pass: bool) {
    let secs = started.elapsed().as_secs_f64();
    println!(
        "{label}: {} ({secs:.1}s)",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{label} failed");
}

fn config_1d(n: usize, t: f64, dt: f64, stride: usize) -> SimulationConfig {
    SimulationConfig {
        n_particles: n,
        dim: 1,
        t_horizon: t,
        dt,
        initial_law: InitialLaw::Point(vec![0.0]),
        initial_weights: InitialWeights::Unit,
        record_stride: stride,
    }
}

fn cmv_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read_json(dir: &Path, name: &str) -> serde_json::Value {
    let text = std::fs::read_to_string(dir.join(name)).expect("report exists");
    serde_json::from_str(&text).expect("report parses")
}

#[test]
fn criterion_01_normalization_identity_along_full_trajectory() {
    let t0 = Instant::now();
    let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
    let config = config_1d(2000, 0.5, 2.5e-3, 1);
    let traj = simulate_canonical(&config, &coeffs, 101, 0).unwrap();
    let basis = TestFunctionBasis::dyadic(1, 3.0, 50).unwrap();
    let phis: Vec<&dyn TestFunction> = (0..50).map(|k| basis.get(k).unwrap() as _).collect();
    let report = ks_identity_check(&traj, &phis).unwrap();
    let pass = report.pass && report.max_rel <= 1e-12;
    println!(
        "  normalization identity: max_rel = {:.3e} over {} grid points x 50 functions",
        report.max_rel,
        traj.recorded().len()
    );
    verdict("criterion 01 (normalization identity)", t0, pass);
}

#[test]
fn criterion_02_zero_sensor_reduction_is_exact() {
    let t0 = Instant::now();
    // h = 0: the log-weights never move, the mass stays at one, and the
    // normalized and unnormalized measures agree bit for bit.
    let coeffs = CoefficientSet::common_noise(1, -0.5, 0.2, 1.0, 0.4).unwrap();
    let n = 1024;
    let config = config_1d(n, 0.25, 2.5e-3, 1);
    let basis = TestFunctionBasis::dyadic(1, 3.0, 8).unwrap();
    let unit_weight = 1.0 / n as f64;
    let mut pass = true;
    for seed in [11u64, 22, 33, 44, 55] {
        let traj = simulate_canonical(&config, &coeffs, seed, 0).unwrap();
        pass &= traj.final_state().log_weights().iter().all(|&l| l == 0.0);
        pass &= traj.mass().iter().all(|&m| m == 1.0);
        pass &= traj.ess().iter().all(|&e| e == n as f64);
        for (_, nu) in traj.recorded() {
            pass &= nu.weights().iter().all(|&w| w == unit_weight);
            let mu = nu.normalize_unit().unwrap();
            for k in 0..4 {
                let phi = basis.get(k).unwrap();
                pass &= nu.pair(phi).unwrap() == mu.pair(phi).unwrap();
            }
        }
        if !pass {
            println!("  exactness lost at seed {seed}");
            break;
        }
    }
    verdict("criterion 02 (zero-sensor reduction, 5 seeds)", t0, pass);
}

#[test]
fn criterion_03_kalman_bucy_agreement_and_stationary_variance() {
    let t0 = Instant::now();
    // Command-level: the oracle subcommand on the fixed filtering setup.
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("oracle.json");
    std::fs::write(
        &cfg,
        r#"{
            "seed": 3030,
            "family": {"kind": "linear_gaussian", "a": -0.5, "sigma": 1.0, "rho": 0.3, "c": 1.0},
            "n_particles": 20000,
            "t_horizon": 1.0,
            "dt": 0.0005,
            "record_stride": 100
        }"#,
    )
    .unwrap();
    let out = dir.path().join("out");
    let res = cmv_bin(&[
        "oracle",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    let mut pass = res.status.code() == Some(0);
    if pass {
        let summary = read_json(&out, "oracle_summary.json");
        let err = summary["time_avg_abs_err"].as_f64().unwrap();
        let se = summary["time_avg_se"].as_f64().unwrap();
        let l2 = summary["l2_rel_err"].as_f64().unwrap();
        println!(
            "  filter match: time-avg |err| = {err:.3e} vs 3 SE = {:.3e}, relative L2 = {:.4}",
            3.0 * se,
            l2
        );
        pass &= summary["pass"].as_bool().unwrap();
        pass &= err <= 3.0 * se && l2 <= 0.05;
    } else {
        println!(
            "  oracle run failed: {}",
            String::from_utf8_lossy(&res.stderr)
        );
    }

    // Riccati fixed point: a = 0, sigma = c = 1, rho = 0 gives P* = 1.
    let model = LinearModel {
        a: 0.0,
        a_bar: 0.0,
        sigma: 1.0,
        rho: 0.0,
        c: 1.0,
        m0: 0.0,
        p0: 0.5,
    };
    let steps = 6000usize;
    let dt = 1e-3;
    let times: Vec<f64> = (0..=steps).map(|k| k as f64 * dt).collect();
    let y = vec![0.0; steps + 1];
    let states = kalman_bucy_correlated(&model, &times, &y).unwrap();
    let p_end = states.last().unwrap().var;
    println!("  stationary variance: P(6.0) = {p_end:.6} vs P* = 1");
    pass &= (p_end - 1.0).abs() <= 0.02;
    verdict("criterion 03 (linear filter oracle)", t0, pass);
}

#[test]
fn criterion_04_zakai_residuals_and_ensemble_scaling() {
    let t0 = Instant::now();
    let basis = TestFunctionBasis::dyadic(1, 3.0, 50).unwrap();
    let phis: Vec<&dyn TestFunction> = (0..50).map(|k| basis.get(k).unwrap() as _).collect();
    let config = config_1d(2000, 0.1, 1e-3, 1);
    let mut pass = true;
    let families: [(&str, CoefficientSet); 2] = [
        (
            "linear",
            CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap(),
        ),
        (
            "bounded",
            CoefficientSet::bounded_smooth(1, 1.0, 0.5, 1.0, 0.4, 0.8).unwrap(),
        ),
    ];
    for (name, coeffs) in &families {
        let traj = simulate_canonical(&config, coeffs, 404, 0).unwrap();
        let reports = zakai_residuals(&traj, coeffs, &phis).unwrap();
        let ok = reports
            .iter()
            .filter(|r| r.standardized_terminal.abs() <= 5.0)
            .count();
        let fraction = ok as f64 / reports.len() as f64;
        println!("  {name}: {ok}/50 functions within +-5 standardized");
        pass &= fraction >= 0.9;
    }

    // Command-level: the ensemble-size sweep must recover the 1/sqrt(N) decay.
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.json");
    std::fs::write(
        &cfg,
        r#"{
            "seed": 99,
            "family": {"kind": "linear_gaussian", "a": -0.5, "sigma": 1.0, "rho": 0.3, "c": 1.0},
            "n_particles": 500,
            "t_horizon": 0.1,
            "dt": 0.0001,
            "m_y": 20,
            "basis_size": 8
        }"#,
    )
    .unwrap();
    let out = dir.path().join("out");
    let res = cmv_bin(&[
        "sweep",
        "--axis",
        "n",
        "--values",
        "500,2000,8000",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    pass &= res.status.code() == Some(0);
    if res.status.code() == Some(0) {
        let summary = read_json(&out, "sweep_summary.json");
        let slope = summary["slope"].as_f64().unwrap();
        println!("  sweep slope over N in {{500, 2000, 8000}}: {slope:.3}");
        pass &= summary["pass"].as_bool().unwrap();
        pass &= (-0.65..=-0.35).contains(&slope);
    } else {
        println!("  sweep failed: {}", String::from_utf8_lossy(&res.stderr));
    }
    verdict("criterion 04 (measure-equation residuals)", t0, pass);
}

#[test]
fn criterion_05_mass_martingale_two_hundred_paths() {
    let t0 = Instant::now();
    let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
    let config = config_1d(256, 0.2, 2e-3, 100);
    let trajs: Vec<_> = (0..200)
        .map(|r| simulate_canonical(&config, &coeffs, 505, r).unwrap())
        .collect();
    let report = martingale_check(&trajs).unwrap();
    println!(
        "  sampled sensor: mean mass = {:.5}, z = {:.2}",
        report.mean, report.z_score
    );
    let mut pass = report.pass;

    // b = sigma = rho = 0, h = 1: the mass is exp(Y_T - T/2) in closed form.
    let flat = CoefficientSet::constant(vec![0.0], vec![0.0], vec![0.0], 1.0).unwrap();
    let small = config_1d(8, 0.2, 2e-3, 100);
    let mut closed_ok = true;
    let trajs: Vec<_> = (0..200)
        .map(|r| simulate_canonical(&small, &flat, 515, r).unwrap())
        .collect();
    for traj in &trajs {
        let y_end = *traj.y().last().unwrap();
        let expected = (y_end - 0.1).exp();
        let got = *traj.mass().last().unwrap();
        closed_ok &= (got - expected).abs() <= 1e-10 * expected.max(1.0);
    }
    let report = martingale_check(&trajs).unwrap();
    println!(
        "  closed form: mean mass = {:.5}, z = {:.2}, pathwise match = {closed_ok}",
        report.mean, report.z_score
    );
    pass &= report.pass && closed_ok;
    verdict("criterion 05 (mass martingale)", t0, pass);
}

#[test]
fn criterion_06_measure_level_residual_reduction_and_ensemble() {
    let t0 = Instant::now();
    let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
    let config = config_1d(512, 0.1, 1e-3, 1);
    let basis = TestFunctionBasis::dyadic(1, 3.0, 8).unwrap();

    // One member and a linear outer: the lifted residual must collapse onto
    // the plain measure-equation residual for the same trajectory.
    let traj = simulate_canonical(&config, &coeffs, 606, 0).unwrap();
    let linear = zakai_residual(&traj, &coeffs, basis.get(0).unwrap()).unwrap();
    let law = EmpiricalLaw::from_trajectories(vec![traj]).unwrap();
    let f =
        CylindricalFunction::from_basis(Outer::Linear { weights: vec![1.0] }, &basis, 1).unwrap();
    let lifted = cfpe_residual(&law, &f, &coeffs).unwrap();
    let gap = lifted
        .residual
        .iter()
        .zip(&linear.residual)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0_f64, f64::max);
    println!("  single-member linear outer: max pathwise gap = {gap:.3e}");
    let mut pass = gap <= 1e-10;

    // Sixteen members with randomized initial mass and a genuinely nonlinear
    // outer f(u) = u^2.
    let spread = SimulationConfig {
        initial_weights: InitialWeights::Spread { scale: 0.3 },
        ..config
    };
    let law = EmpiricalLaw::generate(&spread, &coeffs, 616, 0, 16).unwrap();
    let f = CylindricalFunction::from_basis(Outer::Quadratic { weights: vec![2.0] }, &basis, 1)
        .unwrap();
    let report = cfpe_residual(&law, &f, &coeffs).unwrap();
    println!(
        "  16-member quadratic outer: standardized terminal = {:.2}",
        report.standardized_terminal
    );
    pass &= report.standardized_terminal.abs() <= 5.0;
    verdict("criterion 06 (lifted equation residuals)", t0, pass);
}

#[test]
fn criterion_07_sequence_space_projection_matches_and_is_rank_one() {
    let t0 = Instant::now();
    let coeffs = CoefficientSet::mean_field_linear(1, -0.4, 0.3, 1.0, 0.3, 0.8).unwrap();
    let config = config_1d(256, 0.1, 1e-3, 1);
    let basis = TestFunctionBasis::dyadic(1, 3.0, 8).unwrap();
    let traj = simulate_canonical(&config, &coeffs, 707, 0).unwrap();

    let lifted = rinf_sde_residual(&traj, &coeffs, &basis, 8).unwrap();
    let phis: Vec<&dyn TestFunction> = (0..8).map(|k| basis.get(k).unwrap() as _).collect();
    let direct = zakai_residuals(&traj, &coeffs, &phis).unwrap();
    let mut worst = 0.0_f64;
    for (a, b) in lifted.iter().zip(&direct) {
        let scale = b.residual.iter().fold(1.0_f64, |acc, v| acc.max(v.abs()));
        for (x, y) in a.residual.iter().zip(&b.residual) {
            worst = worst.max((x - y).abs() / scale);
        }
    }
    println!("  coordinate residuals vs direct: worst relative gap = {worst:.3e}");
    let mut pass = worst <= 1e-12;

    // The projected diffusion matrix is the outer product of the lifted
    // sensor coordinates; the diagonal identity must hold exactly.
    let times = traj.times();
    let yv = traj.y();
    for &(k, ref nu) in traj.recorded().iter().rev().take(3) {
        let y = YPrefix::new(&times[..=k], &yv[..=k]).unwrap();
        let lc = lifted_coefficients(times[k], y, nu, &coeffs, &basis, 8).unwrap();
        for i in 0..8 {
            pass &= lc.alpha(i, i) == lc.gamma[i] * lc.gamma[i];
            for j in 0..8 {
                pass &= lc.alpha(i, j) == lc.gamma[i] * lc.gamma[j];
            }
        }
    }
    verdict("criterion 07 (sequence-space lift)", t0, pass);
}

fn random_weighted(rng: &mut impl Rng, dim: usize, atoms: usize) -> WeightedAtomMeasure {
    let positions: Vec<f64> = (0..atoms * dim).map(|_| rng.gen_range(-2.0..2.0)).collect();
    let weights: Vec<f64> = (0..atoms).map(|_| rng.gen_range(0.1..1.5)).collect();
    WeightedAtomMeasure::from_flat(dim, positions, weights).unwrap()
}

fn random_probability(rng: &mut impl Rng, atoms: usize) -> ProbabilityAtomMeasure {
    random_weighted(rng, 1, atoms).normalize_unit().unwrap()
}

#[test]
fn criterion_08_mollified_geometry_and_damped_decay() {
    let t0 = Instant::now();
    // Closed form vs adaptive quadrature on random atom pairs in d = 1, 2.
    let mut rng = substream(808, 0, StreamPurpose::Probe, 0);
    let mut worst = 0.0_f64;
    for dim in [1usize, 2] {
        for _ in 0..3 {
            let a = random_weighted(&mut rng, dim, 5);
            let b = random_weighted(&mut rng, dim, 5);
            let closed = mollified_inner(&a, &b, 0.3).unwrap();
            let quad = quadrature_mollified(&a, &b, 0.3).unwrap();
            worst = worst.max((closed - quad).abs() / quad.abs().max(1e-12));
        }
    }
    println!("  closed form vs quadrature: worst relative gap = {worst:.3e}");
    let mut pass = worst <= 1e-6;

    // Damped norm functional over 200 observation replicas.
    let coeffs = CoefficientSet::linear_gaussian(1, -0.5, 1.0, 0.3, 1.0).unwrap();
    let config = config_1d(128, 0.25, 2.5e-3, 10);
    let trajs: Vec<_> = (0..200)
        .map(|r| simulate_canonical(&config, &coeffs, 818, r).unwrap())
        .collect();
    let k_const = coeffs.bounds().c_lip;
    let report = lyapunov_decay(&trajs, 0.3, &coeffs, k_const).unwrap();
    println!(
        "  damped functional: max uptick = {:.4} (alpha = {:.2})",
        report.max_uptick, report.alpha
    );
    pass &= report.max_uptick <= 0.02;
    verdict("criterion 08 (mollified geometry and decay)", t0, pass);
}

#[test]
fn criterion_09_transport_distance_against_linear_program() {
    let t0 = Instant::now();
    let mut rng = substream(909, 0, StreamPurpose::Probe, 0);
    let mut worst = 0.0_f64;
    for _ in 0..20 {
        let (na, nb) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let a = random_probability(&mut rng, na);
        let b = random_probability(&mut rng, nb);
        let fast = wasserstein1(&a, &b).unwrap();
        let exact = w1_bruteforce(&a, &b).unwrap();
        assert!(fast.exact, "1-D distance must take the quantile path");
        worst = worst.max((fast.value - exact).abs());
    }
    println!("  quantile coupling vs transport LP: worst gap = {worst:.3e}");
    let mut pass = worst <= 1e-9;

    // Metric axioms on random triples.
    let mut axiom_worst = 0.0_f64;
    for _ in 0..20 {
        let (na, nb, nc) = (
            rng.gen_range(2..=6),
            rng.gen_range(2..=6),
            rng.gen_range(2..=6),
        );
        let a = random_probability(&mut rng, na);
        let b = random_probability(&mut rng, nb);
        let c = random_probability(&mut rng, nc);
        let dab = wasserstein1(&a, &b).unwrap().value;
        let dba = wasserstein1(&b, &a).unwrap().value;
        let dac = wasserstein1(&a, &c).unwrap().value;
        let dcb = wasserstein1(&c, &b).unwrap().value;
        let daa = wasserstein1(&a, &a).unwrap().value;
        axiom_worst = axiom_worst
            .max(daa)
            .max((dab - dba).abs())
            .max(dab - dac - dcb);
    }
    println!("  metric axioms on random triples: worst violation = {axiom_worst:.3e}");
    pass &= axiom_worst <= 1e-10;
    verdict("criterion 09 (transport distance oracle)", t0, pass);
}

#[test]
fn criterion_10_frozen_law_roundtrip_tightens_with_ensemble_size() {
    let t0 = Instant::now();
    let coeffs = CoefficientSet::bounded_smooth(1, 1.0, 0.6, 1.0, 0.3, 0.8).unwrap();
    let proto = config_1d(500, 0.1, 1e-3, 1);
    let basis = TestFunctionBasis::dyadic(1, 3.0, 8).unwrap();
    let table = roundtrip_check(
        &proto,
        &coeffs,
        &[500, 2000, 8000],
        20,
        1010,
        &basis,
        8,
        0.1,
        FrozenNoiseMode::Fresh,
    )
    .unwrap();
    for row in &table.rows {
        println!(
            "  N = {:>4}: median metric gap = {:.4e}",
            row.n_particles, row.median_metric
        );
    }
    let strict = table
        .rows
        .windows(2)
        .all(|w| w[1].median_metric < w[0].median_metric);
    verdict(
        "criterion 10 (frozen-law roundtrip)",
        t0,
        table.nonincreasing && strict,
    );
}

#[test]
fn criterion_11_assumption_violations_are_rejected_with_reports() {
    let t0 = Instant::now();
    let dir = tempfile::tempdir().unwrap();

    // sigma = rho: the reference-measure diffusion degenerates.
    let degenerate = dir.path().join("degenerate.json");
    std::fs::write(
        &degenerate,
        r#"{
            "seed": 1111,
            "family": {"kind": "constant", "b": [0.0], "sigma_diag": [0.7], "rho": [0.7], "h": 0.5},
            "n_particles": 64,
            "t_horizon": 0.1,
            "dt": 0.01,
            "declared_sigma0": 0.25,
            "checks": ["assumptions"]
        }"#,
    )
    .unwrap();
    let out1 = dir.path().join("out1");
    let res = cmv_bin(&[
        "verify",
        "--config",
        degenerate.to_str().unwrap(),
        "--out",
        out1.to_str().unwrap(),
    ]);
    let mut pass = res.status.code() == Some(1);
    let report = read_json(&out1, "verify_assumptions.json");
    let nd = &report["report"]["nondegeneracy"];
    println!(
        "  degenerate diffusion: exit {}, min eigenvalue {} vs declared {}",
        res.status.code().unwrap_or(-1),
        nd["min_eig"],
        nd["declared_sigma0"]
    );
    pass &= !report["pass"].as_bool().unwrap();
    pass &= !nd["pass"].as_bool().unwrap();
    pass &= nd["min_eig"].as_f64().unwrap() < nd["declared_sigma0"].as_f64().unwrap();

    // Drift slope 2 against a declared joint Lipschitz constant of 1.
    let steep = dir.path().join("steep.json");
    std::fs::write(
        &steep,
        r#"{
            "seed": 1112,
            "family": {"kind": "linear_gaussian", "a": 2.0, "sigma": 1.0, "rho": 0.0, "c": 0.5},
            "n_particles": 64,
            "t_horizon": 0.1,
            "dt": 0.01,
            "declared_c_lip": 1.0,
            "checks": ["assumptions"]
        }"#,
    )
    .unwrap();
    let out2 = dir.path().join("out2");
    let res = cmv_bin(&[
        "verify",
        "--config",
        steep.to_str().unwrap(),
        "--out",
        out2.to_str().unwrap(),
    ]);
    pass &= res.status.code() == Some(1);
    let report = read_json(&out2, "verify_assumptions.json");
    let lip = &report["report"]["lipschitz"];
    println!(
        "  steep drift: exit {}, probed ratio {} vs declared {}, worst field {}",
        res.status.code().unwrap_or(-1),
        lip["max_ratio"],
        lip["declared"],
        lip["worst_field"]
    );
    pass &= !report["pass"].as_bool().unwrap();
    pass &= !lip["pass"].as_bool().unwrap();
    pass &= lip["max_ratio"].as_f64().unwrap() > lip["declared"].as_f64().unwrap();
    pass &= lip["worst_field"] == "b";
    verdict("criterion 11 (assumption gate)", t0, pass);
}

#[test]
fn criterion_12_outputs_do_not_depend_on_worker_count() {
    let t0 = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(
        &cfg,
        r#"{
            "seed": 1212,
            "family": {"kind": "linear_gaussian", "a": -0.5, "sigma": 1.0, "rho": 0.3, "c": 1.0},
            "n_particles": 512,
            "t_horizon": 0.1,
            "dt": 0.002,
            "m_y": 3,
            "record_stride": 10
        }"#,
    )
    .unwrap();
    let mut pass = true;
    let mut blobs: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
    for workers in ["1", "4"] {
        let out = dir.path().join(format!("out{workers}"));
        let res = cmv_bin(&[
            "simulate",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
            "--workers",
            workers,
        ]);
        pass &= res.status.code() == Some(0);
        blobs.push((
            std::fs::read(out.join("trajectory.csv")).unwrap(),
            std::fs::read(out.join("manifest.json")).unwrap(),
        ));
    }
    let identical = blobs[0] == blobs[1];
    println!("  one worker vs four: trajectory.csv and manifest.json identical = {identical}");
    pass &= identical;
    verdict("criterion 12 (schedule independence)", t0, pass);
}
