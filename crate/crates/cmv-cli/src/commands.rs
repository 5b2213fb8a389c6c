//! Subcommand bodies. Every command loads everything it needs from the
//! [`RunConfig`], writes CSV/JSON files stamped with the config hash into the
//! output directory, and returns `Ok(true)` when all its checks pass.
//!
//! Formatting discipline: floats go through `Display` (shortest round-trip
//! form) and JSON maps are key-sorted, so a rerun with the same config and
//! seed reproduces every output byte for byte at any worker count.

use crate::config::{sha256_hex, FamilyConfig, InitialConfig, RunConfig, Tolerances};
use crate::error::{CliError, CliResult};
use crate::SweepAxis;
use cmv::basis::TestFunction;
use cmv::coefficients::{check_lipschitz, check_nondegeneracy, FrozenMuPath};
use cmv::measures::{metric_d, WeightedAtomMeasure};
use cmv::operators::{lifted_coefficients, CylindricalFunction, Outer};
use cmv::oracles::{kalman_bucy_correlated, meanfield_linear_mean, LinearModel};
use cmv::particle::{simulate_canonical, simulate_frozen_mu, FrozenNoiseMode, SimulationConfig};
use cmv::residuals::{
    cfpe_residual, ks_identity_check, lyapunov_decay, martingale_check, regularity_phi,
    rinf_sde_residual, roundtrip_check, terminal_rms, zakai_residual, zakai_residuals,
    EmpiricalLaw, ResidualReport,
};
use cmv::rng::{substream, StreamPurpose};
use rand::Rng;
use serde_json::{json, Map, Value};
use std::fmt::Write as _;
use std::path::Path;

const ORACLE_RESAMPLES: usize = 200;

const CHECK_NAMES: [&str; 9] = [
    "ks",
    "martingale",
    "zakai",
    "cfpe",
    "rinf",
    "lyapunov",
    "roundtrip",
    "regularity",
    "assumptions",
];

fn write_output(dir: &Path, name: &str, content: &str) -> CliResult<String> {
    std::fs::write(dir.join(name), content)?;
    Ok(sha256_hex(content.as_bytes()))
}

fn json_pretty(v: &Value) -> String {
    let mut text = serde_json::to_string_pretty(v).expect("json serializes");
    text.push('\n');
    text
}

/// First line of every CSV: the hashes that tie the file to its config.
fn stamp(cfg: &RunConfig) -> String {
    format!(
        "# config={} coefficients={}\n",
        cfg.config_hash(),
        cfg.coefficients_hash()
    )
}

pub fn simulate(cfg: &RunConfig, out: &Path) -> CliResult<bool> {
    let coeffs = cfg.coefficients()?;
    let sim = cfg.simulation()?;
    let basis = cfg.basis()?;

    let mut csv = stamp(cfg);
    csv.push_str("replica,t,y,mass,ess");
    for i in 0..cfg.dim {
        let _ = write!(csv, ",mean_{i}");
    }
    for k in 0..basis.len() {
        let _ = write!(csv, ",nu_phi_{k}");
    }
    csv.push('\n');

    let mut total_rows = 0usize;
    for r in 0..cfg.m_y {
        let traj = simulate_canonical(&sim, &coeffs, cfg.seed, r as u32)?;
        for (k, nu) in traj.recorded() {
            let _ = write!(
                csv,
                "{r},{},{},{},{}",
                traj.times()[*k],
                traj.y()[*k],
                traj.mass()[*k],
                traj.ess()[*k]
            );
            for m in traj.mean_at(*k) {
                let _ = write!(csv, ",{m}");
            }
            for phi in basis.iter() {
                let _ = write!(csv, ",{}", nu.pair(phi)?);
            }
            csv.push('\n');
            total_rows += 1;
        }
    }

    let csv_sha = write_output(out, "trajectory.csv", &csv)?;
    let manifest = json!({
        "command": "simulate",
        "config_hash": cfg.config_hash(),
        "coefficients_hash": cfg.coefficients_hash(),
        "config": serde_json::to_value(cfg)?,
        "replicas": cfg.m_y,
        "rows": total_rows,
        "files": { "trajectory.csv": csv_sha },
    });
    write_output(out, "manifest.json", &json_pretty(&manifest))?;
    println!(
        "simulate: {} replicas, {} rows -> {}",
        cfg.m_y,
        total_rows,
        out.display()
    );
    Ok(true)
}

pub fn verify(cfg: &RunConfig, out: &Path, flags: &[String]) -> CliResult<bool> {
    let selected: Vec<String> = if flags.is_empty() {
        cfg.checks.clone()
    } else {
        flags.to_vec()
    };
    if selected.is_empty() {
        return Err(CliError::Config(
            "no checks selected: pass --check or set `checks` in the config".into(),
        ));
    }
    let mut names: Vec<&str> = Vec::new();
    for name in &selected {
        if !CHECK_NAMES.contains(&name.as_str()) {
            return Err(CliError::Config(format!(
                "unknown check {name:?}; known checks: {}",
                CHECK_NAMES.join(", ")
            )));
        }
        if !names.contains(&name.as_str()) {
            names.push(name);
        }
    }

    let config_hash = cfg.config_hash();
    let coefficients_hash = cfg.coefficients_hash();
    refuse_mismatched_reports(out, &config_hash)?;

    let coeffs = cfg.coefficients()?;
    let mut files = Map::new();
    let mut checks = Vec::new();
    let mut failures: Vec<&str> = Vec::new();

    for name in names {
        let (pass, report) = run_check(name, cfg, &coeffs, out, &mut files)?;
        let doc = json!({
            "check": name,
            "config_hash": config_hash,
            "coefficients_hash": coefficients_hash,
            "pass": pass,
            "report": report,
        });
        let file_name = format!("verify_{name}.json");
        let sha = write_output(out, &file_name, &json_pretty(&doc))?;
        files.insert(file_name, Value::String(sha));
        checks.push(json!({ "name": name, "pass": pass }));
        if !pass {
            failures.push(name);
        }
        println!("check {name}: {}", if pass { "PASS" } else { "FAIL" });
    }

    let overall = failures.is_empty();
    let summary = json!({
        "command": "verify",
        "config_hash": config_hash,
        "coefficients_hash": coefficients_hash,
        "overall_pass": overall,
        "checks": checks,
        "failures": failures,
        "files": files,
    });
    write_output(out, "verify_summary.json", &json_pretty(&summary))?;
    if overall {
        println!("verify: PASS");
    } else {
        println!("verify: FAIL ({})", failures.join(", "));
    }
    Ok(overall)
}

/// A report written for one config must never be read next to a report for
/// another: scan the directory before writing anything.
fn refuse_mismatched_reports(out: &Path, config_hash: &str) -> CliResult<()> {
    let entries = match std::fs::read_dir(out) {
        Ok(e) => e,
        Err(_) => return Ok(()),
    };
    let mut names: Vec<String> = entries
        .flatten()
        .filter_map(|e| e.file_name().into_string().ok())
        .filter(|n| n.starts_with("verify_") && n.ends_with(".json"))
        .collect();
    names.sort();
    for name in names {
        let text = std::fs::read_to_string(out.join(&name))?;
        let value: Value = serde_json::from_str(&text).map_err(|e| {
            CliError::Config(format!(
                "existing report {name} is not valid JSON ({e}); clean the output directory"
            ))
        })?;
        match value.get("config_hash").and_then(Value::as_str) {
            Some(h) if h == config_hash => {}
            Some(h) => {
                return Err(CliError::Config(format!(
                    "output dir holds reports for config {h}, current config is {config_hash}; \
                     refusing to mix reports (use a fresh --out)"
                )))
            }
            None => {
                return Err(CliError::Config(format!(
                    "existing report {name} carries no config_hash; clean the output directory"
                )))
            }
        }
    }
    Ok(())
}

fn report_passes(r: &ResidualReport, tol: &Tolerances) -> bool {
    r.standardized_terminal.abs() <= tol.standardized
        || r.terminal_residual.abs() <= r.predicted_scale
}

/// Fraction of test functions whose standardized terminal residual is inside
/// the band, the overall verdict, and one JSON row per function.
fn residual_family_verdict(
    reports: &[ResidualReport],
    tol: &Tolerances,
) -> (bool, f64, Vec<Value>) {
    let mut rows = Vec::with_capacity(reports.len());
    let mut passing = 0usize;
    for r in reports {
        let ok = report_passes(r, tol);
        if ok {
            passing += 1;
        }
        rows.push(json!({
            "label": r.label,
            "terminal_residual": r.terminal_residual,
            "bootstrap_se": r.bootstrap_se,
            "standardized_terminal": r.standardized_terminal,
            "predicted_scale": r.predicted_scale,
            "pass": ok,
        }));
    }
    let fraction = passing as f64 / reports.len().max(1) as f64;
    (fraction >= tol.zakai_pass_fraction, fraction, rows)
}

fn residual_paths_csv(cfg: &RunConfig, reports: &[ResidualReport]) -> String {
    let mut csv = stamp(cfg);
    csv.push_str("label,t,residual\n");
    for r in reports {
        for (t, v) in r.times.iter().zip(&r.residual) {
            let _ = writeln!(csv, "{},{t},{v}", r.label);
        }
    }
    csv
}

fn run_check(
    name: &str,
    cfg: &RunConfig,
    coeffs: &cmv::coefficients::CoefficientSet,
    out: &Path,
    files: &mut Map<String, Value>,
) -> CliResult<(bool, Value)> {
    let tol = &cfg.tolerances;
    match name {
        "ks" => {
            let sim = cfg.simulation()?;
            let basis = cfg.basis()?;
            let traj = simulate_canonical(&sim, coeffs, cfg.seed, 0)?;
            let phis: Vec<&dyn TestFunction> =
                basis.iter().map(|b| b as &dyn TestFunction).collect();
            let rep = ks_identity_check(&traj, &phis)?;
            let pass = rep.max_rel <= tol.ks_rel;
            Ok((
                pass,
                json!({
                    "max_abs": rep.max_abs,
                    "max_rel": rep.max_rel,
                    "tolerance": tol.ks_rel,
                    "functions": basis.len(),
                    "recorded_measures": traj.recorded().len(),
                }),
            ))
        }
        "martingale" => {
            // Only initial and terminal snapshots are needed.
            let mut sim = cfg.simulation()?;
            let steps = sim.validate(coeffs)?;
            sim.record_stride = steps.max(1);
            let mut trajs = Vec::with_capacity(cfg.m_y);
            for r in 0..cfg.m_y {
                trajs.push(simulate_canonical(&sim, coeffs, cfg.seed, r as u32)?);
            }
            let rep = martingale_check(&trajs)?;
            let pass = rep.z_score.abs() <= tol.martingale_z;
            Ok((
                pass,
                json!({
                    "replicas": rep.replicas,
                    "mean": rep.mean,
                    "std_error": rep.std_error,
                    "z_score": rep.z_score,
                    "threshold": tol.martingale_z,
                }),
            ))
        }
        "zakai" => {
            let mut sim = cfg.simulation()?;
            sim.record_stride = 1;
            let basis = cfg.basis()?;
            let traj = simulate_canonical(&sim, coeffs, cfg.seed, 0)?;
            let phis: Vec<&dyn TestFunction> =
                basis.iter().map(|b| b as &dyn TestFunction).collect();
            let reports = zakai_residuals(&traj, coeffs, &phis)?;
            let (pass, fraction, rows) = residual_family_verdict(&reports, tol);
            let csv = residual_paths_csv(cfg, &reports);
            let sha = write_output(out, "verify_zakai_paths.csv", &csv)?;
            files.insert("verify_zakai_paths.csv".into(), Value::String(sha));
            Ok((
                pass,
                json!({
                    "functions": rows,
                    "pass_fraction": fraction,
                    "required_fraction": tol.zakai_pass_fraction,
                    "terminal_rms": terminal_rms(&reports),
                }),
            ))
        }
        "cfpe" => {
            let mut sim = cfg.simulation()?;
            sim.record_stride = 1;
            let basis = cfg.basis()?;
            let law = EmpiricalLaw::generate(&sim, coeffs, cfg.seed, 0, cfg.m_nu)?;
            let k = cfg.k_lift.min(basis.len()).max(1);
            let mut reports = Vec::with_capacity(k + 1);
            for i in 0..k {
                let mut weights = vec![0.0; k];
                weights[i] = 1.0;
                let f = CylindricalFunction::from_basis(Outer::Linear { weights }, &basis, k)?;
                let mut rep = cfpe_residual(&law, &f, coeffs)?;
                rep.label = format!("linear[{i}]");
                reports.push(rep);
            }
            let mut weights = vec![0.0; k];
            weights[0] = 2.0; // f(z) = z_0^2
            let f = CylindricalFunction::from_basis(Outer::Quadratic { weights }, &basis, k)?;
            let mut rep = cfpe_residual(&law, &f, coeffs)?;
            rep.label = "quadratic[0]".into();
            reports.push(rep);

            let all_pass = reports.iter().all(|r| report_passes(r, tol));
            let (_, fraction, rows) = residual_family_verdict(&reports, tol);
            let csv = residual_paths_csv(cfg, &reports);
            let sha = write_output(out, "verify_cfpe_paths.csv", &csv)?;
            files.insert("verify_cfpe_paths.csv".into(), Value::String(sha));
            Ok((
                all_pass,
                json!({
                    "members": law.m(),
                    "functions": rows,
                    "pass_fraction": fraction,
                }),
            ))
        }
        "rinf" => {
            let mut sim = cfg.simulation()?;
            sim.record_stride = 1;
            let basis = cfg.basis()?;
            let traj = simulate_canonical(&sim, coeffs, cfg.seed, 0)?;
            let reports = rinf_sde_residual(&traj, coeffs, &basis, cfg.k_lift)?;
            let (pass, fraction, rows) = residual_family_verdict(&reports, tol);

            // The projected diffusion matrix must be exactly rank one.
            let (k_term, nu) = traj
                .recorded()
                .last()
                .expect("trajectory records the terminal step");
            let y = traj.y_prefix(*k_term)?;
            let lift =
                lifted_coefficients(traj.times()[*k_term], y, nu, coeffs, &basis, cfg.k_lift)?;
            let alpha_rank_one =
                (0..cfg.k_lift).all(|i| lift.alpha(i, i) == lift.gamma[i] * lift.gamma[i]);

            let csv = residual_paths_csv(cfg, &reports);
            let sha = write_output(out, "verify_rinf_paths.csv", &csv)?;
            files.insert("verify_rinf_paths.csv".into(), Value::String(sha));
            Ok((
                pass && alpha_rank_one,
                json!({
                    "coordinates": rows,
                    "pass_fraction": fraction,
                    "required_fraction": tol.zakai_pass_fraction,
                    "alpha_rank_one": alpha_rank_one,
                }),
            ))
        }
        "lyapunov" => {
            let sim = cfg.simulation()?;
            let mut trajs = Vec::with_capacity(cfg.m_y);
            for r in 0..cfg.m_y {
                trajs.push(simulate_canonical(&sim, coeffs, cfg.seed, r as u32)?);
            }
            let k_const = if cfg.k_const > 0.0 {
                cfg.k_const
            } else {
                coeffs.bounds().c_lip
            };
            let rep = lyapunov_decay(&trajs, cfg.delta, coeffs, k_const)?;
            let pass = rep.max_uptick <= tol.lyapunov_uptick;

            let mut csv = stamp(cfg);
            csv.push_str("t,damped_norm2\n");
            for (t, v) in rep.times.iter().zip(&rep.path) {
                let _ = writeln!(csv, "{t},{v}");
            }
            let sha = write_output(out, "verify_lyapunov_path.csv", &csv)?;
            files.insert("verify_lyapunov_path.csv".into(), Value::String(sha));
            Ok((
                pass,
                json!({
                    "replicas": cfg.m_y,
                    "alpha": rep.alpha,
                    "k_const": k_const,
                    "delta": cfg.delta,
                    "max_uptick": rep.max_uptick,
                    "tolerance": tol.lyapunov_uptick,
                }),
            ))
        }
        "roundtrip" => {
            let sim = cfg.simulation()?;
            let basis = cfg.basis()?;
            let n_list = cfg
                .roundtrip_n
                .clone()
                .unwrap_or_else(|| vec![cfg.n_particles / 2, cfg.n_particles]);
            let table = roundtrip_check(
                &sim,
                coeffs,
                &n_list,
                cfg.m_y,
                cfg.seed,
                &basis,
                cfg.k_lift,
                cfg.delta,
                FrozenNoiseMode::Fresh,
            )?;
            let pass = table.nonincreasing;

            let mut csv = stamp(cfg);
            csv.push_str("n_particles,median_metric,median_mollified\n");
            for row in &table.rows {
                let _ = writeln!(
                    csv,
                    "{},{},{}",
                    row.n_particles, row.median_metric, row.median_mollified
                );
            }
            let sha = write_output(out, "verify_roundtrip.csv", &csv)?;
            files.insert("verify_roundtrip.csv".into(), Value::String(sha));
            Ok((pass, serde_json::to_value(&table)?))
        }
        "regularity" => {
            let mut sim = cfg.simulation()?;
            sim.record_stride = 1;
            let law = EmpiricalLaw::generate(&sim, coeffs, cfg.seed, 0, cfg.m_nu)?;
            let est = regularity_phi(&law, coeffs, cfg.regularity_p)?;
            let pass = est.finite;
            Ok((
                pass,
                json!({
                    "value": est.value,
                    "finite": est.finite,
                    "p": cfg.regularity_p,
                    "members": law.m(),
                }),
            ))
        }
        "assumptions" => {
            let lip = check_lipschitz(coeffs, tol.probes, cfg.seed, tol.lipschitz_margin)?;
            let nondeg = check_nondegeneracy(coeffs, tol.probes, cfg.seed)?;
            let pass = lip.pass && nondeg.pass;
            Ok((
                pass,
                json!({
                    "lipschitz": {
                        "declared": lip.declared,
                        "max_ratio": lip.max_ratio,
                        "approximate_w1": lip.approximate_w1,
                        "worst_field": lip.worst.as_ref().map(|w| w.which),
                        "pass": lip.pass,
                    },
                    "nondegeneracy": {
                        "declared_sigma0": nondeg.declared_sigma0,
                        "min_eig": nondeg.min_eig,
                        "pass": nondeg.pass,
                    },
                    "probes": tol.probes,
                }),
            ))
        }
        other => Err(CliError::Config(format!("unknown check {other:?}"))),
    }
}

fn linear_model_for(cfg: &RunConfig) -> CliResult<LinearModel> {
    let (a, a_bar, sigma, rho, c) = match cfg.family {
        FamilyConfig::LinearGaussian { a, sigma, rho, c } => (a, 0.0, sigma, rho, c),
        FamilyConfig::MeanFieldLinear {
            a,
            a_bar,
            sigma,
            rho,
            c,
        } => (a, a_bar, sigma, rho, c),
        _ => {
            return Err(CliError::Config(
                "oracle needs the linear_gaussian or mean_field_linear family".into(),
            ))
        }
    };
    let (m0, p0) = match &cfg.initial {
        InitialConfig::Point { position } => (position.first().copied().unwrap_or(0.0), 0.0),
        InitialConfig::Gaussian { mean, std } => (mean.first().copied().unwrap_or(0.0), std * std),
    };
    Ok(LinearModel {
        a,
        a_bar,
        sigma,
        rho,
        c,
        m0,
        p0,
    })
}

fn standardize(err: f64, se: f64) -> f64 {
    if se > 0.0 {
        err / se
    } else if err == 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

/// Resample atoms with replacement and take the spread of the reweighted
/// means. Captures both weight and position variability of the estimate.
fn bootstrap_mean_se(nu: &WeightedAtomMeasure, rng: &mut impl Rng) -> f64 {
    let n = nu.len();
    if n < 2 {
        return 0.0;
    }
    let mut means = Vec::with_capacity(ORACLE_RESAMPLES);
    for _ in 0..ORACLE_RESAMPLES {
        let mut sw = 0.0;
        let mut swx = 0.0;
        for _ in 0..n {
            let j = rng.gen_range(0..n);
            let w = nu.weight(j);
            sw += w;
            swx += w * nu.position(j)[0];
        }
        means.push(if sw > 0.0 { swx / sw } else { 0.0 });
    }
    let m = means.iter().sum::<f64>() / means.len() as f64;
    let var = means.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (means.len() - 1) as f64;
    var.sqrt()
}

pub fn oracle(cfg: &RunConfig, out: &Path) -> CliResult<bool> {
    if cfg.dim != 1 {
        return Err(CliError::Config(
            "oracle comparison is scalar: set dim = 1".into(),
        ));
    }
    let model = linear_model_for(cfg)?;
    let coeffs = cfg.coefficients()?;
    let sim = cfg.simulation()?;
    let traj = simulate_canonical(&sim, &coeffs, cfg.seed, 0)?;
    let kalman = match cfg.family {
        FamilyConfig::MeanFieldLinear { .. } => {
            meanfield_linear_mean(&model, traj.times(), traj.y())?
        }
        _ => kalman_bucy_correlated(&model, traj.times(), traj.y())?,
    };

    let mut rng = substream(cfg.seed, 0, StreamPurpose::Bootstrap, 2);
    let mut csv = stamp(cfg);
    csv.push_str("t,particle_mean,kalman_mean,kalman_var,error,bootstrap_se,z\n");
    let mut max_abs_z = 0.0_f64;
    let mut sum_abs_err = 0.0;
    let mut sum_se = 0.0;
    let mut sum_err2 = 0.0;
    let mut sum_ref2 = 0.0;
    let mut rows = 0usize;

    for (k, nu) in traj.recorded() {
        let t = traj.times()[*k];
        let particle_mean = traj.mean_at(*k)[0];
        let state = &kalman[*k];
        let err = particle_mean - state.mean;
        let se = bootstrap_mean_se(nu, &mut rng);
        let z = standardize(err, se);
        let _ = writeln!(
            csv,
            "{t},{particle_mean},{},{},{err},{se},{z}",
            state.mean, state.var
        );
        max_abs_z = max_abs_z.max(z.abs());
        sum_abs_err += err.abs();
        sum_se += se;
        sum_err2 += err * err;
        sum_ref2 += state.mean * state.mean;
        rows += 1;
    }

    let time_avg_abs_err = sum_abs_err / rows as f64;
    let time_avg_se = sum_se / rows as f64;
    let l2_rel_err = if sum_ref2 > 0.0 {
        (sum_err2 / sum_ref2).sqrt()
    } else if sum_err2 == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    let pass = time_avg_abs_err <= cfg.tolerances.martingale_z * time_avg_se
        && l2_rel_err <= cfg.tolerances.oracle_l2_rel;

    let csv_sha = write_output(out, "oracle_table.csv", &csv)?;
    let summary = json!({
        "command": "oracle",
        "config_hash": cfg.config_hash(),
        "coefficients_hash": cfg.coefficients_hash(),
        "model": serde_json::to_value(model)?,
        "recorded_points": rows,
        "max_abs_z": max_abs_z,
        "time_avg_abs_err": time_avg_abs_err,
        "time_avg_se": time_avg_se,
        "l2_rel_err": l2_rel_err,
        "l2_rel_tolerance": cfg.tolerances.oracle_l2_rel,
        "pass": pass,
        "files": { "oracle_table.csv": csv_sha },
    });
    write_output(out, "oracle_summary.json", &json_pretty(&summary))?;
    println!(
        "oracle: max |z| {max_abs_z:.3}, relative L2 error {l2_rel_err:.4} -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    Ok(pass)
}

fn parse_usize_values(raw: &[String]) -> CliResult<Vec<usize>> {
    let mut values = Vec::with_capacity(raw.len());
    for item in raw {
        let v: usize = item
            .trim()
            .parse()
            .map_err(|_| CliError::Config(format!("axis value {item:?} is not an integer")))?;
        values.push(v);
    }
    if values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CliError::Config(
            "axis values must be strictly increasing".into(),
        ));
    }
    Ok(values)
}

fn parse_f64_values(raw: &[String]) -> CliResult<Vec<f64>> {
    let mut values = Vec::with_capacity(raw.len());
    for item in raw {
        let v: f64 = item
            .trim()
            .parse()
            .map_err(|_| CliError::Config(format!("axis value {item:?} is not a number")))?;
        if !(v > 0.0) || !v.is_finite() {
            return Err(CliError::Config(format!(
                "axis value {item:?} must be finite positive"
            )));
        }
        values.push(v);
    }
    if values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CliError::Config(
            "axis values must be strictly increasing".into(),
        ));
    }
    Ok(values)
}

fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|v| v.max(f64::MIN_POSITIVE).ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.max(f64::MIN_POSITIVE).ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|v| (v - mx) * (v - mx)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    if sxx > 0.0 {
        sxy / sxx
    } else {
        0.0
    }
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite medians"));
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Terminal equation error for the first basis function, root-mean-squared
/// over the observation replicas.
fn zakai_rms_for(
    sim: &SimulationConfig,
    coeffs: &cmv::coefficients::CoefficientSet,
    phi: &dyn TestFunction,
    seed: u64,
    m_y: usize,
) -> CliResult<f64> {
    let mut sum2 = 0.0;
    for r in 0..m_y {
        let traj = simulate_canonical(sim, coeffs, seed, r as u32)?;
        let rep = zakai_residual(&traj, coeffs, phi)?;
        sum2 += rep.terminal_residual * rep.terminal_residual;
    }
    Ok((sum2 / m_y as f64).sqrt())
}

pub fn sweep(
    cfg: &RunConfig,
    out: &Path,
    axis: SweepAxis,
    raw_values: &[String],
) -> CliResult<bool> {
    if raw_values.len() < 2 {
        return Err(CliError::Config("need at least two axis values".into()));
    }
    let coeffs = cfg.coefficients()?;
    let basis = cfg.basis()?;
    let mut sim = cfg.simulation()?;
    sim.record_stride = 1;

    let (axis_name, axis_values, errors, band_checked): (&str, Vec<f64>, Vec<f64>, bool) =
        match axis {
            SweepAxis::N => {
                let ns = parse_usize_values(raw_values)?;
                let phi = basis.get(0)?;
                let mut errors = Vec::with_capacity(ns.len());
                for &n in &ns {
                    let arm = SimulationConfig {
                        n_particles: n,
                        ..sim.clone()
                    };
                    errors.push(zakai_rms_for(&arm, &coeffs, phi, cfg.seed, cfg.m_y)?);
                }
                ("n", ns.iter().map(|&v| v as f64).collect(), errors, true)
            }
            SweepAxis::Dt => {
                let dts = parse_f64_values(raw_values)?;
                let phi = basis.get(0)?;
                let mut errors = Vec::with_capacity(dts.len());
                for &dt in &dts {
                    let arm = SimulationConfig { dt, ..sim.clone() };
                    errors.push(zakai_rms_for(&arm, &coeffs, phi, cfg.seed, cfg.m_y)?);
                }
                ("dt", dts, errors, false)
            }
            SweepAxis::K => {
                let ks = parse_usize_values(raw_values)?;
                if ks.iter().any(|&k| k == 0 || k > basis.len()) {
                    return Err(CliError::Config(format!(
                        "truncation depths must be in 1..={}",
                        basis.len()
                    )));
                }
                // One live/rerun pair per replica; only the metric depth varies.
                let mut pairs: Vec<(WeightedAtomMeasure, WeightedAtomMeasure)> =
                    Vec::with_capacity(cfg.m_y);
                for r in 0..cfg.m_y {
                    let live = simulate_canonical(&sim, &coeffs, cfg.seed, r as u32)?;
                    let mut mu_times = Vec::with_capacity(live.recorded().len());
                    let mut mu_measures = Vec::with_capacity(live.recorded().len());
                    for (k, nu) in live.recorded() {
                        mu_times.push(live.times()[*k]);
                        mu_measures.push(nu.normalize_unit()?);
                    }
                    let path = FrozenMuPath::new(mu_times, mu_measures)?;
                    let rerun = simulate_frozen_mu(
                        &sim,
                        &coeffs,
                        &path,
                        live.times(),
                        live.y(),
                        cfg.seed,
                        r as u32,
                        FrozenNoiseMode::Fresh,
                    )?;
                    let live_nu = live.recorded().last().expect("terminal recorded").1.clone();
                    let rerun_nu = rerun
                        .recorded()
                        .last()
                        .expect("terminal recorded")
                        .1
                        .clone();
                    pairs.push((live_nu, rerun_nu));
                }
                let mut errors = Vec::with_capacity(ks.len());
                for &k in &ks {
                    let mut gaps = Vec::with_capacity(pairs.len());
                    for (a, b) in &pairs {
                        gaps.push(metric_d(a, b, &basis, k)?.value);
                    }
                    errors.push(median(&mut gaps));
                }
                ("k", ks.iter().map(|&v| v as f64).collect(), errors, false)
            }
        };

    let slope = loglog_slope(&axis_values, &errors);
    let pass = if band_checked {
        slope >= cfg.tolerances.slope_lo && slope <= cfg.tolerances.slope_hi
    } else {
        true
    };

    let mut csv = stamp(cfg);
    csv.push_str("axis,value,error\n");
    for (v, e) in axis_values.iter().zip(&errors) {
        let _ = writeln!(csv, "{axis_name},{v},{e}");
    }
    let csv_sha = write_output(out, "sweep.csv", &csv)?;
    let summary = json!({
        "command": "sweep",
        "config_hash": cfg.config_hash(),
        "coefficients_hash": cfg.coefficients_hash(),
        "axis": axis_name,
        "values": axis_values,
        "errors": errors,
        "slope": slope,
        "band": if band_checked {
            Some(json!({ "lo": cfg.tolerances.slope_lo, "hi": cfg.tolerances.slope_hi }))
        } else {
            None
        },
        "pass": pass,
        "replicas": cfg.m_y,
        "files": { "sweep.csv": csv_sha },
    });
    write_output(out, "sweep_summary.json", &json_pretty(&summary))?;
    println!(
        "sweep {axis_name}: slope {slope:.3} -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    Ok(pass)
}
