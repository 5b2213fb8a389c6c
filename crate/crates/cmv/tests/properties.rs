//! Randomized structural properties of the measure layer and the built-in
//! coefficient families.

use cmv::basis::{TestFunction, TestFunctionBasis};
use cmv::coefficients::{CoefficientSet, YPrefix};
use cmv::measures::{
    d_infinity, metric_d, mollified_inner, mollified_l2_distance, project_coordinates,
    wasserstein1, ProbabilityAtomMeasure, WeightedAtomMeasure,
};
use cmv::residuals::ks_identity_measure;
use cmv::rng::{substream, StreamPurpose};
use proptest::prelude::*;
use rand::Rng;

fn atoms_1d(max_atoms: usize) -> impl Strategy<Value = WeightedAtomMeasure> {
    prop::collection::vec((-3.0..3.0f64, 0.05..2.0f64), 1..=max_atoms).prop_map(|pairs| {
        let (positions, weights): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        WeightedAtomMeasure::from_flat(1, positions, weights).expect("valid atoms")
    })
}

fn prob_1d(max_atoms: usize) -> impl Strategy<Value = ProbabilityAtomMeasure> {
    atoms_1d(max_atoms).prop_map(|nu| nu.normalize_unit().expect("positive mass"))
}

fn scaled_sum(a: &WeightedAtomMeasure, s: f64, b: &WeightedAtomMeasure) -> WeightedAtomMeasure {
    let mut positions = a.positions_flat().to_vec();
    positions.extend_from_slice(b.positions_flat());
    let mut weights: Vec<f64> = a.weights().iter().map(|w| s * w).collect();
    weights.extend_from_slice(b.weights());
    WeightedAtomMeasure::from_flat(a.dim(), positions, weights).expect("valid combination")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn w1_identity_and_symmetry(a in prob_1d(6), b in prob_1d(6)) {
        let this = wasserstein1(&a, &a).unwrap();
        prop_assert!(this.exact);
        prop_assert!(this.value.abs() <= 1e-12);

        let ab = wasserstein1(&a, &b).unwrap().value;
        let ba = wasserstein1(&b, &a).unwrap().value;
        prop_assert!(ab >= 0.0);
        prop_assert!((ab - ba).abs() <= 1e-12);
    }

    #[test]
    fn w1_triangle_inequality(a in prob_1d(6), b in prob_1d(6), c in prob_1d(6)) {
        let ab = wasserstein1(&a, &b).unwrap().value;
        let bc = wasserstein1(&b, &c).unwrap().value;
        let ac = wasserstein1(&a, &c).unwrap().value;
        prop_assert!(ac <= ab + bc + 1e-10);
    }

    #[test]
    fn projection_is_linear(nu1 in atoms_1d(5), nu2 in atoms_1d(5), s in 0.1..3.0f64) {
        let basis = TestFunctionBasis::dyadic(1, 3.0, 8).unwrap();
        let combo = scaled_sum(&nu1, s, &nu2);
        let z = project_coordinates(&combo, &basis, 8).unwrap();
        let z1 = project_coordinates(&nu1, &basis, 8).unwrap();
        let z2 = project_coordinates(&nu2, &basis, 8).unwrap();
        for k in 0..8 {
            let expected = s * z1[k] + z2[k];
            let scale = 1.0f64.max(expected.abs());
            prop_assert!((z[k] - expected).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn metric_bounds_every_coordinate_gap(nu1 in atoms_1d(5), nu2 in atoms_1d(5)) {
        let basis = TestFunctionBasis::dyadic(1, 3.0, 8).unwrap();
        let k_trunc = 6;
        let m = metric_d(&nu1, &nu2, &basis, k_trunc).unwrap();
        let z1 = project_coordinates(&nu1, &basis, k_trunc).unwrap();
        let z2 = project_coordinates(&nu2, &basis, k_trunc).unwrap();
        // the metric is the sequence formula on the projections, and each
        // coordinate gap is recoverable from it: a zero metric forces equal
        // truncated projections
        let direct = d_infinity(&z1, &z2, k_trunc).unwrap();
        prop_assert!((m.value - direct).abs() <= 1e-12);
        for (k, (a, b)) in z1.iter().zip(&z2).enumerate() {
            let gap = (a - b).abs().min(1.0);
            prop_assert!(gap <= 2f64.powi(k as i32 + 1) * m.value + 1e-12);
        }
    }

    #[test]
    fn mollified_inner_is_a_symmetric_bilinear_form(
        nu1 in atoms_1d(5),
        nu2 in atoms_1d(5),
        nu3 in atoms_1d(5),
        s in 0.1..2.0f64,
    ) {
        let delta = 0.3;
        let sym_ab = mollified_inner(&nu1, &nu2, delta).unwrap();
        let sym_ba = mollified_inner(&nu2, &nu1, delta).unwrap();
        prop_assert!((sym_ab - sym_ba).abs() <= 1e-12 * 1.0f64.max(sym_ab.abs()));

        let combo = scaled_sum(&nu1, s, &nu2);
        let lhs = mollified_inner(&combo, &nu3, delta).unwrap();
        let rhs = s * mollified_inner(&nu1, &nu3, delta).unwrap()
            + mollified_inner(&nu2, &nu3, delta).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * 1.0f64.max(rhs.abs()));

        prop_assert!(mollified_inner(&nu1, &nu1, delta).unwrap() >= 0.0);
        prop_assert!(mollified_l2_distance(&nu1, &nu1, delta).unwrap() == 0.0);
    }

    #[test]
    fn normalization_identity_on_random_measures(nu in atoms_1d(6)) {
        let basis = TestFunctionBasis::dyadic(1, 3.0, 8).unwrap();
        let phis: Vec<&dyn TestFunction> = basis.iter().map(|b| b as &dyn TestFunction).collect();
        let (_, rel) = ks_identity_measure(&nu, &phis).unwrap();
        prop_assert!(rel <= 1e-12);
    }
}

#[test]
fn bounded_family_respects_declared_sup_norms() {
    let coeffs = CoefficientSet::bounded_smooth(2, 0.8, 0.5, 0.9, 0.3, 0.7).unwrap();
    let b = *coeffs.bounds();
    let mut rng = substream(90210, 0, StreamPurpose::Probe, 9);
    let times = [0.7];
    for _ in 0..100_000 {
        let x = [rng.gen_range(-40.0..40.0), rng.gen_range(-40.0..40.0)];
        let values = [rng.gen_range(-5.0..5.0)];
        let y = YPrefix::new(&times, &values).unwrap();
        let mu = ProbabilityAtomMeasure::dirac(vec![
            rng.gen_range(-40.0..40.0),
            rng.gen_range(-40.0..40.0),
        ])
        .unwrap();
        let v = coeffs.eval(0.5, &x, y, Some(&mu)).unwrap();

        let norm_b = v.b.iter().map(|c| c * c).sum::<f64>().sqrt();
        assert!(
            norm_b <= b.sup_b + 1e-12,
            "drift {norm_b} above {}",
            b.sup_b
        );
        for entry in &v.sigma {
            assert!(entry.abs() <= b.sup_sigma + 1e-12);
        }
        let norm_rho = v.rho.iter().map(|c| c * c).sum::<f64>().sqrt();
        assert!(norm_rho <= b.sup_rho + 1e-12);
        assert!(v.h.abs() <= b.sup_h + 1e-12);
    }
}
