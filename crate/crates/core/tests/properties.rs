mod common;

use std::f64::consts::TAU;

use common::*;
use incomparable::linalg::{
    eigenvalues_hermitian_jacobi, eigenvalues_hermitian_trig, tensor_product,
};
use incomparable::majorization::{classify_pair, incomparable_strict3, majorizes, PairLabel};
use incomparable::qubit::{apply_antiunitary, IppParams, UnitaryParams};
use incomparable::scenarios::{
    build_chi_initial, build_pi_initial, chi_final, ipp_spectrum, pi_final,
};
use incomparable::state::{
    entropy_of_entanglement, reduced_density_a, schmidt_vector, BipartiteState,
};
use incomparable::sweep::{sweep_complex, sweep_real, SweepSummary};
use incomparable::{ComplexMatrix, Ket, SchmidtVector};
use proptest::prelude::*;
use rand::Rng;

fn angle() -> impl Strategy<Value = f64> {
    0.0..TAU
}

fn strictly_decreasing(v: &SchmidtVector) -> bool {
    let c = v.coefficients();
    c[0] > c[1] + 1e-10 && c[1] > c[2] + 1e-10
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn trig_matches_jacobi_on_hermitian(seed in any::<u64>()) {
        let m = random_hermitian(&mut rng(seed), 3);
        let t = eigenvalues_hermitian_trig(&m).unwrap();
        let j = eigenvalues_hermitian_jacobi(&m).unwrap();
        prop_assert!(max_diff(&t, &j) < 1e-10, "{t:?} {j:?}");
    }

    #[test]
    fn density_spectrum_is_a_distribution(seed in any::<u64>(), da in 1usize..5, db in 1usize..5) {
        let ket = random_ket(&mut rng(seed), da * db);
        let s = BipartiteState::from_ket(da, db, ket).unwrap();
        let rho = reduced_density_a(&s);
        prop_assert!((rho.trace().re - 1.0).abs() < 1e-12);
        prop_assert!(rho.trace().im.abs() < 1e-12);
        let e = eigenvalues_hermitian_jacobi(&rho).unwrap();
        prop_assert!(e.iter().all(|x| (-1e-12..=1.0 + 1e-12).contains(x)));
        prop_assert!((e.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!(e.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn tensor_product_of_unit_kets_is_unit(seed in any::<u64>(), d1 in 1usize..5, d2 in 1usize..5) {
        let mut r = rng(seed);
        let k = tensor_product(&random_ket(&mut r, d1), &random_ket(&mut r, d2));
        prop_assert_eq!(k.dim(), d1 * d2);
        prop_assert!((k.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn schmidt_vector_invariant_under_local_unitary(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = BipartiteState::from_ket(3, 4, random_ket(&mut r, 12)).unwrap();
        let u = random_unitary(&mut r, 4);
        let before = schmidt_vector(&s).unwrap();
        let after = schmidt_vector(&s.apply_local_b(&u).unwrap()).unwrap();
        prop_assert!(before.max_abs_diff(&after) < 1e-10);
    }

    #[test]
    fn global_phase_does_not_change_spectrum(seed in any::<u64>(), t in angle()) {
        let mut r = rng(seed);
        let s = BipartiteState::from_ket(3, 4, random_ket(&mut r, 12)).unwrap();
        let phased = s.phased(incomparable::Complex64::from_polar(1.0, t)).unwrap();
        let a = schmidt_vector(&s).unwrap();
        prop_assert!(a.max_abs_diff(&schmidt_vector(&phased).unwrap()) < 1e-12);
    }

    #[test]
    fn ipp_reduced_state_is_a_density_matrix(a in angle(), d in angle()) {
        let rho = reduced_density_a(&pi_final(&IppParams::from_angles(a, d)).unwrap());
        prop_assert!(rho.is_hermitian(1e-12));
        prop_assert!((rho.trace().re - 1.0).abs() < 1e-12);
        let e = eigenvalues_hermitian_jacobi(&rho).unwrap();
        prop_assert!(e[2] >= -1e-12);
    }

    #[test]
    fn closed_form_spectrum_is_a_distribution(a in angle(), d in angle()) {
        let s = ipp_spectrum(&IppParams::from_angles(a, d)).unwrap();
        prop_assert!((s.eigenvalues.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!(s.eigenvalues[2] >= -1e-12);
        prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn majorization_is_reflexive(seed in any::<u64>(), d in 2usize..6) {
        let v = random_schmidt(&mut rng(seed), d);
        prop_assert!(majorizes(&v, &v));
        prop_assert_eq!(classify_pair(&v, &v).label, PairLabel::Equal);
    }

    #[test]
    fn majorization_is_transitive(seed in any::<u64>(), d in 2usize..5) {
        let mut r = rng(seed);
        let (x, y, z) = (random_schmidt(&mut r, d), random_schmidt(&mut r, d), random_schmidt(&mut r, d));
        if majorizes(&y, &x) && majorizes(&z, &y) {
            prop_assert!(majorizes(&z, &x));
        }
    }

    #[test]
    fn classification_mirrors_under_swap(seed in any::<u64>(), d in 2usize..6) {
        let mut r = rng(seed);
        let (a, b) = (random_schmidt(&mut r, d), random_schmidt(&mut r, d));
        prop_assert_eq!(classify_pair(&a, &b).label.mirrored(), classify_pair(&b, &a).label);
    }

    #[test]
    fn entropy_is_schur_concave(seed in any::<u64>(), d in 2usize..6) {
        let mut r = rng(seed);
        let (a, b) = (random_schmidt(&mut r, d), random_schmidt(&mut r, d));
        if majorizes(&b, &a) {
            prop_assert!(entropy_of_entanglement(&a) >= entropy_of_entanglement(&b) - 1e-9);
        }
        let e = entropy_of_entanglement(&a);
        prop_assert!((0.0..=(d as f64).log2() + 1e-12).contains(&e));
    }

    #[test]
    fn antiunitary_is_antilinear(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_unitary_params(&mut r);
        let k = random_ket(&mut r, 2);
        let phase = incomparable::Complex64::from_polar(1.0, r.random_range(0.0..TAU));
        let lhs = apply_antiunitary(&p, &k.phased(phase)).unwrap();
        let rhs = apply_antiunitary(&p, &k).unwrap().phased(phase.conj());
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-14);
    }

    #[test]
    fn antiunitary_preserves_overlap_moduli(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_unitary_params(&mut r);
        let (a, b) = (random_ket(&mut r, 2), random_ket(&mut r, 2));
        let before = a.inner(&b);
        let after = apply_antiunitary(&p, &a).unwrap().inner(&apply_antiunitary(&p, &b).unwrap());
        prop_assert!((before.norm() - after.norm()).abs() < 1e-14);
        // anti-unitarity: the overlap itself is conjugated
        prop_assert!((after - before.conj()).norm() < 1e-14);
    }

    #[test]
    fn antiunitary_final_spectrum_is_fixed(t in angle(), a in angle(), b in angle()) {
        let p = UnitaryParams::new(t, a, b).unwrap();
        let v = schmidt_vector(&chi_final(&p).unwrap()).unwrap();
        let w = schmidt_vector(&build_pi_initial()).unwrap();
        prop_assert!(v.max_abs_diff(&w) < 1e-10);
        let initial = schmidt_vector(&build_chi_initial()).unwrap();
        prop_assert_eq!(classify_pair(&initial, &v).label, PairLabel::Incomparable);
    }

    #[test]
    fn dagger_round_trip(seed in any::<u64>(), n in 1usize..5, m in 1usize..5) {
        let mut r = rng(seed);
        let data = (0..n * m).map(|_| random_complex(&mut r)).collect();
        let a = ComplexMatrix::new(n, m, data).unwrap();
        prop_assert_eq!(a.dagger().dagger(), a.clone());
        prop_assert_eq!(a.dagger().rows(), m);
    }

    #[test]
    fn normalized_ket_round_trip(seed in any::<u64>(), d in 1usize..6) {
        let k = random_ket(&mut rng(seed), d);
        let again = Ket::new(k.amplitudes().to_vec()).unwrap();
        prop_assert_eq!(again, k);
    }
}

#[test]
fn strict3_agrees_with_classifier() {
    let mut r = rng(101);
    let mut checked = 0;
    for _ in 0..10_000 {
        let (a, b) = (random_schmidt(&mut r, 3), random_schmidt(&mut r, 3));
        if !(strictly_decreasing(&a) && strictly_decreasing(&b)) {
            continue;
        }
        checked += 1;
        let fast = incomparable_strict3(&a, &b).unwrap();
        assert_eq!(
            fast,
            classify_pair(&a, &b).label == PairLabel::Incomparable,
            "{a:?} {b:?}"
        );
    }
    assert!(checked > 9_000);
}

#[test]
fn qubit_pairs_never_incomparable() {
    let mut r = rng(102);
    for _ in 0..10_000 {
        let (a, b) = (random_schmidt(&mut r, 2), random_schmidt(&mut r, 2));
        assert_ne!(classify_pair(&a, &b).label, PairLabel::Incomparable);
    }
}

#[test]
fn forward_conversion_never_raises_entropy() {
    let mut r = rng(103);
    for d in 2..6 {
        for _ in 0..2_000 {
            let (a, b) = (random_schmidt(&mut r, d), random_schmidt(&mut r, d));
            if classify_pair(&a, &b).label == PairLabel::ConvertibleForward {
                assert!(entropy_of_entanglement(&b) <= entropy_of_entanglement(&a) + 1e-9);
            }
        }
    }
}

#[test]
fn sweeps_are_deterministic() {
    assert_eq!(sweep_real(90).unwrap(), sweep_real(90).unwrap());
    assert_eq!(sweep_complex(30, 7).unwrap(), sweep_complex(30, 7).unwrap());
}

#[test]
fn summary_fractions_sum_to_one() {
    for n in [2, 7, 90, 361] {
        let s = SweepSummary::from_records(&sweep_real(n).unwrap());
        let total = s.incomparable_fraction()
            + s.increase_fraction()
            + s.equal_fraction()
            + s.convertible_fraction();
        assert!((total - 1.0).abs() < 1e-12);
    }
}
