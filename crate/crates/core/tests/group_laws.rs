use hopf_core::group::{
    act_numeric, point_residual, GroupElt, GroupEltRecord, HomogPoint, HomogPoly, Mat2,
};
use hopf_core::scalars::{EigenBasis, Scalar, Q};
use hopf_core::verify::{check_action, check_group_axioms};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn elements(seed: u64, n: usize, k: usize) -> Vec<GroupElt> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = EigenBasis::free();
    (0..k)
        .map(|_| GroupElt::random(&mut rng, &b, n, 5))
        .collect()
}

fn point(rng: &mut ChaCha8Rng) -> HomogPoint {
    let mut c = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    HomogPoint {
        v: [c(), c()],
        w: c(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_group_laws(seed in any::<u64>(), n in 1usize..=3) {
        let v = elements(seed, n, 3);
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let id = GroupElt::identity(x.basis(), n);
        prop_assert_eq!(x.compose(y).unwrap().compose(z).unwrap(), x.compose(&y.compose(z).unwrap()).unwrap());
        prop_assert_eq!(&id.compose(x).unwrap(), x);
        prop_assert_eq!(&x.compose(&id).unwrap(), x);
        prop_assert!(x.compose(&x.inverse()).unwrap().is_identity());
        prop_assert_eq!(x.inverse().inverse(), x.clone());
    }

    #[test]
    fn action_is_compatible_with_the_law(seed in any::<u64>(), n in 1usize..=3) {
        let v = elements(seed, n, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let pt = point(&mut rng);
        let lhs = v[0].compose(&v[1]).unwrap().act_homog(&pt);
        let rhs = v[0].act_homog(&v[1].act_homog(&pt));
        prop_assert!(point_residual(&lhs, &rhs, n as u32) < 1e-10);
        let back = v[0].inverse().act_homog(&v[0].act_homog(&pt));
        prop_assert!(point_residual(&back, &pt, n as u32) < 1e-10);
    }

    #[test]
    fn roots_of_unity_act_trivially(seed in any::<u64>(), n in 1usize..=3, k in 0usize..3) {
        let x = &elements(seed, n, 1)[0];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pt = point(&mut rng);
        let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU * (k % n) as f64 / n as f64);
        let g = x.g().numeric().map(|row| row.map(|e| e * zeta));
        let moved = act_numeric(&g, &x.p().numeric_coeffs(), &pt);
        prop_assert!(point_residual(&x.act_homog(&pt), &moved, n as u32) < 1e-10);
    }

    #[test]
    fn records_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let x = &elements(seed, n, 1)[0];
        let json = serde_json::to_string(&x.to_record()).unwrap();
        let rec: GroupEltRecord = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&GroupElt::from_record(x.basis(), &rec).unwrap(), x);
    }
}

#[test]
fn exact_root_of_unity_rescaling_is_the_same_element() {
    // λ₁ formal with λ₁³ = 1 gives an exact cube root of unity.
    let w = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
    let b = EigenBasis::formal([w, Complex64::new(0.5, 0.0)], &[[3, 0]]).unwrap();
    let zeta = Scalar::generator(&b, 0);
    let g = Mat2::diag(Scalar::generator(&b, 1), Scalar::int(&b, 2)).unwrap();
    let x = GroupElt::new(g, HomogPoly::monomial(3, 1, Scalar::int(&b, 1))).unwrap();
    assert_eq!(x.rescaled(&zeta), x);
    assert_ne!(x.rescaled(&Scalar::generator_pow(&b, 1, Q::new(1, 2))), x);
}

#[test]
fn bulk_checks() {
    for n in 1..=3 {
        assert!(check_group_axioms(n, 100, n as u64).unwrap().passed);
        assert!(check_action(n, 100, n as u64, 1e-10).unwrap().passed);
    }
}
