use hopf_core::group::Mat2;
use hopf_core::hopf::HopfSurface;
use hopf_core::scalars::{GaussRat, Scalar, ScalarRecord};
use hopf_core::sections::{
    line_bundle_sections, proj_bundle_sections, Bundle, SectionKind, SectionSample,
};
use hopf_core::verify::{check_sections, VerifyConfig};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn g(a: i64, b: i64) -> GaussRat {
    GaussRat::real(a, b)
}

fn jordan(s: &HopfSurface, a: i64, b: i64) -> Mat2 {
    let basis = s.basis();
    Mat2::new([
        [Scalar::int(basis, a), Scalar::int(basis, b)],
        [Scalar::zero(basis), Scalar::int(basis, a)],
    ])
    .unwrap()
}

/// One bundle per row kind, with the kind it must produce.
fn rows() -> Vec<(HopfSurface, Bundle, &'static str)> {
    let generic = HopfSurface::diagonal(&g(1, 2), &g(1, 3)).unwrap();
    let hyper = HopfSurface::diagonal(&g(1, 4), &g(1, 2)).unwrap();
    let ex = HopfSurface::exceptional(&g(1, 2), 2).unwrap();
    let gb = generic.basis().clone();
    let hb = hyper.basis().clone();
    let eb = ex.basis().clone();
    vec![
        (generic.clone(), Bundle::Line(Scalar::int(&gb, 5)), "zero"),
        (
            generic.clone(),
            Bundle::Line(Scalar::int(&gb, 6)),
            "monomial",
        ),
        (
            hyper.clone(),
            Bundle::Line(Scalar::power_product(&hb, [3, 1])),
            "monomial_times_rational",
        ),
        (
            ex.clone(),
            Bundle::Line(Scalar::generator(&eb, 0).pow(3).unwrap()),
            "monomial",
        ),
        (
            generic.clone(),
            Bundle::Projective(Mat2::diag(Scalar::int(&gb, 5), Scalar::one(&gb)).unwrap()),
            "zero_and_infinity",
        ),
        (
            generic.clone(),
            Bundle::Projective(
                Mat2::diag(Scalar::power_product(&gb, [2, -1]), Scalar::one(&gb)).unwrap(),
            ),
            "monomial",
        ),
        (
            hyper.clone(),
            Bundle::Projective(
                Mat2::diag(Scalar::power_product(&hb, [1, 0]), Scalar::one(&hb)).unwrap(),
            ),
            "monomial_times_rational",
        ),
        (
            generic.clone(),
            Bundle::Projective(jordan(&generic, 3, 1)),
            "infinity_only",
        ),
        (
            ex.clone(),
            Bundle::Projective(jordan(&ex, 3, 1)),
            "jordan_family",
        ),
        (
            ex.clone(),
            Bundle::Projective(jordan(&ex, 5, 2)),
            "jordan_family",
        ),
    ]
}

fn solve(s: &HopfSurface, b: &Bundle) -> hopf_core::sections::SectionFamily {
    match b {
        Bundle::Line(a) => line_bundle_sections(s, a).unwrap(),
        Bundle::Projective(m) => proj_bundle_sections(s, m).unwrap(),
    }
}

fn variant(k: &SectionKind) -> String {
    serde_json::to_value(k).unwrap()["variant"]
        .as_str()
        .unwrap()
        .to_string()
}

#[test]
fn every_row_satisfies_its_functional_equation() {
    let cfg = VerifyConfig {
        samples: 40,
        seed: 11,
        ..VerifyConfig::default()
    };
    for (s, b, expected) in rows() {
        let fam = solve(&s, &b);
        assert_eq!(variant(&fam.kind), expected);
        let r = check_sections(&s, &b, &fam, 10, &cfg).unwrap();
        assert!(r.passed, "{} {:?}", expected, r);
    }
}

#[test]
fn jordan_closed_form_is_exact() {
    let ex = HopfSurface::exceptional(&g(1, 2), 3).unwrap();
    let b = ex.basis();
    let fam = proj_bundle_sections(&ex, &jordan(&ex, 5, 2)).unwrap();
    let SectionKind::JordanFamily { m, coefficient } = fam.kind else {
        panic!("wrong row")
    };
    assert_eq!(m, 3);
    // [[5, 2], [0, 5]] is projectively the unit Jordan block with a = 5/2.
    let a = Scalar::constant(b, GaussRat::real(5, 2));
    let l = Scalar::generator(b, 0);
    let coeff = coefficient.to_scalar(b).unwrap();
    assert_eq!(coeff, l.pow(3).unwrap().try_div(&a).unwrap());
    assert_eq!(&coeff * &l.pow(-3).unwrap(), a.inv().unwrap());
    assert_eq!(coefficient, ScalarRecord::from_scalar(&coeff));
}

#[test]
fn jordan_section_values() {
    // f(z) = (2/5)·λ³·z₂/z₁³ + c at λ = 1/2.
    let sample = SectionSample::Jordan {
        coefficient: Complex64::new(0.4 * 0.125, 0.0),
        m: 3,
        c: Complex64::new(1.0, -1.0),
    };
    let z = [Complex64::new(0.5, 0.1), Complex64::new(-0.2, 0.3)];
    let [w0, w1] = sample.eval(z);
    let expected = Complex64::new(0.05, 0.0) * z[1] / z[0].powi(3) + Complex64::new(1.0, -1.0);
    assert!((w0 / w1 - expected).norm() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_generic_multipliers(k1 in -3i64..=3, k2 in -3i64..=3, seed in any::<u64>()) {
        let s = HopfSurface::diagonal(&g(1, 2), &g(1, 3)).unwrap();
        let a = Scalar::power_product(s.basis(), [k1, k2]);
        let fam = line_bundle_sections(&s, &a).unwrap();
        prop_assert_eq!(&fam.kind, &SectionKind::Monomial { k1, k2 });
        let cfg = VerifyConfig { samples: 20, seed, ..VerifyConfig::default() };
        prop_assert!(check_sections(&s, &Bundle::Line(a), &fam, 3, &cfg).unwrap().passed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(fam.sample(s.basis(), &mut rng).unwrap().len(), 1);
    }
}
