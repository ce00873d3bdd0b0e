use hopf_core::classify::{
    enumerate_structures, EnumerateOptions, StructureJson, StructureKind, StructureRecord,
};
use hopf_core::hopf::{HopfSurface, SurfaceClass};
use hopf_core::scalars::GaussRat;
use hopf_core::verify::{
    branched_exceptional_control, check_completeness, check_equivariance, check_equivariance_of,
    check_immersion, perturbed_holonomy, VerifyConfig,
};
use num_complex::Complex64;

fn g(a: i64, b: i64) -> GaussRat {
    GaussRat::real(a, b)
}

fn generic() -> HopfSurface {
    HopfSurface::diagonal(&g(1, 2), &g(1, 3)).unwrap()
}

fn hyper() -> HopfSurface {
    HopfSurface::diagonal(&g(1, 4), &g(1, 2)).unwrap()
}

fn homothety() -> HopfSurface {
    HopfSurface::diagonal(&g(1, 2), &g(1, 2)).unwrap()
}

fn opts() -> EnumerateOptions {
    EnumerateOptions::default()
}

fn is_hyper(r: &StructureRecord) -> bool {
    matches!(r.kind, StructureKind::Hyperresonant { .. })
}

fn cfg() -> VerifyConfig {
    VerifyConfig {
        samples: 100,
        ..VerifyConfig::default()
    }
}

#[test]
fn surface_classes() {
    assert_eq!(generic().classify(), SurfaceClass::Generic);
    assert_eq!(
        hyper().classify(),
        SurfaceClass::Hyperresonant { m1: 1, m2: 2 }
    );
    assert!(homothety().is_homothety());
    assert_eq!(
        HopfSurface::exceptional(&g(1, 2), 2).unwrap().classify(),
        SurfaceClass::Exceptional { m: 2 }
    );
}

#[test]
fn counts_per_surface() {
    for n in 1..=3 {
        assert_eq!(
            enumerate_structures(&generic(), n, &opts()).unwrap().len(),
            3
        );
        // A homothety is hyperresonant with m₁ = m₂ = 1; the default lists have N = 1, 2.
        let recs = enumerate_structures(&homothety(), n, &opts()).unwrap();
        assert_eq!(recs.iter().filter(|r| !is_hyper(r)).count(), 3);
        // n = 1: rows 1, 3, 4 with N = 2; otherwise only row 3 with N != n.
        assert_eq!(
            recs.iter().filter(|r| is_hyper(r)).count(),
            [3, 1, 2][n - 1]
        );
    }
    let e1 = HopfSurface::exceptional(&g(1, 2), 1).unwrap();
    let kinds: Vec<_> = enumerate_structures(&e1, 1, &opts())
        .unwrap()
        .into_iter()
        .map(|r| r.kind)
        .collect();
    assert_eq!(
        kinds,
        vec![StructureKind::Radial, StructureKind::ExceptionalEigen]
    );
    let e2 = HopfSurface::exceptional(&g(1, 2), 2).unwrap();
    assert!(enumerate_structures(&e2, 1, &opts()).unwrap().is_empty());
    assert_eq!(enumerate_structures(&e2, 2, &opts()).unwrap().len(), 1);
}

#[test]
fn equivariant_and_immersed_off_the_hyperresonant_family() {
    let mut surfaces = vec![(generic(), 1..=3), (homothety(), 1..=3)];
    surfaces.push((HopfSurface::exceptional(&g(1, 2), 1).unwrap(), 1..=3));
    surfaces.push((HopfSurface::exceptional(&g(1, 2), 2).unwrap(), 2..=3));
    for (s, ns) in surfaces {
        for n in ns {
            for r in enumerate_structures(&s, n, &opts())
                .unwrap()
                .into_iter()
                .filter(|r| !is_hyper(r))
            {
                let e = check_equivariance(&r, &s, &cfg()).unwrap();
                assert!(
                    e.passed && e.max_residual < 1e-9,
                    "{} n={} {:?}",
                    r.provenance,
                    n,
                    e
                );
                let i = check_immersion(&r, Some(&s), &cfg()).unwrap();
                assert!(i.passed, "{} n={} {:?}", r.provenance, n, i);
            }
        }
    }
}

#[test]
fn first_hyperresonant_row_holonomy_matches_table() {
    // (λ₁, λ₂) = (1/4, 1/2), n = 2, N = 1: g = diag(λ₁/λ₁^{1/2}, λ₂/λ₁^{1/2}) = diag(1/2, 1).
    let s = hyper();
    let one = EnumerateOptions {
        params: vec![vec![g(3, 1)]],
        directions: vec![],
    };
    let recs = enumerate_structures(&s, 2, &one).unwrap();
    let row = recs
        .iter()
        .find(|r| matches!(r.kind, StructureKind::Hyperresonant { case: 1, .. }))
        .unwrap();
    let m = row.hol.g().numeric();
    let ratio = m[0][0] / m[1][1];
    assert!((ratio - Complex64::new(0.5, 0.0)).norm() < 1e-14);
    assert!((m[1][1] * m[1][1] - Complex64::new(1.0, 0.0)).norm() < 1e-14);
    assert!(m[0][1].norm() == 0.0 && m[1][0].norm() == 0.0);
    assert!(row.hol.p().is_zero());
}

/// `t = ((z₁ − a z₂²)/z₂, z₁/z₂²)` has Jacobian `(a z₂² − z₁)/z₂⁴`, zero on `z₁ = a z₂²`.
#[test]
fn first_hyperresonant_row_is_branched() {
    let s = hyper();
    let a = 3.0;
    let one = EnumerateOptions {
        params: vec![vec![g(3, 1)]],
        directions: vec![],
    };
    let recs = enumerate_structures(&s, 2, &one).unwrap();
    let row = recs
        .iter()
        .find(|r| matches!(r.kind, StructureKind::Hyperresonant { case: 1, .. }))
        .unwrap();
    assert!(check_equivariance(row, &s, &cfg()).unwrap().passed);
    let z2 = Complex64::new(0.3, 0.2);
    let on_curve = [a * z2 * z2, z2];
    let det = row.dev.det_t(on_curve);
    assert!(det.norm() < 1e-12, "{}", det);
    let off = [Complex64::new(0.1, -0.4), z2];
    let expected = (a * z2 * z2 - off[0]) / z2.powi(4);
    assert!((row.dev.det_t(off) - expected).norm() < 1e-9 * expected.norm());
    assert!(!check_immersion(row, Some(&s), &cfg()).unwrap().passed);
}

#[test]
fn completeness_against_brute_force() {
    for (s, ns) in [
        (generic(), vec![1, 2, 3]),
        (hyper(), vec![2]),
        (homothety(), vec![1, 2, 3]),
    ] {
        for n in ns {
            let r = check_completeness(&s, n, 2, &opts()).unwrap();
            assert!(r.passed, "n={} {:?}", n, r);
        }
    }
}

#[test]
fn negative_controls_fail() {
    let e = HopfSurface::exceptional(&g(1, 2), 2).unwrap();
    let c = branched_exceptional_control(&e, 2).unwrap();
    assert!(check_equivariance(&c, &e, &cfg()).unwrap().passed);
    let i = check_immersion(&c, Some(&e), &cfg()).unwrap();
    assert!(!i.passed && i.min_jacobian.unwrap() < 1e-8);
    let s = generic();
    for r in enumerate_structures(&s, 2, &opts()).unwrap() {
        let bad = perturbed_holonomy(&r.hol, g(1, 1000)).unwrap();
        assert!(
            !check_equivariance_of(&r.dev, &bad, &s, &cfg())
                .unwrap()
                .passed,
            "{}",
            r.provenance
        );
    }
}

#[test]
fn records_round_trip_through_json() {
    let h = hyper();
    for (s, n) in [
        (generic(), 2),
        (h.clone(), 2),
        (HopfSurface::exceptional(&g(1, 2), 2).unwrap(), 3),
    ] {
        for r in enumerate_structures(&s, n, &opts()).unwrap() {
            let text = serde_json::to_string(&r.to_json()).unwrap();
            let j: StructureJson = serde_json::from_str(&text).unwrap();
            assert_eq!(StructureRecord::from_json(&s, &j).unwrap(), r);
        }
    }
}

#[test]
fn homothety_with_declared_direction() {
    let s = homothety();
    let o = EnumerateOptions {
        params: vec![],
        directions: vec![[g(1, 1), g(2, 1)]],
    };
    let recs: Vec<_> = enumerate_structures(&s, 2, &o)
        .unwrap()
        .into_iter()
        .filter(|r| !is_hyper(r))
        .collect();
    assert_eq!(recs.len(), 2);
    for r in &recs {
        assert!(
            check_equivariance(r, &s, &cfg()).unwrap().passed,
            "{}",
            r.provenance
        );
        assert!(
            check_immersion(r, Some(&s), &cfg()).unwrap().passed,
            "{}",
            r.provenance
        );
    }
}
