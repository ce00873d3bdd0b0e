//! Numeric checks: equivariance of structures, immersion of developing maps, the group
//! axioms, and the functional equations of bundle sections.

use std::collections::BTreeSet;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{
    brute_force_admissible, canonical_key, enumerate_structures, CanonicalKey, ClassifyError,
    EnumerateOptions, StructureKind, StructureRecord,
};
use crate::devmaps::DevMap;
use crate::group::{
    act_numeric, point_residual, GroupElt, GroupError, HomogPoint, HomogPoly, Mat2,
};
use crate::hopf::{HopfSurface, SurfaceKind};
use crate::scalars::{q, EigenBasis, GaussRat, Scalar, Q};
use crate::sections::{chordal, mobius, Bundle, SectionError, SectionFamily};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    pub samples: usize,
    pub tol_equiv: f64,
    pub tol_jac: f64,
    /// Smallest accepted `|det|` of a developing map.
    pub det_floor: f64,
    pub seed: u64,
    /// Radii `(r_min, r_max)` of the sampling shell; defaults to `(min |λ|, 1)`.
    pub annulus: Option<(f64, f64)>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            samples: 200,
            tol_equiv: 1e-9,
            tol_jac: 1e-5,
            det_floor: 1e-8,
            seed: 0,
            annulus: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("annulus needs 0 < r_min < r_max")]
    BadAnnulus,
    #[error("tolerances and sample count must be positive")]
    BadTolerance,
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if let Some((a, b)) = self.annulus {
            if !(a > 0.0 && a < b && b.is_finite()) {
                return Err(VerifyError::BadAnnulus);
            }
        }
        if self.samples == 0
            || !(self.tol_equiv > 0.0 && self.tol_jac > 0.0 && self.det_floor > 0.0)
        {
            return Err(VerifyError::BadTolerance);
        }
        Ok(())
    }

    fn shell(&self, s: Option<&HopfSurface>) -> (f64, f64) {
        self.annulus.unwrap_or_else(|| {
            let r = s.map_or(0.5, |s| {
                let [a, b] = s.eigenvalues_numeric();
                a.norm().min(b.norm())
            });
            (r, 1.0)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailingSample {
    /// `[[Re z₁, Im z₁], [Re z₂, Im z₂]]`.
    pub z: [[f64; 2]; 2],
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub check: String,
    pub passed: bool,
    pub samples: usize,
    /// Samples discarded because the map or the chart was undefined there.
    pub resampled: usize,
    pub max_residual: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_jacobian: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_fd_error: Option<f64>,
    pub failures: Vec<FailingSample>,
}

/// Failing points kept per report.
const MAX_FAILURES: usize = 10;

fn finite_or_max(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        f64::MAX
    }
}

fn record_point(z: [Complex64; 2], value: f64) -> FailingSample {
    FailingSample {
        z: [[z[0].re, z[0].im], [z[1].re, z[1].im]],
        value: finite_or_max(value),
    }
}

impl VerifyReport {
    fn new(check: &str) -> Self {
        VerifyReport {
            check: check.to_string(),
            passed: true,
            samples: 0,
            resampled: 0,
            max_residual: 0.0,
            min_jacobian: None,
            max_fd_error: None,
            failures: Vec::new(),
        }
    }

    fn fail_at(&mut self, z: [Complex64; 2], value: f64) {
        self.passed = false;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(record_point(z, value));
        }
    }
}

/// Uniform direction on the unit sphere of C², radius uniform in `[r_min, r_max]`.
pub fn sample_shell<R: Rng + ?Sized>(rng: &mut R, (r_min, r_max): (f64, f64)) -> [Complex64; 2] {
    loop {
        let x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.05 && norm <= 1.0 {
            let r = rng.gen_range(r_min..=r_max) / norm;
            return [
                Complex64::new(x[0] * r, x[1] * r),
                Complex64::new(x[2] * r, x[3] * r),
            ];
        }
    }
}

fn numeric_hol(h: &GroupElt) -> ([[Complex64; 2]; 2], Vec<Complex64>) {
    (h.g().numeric(), h.p().numeric_coeffs())
}

/// Residual of `dev(F(z)) = hol·dev(z)` at `z`, or `None` where either side is undefined.
fn equivariance_residual(
    s: &HopfSurface,
    dev: &DevMap,
    hol: &([[Complex64; 2]; 2], Vec<Complex64>),
    z: [Complex64; 2],
) -> Option<f64> {
    let fz = s.apply_f(z).ok()?;
    let lhs = dev.eval_homog(fz)?;
    let rhs = act_numeric(&hol.0, &hol.1, &dev.eval_homog(z)?);
    let r = point_residual(&lhs, &rhs, dev.n as u32);
    r.is_finite().then_some(r)
}

/// `dev(F(z)) = hol·dev(z)` at shell samples.
pub fn check_equivariance(
    rec: &StructureRecord,
    s: &HopfSurface,
    cfg: &VerifyConfig,
) -> Result<VerifyReport, VerifyError> {
    check_equivariance_of(&rec.dev, &rec.hol, s, cfg)
}

pub fn check_equivariance_of(
    dev: &DevMap,
    hol: &GroupElt,
    s: &HopfSurface,
    cfg: &VerifyConfig,
) -> Result<VerifyReport, VerifyError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let shell = cfg.shell(Some(s));
    let hn = numeric_hol(hol);
    let mut report = VerifyReport::new("equivariance");
    // Draw in batches so evaluation is parallel while the sample stream stays seeded.
    let budget = cfg.samples + cfg.samples / 10;
    let mut drawn = 0;
    while report.samples < cfg.samples && drawn < budget {
        let batch: Vec<[Complex64; 2]> = (0..(cfg.samples - report.samples))
            .map(|_| sample_shell(&mut rng, shell))
            .collect();
        drawn += batch.len();
        let results: Vec<Option<f64>> = batch
            .par_iter()
            .map(|&z| equivariance_residual(s, dev, &hn, z))
            .collect();
        for (z, r) in batch.into_iter().zip(results) {
            match r {
                None => report.resampled += 1,
                Some(r) => {
                    report.samples += 1;
                    report.max_residual = report.max_residual.max(r);
                    if !(r < cfg.tol_equiv) {
                        report.fail_at(z, r);
                    }
                }
            }
        }
    }
    if report.samples < cfg.samples {
        // More than a tenth of the draws hit the undefined locus.
        report.passed = false;
    }
    Ok(report)
}

/// Points on the coordinate axes and on the curves `z₁^{m₁} = ρ·z₂^{m₂}` through the roots
/// of the polynomials, where branching would show up.
pub fn targeted_points(dev: &DevMap) -> Vec<[Complex64; 2]> {
    let zero = Complex64::new(0.0, 0.0);
    let mut pts = Vec::new();
    for k in 0..6 {
        let w = Complex64::from_polar(0.3 + 0.1 * k as f64, 0.7 + k as f64);
        pts.push([w, zero]);
        pts.push([zero, w]);
    }
    let [m1, m2] = dev.m();
    for poly in [&dev.p1, &dev.q1, &dev.p2] {
        for rho in poly.roots_numeric() {
            for k in 0..4 {
                let z2 = Complex64::from_polar(0.5 + 0.1 * k as f64, 0.3 + 1.3 * k as f64);
                let z1 = (rho * z2.powf(m2 as f64)).powf(1.0 / m1 as f64);
                pts.push([z1, z2]);
            }
        }
    }
    pts
}

struct JacobianSample {
    z: [Complex64; 2],
    det: f64,
    fd_error: f64,
}

fn jacobian_sample(dev: &DevMap, z: [Complex64; 2]) -> Option<JacobianSample> {
    let (chart, det) = dev.det_numeric(z)?;
    if !det.is_finite() {
        return None;
    }
    let fd_error = match dev.fd_det(z, chart) {
        Some((fd, scale)) if scale > 0.0 => (det - fd).norm() / scale,
        Some((fd, _)) => (det - fd).norm(),
        None => 0.0,
    };
    Some(JacobianSample {
        z,
        det: det.norm(),
        fd_error,
    })
}

/// Nonvanishing of the symbolic Jacobian determinant at shell samples and targeted points,
/// cross-checked against central differences.
pub fn check_immersion(
    rec: &StructureRecord,
    s: Option<&HopfSurface>,
    cfg: &VerifyConfig,
) -> Result<VerifyReport, VerifyError> {
    check_immersion_of(&rec.dev, s, cfg)
}

pub fn check_immersion_of(
    dev: &DevMap,
    s: Option<&HopfSurface>,
    cfg: &VerifyConfig,
) -> Result<VerifyReport, VerifyError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let shell = cfg.shell(s);
    let mut points: Vec<[Complex64; 2]> = (0..cfg.samples)
        .map(|_| sample_shell(&mut rng, shell))
        .collect();
    points.extend(targeted_points(dev));
    let results: Vec<Option<JacobianSample>> = points
        .par_iter()
        .map(|&z| jacobian_sample(dev, z))
        .collect();
    let mut report = VerifyReport::new("immersion");
    let (mut min_det, mut max_fd) = (f64::INFINITY, 0.0f64);
    for r in results {
        let Some(j) = r else {
            report.resampled += 1;
            continue;
        };
        report.samples += 1;
        min_det = min_det.min(j.det);
        max_fd = max_fd.max(j.fd_error);
        if !(j.det > cfg.det_floor) {
            report.fail_at(j.z, j.det);
        } else if !(j.fd_error < cfg.tol_jac) {
            report.fail_at(j.z, j.fd_error);
        }
    }
    report.min_jacobian = Some(finite_or_max(min_det));
    report.max_fd_error = Some(max_fd);
    report.max_residual = max_fd;
    Ok(report)
}

/// Random point of O(n) with moderate coordinates.
fn random_point<R: Rng + ?Sized>(rng: &mut R) -> HomogPoint {
    let mut c = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    HomogPoint {
        v: [c(), c()],
        w: c(),
    }
}

/// Exact associativity, identity and inverse laws on random elements with small
/// Gaussian-rational entries; the action law and `μₙ`-invariance numerically.
pub fn check_group_axioms(n: usize, trials: usize, seed: u64) -> Result<VerifyReport, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = EigenBasis::free();
    let mut report = VerifyReport::new("group axioms");
    let id = GroupElt::identity(&basis, n);
    let zero = [Complex64::new(0.0, 0.0); 2];
    for _ in 0..trials {
        let [x, y, z] = std::array::from_fn(|_| GroupElt::random(&mut rng, &basis, n, 4));
        let assoc = x.compose(&y)?.compose(&z)? == x.compose(&y.compose(&z)?)?;
        let unit = id.compose(&x)? == x && x.compose(&id)? == x;
        let inv = x.compose(&x.inverse())? == id && x.inverse().compose(&x)? == id;
        report.samples += 1;
        if !(assoc && unit && inv) {
            report.fail_at(zero, 1.0);
        }
    }
    Ok(report)
}

/// `(xy)·pt = x·(y·pt)` and `(ζg, p)·pt = (g, p)·pt` for `ζⁿ = 1`, as a max residual.
pub fn check_action(
    n: usize,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<VerifyReport, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = EigenBasis::free();
    let mut report = VerifyReport::new("action");
    for _ in 0..trials {
        let [x, y] = std::array::from_fn(|_| GroupElt::random(&mut rng, &basis, n, 4));
        let pt = random_point(&mut rng);
        let lhs = x.compose(&y)?.act_homog(&pt);
        let rhs = x.act_homog(&y.act_homog(&pt));
        let k = rng.gen_range(0..n);
        let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n as f64);
        let (g, p) = numeric_hol(&x);
        let scaled = g.map(|row| row.map(|e| e * zeta));
        let moved = act_numeric(&scaled, &p, &pt);
        let r = point_residual(&lhs, &rhs, n as u32).max(point_residual(
            &x.act_homog(&pt),
            &moved,
            n as u32,
        ));
        report.samples += 1;
        report.max_residual = report.max_residual.max(r);
        if !(r < tol) {
            report.fail_at([pt.v[0], pt.v[1]], r);
        }
    }
    Ok(report)
}

/// `f(F(z)) = g·f(z)` for random members of `fam`, `instantiations` times over shell samples.
pub fn check_sections(
    s: &HopfSurface,
    bundle: &Bundle,
    fam: &SectionFamily,
    instantiations: usize,
    cfg: &VerifyConfig,
) -> Result<VerifyReport, VerifyError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let shell = cfg.shell(Some(s));
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let g = match bundle {
        Bundle::Line(a) => [[a.numeric_eval(), zero], [zero, one]],
        Bundle::Projective(m) => m.numeric(),
    };
    let mut report = VerifyReport::new("section functional equation");
    for _ in 0..instantiations {
        let members = fam.sample(s.basis(), &mut rng)?;
        let zs: Vec<[Complex64; 2]> = (0..cfg.samples)
            .map(|_| sample_shell(&mut rng, shell))
            .collect();
        for f in &members {
            for &z in &zs {
                let lhs = f.eval(s.apply_f(z).map_err(|_| VerifyError::BadAnnulus)?);
                let rhs = mobius(&g, f.eval(z));
                if !lhs.iter().chain(rhs.iter()).all(|c| c.is_finite())
                    || (lhs == [zero, zero])
                    || (rhs == [zero, zero])
                {
                    report.resampled += 1;
                    continue;
                }
                let mut r = chordal(lhs, rhs);
                if lhs[1] != zero && rhs[1] != zero {
                    let (wl, wr) = (lhs[0] / lhs[1], rhs[0] / rhs[1]);
                    r = r.max((wl - wr).norm() / wr.norm().max(1.0));
                }
                report.samples += 1;
                report.max_residual = report.max_residual.max(r);
                if !(r < cfg.tol_equiv) {
                    report.fail_at(z, r);
                }
            }
        }
    }
    Ok(report)
}

/// Set comparison of enumerated structures against the bounded brute-force search, both
/// reduced to canonical keys; enumerated keys above the degree bound are left out.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompletenessReport {
    pub passed: bool,
    pub deg_bound: usize,
    pub enumerated: usize,
    pub brute_force: usize,
    /// Found by brute force but not enumerated.
    pub missing: Vec<CanonicalKey>,
    /// Enumerated but not found by brute force.
    pub extra: Vec<CanonicalKey>,
}

pub fn check_completeness(
    s: &HopfSurface,
    n: usize,
    deg_bound: usize,
    opts: &EnumerateOptions,
) -> Result<CompletenessReport, ClassifyError> {
    let within = |k: &CanonicalKey| k.degrees.iter().all(|&d| d <= deg_bound as i64);
    let enumerated: BTreeSet<CanonicalKey> = enumerate_structures(s, n, opts)?
        .iter()
        .map(|r| canonical_key(s, &r.dev))
        .filter(within)
        .collect();
    let brute: BTreeSet<CanonicalKey> = brute_force_admissible(s, n, deg_bound)
        .into_iter()
        .map(|(k, _)| k)
        .collect();
    let missing: Vec<_> = brute.difference(&enumerated).cloned().collect();
    let extra: Vec<_> = enumerated.difference(&brute).cloned().collect();
    Ok(CompletenessReport {
        passed: missing.is_empty() && extra.is_empty(),
        deg_bound,
        enumerated: enumerated.len(),
        brute_force: brute.len(),
        missing,
        extra,
    })
}

/// Equivariant but branched control: `(z₁², z₂)` on the exceptional surface of degree 2,
/// with holonomy `(diag(λ²/ε, 1/ε), λ⁻²Z₁Z₂^{n−1})`, `εⁿ = λ²`.
pub fn branched_exceptional_control(s: &HopfSurface, n: usize) -> Option<StructureRecord> {
    let SurfaceKind::Exceptional { l, m: 2 } = s.kind() else {
        return None;
    };
    let b = s.basis();
    let nn = n as i64;
    let eps_inv = Scalar::monomial(b, GaussRat::one(), [Q::new(-2, nn), q(0)]);
    let g = Mat2::diag(&l.pow(2).ok()? * &eps_inv, eps_inv).ok()?;
    let p = HomogPoly::monomial(n, 1, l.pow(-2).ok()?);
    Some(StructureRecord {
        kind: StructureKind::ExceptionalEigen,
        dev: DevMap::monomial(n, [2, 0], [0, 1]),
        hol: GroupElt::new(g, p).ok()?,
        complete: false,
        essential: false,
        provenance: "branched control".into(),
    })
}

/// The holonomy with its first diagonal entry scaled by `1 + eps`.
pub fn perturbed_holonomy(h: &GroupElt, eps: GaussRat) -> Result<GroupElt, GroupError> {
    let b = h.basis();
    let e = h.g().entries();
    let factor = Scalar::constant(b, &GaussRat::one() + &eps);
    let g = Mat2::new([
        [&e[0][0] * &factor, e[0][1].clone()],
        [e[1][0].clone(), e[1][1].clone()],
    ])?;
    GroupElt::new(g, h.p().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sections::{line_bundle_sections, proj_bundle_sections};

    fn g(a: i64, b: i64) -> GaussRat {
        GaussRat::real(a, b)
    }

    #[test]
    fn radial_and_eigen_pass() {
        let s = HopfSurface::diagonal(&g(1, 2), &g(1, 3)).unwrap();
        let cfg = VerifyConfig::default();
        for r in enumerate_structures(&s, 2, &EnumerateOptions::default()).unwrap() {
            let e = check_equivariance(&r, &s, &cfg).unwrap();
            assert!(e.passed, "{} {:?}", r.provenance, e);
            let i = check_immersion(&r, Some(&s), &cfg).unwrap();
            assert!(i.passed, "{} {:?}", r.provenance, i);
        }
    }

    #[test]
    fn exceptional_and_controls() {
        let cfg = VerifyConfig::default();
        for m in 1..=2u32 {
            let s = HopfSurface::exceptional(&g(1, 2), m).unwrap();
            for n in m as usize..=3 {
                for r in enumerate_structures(&s, n, &EnumerateOptions::default()).unwrap() {
                    let e = check_equivariance(&r, &s, &cfg).unwrap();
                    assert!(e.passed, "m={} n={} {} {:?}", m, n, r.provenance, e);
                }
            }
        }
        let s = HopfSurface::exceptional(&g(1, 2), 2).unwrap();
        let c = branched_exceptional_control(&s, 2).unwrap();
        assert!(check_equivariance(&c, &s, &cfg).unwrap().passed);
        assert!(!check_immersion(&c, Some(&s), &cfg).unwrap().passed);

        let d = HopfSurface::diagonal(&g(1, 2), &g(1, 3)).unwrap();
        let r = &enumerate_structures(&d, 1, &EnumerateOptions::default()).unwrap()[0];
        let bad = perturbed_holonomy(&r.hol, g(1, 1000)).unwrap();
        assert!(
            !check_equivariance_of(&r.dev, &bad, &d, &cfg)
                .unwrap()
                .passed
        );
        assert!(
            check_completeness(&d, 2, 2, &EnumerateOptions::default())
                .unwrap()
                .passed
        );
    }

    #[test]
    fn axioms_and_sections() {
        assert!(check_group_axioms(2, 50, 1).unwrap().passed);
        assert!(check_action(3, 50, 1, 1e-10).unwrap().passed);
        let cfg = VerifyConfig {
            samples: 50,
            ..VerifyConfig::default()
        };
        let h = HopfSurface::diagonal(&g(1, 4), &g(1, 2)).unwrap();
        let a = Scalar::power_product(h.basis(), [3, 1]);
        let fam = line_bundle_sections(&h, &a).unwrap();
        assert!(
            check_sections(&h, &Bundle::Line(a), &fam, 5, &cfg)
                .unwrap()
                .passed
        );
        let e = HopfSurface::exceptional(&g(1, 2), 2).unwrap();
        let b = e.basis();
        let a = Scalar::int(b, 3);
        let jordan = Mat2::new([[a.clone(), Scalar::one(b)], [Scalar::zero(b), a]]).unwrap();
        let fam = proj_bundle_sections(&e, &jordan).unwrap();
        assert!(
            check_sections(&e, &Bundle::Projective(jordan), &fam, 5, &cfg)
                .unwrap()
                .passed
        );
    }
}
