//! Meromorphic sections of flat line bundles `(z, v) ~ (F(z), a·v)` and of flat
//! P¹-bundles `(z, w) ~ (F(z), g·w)` over Hopf surfaces, as closed-form families.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::group::Mat2;
use crate::hopf::{HopfSurface, SurfaceKind};
use crate::scalars::{
    EigenBasis, ExponentParseError, GaussRat, Scalar, ScalarRecord, DEFAULT_SEARCH_BOUND,
};

/// One row of the section tables.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum SectionKind {
    Zero,
    InfinityOnly,
    ZeroAndInfinity,
    /// `c·z₁^{k1}·z₂^{k2}` with `c` free.
    Monomial {
        k1: i64,
        k2: i64,
    },
    /// `z₁^{k1}·z₂^{k2}·P(u)/Q(u)` with `u = z₁^{m1}/z₂^{m2}` and `P`, `Q` free.
    MonomialTimesRational {
        k1: i64,
        k2: i64,
        m1: u32,
        m2: u32,
    },
    /// `coefficient·z₂/z₁ᵐ + c` with `c` free; the coefficient is `λᵐ/a`.
    JordanFamily {
        m: u32,
        coefficient: ScalarRecord,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectionFamily {
    pub kind: SectionKind,
    /// The constant section ∞ is also a solution.
    pub includes_infinity: bool,
}

/// Bundle data: a line bundle given by `a`, or a P¹-bundle given by `g`.
#[derive(Clone, Debug, PartialEq)]
pub enum Bundle {
    Line(Scalar),
    Projective(Mat2),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SectionError {
    #[error("bundle datum must be nonzero")]
    ZeroDatum,
    #[error("g must be diagonal or a single Jordan block")]
    NotNormalForm,
    #[error(transparent)]
    Record(#[from] ExponentParseError),
}

/// Integers `j` with `λ₁^{j₁}λ₂^{j₂} = c` for a Gaussian rational `c`, using exact eigenvalues.
fn coefficient_exponents(basis: &EigenBasis, c: &GaussRat) -> Option<[i64; 2]> {
    if c.is_one() {
        return Some([0, 0]);
    }
    let [x, y] = basis.exact_values()?;
    let logs = [x.to_complex().norm().ln(), y.to_complex().norm().ln()];
    let target = c.to_complex().norm().ln();
    let b = DEFAULT_SEARCH_BOUND;
    for j1 in -b..=b {
        for j2 in -b..=b {
            let mag = j1 as f64 * logs[0] + j2 as f64 * logs[1] - target;
            if mag.abs() > 1e-6 * (1.0 + (j1.abs() + j2.abs()) as f64) {
                continue;
            }
            let (Some(px), Some(py)) = (x.pow(j1), y.pow(j2)) else {
                continue;
            };
            if &px * &py == *c {
                return Some([j1, j2]);
            }
        }
    }
    None
}

/// Integer `k` with `λ₁^{k₁}λ₂^{k₂} = a` exactly, if any. A Gaussian-rational coefficient
/// is matched against the exact eigenvalues when the surface has them.
pub fn solve_power_product(a: &Scalar) -> Option<[i64; 2]> {
    let (c, e) = a.as_monomial()?;
    if !e[0].is_integer() || !e[1].is_integer() {
        return None;
    }
    let j = coefficient_exponents(a.basis(), c)?;
    Some([e[0].to_integer() + j[0], e[1].to_integer() + j[1]])
}

/// Sections of the line bundle with multiplier `a`.
pub fn line_bundle_sections(s: &HopfSurface, a: &Scalar) -> Result<SectionFamily, SectionError> {
    if a.is_zero() {
        return Err(SectionError::ZeroDatum);
    }
    let kind = match (s.kind(), solve_power_product(a)) {
        (_, None) => SectionKind::Zero,
        (SurfaceKind::Exceptional { .. }, Some(k)) => SectionKind::Monomial {
            k1: k[0] + k[1],
            k2: 0,
        },
        (SurfaceKind::Diagonal { .. }, Some(k)) => match s.hyperresonance() {
            Some((m1, m2)) => {
                // Shift along (m₁, −m₂) to the representative with 0 ≤ k₁ < m₁.
                let t = k[0].div_euclid(m1 as i64);
                SectionKind::MonomialTimesRational {
                    k1: k[0] - t * m1 as i64,
                    k2: k[1] + t * m2 as i64,
                    m1,
                    m2,
                }
            }
            None => SectionKind::Monomial { k1: k[0], k2: k[1] },
        },
    };
    Ok(SectionFamily {
        kind,
        includes_infinity: false,
    })
}

/// Sections of the flat P¹-bundle with monodromy `g` (diagonal or one Jordan block).
pub fn proj_bundle_sections(s: &HopfSurface, g: &Mat2) -> Result<SectionFamily, SectionError> {
    let e = g.entries();
    if g.is_diagonal() {
        let ratio = e[0][0]
            .try_div(&e[1][1])
            .map_err(|_| SectionError::NotNormalForm)?;
        let fam = line_bundle_sections(s, &ratio)?;
        let kind = match fam.kind {
            SectionKind::Zero => SectionKind::ZeroAndInfinity,
            k => k,
        };
        return Ok(SectionFamily {
            kind,
            includes_infinity: true,
        });
    }
    if !g.is_upper_triangular() || e[0][0] != e[1][1] {
        return Err(SectionError::NotNormalForm);
    }
    // [[a, b], [0, a]] is projectively [[a/b, 1], [0, a/b]].
    let a = e[0][0]
        .try_div(&e[0][1])
        .map_err(|_| SectionError::NotNormalForm)?;
    let kind = match s.kind() {
        SurfaceKind::Diagonal { .. } => SectionKind::InfinityOnly,
        SurfaceKind::Exceptional { l, m } => {
            let coefficient = l
                .pow(*m as i64)
                .unwrap()
                .try_div(&a)
                .map_err(|_| SectionError::NotNormalForm)?;
            SectionKind::JordanFamily {
                m: *m,
                coefficient: ScalarRecord::from_scalar(&coefficient),
            }
        }
    };
    Ok(SectionFamily {
        kind,
        includes_infinity: true,
    })
}

/// `g` acting on the value `w = [w₀ : w₁]` of a section, as a Möbius map.
pub fn mobius(g: &[[Complex64; 2]; 2], w: [Complex64; 2]) -> [Complex64; 2] {
    [
        g[0][0] * w[0] + g[0][1] * w[1],
        g[1][0] * w[0] + g[1][1] * w[1],
    ]
}

/// Chordal distance on P¹.
pub fn chordal(a: [Complex64; 2], b: [Complex64; 2]) -> f64 {
    let na = (a[0].norm_sqr() + a[1].norm_sqr()).sqrt();
    let nb = (b[0].norm_sqr() + b[1].norm_sqr()).sqrt();
    (a[0] * b[1] - a[1] * b[0]).norm() / (na * nb)
}

/// A concrete member of a family, evaluated as a point of P¹.
#[derive(Clone, Debug, PartialEq)]
pub enum SectionSample {
    Constant([Complex64; 2]),
    /// `c·z₁^{k₁}z₂^{k₂}·P(u)/Q(u)`.
    Laurent {
        c: Complex64,
        k: [i64; 2],
        m: [u32; 2],
        p: Vec<Complex64>,
        q: Vec<Complex64>,
    },
    /// `coefficient·z₂/z₁ᵐ + c`.
    Jordan {
        coefficient: Complex64,
        m: u32,
        c: Complex64,
    },
}

fn zpow(z: Complex64, e: i64) -> Complex64 {
    if e >= 0 {
        z.powu(e as u32)
    } else {
        z.powu((-e) as u32).inv()
    }
}

fn horner(c: &[Complex64], u: Complex64) -> Complex64 {
    c.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, x| acc * u + x)
}

fn random_c<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let r = rng.gen_range(0.5..2.0);
    Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

/// Random polynomial of degree 0..=2 with nonzero constant term.
fn random_poly<R: Rng + ?Sized>(rng: &mut R) -> Vec<Complex64> {
    let deg = rng.gen_range(0..=2);
    (0..=deg).map(|_| random_c(rng)).collect()
}

impl SectionSample {
    pub fn eval(&self, z: [Complex64; 2]) -> [Complex64; 2] {
        let one = Complex64::new(1.0, 0.0);
        match self {
            SectionSample::Constant(w) => *w,
            SectionSample::Laurent { c, k, m, p, q } => {
                let u = z[0].powu(m[0]) / z[1].powu(m[1]);
                [
                    *c * zpow(z[0], k[0]) * zpow(z[1], k[1]) * horner(p, u),
                    horner(q, u),
                ]
            }
            SectionSample::Jordan { coefficient, m, c } => {
                [*coefficient * z[1] / z[0].powu(*m) + *c, one]
            }
        }
    }
}

impl SectionFamily {
    /// One random member of each component of the family.
    pub fn sample<R: Rng + ?Sized>(
        &self,
        basis: &std::sync::Arc<EigenBasis>,
        rng: &mut R,
    ) -> Result<Vec<SectionSample>, SectionError> {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let mut out = Vec::new();
        match &self.kind {
            SectionKind::Zero => out.push(SectionSample::Constant([zero, one])),
            SectionKind::InfinityOnly => {}
            SectionKind::ZeroAndInfinity => out.push(SectionSample::Constant([zero, one])),
            SectionKind::Monomial { k1, k2 } => out.push(SectionSample::Laurent {
                c: random_c(rng),
                k: [*k1, *k2],
                m: [1, 1],
                p: vec![one],
                q: vec![one],
            }),
            SectionKind::MonomialTimesRational { k1, k2, m1, m2 } => {
                out.push(SectionSample::Laurent {
                    c: random_c(rng),
                    k: [*k1, *k2],
                    m: [*m1, *m2],
                    p: random_poly(rng),
                    q: random_poly(rng),
                })
            }
            SectionKind::JordanFamily { m, coefficient } => out.push(SectionSample::Jordan {
                coefficient: coefficient.to_scalar(basis)?.numeric_eval(),
                m: *m,
                c: random_c(rng),
            }),
        }
        if self.includes_infinity || matches!(self.kind, SectionKind::InfinityOnly) {
            out.push(SectionSample::Constant([one, zero]));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> GaussRat {
        GaussRat::real(1, 2)
    }

    #[test]
    fn line_bundle_rows() {
        let s = HopfSurface::exceptional(&half(), 2).unwrap();
        let a = Scalar::generator(s.basis(), 0).pow(3).unwrap();
        assert_eq!(
            line_bundle_sections(&s, &a).unwrap().kind,
            SectionKind::Monomial { k1: 3, k2: 0 }
        );
        let five = Scalar::int(s.basis(), 5);
        assert_eq!(
            line_bundle_sections(&s, &five).unwrap().kind,
            SectionKind::Zero
        );

        let g = HopfSurface::diagonal(&half(), &GaussRat::real(1, 3)).unwrap();
        let one = Scalar::one(g.basis());
        assert_eq!(
            line_bundle_sections(&g, &one).unwrap().kind,
            SectionKind::Monomial { k1: 0, k2: 0 }
        );
        // 6 = λ₁⁻¹λ₂⁻¹ with exact eigenvalues 1/2 and 1/3.
        let six = Scalar::int(g.basis(), 6);
        assert_eq!(
            line_bundle_sections(&g, &six).unwrap().kind,
            SectionKind::Monomial { k1: -1, k2: -1 }
        );
        assert_eq!(
            line_bundle_sections(&g, &Scalar::int(g.basis(), 5))
                .unwrap()
                .kind,
            SectionKind::Zero
        );
        let root = Scalar::generator_pow(g.basis(), 0, crate::scalars::Q::new(1, 2));
        assert_eq!(
            line_bundle_sections(&g, &root).unwrap().kind,
            SectionKind::Zero
        );

        let h = HopfSurface::diagonal(&GaussRat::real(1, 4), &half()).unwrap();
        let a = Scalar::power_product(h.basis(), [3, 1]);
        let fam = line_bundle_sections(&h, &a).unwrap();
        // λ₁³λ₂ = λ₂⁷ on the line of resonances through (3, 1).
        assert_eq!(
            fam.kind,
            SectionKind::MonomialTimesRational {
                k1: 0,
                k2: 7,
                m1: 1,
                m2: 2
            }
        );
    }

    #[test]
    fn projective_rows() {
        let s = HopfSurface::exceptional(&half(), 2).unwrap();
        let b = s.basis();
        let a = Scalar::constant(b, GaussRat::from_int(3));
        let jordan =
            Mat2::new([[a.clone(), Scalar::one(b)], [Scalar::zero(b), a.clone()]]).unwrap();
        let fam = proj_bundle_sections(&s, &jordan).unwrap();
        let expected = Scalar::generator(b, 0).pow(2).unwrap().try_div(&a).unwrap();
        assert_eq!(
            fam.kind,
            SectionKind::JordanFamily {
                m: 2,
                coefficient: ScalarRecord::from_scalar(&expected)
            }
        );
        assert!(fam.includes_infinity);

        let d = HopfSurface::diagonal(&half(), &GaussRat::real(1, 3)).unwrap();
        let b = d.basis();
        let a = Scalar::int(b, 3);
        let jordan = Mat2::new([[a.clone(), Scalar::one(b)], [Scalar::zero(b), a]]).unwrap();
        assert_eq!(
            proj_bundle_sections(&d, &jordan).unwrap().kind,
            SectionKind::InfinityOnly
        );
        let diag = Mat2::diag(Scalar::int(b, 5), Scalar::one(b)).unwrap();
        assert_eq!(
            proj_bundle_sections(&d, &diag).unwrap().kind,
            SectionKind::ZeroAndInfinity
        );
    }

    #[test]
    fn family_record_round_trip() {
        let s = HopfSurface::exceptional(&half(), 2).unwrap();
        let b = s.basis();
        let a = Scalar::int(b, 3);
        let jordan = Mat2::new([[a.clone(), Scalar::one(b)], [Scalar::zero(b), a]]).unwrap();
        let fam = proj_bundle_sections(&s, &jordan).unwrap();
        let text = serde_json::to_string(&fam).unwrap();
        assert_eq!(serde_json::from_str::<SectionFamily>(&text).unwrap(), fam);
    }
}
