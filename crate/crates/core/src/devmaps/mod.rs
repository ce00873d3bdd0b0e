//! Developing maps of the shape
//! `(t₁, t₂) = (z₁^{k₁}z₂^{k₂}·P₁(u)/Q₁(u), z₁^{ℓ₁}z₂^{ℓ₂}·P₂(u)/Q₁(u)ⁿ)` with `u = z₁^{m₁}/z₂^{m₂}`,
//! their admissibility calculus and exact Jacobians.

mod unipoly;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::group::{AffinePoint, Chart, GroupElt, GroupError, HomogPoint, Mat2};
use crate::hopf::{HopfSurface, SurfaceKind};
use crate::scalars::{GaussRat, Scalar, Q};

pub use unipoly::UniPoly;

/// Relative step of the central-difference Jacobian.
pub const FD_STEP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DevMapError {
    #[error("map is undefined at this point in both charts")]
    Undefined,
    #[error("holonomy from the monomial lemma needs a diagonal surface")]
    NotDiagonal,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The first failing clause of semiadmissibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[serde(rename_all = "snake_case")]
pub enum SemiClause {
    #[error("nonconstant polynomial but no hyperresonance")]
    NonconstantWithoutHyperresonance,
    #[error("a polynomial vanishes identically")]
    ZeroPolynomial,
    #[error("a polynomial has a root at u = 0")]
    RootAtZero,
    #[error("a polynomial has a double root")]
    DoubleRoot,
    #[error("two polynomials share a root")]
    CommonRoot,
    #[error("(k1, l1) is not in the allowed list")]
    FirstExponents,
    #[error("(k~2, l~2) is not in the allowed list")]
    TildeExponents,
}

/// The first failing clause of admissibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[serde(rename_all = "snake_case")]
pub enum AdmClause {
    #[error("not semiadmissible: {0}")]
    Semi(SemiClause),
    #[error("A != 0 with P1 nonconstant")]
    AWithNonconstantP1,
    #[error("B != 0 with P2 nonconstant")]
    BWithNonconstantP2,
    #[error("C != 0 with Q1 nonconstant")]
    CWithNonconstantQ1,
    #[error("R(u) is not constant")]
    RNotConstant,
    #[error("D = 0")]
    DZero,
    #[error("k1 = l1 = 0")]
    FirstExponentsZero,
    #[error("D~ = 0")]
    TildeDZero,
    #[error("D^ = 0")]
    HatDZero,
}

/// The constants of the Jacobian formula in the three coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbcdReport {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    /// `(Ã, B̃, C̃, D̃)` after `u ↦ 1/u`.
    pub tilde: [i64; 4],
    /// `(Â, B̂, Ĉ, D̂)` in the `(s₁, s₂)` chart.
    pub hat: [i64; 4],
    /// `(k̃₂, ℓ̃₂)`.
    pub tilde_exponents: [i64; 2],
}

/// `det t′ = z₁^{e₁}z₂^{e₂}·P₁P₂/Q₁^{n+1}·R(u)` with `R = r_num/r_den`, times `frame_det`
/// when a linear frame is precomposed.
#[derive(Clone, Debug, PartialEq)]
pub struct DetJacobian {
    pub z_exponents: [i64; 2],
    pub p1: UniPoly,
    pub p2: UniPoly,
    pub q1: UniPoly,
    pub q1_power: usize,
    pub r_num: UniPoly,
    pub r_den: UniPoly,
    pub frame_det: GaussRat,
}

impl DetJacobian {
    /// `R(u) = D` exactly.
    pub fn r_constant(&self, d: i64) -> bool {
        self.r_num == self.r_den.scale(&GaussRat::from_int(d))
    }

    /// `R` in lowest terms.
    pub fn r_reduced(&self) -> (UniPoly, UniPoly) {
        let g = self.r_num.gcd(&self.r_den);
        if g.is_zero() {
            return (self.r_num.clone(), self.r_den.clone());
        }
        (self.r_num.div_rem(&g).0, self.r_den.div_rem(&g).0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DevMap {
    pub n: usize,
    pub k: [i64; 2],
    pub l: [i64; 2],
    pub p1: UniPoly,
    pub q1: UniPoly,
    pub p2: UniPoly,
    /// `(m₁, m₂)` in `u = z₁^{m₁}/z₂^{m₂}`; negative after the `u ↦ 1/u` rewrite.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyper: Option<[i64; 2]>,
    /// Linear map precomposed with the monomial map.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<[[GaussRat; 2]; 2]>,
}

fn zpow(z: Complex64, e: i64) -> Complex64 {
    if e >= 0 {
        z.powu(e as u32)
    } else {
        z.powu((-e) as u32).inv()
    }
}

/// The four allowed values of `(k₁, ℓ₁)` and of `(k̃₂, ℓ̃₂)`.
pub fn allowed_pairs(n: usize) -> [[i64; 2]; 4] {
    [[-1, -(n as i64)], [0, 0], [0, 1], [1, 0]]
}

impl DevMap {
    /// Monomial map with constant polynomials.
    pub fn monomial(n: usize, k: [i64; 2], l: [i64; 2]) -> Self {
        DevMap {
            n,
            k,
            l,
            p1: UniPoly::one(),
            q1: UniPoly::one(),
            p2: UniPoly::one(),
            hyper: None,
            frame: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        DevMap::monomial(n, [1, 0], [0, 1])
    }

    /// `(z₁/z₂, 1/z₂ⁿ)`.
    pub fn radial(n: usize) -> Self {
        DevMap::monomial(n, [1, -1], [0, -(n as i64)])
    }

    pub fn with_polys(mut self, p1: UniPoly, q1: UniPoly, p2: UniPoly, hyper: [i64; 2]) -> Self {
        self.p1 = p1;
        self.q1 = q1;
        self.p2 = p2;
        self.hyper = Some(hyper);
        self
    }

    pub fn with_frame(mut self, frame: [[GaussRat; 2]; 2]) -> Self {
        self.frame = Some(frame);
        self
    }

    /// `(m₁, m₂)`, with `(1, 1)` standing in when no hyperresonance is attached.
    pub fn m(&self) -> [i64; 2] {
        self.hyper.unwrap_or([1, 1])
    }

    /// `(deg P₁, deg Q₁, deg P₂)`.
    pub fn degrees(&self) -> [i64; 3] {
        [
            self.p1.degree() as i64,
            self.q1.degree() as i64,
            self.p2.degree() as i64,
        ]
    }

    pub fn all_constant(&self) -> bool {
        self.p1.is_constant() && self.q1.is_constant() && self.p2.is_constant()
    }

    fn shifts(&self) -> (i64, i64) {
        let [p, q, r] = self.degrees();
        (p - q, r - self.n as i64 * q)
    }

    /// `(k̃₂, ℓ̃₂)`.
    pub fn tilde_exponents(&self) -> [i64; 2] {
        let m2 = self.m()[1];
        let (s1, s2) = self.shifts();
        [self.k[1] - m2 * s1, self.l[1] - m2 * s2]
    }

    pub fn abcd(&self) -> AbcdReport {
        let n = self.n as i64;
        let [m1, m2] = self.m();
        let [k1, k2] = self.k;
        let [l1, l2] = self.l;
        let a = m1 * l2 + l1 * m2;
        let b = m1 * k2 + k1 * m2;
        let c = n * b - a;
        let d = k1 * l2 - l1 * k2;
        let (s1, s2) = self.shifts();
        AbcdReport {
            a,
            b,
            c,
            d,
            tilde: [-a, -b, -c, d + a * s1 - b * s2],
            hat: [a - n * b, -b, -a, -d],
            tilde_exponents: self.tilde_exponents(),
        }
    }

    /// The same map rewritten in `ũ = 1/u`.
    pub fn tilde(&self) -> DevMap {
        let [m1, m2] = self.m();
        let (s1, s2) = self.shifts();
        DevMap {
            n: self.n,
            k: [self.k[0] + m1 * s1, self.k[1] - m2 * s1],
            l: [self.l[0] + m1 * s2, self.l[1] - m2 * s2],
            p1: self.p1.reversed(),
            q1: self.q1.reversed(),
            p2: self.p2.reversed(),
            hyper: Some([-m1, -m2]),
            frame: self.frame.clone(),
        }
    }

    /// The same map in the `(s₁, s₂)` chart of O(n).
    pub fn hat(&self) -> DevMap {
        let n = self.n as i64;
        DevMap {
            n: self.n,
            k: [-self.k[0], -self.k[1]],
            l: [self.l[0] - n * self.k[0], self.l[1] - n * self.k[1]],
            p1: self.q1.clone(),
            q1: self.p1.clone(),
            p2: self.p2.clone(),
            hyper: self.hyper,
            frame: self.frame.clone(),
        }
    }

    /// The map `z ↦ t(z₂, z₁)` written in standard form.
    pub fn swap_tilde(&self) -> DevMap {
        let t = self.tilde();
        let [m1, m2] = self.m();
        let frame = self.frame.as_ref().map(|f| {
            [
                [f[1][1].clone(), f[1][0].clone()],
                [f[0][1].clone(), f[0][0].clone()],
            ]
        });
        DevMap {
            n: self.n,
            k: [t.k[1], t.k[0]],
            l: [t.l[1], t.l[0]],
            p1: t.p1,
            q1: t.q1,
            p2: t.p2,
            hyper: self.hyper.map(|_| [m2, m1]),
            frame,
        }
        .normalize_hyper(m1, m2)
    }

    fn normalize_hyper(mut self, m1: i64, m2: i64) -> DevMap {
        if self.hyper.is_none() && !self.all_constant() {
            self.hyper = Some([m2, m1]);
        }
        self
    }

    fn frame_det(&self) -> GaussRat {
        match &self.frame {
            Some(f) => &(&f[0][0] * &f[1][1]) - &(&f[0][1] * &f[1][0]),
            None => GaussRat::one(),
        }
    }

    fn apply_frame(&self, z: [Complex64; 2]) -> [Complex64; 2] {
        match &self.frame {
            Some(f) => [
                f[0][0].to_complex() * z[0] + f[0][1].to_complex() * z[1],
                f[1][0].to_complex() * z[0] + f[1][1].to_complex() * z[1],
            ],
            None => z,
        }
    }

    pub fn det_jacobian(&self) -> DetJacobian {
        let r = self.abcd();
        let g = GaussRat::from_int;
        let (p1, q1, p2) = (&self.p1, &self.q1, &self.p2);
        let r_num = p1
            .euler()
            .mul(p2)
            .mul(q1)
            .scale(&g(r.a))
            .sub(&p2.euler().mul(p1).mul(q1).scale(&g(r.b)))
            .add(&q1.euler().mul(p1).mul(p2).scale(&g(r.c)))
            .add(&p1.mul(p2).mul(q1).scale(&g(r.d)));
        DetJacobian {
            z_exponents: [self.k[0] + self.l[0] - 1, self.k[1] + self.l[1] - 1],
            p1: p1.clone(),
            p2: p2.clone(),
            q1: q1.clone(),
            q1_power: self.n + 1,
            r_num,
            r_den: p1.mul(p2).mul(q1),
            frame_det: self.frame_det(),
        }
    }

    /// Homogeneous representative `(v, w)` of the image, polynomial in `z` for
    /// semiadmissible maps so that the axes need no special treatment.
    pub fn eval_homog(&self, z: [Complex64; 2]) -> Option<HomogPoint> {
        let z = self.apply_frame(z);
        let n = self.n as i64;
        let [m1, m2] = self.m();
        let [p, q, r] = self.degrees();
        let (x, y) = (zpow(z[0], m1), zpow(z[1], m2));
        let p1h = self.p1.eval_homog(p as usize, x, y);
        let q1h = self.q1.eval_homog(q as usize, x, y);
        let p2h = self.p2.eval_homog(r as usize, x, y);
        let [e1, e2] = [self.k[0], self.tilde_exponents()[0]];
        let num = zpow(z[0], e1.max(0)) * zpow(z[1], e2.max(0));
        let den = zpow(z[0], (-e1).max(0)) * zpow(z[1], (-e2).max(0));
        let v = [num * p1h, den * q1h];
        let lt2 = self.tilde_exponents()[1];
        let w = zpow(z[0], self.l[0] + n * (-e1).max(0)) * zpow(z[1], lt2 + n * (-e2).max(0)) * p2h;
        let ok =
            v.iter().chain([&w]).all(|c| c.is_finite()) && (v[0].norm() > 0.0 || v[1].norm() > 0.0);
        ok.then_some(HomogPoint { v, w })
    }

    pub fn eval(&self, z: [Complex64; 2]) -> Result<AffinePoint, DevMapError> {
        self.eval_homog(z)
            .and_then(|h| h.to_affine(self.n as u32))
            .ok_or(DevMapError::Undefined)
    }

    pub fn eval_in_chart(&self, z: [Complex64; 2], chart: Chart) -> Option<[Complex64; 2]> {
        self.eval_homog(z)?.in_chart(chart, self.n as u32)
    }

    /// Symbolic determinant of the chart-T map evaluated at `z`.
    pub fn det_t(&self, z: [Complex64; 2]) -> Complex64 {
        let jac = self.det_jacobian();
        let zf = self.apply_frame(z);
        let n = self.n;
        let [m1, m2] = self.m();
        let [p, q, r] = self.degrees();
        let (x, y) = (zpow(zf[0], m1), zpow(zf[1], m2));
        let [kt2, lt2] = self.tilde_exponents();
        let num = jac.r_num.eval_homog((p + q + r) as usize, x, y);
        let q1h = self.q1.eval_homog(q as usize, x, y);
        jac.frame_det.to_complex()
            * zpow(zf[0], self.k[0] + self.l[0] - 1)
            * zpow(zf[1], kt2 + lt2 - 1)
            * num
            / q1h.powu(n as u32 + 2)
    }

    /// Symbolic determinant in the chart where `eval` lands.
    pub fn det_numeric(&self, z: [Complex64; 2]) -> Option<(Chart, Complex64)> {
        let chart = self.eval(z).ok()?.chart;
        let det = match chart {
            Chart::T => self.det_t(z),
            Chart::S => self.hat().det_t(z),
        };
        Some((chart, det))
    }

    /// Central-difference Jacobian determinant in `chart`, with the magnitude of its two
    /// products for scaling error estimates.
    pub fn fd_det(&self, z: [Complex64; 2], chart: Chart) -> Option<(Complex64, f64)> {
        let h = FD_STEP * (z[0].norm().max(z[1].norm())).max(1e-3);
        let mut cols = [[Complex64::new(0.0, 0.0); 2]; 2];
        for j in 0..2 {
            let (mut zp, mut zm) = (z, z);
            zp[j] += h;
            zm[j] -= h;
            let fp = self.eval_in_chart(zp, chart)?;
            let fm = self.eval_in_chart(zm, chart)?;
            for i in 0..2 {
                cols[j][i] = (fp[i] - fm[i]) / (2.0 * h);
            }
        }
        let (a, b) = (cols[0][0] * cols[1][1], cols[1][0] * cols[0][1]);
        Some((a - b, a.norm() + b.norm()))
    }

    pub fn semiadmissible_violation(&self) -> Option<SemiClause> {
        let polys = [&self.p1, &self.q1, &self.p2];
        if polys.iter().any(|p| p.is_zero()) {
            return Some(SemiClause::ZeroPolynomial);
        }
        if self.hyper.is_none() && !self.all_constant() {
            return Some(SemiClause::NonconstantWithoutHyperresonance);
        }
        if polys.iter().any(|p| p.has_root_at_zero()) {
            return Some(SemiClause::RootAtZero);
        }
        if polys.iter().any(|p| !p.is_squarefree()) {
            return Some(SemiClause::DoubleRoot);
        }
        let coprime = polys[0].is_coprime(polys[1])
            && polys[0].is_coprime(polys[2])
            && polys[1].is_coprime(polys[2]);
        if !coprime {
            return Some(SemiClause::CommonRoot);
        }
        let allowed = allowed_pairs(self.n);
        if !allowed.contains(&[self.k[0], self.l[0]]) {
            return Some(SemiClause::FirstExponents);
        }
        if !allowed.contains(&self.tilde_exponents()) {
            return Some(SemiClause::TildeExponents);
        }
        None
    }

    pub fn is_semiadmissible(&self) -> bool {
        self.semiadmissible_violation().is_none()
    }

    pub fn admissible_violation(&self) -> Option<AdmClause> {
        if let Some(c) = self.semiadmissible_violation() {
            return Some(AdmClause::Semi(c));
        }
        let r = self.abcd();
        if r.a != 0 && !self.p1.is_constant() {
            return Some(AdmClause::AWithNonconstantP1);
        }
        if r.b != 0 && !self.p2.is_constant() {
            return Some(AdmClause::BWithNonconstantP2);
        }
        if r.c != 0 && !self.q1.is_constant() {
            return Some(AdmClause::CWithNonconstantQ1);
        }
        if !self.det_jacobian().r_constant(r.d) {
            return Some(AdmClause::RNotConstant);
        }
        if r.d == 0 {
            return Some(AdmClause::DZero);
        }
        if self.k[0] == 0 && self.l[0] == 0 {
            return Some(AdmClause::FirstExponentsZero);
        }
        if r.tilde[3] == 0 {
            return Some(AdmClause::TildeDZero);
        }
        if r.hat[3] == 0 {
            return Some(AdmClause::HatDZero);
        }
        None
    }

    pub fn is_admissible(&self) -> bool {
        self.admissible_violation().is_none()
    }

    /// Holonomy `(diag(λᵏδ, δ), 0)` with `δ = λ^{−ℓ/n}` on a diagonal surface, where
    /// `λᵏ = λ₁^{k₁}λ₂^{k₂}`; the developing map is then equivariant by construction.
    pub fn holonomy(&self, s: &HopfSurface) -> Result<GroupElt, DevMapError> {
        if !matches!(s.kind(), SurfaceKind::Diagonal { .. }) {
            return Err(DevMapError::NotDiagonal);
        }
        let b = s.basis();
        let n = self.n as i64;
        let mono = |e: [Q; 2]| Scalar::monomial(b, GaussRat::one(), e);
        let delta = mono([Q::new(-self.l[0], n), Q::new(-self.l[1], n)]);
        let lk = mono([Q::from_integer(self.k[0]), Q::from_integer(self.k[1])]);
        let g = Mat2::diag(&lk * &delta, delta)?;
        Ok(GroupElt::linear(g, self.n)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    fn g(v: i64) -> GaussRat {
        GaussRat::from_int(v)
    }

    fn row1(m: [i64; 2], n: usize, roots: &[GaussRat]) -> DevMap {
        let nn = roots.len() as i64;
        DevMap::monomial(n, [0, nn * m[1] - 1], [1, -(n as i64)]).with_polys(
            UniPoly::from_roots(roots),
            UniPoly::one(),
            UniPoly::one(),
            m,
        )
    }

    #[test]
    fn abcd_examples() {
        for n in 1..4 {
            let r = DevMap::radial(n).abcd();
            let n = n as i64;
            assert_eq!((r.a, r.b, r.c, r.d), (-n, 0, n, -n));
            assert_eq!(r.hat[3], -r.d);
        }
        // Case (0, 1, −1, −n) by direct substitution: A = m₂ − m₁n + m₁m₂(deg P₂ − n·deg Q₁).
        let (m1, m2, n) = (2i64, 3i64, 2usize);
        let d = DevMap::monomial(n, [0, -1 + m2], [1, -(n as i64) + m2 * (1 - 2)]).with_polys(
            UniPoly::from_roots(&[g(1), g(2)]),
            UniPoly::from_roots(&[g(3)]),
            UniPoly::from_roots(&[g(5)]),
            [m1, m2],
        );
        assert_eq!(d.tilde_exponents(), [-1, -(n as i64)]);
        let (p, q, r) = (2, 1, 1);
        let rep = d.abcd();
        assert_eq!(rep.a, m2 - m1 * n as i64 + m1 * m2 * (r - n as i64 * q));
        assert_eq!(rep.b, m1 * (-1 + m2 * (p - q)));
        assert_eq!(rep.d, 1 - m2 * (p - q));
    }

    #[test]
    fn tilde_dictionary_matches_rewritten_map() {
        let d = row1([1, 2], 2, &[g(1), g(3)]);
        let r = d.abcd();
        let t = d.tilde().abcd();
        assert_eq!([t.a, t.b, t.c, t.d], r.tilde);
        assert_eq!(d.tilde().tilde(), d);
        assert_eq!(d.hat().hat(), d);
        let h = d.hat().abcd();
        assert_eq!([h.a, h.b, h.c, h.d], r.hat);
        let z = [c(0.7, 0.2), c(-0.3, 0.9)];
        let (a, b) = (d.eval_homog(z).unwrap(), d.tilde().eval_homog(z).unwrap());
        assert!(crate::group::point_residual(&a, &b, 2) < 1e-12);
    }

    #[test]
    fn jacobian_examples() {
        let d = DevMap::radial(1);
        let z = [c(0.3, 0.1), c(0.5, -0.2)];
        let expect = -z[1].powi(-3);
        assert!((d.det_t(z) - expect).norm() < 1e-12 * expect.norm());
        let id = DevMap::identity(3);
        assert!((id.det_t(z) - c(1.0, 0.0)).norm() < 1e-14);
        let jac = id.det_jacobian();
        assert_eq!(jac.z_exponents, [0, 0]);
        assert!(jac.r_constant(1));

        // R has a simple pole at the root of P₁ when A ≠ 0.
        let d = DevMap::monomial(1, [1, -1], [0, -1]).with_polys(
            UniPoly::from_roots(&[g(2)]),
            UniPoly::one(),
            UniPoly::one(),
            [1, 1],
        );
        assert_ne!(d.abcd().a, 0);
        let (num, den) = d.det_jacobian().r_reduced();
        assert_eq!(
            den.gcd(&UniPoly::from_roots(&[g(2)])),
            UniPoly::from_roots(&[g(2)])
        );
        assert!(!num.is_zero());
    }

    #[test]
    fn symbolic_det_matches_finite_differences() {
        let maps = [
            DevMap::radial(2),
            DevMap::identity(2),
            row1([1, 2], 2, &[g(1)]),
            row1([1, 2], 2, &[g(1), GaussRat::from_quad(1, 2, 1, 1)]),
            DevMap::monomial(2, [1, -2], [0, -3]).with_polys(
                UniPoly::one(),
                UniPoly::from_roots(&[g(2)]),
                UniPoly::one(),
                [2, 1],
            ),
        ];
        let pts = [
            [c(0.7, 0.2), c(-0.3, 0.9)],
            [c(0.1, -0.5), c(0.4, 0.4)],
            [c(0.9, 0.0), c(0.0, 0.2)],
        ];
        for d in &maps {
            for z in pts {
                let (chart, det) = d.det_numeric(z).unwrap();
                let (fd, scale) = d.fd_det(z, chart).unwrap();
                assert!(
                    (det - fd).norm() <= 1e-6 * scale.max(det.norm()),
                    "{d:?} at {z:?}"
                );
            }
        }
    }

    #[test]
    fn evaluation_examples() {
        let d = DevMap::radial(2);
        let pt = d.eval([c(1.0, 0.0), c(2.0, 0.0)]).unwrap();
        assert_eq!(pt.chart, Chart::T);
        assert!(
            (pt.coords[0] - c(0.5, 0.0)).norm() < 1e-15
                && (pt.coords[1] - c(0.25, 0.0)).norm() < 1e-15
        );
        let pt = d.eval([c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(pt.chart, Chart::S);
        assert!(pt.coords[0].norm() < 1e-15 && pt.coords[1].is_finite());

        // ((z₁ − a z₂²)/z₂, z₁/z₂²) for hyperresonance (1, 2), n = 2.
        let d = row1([1, 2], 2, &[g(3)]);
        let z = [c(0.4, -0.3), c(0.8, 0.5)];
        let pt = d.eval(z).unwrap();
        let direct = [(z[0] - 3.0 * z[1] * z[1]) / z[1], z[0] / (z[1] * z[1])];
        assert!(
            (pt.coords[0] - direct[0]).norm() < 1e-12 && (pt.coords[1] - direct[1]).norm() < 1e-12
        );
    }

    #[test]
    fn admissibility_examples() {
        assert!(DevMap::radial(2).is_semiadmissible());
        assert!(DevMap::identity(2).is_admissible());
        let d = row1([1, 2], 2, &[g(1)]);
        assert!(d.is_semiadmissible());
        assert!(d.is_admissible());
        let dbl = DevMap::monomial(2, [0, 3], [1, -2]).with_polys(
            UniPoly::from_roots(&[g(1), g(1)]),
            UniPoly::one(),
            UniPoly::one(),
            [1, 2],
        );
        assert_eq!(dbl.semiadmissible_violation(), Some(SemiClause::DoubleRoot));
        // m₁ = m₂ = 1 with N = n = 1 has D = 0.
        let d = DevMap::monomial(1, [1, -1], [0, 0]).with_polys(
            UniPoly::one(),
            UniPoly::one(),
            UniPoly::from_roots(&[g(2)]),
            [1, 1],
        );
        assert!(d.is_semiadmissible());
        assert_eq!(d.admissible_violation(), Some(AdmClause::DZero));
        let d = DevMap::monomial(1, [1, 1], [0, 1]).with_polys(
            UniPoly::from_roots(&[g(2)]),
            UniPoly::one(),
            UniPoly::one(),
            [1, 1],
        );
        assert_eq!(
            d.admissible_violation(),
            Some(AdmClause::AWithNonconstantP1)
        );
        for d in [
            DevMap::radial(3),
            DevMap::identity(2),
            row1([1, 2], 2, &[g(1), g(2)]),
            d,
        ] {
            assert_eq!(d.is_semiadmissible(), d.swap_tilde().is_semiadmissible());
            assert_eq!(d.is_admissible(), d.swap_tilde().is_admissible());
            assert_eq!(d.swap_tilde().swap_tilde(), d);
        }
    }

    #[test]
    fn serde_round_trip() {
        let d = row1([1, 2], 2, &[g(1), GaussRat::from_quad(1, 3, -2, 1)])
            .with_frame([[g(1), g(1)], [g(0), g(1)]]);
        let text = serde_json::to_string(&d).unwrap();
        let back: DevMap = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
    }
}
