use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Above this modulus of `t₁` a point is reported in chart S.
pub const CHART_SWITCH_MODULUS: f64 = 1e6;
/// Relative size of the second homogeneous coordinate below which chart T is abandoned.
pub const CHART_SWITCH_DENOMINATOR: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chart {
    /// Coordinates `(t₁, t₂)`.
    T,
    /// Coordinates `(s₁, s₂) = (1/t₁, t₂/t₁ⁿ)`.
    S,
}

/// A point of O(n) in one of the two standard charts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffinePoint {
    pub chart: Chart,
    pub coords: [Complex64; 2],
}

/// A point of O(n) as a nonzero vector `v` over P¹ with fiber value `w`; the pair
/// `(c·v, cⁿ·w)` represents the same point for every `c ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomogPoint {
    pub v: [Complex64; 2],
    pub w: Complex64,
}

fn norm2(v: [Complex64; 2]) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

impl AffinePoint {
    pub fn t(t1: Complex64, t2: Complex64) -> Self {
        AffinePoint {
            chart: Chart::T,
            coords: [t1, t2],
        }
    }

    pub fn s(s1: Complex64, s2: Complex64) -> Self {
        AffinePoint {
            chart: Chart::S,
            coords: [s1, s2],
        }
    }

    pub fn homogeneous(&self) -> HomogPoint {
        let one = Complex64::new(1.0, 0.0);
        match self.chart {
            Chart::T => HomogPoint {
                v: [self.coords[0], one],
                w: self.coords[1],
            },
            Chart::S => HomogPoint {
                v: [one, self.coords[0]],
                w: self.coords[1],
            },
        }
    }

    /// Coordinates in the requested chart, when finite there.
    pub fn in_chart(&self, chart: Chart, n: u32) -> Option<[Complex64; 2]> {
        self.homogeneous().in_chart(chart, n)
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }
}

impl HomogPoint {
    /// Chart T unless `t₁` is huge or the denominator is negligible.
    pub fn to_affine(&self, n: u32) -> Option<AffinePoint> {
        let scale = norm2(self.v);
        if !(scale > 0.0) || !scale.is_finite() || !self.w.is_finite() {
            return None;
        }
        let [v1, v2] = self.v;
        let use_t = v2.norm() >= CHART_SWITCH_DENOMINATOR * scale
            && (v1 / v2).norm() <= CHART_SWITCH_MODULUS;
        if use_t {
            Some(AffinePoint::t(v1 / v2, self.w / v2.powu(n)))
        } else {
            Some(AffinePoint::s(v2 / v1, self.w / v1.powu(n)))
        }
    }

    pub fn in_chart(&self, chart: Chart, n: u32) -> Option<[Complex64; 2]> {
        let [v1, v2] = self.v;
        let (base, other) = match chart {
            Chart::T => (v2, v1),
            Chart::S => (v1, v2),
        };
        if base.norm() == 0.0 {
            return None;
        }
        let out = [other / base, self.w / base.powu(n)];
        out.iter().all(|c| c.is_finite()).then_some(out)
    }

    /// Chordal distance between the base points on P¹.
    pub fn chordal(&self, o: &HomogPoint) -> f64 {
        let cross = self.v[0] * o.v[1] - self.v[1] * o.v[0];
        cross.norm() / (norm2(self.v) * norm2(o.v))
    }
}

/// Distance between two points of O(n): chordal distance of the base points, and the
/// relative difference of fiber values in the chart where `a` has `|first coord| ≤ 1`.
pub fn point_residual(a: &HomogPoint, b: &HomogPoint, n: u32) -> f64 {
    let chart = if a.v[1].norm() >= a.v[0].norm() {
        Chart::T
    } else {
        Chart::S
    };
    let chordal = a.chordal(b);
    match (a.in_chart(chart, n), b.in_chart(chart, n)) {
        (Some(x), Some(y)) => {
            let fiber = (x[1] - y[1]).norm() / x[1].norm().max(1.0);
            chordal.max(fiber)
        }
        _ => f64::INFINITY,
    }
}
