use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::scalars::GaussRat;

/// Polynomial in `u` over Q(i), coefficients from the constant term upward.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(from = "Vec<GaussRat>", into = "Vec<GaussRat>")]
pub struct UniPoly {
    coeffs: Vec<GaussRat>,
}

impl From<Vec<GaussRat>> for UniPoly {
    fn from(c: Vec<GaussRat>) -> Self {
        UniPoly::new(c)
    }
}

impl From<UniPoly> for Vec<GaussRat> {
    fn from(p: UniPoly) -> Self {
        p.coeffs
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        UniPoly::new(vec![c])
    }

    /// `Π (u − aⱼ)`.
    pub fn from_roots(roots: &[GaussRat]) -> Self {
        roots.iter().fold(UniPoly::one(), |acc, a| {
            acc.mul(&UniPoly::new(vec![-a, GaussRat::one()]))
        })
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> GaussRat {
        self.coeffs.get(i).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> GaussRat {
        self.coeffs.last().cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..len).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.scale(&GaussRat::from_int(-1)))
    }

    pub fn scale(&self, c: &GaussRat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        (0..e).fold(UniPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &GaussRat::from_int(i as i64))
                .collect(),
        )
    }

    /// `u·P′(u)`.
    pub fn euler(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * &GaussRat::from_int(i as i64))
                .collect(),
        )
    }

    /// `uᵈ·P(1/u)` for `d = deg P`; the roots become reciprocals.
    pub fn reversed(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let lead_inv = d.leading().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        if rem.len() < d.coeffs.len() {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![GaussRat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * dc);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        match a.leading().inv() {
            Some(l) => a.scale(&l),
            None => a,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    pub fn is_coprime(&self, o: &UniPoly) -> bool {
        self.gcd(o).is_constant()
    }

    pub fn has_root_at_zero(&self) -> bool {
        self.coeff(0).is_zero()
    }

    pub fn eval(&self, u: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * u + c.to_complex())
    }

    /// Complex roots by simultaneous Weierstrass iteration.
    pub fn roots_numeric(&self) -> Vec<Complex64> {
        let d = self.degree();
        if d == 0 {
            return Vec::new();
        }
        let lead = self.leading().to_complex();
        let monic = |u: Complex64| self.eval(u) / lead;
        let seed = Complex64::new(0.4, 0.9);
        let mut z: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32 + 1)).collect();
        for _ in 0..500 {
            let mut delta = 0.0f64;
            for i in 0..d {
                let denom: Complex64 = (0..d).filter(|&j| j != i).map(|j| z[i] - z[j]).product();
                let step = monic(z[i]) / denom;
                z[i] -= step;
                delta = delta.max(step.norm());
            }
            if delta < 1e-15 {
                break;
            }
        }
        z
    }

    /// Homogenization of degree `d ≥ deg`: `Σ cⱼ XʲY^{d−j}`.
    pub fn eval_homog(&self, d: usize, x: Complex64, y: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c.to_complex() * x.powu(j as u32) * y.powu((d - j) as u32))
            .sum()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}·u"),
                _ => format!("{c}·u^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
