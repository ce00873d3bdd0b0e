use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::scalars::{EigenBasis, Scalar};

use super::Mat2;

/// Binary form `p(Z₁,Z₂) = Σ aₖ Z₁ᵏ Z₂^{n−k}` of degree `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogPoly {
    coeffs: Vec<Scalar>,
}

/// Product of binary forms stored by ascending power of Z₁.
fn form_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let basis = a[0].basis();
    let mut out = vec![Scalar::zero(basis); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

fn form_powers(linear: Vec<Scalar>, n: usize) -> Vec<Vec<Scalar>> {
    let basis = linear[0].basis().clone();
    let mut pows = vec![vec![Scalar::one(&basis)]];
    for k in 1..=n {
        let next = form_mul(&pows[k - 1], &linear);
        pows.push(next);
    }
    pows
}

impl HomogPoly {
    /// Panics if `coeffs` is empty; the degree is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a binary form needs at least one coefficient"
        );
        HomogPoly { coeffs }
    }

    pub fn zero(basis: &Arc<EigenBasis>, n: usize) -> Self {
        HomogPoly::new(vec![Scalar::zero(basis); n + 1])
    }

    /// `c·Z₁ᵏZ₂^{n−k}`.
    pub fn monomial(n: usize, k: usize, c: Scalar) -> Self {
        assert!(k <= n);
        let mut p = HomogPoly::zero(c.basis(), n);
        p.coeffs[k] = c;
        p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    pub fn basis(&self) -> &Arc<EigenBasis> {
        self.coeffs[0].basis()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, o: &HomogPoly) -> HomogPoly {
        assert_eq!(self.degree(), o.degree(), "degree mismatch");
        HomogPoly::new(
            self.coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn neg(&self) -> HomogPoly {
        HomogPoly::new(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn sub(&self, o: &HomogPoly) -> HomogPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Scalar) -> HomogPoly {
        HomogPoly::new(self.coeffs.iter().map(|a| a * s).collect())
    }

    /// `Z ↦ p(hZ)`, expanded exactly.
    pub fn precompose(&self, h: &Mat2) -> HomogPoly {
        let n = self.degree();
        let e = h.entries();
        // (hZ)₁ = aZ₁ + bZ₂ and (hZ)₂ = cZ₁ + dZ₂, indexed by the power of Z₁.
        let first = form_powers(vec![e[0][1].clone(), e[0][0].clone()], n);
        let second = form_powers(vec![e[1][1].clone(), e[1][0].clone()], n);
        let mut out = HomogPoly::zero(self.basis(), n);
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = form_mul(&first[k], &second[n - k]);
            for (j, t) in term.iter().enumerate() {
                if !t.is_zero() {
                    out.coeffs[j] = &out.coeffs[j] + &(a * t);
                }
            }
        }
        out
    }

    /// Swap the roles of Z₁ and Z₂.
    pub fn reversed(&self) -> HomogPoly {
        HomogPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn numeric_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(Scalar::numeric_eval).collect()
    }

    pub fn eval_numeric(coeffs: &[Complex64], z: [Complex64; 2]) -> Complex64 {
        let n = coeffs.len() - 1;
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() != 0.0)
            .map(|(k, c)| c * z[0].powu(k as u32) * z[1].powu((n - k) as u32))
            .sum()
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut terms = Vec::new();
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut mono = Vec::new();
            if k > 0 {
                mono.push(if k == 1 {
                    "Z1".to_string()
                } else {
                    format!("Z1^{k}")
                });
            }
            if n - k > 0 {
                mono.push(if n - k == 1 {
                    "Z2".to_string()
                } else {
                    format!("Z2^{}", n - k)
                });
            }
            let coeff = if a.is_one() && !mono.is_empty() {
                String::new()
            } else if a.is_monomial() {
                format!("{a}·")
            } else {
                format!("({a})·")
            };
            let coeff = if mono.is_empty() {
                coeff.trim_end_matches('·').to_string()
            } else {
                coeff
            };
            terms.push(format!("{coeff}{}", mono.join("·")));
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogPoly({self})")
    }
}
