use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::basis::EigenBasis;
use super::gaussrat::GaussRat;
use super::lattice::{q, Exponent, Q};
use super::ScalarError;

/// Element of the group ring Q(i)[λ₁^Q, λ₂^Q] modulo the relation lattice.
///
/// Most values are single monomials `c·λ₁^{e₁}λ₂^{e₂}`; sums appear when the group law
/// or a conjugation adds monomials with different exponents.
#[derive(Clone)]
pub struct Scalar {
    basis: Arc<EigenBasis>,
    terms: BTreeMap<Exponent, GaussRat>,
}

pub(crate) fn same_basis(a: &Arc<EigenBasis>, b: &Arc<EigenBasis>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Scalar {
    pub fn zero(basis: &Arc<EigenBasis>) -> Self {
        Scalar {
            basis: basis.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: &Arc<EigenBasis>) -> Self {
        Scalar::constant(basis, GaussRat::one())
    }

    pub fn constant(basis: &Arc<EigenBasis>, c: GaussRat) -> Self {
        Scalar::monomial(basis, c, [q(0), q(0)])
    }

    pub fn int(basis: &Arc<EigenBasis>, v: i64) -> Self {
        Scalar::constant(basis, GaussRat::from_int(v))
    }

    /// `c·λ₁^{e₁}λ₂^{e₂}`.
    pub fn monomial(basis: &Arc<EigenBasis>, c: GaussRat, e: Exponent) -> Self {
        let mut s = Scalar::zero(basis);
        s.add_term(e, c);
        s
    }

    /// The generator λ₁ (`index` 0) or λ₂ (`index` 1) raised to a rational power.
    pub fn generator_pow(basis: &Arc<EigenBasis>, index: usize, e: Q) -> Self {
        let mut exp = [q(0), q(0)];
        exp[index] = e;
        Scalar::monomial(basis, GaussRat::one(), exp)
    }

    pub fn generator(basis: &Arc<EigenBasis>, index: usize) -> Self {
        Scalar::generator_pow(basis, index, q(1))
    }

    /// `λ₁^{e₁}λ₂^{e₂}` with integer exponents.
    pub fn power_product(basis: &Arc<EigenBasis>, e: [i64; 2]) -> Self {
        Scalar::monomial(basis, GaussRat::one(), [q(e[0]), q(e[1])])
    }

    fn add_term(&mut self, e: Exponent, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        let key = self.basis.lattice().reduce(e);
        let entry = self.terms.entry(key).or_insert_with(GaussRat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn basis(&self) -> &Arc<EigenBasis> {
        &self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &GaussRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial()
            .is_some_and(|(c, e)| c.is_one() && e[0].is_zero() && e[1].is_zero())
    }

    /// Coefficient and canonical exponent when the value is a single nonzero monomial.
    pub fn as_monomial(&self) -> Option<(&GaussRat, Exponent)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c, *e))
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The Gaussian-rational value when the scalar has no formal part.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        match self.as_monomial() {
            Some((c, e)) if e[0].is_zero() && e[1].is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), ScalarError> {
        if same_basis(&self.basis, &other.basis) {
            Ok(())
        } else {
            Err(ScalarError::BasisMismatch)
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        let mut out = Scalar::zero(&self.basis);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1]], c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussRat) -> Scalar {
        let mut out = Scalar::zero(&self.basis);
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    /// Inverse; only monomials are units of the ring.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        let (c, e) = self.as_monomial().ok_or(ScalarError::NotInvertible)?;
        let ci = c.inv().ok_or(ScalarError::NotInvertible)?;
        Ok(Scalar::monomial(&self.basis, ci, [-e[0], -e[1]]))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one(&self.basis);
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// True iff `selfⁿ = 1` exactly.
    pub fn is_root_of_unity(&self, n: u32) -> bool {
        assert!(n >= 1);
        let Some((c, e)) = self.as_monomial() else {
            return false;
        };
        let nn = q(n as i64);
        let reduced = self.basis.lattice().reduce([e[0] * nn, e[1] * nn]);
        reduced[0].is_zero() && reduced[1].is_zero() && c.pow(n as i64).is_some_and(|p| p.is_one())
    }

    /// Multiplicative order when the value is a root of unity.
    pub fn torsion_order(&self) -> Option<u32> {
        let (c, e) = self.as_monomial()?;
        let coeff_order = [1u32, 2, 4]
            .into_iter()
            .find(|&k| c.pow(k as i64).is_some_and(|p| p.is_one()))?;
        let exp_order = self.basis.lattice().torsion_order(e)?;
        Some(num_integer::lcm(coeff_order, exp_order as u32))
    }

    /// All `d`-th roots of unity of the ring.
    pub fn roots_of_unity(basis: &Arc<EigenBasis>, d: u32) -> Vec<Scalar> {
        let mut out = Vec::new();
        for c in GaussRat::roots_of_unity(d) {
            for e in basis.lattice().torsion_exponents(d as i64) {
                let s = Scalar::monomial(basis, c.clone(), e);
                if s.is_root_of_unity(d) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// All exact `d`-th roots of a monomial, sorted canonically.
    pub fn roots(&self, d: u32) -> Vec<Scalar> {
        let Some((c, e)) = self.as_monomial() else {
            return Vec::new();
        };
        let dq = q(d as i64);
        let base_exp = [e[0] / dq, e[1] / dq];
        let mut out: Vec<Scalar> = Vec::new();
        for cr in c.exact_roots(d) {
            let r0 = Scalar::monomial(&self.basis, cr, base_exp);
            for zeta in Scalar::roots_of_unity(&self.basis, d) {
                let r = &r0 * &zeta;
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        }
        out.sort();
        out
    }

    /// Numeric value using principal branches of the witnesses.
    pub fn numeric_eval(&self) -> Complex64 {
        let w = self.basis.witness();
        let logs = [w[0].ln(), w[1].ln()];
        self.terms
            .iter()
            .map(|(e, c)| {
                let x = logs[0] * e[0].to_f64().unwrap() + logs[1] * e[1].to_f64().unwrap();
                c.to_complex() * x.exp()
            })
            .sum()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        same_basis(&self.basis, &other.basis) && self.terms == other.terms
    }
}

impl Eq for Scalar {}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.try_add(o).expect("scalar basis mismatch")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.try_add(&-o).expect("scalar basis mismatch")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.try_mul(o).expect("scalar basis mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scale(&GaussRat::from_int(-1))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

fn fmt_exp(e: &Q) -> String {
    if e.is_integer() {
        e.numer().to_string()
    } else {
        format!("({}/{})", e.numer(), e.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.basis.names();
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = Vec::new();
            if !c.is_one() || (e[0].is_zero() && e[1].is_zero()) {
                parts.push(c.to_string());
            }
            for i in 0..2 {
                if e[i].is_one() {
                    parts.push(names[i].clone());
                } else if !e[i].is_zero() {
                    parts.push(format!("{}^{}", names[i], fmt_exp(&e[i])));
                }
            }
            write!(f, "{}", parts.join("·"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}
