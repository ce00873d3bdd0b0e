use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::rat::Rat;

/// Exact Gaussian rational `re + i·im`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(Rat::int(0), Rat::int(0))
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn i() -> Self {
        GaussRat::new(Rat::int(0), Rat::int(1))
    }

    pub fn from_int(v: i64) -> Self {
        GaussRat::new(Rat::int(v), Rat::int(0))
    }

    /// `re_num/re_den + i·im_num/im_den`. Panics on a zero denominator.
    pub fn from_quad(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        assert!(re_den != 0 && im_den != 0, "zero denominator");
        GaussRat::new(Rat::new(re_num, re_den), Rat::new(im_num, im_den))
    }

    pub fn real(num: i64, den: i64) -> Self {
        GaussRat::from_quad(num, den, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat::new(&self.re / &n, &(-&self.im) / &n))
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = GaussRat::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// The roots of unity contained in Q(i), i.e. `{1, i, -1, -i}`, of order dividing `n`.
    pub fn roots_of_unity(n: u32) -> Vec<GaussRat> {
        let all = [
            (GaussRat::one(), 1u32),
            (GaussRat::from_int(-1), 2),
            (GaussRat::i(), 4),
            (-GaussRat::i(), 4),
        ];
        all.into_iter()
            .filter(|(_, ord)| n.is_multiple_of(*ord))
            .map(|(z, _)| z)
            .collect()
    }

    /// All exact `d`-th roots of `self` lying in Q(i).
    ///
    /// Candidates come from the floating-point roots by rational reconstruction and are
    /// then confirmed exactly, so the result is sound but may miss roots with very large
    /// heights.
    pub fn exact_roots(&self, d: u32) -> Vec<GaussRat> {
        assert!(d >= 1);
        if self.is_zero() {
            return vec![GaussRat::zero()];
        }
        if d == 1 {
            return vec![self.clone()];
        }
        let z = self.to_complex();
        let (r, theta) = z.to_polar();
        let mut out: Vec<GaussRat> = Vec::new();
        for j in 0..d {
            let root = Complex64::from_polar(
                r.powf(1.0 / d as f64),
                (theta + 2.0 * std::f64::consts::PI * j as f64) / d as f64,
            );
            let (Some(re), Some(im)) = (reconstruct(root.re), reconstruct(root.im)) else {
                continue;
            };
            let cand = GaussRat::new(Rat::from_big(re), Rat::from_big(im));
            if cand.pow(d as i64).as_ref() == Some(self) && !out.contains(&cand) {
                out.push(cand);
            }
        }
        out.sort();
        out
    }

    /// Small random value with numerators and denominators bounded by `bound`.
    pub fn random_small<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self {
        let b = bound.max(1);
        GaussRat::from_quad(
            rng.gen_range(-b..=b),
            rng.gen_range(1..=b),
            rng.gen_range(-b..=b),
            rng.gen_range(1..=b),
        )
    }

    /// Random nonzero value, see [`GaussRat::random_small`].
    pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self {
        loop {
            let z = GaussRat::random_small(rng, bound);
            if !z.is_zero() {
                return z;
            }
        }
    }
}

/// Best rational approximation with denominator at most 10⁶, accepted only when it
/// reproduces `x` to near machine precision.
fn reconstruct(x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    const MAX_DEN: i128 = 1_000_000;
    let (mut h0, mut h1): (i128, i128) = (0, 1);
    let (mut k0, mut k1): (i128, i128) = (1, 0);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > MAX_DEN {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = v - a;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 {
        return None;
    }
    let approx = h1 as f64 / k1 as f64;
    if (approx - x).abs() > 1e-9 * x.abs().max(1.0) {
        return None;
    }
    Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)))
}

impl Ord for GaussRat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for GaussRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        &self + &o
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        &self - &o
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        &self * &o
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

impl From<i64> for GaussRat {
    fn from(v: i64) -> Self {
        GaussRat::from_int(v)
    }
}

fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rat(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(
                    f,
                    "({} {} {}i)",
                    fmt_rat(&self.re),
                    sign,
                    fmt_rat(&self.im.abs())
                )
            }
        }
    }
}

/// JSON integer when it fits in an `i64`, decimal string otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn from_big(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(s) => IntRepr::Small(s),
            None => IntRepr::Big(v.to_string()),
        }
    }

    fn to_big(&self) -> Result<BigInt, String> {
        match self {
            IntRepr::Small(v) => Ok(BigInt::from(*v)),
            IntRepr::Big(s) => s.parse().map_err(|_| format!("invalid integer {s:?}")),
        }
    }
}

impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [
            IntRepr::from_big(&self.re.numer()),
            IntRepr::from_big(&self.re.denom()),
            IntRepr::from_big(&self.im.numer()),
            IntRepr::from_big(&self.im.denom()),
        ]
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let quad = <[IntRepr; 4]>::deserialize(d)?;
        let mut v = Vec::with_capacity(4);
        for q in &quad {
            v.push(q.to_big().map_err(de::Error::custom)?);
        }
        if v[1].is_zero() || v[3].is_zero() {
            return Err(de::Error::custom("zero denominator in Gaussian rational"));
        }
        Ok(GaussRat::new(
            Rat::from_big(BigRational::new(v[0].clone(), v[1].clone())),
            Rat::from_big(BigRational::new(v[2].clone(), v[3].clone())),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_powers() {
        let z = GaussRat::from_quad(1, 2, -3, 4);
        assert!((&z * &z.inv().unwrap()).is_one());
        assert_eq!(GaussRat::i().pow(4).unwrap(), GaussRat::one());
        assert_eq!(z.pow(-2).unwrap(), z.inv().unwrap().pow(2).unwrap());
        assert!(GaussRat::zero().inv().is_none());
    }

    #[test]
    fn exact_roots_finds_gaussian_roots() {
        let z = GaussRat::from_quad(3, 2, 2, 1);
        let sq = &z * &z;
        let roots = sq.exact_roots(2);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&z) && roots.contains(&-z));
        assert_eq!(GaussRat::one().exact_roots(4).len(), 4);
        assert!(GaussRat::from_int(2).exact_roots(2).is_empty());
    }

    #[test]
    fn json_quadruple() {
        let z = GaussRat::from_quad(-1, 3, 5, 7);
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, "[-1,3,5,7]");
        let back: GaussRat = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<GaussRat>("[1,0,0,1]").is_err());
    }

    #[test]
    fn display() {
        assert_eq!(GaussRat::from_quad(1, 2, -1, 1).to_string(), "(1/2 - 1i)");
        assert_eq!(GaussRat::i().to_string(), "1i");
    }
}
