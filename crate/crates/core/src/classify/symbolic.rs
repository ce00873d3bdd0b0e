//! Integer polynomials in the case-table unknowns `m₁, m₂, n, deg P₁, deg Q₁, deg P₂`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub const VARS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Var {
    M1,
    M2,
    N,
    DegP1,
    DegQ1,
    DegP2,
}

impl Var {
    pub const ALL: [Var; VARS] = [Var::M1, Var::M2, Var::N, Var::DegP1, Var::DegQ1, Var::DegP2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_degree(self) -> bool {
        self.index() >= 3
    }

    pub fn name(self) -> &'static str {
        ["m1", "m2", "n", "deg P1", "deg Q1", "deg P2"][self.index()]
    }
}

type Exps = [u32; VARS];

/// Sparse polynomial with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<(Exps, i64)>", into = "Vec<(Exps, i64)>")]
pub struct SymPoly {
    terms: BTreeMap<Exps, i64>,
}

impl From<Vec<(Exps, i64)>> for SymPoly {
    fn from(v: Vec<(Exps, i64)>) -> Self {
        let mut p = SymPoly::zero();
        for (e, c) in v {
            p.add_term(e, c);
        }
        p
    }
}

impl From<SymPoly> for Vec<(Exps, i64)> {
    fn from(p: SymPoly) -> Self {
        p.terms.into_iter().collect()
    }
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: i64) -> Self {
        SymPoly::zero().with_term([0; VARS], c)
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; VARS];
        e[v.index()] = 1;
        SymPoly::zero().with_term(e, 1)
    }

    fn with_term(mut self, e: Exps, c: i64) -> Self {
        self.add_term(e, c);
        self
    }

    fn add_term(&mut self, e: Exps, c: i64) {
        let v = self.terms.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &i64)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, *c);
        }
        out
    }

    pub fn neg(&self) -> SymPoly {
        self.scale(-1)
    }

    pub fn sub(&self, o: &SymPoly) -> SymPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> SymPoly {
        let mut out = SymPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c * k);
        }
        out
    }

    pub fn mul(&self, o: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (e, c) in &self.terms {
            for (f, d) in &o.terms {
                let mut g = *e;
                for i in 0..VARS {
                    g[i] += f[i];
                }
                out.add_term(g, c * d);
            }
        }
        out
    }

    fn pow(&self, k: u32) -> SymPoly {
        (0..k).fold(SymPoly::constant(1), |acc, _| acc.mul(self))
    }

    /// Replace `v` by `value`.
    pub fn substitute(&self, v: Var, value: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let k = rest[v.index()];
            rest[v.index()] = 0;
            let t = SymPoly::zero().with_term(rest, *c).mul(&value.pow(k));
            out = out.add(&t);
        }
        out
    }

    pub fn eval(&self, x: &[i64; VARS]) -> i64 {
        self.terms
            .iter()
            .map(|(e, c)| c * e.iter().zip(x).map(|(&k, &v)| v.pow(k)).product::<i64>())
            .sum()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.index()] > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.involves(v)).collect()
    }

    /// Degree in `v`.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    /// `(a, b)` with `self = a·v + b`, when `self` is linear in `v`.
    pub fn linear_in(&self, v: Var) -> Option<(SymPoly, SymPoly)> {
        if self.degree_in(v) > 1 {
            return None;
        }
        let (mut a, mut b) = (SymPoly::zero(), SymPoly::zero());
        for (e, c) in &self.terms {
            let mut f = *e;
            if f[v.index()] == 1 {
                f[v.index()] = 0;
                a.add_term(f, *c);
            } else {
                b.add_term(f, *c);
            }
        }
        Some((a, b))
    }

    /// The largest monomial with positive integer coefficient dividing every term.
    fn monomial_content(&self) -> (i64, Exps) {
        let mut g = 0i64;
        let mut e = [u32::MAX; VARS];
        for (f, c) in &self.terms {
            g = g.gcd(c);
            for i in 0..VARS {
                e[i] = e[i].min(f[i]);
            }
        }
        if self.is_zero() {
            return (1, [0; VARS]);
        }
        (g, e)
    }

    fn divide_monomial(&self, g: i64, e: &Exps) -> SymPoly {
        let mut out = SymPoly::zero();
        for (f, c) in &self.terms {
            let mut h = *f;
            for i in 0..VARS {
                h[i] -= e[i];
            }
            out.add_term(h, c / g);
        }
        out
    }

    /// Divide out the monomial content and fix the sign so the leading term is positive.
    /// Equal up to sign and positive monomial factors iff the results are equal.
    pub fn primitive(&self) -> SymPoly {
        let (g, e) = self.monomial_content();
        let p = self.divide_monomial(g, &e);
        match p.terms.iter().next_back() {
            Some((_, c)) if *c < 0 => p.neg(),
            _ => p,
        }
    }

    /// Largest positive monomial dividing every term of every polynomial in `ps`.
    pub fn common_content(ps: &[&SymPoly]) -> SymPoly {
        let mut g = 0i64;
        let mut e = [u32::MAX; VARS];
        for p in ps {
            for (f, c) in &p.terms {
                g = g.gcd(c);
                for i in 0..VARS {
                    e[i] = e[i].min(f[i]);
                }
            }
        }
        if g == 0 {
            return SymPoly::constant(1);
        }
        SymPoly::zero().with_term(e, g)
    }

    /// Exact division by a positive monomial.
    pub fn div_monomial(&self, m: &SymPoly) -> SymPoly {
        let (e, g) = m.terms.iter().next().expect("nonzero monomial");
        self.divide_monomial(*g, e)
    }

    /// `(content, rest)` with `self = content·rest` and `content` a positive monomial.
    pub fn split_content(&self) -> (SymPoly, SymPoly) {
        let (g, e) = self.monomial_content();
        (SymPoly::zero().with_term(e, g), self.divide_monomial(g, &e))
    }

    /// `(positive part, negated negative part)`.
    pub fn sides(&self) -> (SymPoly, SymPoly) {
        let (mut pos, mut neg) = (SymPoly::zero(), SymPoly::zero());
        for (e, c) in &self.terms {
            if *c > 0 {
                pos.add_term(*e, *c);
            } else {
                neg.add_term(*e, -c);
            }
        }
        (pos, neg)
    }

    /// The variable when `self` is exactly one variable.
    pub fn as_var(&self) -> Option<Var> {
        let (e, c) = self.terms.iter().next()?;
        if self.terms.len() != 1 || *c != 1 || e.iter().sum::<u32>() != 1 {
            return None;
        }
        Var::ALL.into_iter().find(|v| e[v.index()] == 1)
    }

    /// The variables of a monomial with coefficient 1 and all exponents 1.
    pub fn as_squarefree_product(&self) -> Option<Vec<Var>> {
        let (e, c) = self.terms.iter().next()?;
        if self.terms.len() != 1 || *c != 1 || e.iter().any(|&k| k > 1) {
            return None;
        }
        Some(Var::ALL.into_iter().filter(|v| e[v.index()] == 1).collect())
    }

    fn fmt_monomial(e: &Exps) -> String {
        let mut parts = Vec::new();
        for v in [Var::N, Var::M1, Var::M2, Var::DegP1, Var::DegQ1, Var::DegP2] {
            match e[v.index()] {
                0 => {}
                1 => parts.push(v.name().to_string()),
                k => parts.push(format!("{}^{}", v.name(), k)),
            }
        }
        parts.join(" ")
    }

    /// Rendering with a factored-out monomial content, parenthesizing sums.
    pub fn render_factored(&self) -> String {
        let (content, rest) = self.split_content();
        if rest.terms.len() <= 1 {
            return self.to_string();
        }
        if content == SymPoly::constant(1) {
            return rest.to_string();
        }
        format!("{} ({})", content, rest)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Ascending by variable index so that `m1 + m2` reads naturally.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| std::cmp::Reverse(**e));
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let mono = SymPoly::fmt_monomial(e);
            let mag = c.abs();
            let body = match (mono.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => mono,
                (false, _) => format!("{} {}", mag, mono),
            };
            match (i, *c < 0) {
                (0, false) => write!(f, "{}", body)?,
                (0, true) => write!(f, "-{}", body)?,
                (_, false) => write!(f, " + {}", body)?,
                (_, true) => write!(f, " - {}", body)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> SymPoly {
        SymPoly::var(x)
    }

    #[test]
    fn arithmetic_and_rendering() {
        let p = v(Var::M1).add(&v(Var::M2));
        assert_eq!(p.to_string(), "m1 + m2");
        let q = v(Var::M1).mul(&v(Var::M2)).mul(&v(Var::N));
        assert_eq!(q.to_string(), "n m1 m2");
        let r = p.mul(&v(Var::N)).scale(-3);
        assert_eq!(r.primitive(), p);
        assert_eq!(r.neg().render_factored(), "3 n (m1 + m2)");
        let s = v(Var::M2).sub(&v(Var::N).mul(&v(Var::M1)));
        assert_eq!(
            s.substitute(Var::M2, &v(Var::N).mul(&v(Var::M1))),
            SymPoly::zero()
        );
        assert_eq!(s.eval(&[1, 2, 2, 0, 0, 0]), 0);
        let (a, b) = q.add(&SymPoly::constant(4)).linear_in(Var::N).unwrap();
        assert_eq!(a, v(Var::M1).mul(&v(Var::M2)));
        assert_eq!(b, SymPoly::constant(4));
        assert_eq!(v(Var::DegQ1).as_var(), Some(Var::DegQ1));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<SymPoly>(&json).unwrap(), r);
    }
}
