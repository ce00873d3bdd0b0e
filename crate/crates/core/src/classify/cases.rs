//! Degree patterns and side conditions for admissible maps with a nonconstant polynomial,
//! derived from the A, B, C, D relations with symbolic `m₁, m₂, n` and degrees.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::symbolic::{SymPoly, Var};

/// Search box for feasibility: every unknown ranges over `1..=GRID`.
const GRID: i64 = 6;

/// An allowed exponent pair, with `n` kept symbolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExponentPair {
    MinusOneMinusN,
    ZeroOne,
    OneZero,
}

impl ExponentPair {
    fn symbolic(self) -> [SymPoly; 2] {
        let c = SymPoly::constant;
        match self {
            ExponentPair::MinusOneMinusN => [c(-1), SymPoly::var(Var::N).neg()],
            ExponentPair::ZeroOne => [c(0), c(1)],
            ExponentPair::OneZero => [c(1), c(0)],
        }
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExponentPair::MinusOneMinusN => "-1, -n",
            ExponentPair::ZeroOne => "0, 1",
            ExponentPair::OneZero => "1, 0",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegreeSpec {
    Zero,
    AtLeastOne,
    /// Forced rational value `num/den`.
    Fraction {
        num: SymPoly,
        den: SymPoly,
    },
}

impl fmt::Display for DegreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeSpec::Zero => write!(f, "0"),
            DegreeSpec::AtLeastOne => write!(f, ">= 1"),
            DegreeSpec::Fraction { num, den } => {
                let top = num.render_factored();
                if top.contains(' ') && !top.contains('(') {
                    write!(f, "({})/({})", top, den)
                } else {
                    write!(f, "{}/({})", top, den)
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Condition {
    Eq {
        lhs: SymPoly,
        rhs: SymPoly,
    },
    Ne {
        lhs: SymPoly,
        rhs: SymPoly,
    },
    /// A product of positive integers differs from 1.
    SomeExceedsOne {
        vars: Vec<Var>,
    },
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Eq { lhs, rhs } => write!(f, "{} = {}", lhs, rhs),
            Condition::Ne { lhs, rhs } => write!(f, "{} != {}", lhs, rhs),
            Condition::SomeExceedsOne { vars } => {
                let parts: Vec<_> = vars.iter().map(|v| format!("{} > 1", v.name())).collect();
                write!(f, "{}", parts.join(" or "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRow {
    pub first: ExponentPair,
    pub tilde: ExponentPair,
    pub feasible: bool,
    /// `deg P₁, deg Q₁, deg P₂`.
    pub degrees: [DegreeSpec; 3],
    pub conditions: Vec<Condition>,
    /// Some admissible map of this shape exists for the requested `(n, m₁, m₂)`.
    pub holds: bool,
}

/// `k₁,ℓ₁ | k̃₂,ℓ̃₂ | degrees | conditions`, with "impossible" for infeasible rows.
impl fmt::Display for CaseRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degs: Vec<_> = self.degrees.iter().map(|d| d.to_string()).collect();
        let conds: Vec<_> = self.conditions.iter().map(|c| c.to_string()).collect();
        let status = if self.feasible { "" } else { " [impossible]" };
        write!(
            f,
            "{} | {} | {} | {}{}",
            self.first,
            self.tilde,
            degs.join("; "),
            conds.join("; "),
            status
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub n: i64,
    pub m1: i64,
    pub m2: i64,
    pub rows: Vec<CaseRow>,
}

const DEGS: [Var; 3] = [Var::DegP1, Var::DegQ1, Var::DegP2];

/// The relations of one exponent combination.
struct Relations {
    a: SymPoly,
    b: SymPoly,
    c: SymPoly,
    d: SymPoly,
    d_tilde: SymPoly,
}

impl Relations {
    fn new(first: ExponentPair, tilde: ExponentPair) -> Self {
        let v = SymPoly::var;
        let [k1, l1] = first.symbolic();
        let [kt2, lt2] = tilde.symbolic();
        let (m1, m2, n) = (v(Var::M1), v(Var::M2), v(Var::N));
        let s1 = v(Var::DegP1).sub(&v(Var::DegQ1));
        let s2 = v(Var::DegP2).sub(&n.mul(&v(Var::DegQ1)));
        let k2 = kt2.add(&m2.mul(&s1));
        let l2 = lt2.add(&m2.mul(&s2));
        let a = m1.mul(&l2).add(&l1.mul(&m2));
        let b = m1.mul(&k2).add(&k1.mul(&m2));
        let c = n.mul(&b).sub(&a);
        let d = k1.mul(&l2).sub(&l1.mul(&k2));
        let d_tilde = d.add(&a.mul(&s1)).sub(&b.mul(&s2));
        Relations {
            a,
            b,
            c,
            d,
            d_tilde,
        }
    }

    /// Equations forced by the nonconstant polynomials in `support` (A for P₁, C for Q₁,
    /// B for P₂), with the other degrees set to zero.
    fn equations(&self, support: &[bool; 3]) -> Vec<SymPoly> {
        let forced = [&self.a, &self.c, &self.b];
        (0..3)
            .filter(|&i| support[i])
            .map(|i| restrict(forced[i], support))
            .collect()
    }

    fn nonvanishing(&self, support: &[bool; 3]) -> Vec<SymPoly> {
        vec![restrict(&self.d, support), restrict(&self.d_tilde, support)]
    }
}

fn restrict(p: &SymPoly, support: &[bool; 3]) -> SymPoly {
    DEGS.iter()
        .zip(support)
        .filter(|(_, s)| !**s)
        .fold(p.clone(), |acc, (v, _)| {
            acc.substitute(*v, &SymPoly::zero())
        })
}

/// Whether `eqs = 0` and `ne ≠ 0` at some grid point; `fixed` pins `(m₁, m₂, n)`.
fn solvable(eqs: &[SymPoly], ne: &[SymPoly], support: &[bool; 3], fixed: Option<[i64; 3]>) -> bool {
    let range = |on: bool| if on { 1..=GRID } else { 0..=0 };
    let outer: Vec<[i64; 3]> = match fixed {
        Some(f) => vec![f],
        None => (1..=GRID)
            .flat_map(|a| (1..=GRID).flat_map(move |b| (1..=GRID).map(move |c| [a, b, c])))
            .collect(),
    };
    for [m1, m2, n] in outer {
        for p in range(support[0]) {
            for q in range(support[1]) {
                for r in range(support[2]) {
                    let x = [m1, m2, n, p, q, r];
                    if eqs.iter().all(|e| e.eval(&x) == 0) && ne.iter().all(|e| e.eval(&x) != 0) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Orders the two sides of a relation: more degree unknowns first, then fewer unknowns,
/// then the earlier unknown.
fn order_sides(p: &SymPoly) -> (SymPoly, SymPoly) {
    let (pos, neg) = p.sides();
    let key = |s: &SymPoly| {
        let vars = s.vars();
        let degs = vars.iter().filter(|v| v.is_degree()).count();
        (std::cmp::Reverse(degs), vars.len(), vars.first().copied())
    };
    if key(&neg) < key(&pos) {
        (neg, pos)
    } else {
        (pos, neg)
    }
}

fn nonvanishing_condition(p: &SymPoly) -> Condition {
    let (lhs, rhs) = order_sides(p);
    let one = SymPoly::constant(1);
    for (a, b) in [(&lhs, &rhs), (&rhs, &lhs)] {
        if *b == one {
            if let Some(vars) = a.as_squarefree_product() {
                return Condition::SomeExceedsOne { vars };
            }
        }
    }
    Condition::Ne { lhs, rhs }
}

fn subsets() -> impl Iterator<Item = [bool; 3]> {
    (1u8..8).map(|s| [s & 1 != 0, s & 2 != 0, s & 4 != 0])
}

fn feasible_row(rel: &Relations, support: &[bool; 3]) -> Vec<Condition> {
    let mut eqs: Vec<SymPoly> = rel
        .equations(support)
        .iter()
        .map(SymPoly::primitive)
        .filter(|e| !e.is_zero())
        .collect();
    let mut ne: Vec<SymPoly> = rel.nonvanishing(support);
    let mut out = Vec::new();
    let mut i = 0;
    while i < eqs.len() {
        let (lhs, rhs) = order_sides(&eqs[i]);
        out.push(Condition::Eq {
            lhs: lhs.clone(),
            rhs: rhs.clone(),
        });
        // Eliminate a parameter expressed as a single unknown, keeping the earlier one.
        let target = match (lhs.as_var(), rhs.as_var()) {
            (Some(a), Some(b)) => Some(if a > b {
                (a, rhs.clone())
            } else {
                (b, lhs.clone())
            }),
            (Some(a), None) => Some((a, rhs.clone())),
            (None, Some(b)) => Some((b, lhs.clone())),
            _ => None,
        };
        if let Some((v, value)) = target {
            for e in eqs.iter_mut().skip(i + 1) {
                *e = e.substitute(v, &value).primitive();
            }
            for e in ne.iter_mut() {
                *e = e.substitute(v, &value);
            }
        }
        i += 1;
    }
    let mut seen: Vec<SymPoly> = Vec::new();
    for p in ne {
        let prim = p.primitive();
        let constant = prim.vars().is_empty();
        if constant || seen.contains(&prim) {
            continue;
        }
        out.push(nonvanishing_condition(&prim));
        seen.push(prim);
    }
    out
}

/// Solves each equation for a distinct single degree; returns the forced values when they
/// are all nonzero and make `D` vanish identically.
fn contradiction(rel: &Relations, support: &[bool; 3]) -> Option<([DegreeSpec; 3], Condition)> {
    let eqs = rel.equations(support);
    let mut values: Vec<(Var, SymPoly, SymPoly)> = Vec::new();
    for e in &eqs {
        let unknowns: Vec<Var> = DEGS.iter().copied().filter(|v| e.involves(*v)).collect();
        let [v] = unknowns[..] else { return None };
        let (a, b) = e.linear_in(v)?;
        if b.is_zero() || values.iter().any(|(w, ..)| *w == v) {
            return None;
        }
        let (num, den) = (b.neg(), a);
        let g = SymPoly::common_content(&[&num, &den]);
        let (mut num, mut den) = (num.div_monomial(&g), den.div_monomial(&g));
        if den.sides().0.is_zero() {
            num = num.neg();
            den = den.neg();
        }
        values.push((v, num, den));
    }
    if values.len() != support.iter().filter(|s| **s).count() {
        return None;
    }
    let d = restrict(&rel.d, support);
    let mut cleared = d.clone();
    for (v, ..) in &values {
        cleared = cleared.substitute(*v, &SymPoly::zero());
    }
    let dens = values
        .iter()
        .fold(SymPoly::constant(1), |acc, (_, _, den)| acc.mul(den));
    let mut total = cleared.mul(&dens);
    for (v, num, _) in &values {
        let (coef, _) = d.linear_in(*v)?;
        let others = values
            .iter()
            .filter(|(w, ..)| w != v)
            .fold(SymPoly::constant(1), |acc, (_, _, q)| acc.mul(q));
        total = total.add(&coef.mul(num).mul(&others));
    }
    if !total.is_zero() {
        return None;
    }
    let mut degrees = [DegreeSpec::Zero, DegreeSpec::Zero, DegreeSpec::Zero];
    for (v, num, den) in values {
        degrees[v.index() - 3] = DegreeSpec::Fraction { num, den };
    }
    Some((degrees, nonvanishing_condition(&d.primitive())))
}

/// Reproduces the six exponent combinations with `k₁ ≥ 0` and `(k̃₂, ℓ̃₂) ≠ (0, 0)`.
pub fn reproduce_case_table(n: i64, m1: i64, m2: i64) -> CaseReport {
    use ExponentPair::*;
    let mut rows = Vec::new();
    for first in [ZeroOne, OneZero] {
        for tilde in [MinusOneMinusN, ZeroOne, OneZero] {
            let rel = Relations::new(first, tilde);
            let feasible: Vec<[bool; 3]> = subsets()
                .filter(|s| solvable(&rel.equations(s), &rel.nonvanishing(s), s, None))
                .collect();
            if feasible.is_empty() {
                let found = subsets()
                    .filter(|s| s.iter().filter(|x| **x).count() == 2)
                    .find_map(|s| contradiction(&rel, &s));
                let (degrees, cond) = found.unwrap_or_else(|| {
                    (
                        [DegreeSpec::Zero, DegreeSpec::Zero, DegreeSpec::Zero],
                        Condition::Ne {
                            lhs: rel.d.clone(),
                            rhs: SymPoly::zero(),
                        },
                    )
                });
                rows.push(CaseRow {
                    first,
                    tilde,
                    feasible: false,
                    degrees,
                    conditions: vec![cond],
                    holds: false,
                });
                continue;
            }
            let mut degrees = [DegreeSpec::Zero, DegreeSpec::Zero, DegreeSpec::Zero];
            let mut conditions = Vec::new();
            let mut holds = false;
            for s in &feasible {
                for i in 0..3 {
                    if s[i] {
                        degrees[i] = DegreeSpec::AtLeastOne;
                    }
                }
                for c in feasible_row(&rel, s) {
                    if !conditions.contains(&c) {
                        conditions.push(c);
                    }
                }
                holds |= solvable(
                    &rel.equations(s),
                    &rel.nonvanishing(s),
                    s,
                    Some([m1, m2, n]),
                );
            }
            rows.push(CaseRow {
                first,
                tilde,
                feasible: true,
                degrees,
                conditions,
                holds,
            });
        }
    }
    CaseReport { n, m1, m2, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_case_relations() {
        let rel = Relations::new(ExponentPair::ZeroOne, ExponentPair::MinusOneMinusN);
        // With the sign conventions used here B = −m₁·D.
        assert_eq!(rel.b, SymPoly::var(Var::M1).mul(&rel.d).neg());
        let report = reproduce_case_table(1, 1, 1);
        assert_eq!(report.rows.len(), 6);
        assert_eq!(report.rows.iter().filter(|r| r.feasible).count(), 4);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(serde_json::from_str::<CaseReport>(&json).unwrap(), report);
    }
}
