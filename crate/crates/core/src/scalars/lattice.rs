use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Rational exponent.
pub type Q = Ratio<i64>;

/// Exponent pair `(e₁, e₂)` of a monomial `λ₁^{e₁} λ₂^{e₂}`.
pub type Exponent = [Q; 2];

pub fn q(v: i64) -> Q {
    Q::from_integer(v)
}

/// Subgroup of Z² kept in Hermite normal form.
///
/// * rank 1: a single generator whose second entry is positive, or whose first entry is
///   positive when the second vanishes;
/// * rank 2: rows `(a, b)` and `(0, d)` with `a, d > 0` and `0 ≤ b < d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelationLattice {
    basis: Vec<[i64; 2]>,
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

impl RelationLattice {
    pub fn trivial() -> Self {
        RelationLattice { basis: Vec::new() }
    }

    /// The lattice spanned by `gens`.
    pub fn from_generators(gens: &[[i64; 2]]) -> Self {
        // Column 0: fold everything into one pivot row by extended gcd.
        let mut pivot: Option<[i64; 2]> = None;
        let mut rest: Vec<[i64; 2]> = Vec::new();
        for &v in gens {
            match pivot {
                _ if v[0] == 0 => rest.push(v),
                None => pivot = Some(v),
                Some(p) => {
                    let (g, x, y) = ext_gcd(p[0], v[0]);
                    let new_p = [g, x * p[1] + y * v[1]];
                    // The complementary combination has first entry zero.
                    let (pa, va) = (p[0] / g, v[0] / g);
                    rest.push([0, va * p[1] - pa * v[1]]);
                    pivot = Some(new_p);
                }
            }
        }
        let d = rest.iter().fold(0i64, |acc, v| acc.gcd(&v[1]));
        let mut basis = Vec::new();
        match pivot {
            Some(mut p) => {
                if p[0] < 0 {
                    p = [-p[0], -p[1]];
                }
                if d != 0 {
                    p[1] = p[1].mod_floor(&d);
                    basis.push(p);
                    basis.push([0, d]);
                } else {
                    if p[1] < 0 || (p[1] == 0 && p[0] < 0) {
                        p = [-p[0], -p[1]];
                    }
                    basis.push(p);
                }
            }
            None => {
                if d != 0 {
                    basis.push([0, d]);
                }
            }
        }
        RelationLattice { basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[[i64; 2]] {
        &self.basis
    }

    /// Canonical representative of `e` modulo the lattice.
    pub fn reduce(&self, e: Exponent) -> Exponent {
        let mut e = e;
        match self.basis.as_slice() {
            [] => {}
            [w] => {
                let i = if w[1] != 0 { 1 } else { 0 };
                let t = (e[i] / q(w[i])).floor();
                e[0] -= t * q(w[0]);
                e[1] -= t * q(w[1]);
            }
            [r1, r2] => {
                let t = (e[0] / q(r1[0])).floor();
                e[0] -= t * q(r1[0]);
                e[1] -= t * q(r1[1]);
                let t = (e[1] / q(r2[1])).floor();
                e[1] -= t * q(r2[1]);
            }
            _ => unreachable!("lattice rank exceeds 2"),
        }
        e
    }

    pub fn contains(&self, v: [i64; 2]) -> bool {
        let r = self.reduce([q(v[0]), q(v[1])]);
        r[0].is_zero() && r[1].is_zero()
    }

    /// Smallest `t ≥ 1` with `t·e` in the lattice.
    pub fn torsion_order(&self, e: Exponent) -> Option<i64> {
        match self.basis.as_slice() {
            [] => (e[0].is_zero() && e[1].is_zero()).then_some(1),
            [w] => {
                if e[0] * q(w[1]) != e[1] * q(w[0]) {
                    return None;
                }
                let i = if w[1] != 0 { 1 } else { 0 };
                Some(*(e[i] / q(w[i])).denom())
            }
            [r1, r2] => {
                let s1 = e[0] / q(r1[0]);
                let s2 = (e[1] - s1 * q(r1[1])) / q(r2[1]);
                Some(s1.denom().lcm(s2.denom()))
            }
            _ => unreachable!(),
        }
    }

    /// Representatives of the exponents `e` with `d·e` in the lattice, modulo the lattice.
    pub fn torsion_exponents(&self, d: i64) -> Vec<Exponent> {
        assert!(d >= 1);
        let mut out: Vec<Exponent> = Vec::new();
        let zero = [q(0), q(0)];
        let mut push = |e: Exponent| {
            let r = self.reduce(e);
            if !out.contains(&r) {
                out.push(r);
            }
        };
        match self.basis.as_slice() {
            [] => push(zero),
            [w] => {
                for t in 0..d {
                    push([Q::new(t * w[0], d), Q::new(t * w[1], d)]);
                }
            }
            [r1, r2] => {
                for t1 in 0..d {
                    for t2 in 0..d {
                        push([
                            Q::new(t1 * r1[0] + t2 * r2[0], d),
                            Q::new(t1 * r1[1] + t2 * r2[1], d),
                        ]);
                    }
                }
            }
            _ => unreachable!(),
        }
        out.sort();
        out
    }
}
