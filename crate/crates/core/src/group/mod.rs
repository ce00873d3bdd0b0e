//! The group `G(n) = GL(2)/μₙ ⋉ Symⁿ(C²)*` and its action on O(n).

mod affine;
mod homog;
mod mat2;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;

use serde::{Deserialize, Serialize};

use crate::scalars::{
    same_basis, EigenBasis, ExponentParseError, GaussRat, Scalar, ScalarError, ScalarRecord,
};

pub use affine::{
    point_residual, AffinePoint, Chart, HomogPoint, CHART_SWITCH_DENOMINATOR, CHART_SWITCH_MODULUS,
};
pub use homog::HomogPoly;
pub use mat2::Mat2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("matrix is singular")]
    Singular,
    #[error("determinant is not a unit of the scalar ring")]
    DeterminantNotUnit,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point is not representable in either chart")]
    NotRepresentable,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Record(#[from] ExponentParseError),
}

/// Serialized `(g, p)`: matrix rows and the coefficients `a₀..aₙ` of `p`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupEltRecord {
    pub g: [[ScalarRecord; 2]; 2],
    pub p: Vec<ScalarRecord>,
}

/// Element `(g, p)` of `G(n)`, with `g` a representative modulo μₙ.
///
/// The law is `(g₀,p₀)(g₁,p₁) = (g₀g₁, p₀ + p₁∘g₀⁻¹)` where `(p∘h)(Z) = p(hZ)`.
#[derive(Clone)]
pub struct GroupElt {
    g: Mat2,
    p: HomogPoly,
}

impl GroupElt {
    pub fn new(g: Mat2, p: HomogPoly) -> Result<Self, GroupError> {
        if !same_basis(g.basis(), p.basis()) {
            return Err(ScalarError::BasisMismatch.into());
        }
        g.inverse()?;
        Ok(GroupElt { g, p })
    }

    pub fn identity(basis: &Arc<EigenBasis>, n: usize) -> Self {
        GroupElt {
            g: Mat2::identity(basis),
            p: HomogPoly::zero(basis, n),
        }
    }

    /// `(g, 0)`.
    pub fn linear(g: Mat2, n: usize) -> Result<Self, GroupError> {
        let p = HomogPoly::zero(g.basis(), n);
        GroupElt::new(g, p)
    }

    /// `(I, p)`.
    pub fn translation(p: HomogPoly) -> Self {
        GroupElt {
            g: Mat2::identity(p.basis()),
            p,
        }
    }

    pub fn g(&self) -> &Mat2 {
        &self.g
    }

    pub fn p(&self) -> &HomogPoly {
        &self.p
    }

    pub fn n(&self) -> usize {
        self.p.degree()
    }

    pub fn basis(&self) -> &Arc<EigenBasis> {
        self.g.basis()
    }

    pub fn compose(&self, y: &GroupElt) -> Result<GroupElt, GroupError> {
        if self.n() != y.n() {
            return Err(GroupError::DegreeMismatch(self.n(), y.n()));
        }
        if !same_basis(self.basis(), y.basis()) {
            return Err(ScalarError::BasisMismatch.into());
        }
        let g0_inv = self.g.inverse()?;
        Ok(GroupElt {
            g: self.g.mul(&y.g),
            p: self.p.add(&y.p.precompose(&g0_inv)),
        })
    }

    /// `(g⁻¹, −p∘g)`.
    pub fn inverse(&self) -> GroupElt {
        GroupElt {
            g: self
                .g
                .inverse()
                .expect("group elements have unit determinant"),
            p: self.p.precompose(&self.g).neg(),
        }
    }

    /// `c·x·c⁻¹`.
    pub fn conjugate_by(&self, c: &GroupElt) -> Result<GroupElt, GroupError> {
        c.compose(self)?.compose(&c.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.p.is_zero() && {
            let e = self.g.entries();
            e[0][1].is_zero()
                && e[1][0].is_zero()
                && e[0][0] == e[1][1]
                && e[0][0].is_root_of_unity(self.n() as u32)
        }
    }

    /// Scale `g` by `ζ`; the result is equal to `self` whenever `ζⁿ = 1`.
    pub fn rescaled(&self, zeta: &Scalar) -> GroupElt {
        GroupElt {
            g: self.g.scale(zeta),
            p: self.p.clone(),
        }
    }

    /// `(v, w) ↦ (gv, w + p(gv))` on homogeneous representatives.
    pub fn act_homog(&self, pt: &HomogPoint) -> HomogPoint {
        let m = self.g.numeric();
        let pc = self.p.numeric_coeffs();
        act_numeric(&m, &pc, pt)
    }

    pub fn act_affine(&self, pt: &AffinePoint) -> Result<AffinePoint, GroupError> {
        let out = self.act_homog(&pt.homogeneous());
        out.to_affine(self.n() as u32)
            .ok_or(GroupError::NotRepresentable)
    }

    /// Random element with small Gaussian-rational entries.
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        basis: &Arc<EigenBasis>,
        n: usize,
        bound: i64,
    ) -> GroupElt {
        loop {
            let mut entry = || Scalar::constant(basis, GaussRat::random_small(rng, bound));
            let m = [[entry(), entry()], [entry(), entry()]];
            if let Ok(g) = Mat2::new(m) {
                let coeffs = (0..=n)
                    .map(|_| Scalar::constant(basis, GaussRat::random_small(rng, bound)))
                    .collect();
                return GroupElt {
                    g,
                    p: HomogPoly::new(coeffs),
                };
            }
        }
    }
}

impl GroupElt {
    pub fn to_record(&self) -> GroupEltRecord {
        let e = self.g.entries();
        let rec = |s: &Scalar| ScalarRecord::from_scalar(s);
        GroupEltRecord {
            g: [
                [rec(&e[0][0]), rec(&e[0][1])],
                [rec(&e[1][0]), rec(&e[1][1])],
            ],
            p: self.p.coeffs().iter().map(rec).collect(),
        }
    }

    pub fn from_record(
        basis: &Arc<EigenBasis>,
        r: &GroupEltRecord,
    ) -> Result<GroupElt, GroupError> {
        let s = |x: &ScalarRecord| x.to_scalar(basis);
        let g = Mat2::new([
            [s(&r.g[0][0])?, s(&r.g[0][1])?],
            [s(&r.g[1][0])?, s(&r.g[1][1])?],
        ])?;
        if r.p.is_empty() {
            return Err(GroupError::DegreeMismatch(0, 1));
        }
        let p = HomogPoly::new(r.p.iter().map(s).collect::<Result<_, _>>()?);
        GroupElt::new(g, p)
    }
}

/// The action with numerically evaluated matrix and polynomial coefficients.
pub fn act_numeric(m: &[[Complex64; 2]; 2], p: &[Complex64], pt: &HomogPoint) -> HomogPoint {
    let v = [
        m[0][0] * pt.v[0] + m[0][1] * pt.v[1],
        m[1][0] * pt.v[0] + m[1][1] * pt.v[1],
    ];
    HomogPoint {
        v,
        w: pt.w + HomogPoly::eval_numeric(p, v),
    }
}

impl PartialEq for GroupElt {
    /// Equality in `G(n)`: equal polynomials and `g' = ζg` for an n-th root of unity `ζ`.
    fn eq(&self, other: &Self) -> bool {
        if self.n() != other.n() || self.p != other.p {
            return false;
        }
        let n = self.n() as u32;
        let (e, f) = (self.g.entries(), other.g.entries());
        let Some((i, j)) = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .find(|&(i, j)| !e[i][j].is_zero())
        else {
            return false;
        };
        let same_up_to = |zeta: &Scalar| self.g.scale(zeta) == other.g;
        if e[i][j].is_monomial() {
            match f[i][j].try_div(&e[i][j]) {
                Ok(zeta) => zeta.is_root_of_unity(n) && same_up_to(&zeta),
                Err(_) => false,
            }
        } else {
            Scalar::roots_of_unity(self.basis(), n)
                .iter()
                .any(same_up_to)
        }
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.p)
    }
}

impl fmt::Debug for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElt{self}")
    }
}
