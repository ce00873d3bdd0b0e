use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::scalars::{EigenBasis, GaussRat, Scalar};

use super::GroupError;

/// Invertible 2×2 matrix over [`Scalar`], with the determinant cached.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat2 {
    entries: [[Scalar; 2]; 2],
    det: Scalar,
}

impl Mat2 {
    pub fn new(entries: [[Scalar; 2]; 2]) -> Result<Self, GroupError> {
        let det = &(&entries[0][0] * &entries[1][1]) - &(&entries[0][1] * &entries[1][0]);
        if det.is_zero() {
            return Err(GroupError::Singular);
        }
        Ok(Mat2 { entries, det })
    }

    pub fn from_gauss(basis: &Arc<EigenBasis>, m: [[GaussRat; 2]; 2]) -> Result<Self, GroupError> {
        let [[a, b], [c, d]] = m;
        Mat2::new([
            [Scalar::constant(basis, a), Scalar::constant(basis, b)],
            [Scalar::constant(basis, c), Scalar::constant(basis, d)],
        ])
    }

    pub fn identity(basis: &Arc<EigenBasis>) -> Self {
        Mat2::diag(Scalar::one(basis), Scalar::one(basis)).unwrap()
    }

    pub fn diag(a: Scalar, d: Scalar) -> Result<Self, GroupError> {
        let z = Scalar::zero(a.basis());
        Mat2::new([[a, z.clone()], [z, d]])
    }

    /// The coordinate swap `[[0,1],[1,0]]`.
    pub fn swap(basis: &Arc<EigenBasis>) -> Self {
        let (z, o) = (Scalar::zero(basis), Scalar::one(basis));
        Mat2::new([[z.clone(), o.clone()], [o, z]]).unwrap()
    }

    pub fn entries(&self) -> &[[Scalar; 2]; 2] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn det(&self) -> &Scalar {
        &self.det
    }

    pub fn basis(&self) -> &Arc<EigenBasis> {
        self.entries[0][0].basis()
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let e = &self.entries;
        let f = &o.entries;
        let entry = |i: usize, j: usize| &(&e[i][0] * &f[0][j]) + &(&e[i][1] * &f[1][j]);
        Mat2 {
            entries: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]],
            det: &self.det * &o.det,
        }
    }

    /// Inverse; requires the determinant to be a unit (a monomial).
    pub fn inverse(&self) -> Result<Mat2, GroupError> {
        let di = self.det.inv().map_err(|_| GroupError::DeterminantNotUnit)?;
        let [[a, b], [c, d]] = &self.entries;
        Ok(Mat2 {
            entries: [[d * &di, -&(b * &di)], [-&(c * &di), a * &di]],
            det: di,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Mat2 {
        let [[a, b], [c, d]] = &self.entries;
        let s2 = s * s;
        Mat2 {
            entries: [[a * s, b * s], [c * s, d * s]],
            det: &self.det * &s2,
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries[0][1].is_zero() && self.entries[1][0].is_zero()
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.entries[1][0].is_zero()
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.entries[0][1].is_zero()
    }

    pub fn numeric(&self) -> [[Complex64; 2]; 2] {
        let e = &self.entries;
        [
            [e[0][0].numeric_eval(), e[0][1].numeric_eval()],
            [e[1][0].numeric_eval(), e[1][1].numeric_eval()],
        ]
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            e[0][0], e[0][1], e[1][0], e[1][1]
        )
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat2{self}")
    }
}
