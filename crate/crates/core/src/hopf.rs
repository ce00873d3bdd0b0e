//! Primary Hopf surfaces given by a contraction in Poincaré–Dulac normal form:
//! diagonal `(λ₁z₁, λ₂z₂)` or exceptional `(λz₁, λᵐz₂ + z₁ᵐ)`.

use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::scalars::{EigenBasis, GaussRat, Scalar, ScalarError, DEFAULT_SEARCH_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("eigenvalues must satisfy 0 < |λ| < 1")]
    NotContraction,
    #[error("the contraction is not applied at the origin")]
    ZeroInput,
    #[error("exceptional degree m must be at least 1")]
    BadDegree,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Debug, PartialEq)]
pub enum SurfaceKind {
    Diagonal {
        l1: Scalar,
        l2: Scalar,
    },
    /// `λ` is the generator λ₁ of a basis declaring λ₁ = λ₂.
    Exceptional {
        l: Scalar,
        m: u32,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfSurface {
    kind: SurfaceKind,
    basis: Arc<EigenBasis>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SurfaceClass {
    Generic,
    Hyperresonant {
        m1: u32,
        m2: u32,
    },
    /// Reported with hyperresonance `(1, 1)`.
    Homothety {
        m1: u32,
        m2: u32,
    },
    Exceptional {
        m: u32,
    },
}

/// Meromorphic functions on the surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctionField {
    Constant,
    /// Rational functions of `u = z₁^{m1}/z₂^{m2}`.
    RationalIn {
        m1: u32,
        m2: u32,
    },
}

/// Biholomorphisms of `C²∖0` commuting with the contraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BiholGroup {
    AllInvertibleLinear,
    DiagonalLinear,
    /// `(z₁, z₂) ↦ (a·z₁, aᵐ·z₂ + b·z₁ᵐ)`.
    ExceptionalFamily {
        m: u32,
    },
}

fn check_contraction(w: Complex64) -> Result<(), HopfError> {
    let r = w.norm();
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(HopfError::NotContraction)
    }
}

impl HopfSurface {
    /// Diagonal surface with exact eigenvalues; relations are found by bounded search.
    pub fn diagonal(l1: &GaussRat, l2: &GaussRat) -> Result<Self, HopfError> {
        Self::diagonal_with_bound(l1, l2, DEFAULT_SEARCH_BOUND)
    }

    pub fn diagonal_with_bound(
        l1: &GaussRat,
        l2: &GaussRat,
        bound: i64,
    ) -> Result<Self, HopfError> {
        check_contraction(l1.to_complex())?;
        check_contraction(l2.to_complex())?;
        let basis = EigenBasis::from_gauss(l1, l2, bound)?;
        Ok(Self::diagonal_over(basis))
    }

    /// Diagonal surface with formal eigenvalues and declared relations.
    pub fn diagonal_formal(
        witness: [Complex64; 2],
        relations: &[[i64; 2]],
    ) -> Result<Self, HopfError> {
        check_contraction(witness[0])?;
        check_contraction(witness[1])?;
        Ok(Self::diagonal_over(EigenBasis::formal(witness, relations)?))
    }

    fn diagonal_over(basis: Arc<EigenBasis>) -> Self {
        let kind = SurfaceKind::Diagonal {
            l1: Scalar::generator(&basis, 0),
            l2: Scalar::generator(&basis, 1),
        };
        HopfSurface { kind, basis }
    }

    pub fn exceptional(l: &GaussRat, m: u32) -> Result<Self, HopfError> {
        check_contraction(l.to_complex())?;
        let basis = EigenBasis::from_gauss(l, l, 1)?;
        Self::exceptional_over(basis, m)
    }

    pub fn exceptional_formal(witness: Complex64, m: u32) -> Result<Self, HopfError> {
        check_contraction(witness)?;
        Self::exceptional_over(EigenBasis::formal([witness, witness], &[[1, -1]])?, m)
    }

    fn exceptional_over(basis: Arc<EigenBasis>, m: u32) -> Result<Self, HopfError> {
        if m == 0 {
            return Err(HopfError::BadDegree);
        }
        let kind = SurfaceKind::Exceptional {
            l: Scalar::generator(&basis, 0),
            m,
        };
        Ok(HopfSurface { kind, basis })
    }

    pub fn kind(&self) -> &SurfaceKind {
        &self.kind
    }

    pub fn basis(&self) -> &Arc<EigenBasis> {
        &self.basis
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self.kind, SurfaceKind::Diagonal { .. })
    }

    /// Diagonal, or exceptional of degree 1.
    pub fn is_linear(&self) -> bool {
        match self.kind {
            SurfaceKind::Diagonal { .. } => true,
            SurfaceKind::Exceptional { m, .. } => m == 1,
        }
    }

    pub fn is_homothety(&self) -> bool {
        matches!(&self.kind, SurfaceKind::Diagonal { l1, l2 } if l1 == l2)
    }

    /// Exceptional degree `m`.
    pub fn degree(&self) -> Option<u32> {
        match self.kind {
            SurfaceKind::Exceptional { m, .. } => Some(m),
            SurfaceKind::Diagonal { .. } => None,
        }
    }

    /// Minimal positive `(m₁, m₂)` with `λ₁^{m₁} = λ₂^{m₂}`, diagonal surfaces only.
    pub fn hyperresonance(&self) -> Option<(u32, u32)> {
        if !self.is_diagonal() {
            return None;
        }
        let lattice = self.basis.lattice();
        let bound = DEFAULT_SEARCH_BOUND;
        (1..=bound)
            .flat_map(|m1| (1..=bound).map(move |m2| (m1, m2)))
            .find(|&(m1, m2)| lattice.contains([m1, -m2]))
            .map(|(m1, m2)| (m1 as u32, m2 as u32))
    }

    pub fn classify(&self) -> SurfaceClass {
        match self.kind {
            SurfaceKind::Exceptional { m, .. } => SurfaceClass::Exceptional { m },
            SurfaceKind::Diagonal { .. } if self.is_homothety() => {
                SurfaceClass::Homothety { m1: 1, m2: 1 }
            }
            SurfaceKind::Diagonal { .. } => match self.hyperresonance() {
                Some((m1, m2)) => SurfaceClass::Hyperresonant { m1, m2 },
                None => SurfaceClass::Generic,
            },
        }
    }

    pub fn function_field(&self) -> FunctionField {
        match self.hyperresonance() {
            Some((m1, m2)) => FunctionField::RationalIn { m1, m2 },
            None => FunctionField::Constant,
        }
    }

    pub fn bihol_group(&self) -> BiholGroup {
        match self.kind {
            SurfaceKind::Exceptional { m, .. } => BiholGroup::ExceptionalFamily { m },
            _ if self.is_homothety() => BiholGroup::AllInvertibleLinear,
            _ => BiholGroup::DiagonalLinear,
        }
    }

    /// Numeric eigenvalues `(λ₁, λ₂)`; for exceptional surfaces both equal `λ`.
    pub fn eigenvalues_numeric(&self) -> [Complex64; 2] {
        match &self.kind {
            SurfaceKind::Diagonal { l1, l2 } => [l1.numeric_eval(), l2.numeric_eval()],
            SurfaceKind::Exceptional { l, .. } => {
                let v = l.numeric_eval();
                [v, v]
            }
        }
    }

    pub fn apply_f(&self, z: [Complex64; 2]) -> Result<[Complex64; 2], HopfError> {
        if z[0].norm() == 0.0 && z[1].norm() == 0.0 {
            return Err(HopfError::ZeroInput);
        }
        Ok(self.apply_f_unchecked(z))
    }

    pub(crate) fn apply_f_unchecked(&self, z: [Complex64; 2]) -> [Complex64; 2] {
        let [a, b] = self.eigenvalues_numeric();
        match self.kind {
            SurfaceKind::Diagonal { .. } => [a * z[0], b * z[1]],
            SurfaceKind::Exceptional { m, .. } => [a * z[0], a.powu(m) * z[1] + z[0].powu(m)],
        }
    }

    /// Serializable description of this surface.
    pub fn to_spec(&self) -> SurfaceSpec {
        let exact = self.basis.exact_values().cloned();
        let pair = |w: Complex64| [w.re, w.im];
        match &self.kind {
            SurfaceKind::Diagonal { .. } => SurfaceSpec::Diagonal {
                eigenvalues: match exact {
                    Some([a, b]) => EigenvalueSpec::Exact([a, b]),
                    None => {
                        let w = self.basis.witness();
                        EigenvalueSpec::Formal {
                            witnesses: [pair(w[0]), pair(w[1])],
                            relations: self.basis.lattice().basis().to_vec(),
                        }
                    }
                },
            },
            SurfaceKind::Exceptional { m, .. } => SurfaceSpec::Exceptional {
                eigenvalue: match exact {
                    Some([a, _]) => ExceptionalEigenvalueSpec::Exact(a),
                    None => ExceptionalEigenvalueSpec::Formal {
                        witness: pair(self.basis.witness()[0]),
                    },
                },
                m: *m,
            },
        }
    }
}

/// Surface description as read from and written to JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum SurfaceSpec {
    Diagonal {
        eigenvalues: EigenvalueSpec,
    },
    Exceptional {
        eigenvalue: ExceptionalEigenvalueSpec,
        m: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EigenvalueSpec {
    /// Gaussian-rational quadruples `[re_num, re_den, im_num, im_den]`.
    Exact([GaussRat; 2]),
    Formal {
        witnesses: [[f64; 2]; 2],
        #[serde(default)]
        relations: Vec<[i64; 2]>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExceptionalEigenvalueSpec {
    Exact(GaussRat),
    Formal { witness: [f64; 2] },
}

impl SurfaceSpec {
    pub fn build(&self) -> Result<HopfSurface, HopfError> {
        let c = |p: [f64; 2]| Complex64::new(p[0], p[1]);
        match self {
            SurfaceSpec::Diagonal {
                eigenvalues: EigenvalueSpec::Exact([a, b]),
            } => HopfSurface::diagonal(a, b),
            SurfaceSpec::Diagonal {
                eigenvalues:
                    EigenvalueSpec::Formal {
                        witnesses,
                        relations,
                    },
            } => HopfSurface::diagonal_formal([c(witnesses[0]), c(witnesses[1])], relations),
            SurfaceSpec::Exceptional {
                eigenvalue: ExceptionalEigenvalueSpec::Exact(l),
                m,
            } => HopfSurface::exceptional(l, *m),
            SurfaceSpec::Exceptional {
                eigenvalue: ExceptionalEigenvalueSpec::Formal { witness },
                m,
            } => HopfSurface::exceptional_formal(c(*witness), *m),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> GaussRat {
        GaussRat::real(1, 2)
    }

    #[test]
    fn classification_examples() {
        let s = HopfSurface::diagonal(&half(), &GaussRat::real(1, 4)).unwrap();
        assert_eq!(s.classify(), SurfaceClass::Hyperresonant { m1: 2, m2: 1 });
        let s = HopfSurface::diagonal(&half(), &half()).unwrap();
        assert_eq!(s.classify(), SurfaceClass::Homothety { m1: 1, m2: 1 });
        assert_eq!(s.bihol_group(), BiholGroup::AllInvertibleLinear);
        let s = HopfSurface::diagonal(&half(), &GaussRat::real(1, 3)).unwrap();
        assert_eq!(s.classify(), SurfaceClass::Generic);
        assert_eq!(s.function_field(), FunctionField::Constant);
        assert_eq!(s.bihol_group(), BiholGroup::DiagonalLinear);
        let s = HopfSurface::exceptional(&half(), 3).unwrap();
        assert_eq!(s.classify(), SurfaceClass::Exceptional { m: 3 });
        assert_eq!(s.function_field(), FunctionField::Constant);
    }

    #[test]
    fn contraction_examples() {
        let c = |x: f64, y: f64| Complex64::new(x, y);
        let s = HopfSurface::exceptional(&half(), 2).unwrap();
        let out = s.apply_f([c(2.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((out[0] - c(1.0, 0.0)).norm() < 1e-15 && (out[1] - c(4.25, 0.0)).norm() < 1e-15);
        let s = HopfSurface::exceptional(&half(), 1).unwrap();
        let out = s.apply_f([c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((out[0] - c(0.5, 0.0)).norm() < 1e-15 && (out[1] - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(
            s.apply_f([c(0.0, 0.0), c(0.0, 0.0)]),
            Err(HopfError::ZeroInput)
        );
        assert!(HopfSurface::diagonal(&GaussRat::from_int(2), &half()).is_err());
    }

    #[test]
    fn spec_round_trip() {
        let text = r#"{"type":"diagonal","eigenvalues":[[1,4,0,1],[1,2,0,1]]}"#;
        let spec: SurfaceSpec = serde_json::from_str(text).unwrap();
        let s = spec.build().unwrap();
        assert_eq!(s.classify(), SurfaceClass::Hyperresonant { m1: 1, m2: 2 });
        assert_eq!(s.to_spec(), spec);
        let formal = r#"{"type":"diagonal","eigenvalues":{"witnesses":[[0.25,0],[0.5,0]],"relations":[[1,-2]]}}"#;
        let spec: SurfaceSpec = serde_json::from_str(formal).unwrap();
        let s = spec.build().unwrap();
        assert_eq!(s.hyperresonance(), Some((1, 2)));
        let back: SurfaceSpec =
            serde_json::from_str(&serde_json::to_string(&s.to_spec()).unwrap()).unwrap();
        assert_eq!(back.build().unwrap(), s);
        let exc = r#"{"type":"exceptional","eigenvalue":[1,2,0,1],"m":2}"#;
        let spec: SurfaceSpec = serde_json::from_str(exc).unwrap();
        assert_eq!(spec.build().unwrap().to_spec(), spec);
        assert!(serde_json::from_str::<SurfaceSpec>(
            r#"{"type":"diagonal","eigenvalue":[1,2,0,1]}"#
        )
        .is_err());
    }
}
