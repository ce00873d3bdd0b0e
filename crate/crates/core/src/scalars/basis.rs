use std::sync::Arc;

use num_complex::Complex64;

use super::gaussrat::GaussRat;
use super::lattice::RelationLattice;
use super::ScalarError;

/// Default box for the bounded relation search on Gaussian-rational eigenvalues.
pub const DEFAULT_SEARCH_BOUND: i64 = 64;

const WITNESS_TOL: f64 = 1e-12;

/// Two formal eigenvalue generators with their relation lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenBasis {
    names: [String; 2],
    lattice: RelationLattice,
    witness: [Complex64; 2],
    exact: Option<[GaussRat; 2]>,
}

impl EigenBasis {
    /// Formal generators with declared relations `λ₁^a λ₂^b = 1`.
    pub fn formal(
        witness: [Complex64; 2],
        relations: &[[i64; 2]],
    ) -> Result<Arc<Self>, ScalarError> {
        let lattice = RelationLattice::from_generators(relations);
        let basis = EigenBasis {
            names: default_names(),
            lattice,
            witness,
            exact: None,
        };
        basis.validate()?;
        Ok(Arc::new(basis))
    }

    /// Generators with no relations. The witnesses only matter for numeric evaluation.
    pub fn free() -> Arc<Self> {
        Arc::new(EigenBasis {
            names: default_names(),
            lattice: RelationLattice::trivial(),
            witness: [Complex64::new(0.5, 0.0), Complex64::new(1.0 / 3.0, 0.0)],
            exact: None,
        })
    }

    /// Generators with known Gaussian-rational values; relations are found by searching
    /// `|a|, |b| ≤ bound` and deciding each candidate by exact powering.
    pub fn from_gauss(l1: &GaussRat, l2: &GaussRat, bound: i64) -> Result<Arc<Self>, ScalarError> {
        if l1.is_zero() || l2.is_zero() {
            return Err(ScalarError::ZeroWitness);
        }
        let w = [l1.to_complex(), l2.to_complex()];
        let logs = [w[0].norm().ln(), w[1].norm().ln()];
        let mut rels = Vec::new();
        for a in 0..=bound {
            for b in -bound..=bound {
                if a == 0 && b <= 0 {
                    continue;
                }
                let mag = a as f64 * logs[0] + b as f64 * logs[1];
                if mag.abs() > 1e-6 * (1.0 + (a.abs() + b.abs()) as f64) {
                    continue;
                }
                if exact_relation(l1, l2, a, b) {
                    rels.push([a, b]);
                }
            }
        }
        Ok(Arc::new(EigenBasis {
            names: default_names(),
            lattice: RelationLattice::from_generators(&rels),
            witness: w,
            exact: Some([l1.clone(), l2.clone()]),
        }))
    }

    pub fn with_names(mut self, names: [String; 2]) -> Self {
        self.names = names;
        self
    }

    fn validate(&self) -> Result<(), ScalarError> {
        if self
            .witness
            .iter()
            .any(|w| w.norm() == 0.0 || !w.is_finite())
        {
            return Err(ScalarError::ZeroWitness);
        }
        for r in self.lattice.basis() {
            let v = (self.witness[0].ln() * r[0] as f64 + self.witness[1].ln() * r[1] as f64).exp();
            if (v - 1.0).norm() > WITNESS_TOL {
                return Err(ScalarError::WitnessViolatesRelation(*r));
            }
        }
        Ok(())
    }

    pub fn names(&self) -> &[String; 2] {
        &self.names
    }

    pub fn lattice(&self) -> &RelationLattice {
        &self.lattice
    }

    pub fn witness(&self) -> [Complex64; 2] {
        self.witness
    }

    pub fn exact_values(&self) -> Option<&[GaussRat; 2]> {
        self.exact.as_ref()
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }
}

fn default_names() -> [String; 2] {
    ["λ1".to_string(), "λ2".to_string()]
}

/// `λ₁^a λ₂^b == 1` decided exactly.
pub(crate) fn exact_relation(l1: &GaussRat, l2: &GaussRat, a: i64, b: i64) -> bool {
    // Move negative powers to the other side to avoid inverting.
    let (lhs, rhs) = match (a >= 0, b >= 0) {
        (true, true) => (mul_pows(l1, a, l2, b), GaussRat::one()),
        (true, false) => (l1.pow(a).unwrap(), l2.pow(-b).unwrap()),
        (false, true) => (l2.pow(b).unwrap(), l1.pow(-a).unwrap()),
        (false, false) => (GaussRat::one(), mul_pows(l1, -a, l2, -b)),
    };
    lhs == rhs
}

fn mul_pows(x: &GaussRat, a: i64, y: &GaussRat, b: i64) -> GaussRat {
    &x.pow(a).unwrap() * &y.pow(b).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_finds_minimal_relation() {
        let b = EigenBasis::from_gauss(&GaussRat::real(1, 2), &GaussRat::real(1, 4), 64).unwrap();
        assert_eq!(b.lattice().basis(), &[[-2, 1]]);
        let g = EigenBasis::from_gauss(&GaussRat::real(1, 2), &GaussRat::real(1, 3), 64).unwrap();
        assert_eq!(g.rank(), 0);
    }

    #[test]
    fn formal_witness_is_checked() {
        let i = Complex64::new(0.0, 1.0);
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert_eq!(
            EigenBasis::formal([i, w], &[[4, 0], [0, 3]])
                .unwrap()
                .rank(),
            2
        );
        assert!(EigenBasis::formal([Complex64::new(0.5, 0.0), w], &[[1, 0]]).is_err());
    }
}
