use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::basis::EigenBasis;
use super::gaussrat::GaussRat;
use super::lattice::Q;
use super::scalar::Scalar;

/// Basis-free serialized form of a [`Scalar`]: a bare Gaussian rational, or a list of
/// monomials with exponents written as decimal fractions such as `"1/2"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRecord {
    Constant(GaussRat),
    Terms { terms: Vec<TermRecord> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub coeff: GaussRat,
    pub exp: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid exponent {0:?}")]
pub struct ExponentParseError(pub String);

fn parse_q(s: &str) -> Result<Q, ExponentParseError> {
    let err = || ExponentParseError(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (
            a.trim().parse::<i64>().map_err(|_| err())?,
            b.trim().parse::<i64>().map_err(|_| err())?,
        ),
        None => (s.trim().parse::<i64>().map_err(|_| err())?, 1),
    };
    if den == 0 {
        return Err(err());
    }
    Ok(Q::new(num, den))
}

fn show_q(v: &Q) -> String {
    if *v.denom() == 1 {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

impl ScalarRecord {
    pub fn from_scalar(s: &Scalar) -> Self {
        if let Some(c) = s.as_constant() {
            return ScalarRecord::Constant(c);
        }
        ScalarRecord::Terms {
            terms: s
                .terms()
                .map(|(e, c)| TermRecord {
                    coeff: c.clone(),
                    exp: [show_q(&e[0]), show_q(&e[1])],
                })
                .collect(),
        }
    }

    pub fn to_scalar(&self, basis: &Arc<EigenBasis>) -> Result<Scalar, ExponentParseError> {
        match self {
            ScalarRecord::Constant(c) => Ok(Scalar::constant(basis, c.clone())),
            ScalarRecord::Terms { terms } => {
                let mut acc = Scalar::zero(basis);
                for t in terms {
                    let e = [parse_q(&t.exp[0])?, parse_q(&t.exp[1])?];
                    acc = &acc + &Scalar::monomial(basis, t.coeff.clone(), e);
                }
                Ok(acc)
            }
        }
    }
}
