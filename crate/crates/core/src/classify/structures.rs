//! Structure records, their enumeration on a given surface, and the bounded brute-force
//! search over admissible maps.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::devmaps::{allowed_pairs, DevMap, DevMapError, UniPoly};
use crate::group::{GroupElt, GroupEltRecord, GroupError, HomogPoly, Mat2};
use crate::hopf::{HopfSurface, SurfaceKind};
use crate::scalars::{q, GaussRat, Scalar, ScalarRecord, Q};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ClassifyError {
    #[error("hyperresonant parameters must be nonzero and pairwise distinct")]
    BadParams,
    #[error("eigendirection must be nonzero")]
    BadDirection,
    #[error("structure degree n must be at least 1")]
    BadDegree,
    #[error(transparent)]
    DevMap(#[from] DevMapError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureKind {
    Radial,
    Eigen {
        axis: u8,
        /// Declared eigendirection on a homothety, when it is not a coordinate axis.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        direction: Option<[GaussRat; 2]>,
    },
    ExceptionalEigen,
    Hyperresonant {
        case: u8,
        params: Vec<GaussRat>,
        /// Rows 4 and 5 are rows 1 and 2 with the coordinates exchanged.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mirror_of: Option<u8>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructureRecord {
    pub kind: StructureKind,
    pub dev: DevMap,
    pub hol: GroupElt,
    pub complete: bool,
    pub essential: bool,
    pub provenance: String,
}

/// Serialized structure, with the μₙ-invariant data of the holonomy alongside.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureJson {
    pub kind: StructureKind,
    pub dev: DevMap,
    pub hol: GroupEltRecord,
    /// `g₁₁/g₂₂`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<ScalarRecord>,
    /// `g₂₂ⁿ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator_pow_n: Option<ScalarRecord>,
    pub complete: bool,
    pub essential: bool,
    pub provenance: String,
}

impl StructureRecord {
    pub fn to_json(&self) -> StructureJson {
        let e = self.hol.g().entries();
        let ratio = e[0][0]
            .try_div(&e[1][1])
            .ok()
            .map(|r| ScalarRecord::from_scalar(&r));
        let den = e[1][1]
            .pow(self.hol.n() as i64)
            .ok()
            .map(|r| ScalarRecord::from_scalar(&r));
        StructureJson {
            kind: self.kind.clone(),
            dev: self.dev.clone(),
            hol: self.hol.to_record(),
            ratio,
            denominator_pow_n: den,
            complete: self.complete,
            essential: self.essential,
            provenance: self.provenance.clone(),
        }
    }

    pub fn from_json(s: &HopfSurface, j: &StructureJson) -> Result<Self, ClassifyError> {
        Ok(StructureRecord {
            kind: j.kind.clone(),
            dev: j.dev.clone(),
            hol: GroupElt::from_record(s.basis(), &j.hol)?,
            complete: j.complete,
            essential: j.essential,
            provenance: j.provenance.clone(),
        })
    }
}

/// Caller-supplied data for the continuous families.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct EnumerateOptions {
    /// One list `a₁..a_N` per hyperresonant instance; empty means `[[1], [1, 2]]`.
    pub params: Vec<Vec<GaussRat>>,
    /// Eigendirections on a homothety; empty means the two axes.
    pub directions: Vec<[GaussRat; 2]>,
}

impl EnumerateOptions {
    fn param_lists(&self) -> Vec<Vec<GaussRat>> {
        if self.params.is_empty() {
            vec![
                vec![GaussRat::from_int(1)],
                vec![GaussRat::from_int(1), GaussRat::from_int(2)],
            ]
        } else {
            self.params.clone()
        }
    }
}

fn check_params(a: &[GaussRat]) -> Result<(), ClassifyError> {
    let distinct = a
        .iter()
        .enumerate()
        .all(|(i, x)| a[..i].iter().all(|y| y != x));
    if a.is_empty() || a.iter().any(GaussRat::is_zero) || !distinct {
        return Err(ClassifyError::BadParams);
    }
    Ok(())
}

/// Reason no structure exists, if any.
pub fn existence_warning(s: &HopfSurface, n: usize) -> Option<String> {
    match s.kind() {
        SurfaceKind::Exceptional { m, .. } if (n as u32) < *m => Some(format!(
            "n < m: the exceptional surface of degree {} carries no structure for n = {}",
            m, n
        )),
        _ => None,
    }
}

fn eigen_record(
    s: &HopfSurface,
    dev: DevMap,
    axis: u8,
    direction: Option<[GaussRat; 2]>,
) -> Result<StructureRecord, ClassifyError> {
    let hol = dev.holonomy(s)?;
    let provenance = match &direction {
        Some(_) => "eigenstructure along a declared direction".to_string(),
        None => format!("eigenstructure, axis {}", axis),
    };
    Ok(StructureRecord {
        kind: StructureKind::Eigen { axis, direction },
        dev,
        hol,
        complete: false,
        essential: true,
        provenance,
    })
}

/// Linear map sending `v` to the first axis.
fn direction_frame(v: &[GaussRat; 2]) -> Result<[[GaussRat; 2]; 2], ClassifyError> {
    let one = GaussRat::one();
    let zero = GaussRat::zero();
    if let Some(inv) = v[0].inv() {
        Ok([[inv.clone(), zero], [-&(&v[1] * &inv), one]])
    } else {
        let inv = v[1].inv().ok_or(ClassifyError::BadDirection)?;
        Ok([[zero, inv], [one, GaussRat::zero()]])
    }
}

fn hyperresonant_record(
    s: &HopfSurface,
    case: u8,
    mirror_of: Option<u8>,
    dev: DevMap,
    params: &[GaussRat],
) -> Result<StructureRecord, ClassifyError> {
    let hol = dev.holonomy(s)?;
    let mut provenance = format!("hyperresonant row {}, N = {}", case, params.len());
    if let Some(r) = mirror_of {
        provenance.push_str(&format!(", row {} with z1 and z2 exchanged", r));
    }
    Ok(StructureRecord {
        kind: StructureKind::Hyperresonant {
            case,
            params: params.to_vec(),
            mirror_of,
        },
        dev,
        hol,
        complete: false,
        essential: false,
        provenance,
    })
}

/// Every structure of degree `n` on `s` given by the classification, with the continuous
/// families instantiated at the supplied parameters.
pub fn enumerate_structures(
    s: &HopfSurface,
    n: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<StructureRecord>, ClassifyError> {
    if n == 0 {
        return Err(ClassifyError::BadDegree);
    }
    let lists = opts.param_lists();
    for a in &lists {
        check_params(a)?;
    }
    let b = s.basis();
    let mut out = Vec::new();
    match s.kind() {
        SurfaceKind::Exceptional { l, m } => {
            if existence_warning(s, n).is_some() {
                return Ok(out);
            }
            if *m == 1 {
                let f = Mat2::new([[l.clone(), Scalar::zero(b)], [Scalar::one(b), l.clone()]])?;
                out.push(StructureRecord {
                    kind: StructureKind::Radial,
                    dev: DevMap::radial(n),
                    hol: GroupElt::linear(f, n)?,
                    complete: false,
                    essential: false,
                    provenance: "radial".into(),
                });
            }
            let (m, nn) = (*m as i64, n as i64);
            let g = Mat2::diag(
                Scalar::monomial(b, GaussRat::one(), [Q::new(nn - m, nn), q(0)]),
                Scalar::monomial(b, GaussRat::one(), [Q::new(-m, nn), q(0)]),
            )?;
            let p = HomogPoly::monomial(n, m as usize, l.pow(-m).expect("λ is a unit"));
            out.push(StructureRecord {
                kind: StructureKind::ExceptionalEigen,
                dev: DevMap::identity(n),
                hol: GroupElt::new(g, p)?,
                complete: false,
                essential: true,
                provenance: "eigenstructure, exceptional".into(),
            });
        }
        SurfaceKind::Diagonal { .. } => {
            let radial = DevMap::radial(n);
            out.push(StructureRecord {
                hol: radial.holonomy(s)?,
                kind: StructureKind::Radial,
                dev: radial,
                complete: false,
                essential: false,
                provenance: "radial".into(),
            });
            let swap = DevMap::monomial(n, [0, 1], [1, 0]);
            if s.is_homothety() && !opts.directions.is_empty() {
                for v in &opts.directions {
                    if v[1].is_zero() && !v[0].is_zero() {
                        out.push(eigen_record(s, DevMap::identity(n), 1, None)?);
                    } else if v[0].is_zero() && !v[1].is_zero() {
                        out.push(eigen_record(s, swap.clone(), 2, None)?);
                    } else {
                        let dev = DevMap::identity(n).with_frame(direction_frame(v)?);
                        out.push(eigen_record(s, dev, 1, Some(v.clone()))?);
                    }
                }
            } else {
                out.push(eigen_record(s, DevMap::identity(n), 1, None)?);
                out.push(eigen_record(s, swap, 2, None)?);
            }
            if let Some((m1, m2)) = s.hyperresonance() {
                out.extend(hyperresonant_structures(
                    s, n as i64, m1 as i64, m2 as i64, &lists,
                )?);
            }
        }
    }
    Ok(out)
}

fn hyperresonant_structures(
    s: &HopfSurface,
    n: i64,
    m1: i64,
    m2: i64,
    lists: &[Vec<GaussRat>],
) -> Result<Vec<StructureRecord>, ClassifyError> {
    let nu = n as usize;
    let one = UniPoly::one;
    let mut out = Vec::new();
    for a in lists {
        let big_n = a.len() as i64;
        let prod = UniPoly::from_roots(a);
        if m2 == n * m1 && (big_n >= 2 || m1 >= 2 || n >= 2) {
            let dev = DevMap::monomial(nu, [0, big_n * m2 - 1], [1, -n]).with_polys(
                prod.clone(),
                one(),
                one(),
                [m1, m2],
            );
            out.push(hyperresonant_record(
                s,
                if big_n == 1 { 1 } else { 2 },
                None,
                dev,
                a,
            )?);
        }
        if m1 == m2 && m1 * big_n != n {
            let dev = DevMap::monomial(nu, [1, -1], [0, big_n * m2 - n]).with_polys(
                one(),
                one(),
                prod.clone(),
                [m1, m2],
            );
            out.push(hyperresonant_record(s, 3, None, dev, a)?);
        }
        if m1 == n * m2 && (big_n >= 2 || m2 >= 2 || n >= 2) {
            let dev = DevMap::monomial(nu, [1, -big_n * m2], [0, 1 - n * big_n * m2]).with_polys(
                one(),
                prod.clone(),
                one(),
                [m1, m2],
            );
            let (case, mirror) = if big_n == 1 { (4, 1) } else { (5, 2) };
            out.push(hyperresonant_record(s, case, Some(mirror), dev, a)?);
        }
    }
    Ok(out)
}

/// Invariant of a developing map under the declared isomorphisms: the chart swap on O(n),
/// the coordinate exchange on a homothety, axis rescalings and the choice of roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalKey {
    pub k: [i64; 2],
    pub l: [i64; 2],
    pub m: Option<[i64; 2]>,
    /// `deg P₁, deg Q₁, deg P₂`.
    pub degrees: [i64; 3],
}

fn raw_key(d: &DevMap) -> CanonicalKey {
    CanonicalKey {
        k: d.k,
        l: d.l,
        m: if d.all_constant() { None } else { d.hyper },
        degrees: d.degrees(),
    }
}

pub fn canonical_key(s: &HopfSurface, d: &DevMap) -> CanonicalKey {
    let mut forms = vec![d.clone(), d.hat()];
    if s.is_homothety() {
        let t = d.swap_tilde();
        forms.push(t.hat());
        forms.push(t);
    }
    forms.iter().map(raw_key).min().expect("nonempty")
}

/// Fixed pairwise distinct sample roots for `P₁`, `Q₁`, `P₂`.
const SAMPLE_ROOTS: [[i64; 3]; 3] = [[2, 3, 5], [7, 11, 13], [17, 19, 23]];

fn sample_poly(which: usize, deg: i64) -> UniPoly {
    let roots: Vec<GaussRat> = SAMPLE_ROOTS[which][..deg as usize]
        .iter()
        .map(|&r| GaussRat::from_int(r))
        .collect();
    UniPoly::from_roots(&roots)
}

/// Admissible maps with `k₁ ≥ 0` and polynomial degrees up to `deg_bound`, one per
/// canonical key, in key order.
pub fn brute_force_admissible(
    s: &HopfSurface,
    n: usize,
    deg_bound: usize,
) -> Vec<(CanonicalKey, DevMap)> {
    let hyper = s.hyperresonance().map(|(a, b)| [a as i64, b as i64]);
    let pairs = allowed_pairs(n);
    let grid: Vec<([i64; 2], [i64; 2])> = pairs
        .iter()
        .filter(|f| f[0] >= 0)
        .flat_map(|f| pairs.iter().map(move |t| (*f, *t)))
        .collect();
    let db = deg_bound as i64;
    let found: Vec<(CanonicalKey, DevMap)> = grid
        .par_iter()
        .flat_map_iter(|&(first, tilde)| {
            let mut local = Vec::new();
            for p in 0..=db {
                for qd in 0..=db {
                    for r in 0..=db {
                        let constant = p == 0 && qd == 0 && r == 0;
                        let m = match (constant, hyper) {
                            (true, _) => None,
                            (false, Some(m)) => Some(m),
                            (false, None) => continue,
                        };
                        let m2 = m.map_or(0, |m| m[1]);
                        let k2 = tilde[0] + m2 * (p - qd);
                        let l2 = tilde[1] + m2 * (r - n as i64 * qd);
                        let mut d = DevMap::monomial(n, [first[0], k2], [first[1], l2]);
                        if let Some(m) = m {
                            d = d.with_polys(
                                sample_poly(0, p),
                                sample_poly(1, qd),
                                sample_poly(2, r),
                                m,
                            );
                        }
                        if d.is_admissible() {
                            local.push((canonical_key(s, &d), d));
                        }
                    }
                }
            }
            local
        })
        .collect();
    let mut unique: BTreeMap<CanonicalKey, DevMap> = BTreeMap::new();
    for (k, d) in found {
        unique.entry(k).or_insert(d);
    }
    unique.into_iter().collect()
}
