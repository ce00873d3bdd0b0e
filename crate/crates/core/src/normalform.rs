//! Resonances and conjugacy normal forms in `G(n)`.
//!
//! For diagonal `g = diag(a, d)` the degree `k` is resonant when `aᵏd^{n−k} = 1`;
//! conjugating by `(I, p₀)` removes every non-resonant coefficient of `p`, and
//! conjugating by diagonal matrices rescales the remaining ones.

use std::sync::Arc;

use crate::group::{GroupElt, GroupError, HomogPoly, Mat2};
use crate::scalars::{EigenBasis, Scalar};

/// Box used when searching the relations `aˣdʸ = 1` of a pair of eigenvalues.
const RELATION_SEARCH_BOUND: i64 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceReport {
    pub resonant_degrees: Vec<usize>,
    /// Smallest resonant degree carrying a nonzero coefficient of `p`.
    pub leading: Option<usize>,
    /// Largest resonant degree carrying a nonzero coefficient of `p`.
    pub trailing: Option<usize>,
    /// Rank of the relation group `{(x, y) : aˣdʸ = 1}` of the eigenvalues.
    pub lattice_rank: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormalFormResult {
    pub element: GroupElt,
    pub unique: bool,
    pub swap_applied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NormalFormError {
    #[error("matrix is not triangular; diagonalize it first")]
    NotTriangular,
    #[error("normalization needs a root outside the scalar ring: {0}")]
    NeedsExtension(&'static str),
    #[error("several resonant terms but the eigenvalue relation group has rank {0}")]
    RankAssertion(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Upper-triangular view `[[a, b], [0, d]]` of a triangular element.
struct Triangular {
    a: Scalar,
    b: Scalar,
    d: Scalar,
    p: HomogPoly,
    swapped: bool,
}

fn triangular(x: &GroupElt) -> Result<Triangular, NormalFormError> {
    let g = x.g();
    if g.is_upper_triangular() {
        return Ok(Triangular {
            a: g.entry(0, 0).clone(),
            b: g.entry(0, 1).clone(),
            d: g.entry(1, 1).clone(),
            p: x.p().clone(),
            swapped: false,
        });
    }
    if g.is_lower_triangular() {
        // Conjugating by the coordinate swap makes it upper triangular.
        return Ok(Triangular {
            a: g.entry(1, 1).clone(),
            b: g.entry(1, 0).clone(),
            d: g.entry(0, 0).clone(),
            p: x.p().reversed(),
            swapped: true,
        });
    }
    Err(NormalFormError::NotTriangular)
}

fn is_resonant(a: &Scalar, d: &Scalar, n: usize, k: usize) -> bool {
    let lhs = &a.pow(k as i64).expect("nonnegative power")
        * &d.pow((n - k) as i64).expect("nonnegative power");
    lhs.is_one()
}

/// Rank of `{(x, y) ∈ Z² : aˣdʸ = 1}`.
fn relation_rank(a: &Scalar, d: &Scalar) -> usize {
    if !a.is_monomial() || !d.is_monomial() {
        return 0;
    }
    if a.torsion_order().is_some() && d.torsion_order().is_some() {
        return 2;
    }
    let b = RELATION_SEARCH_BOUND;
    for x in 0..=b {
        for y in -b..=b {
            if x == 0 && y <= 0 {
                continue;
            }
            if (&a.pow(x).unwrap() * &d.pow(y).unwrap()).is_one() {
                return 1;
            }
        }
    }
    0
}

fn diagonalizable(t: &Triangular) -> bool {
    t.b.is_zero() || t.a != t.d
}

/// Resonant degrees of a triangular `g` acting on degree-`n` forms.
pub fn resonant_degrees(g: &Mat2, n: usize) -> Result<ResonanceReport, NormalFormError> {
    let x = GroupElt::linear(g.clone(), n)?;
    let t = triangular(&x)?;
    Ok(report_for(&t, n, None))
}

/// Like [`resonant_degrees`], with leading and trailing terms taken from `x`'s polynomial
/// after diagonalization.
pub fn resonant_terms(x: &GroupElt) -> Result<ResonanceReport, NormalFormError> {
    let t = diagonal_form(triangular(x)?)?;
    let n = x.n();
    let p = t.p.clone();
    Ok(report_for(&t, n, Some(&p)))
}

fn report_for(t: &Triangular, n: usize, p: Option<&HomogPoly>) -> ResonanceReport {
    let degrees: Vec<usize> = if diagonalizable(t) {
        (0..=n).filter(|&k| is_resonant(&t.a, &t.d, n, k)).collect()
    } else if t.a.is_root_of_unity(n as u32) {
        vec![n]
    } else {
        Vec::new()
    };
    let carried: Vec<usize> = match p {
        Some(p) => degrees
            .iter()
            .copied()
            .filter(|&k| !p.coeff(k).is_zero())
            .collect(),
        None => Vec::new(),
    };
    ResonanceReport {
        leading: carried.first().copied(),
        trailing: carried.last().copied(),
        lattice_rank: relation_rank(&t.a, &t.d),
        resonant_degrees: degrees,
    }
}

/// Conjugate a diagonalizable upper-triangular element to diagonal form.
///
/// With `P = [[d−a, b], [0, d−a]]` one has `gP = P·diag(a, d)`, so conjugating by
/// `(P⁻¹, 0)` gives `(diag(a, d), p∘P)` without ever inverting `P`.
fn diagonal_form(t: Triangular) -> Result<Triangular, NormalFormError> {
    if t.b.is_zero() || t.a == t.d {
        return Ok(t);
    }
    let gap = &t.d - &t.a;
    let zero = Scalar::zero(t.a.basis());
    let conj = Mat2::new([[gap.clone(), t.b.clone()], [zero.clone(), gap]])?;
    Ok(Triangular {
        p: t.p.precompose(&conj),
        b: zero,
        ..t
    })
}

fn unit_jordan(basis: &Arc<EigenBasis>) -> Mat2 {
    let one = Scalar::one(basis);
    Mat2::new([[one.clone(), one.clone()], [Scalar::zero(basis), one]]).unwrap()
}

/// Conjugacy normal form of an element with triangular `g`.
pub fn normal_form(x: &GroupElt) -> Result<NormalFormResult, NormalFormError> {
    let n = x.n();
    let basis = x.basis().clone();
    let t = triangular(x)?;
    let mut swap_applied = t.swapped;

    if !diagonalizable(&t) {
        let element = if t.a.is_root_of_unity(n as u32) {
            // Only the Z₁ⁿ coefficient survives conjugation by translations.
            let p = if t.p.coeff(n).is_zero() {
                HomogPoly::zero(&basis, n)
            } else {
                HomogPoly::monomial(n, n, Scalar::one(&basis))
            };
            GroupElt::new(unit_jordan(&basis), p)?
        } else {
            t.b.inv()
                .map_err(|_| NormalFormError::NeedsExtension("off-diagonal entry is not a unit"))?;
            let g = Mat2::new([
                [t.a.clone(), Scalar::one(&basis)],
                [Scalar::zero(&basis), t.a.clone()],
            ])?;
            GroupElt::linear(g, n)?
        };
        return Ok(NormalFormResult {
            element,
            unique: true,
            swap_applied,
        });
    }

    let mut t = diagonal_form(t)?;
    if t.a == t.d && t.a.is_root_of_unity(n as u32) {
        let element = GroupElt::new(Mat2::identity(&basis), t.p)?;
        return Ok(NormalFormResult {
            element,
            unique: false,
            swap_applied,
        });
    }

    if should_swap(&t.a, &t.d) {
        std::mem::swap(&mut t.a, &mut t.d);
        t.p = t.p.reversed();
        swap_applied = !swap_applied;
    }

    let resonant: Vec<usize> = (0..=n)
        .filter(|&k| is_resonant(&t.a, &t.d, n, k) && !t.p.coeff(k).is_zero())
        .collect();
    if resonant.len() >= 2 {
        let rank = relation_rank(&t.a, &t.d);
        if rank != 2 {
            return Err(NormalFormError::RankAssertion(rank));
        }
    }
    let coeffs = normalized_coefficients(&t.p, &resonant, &basis)?;
    let element = GroupElt::new(Mat2::diag(t.a, t.d)?, HomogPoly::new(coeffs))?;
    Ok(NormalFormResult {
        element,
        unique: true,
        swap_applied,
    })
}

/// Canonical eigenvalue order, invariant under rescaling `g` by roots of unity.
fn should_swap(a: &Scalar, d: &Scalar) -> bool {
    if a == d {
        return false;
    }
    match (a.try_div(d), d.try_div(a)) {
        (Ok(r), Ok(s)) => s < r,
        _ => d < a,
    }
}

/// Coefficients after killing non-resonant terms and rescaling by a diagonal conjugation.
fn normalized_coefficients(
    p: &HomogPoly,
    resonant: &[usize],
    basis: &Arc<EigenBasis>,
) -> Result<Vec<Scalar>, NormalFormError> {
    let n = p.degree();
    let mut out = vec![Scalar::zero(basis); n + 1];
    match resonant {
        [] => {}
        [k] => out[*k] = Scalar::one(basis),
        [k0, k1] => {
            out[*k0] = Scalar::one(basis);
            out[*k1] = Scalar::one(basis);
        }
        _ => {
            // Conjugating by diag(μ₁, μ₂) sends c_k to c_k·μ₂⁻ⁿ·sᵏ with s = μ₂/μ₁.
            // Fixing both ends gives s^{k1−k0} = c_{k0}/c_{k1}, and the middle
            // coefficients become (c_k/c_{k0})·s^{k−k0}.
            let (k0, k1) = (resonant[0], *resonant.last().unwrap());
            let c0 = p.coeff(k0);
            let ratio = c0.try_div(p.coeff(k1)).map_err(|_| {
                NormalFormError::NeedsExtension("resonant coefficient is not a unit")
            })?;
            let mut best: Option<Vec<Scalar>> = None;
            for s in ratio.roots((k1 - k0) as u32) {
                let mut cand = vec![Scalar::zero(basis); n + 1];
                for &k in resonant {
                    let c = p
                        .coeff(k)
                        .try_div(c0)
                        .map_err(|_| NormalFormError::NeedsExtension("leading coefficient"))?;
                    cand[k] = &c * &s.pow((k - k0) as i64).unwrap();
                }
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
            out = best.ok_or(NormalFormError::NeedsExtension(
                "no exact root of the coefficient ratio",
            ))?;
        }
    }
    Ok(out)
}

/// Generic: diagonalizable with no resonant term left after normalization.
pub fn is_generic(x: &GroupElt) -> bool {
    let Ok(t) = triangular(x) else {
        return false;
    };
    if !diagonalizable(&t) {
        return false;
    }
    let Ok(t) = diagonal_form(t) else {
        return false;
    };
    let n = x.n();
    (0..=n).all(|k| t.p.coeff(k).is_zero() || !is_resonant(&t.a, &t.d, n, k))
}

/// Whether `x` satisfies one of the normal-form clauses literally.
pub fn is_normal_form(x: &GroupElt) -> bool {
    let n = x.n();
    let g = x.g();
    let p = x.p();
    if !g.is_upper_triangular() {
        return false;
    }
    let (a, b, d) = (g.entry(0, 0), g.entry(0, 1), g.entry(1, 1));
    if !b.is_zero() {
        if a != d || !b.is_one() {
            return false;
        }
        let z1n = HomogPoly::monomial(n, n, Scalar::one(x.basis()));
        return p.is_zero() || (a.is_one() && *p == z1n);
    }
    if a == d && a.is_root_of_unity(n as u32) {
        return true;
    }
    let resonant: Vec<usize> = (0..=n).filter(|&k| !p.coeff(k).is_zero()).collect();
    if resonant.iter().any(|&k| !is_resonant(a, d, n, k)) {
        return false;
    }
    match (resonant.first(), resonant.last()) {
        (Some(&k0), Some(&k1)) => p.coeff(k0).is_one() && p.coeff(k1).is_one(),
        _ => true,
    }
}

/// Rank of the relation lattice stored in the basis.
pub fn hyperresonance_rank(basis: &EigenBasis) -> usize {
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Q;
    use num_complex::Complex64;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn resonance_examples() {
        let free = EigenBasis::free();
        let g = Mat2::diag(Scalar::generator(&free, 0), Scalar::generator(&free, 1)).unwrap();
        assert!(resonant_degrees(&g, 3).unwrap().resonant_degrees.is_empty());

        let inv = EigenBasis::formal([c(0.5), c(2.0)], &[[1, 1]]).unwrap();
        let g = Mat2::diag(Scalar::generator(&inv, 0), Scalar::generator(&inv, 1)).unwrap();
        assert_eq!(resonant_degrees(&g, 2).unwrap().resonant_degrees, vec![1]);

        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let cube = EigenBasis::formal([w, w], &[[3, 0], [1, -1]]).unwrap();
        let l = Scalar::generator(&cube, 0);
        let g = Mat2::diag(l.clone(), l).unwrap();
        assert_eq!(
            resonant_degrees(&g, 3).unwrap().resonant_degrees,
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn ranks() {
        let i = Complex64::new(0.0, 1.0);
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert_eq!(
            hyperresonance_rank(&EigenBasis::formal([i, w], &[[4, 0], [0, 3]]).unwrap()),
            2
        );
        assert_eq!(
            hyperresonance_rank(&EigenBasis::formal([c(0.5), c(0.5)], &[[1, -1]]).unwrap()),
            1
        );
        assert_eq!(hyperresonance_rank(&EigenBasis::free()), 0);
    }

    #[test]
    fn jordan_cases() {
        let b = EigenBasis::free();
        let l = Scalar::generator(&b, 0);
        let one = Scalar::one(&b);
        let g = Mat2::new([[l.clone(), one.clone()], [Scalar::zero(&b), l.clone()]]).unwrap();
        let p = HomogPoly::new(vec![one.clone(), Scalar::int(&b, 3), one.clone()]);
        let x = GroupElt::new(g.clone(), p).unwrap();
        let nf = normal_form(&x).unwrap();
        assert_eq!(nf.element, GroupElt::linear(g, 2).unwrap());
        assert!(!is_generic(&x));

        let j = Mat2::new([
            [one.clone(), Scalar::int(&b, 5)],
            [Scalar::zero(&b), one.clone()],
        ])
        .unwrap();
        let x = GroupElt::new(
            j,
            HomogPoly::new(vec![one.clone(), one.clone(), Scalar::int(&b, 2)]),
        )
        .unwrap();
        let nf = normal_form(&x).unwrap();
        assert_eq!(nf.element.p(), &HomogPoly::monomial(2, 2, one));
        assert!(is_normal_form(&nf.element));
    }

    #[test]
    fn diagonal_cases() {
        let b = EigenBasis::free();
        let g = Mat2::diag(Scalar::generator(&b, 0), Scalar::generator(&b, 1)).unwrap();
        let x = GroupElt::linear(g.clone(), 2).unwrap();
        let nf = normal_form(&x).unwrap();
        assert!(nf.unique);
        assert!(nf.element.p().is_zero());
        let p = HomogPoly::new(vec![
            Scalar::int(&b, 1),
            Scalar::int(&b, 2),
            Scalar::int(&b, 7),
        ]);
        let y = GroupElt::new(g, p).unwrap();
        assert!(is_generic(&y));
        assert_eq!(normal_form(&y).unwrap().element, nf.element);
    }

    #[test]
    fn exceptional_generator_is_not_generic() {
        let b = EigenBasis::formal([c(0.5), c(0.5)], &[[1, -1]]).unwrap();
        let (m, n) = (2i64, 3usize);
        let l = Scalar::generator(&b, 0);
        let eps_inv = Scalar::generator_pow(&b, 0, -Q::new(m, n as i64));
        let g = Mat2::diag(&l * &eps_inv, eps_inv).unwrap();
        let x = GroupElt::new(g, HomogPoly::monomial(n, m as usize, l.pow(-m).unwrap())).unwrap();
        assert!(!is_generic(&x));
        let nf = normal_form(&x).unwrap();
        let k = if nf.swap_applied { 1 } else { 2 };
        assert_eq!(nf.element.p().coeff(k), &Scalar::one(&b));
        assert!(is_normal_form(&nf.element));
        assert_eq!(resonant_terms(&x).unwrap().leading, Some(2));
    }

    #[test]
    fn identity_stratum_is_not_unique() {
        let b = EigenBasis::free();
        let p = HomogPoly::new(vec![
            Scalar::int(&b, 1),
            Scalar::int(&b, 2),
            Scalar::int(&b, 3),
        ]);
        let x = GroupElt::new(
            Mat2::diag(Scalar::int(&b, -1), Scalar::int(&b, -1)).unwrap(),
            p.clone(),
        )
        .unwrap();
        let nf = normal_form(&x).unwrap();
        assert!(!nf.unique);
        assert_eq!(nf.element.p(), &p);
    }
}
