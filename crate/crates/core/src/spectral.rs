//! Exact characteristic polynomials and certified classification of
//! eigenvalue real parts.
//!
//! Sign tallies (how many roots have positive / zero / negative real part)
//! are exact decisions. Roots on the imaginary axis are counted through the
//! even/odd decomposition p(s) = E(s^2) + s O(s^2): s = i w is a root
//! exactly when E(-w^2) and w O(-w^2) both vanish, so the count reduces to
//! real-root counting of gcd(A, B) where p(i w) = A(w) + i B(w). Off-axis
//! tallies come from a Cauchy-index computation (a generalized Sturm
//! chain), applied after splitting off the factor carrying symmetric root
//! pairs. Only the numeric value of the smallest real part is an interval,
//! produced by Sturm bisection of the pairwise-average resultant.

use crate::matrix::RatMatrix;
use crate::poly::{
    cauchy_index, count_real_roots, isolate_smallest_real_root, pair_average_resultant,
    sturm_chain, RatPolynomial,
};
use crate::rat::{Rat, RatInterval};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectralError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Multiplicity-counted real-part tallies for the roots of a rational
/// polynomial, with a certified enclosure of the smallest real part when
/// every root lies strictly in the right half plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealPartReport {
    pub count_positive: usize,
    pub count_zero: usize,
    pub count_negative: usize,
    /// Present exactly when count_zero == count_negative == 0; a point
    /// interval whenever the minimum is rational.
    pub min_positive_real_part: Option<RatInterval>,
    /// Exact: -(second-leading coefficient)/(leading coefficient).
    pub sum_real_parts: Rat,
}

/// Monic characteristic polynomial det(tI - M) by the Faddeev-LeVerrier
/// recurrence, exact over the rationals.
pub fn char_poly(m: &RatMatrix) -> Result<RatPolynomial, SpectralError> {
    if m.rows() != m.cols() {
        return Err(SpectralError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(RatPolynomial::one());
    }
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut b = m.clone();
    coeffs[n - 1] = -b.trace();
    for k in 2..=n {
        let mut shifted = b;
        for i in 0..n {
            *shifted.at_mut(i, i) += &coeffs[n - k + 1];
        }
        b = m.mul(&shifted);
        coeffs[n - k] = -(b.trace() / Rat::from_integer(k.into()));
    }
    Ok(RatPolynomial::new(coeffs))
}

/// Number of roots with real part zero, counted with multiplicity.
pub fn imaginary_axis_roots(p: &RatPolynomial) -> Result<usize, SpectralError> {
    if p.is_zero() {
        return Err(SpectralError::ZeroPolynomial);
    }
    Ok(imaginary_axis_roots_inner(p))
}

fn imaginary_axis_roots_inner(p: &RatPolynomial) -> usize {
    if p.degree().is_none_or(|d| d == 0) {
        return 0;
    }
    let (a, b) = p.imaginary_axis_parts();
    let h = RatPolynomial::gcd(&a, &b);
    let distinct = count_real_roots(&h);
    distinct + imaginary_axis_roots_inner(&RatPolynomial::gcd(p, &p.derivative()))
}

/// Multiplicity-counted tallies (positive, zero, negative) of root real
/// parts. Exact for arbitrary rational polynomials.
pub fn real_part_counts(p: &RatPolynomial) -> Result<(usize, usize, usize), SpectralError> {
    if p.is_zero() {
        return Err(SpectralError::ZeroPolynomial);
    }
    Ok(counts_with_multiplicity(p))
}

fn counts_with_multiplicity(p: &RatPolynomial) -> (usize, usize, usize) {
    if p.degree().is_none_or(|d| d == 0) {
        return (0, 0, 0);
    }
    let (dp, dz, dn) = counts_distinct(&p.squarefree_part().primitive());
    let (rp, rz, rn) = counts_with_multiplicity(&RatPolynomial::gcd(p, &p.derivative()));
    (dp + rp, dz + rz, dn + rn)
}

// Tallies over distinct roots of a square-free polynomial.
fn counts_distinct(f: &RatPolynomial) -> (usize, usize, usize) {
    let n = match f.degree() {
        None | Some(0) => return (0, 0, 0),
        Some(n) => n,
    };
    // Distinct roots on the axis.
    let (a, b) = f.imaginary_axis_parts();
    let h = RatPolynomial::gcd(&a, &b);
    let m = count_real_roots(&h);
    // Factor carrying the axis roots and all symmetric pairs {r, -r}.
    let g = RatPolynomial::gcd(f, &f.reflect());
    let dg = g.degree().unwrap_or(0);
    debug_assert!(dg >= m && (dg - m) % 2 == 0);
    let s = (dg - m) / 2; // pairs with nonzero real parts of both signs
    let f1 = if dg == 0 {
        f.clone()
    } else {
        let (q, r) = f.divrem(&g);
        debug_assert!(r.is_zero());
        q
    };
    let k1 = right_half_plane_roots(&f1);
    let n1 = f1.degree().unwrap_or(0);
    let _ = n;
    (k1 + s, m, (n1 - k1) + s)
}

// Number of roots of a square-free polynomial with no imaginary-axis roots
// and no symmetric pairs that lie in the open right half plane, via the
// argument principle: the winding of f(i w) along the axis is
// pi (n - 2k), and it equals pi I(A/B) minus the boundary arctan term.
fn right_half_plane_roots(f1: &RatPolynomial) -> usize {
    let n = match f1.degree() {
        None | Some(0) => return 0,
        Some(n) => n,
    };
    let (a, b) = f1.imaginary_axis_parts();
    debug_assert!(!a.is_zero() && !b.is_zero());
    let index = cauchy_index(&a, &b);
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    let boundary: i64 = if da > db {
        let sign = a.leading_coeff() * b.leading_coeff();
        if sign.is_positive() {
            1
        } else {
            -1
        }
    } else {
        0
    };
    let k2 = n as i64 - index + boundary;
    debug_assert!(k2 >= 0 && k2 % 2 == 0, "argument principle parity failure");
    (k2 / 2) as usize
}

/// True exactly when every complex root has strictly positive real part.
///
/// Fast path: the Routh table of p(-t) (all roots of p in the open right
/// half plane iff p(-t) is Hurwitz-stable iff the table completes with a
/// positive first column). Zero pivots and zero rows are never patched with
/// epsilon perturbations; such tables fall back to the exact tally.
pub fn all_roots_positive_real_part(p: &RatPolynomial) -> Result<bool, SpectralError> {
    let n = match p.degree() {
        None => return Err(SpectralError::ZeroPolynomial),
        Some(0) => return Ok(true),
        Some(n) => n,
    };
    match routh_hurwitz_stable(&p.reflect()) {
        Some(stable) => Ok(stable),
        None => {
            let (pos, _, _) = real_part_counts(p)?;
            Ok(pos == n)
        }
    }
}

// Some(true/false) when the classical Routh table is decisive; None when a
// zero pivot or zero row appears.
fn routh_hurwitz_stable(q: &RatPolynomial) -> Option<bool> {
    let n = q.degree()?;
    if n == 0 {
        return Some(true);
    }
    let mut q = q.clone();
    if q.leading_coeff().is_negative() {
        q = q.neg();
    }
    // rows indexed by descending powers; row0: a_n, a_{n-2}, ...
    let coeff_desc = |k: usize| q.coeff(k);
    let width = n / 2 + 1;
    let mut prev: Vec<Rat> = (0..width)
        .map(|i| if n >= 2 * i { coeff_desc(n - 2 * i) } else { Rat::zero() })
        .collect();
    let mut curr: Vec<Rat> = (0..width)
        .map(|i| if n >= 2 * i + 1 { coeff_desc(n - 2 * i - 1) } else { Rat::zero() })
        .collect();
    let mut first_column = vec![prev[0].clone()];
    for _row in 1..=n {
        if curr.iter().all(|c| c.is_zero()) {
            return None; // zero row: symmetric root constellation
        }
        if curr[0].is_zero() {
            return None; // zero pivot with nonzero row
        }
        first_column.push(curr[0].clone());
        let mut next = vec![Rat::zero(); width];
        for i in 0..width - 1 {
            let a = prev.get(i + 1).cloned().unwrap_or_else(Rat::zero);
            let b = curr.get(i + 1).cloned().unwrap_or_else(Rat::zero);
            next[i] = &a - &(&prev[0] * &b / &curr[0]);
        }
        prev = curr;
        curr = next;
    }
    Some(first_column.iter().all(|c| c.is_positive()))
}

/// Full real-part report at the requested interval width.
pub fn real_part_report(p: &RatPolynomial, tol: &Rat) -> Result<RealPartReport, SpectralError> {
    let n = match p.degree() {
        None => return Err(SpectralError::ZeroPolynomial),
        Some(n) => n,
    };
    let (pos, zero, neg) = real_part_counts(p)?;
    debug_assert_eq!(pos + zero + neg, n);
    let sum_real_parts = if n == 0 {
        Rat::zero()
    } else {
        -(p.coeff(n - 1) / p.leading_coeff())
    };
    let min_positive_real_part = if n >= 1 && zero == 0 && neg == 0 {
        Some(min_real_part_interval(p, tol))
    } else {
        None
    };
    Ok(RealPartReport { count_positive: pos, count_zero: zero, count_negative: neg, min_positive_real_part, sum_real_parts })
}

// Certified enclosure of the smallest root real part, assuming all real
// parts are positive. Real roots are their own real parts; real parts of
// complex pairs are real roots of the pairwise-average resultant, and every
// real root of that resultant is an average of two real parts, so its
// smallest real root is exactly the smallest real part.
fn min_real_part_interval(p: &RatPolynomial, tol: &Rat) -> RatInterval {
    let sf = p.squarefree_part().primitive();
    let deg = sf.degree().unwrap();
    let distinct_real = count_real_roots(&sf);
    let target = if distinct_real == deg {
        sf.clone()
    } else {
        pair_average_resultant(&sf)
    };
    let mut width = tol.clone();
    loop {
        let iv = isolate_smallest_real_root(&target, &width);
        if iv.lo.is_positive() {
            return iv;
        }
        if iv.is_point() {
            // all real parts positive, so a nonpositive point is impossible
            panic!("nonpositive minimum real part under positivity hypothesis");
        }
        width /= Rat::from_integer(16.into());
    }
}

/// Verifies that a Sturm chain of the polynomial is nontrivial; exposed for
/// diagnostics in reports.
pub fn sturm_chain_length(p: &RatPolynomial) -> usize {
    if p.is_zero() {
        return 0;
    }
    sturm_chain(p).len()
}
