//! Univariate polynomials over the rationals.
//!
//! Provides the exact root-counting machinery the spectral module is built
//! on: Sturm chains, Cauchy indices, square-free reduction, and the
//! resultant construction whose real roots are the pairwise root averages
//! (alpha + beta)/2 of the input polynomial.

use crate::matrix::RatMatrix;
use crate::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial with rational coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<Rat>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPolynomial { coeffs: vec![Rat::one()] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// x - r
    pub fn linear_root(r: &Rat) -> Self {
        Self::new(vec![-r.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        RatPolynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RatPolynomial { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// p(-x)
    pub fn reflect(&self) -> Self {
        RatPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() })
                .collect(),
        }
    }

    /// p(c - x), by Horner over the linear substitution.
    pub fn compose_c_minus_x(&self, c: &Rat) -> Self {
        let lin = RatPolynomial::new(vec![c.clone(), -Rat::one()]);
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(a.clone()));
        }
        acc
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() < div.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lead;
            quot[k - dd] = q.clone();
            for j in 0..=dd {
                let v = &rem[k - dd + j] - &(&div.coeffs[j] * &q);
                rem[k - dd + j] = v;
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Positive rational c such that self/c has coprime integer coefficients.
    fn positive_content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rat::one();
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Scales by a positive constant to coprime integer coefficients;
    /// preserves signs and roots.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.positive_content();
        self.scale(&(Rat::one() / c))
    }

    /// Primitive with positive leading coefficient (canonical gcd form).
    fn primitive_monic_sign(&self) -> Self {
        let p = self.primitive();
        if p.leading_coeff().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Polynomial gcd, primitive with positive leading coefficient.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut f = a.primitive();
        let mut g = b.primitive();
        while !g.is_zero() {
            let (_, r) = f.divrem(&g);
            f = g;
            g = r.primitive();
        }
        f.primitive_monic_sign()
    }

    /// Square-free part self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        if self.degree().is_none_or(|d| d == 0) {
            return self.clone();
        }
        let g = Self::gcd(self, &self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q
    }

    /// Cauchy bound: every real root lies in (-b, b).
    pub fn root_bound(&self) -> Rat {
        let lead = self.leading_coeff();
        assert!(!lead.is_zero(), "root bound of the zero polynomial");
        let mut max = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = (c / &lead).abs();
            if q > max {
                max = q;
            }
        }
        max + Rat::one()
    }

    /// Splits p(i*w) into real and imaginary parts: p(i*w) = A(w) + i*B(w).
    /// This is the even/odd decomposition p(s) = E(s^2) + s*O(s^2) read on
    /// the imaginary axis: A(w) = E(-w^2), B(w) = w*O(-w^2).
    pub fn imaginary_axis_parts(&self) -> (Self, Self) {
        let mut re = vec![Rat::zero(); self.coeffs.len()];
        let mut im = vec![Rat::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            // i^k cycles 1, i, -1, -i
            match k % 4 {
                0 => re[k] = c.clone(),
                1 => im[k] = c.clone(),
                2 => re[k] = -c.clone(),
                _ => im[k] = -c.clone(),
            }
        }
        (Self::new(re), Self::new(im))
    }
}

// ---------------------------------------------------------------------------
// Sturm chains and root counting
// ---------------------------------------------------------------------------

/// Generalized Sturm chain f0, f1, -rem(f0,f1), ... with primitive
/// (positive-constant) normalization at every step.
pub fn sturm_chain_pair(f0: &RatPolynomial, f1: &RatPolynomial) -> Vec<RatPolynomial> {
    let mut chain = Vec::new();
    let mut a = f0.primitive();
    let mut b = f1.primitive();
    if a.is_zero() {
        return vec![b];
    }
    chain.push(a.clone());
    while !b.is_zero() {
        chain.push(b.clone());
        let (_, r) = a.divrem(&b);
        a = b;
        b = r.neg().primitive();
    }
    chain
}

pub fn sturm_chain(p: &RatPolynomial) -> Vec<RatPolynomial> {
    sturm_chain_pair(p, &p.derivative())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

fn sign_of(x: &Rat) -> Sign {
    if x.is_zero() {
        Sign::Zero
    } else if x.is_positive() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

fn variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut count = 0;
    let mut last: Option<Sign> = None;
    for s in signs {
        if s == Sign::Zero {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

// Sign of p(a/b) for b > 0 without rational arithmetic: when p has integer
// coefficients (every Sturm chain member is primitive), the sign equals the
// sign of sum_k c_k a^k b^(d-k), an integer Horner evaluation. Rational
// coefficients fall back to direct evaluation.
fn sign_eval(p: &RatPolynomial, num: &BigInt, den: &BigInt) -> Sign {
    if p.is_zero() {
        return Sign::Zero;
    }
    if p.coeffs.iter().any(|c| !c.denom().is_one()) {
        return sign_of(&p.eval(&Rat::new(num.clone(), den.clone())));
    }
    let d = p.coeffs.len() - 1;
    let mut den_pows = Vec::with_capacity(d + 1);
    den_pows.push(BigInt::one());
    for k in 1..=d {
        let next = &den_pows[k - 1] * den;
        den_pows.push(next);
    }
    let mut acc = p.coeffs[d].numer().clone();
    for k in (0..d).rev() {
        acc = acc * num + p.coeffs[k].numer() * &den_pows[d - k];
    }
    if acc.is_zero() {
        Sign::Zero
    } else if acc.is_positive() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

fn variations_at(chain: &[RatPolynomial], x: &Rat) -> usize {
    variations(chain.iter().map(|p| sign_eval(p, x.numer(), x.denom())))
}

fn variations_at_pos_inf(chain: &[RatPolynomial]) -> usize {
    variations(chain.iter().map(|p| sign_of(&p.leading_coeff())))
}

fn variations_at_neg_inf(chain: &[RatPolynomial]) -> usize {
    variations(chain.iter().map(|p| {
        let s = sign_of(&p.leading_coeff());
        match (s, p.degree().map_or(0, |d| d % 2)) {
            (Sign::Zero, _) => Sign::Zero,
            (s, 0) => s,
            (Sign::Pos, _) => Sign::Neg,
            (Sign::Neg, _) => Sign::Pos,
        }
    }))
}

/// Number of distinct real roots of the chain's head polynomial.
/// Valid for non-square-free input as well (the chain ends at the gcd and
/// common positive factors do not change sign variations).
pub fn count_real_roots(p: &RatPolynomial) -> usize {
    if p.degree().is_none_or(|d| d == 0) {
        return 0;
    }
    let chain = sturm_chain(p);
    variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain)
}

/// Distinct real roots in the open interval (lo, hi). Endpoints must not be
/// roots.
pub fn count_real_roots_between(p: &RatPolynomial, lo: &Rat, hi: &Rat) -> usize {
    assert!(lo < hi);
    assert!(!p.eval(lo).is_zero() && !p.eval(hi).is_zero(), "endpoint is a root");
    if p.degree().is_none_or(|d| d == 0) {
        return 0;
    }
    let chain = sturm_chain(p);
    variations_at(&chain, lo) - variations_at(&chain, hi)
}

/// Real roots counted with multiplicity, via the derivative-gcd descent:
/// every root of p survives in gcd(p, p') with multiplicity reduced by one.
pub fn count_real_roots_with_multiplicity(p: &RatPolynomial) -> usize {
    if p.degree().is_none_or(|d| d == 0) {
        return 0;
    }
    count_real_roots(p) + count_real_roots_with_multiplicity(&RatPolynomial::gcd(p, &p.derivative()))
}

/// Cauchy index of A/B over the whole real line: the number of poles where
/// the (reduced) ratio jumps from -inf to +inf minus those jumping from
/// +inf to -inf.
pub fn cauchy_index(num: &RatPolynomial, den: &RatPolynomial) -> i64 {
    if den.is_zero() || num.is_zero() {
        return 0;
    }
    let chain = sturm_chain_pair(den, num);
    variations_at_neg_inf(&chain) as i64 - variations_at_pos_inf(&chain) as i64
}

// ---------------------------------------------------------------------------
// Root isolation helpers
// ---------------------------------------------------------------------------

/// Smallest real root of a polynomial with at least one real root, refined
/// to an enclosure of width <= tol by Sturm bisection. Returns a point
/// interval whenever the root is rational: a rational root of the primitive
/// square-free part u/v has v dividing the leading coefficient L, and once
/// the enclosure is narrower than 1/(2 L^2) it contains at most one rational
/// with denominator <= L, which the Stern-Brocot walk recovers and an exact
/// evaluation confirms or rejects.
pub fn isolate_smallest_real_root(p: &RatPolynomial, tol: &Rat) -> crate::rat::RatInterval {
    use crate::rat::RatInterval;
    let sf = p.squarefree_part().primitive();
    assert!(count_real_roots(&sf) > 0, "no real roots to isolate");
    let chain = sturm_chain(&sf);
    let two = Rat::from_integer(BigInt::from(2));
    let bound = sf.root_bound();
    // Invariant: lo, hi are non-roots and (lo, hi) contains the smallest
    // real root together with `count` roots in total.
    let mut lo = -bound.clone();
    let mut hi = bound;
    let mut v_lo = variations_at(&chain, &lo);
    let mut count = v_lo - variations_at(&chain, &hi);
    let lead = sf.leading_coeff().numer().abs();
    // Rational recognition is complete once the enclosure is narrower than
    // 1/(2 L^2); skip it when the leading coefficient is so large that the
    // required refinement would dwarf the requested tolerance (the result
    // is still a correct enclosure, just not upgraded to a point).
    let sep = if lead.bits() <= 64 {
        Some(Rat::new(BigInt::one(), &lead * &lead * BigInt::from(2)))
    } else {
        None
    };
    let target = match &sep {
        Some(s) if s < tol => s.clone(),
        _ => tol.clone(),
    };
    while count > 1 || &hi - &lo > target {
        let mid = (&lo + &hi) / &two;
        if sign_eval(&sf, mid.numer(), mid.denom()) == Sign::Zero {
            // V jumps by one across a root of the square-free head, and the
            // zero-skip convention makes V(mid) the right-limit value.
            let n_left = v_lo - variations_at(&chain, &mid) - 1;
            if n_left == 0 {
                return RatInterval::point(mid);
            }
            // Move hi strictly left of mid without crossing other roots.
            let mut delta = (&mid - &lo) / &two;
            loop {
                let candidate = &mid - &delta;
                if sign_eval(&sf, candidate.numer(), candidate.denom()) != Sign::Zero
                    && v_lo - variations_at(&chain, &candidate) == n_left
                {
                    hi = candidate;
                    count = n_left;
                    break;
                }
                delta /= &two;
            }
            continue;
        }
        let n_left = v_lo - variations_at(&chain, &mid);
        if n_left >= 1 {
            hi = mid;
            count = n_left;
        } else {
            lo = mid;
            v_lo = variations_at(&chain, &lo);
        }
    }
    if sep.is_some() {
        let candidate = simplest_rational_between(&lo, &hi);
        if sf.eval(&candidate).is_zero() {
            return RatInterval::point(candidate);
        }
    }
    RatInterval::new(lo, hi)
}

/// Simplest rational (smallest denominator, then smallest numerator) in the
/// open interval (a, b), via the Stern-Brocot / continued fraction walk.
pub fn simplest_rational_between(a: &Rat, b: &Rat) -> Rat {
    assert!(a < b);
    simplest_rec(a, b)
}

fn simplest_rec(a: &Rat, b: &Rat) -> Rat {
    let fa = a.floor();
    let next_int = &fa + Rat::one();
    if &next_int < b && a < &next_int {
        return next_int;
    }
    if a.denom().is_one() {
        // a is an integer; (a, b) with b <= a+1: candidates a + 1/k
        let shifted_a = Rat::zero();
        let shifted_b = b - a;
        let inner = simplest_pos_rec(&shifted_a, &shifted_b);
        return a + inner;
    }
    if a.is_negative() && b.is_positive() {
        return Rat::zero();
    }
    if !a.is_negative() {
        let inner = simplest_pos_rec(&(a - &fa), &(b - &fa));
        fa + inner
    } else {
        // mirror to positive
        -simplest_rec(&-b.clone(), &-a.clone())
    }
}

// simplest rational in (a, b) with 0 <= a < b <= 1, a, b in [0,1]
fn simplest_pos_rec(a: &Rat, b: &Rat) -> Rat {
    debug_assert!(!a.is_negative() && a < b);
    if a.is_zero() {
        // 1/ceil(1/b + tiny): smallest k with 1/k < b
        let inv = Rat::one() / b;
        let mut k = inv.ceil();
        if &(Rat::one() / &k) >= b {
            k += Rat::one();
        }
        return Rat::one() / k;
    }
    // invert: (a,b) in (0,1): simplest = 1 / simplest_in(1/b, 1/a)
    Rat::one() / simplest_rec(&(Rat::one() / b), &(Rat::one() / a))
}

// ---------------------------------------------------------------------------
// Pair-average resultant
// ---------------------------------------------------------------------------

/// Resultant of two polynomials in one variable, via the Sylvester matrix.
pub fn resultant(f: &RatPolynomial, g: &RatPolynomial) -> Rat {
    let (df, dg) = match (f.degree(), g.degree()) {
        (Some(df), Some(dg)) => (df, dg),
        _ => return Rat::zero(),
    };
    if df == 0 && dg == 0 {
        return Rat::one();
    }
    let n = df + dg;
    let m = RatMatrix::from_fn(n, n, |r, c| {
        if r < dg {
            // row of f coefficients, shifted
            let idx = df as isize - (c as isize - r as isize);
            if idx >= 0 && idx <= df as isize {
                f.coeff(idx as usize)
            } else {
                Rat::zero()
            }
        } else {
            let rr = r - dg;
            let idx = dg as isize - (c as isize - rr as isize);
            if idx >= 0 && idx <= dg as isize {
                g.coeff(idx as usize)
            } else {
                Rat::zero()
            }
        }
    });
    m.det().expect("sylvester matrix is square")
}

/// Polynomial (up to a nonzero constant) whose roots are all pairwise
/// averages (alpha + beta)/2 of roots of p, including alpha = beta. Every
/// real part of a root of p is a real root of this polynomial, and its
/// smallest real root equals the smallest real part when p has one.
///
/// Computed as Res_y(p(y), p(2x - y)) by evaluation at 0, +-1, +-2, ... and
/// Newton interpolation (exact).
pub fn pair_average_resultant(p: &RatPolynomial) -> RatPolynomial {
    let n = p.degree().expect("nonzero polynomial required");
    assert!(n >= 1);
    let deg_bound = n * n;
    let two = Rat::from_integer(BigInt::from(2));
    let mut xs = Vec::with_capacity(deg_bound + 1);
    let mut ys = Vec::with_capacity(deg_bound + 1);
    let mut k = 0i64;
    while xs.len() <= deg_bound {
        let x = Rat::from_integer(BigInt::from(k));
        let c = &two * &x;
        let q = p.compose_c_minus_x(&c);
        xs.push(x);
        ys.push(resultant(p, &q));
        k = if k >= 0 { -(k + 1) } else { -k };
    }
    newton_interpolate(&xs, &ys).primitive()
}

/// Exact Newton interpolation through distinct nodes.
pub fn newton_interpolate(xs: &[Rat], ys: &[Rat]) -> RatPolynomial {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut table: Vec<Rat> = ys.to_vec();
    // divided differences in place: table[i] = f[x_0..x_i]
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &table[i] - &table[i - 1];
            let den = &xs[i] - &xs[i - level];
            table[i] = num / den;
        }
    }
    // horner over newton basis
    let mut poly = RatPolynomial::zero();
    for i in (0..n).rev() {
        let lin = RatPolynomial::new(vec![-xs[i].clone(), Rat::one()]);
        poly = poly.mul(&lin).add(&RatPolynomial::constant(table[i].clone()));
    }
    poly
}
