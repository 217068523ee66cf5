//! Exact univariate polynomial helpers over the rationals.
//!
//! Dense little-endian coefficient vectors.  Provides the pieces needed by
//! the number-field layer: Horner evaluation (point and interval), Sturm
//! chains for real-root counting, bisection-based root isolation, extended
//! gcd for modular inversion, and small-degree irreducibility tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type RatPoly = Vec<BigRational>;

pub fn from_bigints(coeffs: &[BigInt]) -> RatPoly {
    coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

pub fn trim(mut p: RatPoly) -> RatPoly {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &RatPoly) -> usize {
    p.len().saturating_sub(1)
}

pub fn eval(p: &RatPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn derivative(p: &RatPoly) -> RatPoly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

/// Remainder of `a / b`; `b` must be nonzero.
pub fn rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let b = trim(b.clone());
    assert!(!is_zero(&b), "polynomial division by zero");
    let mut r = trim(a.clone());
    let db = degree(&b);
    let lead_inv = b[db].recip();
    while !is_zero(&r) && degree(&r) >= db {
        let dr = degree(&r);
        let factor = &r[dr] * &lead_inv;
        for i in 0..=db {
            let idx = dr - db + i;
            let delta = &factor * &b[i];
            r[idx] -= delta;
        }
        r = trim(r);
        if dr == 0 {
            break;
        }
    }
    r
}

pub fn is_zero(p: &RatPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Sturm chain of a squarefree polynomial.
pub fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![trim(p.clone()), trim(derivative(p))];
    loop {
        let n = chain.len();
        let r = rem(&chain[n - 2], &chain[n - 1]);
        if is_zero(&r) {
            break;
        }
        chain.push(r.iter().map(|c| -c).collect());
    }
    chain
}

fn sign_variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let v = eval(p, x);
        let s = if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
pub fn count_roots(chain: &[RatPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(chain, a) - sign_variations(chain, b)
}

/// Cauchy bound: all real roots lie in `(-B, B]`.
pub fn cauchy_bound(p: &RatPoly) -> BigRational {
    let p = trim(p.clone());
    let d = degree(&p);
    let lead = p[d].abs();
    let mut max = BigRational::zero();
    for c in &p[..d] {
        let v = c.abs() / &lead;
        if v > max {
            max = v;
        }
    }
    max + BigRational::one()
}

/// Isolating interval for one simple real root: the signs of the polynomial
/// at the two endpoints differ and no other root lies inside.
#[derive(Debug, Clone)]
pub struct RootWindow {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootWindow {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }
}

/// Isolate all real roots of a squarefree polynomial with no rational roots
/// (degree-1 inputs are handled exactly).  Returned ascending.
pub fn isolate_real_roots(p: &RatPoly) -> Vec<RootWindow> {
    let p = trim(p.clone());
    if degree(&p) == 1 {
        let root = -(&p[0] / &p[1]);
        return vec![RootWindow { lo: root.clone(), hi: root }];
    }
    let chain = sturm_chain(&p);
    let bound = cauchy_bound(&p);
    let mut stack = vec![(-bound.clone(), bound.clone())];
    let mut found = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(&chain, &lo, &hi);
        match n {
            0 => {}
            1 => found.push(RootWindow { lo, hi }),
            _ => {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                // No rational roots, so the midpoint never lands on one.
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    found.sort_by(|a, b| a.lo.cmp(&b.lo));
    found
}

/// One bisection step on an isolating window.
pub fn refine(p: &RatPoly, w: &RootWindow) -> RootWindow {
    if w.lo == w.hi {
        return w.clone();
    }
    let mid = w.midpoint();
    let f_lo = eval(p, &w.lo);
    let f_mid = eval(p, &mid);
    if f_lo.is_negative() == f_mid.is_negative() && !f_mid.is_zero() {
        RootWindow { lo: mid, hi: w.hi.clone() }
    } else {
        RootWindow { lo: w.lo.clone(), hi: mid }
    }
}

/// Refine until the window is narrower than `eps`.
pub fn refine_to(p: &RatPoly, w: &RootWindow, eps: &BigRational) -> RootWindow {
    let mut w = w.clone();
    while w.width() > *eps {
        w = refine(p, &w);
    }
    w
}

/// Interval with exact rational endpoints.
#[derive(Debug, Clone)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let prods = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = prods[0].clone();
        let mut hi = prods[0].clone();
        for p in &prods[1..] {
            if *p < lo {
                lo = p.clone();
            }
            if *p > hi {
                hi = p.clone();
            }
        }
        RatInterval { lo, hi }
    }

    /// Sign if the interval is separated from zero, else None.
    pub fn definite_sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }
}

/// Interval Horner evaluation of `p` over `x`.
pub fn eval_interval(p: &[BigRational], x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(BigRational::zero());
    for c in p.iter().rev() {
        acc = acc.mul(x).add(&RatInterval::point(c.clone()));
    }
    acc
}

/// Irreducibility over Q of a monic integer polynomial, complete for
/// degree ≤ 4 (Gauss: a monic integer polynomial factors over Q iff it
/// factors over Z).  Degrees above 4 are accepted without a check.
pub fn is_irreducible_monic(coeffs: &[BigInt]) -> bool {
    let d = coeffs.len() - 1;
    assert!(coeffs[d].is_one(), "polynomial must be monic");
    if d <= 1 {
        return d == 1;
    }
    if d > 4 {
        return true;
    }
    if has_integer_root(coeffs) {
        return false;
    }
    if d < 4 {
        return true;
    }
    !has_quadratic_factor(coeffs)
}

fn integer_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            out.push(i.clone());
            out.push(&n / &i);
        }
        i += 1;
    }
    out.sort();
    out.dedup();
    out
}

fn has_integer_root(coeffs: &[BigInt]) -> bool {
    let c0 = &coeffs[0];
    if c0.is_zero() {
        return true; // x divides
    }
    let eval_int = |x: &BigInt| -> BigInt {
        let mut acc = BigInt::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    for dpos in integer_divisors(c0) {
        if eval_int(&dpos).is_zero() || eval_int(&(-&dpos)).is_zero() {
            return true;
        }
    }
    false
}

/// Monic quartic: search for a factorization into two monic integer
/// quadratics (x²+px+q)(x²+rx+s).
fn has_quadratic_factor(coeffs: &[BigInt]) -> bool {
    let (c0, c1, c2, c3) = (&coeffs[0], &coeffs[1], &coeffs[2], &coeffs[3]);
    let mut q_candidates = Vec::new();
    if c0.is_zero() {
        return true;
    }
    for d in integer_divisors(c0) {
        q_candidates.push(d.clone());
        q_candidates.push(-d);
    }
    for q in &q_candidates {
        if (c0 % q).is_zero() {
            let s = c0 / q;
            // p + r = c3, p·r = c2 - q - s; p, r are the integer roots of
            // t² - c3·t + (c2 - q - s).
            let sum = c3.clone();
            let prod = c2 - q - &s;
            let disc = &sum * &sum - BigInt::from(4) * &prod;
            if disc.is_negative() {
                continue;
            }
            let root = disc.sqrt();
            if &root * &root != disc {
                continue;
            }
            for sign in [1, -1] {
                let two_p = &sum + BigInt::from(sign) * &root;
                if (&two_p % BigInt::from(2)).is_zero() {
                    let p = two_p / BigInt::from(2);
                    let r = &sum - &p;
                    if &p * &s + q * &r == *c1 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn sturm_counts_roots_of_x2_minus_2() {
        let p = from_bigints(&int_poly(&[-2, 0, 1]));
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        let w = refine_to(&p, &roots[1], &BigRational::new(1.into(), 1_000_000.into()));
        let mid = w.midpoint();
        let sq = &mid * &mid;
        assert!((sq - BigRational::from_integer(2.into())).abs()
            < BigRational::new(1.into(), 1000.into()));
    }

    #[test]
    fn irreducibility_small_degrees() {
        assert!(is_irreducible_monic(&int_poly(&[-2, 0, 1]))); // x²-2
        assert!(!is_irreducible_monic(&int_poly(&[-4, 0, 1]))); // x²-4
        assert!(is_irreducible_monic(&int_poly(&[-1, -3, 0, 1]))); // x³-3x-1
        assert!(!is_irreducible_monic(&int_poly(&[1, 0, 2, 0, 1]))); // (x²+1)²
        assert!(is_irreducible_monic(&int_poly(&[1, -4, -4, 0, 1]))); // x⁴-4x²-4x+1? keep: no int roots
    }

    #[test]
    fn quartic_with_quadratic_split_detected() {
        // (x²-2)(x²-3) = x⁴ -5x² + 6
        assert!(!is_irreducible_monic(&int_poly(&[6, 0, -5, 0, 1])));
    }

    #[test]
    fn interval_eval_brackets_value() {
        let p: RatPoly = from_bigints(&int_poly(&[1, 2, 1])); // (x+1)²
        let x = RatInterval {
            lo: BigRational::new(1.into(), 2.into()),
            hi: BigRational::new(3.into(), 4.into()),
        };
        let v = eval_interval(&p, &x);
        let exact = eval(&p, &BigRational::new(5.into(), 8.into()));
        assert!(v.lo <= exact && exact <= v.hi);
    }
}
