//! Truncated arithmetic-function series indexed by 1..N.
//!
//! Carries the Dirichlet convolution (f∗g)(n) = Σ_{d|n} f(d)g(n/d) with its
//! recursive inverse, the coprime-restricted convolution f⊗̌g (sum over
//! factorizations n₁n₂ = n with gcd(n₁,n₂) = 1) with its inverse, pointwise
//! coefficient actions, polylogarithm coefficients 1/n^s, multiplicativity
//! classification, and the prime-vector model of completely multiplicative
//! series together with the finite model of "equal at all but finitely many
//! primes".
//!
//! The truncation N is a hard parameter: binary operations on series of
//! different lengths are errors, never silent re-truncations.  All divisor
//! sums stay inside 1..N by construction.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::AlgElem;
use crate::coeff::{Coefficient, Domain};
use crate::error::{Error, Result};
use crate::numfield::NumberField;

/// Truncated coefficient sequence a₁ … a_N, homogeneous in one domain.
#[derive(Debug, Clone, PartialEq)]
pub struct ArithSeries {
    domain: Domain,
    /// coeffs[i] is a_{i+1}.
    coeffs: Vec<Coefficient>,
}

impl ArithSeries {
    pub fn zero(n: usize, domain: Domain) -> Self {
        assert!(n >= 1, "truncation must be at least 1");
        ArithSeries { domain, coeffs: vec![Coefficient::zero(domain); n] }
    }

    /// The convolution identity ε: a₁ = 1, all other coefficients 0.
    pub fn epsilon(n: usize) -> Self {
        let mut s = Self::zero(n, Domain::Rational);
        s.coeffs[0] = Coefficient::one(Domain::Rational);
        s
    }

    /// The all-ones series.
    pub fn ones(n: usize) -> Self {
        ArithSeries {
            domain: Domain::Rational,
            coeffs: vec![Coefficient::one(Domain::Rational); n],
        }
    }

    pub fn from_fn<F: FnMut(usize) -> Coefficient>(n: usize, domain: Domain, mut f: F) -> Self {
        let coeffs = (1..=n)
            .map(|i| {
                let c = f(i);
                assert_eq!(c.domain(), domain, "coefficient domain mismatch at n={i}");
                c
            })
            .collect();
        ArithSeries { domain, coeffs }
    }

    pub fn from_coeffs(domain: Domain, coeffs: Vec<Coefficient>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parse("series needs at least one coefficient".into()));
        }
        for c in &coeffs {
            if c.domain() != domain {
                return Err(Error::DomainMismatch);
            }
        }
        Ok(ArithSeries { domain, coeffs })
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// 1-based access.
    pub fn get(&self, n: usize) -> &Coefficient {
        &self.coeffs[n - 1]
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn set(&mut self, n: usize, c: Coefficient) {
        assert_eq!(c.domain(), self.domain);
        self.coeffs[n - 1] = c;
    }

    pub fn promote(&self, target: Domain) -> Result<ArithSeries> {
        if !self.domain.promotes_to(target) {
            return Err(Error::DomainMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.promote(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(ArithSeries { domain: target, coeffs })
    }

    fn check_match(&self, other: &ArithSeries) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch(self.truncation(), other.truncation()));
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    /// Dirichlet convolution (f∗g)(n) = Σ_{d|n} f(d)·g(n/d), exact.
    pub fn dconv(&self, other: &ArithSeries) -> Result<ArithSeries> {
        self.check_match(other)?;
        let n = self.truncation();
        let mut out = ArithSeries::zero(n, self.domain);
        for d in 1..=n {
            let fd = self.get(d);
            if fd.is_zero() {
                continue;
            }
            let mut m = d;
            while m <= n {
                let g = other.get(m / d);
                if !g.is_zero() {
                    out.coeffs[m - 1] = out.coeffs[m - 1].add(&fd.mul(g));
                }
                m += d;
            }
        }
        Ok(out)
    }

    /// Dirichlet inverse: b₁ = 1/f₁ and
    /// b_n = −(1/f₁)·Σ_{d|n, d<n} f(n/d)·b_d, so f ∗ f⁻¹ = ε exactly.
    pub fn dinv(&self) -> Result<ArithSeries> {
        let f1 = self.get(1);
        if f1.is_zero() {
            return Err(Error::NonUnit);
        }
        let inv_f1 = f1.inv()?;
        let n = self.truncation();
        let mut out = ArithSeries::zero(n, self.domain);
        out.coeffs[0] = inv_f1.clone();
        for m in 2..=n {
            let mut acc = Coefficient::zero(self.domain);
            for d in divisors(m) {
                if d < m {
                    let term = self.get(m / d).mul(&out.coeffs[d - 1]);
                    acc = acc.add(&term);
                }
            }
            out.coeffs[m - 1] = acc.mul(&inv_f1).neg();
        }
        Ok(out)
    }

    /// Coprime convolution (f⊗̌g)(n) = Σ over n₁n₂ = n with gcd(n₁,n₂) = 1.
    pub fn coprime_conv(&self, other: &ArithSeries) -> Result<ArithSeries> {
        self.check_match(other)?;
        let n = self.truncation();
        let mut out = ArithSeries::zero(n, self.domain);
        for m in 1..=n {
            let mut acc = Coefficient::zero(self.domain);
            for d in divisors(m) {
                if gcd(d as u64, (m / d) as u64) == 1 {
                    acc = acc.add(&self.get(d).mul(other.get(m / d)));
                }
            }
            out.coeffs[m - 1] = acc;
        }
        Ok(out)
    }

    /// Coprime inverse: the Dirichlet-inverse recursion with the sum
    /// restricted to coprime factorizations and the leading factor 1/f₁, so
    /// f ⊗̌ result = ε exactly.
    pub fn coprime_inv(&self) -> Result<ArithSeries> {
        let f1 = self.get(1);
        if f1.is_zero() {
            return Err(Error::NonUnit);
        }
        let inv_f1 = f1.inv()?;
        let n = self.truncation();
        let mut out = ArithSeries::zero(n, self.domain);
        out.coeffs[0] = inv_f1.clone();
        for m in 2..=n {
            let mut acc = Coefficient::zero(self.domain);
            for d in divisors(m) {
                if d < m && gcd(d as u64, (m / d) as u64) == 1 {
                    acc = acc.add(&self.get(m / d).mul(&out.coeffs[d - 1]));
                }
            }
            out.coeffs[m - 1] = acc.mul(&inv_f1).neg();
        }
        Ok(out)
    }

    /// Coefficientwise (Hadamard) product; domains are joined.
    pub fn pointwise(&self, other: &ArithSeries) -> Result<ArithSeries> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch(self.truncation(), other.truncation()));
        }
        let domain = self.domain.join(other.domain);
        let a = self.promote(domain)?;
        let b = other.promote(domain)?;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.mul(y))
            .collect();
        Ok(ArithSeries { domain, coeffs })
    }

    pub fn scale(&self, s: &Coefficient) -> Result<ArithSeries> {
        let domain = self.domain.join(s.domain());
        let s = s.promote(domain)?;
        let a = self.promote(domain)?;
        Ok(ArithSeries {
            domain,
            coeffs: a.coeffs.iter().map(|c| c.mul(&s)).collect(),
        })
    }

    /// ℓ¹ norm Σ|a_n| in binary64.
    pub fn norm_l1(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sq().sqrt()).sum()
    }

    pub fn max_dist(&self, other: &ArithSeries) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.dist(b))
            .fold(0.0, f64::max)
    }

    /// Exhaustive multiplicativity check over all pairs with product ≤ N.
    pub fn classify_multiplicativity(&self) -> Multiplicativity {
        let n = self.truncation();
        if *self.get(1) != Coefficient::one(self.domain) {
            return Multiplicativity::Neither;
        }
        let mut multiplicative = true;
        let mut completely = true;
        for a in 2..=n {
            for b in a..=n {
                let ab = a * b;
                if ab > n {
                    break;
                }
                let lhs = self.get(ab);
                let rhs = self.get(a).mul(self.get(b));
                let equal = match self.domain {
                    Domain::Complex => lhs.dist(&rhs) <= 1e-9,
                    _ => *lhs == rhs,
                };
                if !equal {
                    completely = false;
                    if gcd(a as u64, b as u64) == 1 {
                        multiplicative = false;
                    }
                }
            }
        }
        if completely {
            Multiplicativity::CompletelyMultiplicative
        } else if multiplicative {
            Multiplicativity::Multiplicative
        } else {
            Multiplicativity::Neither
        }
    }

    /// Reinterpret as a formal sum over Q with integer exponents 1..N.
    pub fn to_exponent_poly(&self, field: &NumberField) -> AlgElem {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (field.integer((i + 1) as i64), c.clone()));
        AlgElem::from_terms(field.clone(), self.domain, terms)
            .expect("exponents built from the field are always compatible")
    }

    /// Extract the 1..N coefficients of a formal sum; errors when the support
    /// has non-integer or non-positive exponents, or exceeds the truncation.
    pub fn from_exponent_poly(elem: &AlgElem, n: usize) -> Result<ArithSeries> {
        let mut out = ArithSeries::zero(n, elem.domain());
        for (exp, c) in elem.terms() {
            let q = exp.as_rational().ok_or(Error::NonIntegerSupport)?;
            if !q.denom().is_one() || !q.numer().is_positive() {
                return Err(Error::NonIntegerSupport);
            }
            let idx = q
                .numer()
                .to_usize()
                .filter(|&i| i <= n)
                .ok_or_else(|| Error::IndexOutOfRange(q.numer().to_usize().unwrap_or(usize::MAX)))?;
            out.coeffs[idx - 1] = c.clone();
        }
        Ok(out)
    }
}

impl fmt::Display for ArithSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "series[N={}]", self.truncation())
    }
}

/// Result of the exhaustive multiplicativity scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicativity {
    CompletelyMultiplicative,
    Multiplicative,
    Neither,
}

impl fmt::Display for Multiplicativity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicativity::CompletelyMultiplicative => write!(f, "completely_multiplicative"),
            Multiplicativity::Multiplicative => write!(f, "multiplicative"),
            Multiplicativity::Neither => write!(f, "neither"),
        }
    }
}

/// Polylogarithm coefficients a_n = 1/n^s: exact rationals for integral s,
/// binary64 otherwise.
pub fn polylog_coeffs(s: f64, n: usize) -> ArithSeries {
    if s.fract() == 0.0 && s >= 1.0 && s <= 62.0 {
        polylog_exact(s as u32, n)
    } else {
        ArithSeries::from_fn(n, Domain::Complex, |i| {
            Coefficient::Complex(Complex64::new((i as f64).powf(-s), 0.0))
        })
    }
}

/// a_n = 1/n^k with exact rational arithmetic.
pub fn polylog_exact(k: u32, n: usize) -> ArithSeries {
    ArithSeries::from_fn(n, Domain::Rational, |i| {
        let pow = BigInt::from(i).pow(k);
        Coefficient::Rational(BigRational::new(BigInt::one(), pow))
    })
}

/// Divisors of n in ascending order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Primes up to and including `bound`.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2;
    while p * p <= n {
        if sieve[p] {
            let mut m = p * p;
            while m <= n {
                sieve[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Values at the primes up to a bound; determines a completely
/// multiplicative series through a_n = Π a_p^{v_p(n)} with a₁ = 1 implied.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimeVector {
    bound: u64,
    values: BTreeMap<u64, Coefficient>,
}

impl PrimeVector {
    pub fn from_fn<F: FnMut(u64) -> Coefficient>(bound: u64, mut f: F) -> Self {
        let values = primes_up_to(bound).into_iter().map(|p| (p, f(p))).collect();
        PrimeVector { bound, values }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn value_at(&self, p: u64) -> Option<&Coefficient> {
        self.values.get(&p)
    }

    pub fn primes(&self) -> impl Iterator<Item = (&u64, &Coefficient)> {
        self.values.iter()
    }

    /// Map each prime value, e.g. twisting by a character.
    pub fn map_values<F: FnMut(u64, &Coefficient) -> Coefficient>(&self, mut f: F) -> PrimeVector {
        PrimeVector {
            bound: self.bound,
            values: self.values.iter().map(|(&p, v)| (p, f(p, v))).collect(),
        }
    }

    /// Expand to the completely multiplicative series up to N; every prime
    /// factor of every index must be covered by the bound.
    pub fn to_series(&self, n: usize) -> Result<ArithSeries> {
        let domain = self
            .values
            .values()
            .fold(Domain::Rational, |d, c| d.join(c.domain()));
        let mut out = ArithSeries::zero(n, domain);
        for m in 1..=n {
            let mut acc = Coefficient::one(domain);
            let mut rest = m as u64;
            let mut p = 2u64;
            while p * p <= rest {
                while rest % p == 0 {
                    let v = self
                        .values
                        .get(&p)
                        .ok_or(Error::InsufficientPrimeBound { bound: self.bound, value: m as u64 })?;
                    acc = acc.mul(&v.promote(domain)?);
                    rest /= p;
                }
                p += 1;
            }
            if rest > 1 {
                let v = self
                    .values
                    .get(&rest)
                    .ok_or(Error::InsufficientPrimeBound { bound: self.bound, value: m as u64 })?;
                acc = acc.mul(&v.promote(domain)?);
            }
            out.coeffs[m - 1] = acc;
        }
        Ok(out)
    }

    /// Read the prime values back off a series.
    pub fn from_series(series: &ArithSeries, bound: u64) -> Result<Self> {
        if bound as usize > series.truncation() {
            return Err(Error::BoundMismatch(bound, series.truncation() as u64));
        }
        Ok(PrimeVector {
            bound,
            values: primes_up_to(bound)
                .into_iter()
                .map(|p| (p, series.get(p as usize).clone()))
                .collect(),
        })
    }

    /// Componentwise product (the group law of completely multiplicative
    /// units under pointwise prime data).
    pub fn product(&self, other: &PrimeVector) -> Result<PrimeVector> {
        if self.bound != other.bound {
            return Err(Error::BoundMismatch(self.bound, other.bound));
        }
        let mut values = BTreeMap::new();
        for (&p, a) in &self.values {
            let b = &other.values[&p];
            let domain = a.domain().join(b.domain());
            values.insert(p, a.promote(domain)?.mul(&b.promote(domain)?));
        }
        Ok(PrimeVector { bound: self.bound, values })
    }

    /// Values equal at a prime, with floats compared through a tolerance.
    fn agrees_at(&self, other: &PrimeVector, p: u64, tol: f64) -> bool {
        match (self.values.get(&p), other.values.get(&p)) {
            (Some(a), Some(b)) => {
                if a.domain().is_exact() && b.domain().is_exact() && a.domain() == b.domain() {
                    a == b
                } else {
                    a.dist(b) <= tol
                }
            }
            _ => false,
        }
    }
}

/// A prime vector together with a finite set of primes declared irrelevant:
/// the desk-scale model of "agreeing at all but finitely many primes".
#[derive(Debug, Clone)]
pub struct AperiodicClass {
    pub vector: PrimeVector,
    pub exceptional: BTreeSet<u64>,
}

impl AperiodicClass {
    pub fn new(vector: PrimeVector, exceptional: impl IntoIterator<Item = u64>) -> Self {
        AperiodicClass { vector, exceptional: exceptional.into_iter().collect() }
    }

    /// Equal iff the vectors agree at every prime ≤ bound outside the union
    /// of the exceptional sets.
    pub fn equivalent(&self, other: &AperiodicClass) -> Result<bool> {
        if self.vector.bound != other.vector.bound {
            return Err(Error::BoundMismatch(self.vector.bound, other.vector.bound));
        }
        for p in primes_up_to(self.vector.bound) {
            if self.exceptional.contains(&p) || other.exceptional.contains(&p) {
                continue;
            }
            if !self.vector.agrees_at(&other.vector, p, 1e-9) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Power series a₀ + a₁q + … + a_N q^N: the Cauchy structure on the
/// non-negative integer exponents, where inversion is the ordinary division
/// recursion.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    domain: Domain,
    /// coeffs[i] is the coefficient of q^i.
    coeffs: Vec<Coefficient>,
}

impl PowerSeries {
    pub fn new(domain: Domain, coeffs: Vec<Coefficient>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parse("power series needs a constant term".into()));
        }
        for c in &coeffs {
            if c.domain() != domain {
                return Err(Error::DomainMismatch);
            }
        }
        Ok(PowerSeries { domain, coeffs })
    }

    pub fn one(n: usize, domain: Domain) -> Self {
        let mut coeffs = vec![Coefficient::zero(domain); n + 1];
        coeffs[0] = Coefficient::one(domain);
        PowerSeries { domain, coeffs }
    }

    /// Truncation order: coefficients run over exponents 0..=order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Coefficient {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// Truncated product.
    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        let order = self.order().min(other.order());
        let mut coeffs = vec![Coefficient::zero(self.domain); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(PowerSeries { domain: self.domain, coeffs })
    }

    /// Multiplicative inverse: the standard division recursion, so that
    /// f · f⁻¹ = 1 + O(q^{N+1}) exactly.  Requires a₀ ≠ 0.
    pub fn invert(&self) -> Result<PowerSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonUnit);
        }
        let inv_a0 = a0.inv()?;
        let order = self.order();
        let mut coeffs = vec![Coefficient::zero(self.domain); order + 1];
        coeffs[0] = inv_a0.clone();
        for m in 1..=order {
            let mut acc = Coefficient::zero(self.domain);
            for k in 1..=m {
                let ak = &self.coeffs[k];
                if !ak.is_zero() {
                    acc = acc.add(&ak.mul(&coeffs[m - k]));
                }
            }
            coeffs[m] = acc.mul(&inv_a0).neg();
        }
        Ok(PowerSeries { domain: self.domain, coeffs })
    }

    /// View as a formal sum with exponents 0..=order.
    pub fn to_exponent_poly(&self, field: &NumberField) -> AlgElem {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (field.integer(i as i64), c.clone()));
        AlgElem::from_terms(field.clone(), self.domain, terms)
            .expect("integer exponents always fit the field")
    }

    pub fn from_exponent_poly(elem: &AlgElem, order: usize) -> Result<PowerSeries> {
        let mut coeffs = vec![Coefficient::zero(elem.domain()); order + 1];
        for (exp, c) in elem.terms() {
            let q = exp.as_rational().ok_or(Error::NonIntegerSupport)?;
            if !q.denom().is_one() || q.numer().is_negative() {
                return Err(Error::NonIntegerSupport);
            }
            let idx = q
                .numer()
                .to_usize()
                .filter(|&i| i <= order)
                .ok_or_else(|| Error::IndexOutOfRange(q.numer().to_usize().unwrap_or(usize::MAX)))?;
            coeffs[idx] = c.clone();
        }
        PowerSeries::new(elem.domain(), coeffs)
    }
}

use num_traits::Signed;

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Coefficient {
        Coefficient::from_ratio(n, d)
    }

    /// Independent Möbius oracle by trial-division factorization.
    fn moebius(n: usize) -> i64 {
        let mut n = n;
        let mut omega = 0;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                omega += 1;
            }
            p += 1;
        }
        if n > 1 {
            omega += 1;
        }
        if omega % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn omega(n: usize) -> u32 {
        let mut n = n;
        let mut count = 0;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                count += 1;
                while n % p == 0 {
                    n /= p;
                }
            }
            p += 1;
        }
        if n > 1 {
            count += 1;
        }
        count
    }

    #[test]
    fn epsilon_is_identity() {
        let n = 60;
        let f = ArithSeries::from_fn(n, Domain::Rational, |i| rat(i as i64 * 3 - 7, 2));
        let eps = ArithSeries::epsilon(n);
        assert_eq!(f.dconv(&eps).unwrap(), f);
        assert_eq!(eps.dconv(&f).unwrap(), f);
        assert_eq!(f.coprime_conv(&eps).unwrap(), f);
    }

    #[test]
    fn ones_convolution_counts_divisors() {
        let ones = ArithSeries::ones(40);
        let d = ones.dconv(&ones).unwrap();
        assert_eq!(*d.get(6), Coefficient::from_i64(4));
        assert_eq!(*d.get(12), Coefficient::from_i64(6));
        assert_eq!(*d.get(1), Coefficient::from_i64(1));
    }

    #[test]
    fn dinv_of_ones_is_moebius() {
        let n = 300;
        let mu = ArithSeries::ones(n).dinv().unwrap();
        for i in 1..=n {
            assert_eq!(
                *mu.get(i),
                Coefficient::from_i64(moebius(i)),
                "μ({i}) mismatch"
            );
        }
    }

    #[test]
    fn dinv_round_trip_for_general_unit() {
        let n = 120;
        let f = ArithSeries::from_fn(n, Domain::Rational, |i| rat(2 * i as i64 + 1, 3));
        let inv = f.dinv().unwrap();
        assert_eq!(f.dconv(&inv).unwrap(), ArithSeries::epsilon(n));
    }

    #[test]
    fn zeta2_inverse_has_moebius_numerators() {
        // The inverse of a_n = 1/n² is μ(n)/n².
        let n = 200;
        let li2 = polylog_exact(2, n);
        let inv = li2.dinv().unwrap();
        for i in 1..=n {
            let expected = Coefficient::Rational(BigRational::new(
                BigInt::from(moebius(i)),
                BigInt::from(i).pow(2),
            ));
            assert_eq!(*inv.get(i), expected, "at n={i}");
        }
        assert_eq!(li2.dconv(&inv).unwrap(), ArithSeries::epsilon(n));
    }

    #[test]
    fn coprime_conv_counts_unitary_divisors() {
        // (1 ⊗̌ 1)(n) = 2^{ω(n)}
        let n = 100;
        let ones = ArithSeries::ones(n);
        let u = ones.coprime_conv(&ones).unwrap();
        for i in 1..=n {
            assert_eq!(
                *u.get(i),
                Coefficient::from_i64(1 << omega(i)),
                "2^ω({i}) mismatch"
            );
        }
        // (δ₂ ⊗̌ δ₂)(4) = 0: the factorization (2,2) is not coprime.
        let mut delta2 = ArithSeries::zero(10, Domain::Rational);
        delta2.set(2, Coefficient::from_i64(1));
        let sq = delta2.coprime_conv(&delta2).unwrap();
        assert!(sq.get(4).is_zero());
    }

    #[test]
    fn coprime_inverse_of_ones() {
        // rp-inverse of the all-ones series is (−1)^{ω(n)}.
        let n = 200;
        let ones = ArithSeries::ones(n);
        let inv = ones.coprime_inv().unwrap();
        assert_eq!(*inv.get(2), Coefficient::from_i64(-1));
        assert_eq!(*inv.get(6), Coefficient::from_i64(1));
        for i in 1..=n {
            let sign = if omega(i) % 2 == 0 { 1 } else { -1 };
            assert_eq!(*inv.get(i), Coefficient::from_i64(sign), "at n={i}");
        }
        assert_eq!(ones.coprime_conv(&inv).unwrap(), ArithSeries::epsilon(n));
        // Applying the inverse twice returns the original.
        assert_eq!(inv.coprime_inv().unwrap(), ones);
    }

    #[test]
    fn coprime_inverse_with_nonunit_leading_coeff() {
        let n = 80;
        let f = ArithSeries::from_fn(n, Domain::Rational, |i| rat(i as i64 + 2, 5));
        let inv = f.coprime_inv().unwrap();
        assert_eq!(f.coprime_conv(&inv).unwrap(), ArithSeries::epsilon(n));
    }

    #[test]
    fn nonunit_inversion_rejected() {
        let mut f = ArithSeries::ones(10);
        f.set(1, Coefficient::from_i64(0));
        assert_eq!(f.dinv(), Err(Error::NonUnit));
        assert_eq!(f.coprime_inv(), Err(Error::NonUnit));
    }

    #[test]
    fn polylog_values_and_convolution() {
        let li1 = polylog_coeffs(1.0, 10);
        assert_eq!(*li1.get(3), rat(1, 3));
        let li2 = polylog_coeffs(2.0, 10);
        assert_eq!(*li2.get(4), rat(1, 16));
        // (Li₂ ∗ Li₂)(n) = d(n)/n²; at n = 6 that is 4/36.
        let conv = li2.dconv(&li2).unwrap();
        assert_eq!(*conv.get(6), rat(4, 36));
        // Non-integral s falls back to binary64.
        let li_half = polylog_coeffs(1.5, 10);
        assert_eq!(li_half.domain(), Domain::Complex);
        assert!((li_half.get(4).to_complex().re - 0.125).abs() < 1e-15);
    }

    #[test]
    fn multiplicativity_classification() {
        assert_eq!(
            ArithSeries::ones(60).classify_multiplicativity(),
            Multiplicativity::CompletelyMultiplicative
        );
        let ones = ArithSeries::ones(60);
        let d = ones.dconv(&ones).unwrap();
        assert_eq!(d.classify_multiplicativity(), Multiplicativity::Multiplicative);
        let shifted = ArithSeries::from_fn(60, Domain::Rational, |i| rat(i as i64 + 1, 1));
        assert_eq!(shifted.classify_multiplicativity(), Multiplicativity::Neither);
    }

    #[test]
    fn series_poly_round_trip_is_product_homomorphism() {
        let n = 60;
        let field = NumberField::rationals();
        let f = ArithSeries::from_fn(n, Domain::Rational, |i| rat(i as i64 % 5 - 2, 3));
        let g = ArithSeries::from_fn(n, Domain::Rational, |i| rat(7 - i as i64 % 3, 2));
        let conv = f.dconv(&g).unwrap();
        let product = f
            .to_exponent_poly(&field)
            .dirichlet_product(&g.to_exponent_poly(&field))
            .unwrap();
        // Restrict the formal product to exponents ≤ N before extracting.
        let bound = BigRational::from_integer(BigInt::from(n as i64));
        let truncated = product.filter_support(|exp| {
            exp.as_rational().map_or(false, |q| *q <= bound)
        });
        let back = ArithSeries::from_exponent_poly(&truncated, n).unwrap();
        assert_eq!(back, conv);
    }

    #[test]
    fn from_exponent_poly_rejects_fractional_support() {
        let field = NumberField::rationals();
        let elem = AlgElem::from_terms(
            field.clone(),
            Domain::Rational,
            vec![(field.rational(1, 2), Coefficient::from_i64(5))],
        )
        .unwrap();
        assert_eq!(
            ArithSeries::from_exponent_poly(&elem, 10),
            Err(Error::NonIntegerSupport)
        );
    }

    #[test]
    fn truncation_mismatch_is_an_error() {
        let f = ArithSeries::ones(10);
        let g = ArithSeries::ones(11);
        assert!(matches!(f.dconv(&g), Err(Error::TruncationMismatch(10, 11))));
    }

    #[test]
    fn geometric_power_series_inverse() {
        // (1 − q)⁻¹ = 1 + q + q² + …
        let n = 50;
        let mut coeffs = vec![Coefficient::zero(Domain::Rational); n + 1];
        coeffs[0] = Coefficient::from_i64(1);
        coeffs[1] = Coefficient::from_i64(-1);
        let f = PowerSeries::new(Domain::Rational, coeffs).unwrap();
        let inv = f.invert().unwrap();
        for i in 0..=n {
            assert_eq!(*inv.coeff(i), Coefficient::from_i64(1));
        }
        // Round trip.
        let back = inv.invert().unwrap();
        assert_eq!(back, f);
        // f · f⁻¹ = 1 exactly to the truncation order.
        let prod = f.mul(&inv).unwrap();
        assert_eq!(prod, PowerSeries::one(n, Domain::Rational));
    }

    #[test]
    fn power_series_inverse_requires_constant_term() {
        let f = PowerSeries::new(
            Domain::Rational,
            vec![Coefficient::from_i64(0), Coefficient::from_i64(1)],
        )
        .unwrap();
        assert_eq!(f.invert(), Err(Error::NonUnit));
    }

    #[test]
    fn prime_vector_round_trip() {
        let n = 100;
        let pv = PrimeVector::from_fn(100, |p| rat(1, p as i64));
        let series = pv.to_series(n).unwrap();
        assert_eq!(
            series.classify_multiplicativity(),
            Multiplicativity::CompletelyMultiplicative
        );
        let back = PrimeVector::from_series(&series, 100).unwrap();
        assert_eq!(back, pv);
        // a_12 = a_2² · a_3 = 1/12
        assert_eq!(*series.get(12), rat(1, 12));
    }

    #[test]
    fn aperiodic_equivalence_ignores_exceptional_primes() {
        let pv = PrimeVector::from_fn(50, |p| rat(p as i64, 1));
        let mut tweaked = pv.clone();
        tweaked = tweaked.map_values(|p, v| {
            if p == 2 {
                Coefficient::from_i64(99)
            } else {
                v.clone()
            }
        });
        let a = AperiodicClass::new(pv.clone(), []);
        let b = AperiodicClass::new(tweaked, [2]);
        assert!(a.equivalent(&a).unwrap());
        assert!(a.equivalent(&b).unwrap());
        let c = AperiodicClass::new(
            pv.map_values(|p, v| if p == 3 { Coefficient::from_i64(0) } else { v.clone() }),
            [],
        );
        assert!(!a.equivalent(&c).unwrap());
    }
}
