//! Cusp-form q-expansions and the Hecke operator inside the Dirichlet
//! algebra.
//!
//! The discriminant form Δ = q·Π_{n≥1}(1−qⁿ)²⁴ is expanded by repeated
//! polynomial multiplication in exact integer arithmetic and serves as the
//! worked weight-12 instance.  The Hecke operator at p is realized as
//! "convolve with a two-term exponent polynomial, then project onto the
//! integer-exponent subspace".  Two coefficient conventions are provided:
//!
//! * `ShiftPolynomial`: t_p(η) = η^p + p^{k−1}·η^{1/p}, giving the
//!   coefficient ā_{m/p} + p^{k−1}·a_{mp} at m;
//! * `Classical`: the exponents swapped, giving a_{mp} + p^{k−1}·ā_{m/p},
//!   the convention under which Δ is an eigenform with T_p Δ = τ(p)·Δ.
//!
//! (ā_x = a_x for x ∈ N and 0 otherwise.)  Only the truncation ⌊N/p⌋ of the
//! output is returned — coefficients above it would need unknown a_{mp}.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::algebra::AlgElem;
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::numfield::NumberField;
use crate::series::{divisors, is_prime};

/// Hard cap on the Δ expansion length.
pub const DELTA_CAP: usize = 100_000;

/// Exact integer q-expansion coefficients a_1..a_N of a cusp form.
#[derive(Debug, Clone, PartialEq)]
pub struct CuspFormCoeffs {
    weight: u32,
    coeffs: Vec<i128>,
}

impl CuspFormCoeffs {
    pub fn new(weight: u32, coeffs: Vec<i128>) -> Result<Self> {
        if weight < 12 || weight % 2 != 0 {
            return Err(Error::Parse(format!("weight must be even and ≥ 12, got {weight}")));
        }
        if coeffs.is_empty() {
            return Err(Error::Parse("need at least one coefficient".into()));
        }
        Ok(CuspFormCoeffs { weight, coeffs })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    /// 1-based coefficient access.
    pub fn coeff(&self, n: usize) -> i128 {
        self.coeffs[n - 1]
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Normalized coefficient λ_n = a_n / n^{k/2}, exact.
    pub fn lambda(&self, n: usize) -> BigRational {
        BigRational::new(
            BigInt::from(self.coeff(n)),
            BigInt::from(n).pow(self.weight / 2),
        )
    }

    /// Scale every coefficient by an integer.
    pub fn scale(&self, c: i128) -> CuspFormCoeffs {
        CuspFormCoeffs {
            weight: self.weight,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn truncate(&self, n: usize) -> CuspFormCoeffs {
        CuspFormCoeffs { weight: self.weight, coeffs: self.coeffs[..n].to_vec() }
    }

    /// Raw coefficients as a formal sum with integer exponents 1..N.
    pub fn to_exponent_poly(&self, field: &NumberField) -> AlgElem {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| {
                (
                    field.integer((i + 1) as i64),
                    Coefficient::Rational(BigRational::from_integer(a.into())),
                )
            });
        AlgElem::from_terms(field.clone(), crate::coeff::Domain::Rational, terms)
            .expect("integer exponents always fit")
    }
}

/// Coefficients of Δ = q·Π_{n≤N}(1−qⁿ)²⁴ up to q^N, exact in integers.
///
/// The base product E = Π(1−qⁿ) is expanded binomial by binomial in big
/// integers (the tail coefficients of partial products grow large before the
/// cancellation settles), and the truncated E has only ±1 entries.  The 24th
/// power is then five truncated polynomial multiplications in i128:
/// E² → E⁴ → E⁸ → E¹⁶ and E¹⁶·E⁸, all of which stay far below the i128
/// range at every supported truncation.
pub fn delta_expansion(n: usize) -> Result<CuspFormCoeffs> {
    if n == 0 || n > DELTA_CAP {
        return Err(Error::CapExceeded { cap: DELTA_CAP, got: n });
    }
    // Π(1−q^m) truncated at q^{n-1}; Δ shifts everything up by q.
    let len = n;
    let mut euler: Vec<BigInt> = vec![BigInt::from(0); len];
    euler[0] = BigInt::from(1);
    for m in 1..len {
        for i in (m..len).rev() {
            let delta = euler[i - m].clone();
            euler[i] -= delta;
        }
    }
    let euler: Vec<i128> = euler
        .iter()
        .map(|c| c.to_i128().expect("truncated base product has tiny entries"))
        .collect();

    let mul = |a: &[i128], b: &[i128]| -> Vec<i128> {
        let mut out = vec![0i128; len];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate().take(len - i) {
                if y != 0 {
                    out[i + j] += x * y;
                }
            }
        }
        out
    };
    let e2 = mul(&euler, &euler);
    let e4 = mul(&e2, &e2);
    let e8 = mul(&e4, &e4);
    let e16 = mul(&e8, &e8);
    let e24 = mul(&e16, &e8);
    Ok(CuspFormCoeffs { weight: 12, coeffs: e24 })
}

/// The two-term exponent polynomial η^p + p^{k−1}·η^{1/p}.
pub fn hecke_shift_poly(field: &NumberField, p: u64, weight: u32) -> Result<AlgElem> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let weight_factor = BigInt::from(p).pow(weight - 1);
    AlgElem::from_terms(
        field.clone(),
        crate::coeff::Domain::Rational,
        vec![
            (field.integer(p as i64), Coefficient::from_i64(1)),
            (
                field.rational(1, p as i64),
                Coefficient::Rational(BigRational::from_integer(weight_factor)),
            ),
        ],
    )
}

/// Orthogonal projection onto integer exponents: keeps exactly the terms
/// whose exponent is an integer, drops all others.  Idempotent.
pub fn project_integer_exponents(f: &AlgElem) -> AlgElem {
    f.filter_support(|exp| exp.as_rational().map_or(false, |q| q.denom().to_i8() == Some(1)))
}

/// Which two-term convolution the operator uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeckeVariant {
    /// t_p = η^p + p^{k−1}η^{1/p}: output coefficient ā_{m/p} + p^{k−1}a_{mp}.
    ShiftPolynomial,
    /// Exponents swapped: output coefficient a_{mp} + p^{k−1}ā_{m/p}.
    Classical,
}

impl HeckeVariant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(HeckeVariant::ShiftPolynomial),
            "classical" => Ok(HeckeVariant::Classical),
            other => Err(Error::Parse(format!("unknown hecke variant: {other:?}"))),
        }
    }
}

/// Hecke operator at p in the chosen convention, on raw integer
/// coefficients; the output is truncated to ⌊N/p⌋.
pub fn hecke_operator(
    f: &CuspFormCoeffs,
    p: u64,
    variant: HeckeVariant,
) -> Result<CuspFormCoeffs> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = f.truncation();
    if (p as usize) > n {
        return Err(Error::TruncationTooSmall(n, p));
    }
    let out_len = n / p as usize;
    let weight_factor = (p as i128).pow(f.weight - 1);
    let p = p as usize;
    let mut coeffs = Vec::with_capacity(out_len);
    for m in 1..=out_len {
        let lowered = if m % p == 0 { f.coeff(m / p) } else { 0 };
        let raised = f.coeff(m * p);
        let value = match variant {
            HeckeVariant::ShiftPolynomial => lowered + weight_factor * raised,
            HeckeVariant::Classical => raised + weight_factor * lowered,
        };
        coeffs.push(value);
    }
    CuspFormCoeffs::new(f.weight, coeffs)
}

/// Result of sweeping |a_n| ≤ d(n)·n^{(k−1)/2}, the sharp coefficient bound
/// for normalized eigenforms (compared exactly as |a_n|² ≤ d(n)²·n^{k−1}).
#[derive(Debug, Clone)]
pub struct CoeffBoundReport {
    pub checked: usize,
    pub all_within_bound: bool,
    pub max_ratio: f64,
    pub max_ratio_at: usize,
    pub first_violation: Option<usize>,
}

pub fn deligne_bound_report(f: &CuspFormCoeffs) -> CoeffBoundReport {
    let k = f.weight;
    let mut max_ratio = 0.0f64;
    let mut max_at = 1usize;
    let mut first_violation = None;
    for n in 1..=f.truncation() {
        let a = BigInt::from(f.coeff(n));
        let d = divisors(n).len() as u64;
        let lhs = &a * &a;
        let rhs = BigInt::from(d * d) * BigInt::from(n).pow(k - 1);
        if lhs > rhs && first_violation.is_none() {
            first_violation = Some(n);
        }
        let ratio = f.coeff(n).unsigned_abs() as f64
            / (d as f64 * (n as f64).powf((k as f64 - 1.0) / 2.0));
        if ratio > max_ratio {
            max_ratio = ratio;
            max_at = n;
        }
    }
    CoeffBoundReport {
        checked: f.truncation(),
        all_within_bound: first_violation.is_none(),
        max_ratio,
        max_ratio_at: max_at,
        first_violation,
    }
}

/// Partial sums of Σ λ_n², reported at sample points — a diagnostic for the
/// square-summability of the normalized coefficients.
pub fn lambda_partial_sums(f: &CuspFormCoeffs, samples: &[usize]) -> Vec<(usize, f64)> {
    let mut acc = 0.0f64;
    let mut idx = 0usize;
    let mut out = Vec::new();
    for n in 1..=f.truncation() {
        let l = f.lambda(n).to_f64().unwrap_or(0.0);
        acc += l * l;
        if idx < samples.len() && samples[idx] == n {
            out.push((n, acc));
            idx += 1;
        }
    }
    out
}
