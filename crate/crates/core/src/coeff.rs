//! Coefficient domains.
//!
//! A formal sum is homogeneous in one of three coefficient domains:
//! exact rationals, exact Gaussian rationals `a + bi`, or binary64 complex
//! numbers.  The exact domains support ring operations and conjugation
//! without rounding; binary64 comparisons always go through an explicit
//! tolerance.  Promotion is strictly explicit and only upward
//! (rational → gaussian → complex); nothing is mixed silently.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Tag for the coefficient domain of a whole element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Rational,
    Gaussian,
    Complex,
}

impl Domain {
    /// Whether values of this domain compare exactly.
    pub fn is_exact(self) -> bool {
        !matches!(self, Domain::Complex)
    }

    /// True if `self` can be promoted to `target` (identity counts).
    pub fn promotes_to(self, target: Domain) -> bool {
        use Domain::*;
        matches!(
            (self, target),
            (Rational, _) | (Gaussian, Gaussian) | (Gaussian, Complex) | (Complex, Complex)
        )
    }

    /// Smallest domain both operands promote into.
    pub fn join(self, other: Domain) -> Domain {
        use Domain::*;
        match (self, other) {
            (Rational, d) | (d, Rational) => d,
            (Gaussian, d) | (d, Gaussian) => d,
            (Complex, Complex) => Complex,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rational => write!(f, "rational"),
            Domain::Gaussian => write!(f, "gaussian"),
            Domain::Complex => write!(f, "complex64"),
        }
    }
}

/// A scalar from one of the three coefficient domains.
#[derive(Debug, Clone, PartialEq)]
pub enum Coefficient {
    Rational(BigRational),
    /// `re + im·i` with exact rational parts.
    Gaussian(BigRational, BigRational),
    Complex(Complex64),
}

impl Coefficient {
    pub fn domain(&self) -> Domain {
        match self {
            Coefficient::Rational(_) => Domain::Rational,
            Coefficient::Gaussian(..) => Domain::Gaussian,
            Coefficient::Complex(_) => Domain::Complex,
        }
    }

    pub fn zero(domain: Domain) -> Self {
        match domain {
            Domain::Rational => Coefficient::Rational(BigRational::zero()),
            Domain::Gaussian => Coefficient::Gaussian(BigRational::zero(), BigRational::zero()),
            Domain::Complex => Coefficient::Complex(Complex64::new(0.0, 0.0)),
        }
    }

    pub fn one(domain: Domain) -> Self {
        match domain {
            Domain::Rational => Coefficient::Rational(BigRational::one()),
            Domain::Gaussian => Coefficient::Gaussian(BigRational::one(), BigRational::zero()),
            Domain::Complex => Coefficient::Complex(Complex64::new(1.0, 0.0)),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Coefficient::Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Coefficient::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Gaussian(re, im) => re.is_zero() && im.is_zero(),
            Coefficient::Complex(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    /// Promote into `target`; only upward moves are allowed.
    pub fn promote(&self, target: Domain) -> Result<Self> {
        if !self.domain().promotes_to(target) {
            return Err(Error::DomainMismatch);
        }
        Ok(match (self, target) {
            (c, t) if c.domain() == t => c.clone(),
            (Coefficient::Rational(r), Domain::Gaussian) => {
                Coefficient::Gaussian(r.clone(), BigRational::zero())
            }
            (Coefficient::Rational(r), Domain::Complex) => {
                Coefficient::Complex(Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0))
            }
            (Coefficient::Gaussian(re, im), Domain::Complex) => Coefficient::Complex(
                Complex64::new(
                    re.to_f64().unwrap_or(f64::NAN),
                    im.to_f64().unwrap_or(f64::NAN),
                ),
            ),
            _ => unreachable!(),
        })
    }

    /// Binary64 view, regardless of domain.
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Coefficient::Rational(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            Coefficient::Gaussian(re, im) => Complex64::new(
                re.to_f64().unwrap_or(f64::NAN),
                im.to_f64().unwrap_or(f64::NAN),
            ),
            Coefficient::Complex(z) => *z,
        }
    }

    /// `|self|²` as an exact rational, available in the exact domains only.
    pub fn norm_sq_exact(&self) -> Option<BigRational> {
        match self {
            Coefficient::Rational(r) => Some(r * r),
            Coefficient::Gaussian(re, im) => Some(re * re + im * im),
            Coefficient::Complex(_) => None,
        }
    }

    pub fn norm_sq(&self) -> f64 {
        match self {
            Coefficient::Complex(z) => z.norm_sqr(),
            other => other.norm_sq_exact().unwrap().to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Distance to another coefficient in the binary64 metric.
    pub fn dist(&self, other: &Coefficient) -> f64 {
        (self.to_complex() - other.to_complex()).norm()
    }

    fn expect_same(&self, other: &Coefficient) {
        assert_eq!(
            self.domain(),
            other.domain(),
            "coefficient domains must be equalized before arithmetic"
        );
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        self.expect_same(other);
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Gaussian(ar, ai), Coefficient::Gaussian(br, bi)) => {
                Coefficient::Gaussian(ar + br, ai + bi)
            }
            (Coefficient::Complex(a), Coefficient::Complex(b)) => Coefficient::Complex(a + b),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Gaussian(re, im) => Coefficient::Gaussian(-re, -im),
            Coefficient::Complex(z) => Coefficient::Complex(-z),
        }
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        self.expect_same(other);
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Gaussian(ar, ai), Coefficient::Gaussian(br, bi)) => {
                Coefficient::Gaussian(ar * br - ai * bi, ar * bi + ai * br)
            }
            (Coefficient::Complex(a), Coefficient::Complex(b)) => Coefficient::Complex(a * b),
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Result<Coefficient> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Coefficient::Rational(a) => Coefficient::Rational(a.recip()),
            Coefficient::Gaussian(re, im) => {
                let n = re * re + im * im;
                Coefficient::Gaussian(re / &n, -(im / &n))
            }
            Coefficient::Complex(z) => Coefficient::Complex(z.inv()),
        })
    }

    pub fn conj(&self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(a.clone()),
            Coefficient::Gaussian(re, im) => Coefficient::Gaussian(re.clone(), -im),
            Coefficient::Complex(z) => Coefficient::Complex(z.conj()),
        }
    }

    /// Scale by an exact rational, staying in the same domain.
    pub fn scale_rational(&self, s: &BigRational) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(a * s),
            Coefficient::Gaussian(re, im) => Coefficient::Gaussian(re * s, im * s),
            Coefficient::Complex(z) => {
                Coefficient::Complex(z * s.to_f64().unwrap_or(f64::NAN))
            }
        }
    }

    /// Real and imaginary parts rendered for serialization.
    pub fn to_parts_strings(&self) -> (String, String) {
        match self {
            Coefficient::Rational(r) => (format_rational(r), "0".into()),
            Coefficient::Gaussian(re, im) => (format_rational(re), format_rational(im)),
            Coefficient::Complex(z) => (format_f64(z.re), format_f64(z.im)),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_parts_strings();
        if im == "0" {
            write!(f, "{re}")
        } else {
            write!(f, "{re}+{im}i")
        }
    }
}

/// `p/q` with the denominator omitted when it is 1.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn format_f64(x: f64) -> String {
    // Shortest representation that round-trips.
    let mut s = format!("{x}");
    if !s.contains('.') && !s.contains('e') && !s.contains("inf") && !s.contains("NaN") {
        s.push_str(".0");
    }
    s
}

/// Parse a rational written as `p/q` or a plain integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational: {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n = num.trim().parse().map_err(|_| bad())?;
        let d: num_bigint::BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator: {s:?}")));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

/// Parse a coefficient from its two serialized parts within a known domain.
pub fn parse_parts(re: &str, im: &str, domain: Domain) -> Result<Coefficient> {
    match domain {
        Domain::Rational => {
            let r = parse_rational(re)?;
            let i = parse_rational(im)?;
            if !i.is_zero() {
                return Err(Error::Parse("rational element with imaginary part".into()));
            }
            Ok(Coefficient::Rational(r))
        }
        Domain::Gaussian => Ok(Coefficient::Gaussian(parse_rational(re)?, parse_rational(im)?)),
        Domain::Complex => {
            let r: f64 = re
                .trim()
                .parse()
                .or_else(|_| parse_rational(re).map(|q| q.to_f64().unwrap_or(f64::NAN)))
                .map_err(|_: Error| Error::Parse(format!("invalid float: {re:?}")))?;
            let i: f64 = im
                .trim()
                .parse()
                .or_else(|_| parse_rational(im).map(|q| q.to_f64().unwrap_or(f64::NAN)))
                .map_err(|_: Error| Error::Parse(format!("invalid float: {im:?}")))?;
            Ok(Coefficient::Complex(Complex64::new(r, i)))
        }
    }
}

/// Rational magnitude comparison: |a| ≤ bound, exact.
pub fn abs_le(a: &BigRational, bound: &BigRational) -> bool {
    a.abs() <= *bound
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_inverse() {
        // (1+2i)^{-1} = (1-2i)/5
        let z = Coefficient::Gaussian(
            BigRational::from_integer(1.into()),
            BigRational::from_integer(2.into()),
        );
        let inv = z.inv().unwrap();
        assert_eq!(z.mul(&inv), Coefficient::one(Domain::Gaussian));
    }

    #[test]
    fn promotion_is_upward_only() {
        let r = Coefficient::from_i64(3);
        assert!(r.promote(Domain::Gaussian).is_ok());
        let z = Coefficient::Complex(Complex64::new(1.0, 0.0));
        assert_eq!(z.promote(Domain::Rational), Err(Error::DomainMismatch));
    }

    #[test]
    fn rational_round_trip() {
        let r = parse_rational("-22/7").unwrap();
        assert_eq!(format_rational(&r), "-22/7");
        assert_eq!(parse_rational("5").unwrap(), BigRational::from_integer(5.into()));
        assert!(parse_rational("1/0").is_err());
    }
}
