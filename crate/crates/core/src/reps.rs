//! Diagonal Galois representations and their series actions.
//!
//! A representation here is a finite direct sum of Dirichlet characters (one
//! per one-dimensional summand).  Its local factor at a prime p is
//! det(1 − p^{−s}ρ(Frob_p))^{−1} = Π_j (1 − χ_j(p)·p^{−s})^{−1}, where
//! summands with χ_j(p) = 0 (ramified at p) contribute the factor 1 — the
//! determinant restricted to the fixed subspace.  Expanding the product gives
//! the coefficient function χ_ρ, which is multiplicative but not completely
//! multiplicative in general; the series action R_ρ multiplies coefficients
//! by χ_ρ(n).
//!
//! Endomorphism handles close over any such action; the sum on handles is
//! (S ⊞ S′)(f) = S(f) ∗ S′(f), matching direct sums of representations, and
//! composition matches tensor products in the one-dimensional case.

use std::fmt;
use std::sync::Arc;

use crate::characters::DirichletCharacter;
use crate::coeff::{Coefficient, Domain};
use crate::error::{Error, Result};
use crate::series::{is_prime, ArithSeries};

#[derive(Debug, Clone, PartialEq)]
pub struct GaloisRep {
    summands: Vec<DirichletCharacter>,
}

impl GaloisRep {
    pub fn new(summands: Vec<DirichletCharacter>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::Parse("a representation needs at least one summand".into()));
        }
        Ok(GaloisRep { summands })
    }

    pub fn from_character(chi: DirichletCharacter) -> Self {
        GaloisRep { summands: vec![chi] }
    }

    pub fn dimension(&self) -> usize {
        self.summands.len()
    }

    pub fn summands(&self) -> &[DirichletCharacter] {
        &self.summands
    }

    pub fn direct_sum(&self, other: &GaloisRep) -> GaloisRep {
        let mut summands = self.summands.clone();
        summands.extend(other.summands.iter().cloned());
        GaloisRep { summands }
    }

    /// The common coefficient domain of the summand values.
    pub fn value_domain(&self) -> Domain {
        self.summands
            .iter()
            .fold(Domain::Rational, |d, chi| d.join(chi.value_domain()))
    }

    /// Coefficients of the local factor at p up to X^depth (X = p^{−s}):
    /// the truncated expansion of Π_j (1 − χ_j(p)X)^{−1}.
    pub fn euler_factor_coeffs(&self, p: u64, depth: usize) -> Result<Vec<Coefficient>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let domain = self.value_domain();
        let mut acc = vec![Coefficient::zero(domain); depth + 1];
        acc[0] = Coefficient::one(domain);
        for chi in &self.summands {
            let v = chi.value(p).promote(domain)?;
            if v.is_zero() {
                continue; // ramified summand: factor 1
            }
            // Multiply by the geometric series Σ v^k X^k: in place,
            // new[k] = old[k] + v·new[k−1].
            for k in 1..=depth {
                let carry = acc[k - 1].mul(&v);
                acc[k] = acc[k].add(&carry);
            }
        }
        Ok(acc)
    }

    /// χ_ρ(1..N): the multiplicative assembly of the local factors,
    /// χ_ρ(Π p^e) = Π (coefficient of X^e at p).
    pub fn coefficient_series(&self, n: usize) -> Result<ArithSeries> {
        let domain = self.value_domain();
        let max_depth = if n >= 2 { n.ilog2() as usize } else { 0 };
        let mut out = ArithSeries::zero(n, domain);
        out.set(1, Coefficient::one(domain));
        let primes = crate::series::primes_up_to(n as u64);
        let mut tables = Vec::with_capacity(primes.len());
        for &p in &primes {
            tables.push(self.euler_factor_coeffs(p, max_depth)?);
        }
        for m in 2..=n {
            let mut acc = Coefficient::one(domain);
            let mut rest = m as u64;
            for (i, &p) in primes.iter().enumerate() {
                if p * p > rest {
                    break;
                }
                let mut e = 0usize;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                if e > 0 {
                    acc = acc.mul(&tables[i][e]);
                }
            }
            if rest > 1 {
                let idx = primes.binary_search(&rest).expect("prime within range");
                acc = acc.mul(&tables[idx][1]);
            }
            out.set(m, acc);
        }
        Ok(out)
    }

    /// The series action R_ρ: coefficientwise multiplication by χ_ρ(n).
    pub fn twist(&self, f: &ArithSeries) -> Result<ArithSeries> {
        f.pointwise(&self.coefficient_series(f.truncation())?)
    }

    /// Endomorphism handle for this representation's action.
    pub fn as_map(&self) -> SeriesMap {
        let rep = self.clone();
        SeriesMap::new(format!("R[dim {}]", rep.dimension()), move |f| rep.twist(f))
    }
}

impl fmt::Display for GaloisRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ρ = ")?;
        for (i, chi) in self.summands.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            write!(f, "({chi})")?;
        }
        Ok(())
    }
}

/// A closed, reusable series endomorphism.
#[derive(Clone)]
pub struct SeriesMap {
    label: String,
    func: Arc<dyn Fn(&ArithSeries) -> Result<ArithSeries> + Send + Sync>,
}

impl SeriesMap {
    pub fn new<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn(&ArithSeries) -> Result<ArithSeries> + Send + Sync + 'static,
    {
        SeriesMap { label: label.into(), func: Arc::new(f) }
    }

    pub fn identity() -> Self {
        SeriesMap::new("id", |f| Ok(f.clone()))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn apply(&self, f: &ArithSeries) -> Result<ArithSeries> {
        (self.func)(f)
    }

    /// Composition S ∘ S′.
    pub fn compose(&self, inner: &SeriesMap) -> SeriesMap {
        let outer = self.clone();
        let inner = inner.clone();
        SeriesMap::new(format!("{} ∘ {}", outer.label, inner.label), move |f| {
            outer.apply(&inner.apply(f)?)
        })
    }

    /// The handle sum (S ⊞ S′)(f) = S(f) ∗ S′(f).
    pub fn convolve_sum(&self, other: &SeriesMap) -> SeriesMap {
        let a = self.clone();
        let b = other.clone();
        SeriesMap::new(format!("{} ⊞ {}", a.label, b.label), move |f| {
            let left = a.apply(f)?;
            let right = b.apply(f)?;
            let domain = left.domain().join(right.domain());
            left.promote(domain)?.dconv(&right.promote(domain)?)
        })
    }
}

impl fmt::Debug for SeriesMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeriesMap({})", self.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate;
    use crate::series::Multiplicativity;

    fn trivial_rep() -> GaloisRep {
        GaloisRep::from_character(enumerate(1).unwrap()[0].clone())
    }

    fn mod4_rep() -> GaloisRep {
        GaloisRep::from_character(enumerate(4).unwrap()[1].clone())
    }

    #[test]
    fn trivial_euler_factor_is_local_zeta() {
        let coeffs = trivial_rep().euler_factor_coeffs(5, 6).unwrap();
        for c in &coeffs {
            assert_eq!(*c, Coefficient::one(Domain::Gaussian));
        }
    }

    #[test]
    fn quadratic_character_alternates_at_inert_primes() {
        // χ mod 4 has χ(3) = −1: the factor (1 + X)^{−1} alternates.
        let coeffs = mod4_rep().euler_factor_coeffs(3, 5).unwrap();
        for (k, c) in coeffs.iter().enumerate() {
            let expected = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                *c,
                Coefficient::from_i64(expected).promote(Domain::Gaussian).unwrap()
            );
        }
    }

    #[test]
    fn ramified_prime_gives_factor_one() {
        let coeffs = mod4_rep().euler_factor_coeffs(2, 4).unwrap();
        assert_eq!(coeffs[0], Coefficient::one(Domain::Gaussian));
        for c in &coeffs[1..] {
            assert!(c.is_zero());
        }
        assert_eq!(mod4_rep().euler_factor_coeffs(4, 2), Err(Error::NotPrime(4)));
    }

    #[test]
    fn trivial_rep_coefficients_are_all_ones() {
        let series = trivial_rep().coefficient_series(50).unwrap();
        for n in 1..=50 {
            assert_eq!(*series.get(n), Coefficient::one(Domain::Gaussian));
        }
    }

    #[test]
    fn direct_sum_coefficients_are_convolutions() {
        // χ_{ρ⊕σ} = χ_ρ ∗ χ_σ, checked against a direct convolution.
        let rep = mod4_rep().direct_sum(&trivial_rep());
        let assembled = rep.coefficient_series(60).unwrap();
        let chi_series = mod4_rep().coefficient_series(60).unwrap();
        let one_series = trivial_rep().coefficient_series(60).unwrap();
        let conv = chi_series.dconv(&one_series).unwrap();
        assert_eq!(assembled, conv);
        // Spot value at n = 6: Σ_{d|6} χ(d) = χ(1)+χ(2)+χ(3)+χ(6) = 1+0−1+0.
        assert_eq!(
            *assembled.get(6),
            Coefficient::from_i64(0).promote(Domain::Gaussian).unwrap()
        );
        // Multiplicative but not completely multiplicative.
        assert_eq!(
            assembled.classify_multiplicativity(),
            Multiplicativity::Multiplicative
        );
    }

    #[test]
    fn euler_expansion_matches_global_assembly_at_prime_powers() {
        let rep = mod4_rep().direct_sum(&mod4_rep());
        let series = rep.coefficient_series(128).unwrap();
        for p in [2u64, 3, 5, 7, 11] {
            let table = rep.euler_factor_coeffs(p, 7).unwrap();
            let mut pk = p;
            let mut k = 1;
            while pk <= 128 {
                assert_eq!(*series.get(pk as usize), table[k], "χ_ρ({p}^{k})");
                pk *= p;
                k += 1;
            }
        }
    }

    #[test]
    fn twist_is_coprime_product_endomorphism() {
        // R_ρ(f ⊗̌ g) = R_ρ(f) ⊗̌ R_ρ(g): multiplicativity of χ_ρ across
        // coprime factors is all that is needed, so this holds for any f, g.
        let rep = mod4_rep().direct_sum(&trivial_rep());
        let n = 80;
        let f = ArithSeries::from_fn(n, Domain::Rational, |i| {
            Coefficient::from_ratio(i as i64 % 5 - 2, 3)
        });
        let g = ArithSeries::from_fn(n, Domain::Rational, |i| {
            Coefficient::from_ratio(2 - i as i64 % 3, 5)
        });
        let lhs = rep.twist(&f.coprime_conv(&g).unwrap()).unwrap();
        let rhs = rep
            .twist(&f)
            .unwrap()
            .coprime_conv(&rep.twist(&g).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn handle_sum_matches_direct_sum_on_completely_multiplicative_input() {
        let rho = mod4_rep();
        let sigma = trivial_rep();
        let n = 100;
        let f = crate::series::PrimeVector::from_fn(n as u64, |p| {
            Coefficient::from_ratio(1, p as i64)
        })
        .to_series(n)
        .unwrap();
        let via_sum = rho.direct_sum(&sigma).twist(&f).unwrap();
        let via_handles = rho
            .as_map()
            .convolve_sum(&sigma.as_map())
            .apply(&f)
            .unwrap();
        assert_eq!(via_sum, via_handles);
        // ⊞ is commutative because ∗ is.
        let swapped = sigma
            .as_map()
            .convolve_sum(&rho.as_map())
            .apply(&f)
            .unwrap();
        assert_eq!(via_handles, swapped);
    }

    #[test]
    fn identity_handle_boxplus_acts_as_convolution() {
        let n = 40;
        let f = ArithSeries::ones(n);
        let s = trivial_rep().as_map();
        let boxed = s.convolve_sum(&SeriesMap::identity()).apply(&f).unwrap();
        let expected = trivial_rep()
            .twist(&f)
            .unwrap()
            .dconv(&f.promote(Domain::Gaussian).unwrap())
            .unwrap();
        assert_eq!(boxed, expected);
    }
}
