//! Sparse formal sums over a number field with two convolution products.
//!
//! An element is a finite map from exponents α ∈ K to nonzero coefficients,
//! written Σ a_α·ξ^α.  The Cauchy product convolves along the additive group
//! of K (c_γ = Σ_{γ=α+β} a_α b_β); the Dirichlet product convolves along the
//! multiplicative group, with the zero-exponent output coefficient given by
//! d₀ = a₀·Σ_{α≠0} b_α + b₀·Σ_{α≠0} a_α + a₀b₀, a finite sum here because
//! supports are finite.  The coefficient-sum
//! functional T is multiplicative for both products, and the unit-sum slice
//! T = 1 carries the affine vector structure f +̇ g = f + g − 1_⊕,
//! c ⊙ f = c·f + (1−c)·1_⊕.  Bilateral shifts, the Galois action on
//! exponents, and the sign grading of the support complete the picture.

use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Coefficient, Domain};
use crate::error::{Error, Result};
use crate::numfield::{NFElem, NumberField, SignVector};

/// Sparse element Σ a_α·ξ^α with exponents in a fixed field and coefficients
/// in a single domain.  Zero coefficients are never stored; term iteration
/// follows the total order on exponent coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgElem {
    field: NumberField,
    domain: Domain,
    terms: BTreeMap<NFElem, Coefficient>,
}

impl AlgElem {
    pub fn zero(field: NumberField, domain: Domain) -> Self {
        AlgElem { field, domain, terms: BTreeMap::new() }
    }

    /// Monomial a·ξ^α.
    pub fn monomial(field: NumberField, exponent: NFElem, coeff: Coefficient) -> Self {
        let mut e = AlgElem::zero(field, coeff.domain());
        if !coeff.is_zero() {
            e.terms.insert(exponent, coeff);
        }
        e
    }

    /// The Cauchy identity 1_⊕ = ξ^0.
    pub fn cauchy_one(field: NumberField, domain: Domain) -> Self {
        let exp = field.zero();
        AlgElem::monomial(field, exp, Coefficient::one(domain))
    }

    /// The Dirichlet identity 1_⊗ = ξ^1.
    pub fn dirichlet_one(field: NumberField, domain: Domain) -> Self {
        let exp = field.one();
        AlgElem::monomial(field, exp, Coefficient::one(domain))
    }

    pub fn from_terms<I>(field: NumberField, domain: Domain, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NFElem, Coefficient)>,
    {
        let mut e = AlgElem::zero(field, domain);
        for (exp, c) in terms {
            if c.domain() != domain {
                return Err(Error::DomainMismatch);
            }
            if exp.degree() != e.field.degree() {
                return Err(Error::DimensionMismatch {
                    expected: e.field.degree(),
                    got: exp.degree(),
                });
            }
            if !c.is_zero() {
                let entry = e
                    .terms
                    .entry(exp)
                    .or_insert_with(|| Coefficient::zero(domain));
                *entry = entry.add(&c);
            }
        }
        e.strip_zeros();
        Ok(e)
    }

    /// Convenience: integer-exponent terms with rational coefficients.
    pub fn from_int_terms(field: &NumberField, terms: &[(i64, i64)]) -> Self {
        let mut map = BTreeMap::new();
        for &(exp, c) in terms {
            if c != 0 {
                map.insert(field.integer(exp), Coefficient::from_i64(c));
            }
        }
        AlgElem { field: field.clone(), domain: Domain::Rational, terms: map }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NFElem, &Coefficient)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &NFElem) -> Coefficient {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(|| Coefficient::zero(self.domain))
    }

    fn strip_zeros(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    fn check_compatible(&self, other: &AlgElem) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    /// Promote the coefficient domain (upward only, explicit).
    pub fn promote(&self, target: Domain) -> Result<AlgElem> {
        if !self.domain.promotes_to(target) {
            return Err(Error::DomainMismatch);
        }
        let mut terms = BTreeMap::new();
        for (exp, c) in &self.terms {
            terms.insert(exp.clone(), c.promote(target)?);
        }
        Ok(AlgElem { field: self.field.clone(), domain: target, terms })
    }

    /// Plain vector-space addition of coefficient families.
    pub fn add(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            let entry = out
                .terms
                .entry(exp.clone())
                .or_insert_with(|| Coefficient::zero(self.domain));
            *entry = entry.add(c);
        }
        out.strip_zeros();
        Ok(out)
    }

    pub fn sub(&self, other: &AlgElem) -> Result<AlgElem> {
        let minus_one = Coefficient::from_i64(-1).promote(other.domain)?;
        self.add(&other.scale(&minus_one))
    }

    /// Scale every coefficient by a scalar of the same domain.
    pub fn scale(&self, s: &Coefficient) -> AlgElem {
        assert_eq!(s.domain(), self.domain, "scalar domain must match");
        let mut out = AlgElem::zero(self.field.clone(), self.domain);
        if s.is_zero() {
            return out;
        }
        for (exp, c) in &self.terms {
            let v = c.mul(s);
            if !v.is_zero() {
                out.terms.insert(exp.clone(), v);
            }
        }
        out
    }

    /// Coefficientwise complex conjugation.
    pub fn conj(&self) -> AlgElem {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.conj();
        }
        out
    }

    /// Parseval inner product ⟨f, g⟩ = Σ a_α · conj(b_α).
    pub fn inner_product(&self, other: &AlgElem) -> Result<Coefficient> {
        self.check_compatible(other)?;
        let mut acc = Coefficient::zero(self.domain);
        for (exp, a) in &self.terms {
            if let Some(b) = other.terms.get(exp) {
                acc = acc.add(&a.mul(&b.conj()));
            }
        }
        Ok(acc)
    }

    /// Σ|a_α|² as an exact rational (exact domains only).
    pub fn norm_sq_exact(&self) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for c in self.terms.values() {
            acc += c.norm_sq_exact()?;
        }
        Some(acc)
    }

    pub fn norm_sq(&self) -> f64 {
        self.terms.values().map(|c| c.norm_sq()).sum()
    }

    /// Largest coefficientwise distance to another element; zero exactly when
    /// supports and values agree.  This is the comparison to use in the
    /// binary64 domain.
    pub fn max_dist(&self, other: &AlgElem) -> f64 {
        let mut worst = 0.0f64;
        for (exp, a) in &self.terms {
            let b = other.coefficient(exp);
            worst = worst.max(a.dist(&b));
        }
        for (exp, b) in &other.terms {
            if !self.terms.contains_key(exp) {
                worst = worst.max(b.norm_sq().sqrt());
            }
        }
        worst
    }

    /// Coefficient-sum functional T(f) = Σ a_α; multiplicative for both
    /// products.
    pub fn coeff_sum(&self) -> Coefficient {
        let mut acc = Coefficient::zero(self.domain);
        for c in self.terms.values() {
            acc = acc.add(c);
        }
        acc
    }

    /// Sum over nonzero exponents only: T(f) − a₀.
    fn coeff_sum_nonzero_exp(&self) -> Coefficient {
        let zero_exp = self.field.zero();
        let mut acc = Coefficient::zero(self.domain);
        for (exp, c) in &self.terms {
            if *exp != zero_exp {
                acc = acc.add(c);
            }
        }
        acc
    }

    /// Cauchy product: convolution along (K, +).
    pub fn cauchy_product(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check_compatible(other)?;
        let mut out = AlgElem::zero(self.field.clone(), self.domain);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp = self.field.add(ea, eb);
                let prod = ca.mul(cb);
                let entry = out
                    .terms
                    .entry(exp)
                    .or_insert_with(|| Coefficient::zero(self.domain));
                *entry = entry.add(&prod);
            }
        }
        out.strip_zeros();
        Ok(out)
    }

    /// Dirichlet product: convolution along (K*, ×) plus the d₀ rule for the
    /// zero-exponent coefficient.
    pub fn dirichlet_product(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check_compatible(other)?;
        let zero_exp = self.field.zero();
        let mut out = AlgElem::zero(self.field.clone(), self.domain);
        for (ea, ca) in &self.terms {
            if *ea == zero_exp {
                continue;
            }
            for (eb, cb) in &other.terms {
                if *eb == zero_exp {
                    continue;
                }
                let exp = self.field.mul(ea, eb);
                let prod = ca.mul(cb);
                let entry = out
                    .terms
                    .entry(exp)
                    .or_insert_with(|| Coefficient::zero(self.domain));
                *entry = entry.add(&prod);
            }
        }
        let a0 = self.coefficient(&zero_exp);
        let b0 = other.coefficient(&zero_exp);
        let d0 = a0
            .mul(&other.coeff_sum_nonzero_exp())
            .add(&b0.mul(&self.coeff_sum_nonzero_exp()))
            .add(&a0.mul(&b0));
        if !d0.is_zero() {
            let entry = out
                .terms
                .entry(zero_exp)
                .or_insert_with(|| Coefficient::zero(self.domain));
            *entry = entry.add(&d0);
        }
        out.strip_zeros();
        Ok(out)
    }

    /// Scale to the unit-sum representative (1/T(f))·f; idempotent.
    pub fn normalize(&self) -> Result<AlgElem> {
        let t = self.coeff_sum();
        if t.is_zero() {
            return Err(Error::TraceZero);
        }
        Ok(self.scale(&t.inv()?))
    }

    fn require_unit_sum(&self) -> Result<()> {
        let one = Coefficient::one(self.domain);
        let t = self.coeff_sum();
        let ok = match self.domain {
            Domain::Complex => t.dist(&one) <= 1e-9,
            _ => t == one,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotNormalized)
        }
    }

    /// Affine sum on the unit-sum slice: f +̇ g = f + g − 1_⊕.
    pub fn affine_add(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check_compatible(other)?;
        self.require_unit_sum()?;
        other.require_unit_sum()?;
        let one = AlgElem::cauchy_one(self.field.clone(), self.domain);
        self.add(other)?.sub(&one)
    }

    /// Affine scalar action: c ⊙ f = c·f + (1−c)·1_⊕.
    pub fn affine_scale(&self, c: &Coefficient) -> Result<AlgElem> {
        if c.domain() != self.domain {
            return Err(Error::DomainMismatch);
        }
        self.require_unit_sum()?;
        let one = AlgElem::cauchy_one(self.field.clone(), self.domain);
        let complement = Coefficient::one(self.domain).sub(c);
        self.scale(c).add(&one.scale(&complement))
    }

    /// Galois action: terms reindexed α ↦ σ(α), coefficients unchanged.
    pub fn galois_act(&self, sigma: usize) -> Result<AlgElem> {
        let mut out = AlgElem::zero(self.field.clone(), self.domain);
        for (exp, c) in &self.terms {
            let image = self.field.galois_apply(sigma, exp)?;
            out.terms.insert(image, c.clone());
        }
        Ok(out)
    }

    /// Bilateral additive shift S_α: the output coefficient at β is a_{α−β}.
    pub fn cauchy_shift(&self, alpha: &NFElem) -> AlgElem {
        let mut out = AlgElem::zero(self.field.clone(), self.domain);
        for (exp, c) in &self.terms {
            out.terms.insert(self.field.sub(alpha, exp), c.clone());
        }
        out
    }

    /// Bilateral multiplicative shift T_α (α ≠ 0): the output coefficient at
    /// β is a_{αβ^{-1}} for β ≠ 0; zero-exponent terms are carried unchanged.
    pub fn dirichlet_shift(&self, alpha: &NFElem) -> Result<AlgElem> {
        if alpha.is_zero() {
            return Err(Error::ZeroShift);
        }
        let zero_exp = self.field.zero();
        let mut out = AlgElem::zero(self.field.clone(), self.domain);
        for (exp, c) in &self.terms {
            if *exp == zero_exp {
                out.terms.insert(exp.clone(), c.clone());
            } else {
                let target = self.field.div(alpha, exp)?;
                out.terms.insert(target, c.clone());
            }
        }
        Ok(out)
    }

    /// Keep only terms whose exponent satisfies the predicate.
    pub fn filter_support<F: Fn(&NFElem) -> bool>(&self, keep: F) -> AlgElem {
        let mut out = AlgElem::zero(self.field.clone(), self.domain);
        for (exp, c) in &self.terms {
            if keep(exp) {
                out.terms.insert(exp.clone(), c.clone());
            }
        }
        out
    }

    /// Partition the terms by the sign tuple of their exponents, separating
    /// the zero-exponent coefficient.
    pub fn grade(&self) -> Result<GradedDecomposition> {
        self.grade_with_cap(crate::numfield::DEFAULT_SIGN_CAP_BITS)
    }

    /// Like `grade`, with an explicit bit cap for sign resolution.
    pub fn grade_with_cap(&self, cap_bits: u32) -> Result<GradedDecomposition> {
        let zero_exp = self.field.zero();
        let mut components: BTreeMap<SignVector, AlgElem> = BTreeMap::new();
        let mut constant = Coefficient::zero(self.domain);
        for (exp, c) in &self.terms {
            if *exp == zero_exp {
                constant = c.clone();
                continue;
            }
            let sign = self.field.sign_of_with_cap(exp, cap_bits)?;
            let slot = components
                .entry(sign)
                .or_insert_with(|| AlgElem::zero(self.field.clone(), self.domain));
            slot.terms.insert(exp.clone(), c.clone());
        }
        Ok(GradedDecomposition {
            field: self.field.clone(),
            domain: self.domain,
            components,
            constant,
        })
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·ξ^{exp}")?;
        }
        Ok(())
    }
}

/// Sign-graded decomposition: one component per sign tuple with nonempty
/// support, plus the constant term.
#[derive(Debug, Clone)]
pub struct GradedDecomposition {
    field: NumberField,
    domain: Domain,
    components: BTreeMap<SignVector, AlgElem>,
    constant: Coefficient,
}

impl GradedDecomposition {
    pub fn component(&self, sign: &SignVector) -> AlgElem {
        self.components
            .get(sign)
            .cloned()
            .unwrap_or_else(|| AlgElem::zero(self.field.clone(), self.domain))
    }

    pub fn components(&self) -> impl Iterator<Item = (&SignVector, &AlgElem)> {
        self.components.iter()
    }

    pub fn constant(&self) -> &Coefficient {
        &self.constant
    }

    /// Components plus constant reassemble the original element exactly.
    pub fn reassemble(&self) -> Result<AlgElem> {
        let mut acc = AlgElem::zero(self.field.clone(), self.domain);
        let constant_part = AlgElem::monomial(
            self.field.clone(),
            self.field.zero(),
            self.constant.clone(),
        );
        if !constant_part.is_zero() {
            acc = acc.add(&constant_part)?;
        }
        for part in self.components.values() {
            acc = acc.add(part)?;
        }
        Ok(acc)
    }
}

/// Coordinatewise conditional conjugation of a point: x + it ↦ x + θ·it.
pub fn theta_conjugate(
    theta: &SignVector,
    point: &[num_complex::Complex64],
) -> Result<Vec<num_complex::Complex64>> {
    if theta.len() != point.len() {
        return Err(Error::DimensionMismatch { expected: theta.len(), got: point.len() });
    }
    Ok(point
        .iter()
        .zip(theta.signs())
        .map(|(z, &s)| num_complex::Complex64::new(z.re, f64::from(s) * z.im))
        .collect())
}

/// Both readings of the zero-exponent coefficient of a Dirichlet product.
///
/// `shift_rule` is the convolution-side formula d₀ = a₀·Σ'b + b₀·Σ'a + a₀b₀
/// (the one this library computes); `grading_rule` is the graded-decomposition
/// alternative T(f)·T(g) − a₀b₀.  The two agree only in special cases, so the
/// comparison is reported rather than resolved.
#[derive(Debug, Clone)]
pub struct ConstantTermDiagnostic {
    pub shift_rule: Coefficient,
    pub grading_rule: Coefficient,
    pub agree: bool,
}

pub fn constant_term_diagnostic(f: &AlgElem, g: &AlgElem) -> Result<ConstantTermDiagnostic> {
    let product = f.dirichlet_product(g)?;
    let zero_exp = f.field().zero();
    let shift_rule = product.coefficient(&zero_exp);
    let a0 = f.coefficient(&zero_exp);
    let b0 = g.coefficient(&zero_exp);
    let grading_rule = f.coeff_sum().mul(&g.coeff_sum()).sub(&a0.mul(&b0));
    let agree = match f.domain() {
        Domain::Complex => shift_rule.dist(&grading_rule) <= 1e-9,
        _ => shift_rule == grading_rule,
    };
    Ok(ConstantTermDiagnostic { shift_rule, grading_rule, agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    #[test]
    fn cauchy_identity_and_monomial_law() {
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(0, 1), (1, 2), (3, -1)]);
        let one = AlgElem::cauchy_one(k.clone(), Domain::Rational);
        assert_eq!(one.cauchy_product(&f).unwrap(), f);
        let m2 = AlgElem::from_int_terms(&k, &[(2, 1)]);
        let m3 = AlgElem::from_int_terms(&k, &[(3, 1)]);
        assert_eq!(
            m2.cauchy_product(&m3).unwrap(),
            AlgElem::from_int_terms(&k, &[(5, 1)])
        );
    }

    #[test]
    fn cauchy_product_small_table() {
        // {0↦1, 1↦2} ⊕ {0↦3, 1↦4} = {0↦3, 1↦10, 2↦8}
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(0, 1), (1, 2)]);
        let g = AlgElem::from_int_terms(&k, &[(0, 3), (1, 4)]);
        assert_eq!(
            f.cauchy_product(&g).unwrap(),
            AlgElem::from_int_terms(&k, &[(0, 3), (1, 10), (2, 8)])
        );
    }

    #[test]
    fn dirichlet_identity_and_table() {
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(2, 1), (3, 1)]);
        let one = AlgElem::dirichlet_one(k.clone(), Domain::Rational);
        assert_eq!(f.dirichlet_product(&one).unwrap(), f);
        // {2↦1,3↦1} ⊗ {2↦1,3↦1} = {4↦1, 6↦2, 9↦1}
        assert_eq!(
            f.dirichlet_product(&f).unwrap(),
            AlgElem::from_int_terms(&k, &[(4, 1), (6, 2), (9, 1)])
        );
    }

    #[test]
    fn dirichlet_product_absorbs_into_cauchy_one() {
        // f ⊗ 1_⊕ = T(f)·1_⊕
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(0, 2), (1, 3), (5, -1)]);
        let one_plus = AlgElem::cauchy_one(k.clone(), Domain::Rational);
        let lhs = f.dirichlet_product(&one_plus).unwrap();
        assert_eq!(lhs, one_plus.scale(&f.coeff_sum()));
        let unit = f.normalize().unwrap();
        assert_eq!(unit.dirichlet_product(&one_plus).unwrap(), one_plus);
    }

    #[test]
    fn coeff_sum_is_multiplicative_for_both_products() {
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(0, 1), (2, 3), (-1, 2)]);
        let g = AlgElem::from_int_terms(&k, &[(1, -2), (4, 1), (0, 5)]);
        let tf = f.coeff_sum();
        let tg = g.coeff_sum();
        assert_eq!(f.cauchy_product(&g).unwrap().coeff_sum(), tf.mul(&tg));
        assert_eq!(f.dirichlet_product(&g).unwrap().coeff_sum(), tf.mul(&tg));
    }

    #[test]
    fn zero_sum_elements_have_no_unit_representative() {
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(0, 1), (1, 2), (2, -3)]);
        assert!(f.coeff_sum().is_zero());
        assert_eq!(f.normalize(), Err(Error::TraceZero));
    }

    #[test]
    fn normalization_and_affine_ops() {
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(1, 3), (2, -1)]);
        let n = f.normalize().unwrap();
        let expected = AlgElem::from_terms(
            k.clone(),
            Domain::Rational,
            vec![
                (k.integer(1), Coefficient::from_ratio(3, 2)),
                (k.integer(2), Coefficient::from_ratio(-1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(n, expected);
        assert_eq!(n.normalize().unwrap(), n, "normalization is idempotent");

        let one = AlgElem::cauchy_one(k.clone(), Domain::Rational);
        assert_eq!(one.affine_add(&n).unwrap(), n);
        assert_eq!(n.affine_scale(&Coefficient::from_i64(1)).unwrap(), n);
        // 2 ⊙ {1↦1} = {1↦2, 0↦−1}
        let unit_monomial = AlgElem::from_int_terms(&k, &[(1, 1)]);
        assert_eq!(
            unit_monomial.affine_scale(&Coefficient::from_i64(2)).unwrap(),
            AlgElem::from_int_terms(&k, &[(1, 2), (0, -1)])
        );
        // Affine results stay on the unit-sum slice.
        assert_eq!(
            n.affine_add(&unit_monomial).unwrap().coeff_sum(),
            Coefficient::from_i64(1)
        );
        // Unnormalized inputs are rejected.
        let bad = AlgElem::from_int_terms(&k, &[(1, 2)]);
        assert_eq!(bad.affine_add(&n), Err(Error::NotNormalized));
    }

    #[test]
    fn dirichlet_does_not_distribute_over_cauchy() {
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(1, 1), (2, 1)]);
        let g = AlgElem::from_int_terms(&k, &[(1, 1)]);
        let h = AlgElem::from_int_terms(&k, &[(1, 1)]);
        let lhs = f.dirichlet_product(&g.cauchy_product(&h).unwrap()).unwrap();
        let rhs = f
            .dirichlet_product(&g)
            .unwrap()
            .cauchy_product(&f.dirichlet_product(&h).unwrap())
            .unwrap();
        assert_ne!(lhs, rhs, "⊗ must not distribute over ⊕");
    }

    #[test]
    fn shifts_and_inner_product_recover_cauchy_coefficients() {
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(-1, 2), (0, 1), (2, 3)]);
        let g = AlgElem::from_int_terms(&k, &[(1, 1), (2, -2)]);
        let product = f.cauchy_product(&g).unwrap();
        for alpha in [-2i64, -1, 0, 1, 2, 3, 4] {
            let alpha = k.integer(alpha);
            let shifted = g.conj().cauchy_shift(&alpha);
            let c = f.inner_product(&shifted).unwrap();
            assert_eq!(c, product.coefficient(&alpha));
        }
    }

    #[test]
    fn shift_edge_cases() {
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(1, 5), (2, -3), (0, 7)]);
        // S_0 reflects the support.
        let reflected = f.cauchy_shift(&k.integer(0));
        assert_eq!(
            reflected,
            AlgElem::from_int_terms(&k, &[(-1, 5), (-2, -3), (0, 7)])
        );
        // T_1 inverts nonzero exponents and keeps exponent 0.
        let inverted = f.dirichlet_shift(&k.integer(1)).unwrap();
        let expected = AlgElem::from_terms(
            k.clone(),
            Domain::Rational,
            vec![
                (k.integer(1), Coefficient::from_i64(5)),
                (k.rational(1, 2), Coefficient::from_i64(-3)),
                (k.integer(0), Coefficient::from_i64(7)),
            ],
        )
        .unwrap();
        assert_eq!(inverted, expected);
        assert_eq!(f.dirichlet_shift(&k.integer(0)), Err(Error::ZeroShift));
        // Norms are preserved exactly.
        assert_eq!(f.norm_sq_exact(), reflected.norm_sq_exact());
        assert_eq!(f.norm_sq_exact(), inverted.norm_sq_exact());
    }

    #[test]
    fn grading_over_q_gives_triple() {
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(-1, 1), (0, 2), (3, 5)]);
        let graded = f.grade().unwrap();
        assert_eq!(*graded.constant(), Coefficient::from_i64(2));
        let minus = graded.component(&SignVector::new(vec![-1]));
        let plus = graded.component(&SignVector::new(vec![1]));
        assert_eq!(minus, AlgElem::from_int_terms(&k, &[(-1, 1)]));
        assert_eq!(plus, AlgElem::from_int_terms(&k, &[(3, 5)]));
        assert_eq!(graded.reassemble().unwrap(), f);
    }

    #[test]
    fn theta_conjugation_composes() {
        let pts = vec![Complex64::new(0.3, -1.2), Complex64::new(-2.0, 0.7)];
        let t1 = SignVector::new(vec![1, -1]);
        let t2 = SignVector::new(vec![-1, -1]);
        let via_two = theta_conjugate(&t1, &theta_conjugate(&t2, &pts).unwrap()).unwrap();
        let direct = theta_conjugate(&t1.product(&t2), &pts).unwrap();
        assert_eq!(via_two, direct);
        let identity = theta_conjugate(&SignVector::all_plus(2), &pts).unwrap();
        assert_eq!(identity, pts);
    }

    #[test]
    fn constant_term_rules_disagree_in_general() {
        let k = q();
        let f = AlgElem::from_int_terms(&k, &[(0, 1), (2, 1)]);
        let g = AlgElem::from_int_terms(&k, &[(0, 1), (3, 2)]);
        let diag = constant_term_diagnostic(&f, &g).unwrap();
        // shift rule: 1·2 + 1·1 + 1 = 4; grading rule: 2·3 − 1 = 5.
        assert_eq!(diag.shift_rule, Coefficient::from_i64(4));
        assert_eq!(diag.grading_rule, Coefficient::from_i64(5));
        assert!(!diag.agree);
    }

    #[test]
    fn mismatched_fields_rejected() {
        let a = AlgElem::from_int_terms(&q(), &[(1, 1)]);
        let k2 = NumberField::quadratic(2).unwrap();
        let b = AlgElem::from_int_terms(&k2, &[(1, 1)]);
        assert_eq!(a.cauchy_product(&b), Err(Error::FieldMismatch));
    }
}
