//! Dirichlet characters with exact root-of-unity values.
//!
//! A character mod N is stored as a full residue table: `None` on non-units,
//! otherwise the exponent k of a root of unity e^{2πik/m}, where m is the
//! order of the character.  All value arithmetic happens on the exponents in
//! Z/m, so products, inductions and conductor computations are exact.
//!
//! Values convert to coefficients exactly when the order divides 4 (the
//! values then lie in the Gaussian rationals); other orders fall back to
//! binary64.  Enumeration walks the unit group through fixed generators
//! (smallest primitive roots per prime-power factor, CRT-lifted) in
//! lexicographic exponent order, so character indices are reproducible.

use num_complex::Complex64;
use num_integer::Integer;
use std::f64::consts::TAU;
use std::fmt;

use crate::coeff::{Coefficient, Domain};
use crate::error::{Error, Result};
use crate::series::{gcd, is_prime, ArithSeries, PrimeVector};

/// Default cap on the modulus for enumeration.
pub const DEFAULT_MODULUS_CAP: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    /// Order m of the character as a root of unity.
    order: u64,
    /// Per residue r = 0..N−1: None on non-units, Some(k) meaning e^{2πik/m}.
    values: Vec<Option<u64>>,
    conductor: u64,
    primitive: bool,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// Values lie in the Gaussian rationals exactly when the order divides 4.
    pub fn has_exact_values(&self) -> bool {
        4 % self.order == 0
    }

    /// Exponent of the value at n: None when gcd(n, N) > 1.
    pub fn exponent_at(&self, n: u64) -> Option<u64> {
        self.values[(n % self.modulus) as usize]
    }

    /// χ(n) as a coefficient: exact Gaussian rational for orders dividing 4,
    /// binary64 otherwise; zero on non-units.
    pub fn value(&self, n: u64) -> Coefficient {
        match self.exponent_at(n) {
            None => {
                if self.has_exact_values() {
                    Coefficient::zero(Domain::Gaussian)
                } else {
                    Coefficient::zero(Domain::Complex)
                }
            }
            Some(k) => root_of_unity(self.order, k),
        }
    }

    /// The coefficient domain `value` produces.
    pub fn value_domain(&self) -> Domain {
        if self.has_exact_values() {
            Domain::Gaussian
        } else {
            Domain::Complex
        }
    }

    /// First N coefficients χ(1), …, χ(N) as a series.
    pub fn to_series(&self, n: usize) -> ArithSeries {
        ArithSeries::from_fn(n, self.value_domain(), |i| self.value(i as u64))
    }

    /// Coefficientwise action f ↦ Σ χ(n)·a_n: multiply each coefficient by
    /// the character value, joining domains as needed.
    pub fn twist(&self, f: &ArithSeries) -> Result<ArithSeries> {
        f.pointwise(&self.to_series(f.truncation()))
    }

    /// The prime-level action: each prime value is multiplied by χ(p).
    pub fn twist_prime_vector(&self, pv: &PrimeVector) -> PrimeVector {
        pv.map_values(|p, v| {
            let chi = self.value(p);
            let domain = v.domain().join(chi.domain());
            v.promote(domain)
                .and_then(|a| chi.promote(domain).map(|b| a.mul(&b)))
                .expect("upward promotion cannot fail")
        })
    }

    /// Character induced to a multiple of the modulus; the conductor and
    /// primitivity are recomputed for the new modulus.
    pub fn induce(&self, modulus: u64) -> Result<DirichletCharacter> {
        if modulus % self.modulus != 0 {
            return Err(Error::NotMultiple(modulus, self.modulus));
        }
        let values: Vec<Option<u64>> = (0..modulus)
            .map(|r| {
                if gcd(r, modulus) != 1 {
                    None
                } else {
                    self.values[(r % self.modulus) as usize]
                }
            })
            .collect();
        Ok(finish_character(modulus, self.order, values))
    }

    /// Pointwise product character mod lcm of the moduli.
    pub fn product(&self, other: &DirichletCharacter) -> DirichletCharacter {
        let modulus = self.modulus.lcm(&other.modulus);
        let order = self.order.lcm(&other.order);
        let values: Vec<Option<u64>> = (0..modulus)
            .map(|r| {
                if gcd(r, modulus) != 1 {
                    return None;
                }
                let k1 = self.values[(r % self.modulus) as usize]?;
                let k2 = other.values[(r % other.modulus) as usize]?;
                Some((k1 * (order / self.order) + k2 * (order / other.order)) % order)
            })
            .collect();
        finish_character(modulus, order, values)
    }

    /// Serialized value table: one `(r, order, k)` entry per unit residue.
    pub fn value_table(&self) -> Vec<(u64, u64, u64)> {
        (0..self.modulus)
            .filter_map(|r| self.values[r as usize].map(|k| (r, self.order, k)))
            .collect()
    }

    /// Restriction to the conductor: the primitive character this one is
    /// induced from.
    pub fn primitive_part(&self) -> DirichletCharacter {
        if self.primitive {
            return self.clone();
        }
        let f = self.conductor;
        let values: Vec<Option<u64>> = (0..f)
            .map(|r| {
                if gcd(r, f) != 1 {
                    return None;
                }
                // Find a lift of r that is a unit mod N; χ is constant on
                // such lifts because f is the conductor.
                let mut lift = r;
                loop {
                    if gcd(lift, self.modulus) == 1 {
                        return self.values[(lift % self.modulus) as usize];
                    }
                    lift += f;
                }
            })
            .collect();
        finish_character(f, self.order, values)
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "χ mod {} (order {}, conductor {}{})",
            self.modulus,
            self.order,
            self.conductor,
            if self.primitive { ", primitive" } else { "" }
        )
    }
}

/// e^{2πik/m} as a coefficient: exact for m | 4.
pub fn root_of_unity(order: u64, k: u64) -> Coefficient {
    let k = k % order;
    match order {
        1 => Coefficient::one(Domain::Gaussian),
        2 => {
            let c = if k == 0 { 1 } else { -1 };
            Coefficient::from_i64(c).promote(Domain::Gaussian).unwrap()
        }
        4 => {
            let (re, im) = match k {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            };
            Coefficient::Gaussian(
                num_rational::BigRational::from_integer(re.into()),
                num_rational::BigRational::from_integer(im.into()),
            )
        }
        m => {
            let angle = TAU * (k as f64) / (m as f64);
            Coefficient::Complex(Complex64::new(angle.cos(), angle.sin()))
        }
    }
}

/// All φ(N) characters mod N in lexicographic generator-exponent order,
/// starting with the principal character.
pub fn enumerate(modulus: u64) -> Result<Vec<DirichletCharacter>> {
    enumerate_with_cap(modulus, DEFAULT_MODULUS_CAP)
}

pub fn enumerate_with_cap(modulus: u64, cap: u64) -> Result<Vec<DirichletCharacter>> {
    if modulus == 0 || modulus > cap {
        return Err(Error::CapExceeded { cap: cap as usize, got: modulus as usize });
    }
    let group = UnitGroup::new(modulus);
    let orders: Vec<u64> = group.generators.iter().map(|g| g.order).collect();
    let group_exponent = orders.iter().fold(1u64, |acc, &m| acc.lcm(&m));
    let mut out = Vec::new();
    for tuple in MixedRadix::new(&orders) {
        let values: Vec<Option<u64>> = (0..modulus)
            .map(|r| {
                group.dlog(r).map(|dl| {
                    let mut k = 0u64;
                    for ((a, t), m) in tuple.iter().zip(dl).zip(&orders) {
                        k = (k + a * t % group_exponent * (group_exponent / m)) % group_exponent;
                    }
                    k
                })
            })
            .collect();
        out.push(finish_character(modulus, group_exponent, values));
    }
    Ok(out)
}

/// Rebuild a character from a serialized value table `(r, m, k)` meaning
/// χ(r) = e^{2πik/m}; residues not listed are zero.  The table must cover
/// exactly the units and be completely multiplicative on them.
pub fn from_value_table(modulus: u64, entries: &[(u64, u64, u64)]) -> Result<DirichletCharacter> {
    if modulus == 0 {
        return Err(Error::Parse("modulus must be positive".into()));
    }
    let order = entries
        .iter()
        .map(|&(_, m, _)| m)
        .fold(1u64, |acc, m| acc.lcm(&m.max(1)));
    let mut values: Vec<Option<u64>> = vec![None; modulus as usize];
    for &(r, m, k) in entries {
        if r >= modulus || m == 0 {
            return Err(Error::Parse(format!("bad value entry ({r}, {m}, {k})")));
        }
        values[r as usize] = Some(k % m * (order / m) % order);
    }
    for r in 0..modulus {
        let is_unit = gcd(r, modulus) == 1;
        if is_unit != values[r as usize].is_some() {
            return Err(Error::Parse(format!(
                "value table must cover exactly the units mod {modulus}; residue {r} is wrong"
            )));
        }
    }
    // Complete multiplicativity on residues.
    for a in 0..modulus {
        if let Some(ka) = values[a as usize] {
            for b in a..modulus {
                if let Some(kb) = values[b as usize] {
                    let kab = values[(a * b % modulus) as usize]
                        .ok_or_else(|| Error::Parse("unit product maps to non-unit".into()))?;
                    if (ka + kb) % order != kab {
                        return Err(Error::Parse(format!(
                            "value table is not multiplicative at ({a}, {b})"
                        )));
                    }
                }
            }
        }
    }
    Ok(finish_character(modulus, order, values))
}

/// Indicator of p-powers: a_n = 1 when n = p^k (including n = 1), else 0.
/// This is the coefficient function of the local factor (1 − p^{−s})^{−1}.
pub fn zeta_p_series(p: u64, n: usize) -> Result<ArithSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p as usize > n {
        return Err(Error::TruncationTooSmall(n, p));
    }
    Ok(local_factor_series(p, &Coefficient::from_i64(1), n))
}

/// Coefficients of the local factor (1 − c·p^{−s})^{−1}: c^k at n = p^k,
/// zero elsewhere.
pub fn local_factor_series(p: u64, c: &Coefficient, n: usize) -> ArithSeries {
    let mut out = ArithSeries::zero(n, c.domain());
    let mut idx = 1u64;
    let mut power = Coefficient::one(c.domain());
    while idx <= n as u64 {
        out.set(idx as usize, power.clone());
        power = power.mul(c);
        match idx.checked_mul(p) {
            Some(next) => idx = next,
            None => break,
        }
    }
    out
}

/// The arithmetic-function identity linking a primitive character to any
/// character it induces: χ equals the induced character convolved with one
/// χ(p)-twisted local zeta factor for every prime dividing the new modulus
/// but not the conductor.  Returns the fully convolved right-hand side.
pub fn induction_identity_rhs(
    primitive: &DirichletCharacter,
    induced: &DirichletCharacter,
    n: usize,
) -> Result<ArithSeries> {
    if induced.modulus % primitive.modulus != 0 {
        return Err(Error::NotMultiple(induced.modulus, primitive.modulus));
    }
    let mut rhs = induced.to_series(n);
    for p in crate::series::primes_up_to(induced.modulus) {
        if induced.modulus % p == 0 && primitive.modulus % p != 0 {
            let factor = local_factor_series(p, &primitive.value(p), n);
            let domain = rhs.domain().join(factor.domain());
            rhs = rhs.promote(domain)?.dconv(&factor.promote(domain)?)?;
        }
    }
    Ok(rhs)
}

fn finish_character(modulus: u64, order_bound: u64, values: Vec<Option<u64>>) -> DirichletCharacter {
    // Reduce the exponents to the character's own order.
    let mut g = 0u64;
    for v in values.iter().flatten() {
        g = gcd(g, *v);
    }
    let g = gcd(g, order_bound);
    let (order, values) = if g > 1 {
        (
            order_bound / g,
            values
                .iter()
                .map(|v| v.map(|k| k / g))
                .collect(),
        )
    } else if g == 0 {
        // All exponents zero: the principal character.
        (1, values)
    } else {
        (order_bound, values)
    };
    let conductor = compute_conductor(modulus, &values);
    DirichletCharacter {
        modulus,
        order,
        values,
        conductor,
        primitive: conductor == modulus,
    }
}

/// Least f | N such that the character is trivial on every unit ≡ 1 mod f.
fn compute_conductor(modulus: u64, values: &[Option<u64>]) -> u64 {
    'next: for f in crate::series::divisors(modulus as usize) {
        let f = f as u64;
        let mut a = 1 + f;
        while a < modulus + 1 {
            let r = a % modulus;
            if gcd(r, modulus) == 1 && values[r as usize] != Some(0) && values[r as usize].is_some()
            {
                continue 'next;
            }
            a += f;
        }
        return f;
    }
    modulus
}

struct Generator {
    /// CRT lift: ≡ local generator mod its prime power, ≡ 1 elsewhere.
    lift: u64,
    order: u64,
}

struct UnitGroup {
    modulus: u64,
    generators: Vec<Generator>,
    /// Discrete logs per residue (indexed like the value tables).
    dlogs: Vec<Option<Vec<u64>>>,
}

impl UnitGroup {
    fn new(modulus: u64) -> Self {
        let generators = unit_group_generators(modulus);
        let orders: Vec<u64> = generators.iter().map(|g| g.order).collect();
        let mut dlogs: Vec<Option<Vec<u64>>> = vec![None; modulus.max(1) as usize];
        for tuple in MixedRadix::new(&orders) {
            let mut r = 1u64 % modulus;
            for (g, &t) in generators.iter().zip(&tuple) {
                r = r * pow_mod(g.lift, t, modulus) % modulus;
            }
            dlogs[r as usize] = Some(tuple);
        }
        if modulus == 1 {
            dlogs[0] = Some(Vec::new());
        }
        UnitGroup { modulus, generators, dlogs }
    }

    fn dlog(&self, r: u64) -> Option<&Vec<u64>> {
        if self.modulus == 1 {
            return self.dlogs[0].as_ref();
        }
        if gcd(r, self.modulus) != 1 {
            return None;
        }
        self.dlogs[(r % self.modulus) as usize].as_ref()
    }
}

/// Generators of (Z/N)^×, one or two per prime-power factor, CRT-lifted.
fn unit_group_generators(modulus: u64) -> Vec<Generator> {
    let mut gens = Vec::new();
    for (p, e) in factorize(modulus) {
        let q = p.pow(e);
        let cofactor = modulus / q;
        let lift_of = |local: u64| -> u64 {
            // x ≡ local (mod q), x ≡ 1 (mod cofactor)
            if cofactor == 1 {
                return local % modulus;
            }
            let mut x = local % q;
            while x % cofactor != 1 {
                x += q;
            }
            x % modulus
        };
        if p == 2 {
            match e {
                1 => {}
                2 => gens.push(Generator { lift: lift_of(3), order: 2 }),
                _ => {
                    gens.push(Generator { lift: lift_of(q - 1), order: 2 });
                    gens.push(Generator { lift: lift_of(5), order: 1 << (e - 2) });
                }
            }
        } else {
            let phi = q / p * (p - 1);
            let root = smallest_primitive_root(q, phi);
            gens.push(Generator { lift: lift_of(root), order: phi });
        }
    }
    gens
}

fn smallest_primitive_root(q: u64, phi: u64) -> u64 {
    for g in 2..q {
        if gcd(g, q) == 1 && multiplicative_order(g, q, phi) == phi {
            return g;
        }
    }
    panic!("no primitive root mod {q}: not an odd prime power?");
}

fn multiplicative_order(g: u64, q: u64, phi: u64) -> u64 {
    // The order divides φ; check divisors ascending.
    for d in crate::series::divisors(phi as usize) {
        if pow_mod(g, d as u64, q) == 1 {
            return d as u64;
        }
    }
    phi
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Mixed-radix counter over Π Z/m_j, most significant digit first.
struct MixedRadix {
    radices: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl MixedRadix {
    fn new(radices: &[u64]) -> Self {
        MixedRadix { radices: radices.to_vec(), next: Some(vec![0; radices.len()]) }
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.clone()?;
        let mut succ = current.clone();
        let mut carry = true;
        for i in (0..succ.len()).rev() {
            succ[i] += 1;
            if succ[i] < self.radices[i] {
                carry = false;
                break;
            }
            succ[i] = 0;
        }
        self.next = if carry { None } else { Some(succ) };
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Multiplicativity;

    fn phi(n: u64) -> usize {
        (1..=n).filter(|&k| gcd(k, n) == 1).count()
    }

    #[test]
    fn enumeration_counts_match_phi() {
        for n in 1..=30 {
            let chars = enumerate(n).unwrap();
            assert_eq!(chars.len(), phi(n), "φ({n}) characters expected");
            assert!(chars[0].is_principal(), "first character mod {n} is principal");
        }
    }

    #[test]
    fn mod_4_has_the_odd_character() {
        let chars = enumerate(4).unwrap();
        assert_eq!(chars.len(), 2);
        let chi = &chars[1];
        assert_eq!(chi.value(3), Coefficient::from_i64(-1).promote(Domain::Gaussian).unwrap());
        assert_eq!(chi.order(), 2);
        assert!(chi.is_primitive());
        assert!(chi.value(2).is_zero());
    }

    #[test]
    fn mod_5_characters_take_fourth_roots() {
        let chars = enumerate(5).unwrap();
        assert_eq!(chars.len(), 4);
        let orders: Vec<u64> = chars.iter().map(|c| c.order()).collect();
        let mut sorted = orders.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 4, 4]);
        for chi in &chars {
            assert!(chi.has_exact_values());
            // Complete multiplicativity on residues.
            for a in 1..=20u64 {
                for b in 1..=20u64 {
                    let lhs = chi.value(a * b);
                    let rhs = chi.value(a).mul(&chi.value(b));
                    assert_eq!(lhs, rhs, "χ({a}·{b}) ≠ χ({a})χ({b})");
                }
            }
        }
    }

    #[test]
    fn character_series_is_completely_multiplicative() {
        for chi in enumerate(8).unwrap() {
            let series = chi.to_series(64);
            assert_eq!(
                series.classify_multiplicativity(),
                Multiplicativity::CompletelyMultiplicative
            );
        }
    }

    #[test]
    fn orders_divide_phi() {
        for n in [4u64, 5, 8, 9, 12, 15, 16, 21] {
            for chi in enumerate(n).unwrap() {
                assert_eq!(phi(n) as u64 % chi.order(), 0, "order divides φ({n})");
                assert_eq!(chi.value(1), Coefficient::one(chi.value_domain()));
            }
        }
    }

    #[test]
    fn induction_reports_original_conductor() {
        let chars = enumerate(4).unwrap();
        let chi = chars[1].clone();
        let induced = chi.induce(8).unwrap();
        assert_eq!(induced.modulus(), 8);
        assert_eq!(induced.conductor(), 4);
        assert!(!induced.is_primitive());
        // Induce the trivial character mod 1 to a prime modulus.
        let trivial = enumerate(1).unwrap()[0].clone();
        let principal = trivial.induce(7).unwrap();
        assert!(principal.is_principal());
        assert_eq!(principal.conductor(), 1);
        assert!(!principal.is_primitive());
        assert_eq!(chi.induce(6), Err(Error::NotMultiple(6, 4)));
    }

    #[test]
    fn primitive_part_round_trip() {
        let chi = enumerate(4).unwrap()[1].clone();
        let induced = chi.induce(12).unwrap();
        assert_eq!(induced.conductor(), 4);
        assert_eq!(induced.primitive_part(), chi);
    }

    #[test]
    fn conductors_mod_12() {
        let chars = enumerate(12).unwrap();
        let mut conductors: Vec<u64> = chars.iter().map(|c| c.conductor()).collect();
        conductors.sort();
        // (Z/12)^× ≅ Z/2 × Z/2: conductors 1, 3, 4, 12.
        assert_eq!(conductors, vec![1, 3, 4, 12]);
    }

    #[test]
    fn zeta_p_supported_on_prime_powers() {
        let z2 = zeta_p_series(2, 10).unwrap();
        for n in 1..=10usize {
            let expected = if n.is_power_of_two() { 1 } else { 0 };
            assert_eq!(*z2.get(n), Coefficient::from_i64(expected), "at {n}");
        }
        assert_eq!(zeta_p_series(6, 10), Err(Error::NotPrime(6)));
        // The p-power indicator is closed under products and complements,
        // so it is completely multiplicative.
        assert_eq!(
            z2.classify_multiplicativity(),
            Multiplicativity::CompletelyMultiplicative
        );
    }

    #[test]
    fn twist_kills_conductor_multiples() {
        // χ mod 4 applied to η + η⁴ leaves only η.
        let chi = enumerate(4).unwrap()[1].clone();
        let mut f = ArithSeries::zero(4, Domain::Rational);
        f.set(1, Coefficient::from_i64(1));
        f.set(4, Coefficient::from_i64(1));
        let twisted = chi.twist(&f).unwrap();
        assert_eq!(*twisted.get(1), Coefficient::one(Domain::Gaussian));
        for n in 2..=4 {
            assert!(twisted.get(n).is_zero());
        }
    }

    #[test]
    fn twist_is_a_dirichlet_homomorphism() {
        let chi = enumerate(5).unwrap()[1].clone();
        let n = 60;
        let f = ArithSeries::from_fn(n, Domain::Rational, |i| {
            Coefficient::from_ratio(i as i64 % 7 - 3, 2)
        });
        let g = ArithSeries::from_fn(n, Domain::Rational, |i| {
            Coefficient::from_ratio(5 - i as i64 % 4, 3)
        });
        let lhs = chi.twist(&f.dconv(&g).unwrap()).unwrap();
        let rhs = chi.twist(&f).unwrap().dconv(&chi.twist(&g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn induction_identity_exact() {
        // Primitive χ mod 4 induced to mod 8: no new prime outside the
        // conductor, so the correction product is empty and the series agree.
        let chi = enumerate(4).unwrap()[1].clone();
        let induced = chi.induce(8).unwrap();
        let rhs = induction_identity_rhs(&chi, &induced, 200).unwrap();
        assert_eq!(chi.to_series(200).promote(rhs.domain()).unwrap(), rhs);

        // Induced to mod 12: prime 3 joins, so one twisted factor appears.
        let induced12 = chi.induce(12).unwrap();
        let rhs12 = induction_identity_rhs(&chi, &induced12, 200).unwrap();
        assert_eq!(chi.to_series(200).promote(rhs12.domain()).unwrap(), rhs12);
        // And the factor genuinely matters: the bare induced series differs.
        assert_ne!(
            induced12.to_series(200).promote(rhs12.domain()).unwrap(),
            rhs12
        );
    }

    #[test]
    fn product_of_characters_multiplies_values() {
        let mod4 = enumerate(4).unwrap()[1].clone();
        let mod8 = enumerate(8).unwrap();
        for psi in &mod8 {
            let prod = mod4.product(psi);
            assert_eq!(prod.modulus(), 8);
            for n in 1..=32u64 {
                let direct = prod.value(n);
                let split = mod4.value(n).mul(&psi.value(n).promote(Domain::Gaussian).unwrap());
                assert_eq!(direct, split, "at n={n}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_with_cap(50, 10),
            Err(Error::CapExceeded { cap: 10, got: 50 })
        ));
    }
}
