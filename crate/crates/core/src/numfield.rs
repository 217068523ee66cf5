//! Exact arithmetic in a fixed totally real number field K = Q(γ).
//!
//! Elements are coordinate vectors in the power basis 1, γ, …, γ^{d−1} with
//! exact rational entries.  The field carries its real embeddings (ordered by
//! ascending root value), the trace form computed through Newton power sums
//! (never through floating embeddings), and — when the conjugates of γ are
//! expressible inside K — the full list of automorphisms.
//!
//! Sign data is exact: the sign of an element under each embedding is decided
//! by interval refinement of the isolating root window, with the working
//! precision doubled until the value separates from zero or a configurable
//! bit cap is reached.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

use crate::coeff::format_rational;
use crate::error::{Error, Result};
use crate::ratpoly::{self, RatInterval, RatPoly, RootWindow};

/// Default bit cap for sign resolution: window widths shrink to
/// `initial · 2^-cap` before the search gives up.
pub const DEFAULT_SIGN_CAP_BITS: u32 = 256;

/// Relative tolerance the stored embedding approximations must meet.
const EMBEDDING_REL_TOL: f64 = 1e-12;

/// Tuple of ±1 signs, one per real embedding, with componentwise product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Self {
        assert!(signs.iter().all(|&s| s == 1 || s == -1), "signs must be ±1");
        SignVector(signs)
    }

    pub fn all_plus(d: usize) -> Self {
        SignVector(vec![1; d])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    /// Group law of {−,+}^d.
    pub fn product(&self, other: &SignVector) -> SignVector {
        assert_eq!(self.0.len(), other.0.len(), "sign vectors of equal length");
        SignVector(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    /// All-equal tuples are the image of the base-field sign group.
    pub fn is_diagonal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Every sign vector of length d, in lexicographic order (− before +).
    pub fn enumerate(d: usize) -> Vec<SignVector> {
        let mut out = Vec::with_capacity(1 << d);
        for mask in 0..(1u32 << d) {
            let signs = (0..d)
                .map(|i| if mask & (1 << i) != 0 { 1 } else { -1 })
                .collect();
            out.push(SignVector(signs));
        }
        out.sort();
        out
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if *s > 0 { "+" } else { "-" })?;
        }
        write!(f, ")")
    }
}

/// Element of K in the power basis; plain coordinate data.
///
/// Comparisons, hashing and the total order are derived from the coordinate
/// vector alone (callers keep elements of one field per container), so sparse
/// maps keyed by exponents iterate deterministically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NFElem {
    coords: Vec<BigRational>,
}

impl NFElem {
    pub fn from_coords(coords: Vec<BigRational>) -> Self {
        NFElem { coords }
    }

    pub fn from_rational(q: BigRational, degree: usize) -> Self {
        let mut coords = vec![BigRational::zero(); degree];
        coords[0] = q;
        NFElem { coords }
    }

    pub fn from_integer(n: i64, degree: usize) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()), degree)
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn degree(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The rational part if the element is rational, else None.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            return write!(f, "{}", format_rational(&self.coords[0]));
        }
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, "]")
    }
}

/// Field automorphism, stored as the image of γ plus derived data.
#[derive(Debug, Clone)]
pub struct Automorphism {
    /// Power-basis coordinates of σ(γ).
    image: Vec<BigRational>,
    /// Powers σ(γ)^0 … σ(γ)^{d−1}, each in power-basis coordinates.
    image_powers: Vec<Vec<BigRational>>,
    /// Permutation of the embedding indices: ν_i ∘ σ = ν_{perm[i]}.
    perm: Vec<usize>,
}

impl Automorphism {
    pub fn embedding_permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }
}

struct FieldInner {
    min_poly: Vec<BigInt>,
    min_poly_rat: RatPoly,
    degree: usize,
    /// Newton power sums p_0 … p_{d−1} of the roots.
    power_traces: Vec<BigRational>,
    /// Exact isolating windows per root, ascending.
    windows: Vec<RootWindow>,
    /// f64 approximations of the roots, ascending.
    embeddings: Vec<f64>,
    automorphisms: Vec<Automorphism>,
    galois: bool,
}

/// A totally real number field, cheaply clonable.
#[derive(Clone)]
pub struct NumberField(Arc<FieldInner>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.0.min_poly == other.0.min_poly
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(min_poly={:?})", self.0.min_poly)
    }
}

impl NumberField {
    /// The rationals, presented with minimal polynomial x (γ = 0, basis {1}).
    pub fn rationals() -> Self {
        Self::from_min_poly(vec![BigInt::zero(), BigInt::one()]).expect("Q always constructs")
    }

    /// Q(√d) for squarefree d > 1.
    pub fn quadratic(d: i64) -> Result<Self> {
        if d <= 1 {
            return Err(Error::Parse(format!("quadratic field needs d > 1, got {d}")));
        }
        let mut p = 2i64;
        while p * p <= d {
            if d % (p * p) == 0 {
                return Err(Error::Parse(format!("{d} is not squarefree")));
            }
            p += 1;
        }
        Self::from_min_poly(vec![BigInt::from(-d), BigInt::zero(), BigInt::one()])
    }

    /// Build from a monic integer minimal polynomial with all roots real.
    ///
    /// Irreducibility is verified for degree ≤ 4 (rational-root and
    /// quadratic-factor tests); higher degrees are taken on trust.
    pub fn from_min_poly(min_poly: Vec<BigInt>) -> Result<Self> {
        if min_poly.len() < 2 {
            return Err(Error::Parse("minimal polynomial must have degree >= 1".into()));
        }
        if !min_poly.last().unwrap().is_one() {
            return Err(Error::Parse("minimal polynomial must be monic".into()));
        }
        let degree = min_poly.len() - 1;
        if degree <= 4 && !ratpoly::is_irreducible_monic(&min_poly) {
            return Err(Error::Reducible(format!("{min_poly:?}")));
        }

        let min_poly_rat = ratpoly::from_bigints(&min_poly);
        let mut windows = ratpoly::isolate_real_roots(&min_poly_rat);
        if windows.len() != degree {
            return Err(Error::NotTotallyReal { found: windows.len(), degree });
        }
        // Narrow enough that the f64 midpoints are fully converged and the
        // residual check below is meaningful.
        let eps = BigRational::new(BigInt::one(), BigInt::one() << 64);
        for w in windows.iter_mut() {
            *w = ratpoly::refine_to(&min_poly_rat, w, &eps);
        }
        let embeddings: Vec<f64> = windows
            .iter()
            .map(|w| w.midpoint().to_f64().unwrap_or(f64::NAN))
            .collect();
        for pair in embeddings.windows(2) {
            if !(pair[0] < pair[1]) {
                return Err(Error::BadEmbedding);
            }
        }
        for &r in &embeddings {
            let mut val = 0.0f64;
            let mut scale = 0.0f64;
            let mut pow = 1.0f64;
            for c in &min_poly {
                let cf = c.to_f64().unwrap_or(f64::NAN);
                val += cf * pow;
                scale += cf.abs() * pow.abs();
                pow *= r;
            }
            if !(val.abs() <= EMBEDDING_REL_TOL * scale.max(1.0)) {
                return Err(Error::BadEmbedding);
            }
        }

        let power_traces = newton_power_sums(&min_poly, degree);

        let mut inner = FieldInner {
            min_poly,
            min_poly_rat,
            degree,
            power_traces,
            windows,
            embeddings,
            automorphisms: Vec::new(),
            galois: false,
        };
        let autos = find_automorphisms(&inner);
        inner.galois = autos.len() == degree;
        inner.automorphisms = autos;
        Ok(NumberField(Arc::new(inner)))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.0.min_poly
    }

    pub fn is_rationals(&self) -> bool {
        self.0.degree == 1
    }

    /// Whether all conjugates of γ are expressible in the field.
    pub fn is_galois(&self) -> bool {
        self.0.galois
    }

    /// f64 approximations of the real embeddings of γ, ascending.
    pub fn embeddings(&self) -> &[f64] {
        &self.0.embeddings
    }

    pub fn zero(&self) -> NFElem {
        NFElem::from_integer(0, self.0.degree)
    }

    pub fn one(&self) -> NFElem {
        NFElem::from_integer(1, self.0.degree)
    }

    /// The generator γ (zero for K = Q).
    pub fn gen(&self) -> NFElem {
        let mut coords = vec![BigRational::zero(); self.0.degree];
        if self.0.degree > 1 {
            coords[1] = BigRational::one();
        }
        NFElem { coords }
    }

    pub fn integer(&self, n: i64) -> NFElem {
        NFElem::from_integer(n, self.0.degree)
    }

    pub fn rational(&self, num: i64, den: i64) -> NFElem {
        NFElem::from_rational(BigRational::new(num.into(), den.into()), self.0.degree)
    }

    fn check_len(&self, x: &NFElem) -> Result<()> {
        if x.coords.len() != self.0.degree {
            return Err(Error::DimensionMismatch {
                expected: self.0.degree,
                got: x.coords.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, x: &NFElem, y: &NFElem) -> NFElem {
        NFElem {
            coords: x.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, x: &NFElem, y: &NFElem) -> NFElem {
        NFElem {
            coords: x.coords.iter().zip(&y.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self, x: &NFElem) -> NFElem {
        NFElem { coords: x.coords.iter().map(|a| -a).collect() }
    }

    /// Product modulo the minimal polynomial.
    pub fn mul(&self, x: &NFElem, y: &NFElem) -> NFElem {
        let d = self.0.degree;
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        self.reduce(raw)
    }

    /// Reduce a raw coefficient vector modulo the monic minimal polynomial.
    fn reduce(&self, mut raw: Vec<BigRational>) -> NFElem {
        let d = self.0.degree;
        while raw.len() > d {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = raw.len() - d; // x^{d+k} ≡ -Σ c_i x^{i+k}
            for i in 0..d {
                let delta = &top * BigRational::from_integer(self.0.min_poly[i].clone());
                raw[k + i] -= delta;
            }
        }
        raw.resize(d, BigRational::zero());
        NFElem { coords: raw }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
    pub fn inv(&self, x: &NFElem) -> Result<NFElem> {
        self.check_len(x)?;
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.0.degree == 1 {
            return Ok(NFElem { coords: vec![x.coords[0].recip()] });
        }
        // Maintain r0 = m, r1 = x-as-poly with Bézout coefficients for r1.
        let mut r0 = self.0.min_poly_rat.clone();
        let mut r1 = ratpoly::trim(x.coords.clone());
        let mut t0: RatPoly = vec![BigRational::zero()];
        let mut t1: RatPoly = vec![BigRational::one()];
        while !ratpoly::is_zero(&r1) && ratpoly::degree(&ratpoly::trim(r1.clone())) > 0 {
            let (q, r) = poly_divmod(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t2;
        }
        if ratpoly::is_zero(&r1) {
            // gcd has positive degree: x divides the minimal polynomial,
            // impossible for irreducible m unless x = 0.
            return Err(Error::DivisionByZero);
        }
        let c = ratpoly::trim(r1)[0].recip();
        let inv_poly: Vec<BigRational> = t1.iter().map(|t| t * &c).collect();
        Ok(self.reduce(inv_poly))
    }

    pub fn div(&self, x: &NFElem, y: &NFElem) -> Result<NFElem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// Field trace Tr_{K/Q}, exact: Σ_j x_j · p_j with p_j the Newton power
    /// sums of the minimal polynomial.
    pub fn trace(&self, x: &NFElem) -> BigRational {
        x.coords
            .iter()
            .zip(&self.0.power_traces)
            .map(|(c, p)| c * p)
            .sum()
    }

    /// Value of x under the i-th real embedding (f64).
    pub fn embed(&self, x: &NFElem, place: usize) -> f64 {
        let r = self.0.embeddings[place];
        let mut acc = 0.0;
        for c in x.coords.iter().rev() {
            acc = acc * r + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn embed_all(&self, x: &NFElem) -> Vec<f64> {
        (0..self.0.degree).map(|i| self.embed(x, i)).collect()
    }

    /// Exact sign tuple of a nonzero element under all real embeddings,
    /// resolved by interval refinement up to the default bit cap.
    pub fn sign_of(&self, x: &NFElem) -> Result<SignVector> {
        self.sign_of_with_cap(x, DEFAULT_SIGN_CAP_BITS)
    }

    pub fn sign_of_with_cap(&self, x: &NFElem, cap_bits: u32) -> Result<SignVector> {
        self.check_len(x)?;
        if x.is_zero() {
            return Err(Error::UnresolvableSign);
        }
        let mut signs = Vec::with_capacity(self.0.degree);
        for w in &self.0.windows {
            let mut window = w.clone();
            let mut bits = 0u32;
            let sign = loop {
                let iv = RatInterval { lo: window.lo.clone(), hi: window.hi.clone() };
                let value = ratpoly::eval_interval(&x.coords, &iv);
                match value.definite_sign() {
                    Some(0) => break None, // exact zero: x vanishes (rational coords only)
                    Some(s) => break Some(s),
                    None => {
                        if bits >= cap_bits {
                            break None;
                        }
                        window = ratpoly::refine(&self.0.min_poly_rat, &window);
                        bits += 1;
                    }
                }
            };
            match sign {
                Some(s) if s != 0 => signs.push(s),
                _ => return Err(Error::UnresolvableSign),
            }
        }
        Ok(SignVector(signs))
    }

    /// Number of automorphisms found (equals the degree iff Galois).
    pub fn automorphism_count(&self) -> usize {
        self.0.automorphisms.len()
    }

    pub fn automorphism(&self, idx: usize) -> Result<&Automorphism> {
        self.0
            .automorphisms
            .get(idx)
            .ok_or(Error::IndexOutOfRange(idx))
    }

    /// Image of x under the idx-th automorphism (index 0 is the identity).
    pub fn galois_apply(&self, idx: usize, x: &NFElem) -> Result<NFElem> {
        if !self.0.galois {
            return Err(Error::NotGalois);
        }
        self.check_len(x)?;
        let auto = self.automorphism(idx)?;
        let d = self.0.degree;
        let mut coords = vec![BigRational::zero(); d]; // Σ_j x_j σ(γ)^j
        for (j, c) in x.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, p) in auto.image_powers[j].iter().enumerate() {
                coords[k] += c * p;
            }
        }
        Ok(NFElem { coords })
    }
}

/// Newton power sums p_0 … p_{count-1} of a monic integer polynomial.
fn newton_power_sums(min_poly: &[BigInt], count: usize) -> Vec<BigRational> {
    let d = min_poly.len() - 1;
    let a = |i: usize| BigRational::from_integer(min_poly[i].clone());
    let mut p = vec![BigRational::from_integer(BigInt::from(d))];
    for k in 1..count {
        let mut sum = BigRational::from_integer(BigInt::from(k as i64)) * a(d - k);
        for i in 1..k {
            sum += a(d - i) * &p[k - i];
        }
        p.push(-sum);
    }
    p
}

fn poly_divmod(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let b = ratpoly::trim(b.clone());
    let db = ratpoly::degree(&b);
    let mut r = ratpoly::trim(a.clone());
    let mut q = vec![BigRational::zero(); ratpoly::degree(&r).saturating_sub(db) + 1];
    let lead_inv = b[db].recip();
    while !ratpoly::is_zero(&r) && ratpoly::degree(&r) >= db {
        let dr = ratpoly::degree(&r);
        let factor = &r[dr] * &lead_inv;
        q[dr - db] = factor.clone();
        for i in 0..=db {
            let delta = &factor * &b[i];
            r[dr - db + i] -= delta;
        }
        r = ratpoly::trim(r);
        if dr == 0 {
            break;
        }
    }
    (ratpoly::trim(q), r)
}

fn poly_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ratpoly::trim(out)
}

fn poly_sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    ratpoly::trim(out)
}

/// Search for the automorphisms of the field.
///
/// Degree 1: identity.  Degree 2: identity and γ ↦ −c₁ − γ.  For degrees
/// 3–6 every permutation of the (distinct, real) roots is tried: the map
/// interpolating r_i ↦ r_{τ(i)} is solved numerically, its coefficients are
/// reconstructed as small rationals and then verified exactly against the
/// minimal polynomial.  Permutations that fail reconstruction or exact
/// verification are discarded, so no false automorphism survives.
fn find_automorphisms(inner: &FieldInner) -> Vec<Automorphism> {
    let d = inner.degree;
    let make = |image: Vec<BigRational>| -> Automorphism {
        let image_powers = element_powers(inner, &image);
        let perm = embedding_perm(inner, &image);
        Automorphism { image, image_powers, perm }
    };

    if d == 1 {
        return vec![make(vec![BigRational::zero()])];
    }
    if d == 2 {
        let c1 = BigRational::from_integer(inner.min_poly[1].clone());
        let identity = make(vec![BigRational::zero(), BigRational::one()]);
        let conj = make(vec![-c1, -BigRational::one()]);
        return sort_automorphisms(vec![identity, conj]);
    }
    if d > 6 {
        return vec![make(gen_coords(d))];
    }

    let mut found: Vec<Vec<BigRational>> = vec![gen_coords(d)];
    let roots = &inner.embeddings;
    let perms = permutations(d);
    for perm in perms {
        if perm.iter().enumerate().all(|(i, &j)| i == j) {
            continue; // identity already present
        }
        let targets: Vec<f64> = perm.iter().map(|&j| roots[j]).collect();
        let Some(coeffs) = solve_vandermonde(roots, &targets) else { continue };
        let Some(rat) = coeffs
            .iter()
            .map(|&c| reconstruct_rational(c))
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        if verify_automorphism(inner, &rat) && !found.contains(&rat) {
            found.push(rat);
        }
    }
    sort_automorphisms(found.into_iter().map(make).collect())
}

fn gen_coords(d: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); d];
    v[1] = BigRational::one();
    v
}

/// Identity first, then lexicographic by image coordinates.
fn sort_automorphisms(mut autos: Vec<Automorphism>) -> Vec<Automorphism> {
    autos.sort_by(|a, b| {
        b.is_identity()
            .cmp(&a.is_identity())
            .then_with(|| a.image.cmp(&b.image))
    });
    autos
}

/// Powers e^0 … e^{d−1} of an element given by coordinates, reduced.
fn element_powers(inner: &FieldInner, image: &[BigRational]) -> Vec<Vec<BigRational>> {
    let d = inner.degree;
    let field_mul = |x: &[BigRational], y: &[BigRational]| -> Vec<BigRational> {
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        while raw.len() > d {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = raw.len() - d;
            for i in 0..d {
                let delta = &top * BigRational::from_integer(inner.min_poly[i].clone());
                raw[k + i] -= delta;
            }
        }
        raw.resize(d, BigRational::zero());
        raw
    };
    let mut powers = Vec::with_capacity(d);
    let mut one = vec![BigRational::zero(); d];
    one[0] = BigRational::one();
    powers.push(one);
    for j in 1..d {
        let prev = powers[j - 1].clone();
        powers.push(field_mul(&prev, image));
    }
    powers
}

fn embedding_perm(inner: &FieldInner, image: &[BigRational]) -> Vec<usize> {
    let eval_at = |r: f64| -> f64 {
        let mut acc = 0.0;
        for c in image.iter().rev() {
            acc = acc * r + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    };
    inner
        .embeddings
        .iter()
        .map(|&r| {
            let v = eval_at(r);
            let mut best = 0;
            let mut dist = f64::INFINITY;
            for (j, &s) in inner.embeddings.iter().enumerate() {
                let dj = (v - s).abs();
                if dj < dist {
                    dist = dj;
                    best = j;
                }
            }
            best
        })
        .collect()
}

fn verify_automorphism(inner: &FieldInner, image: &[BigRational]) -> bool {
    // Horner evaluation of the minimal polynomial at the candidate image,
    // entirely inside the field; the result must be exactly zero.
    let d = inner.degree;
    let powers = element_powers(inner, image);
    let mut acc = vec![BigRational::zero(); d];
    // m(e) = Σ c_j e^j with e^j reduced; degree-d term via e^{d-1}·e.
    for (j, c) in inner.min_poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = BigRational::from_integer(c.clone());
        let pow = if j < d {
            powers[j].clone()
        } else {
            // j == d since deg m = d
            let mut raw = vec![BigRational::zero(); 2 * d - 1];
            for (i, a) in powers[d - 1].iter().enumerate() {
                for (k, b) in image.iter().enumerate() {
                    if !a.is_zero() && !b.is_zero() {
                        raw[i + k] += a * b;
                    }
                }
            }
            while raw.len() > d {
                let top = raw.pop().unwrap();
                if top.is_zero() {
                    continue;
                }
                let off = raw.len() - d;
                for i in 0..d {
                    let delta = &top * BigRational::from_integer(inner.min_poly[i].clone());
                    raw[off + i] -= delta;
                }
            }
            raw.resize(d, BigRational::zero());
            raw
        };
        for (k, p) in pow.iter().enumerate() {
            acc[k] += &c * p;
        }
    }
    acc.iter().all(|c| c.is_zero())
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..d).collect();
    heap_permute(&mut items, d, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

fn solve_vandermonde(xs: &[f64], ys: &[f64]) -> Option<Vec<f64>> {
    let n = xs.len();
    let mut m = vec![vec![0.0f64; n + 1]; n];
    for (i, &x) in xs.iter().enumerate() {
        let mut pow = 1.0;
        for j in 0..n {
            m[i][j] = pow;
            pow *= x;
        }
        m[i][n] = ys[i];
    }
    // Gaussian elimination with partial pivoting.
    for col in 0..n {
        let mut piv = col;
        for row in col + 1..n {
            if m[row][col].abs() > m[piv][col].abs() {
                piv = row;
            }
        }
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for k in col..=n {
                m[row][k] -= f * m[col][k];
            }
        }
    }
    let mut sol = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = m[row][n];
        for k in row + 1..n {
            acc -= m[row][k] * sol[k];
        }
        sol[row] = acc / m[row][row];
    }
    Some(sol)
}

/// Continued-fraction reconstruction of a small rational from an f64.
fn reconstruct_rational(x: f64) -> Option<BigRational> {
    const MAX_DEN: i64 = 1_000_000;
    const TOL: f64 = 1e-7;
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, x.round() as i64, 1i64);
    let mut frac = x - x.round();
    for _ in 0..40 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - x).abs() <= TOL * x.abs().max(1.0) {
            return Some(BigRational::new(p1.into(), q1.into()));
        }
        if frac.abs() < 1e-15 {
            break;
        }
        let recip = 1.0 / frac;
        let a = recip.round();
        if !a.is_finite() || a.abs() >= MAX_DEN as f64 {
            break;
        }
        let a_i = a as i64;
        let (p2, q2) = (a_i.checked_mul(p1)?.checked_add(p0)?, a_i.checked_mul(q1)?.checked_add(q0)?);
        if q2.abs() > MAX_DEN {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        frac = recip - a;
    }
    let approx = p1 as f64 / q1 as f64;
    if (approx - x).abs() <= TOL * x.abs().max(1.0) {
        Some(BigRational::new(p1.into(), q1.into()))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2_field() -> NumberField {
        NumberField::quadratic(2).unwrap()
    }

    fn elem(_field: &NumberField, a: (i64, i64), b: (i64, i64)) -> NFElem {
        NFElem::from_coords(vec![
            BigRational::new(a.0.into(), a.1.into()),
            BigRational::new(b.0.into(), b.1.into()),
        ])
    }

    #[test]
    fn norm_identity_in_sqrt2() {
        // (1+√2)(1−√2) = −1
        let k = sqrt2_field();
        let x = elem(&k, (1, 1), (1, 1));
        let y = elem(&k, (1, 1), (-1, 1));
        assert_eq!(k.mul(&x, &y), k.integer(-1));
    }

    #[test]
    fn inverse_of_sqrt2() {
        // (√2)^{-1} = √2/2
        let k = sqrt2_field();
        let inv = k.inv(&k.gen()).unwrap();
        assert_eq!(inv, elem(&k, (0, 1), (1, 2)));
        assert_eq!(k.mul(&inv, &k.gen()), k.one());
    }

    #[test]
    fn componentwise_sum() {
        let k = sqrt2_field();
        let x = elem(&k, (1, 1), (1, 1));
        let y = elem(&k, (3, 1), (-2, 1));
        assert_eq!(k.add(&x, &y), elem(&k, (4, 1), (-1, 1)));
    }

    #[test]
    fn inversion_of_zero_fails() {
        let k = sqrt2_field();
        assert_eq!(k.inv(&k.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn trace_values() {
        let k = sqrt2_field();
        assert_eq!(k.trace(&k.gen()), BigRational::zero());
        let x = elem(&k, (1, 1), (1, 1)); // 1+√2
        assert_eq!(k.trace(&x), BigRational::from_integer(2.into()));
        let q = NumberField::rationals();
        let half = q.rational(1, 2);
        assert_eq!(q.trace(&half), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn signs_under_both_embeddings() {
        let k = sqrt2_field();
        assert_eq!(k.sign_of(&k.integer(2)).unwrap(), SignVector::new(vec![1, 1]));
        // Embeddings ordered −1.414… < 1.414…, so √2 ↦ (−,+).
        assert_eq!(k.sign_of(&k.gen()).unwrap(), SignVector::new(vec![-1, 1]));
        let x = elem(&k, (1, 1), (1, 1)); // 1+√2
        assert_eq!(k.sign_of(&x).unwrap(), SignVector::new(vec![-1, 1]));
    }

    #[test]
    fn sign_product_law() {
        let k = sqrt2_field();
        let samples = [
            elem(&k, (1, 1), (1, 1)),
            elem(&k, (3, 1), (-2, 1)),
            elem(&k, (-1, 2), (1, 3)),
            elem(&k, (0, 1), (-5, 1)),
        ];
        for x in &samples {
            for y in &samples {
                let lhs = k.sign_of(&k.mul(x, y)).unwrap();
                let rhs = k.sign_of(x).unwrap().product(&k.sign_of(y).unwrap());
                assert_eq!(lhs, rhs, "sign law failed for {x} · {y}");
            }
        }
    }

    #[test]
    fn quadratic_galois_conjugation() {
        let k = sqrt2_field();
        assert!(k.is_galois());
        assert_eq!(k.automorphism_count(), 2);
        let id = k.galois_apply(0, &k.gen()).unwrap();
        assert_eq!(id, k.gen());
        let conj = k.galois_apply(1, &k.gen()).unwrap();
        assert_eq!(conj, k.neg(&k.gen()));
        // 3+5√2 ↦ 3−5√2 by Q-linearity
        let x = elem(&k, (3, 1), (5, 1));
        assert_eq!(k.galois_apply(1, &x).unwrap(), elem(&k, (3, 1), (-5, 1)));
    }

    #[test]
    fn trace_is_galois_invariant() {
        let k = sqrt2_field();
        let x = elem(&k, (7, 3), (-2, 5));
        for idx in 0..k.automorphism_count() {
            let y = k.galois_apply(idx, &x).unwrap();
            assert_eq!(k.trace(&x), k.trace(&y));
        }
    }

    #[test]
    fn cubic_cyclic_field_is_galois() {
        // x³ − 3x − 1: totally real and cyclic; the conjugates of γ are
        // expressible as γ² − 2 and −γ² − γ + 2.
        let k = NumberField::from_min_poly(vec![
            BigInt::from(-1),
            BigInt::from(-3),
            BigInt::from(0),
            BigInt::from(1),
        ])
        .unwrap();
        assert_eq!(k.degree(), 3);
        assert!(k.is_galois(), "cyclic cubic should be detected as Galois");
        assert_eq!(k.automorphism_count(), 3);
        let x = NFElem::from_coords(vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer(3.into()),
            BigRational::new((-2).into(), 7.into()),
        ]);
        for idx in 0..3 {
            let y = k.galois_apply(idx, &x).unwrap();
            assert_eq!(k.trace(&x), k.trace(&y));
        }
    }

    #[test]
    fn non_galois_cubic_detected() {
        // x³ − 4x + 1 is totally real with non-cyclic splitting field.
        let k = NumberField::from_min_poly(vec![
            BigInt::from(1),
            BigInt::from(-4),
            BigInt::from(0),
            BigInt::from(1),
        ])
        .unwrap();
        assert!(!k.is_galois());
        assert_eq!(k.galois_apply(1, &k.gen()), Err(Error::NotGalois));
    }

    #[test]
    fn reducible_and_complex_polys_rejected() {
        assert!(matches!(
            NumberField::from_min_poly(vec![BigInt::from(-4), BigInt::zero(), BigInt::one()]),
            Err(Error::Reducible(_))
        ));
        // x² + 1 has no real roots.
        assert!(matches!(
            NumberField::from_min_poly(vec![BigInt::one(), BigInt::zero(), BigInt::one()]),
            Err(Error::NotTotallyReal { .. })
        ));
    }

    #[test]
    fn newton_trace_matches_float_embeddings() {
        let k = NumberField::from_min_poly(vec![
            BigInt::from(-1),
            BigInt::from(-3),
            BigInt::from(0),
            BigInt::from(1),
        ])
        .unwrap();
        let x = NFElem::from_coords(vec![
            BigRational::new(2.into(), 3.into()),
            BigRational::from_integer((-1).into()),
            BigRational::new(5.into(), 4.into()),
        ]);
        let exact = k.trace(&x).to_f64().unwrap();
        let float: f64 = k.embed_all(&x).iter().sum();
        assert!((exact - float).abs() < 1e-9, "{exact} vs {float}");
    }
}
