//! Coefficient flows, the standard character, and torus quadrature.
//!
//! Points of K_∞ are d-vectors indexed by the real embeddings.  The standard
//! character is ψ_α(z) = exp(2πi·Tr(αz)) with Tr summing the coordinates and
//! α acting coordinatewise through its embedding values.  Orthonormality of
//! the lattice characters is checked by equispaced product-grid quadrature
//! over a finite torus K_∞/(M·Z[γ]): such grids annihilate every nontrivial
//! lattice character exactly, up to floating rounding.
//!
//! The additive flow twists the coefficient at α by exp(2πi·Tr(αr)) and is a
//! homomorphism for the Cauchy product; the multiplicative flow twists by
//! |α|^{2πir} = exp(2πi·Σ r_ν·log|α_ν|) and is a homomorphism for the
//! Dirichlet product away from constant terms.  Exponent inversion q ↦ 1/q
//! conjugates the multiplicative flow to its time reverse.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::f64::consts::{PI, TAU};

use crate::algebra::AlgElem;
use crate::coeff::{Coefficient, Domain};
use crate::error::{Error, Result};
use crate::numfield::{NFElem, NumberField, SignVector};

/// A point of K_∞ (or of its complexification), one coordinate per real
/// embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct InfVector {
    coords: Vec<Complex64>,
}

impl InfVector {
    pub fn new(coords: Vec<Complex64>) -> Self {
        InfVector { coords }
    }

    pub fn real(coords: &[f64]) -> Self {
        InfVector { coords: coords.iter().map(|&x| Complex64::new(x, 0.0)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn add(&self, other: &InfVector) -> Result<InfVector> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: other.dim() });
        }
        Ok(InfVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }
}

fn check_dim(field: &NumberField, v: &InfVector) -> Result<()> {
    if v.dim() != field.degree() {
        return Err(Error::DimensionMismatch { expected: field.degree(), got: v.dim() });
    }
    Ok(())
}

/// ψ_α(z) = exp(2πi·Tr(αz)); unimodular whenever z has real coordinates.
pub fn standard_character(field: &NumberField, alpha: &NFElem, z: &InfVector) -> Result<Complex64> {
    check_dim(field, z)?;
    let alpha_embed = field.embed_all(alpha);
    let mut tr = Complex64::new(0.0, 0.0);
    for (a, zv) in alpha_embed.iter().zip(&z.coords) {
        tr += a * zv;
    }
    Ok((Complex64::new(0.0, TAU) * tr).exp())
}

/// Sum of the coordinates: the trace map down to the rationals.
pub fn trace_to_base(v: &InfVector) -> Complex64 {
    v.coords.iter().sum()
}

/// The diagonal inclusion of a base point.
pub fn diagonal_embed(x: Complex64, degree: usize) -> InfVector {
    InfVector { coords: vec![x; degree] }
}

/// Exact variants on rational coordinate vectors.
pub fn trace_to_base_exact(v: &[BigRational]) -> BigRational {
    v.iter().sum()
}

pub fn diagonal_embed_exact(x: &BigRational, degree: usize) -> Vec<BigRational> {
    vec![x.clone(); degree]
}

/// (1/d)·inclusion is a section of the trace: Tr((1/d)·i(x)) = x, exact.
pub fn section_check_exact(x: &BigRational, degree: usize) -> bool {
    let scaled: Vec<BigRational> = diagonal_embed_exact(x, degree)
        .into_iter()
        .map(|c| c / BigRational::from_integer(degree.into()))
        .collect();
    trace_to_base_exact(&scaled) == *x
}

/// Permute a K_∞ vector the way the automorphism permutes embeddings.
pub fn vector_apply_automorphism(
    field: &NumberField,
    sigma: usize,
    v: &[BigRational],
) -> Result<Vec<BigRational>> {
    if !field.is_galois() {
        return Err(Error::NotGalois);
    }
    let perm = field.automorphism(sigma)?.embedding_permutation();
    if v.len() != perm.len() {
        return Err(Error::DimensionMismatch { expected: perm.len(), got: v.len() });
    }
    Ok(perm.iter().map(|&j| v[j].clone()).collect())
}

/// The induced action on sign tuples: σ permutes the grading coordinates as
/// it permutes embeddings; diagonal tuples are fixed.
pub fn sign_representation(
    field: &NumberField,
    sigma: usize,
    theta: &SignVector,
) -> Result<SignVector> {
    if !field.is_galois() {
        return Err(Error::NotGalois);
    }
    let perm = field.automorphism(sigma)?.embedding_permutation();
    if theta.len() != perm.len() {
        return Err(Error::DimensionMismatch { expected: perm.len(), got: theta.len() });
    }
    let signs = perm.iter().map(|&j| theta.signs()[j]).collect();
    Ok(SignVector::new(signs))
}

/// Quadrature estimate of ∫ ψ_α·conj(ψ_β) over the torus K_∞/(M·Z[γ]); the
/// exponents must be characters of that torus, i.e. M·α and M·β must have
/// integer coordinates.  Equispaced product grids with enough points per
/// axis return δ_{αβ} up to floating rounding.
pub fn torus_inner_product(
    field: &NumberField,
    alpha: &NFElem,
    beta: &NFElem,
    lattice_scale: u64,
    total_points: usize,
) -> Result<Complex64> {
    let d = field.degree();
    let m = BigRational::from_integer(lattice_scale.into());
    for x in [alpha, beta] {
        for c in x.coords() {
            if !(c * &m).is_integer() {
                return Err(Error::NotLatticeCharacter);
            }
        }
    }
    let delta = field.sub(alpha, beta);
    // Tr(δ·z) along z = Σ_j t_j·M·γ^{j−1} is Σ_j t_j·m_j with
    // m_j = M·Tr(δ·γ^{j−1}) ∈ Z: the integral splits into d one-dimensional
    // equispaced sums.
    let per_axis = (total_points as f64).powf(1.0 / d as f64).round() as usize;
    let per_axis = per_axis.max(2);
    let mut freqs = Vec::with_capacity(d);
    for j in 0..d {
        let mut basis = vec![BigRational::zero(); d];
        basis[j] = BigRational::one();
        let gamma_pow = NFElem::from_coords(basis);
        let tr = field.trace(&field.mul(&delta, &gamma_pow)) * &m;
        freqs.push(tr.to_f64().unwrap_or(f64::NAN));
    }
    let mut acc = Complex64::new(1.0, 0.0);
    for &freq in &freqs {
        let mut axis_sum = Complex64::new(0.0, 0.0);
        for k in 0..per_axis {
            let phase = TAU * freq * (k as f64) / (per_axis as f64);
            axis_sum += Complex64::new(phase.cos(), phase.sin());
        }
        acc *= axis_sum / per_axis as f64;
    }
    Ok(acc)
}

fn require_complex(f: &AlgElem) -> Result<()> {
    if f.domain() != Domain::Complex {
        return Err(Error::DomainMismatch);
    }
    Ok(())
}

/// Additive flow: the coefficient at α is multiplied by exp(2πi·Tr(αr)).
pub fn cauchy_flow(field: &NumberField, r: &[f64], f: &AlgElem) -> Result<AlgElem> {
    require_complex(f)?;
    if r.len() != field.degree() {
        return Err(Error::DimensionMismatch { expected: field.degree(), got: r.len() });
    }
    let terms = f
        .terms()
        .map(|(exp, c)| {
            let phase: f64 = field
                .embed_all(exp)
                .iter()
                .zip(r)
                .map(|(a, rv)| a * rv)
                .sum();
            let twist = Complex64::new(0.0, TAU * phase).exp();
            (exp.clone(), Coefficient::Complex(c.to_complex() * twist))
        })
        .collect::<Vec<_>>();
    AlgElem::from_terms(field.clone(), Domain::Complex, terms)
}

/// Multiplicative flow: the coefficient at α ≠ 0 is multiplied by
/// |α|^{2πir} = exp(2πi·Σ r_ν·log|α_ν|); zero-exponent terms are carried
/// unchanged.
pub fn dirichlet_flow(field: &NumberField, r: &[f64], f: &AlgElem) -> Result<AlgElem> {
    require_complex(f)?;
    if r.len() != field.degree() {
        return Err(Error::DimensionMismatch { expected: field.degree(), got: r.len() });
    }
    let terms = f
        .terms()
        .map(|(exp, c)| {
            if exp.is_zero() {
                return (exp.clone(), c.clone());
            }
            let phase: f64 = field
                .embed_all(exp)
                .iter()
                .zip(r)
                .map(|(a, rv)| rv * a.abs().ln())
                .sum();
            let twist = Complex64::new(0.0, TAU * phase).exp();
            (exp.clone(), Coefficient::Complex(c.to_complex() * twist))
        })
        .collect::<Vec<_>>();
    AlgElem::from_terms(field.clone(), Domain::Complex, terms)
}

/// Exponent inversion q ↦ 1/q on nonzero exponents; an involution.  Works in
/// any coefficient domain.
pub fn time_reversal(f: &AlgElem) -> Result<AlgElem> {
    let field = f.field().clone();
    let terms = f
        .terms()
        .map(|(exp, c)| {
            let target = if exp.is_zero() { exp.clone() } else { field.inv(exp)? };
            Ok((target, c.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    AlgElem::from_terms(field, f.domain(), terms)
}

/// Comparison of the quadrature value of ∫₀^∞ e^{−2πny}·y^{s−1} dy against
/// the closed form Γ(s)·(2πn)^{−s}.
#[derive(Debug, Clone)]
pub struct MellinReport {
    pub integral: f64,
    pub reference: f64,
    pub rel_error: f64,
}

/// Adaptive quadrature spot check of the coefficient transform at one
/// exponent: the substitution y = t² removes the endpoint singularity for
/// s ≥ 1/2, and the integrand is cut off where the Gaussian tail is below
/// 10⁻²⁰ of its peak.
pub fn mellin_spot_check(n: u64, s: f64, tolerance: f64) -> Result<MellinReport> {
    assert!(n >= 1 && s > 0.0, "need n ≥ 1 and s > 0");
    let rate = TAU * n as f64;
    // ∫₀^∞ e^{−rate·y}·y^{s−1} dy = 2∫₀^∞ e^{−rate·t²}·t^{2s−1} dt
    let integrand = |t: f64| -> f64 {
        if t == 0.0 {
            if 2.0 * s - 1.0 > 0.0 {
                0.0
            } else {
                2.0 // s = 1/2: the integrand is 2·e^{−rate·t²}
            }
        } else {
            2.0 * (-rate * t * t).exp() * t.powf(2.0 * s - 1.0)
        }
    };
    let cutoff = (46.0 / rate).sqrt() + 1.0;
    let (integral, err_estimate) = adaptive_simpson(&integrand, 0.0, cutoff, 1e-12, 30);
    if err_estimate > tolerance {
        return Err(Error::QuadratureFailure { estimate: err_estimate, tolerance });
    }
    let reference = gamma(s) * rate.powf(-s);
    let rel_error = (integral - reference).abs() / reference.abs();
    Ok(MellinReport { integral, reference, rel_error })
}

/// Lanczos approximation (g = 7, 9 terms), accurate to ~1e−13 for x > 0.
pub fn gamma(x: f64) -> f64 {
    const COEF: [f64; 9] = [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    if x < 0.5 {
        PI / ((PI * x).sin() * gamma(1.0 - x))
    } else {
        let x = x - 1.0;
        let mut acc = COEF[0];
        for (i, c) in COEF.iter().enumerate().skip(1) {
            acc += c / (x + i as f64);
        }
        let t = x + 7.5;
        (TAU).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
    }
}

fn simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
}

/// Recursive adaptive Simpson; returns (value, error estimate).
fn adaptive_simpson(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
) -> (f64, f64) {
    let whole = simpson(f, a, b);
    let mid = 0.5 * (a + b);
    let left = simpson(f, a, mid);
    let right = simpson(f, mid, b);
    let refined = left + right;
    let err = (refined - whole).abs() / 15.0;
    if err <= tol || depth == 0 {
        (refined + (refined - whole) / 15.0, err)
    } else {
        let (lv, le) = adaptive_simpson(f, a, mid, tol / 2.0, depth - 1);
        let (rv, re) = adaptive_simpson(f, mid, b, tol / 2.0, depth - 1);
        (lv + rv, le + re)
    }
}
