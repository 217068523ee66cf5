//! Exact convolution algebra on number-field exponents.
//!
//! The central object is a sparse formal sum `Σ a_α · ξ^α` whose exponents α
//! live in a fixed totally real number field K and whose coefficients are
//! exact rationals, Gaussian rationals, or binary64 complex numbers.  Two
//! products are provided: the Cauchy product (convolution along `+` of K,
//! ordinary power-series multiplication on integer exponents) and the
//! Dirichlet product (convolution along `×` of K, classical Dirichlet
//! convolution on natural-number exponents).
//!
//! On top of that sit truncated arithmetic-function series with Dirichlet and
//! coprime convolution, Dirichlet characters and their coefficient actions,
//! diagonal Galois representations with Artin Euler factors, the Δ cusp-form
//! expansion with the Hecke operator realized as a shift-and-project inside
//! the Dirichlet algebra, and the Cauchy/Dirichlet coefficient flows.
//!
//! Everything is pure and immutable; identities are checked by exact
//! arithmetic wherever the coefficient domain allows it.

pub mod algebra;
pub mod characters;
pub mod coeff;
pub mod error;
pub mod flows;
pub mod io;
pub mod modular;
pub mod numfield;
mod ratpoly;
pub mod reps;
pub mod series;
pub mod verify;

pub use coeff::{Coefficient, Domain};
pub use error::{Error, Result};
pub use numfield::{NFElem, NumberField, SignVector};
