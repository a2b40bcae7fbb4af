//! Exact-arithmetic toolkit for Hirzebruch multiplicative sequences and
//! genera of unitary manifolds.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no floating point anywhere. The crate provides:
//!
//! - truncated formal power series over [`Rational`], including the
//!   characteristic series of the Todd, A-hat, L and A_k genera
//!   ([`series`]);
//! - weighted graded polynomials in Chern or Pontrjagin variables and the
//!   multiplicative-sequence generator turning a normalized power series
//!   into the polynomials K_1..K_n ([`symmetric`]);
//! - a genus registry with Chern-to-Pontrjagin conversion and symbolic
//!   verification of the classical identities relating Todd, A-hat and A_k
//!   classes ([`genus`]);
//! - characteristic-number tables for projective spaces, hypersurfaces and
//!   products, with exact genus evaluation ([`manifold`]);
//! - the vanishing engine: Vandermonde systems built from the Hattori
//!   relation exp(kx/2)*A-hat(TM)[M] = 0, invertibility certificates, and
//!   numeric verification of the derived vanishing statements on concrete
//!   characteristic-number data ([`hattori`]).

pub mod error;
pub mod genus;
pub mod hattori;
pub mod manifold;
pub mod rational;
pub mod series;
pub mod symmetric;

pub use error::{Error, Result};
pub use rational::Rational;
pub use series::PowerSeries;
pub use symmetric::graded::{GradedPolynomial, Monomial, Substitution, VarKind};
