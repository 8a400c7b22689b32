//! Spectra of rho operators for representations of compact quantum groups.
//!
//! A finite-dimensional unitary representation is modelled by two pieces of
//! data: the eigenvalue multiset of its rho operator ([`spectra::RhoSpectrum`])
//! and its decomposition into irreducibles inside a fusion ring
//! ([`fusion::FusionRing`]). On top of those the crate computes the power
//! sums `d_t`, decides whether a spectrum is invariant under inversion, and
//! measures how dimensions grow along tensor powers ([`analysis`]).

pub mod analysis;
pub mod error;
pub mod fusion;
pub mod numerics;
pub mod spectra;

pub use error::{Error, ErrorKind, Result};
pub use numerics::{Precision, Scalar};
