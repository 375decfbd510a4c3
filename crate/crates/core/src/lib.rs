//! Construction and certification of zero-modes for the self-adjoint Dirac and
//! Pauli operators generated by a magnetic field made of a smooth compactly
//! supported part plus finitely many Aharonov-Bohm solenoids.
//!
//! The extension parameter `tau` (one angle per solenoid) selects the
//! self-adjoint realization. The library provides:
//!
//! * [`specfun`] - Gamma, `sigma(a) = Gamma(a) 2^a`, and fractional-order `K_nu`;
//! * [`field`] - field configurations, total flux, and the scalar potential `h`;
//! * [`extension`] - deficiency elements, Krein domain samples, boundary-value
//!   functionals, domain predicates, spin-flip maps, and extension classification;
//! * [`kernelsolver`] - explicit zero-mode bases and counts, moment systems,
//!   and the coupled-case triviality certificate;
//! * [`verify`] - independent numerical oracles (finite differences, ring
//!   quadrature, SVD null spaces);
//! * [`config`] / [`report`] - the config file schema and the CLI commands.

pub mod config;
pub mod error;
pub mod extension;
pub mod field;
pub mod kernelsolver;
mod quad;
pub mod report;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
