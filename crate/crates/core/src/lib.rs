//! Rationally extended radial oscillator potentials built from two- and
//! three-seed Wronskians, together with their Laguerre-type exceptional
//! orthogonal polynomials.
//!
//! The symbolic layers ([`exactmath`], [`qrf`], [`susy`], [`eop`]) are exact;
//! [`numerics`] cross-checks spectra and orthogonality in floating point.

pub mod error;
pub mod exactmath;

pub use error::{Error, Result};
pub mod qrf;
pub mod report;
pub mod susy;
pub mod golden;
pub mod eop;
pub mod numerics;
pub mod descriptor;
pub mod verify;
