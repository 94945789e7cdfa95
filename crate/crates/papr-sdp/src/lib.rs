//! SDP toolkit for amplitude-constrained OFDM blocks.
//!
//! The crate decides membership in the RF and optical-intensity (OC) encoding
//! sets through their semidefinite representations, solves the tone-reservation
//! peak-minimization program and its dual statistical-width program, and
//! evaluates closed-form volume and capacity bounds. Every SDP quantity is
//! cross-checked against an independent oversampled-grid oracle.
//!
//! Modules:
//! - [`signal`]: steering vectors, baseband synthesis, FFT grid peak oracle
//! - [`solver`]: operator-splitting solver for the structured SDPs
//! - [`sets`]: RF / OC membership tests and the sum-diagonal map
//! - [`tr`]: tone reservation, dual width, Monte-Carlo CCDF experiments
//! - [`geometry`]: log-domain volume bounds and the cross-grid kernel
//! - [`capacity`]: capacity bounds in physical channel parameters
//! - [`cli`]: command-line front end with machine-readable output

pub mod capacity;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod sets;
pub mod signal;
pub mod solver;
pub mod tr;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
