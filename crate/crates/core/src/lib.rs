//! Monte Carlo solvers and numerical verifiers for non-local Schrödinger
//! operators `H = Ψ(−Δ) + V` with Dirichlet exterior conditions.
//!
//! The kinetic term is the subordinate-Brownian-motion generator: `Ψ` is a
//! Bernstein function in the class `B₀`, the driving process is
//! `X_t = B_{S_t}` where `S` is the subordinator with Laplace exponent `Ψ`
//! and `B` is Brownian motion normalised so that `E[B_t²] = 2t`.
//!
//! Module map:
//! - [`bernstein`]: the function catalog `Ψ`, its Lévy data and scaling bounds
//! - [`subordinator`]: exact and rejection samplers for increments of `S`
//! - [`domain`] / [`sbm`]: geometry, path simulation, exit and hitting times
//! - [`heatkernel`]: Fourier inversion of the transition density and the
//!   kernel-bound constants
//! - [`fk`]: Feynman-Kac solvers and ABP-type estimates
//! - [`gridop`] / [`spectral`]: a deterministic 1-D fractional grid oracle and
//!   principal-eigenvalue estimation from survival decay
//! - [`principles`]: executable maximum/anti-maximum, narrow-domain,
//!   Liouville and recurrence checks

pub mod bernstein;
pub mod domain;
pub mod error;
pub mod fk;
pub mod gridop;
pub mod heatkernel;
pub mod principles;
pub mod quad;
pub mod rng;
pub mod sbm;
pub mod spectral;
pub mod stats;
pub mod subordinator;

pub use bernstein::{BernsteinKind, BernsteinSpec, ScalingParams, ScalingSide};
pub use domain::Domain;
pub use error::{Error, Result};
pub use sbm::{ExitRecord, HitRecord, PathSample, SolverConfig};
pub use stats::McEstimate;
pub use subordinator::SubordinatorSampler;
