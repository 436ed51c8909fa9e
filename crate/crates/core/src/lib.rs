//! Disentropy calculus on Lambert-type special functions.
//!
//! Entropy measures disorder; its dual, here called disentropy, measures
//! order. The discrete form weighs each probability by a Lambert-type
//! function value, `D_q = Σ p^q W_q(p)`, which is maximal for deterministic
//! distributions and minimal for uniform ones. Because `W_q` stays real for
//! a range of negative arguments, the same functional extends to signed
//! quasi-probability fields where entropy is undefined.
//!
//! The crate is organized bottom-up:
//!
//! * [`special`] — Lambert `W`, base-`λ` `R_λ`, Lambert-Tsallis `W_q`,
//!   Lambert-Kaniadakis `W_κ`, and the deformed exponentials they invert.
//! * [`discrete`] — disentropy functionals on probability vectors and joint
//!   matrices, normalization, and the degree of randomness.
//! * [`classical`] — typical sequences, source-coding bounds, binary-channel
//!   capacities, the Fano inequality, and key-rate estimates.
//! * [`quantum`] — density-matrix disentropy, disentanglement measures,
//!   monogamy, bound checkers, and discord.
//! * [`operator`] — the matrix equation `A e_q^A = B` and the gate family it
//!   generates.
//! * [`quad`] / [`wigner`] — tensor-product Gauss-Legendre quadrature and
//!   phase-space disentropy of parametric Wigner functions.
//! * [`blackhole`], [`segment`], [`numbers`] — application suites.
//! * [`pgm`] — 8-bit PGM image I/O used by the segmentation tools.

#![forbid(unsafe_code)]

pub mod blackhole;
pub mod classical;
pub mod discrete;
pub mod error;
pub mod numbers;
pub mod operator;
pub mod pgm;
pub mod quad;
pub mod quantum;
pub mod random;
pub mod segment;
pub mod special;
pub mod wigner;

pub use error::{Error, Result};
pub use special::{BranchId, BranchPoint, DeformationParams};
