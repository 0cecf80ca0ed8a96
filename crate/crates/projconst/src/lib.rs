//! Relative projection constants of m-dimensional subspaces, their sharp
//! upper bounds, and the equiangular tight frames that attain them.
//!
//! The maximal relative projection constant over a field K is
//!
//! ```text
//! lambda_K(m, N) = max { sum_ij t_i t_j |U* U|_ij :
//!                        t nonnegative unit vector, U U* = I_m }
//! ```
//!
//! where U ranges over m x N matrices with orthonormal rows (Parseval
//! frames of N vectors in K^m). Its quasimaximal relative, mu_K(m, N),
//! fixes the weights at t = (1, ..., 1)/sqrt(N). Both are bounded by
//!
//! ```text
//! delta(m, N) = (m/N) (1 + sqrt((N - 1)(N - m) / m))
//! ```
//!
//! with equality exactly when an equiangular tight frame of N vectors in
//! K^m exists. This crate computes the bounds exactly, searches for
//! maximizers, certifies equality cases (including the 276-vector frame
//! in R^23), replicates weighted maximizers into unweighted ones, and
//! audits every step of the lifted-frame inequality behind the bound.
//!
//! # Layout
//!
//! - [`matrix`]: dense kernel (products, orthonormalization, Perron
//!   eigenpairs, numerical rank).
//! - [`frames`]: frame model, Gram matrices, tightness, coherence,
//!   Welch-level certificates.
//! - [`constructions`]: simplex and maximal equiangular tight frames,
//!   Seidel-matrix imports, the 276-vertex two-graph, SIC fiducials.
//! - [`projection`]: objective, optimal weights, bounds, the lambda and
//!   mu searches, equality certification.
//! - [`replication`]: rational weight replication turning lambda
//!   witnesses into mu witnesses.
//! - [`bukhcox`]: lifted-frame audit of the central inequality.
//! - [`io`]: frame, Seidel and config file formats.
//! - [`report`]: run manifests embedded in every serialized report.
//!
//! Runnable walkthroughs live in `examples/`; try
//! `cargo run --example grunbaum` or `cargo run --example two_graph_276`.
//! The `projconst` binary wraps the same entry points as subcommands.

pub mod bukhcox;
pub mod config;
pub mod constructions;
pub mod error;
pub mod frames;
pub mod io;
pub mod matrix;
pub mod projection;
pub mod replication;
pub mod report;
pub mod rng;

pub use error::Error;
pub use matrix::{Field, Matrix};
