//! Exact-arithmetic library for counting solutions of bivariate curves
//! over prime fields on small intervals and multiplicative subgroups, and
//! for measuring the additive/multiplicative expansion of orbits of
//! rational-map semigroups.
//!
//! Everything is exact: u64 arithmetic modulo p < 2^63, arbitrary-precision
//! integers where determinants or integer curves are involved. Randomized
//! routines (equal-degree splitting, experiment sampling) take pinned seeds
//! so runs reproduce bit for bit.

pub mod cli;
pub mod counting;
pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod factor;
pub mod ff;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
