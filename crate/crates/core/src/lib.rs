//! Exact constructions of rational sections on elliptic surfaces
//! `y^2 = x^3 + A(t) x + B(t)` over ℚ, non-torsion certificates for them, and
//! polynomial solutions of `x^2 - y^3 - g(z) = t`.
//!
//! Everything is computed in exact rational arithmetic; there is no floating
//! point anywhere in the crate.

pub mod cli;
pub mod constructions;
pub mod ecq;
pub mod error;
pub mod identities;
pub mod polyparse;
pub mod qmath;
pub mod scanner;
pub mod surfaces;

pub use error::{Error, Result};
