//! Exact-arithmetic workbench for the level-2 modular workbench at p = 3:
//! Weierstrass models of Γ₀(2)-curves and the maps their isogenies induce,
//! formal group [m]-series, cobar cohomology of the mod-(3, q2) Hopf
//! algebra, total-complex Adams–Novikov pages with their d5/d9 engine,
//! V(1)-homotopy pattern tables, and the quaternionic endomorphism
//! algebra with its 3-adic completion.
//!
//! Everything computes over exact scalar domains (arbitrary-precision
//! integers and rationals, F_3, F_9, Z/3ⁿ, truncated Witt vectors); there
//! is no floating point anywhere.

pub mod error;
pub mod ring;
pub mod finite_field;
pub mod witt;
pub mod poly;
pub mod parse;
pub mod series;
pub mod linalg;
pub mod curve_ring;
pub mod curves;
pub mod points;
pub mod fgl;
pub mod cobar;
pub mod anss;
pub mod patterns;
pub mod quat;
pub mod o3;
pub mod groupring;
pub mod chart;
pub mod oracles;
pub mod verify;

pub use error::{Error, Result};
pub use finite_field::{ExtF9, F3, F9};
pub use poly::{GradedPoly, Mono, Var};
pub use ring::{Field, Ring};
pub use witt::{WittEl, Zm3};

/// Seed used by every randomized battery unless overridden.
pub const DEFAULT_SEED: u64 = 0x5EED;
