//! Exact computations on principally polarized tropical abelian surfaces:
//! Voronoi geometry of the period lattice, tropical theta functions of
//! second order, the tropical Kummer quartic surface in `TP³`, and the
//! tropicalization of truncated nonarchimedean theta series.
//!
//! All arithmetic is over [`exactcore::Rational`]; no floating point is used.

pub mod error;
pub mod exactcore;
pub mod kummer;
pub mod lattice;
pub mod nonarch;
pub mod theta;

pub use error::{Error, Result};
pub use exactcore::{Matrix2, Rational, Vec2, Vec3};
pub use kummer::{build_quartic, psi_eval, KummerQuartic};
pub use lattice::PrincipallyPolarizedSurface;
pub use theta::{theta_eval, ThetaCharacteristic, ThetaValue};
