//! Exact computations behind the torus quotient of the complete flag
//! variety of type C2.
//!
//! The crate is organized bottom-up: [`ratlin`] supplies exact linear
//! algebra, [`polyhedra`] and [`toricsurf`] the polyhedral and toric
//! machinery, [`quotfan`] the combinatorial quotient fan, [`weylc2`] the Weyl
//! group and octagon, [`cremona`] plane birational maps, and [`chowx`] /
//! [`antican`] the Picard lattice, cones and anticanonical model of the
//! quotient surface.

pub mod antican;
pub mod chowx;
pub mod cremona;
pub mod error;
pub mod polyhedra;
pub mod quotfan;
pub mod ratlin;
pub mod toricsurf;
pub mod verify;
pub mod weylc2;

pub use error::{Error, Result};
pub use ratlin::{IntMat, Mat, Rat, RatMat};
