//! Exact skein-module computations for the `(2,2p+1)` torus knots.
//!
//! The Kauffman bracket skein algebra of the torus, its embedding in the
//! quantum torus, the skein module of the knot complement with its
//! peripheral map, a generator of the noncommutative A-ideal, and the
//! colored bracket recursion together with an independent braid oracle.

pub mod aideal;
pub mod chebyshev;
pub mod cli;
pub mod error;
pub mod jones;
pub mod knot_module;
pub mod laurent;
pub mod oracle;
pub mod quantum_torus;
pub mod torus_skein;
pub mod verify;

pub use error::{Error, Result};
pub use knot_module::{KMElement, TorusKnotParam};
pub use laurent::LaurentPoly;
pub use quantum_torus::QTElement;
pub use torus_skein::TorusSkein;
