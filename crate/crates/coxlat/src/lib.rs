//! Exact-arithmetic finite Coxeter groups, the facial weak order on the
//! Coxeter complex of standard parabolic cosets, and lattice congruences
//! (descent, Cambrian) of it together with quotient lattices and fan cones.
//!
//! Everything is computed over `ℚ` or `ℚ(√5)`; there is no floating point
//! anywhere in the crate.

pub mod bitset;
pub mod cache;
pub mod cartan;
pub mod cone;
pub mod congruence;
pub mod coset;
pub mod doc;
pub mod element;
pub mod error;
pub mod facial;
pub mod facial_congruence;
pub mod names;
pub mod poset;
pub mod scalar;
pub mod system;
pub mod typea;
pub mod verify;
pub mod weak;

pub use bitset::{GenSet, RootSet};
pub use cartan::{CoxeterMatrix, FiniteType};
pub use element::Element;
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use system::CoxeterSystem;
