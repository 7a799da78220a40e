//! Finite set systems, the pregeometries their predimension induces, and
//! the strict gammoids that arise this way.
//!
//! The crate covers:
//!
//! * [`setsystem`]: predimension, transversals, self-sufficiency, dimension
//!   and closure of a set system, and the induced matroid;
//! * [`matroid`]: rank-table matroids with flats, bases, duals and minors;
//! * [`alpha`]: Mason's α-function on unions of flats, the inclusion–exclusion
//!   quantity Δ, and the flatness test;
//! * [`synthesis`]: α-transversals and presentations of flat matroids,
//!   including presentations in which a given subset is self-sufficient;
//! * [`gammoid`]: digraph strict gammoids, transversal matroids and
//!   cotransversal duality;
//! * [`amalgam`]: free amalgamation over a self-sufficient base, CM-triviality
//!   and weak canonical bases.
//!
//! Everything is exact and exhaustive; ground sets are small by design.

pub mod alpha;
pub mod amalgam;
pub mod corpus;
pub mod error;
pub mod extension;
pub mod flow;
pub mod gammoid;
pub mod io;
pub mod matching;
pub mod matroid;
pub mod setsystem;
pub mod subset;
pub mod synthesis;

pub use error::{Error, Result};
pub use matroid::{Backend, FlatLattice, Matroid};
pub use setsystem::{SetSystem, Transversal};
pub use subset::{Element, Ground, Subset};
