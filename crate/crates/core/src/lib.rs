//! Skew-tabular lattices and orthogonal ideal-array lattices, with exact
//! rational certification that each lattice is a representation diagram for
//! the corresponding Lie algebra.
//!
//! - [`weights`]: root data for types A/B/D, Laurent and `q`-polynomials,
//!   Dynkin polynomials and the closed-form rank/cardinality identities
//! - [`shapes`]: partitions, skew shapes, and the Klein four-group of
//!   shape operations
//! - [`tableaux`]: skew semistandard tableaux, GT parallelograms, the
//!   bijection between them, and ballot admissibility
//! - [`lattice`]: the diamond-colored poset core
//! - [`repdiag`]: edge coefficients, DC-relation certification, the GT
//!   embedding, and exact generator matrices
//! - [`schur`]: skew Schur functions, Weyl bialternants, and the
//!   Zelevinsky–Stembridge decomposition
//! - [`orthogonal`]: spin-node lattices in types B and D with
//!   square-root-product edge coefficients certified in product form
//! - [`export`]: JSON and DOT serialization shared by the CLI

pub mod export;
pub mod lattice;
pub mod orthogonal;
pub mod repdiag;
pub mod schur;
pub mod shapes;
pub mod tableaux;
pub mod weights;

pub use lattice::{build, ColoredLattice};
pub use shapes::{Partition, SkewShape};
pub use tableaux::GtParallelogram;
pub use weights::{root_data, Kind, LaurentPoly, QPoly, Weight};
