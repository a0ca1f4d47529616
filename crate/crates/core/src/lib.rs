//! Machine-checked list coloring with requests on hopper-free and house-free
//! plane graphs.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`graph`] and [`plane`]: abstract graphs and combinatorial plane graphs
//!   given by a rotation system, with faces traced from darts.
//! - [`pattern`]: hopper/house detection and the library of reducible
//!   configurations (`Z0`, `B1a` .. `B6`, `D1`, `D2`).
//! - [`listcolor`]: an exact list-coloring solver plus the degree-colorability
//!   test for connected graphs.
//! - [`reducible`]: exhaustive verification of the FIX and FORB conditions
//!   over canonical list systems.
//! - [`resolve`]: resolutions (iterated peeling of reducible subgraphs), their
//!   replay as a coloring procedure, and an exact request-satisfaction oracle.
//! - [`discharge`]: both discharging arguments as exact-rational charge
//!   ledgers, and the audit that cross-checks them against the configuration
//!   matcher.
//! - [`small`]: enumeration of small graphs up to isomorphism.
#![no_std]

extern crate alloc;

pub mod catalog;
pub mod discharge;
pub mod graph;
pub mod listcolor;
pub mod pattern;
pub mod plane;
pub mod reducible;
pub mod resolve;
pub mod small;

pub use graph::{Graph, SimpleGraph};
pub use pattern::{Class, ConfigId};
pub use plane::PlaneGraph;

/// Exact rational used for charges, weights and ratios.
pub type Rational = num_rational::Ratio<i64>;
