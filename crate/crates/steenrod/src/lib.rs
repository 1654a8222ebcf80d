//! Exact chain-level algebra for Steenrod operations.
//!
//! This crate implements, over exact coefficients (`Z` or `F_p`):
//!
//! * sparse free-module elements over ordered basis keys with Koszul sign
//!   bookkeeping ([`coeff`]);
//! * permutations, the cyclic group ring, and its special elements `T`, `N`
//!   ([`perm`]);
//! * the minimal free resolution `W(r)` of the ground ring over the cyclic
//!   group ring ([`resolution`]);
//! * the Barratt-Eccles operad and the structure map `psi` from `W` into it
//!   ([`barratt_eccles`]);
//! * the surjection operad with McClure-Smith signs, the Benson contraction,
//!   and its recursive structure map ([`surjection`]);
//! * normalized chains of standard simplices and cubes, their counit,
//!   coproduct and join/product structure, and evaluation of surjection
//!   generators on chains ([`chains`]);
//! * cup-(r,i) products, the power maps `D^p_i`, and the Steenrod operations
//!   `P_s` / `beta P_s` at every prime ([`ops`]);
//! * finite simplicial and cubical sets, their mod p cohomology by exact
//!   elimination, and Steenrod operations on cohomology classes
//!   ([`complexes`], [`cohomology`]).
//!
//! All computations are exact and deterministic: elements iterate in a
//! canonical key order, elimination pivots are chosen canonically, and
//! parallel evaluation merges results in a fixed order.

pub mod barratt_eccles;
pub mod chains;
pub mod coeff;
pub mod cohomology;
pub mod complexes;
pub mod error;
pub mod matrix;
pub mod ops;
pub mod perm;
pub mod resolution;
pub mod surjection;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
