//! Finite Abel-Grassmann groupoids.
//!
//! Decides membership in the AG-groupoid classes (AG, AG**, strongly
//! regular, completely inverse, AG-groups, inflations), builds the derived
//! commutative product that turns a completely inverse AG**-groupoid into a
//! semilattice of abelian groups, and goes back and forth between the two
//! through involutive idempotent-fixed automorphisms. Every theorem the
//! library relies on is re-measured on the data rather than assumed; a
//! mismatch surfaces as [`Error::TheoremViolation`].
//!
//! The `census` module enumerates small groupoids by class up to
//! isomorphism, which turns the structural correspondences into exhaustive
//! checks at fixed orders.

pub mod aggroup;
pub mod census;
pub mod cli;
pub mod derived;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod groupoid;
pub mod inflation;
pub mod inverses;
pub mod laws;
pub mod morphisms;
pub mod set;
pub mod structure;

/// Largest supported carrier size.
pub const MAX_ORDER: usize = 16;

pub use error::{Error, Result};
pub use groupoid::{FiniteGroupoid, Subgroupoid};
pub use set::ElementSet;
