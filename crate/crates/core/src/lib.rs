//! Exact arithmetic for Kazhdan-Lusztig-Stanley invariants of matroids.
//!
//! The lattice engine in [`kls`] computes `P`, `Q`, `Z` and the inverse
//! Z-polynomial `Y` of any matroid from its lattice of flats. The
//! symmetric-group equivariant versions for uniform, q-niform and paving
//! matroids live in [`formulas`] as elements of the representation ring
//! ([`repring`]), with Schur-basis arithmetic from [`symfunc`]. The
//! [`verify`] sweeps check the closed forms against each other and against
//! the lattice engine.

pub mod explore;
pub mod fixtures;
pub mod formulas;
pub mod kls;
pub mod matroid;
pub mod numbers;
pub mod partition;
pub mod poly;
pub mod qanalog;
pub mod report;
pub mod repring;
pub mod symfunc;
pub mod verify;

pub use formulas::FormulaError;
pub use kls::{invariants, inv_z_y, KlsError, KlsInvariants};
pub use matroid::{FlatLattice, Matroid, MatroidError, MatroidSpec, PavingProfile};
pub use partition::{Partition, PartitionError, ShapeExpr};
pub use poly::IntPolynomial;
pub use qanalog::{QContext, QError};
pub use report::{Status, TheoremReport, Witness};
pub use repring::{Flavor, GradedRep, RepError};
pub use symfunc::{SchurVector, SymError};
pub use verify::{Ranges, VerifyConfig, VerifyError, THEOREM_IDS};
