//! Degeneracy synthesis for finite truncations of semisimplicial and
//! multisemisimplicial sets that satisfy the Kan condition.
//!
//! * [`complex`]: data model, structural validation and text formats.
//! * [`kan`]: horns, brute-force filling and exhaustive Kan checks.
//! * [`construct`]: degeneracies `s_j` on a semisimplicial set.
//! * [`multi`]: degeneracies `s_j^q` on a multisemisimplicial set.
//! * [`corpus`]: nerves of finite groups, external products and the free
//!   simplicial set on a semisimplicial set.

pub mod complex;
pub mod construct;
pub mod corpus;
mod error;
pub mod kan;
pub mod multi;
mod report;

pub use complex::{
    MultiIndex, MultiSemiSimplicialSet, MultiSimplicialSet, SemiSimplicialSet, SimplexId, SimplicialSet,
};
pub use error::{AnyHorn, Error, Result, Stage};
pub use report::{Identity, VerificationReport, Violation};
