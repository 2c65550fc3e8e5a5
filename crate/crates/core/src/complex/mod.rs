//! Finite truncations of semisimplicial and multisemisimplicial sets.

mod multi;
mod simplicial;
mod single;
pub mod text;

pub use multi::{total_degree, validate_multi, MultiIndex, MultiSemiSimplicialSet, MultiSemiSimplicialSetBuilder};
pub use simplicial::{DegeneracyTable, MultiDegeneracyTable, MultiSimplicialSet, SimplicialSet};
pub use single::{validate, FaceViolation, SemiSimplicialSet, SemiSimplicialSetBuilder, SimplexId, ValidationReport};
