//! Horns, brute-force horn filling and exhaustive Kan-condition checks.
//!
//! Fillers are always the smallest matching [`SimplexId`](crate::complex::SimplexId),
//! so equal inputs give equal outputs.

mod horn;
mod multi_horn;

pub use horn::{check_kan, compatible_horns, fill_horn, for_each_compatible_horn, make_horn, Horn};
pub use multi_horn::{check_multi_kan, fill_multi_horn, for_each_compatible_multi_horn, make_multi_horn, MultiHorn};

pub(crate) use horn::first_incompatibility;
pub(crate) use multi_horn::first_multi_incompatibility;
