//! Known Kan inputs and the free simplicial set on a semisimplicial set.

mod fixtures;
mod free;
mod group;
mod nerve;
mod product;

pub use fixtures::{circle, discrete, forget_degeneracies, point};
pub use free::{free_simplicial, DegeneracyOperator, FreeSimplicial};
pub use group::FiniteGroupTable;
pub use nerve::{nerve, nerve_simplex, Nerve};
pub use product::{external_product, product_simplex};
