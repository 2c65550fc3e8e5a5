use std::collections::BTreeMap;

use super::multi::MultiSemiSimplicialSet;
use super::single::{SemiSimplicialSet, SimplexId};

/// `(x, j) -> s_j x`.
pub type DegeneracyTable = BTreeMap<(SimplexId, usize), SimplexId>;

/// `(x, q, j) -> s_j^q x`, axis `q` counted from 0.
pub type MultiDegeneracyTable = BTreeMap<(SimplexId, usize, usize), SimplexId>;

/// A semisimplicial set together with degeneracies `s_j`.
///
/// The degeneracies are expected to be total on every degree up to and
/// including `horizon`; `None` means no degree is covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    base: SemiSimplicialSet,
    horizon: Option<usize>,
    degeneracies: DegeneracyTable,
}

impl SimplicialSet {
    pub fn new(base: SemiSimplicialSet, horizon: Option<usize>, degeneracies: DegeneracyTable) -> Self {
        Self { base, horizon, degeneracies }
    }

    /// Pairs a complex with a table, taking the horizon to be the highest
    /// degree that appears as a source in the table.
    pub fn with_inferred_horizon(base: SemiSimplicialSet, degeneracies: DegeneracyTable) -> Self {
        let horizon = degeneracies.keys().filter_map(|&(x, _)| base.degree(x)).max();
        Self { base, horizon, degeneracies }
    }

    pub fn base(&self) -> &SemiSimplicialSet {
        &self.base
    }

    pub fn into_base(self) -> SemiSimplicialSet {
        self.base
    }

    pub fn horizon(&self) -> Option<usize> {
        self.horizon
    }

    /// Whether degeneracies are expected on simplices of degree `n`.
    pub fn covers(&self, n: usize) -> bool {
        self.horizon.is_some_and(|h| n <= h)
    }

    pub fn degeneracy(&self, x: SimplexId, j: usize) -> Option<SimplexId> {
        self.degeneracies.get(&(x, j)).copied()
    }

    pub fn degeneracies(&self) -> &DegeneracyTable {
        &self.degeneracies
    }

    /// Overwrites one entry. Meant for building fixtures and fault injection.
    pub fn set_degeneracy(&mut self, x: SimplexId, j: usize, value: SimplexId) {
        self.degeneracies.insert((x, j), value);
    }
}

/// A multisemisimplicial set together with degeneracies `s_j^q`, total on
/// every simplex of total degree at most `horizon`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSimplicialSet {
    base: MultiSemiSimplicialSet,
    horizon: Option<usize>,
    degeneracies: MultiDegeneracyTable,
}

impl MultiSimplicialSet {
    pub fn new(base: MultiSemiSimplicialSet, horizon: Option<usize>, degeneracies: MultiDegeneracyTable) -> Self {
        Self { base, horizon, degeneracies }
    }

    pub fn with_inferred_horizon(base: MultiSemiSimplicialSet, degeneracies: MultiDegeneracyTable) -> Self {
        let horizon = degeneracies.keys().filter_map(|&(x, _, _)| base.total_degree(x)).max();
        Self { base, horizon, degeneracies }
    }

    pub fn base(&self) -> &MultiSemiSimplicialSet {
        &self.base
    }

    pub fn horizon(&self) -> Option<usize> {
        self.horizon
    }

    pub fn covers(&self, m: usize) -> bool {
        self.horizon.is_some_and(|h| m <= h)
    }

    pub fn degeneracy(&self, x: SimplexId, q: usize, j: usize) -> Option<SimplexId> {
        self.degeneracies.get(&(x, q, j)).copied()
    }

    pub fn degeneracies(&self) -> &MultiDegeneracyTable {
        &self.degeneracies
    }

    pub fn set_degeneracy(&mut self, x: SimplexId, q: usize, j: usize, value: SimplexId) {
        self.degeneracies.insert((x, q, j), value);
    }
}
