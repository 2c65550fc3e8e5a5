//! Degeneracies for a Kan semisimplicial set.
//!
//! `s_k x` is built by induction on `(deg x, k)`. If `x = s_j w` for some
//! `j < k` already constructed, take the smallest such `j` and set
//! `s_k x = s_j s_{k-1} w`. Otherwise `s_k x = d_0 T_k x`, where `T_k x`
//! (two degrees up) comes from two horn fills:
//!
//! * `y` of degree `n+1`, missing face `k+1`, with `d_0 y = x`,
//!   `d_j y = d_k T_{k-1} d_{j-1} x` for `0 < j <= k` and
//!   `d_j y = d_{k+1} T_k d_{j-1} x` for `j > k+1`;
//! * `T_k x` of degree `n+2`, missing face `0`, with `d_j = T_{k-1} d_{j-1} x`
//!   for `0 < j <= k`, `d_{k+1} = d_{k+2} = y` and `d_j = T_k d_{j-2} x` for
//!   `j > k+2`.
//!
//! `T` is total on every degree up to the horizon and depends only on the
//! complex and the filler rule, so it is memoized and computed on demand.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{validate, DegeneracyTable, SemiSimplicialSet, SimplexId, SimplicialSet};
use crate::error::{Error, Result, Stage};
use crate::kan::{fill_horn, first_incompatibility, Horn};
use crate::report::{Identity, VerificationReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SynthesisOptions {
    /// Check compatibility of every horn before filling it.
    pub debug_checks: bool,
}

/// Partial tables for `s_j` and `T_j`, plus the inverse of the `s` table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegeneracyState {
    s_table: DegeneracyTable,
    t_table: DegeneracyTable,
    /// `value -> {(j, w) : s_j w = value}`, sorted by `j` first.
    image_index: BTreeMap<SimplexId, BTreeSet<(usize, SimplexId)>>,
    complete_degrees: BTreeSet<usize>,
    compatibility_checks: usize,
}

impl DegeneracyState {
    pub fn s_table(&self) -> &DegeneracyTable {
        &self.s_table
    }

    pub fn t_table(&self) -> &DegeneracyTable {
        &self.t_table
    }

    pub fn s(&self, x: SimplexId, j: usize) -> Option<SimplexId> {
        self.s_table.get(&(x, j)).copied()
    }

    pub fn t(&self, x: SimplexId, j: usize) -> Option<SimplexId> {
        self.t_table.get(&(x, j)).copied()
    }

    /// Every `(j, w)` with `s_j w = x` constructed so far.
    pub fn preimages(&self, x: SimplexId) -> impl Iterator<Item = (usize, SimplexId)> + '_ {
        self.image_index.get(&x).into_iter().flatten().copied()
    }

    /// Number of horn compatibility checks run with `debug_checks` on.
    pub fn compatibility_checks(&self) -> usize {
        self.compatibility_checks
    }

    fn record_s(&mut self, x: SimplexId, j: usize, value: SimplexId) {
        self.s_table.insert((x, j), value);
        self.image_index.entry(value).or_default().insert((j, x));
    }
}

/// Runs the induction one entry at a time.
pub struct Synthesizer<'a> {
    complex: &'a SemiSimplicialSet,
    state: DegeneracyState,
    options: SynthesisOptions,
}

impl<'a> Synthesizer<'a> {
    pub fn new(complex: &'a SemiSimplicialSet, options: SynthesisOptions) -> Self {
        Self { complex, state: DegeneracyState::default(), options }
    }

    pub fn state(&self) -> &DegeneracyState {
        &self.state
    }

    pub fn into_state(self) -> DegeneracyState {
        self.state
    }

    fn degree_with_headroom(&self, x: SimplexId, k: usize) -> Result<usize> {
        let n = self.complex.degree(x).ok_or(Error::UnknownSimplex(x))?;
        if k > n {
            return Err(Error::BadIndex { simplex: x, index: k });
        }
        if n + 2 > self.complex.truncation() {
            return Err(Error::BeyondTruncation { requested: n + 2, truncation: self.complex.truncation() });
        }
        Ok(n)
    }

    fn fill(&mut self, stage: Stage, horn: Horn) -> Result<SimplexId> {
        if self.options.debug_checks {
            self.state.compatibility_checks += 1;
            if let Some((i, j)) = first_incompatibility(self.complex, &horn) {
                return Err(Error::Inconsistent { stage, detail: format!("faces {i} and {j} of {horn}") });
            }
        }
        fill_horn(self.complex, &horn).map_err(|e| match e {
            Error::NoFiller { horn, .. } => Error::NoFiller { stage: Some(stage), horn },
            other => other,
        })
    }

    /// `T_k x`, computing any missing lower `T` entries first.
    #[allow(clippy::needless_range_loop)]
    pub fn build_t(&mut self, x: SimplexId, k: usize) -> Result<SimplexId> {
        if let Some(t) = self.state.t(x, k) {
            return Ok(t);
        }
        let n = self.degree_with_headroom(x, k)?;
        let complex = self.complex;
        let d = |v: SimplexId, i: usize| complex.face(v, i);

        let mut y_faces = vec![None; n + 2];
        y_faces[0] = Some(x);
        for j in 1..=k {
            let lower = self.build_t(d(x, j - 1), k - 1)?;
            y_faces[j] = Some(d(lower, k));
        }
        for j in k + 2..=n + 1 {
            let lower = self.build_t(d(x, j - 1), k)?;
            y_faces[j] = Some(d(lower, k + 1));
        }
        let y = self.fill(Stage::Y, Horn::from_parts(n + 1, k + 1, y_faces))?;

        let mut z_faces = vec![None; n + 3];
        for j in 1..=k {
            z_faces[j] = Some(self.build_t(d(x, j - 1), k - 1)?);
        }
        z_faces[k + 1] = Some(y);
        z_faces[k + 2] = Some(y);
        for j in k + 3..=n + 2 {
            z_faces[j] = Some(self.build_t(d(x, j - 2), k)?);
        }
        let t = self.fill(Stage::Z, Horn::from_parts(n + 2, 0, z_faces))?;
        self.state.t_table.insert((x, k), t);
        Ok(t)
    }

    fn degree_complete(&mut self, n: usize) -> bool {
        if self.state.complete_degrees.contains(&n) {
            return true;
        }
        let done = self.complex.level(n).iter().all(|&w| (0..=n).all(|j| self.state.s(w, j).is_some()));
        if done {
            self.state.complete_degrees.insert(n);
        }
        done
    }

    /// `s_k x`. Needs every `s` on lower degrees and `s_j x` for `j < k`.
    pub fn build_s(&mut self, x: SimplexId, k: usize) -> Result<SimplexId> {
        if let Some(s) = self.state.s(x, k) {
            return Ok(s);
        }
        let n = self.degree_with_headroom(x, k)?;
        let ready = (n == 0 || self.degree_complete(n - 1)) && (0..k).all(|j| self.state.s(x, j).is_some());
        if !ready {
            return Err(Error::InductionOrder { simplex: x, index: k });
        }
        let witness = self.state.preimages(x).find(|&(j, _)| j < k);
        let value = match witness {
            Some((j, w)) => {
                let inner = self.state.s(w, k - 1).ok_or(Error::InductionOrder { simplex: w, index: k - 1 })?;
                self.state.s(inner, j).ok_or(Error::InductionOrder { simplex: inner, index: j })?
            }
            None => {
                let t = self.build_t(x, k)?;
                self.complex.face(t, 0)
            }
        };
        self.state.record_s(x, k, value);
        Ok(value)
    }
}

/// Output of [`synthesize`]: the simplicial set and the tables behind it.
#[derive(Clone, Debug)]
pub struct Synthesis {
    pub simplicial: SimplicialSet,
    pub state: DegeneracyState,
}

pub fn synthesize(complex: &SemiSimplicialSet, horizon: usize) -> Result<Synthesis> {
    synthesize_with(complex, horizon, SynthesisOptions::default())
}

/// Builds `s_k` and `T_k` on every simplex of degree at most `horizon`,
/// degree by degree, `k` ascending, ids ascending.
pub fn synthesize_with(complex: &SemiSimplicialSet, horizon: usize, options: SynthesisOptions) -> Result<Synthesis> {
    if complex.truncation() < horizon + 2 {
        return Err(Error::InsufficientTruncation { horizon, truncation: complex.truncation() });
    }
    let report = validate(complex);
    if !report.is_valid() {
        return Err(Error::InvalidComplex(report.violations.len()));
    }
    let mut engine = Synthesizer::new(complex, options);
    for n in 0..=horizon {
        for k in 0..=n {
            for &x in complex.level(n) {
                engine.build_t(x, k)?;
                engine.build_s(x, k)?;
            }
        }
    }
    let state = engine.into_state();
    let simplicial = SimplicialSet::new(complex.clone(), Some(horizon), state.s_table.clone());
    Ok(Synthesis { simplicial, state })
}

/// Checks the four degeneracy identities everywhere both sides live within
/// the horizon, and the four `T` identities on every entry of `t_table`.
pub fn verify_identities(result: &SimplicialSet, t_table: Option<&DegeneracyTable>) -> VerificationReport {
    let x_set = result.base();
    let d = |v: Option<SimplexId>, i: usize| v.and_then(|v| x_set.get_face(v, i));
    let s = |v: Option<SimplexId>, j: usize| v.and_then(|v| result.degeneracy(v, j));
    let mut report = VerificationReport::default();

    for (n, x) in x_set.iter() {
        if !result.covers(n) {
            continue;
        }
        let some_x = Some(x);
        for j in 0..=n {
            let sx = s(some_x, j);
            for i in 0..j {
                report.record(Identity::FaceBelow, x, &[("i", i), ("j", j)], d(sx, i), s(d(some_x, i), j - 1));
            }
            for i in [j, j + 1] {
                report.record(Identity::FaceRetract, x, &[("i", i), ("j", j)], d(sx, i), some_x);
            }
            for i in j + 2..=n + 1 {
                report.record(Identity::FaceAbove, x, &[("i", i), ("j", j)], d(sx, i), s(d(some_x, i - 1), j));
            }
        }
        if result.covers(n + 1) {
            for i in 0..=n {
                for j in i + 1..=n + 1 {
                    let lhs = s(s(some_x, i), j);
                    let rhs = s(s(some_x, j - 1), i);
                    report.record(Identity::DegeneracyOrder, x, &[("i", i), ("j", j)], lhs, rhs);
                }
            }
        }
    }

    if let Some(t_table) = t_table {
        let t = |v: Option<SimplexId>, j: usize| v.and_then(|v| t_table.get(&(v, j)).copied());
        for &(x, j) in t_table.keys() {
            let Some(n) = x_set.degree(x) else {
                report.record(Identity::TRetract, x, &[("j", j)], None, Some(x));
                continue;
            };
            let some_x = Some(x);
            let tx = t(some_x, j);
            for i in 1..=j {
                report.record(Identity::TFaceBelow, x, &[("i", i), ("j", j)], d(tx, i), t(d(some_x, i - 1), j - 1));
            }
            for i in j + 3..=n + 2 {
                report.record(Identity::TFaceAbove, x, &[("i", i), ("j", j)], d(tx, i), t(d(some_x, i - 2), j));
            }
            report.record(Identity::TMiddle, x, &[("j", j)], d(tx, j + 1), d(tx, j + 2));
            report.record(Identity::TRetract, x, &[("j", j)], d(d(tx, j + 1), 0), some_x);
        }
    }
    report
}

/// Injectivity of each `s_j`, and the shared-image property: whenever
/// `s_j w = s_i y` with `j < i`, `v = d_j y` satisfies `y = s_j v` and
/// `w = s_{i-1} v`.
pub fn verify_lemmas(result: &SimplicialSet) -> VerificationReport {
    let x_set = result.base();
    let mut report = VerificationReport::default();
    let mut image: BTreeMap<SimplexId, Vec<(usize, SimplexId)>> = BTreeMap::new();
    for (&(x, j), &v) in result.degeneracies() {
        image.entry(v).or_default().push((j, x));
    }
    for (&value, pre) in &mut image {
        pre.sort();
        for &(j, w) in pre.iter() {
            let first = pre.iter().find(|p| p.0 == j).map(|p| p.1);
            report.record(Identity::Injective, value, &[("j", j)], first, Some(w));
        }
        for (a, &(j, w)) in pre.iter().enumerate() {
            for &(i, y) in &pre[a + 1..] {
                if j >= i {
                    continue;
                }
                let v = x_set.get_face(y, j);
                let sv = v.and_then(|v| result.degeneracy(v, j));
                report.record(Identity::SharedImage, value, &[("j", j), ("i", i), ("side", 0)], sv, Some(y));
                let sv = v.and_then(|v| result.degeneracy(v, i - 1));
                report.record(Identity::SharedImage, value, &[("j", j), ("i", i), ("side", 1)], sv, Some(w));
            }
        }
    }
    report
}
