//! Degeneracies `s_j^q` for a Kan multisemisimplicial set.
//!
//! Induction runs on total degree `|x|` and then on the pair `(q, j)` in
//! lexicographic order. To build `s_k^r x`:
//!
//! 1. if `x = s_j^q w` with `q < r`, take the smallest such `(q, j)` and set
//!    `s_k^r x = s_j^q s_k^r w`;
//! 2. else if `x = s_j^r w` with `j < k`, take the smallest `j` and set
//!    `s_k^r x = s_j^r s_{k-1}^r w`;
//! 3. otherwise `s_k^r x = d_0^r T_k^r x`, with `T_k^r x ∈ X_{n+2e_r}` obtained
//!    from two horn fills exactly as on one axis, plus the faces on every
//!    other axis `q`: `d_{k+1}^r T_k^r d_j^q x` for the first fill and
//!    `T_k^r d_j^q x` for the second.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{
    validate_multi, MultiDegeneracyTable, MultiIndex, MultiSemiSimplicialSet, MultiSimplicialSet, SimplexId,
};
use crate::construct::SynthesisOptions;
use crate::error::{Error, Result, Stage};
use crate::kan::{fill_multi_horn, first_multi_incompatibility, MultiHorn};
use crate::report::{Identity, VerificationReport};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiDegeneracyState {
    s_table: MultiDegeneracyTable,
    t_table: MultiDegeneracyTable,
    /// `value -> {(q, j, w) : s_j^q w = value}`, lexicographic in `(q, j)`.
    image_index: BTreeMap<SimplexId, BTreeSet<(usize, usize, SimplexId)>>,
    complete_totals: BTreeSet<usize>,
    compatibility_checks: usize,
}

impl MultiDegeneracyState {
    pub fn s_table(&self) -> &MultiDegeneracyTable {
        &self.s_table
    }

    pub fn t_table(&self) -> &MultiDegeneracyTable {
        &self.t_table
    }

    pub fn s(&self, x: SimplexId, q: usize, j: usize) -> Option<SimplexId> {
        self.s_table.get(&(x, q, j)).copied()
    }

    pub fn t(&self, x: SimplexId, q: usize, j: usize) -> Option<SimplexId> {
        self.t_table.get(&(x, q, j)).copied()
    }

    pub fn preimages(&self, x: SimplexId) -> impl Iterator<Item = (usize, usize, SimplexId)> + '_ {
        self.image_index.get(&x).into_iter().flatten().copied()
    }

    pub fn compatibility_checks(&self) -> usize {
        self.compatibility_checks
    }
}

pub struct MultiSynthesizer<'a> {
    complex: &'a MultiSemiSimplicialSet,
    state: MultiDegeneracyState,
    options: SynthesisOptions,
}

impl<'a> MultiSynthesizer<'a> {
    pub fn new(complex: &'a MultiSemiSimplicialSet, options: SynthesisOptions) -> Self {
        Self { complex, state: MultiDegeneracyState::default(), options }
    }

    pub fn state(&self) -> &MultiDegeneracyState {
        &self.state
    }

    pub fn into_state(self) -> MultiDegeneracyState {
        self.state
    }

    fn index_with_headroom(&self, x: SimplexId, r: usize, k: usize) -> Result<MultiIndex> {
        let n = self.complex.index(x).ok_or(Error::UnknownSimplex(x))?.clone();
        if r >= n.axes() || k > n.get(r) {
            return Err(Error::BadIndex { simplex: x, index: k });
        }
        if n.total() + 2 > self.complex.truncation() {
            return Err(Error::BeyondTruncation { requested: n.total() + 2, truncation: self.complex.truncation() });
        }
        Ok(n)
    }

    fn fill(&mut self, stage: Stage, horn: MultiHorn) -> Result<SimplexId> {
        if self.options.debug_checks {
            self.state.compatibility_checks += 1;
            if let Some(((p, i), (q, j))) = first_multi_incompatibility(self.complex, &horn) {
                return Err(Error::Inconsistent {
                    stage,
                    detail: format!("faces ({}, {i}) and ({}, {j}) of {horn}", p + 1, q + 1),
                });
            }
        }
        fill_multi_horn(self.complex, &horn).map_err(|e| match e {
            Error::NoFiller { horn, .. } => Error::NoFiller { stage: Some(stage), horn },
            other => other,
        })
    }

    /// `T_k^r x`, computing missing lower entries on demand.
    pub fn build_t(&mut self, x: SimplexId, r: usize, k: usize) -> Result<SimplexId> {
        if let Some(t) = self.state.t(x, r, k) {
            return Ok(t);
        }
        let n = self.index_with_headroom(x, r, k)?;
        let complex = self.complex;
        let d = |v: SimplexId, p: usize, i: usize| complex.face(v, p, i);
        let nr = n.get(r);
        let others: Vec<usize> = (0..n.axes()).filter(|&q| q != r && n.get(q) > 0).collect();

        let mut y_faces = BTreeMap::new();
        y_faces.insert((r, 0), x);
        for j in 1..=k {
            let lower = self.build_t(d(x, r, j - 1), r, k - 1)?;
            y_faces.insert((r, j), d(lower, r, k));
        }
        for j in k + 2..=nr + 1 {
            let lower = self.build_t(d(x, r, j - 1), r, k)?;
            y_faces.insert((r, j), d(lower, r, k + 1));
        }
        for &q in &others {
            for j in 0..=n.get(q) {
                let lower = self.build_t(d(x, q, j), r, k)?;
                y_faces.insert((q, j), d(lower, r, k + 1));
            }
        }
        let y_horn = MultiHorn::from_parts(n.plus_unit(r), (r, k + 1), y_faces);
        let y = self.fill(Stage::Y, y_horn)?;

        let mut z_faces = BTreeMap::new();
        for j in 1..=k {
            z_faces.insert((r, j), self.build_t(d(x, r, j - 1), r, k - 1)?);
        }
        z_faces.insert((r, k + 1), y);
        z_faces.insert((r, k + 2), y);
        for j in k + 3..=nr + 2 {
            z_faces.insert((r, j), self.build_t(d(x, r, j - 2), r, k)?);
        }
        for &q in &others {
            for j in 0..=n.get(q) {
                z_faces.insert((q, j), self.build_t(d(x, q, j), r, k)?);
            }
        }
        let z_horn = MultiHorn::from_parts(n.plus_unit(r).plus_unit(r), (r, 0), z_faces);
        let t = self.fill(Stage::Z, z_horn)?;
        self.state.t_table.insert((x, r, k), t);
        Ok(t)
    }

    fn total_complete(&mut self, m: usize) -> bool {
        if self.state.complete_totals.contains(&m) {
            return true;
        }
        let complex = self.complex;
        let done = complex.total_level(m).iter().all(|&w| {
            let n = complex.index(w).expect("listed simplex");
            (0..n.axes()).all(|q| (0..=n.get(q)).all(|j| self.state.s(w, q, j).is_some()))
        });
        if done {
            self.state.complete_totals.insert(m);
        }
        done
    }

    /// `s_k^r x`. Needs every `s` on lower total degree and every `s_j^q x`
    /// with `(q, j) < (r, k)`.
    pub fn build_s(&mut self, x: SimplexId, r: usize, k: usize) -> Result<SimplexId> {
        if let Some(s) = self.state.s(x, r, k) {
            return Ok(s);
        }
        let n = self.index_with_headroom(x, r, k)?;
        let m = n.total();
        let earlier_done = (0..=r).all(|q| {
            let top = if q == r { k } else { n.get(q) + 1 };
            (0..top).all(|j| self.state.s(x, q, j).is_some())
        });
        if !earlier_done || (m > 0 && !self.total_complete(m - 1)) {
            return Err(Error::InductionOrder { simplex: x, index: k });
        }
        let missing = |v: SimplexId, j: usize| Error::InductionOrder { simplex: v, index: j };
        let witness = self.state.preimages(x).find(|&(q, j, _)| q < r || (q == r && j < k));
        let value = match witness {
            Some((q, j, w)) if q < r => {
                let inner = self.state.s(w, r, k).ok_or_else(|| missing(w, k))?;
                self.state.s(inner, q, j).ok_or_else(|| missing(inner, j))?
            }
            Some((_, j, w)) => {
                let inner = self.state.s(w, r, k - 1).ok_or_else(|| missing(w, k - 1))?;
                self.state.s(inner, r, j).ok_or_else(|| missing(inner, j))?
            }
            None => {
                let t = self.build_t(x, r, k)?;
                self.complex.face(t, r, 0)
            }
        };
        self.state.s_table.insert((x, r, k), value);
        self.state.image_index.entry(value).or_default().insert((r, k, x));
        Ok(value)
    }
}

#[derive(Clone, Debug)]
pub struct MultiSynthesis {
    pub simplicial: MultiSimplicialSet,
    pub state: MultiDegeneracyState,
}

pub fn synthesize_multi(complex: &MultiSemiSimplicialSet, horizon: usize) -> Result<MultiSynthesis> {
    synthesize_multi_with(complex, horizon, SynthesisOptions::default())
}

/// Builds every `s_j^q` and `T_j^q` on total degree at most `horizon`:
/// total degree ascending, then `(q, j)` lexicographic, then id ascending.
/// Simplices with `n_q < j` are skipped for that pair.
pub fn synthesize_multi_with(
    complex: &MultiSemiSimplicialSet,
    horizon: usize,
    options: SynthesisOptions,
) -> Result<MultiSynthesis> {
    if complex.truncation() < horizon + 2 {
        return Err(Error::InsufficientTruncation { horizon, truncation: complex.truncation() });
    }
    let report = validate_multi(complex);
    if !report.is_valid() {
        return Err(Error::InvalidComplex(report.violations.len()));
    }
    let mut engine = MultiSynthesizer::new(complex, options);
    for m in 0..=horizon {
        for q in 0..complex.axes() {
            for j in 0..=m {
                for &x in complex.total_level(m) {
                    if complex.index(x).expect("listed").get(q) < j {
                        continue;
                    }
                    engine.build_t(x, q, j)?;
                    engine.build_s(x, q, j)?;
                }
            }
        }
    }
    let state = engine.into_state();
    let simplicial = MultiSimplicialSet::new(complex.clone(), Some(horizon), state.s_table.clone());
    Ok(MultiSynthesis { simplicial, state })
}

/// Checks the six degeneracy identities within the horizon and the five `T`
/// identities on every entry of `t_table`. Axes in report lines count from 1.
pub fn verify_multi(result: &MultiSimplicialSet, t_table: Option<&MultiDegeneracyTable>) -> VerificationReport {
    let cx = result.base();
    let d = |v: Option<SimplexId>, p: usize, i: usize| v.and_then(|v| cx.get_face(v, p, i));
    let s = |v: Option<SimplexId>, q: usize, j: usize| v.and_then(|v| result.degeneracy(v, q, j));
    let mut report = VerificationReport::default();
    let mut directions = (0usize, 0usize);
    let mut symmetric_failures = (0usize, 0usize);

    for (n, x) in cx.iter() {
        if !result.covers(n.total()) {
            continue;
        }
        let sx_ = Some(x);
        for q in 0..n.axes() {
            for j in 0..=n.get(q) {
                let sx = s(sx_, q, j);
                let ps = |i: usize| [("q", q + 1), ("i", i), ("j", j)];
                for i in 0..j {
                    report.record(Identity::FaceBelow, x, &ps(i), d(sx, q, i), s(d(sx_, q, i), q, j - 1));
                }
                for i in [j, j + 1] {
                    report.record(Identity::FaceRetract, x, &ps(i), d(sx, q, i), sx_);
                }
                for i in j + 2..=n.get(q) + 1 {
                    report.record(Identity::FaceAbove, x, &ps(i), d(sx, q, i), s(d(sx_, q, i - 1), q, j));
                }
                for p in (0..n.axes()).filter(|&p| p != q && n.get(p) > 0) {
                    for i in 0..=n.get(p) {
                        let params = [("p", p + 1), ("i", i), ("q", q + 1), ("j", j)];
                        report.record(Identity::CrossFace, x, &params, d(sx, p, i), s(d(sx_, p, i), q, j));
                    }
                }
            }
        }
        if !result.covers(n.total() + 1) {
            continue;
        }
        for q in 0..n.axes() {
            for i in 0..=n.get(q) {
                for j in i + 1..=n.get(q) + 1 {
                    let lhs = s(s(sx_, q, i), q, j);
                    let rhs = s(s(sx_, q, j - 1), q, i);
                    report.record(Identity::DegeneracyOrder, x, &[("q", q + 1), ("i", i), ("j", j)], lhs, rhs);
                }
            }
            for p in (0..n.axes()).filter(|&p| p != q) {
                for i in 0..=n.get(p) {
                    for j in 0..=n.get(q) {
                        let lhs = s(s(sx_, q, j), p, i);
                        let rhs = s(s(sx_, p, i), q, j);
                        let before = report.violations.len();
                        let params = [("p", p + 1), ("i", i), ("q", q + 1), ("j", j)];
                        report.record(Identity::CrossDegeneracy, x, &params, lhs, rhs);
                        let failed = usize::from(report.violations.len() > before);
                        if p > q {
                            directions.0 += 1;
                            symmetric_failures.0 += failed;
                        } else {
                            directions.1 += 1;
                            symmetric_failures.1 += failed;
                        }
                    }
                }
            }
        }
    }
    // the p < q instances restate the p > q ones, so both halves must agree
    report.cross_degeneracy_directions = Some(directions);
    if directions.0 != directions.1 || symmetric_failures.0 != symmetric_failures.1 {
        let params = [("forward", directions.0), ("backward", directions.1)];
        report.record(Identity::CrossDegeneracy, SimplexId(u64::MAX), &params, None, None);
    }

    if let Some(t_table) = t_table {
        let t = |v: Option<SimplexId>, q: usize, j: usize| v.and_then(|v| t_table.get(&(v, q, j)).copied());
        for &(x, q, j) in t_table.keys() {
            let Some(n) = cx.index(x) else {
                report.record(Identity::TRetract, x, &[("q", q + 1), ("j", j)], None, Some(x));
                continue;
            };
            let sx_ = Some(x);
            let tx = t(sx_, q, j);
            let ps = |i: usize| [("q", q + 1), ("i", i), ("j", j)];
            for i in 1..=j {
                report.record(Identity::TFaceBelow, x, &ps(i), d(tx, q, i), t(d(sx_, q, i - 1), q, j - 1));
            }
            for i in j + 3..=n.get(q) + 2 {
                report.record(Identity::TFaceAbove, x, &ps(i), d(tx, q, i), t(d(sx_, q, i - 2), q, j));
            }
            report.record(Identity::TMiddle, x, &[("q", q + 1), ("j", j)], d(tx, q, j + 1), d(tx, q, j + 2));
            report.record(Identity::TRetract, x, &[("q", q + 1), ("j", j)], d(d(tx, q, j + 1), q, 0), sx_);
            for p in (0..n.axes()).filter(|&p| p != q && n.get(p) > 0) {
                for i in 0..=n.get(p) {
                    let params = [("p", p + 1), ("i", i), ("q", q + 1), ("j", j)];
                    report.record(Identity::TCrossFace, x, &params, d(tx, p, i), t(d(sx_, p, i), q, j));
                }
            }
        }
    }
    report
}

/// Injectivity of each `s_j^q`, the same-axis shared-image property, and
/// the cross-axis one: if `s_j^q w = s_i^p y` with `p != q`, then
/// `v = d_j^q y` gives `y = s_j^q v` and `w = s_i^p v`.
pub fn verify_multi_lemmas(result: &MultiSimplicialSet) -> VerificationReport {
    let cx = result.base();
    let mut report = VerificationReport::default();
    let mut image: BTreeMap<SimplexId, Vec<(usize, usize, SimplexId)>> = BTreeMap::new();
    for (&(x, q, j), &v) in result.degeneracies() {
        image.entry(v).or_default().push((q, j, x));
    }
    for (&value, pre) in &mut image {
        pre.sort();
        for &(q, j, w) in pre.iter() {
            let first = pre.iter().find(|e| (e.0, e.1) == (q, j)).map(|e| e.2);
            report.record(Identity::Injective, value, &[("q", q + 1), ("j", j)], first, Some(w));
        }
        for &(q, j, w) in pre.iter() {
            for &(p, i, y) in pre.iter() {
                let v = cx.get_face(y, q, j);
                let params = |side| [("q", q + 1), ("j", j), ("p", p + 1), ("i", i), ("side", side)];
                if p == q && j < i {
                    let lhs = v.and_then(|v| result.degeneracy(v, q, j));
                    report.record(Identity::SharedImage, value, &params(0), lhs, Some(y));
                    let lhs = v.and_then(|v| result.degeneracy(v, q, i - 1));
                    report.record(Identity::SharedImage, value, &params(1), lhs, Some(w));
                } else if p != q {
                    let lhs = v.and_then(|v| result.degeneracy(v, q, j));
                    report.record(Identity::CrossSharedImage, value, &params(0), lhs, Some(y));
                    let lhs = v.and_then(|v| result.degeneracy(v, p, i));
                    report.record(Identity::CrossSharedImage, value, &params(1), lhs, Some(w));
                }
            }
        }
    }
    report
}
