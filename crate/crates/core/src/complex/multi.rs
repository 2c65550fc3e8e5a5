use std::collections::BTreeMap;
use std::fmt;

use super::single::{FaceViolation, SemiSimplicialSet, SemiSimplicialSetBuilder, SimplexId, ValidationReport};
use crate::error::{Error, Result};

/// An `l`-fold multi-index `(n_1, .., n_l)`. Axes are numbered from 0 in the
/// library and from 1 in every text format.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(axes: usize) -> Self {
        MultiIndex(vec![0; axes])
    }

    pub fn axes(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, p: usize) -> usize {
        self.0[p]
    }

    /// `n_1 + .. + n_l`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `n + e_p`.
    pub fn plus_unit(&self, p: usize) -> Self {
        let mut v = self.0.clone();
        v[p] += 1;
        MultiIndex(v)
    }

    /// `n - e_p`, defined only when `n_p >= 1`.
    pub fn minus_unit(&self, p: usize) -> Option<Self> {
        let mut v = self.0.clone();
        v[p] = v[p].checked_sub(1)?;
        Some(MultiIndex(v))
    }

    /// Every multi-index with `axes` entries summing to `total`, in lexicographic order.
    pub fn all_with_total(axes: usize, total: usize) -> Vec<MultiIndex> {
        fn rec(axes: usize, remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == axes {
                prefix.push(remaining);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for v in 0..=remaining {
                prefix.push(v);
                rec(axes, remaining - v, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if axes > 0 {
            rec(axes, total, &mut Vec::with_capacity(axes), &mut out);
        }
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (p, v) in self.0.iter().enumerate() {
            if p > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct MultiCell {
    index: MultiIndex,
    /// `faces[p][i] = d_i^p x`; empty when `n_p = 0`.
    faces: Vec<Vec<SimplexId>>,
}

/// A finite truncation of an `l`-fold multisemisimplicial set: every level
/// of total degree at most `truncation` is declared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSemiSimplicialSet {
    axes: usize,
    truncation: usize,
    levels: BTreeMap<MultiIndex, Vec<SimplexId>>,
    by_total: Vec<Vec<SimplexId>>,
    cells: BTreeMap<SimplexId, MultiCell>,
}

impl MultiSemiSimplicialSet {
    pub fn axes(&self) -> usize {
        self.axes
    }

    /// Maximum total degree.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn level(&self, n: &MultiIndex) -> &[SimplexId] {
        self.levels.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All simplices of total degree `m`, ascending id.
    pub fn total_level(&self, m: usize) -> &[SimplexId] {
        self.by_total.get(m).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Declared multi-indices in lexicographic order.
    pub fn multi_indices(&self) -> impl Iterator<Item = &MultiIndex> + '_ {
        self.levels.keys()
    }

    pub fn index(&self, x: SimplexId) -> Option<&MultiIndex> {
        self.cells.get(&x).map(|c| &c.index)
    }

    pub fn total_degree(&self, x: SimplexId) -> Option<usize> {
        self.index(x).map(MultiIndex::total)
    }

    pub fn contains(&self, x: SimplexId) -> bool {
        self.cells.contains_key(&x)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `d_i^p x`, or `None` when out of range.
    pub fn get_face(&self, x: SimplexId, p: usize, i: usize) -> Option<SimplexId> {
        self.cells.get(&x).and_then(|c| c.faces.get(p)).and_then(|fs| fs.get(i).copied())
    }

    /// `d_i^p x`; panics when out of range.
    pub fn face(&self, x: SimplexId, p: usize, i: usize) -> SimplexId {
        match self.get_face(x, p, i) {
            Some(f) => f,
            None => panic!("simplex {x} has no face {i} on axis {}", p + 1),
        }
    }

    /// Every simplex as `(multi-index, id)`, ordered by multi-index then id.
    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, SimplexId)> + '_ {
        self.levels.iter().flat_map(|(n, level)| level.iter().map(move |&x| (n, x)))
    }

    /// The same data viewed as a 1-fold multisemisimplicial set.
    pub fn from_single(x: &SemiSimplicialSet) -> Self {
        let mut b = MultiSemiSimplicialSetBuilder::new(1, x.truncation()).expect("one axis");
        for (n, id) in x.iter() {
            b.simplex(id, MultiIndex(vec![n])).expect("ids unique in source");
            if n > 0 {
                for (i, &f) in x.faces(id).unwrap_or_default().iter().enumerate() {
                    b.face(id, 0, i, f).expect("faces unique in source");
                }
            }
        }
        b.build().expect("source complex is structurally sound")
    }

    /// Inverse of [`from_single`](Self::from_single); `None` unless there is exactly one axis.
    pub fn to_single(&self) -> Option<SemiSimplicialSet> {
        if self.axes != 1 {
            return None;
        }
        let mut b = SemiSimplicialSetBuilder::new(self.truncation);
        for (n, id) in self.iter() {
            b.simplex(id, n.get(0)).ok()?;
            for (i, &f) in self.cells[&id].faces[0].iter().enumerate() {
                b.face(id, i, f).ok()?;
            }
        }
        b.build().ok()
    }
}

/// Total degree `|x|` of a simplex.
pub fn total_degree(x: SimplexId, complex: &MultiSemiSimplicialSet) -> Option<usize> {
    complex.total_degree(x)
}

#[derive(Clone, Debug)]
pub struct MultiSemiSimplicialSetBuilder {
    axes: usize,
    truncation: usize,
    indices: BTreeMap<SimplexId, MultiIndex>,
    faces: BTreeMap<(SimplexId, usize, usize), SimplexId>,
}

impl MultiSemiSimplicialSetBuilder {
    pub fn new(axes: usize, truncation: usize) -> Result<Self> {
        if axes == 0 {
            return Err(Error::NoAxes);
        }
        Ok(Self { axes, truncation, indices: BTreeMap::new(), faces: BTreeMap::new() })
    }

    pub fn simplex(&mut self, id: SimplexId, index: MultiIndex) -> Result<&mut Self> {
        if index.axes() != self.axes {
            return Err(Error::WrongArity { id, index, axes: self.axes });
        }
        if index.total() > self.truncation {
            return Err(Error::DegreeAboveTruncation { id, degree: index.total(), truncation: self.truncation });
        }
        if self.indices.insert(id, index).is_some() {
            return Err(Error::DuplicateSimplex(id));
        }
        Ok(self)
    }

    /// Declares `d_i^p id = target` (axis `p` counted from 0).
    pub fn face(&mut self, id: SimplexId, p: usize, i: usize, target: SimplexId) -> Result<&mut Self> {
        if self.faces.insert((id, p, i), target).is_some() {
            return Err(Error::DuplicateFace { simplex: id, axis: Some(p), index: i });
        }
        Ok(self)
    }

    /// Declares a simplex with the next free id; `faces[p]` lists `d_0^p ..= d_{n_p}^p`.
    pub fn push(&mut self, index: MultiIndex, faces: &[Vec<SimplexId>]) -> Result<SimplexId> {
        let id = SimplexId(self.indices.keys().next_back().map_or(0, |x| x.0 + 1));
        self.simplex(id, index)?;
        for (p, fs) in faces.iter().enumerate() {
            for (i, &f) in fs.iter().enumerate() {
                self.face(id, p, i, f)?;
            }
        }
        Ok(id)
    }

    pub fn build(self) -> Result<MultiSemiSimplicialSet> {
        let Self { axes, truncation, indices, faces } = self;
        for (&(id, p, i), &target) in &faces {
            let Some(index) = indices.get(&id) else {
                return Err(Error::UnknownSimplex(id));
            };
            if p >= axes || index.get(p) == 0 || i > index.get(p) {
                return Err(Error::FaceIndexOutOfRange { simplex: id, axis: Some(p), index: i });
            }
            match indices.get(&target) {
                None => return Err(Error::DanglingFace { simplex: id, axis: Some(p), index: i, target }),
                Some(t) if Some(t) != index.minus_unit(p).as_ref() => {
                    return Err(Error::FaceWrongDegree { simplex: id, axis: Some(p), index: i, target })
                }
                Some(_) => {}
            }
        }
        let mut levels: BTreeMap<MultiIndex, Vec<SimplexId>> = BTreeMap::new();
        for m in 0..=truncation {
            for n in MultiIndex::all_with_total(axes, m) {
                levels.insert(n, Vec::new());
            }
        }
        let mut by_total = vec![Vec::new(); truncation + 1];
        let mut cells = BTreeMap::new();
        for (&id, index) in &indices {
            let mut all = Vec::with_capacity(axes);
            for p in 0..axes {
                let count = if index.get(p) == 0 { 0 } else { index.get(p) + 1 };
                let mut fs = Vec::with_capacity(count);
                for i in 0..count {
                    match faces.get(&(id, p, i)) {
                        Some(&t) => fs.push(t),
                        None => return Err(Error::MissingFace { simplex: id, axis: Some(p), index: i }),
                    }
                }
                all.push(fs);
            }
            levels.get_mut(index).expect("all levels present").push(id);
            by_total[index.total()].push(id);
            cells.insert(id, MultiCell { index: index.clone(), faces: all });
        }
        Ok(MultiSemiSimplicialSet { axes, truncation, levels, by_total, cells })
    }
}

/// Checks the same-axis and cross-axis face identities on every simplex.
pub fn validate_multi(complex: &MultiSemiSimplicialSet) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (n, x) in complex.iter() {
        for p in 0..complex.axes() {
            let np = n.get(p);
            for j in 1..=np {
                for i in 0..j {
                    if np < 2 {
                        break;
                    }
                    report.checked += 1;
                    let lhs = complex.face(complex.face(x, p, j), p, i);
                    let rhs = complex.face(complex.face(x, p, i), p, j - 1);
                    if lhs != rhs {
                        report.violations.push(FaceViolation::SameAxis { simplex: x, axis: p, i, j, lhs, rhs });
                    }
                }
            }
            if np == 0 {
                continue;
            }
            for q in p + 1..complex.axes() {
                let nq = n.get(q);
                if nq == 0 {
                    continue;
                }
                for i in 0..=np {
                    for j in 0..=nq {
                        report.checked += 1;
                        let lhs = complex.face(complex.face(x, q, j), p, i);
                        let rhs = complex.face(complex.face(x, p, i), q, j);
                        if lhs != rhs {
                            report.violations.push(FaceViolation::CrossAxis { simplex: x, p, i, q, j, lhs, rhs });
                        }
                    }
                }
            }
        }
    }
    report
}
