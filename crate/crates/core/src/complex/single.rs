use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Opaque identifier of a simplex, unique within one complex.
///
/// The numeric order is the order used for every deterministic tie-break
/// (filler choice, processing order inside a level).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexId(pub u64);

impl fmt::Display for SimplexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for SimplexId {
    fn from(v: u64) -> Self {
        SimplexId(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Cell {
    degree: usize,
    faces: Vec<SimplexId>,
}

/// A finite truncation of a semisimplicial set.
///
/// Levels `0..=truncation` are fully declared (possibly empty); nothing is
/// known above the truncation. Faces are stored as a dense table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiSimplicialSet {
    truncation: usize,
    levels: Vec<Vec<SimplexId>>,
    cells: BTreeMap<SimplexId, Cell>,
}

impl SemiSimplicialSet {
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Simplices of degree `n` in ascending id order. Empty above the truncation.
    pub fn level(&self, n: usize) -> &[SimplexId] {
        self.levels.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, x: SimplexId) -> Option<usize> {
        self.cells.get(&x).map(|c| c.degree)
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

    /// All face ids of `x`, `d_0 x ..= d_n x`.
    pub fn faces(&self, x: SimplexId) -> Option<&[SimplexId]> {
        self.cells.get(&x).map(|c| c.faces.as_slice())
    }

    /// `d_i x`, or `None` when `x` is unknown or `i` is out of range.
    pub fn get_face(&self, x: SimplexId, i: usize) -> Option<SimplexId> {
        self.cells.get(&x).and_then(|c| c.faces.get(i).copied())
    }

    /// `d_i x`.
    ///
    /// Panics if `x` is not in the complex or has no face `i`; use
    /// [`get_face`](Self::get_face) for untrusted input.
    pub fn face(&self, x: SimplexId, i: usize) -> SimplexId {
        match self.get_face(x, i) {
            Some(f) => f,
            None => panic!("simplex {x} has no face {i}"),
        }
    }

    /// Every simplex, ordered by degree then id.
    pub fn iter(&self) -> impl Iterator<Item = (usize, SimplexId)> + '_ {
        self.levels.iter().enumerate().flat_map(|(n, level)| level.iter().map(move |&x| (n, x)))
    }

    /// Smallest id strictly above every id in use.
    pub fn next_id(&self) -> SimplexId {
        SimplexId(self.cells.keys().next_back().map_or(0, |x| x.0 + 1))
    }
}

/// Accumulates declarations and checks them structurally on [`build`](Self::build).
///
/// Declarations may arrive in any order; the face-identity check is a
/// separate pass ([`validate`]).
#[derive(Clone, Debug)]
pub struct SemiSimplicialSetBuilder {
    truncation: usize,
    degrees: BTreeMap<SimplexId, usize>,
    faces: BTreeMap<(SimplexId, usize), SimplexId>,
}

impl SemiSimplicialSetBuilder {
    pub fn new(truncation: usize) -> Self {
        Self { truncation, degrees: BTreeMap::new(), faces: BTreeMap::new() }
    }

    pub fn simplex(&mut self, id: SimplexId, degree: usize) -> Result<&mut Self> {
        if degree > self.truncation {
            return Err(Error::DegreeAboveTruncation { id, degree, truncation: self.truncation });
        }
        if self.degrees.insert(id, degree).is_some() {
            return Err(Error::DuplicateSimplex(id));
        }
        Ok(self)
    }

    pub fn face(&mut self, id: SimplexId, i: usize, target: SimplexId) -> Result<&mut Self> {
        if self.faces.insert((id, i), target).is_some() {
            return Err(Error::DuplicateFace { simplex: id, axis: None, index: i });
        }
        Ok(self)
    }

    /// Declares a simplex with the next free id and all of its faces at once.
    pub fn push(&mut self, degree: usize, faces: &[SimplexId]) -> Result<SimplexId> {
        let id = SimplexId(self.degrees.keys().next_back().map_or(0, |x| x.0 + 1));
        self.simplex(id, degree)?;
        for (i, &f) in faces.iter().enumerate() {
            self.face(id, i, f)?;
        }
        Ok(id)
    }

    pub fn build(self) -> Result<SemiSimplicialSet> {
        let Self { truncation, degrees, faces } = self;
        for (&(id, i), &target) in &faces {
            let Some(&degree) = degrees.get(&id) else {
                return Err(Error::UnknownSimplex(id));
            };
            if degree == 0 || i > degree {
                return Err(Error::FaceIndexOutOfRange { simplex: id, axis: None, index: i });
            }
            match degrees.get(&target) {
                None => return Err(Error::DanglingFace { simplex: id, axis: None, index: i, target }),
                Some(&d) if d + 1 != degree => {
                    return Err(Error::FaceWrongDegree { simplex: id, axis: None, index: i, target })
                }
                Some(_) => {}
            }
        }
        let mut levels = vec![Vec::new(); truncation + 1];
        let mut cells = BTreeMap::new();
        for (&id, &degree) in &degrees {
            let face_count = if degree == 0 { 0 } else { degree + 1 };
            let mut fs = Vec::with_capacity(face_count);
            for i in 0..face_count {
                match faces.get(&(id, i)) {
                    Some(&t) => fs.push(t),
                    None => return Err(Error::MissingFace { simplex: id, axis: None, index: i }),
                }
            }
            levels[degree].push(id);
            cells.insert(id, Cell { degree, faces: fs });
        }
        Ok(SemiSimplicialSet { truncation, levels, cells })
    }
}

/// One failing instance of a face identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceViolation {
    /// `d_i d_j x != d_{j-1} d_i x` with `i < j`.
    Single { simplex: SimplexId, i: usize, j: usize, lhs: SimplexId, rhs: SimplexId },
    /// Same-axis version on axis `axis`.
    SameAxis { simplex: SimplexId, axis: usize, i: usize, j: usize, lhs: SimplexId, rhs: SimplexId },
    /// `d_i^p d_j^q x != d_j^q d_i^p x` with `p < q`.
    CrossAxis { simplex: SimplexId, p: usize, i: usize, q: usize, j: usize, lhs: SimplexId, rhs: SimplexId },
}

impl fmt::Display for FaceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FaceViolation::Single { simplex, i, j, lhs, rhs } => {
                write!(f, "VIOLATION face x={simplex} i={i} j={j} lhs={lhs} rhs={rhs}")
            }
            FaceViolation::SameAxis { simplex, axis, i, j, lhs, rhs } => {
                write!(f, "VIOLATION face x={simplex} p={} i={i} j={j} lhs={lhs} rhs={rhs}", axis + 1)
            }
            FaceViolation::CrossAxis { simplex, p, i, q, j, lhs, rhs } => {
                write!(f, "VIOLATION cross-face x={simplex} p={} i={i} q={} j={j} lhs={lhs} rhs={rhs}", p + 1, q + 1)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Number of identity instances evaluated.
    pub checked: usize,
    pub violations: Vec<FaceViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `d_i d_j = d_{j-1} d_i` (`i < j`) on every simplex of degree at least 2.
pub fn validate(complex: &SemiSimplicialSet) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (n, x) in complex.iter() {
        if n < 2 {
            continue;
        }
        for j in 1..=n {
            for i in 0..j {
                report.checked += 1;
                let lhs = complex.face(complex.face(x, j), i);
                let rhs = complex.face(complex.face(x, i), j - 1);
                if lhs != rhs {
                    report.violations.push(FaceViolation::Single { simplex: x, i, j, lhs, rhs });
                }
            }
        }
    }
    report
}
