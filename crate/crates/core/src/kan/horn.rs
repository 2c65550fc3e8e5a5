use std::fmt;

use crate::complex::{SemiSimplicialSet, SimplexId};
use crate::error::{AnyHorn, Error, Result};

/// All faces but one of a would-be simplex of degree `target_degree`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Horn {
    target_degree: usize,
    missing: usize,
    faces: Vec<Option<SimplexId>>,
}

impl Horn {
    /// Assembles a horn without checking it against any complex.
    pub(crate) fn from_parts(target_degree: usize, missing: usize, faces: Vec<Option<SimplexId>>) -> Self {
        debug_assert_eq!(faces.len(), target_degree + 1);
        debug_assert!(faces[missing].is_none());
        Self { target_degree, missing, faces }
    }

    pub fn target_degree(&self) -> usize {
        self.target_degree
    }

    pub fn missing(&self) -> usize {
        self.missing
    }

    /// The prescribed `i`-th face; `None` at the missing slot.
    pub fn face(&self, i: usize) -> Option<SimplexId> {
        self.faces.get(i).copied().flatten()
    }

    /// `(i, x_i)` for every prescribed face, ascending `i`.
    pub fn faces(&self) -> impl Iterator<Item = (usize, SimplexId)> + '_ {
        self.faces.iter().enumerate().filter_map(|(i, f)| f.map(|f| (i, f)))
    }
}

impl fmt::Display for Horn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "horn {} missing {} ;", self.target_degree, self.missing)?;
        for (i, x) in self.faces() {
            write!(f, " {i}:{x}")?;
        }
        Ok(())
    }
}

/// First pair `(i, j)`, `i < j`, breaking `d_i x_j = d_{j-1} x_i`, scanning `j` then `i` upward.
pub(crate) fn first_incompatibility(complex: &SemiSimplicialSet, horn: &Horn) -> Option<(usize, usize)> {
    if horn.target_degree < 2 {
        return None;
    }
    for (j, xj) in horn.faces() {
        for (i, xi) in horn.faces().take_while(|&(i, _)| i < j) {
            if complex.face(xj, i) != complex.face(xi, j - 1) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Builds a horn from `(index, face)` pairs and checks it fully against `complex`.
pub fn make_horn(
    complex: &SemiSimplicialSet,
    target_degree: usize,
    missing: usize,
    faces: &[(usize, SimplexId)],
) -> Result<Horn> {
    if target_degree == 0 {
        return Err(Error::MalformedHorn("target degree must be at least 1".into()));
    }
    if missing > target_degree {
        return Err(Error::MalformedHorn(format!("missing index {missing} above {target_degree}")));
    }
    let mut slots = vec![None; target_degree + 1];
    for &(i, x) in faces {
        if i > target_degree || i == missing {
            return Err(Error::MalformedHorn(format!("no face slot {i}")));
        }
        if slots[i].replace(x).is_some() {
            return Err(Error::MalformedHorn(format!("face slot {i} given twice")));
        }
        if complex.degree(x) != Some(target_degree - 1) {
            return Err(Error::MalformedHorn(format!("face {x} is not a simplex of degree {}", target_degree - 1)));
        }
    }
    if let Some(i) = (0..=target_degree).find(|&i| i != missing && slots[i].is_none()) {
        return Err(Error::MalformedHorn(format!("face slot {i} not given")));
    }
    let horn = Horn::from_parts(target_degree, missing, slots);
    match first_incompatibility(complex, &horn) {
        Some((i, j)) => Err(Error::IncompatibleHorn { i, j }),
        None => Ok(horn),
    }
}

/// Returns the smallest-id simplex whose faces realize `horn`.
pub fn fill_horn(complex: &SemiSimplicialSet, horn: &Horn) -> Result<SimplexId> {
    if horn.target_degree > complex.truncation() {
        return Err(Error::BeyondTruncation { requested: horn.target_degree, truncation: complex.truncation() });
    }
    let found =
        complex.level(horn.target_degree).iter().copied().find(|&x| horn.faces().all(|(i, f)| complex.face(x, i) == f));
    match found {
        Some(x) => {
            debug_assert!(horn.faces().all(|(i, f)| complex.face(x, i) == f));
            Ok(x)
        }
        None => Err(Error::NoFiller { stage: None, horn: AnyHorn::Single(horn.clone()) }),
    }
}

/// Calls `visit` on every compatible horn with the given target degree and
/// missing index, assigning faces slot by slot and pruning as soon as a
/// pair becomes incompatible. Horns arrive in lexicographic order.
pub fn for_each_compatible_horn(
    complex: &SemiSimplicialSet,
    target_degree: usize,
    missing: usize,
    mut visit: impl FnMut(&Horn),
) {
    assert!(target_degree >= 1 && missing <= target_degree);
    let slots: Vec<usize> = (0..=target_degree).filter(|&i| i != missing).collect();
    let candidates = complex.level(target_degree - 1);
    let mut horn = Horn::from_parts(target_degree, missing, vec![None; target_degree + 1]);
    assign(complex, &slots, candidates, &mut horn, &mut visit);
}

fn assign(
    complex: &SemiSimplicialSet,
    slots: &[usize],
    candidates: &[SimplexId],
    horn: &mut Horn,
    visit: &mut impl FnMut(&Horn),
) {
    let Some((&j, rest)) = slots.split_first() else {
        visit(horn);
        return;
    };
    for &x in candidates {
        let fits = horn.target_degree < 2
            || horn.faces().take_while(|&(i, _)| i < j).all(|(i, xi)| complex.face(x, i) == complex.face(xi, j - 1));
        if fits {
            horn.faces[j] = Some(x);
            assign(complex, rest, candidates, horn, visit);
            horn.faces[j] = None;
        }
    }
}

/// Every compatible horn of the given target degree, over all missing indices.
pub fn compatible_horns(complex: &SemiSimplicialSet, target_degree: usize) -> Vec<Horn> {
    let mut out = Vec::new();
    for k in 0..=target_degree {
        for_each_compatible_horn(complex, target_degree, k, |h| out.push(h.clone()));
    }
    out
}

/// Every compatible horn of target degree `1..=max_target_degree` that has
/// no filler, sorted. Empty exactly when the complex is Kan to that depth.
pub fn check_kan(complex: &SemiSimplicialSet, max_target_degree: usize) -> Result<Vec<Horn>> {
    if max_target_degree > complex.truncation() {
        return Err(Error::BeyondTruncation { requested: max_target_degree, truncation: complex.truncation() });
    }
    let mut unfillable = Vec::new();
    for t in 1..=max_target_degree {
        for k in 0..=t {
            for_each_compatible_horn(complex, t, k, |h| {
                if fill_horn(complex, h).is_err() {
                    unfillable.push(h.clone());
                }
            });
        }
    }
    unfillable.sort();
    Ok(unfillable)
}
