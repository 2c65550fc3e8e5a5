use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{MultiIndex, MultiSemiSimplicialSet, SimplexId};
use crate::error::{AnyHorn, Error, Result};

/// All faces `x_i^p` but one, `(r, k)`, of a would-be simplex at multi-index `target`.
///
/// The missing slot must be an actual face: `n_r >= 1` and `k <= n_r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiHorn {
    target: MultiIndex,
    missing: (usize, usize),
    faces: BTreeMap<(usize, usize), SimplexId>,
}

impl MultiHorn {
    pub(crate) fn from_parts(
        target: MultiIndex,
        missing: (usize, usize),
        faces: BTreeMap<(usize, usize), SimplexId>,
    ) -> Self {
        Self { target, missing, faces }
    }

    pub fn target(&self) -> &MultiIndex {
        &self.target
    }

    /// `(r, k)`, axis counted from 0.
    pub fn missing(&self) -> (usize, usize) {
        self.missing
    }

    pub fn face(&self, p: usize, i: usize) -> Option<SimplexId> {
        self.faces.get(&(p, i)).copied()
    }

    /// `((p, i), x_i^p)` in lexicographic slot order.
    pub fn faces(&self) -> impl Iterator<Item = ((usize, usize), SimplexId)> + '_ {
        self.faces.iter().map(|(&k, &v)| (k, v))
    }
}

impl fmt::Display for MultiHorn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("multihorn")?;
        for v in self.target.entries() {
            write!(f, " {v}")?;
        }
        write!(f, " missing {} {} ;", self.missing.0 + 1, self.missing.1)?;
        for ((p, i), x) in self.faces() {
            write!(f, " {}:{i}:{x}", p + 1)?;
        }
        Ok(())
    }
}

/// Face slots of a simplex at `n`, lexicographic, excluding `missing`.
fn slots(n: &MultiIndex, missing: (usize, usize)) -> Vec<(usize, usize)> {
    (0..n.axes())
        .filter(|&p| n.get(p) > 0)
        .flat_map(|p| (0..=n.get(p)).map(move |i| (p, i)))
        .filter(|&s| s != missing)
        .collect()
}

/// Whether `x` may sit in slot `(q, j)` next to an already placed `y` in slot `(p, i)`,
/// where `(p, i) < (q, j)`.
fn pair_fits(
    complex: &MultiSemiSimplicialSet,
    (p, i): (usize, usize),
    y: SimplexId,
    (q, j): (usize, usize),
    x: SimplexId,
) -> bool {
    if p == q {
        // d_i^p x_j^p = d_{j-1}^p x_i^p; vacuous when the faces are vertices on this axis
        complex.get_face(x, p, i) == complex.get_face(y, p, j - 1)
    } else {
        // d_i^p x_j^q = d_j^q x_i^p
        complex.face(x, p, i) == complex.face(y, q, j)
    }
}

pub(crate) fn first_multi_incompatibility(
    complex: &MultiSemiSimplicialSet,
    horn: &MultiHorn,
) -> Option<((usize, usize), (usize, usize))> {
    let placed: Vec<_> = horn.faces().collect();
    for (b, &(sj, xj)) in placed.iter().enumerate() {
        for &(si, xi) in &placed[..b] {
            if !pair_fits(complex, si, xi, sj, xj) {
                return Some((si, sj));
            }
        }
    }
    None
}

fn check_missing(n: &MultiIndex, (r, k): (usize, usize)) -> Result<()> {
    if r >= n.axes() || n.get(r) == 0 || k > n.get(r) {
        return Err(Error::MalformedHorn(format!("({}, {k}) is not a face slot of {n}", r + 1)));
    }
    Ok(())
}

/// Builds a multi-horn from `((p, i), face)` pairs, checking arity, levels and
/// both compatibility families.
pub fn make_multi_horn(
    complex: &MultiSemiSimplicialSet,
    target: MultiIndex,
    missing: (usize, usize),
    faces: &[((usize, usize), SimplexId)],
) -> Result<MultiHorn> {
    if target.axes() != complex.axes() {
        return Err(Error::MalformedHorn(format!("multi-index {target} has wrong arity")));
    }
    check_missing(&target, missing)?;
    let wanted = slots(&target, missing);
    let mut map = BTreeMap::new();
    for &((p, i), x) in faces {
        if !wanted.contains(&(p, i)) {
            return Err(Error::MalformedHorn(format!("no face slot ({}, {i})", p + 1)));
        }
        if map.insert((p, i), x).is_some() {
            return Err(Error::MalformedHorn(format!("face slot ({}, {i}) given twice", p + 1)));
        }
        let level = target.minus_unit(p).expect("slot axis is positive");
        if complex.index(x) != Some(&level) {
            return Err(Error::MalformedHorn(format!("face {x} is not at {level}")));
        }
    }
    if let Some(&(p, i)) = wanted.iter().find(|s| !map.contains_key(s)) {
        return Err(Error::MalformedHorn(format!("face slot ({}, {i}) not given", p + 1)));
    }
    let horn = MultiHorn::from_parts(target, missing, map);
    match first_multi_incompatibility(complex, &horn) {
        Some(((p, i), (q, j))) => Err(Error::IncompatibleMultiHorn { p: p + 1, i, q: q + 1, j }),
        None => Ok(horn),
    }
}

/// Smallest-id simplex at the horn's multi-index realizing every given face.
pub fn fill_multi_horn(complex: &MultiSemiSimplicialSet, horn: &MultiHorn) -> Result<SimplexId> {
    if horn.target.total() > complex.truncation() {
        return Err(Error::BeyondTruncation { requested: horn.target.total(), truncation: complex.truncation() });
    }
    let found = complex
        .level(&horn.target)
        .iter()
        .copied()
        .find(|&x| horn.faces().all(|((p, i), f)| complex.face(x, p, i) == f));
    found.ok_or_else(|| Error::NoFiller { stage: None, horn: AnyHorn::Multi(horn.clone()) })
}

/// Backtracking enumeration of compatible multi-horns at `target` missing `(r, k)`.
pub fn for_each_compatible_multi_horn(
    complex: &MultiSemiSimplicialSet,
    target: &MultiIndex,
    missing: (usize, usize),
    mut visit: impl FnMut(&MultiHorn),
) {
    check_missing(target, missing).expect("missing slot must be a face");
    let slots = slots(target, missing);
    let levels: Vec<&[SimplexId]> =
        slots.iter().map(|&(p, _)| complex.level(&target.minus_unit(p).expect("positive axis"))).collect();
    let mut placed: Vec<((usize, usize), SimplexId)> = Vec::with_capacity(slots.len());
    assign(complex, target, missing, &slots, &levels, &mut placed, &mut visit);
}

fn assign(
    complex: &MultiSemiSimplicialSet,
    target: &MultiIndex,
    missing: (usize, usize),
    slots: &[(usize, usize)],
    levels: &[&[SimplexId]],
    placed: &mut Vec<((usize, usize), SimplexId)>,
    visit: &mut impl FnMut(&MultiHorn),
) {
    let depth = placed.len();
    if depth == slots.len() {
        let horn = MultiHorn::from_parts(target.clone(), missing, placed.iter().copied().collect());
        visit(&horn);
        return;
    }
    let slot = slots[depth];
    for &x in levels[depth] {
        if placed.iter().all(|&(s, y)| pair_fits(complex, s, y, slot, x)) {
            placed.push((slot, x));
            assign(complex, target, missing, slots, levels, placed, visit);
            placed.pop();
        }
    }
}

/// Every unfillable compatible multi-horn with total degree `1..=max_total_degree`, sorted.
pub fn check_multi_kan(complex: &MultiSemiSimplicialSet, max_total_degree: usize) -> Result<Vec<MultiHorn>> {
    if max_total_degree > complex.truncation() {
        return Err(Error::BeyondTruncation { requested: max_total_degree, truncation: complex.truncation() });
    }
    let mut unfillable = Vec::new();
    for m in 1..=max_total_degree {
        for n in MultiIndex::all_with_total(complex.axes(), m) {
            for r in (0..n.axes()).filter(|&r| n.get(r) > 0) {
                for k in 0..=n.get(r) {
                    for_each_compatible_multi_horn(complex, &n, (r, k), |h| {
                        if fill_multi_horn(complex, h).is_err() {
                            unfillable.push(h.clone());
                        }
                    });
                }
            }
        }
    }
    unfillable.sort();
    Ok(unfillable)
}
