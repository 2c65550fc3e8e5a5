use std::collections::BTreeMap;

use crate::complex::{DegeneracyTable, SemiSimplicialSet, SemiSimplicialSetBuilder, SimplexId, SimplicialSet};
use crate::error::{Error, Result};

/// A monotone surjection `λ: {0..n} -> {0..p}`, stored by its values.
///
/// `p = n` gives the identity; otherwise `λ` is a composite of degeneracies.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegeneracyOperator {
    values: Vec<usize>,
}

impl DegeneracyOperator {
    /// Checks monotonicity and surjectivity.
    pub fn new(values: Vec<usize>) -> Option<Self> {
        let ok = values.first() == Some(&0) && values.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1);
        ok.then_some(Self { values })
    }

    pub fn identity(n: usize) -> Self {
        Self { values: (0..=n).collect() }
    }

    /// Every surjection from degree `n` onto degree `p`, in lexicographic order of values.
    pub fn all(n: usize, p: usize) -> Vec<Self> {
        fn rec(n: usize, p: usize, values: &mut Vec<usize>, out: &mut Vec<DegeneracyOperator>) {
            let last = *values.last().expect("starts at 0");
            if values.len() == n + 1 {
                if last == p {
                    out.push(DegeneracyOperator { values: values.clone() });
                }
                return;
            }
            // stay, then step; steps still needed must fit in the remaining slots
            let remaining = n + 1 - values.len();
            for next in [last, last + 1] {
                if next <= p && p - next < remaining {
                    values.push(next);
                    rec(n, p, values, out);
                    values.pop();
                }
            }
        }
        if p > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        rec(n, p, &mut vec![0], &mut out);
        out
    }

    pub fn source_degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target_degree(&self) -> usize {
        *self.values.last().expect("non-empty")
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The values hit twice in a row: `{λ(i) : λ(i) = λ(i+1)}` as a sorted multiset.
    pub fn repeated_values(&self) -> Vec<usize> {
        self.values.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]).collect()
    }

    /// `λ ∘ δ_i`, normalized to `δ_c ∘ μ` when it stops being surjective.
    ///
    /// Returns `(μ, Some(c))` in that case and `(λ δ_i, None)` otherwise.
    pub fn after_coface(&self, i: usize) -> (Self, Option<usize>) {
        let mut values = self.values.clone();
        let dropped = values.remove(i);
        if values.contains(&dropped) {
            (Self { values }, None)
        } else {
            for v in values.iter_mut().filter(|v| **v > dropped) {
                *v -= 1;
            }
            (Self { values }, Some(dropped))
        }
    }

    /// `λ ∘ σ_j`: repeat the `j`-th value.
    pub fn after_codegeneracy(&self, j: usize) -> Self {
        let mut values = self.values.clone();
        values.insert(j, values[j]);
        Self { values }
    }
}

/// The free simplicial set `GY` on a semisimplicial set, truncated at `truncation`.
///
/// An `n`-simplex is a pair `(λ, y)` with `λ` a surjection from degree `n`
/// onto the degree of `y`. Faces and degeneracies act on `λ`, pushing a face
/// through to `y` whenever precomposition breaks surjectivity.
#[derive(Clone, Debug)]
pub struct FreeSimplicial {
    pub simplicial: SimplicialSet,
    /// The pair behind each generated id.
    pub pairs: BTreeMap<SimplexId, (DegeneracyOperator, SimplexId)>,
}

pub fn free_simplicial(y: &SemiSimplicialSet, truncation: usize) -> Result<FreeSimplicial> {
    if truncation > y.truncation() {
        return Err(Error::BeyondTruncation { requested: truncation, truncation: y.truncation() });
    }
    let mut ids: BTreeMap<(DegeneracyOperator, SimplexId), SimplexId> = BTreeMap::new();
    let mut pairs = BTreeMap::new();
    let mut levels: Vec<Vec<SimplexId>> = Vec::new();
    for n in 0..=truncation {
        let mut level = Vec::new();
        for p in 0..=n {
            for lambda in DegeneracyOperator::all(n, p) {
                for &base in y.level(p) {
                    let id = SimplexId(pairs.len() as u64);
                    ids.insert((lambda.clone(), base), id);
                    pairs.insert(id, (lambda.clone(), base));
                    level.push(id);
                }
            }
        }
        levels.push(level);
    }
    let mut b = SemiSimplicialSetBuilder::new(truncation);
    let mut degeneracies = DegeneracyTable::new();
    for (n, level) in levels.iter().enumerate() {
        for &x in level {
            let (lambda, base) = &pairs[&x];
            b.simplex(x, n)?;
            if n > 0 {
                for i in 0..=n {
                    let (mu, dropped) = lambda.after_coface(i);
                    let target = match dropped {
                        Some(c) => y.face(*base, c),
                        None => *base,
                    };
                    b.face(x, i, ids[&(mu, target)])?;
                }
            }
            if n < truncation {
                for j in 0..=n {
                    degeneracies.insert((x, j), ids[&(lambda.after_codegeneracy(j), *base)]);
                }
            }
        }
    }
    let simplicial = SimplicialSet::new(b.build()?, truncation.checked_sub(1), degeneracies);
    Ok(FreeSimplicial { simplicial, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjections_are_monotone_and_onto() {
        let all = DegeneracyOperator::all(3, 1);
        let got: Vec<_> = all.iter().map(|l| l.values().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 0, 0, 1], vec![0, 0, 1, 1], vec![0, 1, 1, 1]]);
        assert_eq!(DegeneracyOperator::all(2, 2), vec![DegeneracyOperator::identity(2)]);
        assert!(DegeneracyOperator::all(1, 2).is_empty());
        assert_eq!(DegeneracyOperator::new(vec![0, 0, 1, 1]).unwrap().repeated_values(), vec![0, 1]);
        assert!(DegeneracyOperator::new(vec![0, 2]).is_none());
        assert!(DegeneracyOperator::new(vec![1]).is_none());
    }

    #[test]
    fn coface_normalization() {
        let l = DegeneracyOperator::new(vec![0, 0, 1]).unwrap();
        // dropping a repeated slot keeps surjectivity
        assert_eq!(l.after_coface(0), (DegeneracyOperator::identity(1), None));
        // dropping the only preimage of 1 pushes d_1 onto the base simplex
        assert_eq!(l.after_coface(2), (DegeneracyOperator::new(vec![0, 0]).unwrap(), Some(1)));
        assert_eq!(l.after_codegeneracy(2).values(), &[0, 0, 1, 1]);
    }
}
