use std::collections::BTreeMap;

use crate::complex::{MultiIndex, MultiSemiSimplicialSet, MultiSemiSimplicialSetBuilder, SemiSimplicialSet, SimplexId};
use crate::error::{Error, Result};

/// External product `X ⊠ Y`: level `(n1, n2)` holds pairs `(a, b)` with
/// `a ∈ X_{n1}`, `b ∈ Y_{n2}`, and each axis acts on its own factor.
///
/// The result is truncated at total degree `truncation`, which defaults to
/// (and may not exceed) the smaller input truncation, so that every level
/// below it is complete. Ids are assigned level by level in multi-index
/// order and, inside a level, by `(id of a, id of b)`.
pub fn external_product(
    x: &SemiSimplicialSet,
    y: &SemiSimplicialSet,
    truncation: Option<usize>,
) -> Result<MultiSemiSimplicialSet> {
    let limit = x.truncation().min(y.truncation());
    let truncation = truncation.unwrap_or(limit);
    if truncation > limit {
        return Err(Error::BeyondTruncation { requested: truncation, truncation: limit });
    }
    let mut ids: BTreeMap<(SimplexId, SimplexId), SimplexId> = BTreeMap::new();
    let mut order = Vec::new();
    for m in 0..=truncation {
        for n in MultiIndex::all_with_total(2, m) {
            for &a in x.level(n.get(0)) {
                for &b in y.level(n.get(1)) {
                    let id = SimplexId(ids.len() as u64);
                    ids.insert((a, b), id);
                    order.push((n.clone(), a, b, id));
                }
            }
        }
    }
    let mut builder = MultiSemiSimplicialSetBuilder::new(2, truncation)?;
    for (n, a, b, id) in order {
        builder.simplex(id, n.clone())?;
        if n.get(0) > 0 {
            for (i, &fa) in x.faces(a).unwrap_or_default().iter().enumerate() {
                builder.face(id, 0, i, ids[&(fa, b)])?;
            }
        }
        if n.get(1) > 0 {
            for (i, &fb) in y.faces(b).unwrap_or_default().iter().enumerate() {
                builder.face(id, 1, i, ids[&(a, fb)])?;
            }
        }
    }
    builder.build()
}

/// Id of the pair `(a, b)` inside `external_product(x, y, truncation)`.
pub fn product_simplex(
    product: &MultiSemiSimplicialSet,
    x: &SemiSimplicialSet,
    y: &SemiSimplicialSet,
    a: SimplexId,
    b: SimplexId,
) -> Option<SimplexId> {
    let n = MultiIndex::new(vec![x.degree(a)?, y.degree(b)?]);
    let ya = y.level(n.get(1));
    let pos_a = x.level(n.get(0)).iter().position(|&v| v == a)?;
    let pos_b = ya.iter().position(|&v| v == b)?;
    product.level(&n).get(pos_a * ya.len() + pos_b).copied()
}
