use crate::complex::{SemiSimplicialSet, SemiSimplicialSetBuilder, SimplicialSet};

/// One vertex, nothing above it.
pub fn point(truncation: usize) -> SemiSimplicialSet {
    discrete(1, truncation)
}

/// `points` vertices and empty higher levels.
pub fn discrete(points: usize, truncation: usize) -> SemiSimplicialSet {
    let mut b = SemiSimplicialSetBuilder::new(truncation);
    for _ in 0..points {
        b.push(0, &[]).expect("fresh id");
    }
    b.build().expect("vertices only")
}

/// One vertex `0` and one loop `1` with both faces at the vertex.
pub fn circle(truncation: usize) -> SemiSimplicialSet {
    assert!(truncation >= 1, "the loop lives in degree 1");
    let mut b = SemiSimplicialSetBuilder::new(truncation);
    let v = b.push(0, &[]).expect("fresh id");
    b.push(1, &[v, v]).expect("fresh id");
    b.build().expect("well formed")
}

/// Drops the degeneracies.
pub fn forget_degeneracies(s: &SimplicialSet) -> SemiSimplicialSet {
    s.base().clone()
}
