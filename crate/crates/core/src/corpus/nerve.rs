use crate::complex::{DegeneracyTable, SemiSimplicialSet, SemiSimplicialSetBuilder, SimplexId, SimplicialSet};

use super::group::FiniteGroupTable;

/// The nerve of a group: the bare complex plus its canonical degeneracies.
#[derive(Clone, Debug)]
pub struct Nerve {
    pub complex: SemiSimplicialSet,
    /// Degeneracies that insert the identity, total below the truncation.
    pub reference: SimplicialSet,
}

/// Numbering of group tuples: degree by degree, lexicographic inside a
/// degree (identity is 0, so the all-identity tuple comes first).
struct TupleIds {
    order: u64,
    offsets: Vec<u64>,
}

impl TupleIds {
    fn new(order: usize, truncation: usize) -> Self {
        let order = order as u64;
        let mut offsets = Vec::with_capacity(truncation + 1);
        let mut acc = 0u64;
        let mut size = 1u64;
        for _ in 0..=truncation {
            offsets.push(acc);
            acc += size;
            size *= order;
        }
        Self { order, offsets }
    }

    fn id(&self, tuple: &[usize]) -> SimplexId {
        let rank = tuple.iter().fold(0u64, |acc, &g| acc * self.order + g as u64);
        SimplexId(self.offsets[tuple.len()] + rank)
    }

    fn tuples(&self, n: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
        let count = self.order.pow(n as u32);
        (0..count).map(move |mut rank| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = (rank % self.order) as usize;
                rank /= self.order;
            }
            t
        })
    }
}

/// `d_i (g_1, .., g_n)`: drop the first entry, drop the last, or multiply neighbours.
fn face_tuple(group: &FiniteGroupTable, t: &[usize], i: usize) -> Vec<usize> {
    let n = t.len();
    if i == 0 {
        t[1..].to_vec()
    } else if i == n {
        t[..n - 1].to_vec()
    } else {
        let mut out = Vec::with_capacity(n - 1);
        out.extend_from_slice(&t[..i - 1]);
        out.push(group.mul(t[i - 1], t[i]));
        out.extend_from_slice(&t[i + 1..]);
        out
    }
}

/// Nerve of `group` truncated at degree `truncation`.
pub fn nerve(group: &FiniteGroupTable, truncation: usize) -> Nerve {
    let ids = TupleIds::new(group.order(), truncation);
    let mut b = SemiSimplicialSetBuilder::new(truncation);
    let mut reference = DegeneracyTable::new();
    for n in 0..=truncation {
        for t in ids.tuples(n) {
            let x = ids.id(&t);
            b.simplex(x, n).expect("tuple ids are distinct");
            if n > 0 {
                for i in 0..=n {
                    b.face(x, i, ids.id(&face_tuple(group, &t, i))).expect("one face per slot");
                }
            }
            if n < truncation {
                for j in 0..=n {
                    let mut s = t.clone();
                    s.insert(j, 0);
                    reference.insert((x, j), ids.id(&s));
                }
            }
        }
    }
    let complex = b.build().expect("nerve faces land one degree down");
    let reference = SimplicialSet::new(complex.clone(), truncation.checked_sub(1), reference);
    Nerve { complex, reference }
}

/// Id of the simplex `(g_1, .., g_n)` in `nerve(group, truncation)`.
pub fn nerve_simplex(group: &FiniteGroupTable, truncation: usize, tuple: &[usize]) -> SimplexId {
    TupleIds::new(group.order(), truncation).id(tuple)
}
