use std::collections::BTreeMap;
use std::fmt;

use crate::complex::SimplexId;

/// An identity the verifiers evaluate. Axis superscripts apply to the
/// multisemisimplicial variants; single-axis checks use the same names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    FaceBelow,
    FaceRetract,
    FaceAbove,
    DegeneracyOrder,
    CrossFace,
    CrossDegeneracy,
    TFaceBelow,
    TFaceAbove,
    TMiddle,
    TRetract,
    TCrossFace,
    Injective,
    SharedImage,
    CrossSharedImage,
}

impl Identity {
    /// Stable short name used in report lines.
    pub fn key(self) -> &'static str {
        match self {
            Identity::FaceBelow => "face-below",
            Identity::FaceRetract => "face-retract",
            Identity::FaceAbove => "face-above",
            Identity::DegeneracyOrder => "degeneracy-order",
            Identity::CrossFace => "cross-face",
            Identity::CrossDegeneracy => "cross-degeneracy",
            Identity::TFaceBelow => "t-face-below",
            Identity::TFaceAbove => "t-face-above",
            Identity::TMiddle => "t-middle",
            Identity::TRetract => "t-retract",
            Identity::TCrossFace => "t-cross-face",
            Identity::Injective => "injective",
            Identity::SharedImage => "shared-image",
            Identity::CrossSharedImage => "cross-shared-image",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Identity::FaceBelow => "d_i s_j = s_{j-1} d_i for i < j",
            Identity::FaceRetract => "d_i s_j x = x for i = j, j+1",
            Identity::FaceAbove => "d_i s_j = s_j d_{i-1} for i > j+1",
            Identity::DegeneracyOrder => "s_j s_i = s_i s_{j-1} for i < j",
            Identity::CrossFace => "d_i^p s_j^q = s_j^q d_i^p for p != q",
            Identity::CrossDegeneracy => "s_i^p s_j^q = s_j^q s_i^p for p != q",
            Identity::TFaceBelow => "d_i T_j = T_{j-1} d_{i-1} for 0 < i < j+1",
            Identity::TFaceAbove => "d_i T_j = T_j d_{i-2} for i > j+2",
            Identity::TMiddle => "d_{j+1} T_j = d_{j+2} T_j",
            Identity::TRetract => "d_0 d_{j+1} T_j x = x",
            Identity::TCrossFace => "d_i^p T_j^q = T_j^q d_i^p for p != q",
            Identity::Injective => "s_j w = s_j w' implies w = w'",
            Identity::SharedImage => "s_j w = s_i y, j < i: v = d_j y gives y = s_j v, w = s_{i-1} v",
            Identity::CrossSharedImage => "s_j^q w = s_i^p y, p != q: v = d_j^q y gives y = s_j^q v, w = s_i^p v",
        }
    }
}

/// One failing instance. `lhs`/`rhs` are `None` where a term is undefined
/// (missing table entry or out-of-range face).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub identity: Identity,
    pub simplex: SimplexId,
    pub params: Vec<(&'static str, usize)>,
    pub lhs: Option<SimplexId>,
    pub rhs: Option<SimplexId>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<SimplexId>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        write!(f, "VIOLATION {} x={}", self.identity.key(), self.simplex)?;
        for (name, v) in &self.params {
            write!(f, " {name}={v}")?;
        }
        write!(f, " lhs={} rhs={}", show(self.lhs), show(self.rhs))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    /// Instances evaluated per identity.
    pub checked: BTreeMap<Identity, usize>,
    pub violations: Vec<Violation>,
    /// Cross-degeneracy instances counted with `p > q` and with `p < q`.
    pub cross_degeneracy_directions: Option<(usize, usize)>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn checked(&self, identity: Identity) -> usize {
        self.checked.get(&identity).copied().unwrap_or(0)
    }

    pub fn violations_of(&self, identity: Identity) -> usize {
        self.violations.iter().filter(|v| v.identity == identity).count()
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for (k, v) in other.checked {
            *self.checked.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
        if other.cross_degeneracy_directions.is_some() {
            self.cross_degeneracy_directions = other.cross_degeneracy_directions;
        }
    }

    /// Records one instance; pushes a violation when the sides differ or either is undefined.
    pub(crate) fn record(
        &mut self,
        identity: Identity,
        simplex: SimplexId,
        params: &[(&'static str, usize)],
        lhs: Option<SimplexId>,
        rhs: Option<SimplexId>,
    ) {
        *self.checked.entry(identity).or_default() += 1;
        if lhs.is_none() || lhs != rhs {
            self.violations.push(Violation { identity, simplex, params: params.to_vec(), lhs, rhs });
        }
    }

    /// `CHECK <key> <count>` per identity, then every violation, in a fixed order.
    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self.checked.iter().map(|(k, n)| format!("CHECK {} {n}", k.key())).collect();
        out.extend(self.violations.iter().map(Violation::to_string));
        out
    }
}
