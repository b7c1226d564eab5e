//! Vertex subsets as machine-word bitsets.
//!
//! Vertices are 1-based and limited to `MAX_VERTICES`, so a face fits into a
//! single `u64`. Two orderings are used throughout the crate: plain
//! lexicographic order on the ascending vertex sequence (for facet lists), and
//! (cardinality, lexicographic) order (for face enumeration and monomial
//! ideals). The latter is the `Ord` implementation.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Hard library limit on the number of vertices of any complex.
pub const MAX_VERTICES: usize = 64;

/// 1-based vertex identifier.
pub type VertexId = usize;

/// A finite set of vertices, the combinatorial stand-in for a face or for the
/// support of a square-free monomial. The empty set is a valid face.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FaceSet(u64);

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet(0);

    /// Builds a face from 1-based vertex ids, rejecting ids outside
    /// `1..=MAX_VERTICES`.
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    m: MAX_VERTICES,
                });
            }
            bits |= 1 << (v - 1);
        }
        Ok(FaceSet(bits))
    }

    pub fn singleton(v: VertexId) -> Result<Self> {
        Self::new([v])
    }

    /// The set {1, ..., m}.
    pub fn full(m: usize) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                requested: m,
                max: MAX_VERTICES,
            });
        }
        if m == 0 {
            Ok(FaceSet(0))
        } else {
            Ok(FaceSet(u64::MAX >> (64 - m)))
        }
    }

    pub(crate) fn from_bits(bits: u64) -> Self {
        FaceSet(bits)
    }

    pub(crate) fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension of the face: |σ| − 1, so the empty face has dimension −1.
    pub fn dim(self) -> i64 {
        self.len() as i64 - 1
    }

    pub fn contains(self, v: VertexId) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: FaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 | other.0)
    }

    pub fn intersection(self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 & other.0)
    }

    pub fn difference(self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: FaceSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn insert(self, v: VertexId) -> Result<FaceSet> {
        Ok(self.union(FaceSet::singleton(v)?))
    }

    pub fn remove(self, v: VertexId) -> FaceSet {
        if (1..=MAX_VERTICES).contains(&v) {
            FaceSet(self.0 & !(1 << (v - 1)))
        } else {
            self
        }
    }

    /// Ascending vertex ids.
    pub fn vertices(self) -> impl Iterator<Item = VertexId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.vertices().collect()
    }

    pub fn min_vertex(self) -> Option<VertexId> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn max_vertex(self) -> Option<VertexId> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// All subsets, in no particular order.
    pub fn subsets(self) -> impl Iterator<Item = FaceSet> {
        let mask = self.0;
        let mut sub = mask;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = FaceSet(sub);
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & mask;
            }
            Some(out)
        })
    }

    /// Lexicographic order on the ascending vertex sequence; a prefix sorts
    /// before its extensions, e.g. {1,2} < {1,2,3} < {1,3}.
    pub fn cmp_lex(&self, other: &FaceSet) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

/// Canonical face order: by cardinality, then lexicographically.
impl Ord for FaceSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.cmp_lex(other))
    }
}

impl PartialOrd for FaceSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Panics on vertices outside `1..=MAX_VERTICES`; use [`FaceSet::new`] for
/// fallible construction.
impl FromIterator<VertexId> for FaceSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        FaceSet::new(iter).expect("vertex id out of range")
    }
}

impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

// Debug as `{1,2}` rather than a raw bit pattern; much easier to read in
// test failure output.
impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Keeps the inclusion-maximal members of `sets`, deduplicated.
pub(crate) fn inclusion_maximal(sets: &[FaceSet]) -> Vec<FaceSet> {
    let mut out: Vec<FaceSet> = Vec::new();
    let mut sorted: Vec<FaceSet> = sets.to_vec();
    sorted.sort_by_key(|f| std::cmp::Reverse(f.len()));
    for &s in &sorted {
        if !out.iter().any(|kept| s.is_subset(*kept)) {
            out.push(s);
        }
    }
    out
}

/// Keeps the inclusion-minimal members of `sets`, deduplicated.
pub(crate) fn inclusion_minimal(sets: &[FaceSet]) -> Vec<FaceSet> {
    let mut out: Vec<FaceSet> = Vec::new();
    let mut sorted: Vec<FaceSet> = sets.to_vec();
    sorted.sort();
    for &s in &sorted {
        if !out.iter().any(|kept| kept.is_subset(s)) {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(v: &[usize]) -> FaceSet {
        v.iter().copied().collect()
    }

    #[test]
    fn construction_and_membership() {
        let f = fs(&[2, 1, 5]);
        assert_eq!(f.to_vec(), vec![1, 2, 5]);
        assert_eq!(f.len(), 3);
        assert!(f.contains(5));
        assert!(!f.contains(3));
        assert!(FaceSet::new([0]).is_err());
        assert!(FaceSet::new([65]).is_err());
        assert!(FaceSet::new([64]).is_ok());
    }

    #[test]
    fn orders() {
        // lexicographic: prefix first
        assert_eq!(fs(&[1, 2]).cmp_lex(&fs(&[1, 2, 3])), Ordering::Less);
        assert_eq!(fs(&[1, 2, 3]).cmp_lex(&fs(&[1, 3])), Ordering::Less);
        // canonical: cardinality first
        assert!(fs(&[1, 3]) < fs(&[1, 2, 3]));
        assert!(fs(&[1, 4]) < fs(&[2, 3]));
        assert!(FaceSet::EMPTY < fs(&[1]));
    }

    #[test]
    fn subsets_of_triangle() {
        let f = fs(&[1, 2, 3]);
        let mut all: Vec<FaceSet> = f.subsets().collect();
        all.sort();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], FaceSet::EMPTY);
        assert_eq!(all[7], f);
    }

    #[test]
    fn maximal_and_minimal() {
        let sets = vec![fs(&[1]), fs(&[1, 2]), fs(&[2, 3]), fs(&[1, 2])];
        let mut max = inclusion_maximal(&sets);
        max.sort();
        assert_eq!(max, vec![fs(&[1, 2]), fs(&[2, 3])]);
        let mut min = inclusion_minimal(&sets);
        min.sort();
        assert_eq!(min, vec![fs(&[1]), fs(&[2, 3])]);
    }

    #[test]
    fn display() {
        assert_eq!(fs(&[1, 4, 2]).to_string(), "{1,2,4}");
        assert_eq!(FaceSet::EMPTY.to_string(), "{}");
    }
}
