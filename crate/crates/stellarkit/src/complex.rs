//! Abstract simplicial complexes on the vertex set {1, ..., m}.
//!
//! A complex is stored as its facet antichain, with membership of an
//! arbitrary face decided by subset tests against the facets. Construction
//! enforces the two defining conditions: every vertex in `1..=m` is a face,
//! and the face family is closed under subsets (implicitly, via the facet
//! representation).
//!
//! Two degenerate complexes are distinguished: the complex `{∅}` whose only
//! face is the empty set (it arises as, e.g., the link of a facet) and the
//! void complex with no faces at all. The void complex is accepted by
//! [`SimplicialComplex::is_face`] and [`SimplicialComplex::faces`] only;
//! every other operation rejects it with [`Error::VoidComplex`].

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::face::{inclusion_maximal, FaceSet, VertexId, MAX_VERTICES};
use crate::poly::IntPolynomial;

/// A finite abstract simplicial complex, represented by its facets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    /// Inclusion-maximal faces, sorted lexicographically.
    facets: Vec<FaceSet>,
}

/// A complex together with the map back to the vertex ids of the complex it
/// was carved out of. Links and induced subcomplexes are returned in this
/// form: the complex itself lives on `1..=k` for `k` the number of surviving
/// vertices, and `original_ids[i-1]` is the id that vertex `i` had upstairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MappedComplex {
    pub complex: SimplicialComplex,
    pub original_ids: Vec<VertexId>,
}

impl MappedComplex {
    /// Translates a face of `self.complex` back to original vertex ids.
    pub fn to_original(&self, face: FaceSet) -> FaceSet {
        face.vertices()
            .map(|v| self.original_ids[v - 1])
            .collect()
    }

    /// Translates a face given in original ids into local ids, if all its
    /// vertices survive.
    pub fn to_local(&self, face: FaceSet) -> Option<FaceSet> {
        let mut out = FaceSet::EMPTY;
        for v in face.vertices() {
            let local = self.original_ids.iter().position(|&o| o == v)? + 1;
            out = out.insert(local).ok()?;
        }
        Some(out)
    }
}

impl SimplicialComplex {
    /// Builds the complex generated by `candidate_facets` on the vertex set
    /// `{1, ..., m}`. Non-maximal candidates are absorbed. Every vertex must
    /// be covered by some facet.
    pub fn new(m: usize, candidate_facets: impl IntoIterator<Item = FaceSet>) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                requested: m,
                max: MAX_VERTICES,
            });
        }
        let candidates: Vec<FaceSet> = candidate_facets.into_iter().collect();
        let full = FaceSet::full(m)?;
        for f in &candidates {
            if !f.is_subset(full) {
                let vertex = f.difference(full).min_vertex().unwrap();
                return Err(Error::VertexOutOfRange { vertex, m });
            }
        }
        if candidates.is_empty() {
            // Only the void complex has no facets; it needs m = 0.
            if m == 0 {
                return Ok(SimplicialComplex {
                    m: 0,
                    facets: Vec::new(),
                });
            }
            return Err(Error::UncoveredVertex { vertex: 1 });
        }
        let mut facets = inclusion_maximal(&candidates);
        let covered = facets
            .iter()
            .fold(FaceSet::EMPTY, |acc, &f| acc.union(f));
        if covered != full {
            let vertex = full.difference(covered).min_vertex().unwrap();
            return Err(Error::UncoveredVertex { vertex });
        }
        facets.sort_by(FaceSet::cmp_lex);
        Ok(SimplicialComplex { m, facets })
    }

    /// The void complex: no faces at all, not even the empty one.
    pub fn void() -> Self {
        SimplicialComplex {
            m: 0,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}` whose single face is the empty set.
    pub fn trivial() -> Self {
        SimplicialComplex {
            m: 0,
            facets: vec![FaceSet::EMPTY],
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.facets == [FaceSet::EMPTY]
    }

    fn reject_void(&self) -> Result<()> {
        if self.is_void() {
            Err(Error::VoidComplex)
        } else {
            Ok(())
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.m
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[FaceSet] {
        &self.facets
    }

    /// True iff `sigma` is contained in some facet. The empty face belongs to
    /// every non-void complex.
    pub fn is_face(&self, sigma: FaceSet) -> bool {
        self.facets.iter().any(|&f| sigma.is_subset(f))
    }

    fn require_face(&self, sigma: FaceSet) -> Result<()> {
        if self.is_face(sigma) {
            Ok(())
        } else {
            Err(Error::NotAFace { face: sigma })
        }
    }

    /// All faces including the empty one, ordered by (cardinality, lex).
    /// The void complex has no faces.
    pub fn faces(&self) -> Vec<FaceSet> {
        let mut set: BTreeSet<FaceSet> = BTreeSet::new();
        for &f in &self.facets {
            set.extend(f.subsets());
        }
        set.into_iter().collect()
    }

    /// Faces grouped by cardinality: entry `k` lists the faces with `k`
    /// vertices, each group in lexicographic order.
    pub fn faces_by_cardinality(&self) -> Vec<Vec<FaceSet>> {
        let mut groups: Vec<Vec<FaceSet>> = Vec::new();
        for face in self.faces() {
            let k = face.len();
            while groups.len() <= k {
                groups.push(Vec::new());
            }
            groups[k].push(face);
        }
        groups
    }

    /// Dimension of the complex; `{∅}` has dimension −1.
    pub fn dim(&self) -> Result<i64> {
        self.reject_void()?;
        Ok(self
            .facets
            .iter()
            .map(|f| f.dim())
            .max()
            .expect("non-void complex has a facet"))
    }

    pub fn is_pure(&self) -> Result<bool> {
        self.reject_void()?;
        let first = self.facets[0].len();
        Ok(self.facets.iter().all(|f| f.len() == first))
    }

    /// `(f_{-1}, f_0, ..., f_{dim})` with `f_{-1} = 1`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        self.reject_void()?;
        let dim = self.dim()?;
        let mut counts = vec![0u64; (dim + 2) as usize];
        for face in self.faces() {
            counts[face.len()] += 1;
        }
        Ok(counts)
    }

    /// Coefficients of the h-polynomial, defined through
    /// `sum_i f_{i-1} t^i (1-t)^(n-i) = sum_i h_i t^i` with `n = dim + 1`.
    pub fn h_polynomial(&self) -> Result<IntPolynomial> {
        let f = self.f_vector()?;
        let n = f.len() - 1;
        let mut h = IntPolynomial::zero();
        for (i, &fi) in f.iter().enumerate() {
            let term = IntPolynomial::monomial(fi as i64, i);
            h = &h + &(&term * &IntPolynomial::one_minus_t_pow(n - i));
        }
        Ok(h)
    }

    /// The link of `sigma`: all faces `τ ∖ σ` for faces `τ ⊇ σ`, returned on
    /// a compacted vertex set with the id map exposed. The link of a facet is
    /// the `{∅}` complex; the link of the empty face is the complex itself.
    pub fn link(&self, sigma: FaceSet) -> Result<MappedComplex> {
        self.reject_void()?;
        self.require_face(sigma)?;
        let link_facets: Vec<FaceSet> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        // Facets of the link: the antichain property is inherited from the
        // facets of the ambient complex.
        Ok(compact(&link_facets))
    }

    /// Restriction to the vertices of `w`: all faces contained in `w`, on a
    /// compacted vertex set. Vertices of `w` outside `1..=m` are ignored.
    pub fn induced(&self, w: FaceSet) -> MappedComplex {
        let w = w.intersection(FaceSet::full(self.m).expect("m validated"));
        let restricted: Vec<FaceSet> = self.facets.iter().map(|f| f.intersection(w)).collect();
        if restricted.is_empty() {
            return MappedComplex {
                complex: SimplicialComplex::void(),
                original_ids: Vec::new(),
            };
        }
        compact(&inclusion_maximal(&restricted))
    }

    /// The stellar subdivision on a face `sigma` of dimension at least 1:
    /// faces containing `sigma` are removed and replaced by cones over the
    /// new vertex `m + 1`.
    pub fn stellar_subdivision(&self, sigma: FaceSet) -> Result<SimplicialComplex> {
        self.reject_void()?;
        self.require_face(sigma)?;
        if sigma.len() < 2 {
            return Err(Error::FaceTooSmall { face: sigma });
        }
        if self.m + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                requested: self.m + 1,
                max: MAX_VERTICES,
            });
        }
        let new_vertex = self.m + 1;
        let mut facets: Vec<FaceSet> = Vec::new();
        for &f in &self.facets {
            if sigma.is_subset(f) {
                // Maximal faces not containing sigma inside f, coned over the
                // new vertex: drop one vertex of sigma at a time.
                for v in sigma.vertices() {
                    facets.push(f.remove(v).insert(new_vertex)?);
                }
            } else {
                facets.push(f);
            }
        }
        SimplicialComplex::new(new_vertex, facets)
    }

    /// The join: disjoint vertex sets (the second complex is shifted by
    /// `self.m`), facets are pairwise unions. Joining with `{∅}` is the
    /// identity.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.reject_void()?;
        other.reject_void()?;
        let total = self.m + other.m;
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                requested: total,
                max: MAX_VERTICES,
            });
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(a.union(FaceSet::from_bits(b.bits() << self.m)));
            }
        }
        SimplicialComplex::new(total, facets)
    }

    /// Boundary of the (n−1)-simplex: all (n−1)-subsets of `{1, ..., n}`.
    pub fn boundary_of_simplex(n: usize) -> Result<SimplicialComplex> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "boundary of a simplex needs n >= 2, got {n}"
            )));
        }
        let full = FaceSet::full(n)?;
        SimplicialComplex::new(n, (1..=n).map(|v| full.remove(v)))
    }

    /// Boundary complex of a stacked polytope: starting from the boundary of
    /// the d-simplex, repeatedly subdivide a facet until there are `m`
    /// vertices. `facet_choices`, when given, selects the facet subdivided at
    /// each step by its index in the lexicographic facet order; the default
    /// takes index 0 every time.
    pub fn stacked(d: usize, m: usize, facet_choices: Option<&[usize]>) -> Result<SimplicialComplex> {
        if d < 2 {
            return Err(Error::InvalidArgument(format!(
                "stacked complexes need d >= 2, got {d}"
            )));
        }
        if m < d + 1 {
            return Err(Error::InvalidArgument(format!(
                "stacked complexes need m >= d + 1, got d={d}, m={m}"
            )));
        }
        let steps = m - d - 1;
        if let Some(choices) = facet_choices {
            if choices.len() != steps {
                return Err(Error::InvalidArgument(format!(
                    "expected {steps} facet choices for d={d}, m={m}, got {}",
                    choices.len()
                )));
            }
        }
        let mut complex = SimplicialComplex::boundary_of_simplex(d + 1)?;
        for step in 0..steps {
            let index = facet_choices.map_or(0, |c| c[step]);
            let available = complex.facets.len();
            if index >= available {
                return Err(Error::InvalidChoiceIndex {
                    position: step,
                    index,
                    available,
                });
            }
            let sigma = complex.facets[index];
            complex = complex.stellar_subdivision(sigma)?;
        }
        Ok(complex)
    }
}

/// Relabels the vertices appearing in `facets` onto `1..=k` preserving order.
fn compact(facets: &[FaceSet]) -> MappedComplex {
    let used = facets
        .iter()
        .fold(FaceSet::EMPTY, |acc, &f| acc.union(f));
    let original_ids: Vec<VertexId> = used.vertices().collect();
    let relabel = |f: FaceSet| -> FaceSet {
        f.vertices()
            .map(|v| original_ids.iter().position(|&o| o == v).unwrap() + 1)
            .collect()
    };
    let complex = SimplicialComplex::new(
        original_ids.len(),
        facets.iter().map(|&f| relabel(f)),
    )
    .expect("compacted facets cover their vertex set");
    MappedComplex {
        complex,
        original_ids,
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(m={}, facets=[", self.m)?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
