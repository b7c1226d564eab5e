//! Square-free monomial ideals of a face ring: the Stanley-Reisner ideal,
//! the annihilator J_σ = (0 : x_σ), and annihilators of monomial ideals.
//!
//! A square-free monomial is identified with its support, so an ideal is an
//! antichain of vertex sets. The ideal quotient of monomial ideals in a face
//! ring is again a monomial ideal, which is what makes the brute-force
//! computations below complete.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{inclusion_minimal, FaceSet};

/// An antichain of square-free monomials, canonically ordered by
/// (cardinality, lex) of the supports. The zero ideal has no generators; the
/// unit ideal is generated by the empty support (the monomial 1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    generators: Vec<FaceSet>,
}

impl MonomialIdeal {
    /// Reduces the given supports to an antichain and sorts canonically.
    pub fn new(generators: impl IntoIterator<Item = FaceSet>) -> Self {
        let gens: Vec<FaceSet> = generators.into_iter().collect();
        let mut gens = inclusion_minimal(&gens);
        gens.sort();
        MonomialIdeal { generators: gens }
    }

    pub fn zero() -> Self {
        MonomialIdeal {
            generators: Vec::new(),
        }
    }

    pub fn unit() -> Self {
        MonomialIdeal {
            generators: vec![FaceSet::EMPTY],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators == [FaceSet::EMPTY]
    }

    pub fn generators(&self) -> &[FaceSet] {
        &self.generators
    }
}

impl FromIterator<FaceSet> for MonomialIdeal {
    fn from_iter<T: IntoIterator<Item = FaceSet>>(iter: T) -> Self {
        MonomialIdeal::new(iter)
    }
}

/// The Stanley-Reisner ideal: generated by the inclusion-minimal non-faces.
///
/// A minimal non-face is a set that is not a face but all of whose proper
/// subsets are, so every one arises as `face ∪ {vertex}`; that keeps the
/// search proportional to the number of faces rather than 2^m.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let m = complex.num_vertices();
    let mut minimal: Vec<FaceSet> = Vec::new();
    for face in complex.faces() {
        for v in 1..=m {
            if face.contains(v) {
                continue;
            }
            let candidate = face.insert(v)?;
            if complex.is_face(candidate) {
                continue;
            }
            let all_subfaces = candidate
                .vertices()
                .all(|w| complex.is_face(candidate.remove(w)));
            if all_subfaces {
                minimal.push(candidate);
            }
        }
    }
    Ok(MonomialIdeal::new(minimal))
}

/// The annihilator J_σ = (0 : x_σ) of the square-free monomial with support
/// `sigma`, as a monomial ideal of the face ring. Its minimal generators are
/// the inclusion-minimal faces τ disjoint from σ with `τ ∪ σ` not a face.
pub fn colon_ideal(complex: &SimplicialComplex, sigma: FaceSet) -> Result<MonomialIdeal> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_face(sigma) {
        return Err(Error::NotAFace { face: sigma });
    }
    // faces() is sorted by cardinality, so keeping only candidates with no
    // kept subset yields exactly the inclusion-minimal ones.
    let mut gens: Vec<FaceSet> = Vec::new();
    for tau in complex.faces() {
        if !tau.is_disjoint(sigma) || complex.is_face(tau.union(sigma)) {
            continue;
        }
        if !gens.iter().any(|kept| kept.is_subset(tau)) {
            gens.push(tau);
        }
    }
    Ok(MonomialIdeal::new(gens))
}

/// The annihilator (0 : J) of a monomial ideal J of the face ring: generated
/// by the inclusion-minimal faces ρ such that `ρ ∪ τ` is a non-face for every
/// generator τ of J. The annihilator of the zero ideal is the unit ideal,
/// reported as {∅}.
pub fn annihilator(complex: &SimplicialComplex, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    for &tau in ideal.generators() {
        if !complex.is_face(tau) {
            return Err(Error::GeneratorNotAFace { face: tau });
        }
    }
    let mut gens: Vec<FaceSet> = Vec::new();
    for rho in complex.faces() {
        let kills_all = ideal
            .generators()
            .iter()
            .all(|&tau| !complex.is_face(rho.union(tau)));
        if !kills_all {
            continue;
        }
        if !gens.iter().any(|kept| kept.is_subset(rho)) {
            gens.push(rho);
        }
    }
    Ok(MonomialIdeal::new(gens))
}
