//! Reduced simplicial homology over a prime field, and the Gorenstein*
//! classifier.
//!
//! Homology dimensions come from ranks of the boundary matrices of the
//! augmented chain complex: the empty face is the single cell in degree −1
//! and every vertex maps to it, so no special augmentation handling is
//! needed. Ranks are computed by dense Gaussian elimination over GF(p),
//! which is plenty at the scale this crate targets (a few thousand faces).

use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::FaceSet;

/// A prime field GF(p) with `2 <= p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..(1u32 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// GF(2), the default field everywhere.
    pub fn gf2() -> Self {
        PrimeField { p: 2 }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField::gf2()
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    let p = p as u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dimensions of the reduced homology groups, from degree −1 up to the
/// dimension of the complex. The `{∅}` complex has profile `[1]`: one copy
/// of k in degree −1.
#[derive(Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    dims: Vec<usize>,
}

impl HomologyProfile {
    /// dim of the homology group in the given degree; 0 outside the stored
    /// range.
    pub fn dim_at(&self, degree: i64) -> usize {
        if degree < -1 {
            return 0;
        }
        self.dims
            .get((degree + 1) as usize)
            .copied()
            .unwrap_or(0)
    }

    /// Top stored degree, equal to the dimension of the complex.
    pub fn top_degree(&self) -> i64 {
        self.dims.len() as i64 - 2
    }

    /// Entries from degree −1 upwards.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// True iff the profile is a single copy of k concentrated in the top
    /// degree, like a sphere of that dimension.
    pub fn is_top_sphere_like(&self) -> bool {
        let top = self.dims.len() - 1;
        self.dims
            .iter()
            .enumerate()
            .all(|(i, &d)| if i == top { d == 1 } else { d == 0 })
    }

    /// Sum of `(-1)^i dim H_i` over all stored degrees including −1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut total = 0i64;
        for (offset, &d) in self.dims.iter().enumerate() {
            let degree = offset as i64 - 1;
            if degree % 2 == 0 {
                total += d as i64;
            } else {
                total -= d as i64;
            }
        }
        total
    }
}

impl fmt::Debug for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H~[-1..]={:?}", self.dims)
    }
}

/// Reduced homology of a non-void complex over GF(p).
pub fn reduced_homology(complex: &SimplicialComplex, field: PrimeField) -> Result<HomologyProfile> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let groups = complex.faces_by_cardinality();
    let n = groups.len() - 1; // top cardinality = dim + 1
    let counts: Vec<usize> = groups.iter().map(|g| g.len()).collect();

    // rank of the boundary map from cardinality c to cardinality c-1
    let mut ranks = vec![0usize; n + 2];
    for c in 1..=n {
        ranks[c] = boundary_rank(&groups[c - 1], &groups[c], field);
    }

    let dims = (0..=n)
        .map(|c| counts[c] - ranks[c] - ranks[c + 1])
        .collect();
    Ok(HomologyProfile { dims })
}

/// Rank over GF(p) of the boundary matrix sending faces of one cardinality
/// to their codimension-one subfaces.
fn boundary_rank(lower: &[FaceSet], upper: &[FaceSet], field: PrimeField) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let p = field.p() as u64;
    let index: HashMap<FaceSet, usize> = lower
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();
    let mut rows: Vec<Vec<u64>> = vec![vec![0; lower.len()]; upper.len()];
    for (col, &face) in upper.iter().enumerate() {
        for (position, v) in face.vertices().enumerate() {
            let sub = face.remove(v);
            let row = index[&sub];
            let sign = if position % 2 == 0 { 1 } else { p - 1 };
            rows[col][row] = sign;
        }
    }
    gf_rank(rows, p)
}

/// Gaussian elimination rank over GF(p). Consumes the matrix.
#[allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]
fn gf_rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col] % p, p);
        for c in col..ncols {
            rows[rank][c] = rows[rank][c] % p * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] % p != 0 {
                let factor = rows[r][col] % p;
                for c in col..ncols {
                    let sub = factor * rows[rank][c] % p;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid; p is prime and a nonzero mod p
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "input not invertible");
    (t.rem_euclid(p as i128)) as u64
}

/// The face whose link violates the sphere-like homology condition, with its
/// actual profile.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GorensteinWitness {
    pub face: FaceSet,
    pub link_dim: i64,
    pub profile: HomologyProfile,
}

/// Outcome of the Gorenstein* test: either every link of a face has the
/// homology of a sphere of its own dimension, or a witness shows otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GorensteinReport {
    pub is_gorenstein_star: bool,
    pub witness: Option<GorensteinWitness>,
}

/// Tests whether the complex is Gorenstein* over GF(p): for every face σ
/// (including the empty one), the link of σ must have exactly one copy of k
/// in its top degree and nothing elsewhere. On failure, the witness is the
/// first violating face in canonical (cardinality, lex) order.
pub fn is_gorenstein_star(
    complex: &SimplicialComplex,
    field: PrimeField,
) -> Result<GorensteinReport> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces = complex.faces();
    let violation = faces
        .par_iter()
        .enumerate()
        .filter_map(|(idx, &face)| {
            let link = complex
                .link(face)
                .expect("enumerated faces are faces")
                .complex;
            let profile =
                reduced_homology(&link, field).expect("links of faces are non-void");
            if profile.is_top_sphere_like() {
                None
            } else {
                Some((
                    idx,
                    GorensteinWitness {
                        face,
                        link_dim: profile.top_degree(),
                        profile,
                    },
                ))
            }
        })
        .min_by_key(|(idx, _)| *idx);
    Ok(match violation {
        None => GorensteinReport {
            is_gorenstein_star: true,
            witness: None,
        },
        Some((_, witness)) => GorensteinReport {
            is_gorenstein_star: false,
            witness: Some(witness),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn fs(v: &[usize]) -> FaceSet {
        v.iter().copied().collect()
    }

    #[test]
    fn prime_field_validation() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(2147483647).is_ok()); // 2^31 - 1 is prime
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn homology_of_spheres_and_degenerate_cases() {
        let gf2 = PrimeField::gf2();
        let triangle = SimplicialComplex::boundary_of_simplex(3).unwrap();
        assert_eq!(reduced_homology(&triangle, gf2).unwrap().dims(), &[0, 0, 1]);

        let oct = corpus::octahedron();
        assert_eq!(reduced_homology(&oct, gf2).unwrap().dims(), &[0, 0, 0, 1]);

        let s0 = SimplicialComplex::boundary_of_simplex(2).unwrap();
        let gf3 = PrimeField::new(3).unwrap();
        assert_eq!(reduced_homology(&s0, gf3).unwrap().dims(), &[0, 1]);

        let point = SimplicialComplex::new(1, [fs(&[1])]).unwrap();
        assert_eq!(reduced_homology(&point, gf2).unwrap().dims(), &[0, 0]);

        let trivial = SimplicialComplex::trivial();
        assert_eq!(reduced_homology(&trivial, gf2).unwrap().dims(), &[1]);

        assert_eq!(
            reduced_homology(&SimplicialComplex::void(), gf2),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn euler_characteristic_matches_face_counts() {
        let gf2 = PrimeField::gf2();
        for (_, complex) in corpus::gorenstein_corpus() {
            let profile = reduced_homology(&complex, gf2).unwrap();
            let f = complex.f_vector().unwrap();
            // sum over j >= 0 of (-1)^j f_j, minus 1 for the empty face
            let mut euler = -1i64;
            for (card, &count) in f.iter().enumerate().skip(1) {
                let j = card as i64 - 1;
                euler += if j % 2 == 0 { count as i64 } else { -(count as i64) };
            }
            assert_eq!(profile.reduced_euler_characteristic(), euler);
        }
    }

    #[test]
    fn gorenstein_star_accepts_spheres() {
        let gf2 = PrimeField::gf2();
        for (name, complex) in corpus::gorenstein_corpus() {
            let report = is_gorenstein_star(&complex, gf2).unwrap();
            assert!(report.is_gorenstein_star, "{name} should be Gorenstein*");
        }
        // stacked sphere triangulations a bit beyond the corpus
        for d in 2..=4usize {
            let complex = SimplicialComplex::stacked(d, d + 4, None).unwrap();
            assert!(is_gorenstein_star(&complex, gf2).unwrap().is_gorenstein_star);
        }
    }

    #[test]
    fn gorenstein_star_rejects_with_witness() {
        let gf2 = PrimeField::gf2();
        for complex in [
            corpus::gorenstein_counterexample(),
            corpus::path(4),
            corpus::triangle_book(3),
        ] {
            let report = is_gorenstein_star(&complex, gf2).unwrap();
            assert!(!report.is_gorenstein_star);
            let witness = report.witness.unwrap();
            // all three are contractible, so already the empty face violates
            assert_eq!(witness.face, FaceSet::EMPTY);
            assert!(witness.profile.dims().iter().all(|&d| d == 0));
        }
    }

    #[test]
    fn gorenstein_star_is_inherited_by_links() {
        let gf2 = PrimeField::gf2();
        for complex in [corpus::octahedron(), SimplicialComplex::stacked(3, 5, None).unwrap()] {
            assert!(is_gorenstein_star(&complex, gf2).unwrap().is_gorenstein_star);
            for face in complex.faces() {
                let link = complex.link(face).unwrap().complex;
                assert!(
                    is_gorenstein_star(&link, gf2).unwrap().is_gorenstein_star,
                    "link of {face} should stay Gorenstein*"
                );
            }
        }
    }

    #[test]
    fn gorenstein_star_implies_pure_and_two_cofacets() {
        let gf2 = PrimeField::gf2();
        for (name, complex) in corpus::gorenstein_corpus() {
            assert!(is_gorenstein_star(&complex, gf2).unwrap().is_gorenstein_star);
            assert!(complex.is_pure().unwrap(), "{name}");
            let d = complex.dim().unwrap();
            for face in complex.faces() {
                if face.dim() == d - 1 {
                    let cofacets = complex
                        .facets()
                        .iter()
                        .filter(|f| face.is_subset(**f))
                        .count();
                    assert_eq!(cofacets, 2, "{name}: codim-1 face {face}");
                }
            }
        }
    }

    #[test]
    fn homology_independent_of_characteristic_on_spheres() {
        for (_, complex) in corpus::gorenstein_corpus() {
            let base = reduced_homology(&complex, PrimeField::gf2()).unwrap();
            for p in [3u32, 5] {
                let field = PrimeField::new(p).unwrap();
                assert_eq!(reduced_homology(&complex, field).unwrap(), base);
            }
        }
    }
}
