//! A fixed menagerie of complexes used by the verification suites and tests.

use crate::complex::SimplicialComplex;
use crate::face::FaceSet;

fn fs(v: &[usize]) -> FaceSet {
    v.iter().copied().collect()
}

/// The k-gon: vertices 1..k with edges {i, i+1} and {1, k}. Needs k >= 3.
pub fn cycle(k: usize) -> SimplicialComplex {
    assert!(k >= 3, "a cycle needs at least 3 vertices");
    let mut facets: Vec<FaceSet> = (1..k).map(|i| fs(&[i, i + 1])).collect();
    facets.push(fs(&[1, k]));
    SimplicialComplex::new(k, facets).expect("cycle facets cover 1..=k")
}

/// Boundary of the octahedron: vertices 1..6 with opposite pairs (1,4),
/// (2,5), (3,6); the facets are the 8 triangles avoiding all three pairs.
pub fn octahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for a in [1, 4] {
        for b in [2, 5] {
            for c in [3, 6] {
                facets.push(fs(&[a, b, c]));
            }
        }
    }
    SimplicialComplex::new(6, facets).expect("octahedron facets")
}

/// The path with facets {1,2} and {1,3}. Its face ring is a hypersurface
/// (hence Gorenstein) but the complex is acyclic, so it is not Gorenstein*;
/// it is the standard counterexample for the annihilator pairing.
pub fn gorenstein_counterexample() -> SimplicialComplex {
    SimplicialComplex::new(3, [fs(&[1, 2]), fs(&[1, 3])]).expect("path facets")
}

/// A path on k vertices: 1-2-...-k.
pub fn path(k: usize) -> SimplicialComplex {
    assert!(k >= 2, "a path needs at least 2 vertices");
    SimplicialComplex::new(k, (1..k).map(|i| fs(&[i, i + 1]))).expect("path facets")
}

/// `pages` triangles glued along the common edge {1,2}; for `pages >= 3` the
/// edge lies in more than 2 facets, so the complex is not Gorenstein*.
pub fn triangle_book(pages: usize) -> SimplicialComplex {
    assert!(pages >= 1);
    SimplicialComplex::new(
        2 + pages,
        (0..pages).map(|p| fs(&[1, 2, 3 + p])),
    )
    .expect("book facets")
}

/// The subdivision of one facet of the boundary of the 3-simplex; its
/// Stanley-Reisner ideal is (x1 x2 x3, x4 x5).
pub fn subdivided_tetrahedron() -> SimplicialComplex {
    SimplicialComplex::boundary_of_simplex(4)
        .expect("boundary of 3-simplex")
        .stellar_subdivision(fs(&[1, 2, 3]))
        .expect("subdividing a facet")
}

/// The Gorenstein* corpus: simplex boundaries, the octahedron, and stacked
/// complexes for d in {2,3,4} and m up to d+3. Eleven complexes, all on at
/// most 7 vertices.
pub fn gorenstein_corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push((
            format!("boundary_of_simplex({n})"),
            SimplicialComplex::boundary_of_simplex(n).unwrap(),
        ));
    }
    out.push(("octahedron".to_string(), octahedron()));
    for d in 2..=4usize {
        for m in (d + 2)..=(d + 3) {
            out.push((
                format!("stacked({d},{m})"),
                SimplicialComplex::stacked(d, m, None).unwrap(),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shapes() {
        assert_eq!(octahedron().facets().len(), 8);
        assert_eq!(cycle(5).f_vector().unwrap(), vec![1, 5, 5]);
        assert_eq!(gorenstein_counterexample().facets().len(), 2);
        assert_eq!(triangle_book(3).facets().len(), 3);
        assert_eq!(gorenstein_corpus().len(), 11);
        assert!(gorenstein_corpus()
            .iter()
            .all(|(_, c)| c.num_vertices() <= 7));
    }

    #[test]
    fn subdivided_tetrahedron_ideal_shape() {
        let c = subdivided_tetrahedron();
        assert_eq!(c.num_vertices(), 5);
        assert_eq!(c.facets().len(), 6);
        assert!(!c.is_face(fs(&[1, 2, 3])));
        assert!(!c.is_face(fs(&[4, 5])));
    }
}
