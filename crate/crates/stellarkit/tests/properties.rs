//! Randomized structural properties, driven by seeds so failures replay.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use stellarkit::corpus;
use stellarkit::homology::{is_gorenstein_star, reduced_homology, PrimeField};
use stellarkit::io;
use stellarkit::poly::IntPolynomial;
use stellarkit::suite::random_pure_complex;
use stellarkit::{FaceSet, SimplicialComplex};

/// A random complex that need not be pure: random facets of mixed sizes,
/// patched so every vertex is covered.
fn random_complex(seed: u64, max_m: usize) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = rng.gen_range(3..=max_m);
        let count = rng.gen_range(1..=10usize);
        let mut facets: Vec<FaceSet> = Vec::new();
        let random_facet = |rng: &mut ChaCha8Rng, fixed: Option<usize>| {
            let size = rng.gen_range(1..=m.min(5));
            let mut pool: Vec<usize> = (1..=m).filter(|&v| Some(v) != fixed).collect();
            let take = (size - usize::from(fixed.is_some())).min(pool.len());
            for i in 0..take {
                let j = rng.gen_range(i..pool.len());
                pool.swap(i, j);
            }
            FaceSet::new(pool[..take].iter().copied().chain(fixed)).unwrap()
        };
        for _ in 0..count {
            facets.push(random_facet(&mut rng, None));
        }
        let covered = facets.iter().fold(FaceSet::EMPTY, |acc, &f| acc.union(f));
        for v in 1..=m {
            if !covered.contains(v) {
                facets.push(random_facet(&mut rng, Some(v)));
            }
        }
        if let Ok(c) = SimplicialComplex::new(m, facets) {
            return c;
        }
    }
}

/// `sum_j f_{j-1} t^j`, the generating polynomial of the face counts.
fn f_polynomial(c: &SimplicialComplex) -> IntPolynomial {
    IntPolynomial::from_coeffs(
        c.f_vector()
            .unwrap()
            .into_iter()
            .map(|x| x as i64)
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stellar_subdivision_matches_face_level_definition(seed in any::<u64>(), pick in any::<usize>()) {
        let complex = random_complex(seed, 9);
        let candidates: Vec<FaceSet> = complex
            .faces()
            .into_iter()
            .filter(|f| f.len() >= 2)
            .collect();
        prop_assume!(!candidates.is_empty());
        let sigma = candidates[pick % candidates.len()];
        let subdivided = complex.stellar_subdivision(sigma).unwrap();
        let new_vertex: FaceSet = [complex.num_vertices() + 1].into_iter().collect();

        let mut expected: BTreeSet<FaceSet> = BTreeSet::new();
        for face in complex.faces() {
            if sigma.is_subset(face) {
                continue;
            }
            expected.insert(face);
            if complex.is_face(face.union(sigma)) {
                expected.insert(face.union(new_vertex));
            }
        }
        let actual: BTreeSet<FaceSet> = subdivided.faces().into_iter().collect();
        prop_assert_eq!(actual, expected);
    }

    #[test]
    fn subdivision_h_identity_on_pure_complexes(seed in any::<u64>(), pick in any::<usize>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let complex = random_pure_complex(&mut rng, 10);
        let candidates: Vec<FaceSet> = complex
            .faces()
            .into_iter()
            .filter(|f| f.len() >= 2)
            .collect();
        prop_assume!(!candidates.is_empty());
        let sigma = candidates[pick % candidates.len()];
        let d = sigma.len();
        let link = complex.link(sigma).unwrap().complex;
        let expected = &complex.h_polynomial().unwrap()
            + &(&IntPolynomial::geometric(1, d - 1) * &link.h_polynomial().unwrap());
        let actual = complex
            .stellar_subdivision(sigma)
            .unwrap()
            .h_polynomial()
            .unwrap();
        prop_assert_eq!(actual, expected);
    }

    #[test]
    fn euler_characteristic_from_homology(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let complex = random_complex(seed, 8);
        let field = PrimeField::new(p).unwrap();
        let profile = reduced_homology(&complex, field).unwrap();
        let f = complex.f_vector().unwrap();
        let mut euler = -1i64;
        for (card, &count) in f.iter().enumerate().skip(1) {
            let j = card as i64 - 1;
            euler += if j % 2 == 0 { count as i64 } else { -(count as i64) };
        }
        prop_assert_eq!(profile.reduced_euler_characteristic(), euler);
    }

    #[test]
    fn join_face_polynomial_is_multiplicative(s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = random_complex(s1, 8);
        let b = random_complex(s2, 8);
        let joined = a.join(&b).unwrap();
        prop_assert_eq!(
            f_polynomial(&joined),
            &f_polynomial(&a) * &f_polynomial(&b)
        );
    }

    #[test]
    fn join_is_associative(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let a = random_complex(s1, 7);
        let b = random_complex(s2, 7);
        let c = random_complex(s3, 7);
        let left = a.join(&b).unwrap().join(&c).unwrap();
        let right = a.join(&b.join(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cplx_and_json_round_trips(seed in any::<u64>()) {
        let complex = random_complex(seed, 9);
        let text = io::write_cplx(&complex).unwrap();
        let reread = io::read_cplx(&text).unwrap();
        prop_assert_eq!(&reread, &complex);
        prop_assert_eq!(io::write_cplx(&reread).unwrap(), text);

        let value = io::complex_to_json(&complex);
        prop_assert_eq!(io::complex_from_json(&value).unwrap(), complex);
    }
}

#[test]
fn gorenstein_complexes_separate_faces_from_vertices() {
    // for every vertex e and face sigma avoiding it, some facet contains
    // sigma but not e
    for (name, complex) in corpus::gorenstein_corpus() {
        assert!(is_gorenstein_star(&complex, PrimeField::gf2())
            .unwrap()
            .is_gorenstein_star);
        for sigma in complex.faces() {
            for e in 1..=complex.num_vertices() {
                if sigma.contains(e) {
                    continue;
                }
                let separated = complex
                    .facets()
                    .iter()
                    .any(|f| sigma.is_subset(*f) && !f.contains(e));
                assert!(separated, "{name}: sigma {sigma}, vertex {e}");
            }
        }
    }
}
