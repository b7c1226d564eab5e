//! Brute-force graded Betti numbers of a face ring, summing reduced homology
//! of induced subcomplexes over all vertex subsets:
//!
//! `b_{i,j} = sum over |W| = j of dim H~_{j-i-1}(induced complex on W)`.
//!
//! This is the ground truth every resolution-level construction in the crate
//! is checked against. The subset walk is exponential, so the vertex count
//! is capped at 24; intended use stays far below that.

use rayon::prelude::*;
use std::collections::BTreeMap;

use crate::betti::BettiTable;
use crate::complex::{MappedComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::homology::{reduced_homology, PrimeField};

/// Largest vertex count accepted by [`betti_oracle`]; 2^24 subsets is the
/// worst case that stays tractable.
pub const MAX_ORACLE_VERTICES: usize = 24;

/// Restriction of the complex to the vertex subset `w`, on a compacted
/// vertex set with the id map exposed. The empty subset yields the `{∅}`
/// complex; any other subset of a non-void complex is non-void because
/// singletons are faces.
pub fn induced_subcomplex(complex: &SimplicialComplex, w: FaceSet) -> MappedComplex {
    complex.induced(w)
}

/// The full graded Betti table of the face ring over the polynomial ring on
/// `m` degree-one variables; the length of the table is the projective
/// dimension.
pub fn betti_oracle(complex: &SimplicialComplex, field: PrimeField) -> Result<BettiTable> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let m = complex.num_vertices();
    if m > MAX_ORACLE_VERTICES {
        return Err(Error::TooManyVertices {
            requested: m,
            max: MAX_ORACLE_VERTICES,
        });
    }
    let entries = (0u64..(1u64 << m))
        .into_par_iter()
        .fold(
            BTreeMap::<(usize, usize), u64>::new,
            |mut acc, bits| {
                let w = FaceSet::from_bits(bits);
                let j = w.len();
                let induced = complex.induced(w).complex;
                let profile = reduced_homology(&induced, field)
                    .expect("induced complexes of a non-void complex are non-void");
                for (offset, &dim) in profile.dims().iter().enumerate() {
                    if dim == 0 {
                        continue;
                    }
                    let degree = offset as i64 - 1;
                    let i = (j as i64 - degree - 1) as usize;
                    *acc.entry((i, j)).or_insert(0) += dim as u64;
                }
                acc
            },
        )
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, value) in b {
                *a.entry(key).or_insert(0) += value;
            }
            a
        });
    // W = ∅ contributes H~_{-1} of {∅}, which is the (0,0) unit entry.
    assert_eq!(entries.get(&(0, 0)), Some(&1), "unit corner of the table");
    let length = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
    BettiTable::new(length, entries)
}
