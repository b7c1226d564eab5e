//! Exact computational toolkit for the combinatorial commutative algebra of
//! simplicial complexes: stellar subdivisions, Stanley-Reisner ideals and
//! presentations, Kustin-Miller unprojection presentations, graded Betti
//! tables with an independent brute-force oracle, and the polyhedral fans
//! attached to unprojection rings.
//!
//! Everything is exact: faces are bitsets, homology is computed over prime
//! fields, Betti tables are integer maps, and fan checks run on integer
//! linear algebra. Complexes are limited to 64 vertices.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads. A few bulk
//! operations (the Betti oracle, the Gorenstein* classifier, the fan
//! checker) evaluate their inner loops as parallel maps with deterministic
//! results; see [`configure_threads`].

pub mod betti;
pub mod complex;
pub mod corpus;
pub mod error;
mod exact;
pub mod face;
pub mod fan;
pub mod hochster;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod poly;
pub mod presentation;
pub mod suite;

pub use betti::{
    km_combine, koszul_table, stacked_betti_closed, stacked_betti_recursive, theta, BettiTable,
    KmShift,
};
pub use complex::{MappedComplex, SimplicialComplex};
pub use error::{Error, Result};
pub use face::{FaceSet, VertexId, MAX_VERTICES};
pub use fan::{build_fan, check_fan, embedded_example_p3, Cone, Fan, FanCheck, FanViolation};
pub use hochster::{betti_oracle, induced_subcomplex, MAX_ORACLE_VERTICES};
pub use homology::{
    is_gorenstein_star, reduced_homology, GorensteinReport, GorensteinWitness, HomologyProfile,
    PrimeField,
};
pub use ideal::{annihilator, colon_ideal, stanley_reisner_ideal, MonomialIdeal};
pub use poly::IntPolynomial;
pub use presentation::{
    stellar_presentation, unprojection_presentation, unprojection_presentation_deg1, Monomial,
    RingGenerator, RingPresentation, Variable,
};

/// Caps the number of worker threads used by the parallel maps. `0` or `1`
/// means fully serial. Returns false if a thread pool was already installed
/// (the setting is process-wide and can only be applied once).
pub fn configure_threads(threads: usize) -> bool {
    let threads = if threads == 0 { 1 } else { threads };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .is_ok()
}
