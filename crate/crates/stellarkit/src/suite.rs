//! The verification suites behind `stellarkit verify` and the acceptance
//! test target: ten self-contained criteria, each with a wall-clock budget.
//! Every criterion reports pass/fail plus a short diagnostic, and the
//! randomized suite takes an explicit seed so reruns are reproducible.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::{
    self, km_combine, koszul_table, stacked_betti_closed, stacked_betti_recursive, theta,
    BettiTable, KmShift,
};
use crate::complex::SimplicialComplex;
use crate::corpus;
use crate::face::FaceSet;
use crate::fan::{build_fan, check_fan, embedded_example_p3};
use crate::hochster::betti_oracle;
use crate::homology::{is_gorenstein_star, PrimeField};
use crate::ideal::{annihilator, colon_ideal, stanley_reisner_ideal, MonomialIdeal};
use crate::io;
use crate::poly::IntPolynomial;
use crate::presentation::{
    sr_presentation, stellar_presentation, unprojection_presentation, RingPresentation,
};

/// Default seed of the randomized suite.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Names accepted by [`run_suite`], in criterion order.
pub const SUITE_NAMES: [&str; 10] = [
    "unproject-triangle",
    "annihilator-pairing",
    "subdivision-ideal",
    "stacked-triple",
    "theta-recursion",
    "km-nonminimal",
    "h-identity-random",
    "gorenstein-classifier",
    "fan-checks",
    "hilbert-consistency",
];

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub elapsed: Duration,
    pub budget: Duration,
    pub detail: String,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {:>2} {:<22} {:>9.3?} (budget {:?})",
            self.id, self.name, self.elapsed, self.budget
        );
        if !self.passed {
            line.push_str(&format!(" -- {}", self.detail));
        }
        line
    }
}

struct Check {
    failures: Vec<String>,
    count: usize,
}

impl Check {
    fn new() -> Self {
        Check {
            failures: Vec::new(),
            count: 0,
        }
    }

    fn expect(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.count += 1;
        if !ok && self.failures.len() < 8 {
            self.failures.push(message());
        }
    }

    fn report(
        self,
        id: usize,
        name: &'static str,
        started: Instant,
        budget: Duration,
    ) -> CriterionReport {
        self.report_with_elapsed(id, name, started.elapsed(), budget)
    }

    fn report_with_elapsed(
        self,
        id: usize,
        name: &'static str,
        elapsed: Duration,
        budget: Duration,
    ) -> CriterionReport {
        let mut passed = self.failures.is_empty();
        let mut detail = format!("{} checks", self.count);
        if !self.failures.is_empty() {
            detail = self.failures.join("; ");
        } else if elapsed > budget {
            passed = false;
            detail = format!("over budget: {elapsed:?}");
        }
        CriterionReport {
            id,
            name,
            passed,
            elapsed,
            budget,
            detail,
        }
    }
}

fn faces_of_dim_at_least_one(complex: &SimplicialComplex) -> Vec<FaceSet> {
    complex
        .faces()
        .into_iter()
        .filter(|f| f.len() >= 2)
        .collect()
}

/// The supports of the monomial generators of a presentation in the
/// variables `x_1..x_k` (variable index i stands for vertex i + 1).
fn monomial_supports(p: &RingPresentation) -> MonomialIdeal {
    p.monomial_generators()
        .map(|mono| {
            FaceSet::new(mono.factors().iter().map(|&(v, _)| v + 1))
                .expect("presentation variables stay within the vertex cap")
        })
        .collect()
}

/// Criterion 1: the triangle unprojection prints exactly
/// `x4*z - x1*x2, x4*x3` with `z` of degree one, and setting `z = 0`
/// recovers the Stanley-Reisner presentation of the square boundary.
pub fn criterion_unproject_triangle() -> CriterionReport {
    let budget = Duration::from_millis(1);
    let triangle = SimplicialComplex::boundary_of_simplex(3).unwrap();
    let sigma: FaceSet = [1, 2].into_iter().collect();

    // the budget covers computing and rendering the presentation; the
    // comparisons below are test apparatus
    let started = Instant::now();
    let presentation = unprojection_presentation(&triangle, sigma, PrimeField::gf2()).unwrap();
    let text = presentation.to_text();
    let elapsed = started.elapsed();

    let mut check = Check::new();
    check.expect(text == "x4*z - x1*x2, x4*x3", || {
        format!("text form was {text:?}")
    });

    let json = io::presentation_to_json(&presentation);
    let expected_json = serde_json::json!({
        "vars": [
            {"name": "x1", "deg": 1},
            {"name": "x2", "deg": 1},
            {"name": "x3", "deg": 1},
            {"name": "x4", "deg": 1},
            {"name": "z", "deg": 1}
        ],
        "gens": [
            {"bino": {"pos": [["x4", 1], ["z", 1]], "neg": [["x1", 1], ["x2", 1]]}},
            {"mono": [["x4", 1], ["x3", 1]]}
        ]
    });
    check.expect(json == expected_json, || "JSON form differs".to_string());

    let z_index = presentation.variable_index("z").unwrap();
    check.expect(presentation.variables()[z_index].degree == 1, || {
        "z does not have degree 1".to_string()
    });

    let specialized = presentation.specialize_to_zero("z").unwrap();
    let square = triangle.stellar_subdivision(sigma).unwrap();
    let square_presentation = sr_presentation(&square).unwrap();
    check.expect(specialized == square_presentation, || {
        "specializing z does not give the square boundary presentation".to_string()
    });
    check.report_with_elapsed(1, SUITE_NAMES[0], elapsed, budget)
}

/// Criterion 2: over the Gorenstein* corpus the annihilator of the
/// annihilator of `x_σ` is exactly `(x_σ)` for every face of dimension at
/// least one, while the non-Gorenstein* path yields `(x_2)` instead.
pub fn criterion_annihilator_pairing() -> CriterionReport {
    let budget = Duration::from_secs(5);
    let started = Instant::now();
    let mut check = Check::new();
    let corpus = corpus::gorenstein_corpus();
    check.expect(corpus.len() >= 10, || "corpus too small".to_string());
    for (name, complex) in &corpus {
        for sigma in faces_of_dim_at_least_one(complex) {
            let j = colon_ideal(complex, sigma).unwrap();
            let back = annihilator(complex, &j).unwrap();
            check.expect(back == MonomialIdeal::new([sigma]), || {
                format!("{name}: (0:J_sigma) = {back:?} for sigma {sigma}")
            });
        }
    }
    let path = corpus::gorenstein_counterexample();
    let sigma: FaceSet = [1, 2].into_iter().collect();
    let j = colon_ideal(&path, sigma).unwrap();
    check.expect(j == MonomialIdeal::new([[3].into_iter().collect()]), || {
        format!("counterexample J_sigma = {j:?}")
    });
    let back = annihilator(&path, &j).unwrap();
    let x2: MonomialIdeal = MonomialIdeal::new([[2usize].into_iter().collect::<FaceSet>()]);
    check.expect(back == x2, || format!("counterexample gave {back:?}"));
    check.expect(back != MonomialIdeal::new([sigma]), || {
        "counterexample unexpectedly recovered x_sigma".to_string()
    });
    check.report(2, SUITE_NAMES[1], started, budget)
}

/// Criterion 3: the stellar presentation equals the Stanley-Reisner ideal of
/// the subdivided complex, as canonical antichains, across the corpus.
pub fn criterion_subdivision_ideal() -> CriterionReport {
    let budget = Duration::from_secs(5);
    let started = Instant::now();
    let mut check = Check::new();
    for (name, complex) in corpus::gorenstein_corpus() {
        for sigma in faces_of_dim_at_least_one(&complex) {
            let p = stellar_presentation(&complex, sigma).unwrap();
            let subdivided = complex.stellar_subdivision(sigma).unwrap();
            let sr = stanley_reisner_ideal(&subdivided).unwrap();
            check.expect(monomial_supports(&p) == sr, || {
                format!("{name}: mismatch at sigma {sigma}")
            });
        }
    }
    check.report(3, SUITE_NAMES[2], started, budget)
}

fn choice_sequences(d: usize, m: usize) -> Vec<Vec<usize>> {
    let steps = m - d - 1;
    let counts: Vec<usize> = (0..steps).map(|t| (d + 1) + t * (d - 1)).collect();
    let zeros = vec![0usize; steps];
    let last: Vec<usize> = counts.iter().map(|&c| c - 1).collect();
    let modular: Vec<usize> = counts.iter().enumerate().map(|(t, &c)| (t + 1) % c).collect();
    let mut out = vec![zeros, last, modular];
    out.dedup();
    out
}

/// Criterion 4: for d in {2,3,4} and m up to d+4, the unprojection
/// recursion, the closed form and the brute-force oracle agree entry for
/// entry, for at least three different facet-choice sequences.
pub fn criterion_stacked_triple() -> CriterionReport {
    let budget = Duration::from_secs(120);
    let started = Instant::now();
    let gf2 = PrimeField::gf2();
    let mut check = Check::new();
    for d in 2..=4u32 {
        for m in (d + 2)..=(d + 4) {
            let closed = stacked_betti_closed(d, m).unwrap();
            let recursive = stacked_betti_recursive(d, m).unwrap();
            check.expect(recursive == closed, || {
                format!("recursion vs closed form differ for d={d}, m={m}")
            });
            let sequences = choice_sequences(d as usize, m as usize);
            check.expect(sequences.len() >= 3, || {
                format!("only {} choice sequences for d={d}, m={m}", sequences.len())
            });
            for choices in sequences {
                let complex =
                    SimplicialComplex::stacked(d as usize, m as usize, Some(&choices)).unwrap();
                let oracle = betti_oracle(&complex, gf2).unwrap();
                check.expect(oracle == closed, || {
                    format!("oracle differs for d={d}, m={m}, choices {choices:?}")
                });
            }
        }
    }
    check.report(4, SUITE_NAMES[3], started, budget)
}

/// Criterion 5: the θ recursion
/// `θ(d,m+1,i) = θ(d,m,i) + C(m-d,i) + θ(d,m,i-1)` holds exactly on the full
/// grid, including the boundary specializations.
pub fn criterion_theta_recursion() -> CriterionReport {
    let budget = Duration::from_secs(1);
    let started = Instant::now();
    let mut check = Check::new();
    for d in 2..=6u32 {
        for m in (d + 1)..=(d + 20) {
            for i in 1..=(m - d) {
                let lhs = theta(d, m + 1, i).unwrap();
                let rhs = theta(d, m, i).unwrap()
                    + betti::binomial((m - d) as u64, i as u64)
                    + theta(d, m, i - 1).unwrap();
                check.expect(lhs == rhs, || format!("identity fails at d={d}, m={m}, i={i}"));
            }
            check.expect(
                theta(d, m + 1, 1).unwrap() == theta(d, m, 1).unwrap() + (m - d) as u64,
                || format!("i=1 specialization fails at d={d}, m={m}"),
            );
            check.expect(
                theta(d, m + 1, m - d).unwrap() == theta(d, m, m - d - 1).unwrap() + 1,
                || format!("i=m-d specialization fails at d={d}, m={m}"),
            );
        }
    }
    check.report(5, SUITE_NAMES[4], started, budget)
}

/// Criterion 6: combining the Koszul table of the regular sequence
/// generating (I, J_σ, z) with the complete-intersection table of the
/// subdivided tetrahedron produces five generators in homological degree
/// one, strictly more than the three the minimal resolution needs.
pub fn criterion_km_nonminimal() -> CriterionReport {
    let budget = Duration::from_secs(1);
    let started = Instant::now();
    let gf2 = PrimeField::gf2();
    let mut check = Check::new();

    let complex = corpus::subdivided_tetrahedron();
    let sigma: FaceSet = [1, 2].into_iter().collect();

    // the face ring is a (3,2) complete intersection
    let b = betti_oracle(&complex, gf2).unwrap();
    let ci = BettiTable::from_entries(2, &[(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)]).unwrap();
    check.expect(b == ci, || format!("base table is {b:?}"));

    // (I, J_sigma, z) is generated by the regular sequence x3, z, x4*x5:
    // two elements of degree 1 and one of degree 2
    let j = colon_ideal(&complex, sigma).unwrap();
    check.expect(
        j == MonomialIdeal::new([[3usize].into_iter().collect::<FaceSet>()]),
        || format!("J_sigma = {j:?}"),
    );
    let a = koszul_table(3, 2).unwrap();
    let combined = km_combine(&a, &b, KmShift::new(1).unwrap()).unwrap();

    let subdivided = complex.stellar_subdivision(sigma).unwrap();
    let minimal = betti_oracle(&subdivided, gf2).unwrap();
    check.expect(minimal.rank_at(1) == 3, || {
        format!("minimal first syzygy rank is {}", minimal.rank_at(1))
    });
    check.expect(combined.rank_at(1) == 5, || {
        format!("combined first rank is {}", combined.rank_at(1))
    });
    check.expect(combined.rank_at(1) > minimal.rank_at(1), || {
        "combination is unexpectedly minimal".to_string()
    });
    check.report(6, SUITE_NAMES[5], started, budget)
}

/// A random pure complex on at most `max_m` vertices: a batch of random
/// facets of one cardinality, patched so every vertex is covered.
pub fn random_pure_complex(rng: &mut ChaCha8Rng, max_m: usize) -> SimplicialComplex {
    loop {
        let m = rng.gen_range(3..=max_m);
        let n = rng.gen_range(2..=m.min(5));
        let count = rng.gen_range(2..=12usize);
        let mut facets: Vec<FaceSet> = Vec::new();
        let random_facet_through = |rng: &mut ChaCha8Rng, fixed: Option<usize>| {
            let mut pool: Vec<usize> = (1..=m).filter(|&v| Some(v) != fixed).collect();
            let take = n - usize::from(fixed.is_some());
            for i in 0..take {
                let j = rng.gen_range(i..pool.len());
                pool.swap(i, j);
            }
            FaceSet::new(pool[..take].iter().copied().chain(fixed)).unwrap()
        };
        for _ in 0..count {
            facets.push(random_facet_through(rng, None));
        }
        let covered = facets
            .iter()
            .fold(FaceSet::EMPTY, |acc, &f| acc.union(f));
        for v in 1..=m {
            if !covered.contains(v) {
                facets.push(random_facet_through(rng, Some(v)));
            }
        }
        if let Ok(complex) = SimplicialComplex::new(m, facets) {
            return complex;
        }
    }
}

/// Criterion 7: for seeded random pure complexes, subdividing a face of
/// dimension d-1 >= 1 changes the h-polynomial by exactly
/// `(t + ... + t^(d-1)) * h(link)`.
pub fn criterion_h_identity_random(seed: u64) -> CriterionReport {
    let budget = Duration::from_secs(30);
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut check = Check::new();
    for instance in 0..100 {
        let complex = random_pure_complex(&mut rng, 10);
        let h = complex.h_polynomial().unwrap();
        for sigma in faces_of_dim_at_least_one(&complex) {
            let d = sigma.len();
            let subdivided = complex.stellar_subdivision(sigma).unwrap();
            let link = complex.link(sigma).unwrap().complex;
            let expected = &h
                + &(&IntPolynomial::geometric(1, d - 1) * &link.h_polynomial().unwrap());
            let actual = subdivided.h_polynomial().unwrap();
            check.expect(actual == expected, || {
                format!("instance {instance}: sigma {sigma} on {complex:?}")
            });
        }
    }
    check.report(7, SUITE_NAMES[6], started, budget)
}

/// Criterion 8: the classifier accepts the octahedron and all small simplex
/// boundaries and rejects the path pair, a longer path, and a book with a
/// codimension-one face in three facets, each with the empty face as the
/// canonical witness.
pub fn criterion_gorenstein_classifier() -> CriterionReport {
    let budget = Duration::from_secs(1);
    let started = Instant::now();
    let gf2 = PrimeField::gf2();
    let mut check = Check::new();
    let mut accept = vec![("octahedron".to_string(), corpus::octahedron())];
    for n in 3..=6 {
        accept.push((
            format!("boundary_of_simplex({n})"),
            SimplicialComplex::boundary_of_simplex(n).unwrap(),
        ));
    }
    for (name, complex) in accept {
        let report = is_gorenstein_star(&complex, gf2).unwrap();
        check.expect(report.is_gorenstein_star, || format!("{name} rejected"));
    }
    let reject = [
        ("two-edge path", corpus::gorenstein_counterexample()),
        ("path on 4 vertices", corpus::path(4)),
        ("three-page book", corpus::triangle_book(3)),
    ];
    for (name, complex) in reject {
        let report = is_gorenstein_star(&complex, gf2).unwrap();
        check.expect(!report.is_gorenstein_star, || format!("{name} accepted"));
        if let Some(witness) = report.witness {
            // all three are contractible, so the empty face already violates
            check.expect(witness.face == FaceSet::EMPTY, || {
                format!("{name}: witness {}", witness.face)
            });
            check.expect(
                witness.profile.dims().iter().all(|&d| d == 0),
                || format!("{name}: unexpected homology {:?}", witness.profile),
            );
        } else {
            check.expect(false, || format!("{name}: missing witness"));
        }
    }
    check.report(8, SUITE_NAMES[7], started, budget)
}

/// Criterion 9: the fan checker passes on every fan built from the corpus,
/// the non-simplicial cone count equals the number of facets containing σ,
/// and the rank-3 embedded example has its pinned shape.
pub fn criterion_fan_checks() -> CriterionReport {
    let budget = Duration::from_secs(30);
    let started = Instant::now();
    let mut check = Check::new();
    for (name, complex) in corpus::gorenstein_corpus() {
        for sigma in faces_of_dim_at_least_one(&complex) {
            let fan = build_fan(&complex, sigma).unwrap();
            check.expect(fan.cones().len() == complex.facets().len(), || {
                format!("{name}: cone count at sigma {sigma}")
            });
            let cofacets = complex
                .facets()
                .iter()
                .filter(|f| sigma.is_subset(**f))
                .count();
            check.expect(
                fan.non_simplicial_count().unwrap() == cofacets,
                || format!("{name}: non-simplicial count at sigma {sigma}"),
            );
            let verdict = check_fan(&fan).unwrap();
            check.expect(verdict.ok, || {
                format!("{name}: fan axioms fail at sigma {sigma}: {:?}", verdict.violation)
            });
        }
    }
    let embedded = embedded_example_p3();
    check.expect(embedded.cones().len() == 3, || "embedded cone count".into());
    let combo: Vec<i64> = (0..3).map(|k| [1, 0, 0][k] + [0, 1, 0][k] - [1, 1, -1][k]).collect();
    check.expect(combo == vec![0, 0, 1], || "ray relation x1+x2-z=x4".into());
    check.expect(check_fan(&embedded).unwrap().ok, || {
        "embedded example fails the checker".into()
    });
    check.report(9, SUITE_NAMES[8], started, budget)
}

/// Criterion 10: the alternating sum of the oracle table equals
/// `h(Δ, t) * (1-t)^(m-n)` for every corpus member.
pub fn criterion_hilbert_consistency() -> CriterionReport {
    let budget = Duration::from_secs(10);
    let started = Instant::now();
    let gf2 = PrimeField::gf2();
    let mut check = Check::new();
    for (name, complex) in corpus::gorenstein_corpus() {
        let table = betti_oracle(&complex, gf2).unwrap();
        let h = complex.h_polynomial().unwrap();
        let m = complex.num_vertices();
        let n = (complex.dim().unwrap() + 1) as usize;
        let expected = &h * &IntPolynomial::one_minus_t_pow(m - n);
        check.expect(table.hilbert_numerator() == expected, || {
            format!("{name}: numerator mismatch")
        });
    }
    check.report(10, SUITE_NAMES[9], started, budget)
}

/// Runs a named suite (or `"all"`). Returns `None` for unknown names.
pub fn run_suite(name: &str, seed: u64) -> Option<Vec<CriterionReport>> {
    if name == "all" {
        return Some(run_all(seed));
    }
    let index = SUITE_NAMES.iter().position(|&n| n == name)?;
    Some(vec![run_criterion(index, seed)])
}

fn run_criterion(index: usize, seed: u64) -> CriterionReport {
    match index {
        0 => criterion_unproject_triangle(),
        1 => criterion_annihilator_pairing(),
        2 => criterion_subdivision_ideal(),
        3 => criterion_stacked_triple(),
        4 => criterion_theta_recursion(),
        5 => criterion_km_nonminimal(),
        6 => criterion_h_identity_random(seed),
        7 => criterion_gorenstein_classifier(),
        8 => criterion_fan_checks(),
        9 => criterion_hilbert_consistency(),
        _ => unreachable!("criterion index"),
    }
}

/// All ten criteria in order.
pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    (0..SUITE_NAMES.len())
        .map(|i| run_criterion(i, seed))
        .collect()
}
