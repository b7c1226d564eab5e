//! Graded ring presentations built from a complex and a face: the
//! presentation of the face ring of a stellar subdivision, and the
//! unprojection presentations that extend it by a new variable.
//!
//! A presentation is a list of graded variables plus monomial and binomial
//! generators. Canonical form keeps the monomial generators reduced to a
//! divisibility antichain (binomials are never used to reduce monomials; no
//! Groebner machinery) and lists binomials first, then monomials, each group
//! sorted. Monomials remember the factor order they were built with — the
//! new variable is written first in products like `x4*x3` — while equality
//! and sorting use the exponent map, so differently-built but equal
//! presentations compare equal.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{FaceSet, MAX_VERTICES};
use crate::homology::{is_gorenstein_star, PrimeField};
use crate::ideal::{colon_ideal, stanley_reisner_ideal};

/// A graded polynomial variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
}

/// A monomial, kept as an ordered factor list `(variable index, exponent)`.
#[derive(Clone, Debug)]
pub struct Monomial {
    factors: Vec<(usize, u32)>,
}

impl Monomial {
    /// Merges repeated variables (first occurrence keeps its position) and
    /// drops zero exponents.
    pub fn new(factors: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut merged: Vec<(usize, u32)> = Vec::new();
        for (var, exp) in factors {
            if exp == 0 {
                continue;
            }
            if let Some(entry) = merged.iter_mut().find(|(v, _)| *v == var) {
                entry.1 += exp;
            } else {
                merged.push((var, exp));
            }
        }
        Monomial { factors: merged }
    }

    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    pub fn exponents(&self) -> BTreeMap<usize, u32> {
        self.factors.iter().copied().collect()
    }

    pub fn degree(&self, variables: &[Variable]) -> u64 {
        self.factors
            .iter()
            .map(|&(v, e)| variables[v].degree as u64 * e as u64)
            .sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let theirs = other.exponents();
        self.exponents()
            .iter()
            .all(|(v, e)| theirs.get(v).is_some_and(|oe| oe >= e))
    }

    pub fn mentions(&self, var: usize) -> bool {
        self.factors.iter().any(|&(v, _)| v == var)
    }

    fn remap_after_removal(&self, removed: usize) -> Monomial {
        Monomial::new(self.factors.iter().map(|&(v, e)| {
            debug_assert_ne!(v, removed);
            (if v > removed { v - 1 } else { v }, e)
        }))
    }

    fn sort_key(&self, variables: &[Variable]) -> (u64, Vec<(usize, u32)>) {
        (
            self.degree(variables),
            self.exponents().into_iter().collect(),
        )
    }

    fn render(&self, variables: &[Variable]) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    variables[v].name.clone()
                } else {
                    format!("{}^{}", variables[v].name, e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exponents() == other.exponents()
    }
}

impl Eq for Monomial {}

/// A generator of a presentation ideal: a monomial, or a difference of two
/// monomials of equal degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingGenerator {
    Monomial(Monomial),
    Binomial { positive: Monomial, negative: Monomial },
}

/// A graded presentation: variables plus generators in canonical order
/// (binomials sorted by their parts, then the monomial antichain).
#[derive(Clone, PartialEq, Eq)]
pub struct RingPresentation {
    variables: Vec<Variable>,
    generators: Vec<RingGenerator>,
}

impl RingPresentation {
    /// Builds a presentation and reduces it to canonical form.
    pub fn new(
        variables: Vec<Variable>,
        generators: impl IntoIterator<Item = RingGenerator>,
    ) -> Self {
        let mut p = RingPresentation {
            variables,
            generators: generators.into_iter().collect(),
        };
        p.canonicalize();
        p
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn generators(&self) -> &[RingGenerator] {
        &self.generators
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn monomial_generators(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().filter_map(|g| match g {
            RingGenerator::Monomial(m) => Some(m),
            RingGenerator::Binomial { .. } => None,
        })
    }

    pub fn binomial_generators(&self) -> impl Iterator<Item = (&Monomial, &Monomial)> {
        self.generators.iter().filter_map(|g| match g {
            RingGenerator::Binomial { positive, negative } => Some((positive, negative)),
            RingGenerator::Monomial(_) => None,
        })
    }

    /// Every generator homogeneous under the declared grading.
    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| match g {
            RingGenerator::Monomial(_) => true,
            RingGenerator::Binomial { positive, negative } => {
                positive.degree(&self.variables) == negative.degree(&self.variables)
            }
        })
    }

    fn canonicalize(&mut self) {
        let variables = self.variables.clone();
        let mut monomials: Vec<Monomial> = Vec::new();
        let mut binomials: Vec<(Monomial, Monomial)> = Vec::new();
        for g in self.generators.drain(..) {
            match g {
                RingGenerator::Monomial(m) => monomials.push(m),
                RingGenerator::Binomial { positive, negative } => {
                    binomials.push((positive, negative))
                }
            }
        }
        monomials.sort_by_key(|m| m.sort_key(&variables));
        let mut reduced: Vec<Monomial> = Vec::new();
        for m in monomials {
            if !reduced.iter().any(|kept| kept.divides(&m)) {
                reduced.push(m);
            }
        }
        binomials.sort_by_key(|(p, n)| (p.sort_key(&variables), n.sort_key(&variables)));
        binomials.dedup();
        self.generators = binomials
            .into_iter()
            .map(|(positive, negative)| RingGenerator::Binomial { positive, negative })
            .chain(reduced.into_iter().map(RingGenerator::Monomial))
            .collect();
    }

    /// Sets the named variable to zero: monomials containing it vanish, a
    /// binomial with exactly one part containing it degenerates to its other
    /// part, and the variable is removed from the ring.
    pub fn specialize_to_zero(&self, name: &str) -> Result<RingPresentation> {
        let removed = self
            .variable_index(name)
            .ok_or_else(|| Error::UnknownVariable {
                name: name.to_string(),
            })?;
        let variables: Vec<Variable> = self
            .variables
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != removed)
            .map(|(_, v)| v.clone())
            .collect();
        let generators = self.generators.iter().filter_map(|g| match g {
            RingGenerator::Monomial(m) => {
                if m.mentions(removed) {
                    None
                } else {
                    Some(RingGenerator::Monomial(m.remap_after_removal(removed)))
                }
            }
            RingGenerator::Binomial { positive, negative } => {
                match (positive.mentions(removed), negative.mentions(removed)) {
                    (true, true) => None,
                    (true, false) => Some(RingGenerator::Monomial(
                        negative.remap_after_removal(removed),
                    )),
                    (false, true) => Some(RingGenerator::Monomial(
                        positive.remap_after_removal(removed),
                    )),
                    (false, false) => Some(RingGenerator::Binomial {
                        positive: positive.remap_after_removal(removed),
                        negative: negative.remap_after_removal(removed),
                    }),
                }
            }
        });
        Ok(RingPresentation::new(variables, generators))
    }

    /// Renders like `x4*z - x1*x2, x4*x3`.
    pub fn to_text(&self) -> String {
        self.generators
            .iter()
            .map(|g| match g {
                RingGenerator::Monomial(m) => m.render(&self.variables),
                RingGenerator::Binomial { positive, negative } => format!(
                    "{} - {}",
                    positive.render(&self.variables),
                    negative.render(&self.variables)
                ),
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Debug for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = self
            .variables
            .iter()
            .map(|v| format!("{}:{}", v.name, v.degree))
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "k[{}] / ({})", vars, self.to_text())
    }
}

fn degree_one_vars(count: usize) -> Vec<Variable> {
    (1..=count)
        .map(|i| Variable {
            name: format!("x{i}"),
            degree: 1,
        })
        .collect()
}

/// Monomial with the ascending vertices of a face, `x_i` at index `i - 1`.
fn face_monomial(face: FaceSet) -> Monomial {
    Monomial::new(face.vertices().map(|v| (v - 1, 1)))
}

/// The product `x_{m+1} * x_τ`, new variable first.
fn cone_monomial(m: usize, tau: FaceSet) -> Monomial {
    Monomial::new(
        std::iter::once((m, 1)).chain(tau.vertices().map(|v| (v - 1, 1))),
    )
}

fn check_subdivision_face(complex: &SimplicialComplex, sigma: FaceSet) -> Result<()> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_face(sigma) {
        return Err(Error::NotAFace { face: sigma });
    }
    if sigma.len() < 2 {
        return Err(Error::FaceTooSmall { face: sigma });
    }
    if complex.num_vertices() + 1 > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            requested: complex.num_vertices() + 1,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// The plain Stanley-Reisner presentation of a complex: variables
/// `x_1..x_m` of degree one and the minimal non-face monomials.
pub fn sr_presentation(complex: &SimplicialComplex) -> Result<RingPresentation> {
    let sr = stanley_reisner_ideal(complex)?;
    let gens = sr
        .generators()
        .iter()
        .map(|&g| RingGenerator::Monomial(face_monomial(g)));
    Ok(RingPresentation::new(
        degree_one_vars(complex.num_vertices()),
        gens,
    ))
}

/// The presentation of the face ring of the stellar subdivision on `sigma`,
/// written on the original variables plus `x_{m+1}`: the Stanley-Reisner
/// generators together with `x_σ` and `x_{m+1} u_i` for the generators `u_i`
/// of the annihilator of `x_σ`, reduced to an antichain. The result equals
/// the Stanley-Reisner ideal of the subdivided complex.
pub fn stellar_presentation(
    complex: &SimplicialComplex,
    sigma: FaceSet,
) -> Result<RingPresentation> {
    check_subdivision_face(complex, sigma)?;
    let m = complex.num_vertices();
    let sr = stanley_reisner_ideal(complex)?;
    let ann = colon_ideal(complex, sigma)?;
    let gens = sr
        .generators()
        .iter()
        .map(|&g| face_monomial(g))
        .chain(std::iter::once(face_monomial(sigma)))
        .chain(ann.generators().iter().map(|&t| cone_monomial(m, t)))
        .map(RingGenerator::Monomial);
    Ok(RingPresentation::new(degree_one_vars(m + 1), gens))
}

fn unprojection_core(
    complex: &SimplicialComplex,
    sigma: FaceSet,
    field: PrimeField,
    degree_one_z: bool,
) -> Result<RingPresentation> {
    check_subdivision_face(complex, sigma)?;
    let report = is_gorenstein_star(complex, field)?;
    if !report.is_gorenstein_star {
        return Err(Error::NotGorensteinStar {
            p: field.p(),
            witness: report.witness.expect("failure carries a witness").face,
        });
    }
    let m = complex.num_vertices();
    let d = sigma.len();
    let sr = stanley_reisner_ideal(complex)?;
    let ann = colon_ideal(complex, sigma)?;

    let mut variables = degree_one_vars(m + 1);
    let z_indices: Vec<usize> = if degree_one_z {
        (1..d)
            .map(|j| {
                variables.push(Variable {
                    name: format!("z{j}"),
                    degree: 1,
                });
                variables.len() - 1
            })
            .collect()
    } else {
        variables.push(Variable {
            name: "z".to_string(),
            degree: (d - 1) as u32,
        });
        vec![variables.len() - 1]
    };

    // x_σ absorbs every Stanley-Reisner generator it divides: such a
    // generator is x_ρ x_σ with ρ ∪ σ a non-face, hence ρ lands in the
    // annihilator of x_σ and the generator is already implied.
    let monomials = sr
        .generators()
        .iter()
        .filter(|g| !sigma.is_subset(**g))
        .map(|&g| face_monomial(g))
        .chain(ann.generators().iter().map(|&t| cone_monomial(m, t)))
        .map(RingGenerator::Monomial);

    let positive = Monomial::new(
        std::iter::once((m, 1)).chain(z_indices.iter().map(|&z| (z, 1))),
    );
    let relation = RingGenerator::Binomial {
        positive,
        negative: face_monomial(sigma),
    };

    Ok(RingPresentation::new(
        variables,
        std::iter::once(relation).chain(monomials),
    ))
}

/// The unprojection presentation: variables `x_1..x_{m+1}` of degree 1 and
/// `z` of degree `|σ| - 1`, with the relation `x_{m+1} z - x_σ` alongside the
/// Stanley-Reisner and annihilator generators. Requires the complex to be
/// Gorenstein* over the given field.
pub fn unprojection_presentation(
    complex: &SimplicialComplex,
    sigma: FaceSet,
    field: PrimeField,
) -> Result<RingPresentation> {
    unprojection_core(complex, sigma, field, false)
}

/// The variant in the standard grading: `z` is replaced by degree-one
/// variables `z_1, ..., z_{d-1}` and the relation becomes
/// `x_{m+1} z_1 ... z_{d-1} - x_σ`.
pub fn unprojection_presentation_deg1(
    complex: &SimplicialComplex,
    sigma: FaceSet,
    field: PrimeField,
) -> Result<RingPresentation> {
    unprojection_core(complex, sigma, field, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ideal::MonomialIdeal;

    fn fs(v: &[usize]) -> FaceSet {
        v.iter().copied().collect()
    }

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::boundary_of_simplex(3).unwrap()
    }

    fn monomial_supports(p: &RingPresentation) -> MonomialIdeal {
        p.monomial_generators()
            .map(|mono| {
                FaceSet::new(mono.factors().iter().map(|&(v, _)| v + 1)).unwrap()
            })
            .collect()
    }

    #[test]
    fn stellar_presentation_triangle() {
        let p = stellar_presentation(&triangle(), fs(&[1, 2])).unwrap();
        assert_eq!(p.variables().len(), 4);
        assert_eq!(p.to_text(), "x1*x2, x4*x3");
        // the big Stanley-Reisner generator x1*x2*x3 was absorbed by x1*x2
        assert_eq!(p.generators().len(), 2);
    }

    #[test]
    fn stellar_presentation_tetrahedron() {
        let c = SimplicialComplex::boundary_of_simplex(4).unwrap();
        let p = stellar_presentation(&c, fs(&[1, 2])).unwrap();
        assert_eq!(
            monomial_supports(&p),
            MonomialIdeal::new([fs(&[1, 2]), fs(&[3, 4, 5])])
        );
    }

    #[test]
    fn stellar_presentation_needs_three_generators() {
        let c = corpus::subdivided_tetrahedron();
        let p = stellar_presentation(&c, fs(&[1, 2])).unwrap();
        assert_eq!(p.generators().len(), 3);
        assert_eq!(
            monomial_supports(&p),
            MonomialIdeal::new([fs(&[1, 2]), fs(&[4, 5]), fs(&[3, 6])])
        );
    }

    #[test]
    fn stellar_presentation_matches_subdivided_ideal() {
        // identity of antichains on a few corpus members, all faces of dim >= 1
        for (_, complex) in corpus::gorenstein_corpus() {
            if complex.num_vertices() > 6 {
                continue;
            }
            for sigma in complex.faces() {
                if sigma.len() < 2 {
                    continue;
                }
                let p = stellar_presentation(&complex, sigma).unwrap();
                let subdivided = complex.stellar_subdivision(sigma).unwrap();
                let sr = stanley_reisner_ideal(&subdivided).unwrap();
                assert_eq!(monomial_supports(&p), sr);
            }
        }
    }

    #[test]
    fn unprojection_triangle_is_the_pinned_example() {
        let p = unprojection_presentation(&triangle(), fs(&[1, 2]), PrimeField::gf2()).unwrap();
        assert_eq!(p.to_text(), "x4*z - x1*x2, x4*x3");
        let z = &p.variables()[p.variable_index("z").unwrap()];
        assert_eq!(z.degree, 1);
        assert!(p.is_homogeneous());

        let specialized = p.specialize_to_zero("z").unwrap();
        assert_eq!(specialized, stellar_presentation(&triangle(), fs(&[1, 2])).unwrap());
        // and that is the Stanley-Reisner presentation of the square boundary
        let square = triangle().stellar_subdivision(fs(&[1, 2])).unwrap();
        assert_eq!(specialized, sr_presentation(&square).unwrap());
    }

    #[test]
    fn unprojection_octahedron() {
        let oct = corpus::octahedron();
        let p = unprojection_presentation(&oct, fs(&[1, 2]), PrimeField::gf2()).unwrap();
        assert_eq!(
            p.to_text(),
            "x7*z - x1*x2, x1*x4, x2*x5, x3*x6, x7*x4, x7*x5"
        );
        assert!(p.is_homogeneous());
    }

    #[test]
    fn unprojection_rejects_non_gorenstein() {
        let path = corpus::gorenstein_counterexample();
        assert_eq!(
            unprojection_presentation(&path, fs(&[1, 2]), PrimeField::gf2()),
            Err(Error::NotGorensteinStar {
                p: 2,
                witness: FaceSet::EMPTY
            })
        );
    }

    #[test]
    fn deg1_equals_plain_when_sigma_is_an_edge() {
        let oct = corpus::octahedron();
        let plain = unprojection_presentation(&oct, fs(&[1, 2]), PrimeField::gf2()).unwrap();
        let deg1 =
            unprojection_presentation_deg1(&oct, fs(&[1, 2]), PrimeField::gf2()).unwrap();
        // same generators with z renamed z1, all degrees 1
        assert_eq!(deg1.to_text(), plain.to_text().replace('z', "z1"));
        assert!(deg1.variables().iter().all(|v| v.degree == 1));
    }

    #[test]
    fn deg1_tetrahedron_facet() {
        let c = SimplicialComplex::boundary_of_simplex(4).unwrap();
        let p =
            unprojection_presentation_deg1(&c, fs(&[1, 2, 3]), PrimeField::gf2()).unwrap();
        assert_eq!(p.to_text(), "x5*z1*z2 - x1*x2*x3, x5*x4");
        assert!(p.is_homogeneous());
        // plain variant: z has degree 2
        let plain = unprojection_presentation(&c, fs(&[1, 2, 3]), PrimeField::gf2()).unwrap();
        assert_eq!(plain.to_text(), "x5*z - x1*x2*x3, x5*x4");
        let z = &plain.variables()[plain.variable_index("z").unwrap()];
        assert_eq!(z.degree, 2);
        assert!(plain.is_homogeneous());
    }

    #[test]
    fn specialization_reaches_the_stellar_presentation() {
        let gf2 = PrimeField::gf2();
        for (name, complex) in corpus::gorenstein_corpus() {
            if complex.num_vertices() > 6 {
                continue;
            }
            for sigma in complex.faces() {
                if sigma.len() < 2 {
                    continue;
                }
                let stellar = stellar_presentation(&complex, sigma).unwrap();

                let s = unprojection_presentation(&complex, sigma, gf2).unwrap();
                assert_eq!(
                    s.specialize_to_zero("z").unwrap(),
                    stellar,
                    "{name}, sigma {sigma}"
                );

                let mut s1 = unprojection_presentation_deg1(&complex, sigma, gf2).unwrap();
                for j in 1..sigma.len() {
                    s1 = s1.specialize_to_zero(&format!("z{j}")).unwrap();
                }
                assert_eq!(s1, stellar, "{name}, sigma {sigma}");
            }
        }
    }

    #[test]
    fn specialize_edge_cases() {
        let p = unprojection_presentation(&triangle(), fs(&[1, 2]), PrimeField::gf2()).unwrap();
        assert_eq!(
            p.specialize_to_zero("w"),
            Err(Error::UnknownVariable { name: "w".into() })
        );
        // killing the negative part degenerates the binomial to x4*z
        let q = p.specialize_to_zero("x1").unwrap();
        assert_eq!(q.to_text(), "x4*x3, x4*z");
        assert_eq!(q.variables().len(), 4);

        // a variable absent from all generators just disappears
        let vars = degree_one_vars(2);
        let p = RingPresentation::new(
            vars,
            [RingGenerator::Monomial(Monomial::new([(0, 1)]))],
        );
        let q = p.specialize_to_zero("x2").unwrap();
        assert_eq!(q.variables().len(), 1);
        assert_eq!(q.to_text(), "x1");
    }
}
