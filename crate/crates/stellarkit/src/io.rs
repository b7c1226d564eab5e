//! File formats: the `.cplx` facet list and the JSON schemas for complexes,
//! monomial ideals, presentations, Betti tables and fans.
//!
//! All writers emit canonical forms, and every reader accepts its writer's
//! output and re-serializes it identically.
//!
//! The `.cplx` format is line oriented: the first significant line is
//! `m <count>`, every following non-empty, non-`#` line is one facet as
//! ascending space-separated 1-based vertex ids, and facets are written in
//! lexicographic order. A file with `m 0` and no facet lines denotes the
//! `{∅}` complex; the void complex is not serializable.

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::complex::{MappedComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::fan::{Cone, Fan, FanMetadata};
use crate::ideal::MonomialIdeal;
use crate::presentation::{Monomial, RingGenerator, RingPresentation, Variable};

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        message: e.to_string(),
    }
}

// ---------------------------------------------------------------------------
// .cplx

pub fn read_cplx(text: &str) -> Result<SimplicialComplex> {
    let mut m: Option<usize> = None;
    let mut facets: Vec<FaceSet> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line_no = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if m.is_none() {
            let Some(rest) = line.strip_prefix("m ").or_else(|| line.strip_prefix("m\t")) else {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `m <count>`, got {line:?}"),
                });
            };
            m = Some(rest.trim().parse().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("bad vertex count: {e}"),
            })?);
            continue;
        }
        let mut vertices = Vec::new();
        for token in line.split_whitespace() {
            let v: usize = token.parse().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("bad vertex id {token:?}: {e}"),
            })?;
            vertices.push(v);
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse {
                line: line_no,
                message: "facet vertices must be strictly ascending".into(),
            });
        }
        facets.push(FaceSet::new(vertices)?);
    }
    let Some(m) = m else {
        return Err(Error::Parse {
            line: 1,
            message: "missing `m <count>` header".into(),
        });
    };
    if m == 0 && facets.is_empty() {
        return Ok(SimplicialComplex::trivial());
    }
    SimplicialComplex::new(m, facets)
}

pub fn write_cplx(complex: &SimplicialComplex) -> Result<String> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut out = format!("m {}\n", complex.num_vertices());
    for facet in complex.facets() {
        if facet.is_empty() {
            continue;
        }
        let line = facet
            .vertices()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// complexes as JSON

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    m: usize,
    facets: Vec<Vec<usize>>,
}

pub fn complex_to_json(complex: &SimplicialComplex) -> serde_json::Value {
    let facets = complex
        .facets()
        .iter()
        .map(|f| f.to_vec())
        .collect::<Vec<_>>();
    serde_json::json!({ "m": complex.num_vertices(), "facets": facets })
}

pub fn complex_from_json(value: &serde_json::Value) -> Result<SimplicialComplex> {
    let parsed: ComplexJson =
        serde_json::from_value(value.clone()).map_err(json_error)?;
    if parsed.m == 0 && parsed.facets.is_empty() {
        return Ok(SimplicialComplex::void());
    }
    let facets = parsed
        .facets
        .into_iter()
        .map(FaceSet::new)
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::new(parsed.m, facets)
}

pub fn mapped_complex_to_json(mapped: &MappedComplex) -> serde_json::Value {
    let mut value = complex_to_json(&mapped.complex);
    value["original_ids"] = serde_json::json!(mapped.original_ids);
    value
}

// ---------------------------------------------------------------------------
// monomial ideals as JSON

pub fn ideal_to_json(ideal: &MonomialIdeal) -> serde_json::Value {
    let gens: Vec<Vec<usize>> = ideal.generators().iter().map(|g| g.to_vec()).collect();
    serde_json::json!({ "gens": gens })
}

pub fn ideal_from_json(value: &serde_json::Value) -> Result<MonomialIdeal> {
    #[derive(Deserialize)]
    struct IdealJson {
        gens: Vec<Vec<usize>>,
    }
    let parsed: IdealJson = serde_json::from_value(value.clone()).map_err(json_error)?;
    let gens = parsed
        .gens
        .into_iter()
        .map(FaceSet::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::new(gens))
}

// ---------------------------------------------------------------------------
// presentations as JSON

#[derive(Serialize, Deserialize)]
struct VariableJson {
    name: String,
    deg: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GeneratorJson {
    Mono {
        mono: Vec<(String, u32)>,
    },
    Bino {
        bino: BinomialJson,
    },
}

#[derive(Serialize, Deserialize)]
struct BinomialJson {
    pos: Vec<(String, u32)>,
    neg: Vec<(String, u32)>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    vars: Vec<VariableJson>,
    gens: Vec<GeneratorJson>,
}

fn monomial_to_json(mono: &Monomial, vars: &[Variable]) -> Vec<(String, u32)> {
    mono.factors()
        .iter()
        .map(|&(v, e)| (vars[v].name.clone(), e))
        .collect()
}

fn monomial_from_json(
    factors: &[(String, u32)],
    presentation_vars: &[Variable],
) -> Result<Monomial> {
    let mut indexed = Vec::with_capacity(factors.len());
    for (name, exp) in factors {
        let idx = presentation_vars
            .iter()
            .position(|v| &v.name == name)
            .ok_or_else(|| Error::UnknownVariable { name: name.clone() })?;
        indexed.push((idx, *exp));
    }
    Ok(Monomial::new(indexed))
}

pub fn presentation_to_json(p: &RingPresentation) -> serde_json::Value {
    let vars: Vec<VariableJson> = p
        .variables()
        .iter()
        .map(|v| VariableJson {
            name: v.name.clone(),
            deg: v.degree,
        })
        .collect();
    let gens: Vec<GeneratorJson> = p
        .generators()
        .iter()
        .map(|g| match g {
            RingGenerator::Monomial(m) => GeneratorJson::Mono {
                mono: monomial_to_json(m, p.variables()),
            },
            RingGenerator::Binomial { positive, negative } => GeneratorJson::Bino {
                bino: BinomialJson {
                    pos: monomial_to_json(positive, p.variables()),
                    neg: monomial_to_json(negative, p.variables()),
                },
            },
        })
        .collect();
    serde_json::to_value(PresentationJson { vars, gens }).expect("presentation serializes")
}

pub fn presentation_from_json(value: &serde_json::Value) -> Result<RingPresentation> {
    let parsed: PresentationJson =
        serde_json::from_value(value.clone()).map_err(json_error)?;
    let variables: Vec<Variable> = parsed
        .vars
        .into_iter()
        .map(|v| Variable {
            name: v.name,
            degree: v.deg,
        })
        .collect();
    let generators = parsed
        .gens
        .iter()
        .map(|g| match g {
            GeneratorJson::Mono { mono } => {
                Ok(RingGenerator::Monomial(monomial_from_json(mono, &variables)?))
            }
            GeneratorJson::Bino { bino } => Ok(RingGenerator::Binomial {
                positive: monomial_from_json(&bino.pos, &variables)?,
                negative: monomial_from_json(&bino.neg, &variables)?,
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RingPresentation::new(variables, generators))
}

// ---------------------------------------------------------------------------
// Betti tables as JSON

pub fn betti_to_json(table: &BettiTable) -> serde_json::Value {
    let entries: Vec<(usize, usize, u64)> = table.entries().collect();
    serde_json::json!({ "length": table.length(), "entries": entries })
}

pub fn betti_from_json(value: &serde_json::Value) -> Result<BettiTable> {
    #[derive(Deserialize)]
    struct TableJson {
        length: usize,
        entries: Vec<(usize, usize, u64)>,
    }
    let parsed: TableJson = serde_json::from_value(value.clone()).map_err(json_error)?;
    BettiTable::from_entries(parsed.length, &parsed.entries)
}

// ---------------------------------------------------------------------------
// fans as JSON

pub fn fan_to_json(fan: &Fan) -> serde_json::Value {
    let (rays, cones) = fan.ray_index_form();
    let mut value = serde_json::json!({ "rank": fan.rank(), "rays": rays, "cones": cones });
    if let Some(meta) = fan.metadata() {
        value["metadata"] = serde_json::json!({ "vertex_order": meta.vertex_order });
    }
    value
}

pub fn fan_from_json(value: &serde_json::Value) -> Result<Fan> {
    #[derive(Deserialize)]
    struct MetaJson {
        vertex_order: Vec<usize>,
    }
    #[derive(Deserialize)]
    struct FanJson {
        rank: usize,
        rays: Vec<Vec<i64>>,
        cones: Vec<Vec<usize>>,
        metadata: Option<MetaJson>,
    }
    let parsed: FanJson = serde_json::from_value(value.clone()).map_err(json_error)?;
    let mut cones = Vec::with_capacity(parsed.cones.len());
    for indices in &parsed.cones {
        let gens = indices
            .iter()
            .map(|&i| {
                parsed
                    .rays
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::InvalidFan(format!("ray index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        cones.push(Cone::new(gens)?);
    }
    let fan = Fan::new(parsed.rank, cones)?;
    Ok(match parsed.metadata {
        Some(meta) => fan.with_metadata(FanMetadata {
            vertex_order: meta.vertex_order,
        }),
        None => fan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::homology::PrimeField;
    use crate::presentation::unprojection_presentation;

    fn fs(v: &[usize]) -> FaceSet {
        v.iter().copied().collect()
    }

    #[test]
    fn cplx_round_trip() {
        for (_, complex) in corpus::gorenstein_corpus() {
            let text = write_cplx(&complex).unwrap();
            let parsed = read_cplx(&text).unwrap();
            assert_eq!(parsed, complex);
            assert_eq!(write_cplx(&parsed).unwrap(), text);
        }
    }

    #[test]
    fn cplx_parsing() {
        let text = "# a triangle\nm 3\n\n1 2\n1 3\n2 3\n";
        let parsed = read_cplx(text).unwrap();
        assert_eq!(parsed, SimplicialComplex::boundary_of_simplex(3).unwrap());

        assert_eq!(read_cplx("m 0\n").unwrap(), SimplicialComplex::trivial());
        assert!(write_cplx(&SimplicialComplex::void()).is_err());

        assert!(matches!(read_cplx("1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_cplx("m 3\n2 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_cplx(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn complex_json_round_trip() {
        let oct = corpus::octahedron();
        let value = complex_to_json(&oct);
        assert_eq!(complex_from_json(&value).unwrap(), oct);
        let trivial = complex_to_json(&SimplicialComplex::trivial());
        assert_eq!(
            complex_from_json(&trivial).unwrap(),
            SimplicialComplex::trivial()
        );
    }

    #[test]
    fn ideal_json_round_trip() {
        let ideal = MonomialIdeal::new([fs(&[1, 2]), fs(&[3, 4])]);
        let value = ideal_to_json(&ideal);
        assert_eq!(ideal_from_json(&value).unwrap(), ideal);
    }

    #[test]
    fn presentation_json_matches_schema_and_round_trips() {
        let triangle = SimplicialComplex::boundary_of_simplex(3).unwrap();
        let p = unprojection_presentation(&triangle, fs(&[1, 2]), PrimeField::gf2()).unwrap();
        let value = presentation_to_json(&p);
        let expected = serde_json::json!({
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
        assert_eq!(value, expected);
        let back = presentation_from_json(&value).unwrap();
        assert_eq!(back, p);
        assert_eq!(presentation_to_json(&back), value);
    }

    #[test]
    fn betti_json_round_trip() {
        let table = crate::betti::stacked_betti_closed(2, 6).unwrap();
        let value = betti_to_json(&table);
        assert_eq!(betti_from_json(&value).unwrap(), table);
        assert_eq!(
            value["entries"][0],
            serde_json::json!([0, 0, 1])
        );
    }

    #[test]
    fn fan_json_round_trip() {
        let fan = crate::fan::embedded_example_p3();
        let value = fan_to_json(&fan);
        let back = fan_from_json(&value).unwrap();
        assert_eq!(back, fan);
        assert_eq!(fan_to_json(&back), value);

        let oct_fan = crate::fan::build_fan(&corpus::octahedron(), fs(&[1, 2])).unwrap();
        let value = fan_to_json(&oct_fan);
        assert_eq!(value["metadata"]["vertex_order"], serde_json::json!([1, 2, 3, 4, 5, 6]));
        let back = fan_from_json(&value).unwrap();
        assert_eq!(back, oct_fan);
    }
}
