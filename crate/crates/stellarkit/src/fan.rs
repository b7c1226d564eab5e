//! Rational polyhedral fans attached to unprojection presentations, plus a
//! general fan checker based on exact integer arithmetic.
//!
//! For a complex Δ and a face σ = {1, ..., d} (after relabeling), the fan
//! lives in rank m + d - 1 with basis rays e_{x,1..m} and e_{z,1..d-1}; every
//! facet τ of Δ contributes the cone on {e_{x,a} : a ∈ τ} and all e_z rays,
//! with the extra ray
//!
//! `e_a = e_{x,1} + ... + e_{x,d} - e_{z,1} - ... - e_{z,d-1}`
//!
//! thrown in when σ ⊆ τ (those are the non-simplicial cones).
//!
//! The checker verifies pointedness of every maximal cone and that every
//! pairwise intersection is a face of both, by computing facet descriptions
//! and intersection rays exactly. Cone sizes are capped (rank at most 16,
//! at most rank + 1 generators per cone), which keeps all intermediate
//! integers tiny.

use rayon::prelude::*;
use std::collections::BTreeSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exact::{dot, gauss_jordan, kernel_basis, mul, normalize_primitive, rank, sub, Scalar};
use crate::face::{FaceSet, VertexId};

/// Exact integer point of the ambient lattice.
pub type LatticeVector = Vec<i64>;

/// Largest supported fan rank.
pub const MAX_FAN_RANK: usize = 16;

/// A cone given by generating rays: nonzero primitive integer vectors of a
/// common length, deduplicated and canonically sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cone {
    generators: Vec<LatticeVector>,
}

impl Cone {
    pub fn new(generators: Vec<LatticeVector>) -> Result<Cone> {
        if generators.is_empty() {
            return Err(Error::InvalidFan("a cone needs at least one generator".into()));
        }
        let len = generators[0].len();
        let mut canonical: Vec<LatticeVector> = Vec::new();
        for g in generators {
            if g.len() != len {
                return Err(Error::InvalidFan(
                    "cone generators have inconsistent dimensions".into(),
                ));
            }
            let mut wide: Vec<Scalar> = g.iter().map(|&x| x as Scalar).collect();
            if !normalize_primitive(&mut wide) {
                return Err(Error::InvalidFan("cone generators must be nonzero".into()));
            }
            canonical.push(wide.into_iter().map(|x| x as i64).collect());
        }
        canonical.sort();
        canonical.dedup();
        Ok(Cone {
            generators: canonical,
        })
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    fn wide_generators(&self) -> Vec<Vec<Scalar>> {
        self.generators
            .iter()
            .map(|g| g.iter().map(|&x| x as Scalar).collect())
            .collect()
    }

    /// True iff the generators are linearly independent. Under the fan
    /// invariant that generator sets are minimal this is exactly
    /// simpliciality.
    pub fn is_simplicial(&self) -> Result<bool> {
        let dim = self.generators[0].len();
        Ok(rank(&self.wide_generators(), dim)? == self.generators.len())
    }
}

/// How a fan produced by [`build_fan`] relabeled the vertices: entry `i`
/// holds the original id of the vertex called `i + 1` inside the fan.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FanMetadata {
    pub vertex_order: Vec<VertexId>,
}

/// A fan presented by its maximal cones; faces are implied.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan {
    rank: usize,
    cones: Vec<Cone>,
    metadata: Option<FanMetadata>,
}

impl Fan {
    /// Validates the caps, the generator dimensions, and minimality of each
    /// generator set (no generator may be a nonnegative combination of the
    /// others).
    pub fn new(rank: usize, cones: Vec<Cone>) -> Result<Fan> {
        if rank > MAX_FAN_RANK {
            return Err(Error::InvalidFan(format!(
                "rank {rank} exceeds the supported cap {MAX_FAN_RANK}"
            )));
        }
        for (index, cone) in cones.iter().enumerate() {
            if cone.generators[0].len() != rank {
                return Err(Error::InvalidFan(format!(
                    "cone #{index} does not live in rank {rank}"
                )));
            }
            if cone.generators.len() > rank + 1 {
                return Err(Error::InvalidFan(format!(
                    "cone #{index} has {} generators; the cap is rank + 1 = {}",
                    cone.generators.len(),
                    rank + 1
                )));
            }
            let wide = cone.wide_generators();
            for skip in 0..wide.len() {
                if wide.len() == 1 {
                    continue;
                }
                let others: Vec<Vec<Scalar>> = wide
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, g)| g.clone())
                    .collect();
                let sub_cone = ConeData::build(&others, rank)?;
                if sub_cone.contains(&wide[skip])? {
                    return Err(Error::InvalidFan(format!(
                        "cone #{index}: generator #{skip} is a nonnegative combination of the others"
                    )));
                }
            }
        }
        Ok(Fan {
            rank,
            cones,
            metadata: None,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn metadata(&self) -> Option<&FanMetadata> {
        self.metadata.as_ref()
    }

    pub fn with_metadata(mut self, metadata: FanMetadata) -> Fan {
        self.metadata = Some(metadata);
        self
    }

    /// Deduplicated rays plus each cone as a list of ray indices, in first
    /// occurrence order; the interchange form used by the JSON schema.
    pub fn ray_index_form(&self) -> (Vec<LatticeVector>, Vec<Vec<usize>>) {
        let mut rays: Vec<LatticeVector> = Vec::new();
        let mut cones = Vec::with_capacity(self.cones.len());
        for cone in &self.cones {
            let mut indices = Vec::with_capacity(cone.generators.len());
            for g in &cone.generators {
                let idx = match rays.iter().position(|r| r == g) {
                    Some(i) => i,
                    None => {
                        rays.push(g.clone());
                        rays.len() - 1
                    }
                };
                indices.push(idx);
            }
            cones.push(indices);
        }
        (rays, cones)
    }

    /// Number of maximal cones whose generators are linearly dependent.
    pub fn non_simplicial_count(&self) -> Result<usize> {
        let mut count = 0;
        for cone in &self.cones {
            if !cone.is_simplicial()? {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// First problem found by [`check_fan`], in deterministic order: pointedness
/// violations by cone index, then pair violations in lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FanViolation {
    NotPointed { cone: usize },
    NotAFacePair { first: usize, second: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FanCheck {
    pub ok: bool,
    pub violation: Option<FanViolation>,
}

/// H-description of a single cone: functionals vanishing on its span plus
/// the facet inequalities, all primitive and reduced modulo the span
/// functionals.
struct ConeData {
    gens: Vec<Vec<Scalar>>,
    span_eqs: Vec<Vec<Scalar>>,
    ineqs: Vec<Vec<Scalar>>,
    ambient: usize,
}

impl ConeData {
    fn build(gens: &[Vec<Scalar>], ambient: usize) -> Result<ConeData> {
        let span_eqs = kernel_basis(gens, ambient)?;
        let dim = ambient - span_eqs.len();
        let (eq_rref, eq_pivots) = gauss_jordan(span_eqs.clone(), ambient)?;
        let reduce = |mut a: Vec<Scalar>| -> Result<Vec<Scalar>> {
            for &(r, c) in &eq_pivots {
                if a[c] != 0 {
                    let p = eq_rref[r][c];
                    debug_assert!(p > 0);
                    let q = a[c];
                    for k in 0..ambient {
                        a[k] = sub(mul(p, a[k])?, mul(q, eq_rref[r][k])?)?;
                    }
                }
            }
            normalize_primitive(&mut a);
            Ok(a)
        };

        let mut ineqs: BTreeSet<Vec<Scalar>> = BTreeSet::new();
        if dim > 0 {
            let k = gens.len();
            let mut picked: Vec<usize> = Vec::new();
            enumerate_combinations(k, dim - 1, &mut picked, &mut |subset| {
                let sub_rows: Vec<Vec<Scalar>> = subset.iter().map(|&i| gens[i].clone()).collect();
                let kernel = kernel_basis(&sub_rows, ambient)?;
                if kernel.len() != ambient - (dim - 1) {
                    return Ok(()); // subset not independent
                }
                // pick a kernel vector outside the span functionals
                let mut candidate: Option<Vec<Scalar>> = None;
                for k_vec in kernel {
                    let mut probe = span_eqs.clone();
                    probe.push(k_vec.clone());
                    if rank(&probe, ambient)? == span_eqs.len() + 1 {
                        candidate = Some(k_vec);
                        break;
                    }
                }
                let Some(a) = candidate else { return Ok(()) };
                let mut positive = true;
                let mut negative = true;
                for g in gens {
                    let v = dot(&a, g)?;
                    if v > 0 {
                        negative = false;
                    } else if v < 0 {
                        positive = false;
                    }
                }
                if positive == negative {
                    return Ok(()); // mixed signs: not a supporting hyperplane
                }
                let oriented: Vec<Scalar> = if positive {
                    a
                } else {
                    a.into_iter().map(|x| -x).collect()
                };
                ineqs.insert(reduce(oriented)?);
                Ok(())
            })?;
        }
        Ok(ConeData {
            gens: gens.to_vec(),
            span_eqs,
            ineqs: ineqs.into_iter().collect(),
            ambient,
        })
    }

    fn contains(&self, x: &[Scalar]) -> Result<bool> {
        for eq in &self.span_eqs {
            if dot(eq, x)? != 0 {
                return Ok(false);
            }
        }
        for ineq in &self.ineqs {
            if dot(ineq, x)? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn is_pointed(&self) -> Result<bool> {
        let mut rows = self.span_eqs.clone();
        rows.extend(self.ineqs.iter().cloned());
        Ok(rank(&rows, self.ambient)? == self.ambient)
    }
}

/// Calls `f` on every `choose`-subset of `0..n`, in lexicographic order.
fn enumerate_combinations(
    n: usize,
    choose: usize,
    picked: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if picked.len() == choose {
        return f(picked);
    }
    let start = picked.last().map_or(0, |&p| p + 1);
    let remaining = choose - picked.len();
    for next in start..n {
        if n - next < remaining {
            break;
        }
        picked.push(next);
        enumerate_combinations(n, choose, picked, f)?;
        picked.pop();
    }
    Ok(())
}

/// Extreme ray or zero test: `r` is an extreme ray of the cone cut out by
/// the given equations and inequalities iff the constraints active at `r`
/// have rank `ambient - 1`.
fn is_extreme(
    r: &[Scalar],
    eqs: &[Vec<Scalar>],
    ineqs: &[Vec<Scalar>],
    ambient: usize,
) -> Result<bool> {
    let mut active = eqs.to_vec();
    for ineq in ineqs {
        if dot(ineq, r)? == 0 {
            active.push(ineq.clone());
        }
    }
    Ok(rank(&active, ambient)? == ambient - 1)
}

/// One double-description step: slices the pointed cone with known extreme
/// rays by a hyperplane (`halfspace = false`) or a halfspace. `eqs` and
/// `ineqs` are the constraints of the cone *before* the slice; `f` becomes
/// part of the system for extremality testing.
fn slice(
    rays: Vec<Vec<Scalar>>,
    f: &[Scalar],
    halfspace: bool,
    eqs: &[Vec<Scalar>],
    ineqs: &[Vec<Scalar>],
    ambient: usize,
) -> Result<Vec<Vec<Scalar>>> {
    let mut values = Vec::with_capacity(rays.len());
    for r in &rays {
        values.push(dot(f, r)?);
    }
    let mut kept: Vec<Vec<Scalar>> = Vec::new();
    for (r, &v) in rays.iter().zip(&values) {
        if v == 0 || (halfspace && v > 0) {
            kept.push(r.clone());
        }
    }
    // full constraint system after the slice
    let mut new_eqs = eqs.to_vec();
    let mut new_ineqs = ineqs.to_vec();
    if halfspace {
        new_ineqs.push(f.to_vec());
    } else {
        new_eqs.push(f.to_vec());
    }
    for (p, &vp) in rays.iter().zip(&values) {
        if vp <= 0 {
            continue;
        }
        for (n, &vn) in rays.iter().zip(&values) {
            if vn >= 0 {
                continue;
            }
            // positive combination on the hyperplane f = 0
            let mut w = vec![0; ambient];
            let mut zero = true;
            for k in 0..ambient {
                w[k] = sub(mul(vp, n[k])?, mul(vn, p[k])?)?;
                if w[k] != 0 {
                    zero = false;
                }
            }
            if zero || !normalize_primitive(&mut w) {
                continue;
            }
            if kept.contains(&w) {
                continue;
            }
            if is_extreme(&w, &new_eqs, &new_ineqs, ambient)? {
                kept.push(w);
            }
        }
    }
    Ok(kept)
}

/// Extreme rays of the intersection of two pointed cones, starting from the
/// rays of the first and slicing by the constraints of the second.
fn intersection_rays(a: &ConeData, b: &ConeData) -> Result<Vec<Vec<Scalar>>> {
    let ambient = a.ambient;
    let mut rays = a.gens.clone();
    let mut eqs = a.span_eqs.clone();
    let mut ineqs = a.ineqs.clone();
    for e in &b.span_eqs {
        if rays.is_empty() {
            break;
        }
        rays = slice(rays, e, false, &eqs, &ineqs, ambient)?;
        eqs.push(e.clone());
    }
    for f in &b.ineqs {
        if rays.is_empty() {
            break;
        }
        rays = slice(rays, f, true, &eqs, &ineqs, ambient)?;
        ineqs.push(f.to_vec());
    }
    Ok(rays)
}

/// Is the cone spanned by `rays_e` (known to be `A ∩ B`) a face of `A`? The
/// smallest face of `A` containing it is generated by the generators of `A`
/// on which every `A`-facet functional vanishing on the intersection also
/// vanishes; the intersection is a face iff those generators all lie in `B`.
fn intersection_is_face_of(a: &ConeData, rays_e: &[Vec<Scalar>], b: &ConeData) -> Result<bool> {
    let mut vanishing: Vec<&Vec<Scalar>> = Vec::new();
    for ineq in &a.ineqs {
        let mut on_all = true;
        for r in rays_e {
            if dot(ineq, r)? != 0 {
                on_all = false;
                break;
            }
        }
        if on_all {
            vanishing.push(ineq);
        }
    }
    for g in &a.gens {
        let mut in_smallest_face = true;
        for ineq in &vanishing {
            if dot(ineq, g)? != 0 {
                in_smallest_face = false;
                break;
            }
        }
        if in_smallest_face && !b.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verifies the fan axioms on the maximal cones: (a) every cone is pointed,
/// (b) every pairwise intersection is a face of both cones. Returns the
/// first violation in deterministic order.
pub fn check_fan(fan: &Fan) -> Result<FanCheck> {
    let data: Vec<ConeData> = fan
        .cones
        .iter()
        .map(|c| ConeData::build(&c.wide_generators(), fan.rank))
        .collect::<Result<_>>()?;
    for (index, cone) in data.iter().enumerate() {
        if !cone.is_pointed()? {
            return Ok(FanCheck {
                ok: false,
                violation: Some(FanViolation::NotPointed { cone: index }),
            });
        }
    }
    let pairs: Vec<(usize, usize)> = (0..data.len())
        .flat_map(|i| ((i + 1)..data.len()).map(move |j| (i, j)))
        .collect();
    let violation = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(order, &(i, j))| {
            let verdict = (|| -> Result<bool> {
                let rays = intersection_rays(&data[i], &data[j])?;
                Ok(intersection_is_face_of(&data[i], &rays, &data[j])?
                    && intersection_is_face_of(&data[j], &rays, &data[i])?)
            })();
            match verdict {
                Ok(true) => None,
                Ok(false) => Some(Ok((order, i, j))),
                Err(e) => Some(Err(e)),
            }
        })
        .try_reduce_with(|a, b| Ok(if a.0 <= b.0 { a } else { b }));
    match violation {
        None => Ok(FanCheck {
            ok: true,
            violation: None,
        }),
        Some(Err(e)) => Err(e),
        Some(Ok((_, first, second))) => Ok(FanCheck {
            ok: false,
            violation: Some(FanViolation::NotAFacePair { first, second }),
        }),
    }
}

/// Builds the fan of the unprojection presentation for `sigma` a face of
/// dimension at least 1. Vertices are relabeled so that `sigma` occupies
/// positions `1..=d`; the relabeling is recorded in the fan metadata. The
/// maximal cones correspond to the facets of the complex, and exactly the
/// facets containing `sigma` yield non-simplicial cones.
pub fn build_fan(complex: &SimplicialComplex, sigma: FaceSet) -> Result<Fan> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_face(sigma) {
        return Err(Error::NotAFace { face: sigma });
    }
    let d = sigma.len();
    if d < 2 {
        return Err(Error::FaceTooSmall { face: sigma });
    }
    let m = complex.num_vertices();
    let rank = m + d - 1;
    if rank > MAX_FAN_RANK {
        return Err(Error::InvalidFan(format!(
            "fan rank {rank} exceeds the supported cap {MAX_FAN_RANK}"
        )));
    }

    // relabel so that sigma = {1, ..., d}
    let vertex_order: Vec<VertexId> = sigma
        .vertices()
        .chain((1..=m).filter(|v| !sigma.contains(*v)))
        .collect();
    let new_label = |original: VertexId| -> usize {
        vertex_order
            .iter()
            .position(|&o| o == original)
            .expect("vertex appears in the order")
            + 1
    };

    let unit = |position: usize| -> LatticeVector {
        let mut v = vec![0i64; rank];
        v[position] = 1;
        v
    };
    // e_a = e_{x,1} + ... + e_{x,d} - e_{z,1} - ... - e_{z,d-1}
    let mut extra = vec![0i64; rank];
    extra[..d].fill(1);
    extra[m..m + d - 1].fill(-1);

    let mut cones = Vec::with_capacity(complex.facets().len());
    for &facet in complex.facets() {
        let mut generators: Vec<LatticeVector> = facet
            .vertices()
            .map(|v| unit(new_label(v) - 1))
            .collect();
        for j in 0..(d - 1) {
            generators.push(unit(m + j));
        }
        if sigma.is_subset(facet) {
            generators.push(extra.clone());
        }
        cones.push(Cone::new(generators)?);
    }
    Ok(Fan::new(rank, cones)?.with_metadata(FanMetadata { vertex_order }))
}

/// The rank-3 embedding of the triangle-boundary fan: the rays of the
/// standard projective-space fan for `x_1, ..., x_4` plus the ray `(1,1,-1)`
/// for `z`, with maximal cones `{x1,x3,z}`, `{x2,x3,z}` and the
/// non-simplicial `{x1,x4,x2,z}` satisfying `x1 + x2 - z = x4`.
pub fn embedded_example_p3() -> Fan {
    let x1 = vec![1, 0, 0];
    let x2 = vec![0, 1, 0];
    let x3 = vec![-1, -1, -1];
    let x4 = vec![0, 0, 1];
    let z = vec![1, 1, -1];
    let cones = vec![
        Cone::new(vec![x1.clone(), x3.clone(), z.clone()]).unwrap(),
        Cone::new(vec![x2.clone(), x3, z.clone()]).unwrap(),
        Cone::new(vec![x1, x4, x2, z]).unwrap(),
    ];
    Fan::new(3, cones).expect("the embedded example is a valid fan")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn fs(v: &[usize]) -> FaceSet {
        v.iter().copied().collect()
    }

    #[test]
    fn build_fan_triangle() {
        let triangle = SimplicialComplex::boundary_of_simplex(3).unwrap();
        let fan = build_fan(&triangle, fs(&[1, 2])).unwrap();
        assert_eq!(fan.rank(), 4);
        assert_eq!(fan.cones().len(), 3);
        assert_eq!(fan.non_simplicial_count().unwrap(), 1);
        assert_eq!(fan.metadata().unwrap().vertex_order, vec![1, 2, 3]);
        // the sigma-cone carries e_a = (1,1,0,-1)
        let sigma_cone = fan
            .cones()
            .iter()
            .find(|c| c.generators().len() == 4)
            .unwrap();
        assert!(sigma_cone.generators().contains(&vec![1, 1, 0, -1]));
        assert!(check_fan(&fan).unwrap().ok);
    }

    #[test]
    fn build_fan_relabels_sigma_first() {
        let triangle = SimplicialComplex::boundary_of_simplex(3).unwrap();
        let fan = build_fan(&triangle, fs(&[2, 3])).unwrap();
        assert_eq!(fan.metadata().unwrap().vertex_order, vec![2, 3, 1]);
        assert!(check_fan(&fan).unwrap().ok);
    }

    #[test]
    fn build_fan_tetrahedron_facet() {
        let c = SimplicialComplex::boundary_of_simplex(4).unwrap();
        let fan = build_fan(&c, fs(&[1, 2, 3])).unwrap();
        assert_eq!(fan.rank(), 6);
        assert_eq!(fan.cones().len(), 4);
        assert_eq!(fan.non_simplicial_count().unwrap(), 1);
        assert!(check_fan(&fan).unwrap().ok);
    }

    #[test]
    fn build_fan_octahedron_edge() {
        let oct = corpus::octahedron();
        let fan = build_fan(&oct, fs(&[1, 2])).unwrap();
        assert_eq!(fan.rank(), 7);
        assert_eq!(fan.cones().len(), 8);
        // exactly the 2 facets containing the edge give non-simplicial cones
        assert_eq!(fan.non_simplicial_count().unwrap(), 2);
        assert!(check_fan(&fan).unwrap().ok);
    }

    #[test]
    fn build_fan_errors() {
        let triangle = SimplicialComplex::boundary_of_simplex(3).unwrap();
        assert_eq!(
            build_fan(&triangle, fs(&[1])),
            Err(Error::FaceTooSmall { face: fs(&[1]) })
        );
        assert_eq!(
            build_fan(&triangle, fs(&[1, 2, 3])),
            Err(Error::NotAFace { face: fs(&[1, 2, 3]) })
        );
    }

    #[test]
    fn check_fan_detects_unpointed_cone() {
        let fan = Fan::new(
            1,
            vec![
                Cone::new(vec![vec![1]]).unwrap(),
                Cone::new(vec![vec![-1]]).unwrap(),
                Cone::new(vec![vec![1], vec![-1]]).unwrap(),
            ],
        )
        .unwrap();
        let check = check_fan(&fan).unwrap();
        assert!(!check.ok);
        assert_eq!(check.violation, Some(FanViolation::NotPointed { cone: 2 }));
    }

    #[test]
    fn check_fan_detects_bad_pair() {
        // two 2-dimensional cones overlapping in a 2-dimensional region
        let fan = Fan::new(
            2,
            vec![
                Cone::new(vec![vec![1, 0], vec![0, 1]]).unwrap(),
                Cone::new(vec![vec![1, 1], vec![1, -1]]).unwrap(),
            ],
        )
        .unwrap();
        let check = check_fan(&fan).unwrap();
        assert!(!check.ok);
        assert_eq!(
            check.violation,
            Some(FanViolation::NotAFacePair { first: 0, second: 1 })
        );
    }

    #[test]
    fn check_fan_accepts_shared_faces() {
        // two quadrants sharing the ray e2, plus a lower-dimensional cone
        let fan = Fan::new(
            2,
            vec![
                Cone::new(vec![vec![1, 0], vec![0, 1]]).unwrap(),
                Cone::new(vec![vec![-1, 0], vec![0, 1]]).unwrap(),
                Cone::new(vec![vec![1, -1]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(check_fan(&fan).unwrap().ok);
    }

    #[test]
    fn embedded_example() {
        let fan = embedded_example_p3();
        assert_eq!(fan.rank(), 3);
        assert_eq!(fan.cones().len(), 3);
        // x1 + x2 - z = x4 componentwise
        let (x1, x2, z, x4) = (
            vec![1i64, 0, 0],
            vec![0i64, 1, 0],
            vec![1i64, 1, -1],
            vec![0i64, 0, 1],
        );
        let combo: Vec<i64> = (0..3).map(|k| x1[k] + x2[k] - z[k]).collect();
        assert_eq!(combo, x4);
        assert_eq!(fan.non_simplicial_count().unwrap(), 1);
        assert!(check_fan(&fan).unwrap().ok);

        // subdividing the big cone along x4 gives a simplicial fan
        let x3 = vec![-1i64, -1, -1];
        let subdivided = Fan::new(
            3,
            vec![
                Cone::new(vec![x1.clone(), x3.clone(), z.clone()]).unwrap(),
                Cone::new(vec![x2.clone(), x3, z.clone()]).unwrap(),
                Cone::new(vec![x1, x4.clone(), z.clone()]).unwrap(),
                Cone::new(vec![x4, x2, z]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(subdivided.non_simplicial_count().unwrap(), 0);
        assert!(check_fan(&subdivided).unwrap().ok);
    }

    #[test]
    fn fan_validation() {
        assert!(Fan::new(17, vec![]).is_err());
        // a redundant generator is rejected
        let cone = Cone::new(vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert!(Fan::new(2, vec![cone]).is_err());
        // scaling collapses to a primitive ray
        let cone = Cone::new(vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(cone.generators(), &[vec![0, 1], vec![1, 0]]);
        assert!(Cone::new(vec![vec![0, 0]]).is_err());
        assert!(Cone::new(vec![]).is_err());
    }

    #[test]
    fn non_simplicial_count_matches_cofacets_of_sigma(
    ) {
        let complexes = [
            SimplicialComplex::boundary_of_simplex(4).unwrap(),
            corpus::octahedron(),
            SimplicialComplex::stacked(3, 6, None).unwrap(),
        ];
        for complex in complexes {
            for sigma in complex.faces() {
                if sigma.len() < 2 {
                    continue;
                }
                let fan = build_fan(&complex, sigma).unwrap();
                let cofacets = complex
                    .facets()
                    .iter()
                    .filter(|f| sigma.is_subset(**f))
                    .count();
                assert_eq!(fan.non_simplicial_count().unwrap(), cofacets);
                assert_eq!(fan.cones().len(), complex.facets().len());
            }
        }
    }
}
