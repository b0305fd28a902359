//! Degree-truncated coequalizer kernels `ker(σ₁* - σ₂*)`, their minimal
//! generators, and a growth probe.
//!
//! Everything is filtered by total degree of normal forms. Kernel bases are
//! kept in reduced echelon form over the leading-first coordinates of
//! [`Coordinates`], so a basis element's degree is the degree of its pivot
//! and the rows with pivot degree `<= e` span the degree `<= e` part.

use std::collections::HashMap;

use crate::ambient::{ring_map_kernel, AmbientRef, AmbientRing, Coordinates, Element, MapBlock, RingMap};
use crate::eqrel::RelationPresentation;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::Ideal;
use crate::linalg::{kernel, Echelon};
use crate::poly::{Monomial, PolyRing, Polynomial, VarTag};

/// What the quotient coequalizes: a relation, or two maps `X -> T`.
#[derive(Clone, Debug)]
pub enum QuotientSource {
    Relation(RelationPresentation),
    MapPair(RingMap, RingMap),
}

impl QuotientSource {
    pub fn map_pair(g1: RingMap, g2: RingMap) -> Result<QuotientSource> {
        if g1.source().components().len() != g2.source().components().len()
            || g1.target().ncomponents() != g2.target().ncomponents()
        {
            return Err(Error::ComponentMismatch {
                expected: g1.target().ncomponents(),
                found: g2.target().ncomponents(),
            });
        }
        Ok(QuotientSource::MapPair(g1, g2))
    }

    pub fn ambient(&self) -> &AmbientRef {
        match self {
            QuotientSource::Relation(r) => r.ambient(),
            QuotientSource::MapPair(g, _) => g.source(),
        }
    }

    /// The obstruction to `f` lying in the kernel: normal forms of
    /// `f(x) - f(y)` per block, or of `g₁(f) - g₂(f)` per target component.
    pub fn defect(&self, f: &Element) -> Result<Vec<Polynomial>> {
        match self {
            QuotientSource::Relation(r) => {
                let n = r.ambient().ncomponents();
                let mut out = Vec::with_capacity(n * n);
                for a in 0..n {
                    for b in 0..n {
                        let ideal = r.block(a, b);
                        let ring = ideal.ring();
                        let na = f.part(a).ring().nvars();
                        let first: Vec<usize> = (0..na).collect();
                        let second: Vec<usize> = (na..na + f.part(b).ring().nvars()).collect();
                        let diff = &f.part(a).map_vars(ring, &first) - &f.part(b).map_vars(ring, &second);
                        out.push(ideal.groebner()?.reduce(&diff)?);
                    }
                }
                Ok(out)
            }
            QuotientSource::MapPair(g1, g2) => {
                let a = g1.apply(f)?;
                let b = g2.apply(f)?;
                Ok(a.parts().iter().zip(b.parts()).map(|(x, y)| x - y).collect())
            }
        }
    }

    /// Independent recheck of membership in the kernel.
    pub fn is_member(&self, f: &Element) -> Result<bool> {
        match self {
            QuotientSource::Relation(r) => {
                let n = r.ambient().ncomponents();
                for a in 0..n {
                    for b in 0..n {
                        let ideal = r.block(a, b);
                        let ring = ideal.ring();
                        let na = f.part(a).ring().nvars();
                        let first: Vec<usize> = (0..na).collect();
                        let second: Vec<usize> = (na..na + f.part(b).ring().nvars()).collect();
                        let diff = &f.part(a).map_vars(ring, &first) - &f.part(b).map_vars(ring, &second);
                        if !ideal.contains(&diff)? {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            QuotientSource::MapPair(g1, g2) => Ok(g1.apply(f)? == g2.apply(f)?),
        }
    }
}

/// A subspace of the degree `<= d` part of an ambient ring, in reduced
/// echelon form; typically a subalgebra truncated at `d`.
#[derive(Clone, Debug)]
pub struct TruncatedSubalgebra {
    ambient: AmbientRef,
    degree: u32,
    coords: Coordinates,
    span: Echelon,
}

impl TruncatedSubalgebra {
    pub fn from_echelon(ambient: &AmbientRef, degree: u32, coords: Coordinates, span: Echelon) -> TruncatedSubalgebra {
        TruncatedSubalgebra {
            ambient: ambient.clone(),
            degree,
            coords,
            span,
        }
    }

    pub fn ambient(&self) -> &AmbientRef {
        &self.ambient
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree
    }

    pub fn coordinates(&self) -> &Coordinates {
        &self.coords
    }

    pub fn echelon(&self) -> &Echelon {
        &self.span
    }

    pub fn dimension(&self) -> usize {
        self.span.rank()
    }

    fn element_of_row(&self, k: usize) -> (u32, Element) {
        let deg = self.coords.degree_of(self.span.pivots()[k]);
        (deg, self.coords.element(&self.ambient, &self.span.rows()[k]))
    }

    /// Basis elements whose leading term has degree exactly `e`, leading
    /// terms descending.
    pub fn basis_in_degree(&self, e: u32) -> Vec<Element> {
        (0..self.span.rank())
            .map(|k| self.element_of_row(k))
            .filter(|(deg, _)| *deg == e)
            .map(|(_, el)| el)
            .collect()
    }

    /// The whole basis, degrees ascending.
    pub fn basis(&self) -> Vec<Element> {
        (0..=self.degree).flat_map(|e| self.basis_in_degree(e)).collect()
    }

    /// Per-degree basis, index `e` holding [`Self::basis_in_degree`].
    pub fn graded_basis(&self) -> Vec<Vec<Element>> {
        (0..=self.degree).map(|e| self.basis_in_degree(e)).collect()
    }

    /// Whether `f` lies in the span; `false` when `f` exceeds the truncation.
    pub fn contains(&self, f: &Element) -> bool {
        self.coords.vector(f).is_some_and(|v| self.span.contains(&v))
    }

    /// The part of `f` not explained by the span, as an element.
    pub fn remainder(&self, f: &Element) -> Option<Element> {
        let v = self.coords.vector(f)?;
        Some(self.coords.element(&self.ambient, &self.span.reduce(&v)))
    }
}

/// Linear map `f -> defect(f)` on the degree `<= d` coordinates, solved
/// exactly.
pub fn coequalizer_kernel_basis(source: &QuotientSource, d: u32) -> Result<TruncatedSubalgebra> {
    let ambient = source.ambient().clone();
    let coords = ambient.coordinate_system(d)?;
    let field = ambient.field();
    let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut sparse: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(coords.len());
    for (i, m) in coords.basis() {
        let f = ambient.in_component(*i, &Polynomial::monomial(ambient.component(*i).ring(), m.clone(), field.one()))?;
        let mut col = Vec::new();
        for (b, p) in source.defect(&f)?.into_iter().enumerate() {
            for (t, c) in p.into_terms() {
                let next = index.len();
                let k = *index.entry((b, t)).or_insert(next);
                col.push((k, c));
            }
        }
        sparse.push(col);
    }
    let dim = index.len();
    let images: Vec<Vec<Scalar>> = sparse
        .into_iter()
        .map(|col| {
            let mut v = vec![field.zero(); dim];
            for (k, c) in col {
                v[k] = c;
            }
            v
        })
        .collect();
    let rows = kernel(field, &images, dim);
    let span = Echelon::from_rows(field, coords.len(), rows);
    Ok(TruncatedSubalgebra::from_echelon(&ambient, d, coords, span))
}

/// The span of all products of generators with total nominal degree
/// `<= d`, built degree by degree.
struct ProductSpan<'a> {
    ambient: &'a AmbientRing,
    coords: &'a Coordinates,
    echelon: Echelon,
    accepted: Vec<(u32, Element)>,
    gens: Vec<(u32, Element)>,
}

impl<'a> ProductSpan<'a> {
    fn new(ambient: &'a AmbientRing, coords: &'a Coordinates) -> Self {
        let mut s = ProductSpan {
            ambient,
            coords,
            echelon: coords.echelon(),
            accepted: Vec::new(),
            gens: Vec::new(),
        };
        s.insert(0, ambient.one());
        s
    }

    fn insert(&mut self, nominal: u32, e: Element) -> bool {
        let Some(v) = self.coords.vector(&e) else {
            return false;
        };
        if self.echelon.insert(v) {
            self.accepted.push((nominal, e));
            true
        } else {
            false
        }
    }

    /// Adds every product of nominal degree exactly `e`.
    fn fill(&mut self, e: u32) -> Result<()> {
        let mut fresh = Vec::new();
        for (k, g) in &self.gens {
            if *k > e {
                continue;
            }
            for (n, p) in &self.accepted {
                if n + k == e {
                    fresh.push(self.ambient.mul(p, g)?);
                }
            }
        }
        for f in fresh {
            self.insert(e, f);
        }
        Ok(())
    }

    fn add_generator(&mut self, e: u32, g: Element) {
        self.gens.push((e, g.clone()));
        self.insert(e, g);
    }
}

/// Truncated span of the subalgebra generated by `gens`.
pub fn algebra_span(ambient: &AmbientRef, gens: &[Element], d: u32) -> Result<TruncatedSubalgebra> {
    let coords = ambient.coordinate_system(d)?;
    let echelon = {
        let mut span = ProductSpan::new(ambient, &coords);
        for e in 1..=d {
            span.fill(e)?;
            for g in gens {
                if g.degree() == Some(e) {
                    span.add_generator(e, g.clone());
                }
            }
        }
        span.echelon
    };
    Ok(TruncatedSubalgebra::from_echelon(ambient, d, coords, echelon))
}

/// Minimal generators of a truncated subalgebra, chosen degree by degree.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    pub generators: Vec<Element>,
    /// Entry `e` counts the generators of degree `e`.
    pub new_per_degree: Vec<usize>,
    /// Entry `e` is the number of basis elements with leading degree `e`.
    pub basis_dims: Vec<usize>,
}

impl GeneratorTable {
    pub fn in_degree(&self, e: u32) -> impl Iterator<Item = &Element> {
        self.generators.iter().filter(move |g| g.degree() == Some(e))
    }
}

/// In each degree `e`, the basis elements of leading degree `e` reduced
/// modulo the span of products of earlier generators; the reduced echelon
/// form of the remainders are the new generators.
pub fn minimal_generators(t: &TruncatedSubalgebra) -> Result<GeneratorTable> {
    let d = t.degree;
    let mut span = ProductSpan::new(&t.ambient, &t.coords);
    let mut generators = Vec::new();
    let mut new_per_degree = vec![0];
    let mut basis_dims = vec![0; d as usize + 1];
    for k in 0..t.span.rank() {
        basis_dims[t.coords.degree_of(t.span.pivots()[k]) as usize] += 1;
    }
    for e in 1..=d {
        span.fill(e)?;
        let mut fresh = t.coords.echelon();
        for k in 0..t.span.rank() {
            if t.coords.degree_of(t.span.pivots()[k]) == e {
                fresh.insert(span.echelon.reduce(&t.span.rows()[k]));
            }
        }
        new_per_degree.push(fresh.rank());
        for row in fresh.rows() {
            let g = t.coords.element(&t.ambient, row);
            span.add_generator(e, g.clone());
            generators.push(g);
        }
    }
    Ok(GeneratorTable {
        generators,
        new_per_degree,
        basis_dims,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub degree: u32,
    pub basis_dim: usize,
    pub new_generators: usize,
}

/// Heuristic evidence only: `unstabilized` means new generators still
/// appear at the top degree, not that the algebra is not Noetherian.
#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    pub unstabilized: bool,
}

pub fn noetherian_probe(source: &QuotientSource, d: u32) -> Result<GrowthReport> {
    let t = coequalizer_kernel_basis(source, d)?;
    let table = minimal_generators(&t)?;
    Ok(growth_report(&table))
}

pub fn growth_report(table: &GeneratorTable) -> GrowthReport {
    let rows: Vec<GrowthRow> = (0..table.basis_dims.len())
        .map(|e| GrowthRow {
            degree: e as u32,
            basis_dim: table.basis_dims[e],
            new_generators: table.new_per_degree[e],
        })
        .collect();
    let unstabilized = rows.len() > 1 && rows.last().is_some_and(|r| r.new_generators > 0);
    GrowthReport { rows, unstabilized }
}

/// The ideal of relations among `gens`, in a polynomial ring on `names`.
pub fn present_subalgebra(ambient: &AmbientRef, gens: &[Element], names: &[String]) -> Result<Ideal> {
    if names.len() != gens.len() {
        return Err(Error::VariableCountMismatch {
            expected: gens.len(),
            found: names.len(),
        });
    }
    let ring = PolyRing::with_tags(ambient.field(), names.to_vec(), vec![VarTag::Base; names.len()])?
        .with_budget(ambient.component(0).ring().budget());
    let source = AmbientRing::polynomial(&ring);
    let blocks = (0..ambient.ncomponents())
        .map(|j| MapBlock {
            source_component: 0,
            images: gens.iter().map(|g| g.part(j).clone()).collect(),
        })
        .collect();
    ring_map_kernel(&RingMap::new(&source, ambient, blocks)?)
}

/// `z1..zm`, the default names for [`present_subalgebra`].
pub fn default_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("z{i}")).collect()
}
