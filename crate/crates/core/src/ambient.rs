//! Ambient rings: finite products of quotients `k[x]/Q`, their elements,
//! and ring maps between them.
//!
//! A product models a disjoint union of affine schemes. An element is a
//! tuple of normal forms, one per component. A ring map into a product is
//! given per target component: each target component receives the
//! variables of exactly one source component.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groebner::{eliminate, Ideal, SubalgebraMembership};
use crate::linalg::Echelon;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial, RingRef, VarTag};

/// One factor `k[x]/Q` of an ambient ring.
#[derive(Clone, Debug)]
pub struct Component {
    ring: RingRef,
    modulus: Ideal,
}

impl Component {
    pub fn new(ring: &RingRef, modulus: Vec<Polynomial>) -> Result<Component> {
        let modulus = Ideal::new(ring, modulus).canonical()?;
        Ok(Component {
            ring: ring.clone(),
            modulus,
        })
    }

    pub fn free(ring: &RingRef) -> Component {
        Component {
            ring: ring.clone(),
            modulus: Ideal::zero(ring),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// The defining ideal, presented by its reduced Gröbner basis.
    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        if self.modulus.is_zero() {
            return Ok(p.reorder(&self.ring));
        }
        self.modulus.groebner()?.reduce(p)
    }

    /// Monomials of degree `<= d` not divisible by a leading monomial of
    /// the modulus, ascending in the ring's order.
    pub fn standard_monomials(&self, d: u32) -> Result<Vec<Monomial>> {
        let g = self.modulus.groebner()?;
        let lms: Vec<Monomial> = g.leading_monomials().cloned().collect();
        Ok(self
            .ring
            .monomial_basis(d, false)
            .into_iter()
            .filter(|m| !lms.iter().any(|l| l.divides(m)))
            .collect())
    }
}

/// A tuple of polynomials, one per component, each in normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    parts: Vec<Polynomial>,
}

impl Element {
    pub fn parts(&self) -> &[Polynomial] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &Polynomial {
        &self.parts[i]
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    /// Graded degree: the largest component degree.
    pub fn degree(&self) -> Option<u32> {
        self.parts.iter().filter_map(|p| p.degree()).max()
    }

    /// The polynomial of a single-component element.
    pub fn as_poly(&self) -> &Polynomial {
        &self.parts[0]
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.len() == 1 {
            return write!(f, "{}", self.parts[0]);
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(", "))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite product of quotient rings; at least one component.
#[derive(Clone, Debug)]
pub struct AmbientRing {
    components: Vec<Component>,
}

pub type AmbientRef = Arc<AmbientRing>;

/// A product ring presented as a single quotient ring using orthogonal
/// idempotents `e_i`: the tuple `(f_i)` corresponds to `Σ e_i f_i(x^(i))`.
#[derive(Clone, Debug)]
pub struct Flattened {
    pub ring: RingRef,
    pub modulus: Vec<Polynomial>,
    offsets: Vec<usize>,
    idempotents: Vec<usize>,
}

impl Flattened {
    /// Inverse of [`Self::embed`] on normal forms.
    pub fn unembed(&self, ambient: &AmbientRing, p: &Polynomial) -> Result<Element> {
        if self.idempotents.is_empty() {
            return ambient.from_poly(&p.reorder(ambient.component(0).ring()));
        }
        let mut parts = Vec::with_capacity(ambient.ncomponents());
        for (j, c) in ambient.components().iter().enumerate() {
            let ring = c.ring();
            let mut images = vec![Polynomial::zero(ring); self.ring.nvars()];
            for v in 0..ring.nvars() {
                images[self.offsets[j] + v] = Polynomial::var(ring, v);
            }
            images[self.idempotents[j]] = Polynomial::one(ring);
            parts.push(p.substitute(&images, ring)?);
        }
        ambient.element(parts)
    }

    pub fn embed(&self, e: &Element) -> Polynomial {
        if self.idempotents.is_empty() {
            return e.parts[0].reorder(&self.ring);
        }
        let mut acc = Polynomial::zero(&self.ring);
        for (i, p) in e.parts.iter().enumerate() {
            let map: Vec<usize> = (0..p.ring().nvars()).map(|v| self.offsets[i] + v).collect();
            let q = p.map_vars(&self.ring, &map);
            acc = &acc + &(&q * &Polynomial::var(&self.ring, self.idempotents[i]));
        }
        acc
    }
}

impl AmbientRing {
    pub fn new(components: Vec<Component>) -> Result<AmbientRef> {
        if components.is_empty() {
            return Err(Error::ComponentMismatch { expected: 1, found: 0 });
        }
        let field = components[0].ring.field();
        if components.iter().any(|c| c.ring.field() != field) {
            return Err(Error::RingMismatch);
        }
        Ok(Arc::new(AmbientRing { components }))
    }

    pub fn polynomial(ring: &RingRef) -> AmbientRef {
        Arc::new(AmbientRing {
            components: vec![Component::free(ring)],
        })
    }

    pub fn quotient(ring: &RingRef, modulus: Vec<Polynomial>) -> Result<AmbientRef> {
        Self::new(vec![Component::new(ring, modulus)?])
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Component {
        &self.components[i]
    }

    pub fn ncomponents(&self) -> usize {
        self.components.len()
    }

    pub fn field(&self) -> Field {
        self.components[0].ring.field()
    }

    pub fn is_product(&self) -> bool {
        self.components.len() > 1
    }

    /// The ring of a single-component ambient.
    pub fn single(&self) -> Result<&Component> {
        if self.components.len() != 1 {
            return Err(Error::ComponentMismatch {
                expected: 1,
                found: self.components.len(),
            });
        }
        Ok(&self.components[0])
    }

    pub fn element(&self, parts: Vec<Polynomial>) -> Result<Element> {
        if parts.len() != self.components.len() {
            return Err(Error::ComponentMismatch {
                expected: self.components.len(),
                found: parts.len(),
            });
        }
        let parts: Result<Vec<Polynomial>> = parts
            .iter()
            .zip(&self.components)
            .map(|(p, c)| {
                if p.ring().names() != c.ring.names() {
                    return Err(Error::VariableCountMismatch {
                        expected: c.ring.nvars(),
                        found: p.ring().nvars(),
                    });
                }
                c.reduce(p)
            })
            .collect();
        Ok(Element { parts: parts? })
    }

    /// Element of a single-component ambient.
    pub fn from_poly(&self, p: &Polynomial) -> Result<Element> {
        self.element(vec![p.clone()])
    }

    /// `p` placed in component `i`, zero elsewhere.
    pub fn in_component(&self, i: usize, p: &Polynomial) -> Result<Element> {
        let parts = self
            .components
            .iter()
            .enumerate()
            .map(|(k, c)| if k == i { p.clone() } else { Polynomial::zero(&c.ring) })
            .collect();
        self.element(parts)
    }

    pub fn zero(&self) -> Element {
        Element {
            parts: self.components.iter().map(|c| Polynomial::zero(&c.ring)).collect(),
        }
    }

    pub fn one(&self) -> Element {
        let parts = self.components.iter().map(|c| Polynomial::one(&c.ring)).collect();
        self.element(parts).expect("unit")
    }

    pub fn constant(&self, c: &Scalar) -> Element {
        let parts = self.components.iter().map(|k| Polynomial::constant(&k.ring, c.clone())).collect();
        self.element(parts).expect("constant")
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element {
            parts: a.parts.iter().zip(&b.parts).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        Element {
            parts: a.parts.iter().zip(&b.parts).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, a: &Element, c: &Scalar) -> Element {
        Element {
            parts: a.parts.iter().map(|x| x.scale(c)).collect(),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        let parts: Result<Vec<Polynomial>> = a
            .parts
            .iter()
            .zip(&b.parts)
            .zip(&self.components)
            .map(|((x, y), c)| c.reduce(&(x * y)))
            .collect();
        Ok(Element { parts: parts? })
    }

    pub fn pow(&self, a: &Element, e: u32) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Coordinates of degree `<= d`: standard monomials of every component,
    /// listed leading-first (degree descending, then component, then the
    /// ring order descending).
    pub fn graded_basis(&self, d: u32) -> Result<Vec<(usize, Monomial)>> {
        let mut out = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            for m in c.standard_monomials(d)? {
                out.push((i, m));
            }
        }
        let order_of = |i: usize| self.components[i].ring.order().clone();
        out.sort_by(|(ia, ma), (ib, mb)| {
            mb.degree()
                .cmp(&ma.degree())
                .then(ia.cmp(ib))
                .then_with(|| order_of(*ia).cmp(mb, ma))
        });
        Ok(out)
    }

    /// Monomial basis of the degree `<= d` part, with an index for
    /// coordinate extraction.
    pub fn coordinate_system(&self, d: u32) -> Result<Coordinates> {
        let basis = self.graded_basis(d)?;
        let index = basis.iter().cloned().enumerate().map(|(k, key)| (key, k)).collect();
        Ok(Coordinates {
            field: self.field(),
            basis,
            index,
        })
    }

    /// Reinterprets every component over another field.
    pub fn change_field(&self, field: Field) -> Result<AmbientRef> {
        let comps: Result<Vec<Component>> = self
            .components
            .iter()
            .map(|c| {
                let r = c.ring.with_field(field);
                let gens: Result<Vec<Polynomial>> = c.modulus.gens().iter().map(|g| g.change_field_into(&r)).collect();
                Component::new(&r, gens?)
            })
            .collect();
        AmbientRing::new(comps?)
    }

    pub fn change_field_of(&self, target: &AmbientRing, e: &Element) -> Result<Element> {
        let parts: Result<Vec<Polynomial>> = e
            .parts
            .iter()
            .zip(&target.components)
            .map(|(p, c)| p.change_field_into(&c.ring))
            .collect();
        target.element(parts?)
    }

    /// Single-ring presentation. The identity for one component.
    pub fn flatten(&self) -> Result<Flattened> {
        if self.components.len() == 1 {
            let c = &self.components[0];
            return Ok(Flattened {
                ring: c.ring.clone(),
                modulus: c.modulus.gens().to_vec(),
                offsets: vec![0],
                idempotents: Vec::new(),
            });
        }
        let mut names = Vec::new();
        let mut offsets = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            offsets.push(names.len());
            for n in c.ring.names() {
                names.push(format!("{n}#{i}"));
            }
        }
        let idempotents: Vec<usize> = (0..self.components.len()).map(|i| names.len() + i).collect();
        for i in 0..self.components.len() {
            names.push(format!("e#{i}"));
        }
        let tags = vec![VarTag::Aux; names.len()];
        let first = &self.components[0].ring;
        let ring = PolyRing::with_tags(self.field(), names, tags)?.with_budget(first.budget());
        let e = |i: usize| Polynomial::var(&ring, idempotents[i]);
        let one = Polynomial::one(&ring);
        let mut modulus = Vec::new();
        let mut sum = Polynomial::zero(&ring);
        for i in 0..self.components.len() {
            modulus.push(&(&e(i) * &e(i)) - &e(i));
            for j in 0..i {
                modulus.push(&e(i) * &e(j));
            }
            sum = &sum + &e(i);
            let c = &self.components[i];
            let map: Vec<usize> = (0..c.ring.nvars()).map(|v| offsets[i] + v).collect();
            for v in 0..c.ring.nvars() {
                let x = Polynomial::var(&ring, offsets[i] + v);
                modulus.push(&x * &(&one - &e(i)));
            }
            for g in c.modulus.gens() {
                modulus.push(&g.map_vars(&ring, &map) * &e(i));
            }
        }
        modulus.push(&sum - &one);
        Ok(Flattened {
            ring,
            modulus,
            offsets,
            idempotents,
        })
    }
}

/// Subalgebra membership `f ∈ k[g_1..g_m]` inside an ambient ring, with
/// certificates in variables `w1..wm`.
pub struct AmbientMembership {
    ambient: AmbientRef,
    flat: Flattened,
    oracle: SubalgebraMembership,
}

impl AmbientMembership {
    pub fn new(ambient: &AmbientRef, gens: &[Element]) -> Result<AmbientMembership> {
        let flat = ambient.flatten()?;
        let embedded: Vec<Polynomial> = gens.iter().map(|g| flat.embed(g)).collect();
        let oracle = SubalgebraMembership::new(&flat.ring, &embedded, &flat.modulus)?;
        Ok(AmbientMembership {
            ambient: ambient.clone(),
            flat,
            oracle,
        })
    }

    pub fn certificate(&self, f: &Element) -> Result<Option<Polynomial>> {
        self.oracle.certificate(&self.flat.embed(f))
    }

    pub fn contains(&self, f: &Element) -> Result<bool> {
        Ok(self.certificate(f)?.is_some())
    }

    /// Evaluates a certificate at the generators.
    pub fn replay(&self, certificate: &Polynomial) -> Result<Element> {
        let p = self.oracle.replay(certificate)?;
        self.flat.unembed(&self.ambient, &p)
    }

    /// Coefficients of the graph normal form of `f` on monomials that
    /// involve ambient variables: zero exactly for members. Linear in `f`.
    pub fn obstruction(&self, f: &Element) -> Result<Polynomial> {
        let r = self.oracle.graph_normal_form(&self.flat.embed(f))?;
        let n = self.oracle.base_vars();
        let terms: Vec<_> = r
            .terms()
            .iter()
            .filter(|(m, _)| (0..n).any(|i| m.uses(i)))
            .cloned()
            .collect();
        Ok(Polynomial::from_terms(r.ring(), terms))
    }

    pub fn certificate_ring(&self) -> &RingRef {
        self.oracle.certificate_ring()
    }
}

/// Coordinates with respect to the standard monomials of degree `<= d`.
#[derive(Clone, Debug)]
pub struct Coordinates {
    field: Field,
    basis: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl Coordinates {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[(usize, Monomial)] {
        &self.basis
    }

    /// Coordinate vector of a normal-form element; `None` if some term lies
    /// outside the truncation.
    pub fn vector(&self, e: &Element) -> Option<Vec<Scalar>> {
        let mut v = vec![self.field.zero(); self.basis.len()];
        for (i, p) in e.parts().iter().enumerate() {
            for (m, c) in p.terms() {
                let k = *self.index.get(&(i, m.clone()))?;
                v[k] = c.clone();
            }
        }
        Some(v)
    }

    pub fn element(&self, ambient: &AmbientRing, v: &[Scalar]) -> Element {
        let mut parts: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); ambient.ncomponents()];
        for (k, c) in v.iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                let (i, m) = &self.basis[k];
                parts[*i].push((m.clone(), c.clone()));
            }
        }
        Element {
            parts: parts
                .into_iter()
                .zip(ambient.components())
                .map(|(t, c)| Polynomial::from_terms(c.ring(), t))
                .collect(),
        }
    }

    /// Degree of the coordinate at index `k`.
    pub fn degree_of(&self, k: usize) -> u32 {
        self.basis[k].1.degree()
    }

    pub fn echelon(&self) -> Echelon {
        Echelon::new(self.field, self.basis.len())
    }
}

/// Images of one source component's variables inside one target component.
#[derive(Clone, Debug)]
pub struct MapBlock {
    pub source_component: usize,
    pub images: Vec<Polynomial>,
}

/// A ring homomorphism between ambient rings, optionally twisting
/// coefficients by `c -> c^q`.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: AmbientRef,
    target: AmbientRef,
    blocks: Vec<MapBlock>,
    twist: u64,
}

impl RingMap {
    /// `blocks[j]` describes target component `j`. Fails when counts do
    /// not match or a generator of a source modulus does not map to zero.
    pub fn new(source: &AmbientRef, target: &AmbientRef, blocks: Vec<MapBlock>) -> Result<RingMap> {
        if blocks.len() != target.ncomponents() {
            return Err(Error::ComponentMismatch {
                expected: target.ncomponents(),
                found: blocks.len(),
            });
        }
        for (j, b) in blocks.iter().enumerate() {
            if b.source_component >= source.ncomponents() {
                return Err(Error::ComponentMismatch {
                    expected: source.ncomponents(),
                    found: b.source_component + 1,
                });
            }
            let src = source.component(b.source_component);
            if b.images.len() != src.ring().nvars() {
                return Err(Error::VariableCountMismatch {
                    expected: src.ring().nvars(),
                    found: b.images.len(),
                });
            }
            let tring = target.component(j).ring();
            if b.images.iter().any(|p| p.ring().names() != tring.names()) {
                return Err(Error::RingMismatch);
            }
        }
        let blocks = blocks
            .into_iter()
            .enumerate()
            .map(|(j, b)| MapBlock {
                source_component: b.source_component,
                images: b.images.iter().map(|p| p.reorder(target.component(j).ring())).collect(),
            })
            .collect();
        let m = RingMap {
            source: source.clone(),
            target: target.clone(),
            blocks,
            twist: 1,
        };
        m.check_well_defined()?;
        Ok(m)
    }

    /// Map between single-component rings given by the images of the
    /// source variables.
    pub fn single(source: &AmbientRef, target: &AmbientRef, images: Vec<Polynomial>) -> Result<RingMap> {
        source.single()?;
        let blocks = (0..target.ncomponents())
            .map(|_| MapBlock {
                source_component: 0,
                images: images.clone(),
            })
            .collect();
        RingMap::new(source, target, blocks)
    }

    pub fn identity(ambient: &AmbientRef) -> RingMap {
        let blocks = ambient
            .components()
            .iter()
            .enumerate()
            .map(|(i, c)| MapBlock {
                source_component: i,
                images: (0..c.ring().nvars()).map(|v| Polynomial::var(c.ring(), v)).collect(),
            })
            .collect();
        RingMap {
            source: ambient.clone(),
            target: ambient.clone(),
            blocks,
            twist: 1,
        }
    }

    /// Raises coefficients to the `q`-th power before substituting.
    pub fn with_coefficient_twist(mut self, q: u64) -> Result<RingMap> {
        let p = self.source.field().characteristic();
        if p == 0 {
            return Err(Error::ZeroCharacteristic);
        }
        if !is_power_of(q, p) {
            return Err(Error::NotAPowerOfCharacteristic { q, p });
        }
        self.twist = q;
        Ok(self)
    }

    pub fn source(&self) -> &AmbientRef {
        &self.source
    }

    pub fn target(&self) -> &AmbientRef {
        &self.target
    }

    pub fn blocks(&self) -> &[MapBlock] {
        &self.blocks
    }

    fn check_well_defined(&self) -> Result<()> {
        for (j, b) in self.blocks.iter().enumerate() {
            let src = self.source.component(b.source_component);
            let tgt = self.target.component(j);
            for g in src.modulus().gens() {
                let img = tgt.reduce(&g.substitute(&b.images, tgt.ring())?)?;
                if !img.is_zero() {
                    return Err(Error::Unsupported(format!(
                        "a ring map sending the relation {g} to {img} instead of 0"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, f: &Element) -> Result<Element> {
        if f.parts().len() != self.source.ncomponents() {
            return Err(Error::ComponentMismatch {
                expected: self.source.ncomponents(),
                found: f.parts().len(),
            });
        }
        let field = self.source.field();
        let parts: Result<Vec<Polynomial>> = self
            .blocks
            .iter()
            .enumerate()
            .map(|(j, b)| {
                let src = &f.parts()[b.source_component];
                let src = if self.twist == 1 {
                    src.clone()
                } else {
                    src.map_coefficients(|c| field.pow(c, self.twist))
                };
                let tgt = self.target.component(j);
                tgt.reduce(&src.substitute(&b.images, tgt.ring())?)
            })
            .collect();
        Ok(Element { parts: parts? })
    }
}

pub(crate) fn is_power_of(q: u64, p: u64) -> bool {
    if q == 0 || p < 2 {
        return false;
    }
    let mut x = q;
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

/// The substitution image of `f` under `m`, in normal form.
pub fn evaluate_map(m: &RingMap, f: &Element) -> Result<Element> {
    m.apply(f)
}

/// Kernel of a map out of a single-component ring, as an ideal of the
/// source polynomial ring containing the source modulus.
pub fn ring_map_kernel(m: &RingMap) -> Result<Ideal> {
    let src = m.source().single()?.clone();
    let sring = src.ring();
    let flat = m.target().flatten()?;
    let fvars = flat.ring.nvars();
    // graph ring: flat target variables, then the source variables
    let mut names: Vec<String> = flat.ring.names().to_vec();
    for n in sring.names() {
        names.push(format!("{n}#src"));
    }
    let tags = vec![VarTag::Aux; names.len()];
    let elim: Vec<usize> = (0..fvars).collect();
    let graph = PolyRing::with_tags(sring.field(), names, tags)?
        .with_budget(sring.budget())
        .with_order(MonomialOrder::eliminating(fvars + sring.nvars(), &elim));
    let to_graph: Vec<usize> = (0..fvars).collect();
    let mut gens: Vec<Polynomial> = flat.modulus.iter().map(|g| g.map_vars(&graph, &to_graph)).collect();
    for v in 0..sring.nvars() {
        let xv = Polynomial::var(sring, v);
        let img = m.apply(&m.source().from_poly(&xv)?)?;
        let img = flat.embed(&img).map_vars(&graph, &to_graph);
        gens.push(&Polynomial::var(&graph, fvars + v) - &img);
    }
    let kernel = eliminate(&Ideal::new(&graph, gens), &elim)?;
    let back: Vec<usize> = (0..graph.nvars()).map(|i| i.saturating_sub(fvars)).collect();
    let gens: Vec<Polynomial> = kernel.gens().iter().map(|g| g.map_vars(sring, &back)).collect();
    Ideal::new(sring, gens).canonical()
}
