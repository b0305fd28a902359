//! Cocycles `f(x,y)` modulo `J = (f_i(x) - f_i(y))` and the effectivity
//! test.
//!
//! In degree `d = deg f`, with everything in normal form modulo `J`:
//! `V` is spanned by the differences `g(x) - g(y)` for monomials `g` of
//! degree `d`, and `W` is the space of forms `h` with
//! `h(x,y) + h(y,z) - h(x,z) ∈ J(x,y) + J(y,z)`. The relation `J + (f)` is
//! effective iff the class of `f` in `W/V` vanishes.

use std::collections::HashMap;
use std::fmt;

use crate::eqrel::{relation_from_map_with, Copies, RelationPresentation};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groebner::{finite_over_block, GroebnerBasis, Ideal};
use crate::linalg::{kernel, Echelon};
use crate::poly::{Monomial, Polynomial, RingRef};

/// Homogeneous maps `f_1..f_m` on a polynomial ring and a homogeneous
/// candidate cocycle in the doubled ring.
#[derive(Clone, Debug)]
pub struct CocycleData {
    copies: Copies,
    maps: Vec<Polynomial>,
    cocycle: Polynomial,
}

impl CocycleData {
    /// Fails unless the ambient is a single polynomial ring, every input is
    /// homogeneous, and `k[x]` is finite over `k[f_1..f_m]`.
    pub fn new(copies: Copies, maps: Vec<Polynomial>, cocycle: Polynomial) -> Result<CocycleData> {
        let comp = copies.ambient().single()?;
        if !comp.modulus().is_zero() {
            return Err(Error::Unsupported("cocycle data over a quotient ring".into()));
        }
        let base = comp.ring().clone();
        for f in &maps {
            if f.ring().names() != base.names() {
                return Err(Error::RingMismatch);
            }
            if !f.is_homogeneous() {
                return Err(Error::NotHomogeneous(f.to_string()));
            }
        }
        let doubled = copies.pair_ring(0, 0)?;
        if cocycle.ring().names() != doubled.names() {
            return Err(Error::RingMismatch);
        }
        if !cocycle.is_homogeneous() {
            return Err(Error::NotHomogeneous(cocycle.to_string()));
        }
        let data = CocycleData {
            maps: maps.iter().map(|f| f.reorder(&base)).collect(),
            cocycle: cocycle.reorder(&doubled),
            copies,
        };
        let x: Vec<usize> = (0..base.nvars()).collect();
        if !finite_over_block(&data.j_ideal()?, &x)? {
            return Err(Error::NotFinite("k[x] over the subalgebra of the maps".into()));
        }
        Ok(data)
    }

    pub fn copies(&self) -> &Copies {
        &self.copies
    }

    pub fn maps(&self) -> &[Polynomial] {
        &self.maps
    }

    pub fn cocycle(&self) -> &Polynomial {
        &self.cocycle
    }

    pub fn field(&self) -> Field {
        self.cocycle.field()
    }

    /// `deg f`, the working degree; 0 for `f = 0`.
    pub fn degree(&self) -> u32 {
        self.cocycle.degree().unwrap_or(0)
    }

    pub fn base_ring(&self) -> &RingRef {
        self.copies.ambient().component(0).ring()
    }

    /// `J(x,y)` in the doubled ring.
    pub fn j_ideal(&self) -> Result<Ideal> {
        Ok(self.j_relation()?.block(0, 0).clone())
    }

    fn j_relation(&self) -> Result<RelationPresentation> {
        let a = self.copies.ambient();
        let maps = self.maps.iter().map(|f| a.from_poly(f)).collect::<Result<Vec<_>>>()?;
        relation_from_map_with(self.copies.clone(), &maps)
    }

    /// The relation `I = J + (f)`.
    pub fn relation(&self) -> Result<RelationPresentation> {
        self.j_relation()?.with_cocycle(&self.cocycle)
    }

    /// The same data over another prime field or `QQ`.
    pub fn change_field(&self, field: Field) -> Result<CocycleData> {
        let ambient = self.copies.ambient().change_field(field)?;
        let copies = self.copies.rebased(&ambient)?;
        let base = ambient.component(0).ring().clone();
        let doubled = copies.pair_ring(0, 0)?;
        let maps = self.maps.iter().map(|f| f.change_field_into(&base)).collect::<Result<Vec<_>>>()?;
        CocycleData::new(copies.clone(), maps, self.cocycle.change_field_into(&doubled)?)
    }

    /// `J(x,y) + J(y,z)` in the tripled ring, and the three placements of
    /// the doubled ring inside it.
    fn tripled(&self) -> Result<Tripled> {
        let ring = self.copies.triple_ring(0, 0, 0)?;
        let n = self.base_ring().nvars();
        let xy: Vec<usize> = (0..2 * n).collect();
        let yz: Vec<usize> = (n..3 * n).collect();
        let xz: Vec<usize> = (0..n).chain(2 * n..3 * n).collect();
        let j = self.j_ideal()?;
        let joint = j.map_vars(&ring, &xy).sum(&j.map_vars(&ring, &yz));
        let basis = joint.groebner()?;
        Ok(Tripled { ring, xy, yz, xz, basis })
    }
}

struct Tripled {
    ring: RingRef,
    xy: Vec<usize>,
    yz: Vec<usize>,
    xz: Vec<usize>,
    basis: std::sync::Arc<GroebnerBasis>,
}

impl Tripled {
    /// Normal form of `h(x,y) + h(y,z) - h(x,z)`.
    fn defect(&self, h: &Polynomial) -> Result<Polynomial> {
        let s = &(&h.map_vars(&self.ring, &self.xy) + &h.map_vars(&self.ring, &self.yz)) - &h.map_vars(&self.ring, &self.xz);
        self.basis.normal_form(&s)
    }
}

/// Whether `f(x,y) + f(y,z) - f(x,z) ∈ J(x,y) + J(y,z)`.
pub fn check_cocycle(c: &CocycleData) -> Result<bool> {
    Ok(c.tripled()?.defect(&c.cocycle)?.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Effectivity {
    Effective,
    Noneffective,
}

impl fmt::Display for Effectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Effectivity::Effective => "effective",
            Effectivity::Noneffective => "noneffective",
        })
    }
}

#[derive(Clone, Debug)]
pub struct EffectivityReport {
    pub field: Field,
    pub degree: u32,
    pub verdict: Effectivity,
    pub dim_v: usize,
    pub dim_w: usize,
    /// Coordinates of the class of `f` in [`Self::quotient_basis`].
    pub class_coordinates: Vec<Scalar>,
    /// Representatives of a basis of `W/V`, reduced modulo `V` and `J`.
    pub quotient_basis: Vec<Polynomial>,
}

impl EffectivityReport {
    pub fn dim_quotient(&self) -> usize {
        self.dim_w - self.dim_v
    }
}

/// Computes `V ⊆ W` in degree `deg f` and the class of `f` in `W/V`.
pub fn effectivity_test(c: &CocycleData) -> Result<EffectivityReport> {
    let field = c.field();
    let t = c.tripled()?;
    if !t.defect(&c.cocycle)?.is_zero() {
        return Err(Error::NotACocycle);
    }
    let d = c.degree();
    let doubled = c.copies.pair_ring(0, 0)?;
    let j = c.j_ideal()?;
    let jb = j.groebner()?;

    // standard monomials of degree d modulo J, leading first
    let lms: Vec<Monomial> = jb.leading_monomials().cloned().collect();
    let mut standard: Vec<Monomial> = doubled
        .monomial_basis(d, true)
        .into_iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .collect();
    standard.reverse();
    let index: HashMap<&Monomial, usize> = standard.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let vector = |p: &Polynomial| -> Vec<Scalar> {
        let mut v = vec![field.zero(); standard.len()];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let poly = |v: &[Scalar]| Polynomial::from_terms(&doubled, standard.iter().cloned().zip(v.iter().cloned()));

    let base = c.base_ring();
    let n = base.nvars();
    let first: Vec<usize> = (0..n).collect();
    let second: Vec<usize> = (n..2 * n).collect();
    let mut v_span = Echelon::new(field, standard.len());
    for g in base.monomial_basis(d, true) {
        let g = Polynomial::monomial(base, g, field.one());
        let diff = &g.map_vars(&doubled, &first) - &g.map_vars(&doubled, &second);
        v_span.insert(vector(&jb.normal_form(&diff)?));
    }

    let mut dindex: HashMap<Monomial, usize> = HashMap::new();
    let mut sparse = Vec::with_capacity(standard.len());
    for m in &standard {
        let h = Polynomial::monomial(&doubled, m.clone(), field.one());
        let mut col = Vec::new();
        for (t, c) in t.defect(&h)?.into_terms() {
            let next = dindex.len();
            col.push((*dindex.entry(t).or_insert(next), c));
        }
        sparse.push(col);
    }
    let images: Vec<Vec<Scalar>> = sparse
        .into_iter()
        .map(|col| {
            let mut v = vec![field.zero(); dindex.len()];
            for (k, c) in col {
                v[k] = c;
            }
            v
        })
        .collect();
    let w_rows = kernel(field, &images, dindex.len());

    let mut quotient = Echelon::new(field, standard.len());
    for w in &w_rows {
        quotient.insert(v_span.reduce(w));
    }
    let class = v_span.reduce(&vector(&jb.normal_form(&c.cocycle)?));
    let class = quotient.reduce(&class).iter().all(|x| num_traits::Zero::is_zero(x)).then(|| {
        quotient.pivots().iter().map(|&p| class[p].clone()).collect::<Vec<_>>()
    });
    let class_coordinates = class.ok_or(Error::NotACocycle)?;
    let verdict = if class_coordinates.iter().all(|x| num_traits::Zero::is_zero(x)) {
        Effectivity::Effective
    } else {
        Effectivity::Noneffective
    };
    Ok(EffectivityReport {
        field,
        degree: d,
        verdict,
        dim_v: v_span.rank(),
        dim_w: w_rows.len(),
        class_coordinates,
        quotient_basis: quotient.rows().iter().map(|r| poly(r)).collect(),
    })
}

/// [`effectivity_test`] over each field in turn.
pub fn effectivity_over(c: &CocycleData, fields: &[Field]) -> Result<Vec<EffectivityReport>> {
    fields.iter().map(|&f| effectivity_test(&c.change_field(f)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::AmbientRing;
    use crate::eqrel::{verify_relation, Mode};
    use crate::poly::ring;
    use crate::syntax::parse_polynomial;

    fn binary_form_cocycle(field: Field) -> CocycleData {
        let base = ring(field, &["x1", "x2"]);
        let a = AmbientRing::polynomial(&base);
        let copies = Copies::with_stems(&a, ["x", "y", "z"]).unwrap();
        let d = copies.pair_ring(0, 0).unwrap();
        let maps = ["x1^2", "x1*x2 - x2^2", "x2^3"].iter().map(|s| parse_polynomial(&base, s).unwrap()).collect();
        let f = parse_polynomial(&d, "(x1*y2 - x2*y1)*y2^3").unwrap();
        CocycleData::new(copies, maps, f).unwrap()
    }

    #[test]
    fn binary_form_cocycle_over_q() {
        let c = binary_form_cocycle(Field::Rationals);
        assert!(check_cocycle(&c).unwrap());
        let rep = effectivity_test(&c).unwrap();
        assert_eq!(rep.verdict, Effectivity::Noneffective);
        assert_eq!(rep.dim_quotient(), 1);
        assert_eq!(rep.degree, 5);
        let rel = c.relation().unwrap();
        assert!(verify_relation(&rel, Mode::Scheme).unwrap().all_passed());
    }

    #[test]
    fn coboundaries_are_effective() {
        let c = binary_form_cocycle(Field::Rationals);
        let d = c.copies().pair_ring(0, 0).unwrap();
        let g = parse_polynomial(&d, "x1^3*x2^2 - y1^3*y2^2").unwrap();
        let c2 = CocycleData::new(c.copies().clone(), c.maps().to_vec(), g).unwrap();
        assert!(check_cocycle(&c2).unwrap());
        assert_eq!(effectivity_test(&c2).unwrap().verdict, Effectivity::Effective);
    }

    #[test]
    fn non_cocycle_rejected() {
        let base = ring(Field::Rationals, &["x1"]);
        let a = AmbientRing::polynomial(&base);
        let copies = Copies::with_stems(&a, ["x", "y", "z"]).unwrap();
        let d = copies.pair_ring(0, 0).unwrap();
        let c = CocycleData::new(copies, vec![parse_polynomial(&base, "x1^2").unwrap()], parse_polynomial(&d, "x1*y1").unwrap()).unwrap();
        assert!(!check_cocycle(&c).unwrap());
        assert!(matches!(effectivity_test(&c), Err(Error::NotACocycle)));
    }

    #[test]
    fn inhomogeneous_and_infinite_rejected() {
        let base = ring(Field::Rationals, &["x1", "x2"]);
        let a = AmbientRing::polynomial(&base);
        let copies = Copies::with_stems(&a, ["x", "y", "z"]).unwrap();
        let d = copies.pair_ring(0, 0).unwrap();
        let zero = Polynomial::zero(&d);
        let p = |s: &str| parse_polynomial(&base, s).unwrap();
        assert!(matches!(
            CocycleData::new(copies.clone(), vec![p("x1 + x2^2")], zero.clone()),
            Err(Error::NotHomogeneous(_))
        ));
        assert!(matches!(CocycleData::new(copies, vec![p("x1")], zero), Err(Error::NotFinite(_))));
    }
}
