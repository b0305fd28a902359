//! Affine pinching: given `R`, an ideal `I_Z` and a subalgebra
//! `S ⊂ R/I_Z` over which `R/I_Z` is module-finite, the algebra
//! `q⁻¹(S) ⊂ R` is generated by lifts of generators of `S`, generators
//! `h_k` of `I_Z`, and the products `r_i h_k` with `r_i` module generators.
//!
//! Push-out checks and subalgebra intersections are carried out on the
//! degree `<= d` part, and are evidence only up to that degree.

use std::fmt;

use crate::ambient::{AmbientMembership, AmbientRef, AmbientRing, Component, Coordinates, Element};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::Ideal;
use crate::linalg::{kernel, Echelon};
use crate::poly::Polynomial;
use crate::quotient::{algebra_span, default_names, present_subalgebra, TruncatedSubalgebra};

/// The data `(R, I_Z, S)` of a gluing, with module generators of `R/I_Z`
/// over `S` (the unit is implicit).
#[derive(Clone, Debug)]
pub struct PinchInput {
    pub ambient: AmbientRef,
    pub ideal: Vec<Element>,
    pub lifts: Vec<Element>,
    pub module_gens: Vec<Element>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorOrigin {
    Lift(usize),
    Ideal(usize),
    Product { module: usize, ideal: usize },
}

impl fmt::Display for GeneratorOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorOrigin::Lift(j) => write!(f, "lift s{}", j + 1),
            GeneratorOrigin::Ideal(k) => write!(f, "ideal h{}", k + 1),
            GeneratorOrigin::Product { module, ideal } => write!(f, "product r{}*h{}", module + 1, ideal + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PinchResult {
    pub generators: Vec<Element>,
    pub origins: Vec<GeneratorOrigin>,
    /// Degree through which the module-finiteness witness was checked.
    pub degree: u32,
}

impl PinchResult {
    /// The ideal of relations among the generators, in variables
    /// `z1..zm`.
    pub fn presentation(&self, ambient: &AmbientRef) -> Result<Ideal> {
        present_subalgebra(ambient, &self.generators, &default_names(self.generators.len()))
    }
}

/// `R/I_Z`, componentwise.
pub fn residue_ambient(ambient: &AmbientRing, ideal: &[Element]) -> Result<AmbientRef> {
    let comps = ambient
        .components()
        .iter()
        .enumerate()
        .map(|(a, c)| {
            let mut gens = c.modulus().gens().to_vec();
            gens.extend(ideal.iter().map(|h| h.part(a).clone()));
            Component::new(c.ring(), gens)
        })
        .collect::<Result<Vec<_>>>()?;
    AmbientRing::new(comps)
}

fn residue(target: &AmbientRing, e: &Element) -> Result<Element> {
    target.element(e.parts().to_vec())
}

impl PinchInput {
    fn check_shapes(&self) -> Result<()> {
        let n = self.ambient.ncomponents();
        for e in self.ideal.iter().chain(&self.lifts).chain(&self.module_gens) {
            if e.parts().len() != n {
                return Err(Error::ComponentMismatch {
                    expected: n,
                    found: e.parts().len(),
                });
            }
        }
        Ok(())
    }

    /// First standard monomial of `R/I_Z` of degree `<= d` outside
    /// `Σ S·r_i + S`.
    pub fn finiteness_failure(&self, d: u32) -> Result<Option<Element>> {
        let quotient = residue_ambient(&self.ambient, &self.ideal)?;
        let lifts = self.lifts.iter().map(|s| residue(&quotient, s)).collect::<Result<Vec<_>>>()?;
        let s = algebra_span(&quotient, &lifts, d)?;
        let coords = s.coordinates();
        let mut span = coords.echelon();
        let mut multipliers = vec![quotient.one()];
        for r in &self.module_gens {
            multipliers.push(residue(&quotient, r)?);
        }
        for b in s.basis() {
            for r in &multipliers {
                if let Some(v) = coords.vector(&quotient.mul(&b, r)?) {
                    span.insert(v);
                }
            }
        }
        Ok(first_missing(&quotient, coords, &span))
    }
}

fn first_missing(ambient: &AmbientRing, coords: &Coordinates, span: &Echelon) -> Option<Element> {
    let field = ambient.field();
    (0..coords.len()).rev().find_map(|k| {
        let mut v = vec![field.zero(); coords.len()];
        v[k] = field.one();
        (!span.contains(&v)).then(|| coords.element(ambient, &v))
    })
}

/// Generators `{s_j} ∪ {h_k} ∪ {r_i h_k}`, deduplicated, zeros dropped.
/// Each generator's residue is checked to lie in `S`.
pub fn pinch_generators(input: &PinchInput, d: u32) -> Result<PinchResult> {
    input.check_shapes()?;
    if let Some(w) = input.finiteness_failure(d)? {
        return Err(Error::FinitenessWitness {
            degree: w.degree().unwrap_or(0),
            witness: w.to_string(),
        });
    }
    let a = &input.ambient;
    let mut generators: Vec<Element> = Vec::new();
    let mut origins = Vec::new();
    let mut push = |g: Element, o: GeneratorOrigin| {
        if !g.is_zero() && g.degree() != Some(0) && !generators.contains(&g) {
            generators.push(g);
            origins.push(o);
        }
    };
    for (j, s) in input.lifts.iter().enumerate() {
        push(s.clone(), GeneratorOrigin::Lift(j));
    }
    for (k, h) in input.ideal.iter().enumerate() {
        push(h.clone(), GeneratorOrigin::Ideal(k));
    }
    for (i, r) in input.module_gens.iter().enumerate() {
        for (k, h) in input.ideal.iter().enumerate() {
            push(a.mul(r, h)?, GeneratorOrigin::Product { module: i, ideal: k });
        }
    }
    let quotient = residue_ambient(a, &input.ideal)?;
    let lifts = input.lifts.iter().map(|s| residue(&quotient, s)).collect::<Result<Vec<_>>>()?;
    let oracle = AmbientMembership::new(&quotient, &lifts)?;
    for g in &generators {
        if !oracle.contains(&residue(&quotient, g)?)? {
            return Err(Error::Unsupported(format!("generator {g} does not reduce into the subalgebra")));
        }
    }
    Ok(PinchResult {
        generators,
        origins,
        degree: d,
    })
}

/// A diagram to test as a universal push-out.
#[derive(Clone, Debug)]
pub enum PushoutDiagram {
    /// A gluing and its computed pinched algebra.
    Pinch(PinchInput, PinchResult),
    /// `Spec k[B1] <- X -> Spec k[B2]` inside `X`, with a claimed push-out
    /// algebra `k[C] ⊂ k[B1] ∩ k[B2]`.
    Span {
        ambient: AmbientRef,
        first: Vec<Element>,
        second: Vec<Element>,
        claimed: Vec<Element>,
    },
}

#[derive(Clone, Debug)]
pub struct PushoutCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<Element>,
}

#[derive(Clone, Debug)]
pub struct PushoutReport {
    pub degree: u32,
    pub checks: Vec<PushoutCheck>,
}

impl PushoutReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The first failing check's witness.
    pub fn witness(&self) -> Option<&Element> {
        self.checks.iter().find(|c| !c.passed).and_then(|c| c.witness.as_ref())
    }
}

fn check(name: &'static str, witness: Option<Element>) -> PushoutCheck {
    PushoutCheck {
        name,
        passed: witness.is_none(),
        witness,
    }
}

/// First basis element of `a` (degrees ascending) outside `b`, reduced
/// modulo `b`.
fn first_outside(a: &TruncatedSubalgebra, b: &TruncatedSubalgebra) -> Option<Element> {
    a.basis().into_iter().find_map(|f| {
        let r = b.remainder(&f)?;
        (!r.is_zero()).then_some(r)
    })
}

/// Degree-truncated push-out checks.
pub fn verify_pushout(diagram: &PushoutDiagram, d: u32) -> Result<PushoutReport> {
    let checks = match diagram {
        PushoutDiagram::Pinch(input, result) => {
            let a = &input.ambient;
            let pinched = algebra_span(a, &result.generators, d)?;
            // (a) the ideal generated by I_Z, truncated, inside the algebra
            let coords = pinched.coordinates();
            let mut ideal_span = coords.echelon();
            let mut ideal_fail = None;
            for (i, m) in coords.basis().iter().rev() {
                let mono = a.in_component(*i, &Polynomial::monomial(a.component(*i).ring(), m.clone(), a.field().one()))?;
                for h in &input.ideal {
                    let p = a.mul(&mono, h)?;
                    if let Some(v) = coords.vector(&p) {
                        ideal_span.insert(v.clone());
                        if ideal_fail.is_none() && !pinched.contains(&p) {
                            ideal_fail = Some(p);
                        }
                    }
                }
            }
            // (b) residues of the generators generate S
            let quotient = residue_ambient(a, &input.ideal)?;
            let res_gens = result.generators.iter().map(|g| residue(&quotient, g)).collect::<Result<Vec<_>>>()?;
            let lifts = input.lifts.iter().map(|s| residue(&quotient, s)).collect::<Result<Vec<_>>>()?;
            let generated = algebra_span(&quotient, &res_gens, d)?;
            let s = algebra_span(&quotient, &lifts, d)?;
            let residues_fail = first_outside(&s, &generated).or_else(|| first_outside(&generated, &s));
            // (c) ker[O_Y -> O_V] = I_Z in each degree
            let kernel_all = residue_kernel(a, &quotient, coords)?;
            let kernel_y = intersect_spans(coords, &kernel_all, pinched.echelon());
            let kernel_fail = first_outside_rows(a, coords, &kernel_all, &kernel_y);
            vec![
                check("ideal-contained", ideal_fail),
                check("residues-generate", residues_fail),
                check("kernel-equality", kernel_fail),
            ]
        }
        PushoutDiagram::Span {
            ambient,
            first,
            second,
            claimed,
        } => {
            let meet = subalgebra_intersection_trunc(ambient, first, second, d)?;
            let target = subalgebra_trunc(ambient, claimed, d)?;
            vec![
                check("claimed-in-intersection", first_outside(&target, &meet)),
                check("intersection-in-claimed", first_outside(&meet, &target)),
            ]
        }
    };
    Ok(PushoutReport { degree: d, checks })
}

/// Kernel of `R_{<=d} -> R/I_Z`, in the coordinates of `R`.
fn residue_kernel(ambient: &AmbientRing, quotient: &AmbientRing, coords: &Coordinates) -> Result<Echelon> {
    let field = ambient.field();
    let mut images = Vec::with_capacity(coords.len());
    let mut cols: Vec<(usize, crate::poly::Monomial)> = Vec::new();
    let mut raw = Vec::new();
    for (i, m) in coords.basis() {
        let f = ambient.in_component(*i, &Polynomial::monomial(ambient.component(*i).ring(), m.clone(), field.one()))?;
        let r = residue(quotient, &f)?;
        let mut col = Vec::new();
        for (a, p) in r.parts().iter().enumerate() {
            for (t, c) in p.terms() {
                let key = (a, t.clone());
                let k = cols.iter().position(|x| *x == key).unwrap_or_else(|| {
                    cols.push(key);
                    cols.len() - 1
                });
                col.push((k, c.clone()));
            }
        }
        raw.push(col);
    }
    for col in raw {
        let mut v = vec![field.zero(); cols.len()];
        for (k, c) in col {
            v[k] = c;
        }
        images.push(v);
    }
    Ok(Echelon::from_rows(field, coords.len(), kernel(field, &images, cols.len())))
}

/// `U ∩ W` for subspaces in the same coordinates.
fn intersect_spans(coords: &Coordinates, u: &Echelon, w: &Echelon) -> Echelon {
    // c ∈ ker [U | -W] gives Σ a_i u_i = Σ b_j w_j
    let f = u.field();
    let mut images: Vec<Vec<Scalar>> = u.rows().to_vec();
    images.extend(w.rows().iter().map(|r| r.iter().map(|x| f.neg(x)).collect()));
    let ker = kernel(f, &images, coords.len());
    let mut out = Echelon::new(f, coords.len());
    for c in ker {
        let mut v = vec![f.zero(); coords.len()];
        for (a, row) in c.iter().zip(u.rows()) {
            if !num_traits::Zero::is_zero(a) {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = f.add(x, &f.mul(a, y));
                }
            }
        }
        out.insert(v);
    }
    out
}

fn first_outside_rows(ambient: &AmbientRing, coords: &Coordinates, a: &Echelon, b: &Echelon) -> Option<Element> {
    a.rows().iter().rev().find_map(|r| {
        let rem = b.reduce(r);
        rem.iter()
            .any(|x| !num_traits::Zero::is_zero(x))
            .then(|| coords.element(ambient, &rem))
    })
}

/// Exact truncation `k[gens] ∩ R_{<=d}` via the linear membership sieve.
pub fn subalgebra_trunc(ambient: &AmbientRef, gens: &[Element], d: u32) -> Result<TruncatedSubalgebra> {
    sieve(ambient, &[gens], d)
}

/// `k[gens1] ∩ k[gens2]` through degree `d`: the kernel of the two stacked
/// membership sieves.
pub fn subalgebra_intersection_trunc(ambient: &AmbientRef, gens1: &[Element], gens2: &[Element], d: u32) -> Result<TruncatedSubalgebra> {
    sieve(ambient, &[gens1, gens2], d)
}

fn sieve(ambient: &AmbientRef, families: &[&[Element]], d: u32) -> Result<TruncatedSubalgebra> {
    let coords = ambient.coordinate_system(d)?;
    let field = ambient.field();
    let oracles = families
        .iter()
        .map(|g| AmbientMembership::new(ambient, g))
        .collect::<Result<Vec<_>>>()?;
    let mut index: std::collections::HashMap<(usize, crate::poly::Monomial), usize> = Default::default();
    let mut sparse = Vec::with_capacity(coords.len());
    for (i, m) in coords.basis() {
        let f = ambient.in_component(*i, &Polynomial::monomial(ambient.component(*i).ring(), m.clone(), field.one()))?;
        let mut col = Vec::new();
        for (k, o) in oracles.iter().enumerate() {
            for (t, c) in o.obstruction(&f)?.into_terms() {
                let next = index.len();
                col.push((*index.entry((k, t)).or_insert(next), c));
            }
        }
        sparse.push(col);
    }
    let images: Vec<Vec<Scalar>> = sparse
        .into_iter()
        .map(|col| {
            let mut v = vec![field.zero(); index.len()];
            for (k, c) in col {
                v[k] = c;
            }
            v
        })
        .collect();
    let span = Echelon::from_rows(field, coords.len(), kernel(field, &images, index.len()));
    Ok(TruncatedSubalgebra::from_echelon(ambient, d, coords, span))
}
