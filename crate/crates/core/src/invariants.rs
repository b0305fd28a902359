//! Finite groups acting by linear substitutions on a polynomial ring.

use std::collections::HashMap;

use crate::ambient::{AmbientRef, AmbientRing};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::kernel;
use crate::poly::{Monomial, Polynomial, RingRef, VarTag};

const MAX_ORDER: usize = 1000;

/// A finite group of linear substitutions, each given by the images of the
/// variables. The identity comes first.
#[derive(Clone, Debug)]
pub struct GroupAction {
    ring: RingRef,
    elements: Vec<Vec<Polynomial>>,
}

fn is_linear_form(p: &Polynomial) -> bool {
    !p.is_zero() && p.is_homogeneous() && p.degree() == Some(1)
}

impl GroupAction {
    /// Validates that `elements` contains the identity and is closed under
    /// composition and inverses.
    pub fn new(ring: &RingRef, elements: Vec<Vec<Polynomial>>) -> Result<GroupAction> {
        let elements: Vec<Vec<Polynomial>> = elements
            .into_iter()
            .map(|g| Self::normalize(ring, g))
            .collect::<Result<_>>()?;
        let mut unique: Vec<Vec<Polynomial>> = Vec::new();
        for g in elements {
            if !unique.contains(&g) {
                unique.push(g);
            }
        }
        let id = Self::identity_images(ring);
        let Some(pos) = unique.iter().position(|g| *g == id) else {
            return Err(Error::NotAGroup("the identity is missing".into()));
        };
        unique.swap(0, pos);
        let action = GroupAction {
            ring: ring.clone(),
            elements: unique,
        };
        for g in &action.elements {
            for h in &action.elements {
                if !action.elements.contains(&action.compose(g, h)?) {
                    return Err(Error::NotAGroup("not closed under composition".into()));
                }
            }
            if !action.elements.iter().any(|h| action.compose(g, h).map(|c| c == id).unwrap_or(false)) {
                return Err(Error::NotAGroup("an element has no inverse".into()));
            }
        }
        Ok(action)
    }

    /// The group generated by `gens`; fails if it exceeds 1000 elements.
    pub fn generated_by(ring: &RingRef, gens: &[Vec<Polynomial>]) -> Result<GroupAction> {
        let gens: Vec<Vec<Polynomial>> = gens.iter().map(|g| Self::normalize(ring, g.clone())).collect::<Result<_>>()?;
        let mut elements = vec![Self::identity_images(ring)];
        let tmp = GroupAction {
            ring: ring.clone(),
            elements: Vec::new(),
        };
        let mut k = 0;
        while k < elements.len() {
            for s in &gens {
                let next = tmp.compose(&elements[k], s)?;
                if !elements.contains(&next) {
                    if elements.len() >= MAX_ORDER {
                        return Err(Error::NotAGroup(format!("more than {MAX_ORDER} elements")));
                    }
                    elements.push(next);
                }
            }
            k += 1;
        }
        GroupAction::new(ring, elements)
    }

    fn identity_images(ring: &RingRef) -> Vec<Polynomial> {
        (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect()
    }

    fn normalize(ring: &RingRef, g: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
        if g.len() != ring.nvars() {
            return Err(Error::VariableCountMismatch {
                expected: ring.nvars(),
                found: g.len(),
            });
        }
        g.into_iter()
            .map(|p| {
                if p.ring().names() != ring.names() {
                    return Err(Error::RingMismatch);
                }
                if !is_linear_form(&p) {
                    return Err(Error::NotAGroup(format!("{p} is not a linear form")));
                }
                Ok(p.reorder(ring))
            })
            .collect()
    }

    /// Images of `x` under "apply `g`, then `h`" as substitutions.
    fn compose(&self, g: &[Polynomial], h: &[Polynomial]) -> Result<Vec<Polynomial>> {
        g.iter().map(|p| p.substitute(h, &self.ring)).collect()
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn ambient(&self) -> AmbientRef {
        AmbientRing::polynomial(&self.ring)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<Polynomial>] {
        &self.elements
    }

    /// `g·f`, substituting `g`'s images into `f`.
    pub fn act(&self, g: usize, f: &Polynomial) -> Result<Polynomial> {
        f.reorder(&self.ring).substitute(&self.elements[g], &self.ring)
    }

    pub fn is_invariant(&self, f: &Polynomial) -> Result<bool> {
        let f = f.reorder(&self.ring);
        for g in 0..self.order() {
            if self.act(g, &f)? != f {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `(1/|G|) Σ g·f`.
pub fn reynolds_project(f: &Polynomial, group: &GroupAction) -> Result<Polynomial> {
    let field = group.ring.field();
    let n = group.order() as u64;
    if field.divides_characteristic(n) {
        return Err(Error::CharacteristicDividesOrder {
            p: field.characteristic(),
            order: group.order(),
        });
    }
    let mut acc = Polynomial::zero(&group.ring);
    for g in 0..group.order() {
        acc = &acc + &group.act(g, f)?;
    }
    Ok(acc.scale(&field.inv(&field.from_int(n as i64))))
}

/// For each degree `e <= d`, a basis of the invariant forms of degree `e`,
/// from the fixed-point system `g·f = f`. Valid in every characteristic.
pub fn invariant_basis(group: &GroupAction, d: u32) -> Result<Vec<Vec<Polynomial>>> {
    let ring = &group.ring;
    let field = ring.field();
    let mut out = Vec::new();
    for e in 0..=d {
        let mut monos: Vec<Monomial> = ring.monomial_basis(e, true);
        monos.reverse();
        let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let n = monos.len();
        let mut images: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        for m in &monos {
            let f = Polynomial::monomial(ring, m.clone(), field.one());
            let mut col = Vec::with_capacity(n * group.order());
            for g in 1..group.order() {
                let diff = &group.act(g, &f)? - &f;
                let mut block = vec![field.zero(); n];
                for (t, c) in diff.terms() {
                    block[index[t]] = c.clone();
                }
                col.extend(block);
            }
            images.push(col);
        }
        let dim = n * (group.order() - 1);
        let basis = kernel(field, &images, dim)
            .into_iter()
            .map(|v| Polynomial::from_terms(ring, monos.iter().cloned().zip(v)))
            .collect();
        out.push(basis);
    }
    Ok(out)
}

/// Elementary symmetric functions of the orbit multiset `{g·r : g ∈ G}`
/// and the monic polynomial they define.
#[derive(Clone, Debug)]
pub struct OrbitEquation {
    /// `σ_1 .. σ_n` with `n = |G|`.
    pub sigmas: Vec<Polynomial>,
    /// `Π (T - g·r) = T^n - σ_1 T^(n-1) + σ_2 T^(n-2) - ...`, in the ring
    /// extended by `T`.
    pub equation: Polynomial,
    pub variable: usize,
}

impl OrbitEquation {
    /// The equation with `T` replaced by `r`.
    pub fn evaluate_at(&self, r: &Polynomial) -> Result<Polynomial> {
        let ring = self.equation.ring();
        let base = r.ring();
        let images: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| if i == self.variable { r.clone() } else { Polynomial::var(base, i) })
            .collect();
        self.equation.substitute(&images, base)
    }
}

pub fn orbit_symmetric_generators(r: &Polynomial, group: &GroupAction) -> Result<OrbitEquation> {
    let base = &group.ring;
    let t = base.fresh_name("T");
    let ext = base.extended(&[t], VarTag::Aux)?;
    let tvar = base.nvars();
    let embed: Vec<usize> = (0..tvar).collect();
    let tpoly = Polynomial::var(&ext, tvar);
    let mut equation = Polynomial::one(&ext);
    let mut sigmas = vec![Polynomial::one(base)];
    for g in 0..group.order() {
        let root = group.act(g, r)?;
        equation = &equation * &(&tpoly - &root.map_vars(&ext, &embed));
        // e_j <- e_j + root * e_(j-1), from the top down
        sigmas.push(Polynomial::zero(base));
        for j in (1..sigmas.len()).rev() {
            sigmas[j] = &sigmas[j] + &(&root * &sigmas[j - 1]);
        }
    }
    sigmas.remove(0);
    Ok(OrbitEquation {
        sigmas,
        equation,
        variable: tvar,
    })
}
