use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, RingRef, VarTag};

use super::buchberger::{buchberger, GroebnerBasis};

/// An ideal of a free polynomial ring, given by generators. Gröbner bases
/// are computed lazily and cached per monomial order; clones share the cache.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    cache: Arc<Mutex<Vec<(MonomialOrder, Arc<GroebnerBasis>)>>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Ideal {
    /// Generators are moved into `ring` (same variables; the order may
    /// differ) and zero generators are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                if g.ring().order() != ring.order() || g.field() != ring.field() {
                    g.reorder(ring)
                } else {
                    g
                }
            })
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            cache: Arc::new(Mutex::new(Vec::new())),
        }
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis for the ring's own order.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner_for(self.ring.order().clone())
    }

    pub fn groebner_for(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some((_, g)) = self.cache.lock().unwrap().iter().find(|(o, _)| *o == order) {
            return Ok(g.clone());
        }
        let ring = if order == *self.ring.order() {
            self.ring.clone()
        } else {
            self.ring.with_order(order.clone())
        };
        let g = Arc::new(buchberger(&self.gens, &ring)?);
        self.cache.lock().unwrap().push((order, g.clone()));
        Ok(g)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner()?.contains(f)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit_ideal())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().map(|g| g.reorder(&self.ring)));
        Ideal::new(&self.ring, gens)
    }

    pub fn with_gens(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Moves generators to `target` sending variable `i` to `var_map[i]`.
    pub fn map_vars(&self, target: &RingRef, var_map: &[usize]) -> Ideal {
        Ideal::new(target, self.gens.iter().map(|g| g.map_vars(target, var_map)).collect())
    }

    /// The same ideal presented by its reduced Gröbner basis.
    pub fn canonical(&self) -> Result<Ideal> {
        let g = self.groebner()?;
        let out = Ideal::new(&self.ring, g.polys().to_vec());
        out.cache.lock().unwrap().push((self.ring.order().clone(), g));
        Ok(out)
    }
}

/// The unique reduced basis of `ideal` under `order`.
pub fn reduced_groebner(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    Ok((*ideal.groebner_for(order.clone())?).clone())
}

pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(f)
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// `f ∈ rad(I)` via the Rabinowitsch trick: `1 ∈ I + (1 - t f)`.
pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let base = ideal.ring();
    let t = base.fresh_name("t");
    let ext = base.extended(&[t], VarTag::Aux)?;
    let n = base.nvars();
    let map: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.map_vars(&ext, &map)).collect();
    let tf = &Polynomial::var(&ext, n) * &f.reorder(base).map_vars(&ext, &map);
    gens.push(&Polynomial::one(&ext) - &tf);
    Ideal::new(&ext, gens).is_unit()
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring().names() != b.ring().names() || a.ring().field() != b.ring().field() {
        return Err(Error::RingMismatch);
    }
    let order = a.ring().order().clone();
    let ga = a.groebner_for(order.clone())?;
    let gb = b.groebner_for(order)?;
    Ok(ga.polys() == gb.polys())
}

/// `I ∩ k[remaining variables]`, returned as an ideal of the same ring
/// generated by its reduced basis.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    if vars.is_empty() {
        return ideal.canonical();
    }
    let order = MonomialOrder::eliminating(ring.nvars(), vars);
    let g = ideal.groebner_for(order)?;
    let kept: Vec<Polynomial> = g
        .polys()
        .iter()
        .filter(|p| vars.iter().all(|&v| !p.uses_var(v)))
        .map(|p| p.reorder(ring))
        .collect();
    Ideal::new(ring, kept).canonical()
}

/// Eliminates `vars` and moves the result into `target`, whose variables
/// must include every remaining variable (matched by name).
pub fn eliminate_into(ideal: &Ideal, vars: &[usize], target: &RingRef) -> Result<Ideal> {
    let e = eliminate(ideal, vars)?;
    let gens: Result<Vec<Polynomial>> = e
        .gens()
        .iter()
        .map(|g| {
            let ring = g.ring();
            let map: Result<Vec<usize>> = (0..ring.nvars())
                .map(|i| {
                    if vars.contains(&i) {
                        Ok(0)
                    } else {
                        target.var_index(ring.name(i))
                    }
                })
                .collect();
            Ok(g.map_vars(target, &map?))
        })
        .collect();
    Ideal::new(target, gens?).canonical()
}

/// `I ∩ J` via `t I + (1 - t) J` and elimination of `t`.
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let base = a.ring();
    if base.names() != b.ring().names() {
        return Err(Error::RingMismatch);
    }
    let t = base.fresh_name("t");
    let ext = base.extended(&[t], VarTag::Aux)?;
    let n = base.nvars();
    let map: Vec<usize> = (0..n).collect();
    let tv = Polynomial::var(&ext, n);
    let one_minus_t = &Polynomial::one(&ext) - &tv;
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(&tv * &g.map_vars(&ext, &map));
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &g.reorder(base).map_vars(&ext, &map));
    }
    let joint = Ideal::new(&ext, gens);
    let order = MonomialOrder::eliminating(ext.nvars(), &[n]);
    let g = joint.groebner_for(order)?;
    let back: Vec<usize> = (0..=n).map(|i| i.min(n.saturating_sub(1))).collect();
    let kept: Vec<Polynomial> = g
        .polys()
        .iter()
        .filter(|p| !p.uses_var(n))
        .map(|p| p.map_vars(base, &back[..=n]))
        .collect();
    Ideal::new(base, kept).canonical()
}

/// Whether `k[x, y]/I` is finite over `k[x]`, where `xblock` lists the
/// indices of the `x` variables: under a block order with `y >> x` every
/// `y_i` must appear as a pure power among the leading monomials.
pub fn finite_over_block(ideal: &Ideal, xblock: &[usize]) -> Result<bool> {
    let ring = ideal.ring();
    let yblock: Vec<usize> = (0..ring.nvars()).filter(|i| !xblock.contains(i)).collect();
    let order = MonomialOrder::eliminating(ring.nvars(), &yblock);
    let g = ideal.groebner_for(order)?;
    if g.is_unit_ideal() {
        return Ok(true);
    }
    Ok(yblock
        .iter()
        .all(|&y| g.leading_monomials().any(|m| m.pure_power_of() == Some(y))))
}
