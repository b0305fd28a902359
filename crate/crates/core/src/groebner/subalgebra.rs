use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, PolyRing, RingRef, VarTag};

use super::buchberger::GroebnerBasis;
use super::ideal::Ideal;

/// Membership oracle for the subalgebra `k[g_1..g_m]` of `k[x]/Q`.
///
/// Works in `k[x, w]` with the graph ideal `(w_i - g_i) + Q` under a block
/// order with `x >> w`: `f` lies in the subalgebra iff its normal form only
/// involves `w`, and that normal form is the certificate.
pub struct SubalgebraMembership {
    base: RingRef,
    graph: RingRef,
    wring: RingRef,
    basis: GroebnerBasis,
    gens: Vec<Polynomial>,
}

impl SubalgebraMembership {
    pub fn new(base: &RingRef, gens: &[Polynomial], modulus: &[Polynomial]) -> Result<Self> {
        let n = base.nvars();
        let wnames: Vec<String> = (1..=gens.len())
            .map(|i| {
                let mut name = format!("w{i}");
                while base.index_of(&name).is_some() {
                    name.push('\'');
                }
                name
            })
            .collect();
        let ext = base.extended(&wnames, VarTag::Aux)?;
        let xvars: Vec<usize> = (0..n).collect();
        let graph = ext.with_order(MonomialOrder::eliminating(ext.nvars(), &xvars));
        let wring = PolyRing::with_tags(base.field(), wnames.clone(), vec![VarTag::Aux; wnames.len()])?.with_budget(base.budget());
        let embed: Vec<usize> = (0..n).collect();
        let mut rel = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if g.ring().names() != base.names() {
                return Err(Error::RingMismatch);
            }
            rel.push(&Polynomial::var(&graph, n + i) - &g.reorder(base).map_vars(&graph, &embed));
        }
        for q in modulus {
            rel.push(q.reorder(base).map_vars(&graph, &embed));
        }
        let basis = (*Ideal::new(&graph, rel).groebner()?).clone();
        Ok(SubalgebraMembership {
            base: base.clone(),
            graph,
            wring,
            basis,
            gens: gens.to_vec(),
        })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn certificate_ring(&self) -> &RingRef {
        &self.wring
    }

    /// Normal form of `f` in the graph ring.
    pub fn graph_normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let n = self.base.nvars();
        let embed: Vec<usize> = (0..n).collect();
        self.basis.normal_form(&f.reorder(&self.base).map_vars(&self.graph, &embed))
    }

    /// Number of original variables; graph-ring terms using any of the
    /// first `base_vars()` variables witness non-membership.
    pub fn base_vars(&self) -> usize {
        self.base.nvars()
    }

    /// `Some(c)` with `c(g_1..g_m) ≡ f` when `f` is a member.
    pub fn certificate(&self, f: &Polynomial) -> Result<Option<Polynomial>> {
        let r = self.graph_normal_form(f)?;
        let n = self.base.nvars();
        if (0..n).any(|i| r.uses_var(i)) {
            return Ok(None);
        }
        let m = self.gens.len();
        let back: Vec<usize> = (0..n + m).map(|i| i.saturating_sub(n)).collect();
        Ok(Some(r.map_vars(&self.wring, &back)))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.certificate(f)?.is_some())
    }

    /// Evaluates a certificate back in the base ring (not reduced mod `Q`).
    pub fn replay(&self, certificate: &Polynomial) -> Result<Polynomial> {
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.reorder(&self.base)).collect();
        certificate.substitute(&gens, &self.base)
    }
}

/// `f ∈ k[gens] + Q`, with a certificate polynomial in fresh variables
/// `w1..wm` when it is.
pub fn subalgebra_member(f: &Polynomial, gens: &[Polynomial], modulus: &[Polynomial]) -> Result<Option<Polynomial>> {
    SubalgebraMembership::new(f.ring(), gens, modulus)?.certificate(f)
}
