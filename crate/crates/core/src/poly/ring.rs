use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::Budget;

use super::{monomial::monomials_of_degree, Monomial, MonomialOrder};

/// Role of a variable inside a doubled or tripled ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarTag {
    Base,
    /// The `k`-th copy (1-based) of a base variable.
    Copy(u8),
    Aux,
}

/// A free polynomial ring `k[x_1..x_n]` with a fixed monomial order.
#[derive(Clone)]
pub struct PolyRing {
    field: Field,
    names: Vec<String>,
    tags: Vec<VarTag>,
    order: MonomialOrder,
    budget: Budget,
}

pub type RingRef = Arc<PolyRing>;

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.names == other.names && self.order == other.order
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.names.join(","))
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.names.join(","))
    }
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(field: Field, names: &[S]) -> Result<RingRef> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let tags = vec![VarTag::Base; names.len()];
        Self::with_tags(field, names, tags)
    }

    pub fn with_tags(field: Field, names: Vec<String>, tags: Vec<VarTag>) -> Result<RingRef> {
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        assert_eq!(names.len(), tags.len());
        Ok(Arc::new(PolyRing {
            field,
            names,
            tags,
            order: MonomialOrder::GrevLex,
            budget: Budget::default(),
        }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn tags(&self) -> &[VarTag] {
        &self.tags
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        assert!(order.check_len(self.nvars()), "order does not match variable count");
        Arc::new(PolyRing {
            order,
            ..self.clone()
        })
    }

    pub fn with_budget(&self, budget: Budget) -> RingRef {
        Arc::new(PolyRing {
            budget,
            ..self.clone()
        })
    }

    pub fn with_field(&self, field: Field) -> RingRef {
        Arc::new(PolyRing {
            field,
            ..self.clone()
        })
    }

    /// Appends variables after the existing ones. The order falls back to
    /// grevlex, since a block order would no longer match.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S], tag: VarTag) -> Result<RingRef> {
        let mut names = self.names.clone();
        let mut tags = self.tags.clone();
        for e in extra {
            names.push(e.as_ref().to_string());
            tags.push(tag);
        }
        let r = Self::with_tags(self.field, names, tags)?;
        Ok(r.with_budget(self.budget))
    }

    /// A fresh variable name not already used in this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        (0..)
            .map(|i| format!("{stem}_{i}"))
            .find(|n| self.index_of(n).is_none())
            .unwrap()
    }

    /// All monomials of total degree `<= d` (or exactly `d` when
    /// `exact` is set), ascending in this ring's order.
    pub fn monomial_basis(&self, d: u32, exact: bool) -> Vec<Monomial> {
        let mut out = Vec::new();
        let lo = if exact { d } else { 0 };
        for e in lo..=d {
            out.extend(monomials_of_degree(self.nvars(), e));
        }
        out.sort_by(|a, b| self.order.cmp(a, b));
        out
    }
}

/// Convenience constructor used throughout tests and examples.
pub fn ring(field: Field, names: &[&str]) -> RingRef {
    PolyRing::new(field, names).expect("valid ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_basis_small() {
        let r = ring(Field::Rationals, &["x", "y"]);
        let b = r.monomial_basis(2, false);
        assert_eq!(b.len(), 6);
        assert!(b[0].is_one());
        assert_eq!(r.monomial_basis(0, false).len(), 1);
    }

    #[test]
    fn exact_degree_count() {
        let r = ring(Field::Rationals, &["a", "b", "c", "d"]);
        assert_eq!(r.monomial_basis(5, true).len(), 56);
        // C(n+d, d) in the cumulative mode
        assert_eq!(r.monomial_basis(3, false).len(), 35);
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(PolyRing::new(Field::Rationals, &["x", "x"]).is_err());
    }

    #[test]
    fn fresh_names() {
        let r = ring(Field::Rationals, &["t", "t_0"]);
        assert_eq!(r.fresh_name("t"), "t_1");
        assert_eq!(r.fresh_name("s"), "s");
    }
}
