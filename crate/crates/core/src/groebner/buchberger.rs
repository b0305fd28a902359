use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, RingRef};

/// Resource caps for a single Gröbner computation. Exceeding either one
/// yields [`Error::BudgetExceeded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Budget {
    /// S-pairs that may be reduced.
    pub max_pairs: usize,
    /// Largest number of terms any intermediate polynomial may have.
    pub max_terms: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 100_000,
            max_terms: 100_000,
        }
    }
}

/// A Gröbner basis for the order of its ring. When `reduced` is set the
/// elements are monic, interreduced and sorted ascending by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    polys: Vec<Polynomial>,
    reduced: bool,
}

/// Quotients and remainder of a division by a basis.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|p| p.is_constant() && !p.is_zero())
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.polys.iter().filter_map(|p| p.leading_monomial())
    }

    fn compatible(&self, f: &Polynomial) -> Result<()> {
        if f.ring().names() != self.ring.names() || f.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        if f.ring().order() != self.ring.order() {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    /// Fully reduced remainder of `f`: no term is divisible by a leading
    /// monomial of the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.compatible(f)?;
        Ok(reduce_full(f, &self.polys, None))
    }

    /// Like [`normal_form`](Self::normal_form) but reorders `f` first when
    /// only the monomial order differs.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring().order() != self.ring.order() && f.ring().names() == self.ring.names() {
            return self.normal_form(&f.reorder(&self.ring));
        }
        self.normal_form(f)
    }

    /// Division with recorded quotients: `f = Σ q_i g_i + r`.
    pub fn divide(&self, f: &Polynomial) -> Result<Division> {
        self.compatible(f)?;
        let mut quotients = vec![Polynomial::zero(&self.ring); self.polys.len()];
        let remainder = reduce_full(f, &self.polys, Some(&mut quotients));
        Ok(Division { quotients, remainder })
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }
}

/// Full reduction of `f` by `basis`, optionally recording quotients.
pub(crate) fn reduce_full(f: &Polynomial, basis: &[Polynomial], mut quotients: Option<&mut Vec<Polynomial>>) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, crate::field::Scalar)> = Vec::new();
    'outer: while let Some((m, c)) = p.leading_term() {
        for (k, g) in basis.iter().enumerate() {
            let (gm, gc) = g.leading_term().expect("nonzero basis element");
            if let Some(q) = gm.quotient_of(m) {
                let coeff = field.div(c, gc);
                if let Some(qs) = quotients.as_deref_mut() {
                    qs[k] = qs[k].add_scaled(&Polynomial::one(&ring), &coeff, &q);
                }
                let neg = field.neg(&coeff);
                p = p.add_scaled(g, &neg, &q);
                continue 'outer;
            }
        }
        let mut terms = p.into_terms();
        let lead = terms.remove(0);
        rem.push(lead);
        p = Polynomial::from_sorted_terms(&ring, terms);
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with the coprime and chain criteria, followed by
/// interreduction to the unique reduced basis.
pub fn buchberger(gens: &[Polynomial], ring: &RingRef) -> Result<GroebnerBasis> {
    let budget = ring.budget();
    let order = ring.order().clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let g = if g.ring().order() != ring.order() || g.ring().names() != ring.names() {
            g.reorder(ring)
        } else {
            g.clone()
        };
        if !g.is_zero() {
            if g.is_constant() {
                return Ok(GroebnerBasis {
                    ring: ring.clone(),
                    polys: vec![Polynomial::one(ring)],
                    reduced: true,
                });
            }
            basis.push(g.monic());
        }
    }
    // dedupe identical inputs so the pair queue does not fill with
    // trivially zero S-polynomials
    let mut seen = BTreeSet::new();
    basis.retain(|g| seen.insert(g.to_string()));

    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(make_pair(&basis, i, j));
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm first
        let mut best = 0;
        for k in 1..pairs.len() {
            let o = order.cmp(&pairs[k].lcm, &pairs[best].lcm);
            if o == Ordering::Less || (o == Ordering::Equal && (pairs[k].j, pairs[k].i) < (pairs[best].j, pairs[best].i)) {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let (i, j) = (pair.i, pair.j);
        done.insert((i, j));
        let lmi = basis[i].leading_monomial().unwrap().clone();
        let lmj = basis[j].leading_monomial().unwrap().clone();
        if lmi.is_coprime(&lmj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::BudgetExceeded {
                what: "S-pairs",
                limit: budget.max_pairs,
            });
        }
        let s = s_polynomial(&basis[i], &basis[j], &pair.lcm);
        let r = reduce_full(&s, &basis, None);
        if r.len() > budget.max_terms {
            return Err(Error::BudgetExceeded {
                what: "polynomial terms",
                limit: budget.max_terms,
            });
        }
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(GroebnerBasis {
                ring: ring.clone(),
                polys: vec![Polynomial::one(ring)],
                reduced: true,
            });
        }
        basis.push(r.monic());
        let n = basis.len() - 1;
        for k in 0..n {
            pairs.push(make_pair(&basis, k, n));
        }
    }
    Ok(interreduce(basis, ring))
}

fn make_pair(basis: &[Polynomial], i: usize, j: usize) -> Pair {
    let lcm = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    Pair { i, j, lcm }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let field = f.field();
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let a = fm.quotient_of(lcm).unwrap();
    let b = gm.quotient_of(lcm).unwrap();
    let left = f.mul_monomial(&a, &field.inv(fc));
    left.add_scaled(g, &field.neg(&field.inv(gc)), &b)
}

/// Minimalizes and interreduces a Gröbner basis.
pub(crate) fn interreduce(mut basis: Vec<Polynomial>, ring: &RingRef) -> GroebnerBasis {
    let order = ring.order().clone();
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            continue;
        }
        minimal.push(g);
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, p)| p.clone())
            .collect();
        // the leading term is not divisible by any other leading monomial,
        // so full reduction only touches the tail
        let r = reduce_full(&minimal[k], &others, None);
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    GroebnerBasis {
        ring: ring.clone(),
        polys: reduced,
        reduced: true,
    }
}
