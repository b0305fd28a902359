//! Frobenius twists and the search for `q = p^r` with `B^q ⊂ B₁`.
//!
//! Coefficient fields are prime, so `a^q = a` and `B^q` is generated by the
//! `q`-th powers of generators of `B`.

use crate::ambient::{is_power_of, AmbientMembership, AmbientRef, Element};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, RingRef};

/// `Σ a_I^q x^I`.
pub fn frobenius_twist(f: &Polynomial, q: u64) -> Result<Polynomial> {
    let field = f.field();
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::ZeroCharacteristic);
    }
    if !is_power_of(q, p) {
        return Err(Error::NotAPowerOfCharacteristic { q, p });
    }
    Ok(f.map_coefficients(|c| field.pow(c, q)))
}

#[derive(Clone, Debug)]
pub struct FrobeniusWitness {
    pub p: u64,
    pub r: u32,
    pub q: u64,
    /// `certificates[j]` evaluated at the generators of `B₁` gives
    /// `b_j^q`.
    pub certificates: Vec<Polynomial>,
    pub certificate_ring: RingRef,
}

/// Oracle for repeated `b^q ∈ k[B₁]` queries.
pub struct FrobeniusSearch {
    ambient: AmbientRef,
    oracle: AmbientMembership,
    p: u64,
}

impl FrobeniusSearch {
    pub fn new(ambient: &AmbientRef, sub: &[Element]) -> Result<FrobeniusSearch> {
        let p = ambient.field().characteristic();
        if p == 0 {
            return Err(Error::ZeroCharacteristic);
        }
        Ok(FrobeniusSearch {
            ambient: ambient.clone(),
            oracle: AmbientMembership::new(ambient, sub)?,
            p,
        })
    }

    /// Certificates for every `b_j^(p^r)`, or `None` if one is missing.
    pub fn try_exponent(&self, gens: &[Element], r: u32) -> Result<Option<Vec<Polynomial>>> {
        let mut certs = Vec::with_capacity(gens.len());
        for b in gens {
            let mut power = b.clone();
            for _ in 0..r {
                power = self.ambient.pow(&power, self.p as u32)?;
            }
            match self.oracle.certificate(&power)? {
                Some(c) => certs.push(c),
                None => return Ok(None),
            }
        }
        Ok(Some(certs))
    }

    pub fn replay(&self, certificate: &Polynomial) -> Result<Element> {
        self.oracle.replay(certificate)
    }
}

/// Smallest `r <= r_max` with `b_j^(p^r) ∈ k[B₁]` for all `j`, working
/// modulo the ambient's defining ideal.
pub fn frobenius_exponent(ambient: &AmbientRef, sub: &[Element], gens: &[Element], r_max: u32) -> Result<Option<FrobeniusWitness>> {
    let search = FrobeniusSearch::new(ambient, sub)?;
    for r in 0..=r_max {
        if let Some(certificates) = search.try_exponent(gens, r)? {
            return Ok(Some(FrobeniusWitness {
                p: search.p,
                r,
                q: search.p.pow(r),
                certificates,
                certificate_ring: search.oracle.certificate_ring().clone(),
            }));
        }
    }
    Ok(None)
}
