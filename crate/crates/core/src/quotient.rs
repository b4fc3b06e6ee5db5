use alloc::vec::Vec;
use core::fmt;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::{Error, Result};

/// The module `J/I` for monomial ideals `I ⊆ J`.
///
/// An ideal `J` viewed as a module is `J/0`; the ring itself is `(1)/0` and
/// `S/I` is `(1)/I`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotientModule {
    upper: MonomialIdeal,
    lower: MonomialIdeal,
}

impl QuotientModule {
    /// `upper / lower`; fails unless `lower ⊆ upper`.
    pub fn new(upper: MonomialIdeal, lower: MonomialIdeal) -> Result<Self> {
        if !lower.is_subset(&upper)? {
            return Err(Error::Precondition("the quotient J/I needs I ⊆ J"));
        }
        Ok(QuotientModule { upper, lower })
    }

    /// The ideal `J` as a module, `J/0`.
    pub fn ideal(upper: MonomialIdeal) -> Self {
        let lower = MonomialIdeal::zero(upper.n()).expect("ideal has a valid ring");
        QuotientModule { upper, lower }
    }

    /// The cyclic module `S/I`.
    pub fn ring_quotient(lower: MonomialIdeal) -> Self {
        let upper = MonomialIdeal::unit(lower.n()).expect("ideal has a valid ring");
        QuotientModule { upper, lower }
    }

    pub fn n(&self) -> usize {
        self.upper.n()
    }

    /// `J`.
    pub fn upper(&self) -> &MonomialIdeal {
        &self.upper
    }

    /// `I`.
    pub fn lower(&self) -> &MonomialIdeal {
        &self.lower
    }

    pub fn is_zero(&self) -> bool {
        self.upper == self.lower
    }

    /// Whether the monomial `x^w` is nonzero in `J/I`.
    pub fn contains(&self, w: &Monomial) -> Result<bool> {
        Ok(self.upper.contains(w)? && !self.lower.contains(w)?)
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, w: &[u32]) -> bool {
        self.upper.contains_unchecked(w) && !self.lower.contains_unchecked(w)
    }

    /// Componentwise maximum exponent over `G(I) ∪ G(J)`.
    pub fn max_exps(&self) -> Vec<u32> {
        self.upper
            .max_exps()
            .into_iter()
            .zip(self.lower.max_exps())
            .map(|(a, b)| a.max(b))
            .collect()
    }

    pub fn max_exp(&self) -> u32 {
        self.upper.max_exp().max(self.lower.max_exp())
    }

    /// `sqrt(J)/sqrt(I)`.
    pub fn radical(&self) -> QuotientModule {
        QuotientModule {
            upper: self.upper.radical(),
            lower: self.lower.radical(),
        }
    }

    /// The same module over a ring with `extra` more variables.
    pub fn extend(&self, extra: usize) -> Result<QuotientModule> {
        Ok(QuotientModule {
            upper: self.upper.extend(extra)?,
            lower: self.lower.extend(extra)?,
        })
    }

    /// Krull dimension of `J/I`: `n - height(I : J)`. For radical `I` and `J`
    /// the colon is `sqrt(I) : sqrt(J)`. The zero module has no dimension and
    /// yields `None`.
    pub fn dim(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let colon = self.lower.colon_ideal(&self.upper).expect("same ring");
        // J ≠ I forces I : J to be proper.
        let h = colon.ideal.height().ok()?;
        Some(self.n() - h)
    }
}

impl fmt::Display for QuotientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lower.is_zero() {
            write!(f, "{}", self.upper)
        } else {
            write!(f, "{} / {}", self.upper, self.lower)
        }
    }
}

impl fmt::Debug for QuotientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} vars", self.n())
    }
}
