//! Monomials `x^b` of `K[x_1, ..., x_n]`, stored as exponent vectors.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Upper limit on the number of variables; variable subsets are `u64` masks.
pub const MAX_VARS: usize = 64;

/// A set of variable indices (bit `j` stands for `x_{j+1}`).
pub type VarSet = u64;

/// A monomial in a fixed ambient ring of `n` variables.
///
/// The derived ordering is lexicographic on the exponent vector; ideals use it
/// to keep their generators in canonical order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        check_ring(exps.len())?;
        Ok(Monomial { exps })
    }

    pub fn from_slice(exps: &[u32]) -> Result<Self> {
        Self::new(exps.to_vec())
    }

    /// The unit monomial `1`.
    pub fn one(n: usize) -> Result<Self> {
        Self::new(alloc::vec![0; n])
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(i: usize, n: usize) -> Result<Self> {
        let mut m = Self::one(n)?;
        if i >= n {
            return Err(Error::Precondition("variable index out of range"));
        }
        m.exps[i] = 1;
        Ok(m)
    }

    /// Squarefree monomial with support `set`.
    pub fn from_support(set: VarSet, n: usize) -> Result<Self> {
        check_ring(n)?;
        Ok(Monomial {
            exps: (0..n).map(|j| ((set >> j) & 1) as u32).collect(),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, j: usize) -> u32 {
        self.exps[j]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn max_exp(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    /// Indices of the variables dividing this monomial.
    pub fn support(&self) -> VarSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (j, _)| acc | (1 << j))
    }

    /// If the monomial is a pure power `x_j^e` with `e > 0`, returns `j`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let s = self.support();
        (s.count_ones() == 1).then(|| s.trailing_zeros() as usize)
    }

    pub fn check_same_ring(&self, other: &Monomial) -> Result<()> {
        same_ring(self.n(), other.n())
    }

    /// Componentwise `self <= other`, i.e. `self` divides `other`.
    ///
    /// Panics if the ambient rings differ; use [`Monomial::check_same_ring`]
    /// first when that is not already guaranteed.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.min(b))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.colon(other))
    }

    /// The squarefree monomial with the same support.
    pub fn radical(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| u32::from(e > 0)).collect(),
        }
    }

    /// The same monomial viewed in a ring with `extra` more variables.
    pub fn extend(&self, extra: usize) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        exps.resize(self.n() + extra, 0);
        Monomial::new(exps)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

pub(crate) fn check_ring(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyRing)
    } else if n > MAX_VARS {
        Err(Error::TooLarge {
            size: n,
            limit: MAX_VARS,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn same_ring(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Writes `x1^2*x3`, or `1` for the unit monomial.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", j + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_slice(e).unwrap()
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 0, 0]));
        assert_eq!(a.mul(&b), m(&[3, 3, 1]));
        assert_eq!(a.colon(&b), m(&[1, 0, 1]));
        assert!(m(&[1, 0, 0]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.checked_div(&m(&[2, 0, 0])), Some(m(&[0, 0, 1])));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.radical(), m(&[1, 0, 1]));
        assert_eq!(a.support(), 0b101);
    }

    #[test]
    fn pure_powers() {
        assert_eq!(m(&[0, 4, 0]).pure_power_var(), Some(1));
        assert_eq!(m(&[1, 4, 0]).pure_power_var(), None);
        assert_eq!(m(&[0, 0, 0]).pure_power_var(), None);
    }

    #[test]
    fn display() {
        assert_eq!(m(&[2, 1, 0]).to_string(), "x1^2*x2");
        assert_eq!(m(&[0, 0]).to_string(), "1");
    }

    #[test]
    fn ring_checks() {
        assert_eq!(Monomial::new(alloc::vec![]), Err(Error::EmptyRing));
        assert!(Monomial::var(3, 3).is_err());
        assert!(m(&[1]).check_same_ring(&m(&[1, 0])).is_err());
    }
}
