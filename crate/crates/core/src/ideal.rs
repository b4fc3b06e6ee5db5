//! Monomial ideals represented by their minimal generators `G(I)`.

use alloc::vec::Vec;
use core::fmt;

use crate::monomial::{check_ring, same_ring, Monomial, VarSet};
use crate::{Error, Result};

/// A monomial ideal of `K[x_1, ..., x_n]`.
///
/// The generators always form a divisibility antichain in decreasing
/// lexicographic order, so two ideals are equal exactly when their generator lists are.
/// The empty list is the zero ideal and `[1]` is the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Result of a colon by an ideal. A colon by the zero ideal is the unit
/// ideal by the empty-intersection convention and is flagged as `vacuous`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colon {
    pub ideal: MonomialIdeal,
    pub vacuous: bool,
}

/// Relative position of the radicals of two primary ideals.
///
/// After renumbering, `sqrt(Q) = (x_1, ..., x_t)` and
/// `sqrt(Q') = (x_{r+1}, ..., x_p)` in a ring of `n` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SupportShape {
    pub t: usize,
    pub r: usize,
    pub p: usize,
    pub n: usize,
}

impl SupportShape {
    pub fn new(t: usize, r: usize, p: usize, n: usize) -> Result<Self> {
        if r <= t && t <= p && p <= n {
            Ok(SupportShape { t, r, p, n })
        } else {
            Err(Error::Precondition("support shape needs r <= t <= p <= n"))
        }
    }

    /// Number of variables of `sqrt(Q')`.
    pub fn second_len(&self) -> usize {
        self.p - self.r
    }

    pub fn is_disjoint(&self) -> bool {
        self.r == self.t
    }
}

/// A support shape together with the renumbering that realises it:
/// `permutation[new] = old` (zero-based variable indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapedPair {
    pub shape: SupportShape,
    pub permutation: Vec<usize>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only minimal generators.
    pub fn minimalize<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        check_ring(n)?;
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            same_ring(n, g.n())?;
            all.push(g);
        }
        Ok(Self::from_checked(n, all))
    }

    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|e| Monomial::from_slice(e))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(n, gens)
    }

    /// Minimalization for generators already known to live in `n` variables.
    fn from_checked(n: usize, mut all: Vec<Monomial>) -> Self {
        // Sorting by degree first means a generator can only be divided by
        // one that was already kept.
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { n, gens: kept }
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_ring(n)?;
        Ok(MonomialIdeal { n, gens: Vec::new() })
    }

    pub fn unit(n: usize) -> Result<Self> {
        Ok(MonomialIdeal {
            n,
            gens: alloc::vec![Monomial::one(n)?],
        })
    }

    /// The monomial prime generated by the variables in `vars`.
    pub fn prime(n: usize, vars: VarSet) -> Result<Self> {
        check_ring(n)?;
        if n < 64 && vars >> n != 0 {
            return Err(Error::Precondition("variable index out of range"));
        }
        let gens = (0..n)
            .filter(|j| (vars >> j) & 1 == 1)
            .map(|j| Monomial::var(j, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_checked(n, gens))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// The minimal generators in decreasing lexicographic order.
    #[inline]
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Largest exponent of `x_j` among the generators, for each `j`.
    pub fn max_exps(&self) -> Vec<u32> {
        let mut out = alloc::vec![0; self.n];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exps()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn max_exp(&self) -> u32 {
        self.gens.iter().map(Monomial::max_exp).max().unwrap_or(0)
    }

    /// Variables dividing at least one generator.
    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(0, |acc, g| acc | g.support())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.max_exp() <= 1)
    }

    pub fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        same_ring(self.n, other.n)
    }

    /// Whether `w` lies in the ideal: some generator divides it.
    pub fn contains(&self, w: &Monomial) -> Result<bool> {
        same_ring(self.n, w.n())?;
        Ok(self.contains_unchecked(w.exps()))
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, w: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exps().iter().zip(w).all(|(a, b)| a <= b))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g.exps())))
    }

    /// `I ∩ J`, generated by the pairwise lcms of the generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(Self::from_checked(self.n, lcms))
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_checked(self.n, all))
    }

    /// `I : v`, generated by `g / gcd(g, v)`.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<MonomialIdeal> {
        same_ring(self.n, v.n())?;
        let all = self.gens.iter().map(|g| g.colon(v)).collect();
        Ok(Self::from_checked(self.n, all))
    }

    /// `I : J`, the intersection of `I : v` over the generators `v` of `J`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<Colon> {
        self.check_same_ring(other)?;
        let mut gens = other.gens.iter();
        let Some(first) = gens.next() else {
            return Ok(Colon {
                ideal: Self::unit(self.n)?,
                vacuous: true,
            });
        };
        let mut acc = self.colon_monomial(first)?;
        for v in gens {
            acc = acc.intersect(&self.colon_monomial(v)?)?;
        }
        Ok(Colon {
            ideal: acc,
            vacuous: false,
        })
    }

    /// `sqrt(I)`, generated by the supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        Self::from_checked(self.n, self.gens.iter().map(Monomial::radical).collect())
    }

    fn check_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::Domain("the zero ideal"))
        } else if self.is_unit() {
            Err(Error::Domain("the unit ideal"))
        } else {
            Ok(())
        }
    }

    /// A monomial ideal is primary iff every variable dividing a generator
    /// also occurs as a pure-power generator.
    pub fn is_primary(&self) -> Result<bool> {
        self.check_proper_nonzero()?;
        let pure = self
            .gens
            .iter()
            .filter_map(Monomial::pure_power_var)
            .fold(0 as VarSet, |acc, j| acc | (1 << j));
        Ok(self.support() & !pure == 0)
    }

    /// Irreducible monomial ideals are generated by pure powers.
    pub fn is_irreducible(&self) -> Result<bool> {
        self.check_proper_nonzero()?;
        Ok(self.gens.iter().all(|g| g.pure_power_var().is_some()))
    }

    /// Shape `(t, r, p, n)` of a pair of primary ideals and the variable
    /// renumbering putting `sqrt(Q)` first and `sqrt(Q')` right after the
    /// variables only `Q` uses.
    pub fn support_shape(q: &MonomialIdeal, q2: &MonomialIdeal) -> Result<ShapedPair> {
        q.check_same_ring(q2)?;
        if !q.is_primary()? || !q2.is_primary()? {
            return Err(Error::Domain("support shapes are defined for primary ideals"));
        }
        let a = q.support();
        let b = q2.support();
        let n = q.n;
        let shape = SupportShape::new(
            a.count_ones() as usize,
            (a & !b).count_ones() as usize,
            (a | b).count_ones() as usize,
            n,
        )?;
        let blocks = [a & !b, a & b, b & !a, !(a | b)];
        let permutation = blocks
            .iter()
            .flat_map(|&set| (0..n).filter(move |j| (set >> j) & 1 == 1))
            .collect();
        Ok(ShapedPair { shape, permutation })
    }

    /// Minimal primes of `I`, as variable sets: the minimal transversals of
    /// the generator supports. The zero ideal has the single prime `∅`.
    pub fn minimal_primes(&self) -> Result<Vec<VarSet>> {
        if self.is_unit() {
            return Err(Error::Domain("the unit ideal has no minimal primes"));
        }
        let mut covers: Vec<VarSet> = alloc::vec![0];
        for edge in self.radical().gens.iter().map(Monomial::support) {
            let mut next: Vec<VarSet> = Vec::new();
            for &c in &covers {
                if c & edge != 0 {
                    next.push(c);
                } else {
                    let mut rest = edge;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        next.push(c | bit);
                        rest &= rest - 1;
                    }
                }
            }
            covers = minimal_sets(next);
        }
        covers.sort_by_key(|&c| (c.count_ones(), c));
        Ok(covers)
    }

    /// Height of `I`: the size of a smallest minimal prime.
    pub fn height(&self) -> Result<usize> {
        Ok(self
            .minimal_primes()?
            .iter()
            .map(|c| c.count_ones() as usize)
            .min()
            .unwrap_or(0))
    }

    /// Preimage of `I` under `y_i -> x_i^a`, written back in the `x`
    /// variables: `{ y^c : x^{a c} ∈ I }`.
    ///
    /// For `a` at least every exponent of `G(I)` this is `sqrt(I)`.
    pub fn contract_power_map(&self, a: u32) -> Result<MonomialIdeal> {
        if a == 0 {
            return Err(Error::Precondition("the power must be positive"));
        }
        if a < self.max_exp() {
            return Err(Error::Precondition(
                "the power must dominate every generator exponent",
            ));
        }
        // x^{a c} is divisible by g iff c_j >= ceil(g_j / a) for all j.
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::new(g.exps().iter().map(|&e| e.div_ceil(a)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_checked(self.n, gens))
    }

    /// The ideal generated by the same monomials in `n + extra` variables.
    pub fn extend(&self, extra: usize) -> Result<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.extend(extra))
            .collect::<Result<Vec<_>>>()?;
        check_ring(self.n + extra)?;
        Ok(Self::from_checked(self.n + extra, gens))
    }

    /// The image under the variable renumbering `x_{perm[new]} -> x_new`.
    pub fn permute(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        same_ring(self.n, perm.len())?;
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::new(perm.iter().map(|&old| g.exp(old)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_checked(self.n, gens))
    }
}

fn minimal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|&c| (c.count_ones(), c));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

/// Writes `(x1^2, x1*x2)`; the zero ideal prints as `(0)`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} vars", self.n)
    }
}
