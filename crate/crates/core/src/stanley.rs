//! Stanley decompositions `J/I = ⊕ u_i K[Z_i]` as values.

use alloc::vec::Vec;
use core::fmt;

use crate::monomial::{same_ring, Monomial, VarSet};
use crate::poset::{characteristic_poset, IntervalPartition};
use crate::{Error, QuotientModule, Result, Sdepth};

/// The Stanley space `u K[Z]`: all monomials `u v` with `v` supported in `Z`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StanleySpace {
    pub generator: Monomial,
    pub free: VarSet,
}

impl StanleySpace {
    pub fn new(generator: Monomial, free: VarSet) -> Result<Self> {
        let n = generator.n();
        if n < 64 && free >> n != 0 {
            return Err(Error::Precondition("free variable outside the ring"));
        }
        Ok(StanleySpace { generator, free })
    }

    pub fn dim(&self) -> usize {
        self.free.count_ones() as usize
    }

    /// Free variables as zero-based indices.
    pub fn free_vars(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.generator.n()).filter(|j| self.free >> j & 1 == 1)
    }

    /// Whether `x^e` lies in the space.
    pub fn contains(&self, e: &[u32]) -> bool {
        self.generator.exps().iter().zip(e).enumerate().all(|(j, (&u, &x))| {
            if self.free >> j & 1 == 1 {
                x >= u
            } else {
                x == u
            }
        })
    }
}

impl fmt::Display for StanleySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} K[", self.generator)?;
        for (i, j) in self.free_vars().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{}", j + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for StanleySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A degree where a decomposition fails to be a direct-sum presentation:
/// `count` spaces contain `x^degree`, where `expected` (0 or 1) should.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub degree: Monomial,
    pub count: usize,
    pub expected: usize,
}

/// A list of Stanley spaces proposed as a decomposition of `J/I`.
///
/// Construction does not check the direct-sum property; call
/// [`StanleyDecomposition::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pub module: QuotientModule,
    pub spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    pub fn new(module: QuotientModule, spaces: Vec<StanleySpace>) -> Result<Self> {
        for s in &spaces {
            same_ring(module.n(), s.generator.n())?;
        }
        Ok(StanleyDecomposition { module, spaces })
    }

    /// `min |Z_i|`; infinite for the empty decomposition.
    pub fn sdepth(&self) -> Sdepth {
        self.spaces
            .iter()
            .map(StanleySpace::dim)
            .min()
            .map_or(Sdepth::Infinite, Sdepth::Finite)
    }

    /// Checks that every monomial of `J \ I` lies in exactly one space and no
    /// other monomial lies in any.
    ///
    /// It suffices to look at degrees `e ∈ [0, B]^n` with `B_j` one more than
    /// the largest exponent of `x_j` among the generators of `I`, `J` and
    /// the spaces: clamping a degree to that box changes neither its
    /// membership in `J \ I` nor in any space.
    pub fn verify(&self) -> core::result::Result<(), Mismatch> {
        let n = self.module.n();
        let mut ceil: Vec<u32> = self.module.max_exps();
        for s in &self.spaces {
            for (c, &u) in ceil.iter_mut().zip(s.generator.exps()) {
                *c = (*c).max(u);
            }
        }
        for c in ceil.iter_mut() {
            *c += 1;
        }
        let mut e = alloc::vec![0u32; n];
        loop {
            let expected = usize::from(self.module.contains_unchecked(&e));
            let count = self.spaces.iter().filter(|s| s.contains(&e)).count();
            if count != expected {
                return Err(Mismatch {
                    degree: Monomial::new(e).expect("valid ring"),
                    count,
                    expected,
                });
            }
            let Some(j) = (0..n).rev().find(|&j| e[j] < ceil[j]) else {
                return Ok(());
            };
            e[j] += 1;
            e[j + 1..].iter_mut().for_each(|x| *x = 0);
        }
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_ok()
    }
}

impl fmt::Display for StanleyDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.spaces.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.spaces.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The Stanley decomposition induced by an interval partition of the
/// characteristic poset of `module`.
///
/// An interval `[lo, hi]` with saturated set `Z = { j : hi_j = g_j }`
/// contributes `x^c K[Z]` for every cell `c` of the interval with
/// `c_j = lo_j` on `Z`; when `hi_j ∈ { lo_j, g_j }` for all `j` that is the
/// single space `x^lo K[Z]`.
pub fn decomposition_from_partition(
    partition: &IntervalPartition,
    module: &QuotientModule,
) -> Result<StanleyDecomposition> {
    let cbox = &partition.cbox;
    let poset = characteristic_poset(module, cbox)?;
    if partition.validate(&poset).is_err() {
        return Err(Error::Precondition(
            "not a partition of the characteristic poset",
        ));
    }
    let mut spaces = Vec::new();
    for iv in &partition.intervals {
        let z = cbox.saturated(&iv.hi);
        for r in iv.ranks(cbox) {
            let c = cbox.cell(r);
            let pinned = (0..c.len()).all(|j| z >> j & 1 == 0 || c[j] == iv.lo[j]);
            if pinned {
                spaces.push(StanleySpace {
                    generator: Monomial::new(c)?,
                    free: z,
                });
            }
        }
    }
    StanleyDecomposition::new(module.clone(), spaces)
}

/// Outcome of [`radical_transfer`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    /// Decomposition of `sqrt(J)/sqrt(I)`.
    pub decomposition: StanleyDecomposition,
    /// Spaces of the input with zero preimage under `y_i -> x_i^a`.
    pub discarded: Vec<StanleySpace>,
    /// The power used.
    pub power: u32,
}

/// Pulls a Stanley decomposition of `J/I` back along `y_i -> x_i^a`,
/// producing a decomposition of `sqrt(J)/sqrt(I)` with at most as many
/// spaces, each of the same dimension.
///
/// The preimage of `u K[Z]` is zero unless `a` divides `u_j` for every
/// `j ∉ Z`; otherwise it is `y^c K[Z]` with `c_j = u_j / a` off `Z` and
/// `c_j = ⌈u_j / a⌉` on `Z`. The input should be a verified decomposition and
/// `a` must dominate every exponent in `G(I)`, `G(J)` and the generators.
pub fn radical_transfer(decomposition: &StanleyDecomposition, a: u32) -> Result<Transfer> {
    let module = &decomposition.module;
    let largest = decomposition
        .spaces
        .iter()
        .map(|s| s.generator.max_exp())
        .chain(core::iter::once(module.max_exp()))
        .max()
        .unwrap_or(0);
    if a == 0 || a < largest {
        return Err(Error::Precondition(
            "the power must dominate every exponent of the ideals and generators",
        ));
    }
    let mut spaces = Vec::new();
    let mut discarded = Vec::new();
    for s in &decomposition.spaces {
        let u = s.generator.exps();
        let pinned_ok = (0..u.len()).all(|j| s.free >> j & 1 == 1 || u[j] % a == 0);
        if !pinned_ok {
            discarded.push(s.clone());
            continue;
        }
        let c = u
            .iter()
            .enumerate()
            .map(|(j, &e)| if s.free >> j & 1 == 1 { e.div_ceil(a) } else { e / a })
            .collect();
        spaces.push(StanleySpace {
            generator: Monomial::new(c)?,
            free: s.free,
        });
    }
    Ok(Transfer {
        decomposition: StanleyDecomposition::new(module.radical(), spaces)?,
        discarded,
        power: a,
    })
}
