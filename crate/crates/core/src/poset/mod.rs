//! Characteristic posets and interval partitions.
//!
//! For a module `J/I` and a box `g` dominating every generator exponent, the
//! characteristic poset is the set of cells `c ∈ ∏ [0, g_j]` with
//! `x^c ∈ J \ I`, ordered componentwise. A partition of it into intervals
//! `[lo, hi]` gives a Stanley decomposition whose spaces have dimension
//! `ρ(hi)`, the number of coordinates of `hi` sitting at the box ceiling,
//! and the Stanley depth of `J/I` is the best `min ρ(hi)` over all
//! partitions.
//!
//! The poset is convex: if `lo` and `hi` are cells of it, so is every cell
//! between them. Every interval with both ends in the poset is therefore a
//! legal block, and validity of a partition reduces to disjointness and
//! coverage.

mod compress;
mod naive;
mod search;

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, QuotientModule, Result, Sdepth};

pub use compress::Compression;
pub use naive::{enumerate_partitions_naive, NAIVE_CELL_LIMIT};
pub use search::PartitionSearch;

/// Upper limit on the number of cells of a box.
pub const MAX_BOX_VOLUME: usize = 1 << 24;

/// A cell of a box: an exponent vector bounded by the box.
pub type Cell = Vec<u32>;

/// The box `∏ [0, g_j]` a characteristic poset lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellBox {
    g: Vec<u32>,
    strides: Vec<usize>,
    volume: usize,
}

impl CellBox {
    pub fn new(g: Vec<u32>) -> Result<Self> {
        crate::monomial::check_ring(g.len())?;
        if g.contains(&0) {
            return Err(Error::Precondition("box sides must be positive"));
        }
        let mut strides = alloc::vec![0; g.len()];
        let mut volume: usize = 1;
        for j in (0..g.len()).rev() {
            strides[j] = volume;
            volume = volume
                .checked_mul(g[j] as usize + 1)
                .filter(|&v| v <= MAX_BOX_VOLUME)
                .ok_or(Error::TooLarge {
                    size: usize::MAX,
                    limit: MAX_BOX_VOLUME,
                })?;
        }
        Ok(CellBox { g, strides, volume })
    }

    /// The smallest box serving `module`: `g_j` is the largest exponent of
    /// `x_j` among the generators of both ideals, and at least 1.
    pub fn tight(module: &QuotientModule) -> Result<Self> {
        Self::new(module.max_exps().into_iter().map(|e| e.max(1)).collect())
    }

    pub fn g(&self) -> &[u32] {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.len()
    }

    /// Number of cells in the box.
    pub fn volume(&self) -> usize {
        self.volume
    }

    pub fn dominates(&self, module: &QuotientModule) -> bool {
        module.n() == self.n() && module.max_exps().iter().zip(&self.g).all(|(e, g)| e <= g)
    }

    pub fn contains_cell(&self, c: &[u32]) -> bool {
        c.len() == self.n() && c.iter().zip(&self.g).all(|(a, b)| a <= b)
    }

    /// Mixed-radix index of a cell; rank order is lexicographic order and
    /// hence a linear extension of the componentwise order.
    #[inline]
    pub fn rank(&self, c: &[u32]) -> usize {
        c.iter().zip(&self.strides).map(|(&x, &s)| x as usize * s).sum()
    }

    pub fn cell(&self, mut rank: usize) -> Cell {
        self.strides
            .iter()
            .map(|&s| {
                let x = rank / s;
                rank %= s;
                x as u32
            })
            .collect()
    }

    pub(crate) fn stride(&self, j: usize) -> usize {
        self.strides[j]
    }

    /// Bitmask of the coordinates of `c` at the box ceiling.
    #[inline]
    pub fn saturated(&self, c: &[u32]) -> u64 {
        c.iter()
            .zip(&self.g)
            .enumerate()
            .filter(|(_, (a, b))| a == b)
            .fold(0, |acc, (j, _)| acc | (1 << j))
    }

    /// The box with every side grown by `by`.
    pub fn enlarged(&self, by: u32) -> Result<Self> {
        Self::new(self.g.iter().map(|&x| x + by).collect())
    }
}

/// `ρ(d)`: the number of coordinates of `d` at the box ceiling, which is the
/// dimension of the Stanley space an interval with top `d` induces.
pub fn rho(d: &[u32], cbox: &CellBox) -> usize {
    cbox.saturated(d).count_ones() as usize
}

/// The characteristic poset of a module inside a box.
#[derive(Clone, PartialEq, Eq)]
pub struct CharacteristicPoset {
    cbox: CellBox,
    member: Vec<bool>,
    ranks: Vec<usize>,
}

/// Builds `{ c ∈ ∏ [0, g_j] : x^c ∈ J \ I }`.
pub fn characteristic_poset(module: &QuotientModule, cbox: &CellBox) -> Result<CharacteristicPoset> {
    if !cbox.dominates(module) {
        return Err(Error::Precondition(
            "the box must dominate every generator exponent",
        ));
    }
    let n = cbox.n();
    let mut member = alloc::vec![false; cbox.volume()];
    let mut ranks = Vec::new();
    let mut cell = alloc::vec![0u32; n];
    for (rank, slot) in member.iter_mut().enumerate() {
        if module.contains_unchecked(&cell) {
            *slot = true;
            ranks.push(rank);
        }
        // odometer step, last coordinate fastest
        for j in (0..n).rev() {
            if cell[j] < cbox.g[j] {
                cell[j] += 1;
                break;
            }
            cell[j] = 0;
        }
    }
    Ok(CharacteristicPoset {
        cbox: cbox.clone(),
        member,
        ranks,
    })
}

impl CharacteristicPoset {
    /// Builds a poset directly from a set of cells (for tests and for
    /// checking partitions of hand-written posets).
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cbox: &CellBox, cells: I) -> Result<Self> {
        let mut member = alloc::vec![false; cbox.volume()];
        for c in cells {
            if !cbox.contains_cell(&c) {
                return Err(Error::Precondition("cell outside the box"));
            }
            member[cbox.rank(&c)] = true;
        }
        let ranks = (0..member.len()).filter(|&r| member[r]).collect();
        Ok(CharacteristicPoset {
            cbox: cbox.clone(),
            member,
            ranks,
        })
    }

    pub fn cbox(&self) -> &CellBox {
        &self.cbox
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn contains(&self, c: &[u32]) -> bool {
        self.cbox.contains_cell(c) && self.member[self.cbox.rank(c)]
    }

    #[inline]
    pub(crate) fn contains_rank(&self, rank: usize) -> bool {
        self.member[rank]
    }

    /// Ranks of the cells, ascending.
    pub(crate) fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// The cells in lexicographic order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.ranks.iter().map(|&r| self.cbox.cell(r))
    }
}

impl fmt::Debug for CharacteristicPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CharacteristicPoset")
            .field("g", &self.cbox.g)
            .field("cells", &self.len())
            .finish()
    }
}

/// The interval `[lo, hi]` of cells between `lo` and `hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Cell,
    pub hi: Cell,
}

impl Interval {
    pub fn new(lo: Cell, hi: Cell) -> Result<Self> {
        if lo.len() != hi.len() || lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::Precondition("an interval needs lo <= hi"));
        }
        Ok(Interval { lo, hi })
    }

    pub fn contains(&self, c: &[u32]) -> bool {
        c.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(x, (a, b))| a <= x && x <= b)
    }

    /// Ranks of all cells of the interval.
    pub fn ranks(&self, cbox: &CellBox) -> Vec<usize> {
        let mut out = alloc::vec![cbox.rank(&self.lo)];
        for j in 0..self.lo.len() {
            let span = (self.hi[j] - self.lo[j]) as usize;
            if span == 0 {
                continue;
            }
            let stride = cbox.stride(j);
            let base = out.len();
            for step in 1..=span {
                for i in 0..base {
                    let r = out[i] + step * stride;
                    out.push(r);
                }
            }
        }
        out
    }
}

/// Ways in which a family of intervals fails to partition a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionDefect {
    /// An interval leaves the box or has `lo > hi`.
    Malformed(usize),
    /// An interval contains a cell outside the poset.
    OutsidePoset { interval: usize, cell: Cell },
    /// Two intervals share a cell.
    Overlap { first: usize, second: usize, cell: Cell },
    /// A poset cell is covered by no interval.
    Uncovered(Cell),
}

/// A family of disjoint intervals covering a characteristic poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition {
    pub cbox: CellBox,
    pub intervals: Vec<Interval>,
}

impl IntervalPartition {
    pub fn new(cbox: CellBox, intervals: Vec<Interval>) -> Self {
        IntervalPartition { cbox, intervals }
    }

    /// `min ρ(hi)` over the intervals; infinite for the empty partition.
    pub fn sdepth(&self) -> Sdepth {
        self.intervals
            .iter()
            .map(|iv| rho(&iv.hi, &self.cbox))
            .min()
            .map_or(Sdepth::Infinite, Sdepth::Finite)
    }

    /// Checks cell by cell that the intervals partition `poset`.
    pub fn validate(&self, poset: &CharacteristicPoset) -> core::result::Result<(), PartitionDefect> {
        let cbox = poset.cbox();
        let mut owner: Vec<Option<usize>> = alloc::vec![None; cbox.volume()];
        for (i, iv) in self.intervals.iter().enumerate() {
            if !cbox.contains_cell(&iv.lo)
                || !cbox.contains_cell(&iv.hi)
                || iv.lo.iter().zip(&iv.hi).any(|(a, b)| a > b)
            {
                return Err(PartitionDefect::Malformed(i));
            }
            for r in iv.ranks(cbox) {
                if !poset.contains_rank(r) {
                    return Err(PartitionDefect::OutsidePoset {
                        interval: i,
                        cell: cbox.cell(r),
                    });
                }
                if let Some(first) = owner[r] {
                    return Err(PartitionDefect::Overlap {
                        first,
                        second: i,
                        cell: cbox.cell(r),
                    });
                }
                owner[r] = Some(i);
            }
        }
        match poset.ranks().iter().find(|&&r| owner[r].is_none()) {
            Some(&r) => Err(PartitionDefect::Uncovered(cbox.cell(r))),
            None => Ok(()),
        }
    }
}

/// Searches a partition of `poset` whose interval tops all have `ρ >= k`.
///
/// The empty poset is partitioned by the empty family for every `k`; for a
/// nonempty poset and `k > n` there is nothing to find.
pub fn find_partition(poset: &CharacteristicPoset, k: usize) -> Option<IntervalPartition> {
    PartitionSearch::new(poset, k).solve()
}

/// Optimal Stanley depth of a module together with a partition realising it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub sdepth: Sdepth,
    pub partition: IntervalPartition,
}

/// Largest `k` for which `decide` finds a partition, by binary search over
/// `[0, n]`. A partition for `k` also works for every smaller `k`, so the
/// feasible values form a prefix.
pub fn best_partition<F>(poset: &CharacteristicPoset, mut decide: F) -> Witness
where
    F: FnMut(&CharacteristicPoset, usize) -> Option<IntervalPartition>,
{
    if poset.is_empty() {
        return Witness {
            sdepth: Sdepth::Infinite,
            partition: IntervalPartition::new(poset.cbox().clone(), Vec::new()),
        };
    }
    let mut best = decide(poset, 0).expect("singleton intervals always partition a poset");
    let mut best_k = 0;
    let (mut lo, mut hi) = (1, poset.cbox().n());
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match decide(poset, mid) {
            Some(p) => {
                best = p;
                best_k = mid;
                lo = mid + 1;
            }
            None => hi = mid - 1,
        }
    }
    debug_assert!(best.sdepth() >= Sdepth::Finite(best_k));
    Witness {
        sdepth: Sdepth::Finite(best_k),
        partition: best,
    }
}

/// Exact Stanley depth of `J/I` in the tight box, with an optimal partition.
pub fn sdepth_with_witness(module: &QuotientModule) -> Result<Witness> {
    let cbox = CellBox::tight(module)?;
    sdepth_in_box(module, &cbox)
}

/// Exact Stanley depth of `J/I` computed in a caller-chosen box.
pub fn sdepth_in_box(module: &QuotientModule, cbox: &CellBox) -> Result<Witness> {
    sdepth_in_box_by(module, cbox, find_partition)
}

/// [`sdepth_in_box`] with the decision procedure of [`best_partition`]
/// supplied by the caller. The search runs on the compressed poset and the
/// optimal partition is lifted back into `cbox`.
pub fn sdepth_in_box_by<F>(module: &QuotientModule, cbox: &CellBox, decide: F) -> Result<Witness>
where
    F: FnMut(&CharacteristicPoset, usize) -> Option<IntervalPartition>,
{
    let compression = Compression::new(module, cbox)?;
    let poset = characteristic_poset(compression.module(), compression.compressed_box())?;
    let w = best_partition(&poset, decide);
    Ok(Witness {
        sdepth: w.sdepth,
        partition: compression.lift(&w.partition),
    })
}

/// Exact Stanley depth of `J/I`; [`Sdepth::Infinite`] for the zero module.
///
/// Panics if the tight box exceeds [`MAX_BOX_VOLUME`]; use
/// [`sdepth_with_witness`] to get an error instead.
pub fn sdepth_exact(module: &QuotientModule) -> Sdepth {
    sdepth_with_witness(module)
        .expect("tight box within the volume limit")
        .sdepth
}
