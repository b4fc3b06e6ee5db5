//! Exponent compression.
//!
//! Whether `x^c` lies in a monomial ideal depends on each `c_j` only through
//! which generator exponents of `x_j` it has reached. Between two consecutive
//! such thresholds a characteristic poset therefore repeats the same layer,
//! and merging every run of equal layers into one gives a smaller box with
//! the same Stanley depth:
//!
//! * a partition of the small box lifts to the big one by stretching each
//!   interval over the layers its ends stand for; a top lands on the ceiling
//!   exactly when it did before, so `ρ` is kept;
//! * a partition of the big box restricts to the small one by keeping, per
//!   coordinate, the first layer of every run and the ceiling itself; the
//!   nonempty restrictions are intervals, and again tops keep their
//!   saturated coordinates.
//!
//! Searching the small box is exact, and often far cheaper.

use alloc::vec::Vec;

use super::{CellBox, Interval, IntervalPartition};
use crate::{Error, Monomial, MonomialIdeal, QuotientModule, Result};

/// A module relabelled onto its compressed box, with the data to lift
/// partitions back.
#[derive(Debug, Clone)]
pub struct Compression {
    original: CellBox,
    compressed: CellBox,
    /// Per coordinate, the first value of every run, ascending from 0; the
    /// last run ends at the ceiling of the original box.
    starts: Vec<Vec<u32>>,
    module: QuotientModule,
}

impl Compression {
    pub fn new(module: &QuotientModule, cbox: &CellBox) -> Result<Self> {
        if !cbox.dominates(module) {
            return Err(Error::Precondition(
                "the box must dominate every generator exponent",
            ));
        }
        let n = cbox.n();
        let mut starts: Vec<Vec<u32>> = alloc::vec![alloc::vec![0]; n];
        for m in module.upper().gens().iter().chain(module.lower().gens()) {
            for (j, s) in starts.iter_mut().enumerate() {
                s.push(m.exp(j));
            }
        }
        for (s, &g) in starts.iter_mut().zip(cbox.g()) {
            s.sort_unstable();
            s.dedup();
            // a variable no generator mentions still needs a ceiling layer
            if s.len() == 1 {
                s.push(g);
            }
        }
        let compressed = CellBox::new(starts.iter().map(|s| s.len() as u32 - 1).collect())?;
        let relabel = |ideal: &MonomialIdeal| {
            let gens = ideal
                .gens()
                .iter()
                .map(|m| {
                    Monomial::new(
                        (0..n)
                            .map(|j| {
                                starts[j].binary_search(&m.exp(j)).expect("exponent is a run start") as u32
                            })
                            .collect(),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            MonomialIdeal::minimalize(n, gens)
        };
        let module = QuotientModule::new(relabel(module.upper())?, relabel(module.lower())?)?;
        Ok(Compression {
            original: cbox.clone(),
            compressed,
            starts,
            module,
        })
    }

    /// The relabelled module, living in [`Self::compressed_box`].
    pub fn module(&self) -> &QuotientModule {
        &self.module
    }

    pub fn compressed_box(&self) -> &CellBox {
        &self.compressed
    }

    pub fn original_box(&self) -> &CellBox {
        &self.original
    }

    /// Stretches a partition of the compressed poset over the original box.
    pub fn lift(&self, partition: &IntervalPartition) -> IntervalPartition {
        let intervals = partition
            .intervals
            .iter()
            .map(|iv| Interval {
                lo: iv.lo.iter().zip(&self.starts).map(|(&v, s)| s[v as usize]).collect(),
                hi: iv
                    .hi
                    .iter()
                    .zip(&self.starts)
                    .zip(self.original.g())
                    .map(|((&v, s), &g)| s.get(v as usize + 1).map_or(g, |&next| next - 1))
                    .collect(),
            })
            .collect();
        IntervalPartition::new(self.original.clone(), intervals)
    }
}
