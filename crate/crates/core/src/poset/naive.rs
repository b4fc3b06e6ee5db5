//! Exhaustive reference search, used as an oracle for [`super::find_partition`].
//!
//! It shares nothing with the exact-cover search beyond the poset itself:
//! intervals are the sets `{ c ∈ P : lo <= c <= hi }` for every comparable
//! pair of poset cells with `ρ(hi) >= k`, and the recursion tries every such
//! interval through the first uncovered cell.

use alloc::vec::Vec;

use super::{rho, Cell, CharacteristicPoset, Interval, IntervalPartition};
use crate::{Error, Result};

/// Largest poset the exhaustive search accepts.
pub const NAIVE_CELL_LIMIT: usize = 20;

pub fn enumerate_partitions_naive(
    poset: &CharacteristicPoset,
    k: usize,
) -> Result<Option<IntervalPartition>> {
    if poset.len() > NAIVE_CELL_LIMIT {
        return Err(Error::TooLarge {
            size: poset.len(),
            limit: NAIVE_CELL_LIMIT,
        });
    }
    let cells: Vec<Cell> = poset.cells().collect();
    let leq = |a: &Cell, b: &Cell| a.iter().zip(b).all(|(x, y)| x <= y);

    // (lo, hi, member mask)
    let mut blocks: Vec<(usize, usize, u32)> = Vec::new();
    for (a, lo) in cells.iter().enumerate() {
        for (b, hi) in cells.iter().enumerate() {
            if !leq(lo, hi) || rho(hi, poset.cbox()) < k {
                continue;
            }
            let mask = cells
                .iter()
                .enumerate()
                .filter(|(_, c)| leq(lo, c) && leq(c, hi))
                .fold(0u32, |m, (i, _)| m | (1 << i));
            blocks.push((a, b, mask));
        }
    }

    let full: u32 = if cells.is_empty() { 0 } else { u32::MAX >> (32 - cells.len()) };
    let mut picked = Vec::new();
    if !cover(full, 0, &blocks, &mut picked) {
        return Ok(None);
    }
    let intervals = picked
        .iter()
        .map(|&i| {
            let (a, b, _) = blocks[i];
            Interval {
                lo: cells[a].clone(),
                hi: cells[b].clone(),
            }
        })
        .collect();
    Ok(Some(IntervalPartition::new(poset.cbox().clone(), intervals)))
}

fn cover(full: u32, covered: u32, blocks: &[(usize, usize, u32)], picked: &mut Vec<usize>) -> bool {
    if covered == full {
        return true;
    }
    let first = (!covered & full).trailing_zeros();
    for (i, &(_, _, mask)) in blocks.iter().enumerate() {
        if mask >> first & 1 == 1 && mask & covered == 0 {
            picked.push(i);
            if cover(full, covered | mask, blocks, picked) {
                return true;
            }
            picked.pop();
        }
    }
    false
}
