//! Exact-cover search for interval partitions (Algorithm X on dancing links).
//!
//! Items are the poset cells. Options are the candidate intervals. An
//! interval `[lo, hi]` with `ρ(hi) > k` can always be cut into intervals whose
//! tops still have `ρ >= k`: slicing along a coordinate `j` with
//! `lo_j < g_j = hi_j` gives the slab `x_j = lo_j` (one fewer saturated
//! coordinate) and the rest, which keeps `hi`. Likewise a coordinate with
//! `lo_j < hi_j < g_j` can be sliced away without changing `ρ`. So a
//! partition for `k` exists iff one exists using only the intervals
//! `[lo, lo ↑ Z]`, where `lo ↑ Z` raises the coordinates `Z` of `lo` to the
//! ceiling, `Z` avoids the coordinates where `lo` is already saturated, and
//! `|Z| = max(0, k - ρ(lo))`. By convexity such an interval lies in the
//! poset iff its top does.
//!
//! An item with no live option prunes the node immediately and an item with
//! one is taken at once. Otherwise the branching item is picked by one of
//! three orders: fewest live options overall, fewest among the first few
//! uncovered cells, or simply the lexicographically smallest uncovered cell.
//! Which order is fast varies wildly between posets, so the search restarts
//! through the orders in turn with node budgets that double every round.
//!
//! The subproblem below a node depends only on which cells are still
//! uncovered, so the uncovered sets of exhausted nodes are remembered and a
//! node reaching one of them again backtracks at once. These dead ends stay
//! valid across restarts, so no round repeats the work of an earlier one.

use alloc::boxed::Box;
use alloc::vec::Vec;

use hashbrown::HashSet;

use super::{CellBox, CharacteristicPoset, Interval, IntervalPartition};

const ROOT: usize = 0;

/// Most uncovered sets remembered as dead ends; later ones are not stored.
const FAILED_CAP: usize = 1 << 20;

/// How many leading uncovered items each branching order inspects.
const WINDOWS: [usize; 3] = [usize::MAX, 16, 1];

/// Node budget of the first restart round.
const FIRST_BUDGET: u64 = 1 << 12;

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

/// State of the partition search for one poset and one target depth `k`.
#[derive(Debug, Clone)]
pub struct PartitionSearch {
    cbox: CellBox,
    /// `(lo, hi)` ranks per option.
    options: Vec<(usize, usize)>,
    // item list, indices 1..=items; 0 is the root
    llink: Vec<u32>,
    rlink: Vec<u32>,
    len: Vec<u32>,
    // nodes; the first items+1 are the item headers
    top: Vec<i32>,
    ulink: Vec<u32>,
    dlink: Vec<u32>,
    option_of: Vec<u32>,
    /// Bitset of the uncovered items, bit `i - 1` for item `i`.
    open: Vec<u64>,
    /// Uncovered sets known to admit no exact cover.
    failed: HashSet<Box<[u64]>>,
}

impl PartitionSearch {
    pub fn new(poset: &CharacteristicPoset, k: usize) -> Self {
        let cbox = poset.cbox().clone();
        let ranks = poset.ranks();
        let items = ranks.len();
        let n = cbox.n();
        let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };

        let mut s = PartitionSearch {
            cbox: cbox.clone(),
            options: Vec::new(),
            llink: (0..=items).map(|i| if i == 0 { items } else { i - 1 } as u32).collect(),
            rlink: (0..=items).map(|i| ((i + 1) % (items + 1)) as u32).collect(),
            len: alloc::vec![0; items + 1],
            top: alloc::vec![0; items + 1],
            ulink: (0..=items as u32).collect(),
            dlink: (0..=items as u32).collect(),
            option_of: alloc::vec![u32::MAX; items + 1],
            open: (0..items.div_ceil(64))
                .map(|w| {
                    let bits = (items - 64 * w).min(64);
                    if bits == 64 { u64::MAX } else { (1 << bits) - 1 }
                })
                .collect(),
            failed: HashSet::new(),
        };
        // leading spacer
        let mut spacer = s.push_node(0, 0);

        let mut chosen: Vec<usize> = Vec::new();
        for &lo_rank in ranks {
            let lo = cbox.cell(lo_rank);
            let sat = cbox.saturated(&lo);
            let need = k.saturating_sub(sat.count_ones() as usize);
            let free: Vec<usize> = (0..n).filter(|&j| (full & !sat) >> j & 1 == 1).collect();
            if free.len() < need {
                continue;
            }
            for_each_combination(free.len(), need, |pick| {
                chosen.clear();
                chosen.extend(pick.iter().map(|&i| free[i]));
                let hi_rank = lo_rank
                    + chosen
                        .iter()
                        .map(|&j| (cbox.g()[j] - lo[j]) as usize * cbox.stride(j))
                        .sum::<usize>();
                if !poset.contains_rank(hi_rank) {
                    return;
                }
                let id = s.options.len();
                s.options.push((lo_rank, hi_rank));
                let mut hi = lo.clone();
                for &j in &chosen {
                    hi[j] = cbox.g()[j];
                }
                let iv = Interval { lo: lo.clone(), hi };
                let first = s.top.len();
                for r in iv.ranks(&cbox) {
                    let item = ranks.binary_search(&r).expect("convex poset") + 1;
                    let x = s.push_node(item as i32, id as u32);
                    let u = s.ulink[item] as usize;
                    s.ulink[x] = u as u32;
                    s.dlink[u] = x as u32;
                    s.dlink[x] = item as u32;
                    s.ulink[item] = x as u32;
                    s.len[item] += 1;
                }
                let last = s.top.len() - 1;
                s.dlink[spacer] = last as u32;
                spacer = s.push_node(-(id as i32) - 1, u32::MAX);
                s.ulink[spacer] = first as u32;
            });
        }
        s
    }

    fn push_node(&mut self, top: i32, option: u32) -> usize {
        self.top.push(top);
        self.ulink.push(0);
        self.dlink.push(0);
        self.option_of.push(option);
        self.top.len() - 1
    }

    /// Number of candidate intervals.
    pub fn option_count(&self) -> usize {
        self.options.len()
    }

    /// Branching item: a forced one if any, else the one with the fewest
    /// live options among the first `window` uncovered items.
    fn choose(&self, window: usize) -> usize {
        let mut best = ROOT;
        let mut best_len = u32::MAX;
        let mut p = self.rlink[ROOT] as usize;
        let mut seen = 0;
        while p != ROOT {
            let l = self.len[p];
            if l <= 1 {
                return p;
            }
            if seen < window && l < best_len {
                best = p;
                best_len = l;
            }
            seen += 1;
            p = self.rlink[p] as usize;
        }
        best
    }

    fn cover(&mut self, i: usize) {
        let mut p = self.dlink[i] as usize;
        while p != i {
            self.hide(p);
            p = self.dlink[p] as usize;
        }
        let (l, r) = (self.llink[i], self.rlink[i]);
        self.rlink[l as usize] = r;
        self.llink[r as usize] = l;
        self.open[(i - 1) / 64] &= !(1 << ((i - 1) % 64));
    }

    fn hide(&mut self, p: usize) {
        let mut q = p + 1;
        while q != p {
            let x = self.top[q];
            if x <= 0 {
                q = self.ulink[q] as usize;
            } else {
                let (u, d) = (self.ulink[q], self.dlink[q]);
                self.dlink[u as usize] = d;
                self.ulink[d as usize] = u;
                self.len[x as usize] -= 1;
                q += 1;
            }
        }
    }

    fn uncover(&mut self, i: usize) {
        let (l, r) = (self.llink[i], self.rlink[i]);
        self.rlink[l as usize] = i as u32;
        self.llink[r as usize] = i as u32;
        self.open[(i - 1) / 64] |= 1 << ((i - 1) % 64);
        let mut p = self.ulink[i] as usize;
        while p != i {
            self.unhide(p);
            p = self.ulink[p] as usize;
        }
    }

    fn unhide(&mut self, p: usize) {
        let mut q = p - 1;
        while q != p {
            let x = self.top[q];
            if x <= 0 {
                q = self.dlink[q] as usize;
            } else {
                let (u, d) = (self.ulink[q], self.dlink[q]);
                self.dlink[u as usize] = q as u32;
                self.ulink[d as usize] = q as u32;
                self.len[x as usize] += 1;
                q -= 1;
            }
        }
    }

    /// Covers the items of `x`'s option other than `x`'s own.
    fn commit(&mut self, x: usize) {
        let mut p = x + 1;
        while p != x {
            let j = self.top[p];
            if j <= 0 {
                p = self.ulink[p] as usize;
            } else {
                self.cover(j as usize);
                p += 1;
            }
        }
    }

    fn uncommit(&mut self, x: usize) {
        let mut p = x - 1;
        while p != x {
            let j = self.top[p];
            if j <= 0 {
                p = self.dlink[p] as usize;
            } else {
                self.uncover(j as usize);
                p -= 1;
            }
        }
    }

    /// Depth-first search from the current state visiting at most `budget`
    /// nodes. When a partition is found the chosen nodes are left in
    /// `stack`; otherwise the state is fully restored.
    fn run(&mut self, stack: &mut Vec<(usize, usize)>, window: usize, mut budget: u64) -> Outcome {
        let base = stack.len();
        'enter: loop {
            if self.rlink[ROOT] as usize == ROOT {
                return Outcome::Found;
            }
            if budget == 0 {
                while stack.len() > base {
                    let (i, x) = stack.pop().expect("above base");
                    self.uncommit(x);
                    self.uncover(i);
                }
                return Outcome::OutOfBudget;
            }
            budget -= 1;
            let i = self.choose(window);
            if self.len[i] > 0 && !self.failed.contains(&self.open[..]) {
                self.cover(i);
                let x = self.dlink[i] as usize;
                stack.push((i, x));
                self.commit(x);
                continue 'enter;
            }
            loop {
                if stack.len() == base {
                    return Outcome::Exhausted;
                }
                let (i, x) = *stack.last().expect("above base");
                self.uncommit(x);
                let next = self.dlink[x] as usize;
                if next != i {
                    stack.last_mut().expect("above base").1 = next;
                    self.commit(next);
                    continue 'enter;
                }
                self.uncover(i);
                stack.pop();
                if self.failed.len() < FAILED_CAP {
                    self.failed.insert(self.open.clone().into_boxed_slice());
                }
            }
        }
    }

    /// Complete search from the current state by restarts over the
    /// branching orders. Leaves the chosen nodes in `stack` on success.
    fn search(&mut self, stack: &mut Vec<(usize, usize)>) -> bool {
        for round in 0.. {
            let window = WINDOWS[round % WINDOWS.len()];
            let budget = FIRST_BUDGET
                .checked_shl((round / WINDOWS.len()) as u32)
                .filter(|&b| b < u64::MAX >> 1)
                .unwrap_or(u64::MAX);
            match self.run(stack, window, budget) {
                Outcome::Found => return true,
                Outcome::Exhausted => return false,
                Outcome::OutOfBudget => {}
            }
        }
        unreachable!("the last budget is unbounded")
    }

    fn partition(&self, stack: &[(usize, usize)]) -> IntervalPartition {
        let mut chosen: Vec<(usize, usize)> = stack
            .iter()
            .map(|&(_, x)| self.options[self.option_of[x] as usize])
            .collect();
        chosen.sort_unstable();
        IntervalPartition::new(
            self.cbox.clone(),
            chosen
                .into_iter()
                .map(|(lo, hi)| Interval {
                    lo: self.cbox.cell(lo),
                    hi: self.cbox.cell(hi),
                })
                .collect(),
        )
    }

    /// Runs the whole search: the root alternatives in order, each searched
    /// on its own with [`Self::solve_branch`].
    pub fn solve(self) -> Option<IntervalPartition> {
        if self.rlink[ROOT] as usize == ROOT {
            return Some(self.partition(&[]));
        }
        (0..self.root_branches()).find_map(|b| self.solve_branch(b))
    }

    /// Number of alternatives at the root of the search. Exploring the
    /// branches `0..root_branches()` in order with [`Self::solve_branch`] and
    /// keeping the first success reproduces [`Self::solve`] exactly.
    ///
    /// An empty poset has no branches even though the empty partition solves
    /// it; callers handle that case first.
    pub fn root_branches(&self) -> usize {
        if self.rlink[ROOT] as usize == ROOT {
            return 0;
        }
        self.len[self.choose(WINDOWS[0])] as usize
    }

    /// Searches only the subtree below the `branch`-th root alternative.
    /// The answer depends only on the branch, not on earlier searches.
    pub fn solve_branch(&self, branch: usize) -> Option<IntervalPartition> {
        if branch >= self.root_branches() {
            return None;
        }
        let mut s = self.clone();
        s.failed.clear();
        let i = s.choose(WINDOWS[0]);
        s.cover(i);
        let mut x = s.dlink[i] as usize;
        for _ in 0..branch {
            x = s.dlink[x] as usize;
        }
        s.commit(x);
        let mut stack = alloc::vec![(i, x)];
        s.search(&mut stack).then(|| s.partition(&stack))
    }
}

/// Calls `f` with every `k`-subset of `0..n`, as ascending index lists, in
/// lexicographic order.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{characteristic_poset, find_partition};
    use crate::{MonomialIdeal, QuotientModule};

    #[test]
    fn combinations_in_lex_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(
            seen,
            [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]].map(|a| a.to_vec())
        );
        let mut count = 0;
        for_each_combination(3, 0, |c| {
            assert!(c.is_empty());
            count += 1
        });
        assert_eq!(count, 1);
        for_each_combination(2, 3, |_| panic!("no 3-subsets of a 2-set"));
    }

    #[test]
    fn branches_reproduce_the_sequential_answer() {
        let p = MonomialIdeal::prime(5, 0b00111).unwrap();
        let q = MonomialIdeal::prime(5, 0b11100).unwrap();
        let m = QuotientModule::ideal(p.intersect(&q).unwrap());
        let cbox = CellBox::tight(&m).unwrap();
        let poset = characteristic_poset(&m, &cbox).unwrap();
        for k in 0..=5 {
            let search = PartitionSearch::new(&poset, k);
            let seq = search.clone().solve();
            let by_branch =
                (0..search.root_branches()).find_map(|b| search.solve_branch(b));
            assert_eq!(seq, by_branch, "k = {k}");
            assert_eq!(seq, find_partition(&poset, k));
        }
    }

    #[test]
    fn search_state_restores_after_failure() {
        let m = QuotientModule::ideal(MonomialIdeal::prime(3, 0b111).unwrap());
        let poset = characteristic_poset(&m, &CellBox::tight(&m).unwrap()).unwrap();
        let mut s = PartitionSearch::new(&poset, 3);
        let before = s.clone();
        let mut stack = Vec::new();
        assert!(!s.search(&mut stack));
        assert_eq!(s.len, before.len);
        assert_eq!(s.ulink, before.ulink);
        assert_eq!(s.dlink, before.dlink);
        assert_eq!(s.rlink, before.rlink);
    }
}
