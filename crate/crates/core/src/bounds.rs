//! Closed-form bounds for the Stanley depth of `Q ∩ Q'`, `Q` and `Q'`
//! primary, in terms of the support shape `(t, r, p, n)`: after renumbering,
//! `sqrt(Q) = (x_1, ..., x_t)` and `sqrt(Q') = (x_{r+1}, ..., x_p)`.
//!
//! Every function checks the hypotheses of the statement it implements and
//! returns [`Error::NotApplicable`] outside them instead of extrapolating.

use alloc::vec::Vec;
use core::fmt;

use crate::ideal::{MonomialIdeal, SupportShape};
use crate::poset::sdepth_with_witness;
use crate::{Error, QuotientModule, Result, Sdepth};

/// A nonnegative fraction `num / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    pub num: usize,
    pub den: usize,
}

impl Ratio {
    pub fn new(num: usize, den: usize) -> Self {
        assert!(den > 0);
        Ratio { num, den }
    }

    pub fn floor(self) -> usize {
        self.num / self.den
    }

    pub fn is_integer(self) -> bool {
        self.num.is_multiple_of(self.den)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.floor())
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn half_ceil(x: usize) -> usize {
    x.div_ceil(2)
}

/// Exact Stanley depth of a monomial prime generated by `t` of the `n`
/// variables: `n - t + ⌈t/2⌉ = n - ⌊t/2⌋`.
pub fn formula_prime(t: usize, n: usize) -> Result<usize> {
    if t == 0 || t > n {
        return Err(Error::NotApplicable("a prime needs 1 <= t <= n generators"));
    }
    Ok(n - t / 2)
}

/// Exact Stanley depth of a monomial complete intersection with `m`
/// generators in `n` variables: `n - ⌊m/2⌋`.
pub fn formula_complete_intersection(m: usize, n: usize) -> Result<usize> {
    if m == 0 || m > n {
        return Err(Error::NotApplicable(
            "a complete intersection has 1 <= m <= n generators",
        ));
    }
    Ok(n - m / 2)
}

/// Whether the generators of `I` have pairwise disjoint supports.
pub fn is_complete_intersection(i: &MonomialIdeal) -> bool {
    let mut seen = 0u64;
    for g in i.gens() {
        let s = g.support();
        if s == 0 || s & seen != 0 {
            return false;
        }
        seen |= s;
    }
    !i.is_zero()
}

/// Adjoining a new variable `x_{n+1}` to an ideal of Stanley depth `s`
/// yields Stanley depth in `[s, s + 1]`.
pub fn variable_extension_interval(s: usize) -> (usize, usize) {
    (s, s + 1)
}

/// `sdepth(J/I) <= sdepth(sqrt(J)/sqrt(I))`; returns the right-hand side,
/// computed exactly.
pub fn ub_radical(module: &QuotientModule) -> Result<Sdepth> {
    Ok(sdepth_with_witness(&module.radical())?.sdepth)
}

/// `sqrt(Q) ⊆ sqrt(Q') = (x_1, ..., x_n)`: at most `n - ⌊t/2⌋`.
pub fn ub_nested(s: SupportShape) -> Result<usize> {
    if s.r != 0 || s.p != s.n || s.t == 0 {
        return Err(Error::NotApplicable(
            "needs sqrt(Q) inside sqrt(Q') = the maximal ideal",
        ));
    }
    Ok(s.n - s.t / 2)
}

fn single_variable_shape(s: SupportShape) -> Result<()> {
    if s.t != 1 || !s.is_disjoint() || s.p != s.n || s.n < 2 {
        return Err(Error::NotApplicable(
            "needs sqrt(Q) = (x_1) and sqrt(Q') = (x_2, ..., x_n)",
        ));
    }
    Ok(())
}

/// `sqrt(Q) = (x_1)`, `sqrt(Q') = (x_2, ..., x_n)`: at most `1 + ⌈(n-1)/2⌉`.
pub fn ub_single_variable(s: SupportShape) -> Result<usize> {
    single_variable_shape(s)?;
    Ok(1 + half_ceil(s.n - 1))
}

/// Same shape with `Q`, `Q'` irreducible: exactly `1 + ⌈(n-1)/2⌉`.
pub fn exact_single_variable(s: SupportShape, irreducible: bool) -> Result<usize> {
    if !irreducible {
        return Err(Error::NotApplicable("needs irreducible Q and Q'"));
    }
    ub_single_variable(s)
}

/// Disjoint supports covering all variables, `t >= 2`, `n >= 4`:
/// at most `(n + 2) / 2`.
pub fn ub_disjoint(s: SupportShape) -> Result<Ratio> {
    if !s.is_disjoint() || s.p != s.n || s.t < 2 || s.t >= s.n || s.n < 4 {
        return Err(Error::NotApplicable(
            "needs disjoint supports covering all variables, t >= 2, n >= 4",
        ));
    }
    Ok(Ratio::new(s.n + 2, 2))
}

fn overlap_shape(s: SupportShape) -> Result<()> {
    if !(1 < s.r && s.r <= s.t && s.t < s.n && s.p == s.n) {
        return Err(Error::NotApplicable(
            "needs 1 < r <= t < n and sqrt(Q') reaching x_n",
        ));
    }
    Ok(())
}

/// `1 < r <= t < n`, `p = n`, `n >= 4`: at most `(n + t - r + 2) / 2`.
pub fn ub_overlap_shift(s: SupportShape) -> Result<Ratio> {
    overlap_shape(s)?;
    if s.n < 4 {
        return Err(Error::NotApplicable("needs n >= 4"));
    }
    Ok(Ratio::new(s.n + s.t - s.r + 2, 2))
}

/// `1 < r <= t < n`, `p = n`: at most `min(n - ⌊t/2⌋, n - ⌊(n-t)/2⌋)`.
pub fn ub_overlap_prime(s: SupportShape) -> Result<usize> {
    overlap_shape(s)?;
    Ok((s.n - s.t / 2).min(s.n - (s.n - s.t) / 2))
}

fn combined_shape(s: SupportShape) -> Result<()> {
    if !(1 < s.r && s.r <= s.t && s.t < s.p && s.p <= s.n && s.n >= 4) {
        return Err(Error::NotApplicable("needs 1 < r <= t < p <= n and n >= 4"));
    }
    Ok(())
}

/// `1 < r <= t < p <= n`, `n >= 4`: at most
/// `min(⌊(2n + t - p - r + 2)/2⌋, n - ⌊t/2⌋, n - ⌊(p-t)/2⌋)`.
pub fn ub_combined(s: SupportShape) -> Result<usize> {
    combined_shape(s)?;
    let shifted = (2 * s.n + s.t + 2 - s.p - s.r) / 2;
    Ok(shifted.min(s.n - s.t / 2).min(s.n - (s.p - s.t) / 2))
}

/// The equality case of [`ub_combined`]: disjoint supports (`t = r`),
/// `n` odd, `Q` and `Q'` irreducible.
pub fn exact_combined(s: SupportShape, irreducible: bool) -> Result<usize> {
    combined_shape(s)?;
    if !s.is_disjoint() || s.n.is_multiple_of(2) || !irreducible {
        return Err(Error::NotApplicable(
            "needs t = r, n odd and irreducible Q, Q'",
        ));
    }
    ub_combined(s)
}

fn irreducible_disjoint_shape(s: SupportShape, irreducible: bool) -> Result<()> {
    if !irreducible || !s.is_disjoint() || s.p != s.n || s.t == 0 || s.t == s.n {
        return Err(Error::NotApplicable(
            "needs irreducible Q, Q' with disjoint supports covering all variables",
        ));
    }
    Ok(())
}

/// Irreducible `Q`, `Q'` with disjoint supports covering all variables:
/// at least `⌈t/2⌉ + ⌈(n-t)/2⌉`.
pub fn lb_irreducible_disjoint(s: SupportShape, irreducible: bool) -> Result<usize> {
    irreducible_disjoint_shape(s, irreducible)?;
    Ok(half_ceil(s.t) + half_ceil(s.n - s.t))
}

/// Same hypotheses with `n` odd: exactly `⌈n/2⌉`.
pub fn exact_odd_disjoint(s: SupportShape, irreducible: bool) -> Result<usize> {
    irreducible_disjoint_shape(s, irreducible)?;
    if s.n.is_multiple_of(2) {
        return Err(Error::NotApplicable("needs n odd"));
    }
    Ok(half_ceil(s.n))
}

/// Same hypotheses with `n` even: `n/2 + 1` when `t` is odd, and one of
/// `n/2`, `n/2 + 1` when `t` is even. Returned as a closed range.
pub fn range_even_disjoint(s: SupportShape, irreducible: bool) -> Result<(usize, usize)> {
    irreducible_disjoint_shape(s, irreducible)?;
    if s.n % 2 == 1 {
        return Err(Error::NotApplicable("needs n even"));
    }
    let top = s.n / 2 + 1;
    Ok(if s.t % 2 == 1 { (top, top) } else { (top - 1, top) })
}

/// Any nonzero monomial ideal with `m` minimal generators: at least
/// `n - ⌊m/2⌋` (clamped at 0).
pub fn lb_generators(i: &MonomialIdeal) -> Result<usize> {
    if i.is_zero() {
        return Err(Error::NotApplicable("needs a nonzero ideal"));
    }
    Ok(i.n().saturating_sub(i.len() / 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    Upper,
    Lower,
    Exact,
    /// The true value lies in a closed range.
    Range,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Upper => "upper",
            BoundKind::Lower => "lower",
            BoundKind::Exact => "exact",
            BoundKind::Range => "range",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundValue {
    Int(usize),
    Ratio(Ratio),
    Range(usize, usize),
    /// The value is the exact Stanley depth of some module, possibly infinite.
    Depth(Sdepth),
}

impl BoundValue {
    /// Closed range of Stanley depths compatible with this value under `kind`.
    fn admits(self, kind: BoundKind, exact: Sdepth) -> bool {
        let (lo, hi) = match self {
            BoundValue::Int(v) => (Sdepth::Finite(v), Sdepth::Finite(v)),
            BoundValue::Ratio(r) => (Sdepth::Finite(r.floor()), Sdepth::Finite(r.floor())),
            BoundValue::Range(a, b) => (Sdepth::Finite(a), Sdepth::Finite(b)),
            BoundValue::Depth(d) => (d, d),
        };
        match kind {
            BoundKind::Upper => exact <= hi,
            BoundKind::Lower => exact >= lo,
            BoundKind::Exact | BoundKind::Range => lo <= exact && exact <= hi,
        }
    }

    /// Integer form used in comparisons (floored ratios; the low end of a range).
    pub fn floor(self) -> Option<usize> {
        match self {
            BoundValue::Int(v) => Some(v),
            BoundValue::Ratio(r) => Some(r.floor()),
            BoundValue::Range(a, _) => Some(a),
            BoundValue::Depth(d) => d.finite(),
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Int(v) => write!(f, "{v}"),
            BoundValue::Ratio(r) if r.is_integer() => write!(f, "{r}"),
            BoundValue::Ratio(r) => write!(f, "{r} ({})", r.floor()),
            BoundValue::Range(a, b) if a == b => write!(f, "{a}"),
            BoundValue::Range(a, b) => write!(f, "{a}..{b}"),
            BoundValue::Depth(d) => write!(f, "{d}"),
        }
    }
}

/// Which of the two ideals plays `Q` when the shape is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairOrder {
    Given,
    Swapped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    pub order: PairOrder,
    /// `None` when not applicable (or not computed).
    pub value: Option<BoundValue>,
    pub applicable: bool,
    pub citation: &'static str,
    /// Why the entry does not apply, if it does not.
    pub note: Option<&'static str>,
}

/// An entry whose value is contradicted by the exact Stanley depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub name: &'static str,
    pub order: PairOrder,
    pub kind: BoundKind,
    pub value: BoundValue,
    pub exact: Sdepth,
}

/// Every bound applicable to `Q ∩ Q'`, optionally with the exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub shape: SupportShape,
    pub swapped_shape: SupportShape,
    pub irreducible: bool,
    pub intersection: MonomialIdeal,
    pub entries: Vec<BoundEntry>,
    pub exact: Option<Sdepth>,
}

impl BoundReport {
    /// Entries contradicted by `exact`; empty when `exact` is unknown.
    pub fn violations(&self) -> Vec<Violation> {
        let Some(exact) = self.exact else {
            return Vec::new();
        };
        self.entries
            .iter()
            .filter(|e| e.applicable)
            .filter_map(|e| {
                let v = e.value?;
                (!v.admits(e.kind, exact)).then_some(Violation {
                    name: e.name,
                    order: e.order,
                    kind: e.kind,
                    value: v,
                    exact,
                })
            })
            .collect()
    }

    /// The applicable entry `name` for the given order.
    pub fn entry(&self, name: &str, order: PairOrder) -> Option<&BoundEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name && e.order == order && e.applicable)
    }

    /// Smallest applicable upper bound (floored).
    pub fn best_upper(&self) -> Option<usize> {
        self.applicable_values(BoundKind::Upper).min()
    }

    /// Largest applicable lower bound.
    pub fn best_lower(&self) -> Option<usize> {
        self.applicable_values(BoundKind::Lower).max()
    }

    fn applicable_values(&self, kind: BoundKind) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .filter(move |e| e.applicable && e.kind == kind)
            .filter_map(|e| e.value?.floor())
    }
}

fn entry(
    name: &'static str,
    kind: BoundKind,
    order: PairOrder,
    citation: &'static str,
    value: Result<BoundValue>,
) -> BoundEntry {
    match value {
        Ok(v) => BoundEntry {
            name,
            kind,
            order,
            value: Some(v),
            applicable: true,
            citation,
            note: None,
        },
        Err(e) => BoundEntry {
            name,
            kind,
            order,
            value: None,
            applicable: false,
            citation,
            note: Some(match e {
                Error::NotApplicable(msg) | Error::Domain(msg) | Error::Precondition(msg) => msg,
                _ => "not evaluated",
            }),
        },
    }
}

fn shape_entries(s: SupportShape, irreducible: bool, order: PairOrder) -> Vec<BoundEntry> {
    use BoundKind::*;
    use BoundValue as V;
    alloc::vec![
        entry("nested", Upper, order, "prime formula on the radical", ub_nested(s).map(V::Int)),
        entry(
            "single_variable",
            Upper,
            order,
            "colon by the common factor, prime formula",
            ub_single_variable(s).map(V::Int),
        ),
        entry(
            "single_variable_exact",
            Exact,
            order,
            "irreducible case of single_variable",
            exact_single_variable(s, irreducible).map(V::Int),
        ),
        entry(
            "disjoint",
            Upper,
            order,
            "degree 2 and 3 counting in the poset",
            ub_disjoint(s).map(V::Ratio),
        ),
        entry(
            "overlap_shift",
            Upper,
            order,
            "restriction to the disjoint part, then one variable at a time",
            ub_overlap_shift(s).map(V::Ratio),
        ),
        entry(
            "overlap_prime",
            Upper,
            order,
            "dehomogenising one variable, prime formula",
            ub_overlap_prime(s).map(V::Int),
        ),
        entry(
            "combined",
            Upper,
            order,
            "restriction to the support, free variable shift",
            ub_combined(s).map(V::Int),
        ),
        entry(
            "combined_exact",
            Exact,
            order,
            "equality case of combined",
            exact_combined(s, irreducible).map(V::Int),
        ),
        entry(
            "irreducible_disjoint",
            Lower,
            order,
            "intersection of two irreducible ideals",
            lb_irreducible_disjoint(s, irreducible).map(V::Int),
        ),
        entry(
            "odd_disjoint_exact",
            Exact,
            order,
            "disjoint upper and irreducible lower bounds meet",
            exact_odd_disjoint(s, irreducible).map(V::Int),
        ),
        entry(
            "even_disjoint_range",
            Range,
            order,
            "disjoint upper and irreducible lower bounds",
            range_even_disjoint(s, irreducible).map(|(a, b)| V::Range(a, b)),
        ),
    ]
}

/// Evaluates every bound for `Q ∩ Q'` in both orders of the pair (entries
/// for the swapped order are listed only where they apply), and with
/// `compute_exact` also the exact Stanley depth of `Q ∩ Q'` and of its
/// radical.
pub fn bound_report(q: &MonomialIdeal, q2: &MonomialIdeal, compute_exact: bool) -> Result<BoundReport> {
    let given = MonomialIdeal::support_shape(q, q2)?;
    let swapped = MonomialIdeal::support_shape(q2, q)?;
    let irreducible = q.is_irreducible()? && q2.is_irreducible()?;
    let intersection = q.intersect(q2)?;

    let mut entries = shape_entries(given.shape, irreducible, PairOrder::Given);
    if swapped.shape != given.shape {
        entries.extend(
            shape_entries(swapped.shape, irreducible, PairOrder::Swapped)
                .into_iter()
                .filter(|e| e.applicable),
        );
    }
    entries.push(entry(
        "generators",
        BoundKind::Lower,
        PairOrder::Given,
        "count of minimal generators",
        lb_generators(&intersection).map(BoundValue::Int),
    ));
    let module = QuotientModule::ideal(intersection.clone());
    let radical = if compute_exact {
        ub_radical(&module).map(BoundValue::Depth)
    } else {
        Err(Error::NotApplicable("exact computation not requested"))
    };
    entries.push(entry(
        "radical",
        BoundKind::Upper,
        PairOrder::Given,
        "power map pulls decompositions back to the radical",
        radical,
    ));
    if is_complete_intersection(&intersection.radical()) && !intersection.is_squarefree() {
        // the radical's depth is known in closed form
        let r = intersection.radical();
        entries.push(entry(
            "radical_complete_intersection",
            BoundKind::Upper,
            PairOrder::Given,
            "complete intersection formula on the radical",
            formula_complete_intersection(r.len(), r.n()).map(BoundValue::Int),
        ));
    } else if is_complete_intersection(&intersection) {
        entries.push(entry(
            "complete_intersection",
            BoundKind::Exact,
            PairOrder::Given,
            "complete intersection formula",
            formula_complete_intersection(intersection.len(), intersection.n())
                .map(BoundValue::Int),
        ));
    }

    let exact = if compute_exact {
        Some(sdepth_with_witness(&module)?.sdepth)
    } else {
        None
    };
    Ok(BoundReport {
        shape: given.shape,
        swapped_shape: swapped.shape,
        irreducible,
        intersection,
        entries,
        exact,
    })
}
