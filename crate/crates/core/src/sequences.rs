//! Closed, open, Z- and L-sequences.
//!
//! A sequence `(v_1, ..., v_k)` of distinct vertices is legal when every
//! `v_i` footprints something: its *defining* neighborhood minus everything
//! the earlier vertices *cover* is nonempty.
//!
//! | kind   | defining set | covered set  |
//! |--------|--------------|--------------|
//! | Closed | `N[v]`       | `∪ N[v_j]`   |
//! | Open   | `N(v)`       | `∪ N(v_j)`   |
//! | Z      | `N(v)`       | `∪ N[v_j]`   |
//! | L      | `N[v]`       | `∪ N(v_j)`   |
//!
//! The covered set after a prefix depends only on which vertices were chosen,
//! so the exhaustive searches run over chosen-vertex bit masks.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard ceiling for the dense memo table (`2^n` bytes).
pub const MAX_EXHAUSTIVE_N: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceKind {
    Closed,
    Open,
    Z,
    L,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 4] = [Self::Closed, Self::Open, Self::Z, Self::L];

    #[inline]
    fn defines_with_self(self) -> bool {
        matches!(self, Self::Closed | Self::L)
    }

    #[inline]
    fn covers_with_self(self) -> bool {
        matches!(self, Self::Closed | Self::Z)
    }

    /// Whether an isolated vertex can ever appear in a sequence of this kind.
    pub fn admits_isolated(self) -> bool {
        self.defines_with_self()
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Closed => "closed",
            Self::Open => "open",
            Self::Z => "z",
            Self::L => "l",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "closed" | "gd" | "grundy" => Ok(Self::Closed),
            "open" | "total" | "gtd" => Ok(Self::Open),
            "z" => Ok(Self::Z),
            "l" => Ok(Self::L),
            other => Err(Error::UnknownProperty(other.to_string())),
        }
    }
}

/// A legal sequence with the vertices each position footprints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationSequence {
    pub kind: SequenceKind,
    pub order: Vec<usize>,
    pub steps: Vec<Vec<usize>>,
    #[serde(skip)]
    pub covered: Vec<usize>,
}

impl DominationSequence {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The vertex set of the sequence, sorted.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut s = self.order.clone();
        s.sort_unstable();
        s
    }

    /// Positions (0-based) that footprint `v`, in order.
    pub fn footprinters(&self, v: usize) -> Vec<usize> {
        (0..self.steps.len())
            .filter(|&i| self.steps[i].binary_search(&v).is_ok())
            .collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.order.contains(&v)
    }
}

/// Checks legality of `order` and records the footprint of every step.
///
/// An illegal step is reported with its 1-based position.
pub fn validate(g: &Graph, kind: SequenceKind, order: &[usize]) -> Result<DominationSequence> {
    let n = g.n();
    let mut used = vec![false; n];
    let mut covered = vec![false; n];
    let mut steps = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        if v >= n {
            return Err(Error::MissingVertex(v));
        }
        if used[v] {
            return Err(Error::DuplicateVertex(v));
        }
        used[v] = true;
        let mut step: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| !covered[w]).collect();
        if kind.defines_with_self() && !covered[v] {
            step.push(v);
            step.sort_unstable();
        }
        if step.is_empty() {
            return Err(Error::IllegalStep { index: i + 1, vertex: v });
        }
        for &w in g.neighbors(v) {
            covered[w] = true;
        }
        if kind.covers_with_self() {
            covered[v] = true;
        }
        steps.push(step);
    }
    Ok(DominationSequence {
        kind,
        order: order.to_vec(),
        steps,
        covered: (0..n).filter(|&v| covered[v]).collect(),
    })
}

/// Size limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest order for [`grundy_number`] and [`sequence_containing`].
    pub grundy_n: usize,
    /// Largest order for [`all_max_grundy_sets`].
    pub family_n: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { grundy_n: 18, family_n: 14 }
    }
}

impl SearchLimits {
    fn check(limit: usize, what: &'static str, n: usize) -> Result<()> {
        let limit = limit.min(MAX_EXHAUSTIVE_N);
        if n > limit {
            Err(Error::LimitExceeded { what, n, limit })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrundyResult {
    pub kind: SequenceKind,
    pub value: usize,
    pub witness: DominationSequence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_max_sets: Option<Vec<Vec<usize>>>,
}

const UNKNOWN: u8 = u8::MAX;

/// Memoized depth-first search over chosen sets.
///
/// `memo[S]` is the length of the longest legal continuation after the
/// vertices of `S` have been chosen; only states reachable by a legal
/// ordering are ever filled in.
struct SubsetSearch {
    defining: Vec<u64>,
    covering: Vec<u64>,
    memo: Vec<u8>,
}

impl SubsetSearch {
    fn new(masks: &[u64], kind: SequenceKind) -> Self {
        let n = masks.len();
        let with_self = |v: usize, yes: bool| masks[v] | if yes { 1u64 << v } else { 0 };
        SubsetSearch {
            defining: (0..n).map(|v| with_self(v, kind.defines_with_self())).collect(),
            covering: (0..n).map(|v| with_self(v, kind.covers_with_self())).collect(),
            memo: vec![UNKNOWN; 1usize << n],
        }
    }

    fn longest(&mut self, chosen: u64, covered: u64) -> u8 {
        let slot = self.memo[chosen as usize];
        if slot != UNKNOWN {
            return slot;
        }
        let mut best = 0;
        let mut free = !chosen & self.full();
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            if self.defining[v] & !covered != 0 {
                let len = 1 + self.longest(chosen | 1 << v, covered | self.covering[v]);
                best = best.max(len);
            }
        }
        self.memo[chosen as usize] = best;
        best
    }

    fn full(&self) -> u64 {
        let n = self.defining.len();
        if n == 64 { u64::MAX } else { (1u64 << n) - 1 }
    }

    /// Lexicographically first maximum ordering.
    fn witness(&mut self) -> Vec<usize> {
        let mut order = Vec::new();
        let (mut chosen, mut covered) = (0u64, 0u64);
        let mut remaining = self.longest(0, 0);
        while remaining > 0 {
            let v = (0..self.defining.len())
                .find(|&v| {
                    chosen >> v & 1 == 0
                        && self.defining[v] & !covered != 0
                        && self.memo[(chosen | 1 << v) as usize] == remaining - 1
                })
                .expect("memo is consistent");
            order.push(v);
            chosen |= 1 << v;
            covered |= self.covering[v];
            remaining -= 1;
        }
        order
    }

    /// All reachable chosen sets of size `value`.
    fn sets_of_size(&self, value: usize) -> Vec<u64> {
        (0..self.memo.len() as u64)
            .filter(|&s| self.memo[s as usize] != UNKNOWN && s.count_ones() as usize == value)
            .collect()
    }
}

/// Grundy number of `kind` directly from neighbor masks (`masks.len() <= 24`).
pub fn grundy_value_masks(masks: &[u64], kind: SequenceKind) -> usize {
    SubsetSearch::new(masks, kind).longest(0, 0) as usize
}

/// Every maximum-length chosen set of `kind`, as bit masks in increasing order.
pub fn max_set_masks(masks: &[u64], kind: SequenceKind) -> (usize, Vec<u64>) {
    let mut search = SubsetSearch::new(masks, kind);
    let value = search.longest(0, 0) as usize;
    (value, search.sets_of_size(value))
}

fn masks_within<'g>(g: &'g Graph, limit: usize, what: &'static str) -> Result<&'g [u64]> {
    SearchLimits::check(limit, what, g.n())?;
    Ok(g.masks().expect("graphs within the search limit carry masks"))
}

pub fn grundy_number(g: &Graph, kind: SequenceKind) -> Result<GrundyResult> {
    grundy_number_with(g, kind, &SearchLimits::default())
}

pub fn grundy_number_with(g: &Graph, kind: SequenceKind, limits: &SearchLimits) -> Result<GrundyResult> {
    let masks = masks_within(g, limits.grundy_n, "grundy number search")?;
    let mut search = SubsetSearch::new(masks, kind);
    let value = search.longest(0, 0) as usize;
    let witness = validate(g, kind, &search.witness())?;
    Ok(GrundyResult { kind, value, witness, all_max_sets: None })
}

pub fn all_max_grundy_sets(g: &Graph, kind: SequenceKind) -> Result<Vec<Vec<usize>>> {
    all_max_grundy_sets_with(g, kind, &SearchLimits::default())
}

/// The family `{ Ŝ : S a maximum-length sequence of kind }`, each set sorted,
/// the family ordered by bit mask.
pub fn all_max_grundy_sets_with(g: &Graph, kind: SequenceKind, limits: &SearchLimits) -> Result<Vec<Vec<usize>>> {
    let masks = masks_within(g, limits.family_n, "maximum set enumeration")?;
    let (_, sets) = max_set_masks(masks, kind);
    Ok(sets.into_iter().map(mask_to_vec).collect())
}

/// Grundy number together with the family of maximum sets.
pub fn grundy_with_family(g: &Graph, kind: SequenceKind, limits: &SearchLimits) -> Result<GrundyResult> {
    let masks = masks_within(g, limits.family_n, "maximum set enumeration")?;
    let mut search = SubsetSearch::new(masks, kind);
    let value = search.longest(0, 0) as usize;
    let witness = validate(g, kind, &search.witness())?;
    let sets = search.sets_of_size(value).into_iter().map(mask_to_vec).collect();
    Ok(GrundyResult { kind, value, witness, all_max_sets: Some(sets) })
}

pub fn sequence_containing(g: &Graph, kind: SequenceKind, x: usize) -> Result<DominationSequence> {
    sequence_containing_with(g, kind, x, &SearchLimits::default())
}

/// A maximum-length sequence of `kind` whose vertex set contains `x`.
///
/// Starts from the search witness. For Closed, Open and Z the sequence is
/// rebuilt backwards from one footprinted vertex per step (the footprinter of
/// `x` contributes `x`). For L, `x` replaces the last vertex that footprints
/// one of its neighbors.
pub fn sequence_containing_with(
    g: &Graph,
    kind: SequenceKind,
    x: usize,
    limits: &SearchLimits,
) -> Result<DominationSequence> {
    if x >= g.n() {
        return Err(Error::MissingVertex(x));
    }
    if !kind.admits_isolated() && g.degree(x) == 0 {
        return Err(Error::IsolatedNotAllowed(x));
    }
    let base = grundy_number_with(g, kind, limits)?.witness;
    if base.contains(x) {
        return Ok(base);
    }
    let order = match kind {
        SequenceKind::Closed | SequenceKind::Open | SequenceKind::Z => reversed_through(&base, x)?,
        SequenceKind::L => l_replacement(g, &base, x)?,
    };
    let out = validate(g, kind, &order)?;
    if out.len() != base.len() || !out.contains(x) {
        return Err(Error::Construction(format!("{kind} sequence through {x}")));
    }
    Ok(out)
}

fn reversed_through(base: &DominationSequence, x: usize) -> Result<Vec<usize>> {
    let owner = base
        .steps
        .iter()
        .position(|s| s.binary_search(&x).is_ok())
        .ok_or_else(|| Error::Construction(format!("vertex {x} has no footprinter")))?;
    Ok((0..base.len())
        .rev()
        .map(|i| if i == owner { x } else { base.steps[i][0] })
        .collect())
}

fn l_replacement(g: &Graph, base: &DominationSequence, x: usize) -> Result<Vec<usize>> {
    let nx = g.neighbors(x);
    let last = (0..base.len())
        .rev()
        .find(|&i| base.steps[i].iter().any(|w| nx.binary_search(w).is_ok()))
        .ok_or_else(|| Error::Construction(format!("no L-footprinter of a neighbor of {x}")))?;
    let mut order = base.order.clone();
    order[last] = x;
    Ok(order)
}

/// A legal ordering of exactly the vertices of `set`, if one exists.
pub fn order_for_set(g: &Graph, kind: SequenceKind, set: &[usize]) -> Result<Option<DominationSequence>> {
    let masks = masks_within(g, MAX_EXHAUSTIVE_N, "ordering search")?;
    for &v in set {
        if v >= g.n() {
            return Err(Error::MissingVertex(v));
        }
    }
    let target = vec_to_mask(set);
    let with = |v: usize, yes: bool| masks[v] | if yes { 1u64 << v } else { 0 };
    let defining: Vec<u64> = (0..g.n()).map(|v| with(v, kind.defines_with_self())).collect();
    let covering: Vec<u64> = (0..g.n()).map(|v| with(v, kind.covers_with_self())).collect();
    let mut dead = HashSet::new();
    let mut order = Vec::with_capacity(set.len());

    #[allow(clippy::too_many_arguments)]
    fn extend(
        chosen: u64,
        covered: u64,
        target: u64,
        defining: &[u64],
        covering: &[u64],
        dead: &mut HashSet<u64>,
        order: &mut Vec<usize>,
    ) -> bool {
        if chosen == target {
            return true;
        }
        if dead.contains(&chosen) {
            return false;
        }
        let mut free = target & !chosen;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            if defining[v] & !covered != 0 {
                order.push(v);
                if extend(chosen | 1 << v, covered | covering[v], target, defining, covering, dead, order) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(chosen);
        false
    }

    if extend(0, 0, target, &defining, &covering, &mut dead, &mut order) {
        validate(g, kind, &order).map(Some)
    } else {
        Ok(None)
    }
}

pub(crate) fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub(crate) fn vec_to_mask(s: &[usize]) -> u64 {
    s.iter().fold(0, |m, &v| m | 1u64 << v)
}
