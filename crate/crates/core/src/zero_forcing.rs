//! Zero forcing: an active vertex with exactly one inactive neighbor forces
//! that neighbor to become active.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::path_cover;
use crate::sequences::mask_to_vec;

/// A run of the forcing process from an initial set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingTrace {
    pub initial: Vec<usize>,
    /// `(forcer, forced)` in the order they happened.
    pub events: Vec<(usize, usize)>,
    #[serde(skip)]
    pub final_active: Vec<usize>,
    pub chains: Vec<Vec<usize>>,
    #[serde(skip)]
    n: usize,
}

impl ForcingTrace {
    /// Whether every vertex ended up active.
    pub fn is_complete(&self) -> bool {
        self.final_active.len() == self.n
    }
}

/// Forcing chains of a trace. `complete` is false when the closure did not
/// reach every vertex; the paths then cover only the active vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chains {
    pub paths: Vec<Vec<usize>>,
    pub complete: bool,
}

/// Runs forcing to a fixpoint in rounds: each round fires, in index order,
/// the forcers that were eligible when it began and still are.
pub fn close(g: &Graph, initial: &[usize]) -> Result<ForcingTrace> {
    let n = g.n();
    let mut active = vec![false; n];
    let mut init = Vec::with_capacity(initial.len());
    for &v in initial {
        if v >= n {
            return Err(Error::MissingVertex(v));
        }
        if !active[v] {
            active[v] = true;
            init.push(v);
        }
    }
    init.sort_unstable();

    let mut inactive_nbrs: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| !active[w]).count())
        .collect();
    let mut eligible: BTreeSet<usize> = (0..n).filter(|&v| active[v] && inactive_nbrs[v] == 1).collect();
    let mut events = Vec::new();
    while !eligible.is_empty() {
        // one round: every forcer eligible at its start, by index, if still eligible
        let round = std::mem::take(&mut eligible);
        for u in round {
            if inactive_nbrs[u] != 1 {
                continue;
            }
            let v = *g
                .neighbors(u)
                .iter()
                .find(|&&w| !active[w])
                .expect("eligible forcer has an inactive neighbor");
            events.push((u, v));
            active[v] = true;
            for &w in g.neighbors(v) {
                inactive_nbrs[w] -= 1;
                if active[w] && inactive_nbrs[w] == 1 {
                    eligible.insert(w);
                }
            }
            if inactive_nbrs[v] == 1 {
                eligible.insert(v);
            }
        }
        eligible.retain(|&w| inactive_nbrs[w] == 1);
    }

    let mut trace = ForcingTrace {
        initial: init,
        events,
        final_active: (0..n).filter(|&v| active[v]).collect(),
        chains: Vec::new(),
        n,
    };
    trace.chains = chains(&trace).paths;
    Ok(trace)
}

/// Maximal forcing chains, one per initial vertex, following the events.
pub fn chains(trace: &ForcingTrace) -> Chains {
    let mut next = vec![usize::MAX; trace.n];
    for &(u, v) in &trace.events {
        next[u] = v;
    }
    let paths = trace
        .initial
        .iter()
        .map(|&start| {
            let mut chain = vec![start];
            let mut cur = start;
            while next[cur] != usize::MAX {
                cur = next[cur];
                chain.push(cur);
            }
            chain
        })
        .collect();
    Chains { paths, complete: trace.is_complete() }
}

pub fn is_zero_forcing_set(g: &Graph, s: &[usize]) -> Result<bool> {
    Ok(close(g, s)?.is_complete())
}

/// Closure of the active set `s` using neighbor masks.
pub fn closure_mask(masks: &[u64], s: u64) -> u64 {
    let mut active = s;
    loop {
        let before = active;
        let mut pending = active;
        while pending != 0 {
            let u = pending.trailing_zeros() as usize;
            pending &= pending - 1;
            let left = masks[u] & !active;
            if left != 0 && left & (left - 1) == 0 {
                active |= left;
            }
        }
        if active == before {
            return active;
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 { u64::MAX } else { (1u64 << n) - 1 }
}

/// Calls `f` on every `k`-subset of `0..n` as a bit mask, in increasing order.
/// Stops early when `f` returns false.
pub(crate) fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    if k == 0 || k == 64 {
        f(full_mask(k));
        return;
    }
    let limit = full_mask(n);
    let mut s: u64 = (1u64 << k) - 1;
    loop {
        if !f(s) {
            return;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r > limit {
            return;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if s > limit {
            return;
        }
    }
}

/// `Z(G)` from masks, trying cardinalities from `start` upward.
pub fn zero_forcing_number_masks(masks: &[u64], start: usize) -> usize {
    let n = masks.len();
    let full = full_mask(n);
    for k in start..=n {
        let mut found = false;
        for_each_k_subset(n, k, |s| {
            found = closure_mask(masks, s) == full;
            !found
        });
        if found {
            return k;
        }
    }
    n
}

/// All minimum zero forcing sets from masks.
pub fn min_zero_forcing_masks(masks: &[u64], start: usize) -> (usize, Vec<u64>) {
    let n = masks.len();
    let full = full_mask(n);
    for k in start..=n {
        let mut sets = Vec::new();
        for_each_k_subset(n, k, |s| {
            if closure_mask(masks, s) == full {
                sets.push(s);
            }
            true
        });
        if !sets.is_empty() {
            return (k, sets);
        }
    }
    (n, vec![full])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZfSearch {
    /// Largest order for the zero forcing number alone.
    pub number_n: usize,
    /// Largest order when the family of minimum sets is requested.
    pub family_n: usize,
    /// Start the search at the path cover number on forests.
    pub forest_bound: bool,
}

impl Default for ZfSearch {
    fn default() -> Self {
        ZfSearch { number_n: 18, family_n: 14, forest_bound: true }
    }
}

impl ZfSearch {
    /// Same limits, no path-cover shortcut.
    pub fn unbounded() -> Self {
        ZfSearch { forest_bound: false, ..Self::default() }
    }

    fn start(&self, g: &Graph) -> usize {
        if self.forest_bound && g.is_forest() {
            path_cover::path_cover_number(g).unwrap_or(0)
        } else {
            0
        }
    }

    fn masks<'a>(&self, g: &'a Graph, limit: usize, what: &'static str) -> Result<&'a [u64]> {
        let limit = limit.min(crate::graph::MASK_LIMIT);
        if g.n() > limit {
            return Err(Error::LimitExceeded { what, n: g.n(), limit });
        }
        Ok(g.masks().expect("graphs within the limit carry masks"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinZeroForcing {
    pub z: usize,
    pub all_min_sets: Vec<Vec<usize>>,
}

pub fn zero_forcing_number(g: &Graph) -> Result<usize> {
    zero_forcing_number_with(g, &ZfSearch::default())
}

pub fn zero_forcing_number_with(g: &Graph, cfg: &ZfSearch) -> Result<usize> {
    let masks = cfg.masks(g, cfg.number_n, "zero forcing search")?;
    Ok(zero_forcing_number_masks(masks, cfg.start(g)))
}

pub fn min_zero_forcing(g: &Graph) -> Result<MinZeroForcing> {
    min_zero_forcing_with(g, &ZfSearch::default())
}

/// `Z(G)` and every minimum zero forcing set, found by testing all subsets of
/// each cardinality in increasing order.
pub fn min_zero_forcing_with(g: &Graph, cfg: &ZfSearch) -> Result<MinZeroForcing> {
    let masks = cfg.masks(g, cfg.family_n, "minimum zero forcing enumeration")?;
    let (z, sets) = min_zero_forcing_masks(masks, cfg.start(g));
    Ok(MinZeroForcing { z, all_min_sets: sets.into_iter().map(mask_to_vec).collect() })
}
