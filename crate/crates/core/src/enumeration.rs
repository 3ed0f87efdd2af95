//! Small-instance generators and the fast-versus-oracle harness.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Execution};
use crate::recognizers::{self, Property, Target};
use crate::sequences::{self, SearchLimits, SequenceKind};
use crate::tree_iso::free_code;
use crate::zero_forcing::{self, ZfSearch};

pub const MAX_TREE_N: usize = 12;
pub const MAX_LABELED_N: usize = 7;

fn out_of_range(what: &'static str, n: usize, max: usize) -> Error {
    Error::LimitExceeded { what, n, limit: max }
}

/// One tree per isomorphism class on `n` vertices, grown by attaching a
/// leaf to every vertex of every class on `n - 1` vertices. Deterministic.
pub fn free_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Construction("tree census needs n >= 1".into()));
    }
    if n > MAX_TREE_N {
        return Err(out_of_range("free tree census", n, MAX_TREE_N));
    }
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.n() {
                let mut edges = t.edges();
                edges.push((v, m - 1));
                let grown = Graph::from_edges(m, edges)?;
                if seen.insert(free_code(&grown, None)?) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Number of vertex pairs, and the pair behind each adjacency bit.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph whose edge set is the bit pattern `index` over the
/// pairs `(0,1), (0,2), .., (n-2,n-1)`.
pub fn labeled_graph(n: usize, index: u64) -> Graph {
    let edges = pairs(n).into_iter().enumerate().filter(|&(b, _)| index >> b & 1 == 1).map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("pairs are distinct and loop-free")
}

/// Neighbor masks of [`labeled_graph`] without building the graph.
pub fn labeled_masks(n: usize, index: u64) -> Vec<u64> {
    let mut masks = vec![0u64; n];
    let mut b = 0;
    for i in 0..n {
        for j in i + 1..n {
            if index >> b & 1 == 1 {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
            b += 1;
        }
    }
    masks
}

/// All `2^(n choose 2)` labeled graphs on `n <= 7` vertices.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_LABELED_N {
        return Err(out_of_range("labeled graph stream", n, MAX_LABELED_N));
    }
    Ok((0..labeled_graph_count(n)).map(move |i| labeled_graph(n, i)))
}

/// One forest per isomorphism class on `n` vertices whose components all
/// have at least `min_size` vertices.
pub fn forests(n: usize, min_size: usize) -> Result<Vec<Graph>> {
    if n > MAX_TREE_N {
        return Err(out_of_range("forest census", n, MAX_TREE_N));
    }
    let min_size = min_size.max(1);
    let census: Vec<Vec<Graph>> =
        (0..=n).map(|m| if m >= min_size { free_trees(m) } else { Ok(Vec::new()) }).collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut parts: Vec<(usize, usize)> = Vec::new();

    // parts are non-decreasing in (size, class index)
    fn grow(
        left: usize,
        floor: (usize, usize),
        census: &[Vec<Graph>],
        parts: &mut Vec<(usize, usize)>,
        out: &mut Vec<Graph>,
    ) {
        if left == 0 {
            let forest = parts
                .iter()
                .fold(Graph::empty(0), |acc, &(size, idx)| acc.disjoint_union(&census[size][idx]));
            out.push(forest);
            return;
        }
        for size in floor.0..=left {
            let start = if size == floor.0 { floor.1 } else { 0 };
            for idx in start..census[size].len() {
                parts.push((size, idx));
                grow(left - size, (size, idx), census, parts, out);
                parts.pop();
            }
        }
    }

    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    grow(n, (min_size, 0), &census, &mut parts, &mut out);
    Ok(out)
}

/// Which instances a census property runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Trees,
    Forests { min_size: usize },
    Labeled { isolate_free: bool },
}

fn family_of(property: Property) -> Result<Family> {
    Ok(match property {
        Property::IsoUniqueZfForest | Property::UniqueGtd => Family::Forests { min_size: 1 },
        Property::IsoUniqueGtdForest => Family::Forests { min_size: 2 },
        Property::UniqueLgd => Family::Trees,
        Property::UniqueZf | Property::UniqueGd | Property::IsoUniqueGd => Family::Labeled { isolate_free: false },
        Property::BhrLabeling => Family::Labeled { isolate_free: true },
        other => return Err(Error::UnknownProperty(format!("{other} has no census oracle"))),
    })
}

/// Properties [`cross_validate`] knows how to check.
pub const CENSUS_PROPERTIES: [&str; 8] = [
    "iso-unique-zf-forest",
    "iso-unique-gtd-forest",
    "iso-unique-gd",
    "unique-zf",
    "unique-gd",
    "unique-gtd",
    "unique-lgd",
    "bhr-labeling",
];

fn instances(family: Family, n: usize) -> Result<Vec<Graph>> {
    match family {
        Family::Trees => free_trees(n),
        Family::Forests { min_size } => forests(n, min_size),
        Family::Labeled { isolate_free } => Ok(labeled_graphs(n)?
            .filter(|g| !isolate_free || g.isolated_count() == 0)
            .collect()),
    }
}

fn oracle_verdict(g: &Graph, property: Property) -> Result<bool> {
    let limits = SearchLimits { grundy_n: 18, family_n: 16 };
    Ok(match property {
        Property::IsoUniqueZfForest => recognizers::oracle_iso_unique(g, Target::Zf)?.is_yes(),
        Property::IsoUniqueGtdForest => {
            recognizers::oracle_iso_unique(g, Target::Grundy(SequenceKind::Open))?.is_yes()
        }
        Property::IsoUniqueGd => recognizers::oracle_iso_unique(g, Target::Grundy(SequenceKind::Closed))?.is_yes(),
        Property::UniqueZf => {
            let cfg = ZfSearch { family_n: 16, ..ZfSearch::unbounded() };
            zero_forcing::min_zero_forcing_with(g, &cfg)?.all_min_sets.len() == 1
        }
        Property::UniqueGd => sequences::all_max_grundy_sets_with(g, SequenceKind::Closed, &limits)?.len() == 1,
        Property::UniqueGtd => {
            sequences::grundy_number_with(g, SequenceKind::Open, &limits)?.value == g.n() - g.isolated_count()
        }
        Property::UniqueLgd => sequences::grundy_number_with(g, SequenceKind::L, &limits)?.value == g.n(),
        Property::BhrLabeling => sequences::grundy_number_with(g, SequenceKind::Open, &limits)?.value == g.n(),
        other => return Err(Error::UnknownProperty(other.to_string())),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub graph6: String,
    pub fast: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeRow {
    pub n: usize,
    pub instances: usize,
    pub yes: usize,
    pub no: usize,
    pub mismatches: usize,
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub property: String,
    pub n_min: usize,
    pub n_max: usize,
    pub instances: usize,
    /// Counted by the oracle's verdict.
    pub yes: usize,
    pub no: usize,
    pub rows: Vec<SizeRow>,
    pub mismatches: Vec<Mismatch>,
    /// True when the time budget ran out before the last size.
    pub truncated: bool,
    pub elapsed_secs: f64,
    pub max_instance_millis: f64,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn summary_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "property {}  n = {}..={}", self.property, self.n_min, self.n_max);
        let _ = writeln!(s, "{:>4} {:>10} {:>8} {:>8} {:>10} {:>10}", "n", "instances", "yes", "no", "mismatch", "ms");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:>4} {:>10} {:>8} {:>8} {:>10} {:>10}",
                r.n, r.instances, r.yes, r.no, r.mismatches, r.millis
            );
        }
        let _ = writeln!(
            s,
            "total {} instances, {} mismatches, {:.2}s{}",
            self.instances,
            self.mismatches.len(),
            self.elapsed_secs,
            if self.truncated { " (budget exhausted)" } else { "" }
        );
        s
    }

    /// One graph6 line per mismatching instance.
    pub fn write_mismatch_corpus(&self, mut w: impl Write) -> io::Result<()> {
        for m in &self.mismatches {
            writeln!(w, "{}", m.graph6)?;
        }
        Ok(())
    }
}

fn guarded(f: impl FnOnce() -> Result<bool>) -> String {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => if v { "yes" } else { "no" }.to_string(),
        Ok(Err(e)) => format!("error: {e}"),
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_default();
            format!("panic: {msg}")
        }
    }
}

/// Runs the fast recognizer and its oracle on every instance with
/// `1 <= n <= n_max` (2 for isolate-free families), stopping between sizes
/// once `budget` is spent.
pub fn cross_validate(property: &str, n_max: usize, budget: Duration, exec: Execution) -> Result<CensusReport> {
    let prop: Property = property.parse()?;
    let family = family_of(prop)?;
    let (n_min, limit) = match family {
        Family::Trees => (1, MAX_TREE_N),
        Family::Forests { min_size } => (min_size, recognizers::ORACLE_FOREST_N),
        Family::Labeled { isolate_free } => (if isolate_free { 2 } else { 1 }, MAX_LABELED_N),
    };
    if n_max > limit {
        return Err(out_of_range("cross-validation", n_max, limit));
    }
    let start = Instant::now();
    let mut report = CensusReport {
        property: prop.to_string(),
        n_min,
        n_max,
        instances: 0,
        yes: 0,
        no: 0,
        rows: Vec::new(),
        mismatches: Vec::new(),
        truncated: false,
        elapsed_secs: 0.0,
        max_instance_millis: 0.0,
    };
    for n in n_min..=n_max {
        if start.elapsed() > budget {
            report.truncated = true;
            break;
        }
        let level_start = Instant::now();
        let graphs = instances(family, n)?;
        let outcomes = par::map_slice(&graphs, exec, |g| {
            let t = Instant::now();
            let fast = guarded(|| recognizers::recognize(g, prop).map(|c| c.is_yes()));
            let oracle = guarded(|| oracle_verdict(g, prop));
            (fast, oracle, t.elapsed())
        });
        let mut row = SizeRow { n, instances: graphs.len(), yes: 0, no: 0, mismatches: 0, millis: 0 };
        for (g, (fast, oracle, took)) in graphs.iter().zip(outcomes) {
            report.max_instance_millis = report.max_instance_millis.max(took.as_secs_f64() * 1e3);
            match oracle.as_str() {
                "yes" => row.yes += 1,
                "no" => row.no += 1,
                _ => {}
            }
            if fast != oracle || fast.starts_with("error") || fast.starts_with("panic") {
                row.mismatches += 1;
                report.mismatches.push(Mismatch { graph6: g.to_graph6()?, fast, oracle });
            }
        }
        row.millis = level_start.elapsed().as_millis();
        report.instances += row.instances;
        report.yes += row.yes;
        report.no += row.no;
        report.rows.push(row);
    }
    report.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| free_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
        assert_eq!(free_trees(2).unwrap(), vec![Graph::path(2)]);
        assert!(free_trees(0).is_err());
        assert!(free_trees(13).is_err());
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(labeled_graphs(4).unwrap().count(), 64);
        assert!(labeled_graphs(8).is_err());
        for i in 0..64 {
            assert_eq!(labeled_masks(4, i), labeled_graph(4, i).masks().unwrap());
        }
    }

    #[test]
    fn forest_counts() {
        // forests on 4 vertices: P4, K13, P3+K1, 2K2, K2+2K1, 4K1
        assert_eq!(forests(4, 1).unwrap().len(), 6);
        assert_eq!(forests(4, 2).unwrap().len(), 3);
        assert_eq!(forests(3, 2).unwrap().len(), 1);
        assert!(forests(6, 2).unwrap().iter().all(|f| f.is_forest() && f.isolated_count() == 0));
    }

    #[test]
    fn small_harness_runs() {
        for prop in CENSUS_PROPERTIES {
            let n = if prop.contains("forest") || prop == "unique-lgd" || prop == "unique-gtd" { 6 } else { 4 };
            let r = cross_validate(prop, n, Duration::from_secs(60), Execution::Parallel).unwrap();
            assert!(r.passed(), "{prop}: {:?}", r.mismatches);
            assert!(!r.truncated);
            assert_eq!(r.instances, r.yes + r.no);
        }
        assert!(cross_validate("perfect-matching", 4, Duration::from_secs(1), Execution::Sequential).is_err());
        assert!(cross_validate("nonsense", 4, Duration::from_secs(1), Execution::Sequential).is_err());
    }

    #[test]
    fn zero_budget_truncates() {
        let r = cross_validate("unique-zf", 5, Duration::ZERO, Execution::Sequential).unwrap();
        assert!(r.truncated);
    }
}
