//! Uniqueness and iso-uniqueness recognizers with self-contained certificates.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{parse_edge_list, to_edge_list, Graph};
use crate::graph6::{self, SHORT_FORM_LIMIT};
use crate::path_cover::{self, Connector, PathCover};
use crate::sequences::{self, SearchLimits, SequenceKind};
use crate::tree_iso::{self, Canonizer, ForestKeys};
use crate::zero_forcing::{self, ZfSearch};

/// Largest order at which certificates carry explicit extremal sets and
/// witnesses are cross-checked against the exhaustive searches.
pub const DESK_N: usize = 10;
/// Largest order of the iso-uniqueness oracle on general graphs.
pub const ORACLE_GENERAL_N: usize = tree_iso::BRUTE_LIMIT;
/// Largest order of the iso-uniqueness oracle on forests.
pub const ORACLE_FOREST_N: usize = 11;
/// Largest order of the labeling search.
pub const BHR_N: usize = 16;

/// What an extremal set is extremal for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Grundy(SequenceKind),
    Zf,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Grundy(k) => write!(f, "{k}"),
            Target::Zf => f.write_str("zf"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("zf") {
            Ok(Target::Zf)
        } else {
            s.parse().map(Target::Grundy)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    UniqueZf,
    UniqueGd,
    IsoUniqueGd,
    UniqueGtd,
    IsoUniqueGtdForest,
    UniqueLgd,
    IsoUniqueZfForest,
    OracleIsoUnique(Target),
    BhrLabeling,
    PerfectMatching,
}

impl Property {
    /// Names accepted on the command line, oracle kinds excluded.
    pub const NAMES: [&'static str; 9] = [
        "unique-zf",
        "unique-gd",
        "iso-unique-gd",
        "unique-gtd",
        "iso-unique-gtd-forest",
        "unique-lgd",
        "iso-unique-zf-forest",
        "bhr-labeling",
        "perfect-matching",
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Property::UniqueZf => "unique-zf",
            Property::UniqueGd => "unique-gd",
            Property::IsoUniqueGd => "iso-unique-gd",
            Property::UniqueGtd => "unique-gtd",
            Property::IsoUniqueGtdForest => "iso-unique-gtd-forest",
            Property::UniqueLgd => "unique-lgd",
            Property::IsoUniqueZfForest => "iso-unique-zf-forest",
            Property::OracleIsoUnique(t) => return write!(f, "oracle-iso-unique:{t}"),
            Property::BhrLabeling => "bhr-labeling",
            Property::PerfectMatching => "perfect-matching",
        };
        f.write_str(name)
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownProperty(s.to_string());
        if let Some(kind) = s.strip_prefix("oracle-iso-unique:") {
            return kind.parse().map(Property::OracleIsoUnique).map_err(|_| unknown());
        }
        Ok(match s {
            "unique-zf" => Property::UniqueZf,
            "unique-gd" => Property::UniqueGd,
            "iso-unique-gd" => Property::IsoUniqueGd,
            "unique-gtd" => Property::UniqueGtd,
            "iso-unique-gtd-forest" => Property::IsoUniqueGtdForest,
            "unique-lgd" => Property::UniqueLgd,
            "iso-unique-zf-forest" => Property::IsoUniqueZfForest,
            "bhr-labeling" => Property::BhrLabeling,
            "perfect-matching" => Property::PerfectMatching,
            _ => return Err(unknown()),
        })
    }
}

impl Serialize for Property {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Property {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b { Verdict::Yes } else { Verdict::No }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_yes() { "yes" } else { "no" })
    }
}

/// An extremal set, with a legal ordering when it comes from a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremal {
    pub set: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MidpointCheck {
    Components,
    Swap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "witness_type", content = "witness_payload", rename_all = "snake_case")]
pub enum Witness {
    EmptyGraph,
    NonEmptyWitness {
        edge: (usize, usize),
        /// Two different extremal sets, present at desk scale.
        sets: Vec<Extremal>,
    },
    CliqueComponents {
        components: Vec<Vec<usize>>,
    },
    NonCliqueComponent {
        component: Vec<usize>,
        non_edge: (usize, usize),
        sets: Vec<Extremal>,
    },
    InteriorCover(PathCover),
    NonInteriorConnector {
        connector: Connector,
        /// Leaves removed before covering.
        trimmed: Vec<usize>,
        cover: PathCover,
    },
    ConditionIiiFailure {
        path: Vec<usize>,
        /// `x_p`, or `x_p x_{p+1}` for even paths.
        midpoint: Vec<usize>,
        check: MidpointCheck,
    },
    PerfectMatching {
        edges: Vec<(usize, usize)>,
        trimmed: Vec<usize>,
    },
    NoPerfectMatching {
        exposed: usize,
        trimmed: Vec<usize>,
    },
    BhrLabeling {
        x: Vec<usize>,
        y: Vec<usize>,
    },
    NoLabeling {
        reason: String,
    },
    GrundyValue {
        kind: SequenceKind,
        value: usize,
        target: usize,
        order: Vec<usize>,
    },
    IsolateFreeForest,
    SingleOrbit {
        count: usize,
        representative: Extremal,
    },
    OrbitWitness {
        a: Extremal,
        b: Extremal,
    },
}

impl Witness {
    pub fn type_name(&self) -> &'static str {
        match self {
            Witness::EmptyGraph => "empty_graph",
            Witness::NonEmptyWitness { .. } => "non_empty_witness",
            Witness::CliqueComponents { .. } => "clique_components",
            Witness::NonCliqueComponent { .. } => "non_clique_component",
            Witness::InteriorCover(_) => "interior_cover",
            Witness::NonInteriorConnector { .. } => "non_interior_connector",
            Witness::ConditionIiiFailure { .. } => "condition_iii_failure",
            Witness::PerfectMatching { .. } => "perfect_matching",
            Witness::NoPerfectMatching { .. } => "no_perfect_matching",
            Witness::BhrLabeling { .. } => "bhr_labeling",
            Witness::NoLabeling { .. } => "no_labeling",
            Witness::GrundyValue { .. } => "grundy_value",
            Witness::IsolateFreeForest => "isolate_free_forest",
            Witness::SingleOrbit { .. } => "single_orbit",
            Witness::OrbitWitness { .. } => "orbit_witness",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: Property,
    pub verdict: Verdict,
    #[serde(flatten)]
    pub witness: Witness,
    pub graph: String,
    pub graph_format: GraphFormat,
}

impl Certificate {
    fn new(property: Property, g: &Graph, yes: bool, witness: Witness) -> Self {
        let (graph, graph_format) = embed(g);
        Certificate { property, verdict: Verdict::from_bool(yes), witness, graph, graph_format }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict.is_yes()
    }

    /// The graph the certificate talks about.
    pub fn graph(&self) -> Result<Graph> {
        match self.graph_format {
            GraphFormat::Graph6 => graph6::parse_graph6(&self.graph),
            GraphFormat::Edgelist => parse_edge_list(&self.graph),
        }
    }

    /// Re-checks the witness against the embedded graph without trusting the
    /// recognizer that produced it.
    pub fn verify(&self) -> Result<()> {
        verify(self)
    }
}

fn embed(g: &Graph) -> (String, GraphFormat) {
    if g.n() <= SHORT_FORM_LIMIT {
        (graph6::encode(g).expect("short form fits"), GraphFormat::Graph6)
    } else {
        (to_edge_list(g), GraphFormat::Edgelist)
    }
}

fn oracle_limits() -> SearchLimits {
    SearchLimits { grundy_n: 18, family_n: 16 }
}

fn oracle_zf() -> ZfSearch {
    ZfSearch { family_n: 16, ..ZfSearch::unbounded() }
}

/// Two different extremal sets of a graph with an edge, small graphs only.
fn two_extremal(g: &Graph, target: Target) -> Result<Vec<Extremal>> {
    if g.n() > DESK_N {
        return Ok(Vec::new());
    }
    match target {
        Target::Zf => {
            let fam = zero_forcing::min_zero_forcing_with(g, &oracle_zf())?.all_min_sets;
            Ok(fam.into_iter().take(2).map(|set| Extremal { set, order: None }).collect())
        }
        Target::Grundy(kind) => {
            let first = sequences::grundy_number_with(g, kind, &oracle_limits())?.witness;
            let set = first.vertex_set();
            let missing = (0..g.n()).find(|&v| !set.contains(&v) && (kind.admits_isolated() || g.degree(v) > 0));
            let Some(x) = missing else { return Ok(Vec::new()) };
            let second = sequences::sequence_containing_with(g, kind, x, &oracle_limits())?;
            Ok(vec![
                Extremal { set, order: Some(first.order) },
                Extremal { set: second.vertex_set(), order: Some(second.order) },
            ])
        }
    }
}

/// Yes iff the graph has no edges.
pub fn recognize_unique_zero_forcing(g: &Graph) -> Result<Certificate> {
    edgeless_certificate(Property::UniqueZf, g, Target::Zf)
}

/// Yes iff the graph has no edges.
pub fn recognize_unique_grundy_domination(g: &Graph) -> Result<Certificate> {
    edgeless_certificate(Property::UniqueGd, g, Target::Grundy(SequenceKind::Closed))
}

fn edgeless_certificate(property: Property, g: &Graph, target: Target) -> Result<Certificate> {
    Ok(match g.edges().first() {
        None => Certificate::new(property, g, true, Witness::EmptyGraph),
        Some(&edge) => {
            let sets = two_extremal(g, target)?;
            Certificate::new(property, g, false, Witness::NonEmptyWitness { edge, sets })
        }
    })
}

/// Yes iff every component is complete.
pub fn recognize_iso_unique_grundy_domination(g: &Graph) -> Result<Certificate> {
    let property = Property::IsoUniqueGd;
    let components = g.components();
    for comp in &components {
        if let Some(non_edge) = first_non_edge(g, comp) {
            let sets = if g.n() <= ORACLE_GENERAL_N {
                match oracle_iso_unique(g, Target::Grundy(SequenceKind::Closed))?.witness {
                    Witness::OrbitWitness { a, b } => vec![a, b],
                    _ => Vec::new(),
                }
            } else {
                Vec::new()
            };
            let witness = Witness::NonCliqueComponent { component: comp.clone(), non_edge, sets };
            return Ok(Certificate::new(property, g, false, witness));
        }
    }
    Ok(Certificate::new(property, g, true, Witness::CliqueComponents { components }))
}

fn first_non_edge(g: &Graph, comp: &[usize]) -> Option<(usize, usize)> {
    let u = *comp.iter().find(|&&u| g.degree(u) + 1 < comp.len())?;
    let v = *comp.iter().find(|&&v| v != u && !g.has_edge(u, v))?;
    Some((u.min(v), u.max(v)))
}

/// Greedy leaf matching on a forest restricted to `keep` (all vertices when
/// `None`). Returns the matching or the first exposed vertex.
fn leaf_matching(f: &Graph, keep: Option<&[bool]>) -> std::result::Result<Vec<(usize, usize)>, usize> {
    let n = f.n();
    let live = |v: usize| keep.is_none_or(|k| k[v]);
    let mut removed: Vec<bool> = (0..n).map(|v| !live(v)).collect();
    let mut deg: Vec<usize> = (0..n)
        .map(|v| f.neighbors(v).iter().filter(|&&w| !removed[w]).count())
        .collect();
    if let Some(v) = (0..n).find(|&v| !removed[v] && deg[v] == 0) {
        return Err(v);
    }
    let mut stack: Vec<usize> = (0..n).rev().filter(|&v| !removed[v] && deg[v] == 1).collect();
    let mut matching = Vec::with_capacity(n / 2);
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        if deg[v] == 0 {
            return Err(v);
        }
        let u = *f.neighbors(v).iter().find(|&&w| !removed[w]).expect("leaf has a live neighbor");
        removed[v] = true;
        removed[u] = true;
        matching.push((v.min(u), v.max(u)));
        for &w in f.neighbors(u) {
            if removed[w] {
                continue;
            }
            deg[w] -= 1;
            match deg[w] {
                0 => return Err(w),
                1 => stack.push(w),
                _ => {}
            }
        }
    }
    debug_assert!(removed.iter().all(|&r| r));
    matching.sort_unstable();
    Ok(matching)
}

pub fn perfect_matching_forest(f: &Graph) -> Result<Certificate> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let property = Property::PerfectMatching;
    Ok(match leaf_matching(f, None) {
        Ok(edges) => Certificate::new(property, f, true, Witness::PerfectMatching { edges, trimmed: Vec::new() }),
        Err(exposed) => Certificate::new(property, f, false, Witness::NoPerfectMatching { exposed, trimmed: Vec::new() }),
    })
}

/// Yes iff the Grundy total domination number equals `n - i`.
pub fn recognize_unique_gtd(g: &Graph) -> Result<Certificate> {
    let property = Property::UniqueGtd;
    if g.is_forest() {
        let keep: Vec<bool> = (0..g.n()).map(|v| g.degree(v) > 0).collect();
        return Ok(match leaf_matching(g, Some(&keep)) {
            Ok(edges) => Certificate::new(property, g, true, Witness::PerfectMatching { edges, trimmed: Vec::new() }),
            Err(exposed) => {
                Certificate::new(property, g, false, Witness::NoPerfectMatching { exposed, trimmed: Vec::new() })
            }
        });
    }
    grundy_value_certificate(property, g, SequenceKind::Open, g.n() - g.isolated_count())
}

fn grundy_value_certificate(property: Property, g: &Graph, kind: SequenceKind, target: usize) -> Result<Certificate> {
    let r = sequences::grundy_number_with(g, kind, &oracle_limits())?;
    let witness = Witness::GrundyValue { kind, value: r.value, target, order: r.witness.order };
    Ok(Certificate::new(property, g, r.value == target, witness))
}

/// Yes iff the L-Grundy domination number equals `n`.
pub fn recognize_unique_lgd(g: &Graph) -> Result<Certificate> {
    let property = Property::UniqueLgd;
    if g.is_forest() && g.isolated_count() == 0 {
        return Ok(Certificate::new(property, g, true, Witness::IsolateFreeForest));
    }
    grundy_value_certificate(property, g, SequenceKind::L, g.n())
}

/// Searches for a pairing `x_1..x_k`, `y_1..y_k` with `x_i ~ y_i`, the `x`s
/// independent, and `y_j ~ x_i` only when `i >= j`.
///
/// Labels are assigned in index order: `x_i` must have exactly one neighbor
/// outside `{y_1, .., y_{i-1}}`, and that neighbor becomes `y_i`.
pub fn bhr_labeling_search(g: &Graph) -> Result<Certificate> {
    let property = Property::BhrLabeling;
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    if g.n() > BHR_N {
        return Err(Error::LimitExceeded { what: "labeling search", n: g.n(), limit: BHR_N });
    }
    if g.n() % 2 == 1 {
        let witness = Witness::NoLabeling { reason: "odd order".into() };
        return Ok(Certificate::new(property, g, false, witness));
    }
    let masks = g.masks().expect("small graphs carry masks");
    let full: u32 = ((1u64 << g.n()) - 1) as u32;
    let mut dead = HashSet::new();
    let mut pairs = Vec::with_capacity(g.n() / 2);

    fn extend(
        masks: &[u64],
        full: u32,
        xs: u32,
        ys: u32,
        dead: &mut HashSet<(u32, u32)>,
        pairs: &mut Vec<(usize, usize)>,
    ) -> bool {
        if xs | ys == full {
            return true;
        }
        if dead.contains(&(xs, ys)) {
            return false;
        }
        let mut free = full & !(xs | ys);
        while free != 0 {
            let x = free.trailing_zeros() as usize;
            free &= free - 1;
            let outside = masks[x] as u32 & !ys;
            if outside.count_ones() != 1 || outside & xs != 0 {
                continue;
            }
            let y = outside.trailing_zeros() as usize;
            pairs.push((x, y));
            if extend(masks, full, xs | 1 << x, ys | 1 << y, dead, pairs) {
                return true;
            }
            pairs.pop();
        }
        dead.insert((xs, ys));
        false
    }

    Ok(if extend(masks, full, 0, 0, &mut dead, &mut pairs) {
        let (x, y) = pairs.into_iter().unzip();
        Certificate::new(property, g, true, Witness::BhrLabeling { x, y })
    } else {
        let witness = Witness::NoLabeling { reason: "search exhausted".into() };
        Certificate::new(property, g, false, witness)
    })
}

/// Checks the three labeling conditions and that the labels partition V.
pub fn is_bhr_labeling(g: &Graph, x: &[usize], y: &[usize]) -> bool {
    let n = g.n();
    if x.len() != y.len() || x.len() * 2 != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in x.iter().chain(y) {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let k = x.len();
    (0..k).all(|i| g.has_edge(x[i], y[i]))
        && (0..k).all(|i| (i + 1..k).all(|j| !g.has_edge(x[i], x[j])))
        && (0..k).all(|i| (0..k).all(|j| !g.has_edge(y[j], x[i]) || i >= j))
}

/// Removes all but `keep` leaves (the smallest indices) at every support
/// vertex with more than `keep` leaves.
fn trim_leaves(f: &Graph, keep: usize) -> Vec<usize> {
    let cls = f.classify_vertices();
    let mut trimmed = Vec::new();
    for v in 0..f.n() {
        if !cls.support[v] {
            continue;
        }
        let leaves: Vec<usize> = f.neighbors(v).iter().copied().filter(|&w| cls.leaf[w]).collect();
        if leaves.len() > keep {
            trimmed.extend_from_slice(&leaves[keep..]);
        }
    }
    trimmed.sort_unstable();
    trimmed
}

/// Trims every strong support to a single leaf, then asks for a perfect
/// matching.
pub fn recognize_iso_unique_gtd_forest(f: &Graph) -> Result<Certificate> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    if let Some(&v) = f.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    let property = Property::IsoUniqueGtdForest;
    let trimmed = trim_leaves(f, 1);
    let mut keep = vec![true; f.n()];
    trimmed.iter().for_each(|&v| keep[v] = false);
    Ok(match leaf_matching(f, Some(&keep)) {
        Ok(edges) => Certificate::new(property, f, true, Witness::PerfectMatching { edges, trimmed }),
        Err(exposed) => Certificate::new(property, f, false, Witness::NoPerfectMatching { exposed, trimmed }),
    })
}

/// Vertices of the component of `start` in `t`, not crossing `blocked`.
fn component_avoiding(t: &Graph, start: usize, blocked: usize, seen: &mut [bool]) -> Vec<usize> {
    let mut out = vec![start];
    seen[start] = true;
    seen[blocked] = true;
    let mut i = 0;
    while i < out.len() {
        let v = out[i];
        i += 1;
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                out.push(w);
            }
        }
    }
    for &v in &out {
        seen[v] = false;
    }
    seen[blocked] = false;
    out
}

/// The midpoint vertex and the two vertices whose components are compared.
fn midpoint(path: &[usize]) -> Option<(Vec<usize>, usize, usize, usize, usize)> {
    let l = path.len();
    if l < 2 {
        return None;
    }
    if l % 2 == 1 {
        let p = l / 2;
        // components of T - x_p at x_{p-1} and x_{p+1}
        Some((vec![path[p]], path[p - 1], path[p], path[p + 1], path[p]))
    } else {
        let p = l / 2 - 1;
        // components of T - x_p x_{p+1} at x_p and x_{p+1}
        Some((vec![path[p], path[p + 1]], path[p], path[p + 1], path[p + 1], path[p]))
    }
}

/// Decides iso-uniqueness of zero forcing on a forest in `O(n^2)`.
pub fn recognize_iso_unique_zf_forest(f: &Graph) -> Result<Certificate> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let property = Property::IsoUniqueZfForest;

    // (1) cover the trimmed forest
    let trimmed = trim_leaves(f, 2);
    let (reduced, map) = f.delete(&trimmed, &[])?;
    let small = path_cover::min_path_cover(&reduced)?;
    let lift = |p: &[usize]| p.iter().map(|&v| map[v]).collect::<Vec<_>>();
    let mut paths: Vec<Vec<usize>> = small.paths.iter().map(|p| lift(p)).collect();
    if let Some(c) = small.first_non_interior() {
        let lift_connector = |c: &Connector| {
            let (u, v) = (map[c.edge.0], map[c.edge.1]);
            let status = if u < v { c.status } else { (c.status.1, c.status.0) };
            Connector { edge: (u.min(v), u.max(v)), status }
        };
        let connector = lift_connector(&c);
        paths.sort_unstable();
        let cover = PathCover { paths, connectors: small.connectors.iter().map(lift_connector).collect() };
        let witness = Witness::NonInteriorConnector { connector, trimmed, cover };
        return Ok(Certificate::new(property, f, false, witness));
    }

    // (2) trimmed leaves come back as single-vertex paths
    paths.extend(trimmed.iter().map(|&v| vec![v]));
    paths.sort_unstable();

    // (3) midpoint and swap conditions, component by component
    let comp_ids = f.component_ids();
    let comps = f.components();
    let mut local = vec![0usize; f.n()];
    for comp in &comps {
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
    }
    let trees: Vec<Graph> = comps.iter().map(|c| f.induced(c)).collect();
    let mut canon = Canonizer::new();
    let mut seen = vec![false; f.n()];
    for path in &paths {
        let Some((mid, a, a_block, b, b_block)) = midpoint(path) else { continue };
        let c1 = component_avoiding(f, a, a_block, &mut seen);
        let c2 = component_avoiding(f, b, b_block, &mut seen);
        let same = c1.len() == c2.len()
            && canon.free_class(&f.induced(&c1), None)? == canon.free_class(&f.induced(&c2), None)?;
        if !same {
            let witness = Witness::ConditionIiiFailure { path: path.clone(), midpoint: mid, check: MidpointCheck::Components };
            return Ok(Certificate::new(property, f, false, witness));
        }
        let (x1, xl) = (path[0], path[path.len() - 1]);
        let c = comp_ids[x1];
        let tree = &trees[c];
        let mut pins = vec![0u32; tree.n()];
        pins[local[x1]] = 1;
        pins[local[xl]] = 2;
        let forward = canon.free_class(tree, Some(&pins))?;
        pins[local[x1]] = 2;
        pins[local[xl]] = 1;
        let backward = canon.free_class(tree, Some(&pins))?;
        if forward != backward {
            let witness = Witness::ConditionIiiFailure { path: path.clone(), midpoint: mid, check: MidpointCheck::Swap };
            return Ok(Certificate::new(property, f, false, witness));
        }
    }
    let cover = path_cover::classify_connectors(f, &PathCover { paths, connectors: Vec::new() })?;
    Ok(Certificate::new(property, f, true, Witness::InteriorCover(cover)))
}

fn extremal_family(g: &Graph, target: Target) -> Result<Vec<Vec<usize>>> {
    match target {
        Target::Zf => Ok(zero_forcing::min_zero_forcing_with(g, &oracle_zf())?.all_min_sets),
        Target::Grundy(kind) => sequences::all_max_grundy_sets_with(g, kind, &oracle_limits()),
    }
}

fn extremal(g: &Graph, target: Target, set: Vec<usize>) -> Result<Extremal> {
    let order = match target {
        Target::Zf => None,
        Target::Grundy(kind) => sequences::order_for_set(g, kind, &set)?.map(|s| s.order),
    };
    Ok(Extremal { set, order })
}

/// Exhaustive iso-uniqueness: all extremal sets in one automorphism orbit.
pub fn oracle_iso_unique(g: &Graph, target: Target) -> Result<Certificate> {
    let forest = g.is_forest();
    let limit = if forest { ORACLE_FOREST_N } else { ORACLE_GENERAL_N };
    if g.n() > limit {
        return Err(Error::LimitExceeded { what: "iso-uniqueness oracle", n: g.n(), limit });
    }
    let property = Property::OracleIsoUnique(target);
    let family = extremal_family(g, target)?;
    let first = family.first().cloned().unwrap_or_default();
    let outsider = if forest {
        let keys = ForestKeys::new(g)?;
        let key = keys.set_key(g.n(), &first);
        family.iter().find(|s| keys.set_key(g.n(), s) != key).cloned()
    } else {
        family.iter().find(|s| tree_iso::find_set_automorphism(g, &first, s).is_none()).cloned()
    };
    Ok(match outsider {
        Some(b) => {
            let witness = Witness::OrbitWitness { a: extremal(g, target, first)?, b: extremal(g, target, b)? };
            Certificate::new(property, g, false, witness)
        }
        None => {
            let witness = Witness::SingleOrbit { count: family.len(), representative: extremal(g, target, first)? };
            Certificate::new(property, g, true, witness)
        }
    })
}

/// Runs the recognizer named by `property`.
pub fn recognize(g: &Graph, property: Property) -> Result<Certificate> {
    match property {
        Property::UniqueZf => recognize_unique_zero_forcing(g),
        Property::UniqueGd => recognize_unique_grundy_domination(g),
        Property::IsoUniqueGd => recognize_iso_unique_grundy_domination(g),
        Property::UniqueGtd => recognize_unique_gtd(g),
        Property::IsoUniqueGtdForest => recognize_iso_unique_gtd_forest(g),
        Property::UniqueLgd => recognize_unique_lgd(g),
        Property::IsoUniqueZfForest => recognize_iso_unique_zf_forest(g),
        Property::OracleIsoUnique(t) => oracle_iso_unique(g, t),
        Property::BhrLabeling => bhr_labeling_search(g),
        Property::PerfectMatching => perfect_matching_forest(g),
    }
}

fn reject(msg: impl Into<String>) -> Error {
    Error::InvalidWitness(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond { Ok(()) } else { Err(reject(msg())) }
}

fn target_of(property: Property) -> Option<Target> {
    match property {
        Property::UniqueZf | Property::IsoUniqueZfForest => Some(Target::Zf),
        Property::UniqueGd | Property::IsoUniqueGd => Some(Target::Grundy(SequenceKind::Closed)),
        Property::UniqueGtd | Property::IsoUniqueGtdForest | Property::BhrLabeling => {
            Some(Target::Grundy(SequenceKind::Open))
        }
        Property::UniqueLgd => Some(Target::Grundy(SequenceKind::L)),
        Property::OracleIsoUnique(t) => Some(t),
        Property::PerfectMatching => None,
    }
}

/// Extremality of `e`, decided by the exhaustive searches.
fn check_extremal(g: &Graph, target: Target, e: &Extremal) -> Result<()> {
    match target {
        Target::Zf => {
            let z = zero_forcing::zero_forcing_number_with(g, &oracle_zf())?;
            ensure(zero_forcing::is_zero_forcing_set(g, &e.set)? && e.set.len() == z, || {
                format!("{:?} is not a minimum zero forcing set", e.set)
            })
        }
        Target::Grundy(kind) => {
            let order = e.order.as_ref().ok_or_else(|| reject("missing sequence order"))?;
            let seq = sequences::validate(g, kind, order)?;
            ensure(seq.vertex_set() == e.set, || "order does not list the set".into())?;
            let value = sequences::grundy_number_with(g, kind, &oracle_limits())?.value;
            ensure(seq.len() == value, || format!("{kind} sequence of length {} is not maximum", seq.len()))
        }
    }
}

fn same_orbit(g: &Graph, a: &[usize], b: &[usize]) -> Result<bool> {
    if g.n() <= tree_iso::BRUTE_LIMIT {
        tree_iso::brute_automorphism_orbits(g, a, b)
    } else {
        tree_iso::sets_in_same_orbit(g, a, b)
    }
}

/// Brute-force perfect matching existence on the vertices flagged in `keep`.
fn has_perfect_matching(g: &Graph, keep: &[bool]) -> bool {
    fn go(g: &Graph, free: &mut [bool]) -> bool {
        let Some(v) = free.iter().position(|&f| f) else { return true };
        free[v] = false;
        for &w in g.neighbors(v) {
            if free[w] {
                free[w] = false;
                if go(g, free) {
                    free[w] = true;
                    free[v] = true;
                    return true;
                }
                free[w] = true;
            }
        }
        free[v] = true;
        false
    }
    go(g, &mut keep.to_vec())
}

fn matching_domain(g: &Graph, property: Property, trimmed: &[usize]) -> Result<Vec<bool>> {
    let mut keep = vec![true; g.n()];
    match property {
        Property::UniqueGtd => (0..g.n()).for_each(|v| keep[v] = g.degree(v) > 0),
        Property::IsoUniqueGtdForest => {
            ensure(trim_leaves(g, 1) == trimmed, || "unexpected trimmed leaves".into())?;
            trimmed.iter().for_each(|&v| keep[v] = false);
        }
        Property::PerfectMatching => {}
        _ => return Err(reject("matching witness for a property without matchings")),
    }
    Ok(keep)
}

fn verify(cert: &Certificate) -> Result<()> {
    let g = cert.graph()?;
    let yes = cert.is_yes();
    let property = cert.property;
    let expect = |want: bool| ensure(yes == want, || format!("verdict {} contradicts the witness", cert.verdict));
    match &cert.witness {
        Witness::EmptyGraph => {
            expect(true)?;
            ensure(g.is_edgeless(), || "graph has edges".into())
        }
        Witness::NonEmptyWitness { edge, sets } => {
            expect(false)?;
            ensure(g.has_edge(edge.0, edge.1), || format!("{edge:?} is not an edge"))?;
            if let [a, b] = sets.as_slice() {
                let target = target_of(property).expect("set-valued property");
                ensure(a.set != b.set, || "the two sets coincide".into())?;
                check_extremal(&g, target, a)?;
                check_extremal(&g, target, b)?;
            }
            Ok(())
        }
        Witness::CliqueComponents { components } => {
            expect(true)?;
            ensure(*components == g.components(), || "components do not match".into())?;
            ensure(components.iter().all(|c| c.iter().all(|&v| g.degree(v) + 1 == c.len())), || {
                "a component is not complete".into()
            })
        }
        Witness::NonCliqueComponent { component, non_edge, sets } => {
            expect(false)?;
            let (u, v) = *non_edge;
            ensure(u != v && component.contains(&u) && component.contains(&v) && !g.has_edge(u, v), || {
                format!("{non_edge:?} is not a non-edge inside the component")
            })?;
            ensure(g.components().contains(component), || "not a component".into())?;
            if let [a, b] = sets.as_slice() {
                let target = Target::Grundy(SequenceKind::Closed);
                check_extremal(&g, target, a)?;
                check_extremal(&g, target, b)?;
                ensure(!same_orbit(&g, &a.set, &b.set)?, || "the two sets are equivalent".into())?;
            }
            Ok(())
        }
        Witness::InteriorCover(cover) => {
            expect(true)?;
            let checked = path_cover::classify_connectors(&g, cover)?;
            if g.n() <= DESK_N {
                let z = zero_forcing::zero_forcing_number_with(&g, &oracle_zf())?;
                ensure(cover.len() == z, || format!("cover of size {} is not minimum", cover.len()))?;
            }
            for path in &checked.paths {
                if let Some((_, a, ab, b, bb)) = midpoint(path) {
                    let mut seen = vec![false; g.n()];
                    let c1 = component_avoiding(&g, a, ab, &mut seen);
                    let c2 = component_avoiding(&g, b, bb, &mut seen);
                    ensure(tree_iso::components_isomorphic(&g, &c1, &c2)?, || format!("midpoint of {path:?}"))?;
                }
                let (x1, xl) = (path[0], path[path.len() - 1]);
                ensure(tree_iso::exists_swap_automorphism(&g, x1, xl)?, || format!("no swap for {path:?}"))?;
            }
            Ok(())
        }
        Witness::NonInteriorConnector { connector, trimmed, cover } => {
            expect(false)?;
            ensure(trim_leaves(&g, 2) == *trimmed, || "unexpected trimmed leaves".into())?;
            let (reduced, map) = g.delete(trimmed, &[])?;
            let mut back = vec![usize::MAX; g.n()];
            map.iter().enumerate().for_each(|(i, &v)| back[v] = i);
            let local = PathCover {
                paths: cover.paths.iter().map(|p| p.iter().map(|&v| back[v]).collect()).collect(),
                connectors: Vec::new(),
            };
            let checked = path_cover::classify_connectors(&reduced, &local)?;
            let (u, v) = (back[connector.edge.0], back[connector.edge.1]);
            ensure(
                checked.connectors.iter().any(|c| (c.edge == (u, v) || c.edge == (v, u)) && !c.is_interior()),
                || format!("{:?} is not a non-interior connector", connector.edge),
            )?;
            if reduced.n() <= DESK_N {
                let z = zero_forcing::zero_forcing_number_with(&reduced, &oracle_zf())?;
                ensure(cover.len() == z, || "cover is not minimum".into())?;
            }
            Ok(())
        }
        Witness::ConditionIiiFailure { path, midpoint: _, check } => {
            expect(false)?;
            for w in path.windows(2) {
                ensure(g.has_edge(w[0], w[1]), || format!("{path:?} is not a path"))?;
            }
            match check {
                MidpointCheck::Components => {
                    let (_, a, ab, b, bb) = midpoint(path).ok_or_else(|| reject("path too short"))?;
                    let mut seen = vec![false; g.n()];
                    let c1 = component_avoiding(&g, a, ab, &mut seen);
                    let c2 = component_avoiding(&g, b, bb, &mut seen);
                    ensure(!tree_iso::components_isomorphic(&g, &c1, &c2)?, || "components are isomorphic".into())
                }
                MidpointCheck::Swap => {
                    let (x1, xl) = (path[0], path[path.len() - 1]);
                    ensure(!tree_iso::exists_swap_automorphism(&g, x1, xl)?, || "a swap exists".into())
                }
            }
        }
        Witness::PerfectMatching { edges, trimmed } => {
            expect(true)?;
            let keep = matching_domain(&g, property, trimmed)?;
            let mut hit = vec![false; g.n()];
            for &(u, v) in edges {
                ensure(g.has_edge(u, v) && keep[u] && keep[v] && !hit[u] && !hit[v], || {
                    format!("({u}, {v}) breaks the matching")
                })?;
                hit[u] = true;
                hit[v] = true;
            }
            ensure((0..g.n()).all(|v| hit[v] == keep[v]), || "matching is not perfect".into())
        }
        Witness::NoPerfectMatching { exposed, trimmed } => {
            expect(false)?;
            let keep = matching_domain(&g, property, trimmed)?;
            ensure(*exposed < g.n() && keep[*exposed], || "exposed vertex outside the domain".into())?;
            if g.n() <= 2 * DESK_N {
                ensure(!has_perfect_matching(&g, &keep), || "a perfect matching exists".into())?;
            }
            Ok(())
        }
        Witness::BhrLabeling { x, y } => {
            expect(true)?;
            ensure(is_bhr_labeling(&g, x, y), || "labeling violates a condition".into())
        }
        Witness::NoLabeling { .. } => {
            expect(false)?;
            let value = sequences::grundy_number_with(&g, SequenceKind::Open, &oracle_limits())?.value;
            ensure(value < g.n(), || "total Grundy number equals n".into())
        }
        Witness::GrundyValue { kind, value, target, order } => {
            expect(value == target)?;
            let seq = sequences::validate(&g, *kind, order)?;
            ensure(seq.len() == *value, || "order length differs from the value".into())?;
            if g.n() <= DESK_N {
                let best = sequences::grundy_number_with(&g, *kind, &oracle_limits())?.value;
                ensure(best == *value, || format!("{kind} Grundy number is {best}, not {value}"))?;
            }
            Ok(())
        }
        Witness::IsolateFreeForest => {
            expect(true)?;
            ensure(g.is_forest() && g.isolated_count() == 0, || "not an isolate-free forest".into())
        }
        Witness::SingleOrbit { count, representative } => {
            expect(true)?;
            let target = target_of(property).expect("set-valued property");
            check_extremal(&g, target, representative)?;
            let family = extremal_family(&g, target)?;
            ensure(family.len() == *count, || "family size differs".into())?;
            for s in &family {
                ensure(same_orbit(&g, &representative.set, s)?, || format!("{s:?} is in another orbit"))?;
            }
            Ok(())
        }
        Witness::OrbitWitness { a, b } => {
            expect(false)?;
            let target = target_of(property).expect("set-valued property");
            check_extremal(&g, target, a)?;
            check_extremal(&g, target, b)?;
            ensure(!same_orbit(&g, &a.set, &b.set)?, || "the two sets are equivalent".into())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yes(c: &Certificate) -> bool {
        c.verify().unwrap_or_else(|e| panic!("{}: {e}", c.property));
        c.is_yes()
    }

    /// The 5-cycle 1-0-3-2-4-1 with an open twin 5 of vertex 1.
    fn h() -> Graph {
        Graph::from_edges(6, [(0, 1), (0, 3), (2, 3), (2, 4), (1, 4), (4, 5), (0, 5)]).unwrap()
    }

    #[test]
    fn edgeless_recognizers() {
        assert!(yes(&recognize_unique_zero_forcing(&Graph::empty(5)).unwrap()));
        assert!(!yes(&recognize_unique_zero_forcing(&Graph::path(2)).unwrap()));
        assert!(!yes(&recognize_unique_zero_forcing(&Graph::complete(3)).unwrap()));
        assert!(yes(&recognize_unique_grundy_domination(&Graph::empty(1)).unwrap()));
        assert!(!yes(&recognize_unique_grundy_domination(&Graph::path(3)).unwrap()));
        let c5 = recognize_unique_grundy_domination(&Graph::cycle(5)).unwrap();
        assert!(!yes(&c5));
        let Witness::NonEmptyWitness { sets, .. } = &c5.witness else { panic!() };
        assert_eq!(sets.len(), 2);
    }

    #[test]
    fn clique_components() {
        let g = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert!(yes(&recognize_iso_unique_grundy_domination(&g).unwrap()));
        assert!(yes(&recognize_iso_unique_grundy_domination(&Graph::complete(4)).unwrap()));
        let p3 = recognize_iso_unique_grundy_domination(&Graph::path(3)).unwrap();
        assert!(!yes(&p3));
        let Witness::NonCliqueComponent { non_edge, sets, .. } = &p3.witness else { panic!() };
        assert_eq!(*non_edge, (0, 2));
        assert_eq!(sets.len(), 2);
    }

    #[test]
    fn unique_gtd_examples() {
        let p4 = recognize_unique_gtd(&Graph::path(4)).unwrap();
        assert!(yes(&p4));
        let Witness::PerfectMatching { edges, .. } = &p4.witness else { panic!() };
        assert_eq!(edges, &[(0, 1), (2, 3)]);
        assert!(!yes(&recognize_unique_gtd(&Graph::path(3)).unwrap()));
        assert!(yes(&recognize_unique_gtd(&Graph::path(2).disjoint_union(&Graph::empty(1))).unwrap()));
        // the oracle route
        assert!(!yes(&recognize_unique_gtd(&Graph::cycle(5)).unwrap()));
        assert!(!yes(&recognize_unique_gtd(&Graph::cycle(4)).unwrap()));
    }

    #[test]
    fn labeling_examples() {
        let c = bhr_labeling_search(&Graph::path(2)).unwrap();
        assert_eq!(c.witness, Witness::BhrLabeling { x: vec![0], y: vec![1] });
        let c = bhr_labeling_search(&Graph::path(4)).unwrap();
        let Witness::BhrLabeling { x, y } = &c.witness else { panic!() };
        assert!(is_bhr_labeling(&Graph::path(4), x, y));
        assert!(yes(&c));
        let c = bhr_labeling_search(&Graph::cycle(5)).unwrap();
        assert!(!yes(&c));
        assert!(matches!(c.witness, Witness::NoLabeling { .. }));
        assert_eq!(bhr_labeling_search(&Graph::empty(2)).unwrap_err(), Error::IsolatedVertex(0));
        assert!(bhr_labeling_search(&Graph::path(18)).is_err());
    }

    #[test]
    fn matching_examples() {
        let c = perfect_matching_forest(&Graph::path(4)).unwrap();
        assert!(yes(&c));
        let c = perfect_matching_forest(&Graph::path(3)).unwrap();
        assert!(!yes(&c));
        assert!(matches!(c.witness, Witness::NoPerfectMatching { .. }));
        assert!(!yes(&perfect_matching_forest(&Graph::double_star(2, 2)).unwrap()));
        assert_eq!(perfect_matching_forest(&Graph::cycle(4)).unwrap_err(), Error::NotAForest);
    }

    #[test]
    fn iso_unique_gtd_forest_examples() {
        assert!(yes(&recognize_iso_unique_gtd_forest(&Graph::path(3)).unwrap()));
        assert!(!yes(&recognize_iso_unique_gtd_forest(&Graph::path(5)).unwrap()));
        assert!(yes(&recognize_iso_unique_gtd_forest(&Graph::star(4)).unwrap()));
        let open = Target::Grundy(SequenceKind::Open);
        for g in [Graph::path(3), Graph::path(5), Graph::star(4)] {
            assert_eq!(
                recognize_iso_unique_gtd_forest(&g).unwrap().verdict,
                oracle_iso_unique(&g, open).unwrap().verdict
            );
        }
        let with_isolated = Graph::path(2).disjoint_union(&Graph::empty(1));
        assert_eq!(recognize_iso_unique_gtd_forest(&with_isolated).unwrap_err(), Error::IsolatedVertex(2));
    }

    #[test]
    fn unique_lgd_examples() {
        for n in 1..=12 {
            let c = recognize_unique_lgd(&Graph::path(n)).unwrap();
            assert!(yes(&c));
        }
        let k3 = recognize_unique_lgd(&Graph::complete(3)).unwrap();
        assert!(matches!(k3.witness, Witness::GrundyValue { .. }));
        let value = sequences::grundy_number(&Graph::complete(3), SequenceKind::L).unwrap().value;
        assert_eq!(k3.is_yes(), value == 3);
        yes(&k3);
        // (isolated, leaf, leaf) is a legal L-sequence of length 3
        let g = Graph::empty(1).disjoint_union(&Graph::path(2));
        assert!(yes(&recognize_unique_lgd(&g).unwrap()));
    }

    #[test]
    fn iso_unique_zf_forest_examples() {
        let ds = recognize_iso_unique_zf_forest(&Graph::double_star(2, 2)).unwrap();
        assert!(yes(&ds));
        let sp = recognize_iso_unique_zf_forest(&Graph::spider(&[1, 1, 2])).unwrap();
        assert!(!yes(&sp));
        assert!(matches!(sp.witness, Witness::NonInteriorConnector { .. }));
        assert!(yes(&recognize_iso_unique_zf_forest(&Graph::path(4)).unwrap()));
        assert!(yes(&recognize_iso_unique_zf_forest(&Graph::star(5)).unwrap()));
        assert!(yes(&recognize_iso_unique_zf_forest(&Graph::empty(3)).unwrap()));
        assert_eq!(recognize_iso_unique_zf_forest(&Graph::cycle(5)).unwrap_err(), Error::NotAForest);
        for g in [Graph::double_star(2, 2), Graph::spider(&[1, 1, 2]), Graph::path(4), Graph::path(5)] {
            assert_eq!(
                recognize_iso_unique_zf_forest(&g).unwrap().verdict,
                oracle_iso_unique(&g, Target::Zf).unwrap().verdict,
                "{g:?}"
            );
        }
    }

    #[test]
    fn oracle_examples() {
        let open = Target::Grundy(SequenceKind::Open);
        assert!(yes(&oracle_iso_unique(&Graph::cycle(5), open).unwrap()));
        let c = oracle_iso_unique(&h(), open).unwrap();
        assert!(!yes(&c));
        assert!(yes(&oracle_iso_unique(&Graph::star(3), Target::Zf).unwrap()));
        assert!(oracle_iso_unique(&Graph::cycle(10), open).is_err());
        assert!(oracle_iso_unique(&Graph::path(12), open).is_err());
    }

    #[test]
    fn depicted_sets_of_h_are_inequivalent() {
        let g = h();
        for set in [[1, 2, 3, 4], [0, 2, 3, 4]] {
            let seq = sequences::order_for_set(&g, SequenceKind::Open, &set).unwrap().unwrap();
            assert_eq!(seq.len(), 4);
        }
        assert_eq!(sequences::grundy_number(&g, SequenceKind::Open).unwrap().value, 4);
        assert!(!tree_iso::brute_automorphism_orbits(&g, &[1, 2, 3, 4], &[0, 2, 3, 4]).unwrap());
        let (c5, _) = g.delete(&[5], &[]).unwrap();
        assert!(yes(&oracle_iso_unique(&c5, Target::Grundy(SequenceKind::Open)).unwrap()));
    }

    #[test]
    fn certificate_json_shape() {
        let c = recognize_iso_unique_zf_forest(&Graph::path(4)).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["property"], "iso-unique-zf-forest");
        assert_eq!(v["verdict"], "yes");
        assert_eq!(v["witness_type"], "interior_cover");
        assert_eq!(v["graph"], "Ch");
        assert!(v["witness_payload"]["paths"].is_array());
        let back: Certificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn property_names_round_trip() {
        for name in Property::NAMES {
            assert_eq!(name.parse::<Property>().unwrap().to_string(), name);
        }
        assert_eq!(
            "oracle-iso-unique:open".parse::<Property>().unwrap(),
            Property::OracleIsoUnique(Target::Grundy(SequenceKind::Open))
        );
        assert_eq!("oracle-iso-unique:zf".parse::<Property>().unwrap().to_string(), "oracle-iso-unique:zf");
        assert!("iso-unique".parse::<Property>().is_err());
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let mut c = recognize_unique_gtd(&Graph::path(4)).unwrap();
        c.witness = Witness::PerfectMatching { edges: vec![(0, 1)], trimmed: Vec::new() };
        assert!(c.verify().is_err());
        let mut c = bhr_labeling_search(&Graph::path(4)).unwrap();
        c.verdict = Verdict::No;
        assert!(c.verify().is_err());
    }
}
