//! Minimum path covers of forests.
//!
//! A tree is peeled one pendant generalized star at a time: the mid vertex is
//! covered together with its two longest legs, every other leg becomes a path
//! of its own, and the star is removed. What remains of the tree is again a
//! tree. Peeling is incremental, so a forest is covered in `O(n log n)`.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// How a connector vertex sits in its own path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndStatus {
    Interior,
    End,
    Singleton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connector {
    pub edge: (usize, usize),
    pub status: (EndStatus, EndStatus),
}

impl Connector {
    pub fn is_interior(&self) -> bool {
        self.status == (EndStatus::Interior, EndStatus::Interior)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCover {
    /// Paths with the smaller end-vertex first, ordered by first vertex.
    pub paths: Vec<Vec<usize>>,
    pub connectors: Vec<Connector>,
}

impl PathCover {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Whether every connector vertex is an interior vertex of its path.
    pub fn is_interior(&self) -> bool {
        self.connectors.iter().all(Connector::is_interior)
    }

    pub fn first_non_interior(&self) -> Option<Connector> {
        self.connectors.iter().copied().find(|c| !c.is_interior())
    }

    /// Path index of every vertex.
    pub fn path_ids(&self, n: usize) -> Vec<usize> {
        let mut ids = vec![usize::MAX; n];
        for (i, p) in self.paths.iter().enumerate() {
            for &v in p {
                ids[v] = i;
            }
        }
        ids
    }
}

/// A pendant generalized star: `mid` with its pendant `legs`, each listed
/// from the neighbor of `mid` out to the leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantStar {
    pub mid: usize,
    pub legs: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarSearch {
    /// The tree has at most one vertex of degree above 2.
    GeneralizedStar,
    Pendant(PendantStar),
}

/// Walks from `leaf` through degree-2 vertices. Returns the leg (leaf first)
/// and the first vertex of degree at least 3, or `None` when the walk ends in
/// another leaf.
fn walk_leg(adj: impl Fn(usize) -> Vec<usize>, deg: &[usize], leaf: usize, from: Option<usize>) -> (Vec<usize>, Option<usize>) {
    let mut leg = vec![leaf];
    let (mut prev, mut cur) = (from, leaf);
    loop {
        let next = adj(cur).into_iter().find(|&w| Some(w) != prev);
        let Some(next) = next else {
            return (leg, None);
        };
        if deg[next] >= 3 {
            return (leg, Some(next));
        }
        leg.push(next);
        if deg[next] <= 1 {
            return (leg, None);
        }
        prev = Some(cur);
        cur = next;
    }
}

pub fn find_pendant_star(t: &Graph) -> Result<StarSearch> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    let deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    if branch.len() <= 1 {
        return Ok(StarSearch::GeneralizedStar);
    }
    let mut legs: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for leaf in (0..n).filter(|&v| deg[v] == 1) {
        let (leg, attach) = walk_leg(|v| t.neighbors(v).to_vec(), &deg, leaf, None);
        let a = attach.expect("a tree with a branch vertex has no path component");
        let mut leg = leg;
        leg.reverse();
        legs[a].push(leg);
    }
    let mid = branch
        .into_iter()
        .find(|&a| legs[a].len() + 1 >= deg[a])
        .expect("the branch vertices of a tree form a tree with a leaf");
    let mut star_legs = std::mem::take(&mut legs[mid]);
    star_legs.sort_unstable_by_key(|l| (Reverse(l.len()), *l.last().unwrap()));
    Ok(StarSearch::Pendant(PendantStar { mid, legs: star_legs }))
}

struct Peeler<'a> {
    g: &'a Graph,
    deg: Vec<usize>,
    removed: Vec<bool>,
    /// Legs hanging at each vertex, leaf first.
    legs_at: Vec<Vec<Vec<usize>>>,
    candidates: BTreeSet<usize>,
    paths: Vec<Vec<usize>>,
}

impl<'a> Peeler<'a> {
    fn live_neighbors(&self, v: usize) -> Vec<usize> {
        self.g.neighbors(v).iter().copied().filter(|&w| !self.removed[w]).collect()
    }

    fn emit(&mut self, path: Vec<usize>) {
        for &v in &path {
            self.removed[v] = true;
        }
        self.paths.push(path);
    }

    fn consider(&mut self, a: usize) {
        if !self.removed[a] && self.deg[a] >= 3 && self.legs_at[a].len() + 1 >= self.deg[a] {
            self.candidates.insert(a);
        }
    }

    /// Extends `leg` (leaf first, ending at a vertex just turned into a
    /// path vertex) towards the next branch vertex.
    fn extend(&mut self, leg: Vec<usize>, from: Option<usize>) {
        let start = *leg.last().unwrap();
        let (tail, attach) = {
            let removed = &self.removed;
            let g = self.g;
            walk_leg(
                |v| g.neighbors(v).iter().copied().filter(|&w| !removed[w]).collect(),
                &self.deg,
                start,
                from,
            )
        };
        let mut full = leg;
        full.extend_from_slice(&tail[1..]);
        match attach {
            Some(a) => {
                self.legs_at[a].push(full);
                self.consider(a);
            }
            None => self.emit(full),
        }
    }

    fn join_through(mid: usize, mut a: Vec<usize>, b: &[usize]) -> Vec<usize> {
        a.push(mid);
        a.extend(b.iter().rev());
        a
    }

    fn peel(&mut self, mid: usize) {
        let mut legs = std::mem::take(&mut self.legs_at[mid]);
        legs.sort_unstable_by_key(|l| (Reverse(l.len()), l[0]));
        let whole_star = legs.len() == self.deg[mid];
        let mut rest = legs.split_off(2.min(legs.len()));
        let mut it = legs.into_iter();
        let main = match (it.next(), it.next()) {
            (Some(a), Some(b)) => Self::join_through(mid, a, &b),
            (Some(a), None) => Self::join_through(mid, a, &[]),
            _ => vec![mid],
        };
        self.emit(main);
        for leg in rest.drain(..) {
            self.emit(leg);
        }
        let w = if whole_star { None } else { self.live_neighbors(mid).first().copied() };
        let Some(w) = w else { return };
        self.deg[w] -= 1;
        match self.deg[w] {
            0 => self.emit(vec![w]),
            1 => self.extend(vec![w], None),
            2 => {
                let mut here = std::mem::take(&mut self.legs_at[w]);
                self.candidates.remove(&w);
                match here.len() {
                    0 => {}
                    1 => {
                        let mut leg = here.pop().unwrap();
                        let near = *leg.last().unwrap();
                        leg.push(w);
                        self.extend(leg, Some(near));
                    }
                    _ => {
                        let b = here.pop().unwrap();
                        let a = here.pop().unwrap();
                        self.emit(Self::join_through(w, a, &b));
                    }
                }
            }
            _ => self.consider(w),
        }
    }
}

fn canonical(mut p: Vec<usize>) -> Vec<usize> {
    if p.last() < p.first() {
        p.reverse();
    }
    p
}

/// A minimum path cover of a forest, with annotated connector edges.
pub fn min_path_cover(f: &Graph) -> Result<PathCover> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let n = f.n();
    let mut peeler = Peeler {
        g: f,
        deg: (0..n).map(|v| f.degree(v)).collect(),
        removed: vec![false; n],
        legs_at: vec![Vec::new(); n],
        candidates: BTreeSet::new(),
        paths: Vec::new(),
    };
    for comp in f.components() {
        if comp.iter().all(|&v| peeler.deg[v] <= 2) {
            let start = comp.iter().copied().find(|&v| peeler.deg[v] <= 1).unwrap();
            let (path, _) = walk_leg(|v| f.neighbors(v).to_vec(), &peeler.deg, start, None);
            peeler.emit(path);
            continue;
        }
        for &leaf in comp.iter().filter(|&&v| peeler.deg[v] == 1) {
            let (leg, attach) = walk_leg(|v| f.neighbors(v).to_vec(), &peeler.deg, leaf, None);
            let a = attach.expect("component has a branch vertex");
            peeler.legs_at[a].push(leg);
        }
        for &v in &comp {
            peeler.consider(v);
        }
    }
    while let Some(mid) = peeler.candidates.pop_first() {
        if !peeler.removed[mid] {
            peeler.peel(mid);
        }
    }
    debug_assert!(peeler.removed.iter().all(|&r| r), "peeling covers every vertex");
    let mut paths: Vec<Vec<usize>> = peeler.paths.into_iter().map(canonical).collect();
    paths.sort_unstable();
    let bare = PathCover { paths, connectors: Vec::new() };
    classify_connectors(f, &bare)
}

pub fn path_cover_number(f: &Graph) -> Result<usize> {
    Ok(min_path_cover(f)?.len())
}

fn check_cover(f: &Graph, pc: &PathCover) -> Result<Vec<usize>> {
    let n = f.n();
    let mut ids = vec![usize::MAX; n];
    for (i, p) in pc.paths.iter().enumerate() {
        if p.is_empty() {
            return Err(Error::InvalidCover(format!("path {i} is empty")));
        }
        for &v in p {
            if v >= n {
                return Err(Error::MissingVertex(v));
            }
            if ids[v] != usize::MAX {
                return Err(Error::InvalidCover(format!("vertex {v} lies on two paths")));
            }
            ids[v] = i;
        }
        for w in p.windows(2) {
            if !f.has_edge(w[0], w[1]) {
                return Err(Error::InvalidCover(format!("{}-{} is not an edge", w[0], w[1])));
            }
        }
        for (a, &u) in p.iter().enumerate() {
            for &v in p.iter().skip(a + 2) {
                if f.has_edge(u, v) {
                    return Err(Error::InvalidCover(format!("path {i} is not induced")));
                }
            }
        }
    }
    if let Some(v) = ids.iter().position(|&i| i == usize::MAX) {
        return Err(Error::InvalidCover(format!("vertex {v} is uncovered")));
    }
    Ok(ids)
}

/// Annotates every connector edge of a valid cover.
pub fn classify_connectors(f: &Graph, pc: &PathCover) -> Result<PathCover> {
    let ids = check_cover(f, pc)?;
    let status = |v: usize| {
        let p = &pc.paths[ids[v]];
        if p.len() == 1 {
            EndStatus::Singleton
        } else if p[0] == v || p[p.len() - 1] == v {
            EndStatus::End
        } else {
            EndStatus::Interior
        }
    };
    let connectors = f
        .edges()
        .into_iter()
        .filter(|&(u, v)| ids[u] != ids[v])
        .map(|(u, v)| Connector { edge: (u, v), status: (status(u), status(v)) })
        .collect();
    Ok(PathCover { paths: pc.paths.clone(), connectors })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverUniqueness {
    pub unique: bool,
    pub cover: PathCover,
    pub first_non_interior: Option<Connector>,
}

/// A tree has exactly one minimum path cover iff a (any) minimum cover is interior.
pub fn is_unique_min_cover(t: &Graph) -> Result<CoverUniqueness> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let cover = min_path_cover(t)?;
    let first_non_interior = cover.first_non_interior();
    Ok(CoverUniqueness { unique: first_non_interior.is_none(), cover, first_non_interior })
}

/// One chosen end-vertex per path; the result is a zero forcing set.
pub fn zf_set_from_cover(pc: &PathCover, ends: &[usize]) -> Result<Vec<usize>> {
    if ends.len() != pc.paths.len() {
        return Err(Error::InvalidCover(format!(
            "{} end choices for {} paths",
            ends.len(),
            pc.paths.len()
        )));
    }
    let mut out = Vec::with_capacity(ends.len());
    for (i, (p, &v)) in pc.paths.iter().zip(ends).enumerate() {
        if p[0] != v && p[p.len() - 1] != v {
            return Err(Error::NotAnEndVertex { path: i, vertex: v });
        }
        out.push(v);
    }
    out.sort_unstable();
    Ok(out)
}

/// Picks the first end of every path.
pub fn first_ends(pc: &PathCover) -> Vec<usize> {
    pc.paths.iter().map(|p| p[0]).collect()
}
