//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Every graph keeps sorted neighbor lists. Graphs with at most 64 vertices
//! additionally carry one neighbor bit mask per vertex, which the exhaustive
//! searches use as their working representation.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order for which per-vertex bit masks are maintained.
pub const MASK_LIMIT: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    mask: Option<Vec<u64>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::MissingVertex(u));
            }
            if v >= n {
                return Err(Error::MissingVertex(v));
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let n = adj.len();
        let mask = (n <= MASK_LIMIT).then(|| {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | (1u64 << w)))
                .collect()
        });
        Graph { n, adj, mask }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).unwrap()
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        Self::from_edges(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    /// A spider: center 0 with one pendant path per entry of `legs`.
    pub fn spider(legs: &[usize]) -> Self {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::from_edges(next, edges).unwrap()
    }

    /// Two stars `K_{1,a}` and `K_{1,b}` whose centers (0 and 1) are joined.
    pub fn double_star(a: usize, b: usize) -> Self {
        let mut edges = vec![(0, 1)];
        edges.extend((0..a).map(|i| (0, 2 + i)));
        edges.extend((0..b).map(|i| (1, 2 + a + i)));
        Self::from_edges(2 + a + b, edges).unwrap()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbor bit masks, present when `n <= 64`.
    #[inline]
    pub fn masks(&self) -> Option<&[u64]> {
        self.mask.as_deref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(Vec::is_empty)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// `i(G)`.
    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|l| l.is_empty()).count()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component index of every vertex, matching the order of [`Graph::components`].
    pub fn component_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n];
        for (i, comp) in self.components().iter().enumerate() {
            for &v in comp {
                ids[v] = i;
            }
        }
        ids
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edge_count() + 1 == self.n && self.components().len() == 1
    }

    /// Subgraph induced by `vertices` (in the given order). Vertex `i` of the
    /// result is `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            index.insert(v, i);
        }
        let adj = vertices
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|w| index.get(w).copied()).collect())
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Removes the listed vertices and edges. Returns the result together with
    /// the map from new vertex indices to the vertices of `self`.
    pub fn delete(&self, vertices: &[usize], edges: &[(usize, usize)]) -> Result<(Graph, Vec<usize>)> {
        let mut gone = vec![false; self.n];
        for &v in vertices {
            if v >= self.n {
                return Err(Error::MissingVertex(v));
            }
            gone[v] = true;
        }
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let is_cut = |u: usize, v: usize| edges.iter().any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v));
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| !gone[w] && !is_cut(v, w))
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Ok((Graph::from_adjacency(adj), keep))
    }

    pub fn classify_vertices(&self) -> VertexClassification {
        let leaf: Vec<bool> = (0..self.n).map(|v| self.degree(v) == 1).collect();
        let leaf_neighbors: Vec<usize> = (0..self.n)
            .map(|v| self.adj[v].iter().filter(|&&w| leaf[w]).count())
            .collect();
        VertexClassification {
            isolated: (0..self.n).map(|v| self.degree(v) == 0).collect(),
            support: leaf_neighbors.iter().map(|&c| c >= 1).collect(),
            strong_support: leaf_neighbors.iter().map(|&c| c >= 2).collect(),
            isolated_count: self.isolated_count(),
            leaf_count: leaf.iter().filter(|&&l| l).count(),
            leaf,
        }
    }

    /// Center of the tree component `component` (the vertices of minimum
    /// eccentricity): one vertex or two adjacent ones.
    pub fn center(&self, component: &[usize]) -> Result<Vec<usize>> {
        let size = component.len();
        if size == 0 {
            return Err(Error::NotATree);
        }
        let mut inside = vec![false; self.n];
        for &v in component {
            if v >= self.n {
                return Err(Error::MissingVertex(v));
            }
            inside[v] = true;
        }
        let mut edges = 0;
        for &v in component {
            for &w in &self.adj[v] {
                if !inside[w] {
                    return Err(Error::NotATree);
                }
                if w > v {
                    edges += 1;
                }
            }
        }
        if edges + 1 != size {
            return Err(Error::NotATree);
        }
        let mut deg: Vec<usize> = vec![0; self.n];
        let mut layer = Vec::new();
        for &v in component {
            deg[v] = self.degree(v);
            if deg[v] <= 1 {
                layer.push(v);
            }
        }
        let mut remaining = size;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &w in &self.adj[v] {
                    if deg[w] > 1 {
                        deg[w] -= 1;
                        if deg[w] == 1 {
                            next.push(w);
                        }
                    }
                }
                deg[v] = 0;
            }
            layer = next;
        }
        layer.sort_unstable();
        Ok(layer)
    }

    /// Classes of the relation `N(u) = N(v)`, singletons included, ordered by
    /// smallest member.
    pub fn open_twin_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: HashMap<&[usize], Vec<usize>> = HashMap::new();
        for v in 0..self.n {
            classes.entry(self.adj[v].as_slice()).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = classes.into_values().collect();
        out.sort_unstable_by_key(|c| c[0]);
        out
    }

    pub fn to_graph6(&self) -> Result<String> {
        crate::graph6::encode(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClassification {
    pub isolated: Vec<bool>,
    pub leaf: Vec<bool>,
    pub support: Vec<bool>,
    pub strong_support: Vec<bool>,
    pub isolated_count: usize,
    pub leaf_count: usize,
}

impl VertexClassification {
    pub fn strong_supports(&self) -> Vec<usize> {
        (0..self.strong_support.len()).filter(|&v| self.strong_support[v]).collect()
    }
}

/// Parses the line-oriented edge-list format: the first non-comment line is
/// the vertex count, every further line one edge `u v`. `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::Malformed { line, token: t.to_string() })
        };
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(Error::Malformed { line, token: body.trim().to_string() });
                }
                n = Some(parse(tokens[0])?);
            }
            Some(count) => {
                if tokens.len() != 2 {
                    return Err(Error::Malformed { line, token: body.trim().to_string() });
                }
                let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
                for vertex in [u, v] {
                    if vertex >= count {
                        return Err(Error::VertexOutOfRange { line, vertex, n: count });
                    }
                }
                if u == v {
                    return Err(Error::SelfLoop { line, vertex: u });
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or(Error::MissingVertexCount { line: last_line.max(1) })?;
    Graph::from_edges(n, edges)
}

/// Writes `g` in the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
