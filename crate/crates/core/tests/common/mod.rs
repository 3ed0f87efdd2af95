//! Brute-force reference implementations, written without the library's
//! search code. Only the `Graph` container is shared.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use zfgrundy::{Graph, SequenceKind};

fn closed_nbhd(g: &Graph, v: usize) -> Vec<usize> {
    let mut s = g.neighbors(v).to_vec();
    s.push(v);
    s
}

/// Longest legal sequence by plain DFS over orderings (no memo).
pub fn brute_grundy(g: &Graph, kind: SequenceKind) -> usize {
    let n = g.n();
    fn dfs(g: &Graph, kind: SequenceKind, used: &mut Vec<bool>, covered: &mut Vec<u32>) -> usize {
        let mut best = 0;
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            let defining = match kind {
                SequenceKind::Closed | SequenceKind::L => closed_nbhd(g, v),
                SequenceKind::Open | SequenceKind::Z => g.neighbors(v).to_vec(),
            };
            if defining.iter().all(|&w| covered[w] > 0) {
                continue;
            }
            let covering = match kind {
                SequenceKind::Closed | SequenceKind::Z => closed_nbhd(g, v),
                SequenceKind::Open | SequenceKind::L => g.neighbors(v).to_vec(),
            };
            used[v] = true;
            covering.iter().for_each(|&w| covered[w] += 1);
            best = best.max(1 + dfs(g, kind, used, covered));
            covering.iter().for_each(|&w| covered[w] -= 1);
            used[v] = false;
        }
        best
    }
    dfs(g, kind, &mut vec![false; n], &mut vec![0; n])
}

/// Forcing with a random choice among eligible forcers at every step.
pub fn random_closure(g: &Graph, s: &[usize], rng: &mut impl Rng) -> Vec<bool> {
    let mut active = vec![false; g.n()];
    s.iter().for_each(|&v| active[v] = true);
    loop {
        let eligible: Vec<usize> = (0..g.n())
            .filter(|&u| active[u] && g.neighbors(u).iter().filter(|&&w| !active[w]).count() == 1)
            .collect();
        let Some(&u) = eligible.choose(rng) else { return active };
        let w = *g.neighbors(u).iter().find(|&&w| !active[w]).unwrap();
        active[w] = true;
    }
}

pub fn brute_is_zf(g: &Graph, s: &[usize]) -> bool {
    let mut active = vec![false; g.n()];
    s.iter().for_each(|&v| active[v] = true);
    let mut changed = true;
    while changed {
        changed = false;
        for u in 0..g.n() {
            if !active[u] {
                continue;
            }
            let rest: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !active[w]).collect();
            if rest.len() == 1 {
                active[rest[0]] = true;
                changed = true;
            }
        }
    }
    active.iter().all(|&a| a)
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u32 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// All minimum zero forcing sets, by checking every subset.
pub fn brute_min_zf(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let all: Vec<Vec<usize>> = subsets(g.n()).filter(|s| brute_is_zf(g, s)).collect();
    let z = all.iter().map(Vec::len).min().unwrap();
    let mut min: Vec<Vec<usize>> = all.into_iter().filter(|s| s.len() == z).collect();
    min.sort();
    (z, min)
}

/// `n` minus the largest edge set of maximum degree 2 (trees only: such an
/// edge set is a union of induced paths).
pub fn brute_path_cover_number(t: &Graph) -> usize {
    let edges = t.edges();
    let mut best = 0;
    for m in 0..1u32 << edges.len() {
        let mut deg = vec![0; t.n()];
        let mut ok = true;
        let mut count = 0;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if m >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
                count += 1;
                ok &= deg[u] <= 2 && deg[v] <= 2;
            }
        }
        if ok {
            best = best.max(count);
        }
    }
    t.n() - best
}

/// Heap's algorithm over all permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    out.push(p.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn edge_set(g: &Graph) -> std::collections::BTreeSet<(usize, usize)> {
    g.edges().into_iter().collect()
}

pub fn maps_edges(g: &Graph, h: &Graph, p: &[usize]) -> bool {
    let target = edge_set(h);
    g.edges().into_iter().all(|(u, v)| target.contains(&(p[u].min(p[v]), p[u].max(p[v]))))
}

/// Sorted BFS distances from `v` (unreachable vertices omitted).
pub fn distance_profile(g: &Graph, v: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[v] = 0;
    let mut queue = std::collections::VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut d: Vec<usize> = dist.into_iter().filter(|&d| d != usize::MAX).collect();
    d.sort();
    d
}

/// Isomorphism by backtracking over vertex images with equal distance
/// profiles, checking adjacency against every earlier vertex.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let pg: Vec<Vec<usize>> = (0..g.n()).map(|v| distance_profile(g, v)).collect();
    let ph: Vec<Vec<usize>> = (0..h.n()).map(|v| distance_profile(h, v)).collect();
    let mut img = Vec::with_capacity(g.n());
    let mut used = vec![false; h.n()];

    fn go(g: &Graph, h: &Graph, p: (&[Vec<usize>], &[Vec<usize>]), img: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = img.len();
        if v == g.n() {
            return true;
        }
        for w in 0..h.n() {
            if used[w] || p.0[v] != p.1[w] || !(0..v).all(|u| g.has_edge(u, v) == h.has_edge(img[u], w)) {
                continue;
            }
            img.push(w);
            used[w] = true;
            if go(g, h, p, img, used) {
                return true;
            }
            img.pop();
            used[w] = false;
        }
        false
    }

    go(g, h, (&pg, &ph), &mut img, &mut used)
}

/// Whether some automorphism maps `a` onto `b`, over all permutations.
pub fn brute_orbit(g: &Graph, perms: &[Vec<usize>], a: &[usize], b: &[usize]) -> bool {
    let mut b = b.to_vec();
    b.sort();
    perms.iter().any(|p| {
        maps_edges(g, g, p) && {
            let mut img: Vec<usize> = a.iter().map(|&v| p[v]).collect();
            img.sort();
            img == b
        }
    })
}

pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let mut degree = vec![1; n];
    seq.iter().for_each(|&v| degree[v] += 1);
    let mut edges = Vec::new();
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_tree(n, &seq)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn relabel(g: &Graph, p: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().into_iter().map(|(u, v)| (p[u], p[v]))).unwrap()
}
