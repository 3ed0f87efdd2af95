//! AHU canonical forms for rooted, free and vertex-colored trees, and the
//! automorphism questions built on them.
//!
//! Two routes are provided. [`CanonicalCode`] is a self-contained token
//! sequence, comparable across calls. [`Canonizer`] interns subtree shapes to
//! small integers and runs in linear expected time, but its class ids only
//! compare within one canonizer.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const CLOSE: u32 = 0;
const OPEN: u32 = 1;
const VIRTUAL: u32 = u32::MAX;

#[inline]
fn color_token(colors: Option<&[u32]>, v: usize) -> u32 {
    // shift past CLOSE/OPEN; VIRTUAL stays reserved
    colors.map_or(0, |c| c[v]).saturating_add(2).min(VIRTUAL - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Rooted,
    Free,
    Colored,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub kind: CodeKind,
    pub tokens: Vec<u32>,
}

fn check_colors(t: &Graph, colors: Option<&[u32]>) -> Result<()> {
    match colors {
        Some(c) if c.len() != t.n() => Err(Error::Construction(format!(
            "{} colors for {} vertices",
            c.len(),
            t.n()
        ))),
        _ => Ok(()),
    }
}

/// Children lists of the tree containing `root`, hanging from `root`, never
/// crossing to `blocked`. Returned in DFS preorder.
fn rooted_order(t: &Graph, root: usize, blocked: Option<usize>) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; t.n()];
    let mut order = Vec::new();
    let mut stack = vec![root];
    parent[root] = root;
    if let Some(b) = blocked {
        parent[b] = b;
    }
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    (order, parent)
}

fn rooted_tokens(t: &Graph, root: usize, blocked: Option<usize>, colors: Option<&[u32]>) -> Vec<u32> {
    let (order, parent) = rooted_order(t, root, blocked);
    let mut codes: Vec<Option<Vec<u32>>> = vec![None; t.n()];
    let mut kids: Vec<Vec<Vec<u32>>> = vec![Vec::new(); t.n()];
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut kids[v]);
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>() + 1);
        code.push(OPEN);
        code.push(color_token(colors, v));
        for c in children {
            code.extend(c);
        }
        code.push(CLOSE);
        if v == root {
            codes[v] = Some(code);
        } else {
            kids[parent[v]].push(code);
        }
    }
    codes[root].take().unwrap()
}

/// Canonical code of `t` rooted at `root`. Equal codes iff there is a
/// (color-preserving) isomorphism mapping root to root.
pub fn rooted_code(t: &Graph, root: usize, colors: Option<&[u32]>) -> Result<CanonicalCode> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if root >= t.n() {
        return Err(Error::MissingVertex(root));
    }
    check_colors(t, colors)?;
    let kind = if colors.is_some() { CodeKind::Colored } else { CodeKind::Rooted };
    Ok(CanonicalCode { kind, tokens: rooted_tokens(t, root, None, colors) })
}

/// Label-invariant code of a free tree: rooted at the center, or at a virtual
/// vertex subdividing the central edge when the center has two vertices.
pub fn free_code(t: &Graph, colors: Option<&[u32]>) -> Result<CanonicalCode> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    check_colors(t, colors)?;
    let all: Vec<usize> = (0..t.n()).collect();
    let center = t.center(&all)?;
    let tokens = match center.as_slice() {
        [c] => rooted_tokens(t, *c, None, colors),
        [a, b] => {
            let mut sides = [rooted_tokens(t, *a, Some(*b), colors), rooted_tokens(t, *b, Some(*a), colors)];
            sides.sort_unstable();
            let [x, y] = sides;
            let mut tokens = Vec::with_capacity(x.len() + y.len() + 3);
            tokens.push(OPEN);
            tokens.push(VIRTUAL);
            tokens.extend(x);
            tokens.extend(y);
            tokens.push(CLOSE);
            tokens
        }
        _ => unreachable!("tree centers have one or two vertices"),
    };
    let kind = if colors.is_some() { CodeKind::Colored } else { CodeKind::Free };
    Ok(CanonicalCode { kind, tokens })
}

/// Interning canonizer: isomorphic (colored) subtrees receive the same id.
#[derive(Debug, Default)]
pub struct Canonizer {
    table: HashMap<(u32, Vec<u32>), u32>,
}

impl Canonizer {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, color: u32, mut children: Vec<u32>) -> u32 {
        children.sort_unstable();
        let next = self.table.len() as u32;
        *self.table.entry((color, children)).or_insert(next)
    }

    fn rooted(&mut self, t: &Graph, root: usize, blocked: Option<usize>, colors: Option<&[u32]>) -> u32 {
        let (order, parent) = rooted_order(t, root, blocked);
        let mut kids: Vec<Vec<u32>> = vec![Vec::new(); t.n()];
        let mut root_id = 0;
        for &v in order.iter().rev() {
            let children = std::mem::take(&mut kids[v]);
            let id = self.intern(color_token(colors, v), children);
            if v == root {
                root_id = id;
            } else {
                kids[parent[v]].push(id);
            }
        }
        root_id
    }

    pub fn rooted_class(&mut self, t: &Graph, root: usize, colors: Option<&[u32]>) -> Result<u32> {
        if !t.is_tree() {
            return Err(Error::NotATree);
        }
        check_colors(t, colors)?;
        Ok(self.rooted(t, root, None, colors))
    }

    pub fn free_class(&mut self, t: &Graph, colors: Option<&[u32]>) -> Result<u32> {
        if !t.is_tree() {
            return Err(Error::NotATree);
        }
        check_colors(t, colors)?;
        let all: Vec<usize> = (0..t.n()).collect();
        let center = t.center(&all)?;
        Ok(match center.as_slice() {
            [c] => self.rooted(t, *c, None, colors),
            [a, b] => {
                let x = self.rooted(t, *a, Some(*b), colors);
                let y = self.rooted(t, *b, Some(*a), colors);
                self.intern(VIRTUAL, vec![x, y])
            }
            _ => unreachable!("tree centers have one or two vertices"),
        })
    }
}

/// Orbit key of a vertex coloring of a forest: the sorted multiset of colored
/// free codes of its components.
pub(crate) struct ForestKeys {
    parts: Vec<(Graph, Vec<usize>)>,
}

impl ForestKeys {
    pub(crate) fn new(f: &Graph) -> Result<Self> {
        if !f.is_forest() {
            return Err(Error::NotAForest);
        }
        let parts = f.components().into_iter().map(|c| (f.induced(&c), c)).collect();
        Ok(ForestKeys { parts })
    }

    pub(crate) fn key(&self, colors: &[u32]) -> Vec<CanonicalCode> {
        let mut key: Vec<CanonicalCode> = self
            .parts
            .iter()
            .map(|(tree, verts)| {
                let local: Vec<u32> = verts.iter().map(|&v| colors[v]).collect();
                free_code(tree, Some(&local)).expect("components of a forest are trees")
            })
            .collect();
        key.sort_unstable();
        key
    }

    pub(crate) fn set_key(&self, n: usize, set: &[usize]) -> Vec<CanonicalCode> {
        let mut colors = vec![0u32; n];
        for &v in set {
            colors[v] = 1;
        }
        self.key(&colors)
    }
}

/// Whether some automorphism of the forest `f` maps the set `a` onto `b`.
pub fn sets_in_same_orbit(f: &Graph, a: &[usize], b: &[usize]) -> Result<bool> {
    for &v in a.iter().chain(b) {
        if v >= f.n() {
            return Err(Error::MissingVertex(v));
        }
    }
    let keys = ForestKeys::new(f)?;
    Ok(keys.set_key(f.n(), a) == keys.set_key(f.n(), b))
}

/// Whether an automorphism of the forest `t` maps `x` to `y` and `y` to `x`.
pub fn exists_swap_automorphism(t: &Graph, x: usize, y: usize) -> Result<bool> {
    for v in [x, y] {
        if v >= t.n() {
            return Err(Error::MissingVertex(v));
        }
    }
    let keys = ForestKeys::new(t)?;
    if x == y {
        return Ok(true);
    }
    let mut first = vec![0u32; t.n()];
    let mut second = vec![0u32; t.n()];
    first[x] = 1;
    first[y] = 2;
    second[x] = 2;
    second[y] = 1;
    Ok(keys.key(&first) == keys.key(&second))
}

/// Whether the two components `c1`, `c2` of `g` are isomorphic trees.
pub fn components_isomorphic(g: &Graph, c1: &[usize], c2: &[usize]) -> Result<bool> {
    for &v in c1.iter().chain(c2) {
        if v >= g.n() {
            return Err(Error::MissingVertex(v));
        }
    }
    let t1 = g.induced(c1);
    let t2 = g.induced(c2);
    if c1.len() != c2.len() {
        // still reject non-trees
        if !t1.is_tree() || !t2.is_tree() {
            return Err(Error::NotATree);
        }
        return Ok(false);
    }
    Ok(free_code(&t1, None)? == free_code(&t2, None)?)
}

/// Largest order accepted by the permutation search.
pub const BRUTE_LIMIT: usize = 9;

/// An automorphism of `g` mapping `a` onto `b`, found by backtracking over
/// degree- and membership-compatible images. Works for any order; callers
/// enforce [`BRUTE_LIMIT`].
pub fn find_set_automorphism(g: &Graph, a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    if a.len() != b.len() {
        return None;
    }
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    a.iter().for_each(|&v| in_a[v] = true);
    b.iter().for_each(|&v| in_b[v] = true);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(g: &Graph, v: usize, in_a: &[bool], in_b: &[bool], image: &mut [usize], used: &mut [bool]) -> bool {
        let n = g.n();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || in_a[v] != in_b[w] || g.degree(v) != g.degree(w) {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w));
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if extend(g, v + 1, in_a, in_b, image, used) {
                return true;
            }
            used[w] = false;
        }
        image[v] = usize::MAX;
        false
    }

    extend(g, 0, &in_a, &in_b, &mut image, &mut used).then_some(image)
}

/// Whether some automorphism of `g` maps `a` onto `b` (`n <= 9`).
pub fn brute_automorphism_orbits(g: &Graph, a: &[usize], b: &[usize]) -> Result<bool> {
    if g.n() > BRUTE_LIMIT {
        return Err(Error::LimitExceeded { what: "automorphism search", n: g.n(), limit: BRUTE_LIMIT });
    }
    for &v in a.iter().chain(b) {
        if v >= g.n() {
            return Err(Error::MissingVertex(v));
        }
    }
    Ok(find_set_automorphism(g, a, b).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        Graph::from_edges(g.n(), g.edges().into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
    }

    #[test]
    fn rooted_code_examples() {
        let p3 = Graph::path(3);
        let other = relabel(&p3, &[1, 0, 2]); // center is now 0
        assert_eq!(rooted_code(&p3, 1, None).unwrap(), rooted_code(&other, 0, None).unwrap());
        assert_ne!(rooted_code(&p3, 1, None).unwrap(), rooted_code(&p3, 0, None).unwrap());

        let k13 = Graph::star(3);
        let c1 = rooted_code(&k13, 0, Some(&[0, 1, 0, 0])).unwrap();
        let c2 = rooted_code(&k13, 0, Some(&[0, 0, 0, 1])).unwrap();
        assert_eq!(c1, c2);
        assert_eq!(c1.kind, CodeKind::Colored);
        assert_ne!(c1, rooted_code(&k13, 0, Some(&[1, 0, 0, 0])).unwrap());
        assert_eq!(rooted_code(&Graph::cycle(3), 0, None), Err(Error::NotATree));
    }

    #[test]
    fn free_code_examples() {
        let p4 = Graph::path(4);
        assert_eq!(free_code(&p4, None).unwrap(), free_code(&relabel(&p4, &[2, 0, 3, 1]), None).unwrap());
        let spider = Graph::spider(&[1, 1, 2]);
        assert_ne!(free_code(&spider, None).unwrap(), free_code(&Graph::star(4), None).unwrap());
        let p3 = Graph::path(3);
        let codes: Vec<_> = [[0, 1, 2], [1, 0, 2], [0, 2, 1]]
            .iter()
            .map(|perm| free_code(&relabel(&p3, perm), None).unwrap())
            .collect();
        assert!(codes.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn canonizer_agrees_with_tokens() {
        let trees = [Graph::path(4), Graph::star(3), Graph::spider(&[1, 1, 2]), Graph::path(5), Graph::star(4)];
        let mut canon = Canonizer::new();
        let ids: Vec<u32> = trees.iter().map(|t| canon.free_class(t, None).unwrap()).collect();
        for i in 0..trees.len() {
            for j in 0..trees.len() {
                let same = free_code(&trees[i], None).unwrap() == free_code(&trees[j], None).unwrap();
                assert_eq!(same, ids[i] == ids[j]);
            }
        }
        let p4 = Graph::path(4);
        assert_eq!(
            canon.free_class(&p4, Some(&[1, 0, 0, 2])).unwrap(),
            canon.free_class(&p4, Some(&[2, 0, 0, 1])).unwrap()
        );
        assert_ne!(
            canon.free_class(&p4, Some(&[1, 2, 0, 0])).unwrap(),
            canon.free_class(&p4, Some(&[2, 1, 0, 0])).unwrap()
        );
    }

    #[test]
    fn orbit_examples() {
        let k13 = Graph::star(3);
        assert!(sets_in_same_orbit(&k13, &[1, 2], &[2, 3]).unwrap());
        let p4 = Graph::path(4);
        assert!(sets_in_same_orbit(&p4, &[0], &[3]).unwrap());
        assert!(!sets_in_same_orbit(&p4, &[0], &[1]).unwrap());
        // spider(1,1,2): leaves 1, 2; leg 3-4 with leaf 4
        let sp = Graph::spider(&[1, 1, 2]);
        assert!(!sets_in_same_orbit(&sp, &[1, 3], &[1, 4]).unwrap());
        assert_eq!(sets_in_same_orbit(&Graph::cycle(3), &[0], &[1]), Err(Error::NotAForest));
        // components may be exchanged
        let two = Graph::path(2).disjoint_union(&Graph::path(2));
        assert!(sets_in_same_orbit(&two, &[0], &[3]).unwrap());
    }

    #[test]
    fn swap_examples() {
        let p4 = Graph::path(4);
        assert!(exists_swap_automorphism(&p4, 0, 3).unwrap());
        assert!(!exists_swap_automorphism(&p4, 0, 1).unwrap());
        assert!(exists_swap_automorphism(&Graph::double_star(2, 2), 2, 4).unwrap());
        assert!(exists_swap_automorphism(&p4, 1, 1).unwrap());
        // An automorphism mapping 1 -> 2 exists in K_{1,3} with an extra
        // pendant vertex on leaf 3, and it also swaps them back.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert!(exists_swap_automorphism(&g, 1, 2).unwrap());
        assert!(!exists_swap_automorphism(&g, 1, 4).unwrap());
    }

    #[test]
    fn component_iso_examples() {
        let (g, map) = Graph::path(5).delete(&[2], &[]).unwrap();
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert!(components_isomorphic(&g, &[0, 1], &[2, 3]).unwrap());

        let sp = Graph::spider(&[1, 1, 2]);
        let (g, _) = sp.delete(&[0], &[]).unwrap();
        // after deletion: 0 = leaf, 1 = leaf, 2-3 = the leg
        assert!(components_isomorphic(&g, &[0], &[1]).unwrap());
        assert!(!components_isomorphic(&g, &[0], &[2, 3]).unwrap());

        let (g, _) = Graph::path(4).delete(&[], &[(1, 2)]).unwrap();
        assert!(components_isomorphic(&g, &[0, 1], &[2, 3]).unwrap());
    }

    #[test]
    fn brute_examples() {
        let c5 = Graph::cycle(5);
        for a in 0..5 {
            for b in 0..5 {
                assert!(brute_automorphism_orbits(&c5, &[a], &[b]).unwrap());
            }
        }
        let g = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert!(!brute_automorphism_orbits(&g, &[0], &[3]).unwrap());
        assert!(brute_automorphism_orbits(&g, &[0], &[2]).unwrap());
        assert!(brute_automorphism_orbits(&Graph::path(10), &[0], &[9]).is_err());
        let perm = find_set_automorphism(&Graph::path(4), &[0], &[3]).unwrap();
        assert_eq!(perm, vec![3, 2, 1, 0]);
    }
}
