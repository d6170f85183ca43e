//! Small simple graphs, canonical forms, and enumeration up to isomorphism.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

/// A simple graph on vertices `0..n` with sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| {
                assert!(a != b && a < n && b < n, "bad edge ({a},{b})");
                (a.min(b), a.max(b))
            })
            .collect();
        Graph {
            n,
            edges: edges.into_iter().collect(),
        }
    }

    fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n]; self.n];
        for &(a, b) in &self.edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn triangle_count(&self) -> u64 {
        let adj = self.adjacency();
        let mut t = 0;
        for &(a, b) in &self.edges {
            t += (b + 1..self.n).filter(|&c| adj[a][c] && adj[b][c]).count() as u64;
        }
        t
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = crate::complex::UnionFind::new(self.n);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.n {
            groups.entry(uf.find(v)).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Canonical form: components are canonized separately (least edge
    /// list over the labelings reached by refinement and individualization)
    /// and then laid out in sorted order.
    pub fn canonical(&self) -> Graph {
        let adj = self.adjacency();
        let mut parts: Vec<(usize, Vec<(usize, usize)>)> = self
            .components()
            .into_iter()
            .map(|comp| {
                let sub: Vec<Vec<bool>> = comp
                    .iter()
                    .map(|&a| comp.iter().map(|&b| adj[a][b]).collect())
                    .collect();
                let colors = refine(&sub, vec![0; comp.len()]);
                let mut best = None;
                search(&sub, colors, &mut best);
                (comp.len(), best.unwrap_or_default())
            })
            .collect();
        parts.sort();
        let mut edges = Vec::new();
        let mut offset = 0;
        for (size, part) in parts {
            edges.extend(part.into_iter().map(|(a, b)| (a + offset, b + offset)));
            offset += size;
        }
        Graph { n: self.n, edges }
    }
}

/// Iterated color refinement; new colors are ranks of (old color, sorted
/// neighbor colors), so the result does not depend on vertex names.
fn refine(adj: &[Vec<bool>], mut colors: Vec<usize>) -> Vec<usize> {
    let n = adj.len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v][u]).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = sigs
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn search(adj: &[Vec<bool>], colors: Vec<usize>, best: &mut Option<Vec<(usize, usize)>>) {
    let n = adj.len();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &colors {
        *counts.entry(c).or_default() += 1;
    }
    // first non-singleton cell
    let Some((&cell, _)) = counts.iter().find(|(_, &k)| k > 1) else {
        // discrete: color = new label
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if adj[a][b] {
                    let (x, y) = (colors[a], colors[b]);
                    edges.push((x.min(y), x.max(y)));
                }
            }
        }
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    };
    let members: Vec<usize> = (0..n).filter(|&v| colors[v] == cell).collect();
    // swapping twins is an automorphism fixing the coloring, so one per class suffices
    let twins = |u: usize, v: usize| (0..n).all(|w| w == u || w == v || adj[u][w] == adj[v][w]);
    let mut tried: Vec<usize> = Vec::new();
    for &v in &members {
        if tried.iter().any(|&u| twins(u, v)) {
            continue;
        }
        tried.push(v);
        // split v off ahead of its cell, keeping every other color's rank
        let individualized: Vec<usize> = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| {
                if c > cell || (c == cell && u != v) {
                    2 * c + 1
                } else {
                    2 * c
                }
            })
            .collect();
        search(adj, refine(adj, individualized), best);
    }
}

/// All graphs with `m` edges and no isolated vertices on at most
/// `max_vertices` vertices, one per isomorphism class, in canonical form.
pub fn enumerate_graphs(m: usize, max_vertices: usize) -> Vec<Graph> {
    let mut level: BTreeSet<Graph> = BTreeSet::new();
    level.insert(Graph {
        n: 0,
        edges: vec![],
    });
    for _ in 0..m {
        let mut next: BTreeSet<Graph> = BTreeSet::new();
        for g in &level {
            let present: BTreeSet<(usize, usize)> = g.edges.iter().copied().collect();
            let mut candidates: Vec<Graph> = Vec::new();
            for a in 0..g.n {
                for b in a + 1..g.n {
                    if !present.contains(&(a, b)) {
                        candidates.push(Graph::new(g.n, g.edges.iter().copied().chain([(a, b)])));
                    }
                }
            }
            if g.n < max_vertices {
                for a in 0..g.n {
                    candidates.push(Graph::new(
                        g.n + 1,
                        g.edges.iter().copied().chain([(a, g.n)]),
                    ));
                }
            }
            if g.n + 2 <= max_vertices {
                candidates.push(Graph::new(
                    g.n + 2,
                    g.edges.iter().copied().chain([(g.n, g.n + 1)]),
                ));
            }
            for c in candidates {
                next.insert(c.canonical());
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Memoized [`enumerate_graphs`].
pub fn enumerate_graphs_cached(m: usize, max_vertices: usize) -> Arc<Vec<Graph>> {
    type Cache = Mutex<BTreeMap<(usize, usize), Arc<Vec<Graph>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&(m, max_vertices)) {
        return hit.clone();
    }
    let graphs = Arc::new(enumerate_graphs(m, max_vertices));
    cache
        .lock()
        .expect("cache lock")
        .entry((m, max_vertices))
        .or_insert(graphs)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_is_label_invariant() {
        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]);
        let relabeled = Graph::new(4, [(2, 0), (0, 3), (3, 1)]);
        assert_eq!(path.canonical(), relabeled.canonical());
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]);
        assert_ne!(path.canonical(), star.canonical());
    }

    #[test]
    fn regular_graphs_are_distinguished() {
        // two triangles vs a hexagon: color refinement alone cannot split them
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let hexagon = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        assert_ne!(two_triangles.canonical(), hexagon.canonical());
        assert_eq!(two_triangles.triangle_count(), 2);
        assert_eq!(hexagon.triangle_count(), 0);
    }

    #[test]
    fn known_counts() {
        // graphs without isolated vertices, by edge count (OEIS A000664)
        let counts: Vec<usize> = (1..=7).map(|m| enumerate_graphs(m, 2 * m).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 11, 26, 68, 177]);
    }
}
