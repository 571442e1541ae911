//! Simple undirected graphs over dense vertex ids `0..n`, plus the
//! structural queries the rest of the crate relies on: pendants, BFS
//! distances, bridges, and split/threshold recognition.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted lexicographically;
/// the position of an edge in that list is its *edge id*, which colourings
/// index by. Adjacency lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and endpoints `>= n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::contract(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::contract(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::contract(format!(
                "parallel edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, edges)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are simple")
    }

    /// Star with centre `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Id of edge `uv`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && is_connected(self)
    }

    /// Returns a copy with extra vertices `n, n+1, ...`, vertex `n + i`
    /// attached to `attach[i]`.
    pub fn with_pendants(&self, attach: &[usize]) -> Result<Self> {
        let n = self.n + attach.len();
        let extra = attach.iter().enumerate().map(|(i, &x)| (x, self.n + i));
        Graph::new(n, self.edges.iter().copied().chain(extra))
    }

    /// Induced subgraph on `keep` (any order). Vertex `i` of the result is
    /// `keep_sorted[i]` of `self`; the returned vector is that map.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut old_of_new: Vec<usize> = keep.to_vec();
        old_of_new.sort_unstable();
        old_of_new.dedup();
        let mut new_of_old = vec![usize::MAX; self.n];
        for (i, &v) in old_of_new.iter().enumerate() {
            new_of_old[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_of_old[u] != usize::MAX && new_of_old[v] != usize::MAX)
            .map(|&(u, v)| (new_of_old[u], new_of_old[v]))
            .collect::<Vec<_>>();
        // relabelling is monotone, so the edge list stays sorted
        (Graph::from_sorted(old_of_new.len(), edges), old_of_new)
    }
}

/// Clique/independent split of the vertex set. Both sides are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPartition {
    /// Checks every invariant: cover, disjointness, clique, independence and
    /// maximality of the clique.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![0u8; g.vertex_count()];
        for &v in self.clique.iter().chain(&self.independent) {
            if v >= g.vertex_count() {
                return false;
            }
            seen[v] += 1;
        }
        if seen.iter().any(|&c| c != 1) {
            return false;
        }
        let clique_ok = self
            .clique
            .iter()
            .enumerate()
            .all(|(i, &u)| self.clique[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        let indep_ok = self.independent.iter().all(|&v| {
            g.neighbours(v)
                .iter()
                .all(|w| self.independent.binary_search(w).is_err())
        });
        let maximal = self
            .independent
            .iter()
            .all(|&v| !self.clique.iter().all(|&k| g.has_edge(v, k)));
        clique_ok && indep_ok && maximal
    }

    pub fn in_clique(&self, v: usize) -> bool {
        self.clique.binary_search(&v).is_ok()
    }
}

/// Recognizes split graphs from the degree sequence and returns a partition
/// with a maximal clique, or `None` when the graph is not split.
pub fn recognize_split(g: &Graph) -> Option<SplitPartition> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();

    // largest m with d_m >= m - 1 (1-based)
    let m = (1..=n).filter(|&i| deg[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }

    let mut clique: Vec<usize> = order[..m].to_vec();
    let mut independent: Vec<usize> = order[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();

    // An independent vertex seeing the whole clique extends it; at most one
    // such vertex can exist because the rest stays independent.
    if let Some(pos) = independent
        .iter()
        .position(|&v| clique.iter().all(|&k| g.has_edge(v, k)))
    {
        let v = independent.remove(pos);
        let at = clique.binary_search(&v).unwrap_err();
        clique.insert(at, v);
    }

    let sp = SplitPartition {
        clique,
        independent,
    };
    debug_assert!(sp.is_valid_for(g));
    Some(sp)
}

/// Degree-1 vertices, ascending.
pub fn pendant_set(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 1)
        .collect()
}

/// BFS distances from `s`; `None` for unreachable vertices.
pub fn distances_from(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[s] = Some(0);
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in g.neighbours(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() == 0 || distances_from(g, 0).iter().all(Option::is_some)
}

pub fn distance(g: &Graph, u: usize, v: usize) -> Result<usize> {
    distances_from(g, u)[v].ok_or(Error::Disconnected)
}

pub fn diameter(g: &Graph) -> Result<usize> {
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in distances_from(g, s) {
            best = best.max(d.ok_or(Error::Disconnected)?);
        }
    }
    Ok(best)
}

/// Bridges as `(u, v)` pairs with `u < v`, sorted. Iterative low-link DFS.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent edge id, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (u, parent_edge, ref mut next)) = stack.last_mut() {
            if *next < g.degree(u) {
                let w = g.neighbours(u)[*next];
                *next += 1;
                let eid = g.edge_index(u, w).unwrap();
                if eid == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, eid, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        out.push((p.min(u), p.max(u)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Threshold test: split, and the neighbourhoods of the independent side
/// form a chain under inclusion.
pub fn is_threshold(g: &Graph) -> bool {
    let Some(sp) = recognize_split(g) else {
        return false;
    };
    let mut hoods: Vec<&[usize]> = sp.independent.iter().map(|&v| g.neighbours(v)).collect();
    hoods.sort_by_key(|h| h.len());
    hoods
        .windows(2)
        .all(|w| w[0].iter().all(|x| w[1].binary_search(x).is_ok()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split_oracle(g: &Graph) -> bool {
        let n = g.vertex_count();
        (0u32..1 << n).any(|mask| {
            let inside = |v: usize| mask >> v & 1 == 1;
            g.edges().iter().all(|&(u, v)| inside(u) || inside(v))
                && (0..n).all(|u| (u + 1..n).all(|v| !(inside(u) && inside(v)) || g.has_edge(u, v)))
        })
    }

    #[test]
    fn path_of_three_is_split() {
        let sp = recognize_split(&Graph::path(3)).unwrap();
        assert_eq!(sp.clique, vec![0, 1]);
        assert_eq!(sp.independent, vec![2]);
    }

    #[test]
    fn four_cycle_is_not_split() {
        let c4 = Graph::cycle(4);
        assert!(!split_oracle(&c4));
        assert!(recognize_split(&c4).is_none());
    }

    #[test]
    fn triangle_with_pendants() {
        let g = Graph::new(7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5), (0, 6)]).unwrap();
        let sp = recognize_split(&g).unwrap();
        assert_eq!(sp.clique, vec![0, 1, 2]);
        assert_eq!(sp.independent, vec![3, 4, 5, 6]);
        assert_eq!(pendant_set(&g), vec![3, 4, 5, 6]);
    }

    #[test]
    fn maximality_repair() {
        // K = {0,1} by degree order, but vertex 2 sees both
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let sp = recognize_split(&g).unwrap();
        assert_eq!(sp.clique, vec![0, 1, 2]);
        assert!(sp.is_valid_for(&g));
    }

    #[test]
    fn pendants() {
        assert_eq!(pendant_set(&Graph::star(3)), vec![1, 2, 3]);
        assert!(pendant_set(&Graph::complete(3)).is_empty());
        // G310 host: triangle, 3 pendants on x0, 1 on x1
        let g = Graph::new(7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5), (1, 6)]).unwrap();
        assert_eq!(pendant_set(&g).len(), 4);
    }

    #[test]
    fn distances_and_bridges() {
        let p4 = Graph::path(4);
        assert_eq!(diameter(&p4).unwrap(), 3);
        assert_eq!(bridges(&p4), vec![(0, 1), (1, 2), (2, 3)]);
        let c6 = Graph::cycle(6);
        assert_eq!(diameter(&c6).unwrap(), 3);
        assert!(bridges(&c6).is_empty());
        assert_eq!(distance(&c6, 0, 3).unwrap(), 3);
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(diameter(&split), Err(Error::Disconnected)));
    }

    #[test]
    fn threshold_examples() {
        assert!(is_threshold(&Graph::star(4)));
        assert!(!is_threshold(&Graph::path(4)));
        assert!(is_threshold(&Graph::complete(5)));
        assert!(!is_threshold(&Graph::cycle(4)));
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let (h, map) = g.induced(&[4, 0, 1]);
        assert_eq!(map, vec![0, 1, 4]);
        assert_eq!(h.edges(), &[(0, 1), (0, 2)]);
    }
}
