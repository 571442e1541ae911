//! Edge colourings and rainbow-connectivity checks.
//!
//! The general verifier runs a breadth-first search over states
//! `(vertex, set of colours used so far)` from every source. A state is
//! dropped when the same vertex was already reached with a subset of its
//! colours, which keeps the walks simple and the state space small.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{bridges, diameter, distances_from, is_connected, pendant_set, Graph};

/// Largest colour count the colour-set search accepts by default.
pub const DEFAULT_MASK_BUDGET: usize = 20;
const HARD_MASK_LIMIT: usize = 64;

/// A total map from the edges of one graph (by edge id) to `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    k: usize,
    colours: Vec<u32>,
}

impl EdgeColouring {
    pub fn new(g: &Graph, k: usize, colours: Vec<u32>) -> Result<Self> {
        if colours.len() != g.edge_count() {
            return Err(Error::contract(format!(
                "colouring covers {} of {} edges",
                colours.len(),
                g.edge_count()
            )));
        }
        if let Some(c) = colours.iter().find(|&&c| c as usize >= k) {
            return Err(Error::contract(format!("colour {c} outside 0..{k}")));
        }
        Ok(EdgeColouring { k, colours })
    }

    pub fn uniform(g: &Graph, k: usize, colour: u32) -> Self {
        assert!((colour as usize) < k);
        EdgeColouring {
            k,
            colours: vec![colour; g.edge_count()],
        }
    }

    /// Every edge its own colour.
    pub fn all_distinct(g: &Graph) -> Self {
        EdgeColouring {
            k: g.edge_count().max(1),
            colours: (0..g.edge_count() as u32).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn colour(&self, edge_id: usize) -> u32 {
        self.colours[edge_id]
    }

    pub fn colour_between(&self, g: &Graph, u: usize, v: usize) -> Option<u32> {
        g.edge_index(u, v).map(|e| self.colours[e])
    }

    /// Number of distinct colours actually used.
    pub fn used_colours(&self) -> usize {
        let mut seen: Vec<u32> = self.colours.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Applies the colour permutation `perm` (`perm[c]` is the new colour of `c`).
    pub fn relabelled(&self, perm: &[u32]) -> Self {
        EdgeColouring {
            k: self.k,
            colours: self.colours.iter().map(|&c| perm[c as usize]).collect(),
        }
    }

    pub(crate) fn check_against(&self, g: &Graph) -> Result<()> {
        if self.colours.len() != g.edge_count() {
            return Err(Error::contract(format!(
                "colouring covers {} of {} edges",
                self.colours.len(),
                g.edge_count()
            )));
        }
        Ok(())
    }
}

/// A path given both as its vertex sequence and its edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl RainbowPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn colours(&self, c: &EdgeColouring) -> Vec<u32> {
        self.edges.iter().map(|&e| c.colour(e)).collect()
    }

    /// Simple, joins `u` to `v` along real edges, and all colours distinct.
    pub fn is_rainbow_between(&self, g: &Graph, c: &EdgeColouring, u: usize, v: usize) -> bool {
        let vs = &self.vertices;
        if vs.first() != Some(&u) || vs.last() != Some(&v) || vs.len() != self.edges.len() + 1 {
            return false;
        }
        let mut seen_v = vs.clone();
        seen_v.sort_unstable();
        seen_v.dedup();
        if seen_v.len() != vs.len() {
            return false;
        }
        let steps_ok = vs
            .windows(2)
            .zip(&self.edges)
            .all(|(w, &e)| g.edge_index(w[0], w[1]) == Some(e));
        let mut cols = self.colours(c);
        cols.sort_unstable();
        cols.dedup();
        steps_ok && cols.len() == self.edges.len()
    }
}

/// Outcome of a rainbow-connectivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowReport {
    pub connected: bool,
    /// One witness per unordered pair `(u, v)`, `u < v`; filled when connected.
    pub witness_paths: BTreeMap<(usize, usize), RainbowPath>,
    /// Smallest pair without a rainbow path.
    pub failing_pair: Option<(usize, usize)>,
}

fn check_budget(c: &EdgeColouring, budget: usize) -> Result<()> {
    let limit = budget.min(HARD_MASK_LIMIT);
    if c.k() > limit {
        return Err(Error::Capacity {
            what: "colour count for the colour-set search",
            value: c.k() as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

pub fn verify_rainbow(g: &Graph, c: &EdgeColouring) -> Result<RainbowReport> {
    verify_rainbow_with_budget(g, c, DEFAULT_MASK_BUDGET)
}

pub fn verify_rainbow_with_budget(
    g: &Graph,
    c: &EdgeColouring,
    budget: usize,
) -> Result<RainbowReport> {
    c.check_against(g)?;
    check_budget(c, budget)?;
    if c.k() <= 2 {
        return Ok(verify_short(g, c));
    }

    let n = g.vertex_count();
    let mut witness_paths = BTreeMap::new();
    for s in 0..n {
        let targets = n - s - 1;
        if targets == 0 {
            continue;
        }
        let search = ColourSetSearch::run(g, c, s, |v| v > s, targets);
        for t in s + 1..n {
            match search.path_to(t) {
                Some(p) => {
                    witness_paths.insert((s, t), p);
                }
                None => {
                    return Ok(RainbowReport {
                        connected: false,
                        witness_paths: BTreeMap::new(),
                        failing_pair: Some((s, t)),
                    });
                }
            }
        }
    }
    Ok(RainbowReport {
        connected: true,
        witness_paths,
        failing_pair: None,
    })
}

/// Two colours: a rainbow path has at most two edges, so each non-adjacent
/// pair needs a common neighbour reached through differently coloured edges.
fn verify_short(g: &Graph, c: &EdgeColouring) -> RainbowReport {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    // per vertex, neighbours through colour 0 and colour 1
    let mut by_colour = vec![[vec![0u64; words], vec![0u64; words]]; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let col = c.colour(e) as usize;
        by_colour[u][col][v / 64] |= 1 << (v % 64);
        by_colour[v][col][u / 64] |= 1 << (u % 64);
    }
    let mut witness_paths = BTreeMap::new();
    for u in 0..n {
        for v in u + 1..n {
            if let Some(e) = g.edge_index(u, v) {
                witness_paths.insert(
                    (u, v),
                    RainbowPath {
                        vertices: vec![u, v],
                        edges: vec![e],
                    },
                );
                continue;
            }
            let mid = (0..words).find_map(|i| {
                let hits = (by_colour[u][0][i] & by_colour[v][1][i])
                    | (by_colour[u][1][i] & by_colour[v][0][i]);
                (hits != 0).then(|| i * 64 + hits.trailing_zeros() as usize)
            });
            match mid {
                Some(w) => {
                    witness_paths.insert(
                        (u, v),
                        RainbowPath {
                            vertices: vec![u, w, v],
                            edges: vec![g.edge_index(u, w).unwrap(), g.edge_index(w, v).unwrap()],
                        },
                    );
                }
                None => {
                    return RainbowReport {
                        connected: false,
                        witness_paths: BTreeMap::new(),
                        failing_pair: Some((u, v)),
                    }
                }
            }
        }
    }
    RainbowReport {
        connected: true,
        witness_paths,
        failing_pair: None,
    }
}

#[derive(Clone, Copy)]
struct State {
    mask: u64,
    prev_vertex: u32,
    prev_state: u32,
    edge: u32,
}

/// Breadth-first colour-set search from one source.
struct ColourSetSearch {
    source: usize,
    states: Vec<Vec<State>>,
}

impl ColourSetSearch {
    fn run(
        g: &Graph,
        c: &EdgeColouring,
        source: usize,
        is_target: impl Fn(usize) -> bool,
        mut targets: usize,
    ) -> Self {
        let n = g.vertex_count();
        let mut states: Vec<Vec<State>> = vec![Vec::new(); n];
        states[source].push(State {
            mask: 0,
            prev_vertex: u32::MAX,
            prev_state: u32::MAX,
            edge: u32::MAX,
        });
        let mut queue = VecDeque::from([(source, 0usize)]);
        while let Some((v, idx)) = queue.pop_front() {
            if targets == 0 {
                break;
            }
            let mask = states[v][idx].mask;
            for &w in g.neighbours(v) {
                let e = g.edge_index(v, w).unwrap();
                let bit = 1u64 << c.colour(e);
                if mask & bit != 0 {
                    continue;
                }
                let next = mask | bit;
                if states[w].iter().any(|s| s.mask & next == s.mask) {
                    continue;
                }
                if states[w].is_empty() && is_target(w) {
                    targets -= 1;
                }
                states[w].push(State {
                    mask: next,
                    prev_vertex: v as u32,
                    prev_state: idx as u32,
                    edge: e as u32,
                });
                queue.push_back((w, states[w].len() - 1));
            }
        }
        ColourSetSearch { source, states }
    }

    fn path_to(&self, t: usize) -> Option<RainbowPath> {
        self.states[t].first()?;
        let mut vertices = vec![t];
        let mut edges = Vec::new();
        let (mut v, mut idx) = (t, 0usize);
        while v != self.source || idx != 0 {
            let st = self.states[v][idx];
            edges.push(st.edge as usize);
            v = st.prev_vertex as usize;
            idx = st.prev_state as usize;
            vertices.push(v);
        }
        vertices.reverse();
        edges.reverse();
        Some(RainbowPath { vertices, edges })
    }
}

/// Shortest rainbow path from `u` to `v`, ties broken by the
/// lexicographically smallest vertex sequence.
pub fn rainbow_path(
    g: &Graph,
    c: &EdgeColouring,
    u: usize,
    v: usize,
) -> Result<Option<RainbowPath>> {
    c.check_against(g)?;
    check_budget(c, DEFAULT_MASK_BUDGET)?;
    if u >= g.vertex_count() || v >= g.vertex_count() {
        return Err(Error::contract(format!(
            "vertex pair ({u}, {v}) out of range"
        )));
    }
    if u == v {
        return Ok(Some(RainbowPath {
            vertices: vec![u],
            edges: vec![],
        }));
    }
    let search = ColourSetSearch::run(g, c, u, |w| w == v, 1);
    let Some(found) = search.path_to(v) else {
        return Ok(None);
    };
    let len = found.len();

    // depth-limited DFS in neighbour order finds the lexicographic minimum
    let to_target = distances_from(g, v);
    let mut vertices = vec![u];
    let mut edges = Vec::new();
    let ok = lex_dfs(g, c, v, len, &to_target, 0, &mut vertices, &mut edges);
    debug_assert!(ok);
    Ok(Some(RainbowPath { vertices, edges }))
}

#[allow(clippy::too_many_arguments)]
fn lex_dfs(
    g: &Graph,
    c: &EdgeColouring,
    target: usize,
    len: usize,
    to_target: &[Option<usize>],
    used: u64,
    vertices: &mut Vec<usize>,
    edges: &mut Vec<usize>,
) -> bool {
    let at = *vertices.last().unwrap();
    if at == target {
        return edges.len() == len;
    }
    let left = len - edges.len();
    for &w in g.neighbours(at) {
        match to_target[w] {
            Some(d) if d < left => {}
            _ => continue,
        }
        if vertices.contains(&w) {
            continue;
        }
        let e = g.edge_index(at, w).unwrap();
        let bit = 1u64 << c.colour(e);
        if used & bit != 0 {
            continue;
        }
        vertices.push(w);
        edges.push(e);
        if lex_dfs(g, c, target, len, to_target, used | bit, vertices, edges) {
            return true;
        }
        vertices.pop();
        edges.pop();
    }
    false
}

/// `max(diameter, #bridges, #pendants, 1, 2 if not complete)`.
///
/// The pendant term only applies from three vertices on: `K2` has two
/// pendants but is rainbow coloured by a single colour.
pub fn rc_lower_bound(g: &Graph) -> Result<usize> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut bound = diameter(g)?.max(bridges(g).len()).max(1);
    if g.vertex_count() >= 3 {
        bound = bound.max(pendant_set(g).len());
    }
    if !g.is_complete() {
        bound = bound.max(2);
    }
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colouring(g: &Graph, k: usize, cols: &[u32]) -> EdgeColouring {
        EdgeColouring::new(g, k, cols.to_vec()).unwrap()
    }

    #[test]
    fn alternating_four_cycle_is_rainbow() {
        let c4 = Graph::cycle(4);
        // edges sorted: (0,1) (0,3) (1,2) (2,3)
        let c = colouring(&c4, 2, &[0, 1, 1, 0]);
        let report = verify_rainbow(&c4, &c).unwrap();
        assert!(report.connected);
        for (&(u, v), p) in &report.witness_paths {
            assert!(p.is_rainbow_between(&c4, &c, u, v));
        }
    }

    #[test]
    fn monochromatic_four_cycle_fails_on_antipodal_pair() {
        let c4 = Graph::cycle(4);
        let report = verify_rainbow(&c4, &EdgeColouring::uniform(&c4, 1, 0)).unwrap();
        assert!(!report.connected);
        assert_eq!(report.failing_pair, Some((0, 2)));
    }

    #[test]
    fn monochromatic_triangle_is_rainbow() {
        let k3 = Graph::complete(3);
        assert!(
            verify_rainbow(&k3, &EdgeColouring::uniform(&k3, 1, 0))
                .unwrap()
                .connected
        );
    }

    #[test]
    fn general_search_agrees_with_short_path_check() {
        // the same 2-colouring checked with k=3 goes through the general search
        let c4 = Graph::cycle(4);
        let c = colouring(&c4, 3, &[0, 1, 1, 0]);
        assert!(verify_rainbow(&c4, &c).unwrap().connected);
    }

    #[test]
    fn partial_colouring_is_a_contract_error() {
        let k3 = Graph::complete(3);
        let c = EdgeColouring {
            k: 1,
            colours: vec![0, 0],
        };
        assert!(matches!(verify_rainbow(&k3, &c), Err(Error::Contract(_))));
    }

    #[test]
    fn too_many_colours_is_a_capacity_error() {
        let p = Graph::path(23);
        let err = verify_rainbow(&p, &EdgeColouring::all_distinct(&p)).unwrap_err();
        assert!(err.is_capacity());
        assert!(
            verify_rainbow_with_budget(&p, &EdgeColouring::all_distinct(&p), 30)
                .unwrap()
                .connected
        );
    }

    #[test]
    fn rainbow_path_examples() {
        let c4 = Graph::cycle(4);
        let c = colouring(&c4, 2, &[0, 1, 1, 0]);
        let p = rainbow_path(&c4, &c, 0, 1).unwrap().unwrap();
        assert_eq!(p.vertices, vec![0, 1]);
        let p = rainbow_path(&c4, &c, 0, 2).unwrap().unwrap();
        assert_eq!(p.vertices, vec![0, 1, 2]);
        let mut cols = p.colours(&c);
        cols.sort_unstable();
        assert_eq!(cols, vec![0, 1]);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(rc_lower_bound(&Graph::cycle(6)).unwrap(), 3);
        assert_eq!(rc_lower_bound(&Graph::path(5)).unwrap(), 4);
        let g = Graph::new(7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5), (0, 6)]).unwrap();
        assert_eq!(rc_lower_bound(&g).unwrap(), 4);
        assert_eq!(rc_lower_bound(&Graph::complete(2)).unwrap(), 1);
        assert_eq!(rc_lower_bound(&Graph::complete(5)).unwrap(), 1);
        assert!(matches!(
            rc_lower_bound(&Graph::empty(2)),
            Err(Error::Disconnected)
        ));
    }
}
