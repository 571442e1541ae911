//! Exact rainbow connection numbers for small graphs.
//!
//! `rc_exact` enumerates colourings in canonical order (each edge takes a
//! colour at most one above the largest colour used so far) with bridges
//! placed first, since bridges must all carry distinct colours. Every
//! non-adjacent pair keeps the list of its simple paths short enough to be
//! rainbow; after each assignment the pairs touching that edge are checked
//! for a path whose assigned colours are still distinct, and the branch is
//! cut when some pair has none left.

use crate::error::{Error, Result};
use crate::graph::{bridges, is_connected, Graph};
use crate::parity::{DisequalityProblem, DEFAULT_NODE_BUDGET};
use crate::rainbow::{rc_lower_bound, EdgeColouring};

pub const DEFAULT_EDGE_LIMIT: usize = 15;
const PATH_LIMIT: usize = 2_000_000;
const UNSET: u32 = u32::MAX;

fn check_edge_limit(g: &Graph, edge_limit: usize) -> Result<()> {
    if g.edge_count() > edge_limit {
        return Err(Error::Capacity {
            what: "edge count for exhaustive search",
            value: g.edge_count() as u64,
            limit: edge_limit as u64,
        });
    }
    Ok(())
}

/// Minimum number of colours of a rainbow colouring, with a witness.
pub fn rc_exact(g: &Graph, edge_limit: usize) -> Result<(usize, EdgeColouring)> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    check_edge_limit(g, edge_limit)?;
    let lower = rc_lower_bound(g)?;
    let upper = lower.max(g.vertex_count().saturating_sub(1)).max(1);
    for k in lower..=upper {
        if let Some(c) = search_with_k(g, k)? {
            return Ok((k, c));
        }
    }
    unreachable!("a spanning tree with distinct colours is always a rainbow colouring")
}

/// Rainbow colouring with at most `k` colours, if one exists.
pub fn rainbow_colouring_with_k(
    g: &Graph,
    k: usize,
    edge_limit: usize,
) -> Result<Option<EdgeColouring>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    check_edge_limit(g, edge_limit)?;
    search_with_k(g, k)
}

struct CanonicalSearch<'a> {
    k: u32,
    order: Vec<usize>,
    bridge_count: usize,
    /// per pair, its candidate paths as edge-id lists
    pair_paths: Vec<Vec<Vec<usize>>>,
    pairs_of_edge: Vec<Vec<usize>>,
    colour: Vec<u32>,
    g: &'a Graph,
}

fn search_with_k(g: &Graph, k: usize) -> Result<Option<EdgeColouring>> {
    if k == 0 {
        return Ok((g.vertex_count() <= 1).then(|| EdgeColouring::uniform(g, 1, 0)));
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let bridge_ids: Vec<usize> = bridges(g)
        .into_iter()
        .map(|(u, v)| g.edge_index(u, v).unwrap())
        .collect();
    if bridge_ids.len() > k {
        return Ok(None);
    }

    let mut pair_paths = Vec::new();
    let mut pairs_of_edge = vec![Vec::new(); m];
    let mut total = 0usize;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let paths = simple_paths(g, u, v, k);
            if paths.is_empty() {
                return Ok(None);
            }
            total += paths.len();
            if total > PATH_LIMIT {
                return Err(Error::Capacity {
                    what: "candidate paths",
                    value: total as u64,
                    limit: PATH_LIMIT as u64,
                });
            }
            let idx = pair_paths.len();
            let mut touched: Vec<usize> = paths.iter().flatten().copied().collect();
            touched.sort_unstable();
            touched.dedup();
            for e in touched {
                pairs_of_edge[e].push(idx);
            }
            pair_paths.push(paths);
        }
    }

    let mut order = bridge_ids.clone();
    order.extend((0..m).filter(|e| !bridge_ids.contains(e)));
    let mut search = CanonicalSearch {
        k: k as u32,
        order,
        bridge_count: bridge_ids.len(),
        pair_paths,
        pairs_of_edge,
        colour: vec![UNSET; m],
        g,
    };
    if search.extend(0, None) {
        let colours = search.colour;
        Ok(Some(EdgeColouring::new(search.g, k, colours)?))
    } else {
        Ok(None)
    }
}

impl CanonicalSearch<'_> {
    fn pair_alive(&self, pair: usize) -> bool {
        self.pair_paths[pair].iter().any(|path| {
            let mut used = 0u64;
            path.iter().all(|&e| {
                let c = self.colour[e];
                if c == UNSET {
                    return true;
                }
                let bit = 1u64 << c;
                let fresh = used & bit == 0;
                used |= bit;
                fresh
            })
        })
    }

    fn extend(&mut self, pos: usize, max_used: Option<u32>) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let e = self.order[pos];
        let candidates: Vec<u32> = if pos < self.bridge_count {
            vec![pos as u32]
        } else {
            let top = max_used.map_or(0, |c| c + 1).min(self.k - 1);
            (0..=top).collect()
        };
        for c in candidates {
            self.colour[e] = c;
            let ok = self.pairs_of_edge[e].iter().all(|&p| self.pair_alive(p));
            if ok && self.extend(pos + 1, Some(max_used.map_or(c, |m| m.max(c)))) {
                return true;
            }
        }
        self.colour[e] = UNSET;
        false
    }
}

/// Simple `u`-`v` paths with at most `max_len` edges, as edge-id lists.
fn simple_paths(g: &Graph, u: usize, v: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn walk(
        g: &Graph,
        at: usize,
        target: usize,
        max_len: usize,
        on_path: &mut Vec<bool>,
        edges: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if at == target {
            out.push(edges.clone());
            return;
        }
        if edges.len() == max_len {
            return;
        }
        for &w in g.neighbours(at) {
            if on_path[w] {
                continue;
            }
            on_path[w] = true;
            edges.push(g.edge_index(at, w).unwrap());
            walk(g, w, target, max_len, on_path, edges, out);
            edges.pop();
            on_path[w] = false;
        }
    }
    let mut on_path = vec![false; g.vertex_count()];
    on_path[u] = true;
    let mut out = Vec::new();
    walk(g, u, v, max_len, &mut on_path, &mut Vec::new(), &mut out);
    out
}

/// Decides whether two colours suffice and returns such a colouring.
///
/// With two colours every rainbow path has at most two edges, so each
/// non-adjacent pair `(u, v)` needs a common neighbour `w` with
/// `colour(uw) != colour(wv)`. A pair without common neighbours answers
/// `None` immediately.
pub fn solve_rc2(g: &Graph) -> Result<Option<EdgeColouring>> {
    solve_rc2_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn solve_rc2_with_budget(g: &Graph, budget: u64) -> Result<Option<EdgeColouring>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut problem = DisequalityProblem::new(g.edge_count());
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let terms: Vec<(usize, usize)> = common_neighbours(g, u, v)
                .map(|w| (g.edge_index(u, w).unwrap(), g.edge_index(w, v).unwrap()))
                .collect();
            if terms.is_empty() {
                return Ok(None);
            }
            problem.add_clause(terms);
        }
    }
    if g.edge_count() > 0 {
        // swapping the two colours maps solutions to solutions
        problem.fix(0, false);
    }
    Ok(problem.solve(budget)?.map(|bits| {
        let colours = bits.into_iter().map(u32::from).collect();
        EdgeColouring::new(g, 2, colours).expect("one colour per edge")
    }))
}

pub(crate) fn common_neighbours<'a>(
    g: &'a Graph,
    u: usize,
    v: usize,
) -> impl Iterator<Item = usize> + 'a {
    let nv = g.neighbours(v);
    g.neighbours(u)
        .iter()
        .copied()
        .filter(move |w| nv.binary_search(w).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::verify_rainbow;

    #[test]
    fn small_closed_forms() {
        assert_eq!(rc_exact(&Graph::complete(4), 15).unwrap().0, 1);
        assert_eq!(rc_exact(&Graph::cycle(6), 15).unwrap().0, 3);
        assert_eq!(rc_exact(&Graph::star(4), 15).unwrap().0, 4);
        assert_eq!(rc_exact(&Graph::path(6), 15).unwrap().0, 5);
        assert_eq!(rc_exact(&Graph::complete(1), 15).unwrap().0, 1);
    }

    #[test]
    fn g220_needs_five_colours() {
        // triangle x0 x1 x2, pendants y0 y1 on x0, y2 y3 on x1
        let g = Graph::new(7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 5), (1, 6)]).unwrap();
        let (rc, witness) = rc_exact(&g, 15).unwrap();
        assert_eq!(rc, 5);
        assert!(verify_rainbow(&g, &witness).unwrap().connected);
    }

    #[test]
    fn witness_is_rainbow() {
        let g = Graph::cycle(7);
        let (rc, c) = rc_exact(&g, 15).unwrap();
        assert_eq!(rc, 4);
        assert!(verify_rainbow(&g, &c).unwrap().connected);
        assert!(c.used_colours() <= rc);
    }

    #[test]
    fn edge_limit_is_capacity() {
        let err = rc_exact(&Graph::complete(7), 15).unwrap_err();
        assert!(err.is_capacity());
    }

    #[test]
    fn rc2_examples() {
        assert!(solve_rc2(&Graph::star(3)).unwrap().is_none());
        let c4 = Graph::cycle(4);
        let c = solve_rc2(&c4).unwrap().unwrap();
        assert!(verify_rainbow(&c4, &c).unwrap().connected);
        // K = {a, b}, I = {c, d}, both joined to a and b
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let c = solve_rc2(&g).unwrap().unwrap();
        assert!(verify_rainbow(&g, &c).unwrap().connected);
        assert_eq!(rc_exact(&g, 15).unwrap().0, 2);
        // diameter 3: no common neighbour for the end pair
        assert!(solve_rc2(&Graph::path(4)).unwrap().is_none());
    }
}
