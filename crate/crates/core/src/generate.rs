//! Seeded instance generators. The same seed always yields the same
//! instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduction::CnfFormula;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    G111,
    G400,
    G310,
    G2200,
    G220,
    G220z,
}

impl SpecialKind {
    /// Pendant counts on `x0, x1, x2`.
    fn pendants(self) -> &'static [usize] {
        match self {
            SpecialKind::G111 => &[1, 1, 1],
            SpecialKind::G400 => &[4],
            SpecialKind::G310 => &[3, 1],
            SpecialKind::G2200 | SpecialKind::G220 | SpecialKind::G220z => &[2, 2],
        }
    }

    fn min_clique(self) -> usize {
        if self == SpecialKind::G2200 {
            4
        } else {
            3
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A clique on `0..clique` carrying the configuration's pendants on its
/// first vertices, plus `extra` independent vertices of degree at least 2.
/// Extra vertices never see the whole clique, so the clique stays maximal;
/// for `G220` they also avoid `{0, 1}` so that no common neighbour of the
/// two pendant-bearing vertices appears, and `G220z` adds one.
pub fn special_graph(kind: SpecialKind, clique: usize, extra: usize, seed: u64) -> Result<Graph> {
    let (lo, hi) = match kind {
        SpecialKind::G220 | SpecialKind::G220z => (3, 3),
        _ => (kind.min_clique(), usize::MAX),
    };
    if clique < lo || clique > hi {
        return Err(Error::contract(format!(
            "{kind:?} needs a clique of size {}",
            if lo == hi {
                lo.to_string()
            } else {
                format!("at least {lo}")
            }
        )));
    }
    let mut r = rng(seed);
    let mut edges: Vec<(usize, usize)> = (0..clique)
        .flat_map(|u| (u + 1..clique).map(move |v| (u, v)))
        .collect();
    let mut next = clique;
    for (x, &count) in kind.pendants().iter().enumerate() {
        for _ in 0..count {
            edges.push((x, next));
            next += 1;
        }
    }
    if kind == SpecialKind::G220z {
        edges.extend([(0, next), (1, next)]);
        next += 1;
    }
    let all: Vec<usize> = (0..clique).collect();
    for _ in 0..extra {
        let nb: Vec<usize> = if kind == SpecialKind::G220 {
            vec![r.gen_range(0..2), 2]
        } else {
            let size = r.gen_range(2..clique);
            all.choose_multiple(&mut r, size).copied().collect()
        };
        edges.extend(nb.into_iter().map(|x| (x, next)));
        next += 1;
    }
    Graph::new(next, edges)
}

/// Random connected split graph: a clique on `0..clique` and `indep`
/// independent vertices, each a pendant with probability `pendant_prob`
/// and otherwise joined to between 2 and `clique - 1` clique vertices.
pub fn random_split(clique: usize, indep: usize, pendant_prob: f64, seed: u64) -> Result<Graph> {
    if clique == 0 || !(0.0..=1.0).contains(&pendant_prob) {
        return Err(Error::contract(
            "need a non-empty clique and a probability in [0, 1]",
        ));
    }
    let mut r = rng(seed);
    let mut edges: Vec<(usize, usize)> = (0..clique)
        .flat_map(|u| (u + 1..clique).map(move |v| (u, v)))
        .collect();
    let all: Vec<usize> = (0..clique).collect();
    for w in clique..clique + indep {
        let size = if clique < 3 || r.gen_bool(pendant_prob) {
            1
        } else {
            r.gen_range(2..clique)
        };
        edges.extend(all.choose_multiple(&mut r, size).map(|&x| (x, w)));
    }
    Graph::new(clique + indep, edges)
}

/// Random connected threshold graph on `n` vertices: vertices arrive one
/// by one as isolated or dominating, and the last one dominates.
pub fn random_threshold(n: usize, dominate_prob: f64, seed: u64) -> Result<Graph> {
    if n == 0 || !(0.0..=1.0).contains(&dominate_prob) {
        return Err(Error::contract("need n >= 1 and a probability in [0, 1]"));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        if v == n - 1 || r.gen_bool(dominate_prob) {
            edges.extend((0..v).map(|u| (u, v)));
        }
    }
    Graph::new(n, edges)
}

/// Random formula with `m` clauses, each on three distinct variables with
/// random signs.
pub fn random_3cnf(n: usize, m: usize, seed: u64) -> Result<CnfFormula> {
    if n < 3 {
        return Err(Error::contract("need at least three variables"));
    }
    let mut r = rng(seed);
    let vars: Vec<i32> = (1..=n as i32).collect();
    let clauses = (0..m)
        .map(|_| {
            let mut c = [0i32; 3];
            for (slot, &v) in c.iter_mut().zip(vars.choose_multiple(&mut r, 3)) {
                *slot = if r.gen_bool(0.5) { v } else { -v };
            }
            c
        })
        .collect();
    CnfFormula::new(n, clauses)
}
