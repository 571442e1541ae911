//! Biclique cover by bipartitioning: pick a proper subset `X(T)` of every
//! family set `T` so that the bicliques `(X(T), T \ X(T))` cover every edge
//! of the base graph.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parity::DisequalityProblem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BccInstance {
    pub base: Graph,
    /// Family sets, each sorted without repeats.
    pub family: Vec<Vec<usize>>,
}

impl BccInstance {
    pub fn new(base: Graph, family: Vec<Vec<usize>>) -> Result<Self> {
        let n = base.vertex_count();
        let mut sets = Vec::with_capacity(family.len());
        for (i, mut t) in family.into_iter().enumerate() {
            t.sort_unstable();
            let before = t.len();
            t.dedup();
            if t.len() != before {
                return Err(Error::contract(format!("set {i} repeats a vertex")));
            }
            if let Some(&v) = t.iter().find(|&&v| v >= n) {
                return Err(Error::contract(format!(
                    "set {i} contains vertex {v}, but the base graph has {n} vertices"
                )));
            }
            sets.push(t);
        }
        Ok(BccInstance { base, family: sets })
    }

    /// Indices of the family sets containing both `u` and `v`.
    pub fn sets_containing(&self, u: usize, v: usize) -> Vec<usize> {
        self.family
            .iter()
            .enumerate()
            .filter(|(_, t)| t.binary_search(&u).is_ok() && t.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn total_set_size(&self) -> usize {
        self.family.iter().map(Vec::len).sum()
    }
}

/// `x_of[i]` is `X(T_i)`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartitioning {
    pub x_of: Vec<Vec<usize>>,
}

impl Bipartitioning {
    pub fn new(mut x_of: Vec<Vec<usize>>) -> Self {
        for x in &mut x_of {
            x.sort_unstable();
            x.dedup();
        }
        Bipartitioning { x_of }
    }

    pub fn contains(&self, set: usize, v: usize) -> bool {
        self.x_of[set].binary_search(&v).is_ok()
    }

    /// Replaces `X(T_set)` by `T_set \ X(T_set)`.
    pub fn complement(&mut self, inst: &BccInstance, set: usize) {
        let x = &self.x_of[set];
        self.x_of[set] = inst.family[set]
            .iter()
            .copied()
            .filter(|v| x.binary_search(v).is_err())
            .collect();
    }
}

fn check_shape(inst: &BccInstance, x: &Bipartitioning) -> Result<()> {
    if x.x_of.len() != inst.family.len() {
        return Err(Error::contract(format!(
            "bipartitioning has {} sets, the family has {}",
            x.x_of.len(),
            inst.family.len()
        )));
    }
    for (i, (xs, t)) in x.x_of.iter().zip(&inst.family).enumerate() {
        if let Some(v) = xs.iter().find(|v| t.binary_search(v).is_err()) {
            return Err(Error::contract(format!(
                "X of set {i} contains {v}, which is not in the set"
            )));
        }
        if !t.is_empty() && xs.len() == t.len() {
            return Err(Error::contract(format!(
                "X of set {i} is the whole set, not a proper subset"
            )));
        }
    }
    Ok(())
}

/// Whether `x` covers every base edge; the uncovered edges otherwise.
pub fn verify_bipartition(
    inst: &BccInstance,
    x: &Bipartitioning,
) -> Result<(bool, Vec<(usize, usize)>)> {
    check_shape(inst, x)?;
    let uncovered: Vec<(usize, usize)> = inst
        .base
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            !inst
                .sets_containing(u, v)
                .into_iter()
                .any(|s| x.contains(s, u) != x.contains(s, v))
        })
        .collect();
    Ok((uncovered.is_empty(), uncovered))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coverage {
    /// Edges whose endpoints share exactly one family set.
    pub unique: BTreeMap<(usize, usize), usize>,
    /// Edges whose endpoints share no family set; any one makes the
    /// instance a no.
    pub uncoverable: Vec<(usize, usize)>,
}

pub fn uniquely_coverable(inst: &BccInstance) -> Coverage {
    let mut cov = Coverage::default();
    for &(u, v) in inst.base.edges() {
        match inst.sets_containing(u, v)[..] {
            [] => cov.uncoverable.push((u, v)),
            [s] => {
                cov.unique.insert((u, v), s);
            }
            _ => {}
        }
    }
    cov
}

/// Searches for a covering bipartitioning.
///
/// Each pair (set, member) is a boolean "in X" variable and each edge asks
/// for one shared set whose variables differ. Uniquely coverable edges are
/// unit clauses and are propagated before any branching. The first member
/// of every set is pinned into `X`, since complementing `X(T)` changes
/// nothing about what the biclique covers.
pub fn solve_bcc(inst: &BccInstance, budget: u64) -> Result<Option<Bipartitioning>> {
    let (problem, offsets) = encode(inst);
    let Some(bits) = problem.solve(budget)? else {
        return Ok(None);
    };
    let mut x_of: Vec<Vec<usize>> = inst
        .family
        .iter()
        .zip(&offsets)
        .map(|(t, &off)| {
            t.iter()
                .enumerate()
                .filter(|&(i, _)| bits[off + i])
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    for (x, t) in x_of.iter_mut().zip(&inst.family) {
        // a set entirely on one side covers nothing
        if x.len() == t.len() {
            x.clear();
        }
    }
    Ok(Some(Bipartitioning { x_of }))
}

/// `((set, u), (set, v), differ)`.
pub type SideRelation = ((usize, usize), (usize, usize), bool);

/// Relations between "in X" variables forced by propagation alone, as
/// `((set, u), (set, v), differ)`; `None` when propagation refutes the
/// instance. Sides are relative to the first member of each set, which
/// counts as being in `X`.
pub fn forced_sides(inst: &BccInstance) -> Option<Vec<SideRelation>> {
    let (problem, offsets) = encode(inst);
    let locate = |var: usize| -> (usize, usize) {
        let s = offsets.partition_point(|&o| o <= var) - 1;
        (s, inst.family[s][var - offsets[s]])
    };
    let zero = problem.num_vars();
    Some(
        problem
            .root_implications()?
            .into_iter()
            .filter(|&(_, b, _)| b != zero)
            .map(|(a, b, d)| (locate(a), locate(b), d))
            .collect(),
    )
}

fn encode(inst: &BccInstance) -> (DisequalityProblem, Vec<usize>) {
    let mut offsets = Vec::with_capacity(inst.family.len());
    let mut total = 0;
    for t in &inst.family {
        offsets.push(total);
        total += t.len();
    }
    let var = |s: usize, v: usize| offsets[s] + inst.family[s].binary_search(&v).unwrap();
    let mut problem = DisequalityProblem::new(total);
    for &(u, v) in inst.base.edges() {
        problem.add_clause(
            inst.sets_containing(u, v)
                .into_iter()
                .map(|s| (var(s, u), var(s, v))),
        );
    }
    for (s, t) in inst.family.iter().enumerate() {
        if !t.is_empty() {
            problem.fix(offsets[s], true);
        }
    }
    (problem, offsets)
}
