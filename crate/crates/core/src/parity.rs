//! Backtracking search for "at least one pair differs" constraints.
//!
//! Each clause is a disjunction of terms `x_a != x_b` over boolean
//! variables. Two-colour rainbow colouring, bipartite rainbow colouring and
//! biclique cover by bipartitioning all reduce to this shape: a pair of
//! vertices needs one common neighbour whose two edges differ, an edge of
//! the base graph needs one set whose bipartition separates its endpoints.
//!
//! Relations between variables live in a union-find with parity: each
//! variable stores its parity relative to its parent, and a dedicated node
//! stands for the constant `false`. A clause whose terms are all decided
//! false except one forces that last term (unit propagation); branching
//! decides one term true or false. Unions are undone on backtrack, so there
//! is no path compression.

use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

type Term = (u32, u32);

#[derive(Clone, Debug, Default)]
pub struct DisequalityProblem {
    num_vars: usize,
    clauses: Vec<Vec<Term>>,
    fixed: Vec<(u32, bool)>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum TermState {
    Differ,
    Equal,
    Open,
}

struct ParityUnionFind {
    parent: Vec<u32>,
    parity: Vec<u8>,
    size: Vec<u32>,
    trail: Vec<u32>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n as u32).collect(),
            parity: vec![0; n],
            size: vec![1; n],
            trail: Vec::new(),
        }
    }

    fn find(&self, mut x: u32) -> (u32, u8) {
        let mut p = 0;
        while self.parent[x as usize] != x {
            p ^= self.parity[x as usize];
            x = self.parent[x as usize];
        }
        (x, p)
    }

    fn relation(&self, a: u32, b: u32) -> Option<u8> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        (ra == rb).then_some(pa ^ pb)
    }

    /// Imposes `x_a xor x_b = diff`; `false` on contradiction.
    fn union(&mut self, a: u32, b: u32, diff: u8) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == diff;
        }
        let (child, root) = if self.size[ra as usize] < self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child as usize] = root;
        self.parity[child as usize] = pa ^ pb ^ diff;
        self.size[root as usize] += self.size[child as usize];
        self.trail.push(child);
        true
    }

    fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let child = self.trail.pop().unwrap();
            let root = self.parent[child as usize];
            self.size[root as usize] -= self.size[child as usize];
            self.parent[child as usize] = child;
            self.parity[child as usize] = 0;
        }
    }
}

impl DisequalityProblem {
    pub fn new(num_vars: usize) -> Self {
        DisequalityProblem {
            num_vars,
            ..Default::default()
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<(u32, u32)>] {
        &self.clauses
    }

    /// Adds the clause `OR_i (x_{a_i} != x_{b_i})`. Terms with `a == b` can
    /// never hold and are dropped; an empty clause makes the problem
    /// unsatisfiable.
    pub fn add_clause(&mut self, terms: impl IntoIterator<Item = (usize, usize)>) {
        let clause: Vec<Term> = terms
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| {
                assert!(a < self.num_vars && b < self.num_vars);
                (a as u32, b as u32)
            })
            .collect();
        self.clauses.push(clause);
    }

    /// Pins a variable; used for symmetry breaking.
    pub fn fix(&mut self, var: usize, value: bool) {
        assert!(var < self.num_vars);
        self.fixed.push((var as u32, value));
    }

    fn zero(&self) -> u32 {
        self.num_vars as u32
    }

    fn fresh_state(&self) -> Option<ParityUnionFind> {
        let mut uf = ParityUnionFind::new(self.num_vars + 1);
        for &(v, val) in &self.fixed {
            if !uf.union(v, self.zero(), val as u8) {
                return None;
            }
        }
        Some(uf)
    }

    fn term_state(uf: &ParityUnionFind, (a, b): Term) -> TermState {
        match uf.relation(a, b) {
            Some(1) => TermState::Differ,
            Some(_) => TermState::Equal,
            None => TermState::Open,
        }
    }

    /// Unit propagation to a fixpoint. `Err(())` on conflict; otherwise the
    /// index of the open clause with the fewest open terms, if any.
    fn propagate(&self, uf: &mut ParityUnionFind) -> std::result::Result<Option<usize>, ()> {
        loop {
            let mut changed = false;
            let mut pick: Option<(usize, usize)> = None;
            for (ci, clause) in self.clauses.iter().enumerate() {
                let mut open = 0;
                let mut last_open = None;
                let mut satisfied = false;
                for &t in clause {
                    match Self::term_state(uf, t) {
                        TermState::Differ => {
                            satisfied = true;
                            break;
                        }
                        TermState::Open => {
                            open += 1;
                            last_open = Some(t);
                        }
                        TermState::Equal => {}
                    }
                }
                if satisfied {
                    continue;
                }
                match open {
                    0 => return Err(()),
                    1 => {
                        let (a, b) = last_open.unwrap();
                        if !uf.union(a, b, 1) {
                            return Err(());
                        }
                        changed = true;
                    }
                    _ => {
                        if pick.is_none_or(|(_, best)| open < best) {
                            pick = Some((ci, open));
                        }
                    }
                }
            }
            if !changed {
                return Ok(pick.map(|(ci, _)| ci));
            }
        }
    }

    fn search(&self, uf: &mut ParityUnionFind, nodes: &mut u64, budget: u64) -> Result<bool> {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::Capacity {
                what: "search nodes",
                value: *nodes,
                limit: budget,
            });
        }
        let branch_clause = match self.propagate(uf) {
            Err(()) => return Ok(false),
            Ok(None) => return Ok(true),
            Ok(Some(ci)) => ci,
        };
        let (a, b) = *self.clauses[branch_clause]
            .iter()
            .find(|&&t| Self::term_state(uf, t) == TermState::Open)
            .unwrap();
        for diff in [1u8, 0u8] {
            let mark = uf.trail.len();
            if uf.union(a, b, diff) && self.search(uf, nodes, budget)? {
                return Ok(true);
            }
            uf.rollback(mark);
        }
        Ok(false)
    }

    fn read_assignment(&self, uf: &ParityUnionFind) -> Vec<bool> {
        let (zero_root, zero_parity) = uf.find(self.zero());
        (0..self.num_vars as u32)
            .map(|v| {
                let (r, p) = uf.find(v);
                if r == zero_root {
                    p ^ zero_parity == 1
                } else {
                    p == 1
                }
            })
            .collect()
    }

    /// Finds an assignment satisfying every clause and fixed variable.
    /// `Ok(None)` means none exists; running out of `budget` search nodes is
    /// a capacity error.
    pub fn solve(&self, budget: u64) -> Result<Option<Vec<bool>>> {
        let Some(mut uf) = self.fresh_state() else {
            return Ok(None);
        };
        let mut nodes = 0;
        if self.search(&mut uf, &mut nodes, budget)? {
            let assignment = self.read_assignment(&uf);
            debug_assert!(self.is_satisfied_by(&assignment));
            Ok(Some(assignment))
        } else {
            Ok(None)
        }
    }

    /// Relations forced before any branching, as `(a, b, x_a xor x_b)`
    /// with `b == num_vars` standing for the constant `false`. `None` when
    /// propagation alone refutes the problem.
    pub fn root_implications(&self) -> Option<Vec<(usize, usize, bool)>> {
        let mut uf = self.fresh_state()?;
        self.propagate(&mut uf).ok()?;
        let zero = self.zero();
        let mut out = Vec::new();
        for v in 0..self.num_vars as u32 {
            if let Some(p) = uf.relation(v, zero) {
                out.push((v as usize, zero as usize, p == 1));
            }
            let (root, p) = uf.find(v);
            if root != v && root != zero {
                out.push((v as usize, root as usize, p == 1));
            }
        }
        Some(out)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.fixed
            .iter()
            .all(|&(v, val)| assignment[v as usize] == val)
            && self.clauses.iter().all(|clause| {
                clause
                    .iter()
                    .any(|&(a, b)| assignment[a as usize] != assignment[b as usize])
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force(p: &DisequalityProblem) -> Option<Vec<bool>> {
        (0u32..1 << p.num_vars())
            .map(|m| {
                (0..p.num_vars())
                    .map(|i| m >> i & 1 == 1)
                    .collect::<Vec<_>>()
            })
            .find(|a| p.is_satisfied_by(a))
    }

    #[test]
    fn single_forced_difference() {
        let mut p = DisequalityProblem::new(2);
        p.add_clause([(0, 1)]);
        let a = p.solve(100).unwrap().unwrap();
        assert_ne!(a[0], a[1]);
    }

    #[test]
    fn odd_cycle_of_differences_is_unsat() {
        let mut p = DisequalityProblem::new(3);
        p.add_clause([(0, 1)]);
        p.add_clause([(1, 2)]);
        p.add_clause([(0, 2)]);
        assert_eq!(p.solve(100).unwrap(), None);
    }

    #[test]
    fn empty_clause_is_unsat() {
        let mut p = DisequalityProblem::new(1);
        p.add_clause([(0, 0)]);
        assert_eq!(p.solve(100).unwrap(), None);
    }

    #[test]
    fn budget_exhaustion_is_capacity() {
        // pigeonhole-like: many clauses, tiny budget
        let mut p = DisequalityProblem::new(6);
        for a in 0..6 {
            for b in a + 1..6 {
                p.add_clause([(a, b), (b, (a + 2) % 6)]);
            }
        }
        assert!(p.solve(1).unwrap_err().is_capacity());
    }

    fn arb_problem() -> impl Strategy<Value = DisequalityProblem> {
        (2usize..8).prop_flat_map(|n| {
            let term = (0..n, 0..n);
            let clause = proptest::collection::vec(term, 1..4);
            (
                Just(n),
                proptest::collection::vec(clause, 0..10),
                any::<bool>(),
            )
                .prop_map(|(n, clauses, pin)| {
                    let mut p = DisequalityProblem::new(n);
                    for c in clauses {
                        p.add_clause(c);
                    }
                    if pin {
                        p.fix(0, false);
                    }
                    p
                })
        })
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(p in arb_problem()) {
            let fast = p.solve(DEFAULT_NODE_BUDGET).unwrap();
            let slow = brute_force(&p);
            prop_assert_eq!(fast.is_some(), slow.is_some());
            if let Some(a) = fast {
                prop_assert!(p.is_satisfied_by(&a));
            }
        }

        #[test]
        fn root_implications_hold_in_every_solution(p in arb_problem()) {
            if let Some(forced) = p.root_implications() {
                let n = p.num_vars();
                let all: Vec<Vec<bool>> = (0u32..1 << n)
                    .map(|m| (0..n).map(|i| m >> i & 1 == 1).collect())
                    .filter(|a: &Vec<bool>| p.is_satisfied_by(a))
                    .collect();
                if !all.is_empty() {
                    let val = |a: &Vec<bool>, v: usize| if v == n { false } else { a[v] };
                    prop_assert!(all.iter().all(|a| forced
                        .iter()
                        .all(|&(x, y, d)| (val(a, x) != val(a, y)) == d)));
                }
            }
        }
    }
}
