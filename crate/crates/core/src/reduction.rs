//! Exact-3SAT to biclique cover by bipartitioning, and biclique cover by
//! bipartitioning to two-colour rainbow colouring of a split graph, with
//! certificates carried across in both directions.
//!
//! Red is colour 0 and blue is colour 1 throughout.

use crate::bcc::{verify_bipartition, BccInstance, Bipartitioning};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::{verify_rainbow, EdgeColouring};

pub const RED: u32 = 0;
pub const BLUE: u32 = 1;

/// A formula whose clauses have exactly three literals over three distinct
/// variables. Literals are signed 1-based variable indices, DIMACS style.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            if let Some(&l) = c
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > num_vars)
            {
                return Err(Error::contract(format!(
                    "clause {}: literal {l} is outside 1..={num_vars}",
                    j + 1
                )));
            }
            let (a, b, d) = (c[0].abs(), c[1].abs(), c[2].abs());
            if a == b || a == d || b == d {
                return Err(Error::contract(format!(
                    "clause {}: needs three distinct variables",
                    j + 1
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, eval: &SatAssignment) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| eval.literal(l)))
    }

    /// Brute force over all assignments; fine for a handful of variables.
    pub fn find_satisfying(&self) -> Option<SatAssignment> {
        assert!(self.num_vars < 31, "too many variables for brute force");
        (0u32..1 << self.num_vars)
            .map(|m| SatAssignment::new((0..self.num_vars).map(|i| m >> i & 1 == 1).collect()))
            .find(|a| self.is_satisfied_by(a))
    }
}

/// `values[i]` is the value of variable `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatAssignment {
    pub values: Vec<bool>,
}

impl SatAssignment {
    pub fn new(values: Vec<bool>) -> Self {
        SatAssignment { values }
    }

    pub fn literal(&self, lit: i32) -> bool {
        let v = self.values[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            v
        } else {
            !v
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VariableGadget {
    pub a: usize,
    pub f: usize,
    pub f1: usize,
    pub f2: usize,
    pub t: usize,
    pub t1: usize,
    pub t2: usize,
    /// Family indices of the positive and negative variable sets.
    pub sets: [usize; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClauseGadget {
    pub big_a: usize,
    pub big_f: usize,
    /// Family index of the set built on the k-th literal.
    pub sets: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatGadgetLabels {
    pub variables: Vec<VariableGadget>,
    pub clauses: Vec<ClauseGadget>,
}

impl SatGadgetLabels {
    /// The layout `sat_to_bcc` uses for `n` variables and `m` clauses.
    pub fn standard(n: usize, m: usize) -> Self {
        let variables = (0..n)
            .map(|i| {
                let b = 7 * i;
                VariableGadget {
                    a: b,
                    f: b + 1,
                    f1: b + 2,
                    f2: b + 3,
                    t: b + 4,
                    t1: b + 5,
                    t2: b + 6,
                    sets: [2 * i, 2 * i + 1],
                }
            })
            .collect();
        let clauses = (0..m)
            .map(|j| ClauseGadget {
                big_a: 7 * n + 2 * j,
                big_f: 7 * n + 2 * j + 1,
                sets: [2 * n + 3 * j, 2 * n + 3 * j + 1, 2 * n + 3 * j + 2],
            })
            .collect();
        SatGadgetLabels { variables, clauses }
    }

    fn check(&self, phi: &CnfFormula, inst: &BccInstance) -> Result<()> {
        let (n, m) = (phi.num_vars(), phi.clauses().len());
        if self.variables.len() != n || self.clauses.len() != m {
            return Err(Error::contract("labels do not match the formula"));
        }
        let sets = self
            .variables
            .iter()
            .flat_map(|g| g.sets)
            .chain(self.clauses.iter().flat_map(|c| c.sets));
        let verts = self
            .variables
            .iter()
            .flat_map(|g| [g.a, g.f, g.f1, g.f2, g.t, g.t1, g.t2])
            .chain(self.clauses.iter().flat_map(|c| [c.big_a, c.big_f]));
        if sets.clone().any(|s| s >= inst.family.len())
            || verts.clone().any(|v| v >= inst.base.vertex_count())
        {
            return Err(Error::contract("labels do not match the instance"));
        }
        Ok(())
    }
}

/// Builds the biclique-cover instance of an exact-3SAT formula.
pub fn sat_to_bcc(phi: &CnfFormula) -> (BccInstance, SatGadgetLabels) {
    let n = phi.num_vars();
    let m = phi.clauses().len();
    let labels = SatGadgetLabels::standard(n, m);
    let mut edges = Vec::with_capacity(8 * n + 10 * m);
    for g in &labels.variables {
        edges.extend([
            (g.a, g.f),
            (g.a, g.t),
            (g.f, g.t1),
            (g.f, g.t2),
            (g.t, g.f1),
            (g.t, g.f2),
            (g.f1, g.t1),
            (g.f2, g.t2),
        ]);
    }
    for (c, lits) in labels.clauses.iter().zip(phi.clauses()) {
        edges.push((c.big_a, c.big_f));
        for &l in lits {
            let g = &labels.variables[l.unsigned_abs() as usize - 1];
            edges.extend([(c.big_a, g.a), (c.big_a, g.t), (c.big_f, g.t)]);
        }
    }
    let base = Graph::new(7 * n + 2 * m, edges).expect("gadget edges are simple");

    let mut family = Vec::with_capacity(2 * n + 3 * m);
    for (i, g) in labels.variables.iter().enumerate() {
        for (sign, extra) in [(1, [g.f1, g.t1]), (-1, [g.f2, g.t2])] {
            let mut set = vec![g.a, g.f, g.t, extra[0], extra[1]];
            for (c, lits) in labels.clauses.iter().zip(phi.clauses()) {
                if lits.contains(&(sign * (i as i32 + 1))) {
                    set.push(c.big_a);
                }
            }
            family.push(set);
        }
    }
    for (c, lits) in labels.clauses.iter().zip(phi.clauses()) {
        for &l in lits {
            let g = &labels.variables[l.unsigned_abs() as usize - 1];
            family.push(vec![g.t, c.big_a, c.big_f]);
        }
    }
    let inst = BccInstance::new(base, family).expect("gadget sets are well formed");
    (inst, labels)
}

/// The bipartitioning read off a satisfying (or any total) assignment.
pub fn assignment_to_bipartition(
    phi: &CnfFormula,
    labels: &SatGadgetLabels,
    eval: &SatAssignment,
) -> Result<Bipartitioning> {
    if eval.values.len() != phi.num_vars() {
        return Err(Error::contract("assignment does not cover every variable"));
    }
    let total = labels.variables.len() * 2 + labels.clauses.len() * 3;
    let mut x_of = vec![Vec::new(); total];
    for (g, &val) in labels.variables.iter().zip(&eval.values) {
        let (pos, neg) = if val {
            (vec![g.a, g.t, g.t1], vec![g.a, g.f, g.f2])
        } else {
            (vec![g.a, g.f, g.f1], vec![g.a, g.t, g.t2])
        };
        x_of[g.sets[0]] = pos;
        x_of[g.sets[1]] = neg;
    }
    for (c, lits) in labels.clauses.iter().zip(phi.clauses()) {
        for (k, &l) in lits.iter().enumerate() {
            let t = labels.variables[l.unsigned_abs() as usize - 1].t;
            x_of[c.sets[k]] = if eval.literal(l) {
                vec![c.big_a, t]
            } else {
                vec![c.big_a, c.big_f]
            };
        }
    }
    Ok(Bipartitioning::new(x_of))
}

/// Complements `X(T)` wherever needed so that `a_i` lies in both variable
/// sets' `X` and `A_j` in every clause set's `X`. Idempotent.
pub fn normalize(
    inst: &BccInstance,
    labels: &SatGadgetLabels,
    x: &Bipartitioning,
) -> Bipartitioning {
    let mut out = x.clone();
    let anchors = labels
        .variables
        .iter()
        .flat_map(|g| g.sets.map(|s| (s, g.a)))
        .chain(
            labels
                .clauses
                .iter()
                .flat_map(|c| c.sets.map(|s| (s, c.big_a))),
        );
    for (s, anchor) in anchors {
        if !out.contains(s, anchor) {
            out.complement(inst, s);
        }
    }
    out
}

/// Reads an assignment from a covering bipartitioning; the result
/// satisfies the formula.
pub fn bipartition_to_assignment(
    phi: &CnfFormula,
    inst: &BccInstance,
    labels: &SatGadgetLabels,
    x: &Bipartitioning,
) -> Result<SatAssignment> {
    labels.check(phi, inst)?;
    let (ok, uncovered) = verify_bipartition(inst, x)?;
    if !ok {
        return Err(Error::contract(format!(
            "bipartitioning leaves {} edges uncovered, first {:?}",
            uncovered.len(),
            uncovered[0]
        )));
    }
    let x = normalize(inst, labels, x);
    let eval = SatAssignment::new(
        labels
            .variables
            .iter()
            .map(|g| x.contains(g.sets[0], g.t))
            .collect(),
    );
    if !phi.is_satisfied_by(&eval) {
        return Err(Error::contract(
            "lifted assignment does not satisfy the formula; instance and formula disagree",
        ));
    }
    Ok(eval)
}

/// Vertex ids of the split graph built from a biclique-cover instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rc2GadgetLabels {
    /// Clique-side copy of each base vertex.
    pub u_prime: Vec<usize>,
    /// One clique vertex per family set.
    pub s: Vec<usize>,
    /// One clique vertex per base non-edge `(v, w)`, `v < w`.
    pub x: Vec<((usize, usize), usize)>,
    /// Independent-side copy of each base vertex.
    pub u: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rc2Role {
    UPrime(usize),
    Set(usize),
    NonEdge(usize),
    U(usize),
}

impl Rc2GadgetLabels {
    pub fn standard(inst: &BccInstance) -> Self {
        let n = inst.base.vertex_count();
        let s = inst.family.len();
        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| (v + 1..n).map(move |w| (v, w)))
            .filter(|&(v, w)| !inst.base.has_edge(v, w))
            .collect();
        let ne = non_edges.len();
        Rc2GadgetLabels {
            u_prime: (0..n).collect(),
            s: (n..n + s).collect(),
            x: non_edges
                .into_iter()
                .enumerate()
                .map(|(i, e)| (e, n + s + i))
                .collect(),
            u: (n + s + ne..2 * n + s + ne).collect(),
        }
    }

    pub fn clique_side(&self) -> Vec<usize> {
        let mut a: Vec<usize> = self
            .u_prime
            .iter()
            .chain(&self.s)
            .copied()
            .chain(self.x.iter().map(|&(_, id)| id))
            .collect();
        a.sort_unstable();
        a
    }

    pub fn vertex_count(&self) -> usize {
        self.u_prime.len() + self.s.len() + self.x.len() + self.u.len()
    }

    /// Role of every vertex id, indexed by id.
    pub fn roles(&self) -> Vec<Option<Rc2Role>> {
        let mut table = vec![None; self.vertex_count()];
        let mut put = |id: usize, r: Rc2Role| {
            if id >= table.len() {
                table.resize(id + 1, None);
            }
            table[id] = Some(r);
        };
        for (i, &id) in self.u_prime.iter().enumerate() {
            put(id, Rc2Role::UPrime(i));
        }
        for (i, &id) in self.s.iter().enumerate() {
            put(id, Rc2Role::Set(i));
        }
        for (i, &(_, id)) in self.x.iter().enumerate() {
            put(id, Rc2Role::NonEdge(i));
        }
        for (i, &id) in self.u.iter().enumerate() {
            put(id, Rc2Role::U(i));
        }
        table
    }

    pub(crate) fn check(&self, inst: &BccInstance, g: &Graph) -> Result<()> {
        if self.u.len() != inst.base.vertex_count()
            || self.u_prime.len() != inst.base.vertex_count()
            || self.s.len() != inst.family.len()
            || self.vertex_count() != g.vertex_count()
        {
            return Err(Error::contract("labels do not match the instance or graph"));
        }
        Ok(())
    }
}

/// The split graph whose 2-colourability is equivalent to the instance.
pub fn bcc_to_rc2(inst: &BccInstance) -> (Graph, Rc2GadgetLabels) {
    let labels = Rc2GadgetLabels::standard(inst);
    let clique = labels.clique_side();
    let mut edges = Vec::new();
    for (i, &a) in clique.iter().enumerate() {
        for &b in &clique[i + 1..] {
            edges.push((a, b));
        }
    }
    for (v, &uv) in labels.u.iter().enumerate() {
        edges.push((uv, labels.u_prime[v]));
    }
    for (t, set) in inst.family.iter().enumerate() {
        for &v in set {
            edges.push((labels.u[v], labels.s[t]));
        }
    }
    for &((v, w), xe) in &labels.x {
        edges.push((labels.u[v], xe));
        edges.push((labels.u[w], xe));
    }
    let g = Graph::new(labels.vertex_count(), edges).expect("gadget edges are simple");
    (g, labels)
}

/// The 2-colouring of the split graph induced by a covering bipartitioning.
pub fn bipartition_to_colouring(
    inst: &BccInstance,
    labels: &Rc2GadgetLabels,
    g: &Graph,
    x: &Bipartitioning,
) -> Result<EdgeColouring> {
    labels.check(inst, g)?;
    let (ok, uncovered) = verify_bipartition(inst, x)?;
    if !ok {
        return Err(Error::contract(format!(
            "bipartitioning leaves edge {:?} uncovered",
            uncovered[0]
        )));
    }
    let roles = labels.roles();
    let mut colours = Vec::with_capacity(g.edge_count());
    for &(p, q) in g.edges() {
        let (rp, rq) = (roles[p].unwrap(), roles[q].unwrap());
        let (b, other) = match (rp, rq) {
            (Rc2Role::U(v), r) | (r, Rc2Role::U(v)) => (v, r),
            _ => {
                colours.push(BLUE);
                continue;
            }
        };
        let c = match other {
            Rc2Role::UPrime(_) => RED,
            Rc2Role::Set(t) => {
                if x.contains(t, b) {
                    BLUE
                } else {
                    RED
                }
            }
            Rc2Role::NonEdge(i) => {
                if labels.x[i].0 .0 == b {
                    RED
                } else {
                    BLUE
                }
            }
            Rc2Role::U(_) => return Err(Error::contract("edge inside the independent side")),
        };
        colours.push(c);
    }
    EdgeColouring::new(g, 2, colours)
}

/// Reads a covering bipartitioning off a rainbow 2-colouring of the split
/// graph: `v` joins `X(T)` when the edge `u_v s_T` is blue.
pub fn colouring_to_bipartition(
    inst: &BccInstance,
    labels: &Rc2GadgetLabels,
    g: &Graph,
    col: &EdgeColouring,
) -> Result<Bipartitioning> {
    labels.check(inst, g)?;
    col.check_against(g)?;
    if col.colours().iter().any(|&c| c > BLUE) {
        return Err(Error::contract("colouring uses more than two colours"));
    }
    let report = verify_rainbow(g, col)?;
    if !report.connected {
        return Err(Error::contract(format!(
            "colouring is not rainbow connected: pair {:?}",
            report.failing_pair.unwrap()
        )));
    }
    let mut x = Bipartitioning::new(
        inst.family
            .iter()
            .enumerate()
            .map(|(t, set)| {
                set.iter()
                    .copied()
                    .filter(|&v| col.colour_between(g, labels.u[v], labels.s[t]) == Some(BLUE))
                    .collect()
            })
            .collect(),
    );
    for t in 0..inst.family.len() {
        if !inst.family[t].is_empty() && x.x_of[t].len() == inst.family[t].len() {
            x.complement(inst, t);
        }
    }
    let (ok, _) = verify_bipartition(inst, &x)?;
    debug_assert!(ok, "a rainbow 2-colouring always yields a cover");
    if !ok {
        return Err(Error::contract(
            "extracted bipartitioning does not cover the graph",
        ));
    }
    Ok(x)
}
