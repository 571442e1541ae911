//! Three views of the bipartite two-colour rainbow problem (cross-edge
//! colourings, partially fixed 0/1 matrices, half-unit box packings) and
//! the Kraft test for threshold graphs.
//!
//! Lengths in packings are counted in half units, so a side is 1 (half) or
//! 2 (whole) and the cube is `[0, 2]^n`.

use crate::error::{Error, Result};
use crate::graph::{is_connected, is_threshold, recognize_split, Graph};
use crate::parity::DisequalityProblem;
use crate::reduction::{Rc2GadgetLabels, Rc2Role, BLUE, RED};

/// Bipartite graph with parts `A = 0..n_a` and `B = 0..n_b`; edges are
/// `(a, b)` pairs, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteInstance {
    pub n_a: usize,
    pub n_b: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteInstance {
    pub fn new(n_a: usize, n_b: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n_a || b >= n_b) {
            return Err(Error::contract(format!("edge ({a}, {b}) is out of range")));
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::contract("repeated edge"));
        }
        Ok(BipartiteInstance { n_a, n_b, edges })
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a, b)).ok()
    }

    fn common(&self, b1: usize, b2: usize) -> Vec<(usize, usize)> {
        (0..self.n_a)
            .filter_map(|a| Some((self.edge_index(a, b1)?, self.edge_index(a, b2)?)))
            .collect()
    }
}

/// Drops the `u'` copies and the clique edges of the reduction graph,
/// keeping set and non-edge vertices as part `A` (sets first) and the
/// `u` copies as part `B`.
pub fn rc2_core_to_bipartite(g: &Graph, labels: &Rc2GadgetLabels) -> Result<BipartiteInstance> {
    if labels.vertex_count() != g.vertex_count() {
        return Err(Error::contract("labels do not match the graph"));
    }
    let n_sets = labels.s.len();
    let table = labels.roles();
    let mut edges = Vec::new();
    for &(p, q) in g.edges() {
        let (b, other) = match (table[p].unwrap(), table[q].unwrap()) {
            (Rc2Role::U(v), r) | (r, Rc2Role::U(v)) => (v, r),
            _ => continue,
        };
        match other {
            Rc2Role::Set(t) => edges.push((t, b)),
            Rc2Role::NonEdge(i) => edges.push((n_sets + i, b)),
            Rc2Role::UPrime(_) => {}
            Rc2Role::U(_) => return Err(Error::contract("edge inside the independent side")),
        }
    }
    BipartiteInstance::new(n_sets + labels.x.len(), labels.u.len(), edges)
}

/// Every pair of `B` vertices has a common neighbour whose two edges differ.
pub fn verify_bipartite_rainbow(h: &BipartiteInstance, col: &[u32]) -> bool {
    col.len() == h.edges.len()
        && (0..h.n_b).all(|b1| {
            (b1 + 1..h.n_b).all(|b2| h.common(b1, b2).iter().any(|&(e, f)| col[e] != col[f]))
        })
}

/// A 2-colouring of the cross edges (indexed like `h.edges`) under which
/// every pair in `B` has a rainbow path, if one exists.
pub fn decide_bipartite_rainbow(h: &BipartiteInstance, budget: u64) -> Result<Option<Vec<u32>>> {
    let mut problem = DisequalityProblem::new(h.edges.len());
    for b1 in 0..h.n_b {
        for b2 in b1 + 1..h.n_b {
            let terms = h.common(b1, b2);
            if terms.is_empty() {
                return Ok(None);
            }
            problem.add_clause(terms);
        }
    }
    if !h.edges.is_empty() {
        problem.fix(0, false);
    }
    Ok(problem
        .solve(budget)?
        .map(|bits| bits.into_iter().map(u32::from).collect()))
}

/// Rows are `B`, columns are `A`; the free cells are the missing edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixInstance {
    pub rows: usize,
    pub cols: usize,
    /// Sorted `(row, column)` cells left free.
    pub free: Vec<(usize, usize)>,
}

impl MatrixInstance {
    pub fn new(rows: usize, cols: usize, mut free: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(i, j)) = free.iter().find(|&&(i, j)| i >= rows || j >= cols) {
            return Err(Error::contract(format!("cell ({i}, {j}) is out of range")));
        }
        free.sort_unstable();
        free.dedup();
        Ok(MatrixInstance { rows, cols, free })
    }

    pub fn is_free(&self, i: usize, j: usize) -> bool {
        self.free.binary_search(&(i, j)).is_ok()
    }
}

pub fn bipartite_to_matrix(h: &BipartiteInstance) -> MatrixInstance {
    let free = (0..h.n_b)
        .flat_map(|b| (0..h.n_a).map(move |a| (b, a)))
        .filter(|&(b, a)| h.edge_index(a, b).is_none())
        .collect();
    MatrixInstance::new(h.n_b, h.n_a, free).expect("cells in range")
}

/// Fixed entries from a cross-edge colouring: red 0, blue 1.
pub fn colouring_to_matrix(h: &BipartiteInstance, col: &[u32]) -> Vec<Vec<Option<u8>>> {
    let mut m = vec![vec![None; h.n_a]; h.n_b];
    for (&(a, b), &c) in h.edges.iter().zip(col) {
        m[b][a] = Some(if c == RED { 0 } else { 1 });
    }
    m
}

/// Every pair of rows differs in some column where both entries are fixed.
pub fn verify_matrix(inst: &MatrixInstance, fixed: &[Vec<Option<u8>>]) -> Result<bool> {
    if fixed.len() != inst.rows || fixed.iter().any(|r| r.len() != inst.cols) {
        return Err(Error::contract("entry grid has the wrong shape"));
    }
    for (i, row) in fixed.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if e.is_some() == inst.is_free(i, j) {
                return Err(Error::contract(format!(
                    "cell ({i}, {j}) must be {}",
                    if inst.is_free(i, j) { "free" } else { "fixed" }
                )));
            }
        }
    }
    Ok((0..inst.rows).all(|r1| {
        (r1 + 1..inst.rows).all(|r2| {
            (0..inst.cols).any(|j| match (fixed[r1][j], fixed[r2][j]) {
                (Some(x), Some(y)) => x != y,
                _ => false,
            })
        })
    }))
}

/// Tries every filling of the fixed cells.
pub fn decide_matrix_exhaustive(inst: &MatrixInstance) -> Result<Option<Vec<Vec<Option<u8>>>>> {
    let cells: Vec<(usize, usize)> = (0..inst.rows)
        .flat_map(|i| (0..inst.cols).map(move |j| (i, j)))
        .filter(|&(i, j)| !inst.is_free(i, j))
        .collect();
    if cells.len() > 24 {
        return Err(Error::Capacity {
            what: "fixed cells for exhaustive search",
            value: cells.len() as u64,
            limit: 24,
        });
    }
    for mask in 0u32..1 << cells.len() {
        let mut m = vec![vec![None; inst.cols]; inst.rows];
        for (bit, &(i, j)) in cells.iter().enumerate() {
            m[i][j] = Some((mask >> bit & 1) as u8);
        }
        if verify_matrix(inst, &m)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Boxes in half units: every side is 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingInstance {
    pub dim: usize,
    pub boxes: Vec<Vec<u8>>,
}

impl PackingInstance {
    pub fn new(dim: usize, boxes: Vec<Vec<u8>>) -> Result<Self> {
        for (i, b) in boxes.iter().enumerate() {
            if b.len() != dim || b.iter().any(|&s| s != 1 && s != 2) {
                return Err(Error::contract(format!(
                    "box {i} must have {dim} sides, each 1/2 or 1"
                )));
            }
        }
        Ok(PackingInstance { dim, boxes })
    }
}

/// One box per `B` vertex; side 1/2 along `a` when `ab` is an edge.
pub fn bipartite_to_packing(h: &BipartiteInstance) -> PackingInstance {
    let boxes = (0..h.n_b)
        .map(|b| {
            (0..h.n_a)
                .map(|a| if h.edge_index(a, b).is_some() { 1 } else { 2 })
                .collect()
        })
        .collect();
    PackingInstance::new(h.n_a, boxes).expect("sides are halves or ones")
}

/// Corner offsets (half units): red edges shift the box by 1/2.
pub fn colouring_to_packing(h: &BipartiteInstance, col: &[u32]) -> Vec<Vec<u8>> {
    let mut place = vec![vec![0u8; h.n_a]; h.n_b];
    for (&(a, b), &c) in h.edges.iter().zip(col) {
        if c == RED {
            place[b][a] = 1;
        }
        debug_assert!(c == RED || c == BLUE);
    }
    place
}

/// Boxes lie in the cube and pairwise have disjoint interiors. The second
/// field names the first violation.
pub fn verify_packing(inst: &PackingInstance, place: &[Vec<u8>]) -> Result<(bool, Option<String>)> {
    if place.len() != inst.boxes.len() || place.iter().any(|p| p.len() != inst.dim) {
        return Err(Error::contract("placement has the wrong shape"));
    }
    for (i, (b, p)) in inst.boxes.iter().zip(place).enumerate() {
        if let Some(d) = (0..inst.dim).find(|&d| p[d] + b[d] > 2) {
            return Ok((
                false,
                Some(format!("box {i} leaves the cube in dimension {d}")),
            ));
        }
    }
    for i in 0..inst.boxes.len() {
        for j in i + 1..inst.boxes.len() {
            let apart = (0..inst.dim).any(|d| {
                let (pi, si, pj, sj) =
                    (place[i][d], inst.boxes[i][d], place[j][d], inst.boxes[j][d]);
                pi + si <= pj || pj + sj <= pi
            });
            if !apart {
                return Ok((false, Some(format!("boxes {i} and {j} overlap"))));
            }
        }
    }
    Ok((true, None))
}

/// Tries every corner on the half grid. Half-grid corners lose nothing:
/// pushing each box towards the origin along one axis at a time snaps it
/// onto the grid without creating overlaps.
pub fn decide_packing_exhaustive(inst: &PackingInstance) -> Result<Option<Vec<Vec<u8>>>> {
    let slots: Vec<(usize, usize)> = inst
        .boxes
        .iter()
        .enumerate()
        .flat_map(|(i, b)| {
            (0..inst.dim)
                .filter(move |&d| b[d] == 1)
                .map(move |d| (i, d))
        })
        .collect();
    if slots.len() > 24 {
        return Err(Error::Capacity {
            what: "half sides for exhaustive search",
            value: slots.len() as u64,
            limit: 24,
        });
    }
    for mask in 0u32..1 << slots.len() {
        let mut place = vec![vec![0u8; inst.dim]; inst.boxes.len()];
        for (bit, &(i, d)) in slots.iter().enumerate() {
            place[i][d] = (mask >> bit & 1) as u8;
        }
        if verify_packing(inst, &place)?.0 {
            return Ok(Some(place));
        }
    }
    Ok(None)
}

/// A maximum independent set of a threshold graph: the independent side of
/// its split partition plus, when there is one, a clique vertex with no
/// independent neighbour.
pub fn threshold_max_independent_set(g: &Graph) -> Result<Vec<usize>> {
    if !is_threshold(g) {
        return Err(Error::contract("graph is not a threshold graph"));
    }
    let sp = recognize_split(g).expect("threshold graphs are split");
    let mut set = sp.independent.clone();
    if let Some(&x) = sp
        .clique
        .iter()
        .find(|&&x| g.neighbours(x).iter().all(|&w| sp.in_clique(w)))
    {
        set.push(x);
        set.sort_unstable();
    }
    Ok(set)
}

/// Whether `sum 2^-d(v)` over the given degrees is at most 1, in integers:
/// `ceil(2^d * S_{>=d})` is carried down one level at a time.
pub fn kraft_holds(degrees: &[usize]) -> bool {
    let Some(&top) = degrees.iter().max() else {
        return true;
    };
    let mut count = vec![0u64; top + 1];
    for &d in degrees {
        count[d] += 1;
    }
    let mut carry = 0u64;
    for d in (0..=top).rev() {
        carry = count[d] + carry.div_ceil(2);
    }
    carry <= 1
}

/// Two colours suffice for the connected threshold graph `g` exactly when
/// the degrees of a maximum independent set satisfy Kraft's inequality.
pub fn threshold_kraft(g: &Graph) -> Result<bool> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let set = threshold_max_independent_set(g)?;
    let degrees: Vec<usize> = set.iter().map(|&v| g.degree(v)).collect();
    Ok(kraft_holds(&degrees))
}
