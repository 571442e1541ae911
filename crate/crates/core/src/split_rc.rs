//! Polynomial-time rainbow colouring of split graphs with at least four
//! colours.
//!
//! A connected split graph that is not a tree has a maximal clique `K` of
//! size at least 3. Let `p` be its number of pendant vertices. With `p >= 4`
//! pendants one of four small configurations (or the `G220` exception) is
//! present, and an explicit colouring with exactly `p` colours follows from
//! the anatomy below: the clique is cut into singleton parts `x0, x1 (, x2)`
//! plus a remainder, and every non-pendant independent vertex is classified
//! by the parts of two designated clique neighbours.
//!
//! When fewer than `k` pendants exist, dummy pendants are attached so that
//! the augmented graph hits a favourable configuration; they are removed
//! afterwards, which is sound because a degree-1 vertex is never interior
//! to a path.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{rainbow_colouring_with_k, solve_rc2};
use crate::graph::{is_connected, pendant_set, recognize_split, Graph, SplitPartition};
use crate::rainbow::EdgeColouring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    G111,
    G400,
    G310,
    G2200,
    G220,
    G220z,
    Tree,
    SmallPendant,
}

impl CaseTag {
    /// Cases with an explicit colouring.
    pub fn is_colourable(self) -> bool {
        matches!(
            self,
            CaseTag::G111 | CaseTag::G400 | CaseTag::G310 | CaseTag::G2200 | CaseTag::G220z
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::G111 => "G111",
            CaseTag::G400 => "G400",
            CaseTag::G310 => "G310",
            CaseTag::G2200 => "G2200",
            CaseTag::G220 => "G220",
            CaseTag::G220z => "G220z",
            CaseTag::Tree => "TREE",
            CaseTag::SmallPendant => "SMALL_PENDANT",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Labelled decomposition of a split graph consumed by the case colourings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueAnatomy {
    pub partition: SplitPartition,
    pub case: CaseTag,
    /// `x0, x1` and, when the case names it, `x2`.
    pub special: Vec<usize>,
    /// `K0, K1, K2 (, K3)`; all but the last are singletons.
    pub parts: Vec<Vec<usize>>,
    /// Every pendant vertex mapped to its clique neighbour.
    pub pendant_map: BTreeMap<usize, usize>,
    /// The configuration's pendants `y0, y1, ...` in label order.
    pub case_pendants: Vec<usize>,
    /// Pendants outside the configuration; coloured afterwards with fresh colours.
    pub extra_pendants: Vec<usize>,
    /// Non-pendant independent vertices grouped by the (sorted) part indices
    /// of their designated neighbours.
    pub classes: BTreeMap<(usize, usize), Vec<usize>>,
    /// Designated clique neighbours of each non-pendant independent vertex,
    /// smaller id first.
    pub chosen_neighbours: BTreeMap<usize, (usize, usize)>,
    /// An independent vertex adjacent to both `x0` and `x1` (case `G220z`).
    pub z_witness: Option<usize>,
}

impl CliqueAnatomy {
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&v).is_ok())
    }
}

impl fmt::Display for CliqueAnatomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |vs: &[usize]| {
            vs.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "case {}", self.case)?;
        writeln!(f, "clique {}", list(&self.partition.clique))?;
        writeln!(f, "independent {}", list(&self.partition.independent))?;
        for (i, x) in self.special.iter().enumerate() {
            writeln!(f, "x{i} {x}")?;
        }
        for (i, part) in self.parts.iter().enumerate() {
            writeln!(f, "K{i} {}", list(part))?;
        }
        for (i, y) in self.case_pendants.iter().enumerate() {
            writeln!(f, "y{i} {y} -> {}", self.pendant_map[y])?;
        }
        if !self.extra_pendants.is_empty() {
            writeln!(f, "extra-pendants {}", list(&self.extra_pendants))?;
        }
        for ((i, j), vs) in &self.classes {
            writeln!(f, "I{i}{j} {}", list(vs))?;
        }
        if let Some(z) = self.z_witness {
            writeln!(f, "z {z}")?;
        }
        Ok(())
    }
}

fn require_connected_split(g: &Graph) -> Result<SplitPartition> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    recognize_split(g).ok_or_else(|| Error::contract("graph is not split"))
}

/// Classifies a connected split graph by its pendant distribution and
/// builds the matching anatomy. Trees and graphs with too few pendants get
/// the tags `Tree` / `SmallPendant` and no labels.
pub fn build_anatomy(g: &Graph, sp: &SplitPartition) -> Result<CliqueAnatomy> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if !sp.is_valid_for(g) {
        return Err(Error::contract(
            "partition is not a split partition with a maximal clique",
        ));
    }
    let mut anat = CliqueAnatomy {
        partition: sp.clone(),
        case: CaseTag::SmallPendant,
        special: Vec::new(),
        parts: Vec::new(),
        pendant_map: BTreeMap::new(),
        case_pendants: Vec::new(),
        extra_pendants: Vec::new(),
        classes: BTreeMap::new(),
        chosen_neighbours: BTreeMap::new(),
        z_witness: None,
    };
    if g.is_tree() {
        anat.case = CaseTag::Tree;
        return Ok(anat);
    }

    let pendants = pendant_set(g);
    // pendants of a non-tree connected split graph hang off the clique
    let mut on_clique: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &y in &pendants {
        let x = g.neighbours(y)[0];
        debug_assert!(sp.in_clique(x) && !sp.in_clique(y));
        anat.pendant_map.insert(y, x);
        on_clique.entry(x).or_default().push(y);
    }
    let p = pendants.len();
    let clique = &sp.clique;
    let bearers: Vec<usize> = on_clique.keys().copied().collect();
    let other_clique = |skip: &[usize]| -> Vec<usize> {
        clique
            .iter()
            .copied()
            .filter(|v| !skip.contains(v))
            .collect()
    };

    let (case, special, case_pendants): (CaseTag, Vec<usize>, Vec<usize>) =
        if bearers.len() >= 3 && p >= 3 {
            let xs = bearers[..3].to_vec();
            let ys = xs.iter().map(|x| on_clique[x][0]).collect();
            (CaseTag::G111, xs, ys)
        } else if p < 4 {
            return Ok(anat);
        } else {
            let mut ranked = bearers.clone();
            ranked.sort_by(|a, b| on_clique[b].len().cmp(&on_clique[a].len()).then(a.cmp(b)));
            let x0 = ranked[0];
            let a = on_clique[&x0].len();
            let b = ranked.get(1).map_or(0, |x| on_clique[x].len());
            let at_x0 = &on_clique[&x0];
            if b == 0 {
                let x1 = other_clique(&[x0])[0];
                (CaseTag::G400, vec![x0, x1], at_x0[..4].to_vec())
            } else if a >= 3 {
                let x1 = ranked[1];
                let ys = vec![at_x0[0], at_x0[1], on_clique[&x1][0], at_x0[2]];
                (CaseTag::G310, vec![x0, x1], ys)
            } else {
                // a == b == 2
                let x1 = ranked[1];
                let x2 = other_clique(&[x0, x1])[0];
                let at_x1 = &on_clique[&x1];
                let ys = vec![at_x0[0], at_x1[0], at_x0[1], at_x1[1]];
                let case = if clique.len() >= 4 {
                    CaseTag::G2200
                } else {
                    CaseTag::G220
                };
                (case, vec![x0, x1, x2], ys)
            }
        };

    anat.parts = special
        .iter()
        .take(match case {
            CaseTag::G111 | CaseTag::G400 | CaseTag::G310 => 2,
            _ => 3,
        })
        .map(|&x| vec![x])
        .collect();
    let rest = other_clique(&special[..anat.parts.len()]);
    if !rest.is_empty() {
        anat.parts.push(rest);
    }
    anat.extra_pendants = pendants
        .iter()
        .copied()
        .filter(|y| !case_pendants.contains(y))
        .collect();
    anat.case = case;
    anat.special = special;
    anat.case_pendants = case_pendants;

    for &v in &sp.independent {
        if g.degree(v) == 1 {
            continue;
        }
        let nb = g.neighbours(v);
        let chosen = (nb[0], nb[1]);
        let (pa, pb) = (
            anat.part_of(chosen.0).unwrap(),
            anat.part_of(chosen.1).unwrap(),
        );
        anat.chosen_neighbours.insert(v, chosen);
        anat.classes
            .entry((pa.min(pb), pa.max(pb)))
            .or_default()
            .push(v);
    }

    if case == CaseTag::G220 {
        let (x0, x1) = (anat.special[0], anat.special[1]);
        anat.z_witness = sp
            .independent
            .iter()
            .copied()
            .find(|&v| g.degree(v) >= 2 && g.has_edge(v, x0) && g.has_edge(v, x1));
        if anat.z_witness.is_some() {
            anat.case = CaseTag::G220z;
            // here y0, y1 sit on x0 and y2, y3 on x1
            anat.case_pendants.swap(1, 2);
        }
    }
    Ok(anat)
}

/// Colour of a clique edge between parts `i` and `j`.
fn clique_colour(case: CaseTag, i: usize, j: usize) -> u32 {
    let (i, j) = (i.min(j), i.max(j));
    match case {
        CaseTag::G111 => {
            if i == j {
                1
            } else {
                (3 - i - j) as u32
            }
        }
        CaseTag::G400 | CaseTag::G310 => match (i, j) {
            (0, 1) => 3,
            (1, 2) => 0,
            (0, 2) | (2, 2) => 1,
            _ => unreachable!(),
        },
        // indices reduced modulo 4
        CaseTag::G2200 => match (i, j) {
            (0, 1) => 2,
            (1, 2) => 0,
            (2, 3) => 0,
            (0, 3) => 1,
            (0, 2) => 3,
            (1, 3) => 0,
            (3, 3) => 1,
            _ => unreachable!(),
        },
        CaseTag::G220z => match (i, j) {
            (0, 1) => 0,
            (0, 2) => 1,
            (1, 2) => 3,
            _ => unreachable!(),
        },
        _ => unreachable!(),
    }
}

/// Colour of the edge from a non-pendant independent vertex `v` to its
/// designated neighbour `x`.
fn independent_colour(anat: &CliqueAnatomy, v: usize, x: usize) -> u32 {
    let (lo, hi) = anat.chosen_neighbours[&v];
    let px = anat.part_of(x).unwrap();
    if anat.case == CaseTag::G220z {
        let other = if x == lo { hi } else { lo };
        let po = anat.part_of(other).unwrap();
        // (part of x, part of the other neighbour) -> colour
        return match (px, po) {
            (0, _) => 2,
            (1, 0) => 1,
            (1, 2) => 2,
            (2, 0) => 1,
            (2, 1) => 3,
            _ => unreachable!(),
        };
    }
    let last = anat.parts.len() - 1;
    let same_part = anat.part_of(lo) == anat.part_of(hi);
    if same_part {
        debug_assert_eq!(px, last);
        if x == lo {
            0
        } else {
            last as u32
        }
    } else {
        px as u32
    }
}

/// The explicit colouring of a configuration. The graph's pendants must be
/// exactly the configuration's pendants.
pub fn colour_special(g: &Graph, anat: &CliqueAnatomy) -> Result<EdgeColouring> {
    if !anat.case.is_colourable() {
        return Err(Error::contract(format!(
            "no explicit colouring for case {}",
            anat.case
        )));
    }
    if !anat.extra_pendants.is_empty() {
        return Err(Error::contract(
            "extra pendants must be stripped before the case colouring",
        ));
    }
    let k = if anat.case == CaseTag::G111 { 3 } else { 4 };
    let label: BTreeMap<usize, u32> = anat
        .case_pendants
        .iter()
        .enumerate()
        .map(|(i, &y)| (y, i as u32))
        .collect();

    let mut colours = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        let (cu, cv) = (anat.part_of(u), anat.part_of(v));
        let colour = match (cu, cv) {
            (Some(i), Some(j)) => clique_colour(anat.case, i, j),
            (Some(_), None) | (None, Some(_)) => {
                let (w, x) = if cu.is_none() { (u, v) } else { (v, u) };
                if let Some(&l) = label.get(&w) {
                    l
                } else {
                    let (lo, hi) = anat.chosen_neighbours[&w];
                    if x == lo || x == hi {
                        independent_colour(anat, w, x)
                    } else {
                        0
                    }
                }
            }
            (None, None) => {
                return Err(Error::contract(format!(
                    "edge {u}-{v} lies inside the independent set"
                )))
            }
        };
        colours.push(colour);
    }
    EdgeColouring::new(g, k, colours)
}

/// A graph with some pendant vertices removed, remembering the vertex map.
#[derive(Clone, Debug)]
pub struct PendantStrip {
    pub graph: Graph,
    /// `old_of_new[i]` is the original id of vertex `i` of `graph`.
    pub old_of_new: Vec<usize>,
    pub removed: Vec<usize>,
}

pub fn strip_pendants(g: &Graph, extra: &[usize]) -> Result<PendantStrip> {
    if let Some(&v) = extra
        .iter()
        .find(|&&v| v >= g.vertex_count() || g.degree(v) != 1)
    {
        return Err(Error::contract(format!("vertex {v} is not a pendant")));
    }
    let keep: Vec<usize> = (0..g.vertex_count())
        .filter(|v| !extra.contains(v))
        .collect();
    let (graph, old_of_new) = g.induced(&keep);
    let mut removed = extra.to_vec();
    removed.sort_unstable();
    removed.dedup();
    Ok(PendantStrip {
        graph,
        old_of_new,
        removed,
    })
}

/// Lifts a colouring of the stripped graph to `g`, giving each removed
/// pendant edge a new colour of its own.
pub fn extend_pendants(
    g: &Graph,
    strip: &PendantStrip,
    base: &EdgeColouring,
) -> Result<EdgeColouring> {
    base.check_against(&strip.graph)?;
    let mut new_of_old = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in strip.old_of_new.iter().enumerate() {
        new_of_old[v] = i;
    }
    let base_k = base.k() as u32;
    let mut colours = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        let fresh = strip
            .removed
            .binary_search(&u)
            .or_else(|_| strip.removed.binary_search(&v));
        let c = match fresh {
            Ok(i) => base_k + i as u32,
            Err(_) => {
                let e = strip
                    .graph
                    .edge_index(new_of_old[u], new_of_old[v])
                    .ok_or_else(|| Error::contract("stripped graph is missing an edge"))?;
                base.colour(e)
            }
        };
        colours.push(c);
    }
    EdgeColouring::new(g, base.k() + strip.removed.len(), colours)
}

/// Colouring with exactly `|pen(g)|` colours for graphs containing one of
/// the colourable configurations.
pub fn colour_by_pendants(g: &Graph) -> Result<EdgeColouring> {
    let sp = require_connected_split(g)?;
    let anat = build_anatomy(g, &sp)?;
    if !anat.case.is_colourable() {
        return Err(Error::contract(format!(
            "case {} has no colouring with one colour per pendant",
            anat.case
        )));
    }
    if anat.extra_pendants.is_empty() {
        return colour_special(g, &anat);
    }
    let strip = strip_pendants(g, &anat.extra_pendants)?;
    let mut new_of_old = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in strip.old_of_new.iter().enumerate() {
        new_of_old[v] = i;
    }
    let remap = |vs: &[usize]| -> Vec<usize> {
        vs.iter()
            .filter(|&&v| new_of_old[v] != usize::MAX)
            .map(|&v| new_of_old[v])
            .collect()
    };
    let sp2 = SplitPartition {
        clique: remap(&sp.clique),
        independent: remap(&sp.independent),
    };
    let inner = build_anatomy(&strip.graph, &sp2)?;
    debug_assert_eq!(inner.case, anat.case);
    debug_assert!(inner.extra_pendants.is_empty());
    let base = colour_special(&strip.graph, &inner)?;
    extend_pendants(g, &strip, &base)
}

fn require_k_at_least_four(k: usize) -> Result<()> {
    if k < 4 {
        return Err(Error::contract(format!(
            "k = {k}: deciding rc <= k is only polynomial for k >= 4"
        )));
    }
    Ok(())
}

/// Is the rainbow connection number of the split graph `g` at most `k`?
pub fn decide_rc_at_most_k(g: &Graph, k: usize) -> Result<bool> {
    require_k_at_least_four(k)?;
    let sp = require_connected_split(g)?;
    if g.is_tree() {
        return Ok(g.edge_count() <= k);
    }
    let p = pendant_set(g).len();
    if p > k {
        return Ok(false);
    }
    if p < k {
        return Ok(true);
    }
    Ok(build_anatomy(g, &sp)?.case != CaseTag::G220)
}

/// Clique vertices to hang `count` dummy pendants on so that the augmented
/// graph avoids `G220`: first spread them over clique vertices without
/// pendants until three clique vertices carry pendants, then stack the rest.
fn plan_dummies(g: &Graph, sp: &SplitPartition, count: usize) -> Vec<usize> {
    let mut bearers: Vec<usize> = pendant_set(g).iter().map(|&y| g.neighbours(y)[0]).collect();
    bearers.sort_unstable();
    bearers.dedup();
    let unused: Vec<usize> = sp
        .clique
        .iter()
        .copied()
        .filter(|x| !bearers.contains(x))
        .collect();
    let mut fresh = unused.into_iter();
    let mut attach = Vec::with_capacity(count);
    while attach.len() < count && bearers.len() < 3 {
        let x = fresh.next().expect("clique has at least three vertices");
        bearers.push(x);
        attach.push(x);
    }
    let anchor = bearers[0];
    attach.resize(count, anchor);
    attach
}

fn restrict(g: &Graph, big: &Graph, c: &EdgeColouring) -> Result<EdgeColouring> {
    let colours = g
        .edges()
        .iter()
        .map(|&(u, v)| c.colour_between(big, u, v).expect("subgraph edge"))
        .collect();
    EdgeColouring::new(g, c.k(), colours)
}

/// Rainbow colouring of the split graph `g` with at most `k >= 4` colours.
pub fn colour_with_k(g: &Graph, k: usize) -> Result<EdgeColouring> {
    require_k_at_least_four(k)?;
    let sp = require_connected_split(g)?;
    if g.is_tree() {
        if g.edge_count() > k {
            return Err(Error::contract(format!(
                "tree with {} edges needs more than {k} colours",
                g.edge_count()
            )));
        }
        let colours = (0..g.edge_count() as u32).collect();
        return EdgeColouring::new(g, k, colours);
    }
    let p = pendant_set(g).len();
    if p > k {
        return Err(Error::contract(format!(
            "{p} pendants need more than {k} colours"
        )));
    }
    if p == k {
        if build_anatomy(g, &sp)?.case == CaseTag::G220 {
            return Err(Error::contract(
                "G220 without a common neighbour of x0 and x1 needs 5 colours",
            ));
        }
        return colour_by_pendants(g);
    }
    let attach = plan_dummies(g, &sp, k - p);
    let augmented = g.with_pendants(&attach)?;
    let c = colour_by_pendants(&augmented)?;
    restrict(g, &augmented, &c)
}

/// Rainbow connection number of a connected split graph, with a witness.
///
/// Polynomial whenever `g` is complete, a tree, or has at least four
/// pendants. Otherwise the answer is 2, 3 or 4, and the 2- and 3-colour
/// probes are exponential: they run only when `m <= edge_limit`.
pub fn rc_split(g: &Graph, edge_limit: usize) -> Result<(usize, EdgeColouring)> {
    let sp = require_connected_split(g)?;
    if g.is_complete() {
        return Ok((1, EdgeColouring::uniform(g, 1, 0)));
    }
    if g.is_tree() {
        return Ok((g.edge_count(), EdgeColouring::all_distinct(g)));
    }
    let p = pendant_set(g).len();
    if p >= 4 {
        let anat = build_anatomy(g, &sp)?;
        if anat.case == CaseTag::G220 {
            // one dummy on x2 turns the configuration into G111 with 5 pendants
            let augmented = g.with_pendants(&[anat.special[2]])?;
            let c = colour_by_pendants(&augmented)?;
            return Ok((5, restrict(g, &augmented, &c)?));
        }
        return Ok((p, colour_with_k(g, p)?));
    }
    if g.edge_count() > edge_limit {
        return Err(Error::Capacity {
            what: "edge count for the 2- and 3-colour probes",
            value: g.edge_count() as u64,
            limit: edge_limit as u64,
        });
    }
    if p <= 2 {
        if let Some(c) = solve_rc2(g)? {
            return Ok((2, c));
        }
    }
    if let Some(c) = rainbow_colouring_with_k(g, 3, edge_limit)? {
        return Ok((3, c));
    }
    Ok((4, colour_with_k(g, 4)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::verify_rainbow;

    /// Triangle 0,1,2 with `counts[i]` pendants on vertex i, plus
    /// independent vertices joined to the listed clique vertices.
    fn host(clique: usize, counts: &[usize], indep: &[&[usize]]) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..clique)
            .flat_map(|u| (u + 1..clique).map(move |v| (u, v)))
            .collect();
        let mut next = clique;
        for (x, &c) in counts.iter().enumerate() {
            for _ in 0..c {
                edges.push((x, next));
                next += 1;
            }
        }
        for nb in indep {
            for &x in *nb {
                edges.push((x, next));
            }
            next += 1;
        }
        Graph::new(next, edges).unwrap()
    }

    fn anatomy(g: &Graph) -> CliqueAnatomy {
        build_anatomy(g, &recognize_split(g).unwrap()).unwrap()
    }

    fn assert_rainbow(g: &Graph, c: &EdgeColouring) {
        let r = verify_rainbow(g, c).unwrap();
        assert!(r.connected, "failing pair {:?}", r.failing_pair);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(anatomy(&host(3, &[1, 1, 1], &[])).case, CaseTag::G111);
        assert_eq!(anatomy(&host(3, &[4], &[])).case, CaseTag::G400);
        assert_eq!(anatomy(&host(3, &[3, 1], &[])).case, CaseTag::G310);
        assert_eq!(anatomy(&host(4, &[2, 2], &[])).case, CaseTag::G2200);
        assert_eq!(anatomy(&host(3, &[2, 2], &[])).case, CaseTag::G220);
        let z = anatomy(&host(3, &[2, 2], &[&[0, 1]]));
        assert_eq!(z.case, CaseTag::G220z);
        assert_eq!(z.z_witness, Some(7));
        assert_eq!(anatomy(&host(3, &[2, 2], &[&[0, 2]])).case, CaseTag::G220);
        assert_eq!(anatomy(&host(3, &[1, 1], &[])).case, CaseTag::SmallPendant);
        assert_eq!(anatomy(&Graph::star(5)).case, CaseTag::Tree);
    }

    #[test]
    fn anatomy_invariants() {
        let g = host(5, &[3, 1], &[&[0, 1], &[2, 3, 4], &[1, 4], &[0, 3]]);
        let a = anatomy(&g);
        assert_eq!(a.case, CaseTag::G310);
        let mut all: Vec<usize> = a.parts.concat();
        all.sort_unstable();
        assert_eq!(all, a.partition.clique);
        for (&v, &(lo, hi)) in &a.chosen_neighbours {
            assert!(lo < hi && g.has_edge(v, lo) && g.has_edge(v, hi));
        }
        assert_eq!(a.classes[&(2, 2)], vec![10]);
        assert_eq!(a.classes[&(0, 1)], vec![9]);
    }

    #[test]
    fn g111_colours() {
        let g = host(4, &[1, 1, 1], &[&[2, 3]]);
        let a = anatomy(&g);
        let c = colour_special(&g, &a).unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(c.colour_between(&g, 0, 1), Some(2));
        assert_eq!(c.colour_between(&g, 2, 3), Some(1));
        assert_eq!(c.colour_between(&g, 0, 4), Some(0));
        assert_eq!(c.colour_between(&g, 2, 6), Some(2));
        // I22 vertex: lower neighbour 0, upper neighbour 2
        assert_eq!(c.colour_between(&g, 2, 7), Some(0));
        assert_eq!(c.colour_between(&g, 3, 7), Some(2));
        assert_rainbow(&g, &c);
        let p = crate::rainbow::rainbow_path(&g, &c, 4, 5).unwrap().unwrap();
        assert_eq!(p.vertices, vec![4, 0, 1, 5]);
        assert_eq!(p.colours(&c), vec![0, 2, 1]);
    }

    #[test]
    fn g400_colours() {
        let g = host(4, &[4], &[]);
        let c = colour_special(&g, &anatomy(&g)).unwrap();
        for (i, y) in (4..8).enumerate() {
            assert_eq!(c.colour_between(&g, 0, y), Some(i as u32));
        }
        assert_eq!(c.colour_between(&g, 0, 1), Some(3));
        assert_eq!(c.colour_between(&g, 1, 2), Some(0));
        assert_eq!(c.colour_between(&g, 1, 3), Some(0));
        assert_eq!(c.colour_between(&g, 0, 2), Some(1));
        assert_eq!(c.colour_between(&g, 2, 3), Some(1));
        assert_rainbow(&g, &c);
    }

    #[test]
    fn g2200_colours() {
        let g = host(5, &[2, 2], &[&[3, 4]]);
        let a = anatomy(&g);
        assert_eq!(a.parts, vec![vec![0], vec![1], vec![2], vec![3, 4]]);
        let c = colour_special(&g, &a).unwrap();
        let expect = [
            ((0, 1), 2),
            ((1, 2), 0),
            ((2, 3), 0),
            ((0, 3), 1),
            ((0, 2), 3),
            ((1, 3), 0),
            ((3, 4), 1),
        ];
        for ((u, v), col) in expect {
            assert_eq!(c.colour_between(&g, u, v), Some(col), "edge {u}-{v}");
        }
        // pendants y0, y2 on x0 and y1, y3 on x1
        assert_eq!(c.colour_between(&g, 0, 5), Some(0));
        assert_eq!(c.colour_between(&g, 0, 6), Some(2));
        assert_eq!(c.colour_between(&g, 1, 7), Some(1));
        assert_eq!(c.colour_between(&g, 1, 8), Some(3));
        assert_eq!(c.colour_between(&g, 3, 9), Some(0));
        assert_eq!(c.colour_between(&g, 4, 9), Some(3));
        assert_rainbow(&g, &c);
    }

    #[test]
    fn g220z_colours() {
        let g = host(3, &[2, 2], &[&[0, 1], &[0, 2], &[1, 2], &[0, 1]]);
        let a = anatomy(&g);
        assert_eq!(a.case, CaseTag::G220z);
        let c = colour_special(&g, &a).unwrap();
        assert_eq!(c.colour_between(&g, 0, 1), Some(0));
        assert_eq!(c.colour_between(&g, 0, 2), Some(1));
        assert_eq!(c.colour_between(&g, 1, 2), Some(3));
        assert_eq!(c.colour_between(&g, 0, 3), Some(0));
        assert_eq!(c.colour_between(&g, 0, 4), Some(1));
        assert_eq!(c.colour_between(&g, 1, 5), Some(2));
        assert_eq!(c.colour_between(&g, 1, 6), Some(3));
        assert_eq!(c.colour_between(&g, 0, 7), Some(2));
        assert_eq!(c.colour_between(&g, 1, 7), Some(1));
        assert_rainbow(&g, &c);
    }

    #[test]
    fn part_colour_separation() {
        for g in [
            host(5, &[1, 1, 1], &[&[0, 4]]),
            host(5, &[4], &[&[3, 4]]),
            host(5, &[3, 1], &[]),
            host(6, &[2, 2], &[&[4, 5]]),
        ] {
            let a = anatomy(&g);
            let c = colour_special(&g, &a).unwrap();
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                if let (Some(i), Some(j)) = (a.part_of(u), a.part_of(v)) {
                    if i != j {
                        let col = c.colour(e) as usize;
                        assert!(col != i && col != j, "{:?} edge {u}-{v}", a.case);
                    }
                }
            }
        }
    }

    #[test]
    fn extension_examples() {
        let g = host(3, &[2, 1, 1], &[]);
        let c = colour_by_pendants(&g).unwrap();
        assert_eq!(c.k(), 4);
        assert_rainbow(&g, &c);

        let g = host(3, &[6], &[]);
        let c = colour_by_pendants(&g).unwrap();
        assert_eq!(c.k(), 6);
        assert_rainbow(&g, &c);

        let g = host(3, &[1, 1, 1], &[]);
        let strip = strip_pendants(&g, &[]).unwrap();
        let base = colour_special(&g, &anatomy(&g)).unwrap();
        assert_eq!(extend_pendants(&g, &strip, &base).unwrap(), base);
    }

    #[test]
    fn colour_special_rejects_wrong_cases() {
        let g = host(3, &[2, 2], &[]);
        assert!(colour_special(&g, &anatomy(&g)).is_err());
        let g = host(3, &[2, 1, 1], &[]);
        assert!(colour_special(&g, &anatomy(&g)).is_err());
    }

    #[test]
    fn decision_examples() {
        assert!(decide_rc_at_most_k(&host(3, &[4], &[]), 4).unwrap());
        assert!(!decide_rc_at_most_k(&host(3, &[2, 2], &[]), 4).unwrap());
        assert!(decide_rc_at_most_k(&host(3, &[2, 2], &[&[0, 1]]), 4).unwrap());
        assert!(!decide_rc_at_most_k(&host(4, &[3, 3], &[]), 5).unwrap());
        assert!(decide_rc_at_most_k(&Graph::star(4), 4).unwrap());
        assert!(!decide_rc_at_most_k(&Graph::star(5), 4).unwrap());
        assert!(decide_rc_at_most_k(&host(3, &[2, 2], &[]), 3).is_err());
        assert!(decide_rc_at_most_k(&Graph::cycle(5), 4).is_err());
    }

    #[test]
    fn augmentation_examples() {
        // pendant-free: four dummies over three clique vertices
        let g = host(4, &[], &[&[0, 1], &[2, 3], &[1, 3]]);
        let sp = recognize_split(&g).unwrap();
        assert_eq!(plan_dummies(&g, &sp, 4), vec![0, 1, 2, 0]);
        let c = colour_with_k(&g, 4).unwrap();
        assert!(c.k() <= 4);
        assert_rainbow(&g, &c);

        let g = host(3, &[3], &[]);
        let sp = recognize_split(&g).unwrap();
        assert_eq!(plan_dummies(&g, &sp, 1), vec![1]);
        assert_rainbow(&g, &colour_with_k(&g, 4).unwrap());

        let g = host(3, &[2, 2], &[&[0, 1]]);
        let c = colour_with_k(&g, 4).unwrap();
        assert_eq!(c.k(), 4);
        assert_rainbow(&g, &c);

        assert!(colour_with_k(&host(3, &[2, 2], &[]), 4).is_err());
    }

    #[test]
    fn rc_split_examples() {
        assert_eq!(rc_split(&Graph::complete(5), 15).unwrap().0, 1);
        let g220 = host(3, &[2, 2], &[]);
        let (rc, c) = rc_split(&g220, 15).unwrap();
        assert_eq!(rc, 5);
        assert_rainbow(&g220, &c);
        let (rc, c) = rc_split(&host(3, &[3, 1], &[]), 15).unwrap();
        assert_eq!(rc, 4);
        assert_rainbow(&host(3, &[3, 1], &[]), &c);
        assert_eq!(rc_split(&Graph::star(3), 15).unwrap().0, 3);
    }
}
