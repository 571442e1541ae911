//! Text formats for every instance and certificate kind.
//!
//! All formats are line oriented; `#` starts a comment (DIMACS also uses
//! `c` lines) and blank lines are ignored. Parse errors carry 1-based line
//! numbers.
//!
//! | kind          | layout                                                  |
//! |---------------|---------------------------------------------------------|
//! | graph         | `n m`, then `u v` per edge, 0-indexed                    |
//! | colouring     | `u v c` per edge, every edge exactly once                |
//! | BCC instance  | graph block, then `set v1 v2 ...` per family set         |
//! | bipartition   | `X i v1 v2 ...`; sets not listed have `X` empty          |
//! | CNF           | DIMACS `p cnf n m`, clauses ending in `0`                |
//! | assignment    | `v 1 -2 3 0`                                             |
//! | SAT labels    | `a 1 -> 17`, ..., `V1 1 -> 0`, `C 1 2 -> 7`              |
//! | RC2 labels    | `u' 0 -> 0`, `s 0 -> 2`, `x 0 2 -> 5`, `u 0 -> 6`        |
//! | bipartite     | `nA nB m`, then `a b` per edge                           |
//! | bip. colouring| `a b c` per edge                                         |
//! | matrix        | `m n`, then `i j` per free cell                          |
//! | packing       | `n`, then one line of `1` / `0.5` sides per box          |
//! | placement     | `n`, then one line of `0` / `0.5` offsets per box        |

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::bcc::{BccInstance, Bipartitioning};
use crate::equivalence::{BipartiteInstance, MatrixInstance, PackingInstance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::{EdgeColouring, RainbowReport};
use crate::reduction::{
    ClauseGadget, CnfFormula, Rc2GadgetLabels, SatAssignment, SatGadgetLabels, VariableGadget,
};

/// Non-blank, comment-stripped lines with their 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap().trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn nums<T: std::str::FromStr>(line: usize, s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(line, format!("expected an integer, found `{t}`")))
        })
        .collect()
}

fn exactly<const N: usize>(line: usize, s: &str, what: &str) -> Result<[usize; N]> {
    let v: Vec<usize> = nums(line, s)?;
    v.try_into()
        .map_err(|_| Error::parse(line, format!("expected {what}")))
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn with_line(line: usize, e: Error) -> Error {
    match e {
        Error::Contract(msg) => Error::parse(line, msg),
        other => other,
    }
}

fn parse_graph_lines<'a>(
    it: &mut impl Iterator<Item = (usize, &'a str)>,
    end_line: usize,
) -> Result<Graph> {
    let (hl, header) = it
        .next()
        .ok_or_else(|| Error::parse(end_line, "missing `n m` header"))?;
    let [n, m] = exactly::<2>(hl, header, "header `n m`")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeMap::new();
    let mut last = hl;
    for _ in 0..m {
        let (l, s) = it.next().ok_or_else(|| {
            Error::parse(
                end_line,
                format!("expected {m} edges, found {}", edges.len()),
            )
        })?;
        let [u, v] = exactly::<2>(l, s, "edge `u v`")?;
        if u >= n || v >= n {
            return Err(Error::parse(l, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(l, "self-loop"));
        }
        if let Some(prev) = seen.insert((u.min(v), u.max(v)), l) {
            return Err(Error::parse(l, format!("edge repeats line {prev}")));
        }
        edges.push((u, v));
        last = l;
    }
    Graph::new(n, edges).map_err(|e| with_line(last, e))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut it = lines(text);
    let g = parse_graph_lines(&mut it, last_line(text))?;
    if let Some((l, _)) = it.next() {
        return Err(Error::parse(l, "unexpected content after the last edge"));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

/// Reads a colouring of `g`. With `k = None` the palette is one more than
/// the largest colour used.
pub fn parse_colouring(g: &Graph, text: &str, k: Option<usize>) -> Result<EdgeColouring> {
    let mut colours: Vec<Option<u32>> = vec![None; g.edge_count()];
    for (l, s) in lines(text) {
        let [u, v, c] = exactly::<3>(l, s, "`u v colour`")?;
        let e = g
            .edge_index(u, v)
            .ok_or_else(|| Error::parse(l, format!("{u}-{v} is not an edge")))?;
        if colours[e].replace(c as u32).is_some() {
            return Err(Error::parse(l, format!("edge {u}-{v} coloured twice")));
        }
    }
    let colours: Vec<u32> = colours
        .into_iter()
        .enumerate()
        .map(|(e, c)| {
            c.ok_or_else(|| {
                let (u, v) = g.edge(e);
                Error::parse(last_line(text), format!("edge {u}-{v} has no colour"))
            })
        })
        .collect::<Result<_>>()?;
    let k = k.unwrap_or_else(|| colours.iter().max().map_or(1, |&c| c as usize + 1));
    EdgeColouring::new(g, k, colours)
}

pub fn write_colouring(g: &Graph, c: &EdgeColouring) -> String {
    let mut s = String::new();
    for (&(u, v), col) in g.edges().iter().zip(c.colours()) {
        writeln!(s, "{u} {v} {col}").unwrap();
    }
    s
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn write_report(c: &EdgeColouring, report: &RainbowReport) -> String {
    let mut s = format!(
        "rainbow-connected {}\n",
        if report.connected { "yes" } else { "no" }
    );
    if let Some((u, v)) = report.failing_pair {
        writeln!(s, "failing-pair {u} {v}").unwrap();
    }
    for ((u, v), p) in &report.witness_paths {
        writeln!(
            s,
            "pair {u} {v} path {} colours {}",
            join(&p.vertices),
            join(p.colours(c))
        )
        .unwrap();
    }
    s
}

pub fn parse_bcc(text: &str) -> Result<BccInstance> {
    let mut it = lines(text);
    let base = parse_graph_lines(&mut it, last_line(text))?;
    let mut family = Vec::new();
    for (l, s) in it {
        let rest = s
            .strip_prefix("set")
            .ok_or_else(|| Error::parse(l, "expected `set v1 v2 ...`"))?;
        family.push((l, nums::<usize>(l, rest)?));
    }
    let line_of: Vec<usize> = family.iter().map(|&(l, _)| l).collect();
    BccInstance::new(base, family.into_iter().map(|(_, t)| t).collect()).map_err(|e| match e {
        Error::Contract(msg) => {
            // messages name the set index; point at its line
            let idx = msg
                .strip_prefix("set ")
                .and_then(|r| r.split_whitespace().next())
                .and_then(|t| t.parse::<usize>().ok());
            Error::parse(idx.map_or(last_line(text), |i| line_of[i]), msg)
        }
        other => other,
    })
}

pub fn write_bcc(inst: &BccInstance) -> String {
    let mut s = write_graph(&inst.base);
    for t in &inst.family {
        writeln!(s, "set {}", join(t)).unwrap();
    }
    s
}

pub fn parse_bipartition(inst: &BccInstance, text: &str) -> Result<Bipartitioning> {
    let mut x_of: Vec<Option<Vec<usize>>> = vec![None; inst.family.len()];
    for (l, s) in lines(text) {
        let rest = s
            .strip_prefix('X')
            .ok_or_else(|| Error::parse(l, "expected `X set-index v1 v2 ...`"))?;
        let v: Vec<usize> = nums(l, rest)?;
        let (&idx, members) = v
            .split_first()
            .ok_or_else(|| Error::parse(l, "missing set index"))?;
        let slot = x_of
            .get_mut(idx)
            .ok_or_else(|| Error::parse(l, format!("no set with index {idx}")))?;
        if let Some(v) = members
            .iter()
            .find(|v| inst.family[idx].binary_search(v).is_err())
        {
            return Err(Error::parse(l, format!("vertex {v} is not in set {idx}")));
        }
        if slot.replace(members.to_vec()).is_some() {
            return Err(Error::parse(l, format!("set {idx} listed twice")));
        }
    }
    Ok(Bipartitioning::new(
        x_of.into_iter().map(Option::unwrap_or_default).collect(),
    ))
}

pub fn write_bipartition(x: &Bipartitioning) -> String {
    let mut s = String::new();
    for (i, xs) in x.x_of.iter().enumerate() {
        if xs.is_empty() {
            writeln!(s, "X {i}").unwrap();
        } else {
            writeln!(s, "X {i} {}", join(xs)).unwrap();
        }
    }
    s
}

/// DIMACS CNF restricted to clauses of exactly three distinct variables.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut start = 0;
    for (l, raw) in text.lines().enumerate() {
        let l = l + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('c') || s.starts_with('%') {
            continue;
        }
        if let Some(rest) = s.strip_prefix('p') {
            let t: Vec<&str> = rest.split_whitespace().collect();
            if header.is_some() || t.len() != 3 || t[0] != "cnf" {
                return Err(Error::parse(l, "expected a single `p cnf n m` line"));
            }
            let [n, m] = exactly::<2>(l, &t[1..].join(" "), "`p cnf n m`")?;
            header = Some((n, m, l));
            continue;
        }
        let (n, _, _) = header.ok_or_else(|| Error::parse(l, "clause before the `p cnf` line"))?;
        for lit in nums::<i32>(l, s)? {
            if current.is_empty() {
                start = l;
            }
            if lit == 0 {
                let vars: Vec<u32> = current.iter().map(|x| x.unsigned_abs()).collect();
                if current.len() != 3
                    || vars[0] == vars[1]
                    || vars[0] == vars[2]
                    || vars[1] == vars[2]
                {
                    return Err(Error::parse(
                        start,
                        format!(
                            "clause {} must have exactly 3 literals over distinct variables",
                            clauses.len() + 1
                        ),
                    ));
                }
                if let Some(v) = vars.iter().find(|&&v| v as usize > n) {
                    return Err(Error::parse(start, format!("variable {v} exceeds {n}")));
                }
                clauses.push([current[0], current[1], current[2]]);
                current.clear();
            } else {
                current.push(lit);
            }
        }
    }
    let (n, m, hl) = header.ok_or_else(|| Error::parse(last_line(text), "missing `p cnf` line"))?;
    if !current.is_empty() {
        return Err(Error::parse(start, "clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(Error::parse(
            hl,
            format!("header promises {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(n, clauses)
}

pub fn write_dimacs(phi: &CnfFormula) -> String {
    let mut s = format!("p cnf {} {}\n", phi.num_vars(), phi.clauses().len());
    for c in phi.clauses() {
        writeln!(s, "{} {} {} 0", c[0], c[1], c[2]).unwrap();
    }
    s
}

pub fn parse_assignment(num_vars: usize, text: &str) -> Result<SatAssignment> {
    let mut values: Vec<Option<bool>> = vec![None; num_vars];
    for (l, s) in lines(text) {
        let Some(rest) = s.strip_prefix('v') else {
            return Err(Error::parse(l, "expected `v` followed by literals"));
        };
        for lit in nums::<i64>(l, rest)? {
            if lit == 0 {
                continue;
            }
            let v = lit.unsigned_abs() as usize;
            let slot = values.get_mut(v.wrapping_sub(1)).ok_or_else(|| {
                Error::parse(l, format!("variable {v} out of range 1..={num_vars}"))
            })?;
            if slot.replace(lit > 0).is_some() {
                return Err(Error::parse(l, format!("variable {v} assigned twice")));
            }
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| Error::parse(last_line(text), format!("variable {} unassigned", i + 1)))
        })
        .collect::<Result<_>>()?;
    Ok(SatAssignment::new(values))
}

pub fn write_assignment(eval: &SatAssignment) -> String {
    let lits = eval
        .values
        .iter()
        .enumerate()
        .map(|(i, &b)| if b { i as i64 + 1 } else { -(i as i64 + 1) });
    format!("v {} 0\n", join(lits))
}

/// Splits `name args -> value`.
fn labelled(l: usize, s: &str) -> Result<(String, Vec<usize>, usize)> {
    let (lhs, rhs) = s
        .split_once("->")
        .ok_or_else(|| Error::parse(l, "expected `name index... -> id`"))?;
    let mut t = lhs.split_whitespace();
    let name = t
        .next()
        .ok_or_else(|| Error::parse(l, "missing label name"))?
        .to_string();
    let args = nums(l, &t.collect::<Vec<_>>().join(" "))?;
    let [value] = exactly::<1>(l, rhs, "a single id after `->`")?;
    Ok((name, args, value))
}

pub fn write_sat_labels(labels: &SatGadgetLabels) -> String {
    let mut s = String::new();
    for (i, g) in labels.variables.iter().enumerate() {
        let i = i + 1;
        for (name, id) in [
            ("a", g.a),
            ("f", g.f),
            ("f1", g.f1),
            ("f2", g.f2),
            ("t", g.t),
            ("t1", g.t1),
            ("t2", g.t2),
            ("V1", g.sets[0]),
            ("V2", g.sets[1]),
        ] {
            writeln!(s, "{name} {i} -> {id}").unwrap();
        }
    }
    for (j, c) in labels.clauses.iter().enumerate() {
        let j = j + 1;
        writeln!(s, "A {j} -> {}", c.big_a).unwrap();
        writeln!(s, "F {j} -> {}", c.big_f).unwrap();
        for (k, set) in c.sets.iter().enumerate() {
            writeln!(s, "C {j} {} -> {set}", k + 1).unwrap();
        }
    }
    s
}

pub fn parse_sat_labels(text: &str) -> Result<SatGadgetLabels> {
    let mut vars: BTreeMap<usize, [Option<usize>; 9]> = BTreeMap::new();
    let mut clauses: BTreeMap<usize, [Option<usize>; 5]> = BTreeMap::new();
    const VAR_NAMES: [&str; 9] = ["a", "f", "f1", "f2", "t", "t1", "t2", "V1", "V2"];
    for (l, s) in lines(text) {
        let (name, args, id) = labelled(l, s)?;
        let (slot, index) = match (name.as_str(), &args[..]) {
            ("A", &[j]) => (&mut clauses.entry(j).or_default()[0], j),
            ("F", &[j]) => (&mut clauses.entry(j).or_default()[1], j),
            ("C", &[j, k]) if (1..=3).contains(&k) => {
                (&mut clauses.entry(j).or_default()[1 + k], j)
            }
            (n, &[i]) if VAR_NAMES.contains(&n) => {
                let pos = VAR_NAMES.iter().position(|&x| x == n).unwrap();
                (&mut vars.entry(i).or_default()[pos], i)
            }
            _ => {
                return Err(Error::parse(
                    l,
                    format!("unknown label `{name}` with {} indices", args.len()),
                ))
            }
        };
        if index == 0 {
            return Err(Error::parse(l, "indices are 1-based"));
        }
        if slot.replace(id).is_some() {
            return Err(Error::parse(l, "label given twice"));
        }
    }
    let end = last_line(text);
    let missing = |what: String| Error::parse(end, format!("missing label {what}"));
    let mut variables = Vec::new();
    for (pos, (i, v)) in vars.into_iter().enumerate() {
        if i != pos + 1 {
            return Err(missing(format!("for variable {}", pos + 1)));
        }
        let get = |k: usize| v[k].ok_or_else(|| missing(format!("{} {i}", VAR_NAMES[k])));
        variables.push(VariableGadget {
            a: get(0)?,
            f: get(1)?,
            f1: get(2)?,
            f2: get(3)?,
            t: get(4)?,
            t1: get(5)?,
            t2: get(6)?,
            sets: [get(7)?, get(8)?],
        });
    }
    let mut out_clauses = Vec::new();
    for (pos, (j, c)) in clauses.into_iter().enumerate() {
        if j != pos + 1 {
            return Err(missing(format!("for clause {}", pos + 1)));
        }
        let get = |k: usize| c[k].ok_or_else(|| missing(format!("of clause {j}")));
        out_clauses.push(ClauseGadget {
            big_a: get(0)?,
            big_f: get(1)?,
            sets: [get(2)?, get(3)?, get(4)?],
        });
    }
    Ok(SatGadgetLabels {
        variables,
        clauses: out_clauses,
    })
}

pub fn write_rc2_labels(labels: &Rc2GadgetLabels) -> String {
    let mut s = String::new();
    for (v, id) in labels.u_prime.iter().enumerate() {
        writeln!(s, "u' {v} -> {id}").unwrap();
    }
    for (t, id) in labels.s.iter().enumerate() {
        writeln!(s, "s {t} -> {id}").unwrap();
    }
    for &((v, w), id) in &labels.x {
        writeln!(s, "x {v} {w} -> {id}").unwrap();
    }
    for (v, id) in labels.u.iter().enumerate() {
        writeln!(s, "u {v} -> {id}").unwrap();
    }
    s
}

pub fn parse_rc2_labels(text: &str) -> Result<Rc2GadgetLabels> {
    let mut u_prime = BTreeMap::new();
    let mut s_ids = BTreeMap::new();
    let mut u = BTreeMap::new();
    let mut x = Vec::new();
    for (l, line) in lines(text) {
        let (name, args, id) = labelled(l, line)?;
        let dup = match (name.as_str(), &args[..]) {
            ("u'", &[v]) => u_prime.insert(v, id).is_some(),
            ("s", &[t]) => s_ids.insert(t, id).is_some(),
            ("u", &[v]) => u.insert(v, id).is_some(),
            ("x", &[v, w]) if v < w => {
                x.push(((v, w), id));
                false
            }
            _ => return Err(Error::parse(l, format!("unknown label `{line}`"))),
        };
        if dup {
            return Err(Error::parse(l, "label given twice"));
        }
    }
    let dense = |m: BTreeMap<usize, usize>, what: &str| -> Result<Vec<usize>> {
        if m.keys().copied().ne(0..m.len()) {
            return Err(Error::parse(
                last_line(text),
                format!("`{what}` labels are not 0..n"),
            ));
        }
        Ok(m.into_values().collect())
    };
    x.sort_unstable();
    Ok(Rc2GadgetLabels {
        u_prime: dense(u_prime, "u'")?,
        s: dense(s_ids, "s")?,
        x,
        u: dense(u, "u")?,
    })
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteInstance> {
    let mut it = lines(text);
    let (hl, header) = it
        .next()
        .ok_or_else(|| Error::parse(last_line(text), "missing `nA nB m` header"))?;
    let [n_a, n_b, m] = exactly::<3>(hl, header, "header `nA nB m`")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (l, s) = it
            .next()
            .ok_or_else(|| Error::parse(last_line(text), format!("expected {m} edges")))?;
        let [a, b] = exactly::<2>(l, s, "edge `a b`")?;
        if a >= n_a || b >= n_b {
            return Err(Error::parse(l, "endpoint out of range"));
        }
        edges.push((a, b));
    }
    if let Some((l, _)) = it.next() {
        return Err(Error::parse(l, "unexpected content after the last edge"));
    }
    BipartiteInstance::new(n_a, n_b, edges).map_err(|e| with_line(hl, e))
}

pub fn write_bipartite(h: &BipartiteInstance) -> String {
    let mut s = format!("{} {} {}\n", h.n_a, h.n_b, h.edges.len());
    for &(a, b) in &h.edges {
        writeln!(s, "{a} {b}").unwrap();
    }
    s
}

pub fn parse_bipartite_colouring(h: &BipartiteInstance, text: &str) -> Result<Vec<u32>> {
    let mut col = vec![None; h.edges.len()];
    for (l, s) in lines(text) {
        let [a, b, c] = exactly::<3>(l, s, "`a b colour`")?;
        let e = h
            .edge_index(a, b)
            .ok_or_else(|| Error::parse(l, format!("({a}, {b}) is not an edge")))?;
        if c > 1 {
            return Err(Error::parse(l, "colours are 0 (red) or 1 (blue)"));
        }
        if col[e].replace(c as u32).is_some() {
            return Err(Error::parse(l, "edge coloured twice"));
        }
    }
    col.into_iter()
        .enumerate()
        .map(|(e, c)| {
            c.ok_or_else(|| {
                let (a, b) = h.edges[e];
                Error::parse(last_line(text), format!("edge ({a}, {b}) has no colour"))
            })
        })
        .collect()
}

pub fn write_bipartite_colouring(h: &BipartiteInstance, col: &[u32]) -> String {
    let mut s = String::new();
    for (&(a, b), c) in h.edges.iter().zip(col) {
        writeln!(s, "{a} {b} {c}").unwrap();
    }
    s
}

pub fn parse_matrix(text: &str) -> Result<MatrixInstance> {
    let mut it = lines(text);
    let (hl, header) = it
        .next()
        .ok_or_else(|| Error::parse(last_line(text), "missing `m n` header"))?;
    let [rows, cols] = exactly::<2>(hl, header, "header `m n`")?;
    let mut free = Vec::new();
    for (l, s) in it {
        let [i, j] = exactly::<2>(l, s, "free cell `i j`")?;
        if i >= rows || j >= cols {
            return Err(Error::parse(l, "cell out of range"));
        }
        free.push((i, j));
    }
    MatrixInstance::new(rows, cols, free)
}

pub fn write_matrix(inst: &MatrixInstance) -> String {
    let mut s = format!("{} {}\n", inst.rows, inst.cols);
    for &(i, j) in &inst.free {
        writeln!(s, "{i} {j}").unwrap();
    }
    s
}

fn half(t: u8) -> &'static str {
    match t {
        0 => "0",
        1 => "0.5",
        _ => "1",
    }
}

fn parse_halves(l: usize, s: &str, allowed: &[(&str, u8)]) -> Result<Vec<u8>> {
    s.split_whitespace()
        .map(|t| {
            allowed
                .iter()
                .find(|(name, _)| *name == t)
                .map(|&(_, v)| v)
                .ok_or_else(|| Error::parse(l, format!("unexpected value `{t}`")))
        })
        .collect()
}

fn parse_box_lines(text: &str, allowed: &[(&str, u8)]) -> Result<(usize, Vec<Vec<u8>>)> {
    let mut it = lines(text);
    let (hl, header) = it
        .next()
        .ok_or_else(|| Error::parse(last_line(text), "missing dimension header"))?;
    let [dim] = exactly::<1>(hl, header, "dimension `n`")?;
    let mut rows = Vec::new();
    for (l, s) in it {
        let row = parse_halves(l, s, allowed)?;
        if row.len() != dim {
            return Err(Error::parse(
                l,
                format!("expected {dim} values, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    Ok((dim, rows))
}

pub fn parse_packing(text: &str) -> Result<PackingInstance> {
    let (dim, boxes) = parse_box_lines(text, &[("1", 2), ("0.5", 1), ("1/2", 1)])?;
    PackingInstance::new(dim, boxes)
}

pub fn write_packing(inst: &PackingInstance) -> String {
    let mut s = format!("{}\n", inst.dim);
    for b in &inst.boxes {
        writeln!(s, "{}", join(b.iter().map(|&x| half(x)))).unwrap();
    }
    s
}

pub fn parse_placement(text: &str) -> Result<Vec<Vec<u8>>> {
    Ok(parse_box_lines(text, &[("0", 0), ("0.5", 1), ("1/2", 1)])?.1)
}

pub fn write_placement(dim: usize, place: &[Vec<u8>]) -> String {
    let mut s = format!("{dim}\n");
    for p in place {
        writeln!(s, "{}", join(p.iter().map(|&x| half(x)))).unwrap();
    }
    s
}
