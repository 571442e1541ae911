//! Graphviz export.

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::rainbow::EdgeColouring;

/// Colour `c` is drawn as `PALETTE[c % len]`; the `label` attribute keeps
/// the number so colours beyond the palette stay distinguishable.
pub const PALETTE: [&str; 12] = [
    "red",
    "blue",
    "green3",
    "orange",
    "purple",
    "brown",
    "cyan3",
    "magenta",
    "gold3",
    "gray40",
    "darkgreen",
    "navy",
];

pub fn export_dot(g: &Graph, colouring: Option<&EdgeColouring>) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        writeln!(s, "  {v};").unwrap();
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match colouring {
            Some(c) => {
                let col = c.colour(e);
                writeln!(
                    s,
                    "  {u} -- {v} [color=\"{}\", label=\"{col}\"];",
                    PALETTE[col as usize % PALETTE.len()]
                )
                .unwrap();
            }
            None => writeln!(s, "  {u} -- {v};").unwrap(),
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{special_graph, SpecialKind};
    use crate::split_rc::colour_by_pendants;

    #[test]
    fn triangle() {
        let out = export_dot(&Graph::complete(3), None);
        assert_eq!(out.matches(" -- ").count(), 3);
        assert_eq!(out, export_dot(&Graph::complete(3), None));
    }

    #[test]
    fn coloured_g111() {
        let g = special_graph(SpecialKind::G111, 3, 0, 0).unwrap();
        let c = colour_by_pendants(&g).unwrap();
        let out = export_dot(&g, Some(&c));
        for name in &PALETTE[..3] {
            assert!(out.contains(&format!("color=\"{name}\"")));
        }
        assert!(!out.contains(PALETTE[3]));
    }
}
