//! Graphviz export of a colored graph.
//!
//! Colors appear both as a numeric label and as a fill color. Vertices of the
//! rainbow set are boxes with an `×` marker, other b-vertices are triangles,
//! everything else is a circle.

use std::fmt::Write;

use crate::coloring::{verify_b_coloring, Coloring, ColoringError};
use crate::graph::Graph;

const PALETTE: &[&str] = &[
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
    "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000", "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080",
];

pub fn palette_color(c: usize) -> &'static str {
    PALETTE[c % PALETTE.len()]
}

/// DOT source for `g` colored by `c`.
pub fn to_dot(g: &Graph, c: &Coloring) -> Result<String, ColoringError> {
    let report = verify_b_coloring(g, c)?;
    let rainbow = report.rainbow.clone().unwrap_or_default();
    let mut out = String::new();
    writeln!(out, "graph corona {{").unwrap();
    writeln!(out, "  node [style=filled, fontname=\"Helvetica\"];").unwrap();
    for v in 0..g.order() {
        let color = c.color(v);
        let name = g.label(v).map_or_else(|| v.to_string(), |l| l.to_string());
        let (shape, extra) = if rainbow.contains(&v) {
            ("box", ", xlabel=\"×\"")
        } else if report.is_b_vertex(v) {
            ("triangle", "")
        } else {
            ("circle", "")
        };
        writeln!(
            out,
            "  {v} [label=\"{color}\", tooltip=\"{name}\", shape={shape}, fillcolor=\"{}\"{extra}];",
            palette_color(color)
        )
        .unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};

    #[test]
    fn marks_rainbow_and_b_vertices() {
        let g = build_family(FamilySpec::path(5)).unwrap();
        let c = Coloring::new(3, vec![0, 1, 2, 0, 1]).unwrap();
        let dot = to_dot(&g, &c).unwrap();
        assert!(dot.starts_with("graph corona {"));
        assert_eq!(dot.matches("shape=box").count(), 3);
        assert_eq!(dot.matches("shape=circle").count(), 2);
        assert!(dot.contains("  0 -- 1;"));
        assert!(dot.contains("label=\"2\""));
    }

    #[test]
    fn arity_checked() {
        let g = build_family(FamilySpec::path(3)).unwrap();
        let c = Coloring::new(2, vec![0, 1]).unwrap();
        assert!(to_dot(&g, &c).is_err());
    }
}
