//! Graphviz output for the accessibility relations of a finite set of worlds.

use std::fmt::Write;

use crate::semantics::{r_n, Point};

fn edge_style(base: usize) -> &'static str {
    match base {
        0 => "dashed",
        1 => "solid",
        2 => "dotted",
        _ => "bold",
    }
}

/// Renders `R_n` over `points` for each base in `bases`. Unless `full` is set,
/// only the transitive reduction is drawn (`R_n` is transitive).
pub fn render(points: &[Point], bases: &[usize], full: bool) -> String {
    let mut out = String::from("digraph frame {\n  node [shape=box];\n");
    for p in points {
        writeln!(out, "  \"{p}\";").unwrap();
    }
    for &n in bases {
        let related: Vec<Vec<bool>> = points
            .iter()
            .map(|x| points.iter().map(|y| r_n(x, y, n)).collect())
            .collect();
        for (i, x) in points.iter().enumerate() {
            for (k, y) in points.iter().enumerate() {
                if !related[i][k] {
                    continue;
                }
                let implied = !full && (0..points.len()).any(|m| related[i][m] && related[m][k]);
                if !implied {
                    writeln!(
                        out,
                        "  \"{x}\" -> \"{y}\" [style={}, label=\"R_{n}\"];",
                        edge_style(n)
                    )
                    .unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
