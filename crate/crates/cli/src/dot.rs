//! Graphviz output. Derived hypergraphs use a bipartite incidence layout:
//! one ellipse per point, one box per hyperedge.

use std::fmt::Write;

use hyperchrom_core::{Hypergraph, SetSystem};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn two_section(h: &Hypergraph) -> String {
    let g = h.two_section();
    let mut out = format!("graph {} {{\n", quote(&format!("{}.2sec", h.name())));
    for v in 0..h.vertex_count() {
        writeln!(out, "  {};", quote(h.label(v))).unwrap();
    }
    for (a, b) in g.edge_list() {
        writeln!(out, "  {} -- {};", quote(h.label(a)), quote(h.label(b))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// `point_label(p)` names a point, `edge_label(i)` names hyperedge `i`.
pub fn incidence(
    name: &str,
    system: &SetSystem,
    point_label: impl Fn(usize) -> String,
    edge_label: impl Fn(usize) -> String,
) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for &p in system.points() {
        writeln!(
            out,
            "  p{p} [shape=ellipse, label={}];",
            quote(&point_label(p))
        )
        .unwrap();
    }
    for (i, e) in system.edges().iter().enumerate() {
        writeln!(out, "  e{i} [shape=box, label={}];", quote(&edge_label(i))).unwrap();
        for p in e {
            writeln!(out, "  e{i} -- p{p};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
