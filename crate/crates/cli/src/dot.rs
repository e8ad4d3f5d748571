//! Graphviz export.

use std::fmt::Write;

use pomlab_core::BoundedInvolutivePoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram drawn bottom to top. Each pair `x, x'` with `x != x'` gets
/// one dashed undirected edge; self-inverse elements get a dashed outline.
pub fn poset_dot(p: &BoundedInvolutivePoset, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {} {{", quote(name)).unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    writeln!(s, "  node [shape=circle];").unwrap();
    for x in 0..p.size() {
        let style = if p.inv(x) == x { ", style=dashed" } else { "" };
        writeln!(s, "  n{x} [label={}{style}];", quote(&p.label(x))).unwrap();
    }
    for (x, y) in p.hasse() {
        writeln!(s, "  n{x} -> n{y};").unwrap();
    }
    for x in 0..p.size() {
        let y = p.inv(x);
        if x < y {
            writeln!(
                s,
                "  n{x} -> n{y} [dir=none, style=dashed, constraint=false];"
            )
            .unwrap();
        }
    }
    s.push_str("}\n");
    s
}
