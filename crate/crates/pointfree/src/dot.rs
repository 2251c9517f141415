//! Graphviz output for Hasse diagrams of `S(L)` and `S_o(L)`.

use std::fmt::Write as _;

use pointfree_core::SublocaleCoframe;

/// Nodes are named `S<k>` after the coframe index and labeled with their
/// members, plus `open`, `closed` and `fitted` annotations. Edges run from
/// each element to its upper covers.
pub fn hasse(coframe: &SublocaleCoframe, title: &str) -> String {
    let l = coframe.frame().lattice();
    let mut out = String::new();
    writeln!(out, "digraph \"{title}\" {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for k in 0..coframe.len() {
        let mut tags = Vec::new();
        let opens: Vec<String> = l.elements().filter(|&a| coframe.open(a) == k).map(|a| a.to_string()).collect();
        if !opens.is_empty() {
            tags.push(format!("open o({})", opens.join(",")));
        }
        let closeds: Vec<String> =
            l.elements().filter(|&a| coframe.closed(a) == Some(k)).map(|a| a.to_string()).collect();
        if !closeds.is_empty() {
            tags.push(format!("closed c({})", closeds.join(",")));
        }
        if coframe.is_fitted(k) {
            tags.push("fitted".into());
        }
        let mut label = format!("S{k} {}", coframe.get(k));
        if !tags.is_empty() {
            label.push_str("\\n");
            label.push_str(&tags.join(", "));
        }
        writeln!(out, "  S{k} [label=\"{label}\"];").unwrap();
    }
    for (a, b) in coframe.lattice().covers() {
        writeln!(out, "  S{a} -> S{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
