//! Graphviz export.

use std::fmt::Write;

use crate::graph::{Label, ProofStructure};
use crate::switching::Switching;

fn shape(l: Label) -> &'static str {
    match l {
        Label::Ax => "invtrapezium",
        Label::Cut => "trapezium",
        Label::One | Label::Bot => "circle",
        Label::Tensor | Label::Parr => "ellipse",
        Label::Dot => "point",
    }
}

fn text(l: Label) -> &'static str {
    match l {
        Label::Ax => "ax",
        Label::Cut => "cut",
        Label::One => "1",
        Label::Bot => "⊥",
        Label::Tensor => "⊗",
        Label::Parr => "⅋",
        Label::Dot => "",
    }
}

/// Deterministic DOT text. Premise order is drawn with the `nw`/`ne` ports,
/// jumps are dashed and the conclusion • nodes share the last rank. Under a
/// switching, every non-chosen ⅋ premise is drawn into a fresh • node.
pub fn export_dot(ps: &ProofStructure, switching: Option<&Switching>) -> String {
    let mut s = String::from("digraph ps {\n  node [fontname=\"Helvetica\"];\n");
    for (n, l) in &ps.nodes {
        let _ = writeln!(s, "  n{} [label=\"{}\", shape={}];", n.0, text(*l), shape(*l));
    }
    for (a, e) in &ps.arcs {
        let mut head = format!("n{}", e.head.0);
        let mut attrs = vec![format!("label=\"{}\"", ps.type_of(*a).map_or(format!("a{}", a.0), |t| t.to_string()))];
        if let Some(order) = ps.premise_order.get(&e.head) {
            attrs.push(format!("headport={}", if order[0] == *a { "nw" } else { "ne" }));
        }
        if let Some(sw) = switching {
            if ps.label(e.head) == Label::Parr && sw.0.get(&e.head).is_some_and(|c| c != a) {
                let _ = writeln!(s, "  f{} [label=\"\", shape=point, color=red];", e.head.0);
                head = format!("f{}", e.head.0);
                attrs.truncate(1);
                attrs.push("color=red".into());
            }
        }
        let _ = writeln!(s, "  n{} -> {} [{}];", e.tail.0, head, attrs.join(", "));
    }
    for (b, t) in &ps.jumps {
        let _ = writeln!(s, "  n{} -> n{} [style=dashed, constraint=false];", b.0, t.0);
    }
    if !ps.conclusions.is_empty() {
        let dots: Vec<String> = ps.conclusions.iter().map(|a| format!("n{};", ps.head(*a).0)).collect();
        let _ = writeln!(s, "  {{ rank=sink; {} }}", dots.join(" "));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;
    use crate::sequent::{desequentialize, SequentProof};

    #[test]
    fn single_axiom() {
        let ps = desequentialize(&SequentProof::ax(Formula::atom("X"))).ps;
        let d = export_dot(&ps, None);
        assert_eq!(d.matches("shape=").count(), 3);
        assert_eq!(d, export_dot(&ps, None));
        assert!(d.contains("rank=sink"));
    }

    #[test]
    fn switching_redirects_the_other_premise() {
        let p = SequentProof::parr(SequentProof::bot(SequentProof::one())).unwrap();
        let ps = desequentialize(&p).ps;
        let parr = ps.nodes_with(Label::Parr)[0];
        let sw = Switching([(parr, ps.premise_order[&parr][0])].into());
        let d = export_dot(&ps, Some(&sw));
        assert!(d.contains(&format!("-> f{}", parr.0)));
        assert_eq!(d.matches("-> f").count(), 1);
    }
}
