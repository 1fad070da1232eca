//! JSON and line-oriented text formats for proof-structures.
//!
//! The text format has one directive per line (`#` starts a comment):
//!
//! ```text
//! node <id> <label> [<left-arc> <right-arc>]
//! arc <id> <tail> <head>
//! conclusions <arc> ...
//! type <arc> <formula>
//! jump <bot-node> <target-node>
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ArcEnds, ArcId, Label, NodeId, ProofStructure};
use crate::error::{Error, Result};
use crate::formula::parse_formula;

#[derive(Serialize, Deserialize)]
struct NodeJson {
    id: u32,
    label: Label,
}

#[derive(Serialize, Deserialize)]
struct ArcJson {
    id: u32,
    tail: u32,
    head: u32,
}

#[derive(Serialize, Deserialize)]
struct PsJson {
    nodes: Vec<NodeJson>,
    arcs: Vec<ArcJson>,
    #[serde(default)]
    premises: BTreeMap<u32, [u32; 2]>,
    #[serde(default)]
    conclusions: Vec<u32>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    types: BTreeMap<u32, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    jumps: BTreeMap<u32, u32>,
}

pub fn to_json(ps: &ProofStructure) -> String {
    let j = PsJson {
        nodes: ps.nodes.iter().map(|(n, l)| NodeJson { id: n.0, label: *l }).collect(),
        arcs: ps
            .arcs
            .iter()
            .map(|(a, e)| ArcJson { id: a.0, tail: e.tail.0, head: e.head.0 })
            .collect(),
        premises: ps.premise_order.iter().map(|(n, p)| (n.0, [p[0].0, p[1].0])).collect(),
        conclusions: ps.conclusions.iter().map(|a| a.0).collect(),
        types: ps.types.iter().map(|(a, t)| (a.0, t.to_string())).collect(),
        jumps: ps.jumps.iter().map(|(s, t)| (s.0, t.0)).collect(),
    };
    serde_json::to_string_pretty(&j).expect("serializable")
}

fn from_json(text: &str) -> Result<ProofStructure> {
    let j: PsJson = serde_json::from_str(text)?;
    let mut ps = ProofStructure::new();
    for n in j.nodes {
        if ps.nodes.insert(NodeId(n.id), n.label).is_some() {
            return Err(Error::Format(format!("duplicate node id {}", n.id)));
        }
    }
    for a in j.arcs {
        let ends = ArcEnds { tail: NodeId(a.tail), head: NodeId(a.head) };
        if ps.arcs.insert(ArcId(a.id), ends).is_some() {
            return Err(Error::Format(format!("duplicate arc id {}", a.id)));
        }
    }
    ps.premise_order =
        j.premises.into_iter().map(|(n, [l, r])| (NodeId(n), [ArcId(l), ArcId(r)])).collect();
    ps.conclusions = j.conclusions.into_iter().map(ArcId).collect();
    for (a, t) in j.types {
        ps.types.insert(ArcId(a), parse_formula(&t)?);
    }
    ps.jumps = j.jumps.into_iter().map(|(s, t)| (NodeId(s), NodeId(t))).collect();
    Ok(ps)
}

pub fn to_dsl(ps: &ProofStructure) -> String {
    let mut out = String::new();
    for (n, l) in &ps.nodes {
        out += &format!("node {n} {l}");
        if let Some([a, b]) = ps.premise_order.get(n) {
            out += &format!(" {a} {b}");
        }
        out.push('\n');
    }
    for (a, e) in &ps.arcs {
        out += &format!("arc {a} {} {}\n", e.tail, e.head);
    }
    out += "conclusions";
    for a in &ps.conclusions {
        out += &format!(" {a}");
    }
    out.push('\n');
    for (a, t) in &ps.types {
        out += &format!("type {a} {t}\n");
    }
    for (s, t) in &ps.jumps {
        out += &format!("jump {s} {t}\n");
    }
    out
}

pub fn parse_dsl(text: &str) -> Result<ProofStructure> {
    let mut ps = ProofStructure::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: &str| Error::Format(format!("line {}: {m}", i + 1));
        let mut words = line.split_whitespace();
        let directive = words.next().unwrap();
        let num = |w: Option<&str>| -> Result<u32> {
            w.ok_or_else(|| err("missing number"))?.parse().map_err(|_| err("expected a number"))
        };
        match directive {
            "node" => {
                let id = NodeId(num(words.next())?);
                let name = words.next().ok_or_else(|| err("missing label"))?;
                let label = Label::from_name(name).ok_or_else(|| err("unknown label"))?;
                if ps.nodes.insert(id, label).is_some() {
                    return Err(err("duplicate node id"));
                }
                let rest: Vec<&str> = words.collect();
                match rest.len() {
                    0 => {}
                    2 => {
                        let l = ArcId(num(Some(rest[0]))?);
                        let r = ArcId(num(Some(rest[1]))?);
                        ps.premise_order.insert(id, [l, r]);
                    }
                    _ => return Err(err("expected zero or two premise arcs")),
                }
            }
            "arc" => {
                let id = ArcId(num(words.next())?);
                let tail = NodeId(num(words.next())?);
                let head = NodeId(num(words.next())?);
                if ps.arcs.insert(id, ArcEnds { tail, head }).is_some() {
                    return Err(err("duplicate arc id"));
                }
            }
            "conclusions" => {
                for w in words {
                    ps.conclusions.push(ArcId(num(Some(w))?));
                }
            }
            "type" => {
                let id = ArcId(num(words.next())?);
                let rest: Vec<&str> = words.collect();
                let f = parse_formula(&rest.join(" "))
                    .map_err(|e| err(&format!("bad formula: {e}")))?;
                ps.types.insert(id, f);
            }
            "jump" => {
                let s = NodeId(num(words.next())?);
                let t = NodeId(num(words.next())?);
                ps.jumps.insert(s, t);
            }
            _ => return Err(err("unknown directive")),
        }
    }
    Ok(ps)
}

/// Parses either format, choosing JSON when the text starts with `{`.
pub fn parse_ps(text: &str) -> Result<ProofStructure> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        parse_dsl(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;

    fn sample() -> ProofStructure {
        let mut ps = ProofStructure::new();
        let ax = ps.add_node(Label::Ax);
        let a = ps.add_conclusion(ax);
        let b = ps.add_conclusion(ax);
        let bot = ps.add_node(Label::Bot);
        let c = ps.add_conclusion(bot);
        ps.types.insert(a, Formula::atom("X"));
        ps.types.insert(b, Formula::dual_atom("X"));
        ps.types.insert(c, Formula::Bottom);
        ps.jumps.insert(bot, ax);
        ps
    }

    #[test]
    fn json_round_trip() {
        let ps = sample();
        let text = to_json(&ps);
        assert!(text.contains("\"premises\""));
        assert_eq!(parse_ps(&text).unwrap(), ps);
    }

    #[test]
    fn dsl_round_trip() {
        let ps = sample();
        assert_eq!(parse_ps(&to_dsl(&ps)).unwrap(), ps);
    }

    #[test]
    fn dsl_errors_carry_line() {
        let e = parse_dsl("node 1 ax\nfrob 2").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
    }
}
