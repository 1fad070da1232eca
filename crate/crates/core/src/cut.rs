//! Cut elimination as graph rewriting.
//!
//! Jumps are dropped before any step: a step may erase a jump target and
//! there is no canonical way to repair it.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ArcEnds, ArcId, Label, NodeId, ProofStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RedexKind {
    AxiomCut,
    UnitCut,
    MultiplicativeCut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Redex {
    pub cut: NodeId,
    pub kind: RedexKind,
    /// Sources of the two cut premises: (ax, other), (1, ⊥) or (⊗, ⅋).
    pub participants: [NodeId; 2],
}

pub fn find_redexes(ps: &ProofStructure) -> (Vec<Redex>, Vec<NodeId>) {
    let inc = ps.incidence();
    let mut redexes = Vec::new();
    let mut clashes = Vec::new();
    for cut in ps.nodes_with(Label::Cut) {
        let ins = inc.ins(cut);
        let tails = [ps.tail(ins[0]), ps.tail(ins[1])];
        let labels = [ps.label(tails[0]), ps.label(tails[1])];
        let mut found = None;
        for i in 0..2 {
            if labels[i] == Label::Ax && unique_descent(ps, tails[i], ins[i], cut) {
                found = Some(Redex { cut, kind: RedexKind::AxiomCut, participants: [tails[i], tails[1 - i]] });
                break;
            }
        }
        if found.is_none() {
            for (i, j) in [(0, 1), (1, 0)] {
                let kind = match (labels[i], labels[j]) {
                    (Label::One, Label::Bot) => RedexKind::UnitCut,
                    (Label::Tensor, Label::Parr) => RedexKind::MultiplicativeCut,
                    _ => continue,
                };
                found = Some(Redex { cut, kind, participants: [tails[i], tails[j]] });
                break;
            }
        }
        match found {
            Some(r) => redexes.push(r),
            None => clashes.push(cut),
        }
    }
    (redexes, clashes)
}

/// The arc `via` is the only directed path from `ax` to `cut`.
fn unique_descent(ps: &ProofStructure, ax: NodeId, via: ArcId, cut: NodeId) -> bool {
    ps.node_conclusions(ax)
        .into_iter()
        .filter(|a| *a != via)
        .all(|d| {
            let h = ps.head(d);
            h != cut && !ps.precedes(h, cut)
        })
}

pub fn reduce_step(ps: &ProofStructure, r: &Redex) -> Result<ProofStructure> {
    let (redexes, _) = find_redexes(ps);
    if !redexes.contains(r) {
        return Err(Error::StaleRedex(r.cut));
    }
    let mut out = ps.strip_jumps();
    let ins = ps.premises(r.cut);
    match r.kind {
        RedexKind::AxiomCut => {
            let ax = r.participants[0];
            let from_ax = *ins.iter().find(|a| ps.tail(**a) == ax).unwrap();
            let e = *ins.iter().find(|a| **a != from_ax).unwrap();
            let d = *ps.node_conclusions(ax).iter().find(|a| **a != from_ax).unwrap();
            if ps.is_typed() && ps.types.get(&d) != ps.types.get(&e) {
                return Err(Error::TypeMismatch(e));
            }
            let h = ps.head(d);
            out.nodes.remove(&ax);
            out.nodes.remove(&r.cut);
            out.arcs.remove(&from_ax);
            out.arcs.remove(&d);
            out.types.remove(&from_ax);
            out.types.remove(&d);
            out.arcs.get_mut(&e).unwrap().head = h;
            if let Some(p) = out.premise_order.get_mut(&h) {
                for x in p.iter_mut() {
                    if *x == d {
                        *x = e;
                    }
                }
            }
            for c in out.conclusions.iter_mut() {
                if *c == d {
                    *c = e;
                }
            }
        }
        RedexKind::UnitCut => {
            for n in [r.cut, r.participants[0], r.participants[1]] {
                out.nodes.remove(&n);
            }
            for a in &ins {
                out.arcs.remove(a);
                out.types.remove(a);
            }
        }
        RedexKind::MultiplicativeCut => {
            let [t, p] = r.participants;
            let [l1, r1] = ps.premise_order[&t];
            let [l2, r2] = ps.premise_order[&p];
            for n in [r.cut, t, p] {
                out.nodes.remove(&n);
                out.premise_order.remove(&n);
            }
            for a in &ins {
                out.arcs.remove(a);
                out.types.remove(a);
            }
            for (x, y) in [(l1, l2), (r1, r2)] {
                let c = out.add_node(Label::Cut);
                out.arcs.insert(x, ArcEnds { tail: ps.tail(x), head: c });
                out.arcs.insert(y, ArcEnds { tail: ps.tail(y), head: c });
            }
        }
    }
    debug_assert!(out.validate(None).ok, "reduct invalid: {}", out.validate(None));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Always the redex with the smallest cut node id.
    Deterministic,
    RandomSeeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub kind: RedexKind,
    #[serde(rename = "cutNode")]
    pub cut_node: NodeId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
    pub normal_form: ProofStructure,
}

impl ReductionTrace {
    pub fn to_json_lines(&self) -> String {
        self.steps.iter().map(|s| serde_json::to_string(s).unwrap() + "\n").collect()
    }
}

pub fn parse_trace(text: &str) -> Result<Vec<Step>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(Error::from))
        .collect()
}

pub fn normalize(ps: &ProofStructure, strategy: Strategy) -> ReductionTrace {
    let mut rng = match strategy {
        Strategy::RandomSeeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::Deterministic => None,
    };
    let mut cur = ps.strip_jumps();
    let mut steps = Vec::new();
    loop {
        let (redexes, _) = find_redexes(&cur);
        let pick = match &mut rng {
            None => redexes.first(),
            Some(rng) => redexes.choose(rng),
        };
        let Some(r) = pick.copied() else { break };
        cur = reduce_step(&cur, &r).expect("redex just found");
        steps.push(Step { kind: r.kind, cut_node: r.cut });
    }
    ReductionTrace { steps, normal_form: cur }
}

/// Replays recorded steps; each must name a cut that is a redex of the expected kind.
pub fn replay(ps: &ProofStructure, steps: &[Step]) -> Result<ProofStructure> {
    let mut cur = ps.strip_jumps();
    for s in steps {
        let (redexes, _) = find_redexes(&cur);
        let r = redexes
            .into_iter()
            .find(|r| r.cut == s.cut_node && r.kind == s.kind)
            .ok_or(Error::StaleRedex(s.cut_node))?;
        cur = reduce_step(&cur, &r)?;
    }
    Ok(cur)
}

/// Cut nodes of a structure.
pub fn cuts(ps: &ProofStructure) -> BTreeSet<NodeId> {
    ps.nodes_with(Label::Cut).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso;

    fn unit_cut(ps: &mut ProofStructure) -> NodeId {
        let o = ps.add_node(Label::One);
        let b = ps.add_node(Label::Bot);
        let c = ps.add_node(Label::Cut);
        ps.add_arc(o, c);
        ps.add_arc(b, c);
        c
    }

    fn with_axiom() -> ProofStructure {
        let mut ps = ProofStructure::new();
        let ax = ps.add_node(Label::Ax);
        ps.add_conclusion(ax);
        ps.add_conclusion(ax);
        ps
    }

    #[test]
    fn unit_cut_deltas() {
        let mut ps = with_axiom();
        let c = unit_cut(&mut ps);
        let (rs, clashes) = find_redexes(&ps);
        assert!(clashes.is_empty());
        assert_eq!(rs.len(), 1);
        assert_eq!((rs[0].cut, rs[0].kind), (c, RedexKind::UnitCut));
        let out = reduce_step(&ps, &rs[0]).unwrap();
        assert_eq!(out.nodes.len(), ps.nodes.len() - 3);
        assert_eq!(out.arcs.len(), ps.arcs.len() - 2);
        assert_eq!(out.count(Label::Bot), ps.count(Label::Bot) - 1);
    }

    #[test]
    fn one_against_tensor_is_a_clash() {
        let mut ps = ProofStructure::new();
        let o = ps.add_node(Label::One);
        let a = ps.add_node(Label::One);
        let b = ps.add_node(Label::One);
        let x = ps.add_arc(a, a);
        let y = ps.add_arc(b, b);
        let t = ps.add_binary(Label::Tensor, x, y);
        let c = ps.add_node(Label::Cut);
        ps.add_arc(o, c);
        ps.add_arc(t, c);
        let (rs, clashes) = find_redexes(&ps);
        assert!(rs.is_empty());
        assert_eq!(clashes, vec![c]);
        assert!(normalize(&ps, Strategy::Deterministic).steps.is_empty());
    }

    #[test]
    fn multiplicative_step_pairs_sides() {
        // (1 ⊗ 1) cut (⊥ ⅋ ⊥)
        let mut ps = ProofStructure::new();
        let leaves: Vec<NodeId> =
            [Label::One, Label::One, Label::Bot, Label::Bot].iter().map(|l| ps.add_node(*l)).collect();
        let arcs: Vec<ArcId> = leaves.iter().map(|n| ps.add_arc(*n, *n)).collect();
        let t = ps.add_binary(Label::Tensor, arcs[0], arcs[1]);
        let p = ps.add_binary(Label::Parr, arcs[2], arcs[3]);
        let c = ps.add_node(Label::Cut);
        ps.add_arc(t, c);
        ps.add_arc(p, c);
        let (rs, _) = find_redexes(&ps);
        assert_eq!(rs[0].kind, RedexKind::MultiplicativeCut);
        let out = reduce_step(&ps, &rs[0]).unwrap();
        assert_eq!(out.nodes.len(), ps.nodes.len() - 1);
        assert_eq!(out.arcs.len(), ps.arcs.len() - 2);
        assert_eq!(cuts(&out).len(), 2);
        for c in cuts(&out) {
            let tails: Vec<Label> = out.premises(c).iter().map(|a| out.label(out.tail(*a))).collect();
            assert!(tails.contains(&Label::One) && tails.contains(&Label::Bot));
        }
        let nf = normalize(&ps, Strategy::Deterministic);
        assert!(nf.normal_form.nodes.is_empty());
        assert_eq!(replay(&ps, &nf.steps).unwrap(), nf.normal_form);
    }

    #[test]
    fn axiom_cut_splices() {
        // ax(a, b), cut(b, 1's conclusion) → the 1 with conclusion at a's head.
        let mut ps = ProofStructure::new();
        let ax = ps.add_node(Label::Ax);
        let one = ps.add_node(Label::One);
        let cut = ps.add_node(Label::Cut);
        ps.add_conclusion(ax);
        ps.add_arc(ax, cut);
        ps.add_arc(one, cut);
        let (rs, _) = find_redexes(&ps);
        assert_eq!(rs[0].kind, RedexKind::AxiomCut);
        let out = reduce_step(&ps, &rs[0]).unwrap();
        assert_eq!(out.nodes.len(), 2);
        let mut expect = ProofStructure::new();
        let o = expect.add_node(Label::One);
        expect.add_conclusion(o);
        assert!(iso(&out, &expect));
    }

    #[test]
    fn axiom_looping_into_its_cut_is_not_a_redex() {
        let mut ps = ProofStructure::new();
        let ax = ps.add_node(Label::Ax);
        let cut = ps.add_node(Label::Cut);
        ps.add_arc(ax, cut);
        ps.add_arc(ax, cut);
        let (rs, clashes) = find_redexes(&ps);
        assert!(rs.is_empty());
        assert_eq!(clashes, vec![cut]);
    }

    #[test]
    fn independent_unit_cuts_commute() {
        let mut ps = with_axiom();
        unit_cut(&mut ps);
        unit_cut(&mut ps);
        let a = normalize(&ps, Strategy::RandomSeeded(1)).normal_form;
        let b = normalize(&ps, Strategy::RandomSeeded(2)).normal_form;
        assert!(iso(&a, &b));
        assert!(iso(&a, &with_axiom()));
    }

    #[test]
    fn stale_redex_is_rejected() {
        let mut ps = with_axiom();
        let c = unit_cut(&mut ps);
        let r = Redex { cut: c, kind: RedexKind::AxiomCut, participants: [c, c] };
        assert!(matches!(reduce_step(&ps, &r), Err(Error::StaleRedex(_))));
    }
}
