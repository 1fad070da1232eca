use std::collections::BTreeSet;

use super::{Rule, SequentProof};
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::graph::{isomorphisms, Label, NodeId, ProofStructure};
use crate::switching::{check, Criterion};

/// Isomorphisms tried by the jump-aware relation before giving up.
const ISO_LIMIT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeseqResult {
    pub ps: ProofStructure,
    /// Position of each formula of the proof's conclusion among the ps conclusions.
    pub conclusion_map: Vec<usize>,
    /// For each ⊥ rule, its ⊥ node and the nodes of its premise's desequentialization.
    pub bot_scopes: Vec<(NodeId, BTreeSet<NodeId>)>,
}

struct Builder {
    ps: ProofStructure,
    bot_scopes: Vec<(NodeId, BTreeSet<NodeId>)>,
}

impl Builder {
    /// Returns the pending conclusions (source node and type) in sequent order.
    fn build(&mut self, p: &SequentProof) -> Vec<(NodeId, Formula)> {
        match &p.rule {
            Rule::Ax => {
                let n = self.ps.add_node(Label::Ax);
                let a = p.conclusion.0[0].clone();
                vec![(n, a.clone()), (n, a.negate())]
            }
            Rule::OneR => vec![(self.ps.add_node(Label::One), Formula::One)],
            Rule::BotR => {
                let start = self.ps.fresh_node_id();
                let mut pend = self.build(&p.premises[0]);
                let scope = self.ps.nodes.range(start..).map(|(n, _)| *n).collect();
                let b = self.ps.add_node(Label::Bot);
                self.bot_scopes.push((b, scope));
                pend.push((b, Formula::Bottom));
                pend
            }
            Rule::Ex(i) => {
                let mut pend = self.build(&p.premises[0]);
                pend.swap(*i, i + 1);
                pend
            }
            Rule::ParrR => {
                let mut pend = self.build(&p.premises[0]);
                let b = pend.pop().unwrap();
                let a = pend.pop().unwrap();
                let f = Formula::parr(a.1.clone(), b.1.clone());
                let n = self.binary(Label::Parr, a, b);
                pend.push((n, f));
                pend
            }
            Rule::TensorR => {
                let mut left = self.build(&p.premises[0]);
                let mut right = self.build(&p.premises[1]);
                let a = left.pop().unwrap();
                let b = right.remove(0);
                let f = Formula::tensor(a.1.clone(), b.1.clone());
                let n = self.binary(Label::Tensor, a, b);
                left.push((n, f));
                left.extend(right);
                left
            }
            Rule::Cut(_) => {
                let mut left = self.build(&p.premises[0]);
                let mut right = self.build(&p.premises[1]);
                let a = left.pop().unwrap();
                let d = right.remove(0);
                let c = self.ps.add_node(Label::Cut);
                for (src, ty) in [a, d] {
                    let arc = self.ps.add_arc(src, c);
                    self.ps.types.insert(arc, ty);
                }
                left.extend(right);
                left
            }
        }
    }

    fn binary(&mut self, label: Label, a: (NodeId, Formula), b: (NodeId, Formula)) -> NodeId {
        let x = self.ps.add_arc(a.0, a.0);
        self.ps.types.insert(x, a.1);
        let y = self.ps.add_arc(b.0, b.0);
        self.ps.types.insert(y, b.1);
        self.ps.add_binary(label, x, y)
    }
}

/// π°, built by structural recursion on the last rule.
pub fn desequentialize(pi: &SequentProof) -> DeseqResult {
    let mut b = Builder { ps: ProofStructure::new(), bot_scopes: Vec::new() };
    let pend = b.build(pi);
    let k = pend.len();
    for (src, ty) in pend {
        let a = b.ps.add_conclusion(src);
        b.ps.types.insert(a, ty);
    }
    debug_assert!(b.ps.validate(None).ok, "{}", b.ps.validate(None));
    if cfg!(debug_assertions) && b.ps.count(Label::Parr) <= 10 {
        debug_assert!(check(&b.ps, Criterion::Accw).unwrap().holds, "π° must satisfy ACC_#w");
    }
    DeseqResult { ps: b.ps, conclusion_map: (0..k).collect(), bot_scopes: b.bot_scopes }
}

/// π ⇒ R: some isomorphism φ from π° to ⟨R⟩ sends every ⊥ node of a ⊥ rule
/// to a node whose jump lands in the image of that rule's premise.
pub fn deseq_relation_holds(pi: &SequentProof, r: &ProofStructure) -> Result<bool> {
    if !r.is_jump_total() {
        return Err(Error::NotJumpTotal);
    }
    let d = desequentialize(pi);
    let src = if r.is_typed() { d.ps } else { d.ps.strip_types() };
    let target = r.strip_jumps();
    let maps = isomorphisms(&src, &target, ISO_LIMIT);
    Ok(maps.iter().any(|phi| {
        d.bot_scopes.iter().all(|(b, scope)| {
            let t = r.jumps[&phi[b]];
            scope.iter().any(|n| phi[n] == t)
        })
    }))
}
