//! Canonical jumps and jump-aware sequentialization for BTENLL and ICOMLL.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::split::{components_within, make_split, ordered_premises, without};
use super::{decompose, leaf, split_or_leaf, to_proof, Step};
use crate::error::{Error, Result};
use crate::formula::{FragmentId, Polarity};
use crate::graph::{Label, NodeId, ProofStructure};
use crate::sequent::{deseq_relation_holds, SequentProof};
use crate::switching::{check, Criterion};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JumpedPs {
    #[serde(skip)]
    pub ps: ProofStructure,
    pub jump_free: bool,
    pub jump_total: bool,
    pub jump_correct: bool,
}

impl JumpedPs {
    /// Jump-correct means jump-total and ACC on the structure with its jumps.
    pub fn new(ps: ProofStructure) -> Result<JumpedPs> {
        let jump_total = ps.is_jump_total();
        let jump_correct = jump_total && check(&ps, Criterion::Acc)?.holds;
        Ok(JumpedPs { jump_free: ps.is_jump_free(), jump_total, jump_correct, ps })
    }
}

fn validated(ps: &ProofStructure, frag: FragmentId) -> Result<ProofStructure> {
    let ps = ps.strip_jumps();
    let report = ps.validate(Some(frag));
    if !report.ok {
        return Err(Error::Invalid(report));
    }
    Ok(ps)
}

/// The nodes strictly below `n`, nearest first. Every node above a ⊥ has a
/// single conclusion, so this is a chain; the walk stops at a • or cut.
fn chain_below(ps: &ProofStructure, n: NodeId) -> Vec<NodeId> {
    let mut chain = Vec::new();
    let mut cur = n;
    loop {
        let outs = ps.node_conclusions(cur);
        if outs.len() != 1 {
            break;
        }
        cur = ps.head(outs[0]);
        chain.push(cur);
    }
    debug_assert_eq!(
        chain.iter().copied().collect::<BTreeSet<_>>(),
        ps.descendants(n),
        "the descendants of a ⊥ node are totally ordered"
    );
    chain
}

/// The jumps of a BTENLL-typed structure: each ⊥ node jumps to the
/// non-erasing premise of the first non-erasing node below it when that is a
/// ⅋, and to `m` otherwise. `m` must be a non-erasing link, not a •.
pub fn canonical_jumps_btenll(ps: &ProofStructure, m: NodeId) -> Result<JumpedPs> {
    let ps = validated(ps, FragmentId::Btenll)?;
    if !ps.nodes.contains_key(&m) {
        return Err(Error::UnknownNode(m));
    }
    if ps.label(m) == Label::Dot {
        return Err(Error::NotALink(m));
    }
    let erasing = ps.erasing_nodes();
    if erasing.contains(&m) {
        return Err(Error::ErasingNode(m));
    }
    let mut jumps = BTreeMap::new();
    for b in ps.bottoms() {
        let first = chain_below(&ps, b).into_iter().find(|v| !erasing.contains(v));
        let target = match first {
            Some(v) if ps.label(v) == Label::Parr => {
                let kept: Vec<NodeId> = ps.premise_order[&v]
                    .iter()
                    .map(|a| ps.tail(*a))
                    .filter(|t| !erasing.contains(t))
                    .collect();
                assert_eq!(kept.len(), 1, "a non-erasing ⅋ above an erasing one has one non-erasing premise");
                kept[0]
            }
            _ => m,
        };
        jumps.insert(b, target);
    }
    JumpedPs::new(ps.with_jumps(jumps))
}

fn polarity_of(ps: &ProofStructure, n: NodeId) -> Option<Polarity> {
    let outs = ps.node_conclusions(n);
    ps.type_of(*outs.first()?)?.polarity()
}

fn is_output(ps: &ProofStructure, n: NodeId) -> bool {
    polarity_of(ps, n) == Some(Polarity::Output)
}

/// The premise of a node carrying an output type.
fn output_premise(ps: &ProofStructure, n: NodeId) -> Option<crate::graph::ArcId> {
    ps.premises(n).into_iter().find(|a| ps.type_of(*a).and_then(|t| t.polarity()) == Some(Polarity::Output))
}

/// The jumps of an ICOMLL structure with one output conclusion: each ⊥ node
/// looks for the first output ⅋ below it (or the node of the output
/// conclusion) and jumps to the 1 or output ⊗ reached from there by
/// following output premises up through output ⅋ nodes.
pub fn canonical_jumps_icomll(ps: &ProofStructure) -> Result<JumpedPs> {
    let ps = validated(ps, FragmentId::Icomll)?;
    let outputs: Vec<_> = ps
        .conclusions
        .iter()
        .filter(|a| ps.type_of(**a).and_then(|t| t.polarity()) == Some(Polarity::Output))
        .collect();
    if outputs.len() != 1 {
        return Err(Error::OutputCount(outputs.len()));
    }
    let owner = ps.tail(*outputs[0]);
    let mut jumps = BTreeMap::new();
    for b in ps.bottoms() {
        let mut m = chain_below(&ps, b)
            .into_iter()
            .find(|v| ps.label(*v) == Label::Parr && is_output(&ps, *v))
            .unwrap_or(owner);
        while ps.label(m) == Label::Parr {
            let a = output_premise(&ps, m).ok_or_else(|| Error::Stuck(format!("output ⅋ {m} has no output premise")))?;
            m = ps.tail(a);
        }
        assert!(matches!(ps.label(m), Label::One | Label::Tensor), "output leaves are 1 or ⊗");
        jumps.insert(b, m);
    }
    JumpedPs::new(ps.with_jumps(jumps))
}

fn require(ps: &ProofStructure, c: Criterion) -> Result<()> {
    let v = check(ps, c)?;
    if v.holds {
        Ok(())
    } else {
        Err(Error::CriterionFails(Box::new(v)))
    }
}

fn btenll_step(ps: &ProofStructure) -> Result<Step> {
    let terminals = ps.terminal_nodes();
    let erasing = ps.erasing_nodes();
    let peelable = |n: &&NodeId| matches!(ps.label(**n), Label::Bot | Label::Parr);
    if let Some(n) = terminals.iter().filter(peelable).find(|n| erasing.contains(n)) {
        return Ok(Step::Peel(*n));
    }
    if let Some(n) = terminals.iter().find(|n| ps.label(**n) == Label::Parr) {
        return Ok(Step::Peel(*n));
    }
    split_or_leaf(ps, &terminals)
}

fn finish(pi: SequentProof, jumped: JumpedPs) -> Result<(SequentProof, JumpedPs)> {
    if !jumped.jump_correct {
        return Err(Error::NotJumpCorrect);
    }
    if !deseq_relation_holds(&pi, &jumped.ps)? {
        return Err(Error::Stuck("the proof does not desequentialize to the jumped structure".into()));
    }
    Ok((pi, jumped))
}

/// A proof of a (¬w⊗) BTENLL structure satisfying ACC_#w, together with the
/// canonical jumps for `m` under which the proof desequentializes to it.
pub fn sequentialize_btenll(ps: &ProofStructure, m: NodeId) -> Result<(SequentProof, JumpedPs)> {
    let jumped = canonical_jumps_btenll(ps, m)?;
    let base = jumped.ps.strip_jumps();
    if let Some((node, arc)) = base.wten_witness() {
        return Err(Error::NotWten { node, arc });
    }
    require(&base, Criterion::Accw)?;
    let pi = to_proof(&decompose(&base, &btenll_step)?, &base.types)?;
    finish(pi, jumped)
}

fn icomll_step(ps: &ProofStructure) -> Result<Step> {
    let terminals = ps.terminal_nodes();
    if let Some(n) = terminals.iter().find(|n| !is_output(ps, **n) && ps.label(**n) != Label::Cut) {
        return match ps.label(*n) {
            Label::Bot | Label::Parr => Ok(Step::Peel(*n)),
            Label::Tensor => {
                let a = output_premise(ps, *n).ok_or_else(|| Error::Stuck(format!("input ⊗ {n} has no output premise")))?;
                let comps = components_within(ps, &without(ps, *n));
                let with_a: BTreeSet<NodeId> =
                    comps.iter().find(|c| c.contains(&ps.tail(a))).cloned().unwrap_or_default();
                let rest: BTreeSet<NodeId> = without(ps, *n).difference(&with_a).copied().collect();
                let [l, _] = ordered_premises(ps, *n);
                Ok(Step::Split(Box::new(if l == a {
                    make_split(ps, *n, with_a, rest)
                } else {
                    make_split(ps, *n, rest, with_a)
                })))
            }
            other => Err(Error::Stuck(format!("unexpected terminal {other:?}"))),
        };
    }
    if let Some(n) = leaf(ps) {
        return Ok(Step::Leaf(n));
    }
    match terminals.iter().find(|n| ps.label(**n) == Label::Parr) {
        Some(n) => Ok(Step::Peel(*n)),
        None => split_or_leaf(ps, &terminals),
    }
}

/// A proof of an ICOMLL structure with one output conclusion, together with
/// its canonical jumps.
pub fn sequentialize_icomll(ps: &ProofStructure) -> Result<(SequentProof, JumpedPs)> {
    let jumped = canonical_jumps_icomll(ps)?;
    let base = jumped.ps.strip_jumps();
    let pi = to_proof(&decompose(&base, &icomll_step)?, &base.types)?;
    finish(pi, jumped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, Formula};
    use crate::sequent::desequentialize;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    /// ⊢ ⊥ ⅋ 1
    fn bot_parr_one() -> SequentProof {
        SequentProof::parr(SequentProof::ex(SequentProof::bot(SequentProof::one()), 0).unwrap()).unwrap()
    }

    #[test]
    fn icomll_jump_goes_to_the_output_leaf() {
        let ps = desequentialize(&bot_parr_one()).ps;
        let j = canonical_jumps_icomll(&ps).unwrap();
        let bot = ps.bottoms()[0];
        assert_eq!(j.ps.jumps[&bot], ps.nodes_with(Label::One)[0]);
        assert!(j.jump_correct);
        let (pi, _) = sequentialize_icomll(&ps).unwrap();
        assert_eq!(pi.conclusion, bot_parr_one().conclusion);
    }

    #[test]
    fn btenll_jump_to_the_surviving_premise() {
        let p = SequentProof::parr(SequentProof::bot(SequentProof::ax(f("X")))).unwrap();
        let p = SequentProof::parr(p).unwrap();
        let ps = desequentialize(&p).ps;
        let ax = ps.nodes_with(Label::Ax)[0];
        let j = canonical_jumps_btenll(&ps, ax).unwrap();
        let bot = ps.bottoms()[0];
        let inner = ps.tail(ps.premise_order[&ps.head(ps.node_conclusions(bot)[0])][0]);
        assert_eq!(j.ps.jumps[&bot], inner);
        let (pi, j2) = sequentialize_btenll(&ps, ax).unwrap();
        assert_eq!(pi.conclusion, p.conclusion);
        assert_eq!(j2, j);
    }

    #[test]
    fn erasing_and_unknown_targets() {
        let ps = desequentialize(&SequentProof::bot(SequentProof::ax(f("X")))).ps;
        let bot = ps.bottoms()[0];
        assert!(matches!(canonical_jumps_btenll(&ps, bot), Err(Error::ErasingNode(_))));
        assert!(matches!(canonical_jumps_btenll(&ps, NodeId(99)), Err(Error::UnknownNode(_))));
        let dot = ps.nodes_with(Label::Dot)[0];
        assert!(matches!(canonical_jumps_btenll(&ps, dot), Err(Error::NotALink(_))));
        let ax = ps.nodes_with(Label::Ax)[0];
        assert_eq!(canonical_jumps_btenll(&ps, ax).unwrap().ps.jumps[&bot], ax);
    }

    #[test]
    fn two_outputs_are_rejected() {
        let ps = desequentialize(&SequentProof::tensor(SequentProof::one(), SequentProof::one()).unwrap()).ps;
        assert!(canonical_jumps_icomll(&ps).is_ok());
        let mut two = ps.clone();
        let o = two.add_node(Label::One);
        let a = two.add_conclusion(o);
        two.types.insert(a, Formula::One);
        assert!(matches!(canonical_jumps_icomll(&two), Err(Error::OutputCount(2))));
    }
}
