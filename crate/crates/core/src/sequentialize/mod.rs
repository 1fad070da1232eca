//! From proof-structures back to sequent proofs.
//!
//! Every sequentializer builds a [`Decomposition`]: a tree of sub-structures,
//! each obtained by removing one terminal node, mirroring the last rule of a
//! proof. The tree is then read back as a proof, with exchanges inserted so
//! that every sequent lists its formulas in the order of the conclusions.

mod equiv;
mod jumps;
mod split;

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::graph::{canonical_form, iso, ArcId, CanonicalForm, Label, NodeId, ProofStructure};
use crate::sequent::{desequentialize, SequentProof};
use crate::switching::{check, Criterion};

pub use equiv::{proofs_equivalent, rewiring_equivalent, rewiring_oracle};
pub use jumps::{
    canonical_jumps_btenll, canonical_jumps_icomll, sequentialize_btenll, sequentialize_icomll,
    JumpedPs,
};
pub use split::{splitting_candidates, SplitAssignment};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// The terminal node removed at this step.
    pub node: NodeId,
    pub label: Label,
    pub ps: ProofStructure,
    /// Sub-structures; for cut and ⊗ the part holding the left premise comes first.
    pub children: Vec<Decomposition>,
}

pub(crate) enum Step {
    Leaf(NodeId),
    Peel(NodeId),
    Split(Box<split::SplitAssignment>),
}

pub(crate) fn decompose(
    ps: &ProofStructure,
    choose: &dyn Fn(&ProofStructure) -> Result<Step>,
) -> Result<Decomposition> {
    let (node, children) = match choose(ps)? {
        Step::Leaf(n) => (n, vec![]),
        Step::Peel(n) => (n, vec![decompose(&split::peel(ps, n), choose)?]),
        Step::Split(s) => (s.node, vec![decompose(&s.left, choose)?, decompose(&s.right, choose)?]),
    };
    Ok(Decomposition { node, label: ps.label(node), ps: ps.clone(), children })
}

/// The single non-• node, when it is an ax or 1 node.
pub(crate) fn leaf(ps: &ProofStructure) -> Option<NodeId> {
    let mut inner = ps.nodes.iter().filter(|(_, l)| **l != Label::Dot);
    match (inner.next(), inner.next()) {
        (Some((n, Label::Ax | Label::One)), None) => Some(*n),
        _ => None,
    }
}

fn wten_step(ps: &ProofStructure) -> Result<Step> {
    let terminals = ps.terminal_nodes();
    if let Some(n) = terminals.iter().find(|n| matches!(ps.label(**n), Label::Bot | Label::Parr)) {
        return Ok(Step::Peel(*n));
    }
    split_or_leaf(ps, &terminals)
}

pub(crate) fn split_or_leaf(ps: &ProofStructure, terminals: &[NodeId]) -> Result<Step> {
    if let Some(n) = leaf(ps) {
        return Ok(Step::Leaf(n));
    }
    for n in terminals {
        if matches!(ps.label(*n), Label::Cut | Label::Tensor) {
            if let Some(s) = split::splits_at(ps, *n).into_iter().next() {
                return Ok(Step::Split(Box::new(s)));
            }
        }
    }
    Err(Error::Stuck(format!("no splitting node among {} terminal nodes", terminals.len())))
}

/// Reads a decomposition back as a proof whose conclusion follows the
/// conclusion order of `d.ps`, using `types` for every arc.
pub fn to_proof(d: &Decomposition, types: &BTreeMap<ArcId, Formula>) -> Result<SequentProof> {
    let ty = |a: ArcId| types.get(&a).cloned().ok_or_else(|| Error::Untypable(format!("arc {a} has no type")));
    let rule_err = |e: Error| Error::Stuck(e.to_string());
    let own = d.ps.node_conclusions(d.node);
    let sub = |i: usize| to_proof(&d.children[i], types);
    let concl = |i: usize| d.children[i].ps.conclusions.clone();
    let (proof, arcs) = match d.label {
        Label::Ax => (SequentProof::ax(ty(own[0])?), own.clone()),
        Label::One => (SequentProof::one(), own.clone()),
        Label::Bot => {
            let mut arcs = concl(0);
            arcs.push(own[0]);
            (SequentProof::bot(sub(0)?), arcs)
        }
        Label::Parr => {
            let mut arcs = concl(0);
            arcs.truncate(arcs.len() - 2);
            arcs.push(own[0]);
            (SequentProof::parr(sub(0)?).map_err(rule_err)?, arcs)
        }
        Label::Tensor | Label::Cut => {
            let (left, right) = (concl(0), concl(1));
            let mut arcs = left[..left.len() - 1].to_vec();
            let (p1, p2) = (sub(0)?, sub(1)?);
            let proof = if d.label == Label::Tensor {
                arcs.push(own[0]);
                SequentProof::tensor(p1, p2)
            } else {
                SequentProof::cut(p1, p2)
            }
            .map_err(rule_err)?;
            arcs.extend_from_slice(&right[1..]);
            (proof, arcs)
        }
        Label::Dot => return Err(Error::Stuck("a • node cannot be a rule".into())),
    };
    let perm: Vec<usize> = d
        .ps
        .conclusions
        .iter()
        .map(|c| arcs.iter().position(|a| a == c).expect("conclusion bookkeeping"))
        .collect();
    Ok(proof.reorder(&perm))
}

/// Types for an untyped structure: every ax node gets a fresh atom and cut
/// premises are unified up to negation.
pub fn infer_types(ps: &ProofStructure) -> Result<BTreeMap<ArcId, Formula>> {
    let order = ps.topological_order().ok_or_else(|| Error::Untypable("directed cycle".into()))?;
    let inc = ps.incidence();
    let mut types: BTreeMap<ArcId, Formula> = BTreeMap::new();
    let mut fresh = 0;
    for n in order {
        let outs = inc.outs(n);
        let t = match ps.label(n) {
            Label::Ax => {
                fresh += 1;
                let x = Formula::atom(&format!("X{fresh}"));
                types.insert(outs[1], x.negate());
                x
            }
            Label::One => Formula::One,
            Label::Bot => Formula::Bottom,
            Label::Tensor | Label::Parr => {
                let [l, r] = ps.premise_order[&n];
                let (a, b) = (types[&l].clone(), types[&r].clone());
                if ps.label(n) == Label::Tensor {
                    Formula::tensor(a, b)
                } else {
                    Formula::parr(a, b)
                }
            }
            Label::Cut | Label::Dot => continue,
        };
        types.insert(outs[0], t);
    }
    let mut subst = BTreeMap::new();
    for c in ps.nodes_with(Label::Cut) {
        let p = ps.premises(c);
        unify(&types[&p[0]], &types[&p[1]].negate(), &mut subst)?;
    }
    Ok(types.into_iter().map(|(a, t)| (a, apply(&t, &subst))).collect())
}

fn apply(f: &Formula, s: &BTreeMap<String, Formula>) -> Formula {
    match f {
        Formula::Atom { name, dual } => match s.get(name) {
            Some(t) => {
                let t = apply(t, s);
                if *dual {
                    t.negate()
                } else {
                    t
                }
            }
            None => f.clone(),
        },
        Formula::Tensor(a, b) => Formula::tensor(apply(a, s), apply(b, s)),
        Formula::Parr(a, b) => Formula::parr(apply(a, s), apply(b, s)),
        _ => f.clone(),
    }
}

fn occurs(x: &str, f: &Formula) -> bool {
    match f {
        Formula::Atom { name, .. } => name == x,
        Formula::Tensor(a, b) | Formula::Parr(a, b) => occurs(x, a) || occurs(x, b),
        _ => false,
    }
}

fn unify(a: &Formula, b: &Formula, s: &mut BTreeMap<String, Formula>) -> Result<()> {
    let (a, b) = (apply(a, s), apply(b, s));
    if a == b {
        return Ok(());
    }
    let clash = || Error::Untypable(format!("cannot unify {a} with {b}"));
    match (&a, &b) {
        (Formula::Atom { name, dual }, other) | (other, Formula::Atom { name, dual }) => {
            if occurs(name, other) {
                return Err(clash());
            }
            let v = if *dual { other.negate() } else { other.clone() };
            s.insert(name.clone(), v);
            Ok(())
        }
        (Formula::Tensor(a1, a2), Formula::Tensor(b1, b2))
        | (Formula::Parr(a1, a2), Formula::Parr(b1, b2)) => {
            unify(a1, b1, s)?;
            unify(a2, b2, s)
        }
        _ => Err(clash()),
    }
}

/// Sequentializes a (¬w⊗) structure satisfying ACC_#w. Jumps are ignored;
/// an untyped structure is typed by [`infer_types`] first.
pub fn sequentialize_wten(ps: &ProofStructure) -> Result<SequentProof> {
    let ps = ps.strip_jumps();
    let report = ps.validate(None);
    if !report.ok {
        return Err(Error::Invalid(report));
    }
    if let Some((node, arc)) = ps.wten_witness() {
        return Err(Error::NotWten { node, arc });
    }
    let verdict = check(&ps, Criterion::Accw)?;
    if !verdict.holds {
        return Err(Error::CriterionFails(Box::new(verdict)));
    }
    let types = if ps.is_typed() { ps.types.clone() } else { infer_types(&ps)? };
    let d = decompose(&ps, &wten_step)?;
    let pi = to_proof(&d, &types)?;
    let back = desequentialize(&pi).ps;
    let back = if ps.is_typed() { back } else { back.strip_types() };
    if !iso(&back, &ps) {
        return Err(Error::Stuck("desequentialization of the result differs from the input".into()));
    }
    Ok(pi)
}

/// Exhaustive search for a decomposition in which every step has one of the
/// shapes produced by desequentialization. Types and jumps are ignored.
pub fn is_sequential_oracle(ps: &ProofStructure) -> Option<Decomposition> {
    let ps = ps.strip_jumps().strip_types();
    let mut failed = HashSet::new();
    oracle(&ps, &mut failed)
}

fn oracle(ps: &ProofStructure, failed: &mut HashSet<CanonicalForm>) -> Option<Decomposition> {
    if ps.nodes.values().all(|l| *l == Label::Dot) {
        return None;
    }
    if let Some(n) = leaf(ps) {
        return Some(Decomposition { node: n, label: ps.label(n), ps: ps.clone(), children: vec![] });
    }
    let key = canonical_form(ps);
    if failed.contains(&key) {
        return None;
    }
    for n in ps.terminal_nodes() {
        let label = ps.label(n);
        let children = match label {
            Label::Bot | Label::Parr => oracle(&split::peel(ps, n), failed).map(|d| vec![d]),
            Label::Tensor | Label::Cut => split::splits_at(ps, n).into_iter().find_map(|s| {
                let left = oracle(&s.left, failed)?;
                let right = oracle(&s.right, failed)?;
                Some(vec![left, right])
            }),
            _ => None,
        };
        if let Some(children) = children {
            return Some(Decomposition { node: n, label, ps: ps.clone(), children });
        }
    }
    failed.insert(key);
    None
}
