use std::collections::{BTreeMap, BTreeSet};

use petgraph::unionfind::UnionFind;

use crate::graph::{canonical_form, ArcId, Label, NodeId, ProofStructure};

/// A way for a terminal cut or ⊗ node to split a structure in two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitAssignment {
    pub node: NodeId,
    pub left_nodes: BTreeSet<NodeId>,
    pub right_nodes: BTreeSet<NodeId>,
    /// Ends with the left (⊗) or first (cut) premise of `node`.
    pub left: ProofStructure,
    /// Starts with the other premise.
    pub right: ProofStructure,
}

/// Left and right premise; for a cut, in arc-id order.
pub(crate) fn ordered_premises(ps: &ProofStructure, n: NodeId) -> [ArcId; 2] {
    match ps.premise_order.get(&n) {
        Some(p) => *p,
        None => {
            let p = ps.premises(n);
            [p[0], p[1]]
        }
    }
}

/// The node set left after deleting `n` and the • nodes of its conclusions.
pub(crate) fn without(ps: &ProofStructure, n: NodeId) -> BTreeSet<NodeId> {
    let mut drop: BTreeSet<NodeId> = ps.node_conclusions(n).iter().map(|a| ps.head(*a)).collect();
    drop.insert(n);
    ps.nodes.keys().copied().filter(|v| !drop.contains(v)).collect()
}

/// Connected components of the sub-graph induced by `keep`, by smallest member.
pub(crate) fn components_within(ps: &ProofStructure, keep: &BTreeSet<NodeId>) -> Vec<BTreeSet<NodeId>> {
    let ids: Vec<NodeId> = keep.iter().copied().collect();
    let index: BTreeMap<NodeId, usize> = ids.iter().enumerate().map(|(i, n)| (*n, i)).collect();
    let mut uf = UnionFind::<usize>::new(ids.len());
    for e in ps.arcs.values() {
        if let (Some(t), Some(h)) = (index.get(&e.tail), index.get(&e.head)) {
            uf.union(*t, *h);
        }
    }
    let mut by_root: BTreeMap<usize, BTreeSet<NodeId>> = BTreeMap::new();
    for (i, n) in ids.iter().enumerate() {
        by_root.entry(uf.find_mut(i)).or_default().insert(*n);
    }
    let mut comps: Vec<BTreeSet<NodeId>> = by_root.into_values().collect();
    comps.sort_by_key(|c| *c.iter().next().unwrap());
    comps
}

pub(crate) fn make_split(
    ps: &ProofStructure,
    n: NodeId,
    left_nodes: BTreeSet<NodeId>,
    right_nodes: BTreeSet<NodeId>,
) -> SplitAssignment {
    let [l, r] = ordered_premises(ps, n);
    let left = ps.restrict(&left_nodes, &[], &[l]);
    let right = ps.restrict(&right_nodes, &[r], &[]);
    SplitAssignment { node: n, left_nodes, right_nodes, left, right }
}

/// Every split of `ps` at a terminal cut or ⊗ node whose premises fall in
/// different components once it is removed. Components containing neither
/// premise are distributed in every possible way; distributions giving
/// isomorphic pairs of parts are listed once.
pub fn splitting_candidates(ps: &ProofStructure) -> Vec<SplitAssignment> {
    let inc = ps.incidence();
    let mut out = Vec::new();
    for (&n, &label) in &ps.nodes {
        if !matches!(label, Label::Cut | Label::Tensor) || !ps.is_terminal(&inc, n) {
            continue;
        }
        out.extend(splits_at(ps, n));
    }
    out
}

pub(crate) fn splits_at(ps: &ProofStructure, n: NodeId) -> Vec<SplitAssignment> {
    let [l, r] = ordered_premises(ps, n);
    let keep = without(ps, n);
    let comps = components_within(ps, &keep);
    let find = |v: NodeId| comps.iter().position(|c| c.contains(&v)).unwrap();
    let (cl, cr) = (find(ps.tail(l)), find(ps.tail(r)));
    if cl == cr {
        return Vec::new();
    }
    let free: Vec<usize> = (0..comps.len()).filter(|i| *i != cl && *i != cr).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << free.len()) {
        let mut left = comps[cl].clone();
        let mut right = comps[cr].clone();
        for (bit, c) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                left.extend(comps[*c].iter().copied());
            } else {
                right.extend(comps[*c].iter().copied());
            }
        }
        let s = make_split(ps, n, left, right);
        if seen.insert((canonical_form(&s.left), canonical_form(&s.right))) {
            out.push(s);
        }
    }
    out
}

/// Removes a terminal ⊥ or ⅋ node; the premises of a ⅋ become the last two conclusions.
pub(crate) fn peel(ps: &ProofStructure, n: NodeId) -> ProofStructure {
    let keep = without(ps, n);
    let back = match ps.premise_order.get(&n) {
        Some(p) => p.to_vec(),
        None => Vec::new(),
    };
    ps.restrict(&keep, &[], &back)
}
