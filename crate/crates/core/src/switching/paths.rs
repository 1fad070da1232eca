//! Path enumeration in a proof-structure (jumps ignored).

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{ArcId, Label, NodeId, ProofStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathFlavor {
    /// Never contains both premises of a ⅋ node.
    Switching,
    /// A switching path that never uses the unique erasing-side premise of a ⅋ node.
    WSwitching,
    Directed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub nodes: Vec<NodeId>,
    pub arcs: Vec<ArcId>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn last(&self) -> NodeId {
        *self.nodes.last().unwrap()
    }
}

/// Every path starting at `from`, the empty one included. Nodes do not
/// repeat, except that a path may end where it started (a cycle).
pub fn paths_from(ps: &ProofStructure, from: NodeId, flavor: PathFlavor) -> Vec<Path> {
    let inc = ps.incidence();
    let erasing = ps.erasing_nodes();
    let mut parr_of: BTreeMap<ArcId, (NodeId, ArcId)> = BTreeMap::new();
    let mut forbidden: BTreeSet<ArcId> = BTreeSet::new();
    for (n, [l, r]) in &ps.premise_order {
        if ps.label(*n) != Label::Parr {
            continue;
        }
        parr_of.insert(*l, (*n, *r));
        parr_of.insert(*r, (*n, *l));
        let el = erasing.contains(&ps.tail(*l));
        let er = erasing.contains(&ps.tail(*r));
        if flavor == PathFlavor::WSwitching && el != er {
            forbidden.insert(if el { *l } else { *r });
        }
    }

    let mut out = vec![Path { nodes: vec![from], arcs: vec![] }];
    let mut cur = Path { nodes: vec![from], arcs: vec![] };
    let mut on_path: BTreeSet<NodeId> = BTreeSet::from([from]);
    let ctx = Ctx { ps, inc: &inc, flavor, parr_of: &parr_of, forbidden: &forbidden, from };
    ctx.extend(&mut cur, &mut on_path, &mut out);
    out
}

pub fn switching_paths(ps: &ProofStructure, from: NodeId, to: NodeId, flavor: PathFlavor) -> Vec<Path> {
    paths_from(ps, from, flavor).into_iter().filter(|p| p.last() == to).collect()
}

struct Ctx<'a> {
    ps: &'a ProofStructure,
    inc: &'a crate::graph::Incidence,
    flavor: PathFlavor,
    parr_of: &'a BTreeMap<ArcId, (NodeId, ArcId)>,
    forbidden: &'a BTreeSet<ArcId>,
    from: NodeId,
}

impl Ctx<'_> {
    fn allowed(&self, cur: &Path, a: ArcId) -> bool {
        if cur.arcs.contains(&a) || self.forbidden.contains(&a) {
            return false;
        }
        if self.flavor != PathFlavor::Directed {
            if let Some((_, other)) = self.parr_of.get(&a) {
                if cur.arcs.contains(other) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self, cur: &mut Path, on_path: &mut BTreeSet<NodeId>, out: &mut Vec<Path>) {
        let v = cur.last();
        let mut steps: Vec<(ArcId, NodeId)> =
            self.inc.outs(v).iter().map(|a| (*a, self.ps.head(*a))).collect();
        if self.flavor != PathFlavor::Directed {
            steps.extend(self.inc.ins(v).iter().map(|a| (*a, self.ps.tail(*a))));
        }
        for (a, w) in steps {
            if !self.allowed(cur, a) {
                continue;
            }
            if w == self.from {
                let mut p = cur.clone();
                p.arcs.push(a);
                p.nodes.push(w);
                out.push(p);
                continue;
            }
            if on_path.contains(&w) {
                continue;
            }
            cur.arcs.push(a);
            cur.nodes.push(w);
            on_path.insert(w);
            out.push(cur.clone());
            self.extend(cur, on_path, out);
            on_path.remove(&w);
            cur.arcs.pop();
            cur.nodes.pop();
        }
    }
}
