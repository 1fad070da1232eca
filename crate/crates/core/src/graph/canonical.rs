//! Canonical encodings of proof-structures up to isomorphism.
//!
//! Components reachable from the conclusions are numbered by a breadth-first
//! traversal started at each conclusion in order. Every node is entered
//! through a known arc, which fixes the order of its incident arcs (the other
//! ax conclusion or cut premise comes second), so that part of the labelling
//! is forced. Components without conclusions are started from every arc and
//! the smallest encoding wins; equal components may be permuted freely, and
//! jumps pointing into them are resolved by trying the permutations.

use std::collections::{BTreeMap, BTreeSet};

use super::{ArcId, Incidence, Label, NodeId, ProofStructure};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

pub fn canonical_form(ps: &ProofStructure) -> CanonicalForm {
    let (enc, _) = Canon::new(ps).optimal(1);
    CanonicalForm(enc)
}

pub fn iso(a: &ProofStructure, b: &ProofStructure) -> bool {
    canonical_form(a) == canonical_form(b)
}

/// Isomorphisms from `a` to `b` (node maps), at most `limit` of them.
pub fn isomorphisms(
    a: &ProofStructure,
    b: &ProofStructure,
    limit: usize,
) -> Vec<BTreeMap<NodeId, NodeId>> {
    let (ea, la) = Canon::new(a).optimal(1);
    let (eb, lbs) = Canon::new(b).optimal(limit);
    if ea != eb {
        return Vec::new();
    }
    lbs.iter().map(|lb| la[0].iter().copied().zip(lb.iter().copied()).collect()).collect()
}

type Order = Vec<(NodeId, Option<ArcId>)>;

struct Closed {
    encoding: Vec<u8>,
    orders: Vec<Order>,
}

struct Canon<'a> {
    ps: &'a ProofStructure,
    inc: Incidence,
}

impl<'a> Canon<'a> {
    fn new(ps: &'a ProofStructure) -> Canon<'a> {
        Canon { ps, inc: ps.incidence() }
    }

    fn other_end(&self, a: ArcId, v: NodeId) -> NodeId {
        let e = self.ps.arcs[&a];
        if e.tail == v {
            e.head
        } else {
            e.tail
        }
    }

    fn role_arcs(&self, v: NodeId, entering: Option<ArcId>) -> Vec<ArcId> {
        let ins = self.inc.ins(v);
        let outs = self.inc.outs(v);
        match self.ps.label(v) {
            Label::Ax | Label::Cut => {
                let side = if self.ps.label(v) == Label::Ax { outs } else { ins };
                match entering.filter(|e| side.contains(e)) {
                    Some(e) => {
                        let mut v = vec![e];
                        v.extend(side.iter().copied().filter(|a| *a != e));
                        v
                    }
                    None => side.to_vec(),
                }
            }
            _ => ins.iter().chain(outs).copied().collect(),
        }
    }

    fn bfs(&self, start: NodeId, entering: Option<ArcId>, seen: &mut BTreeSet<NodeId>) -> Order {
        let mut order = vec![(start, entering)];
        seen.insert(start);
        let mut i = 0;
        while i < order.len() {
            let (v, e) = order[i];
            for a in self.role_arcs(v, e) {
                let w = self.other_end(a, v);
                if seen.insert(w) {
                    order.push((w, Some(a)));
                }
            }
            i += 1;
        }
        order
    }

    fn encode_nodes(&self, order: &Order, num: &BTreeMap<NodeId, u32>, out: &mut Vec<u8>) {
        for &(v, e) in order {
            out.push(self.ps.label(v) as u8);
            let arcs = self.role_arcs(v, e);
            out.push(arcs.len() as u8);
            for a in arcs {
                put_u32(out, num[&self.other_end(a, v)]);
                if let Some(t) = self.ps.types.get(&a) {
                    put_str(out, &t.to_string());
                } else {
                    put_u32(out, 0);
                }
            }
        }
    }

    fn closed_component(&self, nodes: &[NodeId]) -> Closed {
        let arcs: Vec<ArcId> = nodes.iter().flat_map(|n| self.inc.ins(*n).to_vec()).collect();
        let starts: Vec<(NodeId, Option<ArcId>)> = if arcs.is_empty() {
            nodes.iter().map(|n| (*n, None)).collect()
        } else {
            arcs.iter().map(|a| (self.ps.head(*a), Some(*a))).collect()
        };
        let mut best: Option<Closed> = None;
        for (s, e) in starts {
            let order = self.bfs(s, e, &mut BTreeSet::new());
            let num: BTreeMap<NodeId, u32> =
                order.iter().enumerate().map(|(i, (n, _))| (*n, i as u32)).collect();
            let mut enc = Vec::new();
            self.encode_nodes(&order, &num, &mut enc);
            match &mut best {
                Some(b) if enc > b.encoding => {}
                Some(b) if enc == b.encoding => {
                    if !b.orders.iter().any(|o| same_nodes(o, &order)) {
                        b.orders.push(order);
                    }
                }
                _ => best = Some(Closed { encoding: enc, orders: vec![order] }),
            }
        }
        best.expect("non-empty component")
    }

    fn full_encoding(&self, order: &Order) -> Vec<u8> {
        let num: BTreeMap<NodeId, u32> =
            order.iter().enumerate().map(|(i, (n, _))| (*n, i as u32)).collect();
        let mut out = Vec::new();
        out.push(self.ps.is_typed() as u8);
        put_u32(&mut out, order.len() as u32);
        self.encode_nodes(order, &num, &mut out);
        put_u32(&mut out, self.ps.conclusions.len() as u32);
        for c in &self.ps.conclusions {
            put_u32(&mut out, num[&self.ps.head(*c)]);
        }
        let mut jumps: Vec<(u32, u32)> =
            self.ps.jumps.iter().map(|(s, t)| (num[s], num[t])).collect();
        jumps.sort();
        put_u32(&mut out, jumps.len() as u32);
        for (s, t) in jumps {
            put_u32(&mut out, s);
            put_u32(&mut out, t);
        }
        out
    }

    /// The minimal encoding and up to `limit` labellings achieving it.
    fn optimal(&self, limit: usize) -> (Vec<u8>, Vec<Vec<NodeId>>) {
        let mut seen = BTreeSet::new();
        let mut prefix: Order = Vec::new();
        for c in &self.ps.conclusions {
            let dot = self.ps.head(*c);
            if !seen.contains(&dot) {
                prefix.extend(self.bfs(dot, Some(*c), &mut seen));
            }
        }
        let mut closed: Vec<Closed> = self
            .ps
            .components()
            .into_iter()
            .filter(|comp| !seen.contains(&comp[0]))
            .map(|comp| self.closed_component(&comp))
            .collect();
        closed.sort_by(|a, b| a.encoding.cmp(&b.encoding));

        let closed_nodes: BTreeSet<NodeId> =
            closed.iter().flat_map(|c| c.orders[0].iter().map(|(n, _)| *n)).collect();
        let jumps_matter = self
            .ps
            .jumps
            .iter()
            .any(|(s, t)| closed_nodes.contains(s) || closed_nodes.contains(t));

        let mut groups: Vec<Vec<&Closed>> = Vec::new();
        for c in &closed {
            match groups.last_mut() {
                Some(g) if g[0].encoding == c.encoding => g.push(c),
                _ => groups.push(vec![c]),
            }
        }

        let search_limit = if jumps_matter { 200_000 } else { limit };
        let mut candidates: Vec<Order> = Vec::new();
        enumerate(&groups, 0, prefix, &mut candidates, search_limit);

        if !jumps_matter {
            let enc = self.full_encoding(&candidates[0]);
            let labels = candidates.into_iter().take(limit).map(nodes_of).collect();
            return (enc, labels);
        }
        let mut best: Option<Vec<u8>> = None;
        let mut labels = Vec::new();
        for cand in candidates {
            let enc = self.full_encoding(&cand);
            match &best {
                Some(b) if enc > *b => {}
                Some(b) if enc == *b => {
                    if labels.len() < limit {
                        labels.push(nodes_of(cand));
                    }
                }
                _ => {
                    best = Some(enc);
                    labels = vec![nodes_of(cand)];
                }
            }
        }
        (best.unwrap(), labels)
    }
}

fn enumerate(groups: &[Vec<&Closed>], gi: usize, prefix: Order, out: &mut Vec<Order>, limit: usize) {
    if out.len() >= limit {
        return;
    }
    let Some(group) = groups.get(gi) else {
        out.push(prefix);
        return;
    };
    let mut perms = Vec::new();
    permutations(group.len(), &mut Vec::new(), &mut perms);
    for perm in perms {
        place(groups, gi, group, &perm, 0, prefix.clone(), out, limit);
        if out.len() >= limit {
            return;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn place(
    groups: &[Vec<&Closed>],
    gi: usize,
    group: &[&Closed],
    perm: &[usize],
    k: usize,
    prefix: Order,
    out: &mut Vec<Order>,
    limit: usize,
) {
    if k == perm.len() {
        enumerate(groups, gi + 1, prefix, out, limit);
        return;
    }
    for order in &group[perm[k]].orders {
        let mut next = prefix.clone();
        next.extend(order.iter().copied());
        place(groups, gi, group, perm, k + 1, next, out, limit);
        if out.len() >= limit {
            return;
        }
    }
}

fn permutations(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for i in 0..n {
        if !cur.contains(&i) {
            cur.push(i);
            permutations(n, cur, out);
            cur.pop();
        }
    }
}

fn nodes_of(order: Order) -> Vec<NodeId> {
    order.into_iter().map(|(n, _)| n).collect()
}

fn same_nodes(a: &Order, b: &Order) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.0 == y.0)
}

fn put_u32(out: &mut Vec<u8>, x: u32) {
    out.extend_from_slice(&x.to_be_bytes());
}

fn put_str(out: &mut Vec<u8>, s: &str) {
    put_u32(out, s.len() as u32 + 1);
    out.extend_from_slice(s.as_bytes());
}
