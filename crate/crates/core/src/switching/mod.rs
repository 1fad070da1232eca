//! Switchings, switching graphs and the correctness criteria.

mod criteria;
mod paths;

use std::collections::{BTreeMap, HashMap};

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::Polarity;
use crate::graph::{ArcId, Label, NodeId, ProofStructure};

pub use criteria::{
    check, check_with, output_stats, CheckOptions, ComponentCensus, Criterion, OutputStats,
    SwitchingStats, Verdict,
};
pub use paths::{paths_from, switching_paths, Path, PathFlavor};

/// A premise choice for every ⅋ node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Switching(pub BTreeMap<NodeId, ArcId>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    /// Forces the non-erasing premise when exactly one premise is non-erasing.
    WCompatible,
    /// Forces the output premise of output ⅋ nodes.
    Intuitionistic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SgNodeOrigin {
    Node(NodeId),
    /// The fresh • node added for the given ⅋ node.
    FreshDot(NodeId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SgArcOrigin {
    Arc(ArcId),
    /// Jump arc from the given ⊥ node.
    Jump(NodeId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingGraph {
    pub nodes: Vec<(SgNodeOrigin, Label)>,
    /// (tail, head, origin) with ends indexing `nodes`.
    pub arcs: Vec<(usize, usize, SgArcOrigin)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentAnalysis {
    pub cc: usize,
    pub acyclic: bool,
    /// Node indices of each component, ordered by smallest index.
    pub components: Vec<Vec<usize>>,
}

/// Enumerates the switchings allowed by `filter`, ⅋ nodes varying in id order
/// with the last one fastest; the first switching picks left premises.
pub fn switchings(ps: &ProofStructure, filter: Filter) -> Result<impl Iterator<Item = Switching>> {
    let prep = Prepared::new(ps);
    let options = prep.options(ps, filter)?;
    let parrs: Vec<(NodeId, [ArcId; 2])> =
        prep.parrs.iter().map(|p| (p.node, [prep.arc_ids[p.premises[0]], prep.arc_ids[p.premises[1]]])).collect();
    Ok(Radix::new(options).map(move |choice| {
        Switching(parrs.iter().zip(choice).map(|((n, arcs), c)| (*n, arcs[c as usize])).collect())
    }))
}

pub fn switching_graph(ps: &ProofStructure, phi: &Switching) -> SwitchingGraph {
    let mut nodes: Vec<(SgNodeOrigin, Label)> =
        ps.nodes.iter().map(|(n, l)| (SgNodeOrigin::Node(*n), *l)).collect();
    let index: HashMap<NodeId, usize> =
        ps.nodes.keys().enumerate().map(|(i, n)| (*n, i)).collect();
    let mut rehead: HashMap<ArcId, usize> = HashMap::new();
    for (n, order) in &ps.premise_order {
        if ps.label(*n) != Label::Parr {
            continue;
        }
        let chosen = phi.0.get(n).copied().unwrap_or(order[0]);
        let fresh = nodes.len();
        nodes.push((SgNodeOrigin::FreshDot(*n), Label::Dot));
        for a in order {
            if *a != chosen {
                rehead.insert(*a, fresh);
            }
        }
    }
    let mut arcs: Vec<(usize, usize, SgArcOrigin)> = ps
        .arcs
        .iter()
        .map(|(a, e)| {
            let head = rehead.get(a).copied().unwrap_or(index[&e.head]);
            (index[&e.tail], head, SgArcOrigin::Arc(*a))
        })
        .collect();
    for (s, t) in &ps.jumps {
        arcs.push((index[s], index[t], SgArcOrigin::Jump(*s)));
    }
    SwitchingGraph { nodes, arcs }
}

pub fn components_and_acyclicity(g: &SwitchingGraph) -> ComponentAnalysis {
    let n = g.nodes.len();
    let mut uf = UnionFind::<usize>::new(n);
    let mut acyclic = true;
    for (t, h, _) in &g.arcs {
        if !uf.union(*t, *h) {
            acyclic = false;
        }
    }
    let components = group(&mut uf, n);
    let cc = components.len();
    if acyclic {
        assert_eq!(cc as isize, n as isize - g.arcs.len() as isize, "acyclic graph: cc = nodes - arcs");
    }
    ComponentAnalysis { cc, acyclic, components }
}

fn group(uf: &mut UnionFind<usize>, n: usize) -> Vec<Vec<usize>> {
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut first: HashMap<usize, usize> = HashMap::new();
    for v in 0..n {
        let r = uf.find_mut(v);
        let key = *first.entry(r).or_insert(v);
        by_root.entry(key).or_default().push(v);
    }
    by_root.into_values().collect()
}

pub(crate) struct Parr {
    pub node: NodeId,
    pub premises: [usize; 2],
}

/// Dense view of a structure for fast repeated switching analysis.
pub(crate) struct Prepared {
    pub ids: Vec<NodeId>,
    pub labels: Vec<Label>,
    pub arcs: Vec<(usize, usize)>,
    pub arc_ids: Vec<ArcId>,
    pub parrs: Vec<Parr>,
    pub erasing: Vec<bool>,
    pub jumps: Vec<(usize, usize)>,
}

pub(crate) struct Analysis {
    pub acyclic: bool,
    pub comp: Vec<usize>,
    pub cc: usize,
    pub heads: Vec<usize>,
}

impl Prepared {
    pub fn new(ps: &ProofStructure) -> Prepared {
        let ids: Vec<NodeId> = ps.nodes.keys().copied().collect();
        let index: HashMap<NodeId, usize> = ids.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        let arc_ids: Vec<ArcId> = ps.arcs.keys().copied().collect();
        let arc_index: HashMap<ArcId, usize> =
            arc_ids.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let arcs = ps.arcs.values().map(|e| (index[&e.tail], index[&e.head])).collect();
        let parrs = ps
            .premise_order
            .iter()
            .filter(|(n, _)| ps.label(**n) == Label::Parr)
            .map(|(n, [l, r])| Parr { node: *n, premises: [arc_index[l], arc_index[r]] })
            .collect();
        let erasing_set = ps.erasing_nodes();
        let erasing = ids.iter().map(|n| erasing_set.contains(n)).collect();
        let jumps = ps.jumps.iter().map(|(s, t)| (index[s], index[t])).collect();
        let labels = ids.iter().map(|n| ps.label(*n)).collect();
        Prepared { ids, labels, arcs, arc_ids, parrs, erasing, jumps }
    }

    pub fn node_count(&self) -> usize {
        self.ids.len() + self.parrs.len()
    }

    /// Allowed choices (0 = left, 1 = right) per ⅋ node.
    pub fn options(&self, ps: &ProofStructure, filter: Filter) -> Result<Vec<Vec<u8>>> {
        let mut out = Vec::with_capacity(self.parrs.len());
        for p in &self.parrs {
            let opts = match filter {
                Filter::All => vec![0, 1],
                Filter::WCompatible => {
                    let non_erasing: Vec<u8> = (0..2u8)
                        .filter(|i| !self.erasing[self.arcs[p.premises[*i as usize]].0])
                        .collect();
                    if non_erasing.len() == 1 {
                        non_erasing
                    } else {
                        vec![0, 1]
                    }
                }
                Filter::Intuitionistic => {
                    let pol = |a: ArcId| -> Result<Polarity> {
                        ps.type_of(a)
                            .and_then(|t| t.polarity())
                            .ok_or(Error::PolarityTypingRequired)
                    };
                    let own = pol(ps.node_conclusions(p.node)[0])?;
                    let sides = [pol(self.arc_ids[p.premises[0]])?, pol(self.arc_ids[p.premises[1]])?];
                    if own == Polarity::Output {
                        let outs: Vec<u8> =
                            (0..2u8).filter(|i| sides[*i as usize] == Polarity::Output).collect();
                        assert_eq!(outs.len(), 1, "output ⅋ node {} needs exactly one output premise", p.node);
                        outs
                    } else {
                        vec![0, 1]
                    }
                }
            };
            out.push(opts);
        }
        Ok(out)
    }

    pub fn head_index(&self, arc: usize, choice: &[u8], fresh_of: &[Option<(usize, usize)>]) -> usize {
        match fresh_of[arc] {
            Some((k, side)) if choice[k] as usize != side => self.ids.len() + k,
            _ => self.arcs[arc].1,
        }
    }

    pub fn fresh_map(&self) -> Vec<Option<(usize, usize)>> {
        let mut m = vec![None; self.arcs.len()];
        for (k, p) in self.parrs.iter().enumerate() {
            m[p.premises[0]] = Some((k, 0));
            m[p.premises[1]] = Some((k, 1));
        }
        m
    }

    pub fn analyze(&self, choice: &[u8], fresh_of: &[Option<(usize, usize)>]) -> Analysis {
        let n = self.node_count();
        let mut uf = UnionFind::<usize>::new(n);
        let mut acyclic = true;
        let mut heads = vec![0; n];
        for (i, (t, _)) in self.arcs.iter().enumerate() {
            let h = self.head_index(i, choice, fresh_of);
            heads[h] += 1;
            if !uf.union(*t, h) {
                acyclic = false;
            }
        }
        for (s, t) in &self.jumps {
            heads[*t] += 1;
            if !uf.union(*s, *t) {
                acyclic = false;
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut roots: HashMap<usize, usize> = HashMap::new();
        for (v, slot) in comp.iter_mut().enumerate() {
            let r = uf.find_mut(v);
            let next = roots.len();
            *slot = *roots.entry(r).or_insert(next);
        }
        let cc = roots.len();
        if acyclic {
            let arcs = self.arcs.len() + self.jumps.len();
            assert_eq!(cc as isize, n as isize - arcs as isize, "acyclic graph: cc = nodes - arcs");
        }
        Analysis { acyclic, comp, cc, heads }
    }

    pub fn census(&self, an: &Analysis) -> Vec<ComponentCensus> {
        let mut out = vec![ComponentCensus::default(); an.cc];
        let mut non_single = vec![0usize; an.cc];
        for v in 0..self.node_count() {
            let c = &mut out[an.comp[v]];
            c.nodes += 1;
            if v < self.ids.len() {
                if self.erasing[v] {
                    c.erasing += 1;
                }
                if self.labels[v] == Label::Bot {
                    c.bottoms += 1;
                    continue;
                }
            }
            if an.heads[v] != 1 {
                non_single[an.comp[v]] += 1;
            }
        }
        for (c, bad) in out.iter_mut().zip(non_single) {
            c.thread = c.bottoms == 1 && bad == 0;
        }
        out
    }

    pub fn switching(&self, choice: &[u8]) -> Switching {
        Switching(
            self.parrs
                .iter()
                .zip(choice)
                .map(|(p, c)| (p.node, self.arc_ids[p.premises[*c as usize]]))
                .collect(),
        )
    }
}

/// Mixed-radix counter over per-position option lists.
pub(crate) struct Radix {
    options: Vec<Vec<u8>>,
    pos: Vec<usize>,
    done: bool,
}

impl Radix {
    pub fn new(options: Vec<Vec<u8>>) -> Radix {
        let pos = vec![0; options.len()];
        Radix { options, pos, done: false }
    }
}

impl Iterator for Radix {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let item = self.pos.iter().zip(&self.options).map(|(i, o)| o[*i]).collect();
        let mut k = self.options.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.pos[k] += 1;
            if self.pos[k] < self.options[k].len() {
                break;
            }
            self.pos[k] = 0;
        }
        Some(item)
    }
}
