//! Proof-structures: labelled dags with ordered premises, ordered
//! conclusions, optional arc types and an optional jump function.

mod canonical;
mod io;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::formula::{Formula, FragmentId};

pub use canonical::{canonical_form, isomorphisms, iso, CanonicalForm};
pub use io::{parse_dsl, parse_ps, to_dsl, to_json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Ax,
    Cut,
    One,
    Bot,
    Tensor,
    #[serde(rename = "par")]
    Parr,
    Dot,
}

impl Label {
    pub const ALL: [Label; 7] =
        [Label::Ax, Label::Cut, Label::One, Label::Bot, Label::Tensor, Label::Parr, Label::Dot];

    pub fn name(self) -> &'static str {
        match self {
            Label::Ax => "ax",
            Label::Cut => "cut",
            Label::One => "one",
            Label::Bot => "bot",
            Label::Tensor => "tensor",
            Label::Parr => "par",
            Label::Dot => "dot",
        }
    }

    pub fn from_name(s: &str) -> Option<Label> {
        Label::ALL.into_iter().find(|l| l.name() == s)
    }

    /// (premises, conclusions) required in a proof-structure.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Label::Ax => (0, 2),
            Label::Cut => (2, 0),
            Label::One | Label::Bot => (0, 1),
            Label::Tensor | Label::Parr => (2, 1),
            Label::Dot => (1, 0),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcEnds {
    pub tail: NodeId,
    pub head: NodeId,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProofStructure {
    pub nodes: BTreeMap<NodeId, Label>,
    pub arcs: BTreeMap<ArcId, ArcEnds>,
    /// Left and right premise of every ⊗ and ⅋ node.
    pub premise_order: BTreeMap<NodeId, [ArcId; 2]>,
    pub conclusions: Vec<ArcId>,
    /// Empty means untyped.
    pub types: BTreeMap<ArcId, Formula>,
    pub jumps: BTreeMap<NodeId, NodeId>,
}

/// Premise and conclusion arcs of every node, premises in left/right order.
#[derive(Debug, Clone)]
pub struct Incidence {
    pub ins: BTreeMap<NodeId, Vec<ArcId>>,
    pub outs: BTreeMap<NodeId, Vec<ArcId>>,
}

impl Incidence {
    pub fn ins(&self, n: NodeId) -> &[ArcId] {
        self.ins.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn outs(&self, n: NodeId) -> &[ArcId] {
        self.outs.get(&n).map_or(&[], Vec::as_slice)
    }
}

impl ProofStructure {
    pub fn new() -> ProofStructure {
        ProofStructure::default()
    }

    pub fn is_typed(&self) -> bool {
        !self.types.is_empty()
    }

    pub fn label(&self, n: NodeId) -> Label {
        self.nodes[&n]
    }

    pub fn tail(&self, a: ArcId) -> NodeId {
        self.arcs[&a].tail
    }

    pub fn head(&self, a: ArcId) -> NodeId {
        self.arcs[&a].head
    }

    pub fn type_of(&self, a: ArcId) -> Option<&Formula> {
        self.types.get(&a)
    }

    pub fn fresh_node_id(&self) -> NodeId {
        NodeId(self.nodes.keys().next_back().map_or(0, |n| n.0 + 1))
    }

    pub fn fresh_arc_id(&self) -> ArcId {
        ArcId(self.arcs.keys().next_back().map_or(0, |a| a.0 + 1))
    }

    pub fn add_node(&mut self, label: Label) -> NodeId {
        let id = self.fresh_node_id();
        self.nodes.insert(id, label);
        id
    }

    pub fn add_arc(&mut self, tail: NodeId, head: NodeId) -> ArcId {
        let id = self.fresh_arc_id();
        self.arcs.insert(id, ArcEnds { tail, head });
        id
    }

    /// Adds an arc from `tail` to a fresh • node and appends it to the conclusions.
    pub fn add_conclusion(&mut self, tail: NodeId) -> ArcId {
        let dot = self.add_node(Label::Dot);
        let a = self.add_arc(tail, dot);
        self.conclusions.push(a);
        a
    }

    /// Adds a ⊗ or ⅋ node over the given premises (whose heads are redirected to it).
    pub fn add_binary(&mut self, label: Label, left: ArcId, right: ArcId) -> NodeId {
        let n = self.add_node(label);
        self.arcs.get_mut(&left).unwrap().head = n;
        self.arcs.get_mut(&right).unwrap().head = n;
        self.premise_order.insert(n, [left, right]);
        n
    }

    pub fn incidence(&self) -> Incidence {
        let mut ins: BTreeMap<NodeId, Vec<ArcId>> = BTreeMap::new();
        let mut outs: BTreeMap<NodeId, Vec<ArcId>> = BTreeMap::new();
        for (&a, e) in &self.arcs {
            ins.entry(e.head).or_default().push(a);
            outs.entry(e.tail).or_default().push(a);
        }
        for (n, order) in &self.premise_order {
            if let Some(v) = ins.get_mut(n) {
                if v.len() == 2 && v.contains(&order[0]) && v.contains(&order[1]) {
                    *v = order.to_vec();
                }
            }
        }
        Incidence { ins, outs }
    }

    pub fn premises(&self, n: NodeId) -> Vec<ArcId> {
        if let Some(p) = self.premise_order.get(&n) {
            return p.to_vec();
        }
        self.arcs.iter().filter(|(_, e)| e.head == n).map(|(a, _)| *a).collect()
    }

    pub fn node_conclusions(&self, n: NodeId) -> Vec<ArcId> {
        self.arcs.iter().filter(|(_, e)| e.tail == n).map(|(a, _)| *a).collect()
    }

    pub fn nodes_with(&self, label: Label) -> Vec<NodeId> {
        self.nodes.iter().filter(|(_, l)| **l == label).map(|(n, _)| *n).collect()
    }

    /// The set w(R) of ⊥ nodes.
    pub fn bottoms(&self) -> Vec<NodeId> {
        self.nodes_with(Label::Bot)
    }

    pub fn count(&self, label: Label) -> usize {
        self.nodes.values().filter(|l| **l == label).count()
    }

    /// A non-• node all of whose conclusions are conclusions of the structure.
    pub fn is_terminal(&self, inc: &Incidence, n: NodeId) -> bool {
        self.label(n) != Label::Dot
            && inc.outs(n).iter().all(|a| self.label(self.head(*a)) == Label::Dot)
    }

    pub fn terminal_nodes(&self) -> Vec<NodeId> {
        let inc = self.incidence();
        self.nodes.keys().copied().filter(|n| self.is_terminal(&inc, *n)).collect()
    }

    /// The underlying jump-free structure ⟨R⟩.
    pub fn strip_jumps(&self) -> ProofStructure {
        ProofStructure { jumps: BTreeMap::new(), ..self.clone() }
    }

    pub fn strip_types(&self) -> ProofStructure {
        ProofStructure { types: BTreeMap::new(), ..self.clone() }
    }

    pub fn with_jumps(&self, jumps: BTreeMap<NodeId, NodeId>) -> ProofStructure {
        ProofStructure { jumps, ..self.clone() }
    }

    pub fn is_jump_free(&self) -> bool {
        self.jumps.is_empty()
    }

    /// dom(J) = w(R).
    pub fn is_jump_total(&self) -> bool {
        self.bottoms().into_iter().eq(self.jumps.keys().copied())
    }

    /// Nodes in a topological order (ties by id); `None` on a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<NodeId>> {
        let mut indeg: BTreeMap<NodeId, usize> = self.nodes.keys().map(|n| (*n, 0)).collect();
        let mut succ: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
        for e in self.arcs.values() {
            if let Some(d) = indeg.get_mut(&e.head) {
                *d += 1;
            }
            succ.entry(e.tail).or_default().push(e.head);
        }
        let mut ready: BTreeSet<NodeId> =
            indeg.iter().filter(|(_, d)| **d == 0).map(|(n, _)| *n).collect();
        let mut order = Vec::with_capacity(self.nodes.len());
        while let Some(n) = ready.pop_first() {
            order.push(n);
            for m in succ.get(&n).into_iter().flatten() {
                if let Some(d) = indeg.get_mut(m) {
                    *d -= 1;
                    if *d == 0 {
                        ready.insert(*m);
                    }
                }
            }
        }
        (order.len() == self.nodes.len()).then_some(order)
    }

    /// n ≺ m: a non-empty directed path from n to m exists.
    pub fn precedes(&self, n: NodeId, m: NodeId) -> bool {
        self.descendants(n).contains(&m)
    }

    /// {m : n ≺ m}.
    pub fn descendants(&self, n: NodeId) -> BTreeSet<NodeId> {
        let inc = self.incidence();
        let mut seen = BTreeSet::new();
        let mut stack = vec![n];
        while let Some(v) = stack.pop() {
            for a in inc.outs(v) {
                let h = self.head(*a);
                if seen.insert(h) {
                    stack.push(h);
                }
            }
        }
        seen
    }

    /// Least fixed point: ⊥, ⅋ and • nodes all of whose premises are
    /// conclusions of erasing nodes.
    pub fn erasing_nodes(&self) -> BTreeSet<NodeId> {
        let inc = self.incidence();
        let order = self.topological_order().expect("erasing_nodes needs a dag");
        let mut erasing = BTreeSet::new();
        for n in order {
            let eligible = matches!(self.label(n), Label::Bot | Label::Parr | Label::Dot);
            if eligible && inc.ins(n).iter().all(|a| erasing.contains(&self.tail(*a))) {
                erasing.insert(n);
            }
        }
        erasing
    }

    /// First premise of a cut or ⊗ node that is the conclusion of an erasing
    /// node, scanning nodes by id and premises in order.
    pub fn wten_witness(&self) -> Option<(NodeId, ArcId)> {
        let erasing = self.erasing_nodes();
        let inc = self.incidence();
        self.nodes
            .iter()
            .filter(|(_, l)| matches!(l, Label::Cut | Label::Tensor))
            .find_map(|(n, _)| {
                inc.ins(*n).iter().find(|a| erasing.contains(&self.tail(**a))).map(|a| (*n, *a))
            })
    }

    /// The (¬w⊗) condition.
    pub fn is_wten(&self) -> bool {
        self.wten_witness().is_none()
    }

    /// Connected components of the underlying undirected graph (jumps ignored),
    /// each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut adj: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
        for e in self.arcs.values() {
            adj.entry(e.tail).or_default().push(e.head);
            adj.entry(e.head).or_default().push(e.tail);
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &n in self.nodes.keys() {
            if !seen.insert(n) {
                continue;
            }
            let mut comp = vec![n];
            let mut queue = VecDeque::from([n]);
            while let Some(v) = queue.pop_front() {
                for w in adj.get(&v).into_iter().flatten() {
                    if seen.insert(*w) {
                        comp.push(*w);
                        queue.push_back(*w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Sub-structure induced by `keep`. The arcs in `front` and `back` (arcs
    /// from `keep` into removed nodes) become conclusions over fresh • nodes,
    /// placed before and after the surviving conclusions respectively.
    pub(crate) fn restrict(
        &self,
        keep: &BTreeSet<NodeId>,
        front: &[ArcId],
        back: &[ArcId],
    ) -> ProofStructure {
        let mut next = self.fresh_node_id().0;
        let mut ps = ProofStructure::new();
        for n in keep {
            ps.nodes.insert(*n, self.label(*n));
        }
        for (&a, e) in &self.arcs {
            if keep.contains(&e.tail) && keep.contains(&e.head) {
                ps.arcs.insert(a, *e);
            }
        }
        let mut reheaded = |ps: &mut ProofStructure, a: ArcId| {
            let dot = NodeId(next);
            next += 1;
            ps.nodes.insert(dot, Label::Dot);
            ps.arcs.insert(a, ArcEnds { tail: self.tail(a), head: dot });
        };
        let mut conclusions = Vec::new();
        for a in front {
            reheaded(&mut ps, *a);
            conclusions.push(*a);
        }
        conclusions.extend(self.conclusions.iter().copied().filter(|a| ps.arcs.contains_key(a)));
        for a in back {
            reheaded(&mut ps, *a);
            conclusions.push(*a);
        }
        ps.conclusions = conclusions;
        ps.premise_order = self
            .premise_order
            .iter()
            .filter(|(n, _)| keep.contains(n))
            .map(|(n, p)| (*n, *p))
            .collect();
        ps.types = self
            .types
            .iter()
            .filter(|(a, _)| ps.arcs.contains_key(a))
            .map(|(a, t)| (*a, t.clone()))
            .collect();
        ps.jumps = self
            .jumps
            .iter()
            .filter(|(s, t)| keep.contains(s) && keep.contains(t))
            .map(|(s, t)| (*s, *t))
            .collect();
        ps
    }

    /// Renames nodes and arcs through the given maps (ids absent from a map are kept).
    pub fn relabel(
        &self,
        node_map: &BTreeMap<NodeId, NodeId>,
        arc_map: &BTreeMap<ArcId, ArcId>,
    ) -> ProofStructure {
        let n = |x: NodeId| *node_map.get(&x).unwrap_or(&x);
        let a = |x: ArcId| *arc_map.get(&x).unwrap_or(&x);
        ProofStructure {
            nodes: self.nodes.iter().map(|(k, l)| (n(*k), *l)).collect(),
            arcs: self
                .arcs
                .iter()
                .map(|(k, e)| (a(*k), ArcEnds { tail: n(e.tail), head: n(e.head) }))
                .collect(),
            premise_order: self
                .premise_order
                .iter()
                .map(|(k, p)| (n(*k), [a(p[0]), a(p[1])]))
                .collect(),
            conclusions: self.conclusions.iter().map(|x| a(*x)).collect(),
            types: self.types.iter().map(|(k, t)| (a(*k), t.clone())).collect(),
            jumps: self.jumps.iter().map(|(s, t)| (n(*s), n(*t))).collect(),
        }
    }

    pub fn validate(&self, frag: Option<FragmentId>) -> ValidationReport {
        validate(self, frag)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub item: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub(crate) fn from_violations(violations: Vec<Violation>) -> ValidationReport {
        ValidationReport { ok: violations.is_empty(), violations }
    }

    pub fn has(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} ({}): {}", v.rule, v.item, v.message)?;
        }
        Ok(())
    }
}

pub fn validate(ps: &ProofStructure, frag: Option<FragmentId>) -> ValidationReport {
    let mut v = Vec::new();
    let mut push = |rule: &'static str, item: String, message: String| {
        v.push(Violation { rule, item, message });
    };

    let mut ends_ok = true;
    for (a, e) in &ps.arcs {
        if !ps.nodes.contains_key(&e.tail) || !ps.nodes.contains_key(&e.head) {
            push("arc-endpoints", format!("arc {a}"), "endpoint is not a node".into());
            ends_ok = false;
        } else if e.tail == e.head {
            push("arc-endpoints", format!("arc {a}"), "arc ends are not distinct".into());
            ends_ok = false;
        }
    }
    if !ends_ok {
        return ValidationReport::from_violations(v);
    }

    let inc = ps.incidence();
    for (&n, &label) in &ps.nodes {
        let (pi, po) = label.arity();
        let (i, o) = (inc.ins(n).len(), inc.outs(n).len());
        if label == Label::Parr && i == 1 && o == 1 {
            push("binary-parr", format!("node {n}"), "binary ⅋".into());
        } else if (i, o) != (pi, po) {
            push(
                "arity",
                format!("node {n}"),
                format!("{label} node has {i} premises and {o} conclusions, expected {pi} and {po}"),
            );
        }
        if matches!(label, Label::Tensor | Label::Parr) {
            match ps.premise_order.get(&n) {
                None => push("premise-order", format!("node {n}"), "missing premise order".into()),
                Some([l, r]) => {
                    let ins = inc.ins(n);
                    if l == r || !ins.contains(l) || !ins.contains(r) {
                        push(
                            "premise-order",
                            format!("node {n}"),
                            "premise order does not list the two premises".into(),
                        );
                    }
                }
            }
        }
    }
    for n in ps.premise_order.keys() {
        if !matches!(ps.nodes.get(n), Some(Label::Tensor | Label::Parr)) {
            push("premise-order", format!("node {n}"), "premise order on a non-⊗/⅋ node".into());
        }
    }

    if ps.topological_order().is_none() {
        push("dag", "graph".into(), "directed cycle".into());
    }

    let mut seen = BTreeSet::new();
    for a in &ps.conclusions {
        match ps.arcs.get(a) {
            None => push("conclusions", format!("arc {a}"), "unknown conclusion arc".into()),
            Some(e) if ps.nodes[&e.head] != Label::Dot => {
                push("conclusions", format!("arc {a}"), "conclusion is not a premise of a • node".into())
            }
            _ => {}
        }
        if !seen.insert(*a) {
            push("conclusions", format!("arc {a}"), "listed twice".into());
        }
    }
    for (a, e) in &ps.arcs {
        if ps.nodes[&e.head] == Label::Dot && !seen.contains(a) {
            push("conclusions", format!("arc {a}"), "premise of a • node missing from conclusions".into());
        }
    }

    for (s, t) in &ps.jumps {
        if ps.nodes.get(s) != Some(&Label::Bot) {
            push("jump-domain", format!("node {s}"), "jump source is not a ⊥ node".into());
        }
        if !ps.nodes.contains_key(t) {
            push("jump-target", format!("node {s}"), format!("jump target {t} is not a node"));
        } else if s == t {
            push("jump-target", format!("node {s}"), "jump to itself".into());
        }
    }

    if ps.is_typed() {
        check_types(ps, &inc, &mut v);
    }
    if let Some(frag) = frag {
        if !ps.is_typed() && !ps.arcs.is_empty() {
            v.push(Violation {
                rule: "fragment",
                item: "graph".into(),
                message: format!("a structure of {frag} must be typed"),
            });
        }
        for (a, t) in &ps.types {
            if t.in_fragment(frag).is_none() {
                v.push(Violation {
                    rule: "fragment",
                    item: format!("arc {a}"),
                    message: format!("type {t} is not in {frag}"),
                });
            }
        }
        if frag == FragmentId::Icomll {
            for (n, l) in &ps.nodes {
                if matches!(l, Label::Ax | Label::Cut) {
                    v.push(Violation {
                        rule: "fragment",
                        item: format!("node {n}"),
                        message: "icomll has no ax or cut node".into(),
                    });
                }
            }
        }
    }
    ValidationReport::from_violations(v)
}

fn check_types(ps: &ProofStructure, inc: &Incidence, v: &mut Vec<Violation>) {
    let mut push = |rule: &'static str, item: String, message: String| {
        v.push(Violation { rule, item, message });
    };
    for a in ps.arcs.keys() {
        if !ps.types.contains_key(a) {
            push("typing", format!("arc {a}"), "untyped arc in a typed structure".into());
        }
    }
    for a in ps.types.keys() {
        if !ps.arcs.contains_key(a) {
            push("typing", format!("arc {a}"), "type given for an unknown arc".into());
        }
    }
    let ty = |a: &ArcId| ps.types.get(a);
    for (&n, &label) in &ps.nodes {
        let ins = inc.ins(n);
        let outs = inc.outs(n);
        match label {
            Label::Ax if outs.len() == 2 => {
                if let (Some(x), Some(y)) = (ty(&outs[0]), ty(&outs[1])) {
                    if *x != y.negate() {
                        push("dual-ax-types", format!("node {n}"), "ax conclusions are not dual".into());
                    }
                }
            }
            Label::Cut if ins.len() == 2 => {
                if let (Some(x), Some(y)) = (ty(&ins[0]), ty(&ins[1])) {
                    if *x != y.negate() {
                        push("dual-cut-types", format!("node {n}"), "dual cut types".into());
                    }
                }
            }
            Label::One | Label::Bot if outs.len() == 1 => {
                let want = if label == Label::One { Formula::One } else { Formula::Bottom };
                if ty(&outs[0]).is_some_and(|t| *t != want) {
                    push("typing", format!("node {n}"), format!("{label} conclusion must be typed {want}"));
                }
            }
            Label::Tensor | Label::Parr if outs.len() == 1 && ins.len() == 2 => {
                if let (Some(l), Some(r), Some(c)) = (ty(&ins[0]), ty(&ins[1]), ty(&outs[0])) {
                    let want = if label == Label::Tensor {
                        Formula::tensor(l.clone(), r.clone())
                    } else {
                        Formula::parr(l.clone(), r.clone())
                    };
                    if *c != want {
                        push("typing", format!("node {n}"), format!("conclusion typed {c}, expected {want}"));
                    }
                }
            }
            _ => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ax_ps() -> ProofStructure {
        let mut ps = ProofStructure::new();
        let ax = ps.add_node(Label::Ax);
        ps.add_conclusion(ax);
        ps.add_conclusion(ax);
        ps
    }

    #[test]
    fn single_axiom_is_valid() {
        assert!(ax_ps().validate(None).ok);
    }

    #[test]
    fn unary_parr_is_rejected() {
        let mut ps = ProofStructure::new();
        let one = ps.add_node(Label::One);
        let p = ps.add_node(Label::Parr);
        ps.add_arc(one, p);
        ps.add_conclusion(p);
        let r = ps.validate(None);
        assert!(r.has("binary-parr"), "{r}");
    }

    #[test]
    fn cut_types_must_be_dual() {
        let mut ps = ProofStructure::new();
        let a1 = ps.add_node(Label::Ax);
        let a2 = ps.add_node(Label::Ax);
        let cut = ps.add_node(Label::Cut);
        let x = Formula::atom("X");
        let c1 = ps.add_arc(a1, cut);
        let d1 = ps.add_conclusion(a1);
        let c2 = ps.add_arc(a2, cut);
        let d2 = ps.add_conclusion(a2);
        ps.types.insert(c1, x.clone());
        ps.types.insert(d1, x.negate());
        ps.types.insert(c2, x.clone());
        ps.types.insert(d2, x.negate());
        let r = ps.validate(None);
        assert!(r.has("dual-cut-types"), "{r}");
    }

    fn parr_of(a: Label, b: Label) -> (ProofStructure, NodeId, NodeId, NodeId) {
        let mut ps = ProofStructure::new();
        let x = ps.add_node(a);
        let y = ps.add_node(b);
        let ax = ps.add_arc(x, x);
        let ay = ps.add_arc(y, y);
        let p = ps.add_binary(Label::Parr, ax, ay);
        ps.add_conclusion(p);
        (ps, x, y, p)
    }

    #[test]
    fn erasing_examples() {
        let mut ps = ProofStructure::new();
        let b = ps.add_node(Label::Bot);
        ps.add_conclusion(b);
        assert_eq!(ps.erasing_nodes().len(), 2);

        let (ps, x, y, p) = parr_of(Label::Bot, Label::Bot);
        let e = ps.erasing_nodes();
        assert!(e.contains(&x) && e.contains(&y) && e.contains(&p));

        let (ps, x, y, p) = parr_of(Label::One, Label::Bot);
        let e = ps.erasing_nodes();
        assert!(!e.contains(&x) && e.contains(&y) && !e.contains(&p));
    }

    #[test]
    fn precedes_examples() {
        let (ps, x, y, p) = parr_of(Label::Bot, Label::Bot);
        let dot = ps.head(ps.conclusions[0]);
        assert!(ps.precedes(x, p) && ps.precedes(x, dot));
        assert!(!ps.precedes(x, x));
        assert!(!ps.precedes(x, y));
    }

    #[test]
    fn axiom_is_wten() {
        assert!(ax_ps().is_wten());
    }
}
