//! Seeded random proofs and proof-structures, and rule permutations that
//! leave the desequentialization unchanged.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::formula::{Formula, FragmentId};
use crate::graph::{iso, Label, NodeId, ProofStructure};
use crate::sequent::{check_proof, desequentialize, Rule, SequentProof};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenParams {
    pub fragment: FragmentId,
    /// Upper bound on the number of logical rules of a proof.
    pub max_rules: usize,
    /// Upper bound on the number of non-• nodes of a structure.
    pub max_nodes: usize,
    pub cut_probability: f64,
    pub seed: u64,
}

impl GenParams {
    pub fn new(fragment: FragmentId, seed: u64) -> GenParams {
        GenParams { fragment, max_rules: 10, max_nodes: 10, cut_probability: 0.0, seed }
    }
}

const ATOMS: [&str; 3] = ["X", "Y", "Z"];

struct Gen {
    rng: ChaCha8Rng,
    frag: FragmentId,
    cut_probability: f64,
}

impl Gen {
    fn new(p: &GenParams) -> Gen {
        Gen { rng: ChaCha8Rng::seed_from_u64(p.seed), frag: p.fragment, cut_probability: p.cut_probability }
    }

    fn atoms_ok(&self) -> bool {
        self.frag != FragmentId::Icomll
    }

    fn units_ok(&self) -> bool {
        self.frag != FragmentId::Mll
    }

    fn atom(&mut self) -> Formula {
        let name = *ATOMS.choose(&mut self.rng).unwrap();
        if self.rng.gen_bool(0.5) {
            Formula::atom(name)
        } else {
            Formula::dual_atom(name)
        }
    }

    fn ok(&self, f: &Formula) -> bool {
        f.in_fragment(self.frag).is_some()
    }

    fn leaf(&mut self) -> SequentProof {
        if self.atoms_ok() && (!self.units_ok() || self.rng.gen_bool(0.5)) {
            let a = self.atom();
            SequentProof::ax(a)
        } else {
            SequentProof::one()
        }
    }

    fn proof(&mut self, budget: usize) -> SequentProof {
        if budget <= 1 {
            return self.leaf();
        }
        for _ in 0..6 {
            let candidate = match self.rng.gen_range(0..4) {
                0 => self.bot(budget),
                1 => self.parr(budget),
                _ => self.binary(budget),
            };
            if let Some(p) = candidate {
                return p;
            }
        }
        self.leaf()
    }

    fn bot(&mut self, budget: usize) -> Option<SequentProof> {
        if !self.units_ok() {
            return None;
        }
        let p = SequentProof::bot(self.proof(budget - 1));
        let n = p.conclusion.len();
        if self.rng.gen_bool(0.3) {
            let to = self.rng.gen_range(0..n);
            return Some(p.move_formula(n - 1, to));
        }
        Some(p)
    }

    fn shuffled_pairs(&mut self, n: usize, m: usize) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
        pairs.shuffle(&mut self.rng);
        pairs
    }

    fn parr(&mut self, budget: usize) -> Option<SequentProof> {
        let q = self.proof(budget - 1);
        let fs = q.conclusion.0.clone();
        let n = fs.len();
        let (i, j) = self
            .shuffled_pairs(n, n)
            .into_iter()
            .find(|(i, j)| i != j && self.ok(&Formula::parr(fs[*i].clone(), fs[*j].clone())))?;
        let mut perm: Vec<usize> = (0..n).filter(|k| *k != i && *k != j).collect();
        perm.extend([i, j]);
        SequentProof::parr(q.reorder(&perm)).ok()
    }

    fn binary(&mut self, budget: usize) -> Option<SequentProof> {
        let k = self.rng.gen_range(1..budget);
        let p1 = self.proof(k);
        let p2 = self.proof((budget - 1 - k).max(1));
        if self.rng.gen_bool(self.cut_probability) {
            self.cut(p1, p2)
        } else {
            self.tensor(p1, p2)
        }
    }

    fn tensor(&mut self, p1: SequentProof, p2: SequentProof) -> Option<SequentProof> {
        let (f1, f2) = (p1.conclusion.0.clone(), p2.conclusion.0.clone());
        let (i, j) = self
            .shuffled_pairs(f1.len(), f2.len())
            .into_iter()
            .find(|(i, j)| self.ok(&Formula::tensor(f1[*i].clone(), f2[*j].clone())))?;
        let last = f1.len() - 1;
        SequentProof::tensor(p1.move_formula(i, last), p2.move_formula(j, 0)).ok()
    }

    fn cut(&mut self, p1: SequentProof, p2: SequentProof) -> Option<SequentProof> {
        let f1 = p1.conclusion.0.clone();
        let i = self.rng.gen_range(0..f1.len());
        let a = f1[i].clone();
        if !self.ok(&a) || !self.ok(&a.negate()) {
            return None;
        }
        let p1 = p1.move_formula(i, f1.len() - 1);
        let dual = a.negate();
        let right = match p2.conclusion.0.iter().position(|f| *f == dual) {
            Some(j) if self.rng.gen_bool(0.5) => p2.move_formula(j, 0),
            _ if self.rng.gen_bool(0.5) => SequentProof::ax(dual),
            _ => eta(&a),
        };
        let p = SequentProof::cut(p1, right).ok()?;
        check_proof(&p, self.frag).ok.then_some(p)
    }
}

/// The η-expanded proof of ⊢ A⊥, A.
pub fn eta(a: &Formula) -> SequentProof {
    match a {
        Formula::Atom { .. } => SequentProof::ax(a.negate()),
        Formula::One => SequentProof::ex(SequentProof::bot(SequentProof::one()), 0).unwrap(),
        Formula::Bottom => SequentProof::bot(SequentProof::one()),
        Formula::Tensor(b, c) => {
            let eb = eta(b);
            let ec = SequentProof::ex(eta(c), 0).unwrap();
            let t = SequentProof::tensor(eb, ec).unwrap().reorder(&[1, 0, 2]);
            SequentProof::ex(SequentProof::parr(t).unwrap(), 0).unwrap()
        }
        Formula::Parr(b, c) => {
            let eb = SequentProof::ex(eta(b), 0).unwrap();
            let t = SequentProof::tensor(eb, eta(c)).unwrap().reorder(&[1, 0, 2]);
            SequentProof::parr(t).unwrap()
        }
    }
}

/// A random proof checking in `p.fragment`, built from the leaves down.
pub fn random_proof(p: &GenParams) -> SequentProof {
    let mut g = Gen::new(p);
    let budget = g.rng.gen_range(1..=p.max_rules.max(1));
    let pi = g.proof(budget);
    debug_assert!(check_proof(&pi, p.fragment).ok, "{}", check_proof(&pi, p.fragment));
    pi
}

/// A random typed proof-structure valid in `p.fragment`: a forest of ax, 1
/// and ⊥ leaves combined by random ⊗, ⅋ and cut nodes. Correctness is not
/// aimed for.
pub fn random_ps(p: &GenParams) -> ProofStructure {
    let mut g = Gen::new(p);
    let target = g.rng.gen_range(1..=p.max_nodes.max(1));
    let mut ps = ProofStructure::new();
    let mut pending: Vec<(NodeId, Formula)> = Vec::new();
    let mut inner = 0;
    let mut attempts = 0;
    while inner < target && attempts < 50 * target {
        attempts += 1;
        let combine = pending.len() >= 2 && g.rng.gen_bool(0.55);
        if !combine {
            let choice = g.rng.gen_range(0..3);
            match choice {
                0 if g.atoms_ok() => {
                    let a = g.atom();
                    let n = ps.add_node(Label::Ax);
                    pending.push((n, a.negate()));
                    pending.push((n, a));
                }
                1 if g.units_ok() => pending.push((ps.add_node(Label::One), Formula::One)),
                2 if g.units_ok() => pending.push((ps.add_node(Label::Bot), Formula::Bottom)),
                _ => continue,
            }
            inner += 1;
            continue;
        }
        let i = g.rng.gen_range(0..pending.len());
        let mut j = g.rng.gen_range(0..pending.len() - 1);
        if j >= i {
            j += 1;
        }
        let (a, b) = (pending[i].1.clone(), pending[j].1.clone());
        if g.rng.gen_bool(g.cut_probability) {
            if !g.atoms_ok() || a.negate() != b || !g.ok(&a) || !g.ok(&b) {
                continue;
            }
            let c = ps.add_node(Label::Cut);
            for (src, ty) in [pending[i].clone(), pending[j].clone()] {
                let arc = ps.add_arc(src, c);
                ps.types.insert(arc, ty);
            }
        } else {
            let (label, f) = if g.rng.gen_bool(0.5) {
                (Label::Tensor, Formula::tensor(a.clone(), b.clone()))
            } else {
                (Label::Parr, Formula::parr(a.clone(), b.clone()))
            };
            if !g.ok(&f) {
                continue;
            }
            let x = ps.add_arc(pending[i].0, pending[i].0);
            ps.types.insert(x, a);
            let y = ps.add_arc(pending[j].0, pending[j].0);
            ps.types.insert(y, b);
            let n = ps.add_binary(label, x, y);
            pending.push((n, f));
        }
        inner += 1;
        let (hi, lo) = (i.max(j), i.min(j));
        pending.remove(hi);
        pending.remove(lo);
    }
    pending.shuffle(&mut g.rng);
    for (src, ty) in pending {
        let a = ps.add_conclusion(src);
        ps.types.insert(a, ty);
    }
    debug_assert!(ps.validate(Some(p.fragment)).ok, "{}", ps.validate(Some(p.fragment)));
    ps
}

/// The rewrites used by [`permute_rules`]. Each one replaces a sub-proof by
/// another with the same conclusion and the same desequentialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    /// ⊥ over a rule whose premise it moves into (the `usize` picks the side).
    BotDown(usize),
    /// ⊥ in the right premise of ⊗/cut, or under an exchange it does not touch, moves below.
    BotUp,
    /// ⅋ over ⊗/cut acting on two formulas of the right context moves into the right premise.
    ParrDown,
    /// The converse of `ParrDown`.
    ParrUp,
}

fn sites(p: &SequentProof, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Move)>) {
    let binary = |q: &SequentProof| matches!(q.rule, Rule::TensorR | Rule::Cut(_));
    match &p.rule {
        Rule::BotR => {
            let q = &p.premises[0];
            match &q.rule {
                Rule::TensorR | Rule::Cut(_) => {
                    out.push((path.clone(), Move::BotDown(0)));
                    out.push((path.clone(), Move::BotDown(1)));
                }
                Rule::ParrR | Rule::BotR | Rule::Ex(_) => out.push((path.clone(), Move::BotDown(0))),
                _ => {}
            }
        }
        Rule::ParrR => {
            let q = &p.premises[0];
            if binary(q) && q.premises[1].conclusion.len() >= 3 {
                out.push((path.clone(), Move::ParrDown));
            }
        }
        Rule::TensorR | Rule::Cut(_) => {
            let r = &p.premises[1];
            if r.rule == Rule::BotR && !r.premises[0].conclusion.is_empty() {
                out.push((path.clone(), Move::BotUp));
            }
            if r.rule == Rule::ParrR && r.premises[0].conclusion.len() >= 3 {
                out.push((path.clone(), Move::ParrUp));
            }
        }
        Rule::Ex(i) => {
            let q = &p.premises[0];
            if q.rule == Rule::BotR && i + 2 < q.conclusion.len() {
                out.push((path.clone(), Move::BotUp));
            }
        }
        _ => {}
    }
    for (k, q) in p.premises.iter().enumerate() {
        path.push(k);
        sites(q, path, out);
        path.pop();
    }
}

fn rebuild_binary(rule: &Rule, p1: SequentProof, p2: SequentProof) -> SequentProof {
    match rule {
        Rule::TensorR => SequentProof::tensor(p1, p2),
        _ => SequentProof::cut(p1, p2),
    }
    .expect("premises keep their active formulas")
}

fn apply(p: &SequentProof, mv: Move) -> SequentProof {
    let q = &p.premises[0];
    let out = match (mv, &p.rule) {
        (Move::BotDown(side), Rule::BotR) => match &q.rule {
            Rule::TensorR | Rule::Cut(_) => {
                let (p1, p2) = (q.premises[0].clone(), q.premises[1].clone());
                if side == 1 {
                    rebuild_binary(&q.rule, p1, SequentProof::bot(p2))
                } else {
                    let gamma = p1.conclusion.len() - 1;
                    let left = SequentProof::ex(SequentProof::bot(p1), gamma).unwrap();
                    let n = p.conclusion.len();
                    rebuild_binary(&q.rule, left, p2).move_formula(gamma, n - 1)
                }
            }
            Rule::ParrR => {
                let inner = SequentProof::bot(q.premises[0].clone());
                let n = inner.conclusion.len();
                let moved = inner.move_formula(n - 1, n - 3);
                let m = p.conclusion.len();
                SequentProof::parr(moved).unwrap().move_formula(m - 2, m - 1)
            }
            Rule::BotR => {
                let n = p.conclusion.len();
                SequentProof::ex(p.clone(), n - 2).unwrap()
            }
            Rule::Ex(i) => SequentProof::ex(SequentProof::bot(q.premises[0].clone()), *i).unwrap(),
            _ => unreachable!("no site"),
        },
        (Move::BotUp, Rule::TensorR | Rule::Cut(_)) => {
            let inner = p.premises[1].premises[0].clone();
            SequentProof::bot(rebuild_binary(&p.rule, q.clone(), inner))
        }
        (Move::BotUp, Rule::Ex(i)) => SequentProof::bot(SequentProof::ex(q.premises[0].clone(), *i).unwrap()),
        (Move::ParrDown, Rule::ParrR) => {
            let (p1, p2) = (q.premises[0].clone(), q.premises[1].clone());
            rebuild_binary(&q.rule, p1, SequentProof::parr(p2).unwrap())
        }
        (Move::ParrUp, Rule::TensorR | Rule::Cut(_)) => {
            let inner = p.premises[1].premises[0].clone();
            SequentProof::parr(rebuild_binary(&p.rule, q.clone(), inner)).unwrap()
        }
        _ => unreachable!("no site"),
    };
    debug_assert_eq!(out.conclusion, p.conclusion);
    out
}

fn apply_at(p: &SequentProof, path: &[usize], mv: Move) -> SequentProof {
    match path.split_first() {
        None => apply(p, mv),
        Some((k, rest)) => {
            let mut q = p.clone();
            q.premises[*k] = apply_at(&p.premises[*k], rest, mv);
            q
        }
    }
}

/// Applies up to eight random permutations of independent adjacent rules.
/// The desequentialization of the result is checked to be isomorphic to
/// that of `pi`.
pub fn permute_rules(pi: &SequentProof, seed: u64) -> SequentProof {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let steps = rng.gen_range(1..=8);
    let mut cur = pi.clone();
    for _ in 0..steps {
        let mut found = Vec::new();
        sites(&cur, &mut Vec::new(), &mut found);
        let Some((path, mv)) = found.choose(&mut rng).cloned() else {
            break;
        };
        cur = apply_at(&cur, &path, mv);
    }
    assert!(
        iso(&desequentialize(pi).ps, &desequentialize(&cur).ps),
        "rule permutation changed the desequentialization"
    );
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::switching::{check, Criterion};

    #[test]
    fn proofs_are_reproducible_and_valid() {
        for frag in FragmentId::ALL {
            for seed in 0..40 {
                let p = GenParams { max_rules: 12, cut_probability: 0.3, ..GenParams::new(frag, seed) };
                let a = random_proof(&p);
                assert_eq!(a, random_proof(&p));
                assert!(check_proof(&a, frag).ok, "{frag} {seed}: {}", check_proof(&a, frag));
            }
        }
    }

    #[test]
    fn icomll_proofs_have_no_axioms_and_one_output() {
        for seed in 0..40 {
            let p = random_proof(&GenParams { max_rules: 12, ..GenParams::new(FragmentId::Icomll, seed) });
            assert_eq!(p.count_rule("ax") + p.count_rule("cut"), 0);
            let outputs = p
                .conclusion
                .formulas()
                .iter()
                .filter(|f| f.polarity() == Some(crate::Polarity::Output))
                .count();
            assert_eq!(outputs, 1);
        }
    }

    #[test]
    fn btenll_desequentializations_satisfy_accw() {
        for seed in 0..30 {
            let p = random_proof(&GenParams { max_rules: 10, ..GenParams::new(FragmentId::Btenll, seed) });
            assert!(check(&desequentialize(&p).ps, Criterion::Accw).unwrap().holds);
        }
    }

    #[test]
    fn structures_are_reproducible_and_valid() {
        for frag in FragmentId::ALL {
            for seed in 0..40 {
                let p = GenParams { max_nodes: 12, cut_probability: 0.3, ..GenParams::new(frag, seed) };
                let a = random_ps(&p);
                assert_eq!(a, random_ps(&p));
                assert!(a.validate(Some(frag)).ok);
            }
        }
    }

    #[test]
    fn eta_expansions_check() {
        for s in ["X", "one", "bot", "X tensor (Y par one)", "(X^ par bot) tensor Y"] {
            let a = crate::parse_formula(s).unwrap();
            let e = eta(&a);
            assert_eq!(e.conclusion.0, vec![a.negate(), a.clone()]);
            assert!(check_proof(&e, FragmentId::MllU).ok);
        }
    }

    #[test]
    fn stacked_bottoms_are_swapped() {
        let p = SequentProof::bot(SequentProof::bot(SequentProof::one()));
        let q = permute_rules(&p, 3);
        assert_ne!(q, p);
        assert!(iso(&desequentialize(&p).ps, &desequentialize(&q).ps));
    }

    #[test]
    fn single_rule_is_unchanged() {
        let p = SequentProof::one();
        assert_eq!(permute_rules(&p, 5), p);
    }

    #[test]
    fn chained_permutations_stay_equivalent() {
        let p = random_proof(&GenParams { max_rules: 14, ..GenParams::new(FragmentId::MllU, 11) });
        let mut cur = p.clone();
        for seed in 0..100 {
            cur = permute_rules(&cur, seed);
            assert!(crate::sequentialize::proofs_equivalent(&p, &cur));
            assert!(check_proof(&cur, FragmentId::MllU).ok);
        }
    }
}
