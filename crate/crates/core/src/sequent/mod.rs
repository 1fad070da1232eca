//! Sequent proofs, rule checking and desequentialization.

mod deseq;
mod text;

use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{FragmentId, Formula, Sequent};
use crate::graph::{ValidationReport, Violation};

pub use deseq::{deseq_relation_holds, desequentialize, DeseqResult};
pub use text::{parse_proof, proof_to_text, ProofFile};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rule {
    Ax,
    /// Carries the cut formula A of the left premise ⊢ Γ, A.
    Cut(Formula),
    /// Swaps the formulas at positions i and i + 1 (0-based).
    Ex(usize),
    TensorR,
    OneR,
    ParrR,
    BotR,
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Ax => "ax",
            Rule::Cut(_) => "cut",
            Rule::Ex(_) => "ex",
            Rule::TensorR => "tensor",
            Rule::OneR => "one",
            Rule::ParrR => "par",
            Rule::BotR => "bot",
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Rule::Ax | Rule::OneR => 0,
            Rule::Ex(_) | Rule::ParrR | Rule::BotR => 1,
            Rule::Cut(_) | Rule::TensorR => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequentProof {
    pub rule: Rule,
    pub conclusion: Sequent,
    pub premises: Vec<SequentProof>,
}

impl SequentProof {
    /// ⊢ A, A⊥
    pub fn ax(a: Formula) -> SequentProof {
        let d = a.negate();
        SequentProof { rule: Rule::Ax, conclusion: Sequent(vec![a, d]), premises: vec![] }
    }

    pub fn one() -> SequentProof {
        SequentProof { rule: Rule::OneR, conclusion: Sequent(vec![Formula::One]), premises: vec![] }
    }

    pub fn bot(p: SequentProof) -> SequentProof {
        let mut c = p.conclusion.0.clone();
        c.push(Formula::Bottom);
        SequentProof { rule: Rule::BotR, conclusion: Sequent(c), premises: vec![p] }
    }

    /// Combines the last two formulas.
    pub fn parr(p: SequentProof) -> Result<SequentProof> {
        let mut c = p.conclusion.0.clone();
        if c.len() < 2 {
            return Err(Error::Rule("par needs two formulas".into()));
        }
        let b = c.pop().unwrap();
        let a = c.pop().unwrap();
        c.push(Formula::parr(a, b));
        Ok(SequentProof { rule: Rule::ParrR, conclusion: Sequent(c), premises: vec![p] })
    }

    /// From ⊢ Γ, A and ⊢ B, Δ to ⊢ Γ, A ⊗ B, Δ.
    pub fn tensor(p1: SequentProof, p2: SequentProof) -> Result<SequentProof> {
        let (Some((a, gamma)), Some((b, delta))) =
            (p1.conclusion.0.split_last(), p2.conclusion.0.split_first())
        else {
            return Err(Error::Rule("tensor needs non-empty premises".into()));
        };
        let mut c = gamma.to_vec();
        c.push(Formula::tensor(a.clone(), b.clone()));
        c.extend(delta.iter().cloned());
        Ok(SequentProof { rule: Rule::TensorR, conclusion: Sequent(c), premises: vec![p1, p2] })
    }

    /// From ⊢ Γ, A and ⊢ A⊥, Δ to ⊢ Γ, Δ.
    pub fn cut(p1: SequentProof, p2: SequentProof) -> Result<SequentProof> {
        let (Some((a, gamma)), Some((d, delta))) =
            (p1.conclusion.0.split_last(), p2.conclusion.0.split_first())
        else {
            return Err(Error::Rule("cut needs non-empty premises".into()));
        };
        if a.negate() != *d {
            return Err(Error::Rule(format!("cut formulas {a} and {d} are not dual")));
        }
        let mut c = gamma.to_vec();
        c.extend(delta.iter().cloned());
        let rule = Rule::Cut(a.clone());
        Ok(SequentProof { rule, conclusion: Sequent(c), premises: vec![p1, p2] })
    }

    pub fn ex(p: SequentProof, i: usize) -> Result<SequentProof> {
        let mut c = p.conclusion.0.clone();
        if i + 1 >= c.len() {
            return Err(Error::Rule(format!("ex {} out of range", i + 1)));
        }
        c.swap(i, i + 1);
        Ok(SequentProof { rule: Rule::Ex(i), conclusion: Sequent(c), premises: vec![p] })
    }

    /// Rearranges the conclusion so that position j holds the old formula
    /// `perm[j]`, using adjacent exchanges.
    pub fn reorder(self, perm: &[usize]) -> SequentProof {
        assert_eq!(perm.len(), self.conclusion.len(), "permutation length");
        let mut cur: Vec<usize> = (0..perm.len()).collect();
        let mut p = self;
        for (j, want) in perm.iter().enumerate() {
            let mut at = cur.iter().position(|x| x == want).expect("permutation");
            while at > j {
                cur.swap(at - 1, at);
                p = SequentProof::ex(p, at - 1).unwrap();
                at -= 1;
            }
        }
        p
    }

    /// Moves the formula at position `from` to position `to`.
    pub fn move_formula(self, from: usize, to: usize) -> SequentProof {
        let mut perm: Vec<usize> = (0..self.conclusion.len()).collect();
        let x = perm.remove(from);
        perm.insert(to, x);
        self.reorder(&perm)
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(SequentProof::size).sum::<usize>()
    }

    pub fn count_rule(&self, name: &str) -> usize {
        usize::from(self.rule.name() == name)
            + self.premises.iter().map(|p| p.count_rule(name)).sum::<usize>()
    }
}

impl fmt::Display for SequentProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&proof_to_text(self, None))
    }
}

/// The conclusion that the rule derives from the premises' stated conclusions.
fn derived_conclusion(p: &SequentProof) -> Result<Sequent> {
    let prem = |i: usize| SequentProof {
        rule: Rule::OneR,
        conclusion: p.premises[i].conclusion.clone(),
        premises: vec![],
    };
    let built = match &p.rule {
        Rule::Ax => {
            let c = &p.conclusion.0;
            if c.len() != 2 {
                return Err(Error::Rule("ax concludes two formulas".into()));
            }
            SequentProof::ax(c[0].clone())
        }
        Rule::OneR => SequentProof::one(),
        Rule::BotR => SequentProof::bot(prem(0)),
        Rule::ParrR => SequentProof::parr(prem(0))?,
        Rule::Ex(i) => SequentProof::ex(prem(0), *i)?,
        Rule::TensorR => SequentProof::tensor(prem(0), prem(1))?,
        Rule::Cut(a) => {
            let built = SequentProof::cut(prem(0), prem(1))?;
            if built.rule != Rule::Cut(a.clone()) {
                return Err(Error::Rule(format!("cut formula is not {a}")));
            }
            built
        }
    };
    Ok(built.conclusion)
}

/// Checks every rule instance and that all formulas lie in `frag`.
pub fn check_proof(pi: &SequentProof, frag: FragmentId) -> ValidationReport {
    let mut v = Vec::new();
    check_rec(pi, frag, "0".to_string(), &mut v);
    ValidationReport::from_violations(v)
}

fn check_rec(p: &SequentProof, frag: FragmentId, path: String, v: &mut Vec<Violation>) {
    let mut push = |rule: &'static str, message: String| {
        v.push(Violation { rule, item: path.clone(), message });
    };
    if p.premises.len() != p.rule.arity() {
        push(
            "arity",
            format!("{} rule has {} premises, expected {}", p.rule.name(), p.premises.len(), p.rule.arity()),
        );
    } else {
        match derived_conclusion(p) {
            Ok(c) if c == p.conclusion => {}
            Ok(c) => push("conclusion", format!("stated {} but the rule yields {}", p.conclusion, c)),
            Err(e) => push("rule", e.to_string()),
        }
    }
    if frag == FragmentId::Icomll && matches!(p.rule, Rule::Ax | Rule::Cut(_)) {
        push("fragment", format!("{} rule outside icomll", p.rule.name()));
    }
    if let Rule::Cut(a) = &p.rule {
        if a.in_fragment(frag).is_none() || a.negate().in_fragment(frag).is_none() {
            push("fragment", format!("cut formula {a} outside {frag}"));
        }
    }
    for f in p.conclusion.formulas() {
        if f.in_fragment(frag).is_none() {
            push("fragment", format!("{f} outside {frag}"));
        }
    }
    for (i, q) in p.premises.iter().enumerate() {
        check_rec(q, frag, format!("{path}.{i}"), v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn axiom_checks() {
        let p = SequentProof::ax(f("X"));
        assert_eq!(p.conclusion, Sequent(vec![f("X"), f("X^")]));
        assert!(check_proof(&p, FragmentId::Mll).ok);
    }

    #[test]
    fn unary_rule_without_premise_is_rejected() {
        let p = SequentProof { rule: Rule::BotR, conclusion: Sequent(vec![Formula::Bottom]), premises: vec![] };
        let r = check_proof(&p, FragmentId::MllU);
        assert!(!r.ok);
        assert!(r.has("arity"));
    }

    #[test]
    fn tensor_places_the_new_formula_between_contexts() {
        let left = SequentProof::ax(f("X"));
        let right = SequentProof::ax(f("Y"));
        let p = SequentProof::tensor(left, right).unwrap();
        assert_eq!(p.conclusion, Sequent(vec![f("X"), f("X^ tensor Y"), f("Y^")]));
        assert!(check_proof(&p, FragmentId::Mll).ok);
    }

    #[test]
    fn wrong_conclusion_is_reported() {
        let mut p = SequentProof::bot(SequentProof::one());
        p.conclusion.0.swap(0, 1);
        assert!(check_proof(&p, FragmentId::MllU).has("conclusion"));
    }

    #[test]
    fn icomll_rejects_axioms() {
        let p = SequentProof::ax(Formula::One);
        assert!(check_proof(&p, FragmentId::Icomll).has("fragment"));
        assert!(check_proof(&p, FragmentId::MllU).ok);
    }

    #[test]
    fn reorder_uses_adjacent_swaps() {
        let p = SequentProof::tensor(SequentProof::ax(f("X")), SequentProof::ax(f("Y"))).unwrap();
        let q = p.clone().reorder(&[2, 0, 1]);
        assert_eq!(q.conclusion, Sequent(vec![f("Y^"), f("X"), f("X^ tensor Y")]));
        assert_eq!(q.count_rule("ex"), 2);
        assert!(check_proof(&q, FragmentId::Mll).ok);
        assert_eq!(p.clone().reorder(&[0, 1, 2]), p);
    }

    #[test]
    fn cut_requires_duals() {
        assert!(SequentProof::cut(SequentProof::one(), SequentProof::one()).is_err());
        let p = SequentProof::cut(SequentProof::one(), SequentProof::ax(Formula::Bottom)).unwrap();
        assert_eq!(p.conclusion, Sequent(vec![Formula::One]));
    }
}
