//! Proof files: a `fragment <name>` header and one s-expression.
//!
//! ```text
//! fragment mllu
//! ; two copies of bot over one, joined by a tensor
//! (tensor (bot (one)) (ex 1 (bot (one))))
//! ```
//!
//! Rules are `(ax [A])`, `(cut [A] P Q)` (the bracket is optional there),
//! `(ex K P)` with K 1-based, `(tensor P Q)`, `(par P)`, `(one)` and `(bot P)`.
//! Formulas in brackets use the formula syntax; `;` starts a comment.

use super::SequentProof;
use crate::error::{Error, Result};
use crate::formula::{parse_formula, Formula, FragmentId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofFile {
    pub fragment: Option<FragmentId>,
    pub proof: SequentProof,
}

pub fn proof_to_text(p: &SequentProof, fragment: Option<FragmentId>) -> String {
    let mut s = String::new();
    if let Some(f) = fragment {
        s.push_str(&format!("fragment {f}\n"));
    }
    write_proof(p, &mut s);
    if fragment.is_some() {
        s.push('\n');
    }
    s
}

fn write_proof(p: &SequentProof, s: &mut String) {
    use super::Rule;
    s.push('(');
    s.push_str(p.rule.name());
    match &p.rule {
        Rule::Ax => s.push_str(&format!(" [{}]", p.conclusion.0[0])),
        Rule::Cut(a) => s.push_str(&format!(" [{a}]")),
        Rule::Ex(i) => s.push_str(&format!(" {}", i + 1)),
        _ => {}
    }
    for q in &p.premises {
        s.push(' ');
        write_proof(q, s);
    }
    s.push(')');
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Word(String),
    Formula(String),
}

/// Tokens with their 1-based line numbers.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = line.split(';').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                '(' => out.push((Tok::Open, line_no)),
                ')' => out.push((Tok::Close, line_no)),
                '[' => {
                    let end = chars[i..]
                        .iter()
                        .position(|c| *c == ']')
                        .ok_or_else(|| Error::Format(format!("line {line_no}: unclosed '['")))?;
                    out.push((Tok::Formula(chars[i + 1..i + end].iter().collect()), line_no));
                    i += end;
                }
                c if c.is_whitespace() => {}
                _ => {
                    let start = i;
                    while i < chars.len() && !"()[]".contains(chars[i]) && !chars[i].is_whitespace() {
                        i += 1;
                    }
                    out.push((Tok::Word(chars[start..i].iter().collect()), line_no));
                    continue;
                }
            }
            i += 1;
        }
    }
    Ok(out)
}

pub fn parse_proof(text: &str) -> Result<ProofFile> {
    let toks = lex(text)?;
    let mut pos = 0;
    let mut fragment = None;
    if let Some((Tok::Word(w), _)) = toks.first() {
        if w == "fragment" {
            let Some((Tok::Word(name), _)) = toks.get(1) else {
                return Err(Error::Format("line 1: fragment name expected".into()));
            };
            fragment = Some(name.parse()?);
            pos = 2;
        }
    }
    let mut p = Parser { toks, pos };
    let proof = p.proof()?;
    if let Some((_, line)) = p.toks.get(p.pos) {
        return Err(Error::Format(format!("line {line}: trailing input after proof")));
    }
    Ok(ProofFile { fragment, proof })
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn line(&self) -> usize {
        self.toks.get(self.pos).or(self.toks.last()).map_or(1, |t| t.1)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Format(format!("line {}: {msg}", self.line()))
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn formula(&mut self) -> Result<Formula> {
        match self.next() {
            Some(Tok::Formula(s)) => parse_formula(&s).map_err(|e| self.err(&e.to_string())),
            _ => Err(self.err("bracketed formula expected")),
        }
    }

    fn rule_err(&self, e: Error) -> Error {
        self.err(&e.to_string())
    }

    fn proof(&mut self) -> Result<SequentProof> {
        if self.next() != Some(Tok::Open) {
            return Err(self.err("'(' expected"));
        }
        let Some(Tok::Word(rule)) = self.next() else {
            return Err(self.err("rule name expected"));
        };
        let p = match rule.as_str() {
            "ax" => SequentProof::ax(self.formula()?),
            "one" => SequentProof::one(),
            "bot" => SequentProof::bot(self.proof()?),
            "par" => {
                let q = self.proof()?;
                SequentProof::parr(q).map_err(|e| self.rule_err(e))?
            }
            "tensor" => {
                let (a, b) = (self.proof()?, self.proof()?);
                SequentProof::tensor(a, b).map_err(|e| self.rule_err(e))?
            }
            "cut" => {
                let stated = match self.peek() {
                    Some(Tok::Formula(_)) => Some(self.formula()?),
                    _ => None,
                };
                let (a, b) = (self.proof()?, self.proof()?);
                let p = SequentProof::cut(a, b).map_err(|e| self.rule_err(e))?;
                if let Some(f) = stated {
                    if p.rule != super::Rule::Cut(f.clone()) {
                        return Err(self.err(&format!("cut formula is not {f}")));
                    }
                }
                p
            }
            "ex" => {
                let k = match self.next() {
                    Some(Tok::Word(w)) => w.parse::<usize>().ok().filter(|k| *k >= 1),
                    _ => None,
                }
                .ok_or_else(|| self.err("ex position (from 1) expected"))?;
                let q = self.proof()?;
                SequentProof::ex(q, k - 1).map_err(|e| self.rule_err(e))?
            }
            other => return Err(self.err(&format!("unknown rule '{other}'"))),
        };
        if self.next() != Some(Tok::Close) {
            return Err(self.err("')' expected"));
        }
        Ok(p)
    }
}
