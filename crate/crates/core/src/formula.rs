//! Formulas of multiplicative linear logic with units, linear negation,
//! sequents and the fragment grammars.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom { name: String, dual: bool },
    One,
    Bottom,
    Tensor(Box<Formula>, Box<Formula>),
    Parr(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom { name: name.to_string(), dual: false }
    }

    pub fn dual_atom(name: &str) -> Formula {
        Formula::Atom { name: name.to_string(), dual: true }
    }

    pub fn tensor(a: Formula, b: Formula) -> Formula {
        Formula::Tensor(Box::new(a), Box::new(b))
    }

    pub fn parr(a: Formula, b: Formula) -> Formula {
        Formula::Parr(Box::new(a), Box::new(b))
    }

    pub fn negate(&self) -> Formula {
        match self {
            Formula::Atom { name, dual } => Formula::Atom { name: name.clone(), dual: !dual },
            Formula::One => Formula::Bottom,
            Formula::Bottom => Formula::One,
            Formula::Tensor(a, b) => Formula::parr(a.negate(), b.negate()),
            Formula::Parr(a, b) => Formula::tensor(a.negate(), b.negate()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Tensor(a, b) | Formula::Parr(a, b) => 1 + a.size() + b.size(),
            _ => 1,
        }
    }

    pub fn has_units(&self) -> bool {
        match self {
            Formula::One | Formula::Bottom => true,
            Formula::Atom { .. } => false,
            Formula::Tensor(a, b) | Formula::Parr(a, b) => a.has_units() || b.has_units(),
        }
    }

    pub fn has_atoms(&self) -> bool {
        match self {
            Formula::Atom { .. } => true,
            Formula::One | Formula::Bottom => false,
            Formula::Tensor(a, b) | Formula::Parr(a, b) => a.has_atoms() || b.has_atoms(),
        }
    }

    pub fn in_fragment(&self, frag: FragmentId) -> Option<Kind> {
        in_fragment(self, frag)
    }

    /// Intuitionistic polarity; `None` outside IMLL.
    pub fn polarity(&self) -> Option<Polarity> {
        match imll_kind(self)? {
            Kind::Output => Some(Polarity::Output),
            _ => Some(Polarity::Input),
        }
    }

    fn fmt_inner(&self, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
        match self {
            Formula::Atom { name, dual } => write!(f, "{}{}", name, if *dual { "^" } else { "" }),
            Formula::One => f.write_str("one"),
            Formula::Bottom => f.write_str("bot"),
            Formula::Tensor(a, b) | Formula::Parr(a, b) => {
                let op = if matches!(self, Formula::Tensor(..)) { "tensor" } else { "par" };
                if !top {
                    f.write_str("(")?;
                }
                a.fmt_inner(f, false)?;
                write!(f, " {op} ")?;
                b.fmt_inner(f, false)?;
                if !top {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_inner(f, true)
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

pub fn negate(f: &Formula) -> Formula {
    f.negate()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FragmentId {
    Mll,
    MllU,
    Btenll,
    #[serde(rename = "btenll*")]
    BtenllStar,
    Imll,
    Icomll,
}

impl FragmentId {
    pub const ALL: [FragmentId; 6] = [
        FragmentId::Mll,
        FragmentId::MllU,
        FragmentId::Btenll,
        FragmentId::BtenllStar,
        FragmentId::Imll,
        FragmentId::Icomll,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FragmentId::Mll => "mll",
            FragmentId::MllU => "mllu",
            FragmentId::Btenll => "btenll",
            FragmentId::BtenllStar => "btenll*",
            FragmentId::Imll => "imll",
            FragmentId::Icomll => "icomll",
        }
    }
}

impl fmt::Display for FragmentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FragmentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "mll" => Ok(FragmentId::Mll),
            "mllu" => Ok(FragmentId::MllU),
            "btenll" => Ok(FragmentId::Btenll),
            "btenll*" | "btenll_star" | "btenllstar" => Ok(FragmentId::BtenllStar),
            "imll" => Ok(FragmentId::Imll),
            "icomll" => Ok(FragmentId::Icomll),
            other => Err(Error::UnknownFragment(other.to_string())),
        }
    }
}

/// Kind inferred by a fragment grammar.
///
/// `A`/`E` are the two sorts of the ⊥-restricted grammars (`A` also covers
/// the negated `A` shapes of the starred variant, `EDual` the negated `E`
/// shapes); `Output`/`Input` are intuitionistic polarities; `Any` is used by
/// the grammars without sorts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Any,
    A,
    E,
    EDual,
    Output,
    Input,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Output,
    Input,
}

pub fn in_fragment(f: &Formula, frag: FragmentId) -> Option<Kind> {
    match frag {
        FragmentId::MllU => Some(Kind::Any),
        FragmentId::Mll => (!f.has_units()).then_some(Kind::Any),
        FragmentId::Btenll => btenll_kind(f),
        FragmentId::BtenllStar => btenll_star_kind(f),
        FragmentId::Imll => imll_kind(f),
        FragmentId::Icomll => if f.has_atoms() { None } else { imll_kind(f) },
    }
}

fn btenll_kind(f: &Formula) -> Option<Kind> {
    use Kind::{A, E};
    match f {
        Formula::Atom { .. } | Formula::One => Some(A),
        Formula::Bottom => Some(E),
        Formula::Tensor(a, b) => match (btenll_kind(a)?, btenll_kind(b)?) {
            (A, A) => Some(A),
            _ => None,
        },
        Formula::Parr(a, b) => match (btenll_kind(a)?, btenll_kind(b)?) {
            (E, E) => Some(E),
            _ => Some(A),
        },
    }
}

fn btenll_star_kind(f: &Formula) -> Option<Kind> {
    use Kind::{EDual, A, E};
    match f {
        Formula::Atom { .. } => Some(A),
        Formula::Bottom => Some(E),
        Formula::One => Some(EDual),
        Formula::Parr(a, b) => match (btenll_star_kind(a)?, btenll_star_kind(b)?) {
            (E, E) => Some(E),
            (EDual, _) | (_, EDual) => None,
            _ => Some(A),
        },
        Formula::Tensor(a, b) => match (btenll_star_kind(a)?, btenll_star_kind(b)?) {
            (EDual, EDual) => Some(EDual),
            (E, _) | (_, E) => None,
            _ => Some(A),
        },
    }
}

fn imll_kind(f: &Formula) -> Option<Kind> {
    use Kind::{Input as I, Output as O};
    match f {
        Formula::Atom { dual: false, .. } | Formula::One => Some(O),
        Formula::Atom { dual: true, .. } | Formula::Bottom => Some(I),
        Formula::Tensor(a, b) => match (imll_kind(a)?, imll_kind(b)?) {
            (O, O) => Some(O),
            (I, I) => None,
            _ => Some(I),
        },
        Formula::Parr(a, b) => match (imll_kind(a)?, imll_kind(b)?) {
            (I, I) => Some(I),
            (O, O) => None,
            _ => Some(O),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Sequent(pub Vec<Formula>);

impl Sequent {
    pub fn new(formulas: Vec<Formula>) -> Sequent {
        Sequent(formulas)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.0
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|-")?;
        for (i, a) in self.0.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Atom(String, bool),
    One,
    Bot,
    Tensor,
    Par,
}

/// Parses the surface syntax. Positions in errors are 1-based character
/// columns; an unexpected end of input is reported one past the last column.
pub fn parse_formula(text: &str) -> Result<Formula, Error> {
    let toks = lex(text)?;
    let end = text.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, end };
    let f = p.formula()?;
    if let Some((_, col)) = p.toks.get(p.pos) {
        return Err(Error::syntax(*col, "unexpected token after formula"));
    }
    Ok(f)
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, Error> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' {
            out.push((Tok::Open, col));
            i += 1;
        } else if c == ')' {
            out.push((Tok::Close, col));
            i += 1;
        } else if c == '1' && !chars.get(i + 1).is_some_and(|d| is_ident(*d)) {
            out.push((Tok::One, col));
            i += 1;
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && is_ident(chars[i]) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let tok = match word.as_str() {
                "one" => Tok::One,
                "bot" => Tok::Bot,
                "tensor" => Tok::Tensor,
                "par" => Tok::Par,
                _ => {
                    let dual = chars.get(i) == Some(&'^');
                    if dual {
                        i += 1;
                    }
                    Tok::Atom(word, dual)
                }
            };
            out.push((tok, col));
        } else {
            return Err(Error::syntax(col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

fn is_ident(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn formula(&mut self) -> Result<Formula, Error> {
        let mut acc = self.operand()?;
        let mut op: Option<Tok> = None;
        while let Some(t @ (Tok::Tensor | Tok::Par)) = self.peek().cloned() {
            if op.as_ref().is_some_and(|o| *o != t) {
                return Err(Error::syntax(self.col(), "mixed tensor/par needs parentheses"));
            }
            self.pos += 1;
            let rhs = self.operand()?;
            acc = if t == Tok::Tensor { Formula::tensor(acc, rhs) } else { Formula::parr(acc, rhs) };
            op = Some(t);
        }
        Ok(acc)
    }

    fn operand(&mut self) -> Result<Formula, Error> {
        let col = self.col();
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Tok::One) => Ok(Formula::One),
            Some(Tok::Bot) => Ok(Formula::Bottom),
            Some(Tok::Atom(name, dual)) => Ok(Formula::Atom { name, dual }),
            Some(Tok::Open) => {
                let f = self.formula()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(Error::syntax(self.col(), "expected ')'"));
                }
                self.pos += 1;
                Ok(f)
            }
            Some(_) => Err(Error::syntax(col, "expected a formula")),
            None => Err(Error::syntax(col, "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn negation_clauses() {
        assert_eq!(Formula::Bottom.negate(), Formula::One);
        let x_bot = Formula::tensor(Formula::atom("X"), Formula::Bottom);
        assert_eq!(x_bot.negate(), Formula::parr(Formula::dual_atom("X"), Formula::One));
        assert_eq!(x_bot.negate().negate(), x_bot);
    }

    #[test]
    fn parses_examples() {
        assert_eq!(
            f("(X^ par 1) tensor bot"),
            Formula::tensor(Formula::parr(Formula::dual_atom("X"), Formula::One), Formula::Bottom)
        );
        assert_eq!(f("bot"), Formula::Bottom);
        match parse_formula("(X par") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 7),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mixed_nesting_needs_parentheses() {
        assert!(parse_formula("X tensor Y par Z").is_err());
        assert_eq!(f("X tensor Y tensor Z"), f("(X tensor Y) tensor Z"));
    }

    #[test]
    fn printer_round_trips() {
        for s in ["(X^ par one) tensor bot", "X", "Y^", "((one par bot) tensor (X par X^)) par bot"] {
            assert_eq!(f(s).to_string(), s);
            assert_eq!(f(&f(s).to_string()), f(s));
        }
    }

    #[test]
    fn btenll_membership() {
        assert_eq!(in_fragment(&f("bot par one"), FragmentId::Btenll), Some(Kind::A));
        assert_eq!(in_fragment(&f("(one par one) tensor bot"), FragmentId::Btenll), None);
        assert_eq!(in_fragment(&f("bot par bot"), FragmentId::Btenll), Some(Kind::E));
        assert_eq!(in_fragment(&f("X"), FragmentId::Mll), Some(Kind::Any));
        assert_eq!(in_fragment(&f("X tensor one"), FragmentId::Mll), None);
    }

    #[test]
    fn btenll_star_excludes_bot_par_one() {
        assert_eq!(in_fragment(&f("bot par one"), FragmentId::BtenllStar), None);
        assert!(in_fragment(&f("(X par bot) tensor one"), FragmentId::BtenllStar).is_some());
    }

    #[test]
    fn imll_polarity() {
        assert_eq!(f("X^ par one").polarity(), Some(Polarity::Output));
        assert_eq!(f("(X^ par one) tensor bot").polarity(), Some(Polarity::Input));
        assert_eq!(f("one par one").polarity(), None);
        assert!(in_fragment(&f("X par X^"), FragmentId::Icomll).is_none());
        assert_eq!(in_fragment(&f("bot par one"), FragmentId::Icomll), Some(Kind::Output));
    }
}
