//! Expressions over mapping class atoms.
//!
//! ```text
//! expr    := factor+                      juxtaposition, leftmost acts first
//! factor  := primary ('^' int)*
//! primary := '(' expr ')' | '1' | atom
//! atom    := a<k> | b<k> | w<k> | s<k>
//!          | beta(i) | beta(r,s) | sigma(r,s)
//!          | hR | hR' | hA | hA'
//!          | h(Ri) | h'(Ri) | h(R{i,j}) | h'(R{i,j}) | t(Ri) | t(R{i,j})
//!          | phi(expr) | harer(expr) | artin(expr)
//! ```
//!
//! Braid arguments of `phi`, `harer` and `artin` use the same grammar with
//! the atoms `s<k>` and `sigma(r,s)`. At genus `g`, `phi` reads its argument
//! on `g` strands, `harer` on `2g` strands, and `artin(b)` is the Artin
//! automorphism of the free group of rank `g`.

use std::fmt;

use crate::braid::{artin, harer, phi, sigma_rs, BraidLetter, BraidWord};
use crate::braidings::{
    arms_twist, beta_local, beta_rs_direct, full_twist, half_twist, Curve, Direction, HalfTwistName,
};
use crate::endo::{Automorphism, MappingClass};
use crate::error::{Error, Result};
use crate::generators::{DehnKind, McgGenerator, McgWord};

/// A curve as written in `h(...)`, `h'(...)` and `t(...)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveRef {
    Handle(usize),
    Span(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    Identity,
    Dehn(DehnKind, usize),
    Sigma(usize),
    Beta(usize),
    BetaRs(usize, usize),
    SigmaRs(usize, usize),
    BoundaryHalf(Direction),
    ArmsHalf(Direction),
    Half(CurveRef, Direction),
    Full(CurveRef),
    Phi(Box<Expression>),
    Harer(Box<Expression>),
    Artin(Box<Expression>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expression {
    Atom(Atom),
    /// At least two factors; the leftmost acts first.
    Product(Vec<Expression>),
    /// Nonzero integer power.
    Power(Box<Expression>, i64),
}

impl fmt::Display for CurveRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveRef::Handle(i) => write!(f, "R{i}"),
            CurveRef::Span(i, j) => write!(f, "R{{{i},{j}}}"),
        }
    }
}

fn prime(direction: Direction) -> &'static str {
    match direction {
        Direction::Forward => "",
        Direction::Reverse => "'",
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Identity => f.write_str("1"),
            Atom::Dehn(kind, i) => write!(f, "{}{i}", kind.letter()),
            Atom::Sigma(i) => write!(f, "s{i}"),
            Atom::Beta(i) => write!(f, "beta({i})"),
            Atom::BetaRs(r, s) => write!(f, "beta({r},{s})"),
            Atom::SigmaRs(r, s) => write!(f, "sigma({r},{s})"),
            Atom::BoundaryHalf(d) => write!(f, "hR{}", prime(*d)),
            Atom::ArmsHalf(d) => write!(f, "hA{}", prime(*d)),
            Atom::Half(c, d) => write!(f, "h{}({c})", prime(*d)),
            Atom::Full(c) => write!(f, "t({c})"),
            Atom::Phi(e) => write!(f, "phi({e})"),
            Atom::Harer(e) => write!(f, "harer({e})"),
            Atom::Artin(e) => write!(f, "artin({e})"),
        }
    }
}

impl Expression {
    fn fmt_primary(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Product(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Atom(atom) => write!(f, "{atom}"),
            Expression::Product(factors) => {
                for (n, factor) in factors.iter().enumerate() {
                    if n > 0 {
                        f.write_str(" ")?;
                    }
                    factor.fmt_primary(f)?;
                }
                Ok(())
            }
            Expression::Power(base, n) => {
                base.fmt_primary(f)?;
                write!(f, "^{n}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(i64),
    Prime,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut tokens = Vec::new();
    let mut n = 0;
    while n < chars.len() {
        let (pos, c) = chars[n];
        let single = match c {
            c if c.is_whitespace() => {
                n += 1;
                continue;
            }
            '\'' => Some(Token::Prime),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            '{' => Some(Token::LBrace),
            '}' => Some(Token::RBrace),
            ',' => Some(Token::Comma),
            '^' => Some(Token::Caret),
            _ => None,
        };
        if let Some(token) = single {
            tokens.push((pos, token));
            n += 1;
            continue;
        }
        let start = n;
        if c.is_ascii_alphabetic() {
            while n < chars.len() && chars[n].1.is_ascii_alphabetic() {
                n += 1;
            }
            while n < chars.len() && chars[n].1.is_ascii_digit() {
                n += 1;
            }
            let ident: String = chars[start..n].iter().map(|&(_, c)| c).collect();
            tokens.push((pos, Token::Ident(ident)));
        } else if c.is_ascii_digit() || c == '-' {
            n += 1;
            while n < chars.len() && chars[n].1.is_ascii_digit() {
                n += 1;
            }
            let digits: String = chars[start..n].iter().map(|&(_, c)| c).collect();
            let value = digits
                .parse()
                .map_err(|_| Error::parse(pos, format!("bad integer `{digits}`")))?;
            tokens.push((pos, Token::Int(value)));
        } else {
            return Err(Error::parse(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|&(p, _)| p)
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.cursor).map(|(_, t)| t.clone());
        self.cursor += 1;
        token
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        let position = self.position();
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(Error::parse(
                position,
                format!("expected {what}, found {t:?}"),
            )),
            None => Err(Error::parse(
                position,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn index(&mut self) -> Result<usize> {
        let position = self.position();
        match self.next() {
            Some(Token::Int(v)) if v >= 1 => Ok(v as usize),
            _ => Err(Error::parse(position, "expected a positive integer")),
        }
    }

    fn product(&mut self) -> Result<Expression> {
        let mut factors = Vec::new();
        while matches!(
            self.peek(),
            Some(Token::Ident(_) | Token::LParen | Token::Int(_))
        ) {
            factors.push(self.factor()?);
        }
        match factors.len() {
            0 => Err(Error::parse(self.position(), "expected an expression")),
            1 => Ok(factors.pop().expect("one factor")),
            _ => Ok(Expression::Product(factors)),
        }
    }

    fn factor(&mut self) -> Result<Expression> {
        let mut base = self.primary()?;
        while self.peek() == Some(&Token::Caret) {
            self.next();
            let position = self.position();
            match self.next() {
                Some(Token::Int(0)) => return Err(Error::parse(position, "zero exponent")),
                Some(Token::Int(n)) => base = Expression::Power(Box::new(base), n),
                _ => return Err(Error::parse(position, "expected an integer exponent")),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expression> {
        let position = self.position();
        match self.next() {
            Some(Token::LParen) => {
                let inner = self.product()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Token::Int(1)) => Ok(Expression::Atom(Atom::Identity)),
            Some(Token::Ident(name)) => self.atom(&name, position).map(Expression::Atom),
            _ => Err(Error::parse(position, "expected an atom or `(`")),
        }
    }

    fn direction(&mut self) -> Direction {
        if self.peek() == Some(&Token::Prime) {
            self.next();
            Direction::Reverse
        } else {
            Direction::Forward
        }
    }

    fn curve(&mut self) -> Result<CurveRef> {
        let position = self.position();
        match self.next() {
            Some(Token::Ident(name)) if name == "R" => {
                self.expect(Token::LBrace, "`{`")?;
                let i = self.index()?;
                self.expect(Token::Comma, "`,`")?;
                let j = self.index()?;
                self.expect(Token::RBrace, "`}`")?;
                Ok(CurveRef::Span(i, j))
            }
            Some(Token::Ident(name)) if name.len() > 1 && name.starts_with('R') => {
                let i = name[1..]
                    .parse()
                    .ok()
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| Error::parse(position, format!("bad curve `{name}`")))?;
                Ok(CurveRef::Handle(i))
            }
            _ => Err(Error::parse(
                position,
                "expected a curve `R<i>` or `R{i,j}`",
            )),
        }
    }

    fn call_args(&mut self) -> Result<Vec<usize>> {
        self.expect(Token::LParen, "`(`")?;
        let mut args = vec![self.index()?];
        while self.peek() == Some(&Token::Comma) {
            self.next();
            args.push(self.index()?);
        }
        self.expect(Token::RParen, "`)`")?;
        Ok(args)
    }

    fn nested(&mut self) -> Result<Box<Expression>> {
        self.expect(Token::LParen, "`(`")?;
        let inner = self.product()?;
        self.expect(Token::RParen, "`)`")?;
        Ok(Box::new(inner))
    }

    fn atom(&mut self, name: &str, position: usize) -> Result<Atom> {
        let unknown = || Error::UnknownAtom {
            position,
            name: name.to_string(),
        };
        let split = name
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(name.len());
        let (head, digits) = name.split_at(split);
        if !digits.is_empty() {
            let index: usize = digits.parse().map_err(|_| unknown())?;
            if index == 0 {
                return Err(Error::parse(
                    position,
                    format!("indices start at 1 in `{name}`"),
                ));
            }
            return match head {
                "a" => Ok(Atom::Dehn(DehnKind::A, index)),
                "b" => Ok(Atom::Dehn(DehnKind::B, index)),
                "w" => Ok(Atom::Dehn(DehnKind::W, index)),
                "s" => Ok(Atom::Sigma(index)),
                _ => Err(unknown()),
            };
        }
        match name {
            "beta" => match self.call_args()?.as_slice() {
                [i] => Ok(Atom::Beta(*i)),
                [r, s] => Ok(Atom::BetaRs(*r, *s)),
                _ => Err(Error::parse(position, "beta takes one or two arguments")),
            },
            "sigma" => match self.call_args()?.as_slice() {
                [r, s] => Ok(Atom::SigmaRs(*r, *s)),
                _ => Err(Error::parse(position, "sigma takes two arguments")),
            },
            "hR" => Ok(Atom::BoundaryHalf(self.direction())),
            "hA" => Ok(Atom::ArmsHalf(self.direction())),
            "h" => {
                let direction = self.direction();
                self.expect(Token::LParen, "`(`")?;
                let curve = self.curve()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(Atom::Half(curve, direction))
            }
            "t" => {
                self.expect(Token::LParen, "`(`")?;
                let curve = self.curve()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(Atom::Full(curve))
            }
            "phi" => Ok(Atom::Phi(self.nested()?)),
            "harer" => Ok(Atom::Harer(self.nested()?)),
            "artin" => Ok(Atom::Artin(self.nested()?)),
            _ => Err(unknown()),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expression> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        cursor: 0,
        end: text.len(),
    };
    let expr = parser.product()?;
    if parser.cursor < parser.tokens.len() {
        return Err(Error::parse(parser.position(), "unexpected trailing input"));
    }
    Ok(expr)
}

fn resolve_curve(curve: CurveRef) -> Result<Curve> {
    match curve {
        CurveRef::Handle(i) => Ok(Curve::Handle(i)),
        CurveRef::Span(i, j) if j == i + 1 => Ok(Curve::Pair(i)),
        CurveRef::Span(i, j) => Err(Error::InvalidIndex(format!(
            "only adjacent pairs R{{i,i+1}} are catalog curves, got R{{{i},{j}}}"
        ))),
    }
}

fn not_allowed(atom: &Atom, context: &str) -> Error {
    Error::InvalidIndex(format!("`{atom}` is not allowed in {context}"))
}

impl Expression {
    /// Expands an expression made only of Dehn twist atoms into a word.
    pub fn to_mcg_word(&self) -> Result<McgWord> {
        match self {
            Expression::Atom(Atom::Identity) => Ok(McgWord::default()),
            Expression::Atom(Atom::Dehn(kind, i)) => {
                Ok(McgWord::new([McgGenerator::new(*kind, *i)]))
            }
            Expression::Atom(other) => Err(not_allowed(other, "a Dehn twist word")),
            Expression::Product(factors) => {
                factors.iter().try_fold(McgWord::default(), |acc, f| {
                    Ok(acc.concat(&f.to_mcg_word()?))
                })
            }
            Expression::Power(base, n) => Ok(base.to_mcg_word()?.pow(*n)),
        }
    }

    /// Expands a braid expression on `strands` strands.
    pub fn to_braid_word(&self, strands: usize) -> Result<BraidWord> {
        match self {
            Expression::Atom(Atom::Identity) => BraidWord::identity(strands),
            Expression::Atom(Atom::Sigma(i)) => BraidWord::new(strands, [BraidLetter::sigma(*i)]),
            Expression::Atom(Atom::SigmaRs(r, s)) => sigma_rs(*r, *s)?.with_strands(strands),
            Expression::Atom(other) => Err(not_allowed(other, "a braid word")),
            Expression::Product(factors) => factors
                .iter()
                .try_fold(BraidWord::identity(strands)?, |acc, f| {
                    acc.concat(&f.to_braid_word(strands)?)
                }),
            Expression::Power(base, n) => Ok(base.to_braid_word(strands)?.pow(*n)),
        }
    }
}

fn eval_atom(atom: &Atom, genus: usize) -> Result<Automorphism> {
    let class = match atom {
        Atom::Identity => MappingClass::identity(genus)?,
        Atom::Dehn(kind, i) => McgGenerator::new(*kind, *i).mapping_class(genus)?,
        Atom::Beta(i) => beta_local(*i, genus)?,
        Atom::BetaRs(r, s) => {
            let beta = beta_rs_direct(*r, *s)?;
            if beta.genus() > genus {
                return Err(Error::InvalidIndex(format!(
                    "beta({r},{s}) needs genus {}",
                    r + s
                )));
            }
            beta.stabilize(genus)?
        }
        Atom::BoundaryHalf(d) => half_twist(
            HalfTwistName {
                curve: Curve::Boundary,
                direction: *d,
            },
            genus,
        )?,
        Atom::ArmsHalf(d) => arms_twist(genus, *d)?,
        Atom::Half(c, d) => half_twist(
            HalfTwistName {
                curve: resolve_curve(*c)?,
                direction: *d,
            },
            genus,
        )?,
        Atom::Full(c) => full_twist(resolve_curve(*c)?, genus)?,
        Atom::Phi(b) => phi(&b.to_braid_word(genus)?, genus)?,
        Atom::Harer(b) => harer(&b.to_braid_word(2 * genus)?, genus)?,
        Atom::Artin(b) => return Ok(artin(&b.to_braid_word(genus)?)),
        Atom::Sigma(_) | Atom::SigmaRs(..) => {
            return Err(not_allowed(
                atom,
                "a mapping class expression; wrap braids in phi(...) or harer(...)",
            ))
        }
    };
    Ok(class.into_automorphism())
}

/// Evaluates to an automorphism: a mapping class of the genus `g` surface,
/// or an automorphism of the rank `g` free group for `artin(...)`
/// expressions. The two kinds cannot be mixed in one product.
pub fn evaluate_any(expr: &Expression, genus: usize) -> Result<Automorphism> {
    if genus < 1 {
        return Err(Error::InvalidGenus(genus));
    }
    match expr {
        Expression::Atom(atom) => eval_atom(atom, genus),
        Expression::Product(factors) => {
            let mut values = factors.iter().map(|f| evaluate_any(f, genus));
            let first = values.next().expect("products have factors")?;
            values.try_fold(first, |acc, f| acc.compose(&f?))
        }
        Expression::Power(base, n) => Ok(evaluate_any(base, genus)?.pow(*n)),
    }
}

/// Evaluates a mapping class expression at genus `g`.
pub fn evaluate(expr: &Expression, genus: usize) -> Result<MappingClass> {
    MappingClass::from_automorphism(evaluate_any(expr, genus)?)
}
