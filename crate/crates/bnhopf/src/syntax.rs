// SPDX-License-Identifier: MIT
//! Text syntax for elements of both rings.
//!
//! Atoms: `g(k,m)` (`gamma_{k,m}`), `w(r)` (`w^[r]`), `one(n)`, `one+`,
//! `one-`. Postfix `^+`, `^-`, `^0` charge a class (`^0` is restriction),
//! `^N` is a cup power. Binary operators by increasing precedence: `+`,
//! ` o ` (transfer), `.` (cup). Functions: `delta`, `res`, `tr`, `iota`.
//! Input also accepts block literals `[n| w:a0; 1:a1, 2:a2]` and `1(n)`.

use std::fmt;

use itertools::Itertools;

use crate::block::Block;
use crate::charged::{self, Charge, ChargedElement, ChargedMonomial, ChargedTensor};
use crate::error::{Error, Result};
use crate::hopf;
use crate::monomial::{Element, Monomial, Tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Delta,
    Res,
    Tr,
    Iota,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Delta => "delta",
            Func::Res => "res",
            Func::Tr => "tr",
            Func::Iota => "iota",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Zero,
    Gamma(u32, u32),
    W(u32),
    One(u32),
    Unit(Charge),
    /// Block literal `[n| w:a0; k:a_k, ..]`.
    Block(u32, u32, Vec<u32>),
    Charged(Box<Expr>, Charge),
    Pow(Box<Expr>, u32),
    Cup(Box<Expr>, Box<Expr>),
    Transfer(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) => 0,
            Expr::Transfer(..) => 1,
            Expr::Cup(..) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.prec() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Expr::Zero => f.write_str("0")?,
            Expr::Gamma(k, m) => write!(f, "g({k},{m})")?,
            Expr::W(r) => write!(f, "w({r})")?,
            Expr::One(n) => write!(f, "one({n})")?,
            Expr::Unit(c) => write!(f, "one{c}")?,
            Expr::Block(n, a0, gam) => {
                let exps = gam
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .map(|(i, a)| format!("{}:{a}", i + 1))
                    .join(", ");
                write!(f, "[{n}| w:{a0}; {exps}]")?
            }
            Expr::Charged(e, c) => {
                e.fmt_at(f, 3)?;
                write!(f, "^{c}")?;
            }
            Expr::Pow(e, p) => {
                e.fmt_at(f, 3)?;
                write!(f, "^{p}")?;
            }
            // Left-associative: the right operand needs a strictly higher level.
            Expr::Cup(a, b) => {
                a.fmt_at(f, 2)?;
                f.write_str(".")?;
                b.fmt_at(f, 3)?;
            }
            Expr::Transfer(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(" o ")?;
                b.fmt_at(f, 2)?;
            }
            Expr::Add(a, b) => {
                a.fmt_at(f, 0)?;
                f.write_str(" + ")?;
                b.fmt_at(f, 1)?;
            }
            Expr::Call(func, e) => {
                write!(f, "{}(", func.name())?;
                e.fmt_at(f, 0)?;
                f.write_str(")")?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

// ------------------------------------------------------------------ lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u32),
    LParen,
    RParen,
    Comma,
    Dot,
    Plus,
    Minus,
    Caret,
    LBracket,
    RBracket,
    Bar,
    Colon,
    Semi,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
    /// Whitespace directly before this token.
    spaced: bool,
}

fn syntax(col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { col, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let mut spaced = false;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            spaced = true;
            i += 1;
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '.' => Tok::Dot,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '^' => Tok::Caret,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '|' => Tok::Bar,
            ':' => Tok::Colon,
            ';' => Tok::Semi,
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                Tok::Num(s.parse().map_err(|_| syntax(col, format!("number too large: {s}")))?)
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_alphanumeric() {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            c => return Err(syntax(col, format!("unexpected character {c:?}"))),
        };
        out.push(Token { tok, col, spaced });
        spaced = false;
        i += 1;
    }
    Ok(out)
}

// ----------------------------------------------------------------- parser

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn col(&self) -> usize {
        self.peek().map_or(self.end, |t| t.col)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let col = self.col();
        match self.next() {
            Some(t) if t.tok == want => Ok(()),
            _ => Err(syntax(col, format!("expected {what}"))),
        }
    }

    fn number(&mut self) -> Result<u32> {
        let col = self.col();
        match self.next() {
            Some(Token { tok: Tok::Num(n), .. }) => Ok(n),
            _ => Err(syntax(col, "expected a number")),
        }
    }

    fn is_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Ident(s), .. }) if s == name)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.transfer()?;
        while matches!(self.peek(), Some(Token { tok: Tok::Plus, .. })) {
            self.pos += 1;
            e = Expr::Add(Box::new(e), Box::new(self.transfer()?));
        }
        Ok(e)
    }

    fn transfer(&mut self) -> Result<Expr> {
        let mut e = self.cup()?;
        while self.is_ident("o") {
            self.pos += 1;
            e = Expr::Transfer(Box::new(e), Box::new(self.cup()?));
        }
        Ok(e)
    }

    fn cup(&mut self) -> Result<Expr> {
        let mut e = self.postfix()?;
        while matches!(self.peek(), Some(Token { tok: Tok::Dot, .. })) {
            self.pos += 1;
            e = Expr::Cup(Box::new(e), Box::new(self.postfix()?));
        }
        Ok(e)
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while matches!(self.peek(), Some(Token { tok: Tok::Caret, .. })) {
            self.pos += 1;
            let col = self.col();
            e = match self.next().map(|t| t.tok) {
                Some(Tok::Plus) => Expr::Charged(Box::new(e), Charge::Plus),
                Some(Tok::Minus) => Expr::Charged(Box::new(e), Charge::Minus),
                Some(Tok::Num(0)) => Expr::Charged(Box::new(e), Charge::Zero),
                Some(Tok::Num(p)) => Expr::Pow(Box::new(e), p),
                _ => return Err(syntax(col, "expected +, -, 0 or an exponent after ^")),
            };
        }
        Ok(e)
    }

    fn args(&mut self, n: usize, name: &str) -> Result<Vec<u32>> {
        let col = self.col();
        self.expect(Tok::LParen, &format!("( after {name}"))?;
        let mut out = vec![self.number()?];
        while matches!(self.peek(), Some(Token { tok: Tok::Comma, .. })) {
            self.pos += 1;
            out.push(self.number()?);
        }
        self.expect(Tok::RParen, ")")?;
        if out.len() != n {
            return Err(syntax(col, format!("{name} takes {n} argument(s), got {}", out.len())));
        }
        Ok(out)
    }

    fn block_literal(&mut self) -> Result<Expr> {
        let n = self.number()?;
        self.expect(Tok::Bar, "|")?;
        let (mut a0, mut gam) = (0, Vec::new());
        loop {
            let col = self.col();
            match self.next().map(|t| t.tok) {
                Some(Tok::RBracket) => break,
                Some(Tok::Comma | Tok::Semi) => continue,
                Some(Tok::Ident(w)) if w == "w" => {
                    self.expect(Tok::Colon, ":")?;
                    a0 = self.number()?;
                }
                Some(Tok::Num(k)) if k >= 1 => {
                    self.expect(Tok::Colon, ":")?;
                    let a = self.number()?;
                    if gam.len() < k as usize {
                        gam.resize(k as usize, 0);
                    }
                    gam[k as usize - 1] = a;
                }
                _ => return Err(syntax(col, "expected w:a, k:a or ] in block literal")),
            }
        }
        while gam.last() == Some(&0) {
            gam.pop();
        }
        Ok(Expr::Block(n, a0, gam))
    }

    fn atom(&mut self) -> Result<Expr> {
        let col = self.col();
        let Some(t) = self.next() else {
            return Err(syntax(col, "unexpected end of input"));
        };
        match t.tok {
            Tok::Num(1) if matches!(self.peek(), Some(Token { tok: Tok::LParen, spaced: false, .. })) => {
                Ok(Expr::One(self.args(1, "1")?[0]))
            }
            Tok::Num(0) => Ok(Expr::Zero),
            Tok::LBracket => self.block_literal(),
            Tok::LParen => {
                let e = self.sum()?;
                self.expect(Tok::RParen, ")")?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "g" => {
                    let a = self.args(2, "g")?;
                    Ok(Expr::Gamma(a[0], a[1]))
                }
                "w" => Ok(Expr::W(self.args(1, "w")?[0])),
                "one" => match self.peek() {
                    Some(Token { tok: Tok::Plus, spaced: false, .. }) => {
                        self.pos += 1;
                        Ok(Expr::Unit(Charge::Plus))
                    }
                    Some(Token { tok: Tok::Minus, spaced: false, .. }) => {
                        self.pos += 1;
                        Ok(Expr::Unit(Charge::Minus))
                    }
                    _ => Ok(Expr::One(self.args(1, "one")?[0])),
                },
                "delta" | "res" | "tr" | "iota" => {
                    let func = match name.as_str() {
                        "delta" => Func::Delta,
                        "res" => Func::Res,
                        "tr" => Func::Tr,
                        _ => Func::Iota,
                    };
                    self.expect(Tok::LParen, &format!("( after {name}"))?;
                    let e = self.sum()?;
                    self.expect(Tok::RParen, ")")?;
                    Ok(Expr::Call(func, Box::new(e)))
                }
                _ => Err(syntax(col, format!("unknown name {name:?}"))),
            },
            other => Err(syntax(col, format!("unexpected {other:?}"))),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let end = text.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, end };
    let e = p.sum()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.col(), "trailing input"));
    }
    Ok(e)
}

// -------------------------------------------------------------- evaluation

/// The value of an expression in one of the two rings or their tensor squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Zero,
    B(Element),
    Plus(ChargedElement),
    BTensor(Tensor),
    PlusTensor(ChargedTensor),
}

impl Value {
    fn normalize(self) -> Value {
        let zero = match &self {
            Value::Zero => true,
            Value::B(x) => x.is_zero(),
            Value::Plus(x) => x.is_zero(),
            Value::BTensor(x) => x.is_zero(),
            Value::PlusTensor(x) => x.is_zero(),
        };
        if zero {
            Value::Zero
        } else {
            self
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Value::Zero)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Value::Zero => "zero",
            Value::B(_) => "B",
            Value::Plus(_) => "Bplus",
            Value::BTensor(_) => "B tensor",
            Value::PlusTensor(_) => "Bplus tensor",
        }
    }

    /// Coerce to the charged ring, restricting `B` elements.
    pub fn to_plus(&self) -> Result<ChargedElement> {
        match self {
            Value::Zero => Ok(ChargedElement::zero()),
            Value::Plus(z) => Ok(z.clone()),
            Value::B(x) => charged::res(x),
            _ => Err(Error::Type(format!("expected a class, got a {}", self.kind()))),
        }
    }

    pub fn to_b(&self) -> Result<Element> {
        match self {
            Value::Zero => Ok(Element::zero()),
            Value::B(x) => Ok(x.clone()),
            _ => Err(Error::Type(format!("expected a B class, got a {}", self.kind()))),
        }
    }

    /// Common bidegree of the terms of a class, if homogeneous and nonzero.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        match self {
            Value::B(x) => crate::monomial::bidegree(x),
            Value::Plus(z) => charged::charged_bidegree(z),
            _ => None,
        }
    }

    /// Canonical term strings.
    pub fn terms(&self) -> Vec<String> {
        match self {
            Value::Zero => vec![],
            Value::B(x) => x.iter().map(fmt_monomial).collect(),
            Value::Plus(x) => x.iter().map(fmt_charged).collect(),
            Value::BTensor(t) => {
                t.iter().map(|(a, b)| format!("{} # {}", fmt_monomial(a), fmt_monomial(b))).collect()
            }
            Value::PlusTensor(t) => {
                t.iter().map(|(a, b)| format!("{} # {}", fmt_charged(a), fmt_charged(b))).collect()
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.terms();
        if t.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&t.join(" + "))
        }
    }
}

fn type_err(op: &str, a: &Value, b: &Value) -> Error {
    Error::Type(format!("{op} of a {} and a {}", a.kind(), b.kind()))
}

fn binary(a: Value, b: Value, op: &str) -> Result<Value> {
    use Value::*;
    let out = match (op, &a, &b) {
        (_, Zero, _) | (_, _, Zero) if op != "+" => Zero,
        ("+", Zero, _) => b,
        ("+", _, Zero) => a,
        ("+", B(x), B(y)) => B(x.clone() + y.clone()),
        ("+", Plus(x), Plus(y)) => Plus(x.clone() + y.clone()),
        ("+", BTensor(x), BTensor(y)) => BTensor(x.clone() + y.clone()),
        ("+", PlusTensor(x), PlusTensor(y)) => PlusTensor(x.clone() + y.clone()),
        (".", B(x), B(y)) => B(hopf::cup(x, y)),
        (".", Plus(x), Plus(y)) => Plus(charged::cup(x, y)),
        (".", BTensor(x), BTensor(y)) => BTensor(hopf::cup_tensor(x, y)),
        ("o", B(x), B(y)) => B(hopf::transfer(x, y)),
        ("o", Plus(x), Plus(y)) => Plus(charged::transfer(x, y)),
        ("o", BTensor(x), BTensor(y)) => BTensor(hopf::transfer_tensor(x, y)),
        _ => return Err(type_err(op, &a, &b)),
    };
    Ok(out.normalize())
}

/// Cup product of two values of the same kind.
pub fn cup_values(a: Value, b: Value) -> Result<Value> {
    binary(a, b, ".")
}

/// Transfer product of two values of the same kind.
pub fn transfer_values(a: Value, b: Value) -> Result<Value> {
    binary(a, b, "o")
}

fn charge_value(v: Value, c: Charge) -> Result<Value> {
    match (v, c) {
        (Value::Zero, _) => Ok(Value::Zero),
        (Value::B(x), Charge::Zero) => {
            if let Some(m) = x.iter().find(|m| crate::gysin::classify(m) == crate::gysin::GysinClass::Ann) {
                return Err(Error::BadCharge { charge: '0', what: fmt_monomial(m) });
            }
            Ok(Value::Plus(charged::res(&x)?).normalize())
        }
        (Value::B(x), c) => {
            let mut out = ChargedElement::zero();
            for m in x.iter() {
                out.toggle(
                    ChargedMonomial::new(m.clone(), c)
                        .map_err(|_| Error::BadCharge { charge: c.symbol(), what: fmt_monomial(m) })?,
                );
            }
            Ok(Value::Plus(out))
        }
        (v, c) => Err(Error::BadCharge { charge: c.symbol(), what: format!("a {}", v.kind()) }),
    }
}

fn pow(v: Value, p: u32) -> Result<Value> {
    if p == 0 {
        return Err(Error::Type("use ^0 for restriction; zeroth powers are not supported".into()));
    }
    let mut acc = v.clone();
    for _ in 1..p {
        acc = binary(acc, v.clone(), ".")?;
    }
    Ok(acc)
}

pub fn eval(e: &Expr) -> Result<Value> {
    let v = match e {
        Expr::Zero => Value::Zero,
        Expr::Gamma(k, m) => Value::B(Element::from_term(Monomial::from_block(Block::gamma(*k, *m)?))),
        Expr::W(r) => Value::B(Element::from_term(Monomial::from_block(Block::w(*r)?))),
        Expr::One(0) => Value::B(Element::from_term(Monomial::one())),
        Expr::One(n) => Value::B(Element::from_term(Monomial::from_block(Block::unit(*n)))),
        Expr::Unit(c) => Value::Plus(ChargedElement::from_term(ChargedMonomial::unit(*c))),
        Expr::Block(n, a0, gam) => {
            Value::B(Element::from_term(Monomial::from_block(Block::new(*n, *a0, gam.clone())?)))
        }
        Expr::Charged(x, c) => charge_value(eval(x)?, *c)?,
        Expr::Pow(x, p) => pow(eval(x)?, *p)?,
        Expr::Cup(a, b) => binary(eval(a)?, eval(b)?, ".")?,
        Expr::Transfer(a, b) => binary(eval(a)?, eval(b)?, "o")?,
        Expr::Add(a, b) => binary(eval(a)?, eval(b)?, "+")?,
        Expr::Call(f, x) => {
            let x = eval(x)?;
            match (f, x) {
                (_, Value::Zero) => Value::Zero,
                (Func::Delta, Value::B(x)) => Value::BTensor(hopf::coproduct(&x)),
                (Func::Delta, Value::Plus(z)) => Value::PlusTensor(charged::coproduct(&z)),
                (Func::Res, Value::B(x)) => Value::Plus(charged::res(&x)?),
                (Func::Tr, Value::Plus(z)) => Value::B(charged::tr(&z)),
                (Func::Iota, Value::Plus(z)) => Value::Plus(charged::iota(&z)),
                (f, v) => return Err(Error::Type(format!("{} of a {}", f.name(), v.kind()))),
            }
        }
    };
    Ok(v.normalize())
}

pub fn eval_str(text: &str) -> Result<Value> {
    eval(&parse(text)?)
}

// ---------------------------------------------------------------- printing

fn pow_suffix(e: u32) -> String {
    if e == 1 {
        String::new()
    } else {
        format!("^{e}")
    }
}

/// Cup factors of a block.
fn block_factors(b: &Block) -> Vec<String> {
    let n = b.n();
    let mut out = Vec::new();
    if b.a0() > 0 {
        out.push(format!("w({n}){}", pow_suffix(b.a0())));
    }
    for (i, &a) in b.gam().iter().enumerate() {
        if a > 0 {
            let k = i as u32 + 1;
            out.push(format!("g({k},{}){}", n >> k, pow_suffix(a)));
        }
    }
    if out.is_empty() {
        out.push(format!("one({n})"));
    }
    out
}

pub fn fmt_block(b: &Block) -> String {
    block_factors(b).join(".")
}

pub fn fmt_monomial(m: &Monomial) -> String {
    if m.is_one() {
        return "one(0)".into();
    }
    m.blocks().iter().map(fmt_block).join(" o ")
}

/// A single atom without a power prints bare; anything else is wrapped.
pub fn fmt_charged(z: &ChargedMonomial) -> String {
    let base = z.base();
    if base.is_one() {
        return format!("one{}", z.charge());
    }
    let simple = base.blocks().len() == 1 && {
        let f = block_factors(&base.blocks()[0]);
        f.len() == 1 && !f[0].contains('^')
    };
    if simple {
        format!("{}^{}", fmt_monomial(base), z.charge())
    } else {
        format!("({})^{}", fmt_monomial(base), z.charge())
    }
}

pub fn fmt_element(x: &Element) -> String {
    Value::B(x.clone()).normalize().to_string()
}

pub fn fmt_charged_element(z: &ChargedElement) -> String {
    Value::Plus(z.clone()).normalize().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let e = parse("g(2,1)^+ o one-").unwrap();
        assert!(matches!(e, Expr::Transfer(..)));
        assert!(matches!(parse("res(g(2,1))").unwrap(), Expr::Call(Func::Res, _)));
        let e = parse("g(1,1) + w(1) o one(1) . g(1,1)^2").unwrap();
        assert_eq!(e.to_string(), "g(1,1) + w(1) o one(1).g(1,1)^2");
        assert_eq!(parse(&e.to_string()).unwrap(), e);
        let e = parse("(g(1,1) + w(2)) . (one(1) o w(1))").unwrap();
        assert_eq!(parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn errors() {
        match parse("g(2,1)^? ") {
            Err(Error::Syntax { col, .. }) => assert_eq!(col, 8),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("g(2)"), Err(Error::Syntax { col: 2, .. })));
        assert!(matches!(parse("h(1)"), Err(Error::Syntax { col: 1, .. })));
        assert!(matches!(parse("g(1,1) g(1,1)"), Err(Error::Syntax { col: 8, .. })));
        assert!(matches!(eval_str("g(1,1)^+"), Err(Error::BadCharge { .. })));
        assert!(matches!(eval_str("g(2,1)^0"), Err(Error::BadCharge { .. })));
        assert!(matches!(eval_str("g(2,1)^+ . g(1,1)"), Err(Error::Type(_))));
    }

    #[test]
    fn basis_strings() {
        let b: Vec<String> = hopf::basis(2, 1).iter().map(fmt_monomial).collect();
        assert_eq!(b, ["g(1,1)", "w(1) o one(1)"]);
    }

    #[test]
    fn round_trip() {
        for n in 0..=6 {
            for d in 0..=5 {
                for m in hopf::basis(n, d).iter() {
                    let s = fmt_monomial(m);
                    assert_eq!(eval_str(&s).unwrap(), Value::B(Element::from_term(m.clone())), "{s}");
                }
                for z in charged::charged_basis(n, d) {
                    let s = fmt_charged(&z);
                    assert_eq!(
                        eval_str(&s).unwrap(),
                        Value::Plus(ChargedElement::from_term(z.clone())),
                        "{s}"
                    );
                }
            }
        }
    }

    #[test]
    fn block_literals() {
        let v = eval_str("[4| w:3; 1:1]").unwrap();
        assert_eq!(v.to_string(), "w(4)^3.g(1,2)");
        assert_eq!(eval_str("[4| w:0; 2:1] o 1(2)").unwrap(), eval_str("g(2,1) o one(2)").unwrap());
        let e = parse("[8| w:1; 1:2, 3:1]").unwrap();
        assert_eq!(parse(&e.to_string()).unwrap(), e);
        assert!(eval_str("[6| w:0; 2:1]").is_err());
    }

    #[test]
    fn unit_forms() {
        assert_eq!(eval_str("one+").unwrap().to_string(), "one+");
        assert_eq!(eval_str("iota(one+)").unwrap().to_string(), "one-");
        assert!(eval_str("tr(res(g(1,1)))").unwrap().is_zero());
        assert_eq!(eval_str("0 + g(1,1)").unwrap().to_string(), "g(1,1)");
    }
}
