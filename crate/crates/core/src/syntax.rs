//! Text formats: shift specification files and the expression languages.
//!
//! Set expressions:
//!
//! ```text
//! set  := and ('|' and)*
//! and  := not ('&' not)*
//! not  := '!' not | atom
//! atom := 'C(' word ',' word ')' | 'Z(' word ')' | 'F(' word ')' | 'X' | '0' | '(' set ')'
//! ```
//!
//! Algebra expressions:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | rational | 's(' word ')' | 'st(' word ')'
//!         | 'p(' set ')' | 'pi(' group ')' | '(' expr ')'
//! ```
//!
//! Words use the alphabet's word syntax (`ω` or `w` for the empty word).
//! Group literals are letters with `'` marking inverses (`0 1'`), or `e`.
//! Points are written `u|v` for `u·v^∞`.

use std::path::Path;

use num::bigint::BigInt;
use num::BigRational;
use serde_json::{json, Value};

use crate::algebra::AlgebraElement;
use crate::clopen::ClopenSet;
use crate::error::{Error, Result};
use crate::group::{FreeGroupElement, Letter};
use crate::point::EvPeriodicPoint;
use crate::ring::Ring;
use crate::shift::{Shift, ShiftSpec};
use crate::word::{Alphabet, Word};

/// Parses a shift specification: `{"alphabet": [...], "forbidden": [...]}`.
/// Forbidden words are strings in the word syntax or arrays of symbol names.
pub fn parse_spec(text: &str) -> Result<ShiftSpec> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        Error::MalformedSpec(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    let obj = value.as_object().ok_or_else(|| Error::MalformedSpec("top level must be an object".into()))?;
    for k in obj.keys() {
        if !matches!(k.as_str(), "alphabet" | "forbidden" | "name") {
            return Err(Error::MalformedSpec(format!("unknown field `{k}`")));
        }
    }
    let names = obj
        .get("alphabet")
        .ok_or_else(|| Error::MalformedSpec("missing field `alphabet`".into()))?
        .as_array()
        .ok_or_else(|| Error::MalformedSpec("field `alphabet` must be an array".into()))?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::MalformedSpec(format!("field `alphabet[{i}]` must be a string")))
        })
        .collect::<Result<Vec<_>>>()?;
    let alphabet = Alphabet::new(names)?;
    let forbidden = match obj.get("forbidden") {
        None => Vec::new(),
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| forbidden_word(&alphabet, i, v))
            .collect::<Result<Vec<_>>>()?,
        Some(_) => return Err(Error::MalformedSpec("field `forbidden` must be an array".into())),
    };
    ShiftSpec::new(alphabet, forbidden)
}

fn forbidden_word(alphabet: &Alphabet, i: usize, v: &Value) -> Result<Word> {
    let field = format!("forbidden[{i}]");
    let unknown = |e: Error| match e {
        Error::UnknownSymbol(s) => Error::MalformedSpec(format!("field `{field}`: unknown symbol {s:?}")),
        other => other,
    };
    match v {
        Value::String(s) => alphabet.parse_word(s).map_err(unknown),
        Value::Array(parts) => parts
            .iter()
            .map(|p| {
                p.as_str()
                    .ok_or_else(|| Error::MalformedSpec(format!("field `{field}` must hold strings")))
                    .and_then(|s| alphabet.symbol(s).map_err(unknown))
            })
            .collect(),
        _ => Err(Error::MalformedSpec(format!("field `{field}` must be a string or an array"))),
    }
}

/// Reads and parses a specification file.
pub fn load_spec(path: impl AsRef<Path>) -> Result<ShiftSpec> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_spec(&text)
}

/// The specification as JSON, in the format read by [`parse_spec`].
pub fn spec_to_json(spec: &ShiftSpec) -> Value {
    let a = spec.alphabet();
    let forbidden: Vec<Value> = spec
        .forbidden()
        .iter()
        .map(|w| {
            if a.is_compact() {
                json!(a.format_word(w))
            } else {
                json!(w.iter().map(|&s| a.name(s)).collect::<Vec<_>>())
            }
        })
        .collect();
    json!({ "alphabet": a.names(), "forbidden": forbidden })
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax { offset, message: message.into() }
}

/// Parses `u|v`.
pub fn parse_point(alphabet: &Alphabet, text: &str) -> Result<EvPeriodicPoint> {
    let bar = text.find('|').ok_or_else(|| syntax(0, "expected `u|v`"))?;
    let u = alphabet.parse_word(&text[..bar]).map_err(|e| at(0, e))?;
    let v = alphabet.parse_word(&text[bar + 1..]).map_err(|e| at(bar + 1, e))?;
    if v.is_empty() {
        return Err(syntax(bar + 1, "the period must be nonempty"));
    }
    Ok(EvPeriodicPoint::new(u, v))
}

fn at(offset: usize, e: Error) -> Error {
    match e {
        Error::UnknownSymbol(s) => syntax(offset, format!("unknown symbol {s:?}")),
        other => other,
    }
}

/// Parses a free-group literal such as `0 1'` or `e`.
pub fn parse_group(alphabet: &Alphabet, text: &str) -> Result<FreeGroupElement> {
    let mut letters = Vec::new();
    let mut pos = 0;
    while pos < text.len() {
        let rest = &text[pos..];
        let c = rest.chars().next().expect("nonempty rest");
        if c.is_whitespace() || c == '.' {
            pos += c.len_utf8();
            continue;
        }
        let best = alphabet
            .names()
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        let (symbol, len) = match best {
            Some((i, n)) => (crate::word::Symbol(i as u16), n.len()),
            None if c == 'e' => {
                pos += 1;
                continue;
            }
            None => return Err(syntax(pos, format!("unknown symbol {c:?}"))),
        };
        pos += len;
        let inverse = text[pos..].starts_with('\'');
        if inverse {
            pos += 1;
        }
        letters.push(Letter { symbol, inverse });
    }
    Ok(FreeGroupElement::reduce(letters))
}

/// A parsed set expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetExpr {
    Whole,
    Empty,
    Cylinder(Word),
    Follower(Word),
    C(Word, Word),
    Not(Box<SetExpr>),
    And(Box<SetExpr>, Box<SetExpr>),
    Or(Box<SetExpr>, Box<SetExpr>),
}

impl SetExpr {
    pub fn eval(&self, shift: &Shift) -> Result<ClopenSet> {
        Ok(match self {
            SetExpr::Whole => ClopenSet::whole(shift)?,
            SetExpr::Empty => {
                shift.ensure_nonempty()?;
                ClopenSet::empty(shift)
            }
            SetExpr::Cylinder(w) => ClopenSet::cylinder(shift, w)?,
            SetExpr::Follower(w) => ClopenSet::follower(shift, w)?,
            SetExpr::C(a, b) => ClopenSet::c_set(shift, a, b)?,
            SetExpr::Not(x) => x.eval(shift)?.complement()?,
            SetExpr::And(x, y) => x.eval(shift)?.intersect(&y.eval(shift)?)?,
            SetExpr::Or(x, y) => x.eval(shift)?.union(&y.eval(shift)?)?,
        })
    }
}

/// A parsed algebra expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgExpr {
    Scalar(BigRational),
    Gen(Word),
    StarGen(Word),
    Proj(SetExpr),
    Pi(FreeGroupElement),
    Neg(Box<AlgExpr>),
    Add(Box<AlgExpr>, Box<AlgExpr>),
    Sub(Box<AlgExpr>, Box<AlgExpr>),
    Mul(Box<AlgExpr>, Box<AlgExpr>),
}

impl AlgExpr {
    pub fn eval(&self, shift: &Shift, ring: Ring) -> Result<AlgebraElement> {
        Ok(match self {
            AlgExpr::Scalar(c) => AlgebraElement::scalar(shift, ring, c)?,
            AlgExpr::Gen(w) => AlgebraElement::gen_s_word(shift, ring, w)?,
            AlgExpr::StarGen(w) => AlgebraElement::gen_s_star_word(shift, ring, w)?,
            AlgExpr::Proj(s) => AlgebraElement::gen_p(ring, &s.eval(shift)?)?,
            AlgExpr::Pi(g) => AlgebraElement::pi(shift, ring, g)?,
            AlgExpr::Neg(x) => x.eval(shift, ring)?.neg(),
            AlgExpr::Add(x, y) => x.eval(shift, ring)?.add(&y.eval(shift, ring)?)?,
            AlgExpr::Sub(x, y) => x.eval(shift, ring)?.sub(&y.eval(shift, ring)?)?,
            AlgExpr::Mul(x, y) => x.eval(shift, ring)?.mul(&y.eval(shift, ring)?)?,
        })
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, alphabet: &'a Alphabet) -> Self {
        Parser { src, pos: 0, alphabet }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(syntax(self.pos, format!("expected `{token}`")))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(syntax(self.pos, format!("unexpected `{c}`"))),
        }
    }

    /// Raw text up to (not including) the first of `stops`.
    fn raw_until(&mut self, stops: &[char]) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let end = rest.find(|c| stops.contains(&c)).ok_or_else(|| {
            let want: Vec<String> = stops.iter().map(|c| format!("`{c}`")).collect();
            syntax(start, format!("expected {}", want.join(" or ")))
        })?;
        self.pos = start + end;
        Ok((start, &rest[..end]))
    }

    fn word(&mut self, stops: &[char]) -> Result<Word> {
        let (start, raw) = self.raw_until(stops)?;
        self.alphabet.parse_word(raw).map_err(|e| at(start, e))
    }

    fn set_or(&mut self) -> Result<SetExpr> {
        let mut lhs = self.set_and()?;
        while self.eat("|") {
            lhs = SetExpr::Or(Box::new(lhs), Box::new(self.set_and()?));
        }
        Ok(lhs)
    }

    fn set_and(&mut self) -> Result<SetExpr> {
        let mut lhs = self.set_not()?;
        while self.eat("&") {
            lhs = SetExpr::And(Box::new(lhs), Box::new(self.set_not()?));
        }
        Ok(lhs)
    }

    fn set_not(&mut self) -> Result<SetExpr> {
        if self.eat("!") {
            return Ok(SetExpr::Not(Box::new(self.set_not()?)));
        }
        self.set_atom()
    }

    fn set_atom(&mut self) -> Result<SetExpr> {
        if self.eat("C(") {
            let a = self.word(&[','])?;
            self.expect(",")?;
            let b = self.word(&[')'])?;
            self.expect(")")?;
            return Ok(SetExpr::C(a, b));
        }
        if self.eat("Z(") {
            let w = self.word(&[')'])?;
            self.expect(")")?;
            return Ok(SetExpr::Cylinder(w));
        }
        if self.eat("F(") {
            let w = self.word(&[')'])?;
            self.expect(")")?;
            return Ok(SetExpr::Follower(w));
        }
        if self.eat("(") {
            let inner = self.set_or()?;
            self.expect(")")?;
            return Ok(inner);
        }
        if self.eat("X") {
            return Ok(SetExpr::Whole);
        }
        if self.eat("0") || self.eat("∅") {
            return Ok(SetExpr::Empty);
        }
        Err(syntax(self.pos, "expected a set expression"))
    }

    fn expr(&mut self) -> Result<AlgExpr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat("+") {
                lhs = AlgExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat("-") {
                lhs = AlgExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<AlgExpr> {
        let mut lhs = self.factor()?;
        while self.eat("*") {
            lhs = AlgExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<AlgExpr> {
        if self.eat("-") {
            return Ok(AlgExpr::Neg(Box::new(self.factor()?)));
        }
        if self.eat("st(") {
            let w = self.word(&[')'])?;
            self.expect(")")?;
            return Ok(AlgExpr::StarGen(w));
        }
        if self.eat("s(") {
            let w = self.word(&[')'])?;
            self.expect(")")?;
            return Ok(AlgExpr::Gen(w));
        }
        if self.eat("pi(") {
            let (start, raw) = self.raw_until(&[')'])?;
            let g = parse_group(self.alphabet, raw).map_err(|e| shift_offset(e, start))?;
            self.expect(")")?;
            return Ok(AlgExpr::Pi(g));
        }
        if self.eat("p(") {
            let set = self.set_or()?;
            self.expect(")")?;
            return Ok(AlgExpr::Proj(set));
        }
        if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(inner);
        }
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return self.rational();
        }
        Err(syntax(self.pos, "expected a factor"))
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].find(|c: char| !c.is_ascii_digit()).unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(syntax(start, "expected digits"));
        }
        self.pos += len;
        Ok(self.src[start..start + len].parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<AlgExpr> {
        let num = self.digits()?;
        if self.src[self.pos..].starts_with('/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.digits()?;
            if den == BigInt::from(0) {
                return Err(syntax(at, "zero denominator"));
            }
            return Ok(AlgExpr::Scalar(BigRational::new(num, den)));
        }
        Ok(AlgExpr::Scalar(BigRational::from_integer(num)))
    }
}

fn shift_offset(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { offset, message } => Error::Syntax { offset: offset + by, message },
        other => other,
    }
}

pub fn parse_set_expr(alphabet: &Alphabet, text: &str) -> Result<SetExpr> {
    let mut p = Parser::new(text, alphabet);
    let e = p.set_or()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_algebra_expr(alphabet: &Alphabet, text: &str) -> Result<AlgExpr> {
    let mut p = Parser::new(text, alphabet);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses and evaluates a set expression.
pub fn eval_set_expr(shift: &Shift, text: &str) -> Result<ClopenSet> {
    parse_set_expr(shift.alphabet(), text)?.eval(shift)
}

/// Parses and evaluates an algebra expression.
pub fn eval_algebra_expr(shift: &Shift, ring: Ring, text: &str) -> Result<AlgebraElement> {
    parse_algebra_expr(shift.alphabet(), text)?.eval(shift, ring)
}
