use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::{Enveloping, UElement};
use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Slash,
    Ident(String),
    Caret,
    Star,
    Plus,
    Minus,
}

fn is_label_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '.'
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '^' => (out.push(Tok::Caret), i += 1).1,
            '*' => (out.push(Tok::Star), i += 1).1,
            '+' => (out.push(Tok::Plus), i += 1).1,
            '-' => (out.push(Tok::Minus), i += 1).1,
            '/' => (out.push(Tok::Slash), i += 1).1,
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Num(digits.parse().expect("digits")));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && is_label_char(chars[i]) {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    env: &'a Enveloping,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn coefficient(&mut self) -> Result<Option<Scalar>> {
        let Some(Tok::Num(p)) = self.peek().cloned() else {
            return Ok(None);
        };
        self.pos += 1;
        if self.eat(&Tok::Slash) {
            let Some(Tok::Num(q)) = self.peek().cloned() else {
                return Err(self.err("expected denominator"));
            };
            self.pos += 1;
            if q == BigInt::from(0) {
                return Err(self.err("zero denominator"));
            }
            return Ok(Some(Scalar::new(p, q)));
        }
        Ok(Some(Scalar::from_integer(p)))
    }

    fn term(&mut self) -> Result<UElement> {
        let coef = self.coefficient()?;
        let had_coef = coef.is_some();
        if had_coef {
            self.eat(&Tok::Star);
        }
        let mut word = Vec::new();
        while let Some(Tok::Ident(label)) = self.peek().cloned() {
            self.pos += 1;
            let idx = self
                .env
                .algebra()
                .index_of(&label)
                .ok_or_else(|| Error::UnknownGenerator(label.clone()))?;
            let mut e = 1u32;
            if self.eat(&Tok::Caret) {
                let Some(Tok::Num(k)) = self.peek().cloned() else {
                    return Err(self.err("expected exponent"));
                };
                self.pos += 1;
                e = k.to_u32().ok_or_else(|| self.err("exponent too large"))?;
            }
            word.extend(std::iter::repeat_n(idx, e as usize));
            if !self.eat(&Tok::Star) {
                continue;
            }
            if !matches!(self.peek(), Some(Tok::Ident(_))) {
                return Err(self.err("expected generator after '*'"));
            }
        }
        if !had_coef && word.is_empty() {
            return Err(self.err("expected a term"));
        }
        Ok(self.env.normalize(&word, coef.unwrap_or_else(Scalar::one)))
    }

    fn signed_term(&mut self) -> Result<UElement> {
        let mut neg = false;
        while self.eat(&Tok::Minus) {
            neg = !neg;
        }
        let t = self.term()?;
        Ok(if neg { t.neg() } else { t })
    }

    fn expr(&mut self) -> Result<UElement> {
        let mut acc = self.signed_term()?;
        loop {
            match self.peek() {
                None => return Ok(acc),
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.signed_term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    let t = self.signed_term()?;
                    acc = acc.add(&t);
                }
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
        }
    }
}

impl Enveloping {
    /// Canonical text: terms `c * x^1y^2` from the highest monomial down,
    /// joined by `" + "`; the constant term is just `c`; zero is `0`.
    pub fn format(&self, u: &UElement) -> String {
        if u.is_zero() {
            return "0".into();
        }
        let labels = self.algebra().labels();
        u.terms()
            .rev()
            .map(|(m, c)| {
                if m.is_one() {
                    return format_scalar(c);
                }
                let mono: String = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, e)| format!("{}^{}", labels[i], e))
                    .collect();
                format!("{} * {}", format_scalar(c), mono)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses the canonical form and looser variants: `xy - z`, `2*y*x`,
    /// `-1/2 * h^2`. Words are normal-ordered in the process.
    pub fn parse(&self, s: &str) -> Result<UElement> {
        let toks = lex(s)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut p = Parser {
            toks,
            pos: 0,
            env: self,
            src: s,
        };
        p.expr()
    }
}
