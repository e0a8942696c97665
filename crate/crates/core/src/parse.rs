//! A small recursive-descent parser for polynomial expressions on the
//! command line: integers, the named variables, `+ - * ^` and parentheses.

use crate::error::{Error, Result};
use crate::poly::{GradedPoly, Var};
use num::BigInt;

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            s: s.as_bytes(),
            pos: 0,
        }
    }
    fn next_tok(&mut self) -> Result<Tok> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.s.len() {
            return Ok(Tok::End);
        }
        let c = self.s[self.pos];
        match c {
            b'+' => {
                self.pos += 1;
                Ok(Tok::Plus)
            }
            b'-' => {
                self.pos += 1;
                Ok(Tok::Minus)
            }
            b'*' => {
                self.pos += 1;
                Ok(Tok::Star)
            }
            b'^' => {
                self.pos += 1;
                Ok(Tok::Caret)
            }
            b'(' => {
                self.pos += 1;
                Ok(Tok::LParen)
            }
            b')' => {
                self.pos += 1;
                Ok(Tok::RParen)
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                Ok(Tok::Num(txt.parse().unwrap()))
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Tok::Ident(
                    std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_string(),
                ))
            }
            other => Err(Error::config(format!(
                "unexpected character '{}' in expression",
                other as char
            ))),
        }
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    cur: Tok,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Result<Self> {
        let mut lex = Lexer::new(s);
        let cur = lex.next_tok()?;
        Ok(Parser { lex, cur })
    }
    fn bump(&mut self) -> Result<()> {
        self.cur = self.lex.next_tok()?;
        Ok(())
    }

    fn expr(&mut self) -> Result<GradedPoly<BigInt>> {
        let mut acc = self.term()?;
        loop {
            match self.cur {
                Tok::Plus => {
                    self.bump()?;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump()?;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GradedPoly<BigInt>> {
        let mut acc = self.factor()?;
        loop {
            match self.cur {
                Tok::Star => {
                    self.bump()?;
                    acc = acc.mul(&self.factor()?);
                }
                // juxtaposition: `2 q2` or `q2 q4`
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<GradedPoly<BigInt>> {
        let mut base = self.atom()?;
        if self.cur == Tok::Caret {
            self.bump()?;
            let mut negated = false;
            if self.cur == Tok::Minus {
                negated = true;
                self.bump()?;
            }
            let e = match &self.cur {
                Tok::Num(n) => n.clone(),
                _ => return Err(Error::config("expected integer exponent after ^")),
            };
            self.bump()?;
            let e: i64 = e.try_into().map_err(|_| Error::config("exponent too large"))?;
            let e = if negated { -e } else { e };
            if e >= 0 {
                base = base.pow(e as u32);
            } else {
                let inv = base
                    .invert_monomial()
                    .ok_or_else(|| Error::config("negative exponent on non-monomial"))?;
                base = inv.pow((-e) as u32);
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<GradedPoly<BigInt>> {
        match self.cur.clone() {
            Tok::Num(n) => {
                self.bump()?;
                Ok(GradedPoly::constant(n))
            }
            Tok::Ident(name) => {
                self.bump()?;
                let v = Var::from_name(&name)
                    .ok_or_else(|| Error::config(format!("unknown variable '{name}'")))?;
                Ok(GradedPoly::var(v))
            }
            Tok::Minus => {
                self.bump()?;
                Ok(self.factor()?.neg())
            }
            Tok::LParen => {
                self.bump()?;
                let e = self.expr()?;
                if self.cur != Tok::RParen {
                    return Err(Error::config("expected ')'"));
                }
                self.bump()?;
                Ok(e)
            }
            t => Err(Error::config(format!("unexpected token {t:?}"))),
        }
    }
}

/// Parse an integer-coefficient polynomial expression.
pub fn parse_poly(s: &str) -> Result<GradedPoly<BigInt>> {
    let mut p = Parser::new(s)?;
    let e = p.expr()?;
    if p.cur != Tok::End {
        return Err(Error::config(format!("trailing input at {:?}", p.cur)));
    }
    Ok(e)
}
