//! Expression syntax for Chow classes.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)*
//! atom   := 'z' | 'a' | 'E' DIGITS | INT | '(' expr ')'
//! ```
//!
//! Positions in errors are byte offsets into the input.

use num_bigint::BigInt;

use super::{ChowClass, ChowError, ChowRing};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Zeta,
    Alpha,
    Exc(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn syntax(pos: usize, message: impl Into<String>) -> ChowError {
    ChowError::Syntax {
        pos,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ChowError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_from = |start: usize| {
        let mut end = start;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        end
    };
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'z' => Tok::Zeta,
            b'a' => Tok::Alpha,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'E' => {
                let end = digits_from(i + 1);
                if end == i + 1 {
                    return Err(syntax(i, "expected digits after 'E'"));
                }
                out.push((i, Tok::Exc(text[i + 1..end].to_string())));
                i = end;
                continue;
            }
            b'0'..=b'9' => {
                let end = digits_from(i);
                out.push((i, Tok::Int(text[i..end].to_string())));
                i = end;
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("unexpected character {ch:?}")));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'r> {
    ring: &'r ChowRing,
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if t.1 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<ChowClass, ChowError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.ring.add(&acc, &rhs)?;
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.ring.sub(&acc, &rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ChowClass, ChowError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.unary()?;
            acc = self.ring.mul(&acc, &rhs)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ChowClass, ChowError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let inner = self.unary()?;
            return Ok(self.ring.neg(&inner));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ChowClass, ChowError> {
        let mut base = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let (pos, tok) = self.bump();
            let Tok::Int(digits) = tok else {
                return Err(syntax(pos, "expected an integer exponent after '^'"));
            };
            let e: u64 = digits
                .parse()
                .map_err(|_| syntax(pos, "exponent does not fit in 64 bits"))?;
            base = self.ring.pow(&base, e)?;
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ChowClass, ChowError> {
        let (pos, tok) = self.bump();
        match tok {
            Tok::Zeta => Ok(self.ring.zeta()),
            Tok::Alpha => Ok(self.ring.alpha()),
            Tok::Exc(digits) => {
                let n = self.ring.n();
                let k = digits
                    .parse::<u32>()
                    .ok()
                    .filter(|&k| k <= n)
                    .ok_or_else(|| {
                        syntax(
                            pos,
                            format!("E{digits} is out of range; n = {n} allows E0..E{n}"),
                        )
                    })?;
                self.ring.exc(k)
            }
            Tok::Int(digits) => {
                let v: BigInt = digits
                    .parse()
                    .map_err(|_| syntax(pos, "bad integer literal"))?;
                Ok(self.ring.integer(v))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let (p, close) = self.bump();
                if close != Tok::RParen {
                    return Err(syntax(p, "expected ')'"));
                }
                Ok(inner)
            }
            Tok::End => Err(syntax(pos, "unexpected end of input")),
            other => Err(syntax(pos, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Caret => "'^'",
        Tok::RParen => "')'",
        Tok::LParen => "'('",
        _ => "token",
    }
}

/// Parses and evaluates `text` in `ring`, returning the normal form.
pub fn parse_expression(ring: &ChowRing, text: &str) -> Result<ChowClass, ChowError> {
    let toks = tokenize(text)?;
    let mut p = Parser { ring, toks, at: 0 };
    let value = p.expr()?;
    if *p.peek() != Tok::End {
        let pos = p.pos();
        return Err(syntax(pos, "unexpected trailing input"));
    }
    Ok(value)
}
