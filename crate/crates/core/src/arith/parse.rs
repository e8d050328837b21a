//! Parser for the polynomial text syntax, e.g. `3*x^2*y - 1/2`.
//!
//! Division is only allowed by nonzero constants; the result is a
//! polynomial over the coefficient field.

use num_bigint::BigInt;

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [String],
    k: &'a Field,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in {:?}", self.src))
    }

    fn expr(&mut self) -> Result<Poly> {
        let n = self.vars.len();
        let mut acc = if self.eat('-') {
            self.term()?.neg(self.k)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?, self.k);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?, self.k);
            } else {
                break;
            }
        }
        debug_assert_eq!(acc.nvars(), n);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?, self.k);
            } else if self.eat('/') {
                let d = self.power()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(self.err("division by a non-constant or zero"));
                }
                acc = acc.scale(&self.k.inv(&d.constant_value(self.k)), self.k);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(self.power()?.neg(self.k));
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e, self.k))
                }
                _ => Err(self.err("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let n = self.vars.len();
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Poly::constant(self.k.from_bigint(&v), n, self.k))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Poly::var(i, n, self.k)),
                    None => Err(self.err(&format!("unknown variable {name:?}"))),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing ')'"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

/// Parse a polynomial in the named variables over the coefficient field `k`.
pub fn parse_poly(s: &str, vars: &[String], k: &Field) -> Result<Poly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        vars,
        k,
        src: s,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example_syntax() {
        let k = Field::Rationals;
        let vars = vec!["x".to_string(), "y".to_string()];
        let p = parse_poly("3*x^2*y - 1/2", &vars, &k).unwrap();
        assert_eq!(p.format(&vars, &k), "3*x^2*y-1/2");
        let q = parse_poly("(x+y)^2 - y*(2*x + y)", &vars, &k).unwrap();
        assert_eq!(q.format(&vars, &k), "x^2");
    }

    #[test]
    fn rejects_garbage() {
        let k = Field::Rationals;
        let vars = vec!["x".to_string()];
        assert!(parse_poly("x +", &vars, &k).is_err());
        assert!(parse_poly("z", &vars, &k).is_err());
        assert!(parse_poly("1/x", &vars, &k).is_err());
        assert!(parse_poly("x^-1", &vars, &k).is_err());
    }

    #[test]
    fn reduces_into_prime_field() {
        let k = Field::Prime(3);
        let vars = vec!["t".to_string()];
        let p = parse_poly("4*t + 1/2", &vars, &k).unwrap();
        assert_eq!(p.format(&vars, &k), "t+2");
    }
}
