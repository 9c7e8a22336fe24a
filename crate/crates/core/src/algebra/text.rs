//! Text form of polynomials: `1 + X*Y^-2 + 2*X^3`.
//!
//! Terms are separated by `+` or `-`; a term is an optional integer
//! coefficient followed by powers of `X` and `Y`, optionally joined by `*`.
//! Whitespace is ignored. Printing uses canonical term order and prints the
//! zero polynomial as `0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::LaurentPoly;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::Point;

impl LaurentPoly {
    pub fn parse(ring: Ring, text: &str) -> Result<LaurentPoly> {
        Parser::new(text).polynomial(ring)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or_else(|| self.chars.last().map_or(0, |&(i, c)| i + c.len_utf8()))
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn polynomial(&mut self, ring: Ring) -> Result<LaurentPoly> {
        if self.chars.is_empty() {
            return self.error("empty polynomial");
        }
        let mut terms: Vec<(Point, BigInt)> = Vec::new();
        let mut first = true;
        while self.peek().is_some() {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') {
                false
            } else if first {
                false
            } else {
                return self.error("expected '+' or '-'");
            };
            first = false;
            let (e, c) = self.term()?;
            terms.push((e, if negative { -c } else { c }));
        }
        Ok(LaurentPoly::from_terms(ring, terms))
    }

    fn term(&mut self) -> Result<(Point, BigInt)> {
        let coeff = self.digits().map(|d| d.parse::<BigInt>().expect("ascii digits"));
        let mut e: Point = (0, 0);
        let mut vars = 0;
        loop {
            let save = self.pos;
            let starred = self.eat('*');
            let var = match self.peek() {
                Some('X') => 0,
                Some('Y') => 1,
                _ => {
                    if starred {
                        return self.error("expected X or Y after '*'");
                    }
                    self.pos = save;
                    break;
                }
            };
            self.pos += 1;
            let k = if self.eat('^') {
                let neg = self.eat('-');
                match self.digits() {
                    Some(d) => {
                        let k: i64 = match d.parse() {
                            Ok(k) => k,
                            Err(_) => return self.error("exponent out of range"),
                        };
                        if neg {
                            -k
                        } else {
                            k
                        }
                    }
                    None => return self.error("expected an exponent after '^'"),
                }
            } else {
                1
            };
            if var == 0 {
                e.0 += k;
            } else {
                e.1 += k;
            }
            vars += 1;
        }
        if coeff.is_none() && vars == 0 {
            return self.error("expected a coefficient or a variable");
        }
        Ok((e, coeff.unwrap_or_else(BigInt::one)))
    }
}

fn write_power(out: &mut String, var: char, k: i64) {
    if k == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push(var);
    if k != 1 {
        out.push('^');
        out.push_str(&k.to_string());
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, ((i, j), c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut body = String::new();
            write_power(&mut body, 'X', i);
            write_power(&mut body, 'Y', j);
            if body.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "{mag}*{body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ring(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ring: Ring, s: &str) -> LaurentPoly {
        LaurentPoly::parse(ring, s).unwrap()
    }

    #[test]
    fn parses_grammar_sample() {
        let f = p(Ring::Z, "1 + X*Y^-2 + 2*X^3");
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.coeff((1, -2)), BigInt::from(1));
        assert_eq!(f.coeff((3, 0)), BigInt::from(2));
        assert_eq!(f.to_string(), "1 + X*Y^-2 + 2*X^3");
    }

    #[test]
    fn signs_and_implicit_products() {
        let f = p(Ring::Z, "-X - 3Y + X Y^2 - 4");
        assert_eq!(f.to_string(), "-4 - 3*Y - X + X*Y^2");
        let g = p(Ring::F3, "-X");
        assert_eq!(g.to_string(), "2*X");
        assert_eq!(p(Ring::F2, "X + X").to_string(), "0");
        assert_eq!(p(Ring::Z, "Y*X^2").to_string(), "X^2*Y");
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        assert_eq!(p(Ring::F2, "X*Y + Y + X + 1").to_string(), "1 + Y + X + X*Y");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "X^", "X*", "+", "Z", "X^-", "1 +"] {
            assert!(LaurentPoly::parse(Ring::Z, bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn print_parse_round_trip() {
        for s in ["0", "X^-1*Y^-1", "7 - X^2*Y + 12*Y^5"] {
            let f = p(Ring::Z, s);
            assert_eq!(p(Ring::Z, &f.to_string()), f);
        }
    }
}
