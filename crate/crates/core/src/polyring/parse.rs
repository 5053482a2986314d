//! Text syntax for polynomials.
//!
//! ```text
//! poly   := ws? sign? term (ws? ('+' | '-') ws? term)*
//! term   := factor ((ws? '*' ws? | ws) factor)*   |  number factor*
//! factor := number ('/' number)?  |  ident ('^' number)?
//! ident  := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! `*` between factors is optional (`3x^2 y` is accepted), `^1` may be
//! omitted, and both `-` and U+2212 are accepted as minus signs. Adjacent
//! letters form a single identifier, so `xy` names one variable.

use num_bigint::BigInt;

use super::{Monomial, PolyRing, Polynomial, Scalar};
use crate::error::ParseError;

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(1, self.column(), message)
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digits"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }
}

fn is_minus(c: char) -> bool {
    c == '-' || c == '\u{2212}'
}

impl PolyRing {
    /// Parses a polynomial; errors report a 1-based column on line 1.
    pub fn parse(&self, text: &str) -> Result<Polynomial, ParseError> {
        let mut cur = Cursor::new(text);
        let mut terms = Vec::new();
        cur.skip_ws();
        if cur.at_end() {
            return Err(cur.error("empty polynomial"));
        }
        let mut negative = false;
        match cur.peek() {
            Some(c) if is_minus(c) => {
                negative = true;
                cur.pos += 1;
            }
            Some('+') => cur.pos += 1,
            _ => {}
        }
        loop {
            cur.skip_ws();
            let (m, mut c) = self.parse_term(&mut cur)?;
            if negative {
                c = self.field().neg(&c);
            }
            terms.push((m, c));
            cur.skip_ws();
            match cur.peek() {
                None => break,
                Some('+') => negative = false,
                Some(c) if is_minus(c) => negative = true,
                Some(c) => return Err(cur.error(format!("unexpected `{c}`"))),
            }
            cur.pos += 1;
        }
        Ok(self.from_terms(terms).expect("parsed monomials have ring arity"))
    }

    fn parse_term(&self, cur: &mut Cursor) -> Result<(Monomial, Scalar), ParseError> {
        let k = self.field();
        let mut coeff = k.one();
        let mut exps = vec![0u32; self.nvars()];
        let mut factors = 0;
        loop {
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = cur.number()?;
                    let den = if cur.peek() == Some('/') {
                        cur.pos += 1;
                        cur.number()?
                    } else {
                        BigInt::from(1)
                    };
                    let value = k
                        .from_ratio(&num, &den)
                        .ok_or_else(|| cur.error("zero denominator"))?;
                    coeff = k.mul(&coeff, &value);
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let col = cur.column();
                    let name = cur.ident();
                    let idx = self
                        .variables()
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| ParseError::new(1, col, format!("unknown variable `{name}`")))?;
                    let e = if cur.peek() == Some('^') {
                        cur.pos += 1;
                        let n = cur.number()?;
                        u32::try_from(n).map_err(|_| cur.error("exponent too large"))?
                    } else {
                        1
                    };
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| cur.error("exponent too large"))?;
                }
                _ if factors == 0 => return Err(cur.error("expected a term")),
                _ => return Err(cur.error("expected a factor after `*`")),
            }
            factors += 1;
            let save = cur.pos;
            cur.skip_ws();
            match cur.peek() {
                Some('*') => {
                    cur.pos += 1;
                    cur.skip_ws();
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '_' => {}
                _ => {
                    cur.pos = save;
                    break;
                }
            }
        }
        Ok((Monomial::from_exponents(&exps), coeff))
    }

    /// Renders a monomial as `x^2*y`; the empty product renders as `1`.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .zip(self.variables())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Inverse of [`PolyRing::parse`]: `x^2*y - 3*z`, `0` for zero.
    pub fn render(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let k = self.field();
        let mut out = String::new();
        for (i, (m, c)) in f.terms().iter().enumerate() {
            let negative = k.is_negative(c);
            let abs = if negative { k.neg(c) } else { c.clone() };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mono = self.render_monomial(m);
            if m.is_one() {
                out.push_str(&k.display(&abs));
            } else if k.is_one(&abs) {
                out.push_str(&mono);
            } else {
                out.push_str(&k.display(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::polyring::{CoefficientField, MonomialOrder, PolyRing};

    fn ring(field: CoefficientField) -> PolyRing {
        PolyRing::new(field, ["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn grammar_variants_agree() {
        let r = ring(CoefficientField::Rationals);
        let a = r.parse("x^2*y - 3*z").unwrap();
        for text in ["x^2 y-3z", "  x*x*y − 3*z ", "-3*z + y*x^2", "x^2*y^1 - 3 z"] {
            assert_eq!(r.parse(text).unwrap(), a, "{text}");
        }
        assert_eq!(r.render(&a), "x^2*y - 3*z");
    }

    #[test]
    fn rational_and_modular_coefficients() {
        let q = ring(CoefficientField::Rationals);
        let f = q.parse("1/2*x + 2/4*x").unwrap();
        assert_eq!(q.render(&f), "x");
        let p = ring(CoefficientField::Prime(7));
        let g = p.parse("1/2*x").unwrap();
        assert_eq!(p.render(&g), "-3*x");
        assert_eq!(p.parse("7*x + 1").unwrap(), p.one());
    }

    #[test]
    fn errors_carry_columns() {
        let r = ring(CoefficientField::Rationals);
        let e = r.parse("x + w").unwrap_err();
        assert_eq!(e.column, 5);
        assert!(e.message.contains("unknown variable `w`"));
        assert!(r.parse("").is_err());
        assert!(r.parse("x +").is_err());
        assert!(r.parse("x ** y").is_err());
        assert!(r.parse("1/0").is_err());
        assert!(r.parse("x $ y").is_err());
    }

    #[test]
    fn zero_and_constants_render() {
        let r = ring(CoefficientField::Rationals);
        assert_eq!(r.render(&r.parse("x - x").unwrap()), "0");
        assert_eq!(r.render(&r.parse("-5").unwrap()), "-5");
        assert_eq!(r.render(&r.parse("-x + 1").unwrap()), "-x + 1");
    }
}
