//! Recursive-descent parser for propositions, assertions and complex
//! literals.
//!
//! Precedence, loosest first: `->` (right associative), then the
//! conjunction level `&`, `*` and `[..]&` (left associative), then prefix
//! `~`, then atoms, `P(..)` and parenthesised formulas.

use super::ast::{is_identifier, Assertion, Proposition};
use super::complex::ComplexNumber;
use crate::error::{Error, Result};

pub fn parse_proposition(text: &str) -> Result<Proposition> {
    let mut cur = Cursor::new(text);
    let p = cur.proposition()?;
    cur.expect_end()?;
    Ok(p)
}

/// Parses `|- prop` or `|-[degree] prop`.
pub fn parse_assertion(text: &str) -> Result<Assertion> {
    let mut cur = Cursor::new(text);
    let a = cur.assertion()?;
    cur.expect_end()?;
    Ok(a)
}

/// Parses a standalone complex literal such as `0.6`, `0.8i` or `0.9-0.1i`.
pub fn parse_complex(text: &str) -> Result<ComplexNumber> {
    let mut cur = Cursor::new(text);
    let c = cur.complex()?;
    cur.expect_end()?;
    Ok(c)
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek_byte(&self) -> Option<u8> {
        self.rest().bytes().next()
    }

    pub(crate) fn error(&self, expected: &[&'static str]) -> Error {
        Error::syntax(self.pos, expected)
    }

    /// Skips whitespace, then consumes `tok` if it is next.
    pub(crate) fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &'static str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(&[tok]))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub(crate) fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }

    /// Consumes `word` only when it stands as a whole word.
    pub(crate) fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        let rest = self.rest();
        let boundary = rest[word.len().min(rest.len())..]
            .bytes()
            .next()
            .is_none_or(|b| !(b.is_ascii_alphanumeric() || b == b'_'));
        if rest.starts_with(word) && boundary {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn scan_identifier(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
            .count();
        if len == 0 || rest.as_bytes()[0].is_ascii_digit() {
            return None;
        }
        Some(&rest[..len])
    }

    pub(crate) fn assertion(&mut self) -> Result<Assertion> {
        self.expect("|-")?;
        if self.eat("[") {
            let degree = self.complex()?;
            self.expect("]")?;
            let subject = self.proposition()?;
            Assertion::graded(degree, subject)
        } else {
            Ok(Assertion::classical(self.proposition()?))
        }
    }

    pub(crate) fn proposition(&mut self) -> Result<Proposition> {
        let left = self.conjunction()?;
        if self.eat("->") {
            let right = self.proposition()?;
            return Proposition::luka_implies(left, right);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Proposition> {
        let mut left = self.unary()?;
        loop {
            if self.eat("&") {
                let right = self.unary()?;
                left = Proposition::and(left, right);
            } else if self.eat("*") {
                let right = self.unary()?;
                left = Proposition::luka_strong_and(left, right)?;
            } else if self.eat("[") {
                left = self.superposition_tail(left)?;
            } else {
                return Ok(left);
            }
        }
    }

    /// After `first [`: the degree list, `]&`, and the remaining operands.
    fn superposition_tail(&mut self, first: Proposition) -> Result<Proposition> {
        let mut degrees = vec![self.complex()?];
        while self.eat(",") {
            degrees.push(self.complex()?);
        }
        if degrees.len() < 2 {
            return Err(self.error(&["','"]));
        }
        self.expect("]")?;
        self.expect("&")?;
        let mut operands = vec![first, self.unary()?];
        while operands.len() < degrees.len() {
            self.expect(",")?;
            operands.push(self.unary()?);
        }
        Proposition::superposition(degrees.into_iter().zip(operands).collect())
    }

    fn unary(&mut self) -> Result<Proposition> {
        if self.eat("~") {
            let inner = self.unary()?;
            return Proposition::luka_neg(inner);
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Proposition> {
        if self.eat("(") {
            let p = self.proposition()?;
            self.expect(")")?;
            return Ok(p);
        }
        match self.scan_identifier() {
            Some("P") if self.src[self.pos + 1..].trim_start().starts_with('(') => {
                self.pos += 1;
                self.expect("(")?;
                let inner = self.proposition()?;
                self.expect(")")?;
                Proposition::probably(inner)
            }
            Some(name) if is_identifier(name) => {
                self.pos += name.len();
                Ok(Proposition::Atom(name.to_string()))
            }
            _ => Err(self.error(&["proposition"])),
        }
    }

    /// `real`, `real i`, or `real (+|-) real i`, each real optionally signed.
    pub(crate) fn complex(&mut self) -> Result<ComplexNumber> {
        self.skip_ws();
        let first = self.signed_real()?;
        if self.eat_imaginary_unit() {
            return ComplexNumber::new(0.0, first).map_err(|_| self.error(&["finite real"]));
        }
        let save = self.pos;
        self.skip_ws();
        let sign = match self.peek_byte() {
            Some(b'+') => 1.0,
            Some(b'-') if !self.rest().starts_with("->") => -1.0,
            _ => {
                self.pos = save;
                return ComplexNumber::new(first, 0.0).map_err(|_| self.error(&["finite real"]));
            }
        };
        self.pos += 1;
        self.skip_ws();
        let im = self.unsigned_real()?;
        if !self.eat_imaginary_unit() {
            return Err(self.error(&["'i'"]));
        }
        ComplexNumber::new(first, sign * im).map_err(|_| self.error(&["finite real"]))
    }

    fn eat_imaginary_unit(&mut self) -> bool {
        let rest = self.rest().as_bytes();
        let is_unit = rest.first() == Some(&b'i')
            && rest
                .get(1)
                .is_none_or(|b| !(b.is_ascii_alphanumeric() || *b == b'_'));
        if is_unit {
            self.pos += 1;
        }
        is_unit
    }

    fn signed_real(&mut self) -> Result<f64> {
        let negative = match self.peek_byte() {
            Some(b'-') => true,
            Some(b'+') => false,
            _ => return self.unsigned_real(),
        };
        self.pos += 1;
        self.skip_ws();
        let x = self.unsigned_real()?;
        Ok(if negative { -x } else { x })
    }

    fn unsigned_real(&mut self) -> Result<f64> {
        let start = self.pos;
        let bytes = self.rest().as_bytes();
        let digits = |from: usize| {
            bytes[from..]
                .iter()
                .take_while(|b| b.is_ascii_digit())
                .count()
        };
        let mut len = digits(0);
        let mut mantissa_digits = len;
        if bytes.get(len) == Some(&b'.') {
            let frac = digits(len + 1);
            mantissa_digits += frac;
            len += 1 + frac;
        }
        if mantissa_digits == 0 {
            return Err(self.error(&["real number"]));
        }
        if matches!(bytes.get(len), Some(b'e' | b'E')) {
            let mut exp_at = len + 1;
            if matches!(bytes.get(exp_at), Some(b'+' | b'-')) {
                exp_at += 1;
            }
            let exp_digits = digits(exp_at);
            if exp_digits > 0 {
                len = exp_at + exp_digits;
            }
        }
        let text = &self.src[start..start + len];
        let value: f64 = text.parse().map_err(|_| self.error(&["real number"]))?;
        if !value.is_finite() {
            return Err(self.error(&["finite real"]));
        }
        self.pos += len;
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(n: &str) -> Proposition {
        Proposition::atom(n).unwrap()
    }

    fn c(re: f64, im: f64) -> ComplexNumber {
        ComplexNumber::new(re, im).unwrap()
    }

    #[test]
    fn classical_and() {
        assert_eq!(
            parse_proposition("A & B").unwrap(),
            Proposition::and(atom("A"), atom("B"))
        );
    }

    #[test]
    fn binary_superposition() {
        let p = parse_proposition("p0 [0.6+0i, 0+0.8i]& p1").unwrap();
        assert_eq!(
            p,
            Proposition::QuantumSuperposition(vec![
                (c(0.6, 0.0), atom("p0")),
                (c(0.0, 0.8), atom("p1"))
            ])
        );
        assert_eq!(p.to_string(), "p0 [0.6, 0.8i]& p1");
    }

    #[test]
    fn nary_superposition() {
        let p = parse_proposition("a [0.6, 0.0, 0.8i]& b, c").unwrap();
        match &p {
            Proposition::QuantumSuperposition(parts) => assert_eq!(parts.len(), 3),
            _ => panic!("expected superposition"),
        }
        assert_eq!(p.to_string(), "a [0.6, 0, 0.8i]& b, c");
    }

    #[test]
    fn single_part_superposition_rejected() {
        let err = parse_proposition("p0 [1]& p1").unwrap_err();
        assert!(matches!(err, Error::Syntax { offset: 5, .. }), "{err:?}");
    }

    #[test]
    fn probably_atom() {
        assert_eq!(
            parse_proposition("P(snow_is_white)").unwrap(),
            Proposition::probably(atom("snow_is_white")).unwrap()
        );
        assert_eq!(
            parse_proposition("P & Q").unwrap(),
            Proposition::and(atom("P"), atom("Q"))
        );
    }

    #[test]
    fn lukasiewicz_precedence() {
        let p = parse_proposition("~P(a) * P(b) -> P(a) -> P(b)").unwrap();
        assert_eq!(p.to_string(), "(~P(a) * P(b)) -> (P(a) -> P(b))");
        assert!(matches!(parse_proposition("~a"), Err(Error::IllFormed(_))));
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(
            parse_proposition("(A&B)&C").unwrap().to_string(),
            "(A & B) & C"
        );
        assert_eq!(
            parse_proposition(" p0[ 0.6 , 0.8i ] &p1 ")
                .unwrap()
                .to_string(),
            "p0 [0.6, 0.8i]& p1"
        );
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("0.6").unwrap(), c(0.6, 0.0));
        assert_eq!(parse_complex("0.8i").unwrap(), c(0.0, 0.8));
        assert_eq!(parse_complex("-0.8i").unwrap(), c(0.0, -0.8));
        assert_eq!(parse_complex("0.9+0.1i").unwrap(), c(0.9, 0.1));
        assert_eq!(parse_complex("0.9 - 0.1i").unwrap(), c(0.9, -0.1));
        assert_eq!(parse_complex(".5e-1").unwrap(), c(0.05, 0.0));
        assert!(parse_complex("1e999").is_err());
        assert!(parse_complex("0.6+0.8").is_err());
        assert!(parse_complex("i").is_err());
    }

    #[test]
    fn assertions() {
        let a = parse_assertion("|- A").unwrap();
        assert!(a.is_classical());
        assert_eq!(a.degree(), ComplexNumber::ONE);
        let g = parse_assertion("|-[0.6+0i] p0").unwrap();
        assert!(!g.is_classical());
        assert_eq!(g.degree(), c(0.6, 0.0));
        assert!(matches!(
            parse_assertion("|-[2+0i] p0"),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn malformed_degree_reports_offset() {
        match parse_assertion("|-[0.6+x] p0") {
            Err(Error::Syntax { offset, expected }) => {
                assert_eq!(offset, 7);
                assert_eq!(expected, vec!["real number"]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn reserved_words_end_a_proposition() {
        let mut cur = Cursor::new("A & B and C");
        let p = cur.proposition().unwrap();
        assert_eq!(p.to_string(), "A & B");
        assert!(cur.eat_word("and"));
        assert!(parse_proposition("and").is_err());
    }
}
