use num_bigint::BigInt;
use num_traits::Zero;

use super::{AlgebraError, Polynomial, Rational, Ring};

/// Parses sums of products such as `2*a0*a1^2 - (a0 + c)^3 + 7/3*a2`.
///
/// Accepts the canonical serialization as a special case. Division is only
/// allowed by integer literals.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, AlgebraError> {
    let mut parser = Parser {
        ring,
        src: text.as_bytes(),
        pos: 0,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    acc = acc.scale(&Rational::new(1.into(), d));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent must be a small non-negative integer"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.ring, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(AlgebraError::UnknownVariable(name.to_string())),
                }
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_output() {
        let ring = Ring::new(4, &["c"]);
        let p = parse_polynomial(&ring, "a0^2*a3^2 + a1^2*a2^2 + a0*a2^3 + a3*a1^3 + 2*a0*a1*a2*a3")
            .unwrap();
        assert_eq!(p.len(), 5);
        let again = parse_polynomial(&ring, &p.to_string()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn parentheses_powers_and_fractions() {
        let ring = Ring::new(3, &[]);
        let p = parse_polynomial(&ring, "(a0*a2 + a1^2)^2 - 7/3*a1").unwrap();
        let q = parse_polynomial(&ring, "a0^2*a2^2 + 2*a0*a1^2*a2 + a1^4 - 7*a1/3").unwrap();
        assert_eq!(p, q);
        assert!(parse_polynomial(&ring, "a0 + b").is_err());
        assert!(parse_polynomial(&ring, "a0 +").is_err());
    }
}
