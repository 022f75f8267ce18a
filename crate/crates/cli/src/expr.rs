//! Element expressions such as `X1^2*X4*q^3 + L*q^-2`.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := 'X' INT ('^' INT)? | 'q' ('^' '-'? INT)? | 'L' | '1'
//! ```
//!
//! `Y`, `Q` and `M` are accepted as spellings of `X`, `q` and `L`.

use std::fmt;

use toric_qh_core::f2ring::{Monomial, QHElement};
use toric_qh_core::qh::QhRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    /// 1-based facet variable with exponent.
    Var { index: usize, exp: u32 },
    Q(i64),
    Fundamental,
    One,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term(pub Vec<Factor>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementExpr(pub Vec<Term>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("ParseError at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("variable X{index} out of range 1..{max}")]
    VariableOutOfRange { index: usize, max: usize },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn int(&mut self) -> Result<u64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match digits.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.error("integer too large")
            }
        }
    }

    fn factor(&mut self) -> Result<Factor, ExprError> {
        match self.peek() {
            Some(b'X' | b'Y') => {
                self.pos += 1;
                let index = self.int()? as usize;
                if index == 0 {
                    return self.error("variables are numbered from 1");
                }
                let exp = if self.eat(b'^') { self.int()? } else { 1 };
                let exp = u32::try_from(exp).or_else(|_| self.error("exponent too large"))?;
                Ok(Factor::Var { index, exp })
            }
            Some(b'q' | b'Q') => {
                self.pos += 1;
                if !self.eat(b'^') {
                    return Ok(Factor::Q(1));
                }
                let negative = self.eat(b'-');
                let e = i64::try_from(self.int()?).or_else(|_| self.error("exponent too large"))?;
                Ok(Factor::Q(if negative { -e } else { e }))
            }
            Some(b'L' | b'M') => {
                self.pos += 1;
                Ok(Factor::Fundamental)
            }
            Some(b'1') => {
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return self.error("only the constant 1 is allowed");
                }
                Ok(Factor::One)
            }
            Some(_) => self.error("expected X<k>, q, L or 1"),
            None => self.error("unexpected end of input"),
        }
    }

    fn term(&mut self) -> Result<Term, ExprError> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(Term(factors))
    }
}

impl ElementExpr {
    pub fn parse(src: &str) -> Result<Self, ExprError> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut terms = vec![p.term()?];
        while p.eat(b'+') {
            terms.push(p.term()?);
        }
        if p.peek().is_some() {
            return p.error("unexpected trailing input");
        }
        Ok(ElementExpr(terms))
    }

    /// Sum of the terms, each reduced to the standard basis of `ring`.
    pub fn evaluate(&self, ring: &QhRing) -> Result<QHElement, ExprError> {
        let d = ring.num_facets();
        let mut out = QHElement::zero();
        for Term(factors) in &self.0 {
            let mut exps = vec![0u32; d];
            let mut e = 0i64;
            for f in factors {
                match *f {
                    Factor::Var { index, exp } => {
                        if index > d {
                            return Err(ExprError::VariableOutOfRange { index, max: d });
                        }
                        exps[index - 1] += exp;
                    }
                    Factor::Q(k) => e += k,
                    Factor::Fundamental | Factor::One => {}
                }
            }
            out.add_assign(&ring.quotient().reduce_term(&Monomial::new(exps, 0), e));
        }
        Ok(out)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Var { index, exp: 1 } => write!(f, "X{index}"),
            Factor::Var { index, exp } => write!(f, "X{index}^{exp}"),
            Factor::Q(1) => write!(f, "q"),
            Factor::Q(e) => write!(f, "q^{e}"),
            Factor::Fundamental => write!(f, "L"),
            Factor::One => write!(f, "1"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ElementExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let e = ElementExpr::parse(" X1^2 * X4*q^3+L*q^-2 ").unwrap();
        assert_eq!(e.to_string(), "X1^2*X4*q^3 + L*q^-2");
        assert_eq!(ElementExpr::parse("Y4*Q").unwrap().to_string(), "X4*q");
    }

    #[test]
    fn reports_columns() {
        assert_eq!(
            ElementExpr::parse("X1 + Z"),
            Err(ExprError::Parse {
                column: 6,
                message: "expected X<k>, q, L or 1".into()
            })
        );
        assert!(ElementExpr::parse("X0").is_err());
        assert!(ElementExpr::parse("X1 +").is_err());
        assert!(ElementExpr::parse("12").is_err());
        assert!(ElementExpr::parse("q^-").is_err());
        assert!(ElementExpr::parse("").is_err());
    }
}
