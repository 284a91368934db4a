//! The Lie expression language.
//!
//! ```text
//! expr      := term (('+'|'-') term)*
//! term      := (rational '*')? factor | '0'
//! factor    := generator | '[' expr ',' expr ']' | '(' expr ')'
//!            | 'bch' '(' expr ',' expr ')' | 'inv' '(' expr ')'
//! rational  := ('-')? digits ('/' digits)?
//! generator := letter (letter|digit|'_')*
//! ```
//!
//! Whitespace is insignificant. `bch` and `inv` are the group product and
//! inverse of the BCH group; they are recognized only when followed by `(`.
//! A lone `0` denotes the zero element so that printed output parses back.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::bch::{bch_inverse, bch_product};
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    /// `position` is a 0-based character offset.
    #[error("syntax error at column {}: {message}", position + 1)]
    Syntax { position: usize, message: String },
    #[error("unknown generator '{name}' at column {}", position + 1)]
    UnknownGenerator { name: String, position: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Zero,
    Generator { name: String, position: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Scale(Rational, Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
    Bch(Box<Expr>, Box<Expr>),
    Inv(Box<Expr>),
}

impl Expr {
    /// True when the expression uses no bracket, `bch` or `inv`.
    pub fn is_linear(&self) -> bool {
        match self {
            Expr::Zero | Expr::Generator { .. } => true,
            Expr::Add(a, b) | Expr::Sub(a, b) => a.is_linear() && b.is_linear(),
            Expr::Scale(_, a) => a.is_linear(),
            Expr::Bracket(..) | Expr::Bch(..) | Expr::Inv(..) => false,
        }
    }

    pub fn evaluate<A: LieAlgebra>(&self, alg: &A) -> Result<A::Element, ExprError> {
        Ok(match self {
            Expr::Zero => alg.zero(),
            Expr::Generator { name, position } => {
                alg.generator(name).ok_or_else(|| ExprError::UnknownGenerator {
                    name: name.clone(),
                    position: *position,
                })?
            }
            Expr::Add(a, b) => alg.add(&a.evaluate(alg)?, &b.evaluate(alg)?),
            Expr::Sub(a, b) => alg.sub(&a.evaluate(alg)?, &b.evaluate(alg)?),
            Expr::Scale(c, a) => alg.scale(c, &a.evaluate(alg)?),
            Expr::Bracket(a, b) => alg.bracket(&a.evaluate(alg)?, &b.evaluate(alg)?),
            Expr::Bch(a, b) => bch_product(alg, &a.evaluate(alg)?, &b.evaluate(alg)?),
            Expr::Inv(a) => bch_inverse(alg, &a.evaluate(alg)?),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Zero => f.write_str("0"),
            Expr::Generator { name, .. } => f.write_str(name),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Scale(c, a) => write!(f, "{}*{a}", crate::rational::format_rational(c)),
            Expr::Bracket(a, b) => write!(f, "[{a},{b}]"),
            Expr::Bch(a, b) => write!(f, "bch({a},{b})"),
            Expr::Inv(a) => write!(f, "inv({a})"),
        }
    }
}

/// Parses `text` into an expression tree.
pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(e)
}

/// Parses and evaluates `text` in `alg`.
pub fn parse_in<A: LieAlgebra>(text: &str, alg: &A) -> Result<A::Element, ExprError> {
    parse(text)?.evaluate(alg)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => Err(self.error(format!("expected '{c}', found '{got}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some('-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let starts_number = match self.peek() {
            Some(c) if c.is_ascii_digit() => true,
            Some('-') => self.peek_at(1).is_some_and(|c| c.is_ascii_digit()),
            _ => false,
        };
        if !starts_number {
            return self.factor();
        }
        let start = self.pos;
        let c = self.rational()?;
        if self.peek() == Some('*') {
            self.pos += 1;
            return Ok(Expr::Scale(c, Box::new(self.factor()?)));
        }
        if c.is_zero() {
            return Ok(Expr::Zero);
        }
        Err(ExprError::Syntax {
            position: start,
            message: "a nonzero number must be followed by '*' and a factor".into(),
        })
    }

    fn digits(&mut self) -> Result<BigInt, ExprError> {
        let start = self.pos;
        while self.peek_at(0).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Rational, ExprError> {
        self.skip_ws();
        let negative = self.peek_at(0) == Some('-');
        if negative {
            self.pos += 1;
        }
        let numer = self.digits()?;
        let denom = if self.peek_at(0) == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let d = self.digits()?;
            if d.is_zero() {
                return Err(ExprError::Syntax {
                    position: at,
                    message: "zero denominator".into(),
                });
            }
            d
        } else {
            BigInt::from(1)
        };
        let q = Rational::new(numer, denom);
        Ok(if negative { -q } else { q })
    }

    fn identifier(&mut self) -> String {
        let start = self.pos;
        while self
            .peek_at(0)
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some('(') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(')')?;
                Ok(a)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let position = self.pos;
                let name = self.identifier();
                if self.peek() == Some('(') {
                    match name.as_str() {
                        "bch" => {
                            self.pos += 1;
                            let a = self.expr()?;
                            self.expect(',')?;
                            let b = self.expr()?;
                            self.expect(')')?;
                            return Ok(Expr::Bch(Box::new(a), Box::new(b)));
                        }
                        "inv" => {
                            self.pos += 1;
                            let a = self.expr()?;
                            self.expect(')')?;
                            return Ok(Expr::Inv(Box::new(a)));
                        }
                        _ => {
                            return Err(ExprError::Syntax {
                                position,
                                message: format!("unknown function '{name}'"),
                            })
                        }
                    }
                }
                Ok(Expr::Generator { name, position })
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Abelian, FreeNilpotent};
    use crate::rational::ratio;

    fn free(cap: usize) -> FreeNilpotent {
        FreeNilpotent::new("xy", cap).unwrap()
    }

    fn show(text: &str, alg: &FreeNilpotent) -> String {
        alg.format(&parse_in(text, alg).unwrap())
    }

    #[test]
    fn parses_brackets_and_coefficients() {
        let alg = free(3);
        assert_eq!(show("[x,y]", &alg), "[x,y]");
        assert_eq!(show("x + -1/2*[x,y]", &alg), "x - 1/2*[x,y]");
        assert_eq!(show("[y,x]", &alg), "-1*[x,y]");
        assert_eq!(show("  [ x , [x ,y] ] ", &alg), "[x,[x,y]]");
        assert_eq!(show("2*(x - y) + 0", &alg), "2*x - 2*y");
        assert_eq!(show("0", &alg), "0");
        assert_eq!(show("x - x", &alg), "0");
    }

    #[test]
    fn print_parse_fixed_point() {
        let alg = free(4);
        let once = show("[x,[x,y]]", &alg);
        assert_eq!(show(&once, &alg), once);
        let messy = "3/4*[[x,y],y] - [y,[y,x]] + -2*x + 1/3*[x,[x,[x,y]]]";
        let once = show(messy, &alg);
        assert_eq!(show(&once, &alg), once);
    }

    #[test]
    fn over_cap_brackets_truncate() {
        let alg = free(2);
        assert_eq!(show("[x,[x,y]]", &alg), "0");
        assert_eq!(show("y + [x,[x,y]]", &alg), "y");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let alg = free(3);
        let err = parse_in("x + [x y]", &alg).unwrap_err();
        assert_eq!(
            err,
            ExprError::Syntax {
                position: 7,
                message: "expected ',', found 'y'".into()
            }
        );
        assert!(matches!(parse("x +"), Err(ExprError::Syntax { position: 3, .. })));
        assert!(matches!(parse("x y"), Err(ExprError::Syntax { position: 2, .. })));
        assert!(matches!(parse("1/0*x"), Err(ExprError::Syntax { position: 2, .. })));
        assert!(matches!(parse("3"), Err(ExprError::Syntax { position: 0, .. })));
        assert!(matches!(parse("foo(x)"), Err(ExprError::Syntax { position: 0, .. })));
    }

    #[test]
    fn unknown_generator() {
        let err = parse_in("x + z", &free(2)).unwrap_err();
        assert_eq!(
            err,
            ExprError::UnknownGenerator {
                name: "z".into(),
                position: 4
            }
        );
    }

    #[test]
    fn group_functions() {
        let alg = free(2);
        assert_eq!(show("bch(x, y)", &alg), "x + y + 1/2*[x,y]");
        assert_eq!(show("inv(x - [x,y])", &alg), "-1*x + [x,y]");
        let ab = Abelian::new(2);
        let v = parse_in("bch(e1, 1/2*e2)", &ab).unwrap();
        assert_eq!(ab.format(&v), "e1 + 1/2*e2");
    }

    #[test]
    fn linearity_detection() {
        assert!(parse("x - 1/2*y").unwrap().is_linear());
        assert!(!parse("x + [x,y]").unwrap().is_linear());
        assert!(!parse("inv(x)").unwrap().is_linear());
    }

    #[test]
    fn negative_literal_binds_to_coefficient() {
        let alg = free(2);
        let e = parse_in("x - -1/2*y", &alg).unwrap();
        let expected = alg.add(
            &alg.generator("x").unwrap(),
            &alg.scale(&ratio(1, 2), &alg.generator("y").unwrap()),
        );
        assert_eq!(e, expected);
    }
}
