//! Exact scalar and polynomial literals.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' ['-'] integer)?
//! atom  := integer | ident | '(' expr ')' | 'sqrt' ['-'] integer
//!        | 'sqrt' '(' ['-'] integer ')' | 'zeta' integer
//! ```

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use cymcm_core::numeric::{
    CyclotomicResidue, FieldElement, MultivariatePolynomial, NumericError, QuadraticElement,
    Rational, Scalar,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at column {}: {message}", .position + 1)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("`{0}` is not allowed in a polynomial")]
    NotPolynomial(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Integer(Rational),
    Variable(String),
    Sqrt(i64),
    Zeta(u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Integer(n) => write!(f, "{n}"),
            Expr::Variable(v) => write!(f, "{v}"),
            Expr::Sqrt(d) => write!(f, "sqrt({d})"),
            Expr::Zeta(n) => write!(f, "zeta {n}"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, k) => write!(f, "({a})^{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Ident(String),
    Sym(char),
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            out.push((pos, Token::Number(s)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = chars
                .peek()
                .filter(|(_, d)| d.is_ascii_alphanumeric() || *d == '_')
            {
                s.push(d);
                chars.next();
            }
            out.push((pos, Token::Ident(s)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Token::Sym(c)));
            chars.next();
        } else {
            return Err(ParseError {
                position: pos,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    index: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.index).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.position(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.index += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.signed_integer()?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        match self.peek().cloned() {
            Some(Token::Number(s)) => match s.parse() {
                Ok(n) => {
                    self.index += 1;
                    Ok(n)
                }
                Err(_) => self.error("integer out of range"),
            },
            _ => self.error("expected an integer"),
        }
    }

    fn signed_integer(&mut self) -> Result<i64, ParseError> {
        if self.eat('(') {
            let k = self.signed_integer()?;
            if !self.eat(')') {
                return self.error("expected `)`");
            }
            return Ok(k);
        }
        let negative = self.eat('-');
        let k = self.integer()?;
        Ok(if negative { -k } else { k })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Token::Number(s)) => {
                self.index += 1;
                Ok(Expr::Integer(Rational::from_str(&s).expect("digits")))
            }
            Some(Token::Sym('(')) => {
                self.index += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected `)`");
                }
                Ok(e)
            }
            Some(Token::Ident(name)) => {
                self.index += 1;
                match name.as_str() {
                    "sqrt" => Ok(Expr::Sqrt(self.signed_integer()?)),
                    "zeta" => {
                        let at = self.position();
                        let n = self.integer()?;
                        match u32::try_from(n) {
                            Ok(n) if n > 0 => Ok(Expr::Zeta(n)),
                            _ => Err(ParseError {
                                position: at,
                                message: "root of unity order must be positive".into(),
                            }),
                        }
                    }
                    _ => Ok(Expr::Variable(name)),
                }
            }
            Some(Token::Sym(c)) => self.error(format!("unexpected `{c}`")),
            None => self.error("unexpected end of input"),
        }
    }
}

pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        tokens,
        index: 0,
        end: input.len(),
    };
    let e = p.expr()?;
    if p.index < p.tokens.len() {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

impl Expr {
    /// Evaluates to an exact scalar. Mixed quadratic and cyclotomic values
    /// are rejected, as are variables.
    pub fn to_scalar(&self) -> Result<Scalar, EvalError> {
        Ok(match self {
            Expr::Integer(n) => Scalar::Rational(n.clone()),
            Expr::Variable(v) => return Err(EvalError::UnknownVariable(v.clone())),
            Expr::Sqrt(d) => match QuadraticElement::sqrt(*d) {
                Ok(q) => Scalar::Quadratic(q),
                Err(NumericError::MalformedField(_)) if *d > 0 && d.isqrt().pow(2) == *d => {
                    Scalar::from_int(d.isqrt())
                }
                Err(e) => return Err(e.into()),
            },
            Expr::Zeta(n) => Scalar::Cyclotomic(CyclotomicResidue::zeta(*n)?),
            Expr::Neg(a) => a.to_scalar()?.neg(),
            Expr::Add(a, b) => a.to_scalar()?.try_add(&b.to_scalar()?)?,
            Expr::Sub(a, b) => a.to_scalar()?.try_sub(&b.to_scalar()?)?,
            Expr::Mul(a, b) => a.to_scalar()?.try_mul(&b.to_scalar()?)?,
            Expr::Div(a, b) => a
                .to_scalar()?
                .try_div(&b.to_scalar()?)
                .map_err(|e| match e {
                    NumericError::DivisionByZero => EvalError::DivisionByZero,
                    e => e.into(),
                })?,
            Expr::Pow(a, k) => {
                let base = a.to_scalar()?;
                let base = if *k < 0 {
                    base.inverse().map_err(|_| EvalError::DivisionByZero)?
                } else {
                    base
                };
                base.pow(k.unsigned_abs() as u32)
            }
        })
    }

    /// Evaluates to a polynomial over `Q(zeta_order)` in the given variables.
    pub fn to_polynomial(
        &self,
        variables: &[&str],
        order: u32,
    ) -> Result<MultivariatePolynomial<CyclotomicResidue>, EvalError> {
        let gens: HashMap<&str, _> = variables
            .iter()
            .copied()
            .zip(MultivariatePolynomial::generators(variables, order))
            .collect();
        self.poly(&gens, &MultivariatePolynomial::zero(variables, order))
    }

    fn poly(
        &self,
        gens: &HashMap<&str, MultivariatePolynomial<CyclotomicResidue>>,
        zero: &MultivariatePolynomial<CyclotomicResidue>,
    ) -> Result<MultivariatePolynomial<CyclotomicResidue>, EvalError> {
        let order = *zero.domain();
        Ok(match self {
            Expr::Integer(n) => {
                zero.constant_in_ring(CyclotomicResidue::from_rational_in(&order, n.clone()))
            }
            Expr::Variable(v) => gens
                .get(v.as_str())
                .cloned()
                .ok_or_else(|| EvalError::UnknownVariable(v.clone()))?,
            Expr::Sqrt(_) => return Err(EvalError::NotPolynomial(self.to_string())),
            Expr::Zeta(n) => {
                if !order.is_multiple_of(*n) {
                    return Err(EvalError::Numeric(NumericError::DomainMismatch {
                        left: format!("Q(zeta_{order})"),
                        right: format!("Q(zeta_{n})"),
                    }));
                }
                let k = (order / n) as i64;
                zero.constant_in_ring(CyclotomicResidue::zeta_pow(order, k)?)
            }
            Expr::Neg(a) => a
                .poly(gens, zero)?
                .scale(&CyclotomicResidue::from_int_in(&order, -1)),
            Expr::Add(a, b) => a.poly(gens, zero)? + b.poly(gens, zero)?,
            Expr::Sub(a, b) => a.poly(gens, zero)? - b.poly(gens, zero)?,
            Expr::Mul(a, b) => a.poly(gens, zero)? * b.poly(gens, zero)?,
            Expr::Div(a, b) => {
                let d = b.poly(gens, zero)?;
                if d.total_degree() > 0 {
                    return Err(EvalError::NotPolynomial(self.to_string()));
                }
                let c = d
                    .coefficient(&vec![0; gens.len()])
                    .and_then(|c| c.inverse())
                    .ok_or(EvalError::DivisionByZero)?;
                a.poly(gens, zero)?.scale(&c)
            }
            Expr::Pow(a, k) => {
                if *k < 0 {
                    return Err(EvalError::NotPolynomial(self.to_string()));
                }
                a.poly(gens, zero)?.pow(*k as u32)
            }
        })
    }
}

pub fn parse_scalar(input: &str) -> Result<Scalar, EvalError> {
    parse_expr(input)?.to_scalar()
}

#[cfg(test)]
mod tests {
    use super::*;
    use cymcm_core::numeric::{int, ratio};

    #[test]
    fn rationals() {
        assert_eq!(parse_scalar("3/6").unwrap(), Scalar::Rational(ratio(1, 2)));
        assert_eq!(parse_scalar("-2^3 + 1").unwrap(), Scalar::from_int(-7));
        assert_eq!(parse_scalar("2^-2").unwrap(), Scalar::Rational(ratio(1, 4)));
        assert_eq!(
            parse_scalar("(1 - 3) * (4 / 2)").unwrap(),
            Scalar::from_int(-4)
        );
        assert_eq!(parse_scalar("1/0"), Err(EvalError::DivisionByZero));
    }

    #[test]
    fn quadratic_literals() {
        let v = parse_scalar("(1 + sqrt 2)^2").unwrap();
        assert_eq!(v.to_string(), "3+2*sqrt(2)");
        let w = parse_scalar("1/4*(3+sqrt(-7))^2").unwrap();
        assert_eq!(w.to_string(), "1/2+3/2*sqrt(-7)");
        assert_eq!(parse_scalar("sqrt 4").unwrap(), Scalar::from_int(2));
        assert!(parse_scalar("sqrt 8").is_ok());
        assert!(parse_scalar("sqrt 0").is_err());
    }

    #[test]
    fn cyclotomic_literals() {
        let z = parse_scalar("zeta 8 ^ 4").unwrap();
        assert_eq!(z.to_rational(), Some(int(-1)));
        let z = parse_scalar("zeta 3^2 + zeta 3 + 1").unwrap();
        assert!(z.is_zero());
        assert!(parse_scalar("zeta 0").is_err());
    }

    #[test]
    fn mixing_fields_is_an_error() {
        assert!(matches!(
            parse_scalar("sqrt 2 + zeta 8"),
            Err(EvalError::Numeric(_))
        ));
        assert!(matches!(
            parse_scalar("x + 1"),
            Err(EvalError::UnknownVariable(_))
        ));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_expr("1 + * 2").unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse_expr("(1 + 2").unwrap_err();
        assert_eq!(e.position, 6);
        let e = parse_expr("2 $ 3").unwrap_err();
        assert_eq!(e.position, 2);
        assert_eq!(e.to_string(), "at column 3: unexpected character `$`");
        assert!(parse_expr("").is_err());
        assert!(parse_expr("1 2").is_err());
    }

    #[test]
    fn polynomials() {
        let vars = ["y2", "y1", "x1", "x0"];
        let p = parse_expr("(y2^3 - y1^3)*y1 + (x1^3 - x0^3)*x0")
            .unwrap()
            .to_polynomial(&vars, 8)
            .unwrap();
        assert_eq!(p, cymcm_core::threefold::quartic_k3(8));
        let q = parse_expr("zeta 4 * x0 / 2")
            .unwrap()
            .to_polynomial(&vars, 8)
            .unwrap();
        assert_eq!(q.num_terms(), 1);
        assert!(parse_expr("zeta 3 * x0")
            .unwrap()
            .to_polynomial(&vars, 8)
            .is_err());
        assert!(parse_expr("x0 / x1")
            .unwrap()
            .to_polynomial(&vars, 8)
            .is_err());
        assert!(parse_expr("w").unwrap().to_polynomial(&vars, 8).is_err());
    }
}
