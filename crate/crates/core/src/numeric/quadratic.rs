use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rational::{fmt_coefficient, int};
use super::{FieldElement, NumericError, Rational};

/// `a + b*sqrt(d)` with `d` squarefree and `d != 0, 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticElement {
    a: Rational,
    b: Rational,
    d: i64,
}

/// Splits `d` as `s^2 * core` with `core` squarefree and `s > 0`.
fn squarefree_split(d: i64) -> (i64, i64) {
    let sign = d.signum();
    let mut rest = d.unsigned_abs();
    let mut square_root = 1i64;
    let mut core = 1i64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        square_root *= (p as i64).pow(e / 2);
        if e % 2 == 1 {
            core *= p as i64;
        }
        p += 1;
    }
    core *= rest as i64;
    (square_root, sign * core)
}

/// Canonical form of `a + b*sqrt(d)`: square factors of `d` move into `b`.
///
/// Fails when `d = 0` or when the squarefree part of `d` is `1`, since then
/// no quadratic field is described.
pub fn qf_reduce(a: Rational, b: Rational, d: i64) -> Result<QuadraticElement, NumericError> {
    if d == 0 {
        return Err(NumericError::MalformedField(d));
    }
    let (s, core) = squarefree_split(d);
    if core == 1 {
        return Err(NumericError::MalformedField(d));
    }
    Ok(QuadraticElement {
        a,
        b: b * Rational::from_integer(BigInt::from(s)),
        d: core,
    })
}

impl QuadraticElement {
    /// `sqrt(d)` in canonical form, e.g. `sqrt(8) = 2*sqrt(2)`.
    pub fn sqrt(d: i64) -> Result<Self, NumericError> {
        qf_reduce(int(0), int(1), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    /// `a^2 - d b^2`
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * int(self.d)
    }

    pub fn conjugate(&self) -> Self {
        QuadraticElement {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.d, other.d,
            "mixed quadratic fields sqrt({}) and sqrt({})",
            self.d, other.d
        );
    }
}

impl FieldElement for QuadraticElement {
    type Domain = i64;

    fn domain(&self) -> i64 {
        self.d
    }

    fn from_rational_in(d: &i64, value: Rational) -> Self {
        QuadraticElement {
            a: value,
            b: int(0),
            d: *d,
        }
    }

    fn vanishes(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        QuadraticElement {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d,
        }
    }

    fn times(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        QuadraticElement {
            a: &self.a * &other.a + &self.b * &other.b * int(self.d),
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d,
        }
    }

    fn negated(&self) -> Self {
        QuadraticElement {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }

    fn inverse(&self) -> Option<Self> {
        // d is not a square, so the norm vanishes only at zero
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QuadraticElement {
            a: &self.a / &n,
            b: -&self.b / &n,
            d: self.d,
        })
    }

    fn to_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }
}

impl fmt::Display for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_coefficient(&self.a));
        }
        let radical = format!("sqrt({})", self.d);
        let b_abs = self.b.abs();
        let b_term = if b_abs == int(1) {
            radical
        } else {
            format!("{}*{}", fmt_coefficient(&b_abs), radical)
        };
        let sign = if self.b.is_negative() { "-" } else { "+" };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{b_term}")
            } else {
                write!(f, "{b_term}")
            }
        } else {
            write!(f, "{}{}{}", fmt_coefficient(&self.a), sign, b_term)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<'a> $tr<&'a QuadraticElement> for &'a QuadraticElement {
            type Output = QuadraticElement;
            fn $method(self, rhs: &'a QuadraticElement) -> QuadraticElement {
                self.$inner(rhs)
            }
        }
        impl $tr for QuadraticElement {
            type Output = QuadraticElement;
            fn $method(self, rhs: QuadraticElement) -> QuadraticElement {
                (&self).$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

impl Neg for QuadraticElement {
    type Output = QuadraticElement;
    fn neg(self) -> QuadraticElement {
        self.negated()
    }
}
