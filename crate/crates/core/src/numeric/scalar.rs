use std::fmt;

use num_traits::Zero;

use super::{CyclotomicResidue, FieldElement, NumericError, QuadraticElement, Rational};

/// A value from any of the supported exact fields, tagged with its field.
///
/// Arithmetic between two scalars embeds a rational operand into the other
/// operand's field and fails on any other combination.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Quadratic(QuadraticElement),
    Cyclotomic(CyclotomicResidue),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarDomain {
    Rational,
    Quadratic(i64),
    Cyclotomic(u32),
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarDomain::Rational => write!(f, "Q"),
            ScalarDomain::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
            ScalarDomain::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
        }
    }
}

/// A list of scalars brought into one concrete field.
#[derive(Debug, Clone, PartialEq)]
pub enum UnifiedScalars {
    Rational(Vec<Rational>),
    Quadratic(Vec<QuadraticElement>),
    Cyclotomic(Vec<CyclotomicResidue>),
}

impl Scalar {
    pub fn domain(&self) -> ScalarDomain {
        match self {
            Scalar::Rational(_) => ScalarDomain::Rational,
            Scalar::Quadratic(x) => ScalarDomain::Quadratic(x.domain()),
            Scalar::Cyclotomic(x) => ScalarDomain::Cyclotomic(x.domain()),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(super::int(n))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Quadratic(x) => x.vanishes(),
            Scalar::Cyclotomic(x) => x.vanishes(),
        }
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(x) => Some(x.clone()),
            Scalar::Quadratic(x) => x.to_rational(),
            Scalar::Cyclotomic(x) => x.to_rational(),
        }
    }

    /// Common field of two domains, if one exists.
    pub fn join(a: ScalarDomain, b: ScalarDomain) -> Result<ScalarDomain, NumericError> {
        match (a, b) {
            (ScalarDomain::Rational, other) | (other, ScalarDomain::Rational) => Ok(other),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(NumericError::DomainMismatch {
                left: x.to_string(),
                right: y.to_string(),
            }),
        }
    }

    /// Embeds the value into `domain`; only rationals move between fields.
    pub fn embed(&self, domain: ScalarDomain) -> Result<Scalar, NumericError> {
        if self.domain() == domain {
            return Ok(self.clone());
        }
        let Scalar::Rational(q) = self else {
            return Err(NumericError::DomainMismatch {
                left: self.domain().to_string(),
                right: domain.to_string(),
            });
        };
        Ok(match domain {
            ScalarDomain::Rational => Scalar::Rational(q.clone()),
            ScalarDomain::Quadratic(d) => {
                Scalar::Quadratic(QuadraticElement::from_rational_in(&d, q.clone()))
            }
            ScalarDomain::Cyclotomic(n) => {
                Scalar::Cyclotomic(CyclotomicResidue::from_rational_in(&n, q.clone()))
            }
        })
    }

    fn binary(
        &self,
        other: &Scalar,
        op: impl Fn(&UnifiedScalars) -> Result<Scalar, NumericError>,
    ) -> Result<Scalar, NumericError> {
        op(&Scalar::unify(&[self.clone(), other.clone()])?)
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, NumericError> {
        self.binary(other, |u| {
            Ok(match u {
                UnifiedScalars::Rational(v) => Scalar::Rational(&v[0] + &v[1]),
                UnifiedScalars::Quadratic(v) => Scalar::Quadratic(v[0].plus(&v[1])),
                UnifiedScalars::Cyclotomic(v) => Scalar::Cyclotomic(v[0].plus(&v[1])),
            })
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, NumericError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, NumericError> {
        self.binary(other, |u| {
            Ok(match u {
                UnifiedScalars::Rational(v) => Scalar::Rational(&v[0] * &v[1]),
                UnifiedScalars::Quadratic(v) => Scalar::Quadratic(v[0].times(&v[1])),
                UnifiedScalars::Cyclotomic(v) => Scalar::Cyclotomic(v[0].times(&v[1])),
            })
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, NumericError> {
        self.try_mul(&other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar, NumericError> {
        match self {
            Scalar::Rational(x) => x.inverse().map(Scalar::Rational),
            Scalar::Quadratic(x) => x.inverse().map(Scalar::Quadratic),
            Scalar::Cyclotomic(x) => x.inverse().map(Scalar::Cyclotomic),
        }
        .ok_or(NumericError::DivisionByZero)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Quadratic(x) => Scalar::Quadratic(x.negated()),
            Scalar::Cyclotomic(x) => Scalar::Cyclotomic(x.negated()),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(FieldElement::pow(x, exp)),
            Scalar::Quadratic(x) => Scalar::Quadratic(x.pow(exp)),
            Scalar::Cyclotomic(x) => Scalar::Cyclotomic(x.pow(exp)),
        }
    }

    /// Exact equality after embedding both values into a common field.
    pub fn same_value(&self, other: &Scalar) -> Result<bool, NumericError> {
        Ok(self.try_sub(other)?.is_zero())
    }

    /// Brings all values into their common field.
    pub fn unify(values: &[Scalar]) -> Result<UnifiedScalars, NumericError> {
        let domain = values.iter().try_fold(ScalarDomain::Rational, |acc, v| {
            Scalar::join(acc, v.domain())
        })?;
        let embedded = values
            .iter()
            .map(|v| v.embed(domain))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(match domain {
            ScalarDomain::Rational => UnifiedScalars::Rational(
                embedded
                    .into_iter()
                    .map(|v| match v {
                        Scalar::Rational(x) => x,
                        _ => unreachable!(),
                    })
                    .collect(),
            ),
            ScalarDomain::Quadratic(_) => UnifiedScalars::Quadratic(
                embedded
                    .into_iter()
                    .map(|v| match v {
                        Scalar::Quadratic(x) => x,
                        _ => unreachable!(),
                    })
                    .collect(),
            ),
            ScalarDomain::Cyclotomic(_) => UnifiedScalars::Cyclotomic(
                embedded
                    .into_iter()
                    .map(|v| match v {
                        Scalar::Cyclotomic(x) => x,
                        _ => unreachable!(),
                    })
                    .collect(),
            ),
        })
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Rational(q)
    }
}

impl From<QuadraticElement> for Scalar {
    fn from(x: QuadraticElement) -> Self {
        Scalar::Quadratic(x)
    }
}

impl From<CyclotomicResidue> for Scalar {
    fn from(x: CyclotomicResidue) -> Self {
        Scalar::Cyclotomic(x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => write!(f, "{}", super::rational::fmt_coefficient(x)),
            Scalar::Quadratic(x) => write!(f, "{x}"),
            Scalar::Cyclotomic(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, ratio};

    #[test]
    fn rationals_embed_into_any_field() {
        let half = Scalar::Rational(ratio(1, 2));
        let r2 = Scalar::Quadratic(QuadraticElement::sqrt(2).unwrap());
        let sum = half.try_add(&r2).unwrap();
        assert_eq!(sum.to_string(), "1/2+sqrt(2)");
        let z = Scalar::Cyclotomic(CyclotomicResidue::zeta(4).unwrap());
        assert!(z.pow(2).same_value(&Scalar::Rational(int(-1))).unwrap());
    }

    #[test]
    fn distinct_fields_do_not_mix() {
        let r2 = Scalar::Quadratic(QuadraticElement::sqrt(2).unwrap());
        let r3 = Scalar::Quadratic(QuadraticElement::sqrt(3).unwrap());
        let z = Scalar::Cyclotomic(CyclotomicResidue::zeta(8).unwrap());
        assert!(matches!(
            r2.try_mul(&r3),
            Err(NumericError::DomainMismatch { .. })
        ));
        assert!(matches!(
            r2.try_add(&z),
            Err(NumericError::DomainMismatch { .. })
        ));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            Scalar::from_int(1).try_div(&Scalar::from_int(0)),
            Err(NumericError::DivisionByZero)
        );
    }
}
