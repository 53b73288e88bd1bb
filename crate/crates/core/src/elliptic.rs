//! Exact j-invariants of elliptic curves in short Weierstrass form, Legendre
//! form, as `y^2 = (x - r1)(x - r2)(x - r3)`, and of the quartic
//! `y^4 = x (x - 1)^2`.

use std::collections::HashMap;

use crate::numeric::{
    int, poly_identity_check, FieldElement, MultivariatePolynomial, NumericError, Rational, Scalar,
    UnifiedScalars,
};
use crate::Formulas;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EllipticError {
    #[error("singular curve: discriminant vanishes")]
    Singular,
    #[error("degenerate Legendre parameter {0}")]
    DegenerateLambda(String),
    #[error("repeated roots")]
    RepeatedRoots,
    #[error("j-invariant {0} is not rational")]
    IrrationalJ(String),
    #[error("change of variables does not transform the quartic: {0}")]
    Substitution(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// `1728 * 4a^3 / (4a^3 + 27b^2)` for `y^2 = x^3 + a x + b`.
pub fn j_short_weierstrass<F: FieldElement>(a: &F, b: &F) -> Result<F, EllipticError> {
    Formulas::STANDARD.j_short_weierstrass(a, b)
}

/// `256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)` for `y^2 = x (x - 1)(x - l)`.
pub fn j_legendre<F: FieldElement>(lambda: &F) -> Result<F, EllipticError> {
    Formulas::STANDARD.j_legendre(lambda)
}

/// j-invariant of `y^2 = (x - r1)(x - r2)(x - r3)`.
pub fn j_three_roots<F: FieldElement>(r1: &F, r2: &F, r3: &F) -> Result<F, EllipticError> {
    Formulas::STANDARD.j_three_roots(r1, r2, r3)
}

/// j-invariant of `y^4 = x (x - 1)^2`; see [`Formulas::j_quartic_e`].
pub fn j_quartic_e() -> Result<Rational, EllipticError> {
    Formulas::STANDARD.j_quartic_e()
}

impl Formulas {
    pub fn j_short_weierstrass<F: FieldElement>(&self, a: &F, b: &F) -> Result<F, EllipticError> {
        let dom = a.domain();
        let four_a3 = F::from_int_in(&dom, self.disc_a3).times(&a.pow(3));
        let disc = four_a3.plus(&F::from_int_in(&dom, self.disc_b2).times(&b.pow(2)));
        let numer = F::from_int_in(&dom, self.j_scale).times(&four_a3);
        numer.divided_by(&disc).ok_or(EllipticError::Singular)
    }

    pub fn j_legendre<F: FieldElement>(&self, lambda: &F) -> Result<F, EllipticError> {
        let dom = lambda.domain();
        let one = F::one_in(&dom);
        let l_minus_one = lambda.minus(&one);
        if lambda.vanishes() || l_minus_one.vanishes() {
            return Err(EllipticError::DegenerateLambda(lambda.to_string()));
        }
        let core = lambda.pow(2).minus(lambda).plus(&one);
        let numer = F::from_int_in(&dom, self.legendre_scale).times(&core.pow(3));
        let denom = lambda.pow(2).times(&l_minus_one.pow(2));
        numer.divided_by(&denom).ok_or(EllipticError::Singular)
    }

    pub fn j_three_roots<F: FieldElement>(
        &self,
        r1: &F,
        r2: &F,
        r3: &F,
    ) -> Result<F, EllipticError> {
        if r1 == r2 || r2 == r3 || r1 == r3 {
            return Err(EllipticError::RepeatedRoots);
        }
        // x -> (x - r1)/(r2 - r1) sends the roots to 0, 1, lambda
        let lambda = r3
            .minus(r1)
            .divided_by(&r2.minus(r1))
            .ok_or(EllipticError::RepeatedRoots)?;
        self.j_legendre(&lambda)
    }

    /// j-invariant of `y^4 = x (x - 1)^2`.
    ///
    /// With `w = y^2 / (x - 1)` one has `x = w^2` and `y^2 = w (x - 1)`; the
    /// identity `y^4 - x (x-1)^2 = (y^2 - w(x-1)) (y^2 + w(x-1))` on `x = w^2`
    /// is checked exactly, then the cubic `w (w^2 - 1)` is read off and its
    /// short Weierstrass j-invariant returned.
    pub fn j_quartic_e(&self) -> Result<Rational, EllipticError> {
        type QPoly = MultivariatePolynomial<Rational>;
        let [x, y, w] = QPoly::generators(&["x", "y", "w"], ())
            .try_into()
            .expect("three generators");
        let one = x.constant_in_ring(int(1));
        let x_minus_one = &x - &one;
        let quartic = &y.pow(4) - &(&x * &x_minus_one.pow(2));
        let half = &w * &x_minus_one;
        let target = &quartic - &(&(&y.pow(2) - &half) * &(&y.pow(2) + &half));
        let on_curve = HashMap::from([
            ("x".to_string(), w.pow(2)),
            ("y".to_string(), y.clone()),
            ("w".to_string(), w.clone()),
        ]);
        if !poly_identity_check(&target, &on_curve)? {
            return Err(EllipticError::Substitution(target.to_string()));
        }
        // y^2 = w^3 + a w + b
        let cubic = half.substitute(&on_curve)?;
        let coeff = |e: u32| {
            cubic
                .coefficient(&[0, 0, e])
                .cloned()
                .unwrap_or_else(|| int(0))
        };
        let monic_depressed = cubic.terms().all(|(exps, _)| exps[0] == 0 && exps[1] == 0)
            && coeff(3) == int(1)
            && coeff(2) == int(0);
        if !monic_depressed {
            return Err(EllipticError::Substitution(cubic.to_string()));
        }
        self.j_short_weierstrass(&coeff(1), &coeff(0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EllipticForm {
    /// `y^2 = x^3 + a x + b`
    ShortWeierstrass { a: Scalar, b: Scalar },
    /// `y^2 = x (x - 1)(x - lambda)`
    Legendre { lambda: Scalar },
    /// `y^2 = (x - r1)(x - r2)(x - r3)`
    ThreeRoots { roots: [Scalar; 3] },
    /// `y^4 = x (x - 1)^2`
    QuarticE,
}

/// A nonsingular elliptic curve presentation with coefficients in one of
/// the exact scalar fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticModel {
    form: EllipticForm,
}

fn unify_pair(a: &Scalar, b: &Scalar) -> Result<UnifiedScalars, EllipticError> {
    Ok(Scalar::unify(&[a.clone(), b.clone()])?)
}

impl EllipticModel {
    pub fn short_weierstrass(a: Scalar, b: Scalar) -> Result<Self, EllipticError> {
        let model = EllipticModel {
            form: EllipticForm::ShortWeierstrass { a, b },
        };
        model.j_exact()?;
        Ok(model)
    }

    pub fn legendre(lambda: Scalar) -> Result<Self, EllipticError> {
        let model = EllipticModel {
            form: EllipticForm::Legendre { lambda },
        };
        model.j_exact()?;
        Ok(model)
    }

    pub fn three_roots(roots: [Scalar; 3]) -> Result<Self, EllipticError> {
        let model = EllipticModel {
            form: EllipticForm::ThreeRoots { roots },
        };
        model.j_exact()?;
        Ok(model)
    }

    pub fn quartic_e() -> Self {
        EllipticModel {
            form: EllipticForm::QuarticE,
        }
    }

    pub fn form(&self) -> &EllipticForm {
        &self.form
    }

    /// j-invariant in the coefficient field of the model.
    pub fn j_exact(&self) -> Result<Scalar, EllipticError> {
        self.j_exact_with(&Formulas::STANDARD)
    }

    pub fn j_exact_with(&self, formulas: &Formulas) -> Result<Scalar, EllipticError> {
        Ok(match &self.form {
            EllipticForm::ShortWeierstrass { a, b } => match unify_pair(a, b)? {
                UnifiedScalars::Rational(v) => formulas.j_short_weierstrass(&v[0], &v[1])?.into(),
                UnifiedScalars::Quadratic(v) => formulas.j_short_weierstrass(&v[0], &v[1])?.into(),
                UnifiedScalars::Cyclotomic(v) => formulas.j_short_weierstrass(&v[0], &v[1])?.into(),
            },
            EllipticForm::Legendre { lambda } => match lambda {
                Scalar::Rational(l) => formulas.j_legendre(l)?.into(),
                Scalar::Quadratic(l) => formulas.j_legendre(l)?.into(),
                Scalar::Cyclotomic(l) => formulas.j_legendre(l)?.into(),
            },
            EllipticForm::ThreeRoots { roots } => match Scalar::unify(roots)? {
                UnifiedScalars::Rational(v) => formulas.j_three_roots(&v[0], &v[1], &v[2])?.into(),
                UnifiedScalars::Quadratic(v) => formulas.j_three_roots(&v[0], &v[1], &v[2])?.into(),
                UnifiedScalars::Cyclotomic(v) => {
                    formulas.j_three_roots(&v[0], &v[1], &v[2])?.into()
                }
            },
            EllipticForm::QuarticE => formulas.j_quartic_e()?.into(),
        })
    }

    /// Rational j-invariant; any irrational part must cancel exactly.
    pub fn j_invariant(&self) -> Result<Rational, EllipticError> {
        self.j_invariant_with(&Formulas::STANDARD)
    }

    pub fn j_invariant_with(&self, formulas: &Formulas) -> Result<Rational, EllipticError> {
        let j = self.j_exact_with(formulas)?;
        j.to_rational()
            .ok_or_else(|| EllipticError::IrrationalJ(j.to_string()))
    }
}
