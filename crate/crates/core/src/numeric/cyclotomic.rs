use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::fmt_coefficient;
use super::univariate;
use super::{FieldElement, NumericError, Rational};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

fn exact_div_monic(dividend: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let dd = divisor.len() - 1;
    let mut rem = dividend.to_vec();
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + dd].clone();
        for (i, a) in divisor.iter().enumerate() {
            rem[shift + i] -= &c * a;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients (low to high) of the `n`-th cyclotomic polynomial,
/// obtained by dividing `x^n - 1` by the cyclotomic polynomials of the proper
/// divisors of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n > 0, "cyclotomic order must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
    }
    let poly = Arc::new(poly);
    cyclotomic_cache()
        .lock()
        .unwrap()
        .insert(n, Arc::clone(&poly));
    poly
}

/// Element of `Q(zeta_n)`, stored as a polynomial in `zeta_n` of degree below
/// `phi(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicResidue {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicResidue {
    /// Reduces an arbitrary coefficient list (low to high) modulo `Phi_n`.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self, NumericError> {
        if order == 0 {
            return Err(NumericError::ZeroOrder);
        }
        Ok(Self::reduce(order, coeffs))
    }

    fn reduce(order: u32, mut coeffs: Vec<Rational>) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let deg = modulus.len() - 1;
        while coeffs.len() > deg {
            let top = coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = coeffs.len() - deg;
            // Phi_n is monic: x^deg = -(lower terms)
            for (i, a) in modulus[..deg].iter().enumerate() {
                coeffs[shift + i] -= &top * Rational::from_integer(a.clone());
            }
        }
        coeffs.resize(deg, Rational::zero());
        CyclotomicResidue { order, coeffs }
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Result<Self, NumericError> {
        if order == 0 {
            return Err(NumericError::ZeroOrder);
        }
        let k = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Ok(Self::reduce(order, coeffs))
    }

    pub fn zeta(order: u32) -> Result<Self, NumericError> {
        Self::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of `1, zeta, ..., zeta^{phi(n)-1}`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exponent `k` with `self = zeta_n^k`, if the element is such a power.
    pub fn root_of_unity_exponent(&self) -> Option<u32> {
        (0..self.order).find(|&k| {
            Self::zeta_pow(self.order, k as i64)
                .map(|z| &z == self)
                .unwrap_or(false)
        })
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "mixed cyclotomic orders {} and {}",
            self.order, other.order
        );
    }
}

/// Product in `Q(zeta_n)`; both factors must have the same order.
pub fn cyclo_mul(
    p: &CyclotomicResidue,
    q: &CyclotomicResidue,
) -> Result<CyclotomicResidue, NumericError> {
    if p.order != q.order {
        return Err(NumericError::DomainMismatch {
            left: format!("Q(zeta_{})", p.order),
            right: format!("Q(zeta_{})", q.order),
        });
    }
    Ok(p.times(q))
}

impl FieldElement for CyclotomicResidue {
    type Domain = u32;

    fn domain(&self) -> u32 {
        self.order
    }

    fn from_rational_in(order: &u32, value: Rational) -> Self {
        Self::reduce(*order, vec![value])
    }

    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn plus(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        CyclotomicResidue {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn times(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let n = self.coeffs.len();
        let mut product = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    product[i + j] += a * b;
                }
            }
        }
        Self::reduce(self.order, product)
    }

    fn negated(&self) -> Self {
        CyclotomicResidue {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    fn inverse(&self) -> Option<Self> {
        if self.vanishes() {
            return None;
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        // Phi_n is irreducible, so every nonzero residue is a unit
        let inv = univariate::inverse_mod(&self.coeffs, &modulus)?;
        Some(Self::reduce(self.order, inv))
    }

    fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }
}

impl fmt::Display for CyclotomicResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = match k {
                0 => String::new(),
                1 => format!("zeta{}", self.order),
                _ => format!("zeta{}^{}", self.order, k),
            };
            let magnitude = c.abs();
            let body = if k == 0 {
                fmt_coefficient(&magnitude)
            } else if magnitude.is_one() {
                power
            } else {
                format!("{}*{}", fmt_coefficient(&magnitude), power)
            };
            match (wrote, c.is_negative()) {
                (false, false) => write!(f, "{body}")?,
                (false, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "+{body}")?,
                (true, true) => write!(f, "-{body}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<'a> $tr<&'a CyclotomicResidue> for &'a CyclotomicResidue {
            type Output = CyclotomicResidue;
            fn $method(self, rhs: &'a CyclotomicResidue) -> CyclotomicResidue {
                self.$inner(rhs)
            }
        }
        impl $tr for CyclotomicResidue {
            type Output = CyclotomicResidue;
            fn $method(self, rhs: CyclotomicResidue) -> CyclotomicResidue {
                (&self).$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

impl Neg for CyclotomicResidue {
    type Output = CyclotomicResidue;
    fn neg(self) -> CyclotomicResidue {
        self.negated()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, univariate};
    use proptest::prelude::*;

    fn residue(order: u32, cs: &[i64]) -> CyclotomicResidue {
        CyclotomicResidue::from_coeffs(order, cs.iter().map(|&c| int(c)).collect()).unwrap()
    }

    #[test]
    fn known_cyclotomic_polynomials() {
        let as_i64 = |n| -> Vec<i64> {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn primitive_cube_root_squared() {
        let t = CyclotomicResidue::zeta(3).unwrap();
        assert_eq!(cyclo_mul(&t, &t).unwrap(), residue(3, &[-1, -1]));
    }

    #[test]
    fn fourth_root_squared() {
        let t = CyclotomicResidue::zeta(4).unwrap();
        assert_eq!(cyclo_mul(&t, &t).unwrap(), residue(4, &[-1]));
    }

    #[test]
    fn eighth_root_fourth_power() {
        let t2 = CyclotomicResidue::zeta_pow(8, 2).unwrap();
        assert_eq!(cyclo_mul(&t2, &t2).unwrap(), residue(8, &[-1]));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let a = CyclotomicResidue::zeta(3).unwrap();
        let b = CyclotomicResidue::zeta(4).unwrap();
        assert!(matches!(
            cyclo_mul(&a, &b),
            Err(NumericError::DomainMismatch { .. })
        ));
    }

    #[test]
    fn root_of_unity_exponents() {
        for k in 0..24 {
            let z = CyclotomicResidue::zeta_pow(24, k).unwrap();
            assert_eq!(z.root_of_unity_exponent(), Some(k as u32));
        }
        assert_eq!(residue(8, &[2]).root_of_unity_exponent(), None);
    }

    #[test]
    fn display() {
        assert_eq!(residue(3, &[-1, -1]).to_string(), "-1-zeta3");
        assert_eq!(residue(8, &[0, 0, 3]).to_string(), "3*zeta8^2");
        assert_eq!(residue(8, &[]).to_string(), "0");
    }

    /// Independent oracle: `Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}`.
    fn mobius(mut n: u32) -> i32 {
        let mut result = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if n > 1 {
            result = -result;
        }
        result
    }

    fn mobius_cyclotomic(n: u32) -> Vec<Rational> {
        let x_d_minus_one = |d: u32| {
            let mut v = vec![int(0); d as usize + 1];
            v[0] = int(-1);
            v[d as usize] = int(1);
            v
        };
        let mut num = vec![int(1)];
        let mut den = vec![int(1)];
        for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
            match mobius(n / d) {
                1 => num = univariate::mul(&num, &x_d_minus_one(d)),
                -1 => den = univariate::mul(&den, &x_d_minus_one(d)),
                _ => {}
            }
        }
        let (q, r) = univariate::divrem(&num, &den);
        assert!(r.is_empty());
        q
    }

    #[test]
    fn cyclotomic_polynomial_matches_mobius_product() {
        for n in 1..=24 {
            let ours: Vec<Rational> = cyclotomic_polynomial(n)
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect();
            assert_eq!(ours, mobius_cyclotomic(n), "n = {n}");
        }
    }

    fn order_and_pair() -> impl Strategy<Value = (u32, Vec<i64>, Vec<i64>)> {
        (1u32..=24).prop_flat_map(|n| {
            let len = euler_phi(n) as usize;
            (
                Just(n),
                prop::collection::vec(-9i64..9, len),
                prop::collection::vec(-9i64..9, len),
            )
        })
    }

    proptest! {
        #[test]
        fn product_agrees_with_long_division((n, p, q) in order_and_pair()) {
            let lhs = cyclo_mul(&residue(n, &p), &residue(n, &q)).unwrap();
            let to_q = |v: &[i64]| v.iter().map(|&c| int(c)).collect::<Vec<_>>();
            let full = univariate::mul(&to_q(&p), &to_q(&q));
            let (_, mut rem) = univariate::divrem(&full, &mobius_cyclotomic(n));
            rem.resize(euler_phi(n) as usize, int(0));
            prop_assert_eq!(lhs.coefficients(), &rem[..]);
        }

        #[test]
        fn inverse_is_two_sided((n, p, _q) in order_and_pair()) {
            let a = residue(n, &p);
            prop_assume!(!a.vanishes());
            let inv = a.inverse().unwrap();
            prop_assert!(a.times(&inv).equals_one());
            prop_assert!(inv.times(&a).equals_one());
        }
    }
}
