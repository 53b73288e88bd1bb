//! Cyclic covers `y^m = prod (x - a_i)^{d_i}` of the projective line.
//!
//! A cover is described by its branch data: the degree `m` and the branch
//! points with local exponents `d_i mod m`. The point at infinity carries the
//! exponent that makes the total exponent sum divisible by `m`.

use std::fmt;

use num_integer::Integer;

use crate::numeric::{NumericError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("cover degree must be at least 2, got {0}")]
    InvalidDegree(i64),
    #[error("branch point {index} has exponent divisible by the degree")]
    ZeroExponent { index: usize },
    #[error("branch point {index} repeats an earlier point")]
    DuplicatePoint { index: usize },
    #[error("exponents share the factor {gcd} with the degree: the cover is disconnected")]
    Disconnected { gcd: u32 },
    #[error("exponent sum {sum} including infinity is not divisible by {m}")]
    InconsistentInfinity { sum: u64, m: u32 },
    #[error("branch points are symbolic; roots of unity cannot be tested")]
    SymbolicPoints,
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointLocation {
    Finite(Scalar),
    /// A point known only to be distinct from the others.
    Symbolic(String),
    Infinity,
}

impl fmt::Display for PointLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLocation::Finite(x) => write!(f, "{x}"),
            PointLocation::Symbolic(label) => write!(f, "{label}"),
            PointLocation::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchPoint {
    pub location: PointLocation,
    /// Reduced into `1..m`.
    pub exponent: u32,
}

/// Validated branch data of a connected cyclic cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchData {
    m: u32,
    points: Vec<BranchPoint>,
}

impl BranchData {
    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn points(&self) -> &[BranchPoint] {
        &self.points
    }

    pub fn includes_infinity(&self) -> bool {
        self.points
            .iter()
            .any(|p| p.location == PointLocation::Infinity)
    }

    /// `count` distinct symbolic points per `(count, exponent)` group,
    /// labelled `q1, q2, ...`.
    pub fn generic(m: i64, groups: &[(usize, i64)]) -> Result<Self, CurveError> {
        let raw = groups
            .iter()
            .flat_map(|&(count, exp)| std::iter::repeat_n(exp, count))
            .enumerate()
            .map(|(i, exp)| (PointLocation::Symbolic(format!("q{}", i + 1)), exp))
            .collect();
        normalize_branch_data(m, raw)
    }
}

impl fmt::Display for BranchData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .points
            .iter()
            .map(|p| format!("{}:{}", p.location, p.exponent))
            .collect();
        write!(f, "m={} {{{}}}", self.m, pts.join(", "))
    }
}

fn same_point(a: &PointLocation, b: &PointLocation) -> Result<bool, NumericError> {
    Ok(match (a, b) {
        (PointLocation::Finite(x), PointLocation::Finite(y)) => x.same_value(y)?,
        (PointLocation::Symbolic(x), PointLocation::Symbolic(y)) => x == y,
        (PointLocation::Infinity, PointLocation::Infinity) => true,
        _ => false,
    })
}

/// Validates raw branch data and completes it at infinity.
///
/// Exponents are reduced mod `m`; a multiple of `m` is rejected. If the
/// exponent sum is not divisible by `m`, infinity is appended with the
/// missing exponent (or, if infinity was listed, the data is rejected).
pub fn normalize_branch_data(
    m: i64,
    raw: Vec<(PointLocation, i64)>,
) -> Result<BranchData, CurveError> {
    if m < 2 || m > u32::MAX as i64 {
        return Err(CurveError::InvalidDegree(m));
    }
    let mut points: Vec<BranchPoint> = Vec::with_capacity(raw.len() + 1);
    for (index, (location, exp)) in raw.into_iter().enumerate() {
        let exponent = exp.rem_euclid(m) as u32;
        if exponent == 0 {
            return Err(CurveError::ZeroExponent { index });
        }
        for earlier in &points {
            if same_point(&earlier.location, &location)? {
                return Err(CurveError::DuplicatePoint { index });
            }
        }
        points.push(BranchPoint { location, exponent });
    }
    let m = m as u32;
    let sum: u64 = points.iter().map(|p| p.exponent as u64).sum();
    let missing = ((m as u64 - sum % m as u64) % m as u64) as u32;
    if missing != 0 {
        if points.iter().any(|p| p.location == PointLocation::Infinity) {
            return Err(CurveError::InconsistentInfinity { sum, m });
        }
        points.push(BranchPoint {
            location: PointLocation::Infinity,
            exponent: missing,
        });
    }
    let gcd = points.iter().fold(m, |g, p| g.gcd(&p.exponent));
    if gcd != 1 {
        return Err(CurveError::Disconnected { gcd });
    }
    Ok(BranchData { m, points })
}

/// Riemann-Hurwitz: `2g - 2 = -2m + sum_i (m - gcd(m, d_i))`.
pub fn genus(b: &BranchData) -> u32 {
    let m = b.m as i64;
    let ramification: i64 = b
        .points
        .iter()
        .map(|p| m - m.gcd(&(p.exponent as i64)))
        .sum();
    let twice_g_minus_two = -2 * m + ramification;
    debug_assert!(twice_g_minus_two % 2 == 0 && twice_g_minus_two >= -2);
    (twice_g_minus_two / 2 + 1) as u32
}

/// `g_n = -1 + sum_i frac(n d_i / m)` for `n = 1..m-1`.
///
/// `g_n` counts the holomorphic differentials of the form `h(x) dx / y^n`,
/// on which the deck transformation `y -> xi y` acts by `xi^{-n}`.
pub fn eigenspace_dims(b: &BranchData) -> Vec<u32> {
    let m = b.m as u64;
    (1..m)
        .map(|n| {
            let numer: u64 = b.points.iter().map(|p| n * p.exponent as u64 % m).sum();
            // the exponent sum is divisible by m, so numer is too
            (numer / m - 1) as u32
        })
        .collect()
}

/// Dimension of the subspace of differentials on which `y -> xi y` acts by
/// `xi^k`, with `xi = exp(2 pi i / m)`.
pub fn character_dimension(b: &BranchData, k: i64) -> u32 {
    let n = (-k).rem_euclid(b.m as i64) as usize;
    if n == 0 {
        return 0;
    }
    eigenspace_dims(b)[n - 1]
}

/// Evidence that a cover is dominated by a Fermat curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmWitness {
    /// Degree `k m` of the covering Fermat curve `u^{km} + v^{km} + 1 = 0`.
    pub fermat_degree: u32,
    /// The scaling `c` in `x -> c x` moving the branch points onto roots of unity.
    pub normalization: Scalar,
    /// Number `k` of branch points sent to the `k`-th roots of unity.
    pub root_count: u32,
    /// Common exponent of the root-of-unity branch points.
    pub root_exponent: u32,
    /// Exponent at `x = 0`, if `0` is a branch point.
    pub zero_exponent: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmOutcome {
    Witness(CmWitness),
    NoMatch,
}

impl CmOutcome {
    pub fn witness(&self) -> Option<&CmWitness> {
        match self {
            CmOutcome::Witness(w) => Some(w),
            CmOutcome::NoMatch => None,
        }
    }
}

/// Tests whether, after one scaling `x -> c x`, the cover has the shape
/// `y^m = x^{d1} prod_{zeta^k = 1} (x - zeta)^d`, which is dominated by the
/// Fermat curve of degree `k m` and so has complex multiplication.
pub fn fermat_cover_cm(b: &BranchData) -> Result<CmOutcome, CurveError> {
    let mut zero_exponent = None;
    let mut roots: Vec<(&Scalar, u32)> = Vec::new();
    for p in &b.points {
        match &p.location {
            PointLocation::Infinity => {}
            PointLocation::Symbolic(_) => return Err(CurveError::SymbolicPoints),
            PointLocation::Finite(x) if x.is_zero() => zero_exponent = Some(p.exponent),
            PointLocation::Finite(x) => roots.push((x, p.exponent)),
        }
    }
    let Some(&(first, root_exponent)) = roots.first() else {
        return Ok(CmOutcome::NoMatch);
    };
    if roots.iter().any(|&(_, e)| e != root_exponent) {
        return Ok(CmOutcome::NoMatch);
    }
    // k distinct points with equal k-th powers are exactly the k-th roots of
    // that power, so x -> x / first maps them onto the k-th roots of unity
    let k = roots.len() as u32;
    let target = first.pow(k);
    for &(x, _) in &roots[1..] {
        if !x.pow(k).same_value(&target)? {
            return Ok(CmOutcome::NoMatch);
        }
    }
    Ok(CmOutcome::Witness(CmWitness {
        fermat_degree: k * b.m,
        normalization: first.inverse()?,
        root_count: k,
        root_exponent,
        zero_exponent,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, CyclotomicResidue, Rational};
    use proptest::prelude::*;

    fn zeta(n: u32, k: i64) -> PointLocation {
        PointLocation::Finite(Scalar::Cyclotomic(
            CyclotomicResidue::zeta_pow(n, k).unwrap(),
        ))
    }

    fn rational(n: i64) -> PointLocation {
        PointLocation::Finite(Scalar::from_int(n))
    }

    fn roots_of_minus_one(m: i64, count: i64) -> BranchData {
        // roots of x^count = -1 are the odd powers of zeta_{2 count}
        let raw = (0..count)
            .map(|j| (zeta(2 * count as u32, 2 * j + 1), 1))
            .collect();
        normalize_branch_data(m, raw).unwrap()
    }

    #[test]
    fn eight_roots_of_minus_one_need_no_infinity() {
        let b = roots_of_minus_one(4, 8);
        assert!(!b.includes_infinity());
        assert_eq!(b.points().len(), 8);
    }

    #[test]
    fn quartic_elliptic_curve_gets_infinity() {
        let b = normalize_branch_data(4, vec![(rational(0), 1), (rational(1), 2)]).unwrap();
        assert_eq!(b.points().last().unwrap().location, PointLocation::Infinity);
        assert_eq!(b.points().last().unwrap().exponent, 1);
    }

    #[test]
    fn six_points_degree_six_need_no_infinity() {
        let b = BranchData::generic(6, &[(6, 1)]).unwrap();
        assert!(!b.includes_infinity());
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            normalize_branch_data(4, vec![(rational(0), 4)]),
            Err(CurveError::ZeroExponent { index: 0 })
        );
        assert_eq!(
            normalize_branch_data(4, vec![(rational(1), 1), (rational(1), 3)]),
            Err(CurveError::DuplicatePoint { index: 1 })
        );
        assert_eq!(
            normalize_branch_data(4, vec![(rational(0), 2), (rational(1), 2)]),
            Err(CurveError::Disconnected { gcd: 2 })
        );
        assert_eq!(
            normalize_branch_data(4, vec![(rational(0), 1), (PointLocation::Infinity, 1)]),
            Err(CurveError::InconsistentInfinity { sum: 2, m: 4 })
        );
        assert_eq!(
            normalize_branch_data(1, vec![]),
            Err(CurveError::InvalidDegree(1))
        );
    }

    #[test]
    fn exponents_are_reduced_mod_m() {
        let b = normalize_branch_data(4, vec![(rational(0), 5), (rational(1), -2)]).unwrap();
        let exps: Vec<u32> = b.points().iter().map(|p| p.exponent).collect();
        assert_eq!(exps, vec![1, 2, 1]);
    }

    #[test]
    fn genus_of_quartic_covers() {
        assert_eq!(genus(&roots_of_minus_one(4, 8)), 9);
        assert_eq!(genus(&BranchData::generic(6, &[(6, 1)]).unwrap()), 10);
        let e = normalize_branch_data(4, vec![(rational(0), 1), (rational(1), 2)]).unwrap();
        assert_eq!(genus(&e), 1);
    }

    #[test]
    fn eigenspace_examples() {
        assert_eq!(eigenspace_dims(&roots_of_minus_one(4, 8)), vec![1, 3, 5]);
        let e = normalize_branch_data(4, vec![(rational(0), 1), (rational(1), 2)]).unwrap();
        assert_eq!(eigenspace_dims(&e), vec![0, 0, 1]);
        assert_eq!(
            eigenspace_dims(&BranchData::generic(6, &[(6, 1)]).unwrap()),
            vec![0, 1, 2, 3, 4]
        );
    }

    #[test]
    fn fermat_cubic_form_has_character_xi() {
        // y^3 = x^3 + 1: dx / y^2 is pulled back to xi^{-2} = xi times itself
        let b = roots_of_minus_one(3, 3);
        assert_eq!(genus(&b), 1);
        assert_eq!(character_dimension(&b, 1), 1);
        assert_eq!(character_dimension(&b, 2), 0);
        assert_eq!(character_dimension(&b, 0), 0);
    }

    #[test]
    fn cm_for_roots_of_minus_one() {
        let w = fermat_cover_cm(&roots_of_minus_one(4, 8)).unwrap();
        let w = w.witness().expect("witness");
        assert_eq!(w.fermat_degree, 32);
        assert_eq!(w.zero_exponent, None);
        // the scaling is a primitive 16th root of unity
        let Scalar::Cyclotomic(c) = &w.normalization else {
            panic!()
        };
        assert_eq!(c.root_of_unity_exponent(), Some(15));
    }

    #[test]
    fn cm_for_degree_six_curve_through_zero_and_one() {
        let b = normalize_branch_data(6, vec![(rational(0), 1), (rational(1), 1)]).unwrap();
        assert_eq!(b.points().last().unwrap().exponent, 4);
        let w = fermat_cover_cm(&b).unwrap();
        assert_eq!(w.witness().unwrap().fermat_degree, 6);
    }

    #[test]
    fn no_cm_witness_for_points_zero_one_three() {
        let b = normalize_branch_data(
            4,
            vec![(rational(0), 1), (rational(1), 1), (rational(3), 1)],
        )
        .unwrap();
        assert_eq!(fermat_cover_cm(&b).unwrap(), CmOutcome::NoMatch);
        // brute force: every scaling sending a nonzero branch point to 1
        // leaves {1, 3} or {1/3, 1}, neither of which is {1, -1}
        for anchor in [1i64, 3] {
            let scaled: Vec<Rational> = [1i64, 3]
                .iter()
                .map(|&p| Rational::new(p.into(), anchor.into()))
                .collect();
            assert!(!(scaled.contains(&int(1)) && scaled.contains(&int(-1))));
        }
    }

    #[test]
    fn cm_is_unavailable_for_symbolic_points() {
        let b = BranchData::generic(4, &[(8, 1)]).unwrap();
        assert_eq!(fermat_cover_cm(&b), Err(CurveError::SymbolicPoints));
    }

    fn random_branch_data() -> impl Strategy<Value = BranchData> {
        (2i64..=12)
            .prop_flat_map(|m| (Just(m), prop::collection::vec(1..m, 1..=12)))
            .prop_filter_map("disconnected", |(m, exps)| {
                let raw = exps
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| (rational(i as i64), e))
                    .collect();
                normalize_branch_data(m, raw).ok()
            })
    }

    fn rescale(b: &BranchData, c: i64, shift: usize) -> BranchData {
        let mut raw: Vec<(PointLocation, i64)> = b
            .points()
            .iter()
            .map(|p| {
                let loc = match &p.location {
                    PointLocation::Finite(x) => {
                        PointLocation::Finite(x.try_mul(&Scalar::from_int(c)).unwrap())
                    }
                    other => other.clone(),
                };
                (loc, p.exponent as i64)
            })
            .collect();
        let len = raw.len();
        raw.rotate_left(shift % len);
        normalize_branch_data(b.degree() as i64, raw).unwrap()
    }

    proptest! {
        #[test]
        fn eigenspaces_sum_to_genus(b in random_branch_data()) {
            let dims = eigenspace_dims(&b);
            prop_assert_eq!(dims.len() as u32, b.degree() - 1);
            prop_assert_eq!(dims.iter().sum::<u32>(), genus(&b));
        }

        #[test]
        fn genus_is_scaling_and_permutation_invariant(
            b in random_branch_data(), c in 1i64..9, shift in 0usize..13,
        ) {
            prop_assert_eq!(genus(&rescale(&b, c, shift)), genus(&b));
        }

        #[test]
        fn hyperelliptic_genus(r in 1usize..12) {
            let b = BranchData::generic(2, &[(r, 1)]).unwrap();
            let total = b.points().len() as u32;
            prop_assert_eq!(total % 2, 0);
            prop_assert_eq!(genus(&b), (total - 2) / 2);
        }

        #[test]
        fn literal_fermat_shapes_are_detected(
            m in 2i64..=12, k in 1u32..=10, d1 in 0i64..12, d in 1i64..12, twist in 0i64..40, c in 1i64..5,
        ) {
            prop_assume!(d1 < m && d < m);
            // points 0 (if d1 > 0) and c * zeta_{2k}^twist * (k-th roots of unity)
            let order = 2 * k;
            let scale = CyclotomicResidue::zeta_pow(order, twist).unwrap();
            let scale = Scalar::Cyclotomic(scale).try_mul(&Scalar::from_int(c)).unwrap();
            let mut raw: Vec<(PointLocation, i64)> = (0..k as i64)
                .map(|i| {
                    let z = Scalar::Cyclotomic(CyclotomicResidue::zeta_pow(order, 2 * i).unwrap());
                    (PointLocation::Finite(z.try_mul(&scale).unwrap()), d)
                })
                .collect();
            if d1 > 0 {
                raw.push((rational(0), d1));
            }
            if let Ok(b) = normalize_branch_data(m, raw) {
                let outcome = fermat_cover_cm(&b).unwrap();
                let w = outcome.witness().expect("literal shape must be detected");
                prop_assert_eq!(w.fermat_degree, k * m as u32);
                prop_assert_eq!(w.root_count, k);
            }
        }
    }
}
