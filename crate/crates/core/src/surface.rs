//! Surfaces as Picard-lattice data: a basis of divisor classes, the
//! intersection form, the canonical class, the Euler number and `chi(O)`.

use std::fmt;

use crate::Formulas;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("class has {got} coefficients, surface basis has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("D.(D+K) = {0} is odd; not the class of a reduced curve")]
    OddAdjunction(i64),
    #[error("unknown basis class `{0}`")]
    UnknownClass(String),
}

/// Integer coefficients over a surface's Picard basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass(pub Vec<i64>);

impl DivisorClass {
    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn scaled(&self, k: i64) -> DivisorClass {
        DivisorClass(self.0.iter().map(|c| c * k).collect())
    }

    pub fn plus(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &DivisorClass) -> DivisorClass {
        self.plus(&other.scaled(-1))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    pub name: String,
    pub basis: Vec<String>,
    pub gram: Vec<Vec<i64>>,
    pub canonical: DivisorClass,
    pub euler: i64,
    pub chi_structure: i64,
}

/// Hirzebruch surface `P(O + O(n))` with basis `(C0, F)`, where `C0` is the
/// section of self-intersection `-n` and `F` a fiber.
///
/// The section `E0 = C0 + nF` has `E0^2 = n` and is disjoint from
/// `E_inf = C0 = E0 - nF`.
pub fn ruled_surface(n: u32) -> SurfaceModel {
    let n = n as i64;
    SurfaceModel {
        name: format!("P_{n}"),
        basis: vec!["C0".into(), "F".into()],
        gram: vec![vec![-n, 1], vec![1, 0]],
        canonical: DivisorClass(vec![-2, -(n + 2)]),
        euler: 4,
        chi_structure: 1,
    }
}

/// The projective plane with basis the line class `H`.
pub fn projective_plane() -> SurfaceModel {
    SurfaceModel {
        name: "P2".into(),
        basis: vec!["H".into()],
        gram: vec![vec![1]],
        canonical: DivisorClass(vec![-3]),
        euler: 3,
        chi_structure: 1,
    }
}

/// A K3 surface (`K = 0`, `e = 24`, `chi(O) = 2`) carrying only the rank-2
/// sublattice spanned by a quartic hyperplane section `H` (`H^2 = 4`) and a
/// line `D` on it (`D^2 = -2`, `H.D = 1`).
pub fn k3_lattice_stub() -> SurfaceModel {
    SurfaceModel {
        name: "K3".into(),
        basis: vec!["H".into(), "D".into()],
        gram: vec![vec![4, 1], vec![1, -2]],
        canonical: DivisorClass(vec![0, 0]),
        euler: 24,
        chi_structure: 2,
    }
}

impl SurfaceModel {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn zero_class(&self) -> DivisorClass {
        DivisorClass(vec![0; self.rank()])
    }

    /// The class of the named basis element.
    pub fn basis_class(&self, label: &str) -> Result<DivisorClass, SurfaceError> {
        let idx = self
            .basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| SurfaceError::UnknownClass(label.to_string()))?;
        let mut c = self.zero_class();
        c.0[idx] = 1;
        Ok(c)
    }

    /// Class from coefficients, checking the length.
    pub fn class(&self, coefficients: &[i64]) -> Result<DivisorClass, SurfaceError> {
        self.check(&DivisorClass(coefficients.to_vec()))?;
        Ok(DivisorClass(coefficients.to_vec()))
    }

    fn check(&self, d: &DivisorClass) -> Result<(), SurfaceError> {
        if d.0.len() == self.rank() {
            Ok(())
        } else {
            Err(SurfaceError::DimensionMismatch {
                expected: self.rank(),
                got: d.0.len(),
            })
        }
    }

    pub fn k_squared(&self) -> i64 {
        intersect(&self.canonical, &self.canonical, self).expect("canonical class fits basis")
    }

    /// `12 chi(O) = K^2 + e`
    pub fn noether_consistent(&self) -> bool {
        self.noether_consistent_with(&Formulas::STANDARD)
    }

    pub fn noether_consistent_with(&self, formulas: &Formulas) -> bool {
        formulas.noether_weight * self.chi_structure == self.k_squared() + self.euler
    }
}

/// `d1^T G d2`.
pub fn intersect(
    d1: &DivisorClass,
    d2: &DivisorClass,
    s: &SurfaceModel,
) -> Result<i64, SurfaceError> {
    s.check(d1)?;
    s.check(d2)?;
    Ok(s.gram
        .iter()
        .zip(&d1.0)
        .map(|(row, a)| a * row.iter().zip(&d2.0).map(|(g, b)| g * b).sum::<i64>())
        .sum())
}

/// Blow-up in `k` distinct points: appends exceptional classes `E_i` with
/// `E_i^2 = -1`, orthogonal to everything else, and `K -> K + sum E_i`.
pub fn blow_up(s: &SurfaceModel, k: u32) -> SurfaceModel {
    if k == 0 {
        return s.clone();
    }
    let old = s.rank();
    let new = old + k as usize;
    let offset = s.basis.iter().filter(|b| b.starts_with('E')).count();
    let mut basis = s.basis.clone();
    basis.extend((1..=k as usize).map(|i| format!("E{}", offset + i)));
    let mut gram = vec![vec![0; new]; new];
    for (i, row) in s.gram.iter().enumerate() {
        gram[i][..old].copy_from_slice(row);
    }
    for (i, row) in gram.iter_mut().enumerate().skip(old) {
        row[i] = -1;
    }
    let mut canonical = s.canonical.0.clone();
    canonical.resize(new, 1);
    SurfaceModel {
        name: format!("Bl_{k}({})", s.name),
        basis,
        gram,
        canonical: DivisorClass(canonical),
        euler: s.euler + k as i64,
        chi_structure: s.chi_structure,
    }
}

/// Arithmetic genus from `2g - 2 = D.(D + K)`.
pub fn adjunction_genus(d: &DivisorClass, s: &SurfaceModel) -> Result<i64, SurfaceError> {
    let value = intersect(d, &d.plus(&s.canonical), s)?;
    if value % 2 != 0 {
        return Err(SurfaceError::OddAdjunction(value));
    }
    Ok(value / 2 + 1)
}

/// Euler number and second Betti number from Noether's formula, for a
/// connected surface with `b1 = 0`.
pub fn noether_b2(k_squared: i64, chi_structure: i64) -> (i64, i64) {
    Formulas::STANDARD.noether_b2(k_squared, chi_structure)
}

impl Formulas {
    pub fn noether_b2(&self, k_squared: i64, chi_structure: i64) -> (i64, i64) {
        let euler = self.noether_weight * chi_structure - k_squared;
        (euler, euler - 2)
    }
}
