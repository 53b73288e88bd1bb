/// Integer constants that appear in the closed-form invariants.
///
/// Every public calculator uses [`Formulas::STANDARD`]. Callers that want to
/// check that a verification suite actually detects a corrupted formula can
/// evaluate through a modified copy (mutation testing).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Formulas {
    /// `j = 1728 * 4a^3 / (4a^3 + 27b^2)`
    pub j_scale: i64,
    /// Coefficient of `a^3` in the Weierstrass discriminant.
    pub disc_a3: i64,
    /// Coefficient of `b^2` in the Weierstrass discriminant.
    pub disc_b2: i64,
    /// `j(lambda) = 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2)`
    pub legendre_scale: i64,
    /// `12 chi(O) = K^2 + e`
    pub noether_weight: i64,
    /// Euler number of a K3 surface.
    pub k3_euler: i64,
    /// `h^{1,1}` of a K3 surface.
    pub k3_h11: i64,
    /// Degree of the cyclic quotient map in the order-3 construction.
    pub quotient_degree: i64,
    /// `h^{1,1} = base + weight*N - N'`, `h^{2,1} = base + weight*N' - N`
    pub bv_base: i64,
    pub bv_weight: i64,
}

impl Formulas {
    pub const STANDARD: Formulas = Formulas {
        j_scale: 1728,
        disc_a3: 4,
        disc_b2: 27,
        legendre_scale: 256,
        noether_weight: 12,
        k3_euler: 24,
        k3_h11: 20,
        quotient_degree: 3,
        bv_base: 11,
        bv_weight: 5,
    };
}

impl Default for Formulas {
    fn default() -> Self {
        Self::STANDARD
    }
}
