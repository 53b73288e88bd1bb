use super::hodge::{HodgeReport, Provenance};
use super::ThreefoldError;
use crate::curve::{character_dimension, BranchData};
use crate::Formulas;

/// Bookkeeping for the quotient `M = S~ / (Z/3)` of a K3 surface `S` blown up
/// at `exceptional_count` points, with `phi^* K_M ~ -2D - E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z3Ledger {
    /// `D^2` for the fixed curve `D` on the K3 surface.
    pub d_self_int: i64,
    pub exceptional_count: i64,
    /// `h^{1,1}` of the blown-up K3 surface.
    pub h11_stilde: i64,
    pub phi_k_squared: i64,
    pub k_squared: i64,
    pub euler_m: i64,
    pub b2_m: i64,
    /// `h^{1,1}(S)` split by the characters `1, xi, xi^2` of the action.
    pub h11_split: [i64; 3],
    pub resolution_h11: i64,
    /// `h^{1,0}` of the auxiliary curve in the characters `xi` and `xi^2`.
    pub curve_eigen: (u32, u32),
    pub provenance: Vec<Provenance>,
}

/// The Fermat cubic as the cyclic triple cover `y^3 = x^3 - 1`.
pub fn fermat_cubic() -> BranchData {
    BranchData::generic(3, &[(3, 1)]).expect("valid branch data")
}

pub fn z3_surface_ledger(
    d_self_int: i64,
    exceptional_count: i64,
) -> Result<Z3Ledger, ThreefoldError> {
    Formulas::STANDARD.z3_surface_ledger(d_self_int, exceptional_count)
}

pub fn z3_surface_ledger_with_curve(
    d_self_int: i64,
    exceptional_count: i64,
    curve: &BranchData,
) -> Result<Z3Ledger, ThreefoldError> {
    Formulas::STANDARD.z3_surface_ledger_with_curve(d_self_int, exceptional_count, curve)
}

pub fn z3_cy3_hodge(
    ledger: &Z3Ledger,
    h11_0_curve: i64,
    resolution_h11: i64,
    h10_1_curve: i64,
) -> Result<HodgeReport, ThreefoldError> {
    Formulas::STANDARD.z3_cy3_hodge(ledger, h11_0_curve, resolution_h11, h10_1_curve)
}

impl Formulas {
    pub fn z3_surface_ledger(
        &self,
        d_self_int: i64,
        exceptional_count: i64,
    ) -> Result<Z3Ledger, ThreefoldError> {
        self.z3_surface_ledger_with_curve(d_self_int, exceptional_count, &fermat_cubic())
    }

    pub fn z3_surface_ledger_with_curve(
        &self,
        d_self_int: i64,
        exceptional_count: i64,
        curve: &BranchData,
    ) -> Result<Z3Ledger, ThreefoldError> {
        if exceptional_count < 0 {
            return Err(ThreefoldError::NegativeInput("exceptional_count"));
        }
        if curve.degree() as i64 != self.quotient_degree {
            return Err(ThreefoldError::InconsistentLedger(format!(
                "auxiliary curve is a degree {} cover, expected {}",
                curve.degree(),
                self.quotient_degree
            )));
        }
        // (-2D - E)^2 with D and the E_i orthogonal, E_i^2 = -1
        let phi_k_squared = 4 * d_self_int - exceptional_count;
        if phi_k_squared % self.quotient_degree != 0 {
            return Err(ThreefoldError::InconsistentLedger(format!(
                "(phi^*K_M)^2 = {phi_k_squared} is not divisible by {}",
                self.quotient_degree
            )));
        }
        let k_squared = phi_k_squared / self.quotient_degree;
        let (euler_m, b2_m) = self.noether_b2(k_squared, 1);
        let h11_stilde = self.k3_h11 + exceptional_count;
        let invariant = b2_m - exceptional_count;
        let rest = h11_stilde - b2_m;
        if rest % 2 != 0 || rest < 0 || invariant < 0 {
            return Err(ThreefoldError::InconsistentLedger(format!(
                "cannot split h11 = {} with b2(M) = {b2_m}",
                self.k3_h11
            )));
        }
        let curve_eigen = (character_dimension(curve, 1), character_dimension(curve, 2));
        let inputs = format!("D^2={d_self_int}, #E={exceptional_count}");
        Ok(Z3Ledger {
            d_self_int,
            exceptional_count,
            h11_stilde,
            phi_k_squared,
            k_squared,
            euler_m,
            b2_m,
            h11_split: [invariant, rest / 2, rest / 2],
            resolution_h11: 18,
            curve_eigen,
            provenance: vec![
                Provenance::new("(phi^*K_M)^2", "4 D^2 - #E", inputs.clone()),
                Provenance::new(
                    "K_M^2",
                    "(phi^*K_M)^2 / 3",
                    format!("(phi^*K_M)^2={phi_k_squared}"),
                ),
                Provenance::new(
                    "b2(M)",
                    "12 chi - K_M^2 - 2",
                    format!("K_M^2={k_squared}, chi=1"),
                ),
                Provenance::new(
                    "h11_0(S)",
                    "b2(M) - #E",
                    format!("b2(M)={b2_m}, #E={exceptional_count}"),
                ),
                Provenance::new(
                    "h11_1(S) = h11_2(S)",
                    "(20 + #E - b2(M)) / 2",
                    format!("b2(M)={b2_m}"),
                ),
            ],
        })
    }

    pub fn z3_cy3_hodge(
        &self,
        ledger: &Z3Ledger,
        h11_0_curve: i64,
        resolution_h11: i64,
        h10_1_curve: i64,
    ) -> Result<HodgeReport, ThreefoldError> {
        for (name, v) in [
            ("h11_0_curve", h11_0_curve),
            ("resolution_h11", resolution_h11),
            ("h10_1_curve", h10_1_curve),
        ] {
            if v < 0 {
                return Err(ThreefoldError::NegativeInput(name));
            }
        }
        let [h0, _, h2] = ledger.h11_split;
        let h11 = h0 + h11_0_curve + resolution_h11;
        let h21 = h10_1_curve * h2;
        let mut provenance = ledger.provenance.clone();
        provenance.push(Provenance::new(
            "h11",
            "h11_0(S) + h11_0(curve) + resolution",
            format!("{h0} + {h11_0_curve} + {resolution_h11}"),
        ));
        provenance.push(Provenance::new(
            "h21",
            "h10_1(curve) * h11_2(S)",
            format!("{h10_1_curve} * {h2}"),
        ));
        provenance.push(Provenance::new(
            "resolution",
            "12 copies of P^2 and 6 rational ruled surfaces",
            "taken as input",
        ));
        HodgeReport::new(h11, h21, provenance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{blow_up, k3_lattice_stub};

    #[test]
    fn standard_ledger() {
        let l = z3_surface_ledger(-2, 4).unwrap();
        assert_eq!(l.phi_k_squared, -12);
        assert_eq!(l.k_squared, -4);
        assert_eq!(l.b2_m, 14);
        assert_eq!(l.euler_m, 16);
        assert_eq!(l.h11_split, [10, 5, 5]);
        assert_eq!(l.h11_stilde, 24);
        assert_eq!(l.curve_eigen, (1, 0));
    }

    #[test]
    fn alternate_exceptional_count() {
        let l = z3_surface_ledger(-2, 1).unwrap();
        assert_eq!((l.phi_k_squared, l.k_squared, l.b2_m), (-9, -3, 13));
        assert_eq!(l.h11_split, [12, 4, 4]);
    }

    #[test]
    fn phi_k_squared_matches_the_blown_up_lattice() {
        // -2D - E on the stub lattice, where D^2 = -2
        for count in 0..8u32 {
            let s = blow_up(&k3_lattice_stub(), count);
            let mut coeffs = vec![0; s.rank()];
            coeffs[1] = -2;
            for c in coeffs.iter_mut().skip(2) {
                *c = -1;
            }
            let v = s.class(&coeffs).unwrap();
            let sq = crate::surface::intersect(&v, &v, &s).unwrap();
            assert_eq!(sq, 4 * -2 - count as i64);
        }
    }

    #[test]
    fn scan_exceptional_counts() {
        for count in 0..=8 {
            match z3_surface_ledger(-2, count) {
                Ok(l) => {
                    assert_eq!(l.k_squared * 3, l.phi_k_squared);
                    assert_eq!(12, l.k_squared + l.euler_m);
                    assert_eq!(l.h11_split.iter().sum::<i64>(), 20);
                    assert_eq!(l.h11_split[1], l.h11_split[2]);
                    assert_eq!(l.h11_stilde, 20 + count);
                }
                Err(e) => assert!(matches!(e, ThreefoldError::InconsistentLedger(_))),
            }
        }
        assert!(z3_surface_ledger(-2, 0).is_err());
        assert!(z3_surface_ledger(-2, 2).is_err());
        assert!(z3_surface_ledger(-2, -1).is_err());
    }

    #[test]
    fn hodge_numbers() {
        let l = z3_surface_ledger(-2, 4).unwrap();
        let r = z3_cy3_hodge(&l, 1, 18, 1).unwrap();
        assert_eq!((r.h11, r.h21, r.euler), (29, 5, 48));
        let r = z3_cy3_hodge(&l, 1, 0, 1).unwrap();
        assert_eq!((r.h11, r.h21), (11, 5));
        let r = z3_cy3_hodge(&l, 1, 18, 0).unwrap();
        assert_eq!((r.h11, r.h21), (29, 0));
        assert!(z3_cy3_hodge(&l, 1, -1, 1).is_err());
    }

    #[test]
    fn curve_eigenspaces_feed_the_hodge_numbers() {
        let l = z3_surface_ledger(-2, 4).unwrap();
        let r = z3_cy3_hodge(&l, 1, l.resolution_h11, l.curve_eigen.0 as i64).unwrap();
        assert_eq!((r.h11, r.h21), (29, 5));
    }

    #[test]
    fn wrong_degree_curve_is_rejected() {
        let c = BranchData::generic(4, &[(8, 1)]).unwrap();
        assert!(z3_surface_ledger_with_curve(-2, 4, &c).is_err());
    }
}
