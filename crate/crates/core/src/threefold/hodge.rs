use std::fmt;

use super::ThreefoldError;
use crate::elliptic::EllipticModel;
use crate::Formulas;

/// Fixed locus of an involution on a K3 surface: smooth curves of the given
/// genera plus isolated points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedLocusData {
    pub genera: Vec<u32>,
    pub isolated_points: u32,
}

impl FixedLocusData {
    /// Fixed locus of a non-symplectic involution (no isolated points).
    pub fn curves(genera: &[u32]) -> Self {
        FixedLocusData {
            genera: genera.to_vec(),
            isolated_points: 0,
        }
    }

    /// Number `N` of fixed curves.
    pub fn curve_count(&self) -> u32 {
        self.genera.len() as u32
    }

    /// `N' = g_1 + ... + g_N`.
    pub fn genus_sum(&self) -> u32 {
        self.genera.iter().sum()
    }
}

/// One line of the derivation of a Hodge number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub quantity: String,
    pub formula: String,
    pub inputs: String,
}

impl Provenance {
    pub(crate) fn new(quantity: &str, formula: &str, inputs: impl Into<String>) -> Self {
        Provenance {
            quantity: quantity.into(),
            formula: formula.into(),
            inputs: inputs.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeReport {
    pub h11: i64,
    pub h21: i64,
    /// `2 (h11 - h21)`
    pub euler: i64,
    pub provenance: Vec<Provenance>,
}

impl HodgeReport {
    pub(crate) fn new(
        h11: i64,
        h21: i64,
        provenance: Vec<Provenance>,
    ) -> Result<Self, ThreefoldError> {
        if h11 < 1 || h21 < 0 {
            return Err(ThreefoldError::InvalidFixedLocus(format!(
                "Hodge numbers h11={h11}, h21={h21} out of range"
            )));
        }
        Ok(HodgeReport {
            h11,
            h21,
            euler: 2 * (h11 - h21),
            provenance,
        })
    }
}

impl fmt::Display for HodgeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h11={} h21={}", self.h11, self.h21)
    }
}

/// Hodge numbers of the Borcea-Voisin threefold built from a K3 surface whose
/// non-symplectic involution fixes `N` curves of total genus `N'`.
pub fn borcea_voisin(n: i64, n_prime: i64) -> Result<HodgeReport, ThreefoldError> {
    Formulas::STANDARD.borcea_voisin(n, n_prime)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub k3_id: String,
    pub elliptic_index: usize,
    pub report: HodgeReport,
}

/// One Borcea-Voisin threefold per (K3, elliptic curve) pair. The Hodge
/// numbers depend only on the K3 fixed locus.
pub fn cy3_catalog(
    k3_entries: &[(String, FixedLocusData)],
    elliptic_entries: &[EllipticModel],
) -> Result<Vec<CatalogEntry>, ThreefoldError> {
    Formulas::STANDARD.cy3_catalog(k3_entries, elliptic_entries)
}

impl Formulas {
    pub fn borcea_voisin(&self, n: i64, n_prime: i64) -> Result<HodgeReport, ThreefoldError> {
        if n < 0 {
            return Err(ThreefoldError::NegativeInput("N"));
        }
        if n_prime < 0 {
            return Err(ThreefoldError::NegativeInput("N'"));
        }
        let h11 = self.bv_base + self.bv_weight * n - n_prime;
        let h21 = self.bv_base + self.bv_weight * n_prime - n;
        let inputs = format!("N={n}, N'={n_prime}");
        HodgeReport::new(
            h11,
            h21,
            vec![
                Provenance::new("h11", "11 + 5N - N'", inputs.clone()),
                Provenance::new("h21", "11 + 5N' - N", inputs),
            ],
        )
    }

    pub fn borcea_voisin_locus(
        &self,
        locus: &FixedLocusData,
    ) -> Result<HodgeReport, ThreefoldError> {
        if locus.isolated_points != 0 {
            return Err(ThreefoldError::InvalidFixedLocus(format!(
                "{} isolated fixed points; a non-symplectic involution fixes only curves",
                locus.isolated_points
            )));
        }
        self.borcea_voisin(locus.curve_count() as i64, locus.genus_sum() as i64)
    }

    pub fn cy3_catalog(
        &self,
        k3_entries: &[(String, FixedLocusData)],
        elliptic_entries: &[EllipticModel],
    ) -> Result<Vec<CatalogEntry>, ThreefoldError> {
        let mut out = Vec::with_capacity(k3_entries.len() * elliptic_entries.len());
        for (k3_id, locus) in k3_entries {
            let report = self.borcea_voisin_locus(locus)?;
            for elliptic_index in 0..elliptic_entries.len() {
                out.push(CatalogEntry {
                    k3_id: k3_id.clone(),
                    elliptic_index,
                    report: report.clone(),
                });
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Scalar;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let r = borcea_voisin(1, 9).unwrap();
        assert_eq!((r.h11, r.h21, r.euler), (7, 55, -96));
        let r = borcea_voisin(1, 10).unwrap();
        assert_eq!((r.h11, r.h21), (6, 60));
        let r = borcea_voisin(0, 0).unwrap();
        assert_eq!((r.h11, r.h21, r.euler), (11, 11, 0));
    }

    #[test]
    fn out_of_range_hodge_numbers_are_rejected() {
        assert!(matches!(
            borcea_voisin(0, 11),
            Err(ThreefoldError::InvalidFixedLocus(_))
        ));
        assert_eq!(
            borcea_voisin(-1, 0),
            Err(ThreefoldError::NegativeInput("N"))
        );
    }

    #[test]
    fn printed_hodge_numbers_force_one_fixed_curve() {
        // solve 11 + 5N - N' = h11, 11 + 5N' - N = h21 over the integers
        for ((h11, h21), genus) in [((7, 55), 9), ((6, 60), 10)] {
            let a = h11 - 11;
            let b = h21 - 11;
            // 5N - N' = a, -N + 5N' = b
            let n = (5 * a + b) / 24;
            let n_prime = (a + 5 * b) / 24;
            assert_eq!((5 * a + b) % 24, 0);
            assert_eq!((a + 5 * b) % 24, 0);
            assert_eq!((n, n_prime), (1, genus));
        }
    }

    #[test]
    fn isolated_points_are_rejected() {
        let locus = FixedLocusData {
            genera: vec![9],
            isolated_points: 2,
        };
        assert!(Formulas::STANDARD.borcea_voisin_locus(&locus).is_err());
    }

    #[test]
    fn catalog_is_a_cartesian_product() {
        let curves = vec![
            EllipticModel::short_weierstrass(Scalar::from_int(0), Scalar::from_int(-1)).unwrap(),
            EllipticModel::quartic_e(),
        ];
        let k3s = vec![
            ("a".to_string(), FixedLocusData::curves(&[9])),
            ("b".to_string(), FixedLocusData::curves(&[10])),
        ];
        let cat = cy3_catalog(&k3s, &curves).unwrap();
        assert_eq!(cat.len(), 4);
        assert_eq!(cat[1].k3_id, "a");
        assert_eq!((cat[3].report.h11, cat[3].report.h21), (6, 60));
        assert!(cy3_catalog(&k3s, &[]).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn mirror_symmetry_of_the_formula(n in 0i64..12, n_prime in 0i64..12) {
            let Ok(r) = borcea_voisin(n, n_prime) else { return Ok(()); };
            // the mirror data solves 5x - y = 5N' - N, 5y - x = 5N - N'
            let (a, b) = (5 * n_prime - n, 5 * n - n_prime);
            let det = 24;
            prop_assert_eq!((5 * a + b) % det, 0);
            prop_assert_eq!((a + 5 * b) % det, 0);
            let (x, y) = ((5 * a + b) / det, (a + 5 * b) / det);
            if r.h21 == 0 {
                prop_assert!(borcea_voisin(x, y).is_err());
                return Ok(());
            }
            let m = borcea_voisin(x, y).unwrap();
            prop_assert_eq!((m.h11, m.h21), (r.h21, r.h11));
            prop_assert_eq!(r.euler, 2 * (r.h11 - r.h21));
            prop_assert_eq!(r.euler % 2, 0);
        }
    }
}
