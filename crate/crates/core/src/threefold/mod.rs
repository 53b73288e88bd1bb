//! Calabi-Yau threefolds: Borcea-Voisin Hodge numbers, the order-3 quotient
//! ledger, fixed loci of diagonal automorphisms and the product-to-surface
//! rational map.

mod fixed_locus;
mod hodge;
mod rational_map;
mod z3;

pub use fixed_locus::{fixed_locus_diagonal, DiagonalAutomorphism, FixedComponent};
pub use hodge::{
    borcea_voisin, cy3_catalog, CatalogEntry, FixedLocusData, HodgeReport, Provenance,
};
pub use rational_map::{quartic_k3, rational_map_check, rational_map_holds, MapVariant};
pub use z3::{z3_cy3_hodge, z3_surface_ledger, z3_surface_ledger_with_curve, Z3Ledger};

use crate::curve::CurveError;
use crate::numeric::NumericError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThreefoldError {
    #[error("invalid fixed locus: {0}")]
    InvalidFixedLocus(String),
    #[error("hypersurface is not invariant under the automorphism")]
    NotEquivariant,
    #[error("inconsistent ledger: {0}")]
    InconsistentLedger(String),
    #[error("negative input `{0}`")]
    NegativeInput(&'static str),
    #[error("automorphism acts on {weights} coordinates, hypersurface has {variables}")]
    ArityMismatch { weights: usize, variables: usize },
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}
