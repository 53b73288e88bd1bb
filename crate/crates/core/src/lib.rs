//! Exact computations behind K3 surfaces and Calabi-Yau threefolds with
//! complex multiplication built from cyclic covers of the projective line.
//!
//! - [`numeric`]: rationals, quadratic and cyclotomic fields, multivariate
//!   polynomials with exact identity checking
//! - [`curve`]: cyclic covers `y^m = prod (x - a_i)^{d_i}`, genus, eigenspaces,
//!   Fermat-cover CM criterion
//! - [`elliptic`]: exact j-invariants
//! - [`surface`]: Picard lattices of the plane, Hirzebruch surfaces, blow-ups
//!   and a K3 sublattice
//! - [`doublecover`]: K3 test for double covers branched along `-2K`
//! - [`threefold`]: Borcea-Voisin Hodge numbers and the order-3 quotient
//!   ledger, fixed loci of diagonal automorphisms, the product-to-surface map
//!
//! Everything is exact; no floating point is used anywhere.

pub mod curve;
pub mod doublecover;
pub mod elliptic;
mod formulas;
pub mod numeric;
pub mod surface;
pub mod threefold;

pub use formulas::Formulas;
