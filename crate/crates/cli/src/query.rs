//! One-shot computations from command-line arguments.

use cymcm_core::curve::{
    eigenspace_dims, fermat_cover_cm, genus, normalize_branch_data, BranchData, CmOutcome,
    PointLocation,
};
use cymcm_core::elliptic::EllipticModel;
use cymcm_core::surface::adjunction_genus;
use cymcm_core::threefold::FixedLocusData;
use cymcm_core::Formulas;

use crate::expr::parse_scalar;
use crate::manifest::BaseSpec;
use crate::report::Value;
use crate::runner::base_surface;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct QueryError(pub String);

fn q(e: impl std::fmt::Display) -> QueryError {
    QueryError(e.to_string())
}

/// Branch points written as comma-separated items: `NxE` for `N` generic
/// points of exponent `E`, `LITERAL:E` for a finite point, `inf:E` for
/// infinity.
pub fn parse_points(m: i64, spec: &str) -> Result<BranchData, QueryError> {
    let mut raw = Vec::new();
    let mut label = 0;
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((at, exp)) = item.rsplit_once(':') {
            let exp: i64 = exp
                .trim()
                .parse()
                .map_err(|_| QueryError(format!("bad exponent in `{item}`")))?;
            let location = match at.trim() {
                "inf" => PointLocation::Infinity,
                t => PointLocation::Finite(parse_scalar(t).map_err(|e| q(format!("`{t}`: {e}")))?),
            };
            raw.push((location, exp));
        } else if let Some((count, exp)) = item.split_once('x') {
            let count: usize = count
                .trim()
                .parse()
                .map_err(|_| QueryError(format!("bad count in `{item}`")))?;
            let exp: i64 = exp
                .trim()
                .parse()
                .map_err(|_| QueryError(format!("bad exponent in `{item}`")))?;
            for _ in 0..count {
                label += 1;
                raw.push((PointLocation::Symbolic(format!("q{label}")), exp));
            }
        } else {
            return Err(QueryError(format!(
                "point `{item}` is neither `NxE` nor `LITERAL:E`"
            )));
        }
    }
    normalize_branch_data(m, raw).map_err(q)
}

pub fn genus_of(m: i64, points: &str) -> Result<String, QueryError> {
    Ok(genus(&parse_points(m, points)?).to_string())
}

pub fn eigen_of(m: i64, points: &str) -> Result<String, QueryError> {
    Ok(Value::list(&eigenspace_dims(&parse_points(m, points)?)).to_string())
}

pub fn cm_of(m: i64, points: &str) -> Result<String, QueryError> {
    Ok(
        match fermat_cover_cm(&parse_points(m, points)?).map_err(q)? {
            CmOutcome::Witness(w) => format!(
                "witness fermat_degree={} normalization={}",
                w.fermat_degree, w.normalization
            ),
            CmOutcome::NoMatch => "no match".into(),
        },
    )
}

pub enum JInput<'a> {
    Weierstrass(&'a str, &'a str),
    Legendre(&'a str),
    Roots(&'a str),
    QuarticE,
}

pub fn j_of(input: JInput<'_>, formulas: &Formulas) -> Result<String, QueryError> {
    let s = |t: &str| parse_scalar(t).map_err(|e| q(format!("`{t}`: {e}")));
    let model = match input {
        JInput::Weierstrass(a, b) => EllipticModel::short_weierstrass(s(a)?, s(b)?),
        JInput::Legendre(l) => EllipticModel::legendre(s(l)?),
        JInput::Roots(r) => {
            let roots = r.split(',').map(s).collect::<Result<Vec<_>, _>>()?;
            let [a, b, c]: [_; 3] = roots
                .try_into()
                .map_err(|_| QueryError("`--roots` needs three comma-separated values".into()))?;
            EllipticModel::three_roots([a, b, c])
        }
        JInput::QuarticE => Ok(EllipticModel::quartic_e()),
    }
    .map_err(q)?;
    Ok(Value::scalar(&model.j_exact_with(formulas).map_err(q)?).to_string())
}

pub fn parse_int_list(text: &str) -> Result<Vec<i64>, QueryError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| QueryError(format!("`{s}` is not an integer")))
        })
        .collect()
}

pub fn bv_of(n: i64, genera: &str, formulas: &Formulas) -> Result<String, QueryError> {
    let genera = parse_int_list(genera)?
        .into_iter()
        .map(|g| u32::try_from(g).map_err(|_| QueryError(format!("negative genus {g}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if genera.len() as i64 != n {
        return Err(QueryError(format!(
            "N = {n} but {} genera given",
            genera.len()
        )));
    }
    let r = formulas
        .borcea_voisin_locus(&FixedLocusData::curves(&genera))
        .map_err(q)?;
    Ok(r.to_string())
}

pub fn noether_of(k_squared: i64, chi: i64, formulas: &Formulas) -> String {
    let (euler, b2) = formulas.noether_b2(k_squared, chi);
    format!("euler={euler} b2={b2}")
}

pub fn adjunction_of(base: &BaseSpec, class: &str) -> Result<String, QueryError> {
    let s = base_surface(base);
    let d = s.class(&parse_int_list(class)?).map_err(q)?;
    Ok(adjunction_genus(&d, &s).map_err(q)?.to_string())
}

pub fn z3_of(
    d2: i64,
    exceptional: i64,
    resolution: i64,
    h11_curve: i64,
    formulas: &Formulas,
) -> Result<String, QueryError> {
    let l = formulas.z3_surface_ledger(d2, exceptional).map_err(q)?;
    let r = formulas
        .z3_cy3_hodge(&l, h11_curve, resolution, l.curve_eigen.0 as i64)
        .map_err(q)?;
    let [a, b, c] = l.h11_split;
    Ok(format!(
        "K2={} b2={} split=({a},{b},{c}) h11={} h21={}",
        l.k_squared, l.b2_m, r.h11, r.h21
    ))
}
