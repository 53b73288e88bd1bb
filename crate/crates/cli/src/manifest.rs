//! Manifest schema. One array of tables per construction kind; every entry
//! has an `id`, an optional `section`, and an optional `expect` table whose
//! keys become check records.

use std::collections::HashSet;

use serde::Deserialize;

use crate::expr::{parse_expr, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ManifestError {
    #[error("{0}")]
    Toml(String),
    #[error("entry `{id}`: {message}")]
    Invalid { id: String, message: String },
    #[error("entry `{id}`, field `{field}`: {error}")]
    Expression {
        id: String,
        field: String,
        error: ParseError,
    },
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub curve: Vec<CurveEntry>,
    #[serde(default)]
    pub elliptic: Vec<EllipticEntry>,
    #[serde(default)]
    pub surface: Vec<SurfaceEntry>,
    #[serde(default)]
    pub noether: Vec<NoetherEntry>,
    #[serde(default)]
    pub double_cover: Vec<DoubleCoverEntry>,
    #[serde(default)]
    pub borcea_voisin: Vec<BorceaVoisinEntry>,
    #[serde(default)]
    pub catalog: Vec<CatalogManifestEntry>,
    #[serde(default)]
    pub rational_map: Vec<RationalMapEntry>,
    #[serde(default)]
    pub fixed_locus: Vec<FixedLocusEntry>,
    #[serde(default)]
    pub z3: Vec<Z3Entry>,
}

/// Expected value that may be written as an integer or as an exact literal.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum ExactLiteral {
    Int(i64),
    Expr(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    /// An exact literal, or `inf`.
    pub at: String,
    pub exp: i64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenericPoints {
    pub count: usize,
    pub exp: i64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveEntry {
    pub id: String,
    pub section: Option<String>,
    pub provenance: Option<String>,
    pub m: i64,
    #[serde(default)]
    pub points: Vec<PointSpec>,
    #[serde(default)]
    pub generic: Vec<GenericPoints>,
    #[serde(default)]
    pub expect: CurveExpect,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveExpect {
    pub genus: Option<i64>,
    pub eigen: Option<Vec<i64>>,
    pub cm: Option<bool>,
    pub fermat_degree: Option<i64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EllipticEntry {
    pub id: String,
    pub section: Option<String>,
    pub provenance: Option<String>,
    /// `y^2 = x^3 + a x + b`.
    pub a: Option<String>,
    pub b: Option<String>,
    /// `y^2 = x (x - 1) (x - lambda)`.
    pub lambda: Option<String>,
    /// `y^2 = (x - r1) (x - r2) (x - r3)`.
    pub roots: Option<Vec<String>>,
    /// `y^4 = x (x - 1)^2`.
    #[serde(default)]
    pub quartic_e: bool,
    #[serde(default)]
    pub expect: EllipticExpect,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EllipticExpect {
    pub j: Option<ExactLiteral>,
}

/// Base surface: `plane`, `k3`, or `ruled` with `n`, then `blowups` points.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseSpec {
    pub kind: String,
    pub n: Option<u32>,
    #[serde(default)]
    pub blowups: u32,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceEntry {
    pub id: String,
    pub section: Option<String>,
    pub provenance: Option<String>,
    pub base: BaseSpec,
    pub class: Option<Vec<i64>>,
    /// Second class for `intersection`; defaults to `class`.
    pub other: Option<Vec<i64>>,
    #[serde(default)]
    pub expect: SurfaceExpect,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceExpect {
    pub intersection: Option<i64>,
    pub genus: Option<i64>,
    pub k_squared: Option<i64>,
    pub euler: Option<i64>,
    pub noether: Option<bool>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoetherEntry {
    pub id: String,
    pub section: Option<String>,
    pub provenance: Option<String>,
    pub k_squared: i64,
    pub chi: i64,
    #[serde(default)]
    pub expect: NoetherExpect,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoetherExpect {
    pub euler: Option<i64>,
    pub b2: Option<i64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DoubleCoverEntry {
    pub id: String,
    pub section: Option<String>,
    pub provenance: Option<String>,
    pub base: BaseSpec,
    pub branch: Vec<i64>,
    pub branch_genus: Option<i64>,
    #[serde(default)]
    pub expect: DoubleCoverExpect,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DoubleCoverExpect {
    pub anticanonical: Option<bool>,
    pub branch_genus: Option<i64>,
    pub euler: Option<i64>,
    pub k3: Option<bool>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BorceaVoisinEntry {
    pub id: String,
    pub section: Option<String>,
    pub provenance: Option<String>,
    /// Number of fixed curves.
    #[serde(rename = "N")]
    pub n: i64,
    pub genera: Vec<u32>,
    #[serde(default)]
    pub isolated_points: u32,
    #[serde(default)]
    pub expect: HodgeExpect,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HodgeExpect {
    pub h11: Option<i64>,
    pub h21: Option<i64>,
    pub euler: Option<i64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogK3 {
    pub id: String,
    pub genera: Vec<u32>,
    #[serde(default)]
    pub isolated_points: u32,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogManifestEntry {
    pub id: String,
    pub section: Option<String>,
    pub provenance: Option<String>,
    pub k3: Vec<CatalogK3>,
    /// Ids of `elliptic` entries.
    pub elliptic: Vec<String>,
    #[serde(default)]
    pub expect: CatalogExpect,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogExpect {
    pub count: Option<i64>,
    /// Common `[h11, h21]` of every entry.
    pub hodge: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalMapEntry {
    pub id: String,
    pub section: Option<String>,
    pub provenance: Option<String>,
    /// `literal`, `twisted`, `inverted` or `twisted_then_gamma`.
    pub variant: String,
    #[serde(default)]
    pub expect: RationalMapExpect,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalMapExpect {
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedLocusEntry {
    pub id: String,
    pub section: Option<String>,
    pub provenance: Option<String>,
    pub order: u32,
    pub weights: Vec<i64>,
    /// Order of the cyclotomic domain for coordinates.
    pub domain: u32,
    pub variables: Vec<String>,
    pub equation: String,
    /// Equation every isolated fixed point is checked against.
    pub relation: Option<String>,
    #[serde(default)]
    pub expect: FixedLocusExpect,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedLocusExpect {
    pub points: Option<i64>,
    pub curves: Option<i64>,
    pub unresolved: Option<i64>,
    pub relation_holds: Option<bool>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Z3Entry {
    pub id: String,
    pub section: Option<String>,
    pub provenance: Option<String>,
    pub d2: i64,
    pub exceptional: i64,
    #[serde(default = "default_resolution")]
    pub resolution_h11: i64,
    /// Auxiliary curve; only `fermat3` is known.
    #[serde(default = "default_curve")]
    pub curve: String,
    #[serde(default = "default_h11_curve")]
    pub h11_0_curve: i64,
    #[serde(default)]
    pub expect: Z3Expect,
}

fn default_resolution() -> i64 {
    18
}

fn default_curve() -> String {
    "fermat3".into()
}

fn default_h11_curve() -> i64 {
    1
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Z3Expect {
    pub phi_k_squared: Option<i64>,
    pub k_squared: Option<i64>,
    pub euler: Option<i64>,
    pub b2: Option<i64>,
    pub split: Option<Vec<i64>>,
    pub h11: Option<i64>,
    pub h21: Option<i64>,
}

/// Id, provenance and whether any expectation is present, for validation.
struct EntryMeta<'a> {
    id: &'a str,
    provenance: Option<&'a str>,
    expects: bool,
}

macro_rules! meta {
    ($e:expr, $($field:ident),*) => {
        EntryMeta {
            id: &$e.id,
            provenance: $e.provenance.as_deref(),
            expects: false $(|| $e.expect.$field.is_some())*,
        }
    };
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest, ManifestError> {
        let m: Manifest = toml::from_str(text).map_err(|e| ManifestError::Toml(e.to_string()))?;
        m.validate()?;
        Ok(m)
    }

    pub fn is_empty(&self) -> bool {
        self.metas().is_empty()
    }

    fn metas(&self) -> Vec<EntryMeta<'_>> {
        let mut out = Vec::new();
        out.extend(
            self.curve
                .iter()
                .map(|e| meta!(e, genus, eigen, cm, fermat_degree)),
        );
        out.extend(self.elliptic.iter().map(|e| meta!(e, j)));
        out.extend(
            self.surface
                .iter()
                .map(|e| meta!(e, intersection, genus, k_squared, euler, noether)),
        );
        out.extend(self.noether.iter().map(|e| meta!(e, euler, b2)));
        out.extend(
            self.double_cover
                .iter()
                .map(|e| meta!(e, anticanonical, branch_genus, euler, k3)),
        );
        out.extend(self.borcea_voisin.iter().map(|e| meta!(e, h11, h21, euler)));
        out.extend(self.catalog.iter().map(|e| meta!(e, count, hodge)));
        out.extend(self.rational_map.iter().map(|e| meta!(e, holds)));
        out.extend(
            self.fixed_locus
                .iter()
                .map(|e| meta!(e, points, curves, unresolved, relation_holds)),
        );
        out.extend(
            self.z3
                .iter()
                .map(|e| meta!(e, phi_k_squared, k_squared, euler, b2, split, h11, h21)),
        );
        out
    }

    fn validate(&self) -> Result<(), ManifestError> {
        let invalid = |id: &str, message: String| ManifestError::Invalid {
            id: id.to_string(),
            message,
        };
        let mut seen = HashSet::new();
        for m in self.metas() {
            if !seen.insert(m.id) {
                return Err(invalid(m.id, "duplicate id".into()));
            }
            if m.expects && m.provenance.is_none_or(|p| p.trim().is_empty()) {
                return Err(invalid(
                    m.id,
                    "expected values need a provenance note".into(),
                ));
            }
        }
        let expression = |id: &str, field: &str, text: &str| {
            parse_expr(text)
                .map(|_| ())
                .map_err(|error| ManifestError::Expression {
                    id: id.to_string(),
                    field: field.to_string(),
                    error,
                })
        };

        for c in &self.curve {
            for p in &c.points {
                if p.at != "inf" {
                    expression(&c.id, "points.at", &p.at)?;
                }
            }
        }
        for e in &self.elliptic {
            let forms = [
                e.a.is_some() || e.b.is_some(),
                e.lambda.is_some(),
                e.roots.is_some(),
                e.quartic_e,
            ];
            if forms.iter().filter(|&&f| f).count() != 1 {
                return Err(invalid(
                    &e.id,
                    "give exactly one of `a`/`b`, `lambda`, `roots`, `quartic_e`".into(),
                ));
            }
            if (e.a.is_some() || e.b.is_some()) && (e.a.is_none() || e.b.is_none()) {
                return Err(invalid(&e.id, "`a` and `b` go together".into()));
            }
            for (field, text) in [("a", &e.a), ("b", &e.b), ("lambda", &e.lambda)] {
                if let Some(t) = text {
                    expression(&e.id, field, t)?;
                }
            }
            if let Some(roots) = &e.roots {
                if roots.len() != 3 {
                    return Err(invalid(&e.id, "`roots` needs three entries".into()));
                }
                for r in roots {
                    expression(&e.id, "roots", r)?;
                }
            }
            if let Some(ExactLiteral::Expr(t)) = &e.expect.j {
                expression(&e.id, "expect.j", t)?;
            }
        }
        for s in &self.surface {
            check_base(&s.id, &s.base)?;
        }
        for d in &self.double_cover {
            check_base(&d.id, &d.base)?;
        }
        for b in &self.borcea_voisin {
            if b.n < 0 || b.genera.len() as i64 != b.n {
                return Err(invalid(
                    &b.id,
                    format!("N = {} but {} genera given", b.n, b.genera.len()),
                ));
            }
        }
        let elliptic_ids: HashSet<&str> = self.elliptic.iter().map(|e| e.id.as_str()).collect();
        for c in &self.catalog {
            if let Some(missing) = c
                .elliptic
                .iter()
                .find(|id| !elliptic_ids.contains(id.as_str()))
            {
                return Err(invalid(
                    &c.id,
                    format!("unknown elliptic entry `{missing}`"),
                ));
            }
        }
        for r in &self.rational_map {
            if crate::runner::map_variant(&r.variant).is_none() {
                return Err(invalid(&r.id, format!("unknown variant `{}`", r.variant)));
            }
        }
        for f in &self.fixed_locus {
            if f.domain == 0 || f.order == 0 {
                return Err(invalid(&f.id, "orders must be positive".into()));
            }
            expression(&f.id, "equation", &f.equation)?;
            if let Some(r) = &f.relation {
                expression(&f.id, "relation", r)?;
            }
        }
        for z in &self.z3 {
            if z.curve != "fermat3" {
                return Err(invalid(&z.id, format!("unknown curve `{}`", z.curve)));
            }
        }
        Ok(())
    }
}

fn check_base(id: &str, base: &BaseSpec) -> Result<(), ManifestError> {
    let ok = match base.kind.as_str() {
        "ruled" => base.n.is_some(),
        "plane" | "k3" => base.n.is_none(),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(ManifestError::Invalid {
            id: id.to_string(),
            message: format!(
                "base `{}` must be `plane`, `k3`, or `ruled` with `n`",
                base.kind
            ),
        })
    }
}
