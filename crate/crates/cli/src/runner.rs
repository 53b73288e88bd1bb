//! Evaluates manifest entries against the core calculators.

use cymcm_core::curve::{
    eigenspace_dims, fermat_cover_cm, genus, normalize_branch_data, BranchData, PointLocation,
};
use cymcm_core::doublecover::DoubleCoverSpec;
use cymcm_core::elliptic::EllipticModel;
use cymcm_core::numeric::FieldElement;
use cymcm_core::surface::{
    adjunction_genus, blow_up, intersect, k3_lattice_stub, projective_plane, ruled_surface,
    DivisorClass, SurfaceModel,
};
use cymcm_core::threefold::{
    fixed_locus_diagonal, rational_map_holds, DiagonalAutomorphism, FixedComponent, FixedLocusData,
    MapVariant,
};
use cymcm_core::Formulas;

use crate::expr::{parse_expr, parse_scalar};
use crate::manifest::{
    BaseSpec, CurveEntry, EllipticEntry, ExactLiteral, FixedLocusEntry, Manifest,
};
use crate::report::{CheckRecord, Report, Value};

type Computed = Result<Value, String>;

/// Collects the records of one entry.
struct Checks<'a> {
    records: &'a mut Vec<CheckRecord>,
    id: &'a str,
    section: String,
    provenance: &'a str,
}

impl<'a> Checks<'a> {
    fn new(
        records: &'a mut Vec<CheckRecord>,
        id: &'a str,
        section: &Option<String>,
        default_section: &str,
        provenance: &'a Option<String>,
    ) -> Self {
        Checks {
            records,
            id,
            section: section
                .clone()
                .unwrap_or_else(|| default_section.to_string()),
            provenance: provenance.as_deref().unwrap_or(""),
        }
    }

    /// Adds a record when `expected` is present; `computed` is only evaluated then.
    fn check(&mut self, key: &str, expected: Option<Value>, computed: impl FnOnce() -> Computed) {
        let Some(expected) = expected else { return };
        let computed = computed().unwrap_or_else(|e| Value::Text(format!("error: {e}")));
        self.records.push(CheckRecord {
            id: format!("{}.{key}", self.id),
            section: self.section.clone(),
            pass: computed == expected,
            computed,
            expected,
            provenance: self.provenance.to_string(),
        });
    }
}

fn int(v: Option<i64>) -> Option<Value> {
    v.map(Value::Int)
}

fn boolean(v: Option<bool>) -> Option<Value> {
    v.map(Value::Bool)
}

fn list(v: &Option<Vec<i64>>) -> Option<Value> {
    v.clone().map(Value::List)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub(crate) fn map_variant(name: &str) -> Option<MapVariant> {
    Some(match name {
        "literal" => MapVariant::Literal,
        "twisted" => MapVariant::Twisted,
        "inverted" => MapVariant::Inverted,
        "twisted_then_gamma" => MapVariant::TwistedThenGamma,
        _ => return None,
    })
}

pub fn base_surface(base: &BaseSpec) -> SurfaceModel {
    let s = match (base.kind.as_str(), base.n) {
        ("ruled", Some(n)) => ruled_surface(n),
        ("k3", _) => k3_lattice_stub(),
        _ => projective_plane(),
    };
    blow_up(&s, base.blowups)
}

pub fn branch_data(entry: &CurveEntry) -> Result<BranchData, String> {
    let mut raw = Vec::new();
    for p in &entry.points {
        let location = if p.at == "inf" {
            PointLocation::Infinity
        } else {
            PointLocation::Finite(parse_scalar(&p.at).map_err(err)?)
        };
        raw.push((location, p.exp));
    }
    let mut label = 0;
    for g in &entry.generic {
        for _ in 0..g.count {
            label += 1;
            raw.push((PointLocation::Symbolic(format!("q{label}")), g.exp));
        }
    }
    normalize_branch_data(entry.m, raw).map_err(err)
}

pub fn elliptic_model(entry: &EllipticEntry) -> Result<EllipticModel, String> {
    if entry.quartic_e {
        return Ok(EllipticModel::quartic_e());
    }
    if let (Some(a), Some(b)) = (&entry.a, &entry.b) {
        let a = parse_scalar(a).map_err(err)?;
        let b = parse_scalar(b).map_err(err)?;
        return EllipticModel::short_weierstrass(a, b).map_err(err);
    }
    if let Some(l) = &entry.lambda {
        return EllipticModel::legendre(parse_scalar(l).map_err(err)?).map_err(err);
    }
    let roots = entry.roots.as_ref().ok_or("no model given")?;
    let r = roots
        .iter()
        .map(|r| parse_scalar(r).map_err(err))
        .collect::<Result<Vec<_>, _>>()?;
    EllipticModel::three_roots([r[0].clone(), r[1].clone(), r[2].clone()]).map_err(err)
}

fn exact_literal(v: &Option<ExactLiteral>) -> Option<Value> {
    v.as_ref().map(|v| match v {
        ExactLiteral::Int(n) => Value::Int(*n),
        ExactLiteral::Expr(t) => match parse_scalar(t) {
            Ok(s) => Value::scalar(&s),
            Err(_) => Value::Text(t.clone()),
        },
    })
}

fn fixed_components(entry: &FixedLocusEntry) -> Result<Vec<FixedComponent>, String> {
    let vars: Vec<&str> = entry.variables.iter().map(String::as_str).collect();
    let f = parse_expr(&entry.equation)
        .map_err(err)?
        .to_polynomial(&vars, entry.domain)
        .map_err(err)?;
    let aut = DiagonalAutomorphism::new(entry.order, &entry.weights).map_err(err)?;
    fixed_locus_diagonal(&aut, &f).map_err(err)
}

fn relation_holds(entry: &FixedLocusEntry, comps: &[FixedComponent]) -> Computed {
    let vars: Vec<&str> = entry.variables.iter().map(String::as_str).collect();
    let text = entry.relation.as_deref().ok_or("no relation given")?;
    let r = parse_expr(text)
        .map_err(err)?
        .to_polynomial(&vars, entry.domain)
        .map_err(err)?;
    for c in comps {
        if let FixedComponent::Point(p) = c {
            if !r.evaluate(p).map_err(err)?.vanishes() {
                return Ok(Value::Bool(false));
            }
        }
    }
    Ok(Value::Bool(true))
}

/// Runs every check of the manifest with the given formula constants.
/// Records follow the kind order of the schema, then file order.
pub fn run_manifest(manifest: &Manifest, formulas: &Formulas) -> Report {
    let mut records = Vec::new();

    for e in &manifest.curve {
        let mut c = Checks::new(&mut records, &e.id, &e.section, "Curves", &e.provenance);
        let b = branch_data(e);
        let x = &e.expect;
        c.check("genus", int(x.genus), || {
            Ok(Value::Int(genus(b.as_ref()?) as i64))
        });
        c.check("eigen", list(&x.eigen), || {
            Ok(Value::list(&eigenspace_dims(b.as_ref()?)))
        });
        let cm = || fermat_cover_cm(b.as_ref()?).map_err(err);
        c.check("cm", boolean(x.cm), || {
            Ok(Value::Bool(cm()?.witness().is_some()))
        });
        c.check("fermat_degree", int(x.fermat_degree), || {
            let outcome = cm()?;
            let w = outcome.witness().ok_or("no Fermat witness")?;
            Ok(Value::Int(w.fermat_degree as i64))
        });
    }

    for e in &manifest.elliptic {
        let mut c = Checks::new(
            &mut records,
            &e.id,
            &e.section,
            "Elliptic curves",
            &e.provenance,
        );
        c.check("j", exact_literal(&e.expect.j), || {
            let j = elliptic_model(e)?.j_exact_with(formulas).map_err(err)?;
            Ok(Value::scalar(&j))
        });
    }

    for e in &manifest.surface {
        let mut c = Checks::new(&mut records, &e.id, &e.section, "Surfaces", &e.provenance);
        let s = base_surface(&e.base);
        let class = || -> Result<DivisorClass, String> {
            s.class(e.class.as_ref().ok_or("no class given")?)
                .map_err(err)
        };
        let x = &e.expect;
        c.check("intersection", int(x.intersection), || {
            let d = class()?;
            let other = match &e.other {
                Some(o) => s.class(o).map_err(err)?,
                None => d.clone(),
            };
            Ok(Value::Int(intersect(&d, &other, &s).map_err(err)?))
        });
        c.check("genus", int(x.genus), || {
            Ok(Value::Int(adjunction_genus(&class()?, &s).map_err(err)?))
        });
        c.check("k_squared", int(x.k_squared), || {
            Ok(Value::Int(s.k_squared()))
        });
        c.check("euler", int(x.euler), || Ok(Value::Int(s.euler)));
        c.check("noether", boolean(x.noether), || {
            Ok(Value::Bool(s.noether_consistent_with(formulas)))
        });
    }

    for e in &manifest.noether {
        let mut c = Checks::new(
            &mut records,
            &e.id,
            &e.section,
            "Noether formula",
            &e.provenance,
        );
        let (euler, b2) = formulas.noether_b2(e.k_squared, e.chi);
        c.check("euler", int(e.expect.euler), || Ok(Value::Int(euler)));
        c.check("b2", int(e.expect.b2), || Ok(Value::Int(b2)));
    }

    for e in &manifest.double_cover {
        let mut c = Checks::new(
            &mut records,
            &e.id,
            &e.section,
            "Double covers",
            &e.provenance,
        );
        let spec = DoubleCoverSpec {
            base: base_surface(&e.base),
            branch_class: DivisorClass(e.branch.clone()),
            branch_genus_override: e.branch_genus,
        };
        let r = formulas.k3_check(&spec).map_err(err);
        let x = &e.expect;
        let get = |f: fn(&cymcm_core::doublecover::K3Report) -> Value| {
            r.as_ref().map(f).map_err(Clone::clone)
        };
        c.check("anticanonical", boolean(x.anticanonical), || {
            get(|r| Value::Bool(r.is_anticanonical_double))
        });
        c.check("branch_genus", int(x.branch_genus), || {
            get(|r| Value::Int(r.branch_genus))
        });
        c.check("euler", int(x.euler), || get(|r| Value::Int(r.euler_cover)));
        c.check("k3", boolean(x.k3), || get(|r| Value::Bool(r.verdict)));
    }

    for e in &manifest.borcea_voisin {
        let mut c = Checks::new(
            &mut records,
            &e.id,
            &e.section,
            "Borcea-Voisin",
            &e.provenance,
        );
        let locus = FixedLocusData {
            genera: e.genera.clone(),
            isolated_points: e.isolated_points,
        };
        let r = formulas.borcea_voisin_locus(&locus).map_err(err);
        let x = &e.expect;
        c.check("h11", int(x.h11), || {
            r.as_ref().map(|r| Value::Int(r.h11)).map_err(Clone::clone)
        });
        c.check("h21", int(x.h21), || {
            r.as_ref().map(|r| Value::Int(r.h21)).map_err(Clone::clone)
        });
        c.check("euler", int(x.euler), || {
            r.as_ref()
                .map(|r| Value::Int(r.euler))
                .map_err(Clone::clone)
        });
    }

    for e in &manifest.catalog {
        let mut c = Checks::new(&mut records, &e.id, &e.section, "Catalogs", &e.provenance);
        let catalog = || {
            let k3s: Vec<(String, FixedLocusData)> =
                e.k3.iter()
                    .map(|k| {
                        let locus = FixedLocusData {
                            genera: k.genera.clone(),
                            isolated_points: k.isolated_points,
                        };
                        (k.id.clone(), locus)
                    })
                    .collect();
            let curves = e
                .elliptic
                .iter()
                .map(|id| {
                    let entry = manifest
                        .elliptic
                        .iter()
                        .find(|x| &x.id == id)
                        .expect("validated");
                    elliptic_model(entry)
                })
                .collect::<Result<Vec<_>, _>>()?;
            formulas.cy3_catalog(&k3s, &curves).map_err(err)
        };
        let entries = catalog();
        c.check("count", int(e.expect.count), || {
            entries
                .as_ref()
                .map(|v| Value::Int(v.len() as i64))
                .map_err(Clone::clone)
        });
        c.check("hodge", list(&e.expect.hodge), || {
            let v = entries.as_ref().map_err(Clone::clone)?;
            let mut pairs: Vec<(i64, i64)> =
                v.iter().map(|c| (c.report.h11, c.report.h21)).collect();
            pairs.dedup();
            match pairs.as_slice() {
                [(h11, h21)] => Ok(Value::List(vec![*h11, *h21])),
                [] => Err("empty catalog".into()),
                _ => Ok(Value::Text(format!("{pairs:?}"))),
            }
        });
    }

    for e in &manifest.rational_map {
        let mut c = Checks::new(
            &mut records,
            &e.id,
            &e.section,
            "Rational map",
            &e.provenance,
        );
        c.check("holds", boolean(e.expect.holds), || {
            let v = map_variant(&e.variant).ok_or("unknown variant")?;
            Ok(Value::Bool(rational_map_holds(v)))
        });
    }

    for e in &manifest.fixed_locus {
        let mut c = Checks::new(&mut records, &e.id, &e.section, "Fixed loci", &e.provenance);
        let comps = fixed_components(e);
        let count = |pred: fn(&FixedComponent) -> bool| {
            comps
                .as_ref()
                .map(|v| Value::Int(v.iter().filter(|c| pred(c)).count() as i64))
                .map_err(Clone::clone)
        };
        let x = &e.expect;
        c.check("points", int(x.points), || count(FixedComponent::is_point));
        c.check("curves", int(x.curves), || {
            count(|c| c.dimension().is_some_and(|d| d >= 1))
        });
        c.check("unresolved", int(x.unresolved), || {
            count(|c| matches!(c, FixedComponent::Unresolved { .. }))
        });
        c.check("relation_holds", boolean(x.relation_holds), || {
            relation_holds(e, comps.as_ref().map_err(Clone::clone)?)
        });
    }

    for e in &manifest.z3 {
        let mut c = Checks::new(
            &mut records,
            &e.id,
            &e.section,
            "Order three quotient",
            &e.provenance,
        );
        let ledger = formulas.z3_surface_ledger(e.d2, e.exceptional).map_err(err);
        let hodge = ledger.as_ref().map_err(Clone::clone).and_then(|l| {
            formulas
                .z3_cy3_hodge(l, e.h11_0_curve, e.resolution_h11, l.curve_eigen.0 as i64)
                .map_err(err)
        });
        let x = &e.expect;
        let l = |f: fn(&cymcm_core::threefold::Z3Ledger) -> Value| {
            ledger.as_ref().map(f).map_err(Clone::clone)
        };
        c.check("phi_k_squared", int(x.phi_k_squared), || {
            l(|l| Value::Int(l.phi_k_squared))
        });
        c.check("k_squared", int(x.k_squared), || {
            l(|l| Value::Int(l.k_squared))
        });
        c.check("euler", int(x.euler), || l(|l| Value::Int(l.euler_m)));
        c.check("b2", int(x.b2), || l(|l| Value::Int(l.b2_m)));
        c.check("split", list(&x.split), || {
            l(|l| Value::List(l.h11_split.to_vec()))
        });
        c.check("h11", int(x.h11), || {
            hodge
                .as_ref()
                .map(|r| Value::Int(r.h11))
                .map_err(Clone::clone)
        });
        c.check("h21", int(x.h21), || {
            hodge
                .as_ref()
                .map(|r| Value::Int(r.h21))
                .map_err(Clone::clone)
        });
    }

    Report::new(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str) -> Report {
        run_manifest(&Manifest::parse(text).unwrap(), &Formulas::STANDARD)
    }

    #[test]
    fn curve_checks() {
        let r = run(r#"
            [[curve]]
            id = "c"
            provenance = "p"
            m = 4
            generic = [{ count = 8, exp = 1 }]
            expect = { genus = 8, eigen = [1, 3, 5], cm = false }
        "#);
        assert_eq!(r.checks.len(), 3);
        assert_eq!(r.checks[0].computed, Value::Int(9));
        assert!(!r.checks[0].pass);
        assert!(r.checks[1].pass);
        // symbolic points carry no CM information
        assert!(matches!(&r.checks[2].computed, Value::Text(t) if t.starts_with("error")));
    }

    #[test]
    fn entries_without_expectations_add_no_records() {
        let r = run("[[noether]]\nid = \"n\"\nk_squared = 0\nchi = 2\n");
        assert!(r.checks.is_empty());
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn irrational_j_is_reported_exactly() {
        let r = run(r#"
            [[elliptic]]
            id = "e"
            provenance = "p"
            lambda = "sqrt 2"
            expect = { j = "0" }
        "#);
        match &r.checks[0].computed {
            Value::Text(t) => assert!(t.contains("sqrt(2)"), "{t}"),
            v => panic!("{v}"),
        }
    }

    #[test]
    fn rational_j_literal() {
        let r = run(r#"
            [[elliptic]]
            id = "e"
            provenance = "p"
            roots = ["0", "1", "-1"]
            expect = { j = "3456/2" }
        "#);
        assert!(r.all_pass(), "{:?}", r.checks);
    }

    #[test]
    fn fixed_locus_entry() {
        let r = run(r#"
            [[fixed_locus]]
            id = "g"
            provenance = "p"
            order = 3
            weights = [1, 0, 1, 0]
            domain = 8
            variables = ["y2", "y1", "x1", "x0"]
            equation = "(y2^3 - y1^3)*y1 + (x1^3 - x0^3)*x0"
            relation = "y1^4 + x0^4"
            expect = { points = 4, curves = 1, unresolved = 0, relation_holds = true }
        "#);
        assert!(r.all_pass(), "{:?}", r.checks);
    }
}
