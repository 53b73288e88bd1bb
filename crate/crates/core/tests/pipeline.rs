use cymcm_core::curve::{
    eigenspace_dims, fermat_cover_cm, genus, normalize_branch_data, BranchData, PointLocation,
};
use cymcm_core::doublecover::{k3_check, DoubleCoverSpec};
use cymcm_core::elliptic::EllipticModel;
use cymcm_core::numeric::{int, qf_reduce, ratio, CyclotomicResidue, FieldElement, Scalar};
use cymcm_core::surface::{
    adjunction_genus, intersect, projective_plane, ruled_surface, DivisorClass,
};
use cymcm_core::threefold::{
    borcea_voisin, cy3_catalog, fixed_locus_diagonal, quartic_k3, rational_map_check, z3_cy3_hodge,
    z3_surface_ledger, DiagonalAutomorphism, FixedComponent, FixedLocusData,
};

/// `y^m = x^z (x^k + 1)`, completed at infinity.
fn fermat_type(m: i64, k: i64, with_zero: bool) -> BranchData {
    let mut raw: Vec<(PointLocation, i64)> = (0..k)
        .map(|j| {
            let r = CyclotomicResidue::zeta_pow(2 * k as u32, 2 * j + 1).unwrap();
            (PointLocation::Finite(Scalar::Cyclotomic(r)), 1)
        })
        .collect();
    if with_zero {
        raw.push((PointLocation::Finite(Scalar::from_int(0)), 1));
    }
    normalize_branch_data(m, raw).unwrap()
}

fn example_curves(m: i64) -> Vec<BranchData> {
    let n = if m == 4 { 8 } else { 6 };
    vec![
        fermat_type(m, n, false),
        fermat_type(m, n - 1, true),
        fermat_type(m, n - 2, true),
    ]
}

fn quartic_e() -> BranchData {
    let raw = vec![
        (PointLocation::Finite(Scalar::from_int(0)), 1),
        (PointLocation::Finite(Scalar::from_int(1)), 2),
    ];
    normalize_branch_data(4, raw).unwrap()
}

fn cm_table() -> Vec<EllipticModel> {
    let q = |a: i64, b: i64, d: i64| Scalar::Quadratic(qf_reduce(int(a), int(b), d).unwrap());
    let sqrt2 = q(1, 1, 2);
    let quarter = Scalar::Rational(ratio(1, 4));
    let w = q(3, 1, -7);
    vec![
        EllipticModel::short_weierstrass(Scalar::from_int(0), Scalar::from_int(-1)).unwrap(),
        EllipticModel::three_roots([0, 1, 2].map(Scalar::from_int)).unwrap(),
        EllipticModel::legendre(sqrt2.pow(2)).unwrap(),
        EllipticModel::legendre(quarter.try_mul(&w.pow(2)).unwrap()).unwrap(),
        EllipticModel::short_weierstrass(Scalar::from_int(-15), Scalar::from_int(22)).unwrap(),
        EllipticModel::short_weierstrass(Scalar::from_int(-595), Scalar::from_int(5586)).unwrap(),
    ]
}

#[test]
fn curve_genera_and_eigenspaces() {
    for b in example_curves(4) {
        assert_eq!(b.points().len(), 8, "{b}");
        assert_eq!(genus(&b), 9, "{b}");
        assert_eq!(eigenspace_dims(&b), vec![1, 3, 5], "{b}");
        assert!(fermat_cover_cm(&b).unwrap().witness().is_some(), "{b}");
    }
    for b in example_curves(6) {
        assert_eq!(genus(&b), 10, "{b}");
        assert_eq!(eigenspace_dims(&b), vec![0, 1, 2, 3, 4], "{b}");
        assert!(fermat_cover_cm(&b).unwrap().witness().is_some(), "{b}");
    }
    let e = quartic_e();
    assert_eq!(genus(&e), 1);
    assert_eq!(eigenspace_dims(&e), vec![0, 0, 1]);
    assert!(fermat_cover_cm(&e).unwrap().witness().is_some());
}

#[test]
fn elliptic_table() {
    let j: Vec<i64> = cm_table()
        .iter()
        .map(|e| e.j_invariant().unwrap().to_integer().try_into().unwrap())
        .collect();
    assert_eq!(j, vec![0, 1728, 8000, -3375, 54000, 16581375]);
    assert_eq!(EllipticModel::quartic_e().j_invariant().unwrap(), int(1728));
}

#[test]
fn surfaces_and_double_covers() {
    for (n, expected) in [(8u32, -8), (6, -6)] {
        let s = ruled_surface(n);
        let e_inf = s.basis_class("C0").unwrap();
        assert_eq!(intersect(&e_inf, &e_inf, &s).unwrap(), expected);
    }
    let p2 = ruled_surface(2);
    assert_eq!(adjunction_genus(&DivisorClass(vec![4, 8]), &p2).unwrap(), 9);
    let plane = projective_plane();
    assert_eq!(
        adjunction_genus(&DivisorClass(vec![6]), &plane).unwrap(),
        10
    );

    let check = |base, branch: &[i64]| {
        k3_check(&DoubleCoverSpec {
            base,
            branch_class: DivisorClass(branch.to_vec()),
            branch_genus_override: None,
        })
        .unwrap()
    };
    let r = check(p2, &[4, 8]);
    assert!(r.verdict && r.euler_cover == 24);
    let r = check(plane.clone(), &[6]);
    assert!(r.verdict && r.euler_cover == 24);
    assert!(!check(plane, &[4]).verdict);
}

#[test]
fn borcea_voisin_catalogs() {
    let k3s = |g: u32| -> Vec<(String, FixedLocusData)> {
        (1..=3)
            .map(|i| (format!("k3-{i}"), FixedLocusData::curves(&[g])))
            .collect()
    };
    for (g, hodge) in [(9, (7, 55)), (10, (6, 60))] {
        let cat = cy3_catalog(&k3s(g), &cm_table()).unwrap();
        assert_eq!(cat.len(), 18);
        assert!(cat.iter().all(|c| (c.report.h11, c.report.h21) == hodge));
        let r = borcea_voisin(1, g as i64).unwrap();
        assert_eq!((r.h11, r.h21), hodge);
    }
}

#[test]
fn order_three_quotient() {
    assert!(rational_map_check());
    let gamma = DiagonalAutomorphism::new(3, &[1, 0, 1, 0]).unwrap();
    let comps = fixed_locus_diagonal(&gamma, &quartic_k3(8)).unwrap();
    let points: Vec<_> = comps.iter().filter(|c| c.is_point()).collect();
    assert_eq!(points.len(), 4);
    let minus_one = CyclotomicResidue::zeta_pow(8, 4).unwrap();
    for p in points {
        let FixedComponent::Point(c) = p else {
            unreachable!()
        };
        assert_eq!(c[1].pow(4), minus_one);
    }
    assert_eq!(comps.iter().filter(|c| c.dimension() == Some(1)).count(), 1);

    let l = z3_surface_ledger(-2, 4).unwrap();
    assert_eq!((l.k_squared, l.b2_m, l.h11_split), (-4, 14, [10, 5, 5]));
    let r = z3_cy3_hodge(&l, 1, 18, 1).unwrap();
    assert_eq!((r.h11, r.h21), (29, 5));
}
