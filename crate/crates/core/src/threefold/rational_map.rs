use std::collections::HashMap;

use crate::numeric::{
    poly_identity_check_modulo, CyclotomicResidue, FieldElement, MultivariatePolynomial,
    RewriteRule,
};

type Poly = MultivariatePolynomial<CyclotomicResidue>;

/// Domain large enough for a primitive eighth root (`e^4 = -1`) and a cube
/// root of unity.
const MAP_ORDER: u32 = 24;

/// Variants of the map `C1 x C2 -> S`, `((z1:y2:y1),(z2:x1:x0))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapVariant {
    /// `(z2/z1 y2 : z2/z1 y1 : x1 : x0)`.
    Literal,
    /// `(e z2/z1 y2 : e z2/z1 y1 : x1 : x0)` with `e^4 = -1`.
    Twisted,
    /// The twisted map with `z2/z1` replaced by `z1/z2`.
    Inverted,
    /// The twisted map followed by `(y2:y1:x1:x0) -> (xi y2 : y1 : xi x1 : x0)`.
    TwistedThenGamma,
}

/// `(y2^3 - y1^3) y1 + (x1^3 - x0^3) x0` over `Q(zeta_order)`.
pub fn quartic_k3(order: u32) -> Poly {
    let g = Poly::generators(&["y2", "y1", "x1", "x0"], order);
    let (y2, y1, x1, x0) = (&g[0], &g[1], &g[2], &g[3]);
    &(&(&y2.pow(3) - &y1.pow(3)) * y1) + &(&(&x1.pow(3) - &x0.pow(3)) * x0)
}

/// The twisted map pulls the quartic back into the ideal of `C1 x C2`.
pub fn rational_map_check() -> bool {
    rational_map_holds(MapVariant::Twisted)
}

pub fn rational_map_holds(variant: MapVariant) -> bool {
    let (substitution, rules) = pullback(variant);
    poly_identity_check_modulo(&quartic_k3(MAP_ORDER), &substitution, &rules)
        .expect("substitution covers every variable")
}

/// The map as a substitution, and the equations of `C1 x C2` as rewrite rules.
fn pullback(variant: MapVariant) -> (HashMap<String, Poly>, [RewriteRule<CyclotomicResidue>; 2]) {
    let ring = ["z1", "y2", "y1", "z2", "x1", "x0"];
    let g = Poly::generators(&ring, MAP_ORDER);
    let (z1, y2, y1, z2, x1, x0) = (&g[0], &g[1], &g[2], &g[3], &g[4], &g[5]);
    let zeta = |k: i64| CyclotomicResidue::zeta_pow(MAP_ORDER, k).expect("nonzero order");
    let eps = zeta(3);
    let xi = zeta(8);
    let one = CyclotomicResidue::one_in(&MAP_ORDER);

    // denominators cleared by multiplying every coordinate by the denominator
    let (num, den) = match variant {
        MapVariant::Inverted => (z1, z2),
        _ => (z2, z1),
    };
    let twist = if variant == MapVariant::Literal {
        one.clone()
    } else {
        eps
    };
    let (gy, gx) = if variant == MapVariant::TwistedThenGamma {
        (xi.clone(), xi)
    } else {
        (one.clone(), one)
    };
    let images = [
        ("y2", (num * y2).scale(&twist.times(&gy))),
        ("y1", (num * y1).scale(&twist)),
        ("x1", (den * x1).scale(&gx)),
        ("x0", den * x0),
    ];
    let substitution: HashMap<String, Poly> = images
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();

    let c1 = &(&y2.pow(3) - &y1.pow(3)) * y1;
    let c2 = &(&x1.pow(3) - &x0.pow(3)) * x0;
    let rules = [
        RewriteRule::power_of("z1", 4, c1).expect("z1 in ring"),
        RewriteRule::power_of("z2", 4, c2).expect("z2 in ring"),
    ];
    (substitution, rules)
}
