use std::fmt;

use super::ThreefoldError;
use crate::numeric::{CyclotomicResidue, FieldElement, MultivariatePolynomial, NumericError};

type Poly = MultivariatePolynomial<CyclotomicResidue>;

/// `(x_0 : ... : x_r) -> (xi^{w_0} x_0 : ... : xi^{w_r} x_r)` with `xi` a
/// primitive `order`-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalAutomorphism {
    order: u32,
    weights: Vec<u32>,
}

impl DiagonalAutomorphism {
    pub fn new(order: u32, weights: &[i64]) -> Result<Self, ThreefoldError> {
        if order == 0 {
            return Err(NumericError::ZeroOrder.into());
        }
        let weights = weights
            .iter()
            .map(|w| w.rem_euclid(order as i64) as u32)
            .collect();
        Ok(DiagonalAutomorphism { order, weights })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Coordinate indices grouped by weight, in order of first appearance.
    fn strata(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<(u32, Vec<usize>)> = Vec::new();
        for (i, &w) in self.weights.iter().enumerate() {
            match out.iter_mut().find(|(v, _)| *v == w) {
                Some((_, idx)) => idx.push(i),
                None => out.push((w, vec![i])),
            }
        }
        out.into_iter().map(|(_, idx)| idx).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FixedComponent {
    /// An isolated fixed point, in homogeneous coordinates.
    Point(Vec<CyclotomicResidue>),
    /// The coordinate subspace spanned by `variables`, contained in the hypersurface.
    Linear { variables: Vec<String> },
    /// The hypersurface `equation = 0` inside the coordinate subspace.
    Hypersurface {
        variables: Vec<String>,
        equation: Poly,
    },
    /// Points of a binary form whose roots do not all lie in the domain.
    Unresolved {
        variables: Vec<String>,
        remaining_degree: u32,
    },
}

impl FixedComponent {
    pub fn is_point(&self) -> bool {
        matches!(self, FixedComponent::Point(_))
    }

    /// Projective dimension, if known.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            FixedComponent::Point(_) => Some(0),
            FixedComponent::Linear { variables } => Some(variables.len() - 1),
            FixedComponent::Hypersurface { variables, .. } => Some(variables.len() - 2),
            FixedComponent::Unresolved { .. } => None,
        }
    }
}

impl fmt::Display for FixedComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedComponent::Point(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(":"))
            }
            FixedComponent::Linear { variables } => write!(f, "span({})", variables.join(",")),
            FixedComponent::Hypersurface {
                variables,
                equation,
            } => {
                write!(f, "{{{equation} = 0}} in span({})", variables.join(","))
            }
            FixedComponent::Unresolved {
                variables,
                remaining_degree,
            } => write!(
                f,
                "{remaining_degree} unresolved points in span({})",
                variables.join(",")
            ),
        }
    }
}

/// Fixed locus of a diagonal automorphism on a hypersurface. A point is fixed
/// exactly when its nonzero coordinates share one weight, so the locus is the
/// union over weight classes of the hypersurface cut with the class's
/// coordinate subspace.
pub fn fixed_locus_diagonal(
    aut: &DiagonalAutomorphism,
    hypersurface: &Poly,
) -> Result<Vec<FixedComponent>, ThreefoldError> {
    let variables = hypersurface.variables();
    if aut.weights.len() != variables.len() {
        return Err(ThreefoldError::ArityMismatch {
            weights: aut.weights.len(),
            variables: variables.len(),
        });
    }
    if hypersurface.is_zero() {
        return Err(ThreefoldError::InvalidFixedLocus("zero polynomial".into()));
    }
    let degree = hypersurface.total_degree();
    let mut weight = None;
    for (e, _) in hypersurface.terms() {
        if e.iter().sum::<u32>() != degree {
            return Err(ThreefoldError::InvalidFixedLocus(
                "hypersurface is not homogeneous".into(),
            ));
        }
        let w = e
            .iter()
            .zip(&aut.weights)
            .map(|(&a, &b)| a as u64 * b as u64)
            .sum::<u64>()
            % aut.order as u64;
        if *weight.get_or_insert(w) != w {
            return Err(ThreefoldError::NotEquivariant);
        }
    }

    let n = variables.len();
    let mut out = Vec::new();
    for stratum in aut.strata() {
        let others: Vec<usize> = (0..n).filter(|i| !stratum.contains(i)).collect();
        let restricted = hypersurface.restrict_to_zero(&others);
        let names: Vec<String> = stratum.iter().map(|&i| variables[i].clone()).collect();
        if restricted.is_zero() {
            if stratum.len() == 1 {
                out.push(FixedComponent::Point(unit_point(hypersurface, stratum[0])));
            } else {
                out.push(FixedComponent::Linear { variables: names });
            }
            continue;
        }
        match stratum.len() {
            1 => {}
            2 => out.extend(binary_form_points(
                hypersurface,
                &restricted,
                stratum[0],
                stratum[1],
            )),
            _ => out.push(FixedComponent::Hypersurface {
                variables: names,
                equation: restricted,
            }),
        }
    }
    Ok(out)
}

fn unit_point(p: &Poly, index: usize) -> Vec<CyclotomicResidue> {
    let domain = p.domain();
    (0..p.variables().len())
        .map(|i| {
            if i == index {
                CyclotomicResidue::one_in(domain)
            } else {
                CyclotomicResidue::zero_in(domain)
            }
        })
        .collect()
}

/// Zeros of the binary form `f(u, v)` in the `(u:v)` line, normalized to
/// `v = 1` or to `(1:0)`. Roots are searched among `0` and the roots of unity
/// of the domain.
fn binary_form_points(p: &Poly, f: &Poly, u: usize, v: usize) -> Vec<FixedComponent> {
    let domain = *p.domain();
    let zero = CyclotomicResidue::zero_in(&domain);
    let one = CyclotomicResidue::one_in(&domain);
    let degree = f.total_degree() as usize;
    // g(t) = f(t, 1), low degree first
    let mut g = vec![zero.clone(); degree + 1];
    for (e, c) in f.terms() {
        g[e[u] as usize] = c.clone();
    }
    while g.last().is_some_and(|c| c.vanishes()) {
        g.pop();
    }

    let point = |a: CyclotomicResidue, b: CyclotomicResidue| {
        let mut coords = vec![zero.clone(); p.variables().len()];
        coords[u] = a;
        coords[v] = b;
        FixedComponent::Point(coords)
    };
    let mut out = Vec::new();
    if g.len() - 1 < degree {
        out.push(point(one.clone(), zero.clone()));
    }

    let mut candidates = vec![zero.clone()];
    for k in 0..domain as i64 {
        let r = CyclotomicResidue::zeta_pow(domain, k).expect("nonzero order");
        for c in [r.negated(), r] {
            if !candidates.contains(&c) {
                candidates.push(c);
            }
        }
    }
    for r in candidates {
        let mut found = false;
        while g.len() > 1 {
            let (q, rem) = deflate(&g, &r);
            if !rem.vanishes() {
                break;
            }
            g = q;
            found = true;
        }
        if found {
            out.push(point(r, one.clone()));
        }
    }
    if g.len() > 1 {
        let names = [u, v].iter().map(|&i| p.variables()[i].clone()).collect();
        out.push(FixedComponent::Unresolved {
            variables: names,
            remaining_degree: (g.len() - 1) as u32,
        });
    }
    out
}

/// Synthetic division by `t - r`.
fn deflate(
    g: &[CyclotomicResidue],
    r: &CyclotomicResidue,
) -> (Vec<CyclotomicResidue>, CyclotomicResidue) {
    let mut q = vec![g[0].clone(); g.len() - 1];
    let mut acc = g[g.len() - 1].clone();
    for i in (0..g.len() - 1).rev() {
        q[i] = acc.clone();
        acc = g[i].plus(&acc.times(r));
    }
    (q, acc)
}
