use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{FieldElement, NumericError};

/// Exponent vector, one entry per ring variable.
pub type Monomial = Vec<u32>;

/// Sparse polynomial in named variables over a single scalar domain.
#[derive(Debug, Clone, PartialEq)]
pub struct MultivariatePolynomial<F: FieldElement> {
    variables: Vec<String>,
    domain: F::Domain,
    terms: BTreeMap<Monomial, F>,
}

impl<F: FieldElement> MultivariatePolynomial<F> {
    pub fn zero(variables: &[&str], domain: F::Domain) -> Self {
        Self::zero_like(variables.iter().map(|v| v.to_string()).collect(), domain)
    }

    fn zero_like(variables: Vec<String>, domain: F::Domain) -> Self {
        MultivariatePolynomial {
            variables,
            domain,
            terms: BTreeMap::new(),
        }
    }

    /// Same ring, no terms.
    pub fn zero_in_ring(&self) -> Self {
        Self::zero_like(self.variables.clone(), self.domain.clone())
    }

    pub fn constant_in_ring(&self, value: F) -> Self {
        let mut p = self.zero_in_ring();
        p.add_term(vec![0; self.variables.len()], value);
        p
    }

    pub fn variable_in_ring(&self, name: &str) -> Result<Self, NumericError> {
        let idx = self.index_of(name)?;
        let mut exps = vec![0; self.variables.len()];
        exps[idx] = 1;
        let mut p = self.zero_in_ring();
        p.add_term(exps, F::one_in(&self.domain));
        Ok(p)
    }

    /// The ring generators, in variable order.
    pub fn generators(variables: &[&str], domain: F::Domain) -> Vec<Self> {
        let zero = Self::zero(variables, domain);
        variables
            .iter()
            .map(|v| zero.variable_in_ring(v).expect("variable is in ring"))
            .collect()
    }

    pub fn from_terms(
        variables: &[&str],
        domain: F::Domain,
        terms: impl IntoIterator<Item = (Monomial, F)>,
    ) -> Result<Self, NumericError> {
        let mut p = Self::zero(variables, domain);
        for (exps, c) in terms {
            if exps.len() != p.variables.len() || c.domain() != p.domain {
                return Err(NumericError::RingMismatch);
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn domain(&self) -> &F::Domain {
        &self.domain
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Option<&F> {
        self.terms.get(exps)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn index_of(&self, name: &str) -> Result<usize, NumericError> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| NumericError::UnknownVariable(name.to_string()))
    }

    fn same_ring(&self, other: &Self) -> bool {
        self.variables == other.variables && self.domain == other.domain
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            self.same_ring(other),
            "polynomial ring mismatch: {:?} vs {:?}",
            self.variables,
            other.variables
        );
    }

    fn add_term(&mut self, exps: Monomial, c: F) {
        if c.vanishes() {
            return;
        }
        match self.terms.remove(&exps) {
            Some(old) => {
                let sum = old.plus(&c);
                if !sum.vanishes() {
                    self.terms.insert(exps, sum);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.zero_in_ring();
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.times(c));
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = self.constant_in_ring(F::one_in(&self.domain));
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Evaluates at a point given in variable order.
    pub fn evaluate(&self, point: &[F]) -> Result<F, NumericError> {
        if point.len() != self.variables.len() || point.iter().any(|x| x.domain() != self.domain) {
            return Err(NumericError::RingMismatch);
        }
        let mut acc = F::zero_in(&self.domain);
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term = term.times(&x.pow(e));
                }
            }
            acc = acc.plus(&term);
        }
        Ok(acc)
    }

    /// Replaces every variable by a polynomial of a common target ring.
    pub fn substitute(&self, substitution: &HashMap<String, Self>) -> Result<Self, NumericError> {
        let images = self
            .variables
            .iter()
            .map(|v| {
                substitution
                    .get(v)
                    .ok_or_else(|| NumericError::IncompleteSubstitution(v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let Some(first) = images.first() else {
            // no variables: the polynomial is a constant
            return Ok(self.clone());
        };
        if images.iter().any(|p| !p.same_ring(first)) || first.domain != self.domain {
            return Err(NumericError::RingMismatch);
        }
        let mut power_cache: HashMap<(usize, u32), Self> = HashMap::new();
        let mut out = first.zero_in_ring();
        for (exps, c) in &self.terms {
            let mut term = first.constant_in_ring(c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = power_cache
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e));
                term = &term * power;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Sets the listed variables to zero, keeping the ring.
    pub fn restrict_to_zero(&self, vanishing: &[usize]) -> Self {
        let mut out = self.zero_in_ring();
        for (e, c) in &self.terms {
            if vanishing.iter().all(|&i| e[i] == 0) {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// Normal form under the rewrite rules, applied until no leading
    /// monomial of a rule divides any term.
    pub fn reduce(&self, rules: &[RewriteRule<F>]) -> Result<Self, NumericError> {
        const STEP_LIMIT: usize = 1_000_000;
        for rule in rules {
            if !self.same_ring(&rule.replacement) || rule.lead.len() != self.variables.len() {
                return Err(NumericError::RingMismatch);
            }
        }
        let mut current = self.clone();
        let mut steps = 0;
        loop {
            let hit = current.terms.iter().find_map(|(e, c)| {
                rules
                    .iter()
                    .find(|r| divides(&r.lead, e))
                    .map(|r| (e.clone(), c.clone(), r))
            });
            let Some((exps, c, rule)) = hit else {
                return Ok(current);
            };
            steps += 1;
            if steps > STEP_LIMIT {
                return Err(NumericError::RewriteLimit(STEP_LIMIT));
            }
            current.terms.remove(&exps);
            let quotient: Monomial = exps.iter().zip(&rule.lead).map(|(a, b)| a - b).collect();
            for (re, rc) in &rule.replacement.terms {
                let e: Monomial = quotient.iter().zip(re).map(|(a, b)| a + b).collect();
                current.add_term(e, c.times(rc));
            }
        }
    }
}

fn divides(lead: &[u32], exps: &[u32]) -> bool {
    lead.iter().zip(exps).all(|(a, b)| a <= b)
}

/// Rewrite `lead -> replacement`, i.e. the relation `lead - replacement = 0`.
#[derive(Debug, Clone)]
pub struct RewriteRule<F: FieldElement> {
    pub lead: Monomial,
    pub replacement: MultivariatePolynomial<F>,
}

impl<F: FieldElement> RewriteRule<F> {
    /// Rule `var^power -> replacement`.
    pub fn power_of(
        variable: &str,
        power: u32,
        replacement: MultivariatePolynomial<F>,
    ) -> Result<Self, NumericError> {
        let idx = replacement.index_of(variable)?;
        let mut lead = vec![0; replacement.variables.len()];
        lead[idx] = power;
        Ok(RewriteRule { lead, replacement })
    }
}

/// True iff `target` vanishes identically after substituting every variable.
pub fn poly_identity_check<F: FieldElement>(
    target: &MultivariatePolynomial<F>,
    substitution: &HashMap<String, MultivariatePolynomial<F>>,
) -> Result<bool, NumericError> {
    Ok(target.substitute(substitution)?.is_zero())
}

/// Like [`poly_identity_check`], but the substituted polynomial is first
/// brought to normal form under `rules` (used to work on a variety cut out
/// by the rule relations).
pub fn poly_identity_check_modulo<F: FieldElement>(
    target: &MultivariatePolynomial<F>,
    substitution: &HashMap<String, MultivariatePolynomial<F>>,
    rules: &[RewriteRule<F>],
) -> Result<bool, NumericError> {
    Ok(target.substitute(substitution)?.reduce(rules)?.is_zero())
}

impl<'a, F: FieldElement> Add<&'a MultivariatePolynomial<F>> for &'a MultivariatePolynomial<F> {
    type Output = MultivariatePolynomial<F>;
    fn add(self, rhs: &'a MultivariatePolynomial<F>) -> MultivariatePolynomial<F> {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a, F: FieldElement> Sub<&'a MultivariatePolynomial<F>> for &'a MultivariatePolynomial<F> {
    type Output = MultivariatePolynomial<F>;
    fn sub(self, rhs: &'a MultivariatePolynomial<F>) -> MultivariatePolynomial<F> {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.negated());
        }
        out
    }
}

impl<'a, F: FieldElement> Mul<&'a MultivariatePolynomial<F>> for &'a MultivariatePolynomial<F> {
    type Output = MultivariatePolynomial<F>;
    fn mul(self, rhs: &'a MultivariatePolynomial<F>) -> MultivariatePolynomial<F> {
        self.assert_same_ring(rhs);
        let mut out = self.zero_in_ring();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.times(c2));
            }
        }
        out
    }
}

impl<F: FieldElement> Neg for &MultivariatePolynomial<F> {
    type Output = MultivariatePolynomial<F>;
    fn neg(self) -> MultivariatePolynomial<F> {
        let mut out = self.zero_in_ring();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.negated());
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<F: FieldElement> $tr for MultivariatePolynomial<F> {
            type Output = MultivariatePolynomial<F>;
            fn $method(self, rhs: MultivariatePolynomial<F>) -> MultivariatePolynomial<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<F: FieldElement> fmt::Display for MultivariatePolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            b.iter()
                .sum::<u32>()
                .cmp(&a.iter().sum::<u32>())
                .then(b.cmp(a))
        });
        for (i, (exps, c)) in terms.into_iter().enumerate() {
            let monomial: Vec<String> = exps
                .iter()
                .zip(&self.variables)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| {
                    if *e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if i > 0 {
                write!(f, " + ")?;
            }
            if monomial.is_empty() {
                write!(f, "{c}")?;
            } else if c.equals_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "({c})*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}
