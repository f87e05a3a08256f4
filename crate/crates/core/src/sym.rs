//! Commutative symmetric functions in the power-sum and monomial bases,
//! the cycle index, and the classical orbit-count expansion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, One, Zero};

use crate::combinat::IntegerPartition;
use crate::error::{Error, Result};
use crate::groups::PermGroup;
use crate::linear::{Coeff, LinComb};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymBasis {
    P,
    M,
}

impl SymBasis {
    pub fn tag(self) -> &'static str {
        match self {
            SymBasis::P => "p",
            SymBasis::M => "m",
        }
    }
}

/// A commutative symmetric function, stored in the `p` or `m` basis and
/// keyed by integer partitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymElement {
    basis: SymBasis,
    terms: LinComb<IntegerPartition>,
}

impl SymElement {
    pub fn new(basis: SymBasis, terms: LinComb<IntegerPartition>) -> Self {
        SymElement { basis, terms }
    }

    pub fn zero(basis: SymBasis) -> Self {
        SymElement { basis, terms: LinComb::zero() }
    }

    /// `p^lambda` as a single term.
    pub fn power_sum(lambda: IntegerPartition) -> Self {
        SymElement { basis: SymBasis::P, terms: LinComb::unit(lambda) }
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<IntegerPartition> {
        &self.terms
    }

    pub fn coeff(&self, key: &IntegerPartition) -> Coeff {
        self.terms.coeff(key)
    }

    pub fn scale(&self, scalar: &Coeff) -> Self {
        SymElement { basis: self.basis, terms: self.terms.scale(scalar) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::invalid("sum across bases"));
        }
        Ok(SymElement { basis: self.basis, terms: self.terms.add(&other.terms) })
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.terms.to_json(self.basis.tag())
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tagged: LinComb<String> = self
            .terms
            .iter()
            .map(|(k, c)| (format!("{}{}", self.basis.tag(), k), c.clone()))
            .collect();
        write!(f, "{tagged}")
    }
}

/// Exact expansion of a power-sum element in the monomial basis.
///
/// A homogeneous degree-d component is expanded in exactly d commuting
/// variables (enough to see every monomial shape) and exponent multisets
/// are collected.
pub fn p_to_m(e: &SymElement) -> Result<SymElement> {
    match e.basis {
        SymBasis::M => Ok(e.clone()),
        SymBasis::P => {
            let mut out = LinComb::zero();
            for (lambda, coeff) in e.terms.iter() {
                for (mu, c) in expand_power_sum(lambda) {
                    out.add_term(mu, coeff * Coeff::from_integer(c));
                }
            }
            Ok(SymElement { basis: SymBasis::M, terms: out })
        }
    }
}

/// Monomial expansion of a single `p^lambda`: the coefficient of `m_mu` is
/// read off the canonical monomial `x_1^{mu_1} ... x_k^{mu_k}`.
fn expand_power_sum(lambda: &IntegerPartition) -> Vec<(IntegerPartition, BigInt)> {
    let d = lambda.sum();
    if d == 0 {
        return vec![(IntegerPartition::empty(), BigInt::one())];
    }
    // polynomial in d variables as exponent-vector -> coefficient
    let mut poly: HashMap<Vec<u32>, BigInt> = HashMap::new();
    poly.insert(vec![0; d], BigInt::one());
    for &part in lambda.parts() {
        let mut next: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (expo, c) in &poly {
            for v in 0..d {
                let mut e2 = expo.clone();
                e2[v] += part;
                *next.entry(e2).or_insert_with(BigInt::zero) += c;
            }
        }
        poly = next;
    }
    let mut out = Vec::new();
    for mu in IntegerPartition::all(d) {
        if mu.parts().len() > d {
            continue;
        }
        let mut expo = vec![0u32; d];
        for (i, &p) in mu.parts().iter().enumerate() {
            expo[i] = p;
        }
        if let Some(c) = poly.get(&expo) {
            if !c.is_zero() {
                out.push((mu, c.clone()));
            }
        }
    }
    out
}

/// `(1/|G|) sum_{sigma in G} p^{cycle_type(sigma)}`.
pub fn cycle_index(g: &PermGroup) -> SymElement {
    let mut terms = LinComb::zero();
    let inv = Coeff::new(1.into(), (g.order() as i64).into());
    for sigma in g.elements() {
        terms.add_term(sigma.cycle_type(), inv.clone());
    }
    SymElement { basis: SymBasis::P, terms }
}

/// The monomial coefficients of the cycle index; each must be a
/// nonnegative integer (the number of orbits of that type).
pub fn orbit_counts(g: &PermGroup) -> Result<BTreeMap<IntegerPartition, Coeff>> {
    let expanded = p_to_m(&cycle_index(g))?;
    let mut out = BTreeMap::new();
    for (lambda, c) in expanded.terms.iter() {
        if !c.denom().is_one() || c < &Coeff::zero() {
            return Err(Error::Inconsistency(format!(
                "orbit count {c} for type {lambda} is not a nonnegative integer"
            )));
        }
        out.insert(lambda.clone(), c.clone());
    }
    Ok(out)
}
