//! Sparse linear combinations with exact rational coefficients.
//!
//! Every algebra in the crate stores its elements as a [`LinComb`] over a
//! canonical key type; tensor elements use pair keys.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};
use serde_json::{json, Value};

/// Exact coefficient type used everywhere; no floating point in the crate.
pub type Coeff = BigRational;

/// Convenience constructor for small integer coefficients.
pub fn rat(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}

/// Marker bound for basis-index types.
pub trait Key: Clone + Ord + fmt::Display {}
impl<T: Clone + Ord + fmt::Display> Key for T {}

/// A finite linear combination of keys with rational coefficients.
///
/// Zero coefficients are never stored; equality is equality of the
/// underlying maps. Iteration order is the key order, so output built from
/// a `LinComb` is deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<K: Key> {
    terms: BTreeMap<K, Coeff>,
}

impl<K: Key> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Key> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The combination `1 * key`.
    pub fn unit(key: K) -> Self {
        Self::term(key, Coeff::one())
    }

    pub fn term(key: K, coeff: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(key, coeff);
        }
        LinComb { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Coeff)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, scalar: &Coeff) -> Self {
        if scalar.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * scalar))
                .collect(),
        }
    }

    /// `self + scalar * other`, normalized.
    pub fn combine(&self, other: &Self, scalar: &Coeff) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c * scalar);
        }
        out
    }

    /// Extends a key-level map linearly.
    pub fn linear_map<K2: Key>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (k2, c2) in f(k).iter() {
                out.add_term(k2.clone(), c * c2);
            }
        }
        out
    }

    /// Sum of all coefficients (evaluation at 1 of every key).
    pub fn sum_of_coeffs(&self) -> Coeff {
        let mut s = Coeff::zero();
        for (_, c) in self.iter() {
            s += c;
        }
        s
    }

    /// JSON form `{"basis": ..., "terms": [{"key": ..., "coeff": ...}]}`.
    pub fn to_json(&self, basis: &str) -> Value {
        let terms: Vec<Value> = self
            .iter()
            .map(|(k, c)| json!({"key": k.to_string(), "coeff": coeff_string(c)}))
            .collect();
        json!({"basis": basis, "terms": terms})
    }
}

impl<K: Key> FromIterator<(K, Coeff)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coeff)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

/// Extends a structure-constant product `f: key x key -> LinComb` bilinearly.
pub fn bilinear_extend<K1: Key, K2: Key, K3: Key>(
    mut f: impl FnMut(&K1, &K2) -> LinComb<K3>,
    a: &LinComb<K1>,
    b: &LinComb<K2>,
) -> LinComb<K3> {
    let mut out = LinComb::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            let prod = f(ka, kb);
            for (k3, c3) in prod.iter() {
                out.add_term(k3.clone(), ca * cb * c3);
            }
        }
    }
    out
}

/// `p/q` rendering of a rational, with `/1` omitted.
pub fn coeff_string(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl<K: Key> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{}", k)?;
            } else {
                write!(f, "{}*{}", coeff_string(&a), k)?;
            }
        }
        Ok(())
    }
}

/// Display adapter for tensor (pair) keys.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Tensor<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Tensor<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.0, self.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_cancels_to_zero() {
        let x = LinComb::unit("k1");
        let z = x.combine(&x, &rat(-1));
        assert!(z.is_zero());
    }

    #[test]
    fn combine_rational_arithmetic() {
        // 2/3 k1 + 3*(1/3 k1 + k2) = 5/3 k1 + 3 k2
        let a = LinComb::term("k1", Coeff::new(2.into(), 3.into()));
        let mut b = LinComb::term("k1", Coeff::new(1.into(), 3.into()));
        b.add_term("k2", rat(1));
        let c = a.combine(&b, &rat(3));
        assert_eq!(c.coeff(&"k1"), Coeff::new(5.into(), 3.into()));
        assert_eq!(c.coeff(&"k2"), rat(3));
    }

    #[test]
    fn doubling_a_term() {
        let x = LinComb::unit("phi");
        assert_eq!(x.combine(&x, &rat(1)).coeff(&"phi"), rat(2));
    }

    #[test]
    fn bilinear_zero_absorbs() {
        let b = LinComb::unit("x");
        let out = bilinear_extend(|_, _| LinComb::unit("y"), &LinComb::<&str>::zero(), &b);
        assert!(out.is_zero());
    }

    #[test]
    fn bilinear_single_terms() {
        let a = LinComb::term("a", rat(2));
        let b = LinComb::term("b", rat(3));
        let out = bilinear_extend(|x, y| LinComb::unit(format!("{x}{y}")), &a, &b);
        assert_eq!(out.coeff(&"ab".to_string()), rat(6));
    }

    #[test]
    fn bilinear_distributes() {
        // compare against term-by-term expansion on multi-term inputs
        let a: LinComb<i64> = [(1, rat(2)), (2, rat(-1)), (5, rat(3))].into_iter().collect();
        let b: LinComb<i64> = [(3, rat(4)), (7, rat(1)), (9, rat(-2))].into_iter().collect();
        let f = |x: &i64, y: &i64| LinComb::unit(x * y);
        let fast = bilinear_extend(f, &a, &b);
        let mut slow = LinComb::zero();
        for (ka, ca) in a.iter() {
            for (kb, cb) in b.iter() {
                slow.add_term(ka * kb, ca * cb);
            }
        }
        assert_eq!(fast, slow);
    }

    #[test]
    fn json_shape() {
        let mut x = LinComb::term("k1", Coeff::new(5.into(), 3.into()));
        x.add_term("k2", rat(3));
        let v = x.to_json("test");
        assert_eq!(v["basis"], "test");
        assert_eq!(v["terms"][0]["coeff"], "5/3");
        assert_eq!(v["terms"][1]["coeff"], "3");
    }
}
