//! Exact scalars and sparse linear combinations.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

/// The ground field: arbitrary-precision rationals.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p`, `-p` or `p/q`. Returns `None` on malformed input or zero denominator.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = text.split_once('/').unwrap_or((text, "1"));
    if den.starts_with(['-', '+']) {
        return None;
    }
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(BigInt::from_str(num).ok()?, den))
}

/// Parses a nonzero scalar.
pub fn parse_unit(text: &str) -> Option<Scalar> {
    parse_scalar(text).filter(|s| !s.is_zero())
}

/// A finite linear combination of basis keys with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(Scalar::one(), key)
    }

    pub fn term(coeff: Scalar, key: K) -> Self {
        let mut out = Self::zero();
        out.add_term(coeff, key);
        out
    }

    pub fn add_term(&mut self, coeff: Scalar, key: K) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, coeff: &Scalar, other: &LinComb<K>) {
        for (k, c) in &other.terms {
            self.add_term(coeff * c, k.clone());
        }
    }

    pub fn scale(&self, coeff: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(coeff, self);
        out
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

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    /// The single term, when the combination has exactly one.
    pub fn as_monomial(&self) -> Option<(&K, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<L, F>(&self, mut f: F) -> LinComb<L>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> LinComb<L>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Like [`LinComb::map_linear`] for fallible maps.
    pub fn try_map_linear<L, F, E>(&self, mut f: F) -> Result<LinComb<L>, E>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> Result<LinComb<L>, E>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k)?);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(Scalar, K)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (Scalar, K)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (c, k) in iter {
            out.add_term(c, k);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ratios() {
        assert_eq!(parse_scalar("1/6"), Some(ratio(1, 6)));
        assert_eq!(parse_scalar("-4/6"), Some(ratio(-2, 3)));
        assert_eq!(parse_scalar("7"), Some(int(7)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("1/00"), None);
        assert_eq!(parse_scalar("3/-2"), None);
        assert_eq!(parse_scalar("0.5"), None);
        assert_eq!(parse_unit("0"), None);
    }

    #[test]
    fn cancelling_terms_vanish() {
        let mut c = LinComb::term(int(2), 'a');
        c.add_term(int(-2), 'a');
        assert!(c.is_zero());
        c.add_term(int(3), 'b');
        assert_eq!(c.as_monomial(), Some((&'b', &int(3))));
    }
}
