//! Formal integer-coefficient linear combinations over an ordered basis type.
//!
//! This is the universal value type of the crate: operad elements, relation
//! vectors and differentials are all `Lin<B>` for a basis `B`. No zero
//! coefficient is ever stored, so equality of values is equality of maps.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::exalg::Int;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lin<B: Ord>(BTreeMap<B, Int>);

impl<B: Ord> Default for Lin<B> {
    fn default() -> Self {
        Lin(BTreeMap::new())
    }
}

impl<B: Ord + Clone> Lin<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(b: B, c: impl Into<Int>) -> Self {
        let mut l = Self::zero();
        l.add_term(b, c.into());
        l
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Int {
        self.0.get(b).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Int)> {
        self.0.iter()
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (B, Int)> {
        self.0.into_iter()
    }

    pub fn add_term(&mut self, b: B, c: Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (b, c) in other.iter() {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (b, c) in other.iter() {
            self.add_term(b.clone(), -c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.sub_assign(other);
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Lin(self.0.iter().map(|(b, x)| (b.clone(), x * c)).collect())
    }

    pub fn scale_i8(&self, s: i8) -> Self {
        match s {
            1 => self.clone(),
            -1 => self.neg(),
            0 => Self::zero(),
            _ => self.scale(&BigInt::from(s)),
        }
    }

    /// Linear extension of a basis-level map `B -> Lin<C>`.
    pub fn map<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> Lin<C>) -> Lin<C> {
        let mut out = Lin::zero();
        for (b, c) in self.iter() {
            let image = f(b);
            for (cb, cc) in image.iter() {
                out.add_term(cb.clone(), cc * c);
            }
        }
        out
    }

    /// Divides all coefficients by their common content (gcd), returning the
    /// primitive part and the content. Zero maps to (zero, 0).
    pub fn primitive_part(&self) -> (Self, Int) {
        if self.is_zero() {
            return (Self::zero(), BigInt::zero());
        }
        let mut g = BigInt::zero();
        for (_, c) in self.iter() {
            g = num::Integer::gcd(&g, c);
        }
        if g.is_one() {
            return (self.clone(), g);
        }
        (
            Lin(self.0.iter().map(|(b, c)| (b.clone(), c / &g)).collect()),
            g,
        )
    }
}

impl<B: Ord + Clone> FromIterator<(B, Int)> for Lin<B> {
    fn from_iter<T: IntoIterator<Item = (B, Int)>>(iter: T) -> Self {
        let mut l = Lin::zero();
        for (b, c) in iter {
            l.add_term(b, c);
        }
        l
    }
}

impl<B: Ord + fmt::Display> fmt::Display for Lin<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in &self.0 {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{a}*{b}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_cancels() {
        let v = Lin::term("a", 3);
        let w = v.scale(&BigInt::from(-1));
        assert!(v.add(&w).is_zero());
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let mut v = Lin::term("a", 2);
        v.add_term("a", BigInt::from(-2));
        assert!(v.is_zero());
        assert_eq!(v.len(), 0);
    }

    #[test]
    fn display() {
        let mut v = Lin::term("x", 1);
        v.add_term("y", BigInt::from(-2));
        assert_eq!(v.to_string(), "x - 2*y");
    }
}
