use std::fmt;
use std::ops::{Add, AddAssign, Index, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{fmt_q, parse_q, q, qi, Q};

/// A vector of exact rational coordinates in an ambient Euclidean space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactVector(pub Vec<Q>);

impl ExactVector {
    pub fn zero(n: usize) -> Self {
        ExactVector(vec![Q::zero(); n])
    }

    /// The coordinate vector ε_i (0-based index).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = Q::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        ExactVector(xs.iter().map(|&x| qi(x)).collect())
    }

    /// Coordinates given as numerators over a common denominator.
    pub fn from_frac(xs: &[i64], den: i64) -> Self {
        ExactVector(xs.iter().map(|&x| q(x, den)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Standard dot product.
    pub fn dot(&self, other: &Self) -> Q {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Q) -> Self {
        ExactVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn norm2(&self) -> Q {
        self.dot(self)
    }

    /// Linear combination Σ cᵢ vᵢ; `n` is the ambient dimension.
    pub fn combination(n: usize, terms: &[(Q, &ExactVector)]) -> Self {
        let mut out = Self::zero(n);
        for (c, v) in terms {
            out += &v.scale(c);
        }
        out
    }
}

impl Index<usize> for ExactVector {
    type Output = Q;
    fn index(&self, i: usize) -> &Q {
        &self.0[i]
    }
}

impl<'a> Add<&'a ExactVector> for &'a ExactVector {
    type Output = ExactVector;
    fn add(self, rhs: &ExactVector) -> ExactVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        ExactVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a ExactVector> for &'a ExactVector {
    type Output = ExactVector;
    fn sub(self, rhs: &ExactVector) -> ExactVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        ExactVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExactVector {
    type Output = ExactVector;
    fn neg(self) -> ExactVector {
        ExactVector(self.0.iter().map(|a| -a).collect())
    }
}

impl AddAssign<&ExactVector> for ExactVector {
    fn add_assign(&mut self, rhs: &ExactVector) {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_q(x))?;
        }
        write!(f, ")")
    }
}

impl Serialize for ExactVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.iter().map(fmt_q).collect::<Vec<_>>().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_q(s).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()
            .map(ExactVector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = ExactVector::from_ints(&[1, -1, 0]);
        let b = ExactVector::from_frac(&[1, 1, 1], 2);
        assert_eq!((&a + &b).to_string(), "(3/2, -1/2, 1/2)");
        assert_eq!(a.dot(&b), Q::zero());
        assert_eq!(b.norm2(), q(3, 4));
        assert_eq!(&(&a - &a), &ExactVector::zero(3));
    }

    #[test]
    fn json_uses_strings() {
        let v = ExactVector::from_frac(&[1, -3], 2);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["1/2","-3/2"]"#);
        let back: ExactVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
