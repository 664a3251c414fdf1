//! Dimension functions and the product formulas over restricted roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::weight_coeffs;
use crate::error::{Error, Result};
use crate::rational::{as_integer, fmt_q, half, q, qi, serde_bigint, serde_q, Q};
use crate::restriction::{Analysis, RestrictedRootDatum};
use crate::vector::ExactVector;

fn check_half_integer(t: &Q) -> Result<()> {
    let twice = t * qi(2);
    if t.is_negative() || !twice.is_integer() {
        return Err(Error::Signature(format!("t = {} is not a nonnegative half-integer", fmt_q(t))));
    }
    Ok(())
}

/// φ(x; t) = (x−t)(x−t+1)⋯(x+t).
pub fn phi(x: &Q, t: &Q) -> Result<Q> {
    check_half_integer(t)?;
    let n = (t * qi(2)).to_integer();
    let mut out = Q::one();
    let mut j = BigInt::zero();
    let start = x - t;
    while j <= n {
        out *= &start + Q::from_integer(j.clone());
        j += 1;
    }
    Ok(out)
}

/// Φ(x, y; t) = φ(x+y; t)/φ(y; t).
pub fn phi_ratio(x: &Q, y: &Q, t: &Q) -> Result<Q> {
    let den = phi(y, t)?;
    if den.is_zero() {
        return Err(Error::Pole(format!("φ({}; {}) = 0", fmt_q(y), fmt_q(t))));
    }
    Ok(phi(&(x + y), t)? / den)
}

/// Multiplicities of ξ, 2ξ and 3ξ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub m: usize,
    pub m2: usize,
    pub m3: usize,
}

impl Signature {
    pub fn new(m: usize, m2: usize, m3: usize) -> Self {
        Signature { m, m2, m3 }
    }

    pub fn degree(&self) -> usize {
        self.m + self.m2 + self.m3
    }

    pub fn is_regular_admissible(&self) -> bool {
        let even = self.m >= 2 && self.m % 2 == 0;
        match (self.m, self.m2, self.m3) {
            (8, 7, 0) | (3, 3, 0) | (2, 1, 2) => true,
            (m, 0, 0) => m >= 1,
            (_, 1, 0) | (_, 3, 0) => even,
            _ => false,
        }
    }

    pub fn is_singular_admissible(&self) -> bool {
        match (self.m, self.m2, self.m3) {
            (m, 0, 0) => m >= 1,
            (m, 1, 0) => m >= 2 && m % 2 == 0,
            _ => false,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.m2, self.m3) {
            (0, 0) => write!(f, "{}", self.m),
            (_, 0) => write!(f, "{},{}", self.m, self.m2),
            _ => write!(f, "{},{},{}", self.m, self.m2, self.m3),
        }
    }
}

/// The regular functions W(x, y; m, m₂, m₃).
pub fn w_regular(x: &Q, y: &Q, sig: Signature) -> Result<Q> {
    if !sig.is_regular_admissible() {
        return Err(Error::Signature(format!("W({sig})")));
    }
    let p = |x: &Q, y: &Q, t: Q| phi_ratio(x, y, &t);
    let z = Q::zero();
    let (x2, y2) = (x * qi(2), y * qi(2));
    let m = sig.m as i64;
    Ok(match (sig.m, sig.m2, sig.m3) {
        (1, 0, 0) => p(x, y, z)?,
        (2, 0, 0) => p(x, y, z.clone())?.pow(2),
        (3, 0, 0) => p(x, y, qi(1))?,
        (_, 0, 0) => p(x, y, z)? * p(x, y, q(m, 2) - qi(1))?,
        (8, 7, 0) => p(x, y, z)? * p(&x2, &y2, q(3, 2))? * p(&x2, &y2, q(9, 2))?,
        (3, 3, 0) => p(x, y, qi(1))? * p(&x2, &y2, qi(1))?,
        (2, 1, 2) => {
            p(x, y, half())? * p(&x2, &y2, z)? * p(&(x * qi(3)), &(y * qi(3)), half())?
        }
        (_, 1, 0) => p(x, y, z)? * p(x, y, q(m, 4) - half())?.pow(2),
        (_, 3, 0) => {
            p(x, y, q(m, 4) - half())? * p(x, y, q(m, 4) + half())? / p(x, y, half())?
                * p(&x2, &y2, qi(1))?
        }
        _ => unreachable!("admissibility checked above"),
    })
}

/// The singular functions W_sing(x, y; m, m₂).
pub fn w_singular(x: &Q, y: &Q, sig: Signature) -> Result<Q> {
    if !sig.is_singular_admissible() {
        return Err(Error::Signature(format!("W_sing({sig})")));
    }
    let m = sig.m as i64;
    if sig.m2 == 0 {
        phi_ratio(x, y, &(q(m, 2) - half()))
    } else {
        phi_ratio(x, y, &q(m, 2))
    }
}

/// ∏_{s} (x + y + s)/(y + s).
pub fn shift_product(x: &Q, y: &Q, shifts: &[Q]) -> Result<Q> {
    let mut out = Q::one();
    for s in shifts {
        let den = y + s;
        if den.is_zero() {
            return Err(Error::Pole(format!("⟨δ|ξ⟩ + shift = 0 at shift {}", fmt_q(s))));
        }
        out *= (x + y + s) / den;
    }
    Ok(out)
}

/// Which closed forms reproduce the combined factor of ξ, 2ξ, 3ξ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormMatch {
    pub signature: Signature,
    pub regular: bool,
    pub singular: bool,
}

impl FormMatch {
    /// Both forms coincide as functions (m = 1 or 3 with no multiples).
    pub fn ambiguous(&self) -> bool {
        self.regular && self.singular
    }

    pub fn formula(&self, klass: crate::catalog::Klass) -> String {
        match klass {
            crate::catalog::Klass::Regular => format!("W({})", self.signature),
            crate::catalog::Klass::Singular => format!("W_sing({})", self.signature),
        }
    }
}

/// Product of the shift factors of ξ, 2ξ, 3ξ as a function of x = ⟨λ|ξ⟩.
fn family_factor(x: &Q, y: &Q, shifts: &[&[Q]; 3]) -> Result<Q> {
    let mut out = Q::one();
    for (k, s) in shifts.iter().enumerate() {
        let kq = qi(k as i64 + 1);
        out *= shift_product(&(x * &kq), &(y * &kq), s)?;
    }
    Ok(out)
}

/// Decides which of W and W_sing equals the shift product, by exact
/// evaluation at degree + 2 integer points. `shifts[k]` holds the shifts of
/// (k+1)ξ and `y` is ⟨δ|ξ⟩.
pub fn match_w_form(y: &Q, shifts: [&[Q]; 3]) -> Result<FormMatch> {
    let sig = Signature::new(shifts[0].len(), shifts[1].len(), shifts[2].len());
    if sig.m == 0 {
        return Err(Error::Signature(format!("empty nest ({sig})")));
    }
    let points: Vec<Q> = (1..=sig.degree() as i64 + 2).map(qi).collect();
    let target: Vec<Q> = points
        .iter()
        .map(|x| family_factor(x, y, &shifts))
        .collect::<Result<_>>()?;
    let agrees = |f: &dyn Fn(&Q) -> Result<Q>| -> bool {
        points
            .iter()
            .zip(&target)
            .all(|(x, t)| matches!(f(x), Ok(v) if v == *t))
    };
    let regular = sig.is_regular_admissible() && agrees(&|x| w_regular(x, y, sig));
    let singular = sig.is_singular_admissible() && agrees(&|x| w_singular(x, y, sig));
    if !regular && !singular {
        return Err(Error::Signature(format!(
            "no closed form matches signature ({sig}) at ⟨δ|ξ⟩ = {}",
            fmt_q(y)
        )));
    }
    Ok(FormMatch {
        signature: sig,
        regular,
        singular,
    })
}

/// d_ξ(λ) = ∏_{α ∈ nest} (⟨λ+δ|ξ⟩ + ⟨ρ_m|α⟩)/(⟨δ|ξ⟩ + ⟨ρ_m|α⟩).
pub fn nest_factor(an: &Analysis, datum: &RestrictedRootDatum, lambda: &ExactVector) -> Result<Q> {
    let x = an.rs.form(lambda, &datum.xi);
    shift_product(&x, &datum.delta_pairing, &datum.shifts).map_err(|e| {
        Error::structural(&an.pair.key(), format!("{} at {}: {e}", datum.label, datum.xi))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub label: String,
    pub xi: ExactVector,
    #[serde(with = "serde_q")]
    pub value: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub pair: String,
    pub k: Vec<u32>,
    pub lambda: ExactVector,
    /// Fundamental-weight coefficients of λ.
    pub lambda_coeffs: Vec<i64>,
    /// One factor per positive restricted root.
    pub factors: Vec<Factor>,
    #[serde(with = "serde_q")]
    pub restricted_product: Q,
    /// Product of W and W_sing over the indivisible roots.
    #[serde(with = "crate::rational::serde_q_opt", default, skip_serializing_if = "Option::is_none")]
    pub closed_form_product: Option<Q>,
    #[serde(with = "serde_bigint_opt", default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<BigInt>,
    /// Every computed path agrees; false when only path (a) ran.
    pub matches: bool,
}

impl DimensionReport {
    /// The dimension as an integer when path (a) gave one.
    pub fn value(&self) -> Option<BigInt> {
        as_integer(&self.restricted_product)
    }
}

mod serde_bigint_opt {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(v) => serde_bigint::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Paths (a), (b) and the oracle, cross-checked.
    #[default]
    Full,
    /// Path (a) only.
    Fast,
}

/// Coordinates of λ on the generators, rejecting λ outside Γ(G/H).
pub fn spherical_coordinates(an: &Analysis, lambda: &ExactVector) -> Result<Vec<u32>> {
    let bad = || Error::NotSpherical(lambda.to_string());
    if lambda.dim() != an.rs.ambient_dim {
        return Err(bad());
    }
    let c = crate::linalg::coordinates(lambda, &an.mu).ok_or_else(bad)?;
    c.iter()
        .map(|x| {
            as_integer(x)
                .filter(|n| !n.is_negative())
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(bad)
        })
        .collect()
}

/// d(λ) for λ = Σ kᵢμᵢ.
pub fn dim_for_k(an: &Analysis, k: &[u32], mode: Mode) -> Result<DimensionReport> {
    if k.len() != an.pair.spherical_rank {
        return Err(Error::NotSpherical(format!(
            "expected {} coefficients, got {}",
            an.pair.spherical_rank,
            k.len()
        )));
    }
    let coeffs = weight_coeffs(&an.pair, k);
    let lambda = an.rs.weight(&coeffs);
    let key = an.pair.key();
    let mismatch = |detail: String| Error::Mismatch {
        pair: key.clone(),
        lambda: format!("{k:?}"),
        detail,
    };

    let mut factors = Vec::with_capacity(an.data.len());
    let mut product = Q::one();
    for d in &an.data {
        let v = nest_factor(an, d, &lambda)?;
        product *= &v;
        factors.push(Factor {
            label: d.label.clone(),
            xi: d.xi.clone(),
            value: v,
        });
    }

    let mut report = DimensionReport {
        pair: key.clone(),
        k: k.to_vec(),
        lambda: lambda.clone(),
        lambda_coeffs: coeffs,
        factors,
        restricted_product: product.clone(),
        closed_form_product: None,
        oracle: None,
        matches: false,
    };
    if mode == Mode::Fast {
        return Ok(report);
    }

    let mut closed = Q::one();
    for (i, d) in an.data.iter().enumerate() {
        if d.divisibility != 1 {
            continue;
        }
        let x = an.rs.form(&lambda, &d.xi);
        let w = closed_form(an, d, &x)?;
        let fam: Q = an
            .data
            .iter()
            .enumerate()
            .filter(|(j, e)| *j == i || e.parent == Some(i))
            .map(|(j, _)| report.factors[j].value.clone())
            .product();
        if w != fam {
            return Err(mismatch(format!(
                "{}: nest product {} but {} gives {}",
                d.label,
                fmt_q(&fam),
                d.form.formula(d.klass),
                fmt_q(&w)
            )));
        }
        closed *= w;
    }
    let oracle = an.rs.weyl_dimension(&lambda)?;
    if closed != product {
        return Err(mismatch(format!(
            "closed forms give {} but nest factors give {}",
            fmt_q(&closed),
            fmt_q(&product)
        )));
    }
    if product != Q::from_integer(oracle.clone()) {
        return Err(mismatch(format!(
            "restricted product {} but the Weyl dimension is {oracle}",
            fmt_q(&product)
        )));
    }
    report.closed_form_product = Some(closed);
    report.oracle = Some(oracle);
    report.matches = true;
    Ok(report)
}

/// W or W_sing for an indivisible root at x = ⟨λ|ξ⟩.
pub fn closed_form(an: &Analysis, d: &RestrictedRootDatum, x: &Q) -> Result<Q> {
    let (x, y) = (x * &an.to_normal, &d.delta_pairing * &an.to_normal);
    match d.klass {
        crate::catalog::Klass::Regular => w_regular(&x, &y, d.form.signature),
        crate::catalog::Klass::Singular => w_singular(&x, &y, d.form.signature),
    }
}

/// d(λ) for an arbitrary weight, which must lie in Γ(G/H).
pub fn dim_restricted(an: &Analysis, lambda: &ExactVector, mode: Mode) -> Result<DimensionReport> {
    let k = spherical_coordinates(an, lambda)?;
    dim_for_k(an, &k, mode)
}

/// Binomial coefficient as an exact integer; zero when k > n or k < 0.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i);
        out = out.div_floor(&BigInt::from(i + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(phi(&qi(5), &qi(0)).unwrap(), qi(5));
        assert_eq!(phi(&qi(2), &qi(1)).unwrap(), qi(6));
        assert_eq!(phi(&q(3, 2), &half()).unwrap(), qi(2));
        assert!(phi(&qi(1), &q(1, 3)).is_err());
        assert!(phi(&qi(1), &qi(-1)).is_err());
    }

    #[test]
    fn phi_ratio_values() {
        assert_eq!(phi_ratio(&qi(0), &q(7, 3), &qi(2)).unwrap(), qi(1));
        assert_eq!(phi_ratio(&qi(1), &qi(1), &qi(0)).unwrap(), qi(2));
        assert_eq!(phi_ratio(&qi(1), &q(3, 2), &half()).unwrap(), qi(3));
        assert!(matches!(phi_ratio(&qi(1), &qi(1), &qi(1)), Err(Error::Pole(_))));
    }

    #[test]
    fn regular_forms() {
        let (x, y) = (qi(3), q(5, 2));
        let p0 = phi_ratio(&x, &y, &qi(0)).unwrap();
        assert_eq!(w_regular(&x, &y, Signature::new(1, 0, 0)).unwrap(), p0);
        assert_eq!(w_regular(&x, &y, Signature::new(2, 0, 0)).unwrap(), p0.pow(2));
        let (x2, y2) = (qi(6), qi(5));
        let expected = p0.clone()
            * phi_ratio(&x2, &y2, &q(3, 2)).unwrap()
            * phi_ratio(&x2, &y2, &q(9, 2)).unwrap();
        assert_eq!(w_regular(&x, &y, Signature::new(8, 7, 0)).unwrap(), expected);
        assert!(w_regular(&x, &y, Signature::new(3, 1, 0)).is_err());
        assert!(w_regular(&x, &y, Signature::new(4, 2, 0)).is_err());
    }

    #[test]
    fn singular_forms() {
        let (x, y) = (qi(2), q(3, 2));
        assert_eq!(w_singular(&x, &y, Signature::new(1, 0, 0)).unwrap(), phi_ratio(&x, &y, &qi(0)).unwrap());
        assert_eq!(w_singular(&x, &y, Signature::new(2, 0, 0)).unwrap(), phi_ratio(&x, &y, &half()).unwrap());
        assert_eq!(w_singular(&x, &qi(3), Signature::new(4, 1, 0)).unwrap(), phi_ratio(&x, &qi(3), &qi(2)).unwrap());
        assert!(w_singular(&x, &y, Signature::new(3, 1, 0)).is_err());
    }

    #[test]
    fn form_matching() {
        let y = qi(2);
        let z: &[Q] = &[];
        let m = match_w_form(&y, [&[qi(0), qi(0)], z, z]).unwrap();
        assert!(m.regular && !m.singular);
        let m = match_w_form(&y, [&[qi(-1), qi(0), qi(1)], z, z]).unwrap();
        assert!(m.regular && m.singular && m.ambiguous());
        let m = match_w_form(&q(3, 2), [&[q(-1, 2), q(1, 2)], z, z]).unwrap();
        assert!(!m.regular && m.singular);
        let bii: Vec<Q> = [-3, -1, 0, 1, 3].iter().map(|&n| q(n, 2)).collect();
        let m = match_w_form(&q(5, 2), [&bii, z, z]).unwrap();
        assert!(m.regular && !m.singular);
        assert!(match_w_form(&y, [&[qi(-2), qi(2)], z, z]).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
    }
}
