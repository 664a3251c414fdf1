//! Root systems of types A–G in Bourbaki coordinates, and the Weyl dimension
//! formula used as the independent oracle.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{as_integer, fmt_q, half, is_nonneg_integer, qi, Q};
use crate::vector::ExactVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => LieType::A,
            "B" => LieType::B,
            "C" => LieType::C,
            "D" => LieType::D,
            "E" => LieType::E,
            "F" => LieType::F,
            "G" => LieType::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        })
    }
}

/// Parses names such as `E6`, `A3`, `g2`.
pub fn parse_type_name(s: &str) -> Result<(LieType, usize)> {
    let s = s.trim();
    let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
    let t: LieType = head.parse()?;
    let r: usize = tail
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
    Ok((t, r))
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<ExactVector>,
    pub positive_roots: Vec<ExactVector>,
    /// Simple-root coordinates of each positive root, aligned with `positive_roots`.
    pub positive_coeffs: Vec<Vec<i64>>,
    /// Multiplier applied to the standard dot product.
    pub form_scale: Q,
    index: HashMap<ExactVector, usize>,
}

fn eps(n: usize, terms: &[(usize, i64)]) -> ExactVector {
    let mut v = ExactVector::zero(n);
    for &(i, c) in terms {
        v.0[i - 1] += qi(c);
    }
    v
}

fn simple_roots_for(t: LieType, l: usize) -> Result<(usize, Vec<ExactVector>)> {
    let bad = || Error::InvalidRootSystem(t.to_string(), l);
    let chain = |n: usize, k: usize| -> Vec<ExactVector> {
        (1..=k).map(|i| eps(n, &[(i, 1), (i + 1, -1)])).collect()
    };
    Ok(match t {
        LieType::A => {
            if l < 1 {
                return Err(bad());
            }
            (l + 1, chain(l + 1, l))
        }
        LieType::B => {
            if l < 2 {
                return Err(bad());
            }
            let mut s = chain(l, l - 1);
            s.push(eps(l, &[(l, 1)]));
            (l, s)
        }
        LieType::C => {
            if l < 2 {
                return Err(bad());
            }
            let mut s = chain(l, l - 1);
            s.push(eps(l, &[(l, 2)]));
            (l, s)
        }
        LieType::D => {
            if l < 2 {
                return Err(bad());
            }
            let mut s = chain(l, l - 1);
            s.push(eps(l, &[(l - 1, 1), (l, 1)]));
            (l, s)
        }
        LieType::E => {
            if !(6..=8).contains(&l) {
                return Err(bad());
            }
            let mut s = vec![ExactVector::from_frac(&[1, -1, -1, -1, -1, -1, -1, 1], 2)];
            s.push(eps(8, &[(1, 1), (2, 1)]));
            for k in 3..=l {
                s.push(eps(8, &[(k - 1, 1), (k - 2, -1)]));
            }
            (8, s)
        }
        LieType::F => {
            if l != 4 {
                return Err(bad());
            }
            let s = vec![
                eps(4, &[(2, 1), (3, -1)]),
                eps(4, &[(3, 1), (4, -1)]),
                eps(4, &[(4, 1)]),
                ExactVector::from_frac(&[1, -1, -1, -1], 2),
            ];
            (4, s)
        }
        LieType::G => {
            if l != 2 {
                return Err(bad());
            }
            (3, vec![eps(3, &[(1, 1), (2, -1)]), eps(3, &[(1, -2), (2, 1), (3, 1)])])
        }
    })
}

/// Number of positive roots for each type.
pub fn positive_root_count(t: LieType, l: usize) -> usize {
    match t {
        LieType::A => l * (l + 1) / 2,
        LieType::B | LieType::C => l * l,
        LieType::D => l * (l - 1),
        LieType::E => match l {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        LieType::F => 24,
        LieType::G => 6,
    }
}

fn cartan(simple: &[ExactVector]) -> Vec<Vec<Q>> {
    // a[i][j] = ⟨αᵢ, αⱼ∨⟩
    simple
        .iter()
        .map(|ai| {
            simple
                .iter()
                .map(|aj| qi(2) * ai.dot(aj) / aj.norm2())
                .collect()
        })
        .collect()
}

/// Enumerates positive roots in simple-root coordinates by the root-string
/// criterion: for β ≠ αᵢ, β + αᵢ is a root iff p − ⟨β, αᵢ∨⟩ > 0, where p is
/// the length of the αᵢ-string below β.
fn positive_coefficients(a: &[Vec<Q>]) -> Vec<Vec<i64>> {
    let l = a.len();
    let cart: Vec<Vec<i64>> = a
        .iter()
        .map(|r| r.iter().map(|x| x.to_integer().try_into().unwrap()).collect())
        .collect();
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone());
        }
        all.extend(layer.iter().cloned());
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &layer {
            for i in 0..l {
                let is_simple_i = beta.iter().enumerate().all(|(j, &c)| c == (j == i) as i64);
                if is_simple_i {
                    continue;
                }
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..l).map(|j| beta[j] * cart[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    all
}

/// Builds the root system of the given type and rank with simple roots as in
/// Bourbaki's planches (E6 and E7 inside the 8-dimensional E8 space, G2 in
/// the sum-zero plane of Q³).
pub fn build_root_system(lie_type: LieType, rank: usize) -> Result<RootSystem> {
    let (n, simple) = simple_roots_for(lie_type, rank)?;
    let a = cartan(&simple);
    let coeffs = positive_coefficients(&a);
    let roots: Vec<ExactVector> = coeffs
        .iter()
        .map(|c| {
            let terms: Vec<(Q, &ExactVector)> = c.iter().map(|&x| qi(x)).zip(simple.iter()).collect();
            ExactVector::combination(n, &terms)
        })
        .collect();
    let long = roots.iter().map(ExactVector::norm2).max().expect("nonempty");
    let index = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect();
    let rs = RootSystem {
        lie_type,
        rank,
        ambient_dim: n,
        simple_roots: simple,
        positive_roots: roots,
        positive_coeffs: coeffs,
        form_scale: qi(2) / long,
        index,
    };
    if rs.positive_roots.len() != positive_root_count(lie_type, rank) {
        return Err(Error::InvalidRootSystem(lie_type.to_string(), rank));
    }
    Ok(rs)
}

impl RootSystem {
    pub fn name(&self) -> String {
        format!("{}{}", self.lie_type, self.rank)
    }

    /// ⟨a | b⟩ under the current form.
    pub fn form(&self, a: &ExactVector, b: &ExactVector) -> Q {
        &self.form_scale * a.dot(b)
    }

    pub fn with_form_scale(&self, s: Q) -> RootSystem {
        assert!(s > Q::zero(), "form scale must be positive");
        RootSystem {
            form_scale: s,
            ..self.clone()
        }
    }

    /// 0-based position of a positive root.
    pub fn positive_index(&self, v: &ExactVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &ExactVector) -> bool {
        self.index.contains_key(v) || self.index.contains_key(&-v)
    }

    /// ⟨αᵢ, αⱼ∨⟩, 0-based.
    pub fn cartan_matrix(&self) -> Vec<Vec<Q>> {
        cartan(&self.simple_roots)
    }

    /// Simple roots i and j (0-based) are joined in the Dynkin diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && !self.simple_roots[i].dot(&self.simple_roots[j]).is_zero()
    }

    pub fn long_norm2(&self) -> Q {
        self.positive_roots.iter().map(ExactVector::norm2).max().unwrap()
    }

    pub fn short_norm2(&self) -> Q {
        self.positive_roots.iter().map(ExactVector::norm2).min().unwrap()
    }

    pub fn coroot(&self, alpha: &ExactVector) -> Result<ExactVector> {
        coroot(self, alpha)
    }

    pub fn rho(&self) -> ExactVector {
        rho(&self.positive_roots, self.ambient_dim)
    }

    pub fn fundamental_weights(&self) -> Vec<ExactVector> {
        fundamental_weights(self)
    }

    /// Σ cᵢ ϖᵢ.
    pub fn weight(&self, coeffs: &[i64]) -> ExactVector {
        assert_eq!(coeffs.len(), self.rank, "one coefficient per fundamental weight");
        let fw = self.fundamental_weights();
        let terms: Vec<(Q, &ExactVector)> = coeffs.iter().map(|&c| qi(c)).zip(fw.iter()).collect();
        ExactVector::combination(self.ambient_dim, &terms)
    }

    /// ⟨λ, αᵢ∨⟩ for each simple root.
    pub fn dynkin_labels(&self, lambda: &ExactVector) -> Vec<Q> {
        self.simple_roots
            .iter()
            .map(|a| qi(2) * lambda.dot(a) / a.norm2())
            .collect()
    }

    pub fn is_dominant(&self, lambda: &ExactVector) -> bool {
        self.dynkin_labels(lambda).iter().all(is_nonneg_integer)
    }

    pub fn weyl_dimension(&self, lambda: &ExactVector) -> Result<BigInt> {
        weyl_dimension(self, lambda)
    }
}

/// Form scale making Δ₀ roots have squared length 2.
///
/// `delta0` holds 1-based simple root indices. Empty Δ₀ keeps the Bourbaki
/// scale (long roots of squared length 2). When Δ₀ has two root lengths the
/// long roots are normalized inside a type-B ideal and the short roots inside
/// a type-C ideal. In type C the ideal through the long simple root is always
/// treated as type C, including C₁.
pub fn normalized_form(rs: &RootSystem, delta0: &[usize]) -> Q {
    let two = qi(2);
    if delta0.is_empty() {
        return two / rs.long_norm2();
    }
    let long = rs.long_norm2();
    let short = rs.short_norm2();
    let len = |i: usize| rs.simple_roots[i - 1].norm2();
    let lengths: BTreeSet<Q> = delta0.iter().map(|&i| len(i)).collect();
    let long_wins = || two.clone() / long.clone();
    let short_wins = || two.clone() / short.clone();
    if lengths.len() == 1 {
        let l = lengths.into_iter().next().unwrap();
        if rs.lie_type == LieType::C && l == long {
            return short_wins();
        }
        return two / l;
    }
    for comp in components(rs, delta0) {
        let n_short = comp.iter().filter(|&&i| len(i) == short).count();
        let n_long = comp.len() - n_short;
        if n_short == 0 || n_long == 0 {
            continue;
        }
        return if n_short == 1 && n_long > 1 {
            long_wins()
        } else if n_long == 1 && n_short > 1 {
            short_wins()
        } else if rs.lie_type == LieType::C {
            short_wins()
        } else {
            long_wins()
        };
    }
    if rs.lie_type == LieType::C {
        short_wins()
    } else {
        long_wins()
    }
}

/// Connected components of a set of simple roots (1-based indices).
pub fn components(rs: &RootSystem, nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let cur = comp[k];
            let nbrs: Vec<usize> = left
                .iter()
                .copied()
                .filter(|&j| rs.adjacent(cur - 1, j - 1))
                .collect();
            for j in nbrs {
                left.remove(&j);
                comp.push(j);
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn coroot(rs: &RootSystem, alpha: &ExactVector) -> Result<ExactVector> {
    if alpha.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(alpha.scale(&(qi(2) / rs.form(alpha, alpha))))
}

/// Half the sum of the given roots.
pub fn rho(roots: &[ExactVector], ambient_dim: usize) -> ExactVector {
    let mut s = ExactVector::zero(ambient_dim);
    for r in roots {
        s += r;
    }
    s.scale(&half())
}

/// Dual basis to the simple coroots, inside the span of the roots.
pub fn fundamental_weights(rs: &RootSystem) -> Vec<ExactVector> {
    // ϖᵢ = Σₖ cᵢₖ αₖ with Σₖ cᵢₖ ⟨αₖ, αⱼ∨⟩ = δᵢⱼ, so c is the inverse of the Cartan matrix.
    let c = linalg::inverse(&rs.cartan_matrix()).expect("Cartan matrix is invertible");
    c.iter()
        .map(|row| {
            let terms: Vec<(Q, &ExactVector)> = row.iter().cloned().zip(rs.simple_roots.iter()).collect();
            ExactVector::combination(rs.ambient_dim, &terms)
        })
        .collect()
}

/// ∏_{α>0} ⟨λ+ρ|α⟩ / ⟨ρ|α⟩, asserted to be a positive integer.
pub fn weyl_dimension(rs: &RootSystem, lambda: &ExactVector) -> Result<BigInt> {
    if lambda.dim() != rs.ambient_dim || !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let rho = rs.rho();
    let lr = lambda + &rho;
    let mut num = Q::one();
    let mut den = Q::one();
    for a in &rs.positive_roots {
        num *= lr.dot(a);
        den *= rho.dot(a);
    }
    let d = num / den;
    match as_integer(&d) {
        Some(n) if n > BigInt::zero() => Ok(n),
        _ => Err(Error::structural(
            &rs.name(),
            format!("Weyl product {} is not a positive integer", fmt_q(&d)),
        )),
    }
}

/// A signed permutation of coordinate indices: εᵢ ↦ ±ε_{π(i)}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    /// 0-based image index and sign for each source index.
    images: Vec<(usize, bool)>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (0..n).map(|i| (i, false)).collect(),
        }
    }

    /// Builds a map from 1-based moves `(from, to, negate)`; unlisted indices
    /// are fixed. The result must be a bijection.
    pub fn from_moves(n: usize, moves: &[(usize, usize, bool)]) -> Result<Self> {
        let mut images: Vec<Option<(usize, bool)>> = vec![None; n];
        for &(from, to, neg) in moves {
            if from == 0 || from > n || to == 0 || to > n {
                return Err(Error::Permutation(format!("index out of range in {from}->{to}")));
            }
            if images[from - 1].is_some() {
                return Err(Error::Permutation(format!("index {from} assigned twice")));
            }
            images[from - 1] = Some((to - 1, neg));
        }
        let images: Vec<(usize, bool)> = images
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.unwrap_or((i, false)))
            .collect();
        let targets: BTreeSet<usize> = images.iter().map(|x| x.0).collect();
        if targets.len() != n {
            return Err(Error::Permutation("not a bijection".into()));
        }
        Ok(SignedPermutation { images })
    }

    /// Transposition of two 1-based indices.
    pub fn swap(n: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_moves(n, &[(a, b, false), (b, a, false)])
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.len(), other.len());
        SignedPermutation {
            images: other
                .images
                .iter()
                .map(|&(j, s)| {
                    let (k, t) = self.images[j];
                    (k, s ^ t)
                })
                .collect(),
        }
    }

    pub fn apply(&self, v: &ExactVector) -> Result<ExactVector> {
        apply_signed_permutation(self, v)
    }
}

pub fn apply_signed_permutation(w: &SignedPermutation, v: &ExactVector) -> Result<ExactVector> {
    if w.len() != v.dim() {
        return Err(Error::Permutation(format!(
            "permutation of {} indices applied to a vector of length {}",
            w.len(),
            v.dim()
        )));
    }
    let mut out = ExactVector::zero(v.dim());
    for (i, &(j, neg)) in w.images.iter().enumerate() {
        out.0[j] = if neg { -v.0[i].clone() } else { v.0[i].clone() };
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn all_types() -> Vec<(LieType, usize)> {
        use LieType::*;
        let mut v = vec![(E, 6), (E, 7), (E, 8), (F, 4), (G, 2)];
        for l in 1..=6 {
            v.push((A, l));
        }
        for l in 2..=6 {
            v.extend([(B, l), (C, l), (D, l)]);
        }
        v
    }

    #[test]
    fn counts_and_rho() {
        for (t, l) in all_types() {
            let rs = build_root_system(t, l).unwrap();
            assert_eq!(rs.positive_roots.len(), positive_root_count(t, l));
            let rho = rs.rho();
            for a in &rs.simple_roots {
                assert_eq!(qi(2) * rho.dot(a) / a.norm2(), Q::one(), "{}", rs.name());
            }
            let fw = rs.fundamental_weights();
            for (i, w) in fw.iter().enumerate() {
                let labels = rs.dynkin_labels(w);
                for (j, x) in labels.iter().enumerate() {
                    assert_eq!(*x, qi((i == j) as i64));
                }
            }
        }
    }

    #[test]
    fn g2_roots() {
        let rs = build_root_system(LieType::G, 2).unwrap();
        let want: Vec<Vec<i64>> = vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ];
        let mut got = rs.positive_coeffs.clone();
        got.sort();
        let mut want = want;
        want.sort();
        assert_eq!(got, want);
        assert_eq!(rs.form_scale, q(1, 3));
        let fw = rs.fundamental_weights();
        let a = &rs.simple_roots;
        assert_eq!(fw[0], &(&a[0] + &a[0]) + &a[1]);
    }

    #[test]
    fn bourbaki_conventions() {
        let f4 = build_root_system(LieType::F, 4).unwrap();
        assert_eq!(f4.simple_roots[3], ExactVector::from_frac(&[1, -1, -1, -1], 2));
        assert_eq!(f4.fundamental_weights()[3], ExactVector::unit(4, 0));
        let b = build_root_system(LieType::B, 4).unwrap();
        assert_eq!(b.fundamental_weights()[0], ExactVector::unit(4, 0));
        let a = build_root_system(LieType::A, 3).unwrap();
        assert_eq!(a.fundamental_weights()[0], ExactVector::from_frac(&[3, -1, -1, -1], 4));
        let c = build_root_system(LieType::C, 3).unwrap();
        let c1 = c.with_form_scale(qi(1));
        assert_eq!(c1.coroot(&c1.simple_roots[2]).unwrap(), ExactVector::unit(3, 2));
        let b1 = b.with_form_scale(qi(1));
        assert_eq!(b1.coroot(&b1.simple_roots[3]).unwrap(), ExactVector::from_ints(&[0, 0, 0, 2]));
    }

    #[test]
    fn weyl_small_cases() {
        let a2 = build_root_system(LieType::A, 2).unwrap();
        assert_eq!(a2.weyl_dimension(&a2.weight(&[1, 1])).unwrap(), BigInt::from(8));
        assert_eq!(a2.weyl_dimension(&a2.weight(&[0, 0])).unwrap(), BigInt::from(1));
        let f4 = build_root_system(LieType::F, 4).unwrap();
        assert_eq!(f4.weyl_dimension(&f4.weight(&[0, 0, 0, 1])).unwrap(), BigInt::from(26));
        let e8 = build_root_system(LieType::E, 8).unwrap();
        assert_eq!(e8.weyl_dimension(&e8.weight(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(), BigInt::from(248));
        assert!(a2.weyl_dimension(&a2.weight(&[-1, 0])).is_err());
    }

    #[test]
    fn normalization_rules() {
        let g2 = build_root_system(LieType::G, 2).unwrap();
        assert_eq!(normalized_form(&g2, &[2]), q(1, 3));
        let c5 = build_root_system(LieType::C, 5).unwrap();
        assert_eq!(normalized_form(&c5, &[3, 4, 5]), qi(1));
        assert_eq!(normalized_form(&c5, &[5]), qi(1));
        assert_eq!(normalized_form(&c5, &[]), q(1, 2));
        let b2 = build_root_system(LieType::B, 2).unwrap();
        assert_eq!(normalized_form(&b2, &[2]), qi(2));
        let b4 = build_root_system(LieType::B, 4).unwrap();
        assert_eq!(normalized_form(&b4, &[2, 3, 4]), qi(1));
        let f4 = build_root_system(LieType::F, 4).unwrap();
        assert_eq!(normalized_form(&f4, &[1, 2, 3]), qi(1));
    }

    #[test]
    fn signed_permutations() {
        let v = ExactVector::from_ints(&[1, 2, 3]);
        let id = SignedPermutation::identity(3);
        assert_eq!(id.apply(&v).unwrap(), v);
        let flip = SignedPermutation::from_moves(3, &[(2, 2, true)]).unwrap();
        assert_eq!(flip.apply(&v).unwrap(), ExactVector::from_ints(&[1, -2, 3]));
        let s = SignedPermutation::swap(3, 1, 3).unwrap();
        assert_eq!(s.compose(&flip).apply(&v).unwrap(), ExactVector::from_ints(&[3, -2, 1]));
        assert!(SignedPermutation::from_moves(3, &[(1, 2, false)]).is_err());
        assert!(SignedPermutation::from_moves(3, &[(4, 1, false)]).is_err());
        assert!(id.apply(&ExactVector::zero(2)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_type_name("E6").unwrap(), (LieType::E, 6));
        assert_eq!(parse_type_name("a12").unwrap(), (LieType::A, 12));
        assert!(parse_type_name("X3").is_err());
    }
}
