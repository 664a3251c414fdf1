//! The catalog of excellent spherical pairs as declarative data.
//!
//! Each entry carries the simple roots Δ₀ of the Levi factor, the free
//! generators μᵢ of the spherical weight semigroup (as coefficient vectors on
//! the fundamental weights), and the expected restricted-root table kept
//! separately from anything the engine computes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{q, qi, serde_q_opt, serde_q_vec, Q};
use crate::root_system::{build_root_system, LieType};
use crate::vector::ExactVector;

pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Klass {
    Regular,
    Singular,
}

impl Klass {
    pub fn tag(self) -> &'static str {
        match self {
            Klass::Regular => "(r)",
            Klass::Singular => "(s)",
        }
    }
}

impl fmt::Display for Klass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// How a table row names its restricted root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKey {
    /// Coordinates in the pair's basis of a*.
    Basis(#[serde(with = "serde_q_vec")] Vec<Q>),
    /// `times` × the restriction of the simple root α_alpha (1-based).
    Simple { alpha: usize, times: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRow {
    pub label: String,
    pub key: RowKey,
    pub multiplicity: usize,
    #[serde(with = "serde_q_opt", default, skip_serializing_if = "Option::is_none")]
    pub delta_pairing: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basic_roots: Option<usize>,
    #[serde(with = "serde_q_opt", default, skip_serializing_if = "Option::is_none")]
    pub h_min: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub klass: Option<Klass>,
    /// Set where the printed table value was corrected.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ExpectedRow {
    fn new(label: impl Into<String>, key: RowKey, multiplicity: usize) -> Self {
        ExpectedRow {
            label: label.into(),
            key,
            multiplicity,
            delta_pairing: None,
            basic_roots: None,
            h_min: None,
            klass: None,
            note: None,
        }
    }
    fn delta(mut self, d: Q) -> Self {
        self.delta_pairing = Some(d);
        self
    }
    fn basic(mut self, n: usize) -> Self {
        self.basic_roots = Some(n);
        self
    }
    fn h(mut self, v: i64) -> Self {
        self.h_min = Some(qi(v));
        self
    }
    fn klass(mut self, k: Klass) -> Self {
        self.klass = Some(k);
        self
    }
    fn reg(self) -> Self {
        self.klass(Klass::Regular)
    }
    fn sing(self) -> Self {
        self.klass(Klass::Singular)
    }
    fn note(mut self, n: &str) -> Self {
        self.note = Some(n.to_string());
        self
    }
}

/// Basis of a* used for reporting coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ABasis {
    Vectors(Vec<ExactVector>),
    /// Restrictions of these simple roots (1-based).
    SimpleRestrictions(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lie_type, self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalPair {
    pub id: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: Params,
    pub title: String,
    pub group: Group,
    /// 1-based simple root indices.
    pub delta0: Vec<usize>,
    /// Coefficients of each μᵢ on the fundamental weights.
    pub generators: Vec<Vec<u32>>,
    pub spherical_rank: usize,
    pub symmetric: bool,
    pub expected_table: Vec<ExpectedRow>,
    /// The expected table lists every positive restricted root.
    pub table_complete: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_basis: Option<ABasis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alias_of: Option<String>,
}

impl SphericalPair {
    /// Instance name such as `slpq(p=2,q=4)`.
    pub fn key(&self) -> String {
        if self.params.is_empty() {
            self.id.clone()
        } else {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{}({})", self.id, ps.join(","))
        }
    }

    pub fn support(&self, i: usize) -> BTreeSet<usize> {
        self.generators[i]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, _)| j + 1)
            .collect()
    }

    /// Checks the excellence conditions and internal consistency.
    pub fn validate(&self) -> Result<()> {
        let err = |d: String| Err(Error::structural(&self.key(), d));
        let rs = build_root_system(self.group.lie_type, self.group.rank)?;
        if self.generators.len() != self.spherical_rank {
            return err("number of generators differs from the spherical rank".into());
        }
        let mut union = BTreeSet::new();
        for i in 0..self.generators.len() {
            if self.generators[i].len() != rs.rank {
                return err(format!("generator {} has the wrong length", i + 1));
            }
            let s = self.support(i);
            if s.is_empty() {
                return err(format!("generator {} is zero", i + 1));
            }
            if !union.is_disjoint(&s) {
                return err(format!("support of generator {} meets an earlier one", i + 1));
            }
            union.extend(s);
        }
        let d0: BTreeSet<usize> = (1..=rs.rank).filter(|j| !union.contains(j)).collect();
        let given: BTreeSet<usize> = self.delta0.iter().copied().collect();
        if d0 != given || given.len() != self.delta0.len() {
            return err(format!("Δ₀ {:?} is not the complement of the supports {:?}", self.delta0, d0));
        }
        Ok(())
    }

    /// μᵢ as ambient vectors.
    pub fn generator_vectors(&self) -> Result<Vec<ExactVector>> {
        let rs = build_root_system(self.group.lie_type, self.group.rank)?;
        Ok(self
            .generators
            .iter()
            .map(|g| rs.weight(&g.iter().map(|&c| c as i64).collect::<Vec<_>>()))
            .collect())
    }
}

/// All k ∈ Z≥0^r with Σk ≤ max_total, in lexicographic order.
pub fn k_vectors(r: usize, max_total: u32) -> Vec<Vec<u32>> {
    fn go(r: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            go(r, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, max_total, &mut Vec::new(), &mut out);
    out
}

/// λ = Σ kᵢμᵢ as fundamental-weight coefficients.
pub fn weight_coeffs(pair: &SphericalPair, k: &[u32]) -> Vec<i64> {
    let mut out = vec![0i64; pair.group.rank];
    for (g, &ki) in pair.generators.iter().zip(k) {
        for (o, &c) in out.iter_mut().zip(g) {
            *o += ki as i64 * c as i64;
        }
    }
    out
}

/// Every λ = Σ kᵢμᵢ with Σkᵢ ≤ `max_total`, paired with its k-vector.
pub fn enumerate_spherical_weights(
    pair: &SphericalPair,
    max_total: u32,
) -> Result<Vec<(Vec<u32>, ExactVector)>> {
    let rs = build_root_system(pair.group.lie_type, pair.group.rank)?;
    Ok(k_vectors(pair.spherical_rank, max_total)
        .into_iter()
        .map(|k| {
            let lam = rs.weight(&weight_coeffs(pair, &k));
            debug_assert!(rs.is_dominant(&lam));
            (k, lam)
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    RankOne,
    HigherRank,
    Symmetric,
    Split,
}

#[derive(Clone, Debug, Serialize)]
pub struct Family {
    pub id: &'static str,
    pub title: &'static str,
    pub kind: Kind,
    pub params: &'static [&'static str],
    /// Default instantiations, one value per parameter.
    pub defaults: Vec<Vec<i64>>,
}

impl Family {
    fn new(id: &'static str, title: &'static str, kind: Kind, params: &'static [&'static str], defaults: Vec<Vec<i64>>) -> Self {
        Family { id, title, kind, params, defaults }
    }

    pub fn default_params(&self) -> Vec<Params> {
        if self.params.is_empty() {
            return vec![Params::new()];
        }
        self.defaults
            .iter()
            .map(|vals| {
                self.params
                    .iter()
                    .zip(vals)
                    .map(|(k, v)| (k.to_string(), *v))
                    .collect()
            })
            .collect()
    }
}

pub fn families() -> Vec<Family> {
    use Kind::*;
    let one = |xs: &[i64]| xs.iter().map(|&x| vec![x]).collect::<Vec<_>>();
    let two = |xs: &[(i64, i64)]| xs.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>();
    vec![
        Family::new("AIV", "SL(l+1)/GL(l)", RankOne, &["l"], one(&[1, 2, 3, 5, 8])),
        Family::new("BII", "SO(2l+1)/SO(2l)", RankOne, &["l"], one(&[2, 3, 4, 5, 6])),
        Family::new("DII", "SO(2l)/SO(2l-1)", RankOne, &["l"], one(&[2, 3, 4, 5])),
        Family::new("CII-rk1", "Sp(2l)/Sp(2)xSp(2l-2)", RankOne, &["l"], one(&[3, 4, 5])),
        Family::new("FII", "F4/Spin(9)", RankOne, &[], vec![]),
        Family::new("B3G2", "Spin(7)/G2", RankOne, &[], vec![]),
        Family::new("G2A2", "G2/SL(3)", RankOne, &[], vec![]),
        Family::new("slpq", "SL(p+q)/SL(p)xSL(q)", HigherRank, &["p", "q"], two(&[(1, 3), (2, 4), (2, 5)])),
        Family::new("slsp", "SL(2n+1)/Sp(2n)", HigherRank, &["n"], one(&[1, 2, 3])),
        Family::new("spinsl", "Spin(4p+2)/SL(2p+1)", HigherRank, &["p"], one(&[1, 2])),
        Family::new("spingl", "Spin(2n+1)/GL(n)", HigherRank, &["n"], one(&[2, 3, 4])),
        Family::new("B4B3", "Spin(9)/Spin(7)", HigherRank, &[], vec![]),
        Family::new("D4G2", "Spin(8)/G2", HigherRank, &[], vec![]),
        Family::new("cglc", "Sp(2l)/C*xSp(2l-2)", HigherRank, &["l"], one(&[3, 4, 5])),
        Family::new("E6D5", "E6/Spin(10)", HigherRank, &[], vec![]),
        Family::new("AII", "SL(2r+2)/Sp(2r+2)", Symmetric, &["r"], one(&[2, 3])),
        Family::new("AIII", "SL(l+1)/S(GL(r)xGL(l+1-r))", Symmetric, &["l", "r"], two(&[(3, 2), (4, 2), (6, 3)])),
        Family::new("BI", "SO(2l+1)/SO(r)xSO(2l+1-r)", Symmetric, &["l", "r"], two(&[(4, 2), (5, 3), (5, 2), (6, 2)])),
        Family::new("CII", "Sp(2l)/Sp(2r)xSp(2l-2r)", Symmetric, &["l", "r"], two(&[(5, 2), (4, 2), (7, 3)])),
        Family::new("DI", "SO(2l)/SO(r)xSO(2l-r)", Symmetric, &["l", "r"], two(&[(4, 2), (5, 2), (5, 4)])),
        Family::new("DIII", "SO(2l)/GL(l)", Symmetric, &["l"], one(&[4, 5, 6, 7])),
        Family::new("EII", "E6/SL(6)xSL(2)", Symmetric, &[], vec![]),
        Family::new("EIII", "E6/Spin(10)xC*", Symmetric, &[], vec![]),
        Family::new("EIV", "E6/F4", Symmetric, &[], vec![]),
        Family::new("EVI", "E7/Spin(12)xSL(2)", Symmetric, &[], vec![]),
        Family::new("EVII", "E7/E6xC*", Symmetric, &[], vec![]),
        Family::new("EIX", "E8/E7xSL(2)", Symmetric, &[], vec![]),
        Family::new("AI", "SL(l+1)/SO(l+1)", Split, &["l"], one(&[2, 3])),
        Family::new("DI-split", "SO(2l)/SO(l)xSO(l)", Split, &["l"], one(&[4])),
        Family::new("EI", "E6/Sp(8)", Split, &[], vec![]),
        Family::new("EV", "E7/SL(8)", Split, &[], vec![]),
        Family::new("EVIII", "E8/Spin(16)", Split, &[], vec![]),
        Family::new("FI", "F4/Sp(6)xSL(2)", Split, &[], vec![]),
        Family::new("G", "G2/SL(2)xSL(2)", Split, &[], vec![]),
    ]
}

pub fn family(id: &str) -> Result<Family> {
    families()
        .into_iter()
        .find(|f| f.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownPair(id.to_string()))
}

/// Every default instantiation of every family.
pub fn catalog() -> Vec<SphericalPair> {
    let mut out = Vec::new();
    for f in families() {
        for p in f.default_params() {
            out.push(instantiate(f.id, &p).expect("default instantiation is valid"));
        }
    }
    out
}

/// Looks up a parameter-free entry.
pub fn lookup(id: &str) -> Result<SphericalPair> {
    instantiate(id, &Params::new())
}

/// Splits `name=value` into a parameter binding.
pub fn parse_param(s: &str) -> Result<(String, i64)> {
    let bad = || Error::Parse(format!("expected name=integer, got {s:?}"));
    let (k, v) = s.split_once('=').ok_or_else(bad)?;
    let v = v.trim().parse::<i64>().map_err(|_| bad())?;
    let k = k.trim();
    if k.is_empty() {
        return Err(bad());
    }
    Ok((k.to_string(), v))
}

/// Parses a key as printed by [`SphericalPair::key`], e.g. "slpq(p=2,q=4)".
/// A bare id is accepted too.
pub fn parse_key(s: &str) -> Result<(String, Params)> {
    let s = s.trim();
    let Some(open) = s.find('(') else {
        return Ok((s.to_string(), Params::new()));
    };
    let inner = s[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?;
    let mut params = Params::new();
    for part in inner.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = parse_param(part)?;
        params.insert(k, v);
    }
    Ok((s[..open].to_string(), params))
}

/// Instantiates from a key, with `extra` bindings added on top.
pub fn from_key(key: &str, extra: &Params) -> Result<SphericalPair> {
    let (id, mut params) = parse_key(key)?;
    params.extend(extra.iter().map(|(k, v)| (k.clone(), *v)));
    instantiate(&id, &params)
}

// ---------------------------------------------------------------------------
// construction helpers

fn gens(rank: usize, list: &[&[(usize, u32)]]) -> Vec<Vec<u32>> {
    list.iter()
        .map(|terms| {
            let mut v = vec![0; rank];
            for &(i, c) in terms.iter() {
                v[i - 1] += c;
            }
            v
        })
        .collect()
}

fn basis(xs: &[i64]) -> RowKey {
    RowKey::Basis(xs.iter().map(|&x| qi(x)).collect())
}

fn simple(alpha: usize, times: u32) -> RowKey {
    RowKey::Simple { alpha, times }
}

/// Coordinate vector with `a` at i and `b` at j (0-based), length n.
fn pair_key(n: usize, terms: &[(usize, i64)]) -> RowKey {
    let mut v = vec![0i64; n];
    for &(i, c) in terms {
        v[i] += c;
    }
    basis(&v)
}

fn sub(i: usize) -> String {
    const D: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    i.to_string()
        .chars()
        .map(|c| D[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn xi(i: usize) -> String {
    format!("ξ{}", sub(i))
}

fn lam(i: usize) -> String {
    format!("λ{}", sub(i))
}

struct Spec {
    title: String,
    t: LieType,
    rank: usize,
    delta0: Vec<usize>,
    generators: Vec<Vec<u32>>,
    symmetric: bool,
    rows: Vec<ExpectedRow>,
    complete: bool,
    a_basis: Option<ABasis>,
}

impl Spec {
    fn new(title: impl Into<String>, t: LieType, rank: usize, symmetric: bool) -> Self {
        Spec {
            title: title.into(),
            t,
            rank,
            delta0: vec![],
            generators: vec![],
            symmetric,
            rows: vec![],
            complete: false,
            a_basis: None,
        }
    }
}

fn get(id: &str, params: &Params, name: &str) -> Result<i64> {
    params.get(name).copied().ok_or_else(|| Error::Constraint {
        family: id.to_string(),
        constraint: format!("missing parameter {name}"),
    })
}

fn require(id: &str, ok: bool, constraint: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Constraint {
            family: id.to_string(),
            constraint: constraint.to_string(),
        })
    }
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

/// Builds the concrete pair for a family and parameter binding.
pub fn instantiate(id: &str, params: &Params) -> Result<SphericalPair> {
    let fam = family(id)?;
    let fid = fam.id;
    for k in params.keys() {
        require(fid, fam.params.contains(&k.as_str()), &format!("unknown parameter {k}"))?;
    }
    let mut alias_of = None;
    let spec = match fid {
        "AIV" => aiv(fid, get(fid, params, "l")?)?,
        "BII" => bii(fid, get(fid, params, "l")?)?,
        "DII" => dii(fid, get(fid, params, "l")?)?,
        "CII-rk1" => cii_rk1(fid, get(fid, params, "l")?)?,
        "FII" => fii(),
        "B3G2" => b3g2(),
        "G2A2" => g2a2(),
        "slpq" => slpq(fid, get(fid, params, "p")?, get(fid, params, "q")?)?,
        "slsp" => slsp(fid, get(fid, params, "n")?)?,
        "spinsl" => spinsl(fid, get(fid, params, "p")?)?,
        "spingl" => spingl(fid, get(fid, params, "n")?)?,
        "B4B3" => b4b3(),
        "D4G2" => d4g2(),
        "cglc" => {
            let l = get(fid, params, "l")?;
            if l == 2 {
                alias_of = Some("spingl(n=2)".to_string());
            }
            cglc(fid, l)?
        }
        "E6D5" => e6d5(),
        "AII" => aii(fid, get(fid, params, "r")?)?,
        "AIII" => aiii(fid, get(fid, params, "l")?, get(fid, params, "r")?)?,
        "BI" => bi(fid, get(fid, params, "l")?, get(fid, params, "r")?)?,
        "CII" => cii(fid, get(fid, params, "l")?, get(fid, params, "r")?)?,
        "DI" => di(fid, get(fid, params, "l")?, get(fid, params, "r")?)?,
        "DIII" => diii(fid, get(fid, params, "l")?)?,
        "EII" => eii(),
        "EIII" => eiii(),
        "EIV" => eiv(),
        "EVI" => evi(),
        "EVII" => evii(),
        "EIX" => eix(),
        "AI" => {
            let l = get(fid, params, "l")?;
            require(fid, l >= 1, "l >= 1")?;
            split("SL/SO", LieType::A, l as usize)
        }
        "DI-split" => {
            let l = get(fid, params, "l")?;
            require(fid, l >= 4, "l >= 4")?;
            split("SO(2l)/SO(l)xSO(l)", LieType::D, l as usize)
        }
        "EI" => split(fam.title, LieType::E, 6),
        "EV" => split(fam.title, LieType::E, 7),
        "EVIII" => split(fam.title, LieType::E, 8),
        "FI" => split(fam.title, LieType::F, 4),
        "G" => split(fam.title, LieType::G, 2),
        _ => return Err(Error::UnknownPair(id.to_string())),
    };
    let pair = SphericalPair {
        id: fid.to_string(),
        params: params.clone(),
        title: spec.title,
        group: Group {
            lie_type: spec.t,
            rank: spec.rank,
        },
        delta0: spec.delta0,
        spherical_rank: spec.generators.len(),
        generators: spec.generators,
        symmetric: spec.symmetric,
        expected_table: spec.rows,
        table_complete: spec.complete,
        a_basis: spec.a_basis,
        alias_of,
    };
    pair.validate()?;
    Ok(pair)
}

// ---------------------------------------------------------------------------
// rank one

fn aiv(id: &str, l: i64) -> Result<Spec> {
    require(id, l >= 1, "l >= 1")?;
    let n = l as usize;
    let mut s = Spec::new(format!("SL({})/GL({})", n + 1, n), LieType::A, n, true);
    s.a_basis = Some(ABasis::SimpleRestrictions(vec![1]));
    s.complete = true;
    if n == 1 {
        s.generators = gens(1, &[&[(1, 2)]]);
        s.rows = vec![ExpectedRow::new(xi(1), basis(&[1]), 1).delta(qi(1)).basic(1).h(0).reg()];
    } else {
        s.generators = gens(n, &[&[(1, 1), (n, 1)]]);
        s.delta0 = range(2, n - 1);
        s.rows = vec![
            ExpectedRow::new(xi(1), basis(&[1]), 2 * n - 2)
                .delta(q(l, 2))
                .basic(2)
                .h(2 - l)
                .reg(),
            ExpectedRow::new(format!("2{}", xi(1)), basis(&[2]), 1).delta(qi(l)).basic(1).reg(),
        ];
    }
    Ok(s)
}

fn bii(id: &str, l: i64) -> Result<Spec> {
    require(id, l >= 2, "l >= 2")?;
    let n = l as usize;
    let mut s = Spec::new(format!("SO({})/SO({})", 2 * n + 1, 2 * n), LieType::B, n, true);
    s.generators = gens(n, &[&[(1, 1)]]);
    s.delta0 = range(2, n);
    s.a_basis = Some(ABasis::SimpleRestrictions(vec![1]));
    s.complete = true;
    let mut row = ExpectedRow::new(xi(1), basis(&[1]), 2 * n - 1).basic(1).h(2 - 2 * l).reg();
    if n >= 3 {
        row = row.delta(q(2 * l - 1, 2));
    }
    s.rows = vec![row];
    Ok(s)
}

fn dii(id: &str, l: i64) -> Result<Spec> {
    require(id, l >= 2, "l >= 2")?;
    let n = l as usize;
    let mut s = Spec::new(format!("SO({})/SO({})", 2 * n, 2 * n - 1), LieType::D, n, true);
    s.a_basis = Some(ABasis::SimpleRestrictions(vec![1]));
    s.complete = true;
    if n == 2 {
        s.generators = gens(2, &[&[(1, 1), (2, 1)]]);
        s.rows = vec![ExpectedRow::new(xi(1), basis(&[1]), 2).reg()];
    } else {
        s.generators = gens(n, &[&[(1, 1)]]);
        s.delta0 = range(2, n);
        s.rows = vec![ExpectedRow::new(xi(1), basis(&[1]), 2 * n - 2)
            .delta(qi(l - 1))
            .basic(1)
            .h(4 - 2 * l)
            .reg()];
    }
    Ok(s)
}

fn cii_rk1(id: &str, l: i64) -> Result<Spec> {
    require(id, l >= 3, "l >= 3")?;
    let n = l as usize;
    let mut s = Spec::new(format!("Sp({})/Sp(2)xSp({})", 2 * n, 2 * n - 2), LieType::C, n, true);
    s.generators = gens(n, &[&[(2, 1)]]);
    s.delta0 = std::iter::once(1).chain(3..=n).collect();
    s.a_basis = Some(ABasis::SimpleRestrictions(vec![2]));
    s.complete = true;
    s.rows = vec![
        ExpectedRow::new(xi(1), basis(&[1]), 4 * (n - 2))
            .delta(q(2 * l - 1, 2))
            .basic(1)
            .h(4 - 2 * l)
            .reg(),
        ExpectedRow::new(format!("2{}", xi(1)), basis(&[2]), 3)
            .delta(qi(2 * l - 1))
            .basic(1)
            .h(-2)
            .reg(),
    ];
    Ok(s)
}

fn fii() -> Spec {
    let mut s = Spec::new("F4/Spin(9)", LieType::F, 4, true);
    s.generators = gens(4, &[&[(4, 1)]]);
    s.delta0 = vec![1, 2, 3];
    s.a_basis = Some(ABasis::SimpleRestrictions(vec![4]));
    s.complete = true;
    s.rows = vec![
        ExpectedRow::new(xi(1), basis(&[1]), 8).delta(q(11, 4)).basic(1).h(-6).reg(),
        ExpectedRow::new(format!("2{}", xi(1)), basis(&[2]), 7).delta(q(11, 2)).basic(1).h(-6).reg(),
    ];
    s
}

fn b3g2() -> Spec {
    let mut s = Spec::new("Spin(7)/G2", LieType::B, 3, false);
    s.generators = gens(3, &[&[(3, 1)]]);
    s.delta0 = vec![1, 2];
    s.a_basis = Some(ABasis::SimpleRestrictions(vec![3]));
    s.complete = true;
    s.rows = vec![
        ExpectedRow::new(xi(1), basis(&[1]), 3).delta(q(3, 2)).basic(1).h(-2).reg(),
        ExpectedRow::new(format!("2{}", xi(1)), basis(&[2]), 3).delta(qi(3)).basic(1).h(-2).reg(),
    ];
    s
}

fn g2a2() -> Spec {
    let mut s = Spec::new("G2/SL(3)", LieType::G, 2, false);
    s.generators = gens(2, &[&[(1, 1)]]);
    s.delta0 = vec![2];
    s.a_basis = Some(ABasis::SimpleRestrictions(vec![1]));
    s.complete = true;
    s.rows = vec![
        ExpectedRow::new(xi(1), basis(&[1]), 2).delta(q(5, 6)).basic(1).h(-1).reg(),
        ExpectedRow::new(format!("2{}", xi(1)), basis(&[2]), 1).delta(q(5, 3)).reg(),
        ExpectedRow::new(format!("3{}", xi(1)), basis(&[3]), 2)
            .delta(q(5, 2))
            .basic(1)
            .h(-1)
            .reg()
            .note("the minimum is attained at 3α₁+α₂"),
    ];
    s
}

// ---------------------------------------------------------------------------
// higher rank, not symmetric

fn slpq(id: &str, p: i64, qq: i64) -> Result<Spec> {
    require(id, 1 <= p && p < qq, "1 <= p < q")?;
    let (pu, qu) = (p as usize, qq as usize);
    let n = pu + qu;
    let l = n - 1;
    let mut s = Spec::new(format!("SL({n})/SL({pu})xSL({qu})"), LieType::A, l, false);
    let mut g: Vec<Vec<(usize, u32)>> = (1..pu).map(|i| vec![(i, 1), (l + 1 - i, 1)]).collect();
    g.push(vec![(pu, 1)]);
    g.push(vec![(qu, 1)]);
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(l, &refs);
    s.delta0 = range(pu + 1, qu - 1);
    let mut vecs = Vec::new();
    for i in 1..=pu {
        let mut v = ExactVector::zero(n);
        v.0[i - 1] = q(1, 2);
        v.0[n - i] = q(-1, 2);
        vecs.push(v);
    }
    let mut last = ExactVector::zero(n);
    for j in 1..=n {
        last.0[j - 1] = if j <= pu || j > qu { q(1, 2 * p) } else { q(-1, qq - p) };
    }
    vecs.push(last);
    s.a_basis = Some(ABasis::Vectors(vecs));
    s.complete = true;
    let r = pu + 1;
    let mut rows = Vec::new();
    for i in 1..=pu {
        for j in i + 1..=pu {
            let (ii, jj) = (i as i64, j as i64);
            rows.push(
                ExpectedRow::new(format!("{}-{}", xi(i), xi(j)), pair_key(r, &[(i - 1, 1), (j - 1, -1)]), 2)
                    .delta(qi(jj - ii))
                    .basic(2)
                    .h(0)
                    .reg(),
            );
            rows.push(
                ExpectedRow::new(format!("{}+{}", xi(i), xi(j)), pair_key(r, &[(i - 1, 1), (j - 1, 1)]), 2)
                    .delta(qi(p + qq + 1 - ii - jj))
                    .basic(2)
                    .h(0)
                    .reg(),
            );
        }
    }
    for i in 1..=pu {
        let ii = i as i64;
        for (sign, c) in [("-", -1), ("+", 1)] {
            rows.push(
                ExpectedRow::new(format!("{}{}{}", xi(i), sign, xi(r)), pair_key(r, &[(i - 1, 1), (r - 1, c)]), qu - pu)
                    .delta(q(p + qq + 1 - 2 * ii, 2))
                    .basic(1)
                    .h(-(qq - p - 1))
                    .sing(),
            );
        }
        rows.push(
            ExpectedRow::new(format!("2{}", xi(i)), pair_key(r, &[(i - 1, 2)]), 1)
                .delta(qi(p + qq + 1 - 2 * ii))
                .basic(1)
                .h(0)
                .reg(),
        );
    }
    s.rows = rows;
    Ok(s)
}

fn slsp(id: &str, n: i64) -> Result<Spec> {
    require(id, n >= 1, "n >= 1")?;
    let l = 2 * n as usize;
    let mut s = Spec::new(format!("SL({})/Sp({})", l + 1, l), LieType::A, l, false);
    let g: Vec<Vec<(usize, u32)>> = (1..=l).map(|i| vec![(i, 1)]).collect();
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(l, &refs);
    Ok(s)
}

fn spinsl(id: &str, p: i64) -> Result<Spec> {
    require(id, p >= 1, "p >= 1")?;
    let pu = p as usize;
    let l = 2 * pu + 1;
    let mut s = Spec::new(format!("Spin({})/SL({})", 4 * pu + 2, 2 * pu + 1), LieType::D, l, false);
    let mut g: Vec<Vec<(usize, u32)>> = (1..=pu).map(|i| vec![(2 * i, 1)]).collect();
    g.push(vec![(l, 1)]);
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(l, &refs);
    s.delta0 = (1..=pu).map(|i| 2 * i - 1).collect();
    let mut vecs = Vec::new();
    for i in 1..=pu {
        let mut v = ExactVector::zero(l);
        v.0[2 * i - 2] = q(1, 2);
        v.0[2 * i - 1] = q(1, 2);
        vecs.push(v);
    }
    vecs.push(ExactVector::unit(l, l - 1));
    s.a_basis = Some(ABasis::Vectors(vecs));
    s.complete = true;
    let r = pu + 1;
    let mut rows = Vec::new();
    for i in 1..=pu {
        for j in i + 1..=pu {
            let (ii, jj) = (i as i64, j as i64);
            rows.push(
                ExpectedRow::new(format!("{}-{}", xi(i), xi(j)), pair_key(r, &[(i - 1, 1), (j - 1, -1)]), 4)
                    .delta(qi(2 * (jj - ii)))
                    .basic(1)
                    .h(-2)
                    .reg()
                    .note("pairing is 2(j-i); the printed table has (j-i)/2"),
            );
            rows.push(
                ExpectedRow::new(format!("{}+{}", xi(i), xi(j)), pair_key(r, &[(i - 1, 1), (j - 1, 1)]), 4)
                    .delta(qi(4 * p + 3 - 2 * (ii + jj)))
                    .basic(1)
                    .h(-2)
                    .reg(),
            );
        }
    }
    for i in 1..=pu {
        let ii = i as i64;
        for (sign, c) in [("-", -1), ("+", 1)] {
            rows.push(
                ExpectedRow::new(format!("{}{}{}", xi(i), sign, xi(r)), pair_key(r, &[(i - 1, 1), (r - 1, c)]), 2)
                    .delta(q(4 * p + 3 - 4 * ii, 2))
                    .basic(1)
                    .h(-1)
                    .sing(),
            );
        }
        rows.push(
            ExpectedRow::new(format!("2{}", xi(i)), pair_key(r, &[(i - 1, 2)]), 1)
                .delta(qi(4 * p + 3 - 4 * ii))
                .basic(1)
                .h(0)
                .reg(),
        );
    }
    s.rows = rows;
    Ok(s)
}

fn spingl(id: &str, n: i64) -> Result<Spec> {
    require(id, n >= 2, "n >= 2")?;
    let l = n as usize;
    let mut s = Spec::new(format!("Spin({})/GL({})", 2 * l + 1, l), LieType::B, l, false);
    let mut g: Vec<Vec<(usize, u32)>> = (1..l).map(|i| vec![(i, 1)]).collect();
    g.push(vec![(l, 2)]);
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(l, &refs);
    Ok(s)
}

fn b4b3() -> Spec {
    let mut s = Spec::new("Spin(9)/Spin(7)", LieType::B, 4, false);
    s.generators = gens(4, &[&[(1, 1)], &[(4, 1)]]);
    s.delta0 = vec![2, 3];
    s.a_basis = Some(ABasis::Vectors(vec![
        ExactVector::unit(4, 0),
        ExactVector::from_frac(&[0, 1, 1, 1], 3),
    ]));
    s.complete = true;
    s.rows = vec![
        ExpectedRow::new(xi(1), basis(&[1, 0]), 1).delta(q(7, 2)).basic(1).h(0).reg(),
        ExpectedRow::new(xi(2), basis(&[0, 1]), 3).delta(q(3, 2)).basic(1).h(-2).reg(),
        ExpectedRow::new(format!("{}-{}", xi(1), xi(2)), basis(&[1, -1]), 3).delta(qi(2)).basic(1).h(-2).reg(),
        ExpectedRow::new(format!("{}+{}", xi(1), xi(2)), basis(&[1, 1]), 3).delta(qi(5)).basic(1).h(-2).reg(),
        ExpectedRow::new(format!("2{}", xi(2)), basis(&[0, 2]), 3).delta(qi(3)).basic(1).h(-2).reg(),
    ];
    s
}

fn d4g2() -> Spec {
    let mut s = Spec::new("Spin(8)/G2", LieType::D, 4, false);
    s.generators = gens(4, &[&[(1, 1)], &[(3, 1)], &[(4, 1)]]);
    s.delta0 = vec![2];
    s.a_basis = Some(ABasis::Vectors(vec![
        ExactVector::unit(4, 0),
        ExactVector::from_frac(&[0, 1, 1, 0], 2),
        ExactVector::unit(4, 3),
    ]));
    s.complete = true;
    let sing = |label: String, k: &[i64], d: Q| ExpectedRow::new(label, basis(k), 2).delta(d).basic(1).h(-1).sing();
    let reg = |label: String, k: &[i64]| ExpectedRow::new(label, basis(k), 1).delta(qi(3)).basic(1).h(0).reg();
    s.rows = vec![
        sing(format!("{}-{}", xi(1), xi(2)), &[1, -1, 0], q(3, 2)),
        sing(format!("{}-{}", xi(2), xi(3)), &[0, 1, -1], q(3, 2)),
        sing(format!("{}+{}", xi(2), xi(3)), &[0, 1, 1], q(3, 2)),
        reg(format!("{}-{}", xi(1), xi(3)), &[1, 0, -1]),
        reg(format!("{}+{}", xi(1), xi(3)), &[1, 0, 1]),
        reg(format!("2{}", xi(2)), &[0, 2, 0]),
        sing(format!("{}+{}", xi(1), xi(2)), &[1, 1, 0], q(9, 2))
            .note("the nest has one root of minimal h-value; the printed table has 2"),
    ];
    s
}

fn cglc(id: &str, l: i64) -> Result<Spec> {
    require(id, l >= 2, "l >= 2")?;
    let n = l as usize;
    if n == 2 {
        // Sp(4)/C*xSp(2) is Spin(5)/GL(2); modeled on B2 with the
        // generators in the order (2ϖ₁, ϖ₂) of C2 mapped to (2ϖ₂, ϖ₁).
        let mut s = spingl(id, 2)?;
        s.title = "Sp(4)/C*xSp(2)".to_string();
        s.generators.reverse();
        return Ok(s);
    }
    let mut s = Spec::new(format!("Sp({})/C*xSp({})", 2 * n, 2 * n - 2), LieType::C, n, false);
    s.generators = gens(n, &[&[(1, 2)], &[(2, 1)]]);
    s.delta0 = range(3, n);
    s.a_basis = Some(ABasis::Vectors(vec![ExactVector::unit(n, 0), ExactVector::unit(n, 1)]));
    s.complete = true;
    s.rows = vec![
        ExpectedRow::new(format!("{}-{}", xi(1), xi(2)), basis(&[1, -1]), 1).delta(qi(1)).basic(1).h(0).reg(),
        ExpectedRow::new(format!("{}+{}", xi(1), xi(2)), basis(&[1, 1]), 1)
            .delta(qi(2 * l - 1))
            .basic(1)
            .h(0)
            .reg(),
    ];
    for i in 1..=2usize {
        let ii = i as i64;
        let mut k1 = [0i64; 2];
        k1[i - 1] = 1;
        let mut k2 = [0i64; 2];
        k2[i - 1] = 2;
        s.rows.push(
            ExpectedRow::new(xi(i), basis(&k1), 2 * n - 4)
                .delta(qi(l + 1 - ii))
                .basic(1)
                .h(5 - 2 * l)
                .sing(),
        );
        s.rows.push(
            ExpectedRow::new(format!("2{}", xi(i)), basis(&k2), 1)
                .delta(qi(2 * (l + 1 - ii)))
                .basic(1)
                .h(0)
                .sing(),
        );
    }
    Ok(s)
}

fn e6d5() -> Spec {
    let mut s = Spec::new("E6/Spin(10)", LieType::E, 6, false);
    s.generators = gens(6, &[&[(1, 1)], &[(2, 1)], &[(6, 1)]]);
    s.delta0 = vec![3, 4, 5];
    s.a_basis = Some(ABasis::SimpleRestrictions(vec![1, 2, 6]));
    s.complete = true;
    let row = |label: &str, k: &[i64], m: usize, d: Q, h: i64, kl: Klass| {
        ExpectedRow::new(label, basis(k), m).delta(d).basic(1).h(h).klass(kl)
    };
    use Klass::*;
    s.rows = vec![
        row("ξ₁", &[1, 0, 0], 4, q(5, 2), -3, Singular),
        row("ξ₃", &[0, 0, 1], 4, q(5, 2), -3, Singular),
        row("ξ₁+ξ₂", &[1, 1, 0], 4, q(11, 2), -3, Singular),
        row("ξ₂+ξ₃", &[0, 1, 1], 4, q(11, 2), -3, Singular),
        row("ξ₂", &[0, 1, 0], 6, qi(3), -4, Regular),
        row("ξ₁+ξ₂+ξ₃", &[1, 1, 1], 6, qi(8), -4, Regular),
        row("ξ₁+ξ₃", &[1, 0, 1], 1, qi(5), 0, Regular),
        row("ξ₁+2ξ₂+ξ₃", &[1, 2, 1], 1, qi(11), 0, Regular),
    ];
    s
}

// ---------------------------------------------------------------------------
// symmetric, higher rank

fn srow(alpha: usize, times: u32, m: usize, basic: usize) -> ExpectedRow {
    let label = if times == 1 { lam(alpha) } else { format!("{times}{}", lam(alpha)) };
    ExpectedRow::new(label, simple(alpha, times), m).basic(basic).reg()
}

fn aii(id: &str, r: i64) -> Result<Spec> {
    require(id, r >= 1, "r >= 1")?;
    let ru = r as usize;
    let l = 2 * ru + 1;
    let mut s = Spec::new(format!("SL({})/Sp({})", l + 1, l + 1), LieType::A, l, true);
    let g: Vec<Vec<(usize, u32)>> = (1..=ru).map(|i| vec![(2 * i, 1)]).collect();
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(l, &refs);
    s.delta0 = (0..=ru).map(|i| 2 * i + 1).collect();
    s.rows = (1..=ru).map(|i| srow(2 * i, 1, 4, 1)).collect();
    Ok(s)
}

fn aiii(id: &str, l: i64, r: i64) -> Result<Spec> {
    require(id, r >= 2 && l >= 2 * r - 1, "r >= 2 and l >= 2r-1")?;
    let (lu, ru) = (l as usize, r as usize);
    let mut s = Spec::new(
        format!("SL({})/S(GL({})xGL({}))", lu + 1, ru, lu + 1 - ru),
        LieType::A,
        lu,
        true,
    );
    let g: Vec<Vec<(usize, u32)>> = (1..=ru).map(|i| vec![(i, 1), (lu + 1 - i, 1)]).collect();
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(lu, &refs);
    s.delta0 = range(ru + 1, lu - ru);
    s.rows = (1..ru).map(|i| srow(i, 1, 2, 2)).collect();
    if lu > 2 * ru - 1 {
        s.rows.push(srow(ru, 1, 2 * (lu - 2 * ru + 1), 2));
        s.rows.push(srow(ru, 2, 1, 1));
    } else {
        s.rows.push(srow(ru, 1, 1, 1));
    }
    Ok(s)
}

fn bi(id: &str, l: i64, r: i64) -> Result<Spec> {
    require(id, 2 <= r && r < l, "2 <= r < l")?;
    let (lu, ru) = (l as usize, r as usize);
    let mut s = Spec::new(
        format!("SO({})/SO({})xSO({})", 2 * lu + 1, ru, 2 * lu + 1 - ru),
        LieType::B,
        lu,
        true,
    );
    let mut g: Vec<Vec<(usize, u32)>> = (1..ru).map(|i| vec![(i, 2)]).collect();
    g.push(vec![(ru, 1)]);
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(lu, &refs);
    s.delta0 = range(ru + 1, lu);
    s.rows = (1..ru).map(|i| srow(i, 1, 1, 1)).collect();
    s.rows.push(srow(ru, 1, 2 * (lu - ru) + 1, 1));
    Ok(s)
}

fn cii(id: &str, l: i64, r: i64) -> Result<Spec> {
    require(id, r >= 2 && l >= 2 * r, "r >= 2 and l >= 2r")?;
    let (lu, ru) = (l as usize, r as usize);
    let mut s = Spec::new(
        format!("Sp({})/Sp({})xSp({})", 2 * lu, 2 * ru, 2 * lu - 2 * ru),
        LieType::C,
        lu,
        true,
    );
    let g: Vec<Vec<(usize, u32)>> = (1..=ru).map(|i| vec![(2 * i, 1)]).collect();
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(lu, &refs);
    s.delta0 = (1..=ru).map(|i| 2 * i - 1).chain(2 * ru + 1..=lu).collect();
    s.rows = (1..ru).map(|i| srow(2 * i, 1, 4, 1)).collect();
    if lu > 2 * ru {
        s.rows.push(srow(2 * ru, 1, 4 * (lu - 2 * ru), 1));
        s.rows.push(srow(2 * ru, 2, 3, 1));
    } else {
        s.rows.push(srow(2 * ru, 1, 3, 1));
    }
    Ok(s)
}

fn di(id: &str, l: i64, r: i64) -> Result<Spec> {
    require(id, 2 <= r && r < l && l >= 3, "2 <= r < l")?;
    let (lu, ru) = (l as usize, r as usize);
    let mut s = Spec::new(
        format!("SO({})/SO({})xSO({})", 2 * lu, ru, 2 * lu - ru),
        LieType::D,
        lu,
        true,
    );
    let mut g: Vec<Vec<(usize, u32)>> = (1..ru).map(|i| vec![(i, 2)]).collect();
    s.rows = (1..ru).map(|i| srow(i, 1, 1, 1)).collect();
    if ru == lu - 1 {
        g.push(vec![(lu - 1, 1), (lu, 1)]);
        s.rows.push(srow(ru, 1, 2, 2));
    } else {
        g.push(vec![(ru, 1)]);
        s.delta0 = range(ru + 1, lu);
        s.rows.push(srow(ru, 1, 2 * (lu - ru), 1));
    }
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(lu, &refs);
    Ok(s)
}

fn diii(id: &str, l: i64) -> Result<Spec> {
    require(id, l >= 4, "l >= 4")?;
    let lu = l as usize;
    let ru = lu / 2;
    let mut s = Spec::new(format!("SO({})/GL({})", 2 * lu, lu), LieType::D, lu, true);
    let mut g: Vec<Vec<(usize, u32)>> = (1..ru).map(|i| vec![(2 * i, 1)]).collect();
    s.rows = (1..ru).map(|i| srow(2 * i, 1, 4, 1)).collect();
    if lu == 2 * ru {
        g.push(vec![(lu, 2)]);
        s.delta0 = (1..=ru).map(|i| 2 * i - 1).collect();
        s.rows.push(srow(lu, 1, 1, 1));
    } else {
        g.push(vec![(lu - 1, 1), (lu, 1)]);
        s.delta0 = (1..=ru).map(|i| 2 * i - 1).collect();
        s.rows.push(srow(2 * ru, 1, 4, 2));
        s.rows.push(srow(2 * ru, 2, 1, 1));
    }
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(lu, &refs);
    Ok(s)
}

fn eii() -> Spec {
    let mut s = Spec::new("E6/SL(6)xSL(2)", LieType::E, 6, true);
    s.generators = gens(6, &[&[(1, 1), (6, 1)], &[(3, 1), (5, 1)], &[(4, 2)], &[(2, 2)]]);
    s.rows = vec![srow(2, 1, 1, 1), srow(4, 1, 1, 1), srow(1, 1, 2, 2), srow(3, 1, 2, 2)];
    s
}

fn eiii() -> Spec {
    let mut s = Spec::new("E6/Spin(10)xC*", LieType::E, 6, true);
    s.generators = gens(6, &[&[(1, 1), (6, 1)], &[(2, 1)]]);
    s.delta0 = vec![3, 4, 5];
    s.rows = vec![srow(2, 1, 6, 1), srow(1, 1, 8, 2), srow(1, 2, 1, 1)];
    s
}

fn eiv() -> Spec {
    let mut s = Spec::new("E6/F4", LieType::E, 6, true);
    s.generators = gens(6, &[&[(1, 1)], &[(6, 1)]]);
    s.delta0 = vec![2, 3, 4, 5];
    s.rows = vec![srow(1, 1, 8, 1).h(-6), srow(6, 1, 8, 1).h(-6)];
    s
}

fn evi() -> Spec {
    let mut s = Spec::new("E7/Spin(12)xSL(2)", LieType::E, 7, true);
    s.generators = gens(7, &[&[(1, 2)], &[(3, 2)], &[(4, 1)], &[(6, 1)]]);
    s.delta0 = vec![2, 5, 7];
    s.rows = vec![srow(1, 1, 1, 1), srow(3, 1, 1, 1), srow(4, 1, 4, 1), srow(6, 1, 4, 1)];
    s
}

fn evii() -> Spec {
    let mut s = Spec::new("E7/E6xC*", LieType::E, 7, true);
    s.generators = gens(7, &[&[(1, 1)], &[(6, 1)], &[(7, 2)]]);
    s.delta0 = vec![2, 3, 4, 5];
    s.rows = vec![srow(1, 1, 8, 1), srow(6, 1, 8, 1), srow(7, 1, 1, 1)];
    s
}

fn eix() -> Spec {
    let mut s = Spec::new("E8/E7xSL(2)", LieType::E, 8, true);
    s.generators = gens(8, &[&[(1, 1)], &[(6, 1)], &[(7, 2)], &[(8, 2)]]);
    s.delta0 = vec![2, 3, 4, 5];
    s.rows = vec![srow(1, 1, 8, 1), srow(6, 1, 8, 1), srow(7, 1, 1, 1), srow(8, 1, 1, 1)];
    s
}

/// Split forms: Δ₀ = ∅ and μᵢ = 2ϖᵢ.
fn split(title: &str, t: LieType, rank: usize) -> Spec {
    let title = if t == LieType::A {
        format!("SL({})/SO({})", rank + 1, rank + 1)
    } else if t == LieType::D {
        format!("SO({})/SO({})xSO({})", 2 * rank, rank, rank)
    } else {
        title.to_string()
    };
    let mut s = Spec::new(title, t, rank, true);
    let g: Vec<Vec<(usize, u32)>> = (1..=rank).map(|i| vec![(i, 2)]).collect();
    let refs: Vec<&[(usize, u32)]> = g.iter().map(Vec::as_slice).collect();
    s.generators = gens(rank, &refs);
    s.rows = (1..=rank).map(|i| srow(i, 1, 1, 1)).collect();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(kv: &[(&str, i64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn keys_parse_back() {
        for pair in catalog() {
            let back = from_key(&pair.key(), &Params::new()).unwrap();
            assert_eq!(back, pair);
        }
        assert_eq!(from_key("BI", &p(&[("l", 5), ("r", 2)])).unwrap().key(), "BI(l=5,r=2)");
        assert!(matches!(parse_key("slpq(p=2"), Err(Error::Parse(_))));
        assert!(matches!(parse_param("l"), Err(Error::Parse(_))));
        assert!(matches!(parse_param("l=x"), Err(Error::Parse(_))));
    }

    #[test]
    fn every_default_instance_validates() {
        let all = catalog();
        assert!(all.len() > 50);
        for pair in &all {
            pair.validate().unwrap();
        }
    }

    #[test]
    fn named_lookups() {
        let f = lookup("FII").unwrap();
        assert_eq!(f.group, Group { lie_type: LieType::F, rank: 4 });
        assert_eq!(f.delta0, vec![1, 2, 3]);
        assert_eq!(f.generators, vec![vec![0, 0, 0, 1]]);
        assert!(f.symmetric);
        let b = lookup("B3G2").unwrap();
        assert_eq!(b.delta0, vec![1, 2]);
        assert!(!b.symmetric);
        let e = lookup("EIII").unwrap();
        assert_eq!(e.delta0, vec![3, 4, 5]);
        assert_eq!(e.spherical_rank, 2);
    }

    #[test]
    fn instantiation_examples() {
        let a = instantiate("AIV", &p(&[("l", 4)])).unwrap();
        let m: Vec<usize> = a.expected_table.iter().map(|r| r.multiplicity).collect();
        assert_eq!(m, vec![6, 1]);
        let c = instantiate("CII-rk1", &p(&[("l", 3)])).unwrap();
        let m: Vec<usize> = c.expected_table.iter().map(|r| r.multiplicity).collect();
        assert_eq!(m, vec![4, 3]);
        let s = instantiate("slpq", &p(&[("p", 2), ("q", 4)])).unwrap();
        let sing: Vec<&ExpectedRow> = s
            .expected_table
            .iter()
            .filter(|r| r.klass == Some(Klass::Singular))
            .collect();
        assert_eq!(sing.len(), 4);
        assert!(sing.iter().all(|r| r.multiplicity == 2));
    }

    #[test]
    fn constraints_are_named() {
        let e = instantiate("CII-rk1", &p(&[("l", 2)])).unwrap_err();
        assert!(e.to_string().contains("l >= 3"));
        let e = instantiate("slpq", &p(&[("p", 3), ("q", 3)])).unwrap_err();
        assert!(e.to_string().contains("p < q"));
        assert!(instantiate("nope", &Params::new()).is_err());
        assert!(instantiate("AIV", &Params::new()).is_err());
    }

    #[test]
    fn weight_enumeration() {
        let b = lookup("B4B3").unwrap();
        let ks: Vec<Vec<u32>> = enumerate_spherical_weights(&b, 2).unwrap().into_iter().map(|x| x.0).collect();
        assert_eq!(ks.len(), 6);
        let f = lookup("FII").unwrap();
        assert_eq!(enumerate_spherical_weights(&f, 3).unwrap().len(), 4);
        assert_eq!(enumerate_spherical_weights(&f, 0).unwrap().len(), 1);
    }

    #[test]
    fn json_round_trip() {
        for pair in catalog() {
            let s = serde_json::to_string(&pair).unwrap();
            let back: SphericalPair = serde_json::from_str(&s).unwrap();
            assert_eq!(back, pair);
        }
    }
}
