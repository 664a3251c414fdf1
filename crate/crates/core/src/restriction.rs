//! Restricted roots, nests, shifts and marked Satake diagrams.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::{ABasis, ExpectedRow, Klass, RowKey, SphericalPair};
use crate::dimension::{match_w_form, FormMatch};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{fmt_q, half, qi, serde_q, serde_q_opt, serde_q_vec, Q};
use crate::root_system::{build_root_system, components, normalized_form, RootSystem, SignedPermutation};
use crate::vector::ExactVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedRootDatum {
    pub label: String,
    /// The restriction as an ambient vector (a projection onto a).
    pub xi: ExactVector,
    /// Coordinates in the reporting basis of a*.
    #[serde(with = "serde_q_vec")]
    pub coords: Vec<Q>,
    pub nest: Vec<ExactVector>,
    pub multiplicity: usize,
    /// ⟨ρ_m|α⟩ for α in the nest, aligned with `nest`.
    #[serde(with = "serde_q_vec")]
    pub shifts: Vec<Q>,
    /// ⟨h_m⁰|α⟩ for α in the nest, aligned with `nest`.
    #[serde(with = "serde_q_vec")]
    pub h_values: Vec<Q>,
    #[serde(with = "serde_q")]
    pub k_xi: Q,
    pub basic_roots: Vec<ExactVector>,
    #[serde(with = "serde_q")]
    pub delta_pairing: Q,
    #[serde(with = "serde_q")]
    pub norm2: Q,
    /// 1, 2 or 3: ξ = d·η with η indivisible.
    pub divisibility: u32,
    /// Index of η in the data when ξ is divisible.
    pub parent: Option<usize>,
    /// Form match of the family {η, 2η, 3η}; copied from the parent.
    pub form: FormMatch,
    pub klass: Klass,
}

impl RestrictedRootDatum {
    pub fn h_min(&self) -> Q {
        -self.k_xi.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentValue {
    /// Nodes of a connected component of Δ₀.
    pub nodes: Vec<usize>,
    #[serde(with = "serde_q")]
    pub h_value: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeMarking {
    pub node: usize,
    pub color: Color,
    /// ⟨h_m⁰|α⟩; absent on black nodes.
    #[serde(with = "serde_q_opt", default, skip_serializing_if = "Option::is_none")]
    pub h_value: Option<Q>,
    /// ⟨ϖ_m⁰|α⟩ on white nodes when ϖ_m⁰ is nonzero.
    #[serde(with = "serde_q_opt", default, skip_serializing_if = "Option::is_none")]
    pub pi_value: Option<Q>,
    /// Contributions of the simple ideals of m to `h_value`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentValue>,
    pub adjacent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeDiagram {
    pub nodes: Vec<SatakeMarking>,
    /// White nodes with equal restriction.
    pub arrows: Vec<[usize; 2]>,
}

impl SatakeDiagram {
    pub fn node(&self, i: usize) -> &SatakeMarking {
        &self.nodes[i - 1]
    }

    /// Nodes that carry a marking: white and adjacent to Δ₀.
    pub fn marked(&self) -> impl Iterator<Item = &SatakeMarking> {
        self.nodes.iter().filter(|m| m.adjacent)
    }
}

/// Everything derived from one pair.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub pair: SphericalPair,
    /// Root system with the normalized form, or the scale given to `with_scale`.
    pub rs: RootSystem,
    /// Normalized scale over `rs.form_scale`; W and W_sing take pairings in
    /// the normalized form.
    pub to_normal: Q,
    pub mu: Vec<ExactVector>,
    pub c: Vec<ExactVector>,
    pub c0: Vec<ExactVector>,
    pub a: Vec<ExactVector>,
    pub report_basis: Vec<ExactVector>,
    /// Symbol and subscripts used in row labels.
    pub basis_symbol: String,
    pub basis_subscripts: Vec<usize>,
    pub psi_plus: Vec<ExactVector>,
    pub rho_g: ExactVector,
    pub rho_m: ExactVector,
    pub delta: ExactVector,
    pub h: ExactVector,
    pub varpi: ExactVector,
    /// h_m⁰ of each simple ideal of m.
    pub h_components: Vec<(Vec<usize>, ExactVector)>,
    pub data: Vec<RestrictedRootDatum>,
    index: HashMap<ExactVector, usize>,
}

pub(crate) fn sub(i: usize) -> String {
    const D: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    i.to_string()
        .chars()
        .map(|c| D[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// "ξ₁-ξ₂", "2ξ₁", "ξ₁+2ξ₂+ξ₃".
pub fn format_label(coords: &[Q], symbol: &str, subs: &[usize]) -> String {
    let mut out = String::new();
    for (c, &s) in coords.iter().zip(subs) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if mag != qi(1) {
            if mag.is_integer() {
                out.push_str(&fmt_q(&mag));
            } else {
                out.push_str(&format!("({})", fmt_q(&mag)));
            }
        }
        out.push_str(symbol);
        out.push_str(&sub(s));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn in_span_of(coeffs: &[i64], nodes: &BTreeSet<usize>) -> bool {
    coeffs
        .iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || nodes.contains(&(i + 1)))
}

/// h with ⟨h|α⟩ = 2 for α in `nodes`, inside the span of their coroots.
fn principal(rs: &RootSystem, nodes: &[usize]) -> Result<ExactVector> {
    let mut h = ExactVector::zero(rs.ambient_dim);
    if nodes.is_empty() {
        return Ok(h);
    }
    let coroots: Vec<ExactVector> = nodes
        .iter()
        .map(|&i| rs.coroot(&rs.simple_roots[i - 1]))
        .collect::<Result<_>>()?;
    let a: Vec<Vec<Q>> = nodes
        .iter()
        .map(|&i| coroots.iter().map(|cv| rs.form(cv, &rs.simple_roots[i - 1])).collect())
        .collect();
    let b = vec![qi(2); nodes.len()];
    let c = linalg::solve(&a, &b).ok_or_else(|| Error::Hypothesis("Δ₀ coroots are dependent".into()))?;
    for (ci, cv) in c.iter().zip(&coroots) {
        h += &cv.scale(ci);
    }
    Ok(h)
}

impl Analysis {
    pub fn new(pair: &SphericalPair) -> Result<Self> {
        let base = build_root_system(pair.group.lie_type, pair.group.rank)?;
        let s = normalized_form(&base, &pair.delta0);
        Self::build(pair, base.with_form_scale(s.clone()), s)
    }

    /// The same analysis under an arbitrary positive multiple of the dot product.
    pub fn with_scale(pair: &SphericalPair, scale: Q) -> Result<Self> {
        let base = build_root_system(pair.group.lie_type, pair.group.rank)?;
        let s = normalized_form(&base, &pair.delta0);
        Self::build(pair, base.with_form_scale(scale), s)
    }

    fn build(pair: &SphericalPair, rs: RootSystem, normal_scale: Q) -> Result<Self> {
        pair.validate()?;
        let key = pair.key();
        let structural = |d: String| Error::structural(&key, d);
        let r = pair.spherical_rank;
        let mu = pair.generator_vectors()?;
        for m in &mu {
            if !rs.is_dominant(m) {
                return Err(structural(format!("generator {m} is not dominant")));
            }
        }
        let d0 = &pair.delta0;
        let d0_set: BTreeSet<usize> = d0.iter().copied().collect();
        let d0_roots: Vec<ExactVector> = d0.iter().map(|&i| rs.simple_roots[i - 1].clone()).collect();

        // c, c₀ and a, with the dimension counts d, d − r, r.
        let c = linalg::kernel_within(&rs.simple_roots, &d0_roots);
        let support = rs.rank - d0.len();
        let c0 = linalg::kernel_within(&c, &mu);
        let a = linalg::complement_within(&c, &c0);
        if c.len() != support || c0.len() != support - r || a.len() != r {
            return Err(structural(format!(
                "dim c = {}, dim c₀ = {}, dim a = {} but |∪ Supp μᵢ| = {support} and r = {r}",
                c.len(),
                c0.len(),
                a.len()
            )));
        }
        if !linalg::same_span(&a, &mu) {
            return Err(structural("a is not spanned by the generators".into()));
        }
        let restrict = |v: &ExactVector| linalg::project(v, &mu);

        // Reporting basis.
        let (report_basis, basis_symbol, basis_subscripts) = match &pair.a_basis {
            Some(ABasis::Vectors(vs)) => (vs.clone(), "ξ".to_string(), (1..=vs.len()).collect()),
            Some(ABasis::SimpleRestrictions(idx)) => (
                idx.iter().map(|&i| restrict(&rs.simple_roots[i - 1])).collect(),
                "ξ".to_string(),
                (1..=idx.len()).collect(),
            ),
            None => {
                let mut seen: Vec<ExactVector> = Vec::new();
                let mut subs = Vec::new();
                for i in (1..=rs.rank).filter(|i| !d0_set.contains(i)) {
                    let v = restrict(&rs.simple_roots[i - 1]);
                    if !seen.contains(&v) {
                        seen.push(v);
                        subs.push(i);
                    }
                }
                if seen.len() == r {
                    (seen, "λ".to_string(), subs)
                } else {
                    (mu.clone(), "μ".to_string(), (1..=r).collect())
                }
            }
        };
        if report_basis.len() != r || linalg::rank(&report_basis) != r || !linalg::same_span(&report_basis, &mu) {
            return Err(structural("the reporting basis does not span a".into()));
        }

        // Ψ⁺ and the nests.
        let mut psi_plus = Vec::new();
        let mut groups: Vec<(ExactVector, Vec<ExactVector>)> = Vec::new();
        let mut gidx: HashMap<ExactVector, usize> = HashMap::new();
        for (alpha, coeffs) in rs.positive_roots.iter().zip(&rs.positive_coeffs) {
            if in_span_of(coeffs, &d0_set) {
                psi_plus.push(alpha.clone());
                continue;
            }
            let xi = restrict(alpha);
            if xi.is_zero() {
                return Err(structural(format!("root {alpha} outside Ψ restricts to 0")));
            }
            match gidx.get(&xi) {
                Some(&g) => groups[g].1.push(alpha.clone()),
                None => {
                    gidx.insert(xi.clone(), groups.len());
                    groups.push((xi, vec![alpha.clone()]));
                }
            }
        }

        let n = rs.ambient_dim;
        let rho_g = rs.rho();
        let rho_m = crate::root_system::rho(&psi_plus, n);
        let mut delta = ExactVector::zero(n);
        for (xi, nest) in &groups {
            delta += &xi.scale(&(qi(nest.len() as i64) * half()));
        }
        let h = principal(&rs, d0)?;
        let h_components: Vec<(Vec<usize>, ExactVector)> = components(&rs, d0)
            .into_iter()
            .map(|comp| principal(&rs, &comp).map(|hc| (comp, hc)))
            .collect::<Result<_>>()?;
        let varpi = &rho_m - &h.scale(&half());

        // Data ordered by divisibility, then by coordinates (descending).
        let mut data: Vec<RestrictedRootDatum> = Vec::with_capacity(groups.len());
        for (xi, nest) in &groups {
            let coords = linalg::coordinates(xi, &report_basis)
                .ok_or_else(|| structural(format!("{xi} lies outside the reporting basis span")))?;
            let shifts: Vec<Q> = nest.iter().map(|a| rs.form(&rho_m, a)).collect();
            let h_values: Vec<Q> = nest.iter().map(|a| rs.form(&h, a)).collect();
            let min = h_values.iter().min().unwrap().clone();
            let basic_roots: Vec<ExactVector> = nest
                .iter()
                .zip(&h_values)
                .filter(|(_, v)| **v == min)
                .map(|(a, _)| a.clone())
                .collect();
            let divisibility = if gidx.contains_key(&xi.scale(&half())) {
                2
            } else if gidx.contains_key(&xi.scale(&Q::new(1.into(), 3.into()))) {
                3
            } else {
                1
            };
            data.push(RestrictedRootDatum {
                label: format_label(&coords, &basis_symbol, &basis_subscripts),
                xi: xi.clone(),
                coords,
                nest: nest.clone(),
                multiplicity: nest.len(),
                shifts,
                h_values,
                k_xi: -min,
                basic_roots,
                delta_pairing: rs.form(&delta, xi),
                norm2: rs.form(xi, xi),
                divisibility,
                parent: None,
                form: FormMatch {
                    signature: crate::dimension::Signature::new(0, 0, 0),
                    regular: false,
                    singular: false,
                },
                klass: Klass::Regular,
            });
        }
        data.sort_by(|x, y| x.divisibility.cmp(&y.divisibility).then_with(|| y.coords.cmp(&x.coords)));
        let index: HashMap<ExactVector, usize> = data.iter().enumerate().map(|(i, d)| (d.xi.clone(), i)).collect();

        // Parents, form matching and classification.
        for i in 0..data.len() {
            let d = data[i].divisibility;
            if d != 1 {
                let eta = data[i].xi.scale(&Q::new(1.into(), (d as i64).into()));
                data[i].parent = Some(index[&eta]);
            }
        }
        let to_normal = normal_scale / &rs.form_scale;
        let mut an = Analysis {
            pair: pair.clone(),
            to_normal,
            rs,
            mu,
            c,
            c0,
            a,
            report_basis,
            basis_symbol,
            basis_subscripts,
            psi_plus,
            rho_g,
            rho_m,
            delta,
            h,
            varpi,
            h_components,
            data,
            index,
        };
        for i in 0..an.data.len() {
            if an.data[i].divisibility != 1 {
                continue;
            }
            let xi = an.data[i].xi.clone();
            let normal = |v: &[Q]| v.iter().map(|x| x * &an.to_normal).collect::<Vec<_>>();
            let multiple = |k: i64| an.get(&xi.scale(&qi(k))).map(|d| normal(&d.shifts)).unwrap_or_default();
            let (s2, s3) = (multiple(2), multiple(3));
            let y = &an.data[i].delta_pairing * &an.to_normal;
            let m = match_w_form(&y, [&normal(&an.data[i].shifts), &s2, &s3])
                .map_err(|e| structural(format!("{}: {e}", an.data[i].label)))?;
            let klass = if m.ambiguous() {
                an.expected_for(i).and_then(|row| row.klass).unwrap_or(Klass::Regular)
            } else if m.regular {
                Klass::Regular
            } else {
                Klass::Singular
            };
            an.data[i].form = m;
            an.data[i].klass = klass;
        }
        for i in 0..an.data.len() {
            if let Some(p) = an.data[i].parent {
                an.data[i].form = an.data[p].form;
                an.data[i].klass = an.data[p].klass;
            }
        }
        Ok(an)
    }

    pub fn restrict(&self, v: &ExactVector) -> ExactVector {
        linalg::project(v, &self.mu)
    }

    pub fn get(&self, xi: &ExactVector) -> Option<&RestrictedRootDatum> {
        self.index.get(xi).map(|&i| &self.data[i])
    }

    pub fn position(&self, xi: &ExactVector) -> Option<usize> {
        self.index.get(xi).copied()
    }

    /// The restricted root named by a table key.
    pub fn resolve_key(&self, key: &RowKey) -> Option<ExactVector> {
        match key {
            RowKey::Basis(c) => {
                if c.len() != self.report_basis.len() {
                    return None;
                }
                let terms: Vec<(Q, &ExactVector)> = c.iter().cloned().zip(self.report_basis.iter()).collect();
                Some(ExactVector::combination(self.rs.ambient_dim, &terms))
            }
            RowKey::Simple { alpha, times } => {
                let a = self.rs.simple_roots.get(alpha.checked_sub(1)?)?;
                Some(self.restrict(a).scale(&qi(*times as i64)))
            }
        }
    }

    /// The transcribed row describing data[i], if any.
    pub fn expected_for(&self, i: usize) -> Option<&ExpectedRow> {
        let xi = &self.data[i].xi;
        self.pair
            .expected_table
            .iter()
            .find(|row| self.resolve_key(&row.key).as_ref() == Some(xi))
    }

    pub fn indivisible(&self) -> impl Iterator<Item = &RestrictedRootDatum> {
        self.data.iter().filter(|d| d.divisibility == 1)
    }

    pub fn delta0_has_two_lengths(&self) -> bool {
        let norms: BTreeSet<Q> = self
            .pair
            .delta0
            .iter()
            .map(|&i| self.rs.simple_roots[i - 1].norm2())
            .collect();
        norms.len() == 2
    }

    pub fn satake_diagram(&self) -> SatakeDiagram {
        let rs = &self.rs;
        let d0: BTreeSet<usize> = self.pair.delta0.iter().copied().collect();
        let pi = !self.varpi.is_zero();
        let nodes = (1..=rs.rank)
            .map(|i| {
                let alpha = &rs.simple_roots[i - 1];
                if d0.contains(&i) {
                    return SatakeMarking {
                        node: i,
                        color: Color::Black,
                        h_value: None,
                        pi_value: None,
                        components: vec![],
                        adjacent: false,
                    };
                }
                let adjacent = d0.iter().any(|&j| rs.adjacent(i - 1, j - 1));
                let comps = self
                    .h_components
                    .iter()
                    .map(|(nodes, hc)| ComponentValue {
                        nodes: nodes.clone(),
                        h_value: rs.form(hc, alpha),
                    })
                    .filter(|c| !c.h_value.is_zero())
                    .collect();
                SatakeMarking {
                    node: i,
                    color: Color::White,
                    h_value: Some(rs.form(&self.h, alpha)),
                    pi_value: pi.then(|| rs.form(&self.varpi, alpha)),
                    components: comps,
                    adjacent,
                }
            })
            .collect();
        let white: Vec<usize> = (1..=rs.rank).filter(|i| !d0.contains(i)).collect();
        let mut arrows = Vec::new();
        for (x, &i) in white.iter().enumerate() {
            for &j in &white[x + 1..] {
                if self.restrict(&rs.simple_roots[i - 1]) == self.restrict(&rs.simple_roots[j - 1]) {
                    arrows.push([i, j]);
                }
            }
        }
        SatakeDiagram { nodes, arrows }
    }

    /// ⟨h_m⁰|α⟩ and ⟨ϖ_m⁰|α⟩ for a simple root (1-based), black or white.
    pub fn simple_values(&self, i: usize) -> (Q, Q) {
        let a = &self.rs.simple_roots[i - 1];
        (self.rs.form(&self.h, a), self.rs.form(&self.varpi, a))
    }

    fn fail(&self, d: String) -> Error {
        Error::structural(&self.pair.key(), d)
    }

    /// ρ_g = δ + ρ_m and ⟨δ|ρ_m⟩ = 0.
    pub fn verify_rho_decomposition(&self) -> Result<()> {
        if self.rho_g != &self.delta + &self.rho_m {
            return Err(self.fail(format!("ρ_g = {} but δ + ρ_m = {}", self.rho_g, &self.delta + &self.rho_m)));
        }
        let p = self.rs.form(&self.delta, &self.rho_m);
        if !p.is_zero() {
            return Err(self.fail(format!("⟨δ|ρ_m⟩ = {}", fmt_q(&p))));
        }
        Ok(())
    }

    /// The nests partition Φ⁺ ∖ Ψ⁺.
    pub fn verify_partition(&self) -> Result<()> {
        let mut seen: BTreeSet<&ExactVector> = BTreeSet::new();
        for d in &self.data {
            if d.multiplicity != d.nest.len() || d.shifts.len() != d.nest.len() {
                return Err(self.fail(format!("{}: multiplicity and nest size differ", d.label)));
            }
            for a in &d.nest {
                if !seen.insert(a) {
                    return Err(self.fail(format!("{a} lies in two nests")));
                }
                if self.restrict(a) != d.xi {
                    return Err(self.fail(format!("{a} does not restrict to {}", d.label)));
                }
            }
        }
        let psi: BTreeSet<&ExactVector> = self.psi_plus.iter().collect();
        let outside: BTreeSet<&ExactVector> = self.rs.positive_roots.iter().filter(|a| !psi.contains(a)).collect();
        if seen != outside {
            return Err(self.fail("nests do not cover Φ⁺ ∖ Ψ⁺".into()));
        }
        let total: usize = self.data.iter().map(|d| d.multiplicity).sum();
        if total != self.rs.positive_roots.len() - self.psi_plus.len() {
            return Err(self.fail("multiplicities do not sum to |Φ⁺| - |Ψ⁺|".into()));
        }
        Ok(())
    }

    /// The h-values of each nest lie in [−k, k] and contain −k, −k+2, …, k.
    pub fn verify_eigenvalues(&self) -> Result<()> {
        for d in &self.data {
            let k = &d.k_xi;
            if k.is_negative() || !k.is_integer() {
                return Err(self.fail(format!("{}: k = {} is not a nonnegative integer", d.label, fmt_q(k))));
            }
            if d.h_values.iter().any(|v| v > k || *v < -k.clone()) {
                return Err(self.fail(format!("{}: h-values leave [-k, k]", d.label)));
            }
            let mut pool = d.h_values.clone();
            let mut v = -k.clone();
            while v <= *k {
                match pool.iter().position(|x| *x == v) {
                    Some(p) => {
                        pool.swap_remove(p);
                    }
                    None => return Err(self.fail(format!("{}: h-value {} missing", d.label, fmt_q(&v)))),
                }
                v += qi(2);
            }
        }
        Ok(())
    }

    /// Each shift multiset equals its negation.
    pub fn verify_shift_symmetry(&self) -> Result<()> {
        for d in &self.data {
            let mut a = d.shifts.clone();
            let mut b: Vec<Q> = d.shifts.iter().map(|s| -s.clone()).collect();
            a.sort();
            b.sort();
            if a != b {
                return Err(self.fail(format!("{}: shifts are not symmetric", d.label)));
            }
        }
        Ok(())
    }

    /// α ∈ nest(ξ), β ∈ Ψ, α+β ∈ Φ ⇒ α+β ∈ nest(ξ).
    pub fn verify_m_invariance(&self) -> Result<()> {
        for d in &self.data {
            let nest: BTreeSet<&ExactVector> = d.nest.iter().collect();
            for a in &d.nest {
                for b in &self.psi_plus {
                    for s in [a + b, a - b] {
                        if self.rs.is_root(&s) && !nest.contains(&s) {
                            return Err(self.fail(format!("{}: {a} ± {b} leaves the nest", d.label)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Basic roots, k and the form data are consistent; no pole in any factor.
    pub fn verify_data(&self) -> Result<()> {
        for d in &self.data {
            let basic: Vec<&ExactVector> = d
                .nest
                .iter()
                .zip(&d.h_values)
                .filter(|(_, v)| **v == d.h_min())
                .map(|(a, _)| a)
                .collect();
            if basic.len() != d.basic_roots.len() || basic.is_empty() {
                return Err(self.fail(format!("{}: basic roots inconsistent", d.label)));
            }
            for s in &d.shifts {
                if !(&d.delta_pairing + s).is_positive() {
                    return Err(self.fail(format!("{}: ⟨δ|ξ⟩ + shift is not positive", d.label)));
                }
            }
        }
        Ok(())
    }

    pub fn verify_all(&self) -> Result<()> {
        self.verify_rho_decomposition()?;
        self.verify_partition()?;
        self.verify_eigenvalues()?;
        self.verify_shift_symmetry()?;
        self.verify_m_invariance()?;
        self.verify_data()
    }

    /// w maps nest(ξ) onto nest(η) and preserves every shift.
    ///
    /// Requires unique basic roots α, β with wα = β and wΔ₀ = Δ₀.
    pub fn verify_nest_conjugation(&self, w: &SignedPermutation, xi: &ExactVector, eta: &ExactVector) -> Result<()> {
        let find = |v: &ExactVector| {
            self.get(v)
                .ok_or_else(|| Error::Hypothesis(format!("{v} is not a restricted root")))
        };
        let (dx, de) = (find(xi)?, find(eta)?);
        if dx.basic_roots.len() != 1 || de.basic_roots.len() != 1 {
            return Err(Error::Hypothesis("basic roots are not unique".into()));
        }
        let d0: BTreeSet<ExactVector> = self
            .pair
            .delta0
            .iter()
            .map(|&i| self.rs.simple_roots[i - 1].clone())
            .collect();
        let image: BTreeSet<ExactVector> = d0.iter().map(|a| w.apply(a)).collect::<Result<_>>()?;
        if image != d0 {
            return Err(Error::Hypothesis("w does not preserve Δ₀".into()));
        }
        if w.apply(&dx.basic_roots[0])? != de.basic_roots[0] {
            return Err(Error::Hypothesis(format!(
                "w sends {} to {}, not to {}",
                dx.basic_roots[0],
                w.apply(&dx.basic_roots[0])?,
                de.basic_roots[0]
            )));
        }
        let target: HashMap<&ExactVector, &Q> = de.nest.iter().zip(&de.shifts).collect();
        let mut hit = BTreeSet::new();
        for (a, s) in dx.nest.iter().zip(&dx.shifts) {
            let wa = w.apply(a)?;
            match target.get(&wa) {
                Some(t) if *t == s => {
                    hit.insert(wa);
                }
                Some(t) => {
                    return Err(self.fail(format!("shift of {a} is {} but of {wa} is {}", fmt_q(s), fmt_q(t))))
                }
                None => return Err(self.fail(format!("w sends {a} to {wa}, outside the target nest"))),
            }
        }
        if hit.len() != de.nest.len() {
            return Err(self.fail("w is not onto the target nest".into()));
        }
        Ok(())
    }

    /// Differences between the computed data and the transcribed table.
    pub fn compare_expected(&self) -> Vec<Discrepancy> {
        let mut out = Vec::new();
        let mut push = |row: &str, field: &str, expected: String, computed: String| {
            out.push(Discrepancy {
                row: row.to_string(),
                field: field.to_string(),
                expected,
                computed,
            })
        };
        let mut matched = BTreeSet::new();
        for row in &self.pair.expected_table {
            let Some(i) = self.resolve_key(&row.key).and_then(|v| self.position(&v)) else {
                push(&row.label, "root", "present".into(), "absent".into());
                continue;
            };
            matched.insert(i);
            let d = &self.data[i];
            if d.multiplicity != row.multiplicity {
                push(&row.label, "multiplicity", row.multiplicity.to_string(), d.multiplicity.to_string());
            }
            if let Some(e) = &row.delta_pairing {
                if *e != d.delta_pairing {
                    push(&row.label, "⟨δ|ξ⟩", fmt_q(e), fmt_q(&d.delta_pairing));
                }
            }
            if let Some(e) = row.basic_roots {
                if e != d.basic_roots.len() {
                    push(&row.label, "basic roots", e.to_string(), d.basic_roots.len().to_string());
                }
            }
            if let Some(e) = &row.h_min {
                if *e != d.h_min() {
                    push(&row.label, "⟨h|β⟩", fmt_q(e), fmt_q(&d.h_min()));
                }
            }
            if let Some(e) = row.klass {
                let ok = match e {
                    Klass::Regular => d.form.regular,
                    Klass::Singular => d.form.singular,
                };
                if !ok || d.klass != e {
                    push(&row.label, "class", e.tag().into(), d.klass.tag().into());
                }
            }
        }
        if self.pair.table_complete && matched.len() != self.data.len() {
            for (i, d) in self.data.iter().enumerate() {
                if !matched.contains(&i) {
                    push(&d.label, "root", "absent".into(), "present".into());
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub row: String,
    pub field: String,
    pub expected: String,
    pub computed: String,
}

impl std::fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {}: expected {}, computed {}", self.row, self.field, self.expected, self.computed)
    }
}

/// Free-function form of [`Analysis::verify_nest_conjugation`].
pub fn verify_nest_conjugation(an: &Analysis, w: &SignedPermutation, xi: &ExactVector, eta: &ExactVector) -> Result<()> {
    an.verify_nest_conjugation(w, xi, eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{instantiate, lookup, Params};
    use crate::rational::q;

    fn p(kv: &[(&str, i64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn subspace_dimensions() {
        let f = Analysis::new(&lookup("FII").unwrap()).unwrap();
        assert_eq!((f.c.len(), f.c0.len(), f.a.len()), (1, 0, 1));
        let a = Analysis::new(&instantiate("AIV", &p(&[("l", 4)])).unwrap()).unwrap();
        assert_eq!((a.c.len(), a.c0.len(), a.a.len()), (2, 1, 1));
        // c₀ is spanned by (ℓ−1)ε₁ − 2(ε₂+⋯+εℓ) + (ℓ−1)ε_{ℓ+1}.
        assert!(linalg::same_span(&a.c0, &[ExactVector::from_ints(&[3, -2, -2, -2, 3])]));
        let s = Analysis::new(&instantiate("slsp", &p(&[("n", 2)])).unwrap()).unwrap();
        assert_eq!(s.c.len(), 4);
        assert!(s.c0.is_empty());
    }

    #[test]
    fn restrictions() {
        let f = Analysis::new(&lookup("FII").unwrap()).unwrap();
        assert_eq!(f.restrict(&f.rs.simple_roots[3]), ExactVector::from_frac(&[1, 0, 0, 0], 2));
        assert!(f.restrict(&f.rs.simple_roots[0]).is_zero());
        let a = Analysis::new(&instantiate("AIV", &p(&[("l", 3)])).unwrap()).unwrap();
        assert_eq!(a.restrict(&a.rs.simple_roots[0]), ExactVector::from_frac(&[1, 0, 0, -1], 2));
    }

    #[test]
    fn fii_data() {
        let f = Analysis::new(&lookup("FII").unwrap()).unwrap();
        let m: Vec<usize> = f.data.iter().map(|d| d.multiplicity).collect();
        assert_eq!(m, vec![8, 7]);
        assert_eq!(f.delta, f.data[0].xi.scale(&qi(11)));
        let mut s = f.data[0].shifts.clone();
        s.sort();
        let want: Vec<Q> = [-9, -7, -3, -1, 1, 3, 7, 9].iter().map(|&n| q(n, 4)).collect();
        assert_eq!(s, want);
        assert_eq!(f.data[1].parent, Some(0));
        assert_eq!(f.data[0].form.signature, crate::dimension::Signature::new(8, 7, 0));
    }

    #[test]
    fn principal_elements() {
        let b = Analysis::new(&lookup("B3G2").unwrap()).unwrap();
        let s = &b.rs.simple_roots;
        assert_eq!(b.h, (&s[0] + &s[1]).scale(&qi(2)));
        let e = Analysis::new(&lookup("EIV").unwrap()).unwrap();
        let s = &e.rs.simple_roots;
        let want = ExactVector::combination(8, &[(qi(6), &s[1]), (qi(6), &s[2]), (qi(10), &s[3]), (qi(6), &s[4])]);
        assert_eq!(e.h, want);
        assert!(e.varpi.is_zero());
    }

    #[test]
    fn bii_pi_element() {
        let b = Analysis::new(&instantiate("BII", &p(&[("l", 4)])).unwrap()).unwrap();
        assert_eq!(b.varpi, ExactVector::from_frac(&[0, -1, -1, -1], 2));
        let c = Analysis::new(&instantiate("CII-rk1", &p(&[("l", 4)])).unwrap()).unwrap();
        assert_eq!(c.varpi, ExactVector::from_frac(&[0, 0, 1, 1], 2));
    }

    #[test]
    fn labels() {
        assert_eq!(format_label(&[qi(1), qi(-1)], "ξ", &[1, 2]), "ξ₁-ξ₂");
        assert_eq!(format_label(&[qi(1), qi(2), qi(1)], "ξ", &[1, 2, 3]), "ξ₁+2ξ₂+ξ₃");
        assert_eq!(format_label(&[qi(0), q(1, 2)], "λ", &[1, 12]), "(1/2)λ₁₂");
    }

    #[test]
    fn every_default_instance_passes_structure_checks() {
        for pair in crate::catalog::catalog() {
            let an = Analysis::new(&pair).unwrap_or_else(|e| panic!("{}: {e}", pair.key()));
            an.verify_all().unwrap_or_else(|e| panic!("{e}"));
        }
    }
}
