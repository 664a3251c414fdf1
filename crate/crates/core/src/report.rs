//! Plain-text and JSON descriptions of a pair.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::{Params, SphericalPair};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, serde_q, serde_q_vec, Q};
use crate::restriction::{sub, Analysis, Color, SatakeDiagram};
use crate::vector::ExactVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub label: String,
    #[serde(with = "serde_q_vec")]
    pub coords: Vec<Q>,
    pub multiplicity: usize,
    #[serde(with = "serde_q")]
    pub delta_pairing: Q,
    pub basic_roots: usize,
    #[serde(with = "serde_q")]
    pub h_min: Q,
    pub klass: String,
    /// The closed form of the indivisible root's family.
    pub formula: String,
    pub divisibility: u32,
    /// Both W and W_sing reproduce this family.
    pub ambiguous: bool,
    #[serde(with = "serde_q_vec")]
    pub shifts: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Description {
    pub pair: String,
    pub id: String,
    #[serde(default)]
    pub params: Params,
    pub title: String,
    pub group: String,
    pub delta0: Vec<usize>,
    pub generators: Vec<Vec<u32>>,
    pub spherical_rank: usize,
    pub symmetric: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alias_of: Option<String>,
    #[serde(with = "serde_q")]
    pub form_scale: Q,
    pub basis_symbol: String,
    pub basis_subscripts: Vec<usize>,
    pub basis: Vec<ExactVector>,
    pub rows: Vec<Row>,
    pub satake: SatakeDiagram,
    pub delta: ExactVector,
    pub rho_m: ExactVector,
    pub h: ExactVector,
    pub varpi: ExactVector,
}

impl Description {
    pub fn new(an: &Analysis) -> Self {
        let p: &SphericalPair = &an.pair;
        let rows = an
            .data
            .iter()
            .map(|d| {
                let mut shifts = d.shifts.clone();
                shifts.sort();
                Row {
                    label: d.label.clone(),
                    coords: d.coords.clone(),
                    multiplicity: d.multiplicity,
                    delta_pairing: d.delta_pairing.clone(),
                    basic_roots: d.basic_roots.len(),
                    h_min: d.h_min(),
                    klass: d.klass.tag().to_string(),
                    formula: d.form.formula(d.klass),
                    divisibility: d.divisibility,
                    ambiguous: d.form.ambiguous(),
                    shifts,
                }
            })
            .collect();
        Description {
            pair: p.key(),
            id: p.id.clone(),
            params: p.params.clone(),
            title: p.title.clone(),
            group: p.group.to_string(),
            delta0: p.delta0.clone(),
            generators: p.generators.clone(),
            spherical_rank: p.spherical_rank,
            symmetric: p.symmetric,
            alias_of: p.alias_of.clone(),
            form_scale: an.rs.form_scale.clone(),
            basis_symbol: an.basis_symbol.clone(),
            basis_subscripts: an.basis_subscripts.clone(),
            basis: an.report_basis.clone(),
            rows,
            satake: an.satake_diagram(),
            delta: an.delta.clone(),
            rho_m: an.rho_m.clone(),
            h: an.h.clone(),
            varpi: an.varpi.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("description serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// "ϖ₁+ϖ₆", "2ϖ₇".
pub fn format_weight(coeffs: &[u32]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            if c == 1 {
                format!("ϖ{}", sub(i + 1))
            } else {
                format!("{c}ϖ{}", sub(i + 1))
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

fn width(s: &str) -> usize {
    s.chars().count()
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w: Vec<usize> = header.iter().map(|h| width(h)).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            w[i] = w[i].max(width(c));
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(w[i] - width(c) + 2));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    let total: usize = w.iter().sum::<usize>() + 2 * (w.len() - 1);
    out.push_str(&"-".repeat(total));
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn set(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(|i| format!("α{}", sub(*i))).collect();
    format!("{{{}}}", inner.join(", "))
}

/// The restricted-root table and Satake markings as plain text.
pub fn render_text(d: &Description) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}  {}", d.pair, d.title);
    if let Some(a) = &d.alias_of {
        let _ = writeln!(out, "same root data as {a}");
    }
    let gens: Vec<String> = d.generators.iter().map(|g| format_weight(g)).collect();
    let _ = writeln!(out, "group {}, Δ₀ = {}, rank {}, {}", d.group, set(&d.delta0), d.spherical_rank, if d.symmetric { "symmetric" } else { "not symmetric" });
    let _ = writeln!(out, "generators {}", gens.join(", "));
    let _ = writeln!(out, "form scale {}", fmt_q(&d.form_scale));
    for (i, b) in d.basis.iter().enumerate() {
        let _ = writeln!(out, "{}{} = {}", d.basis_symbol, sub(d.basis_subscripts[i]), b);
    }
    let _ = writeln!(out, "δ = {}", d.delta);
    let _ = writeln!(out);
    let rows: Vec<Vec<String>> = d
        .rows
        .iter()
        .map(|r| {
            vec![
                r.label.clone(),
                r.multiplicity.to_string(),
                fmt_q(&r.delta_pairing),
                r.basic_roots.to_string(),
                fmt_q(&r.h_min),
                if r.ambiguous { format!("{}*", r.klass) } else { r.klass.clone() },
                if r.divisibility == 1 { r.formula.clone() } else { String::new() },
            ]
        })
        .collect();
    out.push_str(&table(&["root", "mult", "⟨δ|ξ⟩", "#basic", "⟨h|β⟩", "class", "factor"], &rows));
    if d.rows.iter().any(|r| r.ambiguous) {
        out.push_str("* W and W_sing coincide for this family\n");
    }
    let _ = writeln!(out);
    out.push_str("Satake diagram\n");
    for m in &d.satake.nodes {
        let _ = write!(out, "  α{} {}", sub(m.node), if m.color == Color::Black { "●" } else { "○" });
        if m.adjacent {
            let h = m.h_value.as_ref().map(fmt_q).unwrap_or_default();
            match &m.pi_value {
                Some(p) => {
                    let _ = write!(out, "  ({h}, {})", fmt_q(p));
                }
                None => {
                    let _ = write!(out, "  {h}");
                }
            }
            if m.components.len() > 1 {
                let parts: Vec<String> = m
                    .components
                    .iter()
                    .map(|c| format!("{} on {}", fmt_q(&c.h_value), set(&c.nodes)))
                    .collect();
                let _ = write!(out, "  [{}]", parts.join("; "));
            }
        }
        out.push('\n');
    }
    if !d.satake.arrows.is_empty() {
        let arrows: Vec<String> = d
            .satake
            .arrows
            .iter()
            .map(|[i, j]| format!("α{} ↔ α{}", sub(*i), sub(*j)))
            .collect();
        let _ = writeln!(out, "  arrows {}", arrows.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    #[test]
    fn weights_format() {
        assert_eq!(format_weight(&[1, 0, 0, 0, 0, 1]), "ϖ₁+ϖ₆");
        assert_eq!(format_weight(&[0, 0, 2]), "2ϖ₃");
        assert_eq!(format_weight(&[0, 0]), "0");
    }

    #[test]
    fn fii_text() {
        let an = Analysis::new(&lookup("FII").unwrap()).unwrap();
        let t = render_text(&Description::new(&an));
        assert!(t.contains("ξ₁    8     11/4"));
        assert!(t.contains("α₄ ○  (-6, 3/4)"));
    }

    #[test]
    fn json_round_trip() {
        let an = Analysis::new(&lookup("E6D5").unwrap()).unwrap();
        let d = Description::new(&an);
        let back = Description::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        assert_eq!(render_text(&back), render_text(&d));
    }
}
