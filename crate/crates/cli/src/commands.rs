use std::fmt::Write as _;
use std::path::PathBuf;

use nestdim::catalog::{catalog, families, from_key, k_vectors, parse_param, Params};
use nestdim::dimension::{dim_for_k, DimensionReport, Mode};
use nestdim::rational::fmt_q;
use nestdim::report::{format_weight, render_text, Description};
use nestdim::restriction::Analysis;
use nestdim::SphericalPair;
use rayon::prelude::*;
use serde::Serialize;

use crate::{Failure, Format, Target};

type Out = Result<String, Failure>;

fn params(words: &[String]) -> Result<Params, Failure> {
    words
        .iter()
        .map(|w| parse_param(w).map_err(Failure::from))
        .collect()
}

fn resolve(pair: &str, words: &[String]) -> Result<SphericalPair, Failure> {
    Ok(from_key(pair, &params(words)?)?)
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_out(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn k_text(k: &[u32]) -> String {
    let parts: Vec<String> = k.iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

#[derive(Serialize)]
struct FamilyEntry {
    id: &'static str,
    title: &'static str,
    kind: nestdim::catalog::Kind,
    params: &'static [&'static str],
    instances: Vec<String>,
}

pub fn list(format: Format) -> Out {
    let entries: Vec<FamilyEntry> = families()
        .into_iter()
        .map(|f| FamilyEntry {
            id: f.id,
            title: f.title,
            kind: f.kind,
            params: f.params,
            instances: f
                .default_params()
                .iter()
                .map(|p| from_key(f.id, p).map(|s| s.key()))
                .collect::<Result<_, _>>()
                .expect("defaults instantiate"),
        })
        .collect();
    Ok(match format {
        Format::Json => json(&entries),
        Format::Csv => csv_out(
            &["id", "title", "kind", "params", "instances"],
            entries.iter().map(|e| {
                vec![
                    e.id.to_string(),
                    e.title.to_string(),
                    format!("{:?}", e.kind),
                    e.params.join(" "),
                    e.instances.join(" "),
                ]
            }),
        ),
        Format::Text => {
            let w = entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
            let t = entries.iter().map(|e| e.title.len()).max().unwrap_or(0);
            let mut out = String::new();
            for e in &entries {
                let inst = if e.params.is_empty() {
                    String::new()
                } else {
                    e.instances.join(" ")
                };
                let _ = writeln!(out, "{:w$}  {:t$}  {}", e.id, e.title, inst);
            }
            out.lines().map(|l| format!("{}\n", l.trim_end())).collect()
        }
    })
}

pub fn describe(pair: Option<String>, words: &[String], from_json: Option<PathBuf>, format: Format) -> Out {
    let d = match (pair, from_json) {
        (_, Some(path)) => {
            if !words.is_empty() {
                return Err(Failure::Input("parameters cannot be combined with --from-json".into()));
            }
            let text = std::fs::read_to_string(&path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Description::from_json(&text)?
        }
        (Some(p), None) => Description::new(&Analysis::new(&resolve(&p, words)?)?),
        (None, None) => return Err(Failure::Input("a pair or --from-json is required".into())),
    };
    Ok(match format {
        Format::Text => render_text(&d),
        Format::Json => {
            let mut s = d.to_json();
            s.push('\n');
            s
        }
        Format::Csv => csv_out(
            &["root", "multiplicity", "delta_pairing", "basic_roots", "h_min", "class", "factor"],
            d.rows.iter().map(|r| {
                vec![
                    r.label.clone(),
                    r.multiplicity.to_string(),
                    fmt_q(&r.delta_pairing),
                    r.basic_roots.to_string(),
                    fmt_q(&r.h_min),
                    r.klass.clone(),
                    r.formula.clone(),
                ]
            }),
        ),
    })
}

pub fn dim(target: &Target, lambda: &[u32], fast: bool, format: Format) -> Out {
    let an = Analysis::new(&resolve(&target.pair, &target.params)?)?;
    let mode = if fast { Mode::Fast } else { Mode::Full };
    let r = dim_for_k(&an, lambda, mode)?;
    Ok(match format {
        Format::Text => format!("{}\n", fmt_q(&r.restricted_product)),
        Format::Json => json(&r),
        Format::Csv => report_csv(std::slice::from_ref(&r)),
    })
}

fn report_csv(reports: &[DimensionReport]) -> String {
    csv_out(
        &["pair", "k", "restricted", "oracle", "match"],
        reports.iter().map(|r| {
            vec![
                r.pair.clone(),
                k_text(&r.k),
                fmt_q(&r.restricted_product),
                r.oracle.as_ref().map(|o| o.to_string()).unwrap_or_default(),
                r.matches.to_string(),
            ]
        }),
    )
}

/// Reports for every k with Σk ≤ max_total, in k order regardless of scheduling.
fn sweep(an: &Analysis, max_total: u32, mode: Mode, parallel: bool) -> Result<Vec<DimensionReport>, Failure> {
    let ks = k_vectors(an.pair.spherical_rank, max_total);
    let run = |k: &Vec<u32>| dim_for_k(an, k, mode);
    let results: Vec<_> = if parallel {
        ks.par_iter().map(run).collect()
    } else {
        ks.iter().map(run).collect()
    };
    results
        .into_iter()
        .map(|r| r.map_err(Failure::from))
        .collect()
}

pub fn verify(pair: Option<String>, words: &[String], max_total: u32, parallel: bool, format: Format) -> Out {
    let pairs = match pair {
        Some(p) => vec![resolve(&p, words)?],
        None if words.is_empty() => catalog(),
        None => return Err(Failure::Input("parameters given without a pair".into())),
    };
    let build = |p: &SphericalPair| Analysis::new(p).map_err(Failure::from);
    let analyses: Vec<Analysis> = if parallel {
        pairs.par_iter().map(build).collect::<Result<_, _>>()?
    } else {
        pairs.iter().map(build).collect::<Result<_, _>>()?
    };
    let mut all = Vec::new();
    let mut text = String::new();
    for an in &analyses {
        let reports = sweep(an, max_total, Mode::Full, parallel)?;
        if let Some(bad) = reports.iter().find(|r| !r.matches) {
            return Err(Failure::Check(format!("{} at k = {}", bad.pair, k_text(&bad.k))));
        }
        let _ = writeln!(text, "{}: {} weights, all paths agree", an.pair.key(), reports.len());
        all.extend(reports);
    }
    Ok(match format {
        Format::Text => text,
        Format::Json => json(&all),
        Format::Csv => report_csv(&all),
    })
}

pub fn table(target: &Target, max_total: u32, parallel: bool, fast: bool, format: Format) -> Out {
    let an = Analysis::new(&resolve(&target.pair, &target.params)?)?;
    let mode = if fast { Mode::Fast } else { Mode::Full };
    let reports = sweep(&an, max_total, mode, parallel)?;
    Ok(match format {
        Format::Json => json(&reports),
        Format::Csv => report_csv(&reports),
        Format::Text => {
            let rows: Vec<[String; 3]> = reports
                .iter()
                .map(|r| {
                    let coeffs: Vec<u32> = r.lambda_coeffs.iter().map(|&c| c as u32).collect();
                    [k_text(&r.k), format_weight(&coeffs), fmt_q(&r.restricted_product)]
                })
                .collect();
            let head = ["k", "λ", "d(λ)"];
            let mut w = head.map(|h| h.chars().count());
            for r in &rows {
                for i in 0..3 {
                    w[i] = w[i].max(r[i].chars().count());
                }
            }
            let pad = |s: &str, n: usize| format!("{s}{}", " ".repeat(n - s.chars().count()));
            let mut out = format!("{}\n", an.pair.key());
            let _ = writeln!(out, "{}  {}  {}", pad(head[0], w[0]), pad(head[1], w[1]), head[2]);
            for r in &rows {
                let _ = writeln!(out, "{}  {}  {}", pad(&r[0], w[0]), pad(&r[1], w[1]), r[2]);
            }
            out
        }
    })
}
