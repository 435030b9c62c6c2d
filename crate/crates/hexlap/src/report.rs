//! JSON and plain-text renderings of spectra and invariant reports.

use hexlap_core::{Error as CoreError, InvariantReport, Spectrum, TauValue};
use num_traits::ToPrimitive;
use serde::Serialize;

/// Exact spanning-tree counts are expanded to decimal only below this many
/// digits; beyond it the JSON carries the log10 magnitude alone.
pub const TAU_EXACT_DIGIT_LIMIT: f64 = 100_000.0;

#[derive(Debug, Serialize)]
pub struct SpectrumJson {
    pub k: u64,
    pub n: u64,
    #[serde(rename = "N")]
    pub num_vertices: u64,
    #[serde(rename = "E")]
    pub num_edges: u64,
    pub bipartite: bool,
    pub entries: Vec<SpectrumEntryJson>,
}

#[derive(Debug, Serialize)]
pub struct SpectrumEntryJson {
    pub value: f64,
    pub multiplicity: u64,
    pub family: Option<String>,
}

impl SpectrumJson {
    pub fn new(s: &Spectrum, k: u64, n: u64) -> Self {
        let meta = s.meta();
        SpectrumJson {
            k,
            n,
            num_vertices: meta.num_vertices,
            num_edges: meta.num_edges,
            bipartite: meta.bipartite,
            entries: s
                .entries()
                .iter()
                .map(|e| SpectrumEntryJson {
                    value: e.value,
                    multiplicity: e.multiplicity,
                    family: e.family.map(|f| f.as_str().to_string()),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TauJson {
    pub exact: Option<String>,
    pub log10: f64,
}

#[derive(Debug, Serialize)]
pub struct InvariantsJson {
    pub k: u64,
    pub n: u64,
    #[serde(rename = "N")]
    pub num_vertices: u64,
    #[serde(rename = "E")]
    pub num_edges: u64,
    pub kemeny: f64,
    pub kirchhoff: f64,
    pub tau: TauJson,
    pub method: String,
}

impl InvariantsJson {
    pub fn new(r: &InvariantReport, k: u64, n: u64) -> Result<Self, CoreError> {
        let num_vertices = r.num_vertices.to_u64().ok_or(CoreError::SizeOverflow)?;
        let num_edges = r.num_edges.to_u64().ok_or(CoreError::SizeOverflow)?;
        let tau = match &r.tau {
            TauValue::Exact(p) => TauJson {
                exact: if p.digits10() <= TAU_EXACT_DIGIT_LIMIT {
                    p.value().map(|v| v.to_string())
                } else {
                    None
                },
                log10: p.log10(),
            },
            TauValue::Log10(x) => TauJson { exact: None, log10: *x },
        };
        Ok(InvariantsJson {
            k,
            n,
            num_vertices,
            num_edges,
            kemeny: r.kemeny,
            kirchhoff: r.kirchhoff,
            tau,
            method: r.method.as_str().to_string(),
        })
    }
}

pub fn render_spectrum_text(s: &Spectrum, k: u64, n: u64, method: &str) -> String {
    let meta = s.meta();
    let mut out = format!(
        "k = {k}, n = {n}, method = {method}\nN = {}\nE = {}\nbipartite = {}\n",
        meta.num_vertices, meta.num_edges, meta.bipartite
    );
    out.push_str("value                multiplicity  family\n");
    for e in s.entries() {
        out.push_str(&format!(
            "{:<20.15} {:>8}      {}\n",
            e.value,
            e.multiplicity,
            e.family.map_or("-", |f| f.as_str())
        ));
    }
    out
}

pub fn render_invariants_text(r: &InvariantReport, k: u64, n: u64) -> String {
    let mut out = format!(
        "k = {k}, n = {n}, method = {}\nN = {}\nE = {}\nkemeny    = {:.12}\nkirchhoff = {:.6}\n",
        r.method.as_str(),
        r.num_vertices,
        r.num_edges,
        r.kemeny,
        r.kirchhoff
    );
    match &r.tau {
        TauValue::Exact(p) => {
            if p.digits10() <= TAU_EXACT_DIGIT_LIMIT {
                if let Some(v) = p.value() {
                    out.push_str(&format!("tau       = {v} (= {p}, log10 = {:.6})\n", p.log10()));
                    return out;
                }
            }
            out.push_str(&format!("tau       = {p} (log10 = {:.6})\n", p.log10()));
        }
        TauValue::Log10(x) => out.push_str(&format!("tau       ~ 10^{x:.6}\n")),
    }
    out
}
