//! Eigenvalue multisets with multiplicities and family tags.

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::GraphMeta;

/// Absolute tolerance for grouping nearby eigenvalues into one multiplicity
/// entry, and for recognizing the structural values 0 and 2. Well above the
/// eigensolver error (~1e-11) and well below the smallest true gap between
/// distinct eigenvalue families produced by the spectral step.
pub const MERGE_TOL: f64 = 1e-7;

/// Which branch of the spectral step produced an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Image of a previous eigenvalue under the cubic root map (k = 1).
    CubicImage,
    /// Image of a previous eigenvalue under the quintic root map (k >= 2).
    QuinticImage,
    /// The simple eigenvalue 0 of a connected graph.
    Zero,
    /// The simple eigenvalue 2 of a connected bipartite graph.
    Two,
    /// 1/2 and 3/2, each with the previous vertex count as multiplicity (k = 1).
    HalfPair,
    /// (5 - sqrt 5)/4 and (5 + sqrt 5)/4.
    PhiPair,
    /// (3 - sqrt 5)/4 and (3 + sqrt 5)/4.
    PsiPair,
    /// The two extra simple eigenvalues absorbed from sigma = 0 (k >= 2).
    Sigma0Extra { k: u64 },
    /// The two extra simple eigenvalues absorbed from sigma = 2 (k >= 2).
    Sigma2Extra { k: u64 },
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::CubicImage => "cubic-image",
            Family::QuinticImage => "quintic-image",
            Family::Zero => "zero",
            Family::Two => "two",
            Family::HalfPair => "half-pair",
            Family::PhiPair => "phi-pair",
            Family::PsiPair => "psi-pair",
            Family::Sigma0Extra { .. } => "sigma0-extra",
            Family::Sigma2Extra { .. } => "sigma2-extra",
        }
    }
}

/// One spectrum entry: a value, its multiplicity and an optional family tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: u64,
    pub family: Option<Family>,
}

/// A normalized Laplacian spectrum: entries sorted ascending, multiplicities
/// summing to the vertex count of the graph described by `meta`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
    meta: GraphMeta,
}

impl Spectrum {
    /// Builds a spectrum from raw solver output, grouping values whose
    /// adjacent gaps are at most [`MERGE_TOL`] into multiplicity entries
    /// (each entry's value is the mean of its group).
    pub fn from_eigenvalues(values: &[f64], meta: GraphMeta) -> Result<Self, Error> {
        let mut sorted = values.to_vec();
        sorted.sort_unstable_by(f64::total_cmp);
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        let mut group_sum = 0.0;
        let mut group_len = 0u64;
        let mut prev = f64::NEG_INFINITY;
        for &v in &sorted {
            if group_len > 0 && v - prev > MERGE_TOL {
                entries.push(SpectrumEntry {
                    value: group_sum / group_len as f64,
                    multiplicity: group_len,
                    family: None,
                });
                group_sum = 0.0;
                group_len = 0;
            }
            group_sum += v;
            group_len += 1;
            prev = v;
        }
        if group_len > 0 {
            entries.push(SpectrumEntry {
                value: group_sum / group_len as f64,
                multiplicity: group_len,
                family: None,
            });
        }
        Self::from_entries(entries, meta)
    }

    /// Builds a spectrum from prepared entries; sorts them and checks that
    /// multiplicities are positive and sum to the vertex count.
    pub fn from_entries(mut entries: Vec<SpectrumEntry>, meta: GraphMeta) -> Result<Self, Error> {
        entries.retain(|e| e.multiplicity > 0);
        entries.sort_unstable_by(|a, b| f64::total_cmp(&a.value, &b.value));
        let total: u64 = entries.iter().map(|e| e.multiplicity).sum();
        if total != meta.num_vertices {
            return Err(Error::MultiplicityMismatch { total, expected: meta.num_vertices });
        }
        Ok(Spectrum { entries, meta })
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn meta(&self) -> GraphMeta {
        self.meta
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Sum of value times multiplicity; equals the matrix trace, i.e. the
    /// vertex count, for a true normalized Laplacian spectrum.
    pub fn trace(&self) -> f64 {
        self.entries.iter().map(|e| e.value * e.multiplicity as f64).sum()
    }

    pub fn min_value(&self) -> f64 {
        self.entries.first().map_or(f64::NAN, |e| e.value)
    }

    pub fn max_value(&self) -> f64 {
        self.entries.last().map_or(f64::NAN, |e| e.value)
    }

    /// Total multiplicity of entries within `tol` of `x`.
    pub fn multiplicity_near(&self, x: f64, tol: f64) -> u64 {
        self.entries
            .iter()
            .filter(|e| (e.value - x).abs() <= tol)
            .map(|e| e.multiplicity)
            .sum()
    }

    /// The spectrum as a flat ascending list, each value repeated by its
    /// multiplicity. Intended for desk-scale comparison work.
    pub fn expand(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for e in &self.entries {
            for _ in 0..e.multiplicity {
                out.push(e.value);
            }
        }
        out
    }
}

/// A multiplicity disagreement localized to one merged value group.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterMismatch {
    pub value: f64,
    pub mult_a: u64,
    pub mult_b: u64,
}

/// Result of comparing two spectra.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchReport {
    pub pass: bool,
    pub total_a: u64,
    pub total_b: u64,
    /// Largest absolute difference between sorted expanded lists; infinite
    /// when the totals disagree.
    pub max_abs_diff: f64,
    pub mismatches: Vec<ClusterMismatch>,
}

/// Compares two spectra: greedy sorted matching of the expanded eigenvalue
/// lists plus per-group multiplicity reconciliation. Mismatch is data, not an
/// error.
pub fn compare_spectra(a: &Spectrum, b: &Spectrum, tol: f64) -> MatchReport {
    let fa = a.expand();
    let fb = b.expand();
    let total_a = fa.len() as u64;
    let total_b = fb.len() as u64;

    let max_abs_diff = if fa.len() == fb.len() {
        fa.iter()
            .zip(&fb)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };

    // Cluster the merged union by adjacent gaps > tol and count both sides.
    let mut merged: Vec<(f64, bool)> = fa
        .iter()
        .map(|&v| (v, true))
        .chain(fb.iter().map(|&v| (v, false)))
        .collect();
    merged.sort_unstable_by(|x, y| f64::total_cmp(&x.0, &y.0));

    let mut mismatches = Vec::new();
    let mut i = 0;
    while i < merged.len() {
        let mut j = i;
        while j + 1 < merged.len() && merged[j + 1].0 - merged[j].0 <= tol {
            j += 1;
        }
        let cluster = &merged[i..=j];
        let na = cluster.iter().filter(|(_, is_a)| *is_a).count() as u64;
        let nb = cluster.len() as u64 - na;
        if na != nb {
            let mean = cluster.iter().map(|(v, _)| v).sum::<f64>() / cluster.len() as f64;
            mismatches.push(ClusterMismatch { value: mean, mult_a: na, mult_b: nb });
        }
        i = j + 1;
    }

    MatchReport {
        pass: total_a == total_b && max_abs_diff < tol && mismatches.is_empty(),
        total_a,
        total_b,
        max_abs_diff,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn meta(n: u64, e: u64, bipartite: bool) -> GraphMeta {
        GraphMeta { num_vertices: n, num_edges: e, bipartite }
    }

    #[test]
    fn merging_groups_nearby_values() {
        let s = Spectrum::from_eigenvalues(
            &[1.5, 0.5 + 1e-9, 2.0, 0.0, 0.5 - 1e-9, 1.5],
            meta(6, 6, true),
        )
        .unwrap();
        let mults: Vec<u64> = s.entries().iter().map(|e| e.multiplicity).collect();
        assert_eq!(mults, vec![1, 2, 2, 1]);
        assert!((s.entries()[1].value - 0.5).abs() < 1e-9);
        assert_eq!(s.total_multiplicity(), 6);
    }

    #[test]
    fn total_must_match_vertex_count() {
        let err = Spectrum::from_eigenvalues(&[0.0, 2.0], meta(3, 2, true)).unwrap_err();
        assert_eq!(err, Error::MultiplicityMismatch { total: 2, expected: 3 });
    }

    #[test]
    fn identical_spectra_pass() {
        let s = Spectrum::from_eigenvalues(&[0.0, 0.5, 0.5, 1.5, 1.5, 2.0], meta(6, 6, true)).unwrap();
        let r = compare_spectra(&s, &s, 1e-9);
        assert!(r.pass);
        assert_eq!(r.max_abs_diff, 0.0);
    }

    #[test]
    fn near_values_pass_within_tolerance() {
        let a = Spectrum::from_eigenvalues(&[0.0, 2.0], meta(2, 1, true)).unwrap();
        let b = Spectrum::from_eigenvalues(&[0.0, 1.9999999], meta(2, 1, true)).unwrap();
        assert!(compare_spectra(&a, &b, 1e-6).pass);
        assert!(!compare_spectra(&a, &b, 1e-8).pass);
    }

    #[test]
    fn multiplicity_mismatch_is_reported() {
        let a = Spectrum::from_eigenvalues(&[0.0, 2.0], meta(2, 1, true)).unwrap();
        let b = Spectrum::from_eigenvalues(&[0.0, 0.0], meta(2, 1, true)).unwrap();
        let r = compare_spectra(&a, &b, 1e-6);
        assert!(!r.pass);
        assert_eq!(r.mismatches.len(), 2);
        assert_eq!(r.mismatches[0].mult_a, 1);
        assert_eq!(r.mismatches[0].mult_b, 2);
    }
}
