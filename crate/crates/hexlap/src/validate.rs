//! The validation harness behind `hexlap validate`.
//!
//! `--tables` recomputes the published Kemeny / Kirchhoff / spanning-tree
//! tables for the 6-cycle via the one-step recursions and compares each
//! entry at its printed precision. `--oracle` runs the iterative spectral
//! engine against the dense eigensolver, and the closed-form spanning-tree
//! counts against exact matrix-tree determinants, on a desk-scale instance
//! set.
//!
//! Mismatches are data: each becomes a `flagged-discrepancy` record showing
//! both values. A run passes when every flagged record is listed in the
//! known-discrepancy manifest.

use hexlap_core::invariants::{
    kemeny_step_k_exact, kirchhoff_step_k_exact, tau_closed_k, tau_log10_from_spectrum,
};
use hexlap_core::{
    compare_spectra, generate, hexagonal_iter, kemeny_from_spectrum, spanning_trees_matrix_tree,
    spectrum_n, spectrum_oracle, transformed_degrees_product_log10, Graph, GraphKind,
    TransformParams, DEFAULT_VERTEX_BUDGET,
};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::tables::{
    known_discrepancy, parse_printed, rule_matches, seed_kemeny, seed_kirchhoff, MatchRule,
    Quantity, ReferenceEntry, REFERENCE_ENTRIES,
};

#[derive(Debug, Clone, Serialize)]
pub struct ValidationRecord {
    pub id: String,
    pub graph: String,
    pub k: u64,
    pub n: u64,
    pub quantity: String,
    pub method: String,
    pub value: String,
    pub reference: String,
    pub reference_source: String,
    /// "match" or "flagged-discrepancy".
    pub status: String,
    /// For flagged records: whether the manifest expects the discrepancy,
    /// and why.
    pub known: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationSummary {
    pub total: usize,
    pub matches: usize,
    pub flagged_known: usize,
    pub flagged_unexpected: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub mode: String,
    pub records: Vec<ValidationRecord>,
    pub summary: ValidationSummary,
}

impl ValidationReport {
    fn assemble(mode: &str, mut records: Vec<ValidationRecord>) -> Self {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let matches = records.iter().filter(|r| r.status == "match").count();
        let flagged_known = records.iter().filter(|r| r.status != "match" && r.known).count();
        let flagged_unexpected =
            records.iter().filter(|r| r.status != "match" && !r.known).count();
        let summary = ValidationSummary {
            total: records.len(),
            matches,
            flagged_known,
            flagged_unexpected,
        };
        ValidationReport { mode: mode.to_string(), records, summary }
    }

    /// True when no unexplained mismatch appeared.
    pub fn passed(&self) -> bool {
        self.summary.flagged_unexpected == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let mark = match (r.status.as_str(), r.known) {
                ("match", _) => "ok   ",
                (_, true) => "FLAG ",
                (_, false) => "FAIL ",
            };
            out.push_str(&format!(
                "{mark} {:<18} {:<14} computed {} vs {} [{}]\n",
                r.id, r.quantity, r.value, r.reference, r.reference_source
            ));
            if let Some(note) = &r.note {
                out.push_str(&format!("        {note}\n"));
            }
        }
        out.push_str(&format!(
            "{} records: {} match, {} known flagged, {} unexpected\n",
            self.summary.total,
            self.summary.matches,
            self.summary.flagged_known,
            self.summary.flagged_unexpected
        ));
        out
    }
}

fn record_for_entry(
    entry: &ReferenceEntry,
    computed: &BigRational,
    value_str: String,
    method: &str,
) -> ValidationRecord {
    let matched = rule_matches(entry.rule, computed, entry.printed);
    let known = known_discrepancy(entry.id);
    let source = match entry.quantity {
        Quantity::Kirchhoff => "reference table (Kirchhoff indices)",
        Quantity::Kemeny => "reference table (Kemeny constants)",
        Quantity::SpanningTrees => "reference table (spanning trees)",
    };
    ValidationRecord {
        id: entry.id.to_string(),
        graph: "C6".to_string(),
        k: entry.k,
        n: entry.n,
        quantity: entry.quantity.as_str().to_string(),
        method: method.to_string(),
        value: value_str,
        reference: entry.printed.to_string(),
        reference_source: source.to_string(),
        status: if matched { "match" } else { "flagged-discrepancy" }.to_string(),
        known: !matched && known.is_some(),
        note: if matched { None } else { known.map(|d| d.explanation.to_string()) },
    }
}

fn decimal(computed: &BigRational, rule: MatchRule) -> String {
    match rule {
        MatchRule::TwoDecimals => hexlap_core::invariants::rational_to_decimal(computed, 2),
        _ => {
            if computed.is_integer() {
                computed.to_integer().to_string()
            } else {
                hexlap_core::invariants::rational_to_decimal(computed, 2)
            }
        }
    }
}

/// Recomputes every reference-table entry by the one-step recursions seeded
/// with the tables' base row, plus provenance records comparing those seeds
/// against the spectral definitions on the base 6-cycle.
pub fn run_tables() -> ValidationReport {
    let mut records = Vec::new();
    let method = "recursion seeded with the table base row";

    // Kemeny and Kirchhoff columns for k = 1 and k = 2, levels 0..=8
    for k in [1u64, 2] {
        let mut kem = seed_kemeny();
        let mut kf = seed_kirchhoff();
        for n in 0..=8u64 {
            if n > 0 {
                kem = kemeny_step_k_exact(&kem, 6, 6, k, n);
                kf = kirchhoff_step_k_exact(&kf, 6, 6, k, n);
            }
            for entry in REFERENCE_ENTRIES {
                if entry.k != k || entry.n != n {
                    continue;
                }
                let computed = match entry.quantity {
                    Quantity::Kemeny => &kem,
                    Quantity::Kirchhoff => &kf,
                    Quantity::SpanningTrees => continue,
                };
                records.push(record_for_entry(
                    entry,
                    computed,
                    decimal(computed, entry.rule),
                    method,
                ));
            }
        }
    }

    // Spanning-tree column: exact closed form (equal to the accumulated
    // one-step recursion; the equality is covered by unit tests)
    let tau0 = BigUint::from(6u32);
    for entry in REFERENCE_ENTRIES {
        if entry.quantity != Quantity::SpanningTrees {
            continue;
        }
        let product = tau_closed_k(&tau0, 6, 6, entry.k, entry.n).expect("integral exponents");
        let value = product.value().expect("desk-scale exponents");
        let computed = BigRational::from_integer(value.clone().into());
        records.push(record_for_entry(entry, &computed, value.to_string(), "closed form"));
    }

    // Seed provenance: the tables' base row vs the spectral definitions.
    let c6 = generate(GraphKind::Cycle, 6).unwrap();
    let spectral_k = kemeny_from_spectrum(&spectrum_oracle(&c6).unwrap()).unwrap();
    for (id, quantity, spectral, seed) in [
        ("seed/kemeny", Quantity::Kemeny, spectral_k, seed_kemeny()),
        ("seed/kirchhoff", Quantity::Kirchhoff, 12.0 * spectral_k, seed_kirchhoff()),
    ] {
        let known = known_discrepancy(id).expect("seed discrepancies are in the manifest");
        records.push(ValidationRecord {
            id: id.to_string(),
            graph: "C6".to_string(),
            k: 1,
            n: 0,
            quantity: quantity.as_str().to_string(),
            method: "spectral definition (dense oracle)".to_string(),
            value: format!("{spectral:.4}"),
            reference: hexlap_core::invariants::rational_to_decimal(&seed, 2),
            reference_source: "reference table base row".to_string(),
            status: "flagged-discrepancy".to_string(),
            known: true,
            note: Some(known.explanation.to_string()),
        });
    }

    ValidationReport::assemble("tables", records)
}

fn instance_graph(name: &str) -> Graph {
    match name {
        "K2" => Graph::new(2, [(0, 1)]).unwrap(),
        "P3" => generate(GraphKind::Path, 3).unwrap(),
        "C5" => generate(GraphKind::Cycle, 5).unwrap(),
        "C6" => generate(GraphKind::Cycle, 6).unwrap(),
        "K4" => generate(GraphKind::Complete, 4).unwrap(),
        other => panic!("unknown instance {other}"),
    }
}

/// Instances for the spectrum cross-validation: every base graph at
/// (k, n) in {(1,1), (1,2), (2,1), (3,1)}, plus (2,2) for the two smallest.
pub fn spectrum_instances() -> Vec<(&'static str, u64, u64)> {
    let graphs = ["K2", "P3", "C5", "C6", "K4"];
    let mut out = Vec::new();
    for &(k, n) in &[(1u64, 1u64), (1, 2), (2, 1), (3, 1)] {
        for g in graphs {
            out.push((g, k, n));
        }
    }
    out.push(("K2", 2, 2));
    out.push(("P3", 2, 2));
    out
}

/// Instances for the three-way spanning-tree cross-validation.
pub fn tau_instances() -> Vec<(&'static str, u64, u64)> {
    vec![
        ("C6", 1, 1),
        ("C6", 1, 2),
        ("C6", 2, 1),
        ("P3", 1, 1),
        ("P3", 1, 2),
        ("P3", 2, 1),
        ("K4", 1, 1),
        ("C5", 1, 1),
    ]
}

/// Runs the full oracle-equivalence suite: iterative spectra against the
/// dense eigensolver at 1e-7, and closed-form spanning-tree counts against
/// exact matrix-tree determinants (with the spectral log10 route within
/// 1e-6).
pub fn run_oracle() -> ValidationReport {
    let mut records = Vec::new();

    for (name, k, n) in spectrum_instances() {
        let g = instance_graph(name);
        let params = TransformParams::new(k, n).unwrap();
        let fast = spectrum_n(&g, params).unwrap();
        let built = hexagonal_iter(&g, params, DEFAULT_VERTEX_BUDGET).unwrap();
        let slow = spectrum_oracle(&built).unwrap();
        let report = compare_spectra(&fast, &slow, 1e-7);
        records.push(ValidationRecord {
            id: format!("spectrum/{name}/k{k}n{n}"),
            graph: name.to_string(),
            k,
            n,
            quantity: "spectrum".to_string(),
            method: "iterative spectral step".to_string(),
            value: format!("{} values, max |diff| = {:.3e}", report.total_a, report.max_abs_diff),
            reference: format!("{} values (dense eigensolver)", report.total_b),
            reference_source: "dense oracle".to_string(),
            status: if report.pass { "match" } else { "flagged-discrepancy" }.to_string(),
            known: false,
            note: if report.pass {
                None
            } else {
                Some(format!("{} cluster mismatches", report.mismatches.len()))
            },
        });
    }

    for (name, k, n) in tau_instances() {
        let g = instance_graph(name);
        let n0 = g.num_vertices() as u64;
        let e0 = g.num_edges() as u64;
        let tau0 = spanning_trees_matrix_tree(&g).unwrap();
        let closed = tau_closed_k(&tau0, n0, e0, k, n).unwrap();
        let closed_value = closed.value().unwrap();

        let params = TransformParams::new(k, n).unwrap();
        let built = hexagonal_iter(&g, params, DEFAULT_VERTEX_BUDGET).unwrap();
        let counted = spanning_trees_matrix_tree(&built).unwrap();
        let exact_ok = closed_value == counted;
        records.push(ValidationRecord {
            id: format!("tau/{name}/k{k}n{n}"),
            graph: name.to_string(),
            k,
            n,
            quantity: "spanning-trees".to_string(),
            method: "closed form".to_string(),
            value: closed_value.to_string(),
            reference: counted.to_string(),
            reference_source: "matrix-tree determinant".to_string(),
            status: if exact_ok { "match" } else { "flagged-discrepancy" }.to_string(),
            known: false,
            note: None,
        });

        let spectrum = spectrum_n(&g, params).unwrap();
        let deg_log10 = transformed_degrees_product_log10(&g, k, n);
        let spectral_log10 = tau_log10_from_spectrum(&spectrum, deg_log10).unwrap();
        let closed_log10 = closed.log10();
        let log_ok = (spectral_log10 - closed_log10).abs() < 1e-6;
        records.push(ValidationRecord {
            id: format!("tau-log10/{name}/k{k}n{n}"),
            graph: name.to_string(),
            k,
            n,
            quantity: "spanning-trees".to_string(),
            method: "spectral log10".to_string(),
            value: format!("{spectral_log10:.9}"),
            reference: format!("{closed_log10:.9}"),
            reference_source: "closed form".to_string(),
            status: if log_ok { "match" } else { "flagged-discrepancy" }.to_string(),
            known: false,
            note: None,
        });
    }

    ValidationReport::assemble("oracle", records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_run_is_green_with_expected_flags() {
        let report = run_tables();
        assert!(report.passed(), "{}", report.render_text());
        // all four spanning-tree conflicts plus the two seed records
        assert_eq!(report.summary.flagged_known, 6, "{}", report.render_text());
        assert_eq!(report.summary.total, 44);
    }

    #[test]
    fn known_flags_actually_mismatch() {
        // a manifest entry that silently started matching would be stale
        let report = run_tables();
        for d in crate::tables::KNOWN_DISCREPANCIES {
            let rec = report.records.iter().find(|r| r.id == d.id);
            let rec = rec.expect("every known discrepancy id appears in the run");
            assert_eq!(rec.status, "flagged-discrepancy", "{}", d.id);
        }
    }

    #[test]
    fn reference_rows_that_should_match_do() {
        let report = run_tables();
        for r in &report.records {
            if !r.id.starts_with("tau/") && !r.id.starts_with("seed/") {
                assert_eq!(r.status, "match", "{}: {} vs {}", r.id, r.value, r.reference);
            }
        }
    }

    #[test]
    fn parse_printed_round_trips_reference_values() {
        for e in REFERENCE_ENTRIES {
            let _ = parse_printed(e.printed);
        }
    }
}
