// SPDX-License-Identifier: Apache-2.0

//! Deterministic renderings of scan and verification results.

use std::fmt::Write as _;

use crate::rational::ExactRational;

use super::scan::ScanReport;
use super::verify::VerifyOutcome;

const TEXT_HISTOGRAM_LIMIT: u64 = 8;

/// Pretty JSON with a trailing newline; identical input gives identical bytes.
pub fn scan_json(report: &ScanReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
    out.push('\n');
    out
}

pub fn scan_text(report: &ScanReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<28} {:>5} {:>12} {:>14} {:>6} {:>6} {:>7} {:>9}", "spec", "order", "f", "|Aut|", "cyclic", "abel", "|Z(G)|", "subgroups");
    for r in &report.records {
        let _ = writeln!(
            out,
            "{:<28} {:>5} {:>12} {:>14} {:>6} {:>6} {:>7} {:>9}",
            r.spec, r.order, r.f_value.to_string(), r.aut_order.to_string(), r.is_cyclic, r.is_abelian, r.center_order, r.subgroup_count
        );
    }
    for e in &report.errors {
        let _ = writeln!(out, "error {}: {}", e.spec, e.message);
    }
    out.push_str(&summary_text(report));
    out
}

pub fn summary_text(report: &ScanReport) -> String {
    let s = &report.summary;
    let mut out = String::new();
    let _ = writeln!(out, "summary ({}, max order {}): {} entries, {} errors", s.scope, report.max_order, s.entries, report.errors.len());
    match &s.min_non_cyclic_f {
        Some(m) => {
            let _ = writeln!(out, "minimum non-cyclic f: {m}");
        }
        None => {
            let _ = writeln!(out, "minimum non-cyclic f: none (every entry is cyclic)");
        }
    }
    let _ = writeln!(out, "f = 2: {}", list(&s.attaining_two));
    let _ = writeln!(out, "1 < f < 2: {}", list(&s.between_one_and_two));
    let _ = writeln!(out, "distinct f values: {}", s.distinct_f_values.len());
    // Full histogram is in the JSON report; text keeps the dense low end.
    let cutoff = ExactRational::from(TEXT_HISTOGRAM_LIMIT);
    for bin in s.histogram.iter().filter(|b| b.lower < cutoff) {
        let _ = writeln!(out, "  [{}, {}): {}", bin.lower, bin.upper, bin.count);
    }
    let tail: usize = s.histogram.iter().filter(|b| b.lower >= cutoff).map(|b| b.count).sum();
    if tail > 0 {
        let _ = writeln!(out, "  >= {cutoff}: {tail}");
    }
    out
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "none".to_string()
    } else {
        items.join(", ")
    }
}

pub fn verify_json(outcome: &VerifyOutcome) -> String {
    let mut out = serde_json::to_string_pretty(outcome).expect("outcomes serialize");
    out.push('\n');
    out
}

/// Per-claim tallies, then every failing report and error.
pub fn verify_text(outcome: &VerifyOutcome) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "catalog entries: {}", outcome.catalog_entries);
    for (claim, (held, total)) in outcome.tally() {
        let _ = writeln!(out, "{:<28} {held}/{total}", claim.name());
    }
    for r in outcome.failing() {
        let _ = writeln!(out, "FAIL {r}");
    }
    for e in &outcome.errors {
        let _ = writeln!(out, "ERROR {}: {}", e.spec, e.message);
    }
    let _ = writeln!(out, "{}", if outcome.all_hold() { "all checks hold" } else { "verification failed" });
    out
}
