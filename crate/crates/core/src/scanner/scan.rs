// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use log::info;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gauss::Evaluation;
use crate::limits::Limits;
use crate::rational::ExactRational;

use super::cache::Cache;
use super::catalog::{Catalog, CatalogEntry};

/// Label attached to every spectrum claim: it is checked over the generated
/// catalog only, not over every group of each order.
pub const SCOPE: &str = "catalog-relative";

mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::parse_bytes(s.as_bytes(), 10).ok_or_else(|| serde::de::Error::custom(format!("bad natural '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanRecord {
    pub spec: String,
    pub order: usize,
    pub f_value: ExactRational,
    #[serde(with = "decimal")]
    pub aut_order: BigUint,
    pub is_cyclic: bool,
    pub is_abelian: bool,
    pub center_order: usize,
    pub subgroup_count: usize,
}

impl ScanRecord {
    pub fn from_evaluation(spec: impl Into<String>, eval: &Evaluation) -> Self {
        Self {
            spec: spec.into(),
            order: eval.order,
            f_value: eval.f.clone(),
            aut_order: eval.aut_order.value.clone(),
            is_cyclic: eval.is_cyclic,
            is_abelian: eval.is_abelian,
            center_order: eval.center_order,
            subgroup_count: eval.subgroup_count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryError {
    pub spec: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HistogramBin {
    pub lower: ExactRational,
    pub upper: ExactRational,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectrumSummary {
    pub scope: String,
    pub entries: usize,
    pub distinct_f_values: Vec<ExactRational>,
    pub min_non_cyclic_f: Option<ExactRational>,
    /// Entries with `f = 2`.
    pub attaining_two: Vec<String>,
    /// Entries with `1 < f < 2`; expected to be empty.
    pub between_one_and_two: Vec<String>,
    /// Non-cyclic `f` values in half-open bins of width 1/2.
    pub histogram: Vec<HistogramBin>,
}

impl SpectrumSummary {
    pub fn from_records(records: &[ScanRecord]) -> Self {
        let one = ExactRational::one();
        let two = ExactRational::from(2);
        let mut distinct: Vec<ExactRational> = records.iter().map(|r| r.f_value.clone()).collect();
        distinct.sort();
        distinct.dedup();
        let mut bins: BTreeMap<ExactRational, usize> = BTreeMap::new();
        for r in records.iter().filter(|r| !r.is_cyclic) {
            let doubled = &r.f_value * &two;
            *bins.entry(ExactRational::new(doubled.floor(), 2)).or_insert(0) += 1;
        }
        let half = ExactRational::new(1, 2);
        Self {
            scope: SCOPE.to_string(),
            entries: records.len(),
            distinct_f_values: distinct,
            min_non_cyclic_f: records.iter().filter(|r| !r.is_cyclic).map(|r| r.f_value.clone()).min(),
            attaining_two: records.iter().filter(|r| r.f_value == two).map(|r| r.spec.clone()).collect(),
            between_one_and_two: records
                .iter()
                .filter(|r| r.f_value > one && r.f_value < two)
                .map(|r| r.spec.clone())
                .collect(),
            histogram: bins
                .into_iter()
                .map(|(lower, count)| HistogramBin { upper: &lower + &half, lower, count })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanReport {
    pub scope: String,
    pub max_order: usize,
    pub records: Vec<ScanRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<EntryError>,
    pub summary: SpectrumSummary,
}

pub fn evaluate_entry(entry: &CatalogEntry, limits: &Limits) -> Result<ScanRecord> {
    let group = entry.build(limits)?;
    Ok(ScanRecord::from_evaluation(&entry.canonical, &Evaluation::compute(&group, limits)?))
}

/// Evaluates every entry on the current rayon pool. Cached records are
/// reused and fresh ones appended to the cache; errors are collected per
/// entry and do not stop the scan.
pub fn scan(catalog: &Catalog, limits: &Limits, mut cache: Option<&mut Cache>) -> Result<ScanReport> {
    let pending: Vec<&CatalogEntry> = catalog
        .iter()
        .filter(|e| cache.as_ref().is_none_or(|c| c.get(&e.canonical).is_none()))
        .collect();
    info!("scanning {} entries ({} cached)", catalog.len(), catalog.len() - pending.len());
    let fresh: Vec<(String, Result<ScanRecord>)> =
        pending.par_iter().map(|e| (e.canonical.clone(), evaluate_entry(e, limits))).collect();
    let mut fresh: BTreeMap<String, Result<ScanRecord>> = fresh.into_iter().collect();

    let mut records = Vec::with_capacity(catalog.len());
    let mut errors = Vec::new();
    for entry in catalog.iter() {
        match fresh.remove(&entry.canonical) {
            Some(Ok(record)) => {
                if let Some(cache) = cache.as_deref_mut() {
                    cache.insert(record.clone())?;
                }
                records.push(record);
            }
            Some(Err(e)) => errors.push(EntryError { spec: entry.canonical.clone(), message: e.to_string() }),
            None => records.push(cache.as_ref().and_then(|c| c.get(&entry.canonical)).cloned().expect("cached")),
        }
    }
    let summary = SpectrumSummary::from_records(&records);
    Ok(ScanReport { scope: SCOPE.to_string(), max_order: catalog.max_order, records, errors, summary })
}
