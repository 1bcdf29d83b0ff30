// SPDX-License-Identifier: Apache-2.0

//! Catalog generation, batch scans, verification, table ingestion and the
//! record cache.

pub mod cache;
pub mod catalog;
pub mod ingest;
pub mod report;
pub mod scan;
pub mod verify;

pub use cache::Cache;
pub use catalog::{build_catalog, Catalog, CatalogEntry, Family};
pub use ingest::{parse_cayley, read_cayley_file, write_cayley};
pub use scan::{scan, ScanRecord, ScanReport, SpectrumSummary};
pub use verify::{verify_all, VerifyOptions, VerifyOutcome};
