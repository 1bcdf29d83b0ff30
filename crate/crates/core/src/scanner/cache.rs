// SPDX-License-Identifier: Apache-2.0

//! Append-only cache of scan records, one JSON object per line, keyed by
//! canonical spec. Later lines win; unreadable lines are skipped.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use log::warn;

use crate::error::{Error, Result};

use super::scan::ScanRecord;

/// Environment variable consulted when no cache path is given explicitly.
pub const CACHE_ENV: &str = "GAUSSF_CACHE";

pub struct Cache {
    path: PathBuf,
    records: HashMap<String, ScanRecord>,
    file: File,
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), message: e.to_string() }
}

impl Cache {
    pub fn open(path: impl Into<PathBuf>) -> Result<Self> {
        let path = path.into();
        let mut records = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path).map_err(|e| io_error(&path, e))?);
            for (i, line) in reader.lines().enumerate() {
                let line = line.map_err(|e| io_error(&path, e))?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<ScanRecord>(&line) {
                    Ok(record) => {
                        records.insert(record.spec.clone(), record);
                    }
                    Err(e) => warn!("{}:{}: skipping corrupt cache line: {e}", path.display(), i + 1),
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path).map_err(|e| io_error(&path, e))?;
        Ok(Self { path, records, file })
    }

    /// `explicit`, else `$GAUSSF_CACHE`, else no cache.
    pub fn from_flag_or_env(explicit: Option<&Path>) -> Result<Option<Self>> {
        match explicit.map(Path::to_path_buf).or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)) {
            Some(path) => Self::open(path).map(Some),
            None => Ok(None),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, spec: &str) -> Option<&ScanRecord> {
        self.records.get(spec)
    }

    pub fn insert(&mut self, record: ScanRecord) -> Result<()> {
        let line = serde_json::to_string(&record).expect("records serialize");
        writeln!(self.file, "{line}").map_err(|e| io_error(&self.path, e))?;
        self.file.flush().map_err(|e| io_error(&self.path, e))?;
        self.records.insert(record.spec.clone(), record);
        Ok(())
    }
}
