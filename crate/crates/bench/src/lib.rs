// SPDX-License-Identifier: Apache-2.0

//! Criterion benchmarks for gaussf-core; see `benches/`.

use gaussf_core::{Group, Limits, SpecAst};

/// Builds a group from an expression, panicking on bad input.
pub fn group(spec: &str) -> Group {
    spec.parse::<SpecAst>().expect("valid spec").build(&Limits::default()).expect("buildable group")
}
