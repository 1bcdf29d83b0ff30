// SPDX-License-Identifier: Apache-2.0

//! Finite groups given by Cayley tables, their subgroup lattices and
//! automorphism counts, and the invariant
//!
//! ```text
//! S(G) = sum over H <= G of |Aut(H)|,    f(G) = S(G) / |G|
//! ```
//!
//! which equals 1 exactly on cyclic groups, where it reduces to
//! `sum_{d | n} phi(d) = n`.
//!
//! ```
//! use gaussf_core::{gauss, spec, ExactRational, Limits};
//!
//! let limits = Limits::default();
//! let q8 = spec::parse("Q8").unwrap().build(&limits).unwrap();
//! assert_eq!(gauss::f(&q8, &limits).unwrap(), ExactRational::from(4));
//! ```

pub mod arith;
pub mod automorphisms;
pub mod constructors;
mod error;
pub mod gauss;
mod group;
pub mod lattice;
mod limits;
mod morphism;
mod rational;
pub mod scanner;
pub mod spec;
mod subgroup;

pub use automorphisms::{AbelianType, AutMethod, AutResult, FormulaMutation};
pub use constructors::SemidirectParams;
pub use error::{Error, ErrorKind, Line, Result};
pub use gauss::{Evaluation, VerificationReport};
pub use group::{Group, OrderHistogram};
pub use lattice::LatticeSummary;
pub use limits::Limits;
pub use rational::{ExactRational, ParseRationalError};
pub use spec::SpecAst;
pub use subgroup::Subgroup;
