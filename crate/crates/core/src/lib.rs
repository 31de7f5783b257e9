//! Exact computation of first Ext-group dimensions between the simple
//! modules attached to Schur functors, cross-verified by independent
//! methods.
//!
//! The closed answers are Littlewood–Richardson expressions; the oracles
//! recompute them as symmetric-group bimodule multiplicities over the Lie
//! PROP and the upward Brauer category (by character sums and by exact
//! Young-symmetrizer ranks in the group algebra), and a constraint solver
//! re-derives the symmetric- and exterior-power cases from the Casimir
//! invariance relations. Everything runs in exact rational arithmetic.
//!
//! Modules:
//! - [`linalg`]: exact dense matrices over Q (rank, kernel, solve)
//! - [`partitions`]: partitions, LR coefficients, Pieri strips, characters
//! - [`symgroup`]: permutations, group algebra, Young symmetrizers
//! - [`lie`]: the Lie operad and the PROP hom-spaces as bimodules
//! - [`brauer`]: upward Brauer diagrams and their relabeling actions
//! - [`polyfun`]: polynomial functors on Hopf generator words; the Casimir
//!   constraint solver and the explicit two-step extension
//! - [`ext`]: the Ext engine and the cross-verification reports
//! - [`parallel`]: rayon-backed map with a sequential fallback

pub mod brauer;
pub mod ext;
pub mod lie;
pub mod linalg;
pub mod parallel;
pub mod partitions;
pub mod polyfun;
pub mod symgroup;

pub use ext::{ExtQuery, ExtReport, Method, OracleValue, ReportRecord};
pub use linalg::{Rational, RationalMatrix};
pub use partitions::Partition;
