//! Generalized cyclotomic binary sequences of period `2p^m`.
//!
//! Construction of the standard sequence `s` and the modified sequence
//! `s~` from the generalized cyclotomic classes of `p^j` and `2p^j`,
//! computation of their linear complexity by Berlekamp-Massey and by the
//! gcd with `x^N - 1`, and a GF(2^n) toolkit that cross-checks the result
//! through evaluations at `p^m`-th roots of unity.
//!
//! ```
//! use cyclolc::{analyze, SequenceParams, Variant};
//!
//! let params = SequenceParams::new(7, 2, 2, 0, Some(3)).unwrap();
//! let report = analyze(&params, Variant::Modified, true).unwrap();
//! assert_eq!(report.lc(), 89);
//! ```

pub mod analysis;
pub mod cyclotomy;
pub mod error;
pub mod f2poly;
pub mod galois;
pub mod numtheory;
pub mod reference;
pub mod sequence;

pub use analysis::{analyze, predict, sweep, LcReport, Prediction, ReportRecord, Verdict};
pub use cyclotomy::{build_support, verify_partitions, SupportSet, Variant};
pub use error::{Error, Result};
pub use f2poly::{berlekamp_massey, lc_via_gcd, F2Poly, LcResult};
pub use galois::{FieldCtx, FieldElement, RootEvaluator};
pub use numtheory::{classify_case, CaseClass, Residue, SequenceParams};
pub use sequence::{generate, BinarySequence};
