//! Exact trace searches for integer matrices and the dilatation bounds built
//! on them.
//!
//! The central question: given `A` in `SL(m, Z)`, how soon does
//! `Tr(A^nu)` exceed a threshold `B`? For the homology action of a mapping
//! class, `Tr > 2` means a negative Lefschetz number, which in turn gives a
//! lower bound on the dilatation of a pseudo-Anosov map.
//!
//! ```
//! use trace_horizon::{find_nu, IntMatrix};
//!
//! let a: IntMatrix = "2\n2 1\n1 1\n".parse().unwrap();
//! let outcome = find_nu(&a, 2, 0.5).unwrap();
//! assert_eq!(outcome.certificate().unwrap().nu, 1);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod lefschetz;
pub mod matrix;
pub mod penner;
pub mod poly;
pub mod serde_util;
pub mod spectral;
pub mod trace_search;

pub use bounds::{BoundReport, ConstantAssembly, SurfaceParams, TsaiBranch, TsaiLower};
pub use error::{Error, Result};
pub use lefschetz::{LefschetzCertificate, LefschetzOutcome};
pub use matrix::{parse_matrix, IntMatrix};
pub use penner::{CurveSystem, PennerMatrixReport, PennerRow};
pub use poly::{CyclotomicFactorization, IntPolynomial, PowerSumSequence, PowerSums};
pub use spectral::{HouseValue, RootEstimate, SpectrumEstimate};
pub use trace_search::{
    find_nu, find_nu_auto, find_nu_cyclotomic, find_nu_expanding, CaseDetail, CaseTag, HorizonMode,
    NuCertificate, SearchConfig, SearchFailure, SearchOutcome,
};
