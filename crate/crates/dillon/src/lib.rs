//! Dillon-type monomial bent functions over binary fields.
//!
//! The library studies maps `f(x) = Tr^{2m}_k(a x^{2^m - 1})` from
//! `F_{2^{2m}}` to `F_{2^k}` for `k | m`. It provides:
//!
//! - [`field`]: GF(2^n) arithmetic with subfield towers, traces and the
//!   subtrace, log/antilog tables, and deterministic default moduli;
//! - [`walsh`]: truth tables, dual bases, fast Walsh-Hadamard spectra and
//!   the direct-summation reference transform;
//! - [`kloosterman`]: Kloosterman sums, whole-field tables, zero
//!   enumeration and the trace/subtrace divisibility pre-filter;
//! - [`bent`]: Dillon map construction, coefficient normalization, the
//!   coset bentness criterion, hyperbent sweeps and exhaustive searches;
//! - [`witness`]: the bivariate polynomials `C(A, u)`, `D(A, u)`, their
//!   coefficient extractions and identities, and the link-by-link
//!   verification of the odd/even coefficient conditions;
//! - [`report`]: structured verification reports.
//!
//! ```
//! use dillon::{Field, Fe};
//!
//! // The six bent coefficients for m = 6, k = 2 are exactly the
//! // primitive 9th roots of unity in GF(2^6).
//! let field = Field::new(6)?;
//! let bent = dillon::bent::search_bent_dillon(&field, 2)?;
//! assert_eq!(bent.len(), 6);
//! for &a in &bent {
//!     assert_eq!(field.pow(a, 9), Fe::ONE);
//!     assert_ne!(field.pow(a, 3), Fe::ONE);
//! }
//! # Ok::<(), dillon::Error>(())
//! ```

#![forbid(unsafe_code)]

mod error;

pub mod bent;
pub mod cyclotomic;
pub mod field;
pub mod kloosterman;
pub mod report;
pub mod walsh;
pub mod witness;

pub use error::{Error, Result};
pub use field::{Fe, Field, Subfield};
pub use kloosterman::KloostermanTable;
pub use report::{Counterexample, Status, VerificationReport};
pub use walsh::{BooleanMap, DualBasis, WalshSpectrum};

// The guide chapters double as doctests so their code stays honest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/fields.md")]
    pub mod fields {}
    #[doc = include_str!("../../../book/src/kloosterman.md")]
    pub mod kloosterman {}
    #[doc = include_str!("../../../book/src/bent.md")]
    pub mod bent {}
    #[doc = include_str!("../../../book/src/witness.md")]
    pub mod witness {}
}
