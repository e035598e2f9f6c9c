//! Exact structure-constant algebra for finite-dimensional nonassociative
//! rings over `Q` and `F_p`.
//!
//! The crate covers element arithmetic and identity checks ([`ring`],
//! [`identities`]), structural analysis around an idempotent ([`structure`]),
//! and the splitting of Lie multiplicative maps into a (negative anti-)
//! isomorphism plus a central part ([`lie`]).

pub mod error;
pub mod generators;
pub mod identities;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod ring;
pub mod ring_file;
pub mod scalar;
pub mod scan;
pub mod structure;

pub use error::{AlgebraError, Result};
pub use linalg::{Matrix, Subspace, Vector};
pub use report::{CheckReport, QuantifierSpace};
pub use ring::{Element, Ring, RingId};
pub use scalar::{Scalar, ScalarDomain};
pub use scan::ScanConfig;
