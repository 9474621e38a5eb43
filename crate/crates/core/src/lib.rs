//! Exact-arithmetic computation of the degree of odd unitary
//! Deligne-Lusztig varieties by three independent routes (closed-form
//! q-product, Schubert calculus, multivariate coefficient extraction),
//! together with the combinatorial identities relating them and
//! brute-force verification of the underlying finite hermitian geometry.

pub mod error;
pub mod hermitian;
pub mod multipoly;
pub mod partitions;
pub mod qseries;
pub mod schubert;
pub mod schur;

pub use error::{Error, Result};
pub use multipoly::MultiPoly;
pub use partitions::{Partition, SkewShape};
pub use qseries::QPoly;
pub use schubert::{GrassBox, SchubertExpr};
