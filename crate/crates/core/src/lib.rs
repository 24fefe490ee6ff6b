//! Exact computations for Birman-Murakami-Wenzl algebras realized on tensor
//! powers of the natural representation of a quantum group of type B, C or D.
//!
//! The crate is organized bottom-up: [`scalar`] provides exact arithmetic,
//! [`combin`] the symmetric-group combinatorics, [`qgroup`] and [`tensorop`]
//! the quantum-group side and the tensor-space operators, [`bmwalg`] the
//! algebra and its bases, and [`repr`] cell modules, simple modules and
//! decomposition matrices. [`hecke`] is an independent Hecke-algebra oracle.

pub mod error;
pub mod checks;
pub mod combin;
pub mod hecke;
pub mod bmwalg;
pub mod qgroup;
pub mod repr;
pub mod scalar;
pub mod tensorop;

pub use error::{BmwError, Result};
