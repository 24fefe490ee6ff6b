//! The BMW algebra: elements as combinations of words, its two standard
//! bases, and exact structure constants through the faithful action on
//! tensor space.

pub mod basis;
pub mod element;
pub mod operator;

pub use basis::{algebra_dimension, cellular_basis, enyang_basis, CellularBasisElement, EnyangBasisElement};
pub use element::{m_lambda, n_lambda, BmwElement};
pub use operator::{faithfulness_check_in, FaithfulnessReport, OperatorBasis, TensorRep};
