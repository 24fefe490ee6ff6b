//! Representation theory of the algebra through its tensor realization:
//! cell modules, simple heads, decomposition matrices and radicals.

pub mod cell;
pub mod decomp;
pub mod hom;
pub mod matrix;
pub mod radical;
pub mod simple;
