//! Operators on `V^{⊗r}`: the BMW generators, bilinear forms and the
//! symmetries of the word monoid.

pub mod forms;
pub mod relations;
pub mod rmatrix;
pub mod tensor;

pub use rmatrix::{alpha, BmwWord, Letter, PairOperator, TensorOps};
pub use tensor::{SparseTensor, TensorIndex};
