//! Quantum groups of classical type: root data, the natural representation
//! and the action on tensor space.

pub mod lie;
pub mod natural;
pub mod relations;
pub mod weights;

pub use lie::{Family, LieType};
pub use natural::{Gen, NaturalRep};
pub use weights::{hw_space, weyl_multiplicities, HwMode, Weight};
