//! Partitions, tableaux, permutations and the coset combinatorics behind the
//! cellular bases.
//!
//! Canonical orders are fixed here and every matrix elsewhere is indexed by
//! them: partitions reverse-lexicographic, tableaux by row reading,
//! `𝒟_f` by `(J, 𝒟^f factor)`.

pub mod coset;
pub mod label;
pub mod partition;
pub mod perm;
pub mod tableau;

pub use coset::{coset_reps_df, coset_reps_upper, d_0, d_j, j_0, subsets};
pub use label::{cell_labels, dominance_geq, CellLabel};
pub use partition::{partitions, Partition};
pub use perm::Permutation;
pub use tableau::{d_of, std_tableaux, t_col, t_row, w_lambda, young_subgroup, StdTableau};
