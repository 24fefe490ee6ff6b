use std::fmt;

use super::partition::{partitions, Partition};

/// A pair `(f, λ)` with `λ ⊢ r − 2f`, indexing cells of the BMW algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellLabel {
    pub f: usize,
    pub lambda: Partition,
}

impl CellLabel {
    pub fn new(f: usize, lambda: Partition) -> Self {
        CellLabel { f, lambda }
    }

    /// The number of strands `r = 2f + |λ|`.
    pub fn degree(&self) -> usize {
        2 * self.f + self.lambda.size()
    }
}

/// `Λ_r`, ordered by `f` and then by the reverse-lex order on partitions.
pub fn cell_labels(r: usize) -> Vec<CellLabel> {
    (0..=r / 2)
        .flat_map(|f| partitions(r - 2 * f, None).into_iter().map(move |l| CellLabel::new(f, l)))
        .collect()
}

/// `a ⊵ b`: a larger `f` dominates, and for equal `f` the partitions are
/// compared by dominance.
pub fn dominance_geq(a: &CellLabel, b: &CellLabel) -> bool {
    if a.f != b.f {
        return a.f > b.f;
    }
    a.lambda.dominates(&b.lambda)
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.f, self.lambda)
    }
}

impl fmt::Debug for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
