//! The Enyang basis and the cellular basis, enumerated in a fixed order.

use std::fmt;

use super::element::{e_power, n_lambda, t_word, t_word_star, BmwElement};
use crate::combin::{cell_labels, coset_reps_df, d_of, std_tableaux, CellLabel, Permutation, StdTableau};
use crate::scalar::LaurentPoly;
use crate::tensorop::BmwWord;

/// `T*_{d1} E^f T_w T_{d2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnyangBasisElement {
    pub d1: Permutation,
    pub f: usize,
    pub w: Permutation,
    pub d2: Permutation,
}

impl EnyangBasisElement {
    pub fn word(&self) -> BmwWord {
        let off = 2 * self.f;
        t_word_star(&self.d1, 0)
            .concat(&e_power(self.f))
            .concat(&t_word(&self.w, off))
            .concat(&t_word(&self.d2, 0))
    }

    pub fn element(&self) -> BmwElement<LaurentPoly> {
        BmwElement::word(self.word(), LaurentPoly::one())
    }
}

impl fmt::Display for EnyangBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T*{} E^{} T{} T{}", self.d1, self.f, self.w, self.d2)
    }
}

/// `T*_{d1} E^f n_{st} T_{d2}` for the cell `(f, λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellularBasisElement {
    pub label: CellLabel,
    pub d1: Permutation,
    pub s: StdTableau,
    pub t: StdTableau,
    pub d2: Permutation,
}

impl CellularBasisElement {
    pub fn element(&self) -> BmwElement<LaurentPoly> {
        let off = 2 * self.label.f;
        let left = BmwElement::word(self.left_word(), LaurentPoly::one());
        let right = BmwElement::word(self.right_word(), LaurentPoly::one());
        left.mul(&n_lambda(&self.label.lambda, off)).mul(&right)
    }

    /// `T*_{d1} E^f T*_{d(s)}`, the factor left of `n_λ`.
    pub fn left_word(&self) -> BmwWord {
        let f = self.label.f;
        t_word_star(&self.d1, 0).concat(&e_power(f)).concat(&t_word_star(&d_of(&self.s), 2 * f))
    }

    /// `T_{d(t)} T_{d2}`, the factor right of `n_λ`.
    pub fn right_word(&self) -> BmwWord {
        t_word(&d_of(&self.t), 2 * self.label.f).concat(&t_word(&self.d2, 0))
    }

    /// The index `(d1, s)` of the row of the cell.
    pub fn row(&self) -> (Permutation, StdTableau) {
        (self.d1.clone(), self.s.clone())
    }

    pub fn col(&self) -> (Permutation, StdTableau) {
        (self.d2.clone(), self.t.clone())
    }
}

/// The elements indexing one side of a cell: `𝒟_f × Std(λ)`, ordered by
/// tableau first and then coset representative.
pub fn cell_indices(label: &CellLabel, r: usize) -> Vec<(Permutation, StdTableau)> {
    let ds = coset_reps_df(r, label.f);
    std_tableaux(&label.lambda)
        .into_iter()
        .flat_map(|t| ds.iter().map(move |d| (d.clone(), t.clone())))
        .collect()
}

/// The Enyang basis ordered by `f`, then `d1`, `w`, `d2`.
pub fn enyang_basis(r: usize) -> Vec<EnyangBasisElement> {
    let mut out = Vec::new();
    for f in 0..=r / 2 {
        let ds = coset_reps_df(r, f);
        let ws = Permutation::all(r - 2 * f);
        for d1 in &ds {
            for w in &ws {
                for d2 in &ds {
                    out.push(EnyangBasisElement { d1: d1.clone(), f, w: w.clone(), d2: d2.clone() });
                }
            }
        }
    }
    out
}

/// The cellular basis ordered by label, then row index, then column index.
pub fn cellular_basis(r: usize) -> Vec<CellularBasisElement> {
    let mut out = Vec::new();
    for label in cell_labels(r) {
        let idx = cell_indices(&label, r);
        for (d1, s) in &idx {
            for (d2, t) in &idx {
                out.push(CellularBasisElement { label: label.clone(), d1: d1.clone(), s: s.clone(), t: t.clone(), d2: d2.clone() });
            }
        }
    }
    out
}

/// `Σ_f |𝒟_f|² (r − 2f)!`, the dimension of the algebra.
pub fn algebra_dimension(r: usize) -> usize {
    (0..=r / 2)
        .map(|f| {
            let d = coset_reps_df(r, f).len();
            d * d * (1..=r - 2 * f).product::<usize>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enyang_basis(2).len(), 3);
        assert_eq!(enyang_basis(4).len(), 105);
        for r in 1..=5 {
            assert_eq!(cellular_basis(r).len(), enyang_basis(r).len());
            assert_eq!(algebra_dimension(r), enyang_basis(r).len());
        }
        // (2r−1)!!
        assert_eq!(algebra_dimension(5), 945);
    }

    #[test]
    fn enyang_words() {
        let b = enyang_basis(2);
        let words: Vec<String> = b.iter().map(|x| x.word().to_string()).collect();
        assert_eq!(words, vec!["1", "T1", "E1"]);
    }
}
