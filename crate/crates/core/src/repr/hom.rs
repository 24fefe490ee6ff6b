//! Dimensions of spaces of module homomorphisms between realized modules.

use std::collections::BTreeMap;

use super::cell::CellModule;
use super::matrix::Mat;
use crate::scalar::linalg::{Echelon, SparseVec};
use crate::scalar::Field;
use crate::tensorop::Letter;

/// `dim {X : A_g X = X B_g for all g}` for modules given by generator
/// matrices in the row-vector convention, where `X` maps `v ↦ vX`.
pub fn intertwiner_dimension<F: Field>(a: &BTreeMap<Letter, Mat<F>>, b: &BTreeMap<Letter, Mat<F>>, m: usize, n: usize, one: &F) -> usize {
    let unknowns = m * n;
    if unknowns == 0 {
        return 0;
    }
    let var = |i: usize, j: usize| i * n + j;
    let mut ech = Echelon::new(one.clone(), false);
    for (l, am) in a {
        let bm = &b[l];
        for i in 0..m {
            for k in 0..n {
                let mut row: SparseVec<F> = SparseVec::new();
                for (j, c) in am[i].iter().enumerate() {
                    if !c.is_zero() {
                        add(&mut row, var(j, k), c.clone());
                    }
                }
                for (j, brow) in bm.iter().enumerate() {
                    let c = &brow[k];
                    if !c.is_zero() {
                        add(&mut row, var(i, j), c.neg());
                    }
                }
                row.retain(|_, v| !v.is_zero());
                if !row.is_empty() {
                    ech.insert(row);
                }
                if ech.rank() == unknowns {
                    return 0;
                }
            }
        }
    }
    unknowns - ech.rank()
}

fn add<F: Field>(row: &mut SparseVec<F>, k: usize, v: F) {
    match row.get_mut(&k) {
        Some(old) => *old = old.add(&v),
        None => {
            row.insert(k, v);
        }
    }
}

/// `dim Hom(M, N)` for two realized cell modules over the same field.
pub fn hom_space<F: Field>(m: &CellModule<F>, n: &CellModule<F>) -> usize {
    assert_eq!(m.r, n.r, "modules of different algebras");
    intertwiner_dimension(m.generators(), n.generators(), m.dim(), n.dim(), m.one())
}
