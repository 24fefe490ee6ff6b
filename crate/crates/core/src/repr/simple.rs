//! Simple heads `D = C / rad φ` of realized cell modules.
//!
//! On a cell module the cellular basis element `C_{ab}` of the same cell
//! acts with rank at most one, `C_v · C_{ab} = φ(v, a) C_b`. Stacking these
//! rank-one operators over `a` with `b` fixed exposes `φ` up to the change of
//! basis, so its left kernel is `rad φ` in the realized coordinates.

use std::collections::BTreeMap;

use super::cell::{letters, CellModule};
use super::matrix::{self, Mat, Quotient};
use crate::bmwalg::basis::{cell_indices, cellular_basis, CellularBasisElement};
use crate::bmwalg::element::n_lambda;
use crate::combin::dominance_geq;
use crate::error::{BmwError, Result};
use crate::scalar::linalg::{dense_to_sparse, left_kernel, SparseVec};
use crate::scalar::{Domain, Field};
use crate::tensorop::{BmwWord, Letter};

/// A cell module with its radical and simple head.
#[derive(Clone, Debug)]
pub struct CellData<F: Field> {
    pub module: CellModule<F>,
    /// Basis of `rad φ` in module coordinates.
    pub radical: Vec<SparseVec<F>>,
    pub quotient: Quotient<F>,
    simple_gens: BTreeMap<Letter, Mat<F>>,
}

/// The simple head of a cell module.
#[derive(Clone, Debug)]
pub struct SimpleModule<'a, F: Field> {
    data: &'a CellData<F>,
}

impl<F: Field> CellData<F> {
    pub fn cell_dim(&self) -> usize {
        self.module.dim()
    }

    pub fn simple_dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn simple(&self) -> Option<SimpleModule<'_, F>> {
        (self.simple_dim() > 0).then_some(SimpleModule { data: self })
    }

    /// Matrix of a word on `D`.
    pub fn simple_word_matrix(&self, w: &BmwWord) -> Mat<F> {
        let one = self.module.one();
        let mut m = matrix::identity(self.simple_dim(), one);
        for l in w.letters() {
            m = matrix::mul(&m, &self.simple_gens[l], one);
        }
        m
    }
}

impl<F: Field> SimpleModule<'_, F> {
    pub fn dim(&self) -> usize {
        self.data.simple_dim()
    }

    pub fn letter_matrix(&self, l: Letter) -> &Mat<F> {
        &self.data.simple_gens[&l]
    }

    /// `tr(w)` on the simple module for each word.
    pub fn character(&self, words: &[BmwWord]) -> Vec<F> {
        let one = self.data.module.one();
        words.iter().map(|w| matrix::trace(&self.data.simple_word_matrix(w), one)).collect()
    }
}

fn element(label: &crate::combin::CellLabel, a: &(crate::combin::Permutation, crate::combin::StdTableau), b: &(crate::combin::Permutation, crate::combin::StdTableau)) -> CellularBasisElement {
    CellularBasisElement { label: label.clone(), d1: a.0.clone(), s: a.1.clone(), t: b.1.clone(), d2: b.0.clone() }
}

/// Matrices of `C_{ab}` on the module for all `a` and a fixed `b`, with the
/// shared factor `T*_{d1} E^f T*_{d(s)} n_λ` computed once per row index.
fn cellular_action<D: Domain>(dom: &D, m: &CellModule<D::Elem>) -> (Vec<Mat<D::Elem>>, Vec<Mat<D::Elem>>)
where
    D::Elem: Field,
{
    let label = &m.label;
    let idx = cell_indices(label, m.r);
    let one = m.one();
    let n = m.element_matrix(dom, &n_lambda(&label.lambda, 2 * label.f));
    let b0 = &idx[0];
    let left: Vec<Mat<D::Elem>> = idx.iter().map(|a| matrix::mul(&m.word_matrix(&element(label, a, b0).left_word()), &n, one)).collect();
    let right: Vec<Mat<D::Elem>> = idx.iter().map(|b| m.word_matrix(&element(label, b0, b).right_word())).collect();
    (left, right)
}

/// Whether every `C_{ab}` of the module's own cell acts with rank at most one.
pub fn rank_one_property<D: Domain>(dom: &D, m: &CellModule<D::Elem>) -> bool
where
    D::Elem: Field,
{
    let one = m.one();
    let (left, right) = cellular_action(dom, m);
    left.iter().all(|l| right.iter().all(|r| matrix::rank(&matrix::mul(l, r, one), one) <= 1))
}

/// Whether the cellular basis elements of strictly higher cells, which
/// span an ideal that the cell module is taken modulo, act as zero.
pub fn higher_cells_vanish<D: Domain>(dom: &D, m: &CellModule<D::Elem>) -> bool
where
    D::Elem: Field,
{
    cellular_basis(m.r)
        .iter()
        .filter(|c| c.label != m.label && dominance_geq(&c.label, &m.label))
        .all(|c| matrix::is_zero(&m.element_matrix(dom, &c.element())))
}

/// Computes `rad φ` and the action on `C / rad φ`.
pub fn simple_head<D: Domain>(dom: &D, module: CellModule<D::Elem>) -> Result<CellData<D::Elem>>
where
    D::Elem: Field,
{
    let one = module.one().clone();
    let dim = module.dim();
    let (left, right) = cellular_action(dom, &module);
    let stacked: Vec<Mat<D::Elem>> = left.iter().map(|l| matrix::mul(l, &right[0], &one)).collect();
    for (a, s) in stacked.iter().enumerate() {
        if matrix::rank(s, &one) > 1 {
            return Err(BmwError::Check(format!("cell {}: C_(a,b) with a = {a} acts with rank > 1", module.label)));
        }
    }
    let rows: Vec<SparseVec<D::Elem>> = (0..dim)
        .map(|k| {
            let row: Vec<D::Elem> = stacked.iter().flat_map(|s| s[k].iter().cloned()).collect();
            dense_to_sparse(&row)
        })
        .collect();
    let radical: Vec<SparseVec<D::Elem>> = left_kernel(&rows, &dom.zero(), &one).iter().map(|v| dense_to_sparse(v)).collect();
    let quotient = Quotient::new(dim, &radical, &one);
    let simple_gens = letters(module.r).into_iter().map(|l| (l, quotient.induced(module.letter_matrix(l), &one))).collect();
    Ok(CellData { module, radical, quotient, simple_gens })
}
