//! The Jacobson radical from the trace form of the regular representation,
//! and its comparison with the radicals of the cellular forms.
//!
//! The regular representation has a filtration by cell modules in which
//! `C(λ)` occurs `dim C(λ)` times, so its trace is `Σ_λ dim C(λ) · tr_{C(λ)}`.
//! Over a field of characteristic zero the radical of the trace form
//! `(x, y) ↦ tr(xy)` is the Jacobson radical.

use super::decomp::Computation;
use super::matrix::{self, Mat};
use crate::bmwalg::basis::{cell_indices, cellular_basis};
use crate::bmwalg::operator::{OperatorBasis, EXHAUSTIVE_LIMIT};
use crate::combin::CellLabel;
use crate::error::{BmwError, Result};
use crate::scalar::linalg::{dense_to_sparse, left_kernel, matrix_rank, SparseVec};
use crate::scalar::{Domain, Field, Ring};

/// Per-label comparison of `J·C` with `rad φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelRadical {
    pub label: CellLabel,
    pub cell_dim: usize,
    /// `dim C / rad φ` from the realized module.
    pub simple_dim: usize,
    pub jc_rank: usize,
    /// Rank of the Gram matrix of `φ` computed from structure constants.
    pub gram_rank: Option<usize>,
}

impl LabelRadical {
    /// `rank J·C = dim rad φ` where `φ ≠ 0`. When `φ = 0` the radical of
    /// the form is all of `C` while `J·C` is the proper radical of the
    /// module, so only `J·C ⊊ C` is required.
    pub fn consistent(&self) -> bool {
        let rad_phi = self.cell_dim - self.gram_rank.unwrap_or(self.simple_dim);
        if self.gram_rank.unwrap_or(self.simple_dim) == 0 {
            self.jc_rank < self.cell_dim
        } else {
            self.jc_rank == rad_phi
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub algebra_dim: usize,
    pub radical_dim: usize,
    /// `dim J = dim B − Σ (dim D)²`.
    pub wedderburn: bool,
    pub annihilates_simples: bool,
    pub labels: Vec<LabelRadical>,
}

impl RadicalReport {
    pub fn gram_agrees_with_modules(&self) -> bool {
        self.labels.iter().all(|l| l.gram_rank.is_none_or(|g| g == l.simple_dim))
    }

    pub fn ok(&self) -> bool {
        self.wedderburn && self.annihilates_simples && self.gram_agrees_with_modules() && self.labels.iter().all(LabelRadical::consistent)
    }
}

fn combination<F: Field>(coeffs: &[F], mats: &[Mat<F>], dim: usize, one: &F) -> Mat<F> {
    let mut m = matrix::zeros(dim, dim, one);
    for (c, a) in coeffs.iter().zip(mats) {
        if !c.is_zero() {
            m = matrix::add(&m, &matrix::scale(a, c));
        }
    }
    m
}

/// Basis of `J` as coefficient vectors over `c.words`.
pub fn jacobson_radical<D: Domain>(c: &Computation<D>) -> Vec<Vec<D::Elem>>
where
    D::Elem: Field,
{
    let one = c.dom().one();
    let per_label: Vec<Vec<Mat<D::Elem>>> = c.cells.iter().map(|d| c.words.iter().map(|w| d.module.word_matrix(w)).collect()).collect();
    let n = c.words.len();
    let mut rows: Vec<SparseVec<D::Elem>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![c.dom().zero(); n];
        for (j, slot) in row.iter_mut().enumerate() {
            let mut acc = c.dom().zero();
            for (d, mats) in c.cells.iter().zip(&per_label) {
                if d.cell_dim() == 0 {
                    continue;
                }
                let t = matrix::trace(&matrix::mul(&mats[i], &mats[j], &one), &one);
                acc = acc.add(&t.mul(&c.dom().int(d.cell_dim() as i64)));
            }
            *slot = acc;
        }
        rows.push(dense_to_sparse(&row));
    }
    left_kernel(&rows, &c.dom().zero(), &one)
}

/// Gram matrix of `φ` for one cell from structure constants:
/// `C_{a₀t} C_{ub₀} ≡ φ(t, u) C_{a₀b₀}` modulo higher cells.
fn gram_from_structure_constants<D: Domain>(basis: &OperatorBasis<D>, label: &CellLabel) -> Result<Vec<Vec<D::Elem>>>
where
    D::Elem: Field,
{
    let r = basis.rep.r;
    let all = cellular_basis(r);
    let offset = all.iter().position(|b| &b.label == label).expect("label present");
    let idx = cell_indices(label, r);
    let k = idx.len();
    let pos = |a: usize, b: usize| offset + a * k + b;
    let mut g = Vec::with_capacity(k);
    for t in 0..k {
        let mut row = Vec::with_capacity(k);
        for u in 0..k {
            let x = basis.elements[pos(0, t)].mul(&basis.elements[pos(u, 0)]);
            let coeffs = basis.expand(&x)?;
            row.push(coeffs[pos(0, 0)].clone());
        }
        g.push(row);
    }
    Ok(g)
}

/// Computes `J`, checks it against the simple heads, and compares `J·C`
/// with `rad φ` for every label. `with_gram` adds the Gram matrices from
/// structure constants, which needs an operator basis of the whole algebra.
pub fn radical_report<D: Domain>(c: &Computation<D>, with_gram: bool) -> Result<RadicalReport>
where
    D::Elem: Field,
{
    let one = c.dom().one();
    let j = jacobson_radical(c);
    let algebra_dim = c.words.len();
    let wedderburn = j.len() + c.cells.iter().map(|d| d.simple_dim() * d.simple_dim()).sum::<usize>() == algebra_dim;
    let mut annihilates_simples = true;
    let mut labels = Vec::new();
    let structure = if with_gram {
        let elems = cellular_basis(c.rep.r).iter().map(|b| b.element()).collect();
        let b = OperatorBasis::build(c.rep.clone(), elems, EXHAUSTIVE_LIMIT);
        if !b.is_independent() {
            return Err(BmwError::Check(format!("cellular basis has operator rank {} < {}", b.rank(), b.elements.len())));
        }
        Some(b)
    } else {
        None
    };
    for d in &c.cells {
        let dim = d.cell_dim();
        let mats: Vec<Mat<D::Elem>> = c.words.iter().map(|w| d.module.word_matrix(w)).collect();
        let smats: Vec<Mat<D::Elem>> = c.words.iter().map(|w| d.simple_word_matrix(w)).collect();
        let mut jc: Vec<Vec<D::Elem>> = Vec::new();
        for x in &j {
            jc.extend(combination(x, &mats, dim, &one));
            if !matrix::is_zero(&combination(x, &smats, d.simple_dim(), &one)) {
                annihilates_simples = false;
            }
        }
        let jc_rank = matrix_rank(&jc, &one);
        let gram_rank = match &structure {
            Some(b) => Some(matrix_rank(&gram_from_structure_constants(b, &d.module.label)?, &one)),
            None => None,
        };
        labels.push(LabelRadical { label: d.module.label.clone(), cell_dim: dim, simple_dim: d.simple_dim(), jc_rank, gram_rank });
    }
    labels.sort_by(|a, b| {
        let all = crate::combin::cell_labels(c.rep.r);
        let p = |l: &CellLabel| all.iter().position(|x| x == l);
        p(&a.label).cmp(&p(&b.label))
    });
    Ok(RadicalReport { algebra_dim, radical_dim: j.len(), wedderburn, annihilates_simples, labels })
}
