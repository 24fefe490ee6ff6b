//! Cell modules realized as spaces of highest-weight vectors in `V^{⊗r}`.

use std::collections::BTreeMap;

use super::matrix::{self, Mat};
use crate::bmwalg::element::{e_power, n_lambda, t_word};
use crate::bmwalg::{BmwElement, TensorRep};
use crate::bmwalg::basis::cell_indices;
use crate::combin::{d_of, w_lambda, CellLabel};
use crate::error::{BmwError, Result};
use crate::qgroup::weights::{hw_space, HwMode, Weight};
use crate::qgroup::{Family, NaturalRep};
use crate::scalar::linalg::{Echelon, Insert, SparseVec};
use crate::scalar::{Domain, Field, LaurentPoly};
use crate::tensorop::{BmwWord, Letter, SparseTensor, TensorIndex};

/// Every generator letter on `r` strands.
pub fn letters(r: usize) -> Vec<Letter> {
    (1..r).flat_map(|i| [Letter::T(i), Letter::TInv(i), Letter::E(i)]).collect()
}

/// The cell module `C(f, μ)` realized on the highest-weight vectors of
/// weight `μ′`. The label carries the cellular partition `μ`.
#[derive(Clone, Debug)]
pub struct CellModule<F: Field> {
    pub label: CellLabel,
    pub r: usize,
    /// `v_{λ,t,d}` in the order of [`cell_indices`].
    pub basis: Vec<SparseTensor<F>>,
    /// Whether generators act through `γ` (type B).
    pub twisted: bool,
    gens: BTreeMap<Letter, Mat<F>>,
    one: F,
}

/// `v_λ = (v_1 ⊗ v_{1′})^{⊗f} ⊗ v_{𝐢_λ}` for the weight `λ = μ′`.
pub fn highest_weight_seed<D: Domain>(rep: &TensorRep<D>, label: &CellLabel) -> Result<TensorIndex>
where
    D::Elem: Field,
{
    let ty = rep.ty();
    let lambda = label.lambda.conjugate();
    if lambda.len() > ty.n {
        return Err(BmwError::Usage(format!("weight {lambda} has more than n = {} parts", ty.n)));
    }
    let mut digits = Vec::with_capacity(rep.r);
    for _ in 0..label.f {
        digits.push(0);
        digits.push(ty.prime(0));
    }
    for (i, &p) in lambda.parts().iter().enumerate() {
        digits.extend(std::iter::repeat_n(i, p));
    }
    Ok(TensorIndex::from_digits(&digits))
}

/// `E^f T_{w_λ} n_μ` with the Hecke part on the last `r − 2f` strands.
pub fn construction_prefix(label: &CellLabel) -> BmwElement<LaurentPoly> {
    let off = 2 * label.f;
    let lambda = label.lambda.conjugate();
    let head = BmwElement::word(e_power(label.f).concat(&t_word(&w_lambda(&lambda), off)), LaurentPoly::one());
    head.mul(&n_lambda(&label.lambda, off))
}

fn flatten<D: Domain>(rep: &TensorRep<D>, t: &SparseTensor<D::Elem>) -> SparseVec<D::Elem>
where
    D::Elem: Field,
{
    t.iter().map(|(idx, c)| (rep.lex_position(*idx), c.clone())).collect()
}

/// The image of `γ` on a letter: `T_i ↦ T_{r−i}`.
pub fn gamma_letter(l: Letter, r: usize) -> Letter {
    l.with_position(r - l.position())
}

impl<F: Field> CellModule<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn one(&self) -> &F {
        &self.one
    }

    /// Matrix of a generator in the module action.
    pub fn letter_matrix(&self, l: Letter) -> &Mat<F> {
        &self.gens[&l]
    }

    pub fn word_matrix(&self, w: &BmwWord) -> Mat<F> {
        let mut m = matrix::identity(self.dim(), &self.one);
        for l in w.letters() {
            m = matrix::mul(&m, &self.gens[l], &self.one);
        }
        m
    }

    pub fn element_matrix<D: Domain<Elem = F>>(&self, dom: &D, x: &BmwElement<LaurentPoly>) -> Mat<F> {
        let mut m = matrix::zeros(self.dim(), self.dim(), &self.one);
        for (w, c) in x.terms() {
            m = matrix::add(&m, &matrix::scale(&self.word_matrix(w), &dom.embed(c)));
        }
        m
    }

    /// Generator matrices of all letters, keyed by letter.
    pub fn generators(&self) -> &BTreeMap<Letter, Mat<F>> {
        &self.gens
    }
}

/// Builds the realization of `C(f, μ)`, and for type B the `γ`-twisted
/// module, which is again isomorphic to the cell module of the standard
/// cellular basis.
pub fn build_cell_module<D: Domain>(rep: &TensorRep<D>, label: &CellLabel) -> Result<CellModule<D::Elem>>
where
    D::Elem: Field,
{
    let r = rep.r;
    if label.degree() != r {
        return Err(BmwError::Usage(format!("label {label} is not a cell of B_{r}")));
    }
    let one = rep.dom().one();
    let seed = rep.basis_vector(highest_weight_seed(rep, label)?);
    let v0 = rep.apply(&construction_prefix(label), &seed);
    let off = 2 * label.f;
    let mut basis = Vec::new();
    let mut ech = Echelon::new(one.clone(), true);
    for (d, t) in cell_indices(label, r) {
        let w = t_word(&d_of(&t), off).concat(&t_word(&d, 0));
        let v = rep.ops.apply_word(&w, &v0);
        if !matches!(ech.insert(flatten(rep, &v)), Insert::Independent(_)) {
            return Err(BmwError::Check(format!(
                "cell module {label}: highest-weight vectors are dependent ({} independent before ({d}, {t}))",
                ech.rank()
            )));
        }
        basis.push(v);
    }
    let dim = basis.len();
    let mut plain = BTreeMap::new();
    for l in letters(r) {
        let mut m = matrix::zeros(dim, dim, &one);
        for (k, b) in basis.iter().enumerate() {
            let img = rep.ops.apply_letter(l, b);
            let c = ech
                .coordinates(flatten(rep, &img))
                .ok_or_else(|| BmwError::Check(format!("cell module {label}: not stable under {l}")))?;
            for (j, x) in c {
                m[k][j] = x;
            }
        }
        plain.insert(l, m);
    }
    let twisted = rep.ty().family == Family::B;
    let gens = if twisted {
        letters(r).into_iter().map(|l| (l, plain[&gamma_letter(l, r)].clone())).collect()
    } else {
        plain
    };
    Ok(CellModule { label: label.clone(), r, basis, twisted, gens, one })
}

/// Outcome of comparing a realization with the highest-weight kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HwCrossCheck {
    pub kernel_dim: usize,
    pub constructed: usize,
    pub contained: bool,
    pub mode: HwMode,
}

impl HwCrossCheck {
    pub fn ok(&self) -> bool {
        self.contained && self.kernel_dim == self.constructed
    }
}

/// Computes the space of highest-weight vectors of weight `μ′` as a kernel
/// and checks that the realization spans it. Divided powers are used when
/// they specialize; otherwise only the `e_i`.
pub fn hw_cross_check<D: Domain>(rep: &TensorRep<D>, module: &CellModule<D::Elem>) -> Result<HwCrossCheck>
where
    D::Elem: Field,
{
    let ty = *rep.ty();
    let nat = NaturalRep::new(ty);
    let weight = Weight::from_partition(&ty, &module.label.lambda.conjugate()).scaled(&ty);
    let (kernel, mode) = match hw_space(rep.dom(), &nat, &weight, rep.r, HwMode::DividedPowers) {
        Ok(k) => (k, HwMode::DividedPowers),
        Err(BmwError::Internal(_)) => (hw_space(rep.dom(), &nat, &weight, rep.r, HwMode::RaisingOnly)?, HwMode::RaisingOnly),
        Err(e) => return Err(e),
    };
    let mut ech = Echelon::new(rep.dom().one(), false);
    for k in &kernel {
        ech.insert(flatten(rep, k));
    }
    let contained = module.basis.iter().all(|b| ech.contains(flatten(rep, b)));
    Ok(HwCrossCheck { kernel_dim: kernel.len(), constructed: module.dim(), contained, mode })
}
