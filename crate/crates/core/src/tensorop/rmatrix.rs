//! The operators `Ř`, `Ř⁻¹` and `E` on `V^{⊗2}`, acting on the right, and
//! their placement at adjacent tensor positions.

use std::fmt;

use super::tensor::{SparseTensor, TensorIndex};
use crate::qgroup::{Family, LieType};
use crate::scalar::{Domain, LaurentPoly, Ring};

/// Image of `v_k ⊗ v_ℓ` as a list of `(j_1, j_2, coefficient)`.
pub type PairImage<E> = Vec<(usize, usize, E)>;

/// A right operator on `V^{⊗2}` stored by rows: `rows[k·N + ℓ]` is the image
/// of `v_k ⊗ v_ℓ`.
#[derive(Clone, Debug)]
pub struct PairOperator<E> {
    pub dim: usize,
    pub rows: Vec<PairImage<E>>,
}

impl<E: Ring> PairOperator<E> {
    pub fn image(&self, k: usize, l: usize) -> &[(usize, usize, E)] {
        &self.rows[k * self.dim + l]
    }

    pub fn map<F: Ring>(&self, f: impl Fn(&E) -> F) -> PairOperator<F> {
        PairOperator {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|(a, b, c)| (*a, *b, f(c))).filter(|(_, _, c)| !c.is_zero()).collect())
                .collect(),
        }
    }

    /// Applies the operator at positions `(i, i+1)` (1-based `i`) of `t`.
    pub fn apply_at(&self, i: usize, t: &SparseTensor<E>) -> SparseTensor<E> {
        let r = t.degree();
        assert!(i >= 1 && i < r, "position {i} out of range for r = {r}");
        let mut out = SparseTensor::zero(r);
        for (idx, c) in t.iter() {
            let k = idx.get(i - 1, r);
            let l = idx.get(i, r);
            for (j1, j2, coef) in self.image(k, l) {
                out.add_term(idx.with(i - 1, r, *j1).with(i, r, *j2), c.mul(coef));
            }
        }
        out
    }
}

fn add_entry(rows: &mut [PairImage<LaurentPoly>], dim: usize, k: usize, l: usize, j1: usize, j2: usize, c: LaurentPoly) {
    let row = &mut rows[k * dim + l];
    if let Some(e) = row.iter_mut().find(|(a, b, _)| *a == j1 && *b == j2) {
        e.2 = e.2.add(&c);
    } else {
        row.push((j1, j2, c));
    }
}

fn finish(mut rows: Vec<PairImage<LaurentPoly>>, dim: usize) -> PairOperator<LaurentPoly> {
    for row in rows.iter_mut() {
        row.retain(|(_, _, c)| !c.is_zero());
        row.sort_by_key(|a| (a.0, a.1));
    }
    PairOperator { dim, rows }
}

/// `δ = q − q⁻¹`.
pub fn delta() -> LaurentPoly {
    LaurentPoly::q_pow(1).sub(&LaurentPoly::q_pow(-1))
}

/// `q^{ρ_a − ρ_b} ε_a ε_b` as a Laurent polynomial in `u`.
fn rho_eps(ty: &LieType, a: usize, b: usize) -> LaurentPoly {
    let e = ty.epsilon(a) * ty.epsilon(b);
    let m = LaurentPoly::u_pow((ty.rho2(a) - ty.rho2(b)) as i32);
    if e < 0 {
        m.neg()
    } else {
        m
    }
}

/// `Ř` assembled from matrix units: a right action with
/// `(v_k ⊗ v_ℓ)(E_{ab} ⊗ E_{cd}) = δ_{ka} δ_{ℓc} v_b ⊗ v_d`.
pub fn r_matrix(ty: &LieType) -> PairOperator<LaurentPoly> {
    assert!(ty.family != Family::A);
    let nd = ty.dim();
    let p = |i: usize| ty.prime(i);
    let q = LaurentPoly::q_pow(1);
    let qi = LaurentPoly::q_pow(-1);
    let d = delta();
    let mut rows = vec![Vec::new(); nd * nd];
    for i in 0..nd {
        if i == p(i) {
            continue;
        }
        add_entry(&mut rows, nd, i, i, i, i, q.clone());
        add_entry(&mut rows, nd, i, p(i), p(i), i, qi.clone());
    }
    for i in 0..nd {
        for j in 0..nd {
            if i != j && i != p(j) {
                add_entry(&mut rows, nd, i, j, j, i, LaurentPoly::one());
            }
        }
    }
    for i in 0..nd {
        for j in 0..i {
            add_entry(&mut rows, nd, j, i, j, i, d.clone());
            // E_{j i'} ⊗ E_{j' i} sends v_j ⊗ v_{j'} to v_{i'} ⊗ v_i
            add_entry(&mut rows, nd, j, p(j), p(i), i, d.mul(&rho_eps(ty, i, j)).neg());
        }
    }
    if ty.family == Family::B {
        let m = ty.n;
        add_entry(&mut rows, nd, m, m, m, m, LaurentPoly::one());
    }
    finish(rows, nd)
}

/// `E` with `(v_k ⊗ v_{k′})E = Σ_i q^{ρ_{i′}−ρ_k} ε_{i′} ε_k v_i ⊗ v_{i′}`.
pub fn e_matrix(ty: &LieType) -> PairOperator<LaurentPoly> {
    let nd = ty.dim();
    let mut rows = vec![Vec::new(); nd * nd];
    for k in 0..nd {
        for i in 0..nd {
            add_entry(&mut rows, nd, k, ty.prime(k), i, ty.prime(i), rho_eps(ty, ty.prime(i), k));
        }
    }
    finish(rows, nd)
}

/// `Ř⁻¹ = Ř − δ(1 − E)`.
pub fn r_inverse(ty: &LieType) -> PairOperator<LaurentPoly> {
    let nd = ty.dim();
    let r = r_matrix(ty);
    let e = e_matrix(ty);
    let d = delta();
    let mut rows = r.rows.clone();
    for k in 0..nd {
        for l in 0..nd {
            add_entry(&mut rows, nd, k, l, k, l, d.neg());
            for (j1, j2, c) in e.image(k, l) {
                add_entry(&mut rows, nd, k, l, *j1, *j2, d.mul(c));
            }
        }
    }
    finish(rows, nd)
}

/// A generator of the BMW algebra; positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    T(usize),
    TInv(usize),
    E(usize),
}

impl Letter {
    pub fn position(&self) -> usize {
        match *self {
            Letter::T(i) | Letter::TInv(i) | Letter::E(i) => i,
        }
    }

    pub fn with_position(&self, i: usize) -> Letter {
        match self {
            Letter::T(_) => Letter::T(i),
            Letter::TInv(_) => Letter::TInv(i),
            Letter::E(_) => Letter::E(i),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i) => write!(f, "T{i}"),
            Letter::TInv(i) => write!(f, "T{i}^-1"),
            Letter::E(i) => write!(f, "E{i}"),
        }
    }
}

/// A word in the generators, read left to right as a right action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BmwWord(pub Vec<Letter>);

impl BmwWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BmwWord(letters)
    }

    pub fn identity() -> Self {
        BmwWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, o: &BmwWord) -> BmwWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        BmwWord(v)
    }

    /// The anti-involution `σ`: reverse the word.
    pub fn sigma(&self) -> BmwWord {
        BmwWord(self.0.iter().rev().copied().collect())
    }

    /// The automorphism `γ`: relabel position `i` as `r − i`.
    pub fn gamma(&self, r: usize) -> BmwWord {
        BmwWord(self.0.iter().map(|l| l.with_position(r - l.position())).collect())
    }

    /// `σ̃ = σ ∘ γ`.
    pub fn sigma_tilde(&self, r: usize) -> BmwWord {
        self.gamma(r).sigma()
    }

    /// The same word after swapping each `T_i^{±1}` for its inverse.
    pub fn invert_letters(&self) -> BmwWord {
        BmwWord(
            self.0
                .iter()
                .map(|l| match *l {
                    Letter::T(i) => Letter::TInv(i),
                    Letter::TInv(i) => Letter::T(i),
                    e => e,
                })
                .collect(),
        )
    }
}

impl fmt::Display for BmwWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// `Ř`, `Ř⁻¹` and `E` with coefficients in a domain.
#[derive(Clone, Debug)]
pub struct TensorOps<D: Domain> {
    pub ty: LieType,
    pub dom: D,
    pub r_op: PairOperator<D::Elem>,
    pub r_inv: PairOperator<D::Elem>,
    pub e_op: PairOperator<D::Elem>,
}

impl<D: Domain> TensorOps<D> {
    pub fn new(ty: LieType, dom: D) -> Self {
        let r_op = r_matrix(&ty).map(|c| dom.embed(c));
        let r_inv = r_inverse(&ty).map(|c| dom.embed(c));
        let e_op = e_matrix(&ty).map(|c| dom.embed(c));
        TensorOps { ty, dom, r_op, r_inv, e_op }
    }

    pub fn apply_letter(&self, l: Letter, t: &SparseTensor<D::Elem>) -> SparseTensor<D::Elem> {
        match l {
            Letter::T(i) => self.r_op.apply_at(i, t),
            Letter::TInv(i) => self.r_inv.apply_at(i, t),
            Letter::E(i) => self.e_op.apply_at(i, t),
        }
    }

    /// `t · w`, letters applied left to right.
    pub fn apply_word(&self, w: &BmwWord, t: &SparseTensor<D::Elem>) -> SparseTensor<D::Elem> {
        let mut cur = t.clone();
        for l in w.letters() {
            if cur.is_zero() {
                break;
            }
            cur = self.apply_letter(*l, &cur);
        }
        cur
    }

    /// `t · Σ c_w w`.
    pub fn apply_combination(&self, x: &[(D::Elem, BmwWord)], t: &SparseTensor<D::Elem>) -> SparseTensor<D::Elem> {
        let mut out = SparseTensor::zero(t.degree());
        for (c, w) in x {
            out.add_scaled(&self.apply_word(w, t), c);
        }
        out
    }

    pub fn varrho(&self) -> D::Elem {
        self.dom.embed(&self.ty.varrho())
    }
}

/// The invariant vector `α ∈ V^{⊗2}`.
pub fn alpha(ty: &LieType) -> SparseTensor<LaurentPoly> {
    crate::qgroup::NaturalRep::new(*ty).invariant_vector()
}

/// Whether every entry of `Ř` obeys the triangularity
/// `v_{j1} ⊗ v_{j2}` involved in `(v_{i1} ⊗ v_{i2})Ř ⇒ j1 ≤ i2 and j2 ≥ i1`.
pub fn triangularity_violations(ty: &LieType) -> Vec<(usize, usize, usize, usize)> {
    let r = r_matrix(ty);
    let nd = ty.dim();
    let mut bad = Vec::new();
    for i1 in 0..nd {
        for i2 in 0..nd {
            for (j1, j2, _) in r.image(i1, i2) {
                if !(*j1 <= i2 && *j2 >= i1) {
                    bad.push((i1, i2, *j1, *j2));
                }
            }
        }
    }
    bad
}

/// The scalar `x` with `E² = xE`, read off from `(v_1 ⊗ v_{1′})E²`.
pub fn e_square_scalar(ty: &LieType) -> LaurentPoly {
    let e = e_matrix(ty);
    let t = SparseTensor::basis(2, TensorIndex::from_digits(&[0, ty.prime(0)]), LaurentPoly::one());
    let once = e.apply_at(1, &t);
    let twice = e.apply_at(1, &once);
    let key = TensorIndex::from_digits(&[0, ty.prime(0)]);
    let a = once.coeff(key).cloned().unwrap_or_else(LaurentPoly::zero);
    let b = twice.coeff(key).cloned().unwrap_or_else(LaurentPoly::zero);
    b.exact_divide(&a).expect("E² is a multiple of E")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentDomain;

    fn ty(f: Family, n: usize) -> LieType {
        LieType::new(f, n).unwrap()
    }

    fn types() -> Vec<LieType> {
        vec![ty(Family::B, 2), ty(Family::B, 3), ty(Family::C, 2), ty(Family::C, 3), ty(Family::D, 2), ty(Family::D, 3)]
    }

    /// `(v_k ⊗ v_ℓ)Ř` by the five-case description, written independently of
    /// the matrix-unit assembly.
    fn r_by_cases(t: &LieType, k: usize, l: usize) -> SparseTensor<LaurentPoly> {
        let d = delta();
        let b = |a: usize, c: usize| SparseTensor::basis(2, TensorIndex::from_digits(&[a, c]), LaurentPoly::one());
        let tail = |k: usize| {
            let mut s = SparseTensor::zero(2);
            for i in k + 1..t.dim() {
                s.add_term(TensorIndex::from_digits(&[t.prime(i), i]), rho_eps(t, i, k));
            }
            s
        };
        let q = LaurentPoly::q_pow(1);
        let qi = LaurentPoly::q_pow(-1);
        if t.family == Family::B && k == t.n && l == t.n {
            let mut s = SparseTensor::zero(2);
            for i in t.n + 1..t.dim() {
                s.add_term(TensorIndex::from_digits(&[t.prime(i), i]), LaurentPoly::u_pow(t.rho2(i) as i32));
            }
            return b(k, k).sub(&s.scale(&d));
        }
        if k == l {
            b(k, k).scale(&q)
        } else if k > l && k != t.prime(l) {
            b(l, k)
        } else if k > l {
            b(l, k).scale(&qi).sub(&tail(k).scale(&d))
        } else if k != t.prime(l) {
            b(l, k).add(&b(k, l).scale(&d))
        } else {
            b(l, k).scale(&qi).add(&b(k, l).sub(&tail(k)).scale(&d))
        }
    }

    #[test]
    fn matrix_units_match_case_formulas() {
        for t in types() {
            let r = r_matrix(&t);
            for k in 0..t.dim() {
                for l in 0..t.dim() {
                    let v = SparseTensor::basis(2, TensorIndex::from_digits(&[k, l]), LaurentPoly::one());
                    assert_eq!(r.apply_at(1, &v), r_by_cases(&t, k, l), "{t} k={k} l={l}");
                }
            }
        }
    }

    #[test]
    fn inverse_and_cubic() {
        for t in types() {
            let ops = TensorOps::new(t, LaurentDomain);
            let q = LaurentPoly::q_pow(1);
            let qi = LaurentPoly::q_pow(-1);
            let vi = t.varrho().inv_monomial().unwrap();
            for idx in TensorIndex::all(t.dim(), 2) {
                let v = SparseTensor::basis(2, idx, LaurentPoly::one());
                let back = ops.r_inv.apply_at(1, &ops.r_op.apply_at(1, &v));
                assert_eq!(back, v);
                let a = ops.r_op.apply_at(1, &v).sub(&v.scale(&q));
                let b = ops.r_op.apply_at(1, &a).add(&a.scale(&qi));
                let c = ops.r_op.apply_at(1, &b).sub(&b.scale(&vi));
                assert!(c.is_zero(), "{t}: cubic relation fails on {idx:?}");
            }
        }
    }

    #[test]
    fn e_squared_scalar() {
        for t in types() {
            let x = e_square_scalar(&t);
            // x = 1 + (ϱ − ϱ⁻¹)/δ
            let vr = t.varrho();
            let expect = LaurentPoly::one().add(&vr.sub(&vr.inv_monomial().unwrap()).exact_divide(&delta()).unwrap());
            assert_eq!(x, expect, "{t}");
            let e = e_matrix(&t);
            for idx in TensorIndex::all(t.dim(), 2) {
                let v = SparseTensor::basis(2, idx, LaurentPoly::one());
                let once = e.apply_at(1, &v);
                assert_eq!(e.apply_at(1, &once), once.scale(&x));
            }
        }
    }

    #[test]
    fn corollary_triangularity() {
        for t in types() {
            assert!(triangularity_violations(&t).is_empty(), "{t}");
        }
    }

    #[test]
    fn alpha_in_rank_one_type_c() {
        // the rank-one formula: α = −q^{-1} v_1⊗v_2 + q v_2⊗v_1; check the analogous n = 2 entries
        let t = ty(Family::C, 2);
        let a = alpha(&t);
        let key = TensorIndex::from_digits(&[0, 3]);
        assert_eq!(a.coeff(key), Some(&LaurentPoly::q_pow(-2).neg()));
        let key = TensorIndex::from_digits(&[3, 0]);
        assert_eq!(a.coeff(key), Some(&LaurentPoly::q_pow(2)));
    }

    #[test]
    fn word_symmetries() {
        let w = BmwWord::new(vec![Letter::T(1), Letter::E(2)]);
        assert_eq!(w.sigma(), BmwWord::new(vec![Letter::E(2), Letter::T(1)]));
        assert_eq!(BmwWord::new(vec![Letter::T(1)]).gamma(3), BmwWord::new(vec![Letter::T(2)]));
        assert_eq!(w.sigma_tilde(4).sigma_tilde(4), w);
    }
}
