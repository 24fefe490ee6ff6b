//! Nondegenerate bilinear forms on `V^{⊗r}` that make the BMW action
//! self-adjoint up to an involution.

use super::tensor::{SparseTensor, TensorIndex};
use crate::qgroup::{Family, LieType};
use crate::scalar::{Domain, Ring};

/// The multi-index `𝐢′ = (i_r′, …, i_1′)`.
pub fn dual_index(ty: &LieType, idx: TensorIndex, r: usize) -> TensorIndex {
    let d: Vec<usize> = idx.digits(r).into_iter().rev().map(|i| ty.prime(i)).collect();
    TensorIndex::from_digits(&d)
}

/// `⟨v_𝐢, v_𝐣⟩ = q^{−ρ_𝐢} δ_{𝐢,𝐣′}` for type B, extended bilinearly.
pub fn form_b<D: Domain>(dom: &D, ty: &LieType, s: &SparseTensor<D::Elem>, t: &SparseTensor<D::Elem>) -> D::Elem {
    assert_eq!(ty.family, Family::B, "form_b is the type-B form");
    let r = s.degree();
    let mut acc = dom.zero();
    for (idx, c) in s.iter() {
        if let Some(d) = t.coeff(dual_index(ty, *idx, r)) {
            let rho2: i64 = idx.digits(r).into_iter().map(|i| ty.rho2(i)).sum();
            acc = acc.add(&c.mul(d).mul(&dom.u_pow(-rho2 as i32)));
        }
    }
    acc
}

/// How `β` counts pairs of positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaConvention {
    /// Each unordered pair contributes 1 if unrelated, 2 if dual, 0 if equal.
    Unordered,
    /// Unrelated pairs are counted once per ordering, dual pairs twice.
    Ordered,
}

/// `β(𝐢)`, the exponent of `q` in the diagonal form.
pub fn beta(ty: &LieType, digits: &[usize], conv: BetaConvention) -> i64 {
    let mut b = 0;
    for j in 0..digits.len() {
        for k in j + 1..digits.len() {
            let (x, y) = (digits[j], digits[k]);
            if x == ty.prime(y) && x != y {
                b += 2;
            } else if x != y {
                b += match conv {
                    BetaConvention::Unordered => 1,
                    BetaConvention::Ordered => 2,
                };
            }
        }
    }
    b
}

/// `⟨v_𝐢, v_𝐣⟩ = q^{β(𝐢)} δ_{𝐢,𝐣}` for types C and D.
pub fn form_cd_with<D: Domain>(dom: &D, ty: &LieType, conv: BetaConvention, s: &SparseTensor<D::Elem>, t: &SparseTensor<D::Elem>) -> D::Elem {
    assert!(matches!(ty.family, Family::C | Family::D), "form_cd needs type C or D");
    let r = s.degree();
    let mut acc = dom.zero();
    for (idx, c) in s.iter() {
        if let Some(d) = t.coeff(*idx) {
            let b = beta(ty, &idx.digits(r), conv);
            acc = acc.add(&c.mul(d).mul(&dom.u_pow(2 * b as i32)));
        }
    }
    acc
}

pub fn form_cd<D: Domain>(dom: &D, ty: &LieType, s: &SparseTensor<D::Elem>, t: &SparseTensor<D::Elem>) -> D::Elem {
    form_cd_with(dom, ty, BetaConvention::Unordered, s, t)
}

/// Dispatches to the form belonging to the type.
pub fn form<D: Domain>(dom: &D, ty: &LieType, s: &SparseTensor<D::Elem>, t: &SparseTensor<D::Elem>) -> D::Elem {
    match ty.family {
        Family::B => form_b(dom, ty, s, t),
        _ => form_cd(dom, ty, s, t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qgroup::{Gen, NaturalRep};
    use crate::scalar::{LaurentDomain, LaurentPoly};
    use crate::tensorop::rmatrix::{BmwWord, Letter, TensorOps};

    fn basis(r: usize, d: &[usize]) -> SparseTensor<LaurentPoly> {
        SparseTensor::basis(r, TensorIndex::from_digits(d), LaurentPoly::one())
    }

    fn letters(r: usize) -> Vec<Letter> {
        (1..r).flat_map(|i| [Letter::T(i), Letter::TInv(i), Letter::E(i)]).collect()
    }

    fn act_all(rep: &NaturalRep, gens: &[Gen], t: &SparseTensor<LaurentPoly>) -> SparseTensor<LaurentPoly> {
        gens.iter().rev().fold(t.clone(), |acc, g| rep.act(&LaurentDomain, *g, &acc))
    }

    #[test]
    fn type_b_examples() {
        let ty = LieType::new(Family::B, 2).unwrap();
        let v1 = basis(1, &[0]);
        let v1p = basis(1, &[4]);
        assert_eq!(form_b(&LaurentDomain, &ty, &v1, &v1p), LaurentPoly::u_pow(-3));
        assert!(form_b(&LaurentDomain, &ty, &v1, &v1).is_zero());
    }

    #[test]
    fn type_cd_examples() {
        let ty = LieType::new(Family::C, 2).unwrap();
        let v = basis(2, &[0, 3]);
        assert_eq!(form_cd(&LaurentDomain, &ty, &v, &v), LaurentPoly::q_pow(2));
        assert_eq!(form_cd(&LaurentDomain, &ty, &basis(1, &[2]), &basis(1, &[2])), LaurentPoly::one());
        assert!(form_cd(&LaurentDomain, &ty, &v, &basis(2, &[3, 0])).is_zero());
    }

    /// `⟨a s, t⟩ = ⟨s, S(a) t⟩` and `⟨s b, t⟩ = ⟨s, t σ̃(b)⟩` on all monomials.
    #[test]
    fn type_b_invariance() {
        for (n, rmax) in [(2, 3), (3, 2)] {
            let ty = LieType::new(Family::B, n).unwrap();
            let rep = NaturalRep::new(ty);
            let ops = TensorOps::new(ty, LaurentDomain);
            for r in 1..=rmax {
                let all = TensorIndex::all(ty.dim(), r);
                for i in 1..=ty.rank() {
                    let pairs: [(Vec<Gen>, Vec<Gen>, i64); 3] = [
                        (vec![Gen::E(i)], vec![Gen::KInv(i), Gen::E(i)], -1),
                        (vec![Gen::F(i)], vec![Gen::F(i), Gen::K(i)], -1),
                        (vec![Gen::K(i)], vec![Gen::KInv(i)], 1),
                    ];
                    for (a, sa, sign) in &pairs {
                        for s in &all {
                            let s = SparseTensor::basis(r, *s, LaurentPoly::one());
                            let lhs_vec = act_all(&rep, a, &s);
                            for t in &all {
                                let t = SparseTensor::basis(r, *t, LaurentPoly::one());
                                let lhs = form_b(&LaurentDomain, &ty, &lhs_vec, &t);
                                let rhs = form_b(&LaurentDomain, &ty, &s, &act_all(&rep, sa, &t)).mul(&LaurentPoly::int(*sign));
                                assert_eq!(lhs, rhs, "B{n} r={r} {a:?}");
                            }
                        }
                    }
                }
                for l in letters(r) {
                    let w = BmwWord::new(vec![l]);
                    let wt = w.sigma_tilde(r);
                    for s in &all {
                        let sb = ops.apply_word(&w, &basis_idx(r, *s));
                        for t in &all {
                            let t = basis_idx(r, *t);
                            let lhs = form_b(&LaurentDomain, &ty, &sb, &t);
                            let rhs = form_b(&LaurentDomain, &ty, &basis_idx(r, *s), &ops.apply_word(&wt, &t));
                            assert_eq!(lhs, rhs, "B{n} r={r} {l}");
                        }
                    }
                }
            }
        }
    }

    fn basis_idx(r: usize, idx: TensorIndex) -> SparseTensor<LaurentPoly> {
        SparseTensor::basis(r, idx, LaurentPoly::one())
    }

    fn cd_invariance_failures(ty: LieType, r: usize, conv: BetaConvention) -> usize {
        let rep = NaturalRep::new(ty);
        let ops = TensorOps::new(ty, LaurentDomain);
        let all = TensorIndex::all(ty.dim(), r);
        let f = |s: &SparseTensor<LaurentPoly>, t: &SparseTensor<LaurentPoly>| form_cd_with(&LaurentDomain, &ty, conv, s, t);
        let mut bad = 0;
        for i in 1..=ty.rank() {
            for (a, ta) in [(Gen::E(i), Gen::F(i)), (Gen::F(i), Gen::E(i)), (Gen::K(i), Gen::K(i))] {
                for s in &all {
                    let s = basis_idx(r, *s);
                    let as_ = rep.act(&LaurentDomain, a, &s);
                    for t in &all {
                        let t = basis_idx(r, *t);
                        if f(&as_, &t) != f(&s, &rep.act(&LaurentDomain, ta, &t)) {
                            bad += 1;
                        }
                    }
                }
            }
        }
        for l in letters(r) {
            let w = BmwWord::new(vec![l]);
            for s in &all {
                let s = basis_idx(r, *s);
                let sb = ops.apply_word(&w, &s);
                for t in &all {
                    let t = basis_idx(r, *t);
                    if f(&sb, &t) != f(&s, &ops.apply_word(&w.sigma(), &t)) {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    #[test]
    fn type_cd_invariance_and_symmetry() {
        for (fam, n, rmax) in [(Family::C, 2, 3), (Family::C, 3, 2), (Family::D, 2, 3), (Family::D, 3, 2)] {
            let ty = LieType::new(fam, n).unwrap();
            for r in 1..=rmax {
                assert_eq!(cd_invariance_failures(ty, r, BetaConvention::Unordered), 0, "{fam}{n} r={r}");
                for s in TensorIndex::all(ty.dim(), r) {
                    for t in TensorIndex::all(ty.dim(), r) {
                        let (s, t) = (basis_idx(r, s), basis_idx(r, t));
                        assert_eq!(form_cd(&LaurentDomain, &ty, &s, &t), form_cd(&LaurentDomain, &ty, &t, &s));
                    }
                }
            }
        }
    }

    #[test]
    fn ordered_reading_is_rejected() {
        let ty = LieType::new(Family::C, 2).unwrap();
        assert!(cd_invariance_failures(ty, 2, BetaConvention::Ordered) > 0);
    }

    #[test]
    fn dual_index_reverses() {
        let ty = LieType::new(Family::C, 2).unwrap();
        let d = dual_index(&ty, TensorIndex::from_digits(&[0, 1, 2]), 3);
        assert_eq!(d.digits(3), vec![1, 2, 3]);
    }
}
