//! Operator-level verification suites on `V^{⊗r}`: the commutant property,
//! invariance of `α`, the inverse of `Ř` and the invariant bilinear forms.
//! Each suite returns the names of failing instances, so an empty result
//! means the identity holds exactly.

use std::collections::BTreeMap;

use crate::qgroup::{Family, Gen, LieType, NaturalRep};
use crate::repr::cell::letters;
use crate::scalar::linalg::{Echelon, SparseVec};
use crate::scalar::{Domain, Field, LaurentDomain, LaurentPoly, Ring};
use crate::tensorop::forms::{dual_index, form};
use crate::tensorop::rmatrix::delta;
use crate::tensorop::{alpha, BmwWord, Letter, SparseTensor, TensorIndex, TensorOps};

fn quantum_generators(ty: &LieType) -> Vec<Gen> {
    (1..=ty.rank()).flat_map(|i| [Gen::E(i), Gen::F(i), Gen::K(i), Gen::KInv(i)]).collect()
}

fn basis<D: Domain>(dom: &D, r: usize, idx: TensorIndex) -> SparseTensor<D::Elem> {
    SparseTensor::basis(r, idx, dom.one())
}

/// Generator pairs `(g, letter)` whose actions fail to commute on some basis vector.
pub fn commutant_failures<D: Domain>(ty: LieType, dom: D, r: usize) -> Vec<String> {
    let rep = NaturalRep::new(ty);
    let ops = TensorOps::new(ty, dom.clone());
    let mut bad = Vec::new();
    for g in quantum_generators(&ty) {
        for l in letters(r) {
            let ok = TensorIndex::all(ty.dim(), r).into_iter().all(|idx| {
                let v = basis(&dom, r, idx);
                rep.act(&dom, g, &ops.apply_letter(l, &v)) == ops.apply_letter(l, &rep.act(&dom, g, &v))
            });
            if !ok {
                bad.push(format!("{g} vs {l}"));
            }
        }
    }
    bad
}

/// Checks `e_i α = f_i α = 0` and `k_i α = α`.
pub fn alpha_failures(ty: LieType) -> Vec<String> {
    let rep = NaturalRep::new(ty);
    let a = alpha(&ty);
    let mut bad = Vec::new();
    for g in quantum_generators(&ty) {
        let img = rep.act(&LaurentDomain, g, &a);
        let ok = match g {
            Gen::E(_) | Gen::F(_) => img.is_zero(),
            Gen::K(_) | Gen::KInv(_) => img == a,
        };
        if !ok {
            bad.push(format!("{g} alpha"));
        }
    }
    bad
}

/// Positions `i` where `Ř (Ř − δ(1 − E)) ≠ 1` on `V^{⊗r}`, using only `Ř` and `E`.
pub fn r_inverse_failures<D: Domain>(ty: LieType, dom: D, r: usize) -> Vec<String> {
    let ops = TensorOps::new(ty, dom.clone());
    let d = dom.embed(&delta());
    let mut bad = Vec::new();
    for i in 1..r {
        let inv: Vec<(D::Elem, BmwWord)> =
            vec![(dom.one(), BmwWord::new(vec![Letter::T(i)])), (d.neg(), BmwWord::identity()), (d.clone(), BmwWord::new(vec![Letter::E(i)]))];
        let ok = TensorIndex::all(ty.dim(), r).into_iter().all(|idx| {
            let v = basis(&dom, r, idx);
            ops.apply_combination(&inv, &ops.apply_letter(Letter::T(i), &v)) == v
        });
        if !ok {
            bad.push(format!("R{i} R{i}^-1"));
        }
    }
    bad
}

/// Which involution the BMW side of the adjointness test uses for type B.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BmwAdjoint {
    /// `σ̃ = γ ∘ σ`, as the type-B form requires.
    Twisted,
    /// Plain `σ`, which is wrong for type B.
    Plain,
}

/// Outcome of the bilinear form checks on `V^{⊗r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    pub dim: usize,
    pub gram_rank: usize,
    /// `None` for type B, whose form is not symmetric.
    pub symmetric: Option<bool>,
    pub quantum_failures: Vec<String>,
    pub bmw_failures: Vec<String>,
}

impl FormReport {
    pub fn ok(&self) -> bool {
        self.gram_rank == self.dim && self.symmetric != Some(false) && self.quantum_failures.is_empty() && self.bmw_failures.is_empty()
    }
}

/// The form pairs each basis vector with exactly one partner, so linear
/// functionals `t ↦ ⟨x, t⟩` are stored sparsely by the partner index.
struct MonomialForm<F> {
    partner: BTreeMap<TensorIndex, TensorIndex>,
    weight: BTreeMap<TensorIndex, F>,
}

impl<F: Ring> MonomialForm<F> {
    /// `t ↦ ⟨x, t⟩`.
    fn left(&self, x: &SparseTensor<F>) -> BTreeMap<TensorIndex, F> {
        let mut out: BTreeMap<TensorIndex, F> = BTreeMap::new();
        for (i, c) in x.iter() {
            let val = c.mul(&self.weight[i]);
            accumulate(&mut out, self.partner[i], val);
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

fn accumulate<F: Ring>(m: &mut BTreeMap<TensorIndex, F>, k: TensorIndex, v: F) {
    match m.get_mut(&k) {
        Some(old) => *old = old.add(&v),
        None => {
            m.insert(k, v);
        }
    }
}

/// Images of all basis vectors under an operator.
fn images<D: Domain>(dom: &D, all: &[TensorIndex], r: usize, op: impl Fn(&SparseTensor<D::Elem>) -> SparseTensor<D::Elem>) -> Vec<SparseTensor<D::Elem>> {
    all.iter().map(|i| op(&basis(dom, r, *i))).collect()
}

/// Whether `⟨A s, t⟩ = c ⟨s, B t⟩` for all basis vectors, given the images
/// of `A` and `B`. The right side is assembled column by column from `B`.
fn adjoint<F: Ring>(form: &MonomialForm<F>, all: &[TensorIndex], a: &[SparseTensor<F>], b: &[SparseTensor<F>], c: &F) -> bool {
    // t ↦ ⟨s, B t⟩ = Σ_j (B t)_j ⟨s, v_j⟩, nonzero only for j = partner(s)
    let mut right: BTreeMap<TensorIndex, BTreeMap<TensorIndex, F>> = BTreeMap::new();
    let inverse: BTreeMap<TensorIndex, TensorIndex> = form.partner.iter().map(|(s, p)| (*p, *s)).collect();
    for (t, bt) in all.iter().zip(b) {
        for (j, coef) in bt.iter() {
            let s = inverse[j];
            let val = coef.mul(&form.weight[&s]).mul(c);
            accumulate(right.entry(s).or_default(), *t, val);
        }
    }
    all.iter().zip(a).all(|(s, as_)| {
        let mut r = right.remove(s).unwrap_or_default();
        r.retain(|_, v| !v.is_zero());
        form.left(as_) == r
    })
}

fn monomial_form<D: Domain>(ty: &LieType, dom: &D, all: &[TensorIndex], r: usize) -> MonomialForm<D::Elem> {
    let mut partner = BTreeMap::new();
    let mut weight = BTreeMap::new();
    for &i in all {
        let p = match ty.family {
            Family::B => dual_index(ty, i, r),
            _ => i,
        };
        partner.insert(i, p);
        weight.insert(i, form(dom, ty, &basis(dom, r, i), &basis(dom, r, p)));
    }
    MonomialForm { partner, weight }
}

/// The involution under which words are adjoint for the form of the type.
pub fn adjoint_word(ty: &LieType, w: &BmwWord, r: usize) -> BmwWord {
    match ty.family {
        Family::B => w.sigma_tilde(r),
        _ => w.sigma(),
    }
}

/// Words `w` for which `⟨s w, t⟩ = ⟨s, t w*⟩` fails, with `w*` from [`adjoint_word`].
pub fn word_adjointness_failures<D: Domain>(ty: LieType, dom: D, r: usize, words: &[BmwWord]) -> Vec<String> {
    let all = TensorIndex::all(ty.dim(), r);
    let fm = monomial_form(&ty, &dom, &all, r);
    let ops = TensorOps::new(ty, dom.clone());
    let one = dom.one();
    words
        .iter()
        .filter(|w| {
            let ia = images(&dom, &all, r, |t| ops.apply_word(w, t));
            let ib = images(&dom, &all, r, |t| ops.apply_word(&adjoint_word(&ty, w, r), t));
            !adjoint(&fm, &all, &ia, &ib, &one)
        })
        .map(|w| w.to_string())
        .collect()
}

fn apply_gens<D: Domain>(rep: &NaturalRep, dom: &D, gens: &[Gen], t: &SparseTensor<D::Elem>) -> SparseTensor<D::Elem> {
    gens.iter().rev().fold(t.clone(), |acc, g| rep.act(dom, *g, &acc))
}

/// Symmetry, nondegeneracy and the two adjointness properties of the
/// invariant form of the type. For type B the quantum-group side is
/// `⟨a s, t⟩ = ⟨s, S(a) t⟩` up to the signs of the antipode and the BMW
/// side uses `σ̃`; for types C and D they use `τ` and `σ`.
pub fn form_report<D: Domain>(ty: LieType, dom: D, r: usize, bmw: BmwAdjoint) -> FormReport
where
    D::Elem: Field,
{
    let all = TensorIndex::all(ty.dim(), r);
    let fm = monomial_form(&ty, &dom, &all, r);

    let mut ech = Echelon::new(dom.one(), false);
    let index: BTreeMap<TensorIndex, usize> = all.iter().enumerate().map(|(k, i)| (*i, k)).collect();
    for &i in &all {
        let row: SparseVec<D::Elem> = fm.left(&basis(&dom, r, i)).into_iter().map(|(t, c)| (index[&t], c)).collect();
        ech.insert(row);
    }
    let symmetric = (ty.family != Family::B).then(|| {
        all.iter().all(|&s| {
            let p = fm.partner[&s];
            let there = form(&dom, &ty, &basis(&dom, r, p), &basis(&dom, r, s));
            there == fm.weight[&s]
        })
    });

    let rep = NaturalRep::new(ty);
    let one = dom.one();
    let minus = dom.int(-1);
    let mut quantum_failures = Vec::new();
    for i in 1..=ty.rank() {
        let pairs: Vec<(Gen, Vec<Gen>, &D::Elem)> = match ty.family {
            Family::B => vec![
                (Gen::E(i), vec![Gen::KInv(i), Gen::E(i)], &minus),
                (Gen::F(i), vec![Gen::F(i), Gen::K(i)], &minus),
                (Gen::K(i), vec![Gen::KInv(i)], &one),
            ],
            _ => vec![(Gen::E(i), vec![Gen::F(i)], &one), (Gen::F(i), vec![Gen::E(i)], &one), (Gen::K(i), vec![Gen::K(i)], &one)],
        };
        for (a, b, c) in pairs {
            let ia = images(&dom, &all, r, |t| rep.act(&dom, a, t));
            let ib = images(&dom, &all, r, |t| apply_gens(&rep, &dom, &b, t));
            if !adjoint(&fm, &all, &ia, &ib, c) {
                quantum_failures.push(format!("{a}"));
            }
        }
    }

    let ops = TensorOps::new(ty, dom.clone());
    let mut bmw_failures = Vec::new();
    for l in letters(r) {
        let w = BmwWord::new(vec![l]);
        let partner_word = match bmw {
            BmwAdjoint::Twisted => adjoint_word(&ty, &w, r),
            BmwAdjoint::Plain => w.sigma(),
        };
        let ia = images(&dom, &all, r, |t| ops.apply_word(&w, t));
        let ib = images(&dom, &all, r, |t| ops.apply_word(&partner_word, t));
        if !adjoint(&fm, &all, &ia, &ib, &one) {
            bmw_failures.push(format!("{l}"));
        }
    }

    FormReport { dim: all.len(), gram_rank: ech.rank(), symmetric, quantum_failures, bmw_failures }
}

/// The value `⟨s, t⟩` on two basis vectors, for callers that need one entry.
pub fn form_entry(ty: &LieType, s: &[usize], t: &[usize]) -> LaurentPoly {
    let r = s.len();
    form(&LaurentDomain, ty, &basis(&LaurentDomain, r, TensorIndex::from_digits(s)), &basis(&LaurentDomain, t.len(), TensorIndex::from_digits(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{CyclotomicField, GenericField};

    fn lt(f: Family, n: usize) -> LieType {
        LieType::new(f, n).unwrap()
    }

    #[test]
    fn commutant_and_alpha() {
        for (f, n) in [(Family::B, 2), (Family::C, 2), (Family::D, 3)] {
            assert!(commutant_failures(lt(f, n), CyclotomicField::new(3).unwrap(), 3).is_empty(), "{f}{n}");
            assert!(alpha_failures(lt(f, n)).is_empty(), "{f}{n}");
        }
    }

    #[test]
    fn r_inverse() {
        assert!(r_inverse_failures(lt(Family::B, 3), GenericField, 2).is_empty());
        assert!(r_inverse_failures(lt(Family::D, 3), CyclotomicField::new(4).unwrap(), 3).is_empty());
    }

    #[test]
    fn forms_on_three_strands() {
        for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let rep = form_report(lt(f, n), GenericField, 3, BmwAdjoint::Twisted);
            assert!(rep.ok(), "{f}{n} {rep:?}");
        }
    }

    #[test]
    fn type_b_needs_the_twist() {
        let rep = form_report(lt(Family::B, 3), GenericField, 3, BmwAdjoint::Plain);
        assert!(rep.quantum_failures.is_empty());
        assert!(!rep.bmw_failures.is_empty());
        // r = 2 has a single position, fixed by γ
        assert!(form_report(lt(Family::B, 3), GenericField, 2, BmwAdjoint::Plain).ok());
    }

    #[test]
    fn long_words_are_adjoint() {
        use Letter::{TInv, E, T};
        let words = [BmwWord::new(vec![T(1), E(2), TInv(1)]), BmwWord::new(vec![E(1), T(2), T(2), E(1)])];
        for (f, n) in [(Family::B, 3), (Family::C, 3)] {
            assert!(word_adjointness_failures(lt(f, n), CyclotomicField::new(2).unwrap(), 3, &words).is_empty(), "{f}{n}");
        }
    }

    #[test]
    fn single_entries() {
        let ty = lt(Family::C, 2);
        assert_eq!(form_entry(&ty, &[0, 3], &[0, 3]), LaurentPoly::q_pow(2));
        assert!(form_entry(&ty, &[0, 3], &[3, 0]).is_zero());
    }
}
