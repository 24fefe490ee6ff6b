//! The defining relations of the BMW algebra checked as operator identities
//! on tensor space.

use super::rmatrix::{BmwWord, Letter, TensorOps};
use super::tensor::{SparseTensor, TensorIndex};
use crate::qgroup::relations::RelationCheck;
use crate::scalar::{Domain, Ring};

/// A formal combination of words.
pub type WordCombination<E> = Vec<(E, BmwWord)>;

fn w(ls: &[Letter]) -> BmwWord {
    BmwWord::new(ls.to_vec())
}

/// The relations of the algebra on `r` strands as combinations that should
/// act as zero, grouped by family.
pub fn bmw_relation_suite<D: Domain>(ops: &TensorOps<D>, r: usize) -> Vec<(String, Vec<(String, WordCombination<D::Elem>)>)> {
    use Letter::{TInv, E, T};
    let dom = &ops.dom;
    let one = dom.one();
    let m1 = dom.int(-1);
    let q = dom.u_pow(2);
    let qi = dom.u_pow(-2);
    let vr = ops.varrho();
    let vri = dom.embed(&ops.ty.varrho().inv_monomial().expect("ϱ is a monomial"));
    let delta = q.sub(&qi);
    let mut fams = Vec::new();

    let mut cubic = Vec::new();
    for i in 1..r {
        // (T − q)(T + q⁻¹)(T − ϱ⁻¹) = T³ + c2 T² + c1 T + c0
        let c2 = qi.sub(&q).sub(&vri);
        let c1 = m1.add(&vri.mul(&q.sub(&qi)));
        let c0 = vri.clone();
        cubic.push((
            format!("(T{i}-q)(T{i}+q^-1)(T{i}-rho^-1)"),
            vec![(one.clone(), w(&[T(i), T(i), T(i)])), (c2, w(&[T(i), T(i)])), (c1, w(&[T(i)])), (c0, w(&[]))],
        ));
    }
    fams.push(("cubic".to_string(), cubic));

    let mut braid = Vec::new();
    for i in 1..r.saturating_sub(1) {
        braid.push((
            format!("T{i}T{}T{i} = T{}T{i}T{}", i + 1, i + 1, i + 1),
            vec![(one.clone(), w(&[T(i), T(i + 1), T(i)])), (m1.clone(), w(&[T(i + 1), T(i), T(i + 1)]))],
        ));
    }
    fams.push(("braid".to_string(), braid));

    let mut far = Vec::new();
    for i in 1..r {
        for j in i + 2..r {
            far.push((format!("T{i}T{j} = T{j}T{i}"), vec![(one.clone(), w(&[T(i), T(j)])), (m1.clone(), w(&[T(j), T(i)]))]));
        }
    }
    fams.push(("commutation".to_string(), far));

    let mut tangle = Vec::new();
    for i in 1..r {
        for j in [i.wrapping_sub(1), i + 1] {
            if j == 0 || j >= r {
                continue;
            }
            tangle.push((format!("E{i}T{j}E{i} = rho E{i}"), vec![(one.clone(), w(&[E(i), T(j), E(i)])), (vr.neg(), w(&[E(i)]))]));
            tangle.push((
                format!("E{i}T{j}^-1E{i} = rho^-1 E{i}"),
                vec![(one.clone(), w(&[E(i), TInv(j), E(i)])), (vri.neg(), w(&[E(i)]))],
            ));
        }
    }
    fams.push(("tangle".to_string(), tangle));

    let mut untwist = Vec::new();
    for i in 1..r {
        untwist.push((format!("E{i}T{i} = rho^-1 E{i}"), vec![(one.clone(), w(&[E(i), T(i)])), (vri.neg(), w(&[E(i)]))]));
        untwist.push((format!("T{i}E{i} = rho^-1 E{i}"), vec![(one.clone(), w(&[T(i), E(i)])), (vri.neg(), w(&[E(i)]))]));
    }
    fams.push(("untwist".to_string(), untwist));

    let mut inv = Vec::new();
    for i in 1..r {
        inv.push((
            format!("T{i} - T{i}^-1 = delta(1 - E{i})"),
            vec![(one.clone(), w(&[T(i)])), (m1.clone(), w(&[TInv(i)])), (delta.neg(), w(&[])), (delta.clone(), w(&[E(i)]))],
        ));
        inv.push((format!("T{i} T{i}^-1 = 1"), vec![(one.clone(), w(&[T(i), TInv(i)])), (m1.clone(), w(&[]))]));
    }
    fams.push(("inverse".to_string(), inv));
    fams
}

/// Whether a combination acts as zero on every basis vector of `V^{⊗r}`.
pub fn acts_as_zero<D: Domain>(ops: &TensorOps<D>, x: &WordCombination<D::Elem>, r: usize) -> bool {
    let one = ops.dom.one();
    TensorIndex::all(ops.ty.dim(), r)
        .into_iter()
        .all(|idx| ops.apply_combination(x, &SparseTensor::basis(r, idx, one.clone())).is_zero())
}

/// Checks every relation of the suite on `V^{⊗r}`.
pub fn check_bmw_relations<D: Domain>(ops: &TensorOps<D>, r: usize) -> Vec<RelationCheck> {
    bmw_relation_suite(ops, r)
        .into_iter()
        .map(|(name, rels)| {
            let checked = rels.len();
            let failures = rels.into_iter().filter(|(_, x)| !acts_as_zero(ops, x, r)).map(|(n, _)| n).collect();
            RelationCheck { name, checked, failures }
        })
        .collect()
}
