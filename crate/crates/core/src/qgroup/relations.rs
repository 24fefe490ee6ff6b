//! The defining relations of the quantum group as operator identities on
//! `V^{⊗r}`.

use super::natural::{Gen, NaturalRep};
use crate::scalar::laurent::qbinomial_u;
use crate::scalar::{LaurentDomain, LaurentPoly};
use crate::tensorop::tensor::{SparseTensor, TensorIndex};

/// A linear combination of words; `[a, b]` acts as `a·b`, so `b` first.
pub type Combination = Vec<(LaurentPoly, Vec<Gen>)>;

/// Outcome of one relation family.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn apply_word(rep: &NaturalRep, word: &[Gen], t: &SparseTensor<LaurentPoly>) -> SparseTensor<LaurentPoly> {
    let mut cur = t.clone();
    for g in word.iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = rep.act(&LaurentDomain, *g, &cur);
    }
    cur
}

fn apply_combination(rep: &NaturalRep, combo: &Combination, t: &SparseTensor<LaurentPoly>) -> SparseTensor<LaurentPoly> {
    let mut out = SparseTensor::zero(t.degree());
    for (c, w) in combo {
        out.add_scaled(&apply_word(rep, w, t), c);
    }
    out
}

/// Whether a combination vanishes on every basis vector of `V^{⊗r}`.
pub fn vanishes(rep: &NaturalRep, combo: &Combination, r: usize) -> bool {
    TensorIndex::all(rep.dim(), r)
        .into_iter()
        .all(|idx| apply_combination(rep, combo, &SparseTensor::basis(r, idx, LaurentPoly::one())).is_zero())
}

/// The relations as combinations that should vanish, grouped by family.
pub fn relation_suite(rep: &NaturalRep) -> Vec<(String, Vec<(String, Combination)>)> {
    let ty = rep.ty;
    let rank = ty.rank();
    let one = LaurentPoly::one;
    let neg = || LaurentPoly::int(-1);
    let v = |k: i32| LaurentPoly::u_pow(ty.v_exp() * k);
    let mut fams = Vec::new();

    let mut kk = Vec::new();
    for i in 1..=rank {
        kk.push((format!("k{i} k{i}^-1 = 1"), vec![(one(), vec![Gen::K(i), Gen::KInv(i)]), (neg(), vec![])]));
        kk.push((format!("k{i}^-1 k{i} = 1"), vec![(one(), vec![Gen::KInv(i), Gen::K(i)]), (neg(), vec![])]));
        for j in i + 1..=rank {
            kk.push((format!("k{i} k{j} = k{j} k{i}"), vec![(one(), vec![Gen::K(i), Gen::K(j)]), (neg(), vec![Gen::K(j), Gen::K(i)])]));
        }
    }
    fams.push(("torus".to_string(), kk));

    let mut conj = Vec::new();
    for i in 1..=rank {
        for j in 1..=rank {
            let a = ty.cartan(i, j) as i32;
            let d = ty.d(i) as i32;
            conj.push((
                format!("k{i} e{j} k{i}^-1 = v^{} e{j}", d * a),
                vec![(one(), vec![Gen::K(i), Gen::E(j), Gen::KInv(i)]), (v(d * a).neg(), vec![Gen::E(j)])],
            ));
            conj.push((
                format!("k{i} f{j} k{i}^-1 = v^{} f{j}", -d * a),
                vec![(one(), vec![Gen::K(i), Gen::F(j), Gen::KInv(i)]), (v(-d * a).neg(), vec![Gen::F(j)])],
            ));
        }
    }
    fams.push(("conjugation".to_string(), conj));

    let mut comm = Vec::new();
    for i in 1..=rank {
        for j in 1..=rank {
            let d = ty.d(i) as i32;
            let scale = v(d).sub(&v(-d));
            let mut c: Combination = vec![(scale.clone(), vec![Gen::E(i), Gen::F(j)]), (scale.neg(), vec![Gen::F(j), Gen::E(i)])];
            if i == j {
                c.push((neg(), vec![Gen::K(i)]));
                c.push((one(), vec![Gen::KInv(i)]));
            }
            comm.push((format!("[e{i}, f{j}]"), c));
        }
    }
    fams.push(("commutator".to_string(), comm));

    let mut serre = Vec::new();
    for i in 1..=rank {
        for j in 1..=rank {
            if i == j {
                continue;
            }
            let m = (1 - ty.cartan(i, j)) as u32;
            let d = ty.d(i);
            for (name, gi, gj) in [("e", Gen::E(i), Gen::E(j)), ("f", Gen::F(i), Gen::F(j))] {
                let mut c = Combination::new();
                for s in 0..=m {
                    let b = qbinomial_u(m - s, s, d, ty.v_exp()).expect("Gaussian binomials are Laurent polynomials");
                    let b = if s % 2 == 1 { b.neg() } else { b };
                    let mut w = vec![gi; (m - s) as usize];
                    w.push(gj);
                    w.extend(std::iter::repeat_n(gi, s as usize));
                    c.push((b, w));
                }
                serre.push((format!("Serre {name}{i},{name}{j}"), c));
            }
        }
    }
    fams.push(("Serre".to_string(), serre));
    fams
}

/// Checks every relation on `V^{⊗r}`.
pub fn check_relations(rep: &NaturalRep, r: usize) -> Vec<RelationCheck> {
    relation_suite(rep)
        .into_iter()
        .map(|(fam, rels)| {
            let mut failures = Vec::new();
            let checked = rels.len();
            for (name, combo) in rels {
                if !vanishes(rep, &combo, r) {
                    failures.push(name);
                }
            }
            RelationCheck { name: fam, checked, failures }
        })
        .collect()
}
