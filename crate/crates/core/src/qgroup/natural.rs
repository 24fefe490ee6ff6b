//! The natural representation `V` and the tensor-space action through the
//! coproduct `Δ(e) = e⊗1 + k⊗e`, `Δ(f) = f⊗k⁻¹ + 1⊗f`, `Δ(k) = k⊗k`.

use std::collections::HashMap;
use std::fmt;

use super::lie::{Family, LieType};
use crate::error::Result;
use crate::scalar::laurent::{qfactorial_u, qint_u};
use crate::scalar::{Domain, LaurentPoly, Ring};
use crate::tensorop::tensor::{SparseTensor, TensorIndex};

/// A Chevalley generator; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(i) => write!(f, "e{i}"),
            Gen::F(i) => write!(f, "f{i}"),
            Gen::K(i) => write!(f, "k{i}"),
            Gen::KInv(i) => write!(f, "k{i}^-1"),
        }
    }
}

/// One column entry of a raising or lowering operator on `V`.
type Entry = Option<(usize, LaurentPoly)>;

/// Matrices of `e_i`, `f_i`, `k_i` on `V`. Every `e_i` and `f_i` sends each
/// basis vector to a multiple of at most one basis vector, and `k_i` is
/// diagonal with entries `u^{k_exp}`.
#[derive(Clone, Debug)]
pub struct NaturalRep {
    pub ty: LieType,
    e: Vec<Vec<Entry>>,
    f: Vec<Vec<Entry>>,
    k_exp: Vec<Vec<i32>>,
}

impl NaturalRep {
    pub fn new(ty: LieType) -> Self {
        let nd = ty.dim();
        let rank = ty.rank();
        let mut e = vec![vec![None; nd]; rank];
        let mut f = vec![vec![None; nd]; rank];
        let mut k_exp = vec![vec![0i32; nd]; rank];
        let one = LaurentPoly::one;
        let minus_one = || LaurentPoly::int(-1);
        let n = ty.n;
        for i in 1..=rank {
            let (a, b) = (i - 1, i);
            let row = i - 1;
            if ty.family == Family::A || i < n {
                e[row][b] = Some((a, one()));
                f[row][a] = Some((b, one()));
                k_exp[row][a] = 2;
                k_exp[row][b] = -2;
                if ty.family != Family::A {
                    let (ap, bp) = (ty.prime(a), ty.prime(b));
                    e[row][ap] = Some((bp, minus_one()));
                    f[row][bp] = Some((ap, minus_one()));
                    k_exp[row][bp] = 2;
                    k_exp[row][ap] = -2;
                }
                continue;
            }
            let last = n - 1;
            let last_p = ty.prime(last);
            match ty.family {
                Family::B => {
                    let two = qint_u(2, 1);
                    e[row][n] = Some((last, one()));
                    e[row][last_p] = Some((n, LaurentPoly::u_pow(-1).neg()));
                    f[row][last] = Some((n, two.clone()));
                    f[row][n] = Some((last_p, two.mul(&LaurentPoly::u_pow(1)).neg()));
                    k_exp[row][last] = 2;
                    k_exp[row][last_p] = -2;
                }
                Family::C => {
                    e[row][last_p] = Some((last, one()));
                    f[row][last] = Some((last_p, one()));
                    k_exp[row][last] = 4;
                    k_exp[row][last_p] = -4;
                }
                Family::D => {
                    let prev = n - 2;
                    let prev_p = ty.prime(prev);
                    e[row][last_p] = Some((prev, one()));
                    e[row][prev_p] = Some((last, minus_one()));
                    f[row][prev] = Some((last_p, one()));
                    f[row][last] = Some((prev_p, minus_one()));
                    for k in [prev, last] {
                        k_exp[row][k] = 2;
                    }
                    for k in [prev_p, last_p] {
                        k_exp[row][k] = -2;
                    }
                }
                Family::A => unreachable!(),
            }
        }
        NaturalRep { ty, e, f, k_exp }
    }

    pub fn dim(&self) -> usize {
        self.ty.dim()
    }

    /// `g · v_k` on `V` as an optional `(target, coefficient)`.
    pub fn apply_basis(&self, g: Gen, k: usize) -> Entry {
        match g {
            Gen::E(i) => self.e[i - 1][k].clone(),
            Gen::F(i) => self.f[i - 1][k].clone(),
            Gen::K(i) => Some((k, LaurentPoly::u_pow(self.k_exp[i - 1][k]))),
            Gen::KInv(i) => Some((k, LaurentPoly::u_pow(-self.k_exp[i - 1][k]))),
        }
    }

    /// Exponent of `u` in `k_i v_k`.
    pub fn k_exponent(&self, i: usize, k: usize) -> i32 {
        self.k_exp[i - 1][k]
    }

    /// Dense matrix of a generator on `V`: `m[row][col]`, column `k` holding `g v_k`.
    pub fn matrix(&self, g: Gen) -> Vec<Vec<LaurentPoly>> {
        let nd = self.dim();
        let mut m = vec![vec![LaurentPoly::zero(); nd]; nd];
        for k in 0..nd {
            if let Some((t, c)) = self.apply_basis(g, k) {
                m[t][k] = c;
            }
        }
        m
    }

    /// The `r`-fold iterated coproduct of `g` applied to `t`.
    pub fn act<D: Domain>(&self, dom: &D, g: Gen, t: &SparseTensor<D::Elem>) -> SparseTensor<D::Elem> {
        let r = t.degree();
        let mut out = SparseTensor::zero(r);
        let mut powers: HashMap<i32, D::Elem> = HashMap::new();
        let mut upow = |k: i32| powers.entry(k).or_insert_with(|| dom.u_pow(k)).clone();
        match g {
            Gen::K(i) | Gen::KInv(i) => {
                let sign = if matches!(g, Gen::K(_)) { 1 } else { -1 };
                for (idx, c) in t.iter() {
                    let s: i32 = (0..r).map(|p| self.k_exp[i - 1][idx.get(p, r)]).sum();
                    out.add_term(*idx, c.mul(&upow(sign * s)));
                }
            }
            Gen::E(i) => {
                let table: Vec<Option<(usize, D::Elem)>> =
                    self.e[i - 1].iter().map(|x| x.as_ref().map(|(t, c)| (*t, dom.embed(c)))).collect();
                for (idx, c) in t.iter() {
                    let mut prefix = 0i32;
                    for p in 0..r {
                        let k = idx.get(p, r);
                        if let Some((tgt, coef)) = &table[k] {
                            out.add_term(idx.with(p, r, *tgt), c.mul(coef).mul(&upow(prefix)));
                        }
                        prefix += self.k_exp[i - 1][k];
                    }
                }
            }
            Gen::F(i) => {
                let table: Vec<Option<(usize, D::Elem)>> =
                    self.f[i - 1].iter().map(|x| x.as_ref().map(|(t, c)| (*t, dom.embed(c)))).collect();
                for (idx, c) in t.iter() {
                    let mut suffix = 0i32;
                    for p in (0..r).rev() {
                        let k = idx.get(p, r);
                        if let Some((tgt, coef)) = &table[k] {
                            out.add_term(idx.with(p, r, *tgt), c.mul(coef).mul(&upow(-suffix)));
                        }
                        suffix += self.k_exp[i - 1][k];
                    }
                }
            }
        }
        out
    }

    /// `[k]!_{d_i}` in the variable `v`.
    pub fn divided_power_denominator(&self, i: usize, k: u32) -> LaurentPoly {
        qfactorial_u(k, self.ty.d(i), self.ty.v_exp())
    }

    /// `e_i^{(k)} t` or `f_i^{(k)} t` over the integral form: `k` applications
    /// followed by an exact division by `[k]!_{d_i}`.
    pub fn act_divided_power(&self, g: Gen, k: u32, t: &SparseTensor<LaurentPoly>) -> Result<SparseTensor<LaurentPoly>> {
        let i = match g {
            Gen::E(i) | Gen::F(i) => i,
            _ => panic!("divided powers are defined for e_i and f_i"),
        };
        let dom = crate::scalar::LaurentDomain;
        let mut cur = t.clone();
        for _ in 0..k {
            cur = self.act(&dom, g, &cur);
        }
        let den = self.divided_power_denominator(i, k);
        let mut out = std::collections::BTreeMap::new();
        for (idx, c) in cur.iter() {
            out.insert(*idx, c.exact_divide(&den)?);
        }
        Ok(SparseTensor::from_terms(t.degree(), out))
    }

    /// Scaled weight of a tensor basis vector (see [`LieType::weight_of_basis`]).
    pub fn weight_of(&self, idx: TensorIndex, r: usize) -> Vec<i64> {
        let mut w = vec![0i64; self.ty.weight_len()];
        for p in 0..r {
            for (a, b) in w.iter_mut().zip(self.ty.weight_of_basis(idx.get(p, r))) {
                *a += b;
            }
        }
        w
    }

    /// `α = Σ_k q^{ρ_{k′}} ε_{k′} v_k ⊗ v_{k′}`, which spans a trivial submodule of `V^{⊗2}`.
    pub fn invariant_vector(&self) -> SparseTensor<LaurentPoly> {
        let ty = self.ty;
        let mut t = SparseTensor::zero(2);
        for k in 0..ty.dim() {
            let kp = ty.prime(k);
            let c = LaurentPoly::u_pow(ty.rho2(kp) as i32).scale(&crate::scalar::Rat::int(ty.epsilon(kp)));
            t.add_term(TensorIndex::from_digits(&[k, kp]), c);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentDomain;

    fn rep(f: Family, n: usize) -> NaturalRep {
        NaturalRep::new(LieType::new(f, n).unwrap())
    }

    fn basis(r: usize, d: &[usize]) -> SparseTensor<LaurentPoly> {
        SparseTensor::basis(r, TensorIndex::from_digits(d), LaurentPoly::one())
    }

    #[test]
    fn lemma_entries() {
        let a = rep(Family::A, 3);
        assert_eq!(a.apply_basis(Gen::E(1), 1), Some((0, LaurentPoly::one())));
        assert_eq!(a.apply_basis(Gen::E(1), 2), None);
        let b = rep(Family::B, 2);
        // e_n v_{n'} = -q^{-1/2} v_{n+1} with n = 2, n' = 4
        assert_eq!(b.apply_basis(Gen::E(2), 3), Some((2, LaurentPoly::u_pow(-1).neg())));
        let c = rep(Family::C, 2);
        assert_eq!(c.apply_basis(Gen::F(2), 1), Some((2, LaurentPoly::one())));
        for k in [0, 2, 3] {
            assert_eq!(c.apply_basis(Gen::F(2), k), None);
        }
        let d = rep(Family::D, 3);
        // e_n v_{(n-1)'} = -v_n
        assert_eq!(d.apply_basis(Gen::E(3), 4), Some((2, LaurentPoly::int(-1))));
    }

    #[test]
    fn k_matches_weights() {
        for r in [rep(Family::A, 3), rep(Family::B, 3), rep(Family::C, 3), rep(Family::D, 4)] {
            let ty = r.ty;
            for i in 1..=ty.rank() {
                for k in 0..ty.dim() {
                    let wt = ty.weight_of_basis(k);
                    let expect = ty.v_exp() * ty.d(i) as i32 * ty.pairing(&wt, i) as i32;
                    assert_eq!(r.k_exponent(i, k), expect, "{ty} i={i} k={k}");
                }
            }
        }
    }

    #[test]
    fn coproduct_on_two_factors() {
        // type C: e_1 (v_2 ⊗ v_2) = v_1 ⊗ v_2 + q^{-1} v_2 ⊗ v_1
        let c = rep(Family::C, 2);
        let t = c.act(&LaurentDomain, Gen::E(1), &basis(2, &[1, 1]));
        let mut expect = basis(2, &[0, 1]);
        expect.add_term(TensorIndex::from_digits(&[1, 0]), LaurentPoly::q_pow(-1));
        assert_eq!(t, expect);
    }

    #[test]
    fn invariant_vector_is_killed() {
        for r in [rep(Family::B, 2), rep(Family::C, 3), rep(Family::D, 3)] {
            let a = r.invariant_vector();
            for i in 1..=r.ty.rank() {
                assert!(r.act(&LaurentDomain, Gen::E(i), &a).is_zero());
                assert!(r.act(&LaurentDomain, Gen::F(i), &a).is_zero());
                assert_eq!(r.act(&LaurentDomain, Gen::K(i), &a), a);
            }
        }
    }

    #[test]
    fn divided_powers_on_the_natural_basis() {
        let b = rep(Family::B, 2);
        let dom = LaurentDomain;
        // e_n^2 v_{n'} = -q^{-1/2} v_n, which [2]_{q^{1/2}} does not divide
        let sq = b.act(&dom, Gen::E(2), &b.act(&dom, Gen::E(2), &basis(1, &[3])));
        assert_eq!(sq, basis(1, &[1]).scale(&LaurentPoly::u_pow(-1).neg()));
        assert!(matches!(
            b.act_divided_power(Gen::E(2), 2, &basis(1, &[3])),
            Err(crate::error::BmwError::InexactDivision(_))
        ));
        // f_n^{(2)} v_n = -q^{1/2}[2] v_{n'} is integral
        let f2 = b.act_divided_power(Gen::F(2), 2, &basis(1, &[1])).unwrap();
        assert_eq!(f2, basis(1, &[3]).scale(&qint_u(2, 1).mul(&LaurentPoly::u_pow(1)).neg()));
        let e1 = b.act_divided_power(Gen::E(2), 1, &basis(1, &[3])).unwrap();
        assert_eq!(e1, basis(1, &[2]).scale(&LaurentPoly::u_pow(-1).neg()));
        assert!(b.act_divided_power(Gen::E(1), 3, &basis(1, &[4])).unwrap().is_zero());
    }
}
