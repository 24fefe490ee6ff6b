//! An independent model of the Iwahori-Hecke algebra `ℋ_r` in the basis
//! `g_w`, with its Murphy-type cellular basis `n_{st}`, Specht-module Gram
//! forms and decomposition matrices. It shares no code with the tensor-space
//! machinery and serves as an oracle for the `f = 0` part of the BMW
//! decomposition matrices.

use std::collections::BTreeMap;

use crate::combin::{d_of, partitions, std_tableaux, young_subgroup, Partition, Permutation, StdTableau};
use crate::error::{BmwError, Result};
use crate::scalar::linalg::{left_kernel, Echelon, SparseVec};
use crate::scalar::{Domain, Field, Ring};

/// `ℋ_r` over the field of a [`Domain`], with `q = u²`.
pub struct Hecke<D: Domain> {
    pub r: usize,
    pub dom: D,
    perms: Vec<Permutation>,
    index: BTreeMap<Permutation, usize>,
    delta: D::Elem,
}

/// An element `Σ c_w g_w`, keyed by the position of `w` in `Permutation::all(r)`.
pub type HeckeElement<F> = BTreeMap<usize, F>;

impl<D: Domain> Hecke<D>
where
    D::Elem: Field,
{
    pub fn new(r: usize, dom: D) -> Self {
        let perms = Permutation::all(r);
        let index = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let delta = dom.u_pow(2).sub(&dom.u_pow(-2));
        Hecke { r, dom, perms, index, delta }
    }

    pub fn dim(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    fn add_to(x: &mut HeckeElement<D::Elem>, k: usize, c: D::Elem) {
        if c.is_zero() {
            return;
        }
        let e = x.entry(k).or_insert_with(|| c.zero_like());
        *e = e.add(&c);
        if e.is_zero() {
            x.remove(&k);
        }
    }

    pub fn basis_element(&self, w: &Permutation) -> HeckeElement<D::Elem> {
        BTreeMap::from([(self.index[w], self.dom.one())])
    }

    /// `x · g_i`, using `g_w g_i = g_{ws_i}` when the length goes up and
    /// `g_{ws_i} + δ g_w` otherwise.
    pub fn mul_gen_right(&self, x: &HeckeElement<D::Elem>, i: usize) -> HeckeElement<D::Elem> {
        let s = Permutation::simple(self.r, i);
        let mut out = BTreeMap::new();
        for (&k, c) in x {
            let w = &self.perms[k];
            let ws = w.mul(&s);
            let up = ws.length() > w.length();
            Self::add_to(&mut out, self.index[&ws], c.clone());
            if !up {
                Self::add_to(&mut out, k, c.mul(&self.delta));
            }
        }
        out
    }

    /// `g_i · x`.
    pub fn mul_gen_left(&self, i: usize, x: &HeckeElement<D::Elem>) -> HeckeElement<D::Elem> {
        let s = Permutation::simple(self.r, i);
        let mut out = BTreeMap::new();
        for (&k, c) in x {
            let w = &self.perms[k];
            let sw = s.mul(w);
            let up = sw.length() > w.length();
            Self::add_to(&mut out, self.index[&sw], c.clone());
            if !up {
                Self::add_to(&mut out, k, c.mul(&self.delta));
            }
        }
        out
    }

    pub fn mul(&self, x: &HeckeElement<D::Elem>, y: &HeckeElement<D::Elem>) -> HeckeElement<D::Elem> {
        let mut out = BTreeMap::new();
        for (&k, c) in y {
            let mut t: HeckeElement<D::Elem> = x.iter().map(|(a, b)| (*a, b.mul(c))).collect();
            for i in self.perms[k].reduced_word() {
                t = self.mul_gen_right(&t, i);
            }
            for (a, b) in t {
                Self::add_to(&mut out, a, b);
            }
        }
        out
    }

    /// `n_μ = Σ_{w ∈ 𝔖_μ} (−q)^{−ℓ(w)} g_w`.
    pub fn n_mu(&self, mu: &Partition) -> HeckeElement<D::Elem> {
        let mut x = BTreeMap::new();
        for w in young_subgroup(mu) {
            let l = w.length() as i32;
            let mut c = self.dom.u_pow(-2 * l);
            if l % 2 == 1 {
                c = c.neg();
            }
            Self::add_to(&mut x, self.index[&w], c);
        }
        x
    }

    /// `n_{st} = g_{d(s)}^* n_μ g_{d(t)}`.
    pub fn n_st(&self, s: &StdTableau, t: &StdTableau) -> HeckeElement<D::Elem> {
        let mut x = self.n_mu(s.shape());
        // g_{d}^* = g_{i_k} ⋯ g_{i_1}: multiply on the left by g_{i_1} last.
        for i in d_of(s).reduced_word() {
            x = self.mul_gen_left(i, &x);
        }
        for i in d_of(t).reduced_word() {
            x = self.mul_gen_right(&x, i);
        }
        x
    }
}

/// The cellular data of `ℋ_r` in the `n`-basis, with Specht modules,
/// simple heads and decomposition numbers.
pub struct HeckeCells<D: Domain>
where
    D::Elem: Field,
{
    pub hecke: Hecke<D>,
    pub shapes: Vec<Partition>,
    tableaux: Vec<Vec<StdTableau>>,
    /// `(shape, s, t)` for each cellular basis element, in insertion order.
    keys: Vec<(usize, usize, usize)>,
    echelon: Echelon<D::Elem>,
}

/// A Specht module `C(μ)` of `ℋ_r` with its Gram matrix, generator action
/// and simple head.
pub struct HeckeCellModule<F: Field> {
    pub shape: Partition,
    pub gram: Vec<Vec<F>>,
    /// Row `t` holds the coordinates of `C_t · g_i`.
    pub gens: Vec<Vec<Vec<F>>>,
    pub simple_dim: usize,
    quotient: Vec<usize>,
    radical: Echelon<F>,
}

impl<D: Domain> HeckeCells<D>
where
    D::Elem: Field,
{
    pub fn new(r: usize, dom: D) -> Result<Self> {
        let hecke = Hecke::new(r, dom);
        let shapes = partitions(r, None);
        let tableaux: Vec<Vec<StdTableau>> = shapes.iter().map(std_tableaux).collect();
        let mut echelon = Echelon::new(hecke.dom.one(), true);
        let mut keys = Vec::new();
        for (si, ts) in tableaux.iter().enumerate() {
            for (a, s) in ts.iter().enumerate() {
                for (b, t) in ts.iter().enumerate() {
                    if !matches!(echelon.insert(hecke.n_st(s, t)), crate::scalar::linalg::Insert::Independent(_)) {
                        return Err(BmwError::Check("the n-basis of the Hecke algebra is dependent".into()));
                    }
                    keys.push((si, a, b));
                }
            }
        }
        Ok(HeckeCells { hecke, shapes, tableaux, keys, echelon })
    }

    fn expand(&self, x: &HeckeElement<D::Elem>) -> BTreeMap<(usize, usize, usize), D::Elem> {
        let c = self.echelon.coordinates(x.clone()).expect("the n-basis spans the Hecke algebra");
        c.into_iter().map(|(k, v)| (self.keys[k], v)).collect()
    }

    /// Builds `C(μ)` in the basis `n_{t^μ t} + ℋ^{>μ}`.
    pub fn cell_module(&self, si: usize) -> Result<HeckeCellModule<D::Elem>> {
        let h = &self.hecke;
        let ts = &self.tableaux[si];
        let t0 = &ts[0];
        let zero = h.dom.zero();
        let dim = ts.len();
        let mut gram = vec![vec![zero.clone(); dim]; dim];
        for (a, t) in ts.iter().enumerate() {
            for (b, u) in ts.iter().enumerate() {
                let p = h.mul(&h.n_st(t0, t), &h.n_st(u, t0));
                gram[a][b] = self.expand(&p).remove(&(si, 0, 0)).unwrap_or_else(|| zero.clone());
            }
        }
        let mut gens = Vec::new();
        for i in 1..h.r {
            let mut m = vec![vec![zero.clone(); dim]; dim];
            for (a, t) in ts.iter().enumerate() {
                let img = h.mul_gen_right(&h.n_st(t0, t), i);
                for ((s2, x, y), c) in self.expand(&img) {
                    if s2 != si {
                        continue;
                    }
                    if x != 0 {
                        return Err(BmwError::Check(format!("Hecke cell module {}: row index moved", self.shapes[si])));
                    }
                    m[a][y] = c;
                }
            }
            gens.push(m);
        }
        let rows: Vec<SparseVec<D::Elem>> = gram.iter().map(|r| crate::scalar::linalg::dense_to_sparse(r)).collect();
        let mut radical = Echelon::new(h.dom.one(), false);
        for v in left_kernel(&rows, &zero, &h.dom.one()) {
            radical.insert(crate::scalar::linalg::dense_to_sparse(&v));
        }
        let quotient: Vec<usize> = (0..dim).filter(|k| !radical.pivots().contains(k)).collect();
        Ok(HeckeCellModule { shape: self.shapes[si].clone(), gram, gens, simple_dim: quotient.len(), quotient, radical })
    }

    /// Decomposition numbers `[C(μ) : D(ν)]` keyed by `(μ, ν)`, with `ν`
    /// ranging over shapes whose simple head is nonzero.
    pub fn decomposition(&self) -> Result<BTreeMap<(Partition, Partition), i64>> {
        let mods: Vec<HeckeCellModule<D::Elem>> = (0..self.shapes.len()).map(|i| self.cell_module(i)).collect::<Result<_>>()?;
        let h = &self.hecke;
        let words: Vec<Vec<usize>> = h.perms().iter().map(|w| w.reduced_word()).collect();
        let one = h.dom.one();
        let simple_chars: Vec<(usize, SparseVec<D::Elem>)> = mods
            .iter()
            .enumerate()
            .filter(|(_, m)| m.simple_dim > 0)
            .map(|(i, m)| (i, crate::scalar::linalg::dense_to_sparse(&words.iter().map(|w| m.simple_trace(w, &one)).collect::<Vec<_>>())))
            .collect();
        let mut ech = Echelon::new(one.clone(), true);
        for (_, ch) in &simple_chars {
            if !matches!(ech.insert(ch.clone()), crate::scalar::linalg::Insert::Independent(_)) {
                return Err(BmwError::Check("Hecke simple characters are dependent".into()));
            }
        }
        let mut out = BTreeMap::new();
        for (mi, m) in mods.iter().enumerate() {
            let ch = crate::scalar::linalg::dense_to_sparse(&words.iter().map(|w| m.cell_trace(w, &one)).collect::<Vec<_>>());
            let coords = ech
                .coordinates(ch)
                .ok_or_else(|| BmwError::Check(format!("Hecke character of {} is not a combination of simples", m.shape)))?;
            for (k, (ni, _)) in simple_chars.iter().enumerate() {
                let c = coords.get(&k).map(|c| c.as_rational()).unwrap_or(Some(crate::scalar::Rat::ZERO));
                let d = c
                    .and_then(|c| c.to_i64())
                    .filter(|d| *d >= 0)
                    .ok_or_else(|| BmwError::Check(format!("Hecke decomposition number at ({}, {}) is not a non-negative integer", m.shape, self.shapes[*ni])))?;
                out.insert((self.shapes[mi].clone(), self.shapes[*ni].clone()), d);
            }
        }
        Ok(out)
    }
}

fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).fold(row[0].zero_like(), |acc, (x, br)| acc.add(&x.mul(&br[j]))))
                .collect()
        })
        .collect()
}

impl<F: Field> HeckeCellModule<F> {
    fn word_matrix(&self, word: &[usize], one: &F) -> Vec<Vec<F>> {
        let n = self.gram.len();
        let mut m: Vec<Vec<F>> = (0..n).map(|i| (0..n).map(|j| if i == j { one.clone() } else { one.zero_like() }).collect()).collect();
        for &i in word {
            m = mat_mul(&m, &self.gens[i - 1]);
        }
        m
    }

    pub fn cell_trace(&self, word: &[usize], one: &F) -> F {
        if self.gram.is_empty() {
            return one.zero_like();
        }
        let m = self.word_matrix(word, one);
        (0..m.len()).fold(one.zero_like(), |acc, i| acc.add(&m[i][i]))
    }

    /// Trace on `C(μ)/rad`: reduce each quotient basis vector's image modulo
    /// the radical and read off its own coordinate.
    pub fn simple_trace(&self, word: &[usize], one: &F) -> F {
        let m = self.word_matrix(word, one);
        let mut acc = one.zero_like();
        for &j in &self.quotient {
            let v = self.radical.reduce(crate::scalar::linalg::dense_to_sparse(&m[j]));
            if let Some(c) = v.get(&j) {
                acc = acc.add(c);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{CyclotomicField, RationalPoint};

    #[test]
    fn quadratic_relation() {
        let h = Hecke::new(3, RationalPoint::default());
        let g1 = h.basis_element(&Permutation::simple(3, 1));
        let sq = h.mul(&g1, &g1);
        let one = h.basis_element(&Permutation::identity(3));
        let q = h.dom.u_pow(2);
        let delta = q.sub(&h.dom.u_pow(-2));
        // g² = 1 + δ g
        let mut expect = one.clone();
        expect.insert(h.index[&Permutation::simple(3, 1)], delta);
        assert_eq!(sq, expect);
        // braid relation
        let g2 = h.basis_element(&Permutation::simple(3, 2));
        assert_eq!(h.mul(&h.mul(&g1, &g2), &g1), h.mul(&h.mul(&g2, &g1), &g2));
    }

    #[test]
    fn generic_specht_dimensions() {
        for r in 2..=4 {
            let cells = HeckeCells::new(r, RationalPoint::default()).unwrap();
            for (i, mu) in cells.shapes.iter().enumerate() {
                let m = cells.cell_module(i).unwrap();
                assert_eq!(m.gram.len() as u128, mu.hook_dimension());
                assert_eq!(m.simple_dim, m.gram.len(), "{mu}");
            }
        }
    }

    #[test]
    fn small_root_of_unity_cases() {
        // e = 2, r = 2: C((2)) has head D((1,1)), C((1,1)) is simple.
        let cells = HeckeCells::new(2, CyclotomicField::new(2).unwrap()).unwrap();
        let d = cells.decomposition().unwrap();
        let p = |v: Vec<usize>| Partition::new(v);
        assert_eq!(d[&(p(vec![2]), p(vec![1, 1]))], 1);
        assert_eq!(d[&(p(vec![1, 1]), p(vec![1, 1]))], 1);
        assert_eq!(d.len(), 2);
        // e = 3, r = 3: the hook (2,1) is a composition factor of both
        // one-row and one-column shapes.
        let cells = HeckeCells::new(3, CyclotomicField::new(3).unwrap()).unwrap();
        let d = cells.decomposition().unwrap();
        let nonzero: Vec<_> = d.iter().filter(|(_, v)| **v != 0).map(|(k, v)| (k.0.to_string(), k.1.to_string(), *v)).collect();
        assert_eq!(nonzero.len(), 4, "{nonzero:?}");
        assert_eq!(d[&(p(vec![3]), p(vec![2, 1]))], 1);
        assert_eq!(d[&(p(vec![2, 1]), p(vec![1, 1, 1]))], 1);
    }
}
