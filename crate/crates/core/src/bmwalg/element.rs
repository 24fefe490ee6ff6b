//! Formal linear combinations of words in the BMW generators.

use std::collections::BTreeMap;
use std::fmt;

use crate::combin::{young_subgroup, Partition, Permutation};
use crate::scalar::{LaurentPoly, Ring};
use crate::tensorop::{BmwWord, Letter};

/// `Σ c_w w`. Distinct words may represent the same algebra element; equality
/// in the algebra is decided through the faithful tensor representation.
#[derive(Clone, PartialEq, Eq)]
pub struct BmwElement<E: Ring> {
    terms: BTreeMap<BmwWord, E>,
}

impl<E: Ring> BmwElement<E> {
    pub fn zero() -> Self {
        BmwElement { terms: BTreeMap::new() }
    }

    pub fn word(w: BmwWord, c: E) -> Self {
        let mut x = Self::zero();
        x.add_term(w, c);
        x
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BmwWord, &E)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    pub fn add_term(&mut self, w: BmwWord, c: E) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for (w, c) in &o.terms {
            x.add_term(w.clone(), c.clone());
        }
        x
    }

    pub fn scale(&self, c: &E) -> Self {
        let mut x = Self::zero();
        for (w, a) in &self.terms {
            x.add_term(w.clone(), a.mul(c));
        }
        x
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for (w, c) in &o.terms {
            x.add_term(w.clone(), c.neg());
        }
        x
    }

    /// The product `self · o`: words concatenate.
    pub fn mul(&self, o: &Self) -> Self {
        let mut x = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                x.add_term(a.concat(b), c.mul(d));
            }
        }
        x
    }

    pub fn map_coeffs<F: Ring>(&self, f: impl Fn(&E) -> F) -> BmwElement<F> {
        let mut x = BmwElement::zero();
        for (w, c) in &self.terms {
            x.add_term(w.clone(), f(c));
        }
        x
    }

    /// The anti-involution fixing every generator.
    pub fn sigma(&self) -> Self {
        self.map_words(|w| w.sigma())
    }

    /// The automorphism `T_i ↦ T_{r−i}`, `E_i ↦ E_{r−i}`.
    pub fn gamma(&self, r: usize) -> Self {
        self.map_words(|w| w.gamma(r))
    }

    fn map_words(&self, f: impl Fn(&BmwWord) -> BmwWord) -> Self {
        let mut x = Self::zero();
        for (w, c) in &self.terms {
            x.add_term(f(w), c.clone());
        }
        x
    }

    pub fn as_combination(&self) -> Vec<(E, BmwWord)> {
        self.terms.iter().map(|(w, c)| (c.clone(), w.clone())).collect()
    }
}

impl BmwElement<LaurentPoly> {
    pub fn one() -> Self {
        Self::word(BmwWord::identity(), LaurentPoly::one())
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(BmwWord::new(vec![l]), LaurentPoly::one())
    }
}

impl<E: Ring> fmt::Display for BmwElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*[{w}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<E: Ring> fmt::Debug for BmwElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `T_w` for a reduced word of `w`, with every position shifted by `offset`.
pub fn t_word(w: &Permutation, offset: usize) -> BmwWord {
    BmwWord::new(w.reduced_word().into_iter().map(|i| Letter::T(i + offset)).collect())
}

/// `T_w^* = σ(T_w)`.
pub fn t_word_star(w: &Permutation, offset: usize) -> BmwWord {
    t_word(w, offset).sigma()
}

/// `E^f = E_1 E_3 ⋯ E_{2f−1}`.
pub fn e_power(f: usize) -> BmwWord {
    BmwWord::new((0..f).map(|k| Letter::E(2 * k + 1)).collect())
}

fn young_sum(lambda: &Partition, offset: usize, coeff: impl Fn(usize) -> LaurentPoly) -> BmwElement<LaurentPoly> {
    let mut x = BmwElement::zero();
    for w in young_subgroup(lambda) {
        x.add_term(t_word(&w, offset), coeff(w.length()));
    }
    x
}

/// `m_λ = Σ_{w ∈ 𝔖_λ} q^{ℓ(w)} T_w`, on the strands after `offset`.
pub fn m_lambda(lambda: &Partition, offset: usize) -> BmwElement<LaurentPoly> {
    young_sum(lambda, offset, |l| LaurentPoly::q_pow(l as i32))
}

/// `n_λ = Σ_{w ∈ 𝔖_λ} (−q)^{−ℓ(w)} T_w`, on the strands after `offset`.
pub fn n_lambda(lambda: &Partition, offset: usize) -> BmwElement<LaurentPoly> {
    young_sum(lambda, offset, |l| {
        let m = LaurentPoly::q_pow(-(l as i32));
        if l % 2 == 1 {
            m.neg()
        } else {
            m
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_young_sums() {
        assert_eq!(m_lambda(&Partition::new(vec![1, 1, 1]), 0), BmwElement::one());
        let mut m2 = BmwElement::one();
        m2.add_term(BmwWord::new(vec![Letter::T(1)]), LaurentPoly::q_pow(1));
        assert_eq!(m_lambda(&Partition::new(vec![2]), 0), m2);
        let mut n2 = BmwElement::one();
        n2.add_term(BmwWord::new(vec![Letter::T(1)]), LaurentPoly::q_pow(-1).neg());
        assert_eq!(n_lambda(&Partition::new(vec![2]), 0), n2);
        assert_eq!(n_lambda(&Partition::new(vec![3]), 2).len(), 6);
    }

    #[test]
    fn involutions_on_elements() {
        let x = BmwElement::letter(Letter::T(1)).mul(&BmwElement::letter(Letter::E(2)));
        assert_eq!(x.sigma(), BmwElement::letter(Letter::E(2)).mul(&BmwElement::letter(Letter::T(1))));
        assert_eq!(x.gamma(3).gamma(3), x);
        assert_eq!(e_power(2), BmwWord::new(vec![Letter::E(1), Letter::E(3)]));
    }
}
