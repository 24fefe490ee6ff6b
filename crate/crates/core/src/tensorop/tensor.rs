//! Sparse vectors in `V^{⊗r}` on the basis `v_𝐢 = v_{i_1} ⊗ ⋯ ⊗ v_{i_r}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Ring;

const BITS: u32 = 5;
const MASK: u64 = (1 << BITS) - 1;

/// Largest supported `N = dim V`.
pub const MAX_DIM: usize = 1 << BITS;
/// Largest supported tensor degree.
pub const MAX_DEGREE: usize = (64 / BITS) as usize;

/// A multi-index `𝐢 ∈ I(N, r)` with 0-based entries, packed so that the
/// numeric order is the lexicographic order of `(i_1, …, i_r)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorIndex(u64);

impl TensorIndex {
    pub fn from_digits(d: &[usize]) -> Self {
        assert!(d.len() <= MAX_DEGREE);
        let mut x = 0u64;
        for &i in d {
            assert!(i < MAX_DIM);
            x = (x << BITS) | i as u64;
        }
        TensorIndex(x)
    }

    /// Entry at 0-based position `p` of an `r`-fold index.
    #[inline]
    pub fn get(self, p: usize, r: usize) -> usize {
        ((self.0 >> (BITS as usize * (r - 1 - p))) & MASK) as usize
    }

    #[inline]
    pub fn with(self, p: usize, r: usize, v: usize) -> Self {
        let sh = BITS as usize * (r - 1 - p);
        TensorIndex((self.0 & !(MASK << sh)) | ((v as u64) << sh))
    }

    pub fn digits(self, r: usize) -> Vec<usize> {
        (0..r).map(|p| self.get(p, r)).collect()
    }

    /// The packed representation; stable for a fixed `r`.
    pub fn raw(self) -> u64 {
        self.0
    }

    /// Every index of `I(N, r)` in lexicographic order.
    pub fn all(n_dim: usize, r: usize) -> Vec<TensorIndex> {
        let total = n_dim.checked_pow(r as u32).expect("tensor space too large");
        let mut out = Vec::with_capacity(total);
        let mut d = vec![0usize; r];
        loop {
            out.push(Self::from_digits(&d));
            let mut p = r;
            loop {
                if p == 0 {
                    return out;
                }
                p -= 1;
                d[p] += 1;
                if d[p] < n_dim {
                    break;
                }
                d[p] = 0;
            }
        }
    }
}

impl fmt::Debug for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{:x}", self.0)
    }
}

/// A finitely supported vector of `V^{⊗r}` with coefficients in `E`.
#[derive(Clone, PartialEq)]
pub struct SparseTensor<E: Ring> {
    r: usize,
    terms: BTreeMap<TensorIndex, E>,
}

impl<E: Ring> SparseTensor<E> {
    pub fn zero(r: usize) -> Self {
        SparseTensor { r, terms: BTreeMap::new() }
    }

    pub fn basis(r: usize, idx: TensorIndex, one: E) -> Self {
        let mut t = Self::zero(r);
        t.terms.insert(idx, one);
        t
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TensorIndex, &E)> {
        self.terms.iter()
    }

    pub fn terms(&self) -> &BTreeMap<TensorIndex, E> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<TensorIndex, E> {
        self.terms
    }

    pub fn from_terms(r: usize, terms: BTreeMap<TensorIndex, E>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SparseTensor { r, terms }
    }

    pub fn coeff(&self, idx: TensorIndex) -> Option<&E> {
        self.terms.get(&idx)
    }

    /// Adds `c · v_idx`.
    pub fn add_term(&mut self, idx: TensorIndex, c: E) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(x) => {
                x.add_assign(&c);
                if x.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &E) {
        for (k, x) in &other.terms {
            self.add_term(*k, x.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (k, x) in &other.terms {
            s.add_term(*k, x.clone());
        }
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (k, x) in &other.terms {
            s.add_term(*k, x.neg());
        }
        s
    }

    pub fn scale(&self, c: &E) -> Self {
        if c.is_zero() {
            return Self::zero(self.r);
        }
        SparseTensor { r: self.r, terms: self.terms.iter().map(|(k, x)| (*k, x.mul(c))).collect() }
            .cleaned()
    }

    pub fn neg(&self) -> Self {
        SparseTensor { r: self.r, terms: self.terms.iter().map(|(k, x)| (*k, x.neg())).collect() }
    }

    /// Applies a coefficient map, dropping zeros.
    pub fn map_coeffs<F: Ring>(&self, f: impl Fn(&E) -> F) -> SparseTensor<F> {
        SparseTensor::from_terms(self.r, self.terms.iter().map(|(k, x)| (*k, f(x))).collect())
    }

    fn cleaned(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    /// `v_𝐢 ⊗ v_𝐣` extended bilinearly.
    pub fn tensor(&self, other: &Self) -> Self {
        let r = self.r + other.r;
        let mut out = Self::zero(r);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let idx = TensorIndex((a.0 << (BITS as usize * other.r)) | b.0);
                out.add_term(idx, x.mul(y));
            }
        }
        out
    }
}

impl<E: Ring> fmt::Display for SparseTensor<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let d: Vec<String> = k.digits(self.r).iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({c})·v[{}]", d.join(","))?;
        }
        Ok(())
    }
}

impl<E: Ring> fmt::Debug for SparseTensor<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentPoly;

    #[test]
    fn packing_is_lexicographic() {
        let all = TensorIndex::all(3, 3);
        assert_eq!(all.len(), 27);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let i = TensorIndex::from_digits(&[2, 0, 1]);
        assert_eq!(i.digits(3), vec![2, 0, 1]);
        assert_eq!(i.with(1, 3, 2).digits(3), vec![2, 2, 1]);
    }

    #[test]
    fn tensor_products() {
        let a = SparseTensor::basis(1, TensorIndex::from_digits(&[1]), LaurentPoly::u_pow(1));
        let b = SparseTensor::basis(2, TensorIndex::from_digits(&[0, 3]), LaurentPoly::int(2));
        let c = a.tensor(&b);
        assert_eq!(c.degree(), 3);
        let (k, v) = c.iter().next().unwrap();
        assert_eq!(k.digits(3), vec![1, 0, 3]);
        assert_eq!(*v, LaurentPoly::u_pow(1).scale(&crate::scalar::Rat::int(2)));
        assert!(c.sub(&c).is_zero());
    }
}
