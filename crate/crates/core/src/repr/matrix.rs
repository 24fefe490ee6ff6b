//! Small dense matrices acting on row vectors from the right.

use crate::scalar::linalg::{dense_to_sparse, matrix_rank, Echelon, SparseVec};
use crate::scalar::{Field, Ring};

pub type Mat<F> = Vec<Vec<F>>;

pub fn identity<F: Field>(n: usize, one: &F) -> Mat<F> {
    (0..n).map(|i| (0..n).map(|j| if i == j { one.clone() } else { one.zero_like() }).collect()).collect()
}

pub fn zeros<F: Field>(rows: usize, cols: usize, one: &F) -> Mat<F> {
    vec![vec![one.zero_like(); cols]; rows]
}

pub fn mul<F: Field>(a: &Mat<F>, b: &Mat<F>, one: &F) -> Mat<F> {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols, one);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    out[i][j].add_assign(&x.mul(y));
                }
            }
        }
    }
    out
}

pub fn add<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p.add(q)).collect()).collect()
}

pub fn scale<F: Field>(a: &Mat<F>, c: &F) -> Mat<F> {
    a.iter().map(|row| row.iter().map(|x| x.mul(c)).collect()).collect()
}

pub fn trace<F: Field>(a: &Mat<F>, one: &F) -> F {
    a.iter().enumerate().fold(one.zero_like(), |acc, (i, row)| acc.add(&row[i]))
}

pub fn is_zero<F: Field>(a: &Mat<F>) -> bool {
    a.iter().all(|row| row.iter().all(Ring::is_zero))
}

pub fn rank<F: Field>(a: &Mat<F>, one: &F) -> usize {
    matrix_rank(a, one)
}

/// `v · A` for a sparse row vector.
pub fn row_times<F: Field>(v: &SparseVec<F>, a: &Mat<F>, one: &F) -> SparseVec<F> {
    let cols = a.first().map_or(0, Vec::len);
    let mut out = vec![one.zero_like(); cols];
    for (&k, c) in v {
        for (j, y) in a[k].iter().enumerate() {
            if !y.is_zero() {
                out[j].add_assign(&c.mul(y));
            }
        }
    }
    dense_to_sparse(&out)
}

/// A subspace of row vectors with a fixed complement of coordinates, used
/// to act on quotients.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub sub: Echelon<F>,
    /// Coordinates that are not pivots of `sub`; they index a basis of the quotient.
    pub complement: Vec<usize>,
}

impl<F: Field> Quotient<F> {
    pub fn new(dim: usize, sub_basis: &[SparseVec<F>], one: &F) -> Self {
        let mut sub = Echelon::new(one.clone(), false);
        for v in sub_basis {
            sub.insert(v.clone());
        }
        let complement = (0..dim).filter(|k| !sub.pivots().contains(k)).collect();
        Quotient { sub, complement }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// The induced map on the quotient, in the complement coordinates.
    pub fn induced(&self, a: &Mat<F>, one: &F) -> Mat<F> {
        self.complement
            .iter()
            .map(|&j| {
                let v = self.sub.reduce(dense_to_sparse(&a[j]));
                self.complement.iter().map(|k| v.get(k).cloned().unwrap_or_else(|| one.zero_like())).collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn quotient_of_triangular_action() {
        let one = Rat::ONE;
        let r = |x: i64| Rat::int(x);
        // Upper triangular: span(e1) is not invariant under right action,
        // span(e2) is.
        let a = vec![vec![r(2), r(1)], vec![r(0), r(3)]];
        let q = Quotient::new(2, &[dense_to_sparse(&[r(0), r(1)])], &one);
        assert_eq!(q.induced(&a, &one), vec![vec![r(2)]]);
        assert_eq!(trace(&mul(&a, &a, &one), &one), r(13));
        assert_eq!(rank(&a, &one), 2);
    }
}
