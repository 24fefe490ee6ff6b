//! Exact linear algebra over a [`Field`]: incremental echelon forms, ranks,
//! kernels and linear solves.

use std::collections::BTreeMap;

use super::Field;

/// Sparse vector keyed by coordinate index.
pub type SparseVec<F> = BTreeMap<usize, F>;

fn axpy<F: Field>(v: &mut SparseVec<F>, c: &F, row: &SparseVec<F>) {
    // v -= c * row
    for (k, x) in row {
        let t = c.mul(x);
        match v.get_mut(k) {
            Some(y) => {
                *y = y.sub(&t);
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                v.insert(*k, t.neg());
            }
        }
    }
}

/// Row echelon form built one vector at a time.
///
/// Each stored row has its pivot entry equal to one and vanishes on the
/// pivots of all earlier rows. When `track` is set, every stored row also
/// records how it was formed from the inserted vectors, which yields linear
/// relations and coordinates.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    rows: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
    combos: Vec<SparseVec<F>>,
    track: bool,
    inserted: usize,
    one: F,
}

/// Outcome of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug)]
pub enum Insert<F: Field> {
    /// The vector was independent and became row number `usize`.
    Independent(usize),
    /// The vector was dependent; with tracking, the relation among the
    /// inserted vectors (coefficients by insertion index) that vanishes.
    Dependent(SparseVec<F>),
}

impl<F: Field> Echelon<F> {
    /// `one` is the unit of the field; `track` enables relations and
    /// coordinates.
    pub fn new(one: F, track: bool) -> Self {
        Echelon { rows: Vec::new(), pivots: Vec::new(), combos: Vec::new(), track, inserted: 0, one }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows; returns the remainder and, when
    /// tracking, the combination of inserted vectors that was subtracted.
    fn reduce_inner(&self, mut v: SparseVec<F>) -> (SparseVec<F>, SparseVec<F>) {
        let mut used: SparseVec<F> = BTreeMap::new();
        for (i, row) in self.rows.iter().enumerate() {
            let p = self.pivots[i];
            if let Some(c) = v.get(&p).cloned() {
                axpy(&mut v, &c, row);
                if self.track {
                    // used += c * combos[i]
                    let neg = c.neg();
                    axpy(&mut used, &neg, &self.combos[i]);
                }
            }
        }
        (v, used)
    }

    /// The remainder of `v` modulo the row space.
    pub fn reduce(&self, v: SparseVec<F>) -> SparseVec<F> {
        self.reduce_inner(v).0
    }

    pub fn contains(&self, v: SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn insert(&mut self, v: SparseVec<F>) -> Insert<F> {
        let idx = self.inserted;
        self.inserted += 1;
        let (rem, used) = self.reduce_inner(v);
        if rem.is_empty() {
            let mut rel = SparseVec::new();
            if self.track {
                rel = used.into_iter().map(|(k, c)| (k, c.neg())).collect();
                rel.insert(idx, self.one.clone());
            }
            return Insert::Dependent(rel);
        }
        let (&p, _) = rem
            .iter()
            .min_by(|(i, a), (j, b)| a.cost().cmp(&b.cost()).then(i.cmp(j)))
            .expect("nonempty remainder");
        let inv = rem[&p].inv();
        let row: SparseVec<F> = rem.into_iter().map(|(k, c)| (k, c.mul(&inv))).collect();
        if self.track {
            let mut combo: SparseVec<F> = used.into_iter().map(|(k, c)| (k, c.neg().mul(&inv))).collect();
            combo.insert(idx, inv.clone());
            self.combos.push(combo);
        }
        self.rows.push(row);
        self.pivots.push(p);
        Insert::Independent(self.rows.len() - 1)
    }

    /// Coordinates of `v` with respect to the inserted vectors that were
    /// independent, indexed by insertion order. Requires tracking.
    pub fn coordinates(&self, v: SparseVec<F>) -> Option<SparseVec<F>> {
        assert!(self.track, "coordinates need a tracking echelon");
        let (rem, used) = self.reduce_inner(v);
        if !rem.is_empty() {
            return None;
        }
        Some(used)
    }
}

/// Dense matrix rows as sparse vectors.
pub fn dense_to_sparse<F: Field>(row: &[F]) -> SparseVec<F> {
    row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn matrix_rank<F: Field>(m: &[Vec<F>], one: &F) -> usize {
    let mut ech = Echelon::new(one.clone(), false);
    for row in m {
        ech.insert(dense_to_sparse(row));
    }
    ech.rank()
}

pub fn transpose<F: Field>(m: &[Vec<F>]) -> Vec<Vec<F>> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Basis of `{ x : Σ_i x_i · vectors[i] = 0 }`, the left kernel of the
/// matrix whose rows are `vectors`; each basis vector is dense of length
/// `vectors.len()`.
pub fn left_kernel<F: Field>(vectors: &[SparseVec<F>], zero: &F, one: &F) -> Vec<Vec<F>> {
    let mut ech = Echelon::new(one.clone(), true);
    let mut out = Vec::new();
    for v in vectors {
        if let Insert::Dependent(rel) = ech.insert(v.clone()) {
            let mut dense = vec![zero.clone(); vectors.len()];
            for (k, c) in rel {
                dense[k] = c;
            }
            out.push(dense);
        }
    }
    out
}

/// Right kernel `{ x : M x = 0 }` of a dense matrix.
pub fn nullspace<F: Field>(m: &[Vec<F>], zero: &F, one: &F) -> Vec<Vec<F>> {
    let cols = m.first().map_or(0, |r| r.len());
    let columns: Vec<SparseVec<F>> = (0..cols)
        .map(|j| {
            m.iter()
                .enumerate()
                .filter(|(_, r)| !r[j].is_zero())
                .map(|(i, r)| (i, r[j].clone()))
                .collect()
        })
        .collect();
    left_kernel(&columns, zero, one)
}

/// Solves `x · A = b` for a row vector `x`, where the rows of `A` are
/// `rows`. Returns `None` when `b` is not in the row space; the solution is
/// unique when the rows are independent.
pub fn solve_left<F: Field>(rows: &[SparseVec<F>], b: &SparseVec<F>, one: &F) -> Option<SparseVec<F>> {
    let mut ech = Echelon::new(one.clone(), true);
    for r in rows {
        ech.insert(r.clone());
    }
    ech.coordinates(b.clone())
}
