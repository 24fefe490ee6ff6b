//! Standard tableaux and the permutations attached to them.

use std::fmt;

use super::partition::Partition;
use super::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StdTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StdTableau {
    /// Panics unless `rows` is a standard filling of a partition shape by `1..=r`.
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        let shape = Partition::new(rows.iter().map(Vec::len).collect());
        let t = StdTableau { shape, rows };
        assert!(t.is_standard(), "not a standard tableau: {t}");
        t
    }

    fn is_standard(&self) -> bool {
        let r = self.shape.size();
        let mut seen = vec![false; r + 1];
        for row in &self.rows {
            for &x in row {
                if x == 0 || x > r || seen[x] {
                    return false;
                }
                seen[x] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b))
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entries read along rows, top to bottom.
    pub fn row_reading(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Row index (0-based) of each entry `1..=r`.
    pub fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.shape.size() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                out[x] = i;
            }
        }
        out
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `t^λ`: rows filled left to right, top to bottom.
pub fn t_row(shape: &Partition) -> StdTableau {
    let mut next = 1;
    let rows = shape
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<usize> = (next..next + len).collect();
            next += len;
            row
        })
        .collect();
    StdTableau { shape: shape.clone(), rows }
}

/// `t_λ`: columns filled top to bottom, left to right.
pub fn t_col(shape: &Partition) -> StdTableau {
    let conj = shape.conjugate();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut next = 1;
    for &height in conj.parts() {
        for row in rows.iter_mut().take(height) {
            row.push(next);
            next += 1;
        }
    }
    StdTableau { shape: shape.clone(), rows }
}

/// All standard tableaux of a shape, ordered lexicographically by row reading.
pub fn std_tableaux(shape: &Partition) -> Vec<StdTableau> {
    let r = shape.size();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    fn rec(k: usize, r: usize, shape: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StdTableau>) {
        if k > r {
            out.push(StdTableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        for i in 0..rows.len() {
            let len = rows[i].len();
            if len < shape.parts()[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(k);
                rec(k + 1, r, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(1, r, shape, &mut rows, &mut out);
    out.sort_by_key(StdTableau::row_reading);
    out
}

/// The unique `w` with `t^λ · w = t`, where `w` replaces each entry `k` by `(k)w`.
pub fn d_of(t: &StdTableau) -> Permutation {
    Permutation::from_images(t.row_reading())
}

/// `w_λ = d(t_λ)`.
pub fn w_lambda(shape: &Partition) -> Permutation {
    d_of(&t_col(shape))
}

/// The row stabilizer `𝔖_λ` of `t^λ`, sorted by one-line images.
pub fn young_subgroup(shape: &Partition) -> Vec<Permutation> {
    let r = shape.size();
    let mut elems = vec![Permutation::identity(r)];
    let mut offset = 0;
    for &len in shape.parts() {
        let block = Permutation::all(len);
        elems = elems
            .iter()
            .flat_map(|x| block.iter().map(move |b| x.mul(&b.shifted(offset, r))))
            .collect();
        offset += len;
    }
    elems.sort();
    elems
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::partition::partitions;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn row_and_column_tableaux() {
        let l = p(&[4, 3, 1]);
        assert_eq!(t_row(&l).rows(), &[vec![1, 2, 3, 4], vec![5, 6, 7], vec![8]]);
        assert_eq!(t_col(&l).rows(), &[vec![1, 4, 6, 8], vec![2, 5, 7], vec![3]]);
        assert_eq!(w_lambda(&l).images(), &[1, 4, 6, 8, 2, 5, 7, 3]);
        assert!(d_of(&t_row(&l)).is_identity());
    }

    #[test]
    fn counts_match_hook_lengths() {
        assert_eq!(std_tableaux(&p(&[2, 1])).len(), 2);
        for r in 0..=7 {
            for l in partitions(r, None) {
                let ts = std_tableaux(&l);
                assert_eq!(ts.len() as u128, l.hook_dimension(), "{l}");
                let mut ds: Vec<_> = ts.iter().map(d_of).collect();
                ds.sort();
                ds.dedup();
                assert_eq!(ds.len(), ts.len());
            }
        }
    }

    #[test]
    fn young_subgroup_order() {
        let g = young_subgroup(&p(&[3, 2]));
        assert_eq!(g.len(), 12);
        assert!(g.iter().all(|w| w.apply(4) >= 4 && w.apply(1) <= 3));
    }
}
