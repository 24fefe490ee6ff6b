//! Permutations acting on the right, in one-line notation.

use std::fmt;

/// A permutation of `{1, …, r}` with `images[k-1] = (k)w`.
///
/// Products follow the right action: `(k)(xy) = ((k)x)y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation { images: (1..=r).collect() }
    }

    /// From one-line images; panics unless they form a bijection of `1..=r`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let r = images.len();
        let mut seen = vec![false; r + 1];
        for &i in &images {
            assert!(i >= 1 && i <= r && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Permutation { images }
    }

    /// The simple transposition `s_i` swapping `i` and `i+1`.
    pub fn simple(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r);
        let mut p = Self::identity(r);
        p.images.swap(i - 1, i);
        p
    }

    /// The product `s_{i1} s_{i2} ⋯` of simple transpositions.
    pub fn from_word(r: usize, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(r), |acc, &i| acc.mul(&Self::simple(r, i)))
    }

    /// `s_{i,j} = s_i s_{i+1} ⋯ s_{j-1}` for `i < j`, identity for `i = j`,
    /// and the inverse of `s_{j,i}` for `i > j`.
    pub fn s_chain(r: usize, i: usize, j: usize) -> Self {
        if i <= j {
            Self::from_word(r, &(i..j).collect::<Vec<_>>())
        } else {
            Self::s_chain(r, j, i).inverse()
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(k)w` for `1 ≤ k ≤ r`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.degree(), o.degree());
        Permutation { images: self.images.iter().map(|&k| o.apply(k)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (k, &i) in self.images.iter().enumerate() {
            inv[i - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| i == k + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.degree();
        let mut c = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// A reduced word `[i1, …, ik]` with `w = s_{i1} ⋯ s_{ik}`, found by
    /// repeatedly stripping the leftmost left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] {
                    // s_i w has the images at positions i, i+1 swapped
                    w.swap(i, i + 1);
                    word.push(i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// Embeds into `S_{r}` acting on positions `offset+1 ..= offset+degree`.
    pub fn shifted(&self, offset: usize, r: usize) -> Self {
        assert!(offset + self.degree() <= r);
        let mut images: Vec<usize> = (1..=r).collect();
        for (k, &i) in self.images.iter().enumerate() {
            images[offset + k] = offset + i;
        }
        Permutation { images }
    }

    /// All permutations of `1..=r` in lexicographic order of images.
    pub fn all(r: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::with_capacity(r);
        let mut used = vec![false; r + 1];
        fn rec(r: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == r {
                out.push(Permutation { images: cur.clone() });
                return;
            }
            for i in 1..=r {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(r, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(r, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_products() {
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        // (1)(s1 s2) = (2)s2 = 3
        assert_eq!(s1.mul(&s2).apply(1), 3);
        assert_eq!(s1.mul(&s2).mul(&s1), s2.mul(&s1).mul(&s2));
    }

    #[test]
    fn reduced_words_are_reduced() {
        for r in 1..=5 {
            for w in Permutation::all(r) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(r, &word), w);
            }
        }
    }

    #[test]
    fn chains() {
        let r = 5;
        assert!(Permutation::s_chain(r, 3, 3).is_identity());
        let c = Permutation::s_chain(r, 2, 5);
        assert_eq!(c, Permutation::from_word(r, &[2, 3, 4]));
        assert_eq!(Permutation::s_chain(r, 5, 2), c.inverse());
    }
}
