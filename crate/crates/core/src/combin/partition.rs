//! Integer partitions.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Drops trailing zeros; panics if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing: {parts:?}");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with `λ_i = 0` past the last row (1-based).
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ′_k = #{j : λ_j ≥ k}`.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (1..=first).map(|k| self.parts.iter().filter(|&&p| p >= k).count()).collect() }
    }

    /// `λ_i − λ_{i+1} < e` for every row, including the last; `e = 0` stands
    /// for infinity.
    pub fn is_e_restricted(&self, e: u32) -> bool {
        if e == 0 {
            return true;
        }
        (1..=self.len()).all(|i| self.part(i) - self.part(i + 1) < e as usize)
    }

    /// Dominance `self ⊵ other` for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut den: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j - 1) + (conj.parts[j] - i - 1) + 1;
                den *= hook as u128;
            }
        }
        let g = gcd(num, den);
        num /= g;
        den /= g;
        assert_eq!(den, 1);
        num
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All partitions of `r` with at most `max_parts` parts (`None` for no bound),
/// in reverse lexicographic order: `(r)` first, `(1^r)` last.
pub fn partitions(r: usize, max_parts: Option<usize>) -> Vec<Partition> {
    let limit = max_parts.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, limit: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if cur.len() == limit {
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, limit, cur, out);
            cur.pop();
        }
    }
    rec(r, r, limit, &mut cur, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
        for r in 0..=8 {
            for l in partitions(r, None) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn restricted() {
        assert!(!p(&[2]).is_e_restricted(2));
        assert!(p(&[1, 1]).is_e_restricted(2));
        assert!(p(&[5]).is_e_restricted(0));
        assert!(p(&[2, 1]).is_e_restricted(2));
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions(2, None), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions(4, None), vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        assert_eq!(partitions(4, Some(2)).len(), 3);
        assert_eq!(partitions(0, None), vec![Partition::empty()]);
        let counts: Vec<usize> = (0..=8).map(|r| partitions(r, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn dominance_and_hooks() {
        assert!(p(&[2]).dominates(&p(&[1, 1])));
        assert!(!p(&[1, 1]).dominates(&p(&[2])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
        assert_eq!(p(&[2, 1]).hook_dimension(), 2);
        assert_eq!(p(&[4, 3, 1]).hook_dimension(), 70);
    }
}
