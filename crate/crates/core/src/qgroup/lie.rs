//! Root data for the classical types.

use std::fmt;
use std::str::FromStr;

use crate::error::{BmwError, Result};
use crate::scalar::{LaurentPoly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl FromStr for Family {
    type Err = BmwError;
    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            _ => Err(BmwError::Usage(format!("unknown Lie type {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        write!(f, "{s}")
    }
}

/// `𝔰𝔩_n` (type A, generators `1..n−1`), `𝔰𝔬_{2n+1}`, `𝔰𝔭_{2n}` or `𝔰𝔬_{2n}`.
///
/// Basis vectors of `V` are 0-based internally: index `k` stands for
/// `v_{k+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LieType {
    pub family: Family,
    pub n: usize,
}

impl LieType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(BmwError::Usage(format!("type {family} needs n >= 2, got {n}")));
        }
        if Self::dim_for(family, n) > crate::tensorop::tensor::MAX_DIM {
            return Err(BmwError::Usage(format!("n = {n} is too large for the tensor index packing")));
        }
        Ok(LieType { family, n })
    }

    fn dim_for(family: Family, n: usize) -> usize {
        match family {
            Family::A => n,
            Family::B => 2 * n + 1,
            Family::C | Family::D => 2 * n,
        }
    }

    /// `N = dim V`.
    pub fn dim(&self) -> usize {
        Self::dim_for(self.family, self.n)
    }

    /// Number of Chevalley generators `e_i`.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::A => self.n - 1,
            _ => self.n,
        }
    }

    /// `v = u^{v_exp}`: `v = q^{1/2}` in type B and `v = q` otherwise.
    pub fn v_exp(&self) -> i32 {
        match self.family {
            Family::B => 1,
            _ => 2,
        }
    }

    /// `d_i` for `1 ≤ i ≤ rank`.
    pub fn d(&self, i: usize) -> u32 {
        match (self.family, i == self.n) {
            (Family::B, false) => 2,
            (Family::C, true) => 2,
            _ => 1,
        }
    }

    /// The involution `k ↦ k′` on 0-based indices; type A has none.
    pub fn prime(&self, k: usize) -> usize {
        assert!(self.family != Family::A, "type A has no prime involution");
        self.dim() - 1 - k
    }

    /// `ε_k` (0-based): `−1` exactly in type C for `k ≥ n`.
    pub fn epsilon(&self, k: usize) -> i64 {
        if self.family == Family::C && k >= self.n {
            -1
        } else {
            1
        }
    }

    /// `2ρ_k`, always an integer, for 0-based `k`.
    pub fn rho2(&self, k: usize) -> i64 {
        let n = self.n as i64;
        let k = k as i64;
        match self.family {
            Family::A => panic!("rho is only defined for types B, C and D"),
            Family::B => {
                if k < n {
                    2 * (n - k) - 1
                } else if k == n {
                    0
                } else {
                    2 * (n - k) + 1
                }
            }
            Family::C => {
                if k < n {
                    2 * (n - k)
                } else {
                    -2 * (k - n + 1)
                }
            }
            Family::D => {
                if k < n {
                    2 * (n - 1 - k)
                } else {
                    -2 * (k - n)
                }
            }
        }
    }

    /// The entries `ρ_1, …, ρ_N`.
    pub fn rho(&self) -> Vec<Rat> {
        (0..self.dim()).map(|k| Rat::new(self.rho2(k), 2)).collect()
    }

    /// The parameter `ϱ` of the BMW algebra centralizing this quantum group.
    pub fn varrho(&self) -> LaurentPoly {
        let n = self.n as i32;
        match self.family {
            Family::A => panic!("no BMW parameter in type A"),
            Family::B => LaurentPoly::q_pow(2 * n),
            Family::C => LaurentPoly::q_pow(2 * n + 1).neg(),
            Family::D => LaurentPoly::q_pow(2 * n - 1),
        }
    }

    /// Number of coordinates of a weight in the ε-basis.
    pub fn weight_len(&self) -> usize {
        self.n
    }

    /// Doubled ε-coordinates of `wt(v_k)`; type A uses coordinates scaled
    /// by `2n` so that the shift `−(1/n)Σε_i` stays integral.
    pub fn weight_of_basis(&self, k: usize) -> Vec<i64> {
        let n = self.n;
        let mut w = vec![0i64; n];
        match self.family {
            Family::A => {
                for x in w.iter_mut() {
                    *x = -2;
                }
                w[k] += 2 * n as i64;
            }
            _ => {
                if k < n {
                    w[k] = 2;
                } else if self.family == Family::B && k == n {
                } else {
                    w[self.prime(k)] = -2;
                }
            }
        }
        w
    }

    /// Scale of [`Self::weight_of_basis`] relative to ε-coordinates.
    pub fn weight_scale(&self) -> i64 {
        match self.family {
            Family::A => 2 * self.n as i64,
            _ => 2,
        }
    }

    /// Simple root `α_i` in the same scaled ε-coordinates as
    /// [`Self::weight_of_basis`] (type A roots have `n` coordinates).
    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let s = self.weight_scale();
        let n = self.n;
        let mut a = vec![0i64; n];
        if i < n || self.family == Family::A {
            a[i - 1] = s;
            a[i] = -s;
            return a;
        }
        match self.family {
            Family::B => a[n - 1] = s,
            Family::C => a[n - 1] = 2 * s,
            Family::D => {
                a[n - 2] = s;
                a[n - 1] = s;
            }
            Family::A => unreachable!(),
        }
        a
    }

    /// `a_ij = 2(α_i, α_j)/(α_i, α_i)`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        let ai = self.simple_root(i);
        let aj = self.simple_root(j);
        let ip = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(a, b)| a * b).sum::<i64>();
        2 * ip(&ai, &aj) / ip(&ai, &ai)
    }

    /// `⟨μ, α_i⟩` for a weight in scaled coordinates.
    pub fn pairing(&self, mu: &[i64], i: usize) -> i64 {
        let a = self.simple_root(i);
        let ip = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(a, b)| a * b).sum::<i64>();
        let num = 2 * ip(mu, &a);
        let den = ip(&a, &a);
        assert_eq!(num % den, 0, "weight not integral");
        num / den
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.n)
    }
}
