//! Arithmetic in ℚ(ζ_m) as residues modulo the m-th cyclotomic polynomial.

use std::fmt;
use std::sync::OnceLock;

use super::laurent::{poly_divrem, LaurentPoly};
use super::rat::Rat;

/// Largest supported cyclotomic order.
pub const MAX_ORDER: u32 = 256;

/// Per-order data shared by all elements of ℚ(ζ_m).
pub struct CycloCtx {
    pub m: u32,
    pub phi: usize,
    /// Φ_m with ascending integer coefficients, monic of degree φ(m).
    pub poly: Vec<i64>,
    /// `reduce[k]` holds the coordinates of x^(φ+k) modulo Φ_m.
    reduce: Vec<Vec<Rat>>,
    /// Coordinates of ζ^j for 0 ≤ j < m.
    powers: Vec<Vec<Rat>>,
}

fn int_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    // Exact division by a monic integer polynomial.
    let mut r = num.to_vec();
    let db = den.len() - 1;
    let da = r.len() - 1;
    let mut q = vec![0i64; da - db + 1];
    for k in (0..=da - db).rev() {
        let c = r[k + db];
        q[k] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                r[k + j] -= c * b;
            }
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// The m-th cyclotomic polynomial.
pub fn cyclotomic_poly(m: u32) -> Vec<i64> {
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = int_divide(&p, &cyclotomic_poly(d));
        }
    }
    p
}

impl CycloCtx {
    fn build(m: u32) -> CycloCtx {
        let poly = cyclotomic_poly(m);
        let phi = poly.len() - 1;
        let reduce_pow = |k: usize| -> Vec<Rat> {
            let mut x = vec![Rat::ZERO; k + 1];
            x[k] = Rat::ONE;
            let pr: Vec<Rat> = poly.iter().map(|&c| Rat::int(c)).collect();
            let (_, mut r) = poly_divrem(&x, &pr);
            r.resize(phi, Rat::ZERO);
            r
        };
        let reduce = (phi..2 * phi).map(reduce_pow).collect();
        let powers = (0..m as usize).map(reduce_pow).collect();
        CycloCtx { m, phi, poly, reduce, powers }
    }

    pub fn get(m: u32) -> &'static CycloCtx {
        static CTX: OnceLock<Vec<OnceLock<CycloCtx>>> = OnceLock::new();
        assert!((1..=MAX_ORDER).contains(&m), "unsupported cyclotomic order {m}");
        let table = CTX.get_or_init(|| (0..=MAX_ORDER).map(|_| OnceLock::new()).collect());
        table[m as usize].get_or_init(|| CycloCtx::build(m))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    m: u32,
    c: Vec<Rat>,
}

impl Cyclotomic {
    pub fn zero(m: u32) -> Self {
        let ctx = CycloCtx::get(m);
        Cyclotomic { m, c: vec![Rat::ZERO; ctx.phi] }
    }

    pub fn from_rat(m: u32, v: Rat) -> Self {
        let mut z = Self::zero(m);
        z.c[0] = v;
        z
    }

    pub fn one(m: u32) -> Self {
        Self::from_rat(m, Rat::ONE)
    }

    /// ζ_m^k.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        let ctx = CycloCtx::get(m);
        let j = k.rem_euclid(m as i64) as usize;
        Cyclotomic { m, c: ctx.powers[j].clone() }
    }

    pub fn from_coords(m: u32, coords: Vec<Rat>) -> Self {
        let ctx = CycloCtx::get(m);
        assert_eq!(coords.len(), ctx.phi);
        Cyclotomic { m, c: coords }
    }

    /// Image of a Laurent polynomial under `u ↦ ζ_m`.
    pub fn from_laurent(m: u32, p: &LaurentPoly) -> Self {
        let ctx = CycloCtx::get(m);
        let mut c = vec![Rat::ZERO; ctx.phi];
        for (e, a) in p.terms() {
            let j = (e as i64).rem_euclid(m as i64) as usize;
            for (t, z) in c.iter_mut().zip(&ctx.powers[j]) {
                if !z.is_zero() {
                    *t = t.add(&a.mul(z));
                }
            }
        }
        Cyclotomic { m, c }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coords(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rat::is_zero)
    }

    /// The rational value if this element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.c[1..].iter().all(Rat::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Cyclotomic { m: self.m, c: self.c.iter().zip(&o.c).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Cyclotomic { m: self.m, c: self.c.iter().zip(&o.c).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { m: self.m, c: self.c.iter().map(Rat::neg).collect() }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Cyclotomic { m: self.m, c: self.c.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.m, o.m);
        let ctx = CycloCtx::get(self.m);
        let phi = ctx.phi;
        if let Some(s) = o.as_rational() {
            return self.scale(&s);
        }
        if let Some(s) = self.as_rational() {
            return o.scale(&s);
        }
        let mut prod = vec![Rat::ZERO; 2 * phi - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = prod[i + j].add(&a.mul(b));
                }
            }
        }
        let mut c: Vec<Rat> = prod[..phi].to_vec();
        for (k, p) in prod[phi..].iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (t, z) in c.iter_mut().zip(&ctx.reduce[k]) {
                if !z.is_zero() {
                    *t = t.add(&p.mul(z));
                }
            }
        }
        Cyclotomic { m: self.m, c }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if let Some(s) = self.as_rational() {
            return Self::from_rat(self.m, s.inv());
        }
        let ctx = CycloCtx::get(self.m);
        let trim = |mut v: Vec<Rat>| {
            while v.last().is_some_and(|c| c.is_zero()) {
                v.pop();
            }
            v
        };
        let mut r0: Vec<Rat> = ctx.poly.iter().map(|&c| Rat::int(c)).collect();
        let mut r1 = trim(self.c.clone());
        let mut s0: Vec<Rat> = Vec::new();
        let mut s1: Vec<Rat> = vec![Rat::ONE];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let qs = poly_mul(&q, &s1);
            let mut ns = s0.clone();
            if ns.len() < qs.len() {
                ns.resize(qs.len(), Rat::ZERO);
            }
            for (i, x) in qs.iter().enumerate() {
                ns[i] = ns[i].sub(x);
            }
            s0 = s1;
            s1 = trim(ns);
            r0 = r1;
            r1 = trim(r);
        }
        // r0 is a nonzero constant because Φ_m is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let g = r0[0].inv();
        let modulus: Vec<Rat> = ctx.poly.iter().map(|&c| Rat::int(c)).collect();
        let (_, mut rem) = poly_divrem(&s0, &modulus);
        rem.resize(ctx.phi, Rat::ZERO);
        Cyclotomic { m: self.m, c: rem.iter().map(|a| a.mul(&g)).collect() }
    }
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![Rat::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] = v[i + j].add(&x.mul(y));
        }
    }
    v
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyc{}(", self.m)?;
        for (i, c) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn powers_of_zeta() {
        for m in [6u32, 8, 12, 16] {
            let z = Cyclotomic::zeta_pow(m, 1);
            let mut acc = Cyclotomic::one(m);
            for k in 1..=m {
                acc = acc.mul(&z);
                assert_eq!(acc.is_one(), k == m, "m={m} k={k}");
            }
            assert_eq!(Cyclotomic::zeta_pow(m, -1), z.inv());
        }
        assert_eq!(Cyclotomic::zeta_pow(8, 4), Cyclotomic::from_rat(8, Rat::int(-1)));
    }

    #[test]
    fn inverses() {
        let m = 16;
        let x = Cyclotomic::from_laurent(m, &LaurentPoly::from_terms(&[(0, Rat::int(2)), (3, Rat::int(-1)), (5, Rat::new(1, 3))]));
        assert!(x.mul(&x.inv()).is_one());
    }
}
