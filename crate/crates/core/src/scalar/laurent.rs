//! Laurent polynomials over ℚ in the variable `u`, where `q = u²`.

use std::fmt;

use super::rat::Rat;
use crate::error::{BmwError, Result};

/// A Laurent polynomial stored densely from its lowest exponent.
///
/// Invariant: `coeffs` is empty (the zero polynomial) or its first and last
/// entries are nonzero, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::ONE)
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rat::int(n))
    }

    pub fn monomial(c: Rat, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: exp, coeffs: vec![c] }
    }

    /// `u^k`.
    pub fn u_pow(k: i32) -> Self {
        Self::monomial(Rat::ONE, k)
    }

    /// `q^k = u^{2k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::u_pow(2 * k)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: &[(i32, Rat)]) -> Self {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc = acc.add(&Self::monomial(c.clone(), *e));
        }
        acc
    }

    fn from_dense(low: i32, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly { low: low + lead as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn low_degree(&self) -> i32 {
        self.low
    }

    pub fn high_degree(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, exp: i32) -> Rat {
        let i = exp - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            Rat::ZERO
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rat)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    /// The constant value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::ZERO)
        } else if self.low == 0 && self.coeffs.len() == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Value at a nonzero rational `x`.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        let k = self.low;
        let base = if k < 0 { x.inv() } else { x.clone() };
        (0..k.unsigned_abs()).fold(acc, |a, _| a.mul(&base))
    }

    /// The inverse of a nonzero monomial `c u^k`; `None` otherwise.
    pub fn inv_monomial(&self) -> Option<Self> {
        if self.coeffs.len() == 1 && !self.coeffs[0].is_zero() {
            Some(Self::monomial(self.coeffs[0].inv(), -self.low))
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high_degree().max(o.high_degree());
        let mut v = vec![Rat::ZERO; (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[(self.low - low) as usize + i] = c.clone();
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            let k = (o.low - low) as usize + i;
            v[k] = v[k].add(c);
        }
        Self::from_dense(low, v)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(Rat::neg).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.coeffs.len() == 1 {
            let c = &o.coeffs[0];
            return self.scale(c).shift(o.low);
        }
        if self.coeffs.len() == 1 {
            return o.mul(self);
        }
        let mut v = vec![Rat::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_dense(self.low + o.low, v)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The bar involution `u ↦ u⁻¹`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        LaurentPoly { low: -self.high_degree(), coeffs: c }
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or(Rat::ZERO)
    }

    /// Dense coefficient vector starting at `u^0` after removing the lowest
    /// power of `u`. Returns `(shift, coeffs)` with `self = u^shift · poly`.
    pub fn split_unit(&self) -> (i32, Vec<Rat>) {
        (self.low, self.coeffs.clone())
    }

    pub fn from_poly(shift: i32, coeffs: Vec<Rat>) -> Self {
        Self::from_dense(shift, coeffs)
    }

    /// Exact quotient `self / d` in ℚ[u, u⁻¹], failing if `d` does not divide.
    pub fn exact_divide(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(BmwError::Internal("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (sa, a) = self.split_unit();
        let (sb, b) = d.split_unit();
        let (q, r) = poly_divrem(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return Err(BmwError::InexactDivision(format!("({self}) / ({d})")));
        }
        Ok(Self::from_dense(sa - sb, q))
    }
}

/// Long division of dense polynomials (ascending coefficients).
pub(crate) fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.iter().rposition(|c| !c.is_zero()).expect("nonzero divisor");
    let lead_inv = b[db].inv();
    let mut r: Vec<Rat> = a.to_vec();
    let da = match r.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return (Vec::new(), Vec::new()),
    };
    if da < db {
        return (Vec::new(), r);
    }
    let mut q = vec![Rat::ZERO; da - db + 1];
    for k in (0..=da - db).rev() {
        let c = r[k + db].mul(&lead_inv);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            if !bj.is_zero() {
                r[k + j] = r[k + j].sub(&c.mul(bj));
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    (q, r)
}

/// Monic gcd of dense polynomials (ascending coefficients).
pub(crate) fn poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let trim = |v: &[Rat]| -> Vec<Rat> {
        let mut v = v.to_vec();
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    };
    let mut x = trim(a);
    let mut y = trim(b);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = trim(&r);
    }
    if let Some(l) = x.last().cloned() {
        let li = l.inv();
        for c in x.iter_mut() {
            *c = c.mul(&li);
        }
    }
    x
}

/// `[k]` in the variable `x = u^{step}`: `(x^k − x^{−k}) / (x − x^{−1})`.
pub fn qint_u(k: i64, step: i32) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::zero();
    }
    if k < 0 {
        return qint_u(-k, step).neg();
    }
    let mut acc = LaurentPoly::zero();
    let mut e = (k as i32 - 1) * step;
    for _ in 0..k {
        acc = acc.add(&LaurentPoly::u_pow(e));
        e -= 2 * step;
    }
    acc
}

/// The quantized integer `[k]` with respect to `v^d`, where `v = q = u²`.
pub fn qint(k: i64, d: u32) -> LaurentPoly {
    qint_u(k, 2 * d as i32)
}

/// `[k]!_d` for the variable `v = u^{v_exp}`.
pub fn qfactorial_u(k: u32, d: u32, v_exp: i32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for i in 1..=k {
        acc = acc.mul(&qint_u(i as i64, v_exp * d as i32));
    }
    acc
}

pub fn qfactorial(k: u32, d: u32) -> LaurentPoly {
    qfactorial_u(k, d, 2)
}

/// The Gaussian binomial `[m+n choose n]_d` with `v = q`.
pub fn qbinomial(m: u32, n: u32, d: u32) -> Result<LaurentPoly> {
    qbinomial_u(m, n, d, 2)
}

pub fn qbinomial_u(m: u32, n: u32, d: u32, v_exp: i32) -> Result<LaurentPoly> {
    let num = qfactorial_u(m + n, d, v_exp);
    let den = qfactorial_u(m, d, v_exp).mul(&qfactorial_u(n, d, v_exp));
    num.exact_divide(&den)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(i32, Rat)> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        for (idx, (e, c)) in terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            let a = if neg { c.neg() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = match *e {
                0 => String::new(),
                1 => "u".to_string(),
                e => format!("u^{e}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
