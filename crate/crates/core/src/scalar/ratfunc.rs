//! The field ℚ(u) of rational functions.

use std::fmt;

use super::laurent::{poly_divrem, poly_gcd, LaurentPoly};
use super::rat::Rat;

/// `num / den` with `den` a monic polynomial in `u` with nonzero constant
/// term, coprime to `num`. Powers of `u` always live in the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (sd, dc) = den.split_unit();
        let num = num.shift(-sd);
        if dc.len() == 1 {
            return Self::from_laurent(num.scale(&dc[0].inv()));
        }
        let (sn, nc) = num.split_unit();
        let g = poly_gcd(&nc, &dc);
        let (mut nc, mut dc) = if g.len() > 1 {
            (poly_divrem(&nc, &g).0, poly_divrem(&dc, &g).0)
        } else {
            (nc, dc)
        };
        let li = dc.last().expect("nonzero").inv();
        if !li.is_one() {
            for c in nc.iter_mut() {
                *c = c.mul(&li);
            }
            for c in dc.iter_mut() {
                *c = c.mul(&li);
            }
        }
        RationalFunction { num: LaurentPoly::from_poly(sn, nc), den: LaurentPoly::from_poly(0, dc) }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den.is_one() && o.den.is_one() {
            return Self::from_laurent(self.num.add(&o.num));
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_laurent(self.num.mul(&o.num));
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Total number of stored coefficients, a size measure for pivoting.
    pub fn size(&self) -> usize {
        let n = if self.num.is_zero() { 0 } else { (self.num.high_degree() - self.num.low_degree() + 1) as usize };
        n + self.den.high_degree() as usize
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
