//! Exact scalars: Laurent polynomials in `u` (with `q = u²`), the field ℚ(u)
//! for generic computations, and cyclotomic fields for roots of unity.

pub mod cyclo;
pub mod laurent;
pub mod linalg;
pub mod rat;
pub mod ratfunc;

use std::fmt;

pub use cyclo::Cyclotomic;
pub use laurent::{qbinomial, qfactorial, qint, LaurentPoly};
pub use rat::Rat;
pub use ratfunc::RationalFunction;

use crate::error::{BmwError, Result};

/// Commutative ring operations needed by tensors and operators.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rat) -> Self;
    fn zero_like(&self) -> Self;

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }
}

/// Field operations for elimination.
pub trait Field: Ring {
    fn inv(&self) -> Self;

    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    /// The value as a rational number when it lies in ℚ.
    fn as_rational(&self) -> Option<Rat>;

    /// A size estimate used to prefer cheap pivots.
    fn cost(&self) -> usize;
}

impl Ring for LaurentPoly {
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        LaurentPoly::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        LaurentPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LaurentPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn scale(&self, c: &Rat) -> Self {
        LaurentPoly::scale(self, c)
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero()
    }
}

impl Ring for RationalFunction {
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RationalFunction::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        RationalFunction::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RationalFunction::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalFunction::mul(self, o)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn scale(&self, c: &Rat) -> Self {
        RationalFunction::scale(self, c)
    }
    fn zero_like(&self) -> Self {
        RationalFunction::zero()
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Self {
        RationalFunction::inv(self)
    }
    fn as_rational(&self) -> Option<Rat> {
        if self.is_laurent() {
            self.numerator().as_constant()
        } else {
            None
        }
    }
    fn cost(&self) -> usize {
        self.size()
    }
}

impl Ring for Rat {
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rat::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        Rat::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Rat::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Rat::mul(self, o)
    }
    fn neg(&self) -> Self {
        Rat::neg(self)
    }
    fn scale(&self, c: &Rat) -> Self {
        Rat::mul(self, c)
    }
    fn zero_like(&self) -> Self {
        Rat::ZERO
    }
}

impl Field for Rat {
    fn inv(&self) -> Self {
        Rat::inv(self)
    }
    fn as_rational(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn cost(&self) -> usize {
        match self {
            Rat::Small(..) => 1,
            Rat::Big(_) => 4,
        }
    }
}

impl Ring for Cyclotomic {
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Cyclotomic::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        Cyclotomic::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Cyclotomic::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Cyclotomic::mul(self, o)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn scale(&self, c: &Rat) -> Self {
        Cyclotomic::scale(self, c)
    }
    fn zero_like(&self) -> Self {
        Cyclotomic::zero(self.order())
    }
}

impl Field for Cyclotomic {
    fn inv(&self) -> Self {
        Cyclotomic::inv(self)
    }
    fn as_rational(&self) -> Option<Rat> {
        Cyclotomic::as_rational(self)
    }
    fn cost(&self) -> usize {
        self.coords().iter().filter(|c| !c.is_zero()).count()
    }
}

/// Which specialization of `u` the computation runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarRing {
    Generic,
    /// `q²` has multiplicative order exactly `e`.
    RootOfUnity(u32),
}

impl ScalarRing {
    /// `e = 0` selects the generic ring.
    pub fn from_e(e: u32) -> Result<ScalarRing> {
        match e {
            0 => Ok(ScalarRing::Generic),
            1 => Err(BmwError::Usage("e = 1 makes q - q^-1 vanish".into())),
            e if Self::order_for(e) <= cyclo::MAX_ORDER => Ok(ScalarRing::RootOfUnity(e)),
            e => Err(BmwError::Usage(format!("e = {e} exceeds the supported cyclotomic order"))),
        }
    }

    fn order_for(e: u32) -> u32 {
        if e % 2 == 1 {
            2 * e
        } else {
            4 * e
        }
    }

    /// The order `m` of the primitive root `u = ζ_m`, if specialized.
    pub fn cyclotomic_order(&self) -> Option<u32> {
        match self {
            ScalarRing::Generic => None,
            ScalarRing::RootOfUnity(e) => Some(Self::order_for(*e)),
        }
    }

    /// `e`, with 0 meaning generic.
    pub fn e(&self) -> u32 {
        match self {
            ScalarRing::Generic => 0,
            ScalarRing::RootOfUnity(e) => *e,
        }
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarRing::Generic => write!(f, "generic"),
            ScalarRing::RootOfUnity(e) => write!(f, "e={e}"),
        }
    }
}

/// Substitutes `u ↦ ζ_m` for a root-of-unity ring.
pub fn specialize(p: &LaurentPoly, ring: ScalarRing) -> Result<Cyclotomic> {
    match ring.cyclotomic_order() {
        Some(m) => Ok(Cyclotomic::from_laurent(m, p)),
        None => Err(BmwError::Usage("specialize needs a root-of-unity ring".into())),
    }
}

/// A coefficient domain: a ring of scalars together with the map from
/// Laurent polynomials into it.
pub trait Domain: Clone + Send + Sync + 'static {
    type Elem: Ring;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed(&self, p: &LaurentPoly) -> Self::Elem;
    fn ring(&self) -> ScalarRing;

    fn from_rat(&self, c: Rat) -> Self::Elem {
        self.embed(&LaurentPoly::constant(c))
    }

    fn int(&self, n: i64) -> Self::Elem {
        self.from_rat(Rat::int(n))
    }

    fn u_pow(&self, k: i32) -> Self::Elem {
        self.embed(&LaurentPoly::u_pow(k))
    }

    /// Image of a reduced fraction, or `None` when its denominator vanishes
    /// (or, for Laurent polynomials, is not a unit).
    fn embed_fraction(&self, x: &RationalFunction) -> Option<Self::Elem>;
}

/// Laurent polynomials themselves; used for generic integral computations.
#[derive(Clone, Copy, Debug, Default)]
pub struct LaurentDomain;

impl Domain for LaurentDomain {
    type Elem = LaurentPoly;
    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }
    fn embed(&self, p: &LaurentPoly) -> LaurentPoly {
        p.clone()
    }
    fn ring(&self) -> ScalarRing {
        ScalarRing::Generic
    }
    fn embed_fraction(&self, x: &RationalFunction) -> Option<LaurentPoly> {
        x.is_laurent().then(|| x.numerator().clone())
    }
}

/// The generic field ℚ(u).
#[derive(Clone, Copy, Debug, Default)]
pub struct GenericField;

impl Domain for GenericField {
    type Elem = RationalFunction;
    fn zero(&self) -> RationalFunction {
        RationalFunction::zero()
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one()
    }
    fn embed(&self, p: &LaurentPoly) -> RationalFunction {
        RationalFunction::from_laurent(p.clone())
    }
    fn ring(&self) -> ScalarRing {
        ScalarRing::Generic
    }
    fn embed_fraction(&self, x: &RationalFunction) -> Option<RationalFunction> {
        Some(x.clone())
    }
}

/// ℚ(ζ_m) with `u = ζ_m`, where `q²` has order `e`.
#[derive(Clone, Copy, Debug)]
pub struct CyclotomicField {
    e: u32,
    m: u32,
}

impl CyclotomicField {
    pub fn new(e: u32) -> Result<Self> {
        let ring = ScalarRing::from_e(e)?;
        let m = ring
            .cyclotomic_order()
            .ok_or_else(|| BmwError::Usage("a cyclotomic field needs e >= 2".into()))?;
        Ok(CyclotomicField { e, m })
    }

    pub fn order(&self) -> u32 {
        self.m
    }
}

impl Domain for CyclotomicField {
    type Elem = Cyclotomic;
    fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.m)
    }
    fn one(&self) -> Cyclotomic {
        Cyclotomic::one(self.m)
    }
    fn embed(&self, p: &LaurentPoly) -> Cyclotomic {
        Cyclotomic::from_laurent(self.m, p)
    }
    fn ring(&self) -> ScalarRing {
        ScalarRing::RootOfUnity(self.e)
    }
    fn u_pow(&self, k: i32) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.m, k as i64)
    }
    fn embed_fraction(&self, x: &RationalFunction) -> Option<Cyclotomic> {
        let den = self.embed(x.denominator());
        if den.is_zero() {
            return None;
        }
        Some(self.embed(x.numerator()).mul(&den.inv()))
    }
}

/// Runs `$body` with `$dom` bound to the concrete field domain of `$ring`.
#[macro_export]
macro_rules! with_field {
    ($ring:expr, |$dom:ident| $body:expr) => {
        match $ring {
            $crate::scalar::ScalarRing::Generic => {
                let $dom = $crate::scalar::GenericField;
                $body
            }
            $crate::scalar::ScalarRing::RootOfUnity(e) => {
                let $dom = $crate::scalar::CyclotomicField::new(e)?;
                $body
            }
        }
    };
}


/// ℚ with `u` specialized to a fixed rational point.
///
/// Ranks computed here are lower bounds for the ranks of the same Laurent
/// matrices over ℚ(u), which makes it a cheap certificate of full rank.
#[derive(Clone, Debug)]
pub struct RationalPoint {
    u: Rat,
}

impl RationalPoint {
    pub fn new(u: Rat) -> Self {
        assert!(!u.is_zero(), "u must be invertible");
        RationalPoint { u }
    }

    pub fn point(&self) -> &Rat {
        &self.u
    }
}

impl Default for RationalPoint {
    fn default() -> Self {
        RationalPoint::new(Rat::new(3, 2))
    }
}

impl Domain for RationalPoint {
    type Elem = Rat;
    fn zero(&self) -> Rat {
        Rat::ZERO
    }
    fn one(&self) -> Rat {
        Rat::ONE
    }
    fn embed(&self, p: &LaurentPoly) -> Rat {
        p.eval(&self.u)
    }
    fn ring(&self) -> ScalarRing {
        ScalarRing::Generic
    }
    fn embed_fraction(&self, x: &RationalFunction) -> Option<Rat> {
        let d = x.denominator().eval(&self.u);
        (!d.is_zero()).then(|| x.numerator().eval(&self.u).div(&d))
    }
}
