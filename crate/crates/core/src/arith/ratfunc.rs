//! Rational functions in `q` with a canonical representative.
//!
//! The canonical form `num / den` has `den` an ordinary integer polynomial
//! that is primitive, has a nonzero constant term and a positive constant
//! term, and shares no nonconstant factor with `num`. Powers of `q` are always
//! carried by `num`, so two equal rational functions have identical fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Signed;

use super::intpoly;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Canonicalizes `num / den`.
pub fn rf_normalize(num: &LaurentPoly, den: &LaurentPoly) -> Result<RationalFunction> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let (dv, dden, de) = den.to_scaled_int();
    let (nv, nden, ne) = num.to_scaled_int();
    // num/den = (nv q^ne / nden) / (dv q^de / dden)
    let dc = intpoly::content(&dv);
    let mut dprim = intpoly::primitive_part(&dv);
    let mut nprim = nv;
    if dprim.len() > 1 {
        let g = intpoly::gcd(&nprim, &dprim);
        if g.len() > 1 {
            // g is primitive, so both quotients stay integral
            nprim = intpoly::div_exact(&nprim, &g).expect("gcd divides numerator");
            dprim = intpoly::div_exact(&dprim, &g).expect("gcd divides denominator");
        }
    }
    let mut factor = BigRational::new(dden, nden * dc);
    if dprim[0].is_negative() {
        factor = -factor;
        dprim.iter_mut().for_each(|c| *c = -&*c);
    }
    Ok(RationalFunction {
        num: LaurentPoly::from_dense_int(&nprim, ne - de).scale(&factor),
        den: LaurentPoly::from_dense_int(&dprim, 0),
    })
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn new(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        rf_normalize(num, den)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Returns the Laurent polynomial when the denominator is 1.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        rf_normalize(&self.den, &self.num)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        rf_normalize(&(&self.num * &other.den), &(&self.den * &other.num))
    }

    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        if p.is_monomial() {
            return Self {
                num: &self.num * p,
                den: self.den.clone(),
            };
        }
        rf_normalize(&(&self.num * p), &self.den).expect("nonzero denominator")
    }

    pub fn div_laurent(&self, p: &LaurentPoly) -> Result<Self> {
        rf_normalize(&self.num, &(&self.den * p))
    }

    /// The substitution `q ↦ q^{-1}`.
    pub fn subs_inverse(&self) -> Self {
        rf_normalize(&self.num.subs_inverse(), &self.den.subs_inverse()).expect("nonzero denominator")
    }

    /// Cross-multiplied comparison, independent of canonical form.
    pub fn cross_eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let rhs_num = if negate { -&other.num } else { other.num.clone() };
        if self.den == other.den {
            return rf_normalize(&(&self.num + &rhs_num), &self.den).expect("nonzero denominator");
        }
        if self.den.is_one() {
            return rf_normalize(&(&(&self.num * &other.den) + &rhs_num), &other.den).expect("nonzero denominator");
        }
        if other.den.is_one() {
            return rf_normalize(&(&self.num + &(&rhs_num * &self.den)), &self.den).expect("nonzero denominator");
        }
        let (a, _, _) = self.den.to_scaled_int();
        let (b, _, _) = other.den.to_scaled_int();
        let g = intpoly::gcd(&a, &b);
        let g = LaurentPoly::from_dense_int(&g, 0);
        let a_over_g = self.den.div_exact(&g).expect("gcd divides");
        let b_over_g = other.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b_over_g) + &(&rhs_num * &a_over_g);
        let den = &a_over_g * &other.den;
        rf_normalize(&num, &den).expect("nonzero denominator")
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(rhs, false)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(rhs, true)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_laurent(&self.num * &rhs.num);
        }
        rf_normalize(&(&self.num * &rhs.num), &(&self.den * &rhs.den)).expect("nonzero denominator")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}
