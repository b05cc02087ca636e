//! Sparse Laurent polynomials in `q` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly;
use crate::error::{Error, Result};

/// A finite sum `Σ c_e q^e` with `e ∈ ℤ`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// `sign · q^e` for `sign = ±1`.
    pub fn signed_q_pow(sign: i64, e: i64) -> Self {
        Self::monomial(BigRational::from_integer(sign.into()), e)
    }

    /// Builds a polynomial from integer `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in pairs {
            p.add_term(e, BigRational::from_integer(c.into()));
        }
        p
    }

    /// `1 - q^e`.
    pub fn one_minus_q_pow(e: i64) -> Self {
        Self::from_pairs(&[(0, 1), (e, -1)])
    }

    /// `1 + q^step + ... + q^{step (m-1)}`, the expansion of `(1 - q^{m step})/(1 - q^step)`.
    pub fn geometric(m: i64, step: i64) -> Self {
        let mut p = Self::zero();
        for j in 0..m.max(0) {
            p.add_term(step * j, BigRational::one());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if e == 0 {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// The substitution `q ↦ q^{-1}`.
    pub fn subs_inverse(&self) -> Self {
        self.subs_pow(-1)
    }

    /// The substitution `q ↦ q^k`.
    pub fn subs_pow(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e * k, c.clone());
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division. Fails unless `d` divides `self` with a Laurent-polynomial quotient.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if d.is_monomial() {
            let (&e, c) = d.terms.iter().next().unwrap();
            let inv = c.recip();
            return Ok(self.shift(-e).scale(&inv));
        }
        let (sa, da, ea) = self.to_scaled_int();
        let (sd, dd, ed) = d.to_scaled_int();
        let (qi, qf) = intpoly::div_exact_rational(&sa, &sd).ok_or(Error::InexactDivision)?;
        // self = sa q^ea / da and d = sd q^ed / dd
        let factor = qf * BigRational::new(dd, da);
        Ok(Self::from_dense_int(&qi, ea - ed).scale(&factor))
    }

    /// Writes `self = (Σ v_j q^j) q^{e0} / den` with an integer vector `v`
    /// whose constant term is nonzero.
    pub(crate) fn to_scaled_int(&self) -> (Vec<BigInt>, BigInt, i64) {
        let e0 = self.min_exp().unwrap_or(0);
        let e1 = self.max_exp().unwrap_or(0);
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut v = vec![BigInt::zero(); (e1 - e0 + 1) as usize];
        for (&e, c) in &self.terms {
            v[(e - e0) as usize] = c.numer() * (&den / c.denom());
        }
        intpoly::trim(&mut v);
        (v, den, e0)
    }

    pub(crate) fn from_dense_int(v: &[BigInt], e0: i64) -> Self {
        let mut terms = BTreeMap::new();
        for (j, c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(e0 + j as i64, BigRational::from_integer(c.clone()));
            }
        }
        Self { terms }
    }

    fn mul_sparse(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (&e, c) in &self.terms {
            for (&f, d) in &other.terms {
                let t = c * d;
                match acc.entry(e + f) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(t);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += t;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self { terms: acc }
    }

    fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => b - a + 1,
            _ => 0,
        }
    }

    /// Evaluates at a floating-point complex number given as `(re, im)`.
    pub fn eval_complex(&self, z: (f64, f64)) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let (r, t) = ((z.0 * z.0 + z.1 * z.1).sqrt(), z.1.atan2(z.0));
        let mut acc = (0.0, 0.0);
        for (&e, c) in &self.terms {
            let m = r.powi(e as i32);
            let a = t * e as f64;
            let cf = c.to_f64().unwrap_or(f64::NAN);
            acc.0 += cf * m * a.cos();
            acc.1 += cf * m * a.sin();
        }
        acc
    }
}

fn mul_impl(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    if a.is_monomial() {
        let (&e, c) = a.terms.iter().next().unwrap();
        return b.shift(e).scale(c);
    }
    if b.is_monomial() {
        let (&e, c) = b.terms.iter().next().unwrap();
        return a.shift(e).scale(c);
    }
    let dense_enough =
        |p: &LaurentPoly| p.span() <= 8 * p.len() as i64 + 64;
    if a.len() * b.len() > 64 && dense_enough(a) && dense_enough(b) {
        let (va, da, ea) = a.to_scaled_int();
        let (vb, db, eb) = b.to_scaled_int();
        let prod = intpoly::mul(&va, &vb);
        let den = BigRational::from_integer(da * db).recip();
        return LaurentPoly::from_dense_int(&prod, ea + eb).scale(&den);
    }
    a.mul_sparse(b)
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms(), "q")
    }
}

/// Writes `Σ c_e x^e` in ascending order, e.g. `1 - q - q^2 + q^3`.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, &'a BigRational)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = abs.is_one();
        if e == 0 {
            write!(f, "{abs}")?;
            continue;
        }
        if !unit {
            if abs.is_integer() {
                write!(f, "{abs}*")?;
            } else {
                write!(f, "({abs})*")?;
            }
        }
        if e == 1 {
            write!(f, "{var}")?;
        } else if e < 0 {
            write!(f, "{var}^({e})")?;
        } else {
            write!(f, "{var}^{e}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl From<BigRational> for LaurentPoly {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = mul_impl(self, rhs);
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $assign:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(mut self, rhs: LaurentPoly) -> LaurentPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(mut self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul_impl(self, rhs)
    }
}

impl Mul<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        mul_impl(&self, &rhs)
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul_impl(&self, rhs)
    }
}

impl Mul<LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        mul_impl(self, &rhs)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::one();
        for p in iter {
            acc *= &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(p: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(p)
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = lp(&[(1, 1), (1, -1)]);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn product_of_binomials() {
        let p = &LaurentPoly::one_minus_q_pow(1) * &LaurentPoly::one_minus_q_pow(2);
        assert_eq!(p, lp(&[(0, 1), (1, -1), (2, -1), (3, 1)]));
    }

    #[test]
    fn dense_and_sparse_products_agree() {
        let a = LaurentPoly::geometric(40, 1).shift(-7);
        let b = LaurentPoly::geometric(30, 1) - LaurentPoly::q_pow(5).scale_int(3);
        assert_eq!(&a * &b, a.mul_sparse(&b));
    }

    #[test]
    fn exact_division() {
        let num = lp(&[(0, 1), (2, -1)]);
        let den = lp(&[(0, 1), (1, -1)]);
        assert_eq!(num.div_exact(&den).unwrap(), lp(&[(0, 1), (1, 1)]));
        assert_eq!(
            lp(&[(0, 1), (1, 1)]).div_exact(&den),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn division_with_negative_exponents_and_fractions() {
        let a = lp(&[(-3, 2), (-1, 5), (4, -1)]).scale(&BigRational::new(1.into(), 3.into()));
        let b = lp(&[(-2, 7), (1, 1)]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(lp(&[(0, 1), (1, -1), (2, -1), (3, 1)]).to_string(), "1 - q - q^2 + q^3");
        assert_eq!(lp(&[(-1, 2)]).to_string(), "2*q^(-1)");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn inverse_substitution() {
        assert_eq!(lp(&[(2, 1), (-1, 3)]).subs_inverse(), lp(&[(-2, 1), (1, 3)]));
    }
}
