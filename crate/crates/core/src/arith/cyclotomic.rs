//! Elements of the cyclotomic field `ℚ(ζ_L)`.
//!
//! An element is stored as a residue modulo `x^L - 1`, so multiplication by a
//! root of unity is a rotation of the coefficient vector. Equality and zero
//! tests reduce modulo `Φ_L`, which is computed once per order and cached.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::intpoly;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Environment variable capping the number of cached cyclotomic polynomials.
pub const PHI_CACHE_ENV: &str = "QWRT_PHI_CACHE_LIMIT";
const DEFAULT_PHI_CACHE_LIMIT: usize = 4096;

/// A cached `Φ_L`: dense ascending coefficients plus the nonzero terms below
/// the leading one.
#[derive(Debug)]
pub struct CyclotomicPoly {
    pub order: u64,
    pub coeffs: Vec<BigInt>,
    lower: Vec<(usize, BigInt)>,
    lower_small: Option<Vec<(usize, i128)>>,
}

impl CyclotomicPoly {
    fn new(order: u64, coeffs: Vec<BigInt>) -> Self {
        let deg = coeffs.len() - 1;
        let lower: Vec<(usize, BigInt)> = coeffs[..deg]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();
        let lower_small = lower.iter().map(|(j, c)| c.to_i128().map(|c| (*j, c))).collect();
        Self {
            order,
            coeffs,
            lower,
            lower_small,
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<CyclotomicPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CyclotomicPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cache_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var(PHI_CACHE_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_PHI_CACHE_LIMIT)
    })
}

/// Number of cached cyclotomic polynomials.
pub fn phi_cache_len() -> usize {
    cache().read().map(|c| c.len()).unwrap_or(0)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Divides by a monic polynomial given through its lower terms, in `i128`.
fn div_monic_small(a: &[i128], deg: usize, lower: &[(usize, i128)]) -> Option<Vec<i128>> {
    let da = a.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![0i128; da - deg + 1];
    for k in (0..=da - deg).rev() {
        let t = rem[k + deg];
        if t == 0 {
            continue;
        }
        quot[k] = t;
        for &(j, c) in lower {
            rem[k + j] = rem[k + j].checked_sub(t.checked_mul(c)?)?;
        }
        rem[k + deg] = 0;
    }
    rem.iter().all(|&c| c == 0).then_some(quot)
}

/// `Φ_L` as a dense ascending integer vector.
///
/// Computed by exact division of `x^L - 1` by `Φ_d` for every proper divisor
/// `d` of `L`, recursively and with memoization.
pub fn cyclotomic_polynomial(order: u64) -> Arc<CyclotomicPoly> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(p) = cache().read().ok().and_then(|c| c.get(&order).cloned()) {
        return p;
    }
    let l = order as usize;
    let mut cur_small: Option<Vec<i128>> = Some({
        let mut v = vec![0i128; l + 1];
        v[0] = -1;
        v[l] = 1;
        v
    });
    let mut cur_big: Vec<BigInt> = Vec::new();
    for d in divisors(order) {
        if d == order {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        if let Some(cur) = cur_small.as_ref() {
            let next = phi_d
                .lower_small
                .as_ref()
                .and_then(|lower| div_monic_small(cur, phi_d.degree(), lower));
            match next {
                Some(n) => {
                    cur_small = Some(n);
                    continue;
                }
                None => {
                    cur_big = cur.iter().map(|&c| BigInt::from(c)).collect();
                    cur_small = None;
                }
            }
        }
        cur_big = intpoly::div_exact(&cur_big, &phi_d.coeffs).expect("Φ_d divides x^L - 1");
    }
    let coeffs = match cur_small {
        Some(v) => v.into_iter().map(BigInt::from).collect(),
        None => cur_big,
    };
    let poly = Arc::new(CyclotomicPoly::new(order, coeffs));
    if let Ok(mut c) = cache().write() {
        if c.len() < cache_limit() {
            c.entry(order).or_insert_with(|| poly.clone());
        }
    }
    poly
}

/// An element of `ℚ(ζ_L)` written as `Σ_{j<L} c_j ζ_L^j`.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(order: u64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Self {
            order,
            coeffs: vec![BigRational::zero(); order as usize],
        }
    }

    pub fn one(order: u64) -> Self {
        Self::root(order, 0)
    }

    pub fn from_int(order: u64, c: i64) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = BigRational::from_integer(c.into());
        z
    }

    pub fn from_rational(order: u64, c: BigRational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = c;
        z
    }

    /// `ζ_L^k`, with `k` reduced modulo `L`.
    pub fn root(order: u64, k: i64) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[k.rem_euclid(order as i64) as usize] = BigRational::one();
        z
    }

    /// Builds an element from a coefficient vector, reducing indices modulo `L`.
    pub fn from_coeffs(order: u64, coeffs: Vec<BigRational>) -> Self {
        let mut z = Self::zero(order);
        for (j, c) in coeffs.into_iter().enumerate() {
            z.coeffs[j % order as usize] += c;
        }
        z
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Adds `c · ζ_L^k`.
    pub fn add_root(&mut self, k: i64, c: &BigRational) {
        let idx = k.rem_euclid(self.order as i64) as usize;
        self.coeffs[idx] += c;
    }

    /// Adds `sign · ζ_L^k` for a small integer sign.
    pub fn add_root_int(&mut self, k: i64, sign: i64) {
        if sign == 0 {
            return;
        }
        let idx = k.rem_euclid(self.order as i64) as usize;
        self.coeffs[idx] += BigRational::from_integer(sign.into());
    }

    /// Multiplication by `ζ_L^k`.
    pub fn mul_root(&self, k: i64) -> Self {
        let l = self.order as usize;
        let s = k.rem_euclid(self.order as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); l];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[(j + s) % l] = c.clone();
            }
        }
        Self { order: self.order, coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// The automorphism `ζ ↦ ζ^k`; requires `gcd(k, L) = 1`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let l = self.order as i64;
        if k.gcd(&l) != 1 {
            return Err(Error::NotCoprime { m: k, n: self.order });
        }
        let mut out = Self::zero(self.order);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[(j as i64 * k).rem_euclid(l) as usize] += c;
            }
        }
        Ok(out)
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    /// The embedding `ζ_N ↦ ζ_L^{L/N}` into order `L`.
    pub fn embed(&self, order: u64) -> Result<Self> {
        cyc_embed(self, order)
    }

    fn scaled_integers(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            if !c.is_zero() {
                den = den.lcm(c.denom());
            }
        }
        let v = self
            .coeffs
            .iter()
            .map(|c| if c.is_zero() { BigInt::zero() } else { c.numer() * (&den / c.denom()) })
            .collect();
        (v, den)
    }

    /// Canonical coordinates: the remainder modulo `Φ_L`, as `φ(L)` rationals
    /// in the basis `1, ζ_L, …, ζ_L^{φ(L)-1}`.
    pub fn canonical(&self) -> Vec<BigRational> {
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.degree();
        let (v, den) = self.scaled_integers();
        let reduced = reduce_mod_phi(v, &phi);
        reduced[..deg]
            .iter()
            .map(|c| BigRational::new(c.clone(), den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        cyc_is_zero(self)
    }

    /// Floating-point value, for testing against numerical oracles.
    pub fn to_complex(&self) -> (f64, f64) {
        let l = self.order as f64;
        let mut acc = (0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = c.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * j as f64 / l;
            acc.0 += cf * t.cos();
            acc.1 += cf * t.sin();
        }
        acc
    }

    fn lift_pair(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let l = self.order.lcm(&other.order);
        (
            cyc_embed(self, l).expect("lcm is a multiple"),
            cyc_embed(other, l).expect("lcm is a multiple"),
        )
    }

    fn mul_same_order(&self, other: &Self) -> Self {
        let l = self.order as usize;
        let a: Vec<(usize, &BigRational)> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let b: Vec<(usize, &BigRational)> =
            other.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut out = vec![BigRational::zero(); l];
        for &(i, x) in &a {
            for &(j, y) in &b {
                out[(i + j) % l] += x * y;
            }
        }
        Self { order: self.order, coeffs: out }
    }
}

/// Remainder of an integer vector modulo the monic `Φ_L`.
fn reduce_mod_phi(v: Vec<BigInt>, phi: &CyclotomicPoly) -> Vec<BigInt> {
    let deg = phi.degree();
    if let Some(lower) = phi.lower_small.as_ref() {
        if let Some(small) = v.iter().map(ToPrimitive::to_i128).collect::<Option<Vec<i128>>>() {
            if let Some(r) = reduce_small(small, deg, lower) {
                return r.into_iter().map(BigInt::from).collect();
            }
        }
    }
    let mut rem = v;
    for k in (deg..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let t = std::mem::take(&mut rem[k]);
        for (j, c) in &phi.lower {
            rem[k - deg + j] -= &t * c;
        }
    }
    rem
}

fn reduce_small(mut rem: Vec<i128>, deg: usize, lower: &[(usize, i128)]) -> Option<Vec<i128>> {
    for k in (deg..rem.len()).rev() {
        let t = rem[k];
        if t == 0 {
            continue;
        }
        rem[k] = 0;
        for &(j, c) in lower {
            let idx = k - deg + j;
            rem[idx] = rem[idx].checked_sub(t.checked_mul(c)?)?;
        }
    }
    Some(rem)
}

/// True iff the element is zero in `ℚ(ζ_L)`.
pub fn cyc_is_zero(x: &Cyclotomic) -> bool {
    if x.coeffs.iter().all(Zero::is_zero) {
        return true;
    }
    let phi = cyclotomic_polynomial(x.order);
    let (v, _) = x.scaled_integers();
    reduce_mod_phi(v, &phi).iter().all(Zero::is_zero)
}

/// Embeds an element of order `N` into order `L` via `ζ_N ↦ ζ_L^{L/N}`.
pub fn cyc_embed(x: &Cyclotomic, order: u64) -> Result<Cyclotomic> {
    if order == 0 || !order.is_multiple_of(x.order) {
        return Err(Error::IncompatibleOrders { from: x.order, to: order });
    }
    if order == x.order {
        return Ok(x.clone());
    }
    let step = (order / x.order) as usize;
    let mut out = Cyclotomic::zero(order);
    for (j, c) in x.coeffs.iter().enumerate() {
        if !c.is_zero() {
            out.coeffs[j * step] = c.clone();
        }
    }
    Ok(out)
}

/// `ζ_N^{M r}` as an element of order `L`, for rational `r`.
pub fn root_power(m: i64, n: u64, r: &BigRational, order: u64) -> Result<Cyclotomic> {
    Ok(Cyclotomic::root(order, root_power_exponent(m, n, r, order)?))
}

/// The exponent `k` with `ζ_N^{M r} = ζ_L^k`, reduced modulo `L`.
pub fn root_power_exponent(m: i64, n: u64, r: &BigRational, order: u64) -> Result<i64> {
    if n == 0 || m.gcd(&(n as i64)) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    let b = r.denom().to_u64().ok_or_else(|| Error::InvalidParameter("denominator too large".into()))?;
    let needed = b * n;
    if !order.is_multiple_of(needed) {
        return Err(Error::OrderTooSmall { order, needed });
    }
    let step = BigInt::from(order / needed);
    let l = BigInt::from(order);
    let k = (BigInt::from(m) * r.numer() * step).mod_floor(&l);
    Ok(k.to_i64().expect("reduced exponent fits"))
}

/// Substitutes `q = ζ_N^M` into a Laurent polynomial, in order `L`.
pub fn eval_laurent_at_root(f: &LaurentPoly, m: i64, n: u64, order: u64) -> Result<Cyclotomic> {
    if n == 0 || m.gcd(&(n as i64)) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    if !order.is_multiple_of(n) {
        return Err(Error::IncompatibleOrders { from: n, to: order });
    }
    let step = (order / n) as i64;
    let l = order as i64;
    let base = (m.rem_euclid(n as i64) * step) % l;
    let mut out = Cyclotomic::zero(order);
    for (e, c) in f.terms() {
        let k = ((e.rem_euclid(l) as i128 * base as i128) % l as i128) as i64;
        out.add_root(k, c);
    }
    Ok(out)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.lift_pair(other);
        (&a - &b).is_zero()
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({self})", self.order)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = format!("z{}", self.order);
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j as i64, c));
        super::laurent::write_terms(f, terms, &var)
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.order != rhs.order {
            let (a, b) = self.lift_pair(rhs);
            *self = a;
            *self += &b;
            return;
        }
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if self.order != rhs.order {
            let (a, b) = self.lift_pair(rhs);
            *self = a;
            *self -= &b;
            return;
        }
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !y.is_zero() {
                *x -= y;
            }
        }
    }
}

impl Add<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.lift_pair(rhs);
        a.mul_same_order(&b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(mut self, rhs: Cyclotomic) -> Cyclotomic {
        self += &rhs;
        self
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(mut self, rhs: Cyclotomic) -> Cyclotomic {
        self -= &rhs;
        self
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Formats a rational as `num/den`.
pub fn rational_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                None
            } else {
                Some(BigRational::new(a, b))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn is_monic(p: &[BigInt]) -> bool {
        p.last().is_some_and(|c| c.is_one())
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).coeffs, ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4).coeffs, ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12).coeffs, ints(&[1, 0, -1, 0, 1]));
        // the first order with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).coeffs.iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn degrees_match_totient() {
        for l in 1..=120 {
            let p = cyclotomic_polynomial(l);
            assert_eq!(p.degree() as u64, euler_phi(l), "L = {l}");
            assert!(is_monic(&p.coeffs));
        }
    }

    #[test]
    fn zero_tests() {
        assert!(Cyclotomic::zero(7).is_zero());
        let s = Cyclotomic::from_coeffs(3, vec![rat(1, 1), rat(1, 1), rat(1, 1)]);
        assert!(s.is_zero());
        let t = Cyclotomic::from_coeffs(4, vec![rat(1, 1), rat(1, 1)]);
        assert!(!t.is_zero());
        assert_eq!(t.canonical(), vec![rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn embedding_examples() {
        let z2 = Cyclotomic::root(2, 1);
        let e = cyc_embed(&z2, 6).unwrap();
        assert_eq!(e.coeffs()[3], rat(1, 1));
        assert!(cyc_embed(&Cyclotomic::zero(5), 10).unwrap().is_zero());
        let a = Cyclotomic::from_coeffs(3, vec![rat(1, 1), rat(1, 1)]);
        let direct = &Cyclotomic::one(12) + &Cyclotomic::root(12, 4);
        assert!((&cyc_embed(&a, 12).unwrap() - &direct).is_zero());
        assert_eq!(
            cyc_embed(&a, 10).unwrap_err(),
            Error::IncompatibleOrders { from: 3, to: 10 }
        );
    }

    #[test]
    fn root_power_examples() {
        assert_eq!(root_power_exponent(1, 5, &rat(0, 1), 5).unwrap(), 0);
        assert_eq!(root_power_exponent(1, 1, &rat(1, 4), 4).unwrap(), 1);
        assert_eq!(root_power_exponent(3, 5, &rat(1, 2), 10).unwrap(), 3);
        assert_eq!(
            root_power_exponent(1, 5, &rat(1, 3), 10).unwrap_err(),
            Error::OrderTooSmall { order: 10, needed: 15 }
        );
        assert!(root_power(2, 4, &rat(1, 1), 4).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let f = LaurentPoly::one_minus_q_pow(1);
        assert!(eval_laurent_at_root(&f, 1, 1, 1).unwrap().is_zero());
        let g = LaurentPoly::q_pow(-1);
        assert_eq!(eval_laurent_at_root(&g, 1, 3, 3).unwrap().coeffs()[2], rat(1, 1));
        let h = LaurentPoly::geometric(3, 1);
        assert!(eval_laurent_at_root(&h, 1, 3, 3).unwrap().is_zero());
    }

    #[test]
    fn equality_across_orders() {
        // -1 = ζ_2 = ζ_4^2
        assert_eq!(Cyclotomic::from_int(1, -1), Cyclotomic::root(4, 2));
        assert_ne!(Cyclotomic::root(4, 1), Cyclotomic::root(4, 3));
    }

    #[test]
    fn rational_strings_round_trip() {
        let c = rat(-6, 4);
        assert_eq!(rational_string(&c), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(c));
        assert_eq!(parse_rational("7"), Some(rat(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
