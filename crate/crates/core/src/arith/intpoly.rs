//! Dense integer polynomial kernels.
//!
//! Polynomials are ascending coefficient vectors over `BigInt` with no
//! trailing zeros (the zero polynomial is the empty vector). These routines
//! back the rational-coefficient types: multiplication tries a checked `i128`
//! convolution first, and the gcd is the classic dense modular algorithm
//! (gcd modulo word-size primes, Chinese remaindering, trial division).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntPoly = Vec<BigInt>;

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[BigInt]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

fn to_i128(p: &[BigInt]) -> Option<Vec<i128>> {
    p.iter().map(ToPrimitive::to_i128).collect()
}

fn conv_i128(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            let t = x.checked_mul(y)?;
            out[i + j] = out[i + j].checked_add(t)?;
        }
    }
    Some(out)
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if let (Some(x), Some(y)) = (to_i128(a), to_i128(b)) {
        if let Some(c) = conv_i128(&x, &y) {
            let mut out: IntPoly = c.into_iter().map(BigInt::from).collect();
            trim(&mut out);
            return out;
        }
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn primitive_part(p: &[BigInt]) -> IntPoly {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Exact division over the integers. Returns `None` unless `b` divides `a`
/// with an integral quotient.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let db = degree(b)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    let da = degree(a)?;
    if da < db {
        return None;
    }
    let lead = &b[db];
    let mut rem: IntPoly = a.to_vec();
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = &rem[k + db];
        if c.is_zero() {
            continue;
        }
        let (t, r) = c.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[k + j] -= &t * bj;
            }
        }
        quot[k] = t;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

/// Exact division over the rationals: returns `(v, c)` with `a / b = c · v`.
pub fn div_exact_rational(a: &[BigInt], b: &[BigInt]) -> Option<(IntPoly, num_rational::BigRational)> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some((Vec::new(), num_rational::BigRational::one()));
    }
    let ca = content(a);
    let cb = content(b);
    let q = div_exact(&primitive_part(a), &primitive_part(b))?;
    Some((q, num_rational::BigRational::new(ca, cb)))
}

// ---------------------------------------------------------------------------
// modular gcd
// ---------------------------------------------------------------------------

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes just below 2^62.
fn primes() -> impl Iterator<Item = u64> {
    let mut cur = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime_u64(cur) {
            cur -= 2;
        }
        let p = cur;
        cur -= 2;
        Some(p)
    })
}

fn reduce_mod(a: &[BigInt], p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    let mut v: Vec<u64> = a
        .iter()
        .map(|c| c.mod_floor(&bp).to_u64().expect("residue fits in u64"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // a <- a mod b
        let db = b.len() - 1;
        let inv = inv_mod(b[db], p);
        while a.len() > db {
            let da = a.len() - 1;
            let t = mul_mod(a[da], inv, p);
            if t != 0 {
                let shift = da - db;
                for (j, &bj) in b.iter().enumerate() {
                    let s = mul_mod(t, bj, p);
                    a[shift + j] = (a[shift + j] + p - s) % p;
                }
            }
            a.pop();
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Greatest common divisor over the integers, normalized to a primitive
/// polynomial with positive leading coefficient and multiplied by the gcd of
/// the contents.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() {
        return normalize_sign(b.to_vec());
    }
    if b.is_empty() {
        return normalize_sign(a.to_vec());
    }
    let cont = content(a).gcd(&content(b));
    let a = primitive_part(a);
    let b = primitive_part(b);
    if a.len() == 1 || b.len() == 1 {
        return vec![cont];
    }
    let scale = a.last().unwrap().gcd(b.last().unwrap());
    let mut best_deg = usize::MAX;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last_candidate: Option<IntPoly> = None;

    for p in primes() {
        let pb = BigInt::from(p);
        if a.last().unwrap().mod_floor(&pb).is_zero() || b.last().unwrap().mod_floor(&pb).is_zero() {
            continue;
        }
        let g = gcd_mod(reduce_mod(&a, p), reduce_mod(&b, p), p);
        let d = g.len() - 1;
        if d == 0 {
            return vec![cont];
        }
        if d > best_deg {
            continue;
        }
        let s = scale.mod_floor(&pb).to_u64().unwrap();
        let g: Vec<BigInt> = g.iter().map(|&c| BigInt::from(mul_mod(c, s, p))).collect();
        if d < best_deg {
            best_deg = d;
            acc = g;
            modulus = pb;
            last_candidate = None;
        } else {
            // Chinese remaindering coefficientwise
            let inv = BigInt::from(inv_mod(modulus.mod_floor(&pb).to_u64().unwrap(), p));
            for (x, r) in acc.iter_mut().zip(g.iter()) {
                let diff = (r - &*x).mod_floor(&pb);
                let t = (diff * &inv).mod_floor(&pb);
                *x += &modulus * t;
            }
            modulus *= pb;
        }
        let mut cand: IntPoly = acc.iter().map(|c| symmetric(c, &modulus)).collect();
        trim(&mut cand);
        let cand = normalize_sign(primitive_part(&cand));
        if last_candidate.as_ref() == Some(&cand)
            && div_exact(&a, &cand).is_some()
            && div_exact(&b, &cand).is_some()
        {
            return cand.into_iter().map(|c| c * &cont).collect();
        }
        last_candidate = Some(cand);
    }
    unreachable!("prime supply is unbounded")
}

fn normalize_sign(mut p: IntPoly) -> IntPoly {
    trim(&mut p);
    if p.last().is_some_and(Signed::is_negative) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
    p
}
