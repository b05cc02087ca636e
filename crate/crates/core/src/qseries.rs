//! q-Pochhammer symbols, q-binomials and the ten multisum families at roots
//! of unity.
//!
//! Family `i` is
//!
//! ```text
//! H_p^(i)(q) = Σ_{n_p ≥ … ≥ n_1 ≥ 0} q^{a n_p² + b n_p} (q^{n_p + s})_{n_p + t}
//!              · Π_{j<p} q^{w(n_j)} [n_{j+1}, n_j]
//! ```
//!
//! with `(a, b, s, t)` and the chain weight `w(n) ∈ {n(n+1), n²}` given by
//! [`FamilyId::shape`]. At a primitive `N`-th root of unity the outer factor
//! vanishes once `n_p ≥ N` (its Pochhammer range then contains a multiple of
//! `N`), so the outer index stops at `N - 1`.

use num_integer::Integer;
use num_rational::BigRational;

use crate::arith::{Cyclotomic, LaurentPoly};
use crate::error::{Error, Result};

/// `(q^s; q)_n = Π_{k=1}^{n} (1 - q^{s+k-1})`.
pub fn q_pochhammer(s: i64, n: u64) -> LaurentPoly {
    (0..n as i64).map(|k| LaurentPoly::one_minus_q_pow(s + k)).product()
}

/// `(c q^s; q)_n = Π_{k=1}^{n} (1 - c q^{s+k-1})` for a rational `c`.
pub fn q_pochhammer_scaled(c: &BigRational, s: i64, n: u64) -> LaurentPoly {
    (0..n as i64)
        .map(|k| LaurentPoly::one() - LaurentPoly::monomial(c.clone(), s + k))
        .product()
}

/// The Gaussian binomial `[n, k]`; zero outside `0 ≤ k ≤ n`.
pub fn q_binomial(n: i64, k: i64) -> LaurentPoly {
    if k < 0 || n < 0 || k > n {
        return LaurentPoly::zero();
    }
    let k = k.min(n - k);
    // [n, k] = (q^{n-k+1})_k / (q)_k
    q_pochhammer(n - k + 1, k as u64)
        .div_exact(&q_pochhammer(1, k as u64))
        .expect("Gaussian binomials are polynomials")
}

/// One of the ten multisum families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId(u8);

/// Outer term `q^{a n² + b n} (q^{n+s})_{n+t}` and chain weight `q^{n² + w n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyShape {
    pub a: i64,
    pub b: i64,
    pub s: i64,
    pub t: i64,
    pub w: i64,
}

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [
        FamilyId(1),
        FamilyId(2),
        FamilyId(3),
        FamilyId(4),
        FamilyId(5),
        FamilyId(6),
        FamilyId(7),
        FamilyId(8),
        FamilyId(9),
        FamilyId(10),
    ];

    pub fn new(i: u8) -> Result<Self> {
        if (1..=10).contains(&i) {
            Ok(Self(i))
        } else {
            Err(Error::InvalidParameter(format!("family index {i} is not in 1..=10")))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn shape(self) -> FamilyShape {
        let (a, b, s, t, w) = match self.0 {
            1 => (0, 1, 1, 1, 1),
            2 => (0, 1, 0, 0, 0),
            3 => (0, 2, 1, 0, 1),
            4 => (0, 1, 1, 0, 1),
            5 => (0, 1, 1, 0, 0),
            6 => (-1, 0, 1, 0, 1),
            7 => (-1, -1, 1, 0, 1),
            8 => (-1, -2, 1, 1, 1),
            9 => (-1, -1, 1, 0, 0),
            10 => (-1, 0, 0, 0, 0),
            _ => unreachable!(),
        };
        FamilyShape { a, b, s, t, w }
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The primitive root `ζ_N^M`, `gcd(M, N) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    pub m: i64,
    pub n: u64,
}

impl RootOfUnity {
    pub fn new(m: i64, n: u64) -> Result<Self> {
        if n == 0 || m <= 0 {
            return Err(Error::InvalidParameter(format!("root of unity needs M, N > 0, got ({m}, {n})")));
        }
        if m.gcd(&(n as i64)) != 1 {
            return Err(Error::NotCoprime { m, n });
        }
        Ok(Self { m, n })
    }

    /// `q^e` at this root, in order `N`.
    pub fn q_pow(&self, e: i64) -> Cyclotomic {
        Cyclotomic::root(self.n, mul_mod(self.m, e, self.n))
    }

    /// `Π_{k<n} (1 - q^{s+k})` at this root.
    pub fn pochhammer(&self, s: i64, n: i64) -> Cyclotomic {
        let mut acc = Cyclotomic::one(self.n);
        for k in 0..n.max(0) {
            let f = &Cyclotomic::one(self.n) - &self.q_pow(s + k);
            if f.coeffs().iter().all(num_traits::Zero::is_zero) {
                return Cyclotomic::zero(self.n);
            }
            acc = &acc * &f;
        }
        acc
    }

    /// Every `M` in `1..=N` coprime to `N`.
    pub fn all_for(n: u64) -> Vec<RootOfUnity> {
        (1..=n as i64)
            .filter(|m| m.gcd(&(n as i64)) == 1)
            .map(|m| RootOfUnity { m, n })
            .collect()
    }
}

fn mul_mod(m: i64, e: i64, n: u64) -> i64 {
    ((m as i128 * e as i128).rem_euclid(n as i128)) as i64
}

/// Pascal table of `[a, b]` at the root for `0 ≤ b ≤ a ≤ bound`.
fn binomial_table(z: &RootOfUnity, bound: usize) -> Vec<Vec<Cyclotomic>> {
    let mut t: Vec<Vec<Cyclotomic>> = Vec::with_capacity(bound + 1);
    for a in 0..=bound {
        let mut row = Vec::with_capacity(a + 1);
        for b in 0..=a {
            if b == 0 || b == a {
                row.push(Cyclotomic::one(z.n));
            } else {
                // [a, b] = [a-1, b-1] + q^b [a-1, b]
                let v = &t[a - 1][b - 1] + &(&z.q_pow(b as i64) * &t[a - 1][b]);
                row.push(v);
            }
        }
        t.push(row);
    }
    t
}

/// `H_p^(i)(ζ_N^M)` in order `N`, with the outer index running to `N - 1`.
pub fn multisum_eval(i: FamilyId, p: u32, z: RootOfUnity) -> Result<Cyclotomic> {
    multisum_eval_bounded(i, p, z, z.n as usize - 1)
}

/// As [`multisum_eval`] with an explicit outer bound; used to check that
/// the truncation at `N - 1` loses nothing.
pub fn multisum_eval_bounded(i: FamilyId, p: u32, z: RootOfUnity, bound: usize) -> Result<Cyclotomic> {
    if p == 0 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    let sh = i.shape();
    let table = binomial_table(&z, bound);
    // v[m] = Σ over the inner chain below n_{j+1} = m
    let mut v: Vec<Cyclotomic> = vec![Cyclotomic::one(z.n); bound + 1];
    for _ in 1..p {
        let weights: Vec<Cyclotomic> = (0..=bound)
            .map(|n| {
                let n = n as i64;
                z.q_pow(n * n + sh.w * n)
            })
            .collect();
        let wv: Vec<Cyclotomic> = weights.iter().zip(&v).map(|(w, x)| w * x).collect();
        v = (0..=bound)
            .map(|m| {
                let mut acc = Cyclotomic::zero(z.n);
                for n in 0..=m {
                    acc += &(&table[m][n] * &wv[n]);
                }
                acc
            })
            .collect();
    }
    let mut total = Cyclotomic::zero(z.n);
    for (m, vm) in v.iter().enumerate() {
        let m = m as i64;
        let poch = z.pochhammer(m + sh.s, m + sh.t);
        if poch.coeffs().iter().all(num_traits::Zero::is_zero) {
            continue;
        }
        let term = &(&z.q_pow(sh.a * m * m + sh.b * m) * &poch) * vm;
        total += &term;
    }
    Ok(total)
}

/// `Σ_{n ≥ 0} q^n (q^{n+1})_{n+1}` at `ζ_N^M`, i.e. `(1 - q) I(Σ(2,3,5); q)`.
pub fn habiro_poincare_eval(z: RootOfUnity) -> Cyclotomic {
    let mut total = Cyclotomic::zero(z.n);
    for n in 0..z.n as i64 {
        let poch = z.pochhammer(n + 1, n + 1);
        total += &(&z.q_pow(n) * &poch);
    }
    total
}

/// `1 / (1 - ζ)` for a primitive `N`-th root `ζ = ζ_N^M`, `N ≥ 2`:
/// `-(1/N) Σ_{j=1}^{N-1} j ζ^j`.
pub fn inverse_one_minus_root(z: RootOfUnity) -> Result<Cyclotomic> {
    if z.n < 2 {
        return Err(Error::Pole("1 - q vanishes at N = 1".into()));
    }
    let mut acc = Cyclotomic::zero(z.n);
    for j in 1..z.n as i64 {
        acc.add_root(mul_mod(z.m, j, z.n), &BigRational::new((-j).into(), (z.n as i64).into()));
    }
    Ok(acc)
}

/// `I(Σ(2,3,6p+1); ζ)` for `sign = +1` and `I(Σ(2,3,6p-1); ζ)` for `sign = -1`.
pub fn wrt_invariant(sign: i32, p: u32, z: RootOfUnity) -> Result<Cyclotomic> {
    let family = match sign {
        1 => FamilyId(8),
        -1 => {
            if p < 2 {
                return Err(Error::Unsupported("the (-1)-surgery family needs p >= 2".into()));
            }
            FamilyId(1)
        }
        _ => return Err(Error::InvalidParameter(format!("sign must be +1 or -1, got {sign}"))),
    };
    let inv = inverse_one_minus_root(z)?;
    let h = multisum_eval(family, p, z)?;
    Ok(&h * &inv)
}
