#![allow(non_snake_case)]

use std::time::Instant;

use num_integer::Integer;
use num_rational::BigRational;

use crate::arith::Cyclotomic;
use crate::error::{Error, Result};
use crate::record::VerificationRecord;

use super::{eps_from_str, ChiFunction, Eps, ALL_EPS};

/// The exponent `k` with `ζ_N^{M n²/(4P)} = ζ_L^k`.
pub(crate) fn square_exponent(chi: &ChiFunction, m: i64, n_root: u64, n: i64, order: u64) -> Result<i64> {
    let needed = 4 * chi.big_p() * n_root;
    if !order.is_multiple_of(needed) {
        return Err(Error::OrderTooSmall { order, needed });
    }
    let step = (order / needed) as i128;
    let l = order as i128;
    let n = n as i128;
    Ok(((m as i128).rem_euclid(l) * (n * n % l) % l * step % l) as i64)
}

pub(crate) fn check_root(m: i64, n: u64) -> Result<()> {
    if n == 0 || m <= 0 || m.gcd(&(n as i64)) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    Ok(())
}

/// `Σ_{lo ≤ n ≤ hi} χ(n) q^{n²/(4P)}` at `q = ζ_N^M`, in order `L`.
pub fn chi_sum(chi: &ChiFunction, m: i64, n_root: u64, lo: i64, hi: i64, order: u64) -> Result<Cyclotomic> {
    check_root(m, n_root)?;
    let mut out = Cyclotomic::zero(order);
    for n in lo..=hi {
        let c = chi.eval(n);
        if c != 0 {
            out.add_root_int(square_exponent(chi, m, n_root, n, order)?, c as i64);
        }
    }
    Ok(out)
}

fn progression_sum(
    chi: &ChiFunction,
    e: Eps,
    m: i64,
    n_root: u64,
    lo_exclusive: Option<i64>,
    hi: i64,
    order: u64,
) -> Result<Cyclotomic> {
    check_root(m, n_root)?;
    let step = 2 * chi.big_p() as i64;
    let mut n = chi.m_of_epsilon(e) as i64;
    if let Some(lo) = lo_exclusive {
        // first n ≡ m(ε) with n > lo
        if n <= lo {
            n += ((lo - n) / step + 1) * step;
        }
    }
    let mut out = Cyclotomic::zero(order);
    while n <= hi {
        out.add_root_int(square_exponent(chi, m, n_root, n, order)?, 1);
        n += step;
    }
    Ok(out)
}

/// `T_ε = Σ_{n ≡ m(ε) mod 2P, 0 ≤ n ≤ 2 p3 N} q^{n²/(4P)}`.
pub fn gauss_T(chi: &ChiFunction, e: Eps, m: i64, n_root: u64, order: u64) -> Result<Cyclotomic> {
    let upper = 2 * chi.p()[2] as i64 * n_root as i64;
    progression_sum(chi, e, m, n_root, None, upper, order)
}

/// `S_ε = Σ_{n ≡ m(ε) mod 2P, 2 p3 N < n ≤ 4 p3 N} q^{n²/(4P)}`.
pub fn gauss_S(chi: &ChiFunction, e: Eps, m: i64, n_root: u64, order: u64) -> Result<Cyclotomic> {
    let half = 2 * chi.p()[2] as i64 * n_root as i64;
    progression_sum(chi, e, m, n_root, Some(half), 2 * half, order)
}

/// Checks that `T_ε` and `S_ε` lie in `q^{m(ε)²/(4P)} ℤ[q]`.
pub fn gauss_membership(chi: &ChiFunction, e: Eps, m: i64, n_root: u64, order: u64) -> Result<bool> {
    let shift = square_exponent(chi, m, n_root, chi.m_of_epsilon(e) as i64, order)?;
    for v in [gauss_T(chi, e, m, n_root, order)?, gauss_S(chi, e, m, n_root, order)?] {
        let reduced = v.mul_root(-shift);
        if !reduced.canonical().iter().all(|c| c.is_integer()) {
            return Ok(false);
        }
        // the quotient must also be a polynomial in ζ_N
        let stride = (order / n_root) as usize;
        if reduced.coeffs().iter().enumerate().any(|(j, c)| j % stride != 0 && !num_traits::Zero::is_zero(c)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `e(num/den) = e^{2πi num/den}` as a power of `ζ_L`.
fn phase(num: i64, den: i64, order: u64) -> Result<i64> {
    let l = order as i64;
    if l % den != 0 {
        return Err(Error::OrderTooSmall { order, needed: den as u64 });
    }
    Ok((num.rem_euclid(den) * (l / den)).rem_euclid(l))
}

struct Pieces {
    chi: ChiFunction,
    p3: i64,
    m: i64,
    n: u64,
    order: u64,
    t: Vec<Cyclotomic>,
    s: Vec<Cyclotomic>,
}

impl Pieces {
    fn new(p3: u64, l3: u64, m: i64, n: u64) -> Result<Self> {
        check_root(m, n)?;
        let chi = ChiFunction::main(p3, l3)?;
        let order = 4 * chi.big_p() * n;
        let t = ALL_EPS.iter().map(|&e| gauss_T(&chi, e, m, n, order)).collect::<Result<_>>()?;
        let s = ALL_EPS.iter().map(|&e| gauss_S(&chi, e, m, n, order)).collect::<Result<_>>()?;
        Ok(Self {
            chi,
            p3: p3 as i64,
            m,
            n,
            order,
            t,
            s,
        })
    }

    fn get(&self, label: &str) -> &Cyclotomic {
        let e = eps_from_str(&label[1..]).expect("label");
        let i = ALL_EPS.iter().position(|x| *x == e).unwrap();
        if label.starts_with('T') {
            &self.t[i]
        } else {
            &self.s[i]
        }
    }

    fn idx(e: Eps) -> usize {
        ALL_EPS.iter().position(|x| *x == e).unwrap()
    }

    fn mm(&self, e: Eps) -> i64 {
        self.chi.m_of_epsilon(e) as i64
    }
}

type Failure = Option<(Vec<BigRational>, Vec<BigRational>)>;

/// Records `lhs = ζ_L^k rhs`, keeping the first failure.
fn check_rel(first: &mut Failure, lhs: &Cyclotomic, k: i64, rhs: &Cyclotomic) {
    if first.is_some() {
        return;
    }
    let r = rhs.mul_root(k);
    if lhs != &r {
        *first = Some((lhs.canonical(), r.canonical()));
    }
}

fn check_congruence(first: &mut Failure, num: i64, den: i64, target_num: i64, target_den: i64) {
    // num/den ≡ target_num/target_den (mod 1)
    if first.is_some() {
        return;
    }
    let diff = BigRational::new(num.into(), den.into()) - BigRational::new(target_num.into(), target_den.into());
    if !diff.is_integer() {
        *first = Some((
            vec![BigRational::new(num.into(), den.into())],
            vec![BigRational::new(target_num.into(), target_den.into())],
        ));
    }
}

fn half_sum(a: i8, b: i8) -> i64 {
    (a as i64 + b as i64) / 2
}

fn pieces1_failures(pc: &Pieces) -> Result<(Failure, usize)> {
    let n = pc.n as i64;
    let two_p = 2 * pc.chi.big_p() as i64;
    let l = pc.order;
    let mut first = None;
    let mut count = 0;
    for &a in &ALL_EPS {
        for &b in &ALL_EPS {
            let (ma, mb) = (pc.mm(a), pc.mm(b));
            let (ia, ib) = (Pieces::idx(a), Pieces::idx(b));
            let even = |x: i64| x.rem_euclid(2) == 0;
            let div3 = |x: i64| x.rem_euclid(3) == 0;
            if even(half_sum(a[0], b[0]) - n) && div3(a[1] as i64 + b[1] as i64 - n) && b[2] == -a[2] {
                count += 1;
                check_congruence(&mut first, ma + mb, two_p, n, 6);
                let k = phase((pc.p3 * n - mb) * pc.m, 6, l)?;
                check_rel(&mut first, &pc.t[ia], k, &pc.t[ib]);
            }
            if even(half_sum(a[0], -b[0]) - n) && div3(a[1] as i64 - b[1] as i64 - n) && b[2] == a[2] {
                count += 1;
                check_congruence(&mut first, ma - mb, two_p, n, 6);
                let k = phase((pc.p3 * n + mb) * pc.m, 6, l)?;
                check_rel(&mut first, &pc.s[ia], k, &pc.t[ib]);
            }
            if even(half_sum(a[0], b[0])) && div3(a[1] as i64 + b[1] as i64 - 2 * n) && b[2] == -a[2] {
                count += 1;
                check_congruence(&mut first, ma + mb, two_p, n, 3);
                let k = phase((2 * pc.p3 * n - mb) * pc.m, 3, l)?;
                check_rel(&mut first, &pc.s[ia], k, &pc.t[ib]);
            }
            if even(half_sum(a[0], b[0]) - n) && div3(a[1] as i64 + b[1] as i64) && b[2] == -a[2] {
                count += 1;
                check_congruence(&mut first, ma + mb, two_p, n, 2);
                let k = phase((pc.p3 * n - mb) * pc.m, 2, l)?;
                check_rel(&mut first, &pc.s[ia], k, &pc.s[ib]);
            }
        }
    }
    Ok((first, count))
}

fn gauss_record(identity: &str, p3: u64, l3: u64, m: i64, n: u64) -> VerificationRecord {
    VerificationRecord::new("gauss", format!("{identity}(p3={p3},l3={l3})")).root(m, n)
}

/// Every relation of the four-case proposition on `(T_ε, S_ε)` that applies at `(M, N)`.
pub fn verify_pieces1(p3: u64, l3: u64, m: i64, n: u64) -> Result<VerificationRecord> {
    let start = Instant::now();
    let pc = Pieces::new(p3, l3, m, n)?;
    let (first, _) = pieces1_failures(&pc)?;
    Ok(gauss_record("pieces1", p3, l3, m, n)
        .aggregate(pc.order, first)
        .elapsed(start.elapsed()))
}

/// Phase of a corollary relation.
#[derive(Clone, Copy)]
enum Ph {
    One,
    Neg,
    /// `e^{πi k p3 M/3}`
    P3m(i64),
}

type Chain = (&'static str, &'static [(Ph, &'static str)]);

use Ph::{Neg, One, P3m};

const BLOCK0: &[Chain] = &[
    ("T+++", &[(P3m(-1), "T---"), (P3m(1), "S+++"), (P3m(-2), "S---")]),
    // printed with the two S phases exchanged
    ("T++-", &[(P3m(-1), "T--+"), (P3m(1), "S++-"), (P3m(-2), "S--+")]),
    ("T+-+", &[(P3m(1), "T-+-"), (P3m(-1), "S+-+"), (P3m(2), "S-+-")]),
    ("T+--", &[(P3m(1), "T-++"), (P3m(-1), "S+--"), (P3m(2), "S-++")]),
];
const BLOCK1: &[Chain] = &[
    ("T+-+", &[(One, "T+--")]),
    ("T--+", &[(One, "T---")]),
    ("T-++", &[(One, "S+-+"), (One, "S++-")]),
    ("T-+-", &[(One, "S+--"), (One, "S+++")]),
    ("T+++", &[(One, "S--+"), (One, "S-+-")]),
    ("T++-", &[(One, "S---"), (One, "S-++")]),
];
const BLOCK2: &[Chain] = &[
    ("T+++", &[(Neg, "T-+-")]),
    ("T++-", &[(Neg, "T-++")]),
    ("T+-+", &[(Neg, "S+++"), (One, "S---")]),
    ("T+--", &[(Neg, "S++-"), (One, "S--+")]),
    ("T--+", &[(Neg, "S-++"), (One, "S+--")]),
    ("T---", &[(Neg, "S-+-"), (One, "S+-+")]),
];
// derived from the four-case proposition; the phases carry p3
const BLOCK3: &[Chain] = &[
    ("T+++", &[(P3m(2), "T+--"), (P3m(-2), "S-++"), (P3m(-2), "S---")]),
    ("T++-", &[(P3m(2), "T+-+"), (P3m(-2), "S-+-"), (P3m(-2), "S--+")]),
    ("T-++", &[(P3m(2), "T---"), (P3m(-2), "S+++"), (P3m(-2), "S+--")]),
    ("T-+-", &[(P3m(2), "T--+"), (P3m(-2), "S++-"), (P3m(-2), "S+-+")]),
];
const BLOCK4: &[Chain] = &[
    ("T+-+", &[(Neg, "T---")]),
    ("T+--", &[(Neg, "T--+")]),
    ("T+++", &[(Neg, "S+-+"), (One, "S-+-")]),
    ("T++-", &[(Neg, "S+--"), (One, "S-++")]),
    ("T-++", &[(Neg, "S--+"), (One, "S++-")]),
    ("T-+-", &[(Neg, "S---"), (One, "S+++")]),
];
const BLOCK5: &[Chain] = &[
    ("T+++", &[(One, "T++-")]),
    ("T-++", &[(One, "T-+-")]),
    ("T--+", &[(One, "S+++"), (One, "S+--")]),
    ("T---", &[(One, "S++-"), (One, "S+-+")]),
    ("T+-+", &[(One, "S-++"), (One, "S---")]),
    ("T+--", &[(One, "S-+-"), (One, "S--+")]),
];

/// The relations for `N mod 6`, as an exact table.
fn corollary_block(r: u64) -> &'static [Chain] {
    [BLOCK0, BLOCK1, BLOCK2, BLOCK3, BLOCK4, BLOCK5][r as usize % 6]
}

/// The residue-class relations between the `T_ε` and `S_ε` for `N mod 6`.
pub fn verify_corollary_pieces(p3: u64, l3: u64, m: i64, n: u64) -> Result<VerificationRecord> {
    let start = Instant::now();
    let pc = Pieces::new(p3, l3, m, n)?;
    let mut first = None;
    for (lhs, chain) in corollary_block(n % 6) {
        for (ph, rhs) in chain.iter() {
            let k = match ph {
                One => 0,
                Neg => phase(1, 2, pc.order)?,
                P3m(j) => phase(j * pc.p3 * pc.m, 6, pc.order)?,
            };
            check_rel(&mut first, pc.get(lhs), k, pc.get(rhs));
        }
    }
    if n % 6 == 3 {
        let (f, _) = pieces1_failures(&pc)?;
        if first.is_none() {
            first = f;
        }
    }
    Ok(gauss_record("corollary-pieces", p3, l3, m, n)
        .aggregate(pc.order, first)
        .elapsed(start.elapsed()))
}

/// `Σ_{n ≤ 6 p3 N} χ(n) q^{n²/(24 p3)} = 4 Σ_{n ≤ 2 p3 N} χ(n) q^{n²/(24 p3)}`.
pub fn verify_gensum4sum(p3: u64, l3: u64, m: i64, n: u64) -> Result<VerificationRecord> {
    let start = Instant::now();
    let chi = ChiFunction::main(p3, l3)?;
    let order = 4 * chi.big_p() * n;
    let top = (p3 * n) as i64;
    let lhs = chi_sum(&chi, m, n, 0, 6 * top, order)?;
    let rhs = chi_sum(&chi, m, n, 0, 2 * top, order)?.scale(&BigRational::from_integer(4.into()));
    Ok(gauss_record("gensum4sum", p3, l3, m, n)
        .compare(&lhs, &rhs)
        .elapsed(start.elapsed()))
}
