use std::time::Instant;

use num_rational::BigRational;

use crate::arith::LaurentPoly;
use crate::bailey::{bp_alpha, hat_part, star_transform};
use crate::eichler::ChiFunction;
use crate::error::{Error, Result};
use crate::record::VerificationRecord;

use super::params::MainFamilyParams;

/// Piecewise in `N mod 3`; equals `-1` at every primitive `N`-th root of unity.
pub fn correction_lambda(n: u64) -> LaurentPoly {
    let n = n as i64;
    let (r, rest) = (n / 3, n % 3);
    let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
    let tail = match rest {
        0 => LaurentPoly::from_pairs(&[
            ((15 * r * r + r) / 2, sign(r)),
            ((15 * r * r - r) / 2, sign(r)),
        ]),
        1 => LaurentPoly::signed_q_pow(sign(r), (15 * r * r + 11 * r + 2) / 2),
        _ => LaurentPoly::signed_q_pow(sign(r + 1), (15 * r * r + 19 * r + 6) / 2),
    };
    &LaurentPoly::from_int(-2) + &tail
}

/// Piecewise in `k mod 3`; `γ_{N-1}` equals `-1` at primitive `N`-th roots.
pub fn correction_gamma(k: u64) -> LaurentPoly {
    let k = k as i64;
    match k % 3 {
        2 => {
            let r = (k + 1) / 3;
            LaurentPoly::from_pairs(&[(3 * r * r - 2 * r, 1), (3 * r * r - r, 1)])
        }
        0 => {
            let r = k / 3;
            LaurentPoly::signed_q_pow(-1, 3 * r * r + r)
        }
        _ => {
            let r = (k - 1) / 3;
            LaurentPoly::signed_q_pow(-1, 3 * r * r + 2 * r)
        }
    }
}

/// Piecewise in `N mod 3`; equals `(-1)^{N+1}` at primitive `N`-th roots.
pub fn correction_kappa(n: u64) -> LaurentPoly {
    let n = n as i64;
    match n % 3 {
        0 => {
            let r = n / 3;
            LaurentPoly::from_pairs(&[(r * (3 * r - 1) / 2, -1), (r * (3 * r + 1) / 2, -1)])
        }
        1 => {
            let r = (n - 1) / 3;
            LaurentPoly::q_pow(r * (3 * r + 1) / 2)
        }
        _ => {
            let r = (n - 2) / 3;
            LaurentPoly::q_pow((r + 1) * (3 * r + 2) / 2)
        }
    }
}

/// The Bailey pair behind each family's polynomial identity.
pub(crate) fn pair_of_family(family: u8) -> u8 {
    [6, 9, 3, 4, 7, 1, 2, 5, 8, 10][family as usize - 1]
}

/// `Σ_{n=0}^{2 p3 N} χ(n) q^{(n² - c)/(4P)}`.
pub fn chi_poly(chi: &ChiFunction, c: u64, p3: u64, n_max: u64) -> Result<LaurentPoly> {
    let four_p = 4 * chi.big_p() as i64;
    let c = c as i64;
    let mut out = LaurentPoly::zero();
    for n in 0..=(2 * p3 * n_max) as i64 {
        let v = chi.eval(n);
        if v == 0 {
            continue;
        }
        let e = n * n - c;
        if e.rem_euclid(four_p) != 0 {
            return Err(Error::NonIntegralExponent {
                n,
                shift: c,
                modulus: four_p,
            });
        }
        out.add_term(e.div_euclid(four_p), BigRational::from_integer(v.into()));
    }
    Ok(out)
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn half_signed(k: i64) -> BigRational {
    BigRational::new(sign(k).into(), 2.into())
}

/// The Bailey-sum side of the polynomial identity for `family` at `(p, N)`.
pub fn poly_lhs(family: u8, p: u32, n: u64) -> Result<LaurentPoly> {
    let bp = pair_of_family(family);
    let p = p as i64;
    let ni = n as i64;
    let tri = |k: i64| k * (k + 1) / 2;
    let mut s = LaurentPoly::zero();
    match bp {
        1..=6 => {
            for k in 0..ni {
                let w = LaurentPoly::signed_q_pow(sign(k), tri(k) + (p - 1) * (k * k + k));
                s += &(&w * &bp_alpha(bp, k as u64)?);
            }
            match bp {
                5 => s = &s * &LaurentPoly::one_minus_q_pow(1),
                6 => s = &s * &LaurentPoly::from_pairs(&[(-1, 1), (0, -1)]),
                _ => {}
            }
        }
        7 | 8 => {
            let seq = |j: u64| {
                let ji = j as i64;
                &LaurentPoly::q_pow(p * (ji * ji + 2 * ji)) * &bp_alpha(bp, j).expect("valid pair")
            };
            for k in 0..ni {
                let w = LaurentPoly::signed_q_pow(sign(k), -tri(k));
                s += &(&w * &star_transform(seq, k as u64)?);
            }
        }
        _ => {
            let term = |k: i64| {
                &LaurentPoly::signed_q_pow(sign(k), -tri(k) + p * (k + 1) * (k + 1)) * &hat_part(bp, k as u64)
            };
            let tail = LaurentPoly::monomial(half_signed(ni), -(ni - 1) * ni / 2 + p * ni * ni);
            let last = hat_part(bp, n - 1);
            if bp == 9 {
                for k in 0..ni {
                    s += &term(k);
                }
                s += &LaurentPoly::one();
                s += &(&tail * &(&last - &correction_gamma(n - 1)));
            } else {
                for k in 0..ni - 1 {
                    s += &term(k);
                }
                s -= &(&tail * &last);
                s -= &LaurentPoly::one();
                let k_tail = LaurentPoly::monomial(half_signed(ni), p * ni * ni);
                s -= &(&k_tail * &correction_kappa(n));
            }
        }
    }
    Ok(s)
}

/// The χ side of the polynomial identity for `family` at `(p, N)`.
pub fn poly_rhs(family: u8, p: u32, n: u64) -> Result<LaurentPoly> {
    let prm = MainFamilyParams::new(family, p)?;
    let chi = ChiFunction::main(prm.p3, prm.ell3)?;
    let s = chi_poly(&chi, prm.c, prm.p3, n)?;
    Ok(match family {
        8 => s,
        1 if prm.special_case => &s - &correction_lambda(n).shift(-1),
        1 => s,
        _ => -&s,
    })
}

/// The polynomial identity in `q` linking the Bailey sum of `family` to its χ-sum.
pub fn verify_poly_identity(family: u8, p: u32, n: u64) -> Result<VerificationRecord> {
    let start = Instant::now();
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let lhs = poly_lhs(family, p, n)?;
    let rhs = poly_rhs(family, p, n)?;
    let id = if family == 1 && p == 1 {
        "poly1-special".to_string()
    } else {
        format!("poly{family}")
    };
    Ok(VerificationRecord::new("poly", id)
        .family(family as u32)
        .p(p)
        .n(n)
        .compare_laurent(&lhs, &rhs)
        .elapsed(start.elapsed()))
}
