use crate::arith::{rf_normalize, LaurentPoly, RationalFunction};
use crate::error::{Error, Result};
use crate::qseries::q_pochhammer;

use super::{BaileyPair, PairId, Rel, Sequence};

/// `k = 3r - 1`, `3r`, `3r + 1` as `(-1, r)`, `(0, r)`, `(1, r)`.
pub(crate) fn branch(k: u64) -> (i64, i64) {
    let k = k as i64;
    match k % 3 {
        2 => (-1, (k + 1) / 3),
        0 => (0, k / 3),
        _ => (1, (k - 1) / 3),
    }
}

fn mono(sign: i64, e: i64) -> LaurentPoly {
    LaurentPoly::signed_q_pow(sign, e)
}

/// The part of the BP9/BP10 `α_k` left after removing `(1 - q^{k+1})/(1 - q)`.
pub(crate) fn hat_part(id: u8, k: u64) -> LaurentPoly {
    let (br, r) = branch(k);
    match (id, br) {
        (9, -1) => LaurentPoly::from_pairs(&[(3 * r * r - 2 * r, 1), (3 * r * r - r, -1)]),
        (9, 0) => mono(1, 3 * r * r + r),
        (9, _) => mono(-1, 3 * r * r + 2 * r),
        (10, -1) => LaurentPoly::from_pairs(&[(6 * r * r - r, 1), (6 * r * r - 2 * r, -1)]),
        (10, 0) => mono(1, 6 * r * r + 2 * r),
        (10, _) => mono(-1, 6 * r * r + 7 * r + 2),
        _ => unreachable!("hat part is defined for BP9 and BP10 only"),
    }
}

pub fn bp_alpha(id: u8, k: u64) -> Result<LaurentPoly> {
    let (br, r) = branch(k);
    let ki = k as i64;
    let v = match id {
        1 => match br {
            -1 => mono(1, 6 * r * r - r),
            0 => mono(1, 6 * r * r + r),
            _ => LaurentPoly::from_pairs(&[(6 * r * r + 5 * r + 1, -1), (6 * r * r + 7 * r + 2, -1)]),
        },
        2 => match br {
            -1 => mono(1, 6 * r * r - 4 * r),
            0 => mono(1, 6 * r * r + 4 * r),
            _ => LaurentPoly::from_pairs(&[(6 * r * r + 8 * r + 2, -1), (6 * r * r + 4 * r, -1)]),
        },
        3 => match br {
            -1 => mono(1, 3 * r * r + r),
            0 => mono(1, 3 * r * r - r),
            _ => LaurentPoly::from_pairs(&[(3 * r * r + r, -1), (3 * r * r + 5 * r + 2, -1)]),
        },
        4 => match br {
            -1 => mono(1, 3 * r * r - 2 * r),
            0 => mono(1, 3 * r * r + 2 * r),
            _ => LaurentPoly::from_pairs(&[(3 * r * r + 4 * r + 1, -1), (3 * r * r + 2 * r, -1)]),
        },
        5 | 6 => {
            if ki % 3 == 1 {
                LaurentPoly::zero()
            } else {
                let sign = if ((4 * ki + 1) / 3) % 2 == 0 { 1 } else { -1 };
                let e = if id == 5 { ki * (2 * ki - 1) / 3 } else { ki * (ki - 2) / 3 };
                &LaurentPoly::geometric(2 * ki + 1, 1) * &mono(sign, e)
            }
        }
        7 => match br {
            -1 => LaurentPoly::zero(),
            0 => &LaurentPoly::geometric(3 * r + 1, 2) * &mono(1, 3 * r * r - r),
            _ => &LaurentPoly::geometric(3 * r + 2, 2) * &mono(-1, 3 * r * r + r),
        },
        8 => match br {
            -1 => LaurentPoly::zero(),
            0 => &LaurentPoly::geometric(3 * r + 1, 2) * &mono(1, 6 * r * r + r),
            _ => &LaurentPoly::geometric(3 * r + 2, 2) * &mono(-1, 6 * r * r + 5 * r + 1),
        },
        9 | 10 => &LaurentPoly::geometric(ki + 1, 1) * &hat_part(id, k),
        _ => return Err(Error::InvalidParameter(format!("unknown Bailey pair BP{id}"))),
    };
    Ok(v)
}

pub fn bp_beta(id: u8, k: u64) -> Result<RationalFunction> {
    let ki = k as i64;
    let q2 = q_pochhammer(2, 2 * k);
    let (num, den) = match id {
        1 | 8 => (LaurentPoly::one(), q2),
        2 => (LaurentPoly::q_pow(ki), q2),
        3 | 7 => (LaurentPoly::q_pow(ki * ki), q2),
        4 => (LaurentPoly::q_pow(ki * ki + ki), q2),
        5 => (LaurentPoly::one(), q_pochhammer(1, 2 * k)),
        6 => (LaurentPoly::q_pow(ki * ki - ki), q_pochhammer(1, 2 * k)),
        9 | 10 => {
            let one_plus_q = LaurentPoly::from_pairs(&[(0, 1), (1, 1)]);
            let num = if id == 9 { &LaurentPoly::q_pow(ki * ki + ki) * &one_plus_q } else { one_plus_q };
            (num, &q2 * &LaurentPoly::from_pairs(&[(0, 1), (ki + 1, 1)]))
        }
        _ => return Err(Error::InvalidParameter(format!("unknown Bailey pair BP{id}"))),
    };
    rf_normalize(&num, &den)
}

pub(crate) fn standard(id: u8) -> Result<BaileyPair> {
    bp_alpha(id, 0)?;
    let rel = if id <= 6 { Rel::Q } else { Rel::Q2 };
    Ok(BaileyPair {
        id: PairId::Bp(id),
        rel,
        alpha: Sequence::from_laurent(move |k| bp_alpha(id, k).expect("valid id")),
        beta: Sequence::new(move |k| bp_beta(id, k).expect("valid id")),
    })
}

/// Checks `β_n = Σ_k α_k / ((q)_{n-k} (aq)_{n+k})` for every `n ≤ n_max`.
///
/// Both sides are multiplied by `(q)_n (aq)_{2n}`, which turns every summand
/// on the right into `α_k` times a polynomial.
pub fn verify_pair(pair: &BaileyPair, n_max: u64) -> bool {
    let e = pair.rel.exponent();
    (0..=n_max).all(|n| {
        let ni = n as i64;
        let mut sum = RationalFunction::zero();
        for k in 0..=n {
            let ki = k as i64;
            let weight = &q_pochhammer(ni - ki + 1, k) * &q_pochhammer(e + 1 + ni + ki, n - k);
            sum = &sum + &pair.alpha(k).mul_laurent(&weight);
        }
        let d = &q_pochhammer(1, n) * &q_pochhammer(e + 1, 2 * n);
        let beta = pair.beta(n);
        sum.num() * beta.den() == &(beta.num() * &d) * sum.den()
    })
}
