use crate::arith::{LaurentPoly, RationalFunction};
use crate::error::{Error, Result};
use crate::qseries::{q_binomial, q_pochhammer};

use super::transforms::star_rf;
use super::{BaileyPair, Rel};

/// The three chain identities linking an iterated pair to a finite sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keychain {
    /// Pairs relative to `q`.
    Lemma,
    /// Pairs relative to `q²`, passed through the lattice.
    Bis,
    /// Pairs relative to `q²`, used directly. The prefactor is
    /// `(1 - q²)/((q)_{n-1} (q²)_n)`, which is what the defining relation with
    /// `a = q²` produces.
    Ter,
}

impl Keychain {
    fn rel(self) -> Rel {
        match self {
            Keychain::Lemma => Rel::Q,
            _ => Rel::Q2,
        }
    }
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Both sides of the chain identity at `(p, n)`.
pub fn keychain_sides(
    pair: &BaileyPair,
    which: Keychain,
    p: u32,
    n: u64,
) -> Result<(RationalFunction, RationalFunction)> {
    if pair.rel != which.rel() {
        return Err(Error::WrongRelativeParameter {
            expected: which.rel().name(),
            found: pair.rel.name(),
        });
    }
    if n == 0 || p == 0 {
        return Err(Error::InvalidParameter("keychain needs n >= 1 and p >= 1".into()));
    }
    let ni = n as i64;
    let pi = p as i64;
    let w = |x: i64| match which {
        Keychain::Lemma => (ni - x - 1) * (ni - x),
        _ => (ni - x - 1) * (ni - x + 1),
    };

    let top = ni - 1;
    let mut v: Vec<LaurentPoly> = vec![LaurentPoly::one(); n as usize];
    for _ in 1..p {
        v = (0..=top)
            .map(|m| {
                (0..=m)
                    .map(|x| &(&LaurentPoly::q_pow(w(x)) * &q_binomial(m, x)) * &v[x as usize])
                    .sum()
            })
            .collect();
    }
    let mut lhs = RationalFunction::zero();
    for m in 0..=top {
        let t = pair
            .beta((ni - m - 1) as u64)
            .mul_laurent(&(&LaurentPoly::q_pow(w(m)) * &v[m as usize]))
            .div_laurent(&q_pochhammer(1, m as u64))?;
        lhs = &lhs + &t;
    }

    let binom2 = |k: i64| k * (k + 1) / 2;
    let mut sum = RationalFunction::zero();
    for k in 0..ni {
        let ku = k as u64;
        let (den_shift, extra, alpha) = match which {
            Keychain::Lemma => (1 + ni, pi * (k * k + k), pair.alpha(ku)),
            Keychain::Bis => {
                let t = |j: u64| {
                    let ji = j as i64;
                    pair.alpha(j).mul_laurent(&LaurentPoly::q_pow(pi * (ji * ji + 2 * ji)))
                };
                (1 + ni, 0, star_rf(t, ku))
            }
            Keychain::Ter => (2 + ni, pi * (k * k + 2 * k), pair.alpha(ku)),
        };
        let num = &q_pochhammer(1 - ni, ku) * &LaurentPoly::signed_q_pow(sign(k), ni * k - binom2(k) + extra);
        let t = alpha.mul_laurent(&num).div_laurent(&q_pochhammer(den_shift, ku))?;
        sum = &sum + &t;
    }
    let rhs = match which {
        Keychain::Ter => sum
            .mul_laurent(&LaurentPoly::one_minus_q_pow(2))
            .div_laurent(&(&q_pochhammer(1, n - 1) * &q_pochhammer(2, n)))?,
        _ => sum.div_laurent(&(&q_pochhammer(1, n - 1) * &q_pochhammer(2, n - 1)))?,
    };
    Ok((lhs, rhs))
}

/// Checks the chain identity as an identity of rational functions in `q`.
pub fn verify_keychain(pair: &BaileyPair, which: Keychain, p: u32, n: u64) -> Result<bool> {
    let (lhs, rhs) = keychain_sides(pair, which, p, n)?;
    Ok(lhs.cross_eq(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(i: u8) -> BaileyPair {
        BaileyPair::standard(i).unwrap()
    }

    #[test]
    fn examples() {
        for n in 1..=4 {
            assert!(verify_keychain(&bp(1), Keychain::Lemma, 1, n).unwrap());
        }
        for n in 1..=3 {
            assert!(verify_keychain(&bp(7), Keychain::Bis, 2, n).unwrap());
            assert!(verify_keychain(&bp(9), Keychain::Ter, 1, n).unwrap());
        }
    }

    #[test]
    fn ter_prefactor_uses_q_squared_pochhammer() {
        // at n = 1 the left side is β_0 = 1 and the sum is α_0 = 1, so the
        // prefactor must be 1: (1 - q²)/((q)_0 (q²)_1), not (1 - q²)/((q)_0 (q)_1)
        let (lhs, rhs) = keychain_sides(&bp(9), Keychain::Ter, 1, 1).unwrap();
        assert!(lhs.to_laurent().unwrap().is_one());
        assert!(rhs.to_laurent().unwrap().is_one());
        for i in [9, 10] {
            for p in 1..=2 {
                for n in 1..=4 {
                    assert!(verify_keychain(&bp(i), Keychain::Ter, p, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn wrong_pair_kind_is_rejected() {
        assert!(verify_keychain(&bp(1), Keychain::Ter, 1, 1).is_err());
        assert!(verify_keychain(&bp(7), Keychain::Lemma, 1, 1).is_err());
    }
}
