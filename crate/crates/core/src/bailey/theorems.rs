use std::time::Instant;

use num_rational::BigRational;

use crate::arith::{eval_laurent_at_root, Cyclotomic, LaurentPoly};
use crate::error::{Error, Result};
use crate::qseries::{multisum_eval, FamilyId, RootOfUnity};
use crate::record::VerificationRecord;

use super::pairs::{bp_alpha, hat_part};
use super::transforms::star_transform;

/// The multisum family whose value at roots of unity theorem `thm` computes.
pub fn family_of_theorem(thm: u8) -> Result<FamilyId> {
    let f = match thm {
        1 => 6,
        2 => 7,
        3 => 3,
        4 => 4,
        5 => 8,
        6 => 1,
        7 => 5,
        8 => 9,
        9 => 2,
        10 => 10,
        _ => return Err(Error::InvalidParameter(format!("theorem index {thm} is not in 1..=10"))),
    };
    FamilyId::new(f)
}

fn binom2(k: i64) -> i64 {
    k * (k + 1) / 2
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// The finite sum of theorem `thm` as a Laurent polynomial, for roots of order `n`.
pub fn family_rhs_laurent(thm: u8, p: u32, n: u64) -> Result<LaurentPoly> {
    family_of_theorem(thm)?;
    if p == 0 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    let p = p as i64;
    let n = n as i64;
    let out = match thm {
        1..=6 => {
            let mut s = LaurentPoly::zero();
            for k in 0..n {
                let w = LaurentPoly::signed_q_pow(sign(k), binom2(k) + (p - 1) * (k * k + k));
                s += &(&w * &bp_alpha(thm, k as u64)?);
            }
            let pre = match thm {
                1 | 4 => LaurentPoly::one(),
                2 => LaurentPoly::q_pow(1),
                3 => LaurentPoly::q_pow(-1),
                5 => LaurentPoly::from_pairs(&[(1, -1), (2, 1)]),
                _ => LaurentPoly::from_pairs(&[(-1, -1), (0, 1)]),
            };
            &pre * &s
        }
        7 | 8 => {
            let seq = |k: u64| {
                let ki = k as i64;
                &LaurentPoly::q_pow(p * (ki * ki + 2 * ki)) * &bp_alpha(thm, k).expect("valid id")
            };
            let mut s = LaurentPoly::zero();
            for k in 0..n {
                let w = LaurentPoly::signed_q_pow(sign(k), -binom2(k));
                s += &(&w * &star_transform(seq, k as u64)?);
            }
            let shift = if thm == 7 { p - 1 } else { p };
            s.shift(shift)
        }
        _ => {
            let mut s = LaurentPoly::constant(half());
            for k in 0..n - 1 {
                let w = LaurentPoly::signed_q_pow(sign(k), p - binom2(k) + p * (k * k + 2 * k));
                s += &(&w * &hat_part(thm, k as u64));
            }
            s += &hat_part(thm, (n - 1) as u64).scale(&half());
            s
        }
    };
    Ok(out)
}

/// The right-hand side of theorem `thm` at `z`, in order `N`.
pub fn family_rhs(thm: u8, p: u32, z: RootOfUnity) -> Result<Cyclotomic> {
    let f = family_rhs_laurent(thm, p, z.n)?;
    eval_laurent_at_root(&f, z.m, z.n, z.n)
}

pub fn verify_theorem_family(thm: u8, p: u32, z: RootOfUnity) -> Result<VerificationRecord> {
    let start = Instant::now();
    let family = family_of_theorem(thm)?;
    let lhs = multisum_eval(family, p, z)?;
    let rhs = family_rhs(thm, p, z)?;
    Ok(VerificationRecord::new("bailey-family", format!("thm{thm}"))
        .family(family.index() as u32)
        .p(p)
        .root(z.m, z.n)
        .compare(&lhs, &rhs)
        .elapsed(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(m: i64, n: u64) -> RootOfUnity {
        RootOfUnity::new(m, n).unwrap()
    }

    #[test]
    fn small_instances() {
        assert!(verify_theorem_family(1, 1, root(1, 1)).unwrap().pass);
        assert!(verify_theorem_family(9, 1, root(1, 2)).unwrap().pass);
        assert!(verify_theorem_family(6, 2, root(1, 5)).unwrap().pass);
        assert!(verify_theorem_family(10, 1, root(2, 5)).unwrap().pass);
        let r = family_rhs(5, 1, root(1, 3)).unwrap();
        assert_eq!(r, multisum_eval(FamilyId::new(8).unwrap(), 1, root(1, 3)).unwrap());
    }

    #[test]
    fn every_theorem_on_a_small_grid() {
        for thm in 1..=10 {
            for p in 1..=2 {
                for n in 1..=6 {
                    for z in RootOfUnity::all_for(n) {
                        assert!(verify_theorem_family(thm, p, z).unwrap().pass, "thm{thm} p={p} {z:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn representative_of_m_does_not_matter() {
        for thm in [3, 6] {
            let a = family_rhs(thm, 2, root(2, 5)).unwrap();
            let b = family_rhs(thm, 2, root(7, 5)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn sign_fact_for_the_last_two_theorems() {
        // q^{-C(N,2) + pN²} = (-1)^{N+1} at primitive N-th roots
        for n in 1..=12u64 {
            let ni = n as i64;
            for z in RootOfUnity::all_for(n) {
                for p in 1..=3 {
                    let v = z.q_pow(-ni * (ni - 1) / 2 + p * ni * ni);
                    assert_eq!(v, Cyclotomic::from_int(n, sign(ni + 1)));
                }
            }
        }
    }
}
