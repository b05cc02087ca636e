//! The ten main-theorem identities at roots of unity and the polynomial
//! identities behind them.

mod params;
mod poly;

use std::time::Instant;

use num_rational::BigRational;

use crate::arith::{root_power, Cyclotomic};
use crate::eichler::{eichler_limit, ChiFunction};
use crate::error::Result;
use crate::qseries::{multisum_eval, FamilyId, RootOfUnity};
use crate::record::VerificationRecord;

pub use params::MainFamilyParams;
pub use poly::{
    chi_poly, correction_gamma, correction_kappa, correction_lambda, poly_lhs, poly_rhs, verify_poly_identity,
};

/// `-½ q^δ Ẽ(ζ_N^M)`, plus the family-specific constant, in order `24 p3 N`.
pub fn main_rhs(prm: &MainFamilyParams, z: RootOfUnity) -> Result<Cyclotomic> {
    let chi = ChiFunction::main(prm.p3, prm.ell3)?;
    let order = 4 * prm.big_p() * z.n;
    let limit = eichler_limit(&chi, z.m, z.n)?.embed(order)?;
    let pre = root_power(z.m, z.n, &prm.delta, order)?;
    let mut rhs = (&pre * &limit).scale(&BigRational::new((-1).into(), 2.into()));
    if prm.special_case {
        rhs -= &root_power(z.m, z.n, &BigRational::from_integer((-1).into()), order)?;
    }
    if prm.family == 10 {
        rhs += &Cyclotomic::one(order);
    }
    Ok(rhs)
}

fn main_identity(prm: &MainFamilyParams) -> String {
    let tag = if prm.special_case {
        "main1-special".to_string()
    } else {
        format!("main{}", prm.family)
    };
    format!("{tag}(p3={},l3={})", prm.p3, prm.ell3)
}

/// The multisum of `family` at `ζ_N^M` against the limiting value of its Eichler integral.
pub fn verify_main(family: u8, p: u32, m: i64, n: u64) -> Result<VerificationRecord> {
    let start = Instant::now();
    let prm = MainFamilyParams::new(family, p)?;
    let z = RootOfUnity::new(m, n)?;
    let order = 4 * prm.big_p() * n;
    let lhs = multisum_eval(FamilyId::new(family)?, p, z)?.embed(order)?;
    let rhs = main_rhs(&prm, z)?;
    Ok(VerificationRecord::new("main", main_identity(&prm))
        .family(family as u32)
        .p(p)
        .root(m, n)
        .compare(&lhs, &rhs)
        .elapsed(start.elapsed()))
}

/// A conjectured instance: `(label, family, p, printed exponent)`.
#[derive(Debug, Clone)]
pub struct ConjectureInstance {
    pub label: String,
    pub family: u8,
    pub p: u32,
    pub printed_exponent: BigRational,
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// The conjectured `M = 1` instances, with `p` running over `1..=p_max` for
/// the one stated for all `p`.
pub fn conjecture_instances(p_max: u32) -> Vec<ConjectureInstance> {
    let inst = |family: u8, p: u32, e: BigRational| ConjectureInstance {
        label: format!("conjecture(family={family},p={p})"),
        family,
        p,
        printed_exponent: e,
    };
    let mut v = vec![
        inst(2, 2, rat(-1, 264)),
        inst(3, 2, rat(-1, 1) - rat(49, 264)),
        inst(4, 1, rat(-49, 120)),
        inst(4, 2, rat(-169, 264)),
    ];
    for p in 1..=p_max {
        let pi = p as i64;
        v.push(inst(5, p, rat(1 + 48 * pi, 24 * (1 - 6 * pi))));
    }
    v.push(inst(6, 1, rat(-25, 168)));
    v.push(inst(7, 1, rat(47, 168)));
    v
}

/// One conjectured instance at `ζ_N`. The record also requires the printed
/// exponent to equal the family's `δ`.
pub fn verify_conjecture(c: &ConjectureInstance, n: u64) -> Result<VerificationRecord> {
    let prm = MainFamilyParams::new(c.family, c.p)?;
    let mut r = verify_main(c.family, c.p, 1, n)?;
    r.suite = "conjecture".into();
    r.identity = c.label.clone();
    r.pass &= prm.delta == c.printed_exponent;
    Ok(r)
}

/// Runs every conjectured instance for `1 ≤ N ≤ n_max`.
pub fn verify_conjecture_suite(n_max: u64, p_max: u32) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for c in conjecture_instances(p_max) {
        for n in 1..=n_max {
            out.push(verify_conjecture(&c, n)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::habiro_poincare_eval;

    #[test]
    fn examples() {
        for z in RootOfUnity::all_for(5) {
            assert!(verify_main(2, 1, z.m, z.n).unwrap().pass);
        }
        assert!(verify_main(8, 1, 1, 3).unwrap().pass);
        let r = verify_main(1, 1, 1, 2).unwrap();
        assert!(r.pass);
        assert!(r.identity.starts_with("main1-special"));
    }

    #[test]
    fn special_term_is_needed() {
        let prm = MainFamilyParams::new(1, 1).unwrap();
        let z = RootOfUnity::new(1, 2).unwrap();
        let mut plain = prm.clone();
        plain.special_case = false;
        let lhs = multisum_eval(FamilyId::new(1).unwrap(), 1, z).unwrap().embed(240).unwrap();
        assert_eq!(lhs, main_rhs(&prm, z).unwrap());
        assert_ne!(lhs, main_rhs(&plain, z).unwrap());
    }

    #[test]
    fn grid() {
        for f in 1..=10 {
            for p in 1..=2 {
                for n in 1..=4 {
                    for z in RootOfUnity::all_for(n) {
                        assert!(verify_main(f, p, z.m, z.n).unwrap().pass, "family {f} p {p} {z:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn conjecture_examples() {
        assert!(verify_main(4, 1, 1, 5).unwrap().pass);
        assert!(verify_main(6, 1, 1, 4).unwrap().pass);
        assert!(verify_main(5, 3, 1, 3).unwrap().pass);
        let all = verify_conjecture_suite(4, 3).unwrap();
        assert_eq!(all.len(), 9 * 4);
        assert!(all.iter().all(|r| r.pass));
    }

    #[test]
    fn family_two_at_p_one_matches_habiro_evaluation() {
        // 1 + ζ I(ζ) with I the finite Habiro sum
        for n in 1..=6 {
            for z in RootOfUnity::all_for(n) {
                let h = multisum_eval(FamilyId::new(2).unwrap(), 1, z).unwrap();
                let i = habiro_poincare_eval(z);
                let expect = &Cyclotomic::one(n) + &(&z.q_pow(1) * &i);
                assert_eq!(h, expect);
            }
        }
    }
}
