use std::time::Instant;

use num_rational::BigRational;

use crate::arith::Cyclotomic;
use crate::error::{Error, Result};
use crate::record::VerificationRecord;

use super::gauss::{check_root, chi_sum, square_exponent};
use super::ChiFunction;

/// `Σ_{n=0}^{PN} χ(n) (1 - n/(PN)) ζ_N^{M n²/(4P)}`, in order `4PN`.
pub fn eichler_limit(chi: &ChiFunction, m: i64, n_root: u64) -> Result<Cyclotomic> {
    check_root(m, n_root)?;
    let order = 4 * chi.big_p() * n_root;
    let pn = (chi.big_p() * n_root) as i64;
    let mut out = Cyclotomic::zero(order);
    for n in 0..=pn {
        let c = chi.eval(n);
        if c != 0 {
            let w = BigRational::new((c as i64 * (pn - n)).into(), pn.into());
            out.add_root(square_exponent(chi, m, n_root, n, order)?, &w);
        }
    }
    Ok(out)
}

fn check_hypotheses(chi: &ChiFunction) -> Result<()> {
    let bp = chi.big_p();
    if bp % 4 != 2 {
        return Err(Error::Precondition(format!("(i) P = {bp} is not 2 mod 4")));
    }
    if let Some((r, _)) = chi.residues().find(|(r, _)| r % 2 == 0) {
        return Err(Error::Precondition(format!("(ii) chi is nonzero at the even residue {r}")));
    }
    let bp = bp as i64;
    if let Some(n) = (0..2 * bp).find(|&n| chi.eval(bp - n) != chi.eval(n)) {
        return Err(Error::Precondition(format!("(iii) chi(P - n) != chi(n) at n = {n}")));
    }
    Ok(())
}

/// `2 Σ (1 - n/(PN)) χ(n) q^{n²/4P} = Σ χ(n) q^{n²/4P}` over `0 ≤ n ≤ PN`.
pub fn verify_chiprop(chi: &ChiFunction, m: i64, n_root: u64) -> Result<VerificationRecord> {
    let start = Instant::now();
    check_hypotheses(chi)?;
    let lhs = eichler_limit(chi, m, n_root)?.scale(&BigRational::from_integer(2.into()));
    let pn = (chi.big_p() * n_root) as i64;
    let rhs = chi_sum(chi, m, n_root, 0, pn, lhs.order())?;
    let [p1, p2, p3] = chi.p();
    let [l1, l2, l3] = chi.ell();
    Ok(
        VerificationRecord::new("chiprop", format!("chiprop(p=({p1},{p2},{p3}),l=({l1},{l2},{l3}))"))
            .root(m, n_root)
            .compare(&lhs, &rhs)
            .elapsed(start.elapsed()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    fn float_limit(chi: &ChiFunction, m: i64, n_root: u64) -> Complex64 {
        let bp = chi.big_p() as f64;
        let pn = bp * n_root as f64;
        (0..=pn as i64)
            .map(|n| {
                let w = chi.eval(n) as f64 * (1.0 - n as f64 / pn);
                let t = 2.0 * PI * m as f64 * (n * n) as f64 / (4.0 * bp * n_root as f64);
                Complex64::from_polar(w, t)
            })
            .sum()
    }

    #[test]
    fn matches_floating_point_sum() {
        for (p3, l3, m, n) in [(5, 1, 1, 1), (7, 2, 2, 5), (11, 3, 3, 4), (13, 5, 1, 6)] {
            let chi = ChiFunction::main(p3, l3).unwrap();
            let exact = eichler_limit(&chi, m, n).unwrap().to_complex();
            let f = float_limit(&chi, m, n);
            assert!((exact.0 - f.re).abs() < 1e-10 && (exact.1 - f.im).abs() < 1e-10);
        }
    }

    #[test]
    fn empty_support_gives_zero() {
        let chi = ChiFunction::main(5, 1).unwrap();
        let mut empty = chi.clone();
        for (r, _) in chi.residues() {
            empty = empty.perturbed(r, 0);
        }
        assert!(eichler_limit(&empty, 1, 3).unwrap().is_zero());
    }

    #[test]
    fn halving_lemma() {
        let chi = ChiFunction::main(5, 1).unwrap();
        let twice = eichler_limit(&chi, 1, 2).unwrap().scale(&BigRational::from_integer(2.into()));
        assert_eq!(twice, chi_sum(&chi, 1, 2, 0, 60, 240).unwrap());
        assert!(verify_chiprop(&chi, 1, 3).unwrap().pass);
        let chi = ChiFunction::main(7, 2).unwrap();
        assert!(verify_chiprop(&chi, 2, 5).unwrap().pass);
    }

    #[test]
    fn hypotheses_are_enforced() {
        let chi = ChiFunction::main(5, 1).unwrap().perturbed(2, 1);
        match verify_chiprop(&chi, 1, 1) {
            Err(Error::Precondition(s)) => assert!(s.starts_with("(ii)")),
            other => panic!("{other:?}"),
        }
        let chi = ChiFunction::main(5, 1).unwrap().perturbed(3, 1);
        match verify_chiprop(&chi, 1, 1) {
            Err(Error::Precondition(s)) => assert!(s.starts_with("(iii)")),
            other => panic!("{other:?}"),
        }
        let chi = ChiFunction::new([3, 5, 7], [1, 1, 1]).unwrap();
        match verify_chiprop(&chi, 1, 1) {
            Err(Error::Precondition(s)) => assert!(s.starts_with("(i)")),
            other => panic!("{other:?}"),
        }
    }
}
