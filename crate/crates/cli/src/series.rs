use std::fmt::Write;

use num_rational::BigRational;
use qwrt_core::arith::rational_string;
use qwrt_core::eichler::ChiFunction;

/// The first `terms` nonzero terms of `Σ χ(n) q^{n²/(4P)}`, one
/// `exponent coefficient n` line each, in ascending order.
pub fn emit_series(chi: &ChiFunction, terms: usize) -> String {
    let four_p = 4 * chi.big_p() as i64;
    let period = 2 * chi.big_p() as i64;
    let mut out = String::new();
    let mut found = 0;
    let mut n = 0i64;
    while found < terms {
        // an empty period means an empty support
        if n >= period && found == 0 {
            break;
        }
        let c = chi.eval(n);
        if c != 0 {
            let e = BigRational::new((n * n).into(), four_p.into());
            let _ = writeln!(out, "{} {c} {n}", rational_string(&e));
            found += 1;
        }
        n += 1;
    }
    if found == 0 {
        out.push_str("# chi has no nonzero values\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_terms() {
        let chi = ChiFunction::new([2, 3, 5], [1, 1, 1]).unwrap();
        let s = emit_series(&chi, 4);
        let ex: Vec<&str> = s.lines().map(|l| l.split(' ').next().unwrap()).collect();
        assert_eq!(ex, ["1/120", "121/120", "361/120", "841/120"]);
        let chi = ChiFunction::new([2, 3, 7], [1, 1, 2]).unwrap();
        assert_eq!(emit_series(&chi, 1), "25/168 -1 5\n");
    }

    #[test]
    fn empty_support() {
        let chi = ChiFunction::new([2, 3, 5], [1, 1, 1]).unwrap();
        let mut empty = chi.clone();
        for (r, _) in chi.residues() {
            empty = empty.perturbed(r, 0);
        }
        assert_eq!(emit_series(&empty, 1), "# chi has no nonzero values\n");
    }
}
