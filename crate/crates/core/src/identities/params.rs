use num_rational::BigRational;

use crate::error::{Error, Result};

/// Coefficients `(x, y)` of `x p + y`.
type Lin = (i64, i64);

/// One row per family: sign of `p3 = 6p ± 1`, `ℓ3`, the base of `c = base²`,
/// and the integer part of the prefactor exponent.
struct Row {
    p3_sign: i64,
    ell3: Lin,
    c_base: Lin,
    shift: Lin,
}

const fn row(p3_sign: i64, ell3: Lin, c_base: Lin, shift: Lin) -> Row {
    Row {
        p3_sign,
        ell3,
        c_base,
        shift,
    }
}

const TABLE: [Row; 10] = [
    row(-1, (0, 1), (6, 5), (0, 0)),
    row(-1, (1, 0), (0, 1), (0, 0)),
    row(-1, (2, -1), (6, -5), (0, -1)),
    row(-1, (2, 0), (6, 1), (0, 0)),
    row(-1, (3, -1), (12, -5), (1, -1)),
    row(1, (2, 0), (6, -1), (0, 0)),
    row(1, (2, 1), (6, 5), (0, 1)),
    row(1, (0, 1), (6, -5), (0, 1)),
    // the integer part is p, one more than the printed p - 1
    row(1, (3, 0), (12, -1), (1, 0)),
    row(1, (1, 0), (0, 1), (0, 0)),
];

/// The χ-function and prefactor of one main-theorem family at a given `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainFamilyParams {
    pub family: u8,
    pub p: u32,
    pub p3: u64,
    pub ell3: u64,
    /// The constant in the exponents `(n² - c)/(4P)`.
    pub c: u64,
    pub shift: i64,
    /// `shift - c/(24 p3)`.
    pub delta: BigRational,
    /// Family 1 at `p = 1`, which carries the extra term `-ζ^{-M}`.
    pub special_case: bool,
}

impl MainFamilyParams {
    pub fn new(family: u8, p: u32) -> Result<Self> {
        if !(1..=10).contains(&family) {
            return Err(Error::InvalidParameter(format!("family {family} is not in 1..=10")));
        }
        if p == 0 {
            return Err(Error::InvalidParameter("p must be at least 1".into()));
        }
        let r = &TABLE[family as usize - 1];
        let pi = p as i64;
        let lin = |(x, y): Lin| x * pi + y;
        let p3 = (6 * pi + r.p3_sign) as u64;
        let c = lin(r.c_base).pow(2) as u64;
        let shift = lin(r.shift);
        let delta = BigRational::from_integer(shift.into()) - BigRational::new((c as i64).into(), (24 * p3 as i64).into());
        Ok(Self {
            family,
            p,
            p3,
            ell3: lin(r.ell3) as u64,
            c,
            shift,
            delta,
            special_case: family == 1 && p == 1,
        })
    }

    /// `P = 6 p3`.
    pub fn big_p(&self) -> u64 {
        6 * self.p3
    }
}
