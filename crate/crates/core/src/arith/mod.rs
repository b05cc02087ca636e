//! Exact arithmetic: rationals, Laurent polynomials, rational functions and
//! cyclotomic field elements.

pub mod cyclotomic;
pub mod intpoly;
pub mod laurent;
pub mod ratfunc;

pub use cyclotomic::{
    cyc_embed, cyc_is_zero, cyclotomic_polynomial, eval_laurent_at_root, parse_rational, rational_string,
    root_power, root_power_exponent, Cyclotomic, CyclotomicPoly,
};
pub use laurent::LaurentPoly;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use ratfunc::{rf_normalize, RationalFunction};

/// `a/b` as a `BigRational`.
pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// The integer `a` as a `BigRational`.
pub fn int(a: i64) -> BigRational {
    BigRational::from_integer(a.into())
}
