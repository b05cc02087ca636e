//! Verification records shared by every suite.

use std::time::Duration;

use num_integer::Integer;
use num_rational::BigRational;

use crate::arith::{Cyclotomic, LaurentPoly};

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub suite: String,
    pub identity: String,
    pub family: Option<u32>,
    pub p: Option<u32>,
    pub m: Option<i64>,
    pub n: Option<u64>,
    /// Cyclotomic order of the comparison; 0 for identities in `q`.
    pub order: u64,
    pub pass: bool,
    pub lhs: Vec<BigRational>,
    pub rhs: Vec<BigRational>,
    /// Exponent of the first coordinate when `lhs`/`rhs` are Laurent coefficients.
    pub q_offset: Option<i64>,
    pub elapsed: Duration,
}

impl VerificationRecord {
    pub fn new(suite: &str, identity: impl Into<String>) -> Self {
        Self {
            suite: suite.to_string(),
            identity: identity.into(),
            family: None,
            p: None,
            m: None,
            n: None,
            order: 0,
            pass: false,
            lhs: Vec::new(),
            rhs: Vec::new(),
            q_offset: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn family(mut self, f: u32) -> Self {
        self.family = Some(f);
        self
    }

    pub fn p(mut self, p: u32) -> Self {
        self.p = Some(p);
        self
    }

    pub fn root(mut self, m: i64, n: u64) -> Self {
        self.m = Some(m);
        self.n = Some(n);
        self
    }

    pub fn n(mut self, n: u64) -> Self {
        self.n = Some(n);
        self
    }

    pub fn elapsed(mut self, d: Duration) -> Self {
        self.elapsed = d;
        self
    }

    /// Compares two cyclotomic values in the lcm of their orders.
    pub fn compare(mut self, lhs: &Cyclotomic, rhs: &Cyclotomic) -> Self {
        let order = lhs.order().lcm(&rhs.order());
        let a = lhs.embed(order).expect("lcm is a multiple");
        let b = rhs.embed(order).expect("lcm is a multiple");
        self.order = order;
        self.lhs = a.canonical();
        self.rhs = b.canonical();
        self.pass = self.lhs == self.rhs;
        self
    }

    /// Compares two Laurent polynomials coefficientwise.
    pub fn compare_laurent(mut self, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Self {
        let lo = lhs.min_exp().into_iter().chain(rhs.min_exp()).min().unwrap_or(0);
        let hi = lhs.max_exp().into_iter().chain(rhs.max_exp()).max().unwrap_or(0);
        self.order = 0;
        self.q_offset = Some(lo);
        self.lhs = (lo..=hi).map(|e| lhs.coeff(e)).collect();
        self.rhs = (lo..=hi).map(|e| rhs.coeff(e)).collect();
        self.pass = lhs == rhs;
        self
    }

    /// A record summarizing many sub-checks; keeps the first failing pair.
    pub fn aggregate(mut self, order: u64, failures: Option<(Vec<BigRational>, Vec<BigRational>)>) -> Self {
        self.order = order;
        match failures {
            Some((l, r)) => {
                self.pass = false;
                self.lhs = l;
                self.rhs = r;
            }
            None => self.pass = true,
        }
        self
    }
}
