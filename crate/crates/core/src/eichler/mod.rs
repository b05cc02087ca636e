//! Periodic functions `χ_p^ℓ`, incomplete quadratic Gauss sums and the
//! limiting values of the associated Eichler integrals.

mod gauss;
mod limit;

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};

pub use gauss::{
    chi_sum, gauss_S, gauss_T, gauss_membership, verify_corollary_pieces, verify_gensum4sum, verify_pieces1,
};
pub use limit::{eichler_limit, verify_chiprop};

/// A sign vector `ε ∈ {±1}³`.
pub type Eps = [i8; 3];

/// All sign vectors, in the order `+++, ++-, +-+, +--, -++, -+-, --+, ---`.
pub const ALL_EPS: [Eps; 8] = [
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [1, -1, -1],
    [-1, 1, 1],
    [-1, 1, -1],
    [-1, -1, 1],
    [-1, -1, -1],
];

/// Parses `"+-+"` style labels.
pub fn eps_from_str(s: &str) -> Option<Eps> {
    let v: Vec<i8> = s
        .chars()
        .map(|c| match c {
            '+' => Some(1),
            '-' => Some(-1),
            _ => None,
        })
        .collect::<Option<_>>()?;
    v.try_into().ok()
}

pub fn eps_label(e: Eps) -> String {
    e.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
}

/// The odd `2P`-periodic function `χ_p^ℓ`, stored as its residue table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiFunction {
    p: [u64; 3],
    ell: [u64; 3],
    big_p: u64,
    m: [u64; 8],
    table: BTreeMap<u64, i8>,
}

impl ChiFunction {
    pub fn new(p: [u64; 3], ell: [u64; 3]) -> Result<Self> {
        for j in 0..3 {
            if p[j] == 0 || ell[j] == 0 || ell[j] >= p[j] {
                return Err(Error::InvalidParameter(format!("need 0 < l_j < p_j, got p = {p:?}, l = {ell:?}")));
            }
            for k in j + 1..3 {
                if p[j].gcd(&p[k]) != 1 {
                    return Err(Error::InvalidParameter(format!("p = {p:?} is not pairwise coprime")));
                }
            }
        }
        let big_p = p[0] * p[1] * p[2];
        let two_p = 2 * big_p as i64;
        let mut m = [0u64; 8];
        let mut table = BTreeMap::new();
        for (i, e) in ALL_EPS.iter().enumerate() {
            let mut v = big_p as i64;
            for j in 0..3 {
                v += e[j] as i64 * ell[j] as i64 * (big_p / p[j]) as i64;
            }
            let r = v.rem_euclid(two_p) as u64;
            m[i] = r;
            let sign = -e[0] * e[1] * e[2];
            if let Some(&old) = table.get(&r) {
                if old != sign {
                    return Err(Error::IllFormedChi(format!("residue {r} carries both signs")));
                }
            }
            table.insert(r, sign);
        }
        let chi = Self { p, ell, big_p, m, table };
        let sq = |x: u64| (x as u128 * x as u128) % (2 * big_p as u128);
        if m.iter().any(|&x| sq(x) != sq(m[0])) {
            return Err(Error::IllFormedChi("m(eps)^2 mod 2P depends on eps".into()));
        }
        Ok(chi)
    }

    /// `χ_{(2,3,p3)}^{(1,1,ℓ3)}`.
    pub fn main(p3: u64, l3: u64) -> Result<Self> {
        if p3.gcd(&6) != 1 {
            return Err(Error::InvalidParameter(format!("p3 = {p3} must be coprime to 6")));
        }
        let chi = Self::new([2, 3, p3], [1, 1, l3])?;
        if chi.table.len() != 8 {
            return Err(Error::IllFormedChi("the eight m(eps) are not distinct".into()));
        }
        if !chi.m_squared_constant_mod(4 * chi.big_p) {
            return Err(Error::IllFormedChi("m(eps)^2 mod 4P depends on eps".into()));
        }
        Ok(chi)
    }

    pub fn p(&self) -> [u64; 3] {
        self.p
    }

    pub fn ell(&self) -> [u64; 3] {
        self.ell
    }

    /// `P = p1 p2 p3`.
    pub fn big_p(&self) -> u64 {
        self.big_p
    }

    pub fn m_of_epsilon(&self, e: Eps) -> u64 {
        let i = ALL_EPS.iter().position(|x| *x == e).expect("sign vector");
        self.m[i]
    }

    pub fn eval(&self, n: i64) -> i8 {
        let r = n.rem_euclid(2 * self.big_p as i64) as u64;
        self.table.get(&r).copied().unwrap_or(0)
    }

    /// The nonzero residues in `[0, 2P)` with their values.
    pub fn residues(&self) -> impl Iterator<Item = (u64, i8)> + '_ {
        self.table.iter().map(|(&r, &s)| (r, s))
    }

    /// True when `m(ε)²` is the same modulo `modulus` for every `ε`.
    pub fn m_squared_constant_mod(&self, modulus: u64) -> bool {
        let sq = |x: u64| (x as u128 * x as u128) % modulus as u128;
        self.m.iter().all(|&x| sq(x) == sq(self.m[0]))
    }

    /// A copy with `χ(±r)` overwritten; the result is still odd but need not
    /// come from any `(p, ℓ)`. Used for mutation controls.
    pub fn perturbed(&self, residue: u64, value: i8) -> Self {
        let two_p = 2 * self.big_p;
        let r = residue % two_p;
        let mut c = self.clone();
        let partner = (two_p - r) % two_p;
        for (k, v) in [(r, value), (partner, -value)] {
            if v == 0 {
                c.table.remove(&k);
            } else {
                c.table.insert(k, v);
            }
        }
        c
    }
}

pub fn m_of_epsilon(chi: &ChiFunction, e: Eps) -> u64 {
    chi.m_of_epsilon(e)
}

pub fn chi_eval(chi: &ChiFunction, n: i64) -> i8 {
    chi.eval(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_examples() {
        let c = ChiFunction::new([2, 3, 5], [1, 1, 1]).unwrap();
        assert_eq!(c.m_of_epsilon([1, 1, 1]), 1);
        let c = ChiFunction::main(7, 2).unwrap();
        assert_eq!(c.m_of_epsilon([1, 1, 1]), 5);
        assert_eq!(c.eval(5), -1);
        let mut ms: Vec<u64> = ALL_EPS.iter().map(|&e| c.m_of_epsilon(e)).collect();
        ms.sort();
        assert_eq!(ms, vec![5, 19, 23, 37, 47, 61, 65, 79]);
    }

    #[test]
    fn eval_examples() {
        let c = ChiFunction::main(7, 2).unwrap();
        assert_eq!(c.eval(47), 1);
        assert_eq!(c.eval(0), 0);
        assert_eq!(c.eval(-5), 1);
    }

    #[test]
    fn printed_residue_classes() {
        // χ_{(2,3,6p+1)}^{(1,1,2p)}: +1 on 42p+5, 54p+7, 54p+11, 66p+13 and
        // -1 on 6p-1, 18p+1, 18p+5, 30p+7, modulo 72p+12
        for p in 1..=4i64 {
            let c = ChiFunction::main(6 * p as u64 + 1, 2 * p as u64).unwrap();
            let period = 72 * p + 12;
            for n in 0..period {
                let plus = [42 * p + 5, 54 * p + 7, 54 * p + 11, 66 * p + 13].contains(&n);
                let minus = [6 * p - 1, 18 * p + 1, 18 * p + 5, 30 * p + 7].contains(&n);
                let expect = if plus { 1 } else if minus { -1 } else { 0 };
                assert_eq!(c.eval(n), expect, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn main_family_symmetries() {
        for p3 in [5u64, 7, 11, 13, 17, 19] {
            for l3 in 1..p3 {
                let c = ChiFunction::main(p3, l3).unwrap();
                let bp = c.big_p() as i64;
                assert!(c.m_squared_constant_mod(2 * c.big_p()));
                for n in 0..2 * bp {
                    assert_eq!(c.eval(-n), -c.eval(n));
                    assert_eq!(c.eval(n + 2 * bp), c.eval(n));
                    assert_eq!(c.eval(n + bp), -c.eval(n));
                    assert_eq!(c.eval(bp - n), c.eval(n));
                }
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(ChiFunction::new([2, 4, 5], [1, 1, 1]).is_err());
        assert!(ChiFunction::new([2, 3, 5], [1, 3, 1]).is_err());
        assert!(ChiFunction::main(9, 1).is_err());
    }

    #[test]
    fn labels_round_trip() {
        for e in ALL_EPS {
            assert_eq!(eps_from_str(&eps_label(e)), Some(e));
        }
        assert_eq!(eps_from_str("+x+"), None);
    }
}
