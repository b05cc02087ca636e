use num_rational::BigRational;

use crate::arith::{rf_normalize, LaurentPoly, RationalFunction};
use crate::error::{Error, Result};
use crate::qseries::{q_pochhammer, q_pochhammer_scaled};

use super::{BaileyPair, PairId, Rel, Sequence};

fn derived(pair: &BaileyPair, tag: &str) -> PairId {
    PairId::Derived(format!("{tag}({})", pair.id))
}

/// `α'_n = a^n q^{n²} α_n`, `β'_n = Σ_j a^j q^{j²} β_j / (q)_{n-j}`.
pub fn bailey_lemma(pair: &BaileyPair) -> BaileyPair {
    let e = pair.rel.exponent();
    let alpha = pair.alpha.clone();
    let beta = pair.beta.clone();
    BaileyPair {
        id: derived(pair, "lemma"),
        rel: pair.rel,
        alpha: Sequence::new(move |n| {
            let n = n as i64;
            alpha.get(n as u64).mul_laurent(&LaurentPoly::q_pow(e * n + n * n))
        }),
        beta: Sequence::new(move |n| {
            let mut acc = RationalFunction::zero();
            for j in 0..=n {
                let ji = j as i64;
                let t = beta
                    .get(j)
                    .mul_laurent(&LaurentPoly::q_pow(e * ji + ji * ji))
                    .div_laurent(&q_pochhammer(1, n - j))
                    .expect("nonzero Pochhammer");
                acc = &acc + &t;
            }
            acc
        }),
    }
}

/// `p` applications of [`bailey_lemma`].
pub fn bailey_lemma_iterated(pair: &BaileyPair, p: u32) -> BaileyPair {
    (0..p).fold(pair.clone(), |acc, _| bailey_lemma(&acc))
}

fn require(pair: &BaileyPair, rel: Rel) -> Result<()> {
    if pair.rel != rel {
        return Err(Error::WrongRelativeParameter {
            expected: rel.name(),
            found: pair.rel.name(),
        });
    }
    Ok(())
}

/// `a*_n = (1 - q²)(a_n/(1 - q^{2n+2}) - q^{2n} a_{n-1}/(1 - q^{2n}))`, with `a_{-1} = 0`.
pub(crate) fn star_rf(a: impl Fn(u64) -> RationalFunction, n: u64) -> RationalFunction {
    let ni = n as i64;
    let one_m_q2 = LaurentPoly::one_minus_q_pow(2);
    let first = a(n)
        .mul_laurent(&one_m_q2)
        .div_laurent(&LaurentPoly::one_minus_q_pow(2 * ni + 2))
        .expect("nonzero");
    if n == 0 {
        return first;
    }
    let second = a(n - 1)
        .mul_laurent(&(&one_m_q2 * &LaurentPoly::q_pow(2 * ni)))
        .div_laurent(&LaurentPoly::one_minus_q_pow(2 * ni))
        .expect("nonzero");
    &first - &second
}

/// Turns a pair relative to `q²` into one relative to `q`; `β` is unchanged.
pub fn bailey_lattice(pair: &BaileyPair) -> Result<BaileyPair> {
    require(pair, Rel::Q2)?;
    let alpha = pair.alpha.clone();
    Ok(BaileyPair {
        id: derived(pair, "lattice"),
        rel: Rel::Q,
        alpha: Sequence::new(move |n| star_rf(|k| alpha.get(k), n)),
        beta: pair.beta.clone(),
    })
}

/// `s*_n` for a Laurent sequence; fails unless the result is a Laurent polynomial.
pub fn star_transform(s: impl Fn(u64) -> LaurentPoly, n: u64) -> Result<LaurentPoly> {
    if n == 0 {
        return Ok(s(0));
    }
    let ni = n as i64;
    let a = LaurentPoly::one_minus_q_pow(2 * ni);
    let b = LaurentPoly::one_minus_q_pow(2 * ni + 2);
    let num = &LaurentPoly::one_minus_q_pow(2)
        * &(&(&s(n) * &a) - &(&(&LaurentPoly::q_pow(2 * ni) * &s(n - 1)) * &b));
    num.div_exact(&(&a * &b)).map_err(|_| Error::InexactDivision)
}

/// `α̂_k = (1 - q) α_k / (1 - q^{k+1})`, exact.
pub fn hat_transform(s: impl Fn(u64) -> LaurentPoly, k: u64) -> Result<LaurentPoly> {
    let num = &s(k) * &LaurentPoly::one_minus_q_pow(1);
    num.div_exact(&LaurentPoly::one_minus_q_pow(k as i64 + 1))
        .map_err(|_| Error::InexactDivision)
}

fn signed_power(c: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        num_traits::pow::pow(c.clone(), k as usize)
    } else {
        num_traits::pow::pow(c.recip(), (-k) as usize)
    }
}

/// The transform sending a pair relative to `a` to one relative to `aq`,
/// for a monomial parameter `b = c q^d`. Only `a = q` is supported.
pub fn dagger_transform(pair: &BaileyPair, b: &LaurentPoly) -> Result<BaileyPair> {
    require(pair, Rel::Q)?;
    if !b.is_monomial() {
        return Err(Error::Unsupported("the dagger parameter b must be a monomial".into()));
    }
    let (d, c) = b.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
    let a_exp = pair.rel.exponent();
    // aq/b = c^{-1} q^{a_exp + 1 - d}
    let ab_c = c.recip();
    let ab_e = a_exp + 1 - d;
    let alpha = pair.alpha.clone();
    let neg_c = -c.clone();
    let c_a = c.clone();
    let alpha_seq = Sequence::new(move |k| {
        let ki = k as i64;
        let mut sum = RationalFunction::zero();
        for j in 0..=k {
            let ji = j as i64;
            // (b)_j / (aq/b)_j (-b)^{-j} q^{-C(j,2)}
            let coeff = signed_power(&neg_c, -ji);
            let num = LaurentPoly::monomial(coeff, -d * ji - ji * (ji - 1) / 2) * q_pochhammer_scaled(&c_a, d, j);
            let den = q_pochhammer_scaled(&ab_c, ab_e, j);
            let t = rf_normalize(&num, &den).expect("nonzero").mul_laurent(alpha.get(j).num());
            let t = t.div_laurent(alpha.get(j).den()).expect("nonzero");
            sum = &sum + &t;
        }
        // (1 - a q^{2k+1}) (aq/b)_k (-b)^k q^{C(k,2)} / ((1 - aq) (bq)_k)
        let pre_num = &(&LaurentPoly::one_minus_q_pow(a_exp + 2 * ki + 1) * &q_pochhammer_scaled(&ab_c, ab_e, k))
            * &LaurentPoly::monomial(signed_power(&neg_c, ki), d * ki + ki * (ki - 1) / 2);
        let pre_den = &LaurentPoly::one_minus_q_pow(a_exp + 1) * &q_pochhammer_scaled(&c_a, d + 1, k);
        let pre = rf_normalize(&pre_num, &pre_den).expect("nonzero");
        &pre * &sum
    });
    let beta = pair.beta.clone();
    let c_b = c;
    let beta_seq = Sequence::new(move |k| {
        let ratio = rf_normalize(&q_pochhammer_scaled(&c_b, d, k), &q_pochhammer_scaled(&c_b, d + 1, k)).expect("nonzero");
        &ratio * &beta.get(k)
    });
    Ok(BaileyPair {
        id: derived(pair, "dagger"),
        rel: Rel::Q2,
        alpha: alpha_seq,
        beta: beta_seq,
    })
}

/// `α^d_k = q^{k²+2k} α_k(q^{-1})`, `β^d_k = q^{-k²-3k} β_k(q^{-1})`.
pub fn dual_pair(pair: &BaileyPair) -> Result<BaileyPair> {
    require(pair, Rel::Q2)?;
    let alpha = pair.alpha.clone();
    let beta = pair.beta.clone();
    Ok(BaileyPair {
        id: derived(pair, "dual"),
        rel: Rel::Q2,
        alpha: Sequence::new(move |k| {
            let k2 = (k * k + 2 * k) as i64;
            alpha.get(k).subs_inverse().mul_laurent(&LaurentPoly::q_pow(k2))
        }),
        beta: Sequence::new(move |k| {
            let k2 = (k * k + 3 * k) as i64;
            beta.get(k).subs_inverse().mul_laurent(&LaurentPoly::q_pow(-k2))
        }),
    })
}

/// The pair with `α_k` negated at a single index; a mutation control.
pub fn negate_alpha(pair: &BaileyPair, index: u64) -> BaileyPair {
    let alpha = pair.alpha.clone();
    BaileyPair {
        id: PairId::Derived(format!("mutant({}, {index})", pair.id)),
        rel: pair.rel,
        alpha: Sequence::new(move |k| if k == index { -alpha.get(k) } else { alpha.get(k) }),
        beta: pair.beta.clone(),
    }
}
