//! Acceptance criteria 1 to 10. Each test writes one `criterion k: PASS|FAIL`
//! line straight to stderr so the lines survive output capture.

use std::io::Write;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use qwrt_cli::suite::main_ell3_values;
use qwrt_cli::{emit_series, run, Command, Format, MMode, RunConfig};
use qwrt_core::arith::{eval_laurent_at_root, Cyclotomic, LaurentPoly, RationalFunction};
use qwrt_core::bailey::{
    bp_alpha, bp_beta, dagger_transform, dual_pair, family_rhs, negate_alpha, verify_keychain, verify_pair,
    verify_theorem_family, BaileyPair, Keychain,
};
use qwrt_core::eichler::{
    eichler_limit, verify_chiprop, verify_corollary_pieces, verify_gensum4sum, verify_pieces1, ChiFunction,
};
use qwrt_core::identities::{
    correction_gamma, correction_kappa, correction_lambda, verify_conjecture_suite, verify_main,
    verify_poly_identity,
};
use qwrt_core::qseries::{habiro_poincare_eval, multisum_eval, FamilyId, RootOfUnity};

fn report(k: u32, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {k}: {verdict}  {detail}");
}

fn roots_up_to(n_max: u64) -> Vec<RootOfUnity> {
    (1..=n_max).flat_map(RootOfUnity::all_for).collect()
}

/// `(p3, ℓ3)` pairs of the Gauss-sum grid.
fn gauss_chis() -> Vec<(u64, u64)> {
    [5u64, 7, 11, 13]
        .into_iter()
        .flat_map(|p3| main_ell3_values(p3).into_iter().map(move |l3| (p3, l3)))
        .collect()
}

#[test]
fn criterion_01_bailey_pairs() {
    let start = Instant::now();
    let ok: Vec<bool> = (1..=10u8)
        .into_par_iter()
        .map(|i| verify_pair(&BaileyPair::standard(i).unwrap(), 12))
        .collect();
    let elapsed = start.elapsed();
    // one α sign flipped per pair, at the first nonzero α_k with k ≥ 1
    let mutants_fail = (1..=10u8).all(|i| {
        let pair = BaileyPair::standard(i).unwrap();
        let k = (1..).find(|&k| !bp_alpha(i, k).unwrap().is_zero()).unwrap();
        k <= 2 && !verify_pair(&negate_alpha(&pair, k), 2)
    });
    let pass = ok.iter().all(|&b| b) && mutants_fail && elapsed < Duration::from_secs(120);
    report(
        1,
        pass,
        &format!("BP1-BP10 at n_max = 12 in {elapsed:.2?}; sign-flipped mutants fail at n <= 2: {mutants_fail}"),
    );
    assert!(pass);
}

#[test]
fn criterion_02_derived_pairs() {
    let b = LaurentPoly::signed_q_pow(-1, 1);
    let dagger = dagger_transform(&BaileyPair::standard(4).unwrap(), &b).unwrap();
    let dual = dual_pair(&BaileyPair::standard(9).unwrap()).unwrap();
    let ok: Vec<bool> = (0..=15u64)
        .into_par_iter()
        .map(|k| {
            let a9 = RationalFunction::from_laurent(bp_alpha(9, k).unwrap());
            let a10 = RationalFunction::from_laurent(bp_alpha(10, k).unwrap());
            dagger.alpha(k) == a9
                && dagger.beta(k) == bp_beta(9, k).unwrap()
                && dual.alpha(k) == a10
                && dual.beta(k) == bp_beta(10, k).unwrap()
        })
        .collect();
    let pass = ok.iter().all(|&b| b);
    report(2, pass, "dagger(BP4, b = -q) = BP9 and dual(BP9) = BP10 termwise for k <= 15");
    assert!(pass);
}

#[test]
fn criterion_03_keychains() {
    let cases: Vec<(u8, Keychain)> = (1..=6)
        .map(|i| (i, Keychain::Lemma))
        .chain((7..=8).map(|i| (i, Keychain::Bis)))
        .chain((9..=10).map(|i| (i, Keychain::Ter)))
        .collect();
    let grid: Vec<(u8, Keychain, u32, u64)> = cases
        .iter()
        .flat_map(|&(i, k)| (1..=2).flat_map(move |p| (1..=4).map(move |n| (i, k, p, n))))
        .collect();
    let failures: Vec<_> = grid
        .par_iter()
        .filter(|&&(i, k, p, n)| !verify_keychain(&BaileyPair::standard(i).unwrap(), k, p, n).unwrap())
        .collect();
    let pass = failures.is_empty();
    report(
        3,
        pass,
        &format!("{} chain identities as rational functions, failures: {failures:?}", grid.len()),
    );
    assert!(pass);
}

#[test]
fn criterion_04_theorem_families() {
    let roots = roots_up_to(10);
    let grid: Vec<(u8, u32, RootOfUnity)> = (1..=10u8)
        .flat_map(|t| (1..=3u32).flat_map(move |p| roots_up_to(10).into_iter().map(move |z| (t, p, z))))
        .collect();
    let failures: Vec<_> = grid
        .par_iter()
        .filter(|&&(t, p, z)| !verify_theorem_family(t, p, z).unwrap().pass)
        .collect();
    let families_ok = failures.is_empty();

    // Cross-check as stated: theorem 4 RHS = theorem 7 RHS on the same grid.
    let cross: Vec<(u32, RootOfUnity, bool, bool)> = (1..=3u32)
        .flat_map(|p| roots.iter().map(move |&z| (p, z)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(p, z)| {
            let r4 = family_rhs(4, p, z).unwrap();
            let r7 = family_rhs(7, p, z).unwrap();
            let h5 = multisum_eval(FamilyId::new(5).unwrap(), p, z).unwrap();
            (p, z, r4 == r7, r7 == h5)
        })
        .collect();
    let cross_failures: Vec<_> = cross.iter().filter(|c| !c.2).collect();
    let cross_ok = cross_failures.is_empty();
    // Analysis of the failing cross-check: theorem 7's right side is H^(5),
    // which agrees with H^(4) at p = 1 only.
    let analysis_holds = cross.iter().all(|c| c.3)
        && cross.iter().filter(|c| c.0 == 1).all(|c| c.2)
        && cross_failures.iter().all(|c| c.0 >= 2);

    let detail = format!(
        "{} theorem instances, {} failures; cross-check thm4 RHS = thm7 RHS fails at {} of {} instances, all with p >= 2 \
         (thm7 RHS equals H^(5) on the whole grid, and H^(5) = H^(4) only at p = 1)",
        grid.len(),
        failures.len(),
        cross_failures.len(),
        cross.len()
    );
    report(4, families_ok && cross_ok, &detail);
    assert!(families_ok, "{failures:?}");
    assert!(analysis_holds);
}

#[test]
fn criterion_05_gauss_sums() {
    let grid: Vec<(u64, u64, i64, u64)> = gauss_chis()
        .into_iter()
        .flat_map(|(p3, l3)| roots_up_to(12).into_iter().map(move |z| (p3, l3, z.m, z.n)))
        .collect();
    let failures: Vec<String> = grid
        .par_iter()
        .flat_map_iter(|&(p3, l3, m, n)| {
            [
                verify_pieces1(p3, l3, m, n).unwrap(),
                verify_corollary_pieces(p3, l3, m, n).unwrap(),
                verify_gensum4sum(p3, l3, m, n).unwrap(),
            ]
            .into_iter()
            .filter(|r| !r.pass)
            .map(move |r| format!("{} M={m} N={n}", r.identity))
        })
        .collect();
    let blocks: Vec<u64> = (0..6).filter(|b| grid.iter().any(|g| g.3 % 6 == *b)).collect();
    let pass = failures.is_empty() && blocks.len() == 6;
    report(
        5,
        pass,
        &format!("{} (p3, l3, M, N) instances x 3 suites, N mod 6 blocks covered: {blocks:?}", grid.len()),
    );
    assert!(pass, "{failures:?}");
}

fn float_limit(chi: &ChiFunction, m: i64, n: u64) -> Complex64 {
    let bp = chi.big_p() as f64;
    let pn = chi.big_p() as i64 * n as i64;
    (0..=pn)
        .map(|k| {
            let w = chi.eval(k) as f64 * (1.0 - k as f64 / pn as f64);
            let theta = 2.0 * std::f64::consts::PI * m as f64 * (k * k) as f64 / (4.0 * bp * n as f64);
            Complex64::from_polar(w, theta)
        })
        .sum()
}

#[test]
fn criterion_06_chi_and_limits() {
    let grid: Vec<(u64, u64, i64, u64)> = gauss_chis()
        .into_iter()
        .flat_map(|(p3, l3)| roots_up_to(12).into_iter().map(move |z| (p3, l3, z.m, z.n)))
        .collect();
    let failures: Vec<_> = grid
        .par_iter()
        .filter(|&&(p3, l3, m, n)| !verify_chiprop(&ChiFunction::main(p3, l3).unwrap(), m, n).unwrap().pass)
        .collect();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut worst = 0f64;
    for _ in 0..20 {
        let (p3, l3, m, n) = grid[rng.gen_range(0..grid.len())];
        let chi = ChiFunction::main(p3, l3).unwrap();
        let (re, im) = eichler_limit(&chi, m, n).unwrap().to_complex();
        let f = float_limit(&chi, m, n);
        worst = worst.max((re - f.re).abs()).max((im - f.im).abs());
    }
    let pass = failures.is_empty() && worst < 1e-10;
    report(
        6,
        pass,
        &format!(
            "halving lemma at {} instances; 20 random limits vs float oracle, max deviation {worst:.1e}",
            grid.len()
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_07_polynomial_identities() {
    let grid: Vec<(u8, u32, u64)> = (1..=10u8)
        .flat_map(|f| (1..=3u32).flat_map(move |p| (1..=10u64).map(move |n| (f, p, n))))
        .collect();
    let failures: Vec<_> = grid
        .par_iter()
        .filter(|&&(f, p, n)| !verify_poly_identity(f, p, n).unwrap().pass)
        .collect();
    let mut corrections_ok = true;
    for z in roots_up_to(12) {
        let n = z.n;
        let at = |f: &LaurentPoly| eval_laurent_at_root(f, z.m, n, n).unwrap();
        let sign = if n % 2 == 1 { 1 } else { -1 };
        corrections_ok &= at(&correction_lambda(n)) == Cyclotomic::from_int(n, -1)
            && at(&correction_gamma(n - 1)) == Cyclotomic::from_int(n, -1)
            && at(&correction_kappa(n)) == Cyclotomic::from_int(n, sign);
    }
    let pass = failures.is_empty() && corrections_ok;
    report(
        7,
        pass,
        &format!(
            "{} polynomial identities (family 1 at p = 1 with the lambda correction); correction values at roots for N <= 12: {corrections_ok}",
            grid.len()
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_08_main_theorem() {
    let start = Instant::now();
    let grid: Vec<(u8, u32, RootOfUnity)> = (1..=10u8)
        .flat_map(|f| (1..=3u32).flat_map(move |p| roots_up_to(8).into_iter().map(move |z| (f, p, z))))
        .collect();
    let failures: Vec<_> = grid
        .par_iter()
        .filter(|&&(f, p, z)| !verify_main(f, p, z.m, z.n).unwrap().pass)
        .collect();
    let elapsed = start.elapsed();
    let conj = verify_conjecture_suite(10, 3).unwrap();
    let conj_fail = conj.iter().filter(|r| !r.pass).count();
    let pass = failures.is_empty() && conj_fail == 0 && elapsed < Duration::from_secs(1800);
    report(
        8,
        pass,
        &format!(
            "{} main instances in {elapsed:.2?}; {} conjecture instances for N <= 10, {conj_fail} failures",
            grid.len(),
            conj.len()
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_09_cross_anchors() {
    let mut ok = true;
    for z in roots_up_to(10) {
        let h = multisum_eval(FamilyId::new(2).unwrap(), 1, z).unwrap();
        let expect = &Cyclotomic::one(z.n) + &(&z.q_pow(1) * &habiro_poincare_eval(z));
        ok &= h == expect && verify_main(2, 1, z.m, z.n).unwrap().pass;
    }
    let chi = ChiFunction::new([2, 3, 7], [1, 1, 2]).unwrap();
    let series = emit_series(&chi, 1);
    let leading = series.split_whitespace().next().unwrap_or("");
    let exponent_ok = leading == "25/168"
        && qwrt_core::arith::parse_rational(leading) == Some(BigRational::new(25.into(), 168.into()));
    let pass = ok && exponent_ok;
    report(
        9,
        pass,
        &format!("family 2 at p = 1 equals 1 + q I(q) for N <= 10: {ok}; leading exponent of (2,3,7),(1,1,2): {leading}"),
    );
    assert!(pass);
}

fn report_bytes(cfg: &RunConfig) -> Vec<u8> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    assert_eq!(run(cfg, &mut out, &mut err), 0, "{}", String::from_utf8_lossy(&err));
    out
}

#[test]
fn criterion_10_determinism() {
    let commands = [
        Command::VerifyMain {
            families: (1..=10).collect(),
            p: vec![1, 2],
            n: (1..=6).collect(),
            m: MMode::All,
        },
        Command::VerifyGauss {
            p3: vec![5, 7],
            l3: None,
            n: (1..=7).collect(),
            m: MMode::All,
        },
        Command::VerifyPoly {
            families: (1..=10).collect(),
            p: vec![1, 2],
            n: (1..=5).collect(),
        },
    ];
    let mut identical = true;
    let mut lines = 0;
    for cmd in commands {
        for format in [Format::Json, Format::Csv, Format::Human] {
            let mut cfg = RunConfig::new(cmd.clone());
            cfg.format = format;
            cfg.jobs = Some(1);
            let a = report_bytes(&cfg);
            cfg.jobs = Some(4);
            let b = report_bytes(&cfg);
            identical &= a == b;
            if format == Format::Json {
                lines += a.iter().filter(|&&c| c == b'\n').count();
            }
        }
    }
    report(
        10,
        identical,
        &format!("{lines} JSON records, byte-identical at 1 and 4 workers in json, csv and human formats"),
    );
    assert!(identical);
}

#[test]
fn grid_helpers_are_consistent() {
    // φ(1) + ... + φ(12) = 46 roots
    assert_eq!(roots_up_to(12).len(), 46);
    assert!(roots_up_to(12).iter().all(|z| z.m.gcd(&(z.n as i64)) == 1));
    assert_eq!(gauss_chis().len(), 15);
}
