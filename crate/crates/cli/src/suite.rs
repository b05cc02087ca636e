use num_integer::Integer;
use qwrt_core::bailey::{verify_pair, verify_theorem_family, BaileyPair};
use qwrt_core::eichler::{verify_chiprop, verify_corollary_pieces, verify_gensum4sum, verify_pieces1, ChiFunction};
use qwrt_core::identities::{
    conjecture_instances, verify_conjecture, verify_main, verify_poly_identity, ConjectureInstance, MainFamilyParams,
};
use qwrt_core::qseries::{wrt_invariant, RootOfUnity};
use qwrt_core::record::VerificationRecord;
use qwrt_core::Result;

use crate::config::{Command, MMode};

/// One unit of work. The grid is expanded up front so that output order is
/// the instance order, whatever the number of workers.
#[derive(Debug, Clone)]
pub enum Instance {
    Main { family: u8, p: u32, m: i64, n: u64 },
    Pair { id: u8, n_max: u64 },
    Theorem { thm: u8, p: u32, m: i64, n: u64 },
    Pieces1 { p3: u64, l3: u64, m: i64, n: u64 },
    Corollary { p3: u64, l3: u64, m: i64, n: u64 },
    Gensum { p3: u64, l3: u64, m: i64, n: u64 },
    Chiprop { p3: u64, l3: u64, m: i64, n: u64 },
    Poly { family: u8, p: u32, n: u64 },
    Conjecture { inst: ConjectureInstance, n: u64 },
    Wrt { sign: i32, p: u32, m: i64, n: u64 },
}

impl Instance {
    pub fn run(&self) -> Result<VerificationRecord> {
        match self {
            Instance::Main { family, p, m, n } => verify_main(*family, *p, *m, *n),
            Instance::Pair { id, n_max } => {
                let start = std::time::Instant::now();
                let pass = verify_pair(&BaileyPair::standard(*id)?, *n_max);
                let mut r = VerificationRecord::new("bailey-pair", format!("BP{id}")).n(*n_max);
                r.pass = pass;
                Ok(r.elapsed(start.elapsed()))
            }
            Instance::Theorem { thm, p, m, n } => verify_theorem_family(*thm, *p, RootOfUnity::new(*m, *n)?),
            Instance::Pieces1 { p3, l3, m, n } => verify_pieces1(*p3, *l3, *m, *n),
            Instance::Corollary { p3, l3, m, n } => verify_corollary_pieces(*p3, *l3, *m, *n),
            Instance::Gensum { p3, l3, m, n } => verify_gensum4sum(*p3, *l3, *m, *n),
            Instance::Chiprop { p3, l3, m, n } => verify_chiprop(&ChiFunction::main(*p3, *l3)?, *m, *n),
            Instance::Poly { family, p, n } => verify_poly_identity(*family, *p, *n),
            Instance::Conjecture { inst, n } => verify_conjecture(inst, *n),
            Instance::Wrt { sign, p, m, n } => {
                let start = std::time::Instant::now();
                let z = RootOfUnity::new(*m, *n)?;
                let v = wrt_invariant(*sign, *p, z)?;
                let mut r = VerificationRecord::new("wrt-table", format!("wrt(sign={sign:+})"))
                    .p(*p)
                    .root(*m, *n);
                r.order = v.order();
                r.lhs = v.canonical();
                r.pass = true;
                Ok(r.elapsed(start.elapsed()))
            }
        }
    }
}

/// The `M` values for `N`.
pub fn m_values(mode: MMode, n: u64) -> std::result::Result<Vec<i64>, String> {
    let ni = n as i64;
    match mode {
        MMode::All => Ok((1..=ni).filter(|m| m.gcd(&ni) == 1).collect()),
        MMode::Single(m) if m.gcd(&ni) == 1 => Ok(vec![m]),
        MMode::Single(m) => Err(format!("M = {m} is not coprime to N = {n}")),
    }
}

/// The `ℓ3` values paired with `p3` in the main families.
pub fn main_ell3_values(p3: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let (range, p) = if (p3 + 1).is_multiple_of(6) {
        (1..=5u8, (p3 + 1) / 6)
    } else if p3 % 6 == 1 && p3 > 1 {
        (6..=10u8, (p3 - 1) / 6)
    } else {
        return out;
    };
    for f in range {
        let l3 = MainFamilyParams::new(f, p as u32).expect("valid family").ell3;
        if !out.contains(&l3) {
            out.push(l3);
        }
    }
    out.sort();
    out
}

fn roots(n: &[u64], m: MMode) -> std::result::Result<Vec<(i64, u64)>, String> {
    let mut out = Vec::new();
    for &n in n {
        if n == 0 {
            return Err("N must be at least 1".into());
        }
        for m in m_values(m, n)? {
            out.push((m, n));
        }
    }
    Ok(out)
}

/// Expands a command into its instances. `Series` has none.
pub fn instances(cmd: &Command) -> std::result::Result<Vec<Instance>, String> {
    let mut v = Vec::new();
    match cmd {
        Command::VerifyMain { families, p, n, m } => {
            let rs = roots(n, *m)?;
            for &family in families {
                for &p in p {
                    for &(m, n) in &rs {
                        v.push(Instance::Main { family, p, m, n });
                    }
                }
            }
        }
        Command::VerifyBailey {
            pairs,
            n_max,
            theorems,
            p,
            n,
            m,
        } => {
            for &id in pairs {
                v.push(Instance::Pair { id, n_max: *n_max });
            }
            if !theorems.is_empty() {
                let rs = roots(n, *m)?;
                for &thm in theorems {
                    for &p in p {
                        for &(m, n) in &rs {
                            v.push(Instance::Theorem { thm, p, m, n });
                        }
                    }
                }
            }
        }
        Command::VerifyGauss { p3, l3, n, m } => {
            let rs = roots(n, *m)?;
            for &p3 in p3 {
                if p3.gcd(&6) != 1 || p3 < 5 {
                    return Err(format!("p3 = {p3} must be at least 5 and coprime to 6"));
                }
                let ls = l3.clone().unwrap_or_else(|| main_ell3_values(p3));
                if ls.is_empty() {
                    return Err(format!("no l3 values for p3 = {p3}"));
                }
                for l3 in ls {
                    if l3 == 0 || l3 >= p3 {
                        return Err(format!("l3 = {l3} must lie in 1..{p3}"));
                    }
                    for &(m, n) in &rs {
                        v.push(Instance::Pieces1 { p3, l3, m, n });
                        v.push(Instance::Corollary { p3, l3, m, n });
                        v.push(Instance::Gensum { p3, l3, m, n });
                        v.push(Instance::Chiprop { p3, l3, m, n });
                    }
                }
            }
        }
        Command::VerifyPoly { families, p, n } => {
            for &family in families {
                for &p in p {
                    for &n in n {
                        v.push(Instance::Poly { family, p, n });
                    }
                }
            }
        }
        Command::Conjectures { n, p_max } => {
            for inst in conjecture_instances(*p_max) {
                for &n in n {
                    v.push(Instance::Conjecture { inst: inst.clone(), n });
                }
            }
        }
        Command::WrtTable { sign, p, n, m } => {
            let rs = roots(n, *m)?;
            for &p in p {
                for &(m, n) in &rs {
                    v.push(Instance::Wrt { sign: *sign, p, m, n });
                }
            }
        }
        Command::Series { .. } => {}
    }
    if v.is_empty() && !matches!(cmd, Command::Series { .. }) {
        return Err("the selected grid is empty".into());
    }
    Ok(v)
}
