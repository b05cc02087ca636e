use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::{parse_m, parse_range, parse_selector, parse_triple, Command, Format, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "qwrt", version, about = "Exact verification of q-multisum identities at roots of unity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: FormatArg,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, short, global = true)]
    pub jobs: Option<usize>,

    /// Record per-instance wall time in the report.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Multisums against limiting values of Eichler integrals.
    VerifyMain {
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long, default_value = "1")]
        p: String,
        #[arg(long = "N", default_value = "1..6")]
        n: String,
        #[arg(long = "M", default_value = "all")]
        m: String,
    },
    /// Bailey pairs, and optionally the theorem families on a root grid.
    VerifyBailey {
        #[arg(long, default_value = "all")]
        pairs: String,
        #[arg(long, default_value_t = 12)]
        n_max: u64,
        #[arg(long)]
        theorems: Option<String>,
        #[arg(long, default_value = "1")]
        p: String,
        #[arg(long = "N", default_value = "1..6")]
        n: String,
        #[arg(long = "M", default_value = "all")]
        m: String,
    },
    /// Incomplete Gauss sum relations and the halving lemma.
    VerifyGauss {
        #[arg(long, default_value = "5,7,11,13")]
        p3: String,
        /// Defaults to the values occurring in the main families.
        #[arg(long)]
        l3: Option<String>,
        #[arg(long = "N", default_value = "1..6")]
        n: String,
        #[arg(long = "M", default_value = "all")]
        m: String,
    },
    /// Polynomial identities in q behind the main families.
    VerifyPoly {
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long, default_value = "1")]
        p: String,
        #[arg(long = "N", default_value = "1..6")]
        n: String,
    },
    /// The conjectured instances at M = 1.
    Conjectures {
        #[arg(long = "N", default_value = "1..10")]
        n: String,
        /// Largest p for the family stated for every p.
        #[arg(long, default_value_t = 3)]
        p_max: u32,
    },
    /// WRT invariants of the Brieskorn spheres from ±1 surgery.
    WrtTable {
        #[arg(long, allow_hyphen_values = true)]
        sign: i32,
        #[arg(long, default_value = "1")]
        p: String,
        #[arg(long = "N", default_value = "2..6")]
        n: String,
        #[arg(long = "M", default_value = "1")]
        m: String,
    },
    /// Leading terms of the Eichler integral of chi.
    Series {
        /// The triple (p1,p2,p3).
        #[arg(long, default_value = "2,3,5")]
        chi_p: String,
        /// The triple (l1,l2,l3).
        #[arg(long, default_value = "1,1,1")]
        chi_l: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
}

fn u32s(v: Vec<u64>) -> Result<Vec<u32>, String> {
    v.into_iter()
        .map(|x| u32::try_from(x).map_err(|_| format!("{x} is too large")))
        .collect()
}

fn positive(v: Vec<u32>, what: &str) -> Result<Vec<u32>, String> {
    if v.contains(&0) {
        return Err(format!("{what} must be at least 1"));
    }
    Ok(v)
}

fn u8s(v: Vec<u64>) -> Vec<u8> {
    v.into_iter().map(|x| x as u8).collect()
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, String> {
        let command = match self.command {
            Sub::VerifyMain { family, p, n, m } => Command::VerifyMain {
                families: u8s(parse_selector(&family, 1..=10)?),
                p: positive(u32s(parse_range(&p)?)?, "p")?,
                n: parse_range(&n)?,
                m: parse_m(&m)?,
            },
            Sub::VerifyBailey {
                pairs,
                n_max,
                theorems,
                p,
                n,
                m,
            } => Command::VerifyBailey {
                pairs: u8s(parse_selector(&pairs, 1..=10)?),
                n_max,
                theorems: match theorems {
                    Some(t) => u8s(parse_selector(&t, 1..=10)?),
                    None => Vec::new(),
                },
                p: positive(u32s(parse_range(&p)?)?, "p")?,
                n: parse_range(&n)?,
                m: parse_m(&m)?,
            },
            Sub::VerifyGauss { p3, l3, n, m } => Command::VerifyGauss {
                p3: parse_range(&p3)?,
                l3: l3.map(|s| parse_range(&s)).transpose()?,
                n: parse_range(&n)?,
                m: parse_m(&m)?,
            },
            Sub::VerifyPoly { family, p, n } => Command::VerifyPoly {
                families: u8s(parse_selector(&family, 1..=10)?),
                p: positive(u32s(parse_range(&p)?)?, "p")?,
                n: parse_range(&n)?,
            },
            Sub::Conjectures { n, p_max } => Command::Conjectures {
                n: parse_range(&n)?,
                p_max,
            },
            Sub::WrtTable { sign, p, n, m } => {
                if sign != 1 && sign != -1 {
                    return Err(format!("sign must be +1 or -1, got {sign}"));
                }
                Command::WrtTable {
                    sign,
                    p: positive(u32s(parse_range(&p)?)?, "p")?,
                    n: parse_range(&n)?,
                    m: parse_m(&m)?,
                }
            }
            Sub::Series { chi_p, chi_l, terms } => {
                if terms == 0 {
                    return Err("terms must be at least 1".into());
                }
                Command::Series {
                    p: parse_triple(&chi_p)?,
                    ell: parse_triple(&chi_l)?,
                    terms,
                }
            }
        };
        if let Some(0) = self.jobs {
            return Err("jobs must be at least 1".into());
        }
        Ok(RunConfig {
            command,
            format: match self.format {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
                FormatArg::Human => Format::Human,
            },
            output: self.output,
            jobs: self.jobs,
            timings: self.timings,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::MMode;

    fn parse(args: &[&str]) -> Result<RunConfig, String> {
        let mut v = vec!["qwrt"];
        v.extend_from_slice(args);
        Cli::try_parse_from(v).map_err(|e| e.to_string())?.into_config()
    }

    #[test]
    fn documented_invocations() {
        let c = parse(&["verify-main", "--family", "6", "--p", "1..2", "--N", "1..6", "--M", "all"]).unwrap();
        assert_eq!(
            c.command,
            Command::VerifyMain {
                families: vec![6],
                p: vec![1, 2],
                n: (1..=6).collect(),
                m: MMode::All
            }
        );
        let c = parse(&["verify-bailey", "--pairs", "all", "--n-max", "12"]).unwrap();
        assert!(matches!(c.command, Command::VerifyBailey { n_max: 12, .. }));
        let c = parse(&["wrt-table", "--sign", "+1", "--p", "1", "--N", "2..6"]).unwrap();
        assert!(matches!(c.command, Command::WrtTable { sign: 1, .. }));
        let c = parse(&["wrt-table", "--sign", "-1", "--p", "2", "--format", "human", "-j", "2"]).unwrap();
        assert_eq!(c.format, Format::Human);
        assert_eq!(c.jobs, Some(2));
    }

    #[test]
    fn rejected_invocations() {
        assert!(parse(&["verify-main", "--family", "11"]).is_err());
        assert!(parse(&["verify-main", "--p", "0"]).is_err());
        assert!(parse(&["wrt-table", "--sign", "2"]).is_err());
        assert!(parse(&["series", "--terms", "0"]).is_err());
        assert!(parse(&["verify-main", "--jobs", "0"]).is_err());
        assert!(parse(&["frobnicate"]).is_err());
    }
}
