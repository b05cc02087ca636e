use std::path::PathBuf;

/// How `M` is chosen for each `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MMode {
    /// Every `1 ≤ M ≤ N` coprime to `N`.
    All,
    Single(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    VerifyMain {
        families: Vec<u8>,
        p: Vec<u32>,
        n: Vec<u64>,
        m: MMode,
    },
    VerifyBailey {
        pairs: Vec<u8>,
        n_max: u64,
        /// Theorem indices checked on the `p`/`n`/`m` grid; empty skips them.
        theorems: Vec<u8>,
        p: Vec<u32>,
        n: Vec<u64>,
        m: MMode,
    },
    VerifyGauss {
        p3: Vec<u64>,
        /// `None` uses the `ℓ3` values that occur in the main families.
        l3: Option<Vec<u64>>,
        n: Vec<u64>,
        m: MMode,
    },
    VerifyPoly {
        families: Vec<u8>,
        p: Vec<u32>,
        n: Vec<u64>,
    },
    Conjectures {
        n: Vec<u64>,
        p_max: u32,
    },
    WrtTable {
        sign: i32,
        p: Vec<u32>,
        n: Vec<u64>,
        m: MMode,
    },
    Series {
        p: [u64; 3],
        ell: [u64; 3],
        terms: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub output: Option<PathBuf>,
    /// Worker threads; `None` uses every available core.
    pub jobs: Option<usize>,
    /// Include wall-clock times in the report. Off by default so that
    /// reports are reproducible byte for byte.
    pub timings: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            format: Format::Json,
            output: None,
            jobs: None,
            timings: false,
        }
    }
}

/// Parses `"3"`, `"1..6"` (inclusive) or `"1,4,7"`; pieces may be mixed.
pub fn parse_range(s: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let a: u64 = a.trim().parse().map_err(|_| format!("bad range start in '{part}'"))?;
            let b: u64 = b.trim().parse().map_err(|_| format!("bad range end in '{part}'"))?;
            if a > b {
                return Err(format!("empty range '{part}'"));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| format!("bad number '{part}'"))?);
        }
    }
    if out.is_empty() {
        return Err("empty range".into());
    }
    Ok(out)
}

/// Like [`parse_range`], with `"all"` standing for `all`.
pub fn parse_selector(s: &str, all: std::ops::RangeInclusive<u64>) -> Result<Vec<u64>, String> {
    if s == "all" {
        Ok(all.collect())
    } else {
        let v = parse_range(s)?;
        if let Some(x) = v.iter().find(|x| !all.contains(x)) {
            return Err(format!("{x} is outside {}..{}", all.start(), all.end()));
        }
        Ok(v)
    }
}

pub fn parse_m(s: &str) -> Result<MMode, String> {
    if s == "all" {
        return Ok(MMode::All);
    }
    match s.parse::<i64>() {
        Ok(m) if m > 0 => Ok(MMode::Single(m)),
        _ => Err(format!("M must be 'all' or a positive integer, got '{s}'")),
    }
}

/// Parses a triple such as `"2,3,7"`.
pub fn parse_triple(s: &str) -> Result<[u64; 3], String> {
    let v: Vec<u64> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("bad number in '{s}'")))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| format!("expected three numbers, got '{s}'"))
}
