use std::fmt::Write as _;
use std::io::{self, Write};

use num_traits::Zero;
use qwrt_core::arith::{parse_rational, rational_string};
use qwrt_core::record::VerificationRecord;
use serde::{Deserialize, Serialize};

use crate::config::Format;

/// One line of a JSON report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub suite: String,
    pub identity: String,
    pub family: Option<u32>,
    pub p: Option<u32>,
    #[serde(rename = "M")]
    pub m: Option<i64>,
    #[serde(rename = "N")]
    pub n: Option<u64>,
    #[serde(rename = "L")]
    pub order: u64,
    pub pass: bool,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_offset: Option<i64>,
    pub elapsed_ms: Option<f64>,
}

impl ReportRecord {
    pub fn from_record(r: &VerificationRecord, timings: bool) -> Self {
        Self {
            suite: r.suite.clone(),
            identity: r.identity.clone(),
            family: r.family,
            p: r.p,
            m: r.m,
            n: r.n,
            order: r.order,
            pass: r.pass,
            lhs: r.lhs.iter().map(rational_string).collect(),
            rhs: r.rhs.iter().map(rational_string).collect(),
            q_offset: r.q_offset,
            elapsed_ms: timings.then_some(r.elapsed.as_secs_f64() * 1e3),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    suite: &'a str,
    identity: &'a str,
    family: Option<u32>,
    p: Option<u32>,
    #[serde(rename = "M")]
    m: Option<i64>,
    #[serde(rename = "N")]
    n: Option<u64>,
    #[serde(rename = "L")]
    order: u64,
    pass: bool,
    elapsed_ms: Option<f64>,
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

/// Writes `ζ_L` coordinates (or `q` coefficients when `q_offset` is set)
/// as a polynomial with ascending exponents.
pub fn format_poly(coords: &[String], var: &str, offset: i64) -> String {
    let mut s = String::new();
    for (j, c) in coords.iter().enumerate() {
        let c = match parse_rational(c) {
            Some(v) if v.is_zero() => continue,
            Some(v) => v.to_string(),
            None => c.clone(),
        };
        let e = j as i64 + offset;
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        match (e, mag) {
            (0, _) => s.push_str(mag),
            (_, "1") => {
                let _ = write!(s, "{var}^{e}");
            }
            _ => {
                let _ = write!(s, "{mag}*{var}^{e}");
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Serializes `records` in the requested format.
pub fn write_report(out: &mut dyn Write, records: &[ReportRecord], format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(CsvRow {
                    suite: &r.suite,
                    identity: &r.identity,
                    family: r.family,
                    p: r.p,
                    m: r.m,
                    n: r.n,
                    order: r.order,
                    pass: r.pass,
                    elapsed_ms: r.elapsed_ms,
                })
                .map_err(io::Error::other)?;
            }
            w.flush()?;
        }
        Format::Human => {
            let header = ["suite", "identity", "family", "p", "M", "N", "L", "pass"];
            let rows: Vec<[String; 8]> = records
                .iter()
                .map(|r| {
                    [
                        r.suite.clone(),
                        r.identity.clone(),
                        opt(r.family),
                        opt(r.p),
                        opt(r.m),
                        opt(r.n),
                        r.order.to_string(),
                        if r.pass { "pass" } else { "FAIL" }.to_string(),
                    ]
                })
                .collect();
            let mut width = header.map(str::len);
            for row in &rows {
                for (w, c) in width.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(width)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(header.to_vec()))?;
            for (row, r) in rows.iter().zip(records) {
                writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
                // values are shown for failures and for tables without a comparison
                if !r.pass || r.rhs.is_empty() && !r.lhs.is_empty() {
                    let (var, off) = match r.q_offset {
                        Some(o) => ("q".to_string(), o),
                        None => (format!("z{}", r.order), 0),
                    };
                    writeln!(out, "    lhs = {}", format_poly(&r.lhs, &var, off))?;
                    if !r.rhs.is_empty() {
                        writeln!(out, "    rhs = {}", format_poly(&r.rhs, &var, off))?;
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReportRecord {
        ReportRecord {
            suite: "main".into(),
            identity: "main6(p3=7,l3=2)".into(),
            family: Some(6),
            p: Some(1),
            m: Some(1),
            n: Some(2),
            order: 336,
            pass: true,
            lhs: vec!["1".into(), "-1/2".into()],
            rhs: vec!["1".into(), "-1/2".into()],
            q_offset: None,
            elapsed_ms: None,
        }
    }

    #[test]
    fn json_field_order() {
        let s = sample().to_json();
        assert!(s.starts_with(r#"{"suite":"main","identity":"main6(p3=7,l3=2)","family":6,"p":1,"M":1,"N":2,"L":336,"pass":true,"lhs":["1","-1/2"]"#));
        assert!(s.ends_with(r#""elapsed_ms":null}"#));
    }

    #[test]
    fn polynomial_rendering() {
        let c: Vec<String> = ["0/1", "1", "-3/2", "0", "-1/1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(format_poly(&c, "z", 0), "z^1 - 3/2*z^2 - z^4");
        assert_eq!(format_poly(&c, "q", -1), "1 - 3/2*q^1 - q^3");
        assert_eq!(format_poly(&[], "z", 0), "0");
    }

    #[test]
    fn csv_omits_values() {
        let mut buf = Vec::new();
        write_report(&mut buf, &[sample()], Format::Csv).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s, "suite,identity,family,p,M,N,L,pass,elapsed_ms\nmain,\"main6(p3=7,l3=2)\",6,1,1,2,336,true,\n");
    }
}
