use proptest::prelude::*;
use qwrt_cli::report::{write_report, ReportRecord};
use qwrt_cli::config::Format;

fn rational() -> impl Strategy<Value = String> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| format!("{n}/{d}"))
}

fn record() -> impl Strategy<Value = ReportRecord> {
    (
        prop::sample::select(vec!["main", "poly", "gauss", "bailey-pair", "conjecture"]),
        "[a-z0-9(),=-]{1,20}",
        (prop::option::of(1u32..11), prop::option::of(1u32..6), prop::option::of(-20i64..20), prop::option::of(1u64..30)),
        (1u64..5000, any::<bool>()),
        (prop::collection::vec(rational(), 0..8), prop::collection::vec(rational(), 0..8)),
        (prop::option::of(-5i64..5), prop::option::of(0u32..100_000)),
    )
        .prop_map(|(suite, identity, (family, p, m, n), (order, pass), (lhs, rhs), (q_offset, ms))| ReportRecord {
            suite: suite.into(),
            identity,
            family,
            p,
            m,
            n,
            order,
            pass,
            lhs,
            rhs,
            q_offset,
            elapsed_ms: ms.map(|x| x as f64 / 8.0),
        })
}

proptest! {
    #[test]
    fn json_lines_round_trip(records in prop::collection::vec(record(), 0..6)) {
        let mut first = Vec::new();
        write_report(&mut first, &records, Format::Json).unwrap();
        let text = String::from_utf8(first.clone()).unwrap();
        let parsed: Vec<ReportRecord> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        prop_assert_eq!(&parsed, &records);
        let mut second = Vec::new();
        write_report(&mut second, &parsed, Format::Json).unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn csv_has_one_row_per_record(records in prop::collection::vec(record(), 0..6)) {
        let mut buf = Vec::new();
        write_report(&mut buf, &records, Format::Csv).unwrap();
        let mut rd = csv::Reader::from_reader(buf.as_slice());
        let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
        prop_assert_eq!(rows.len(), records.len());
        for (row, r) in rows.iter().zip(&records) {
            prop_assert_eq!(&row[1], r.identity.as_str());
            prop_assert_eq!(&row[7], if r.pass { "true" } else { "false" });
        }
    }
}
