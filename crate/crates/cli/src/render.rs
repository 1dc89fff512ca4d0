//! Text, CSV and JSON renderings of series, reports and difference tables.

use num_bigint::BigInt;
use qpart_core::verify::{MismatchAt, VerificationReport};
use qpart_core::TruncatedSeries;
use serde_json::{json, Value};

/// JSON number when it fits in 64 bits, decimal string otherwise.
pub fn big(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn series_text(s: &TruncatedSeries) -> String {
    s.coeffs().iter().enumerate().map(|(k, c)| format!("{k}\t{c}\n")).collect()
}

pub fn series_csv(s: &TruncatedSeries) -> String {
    s.coeffs().iter().enumerate().map(|(k, c)| format!("{k},{c}\n")).collect()
}

pub fn series_json(id: &str, s: &TruncatedSeries) -> Value {
    json!({
        "series": id,
        "order": s.order(),
        "coefficients": s.coeffs().iter().map(big).collect::<Vec<_>>(),
    })
}

pub fn report_json(r: &VerificationReport) -> Value {
    let mismatch = r.first_mismatch.as_ref().map(|m| {
        let at = match m.at {
            MismatchAt::Exponent(k) => json!(k),
            MismatchAt::Cell(m, n) => json!([m, n]),
        };
        json!({ "at": at, "expected": m.expected.to_string(), "actual": m.actual.to_string() })
    });
    json!({
        "id": r.id.to_string(),
        "status": r.status.as_str(),
        "series_order": r.series_order,
        "enum_limit": r.enum_limit,
        "first_mismatch": mismatch,
        "notes": r.notes,
        "elapsed_ms": r.elapsed_ms,
    })
}

fn at_text(at: MismatchAt) -> String {
    match at {
        MismatchAt::Exponent(k) => format!("q^{k}"),
        MismatchAt::Cell(m, n) => format!("(m={m}, n={n})"),
    }
}

pub fn report_text(r: &VerificationReport) -> String {
    let mut line = format!(
        "{:<18} {:<20} order={} enum={} {}ms",
        r.status.as_str().to_uppercase(),
        r.id.to_string(),
        r.series_order,
        r.enum_limit,
        r.elapsed_ms
    );
    if let Some(m) = &r.first_mismatch {
        line.push_str(&format!(" first mismatch at {}: expected {}, got {}", at_text(m.at), m.expected, m.actual));
    }
    if !r.notes.is_empty() {
        line.push_str(&format!(" [{}]", r.notes));
    }
    line
}

pub const REPORT_CSV_HEADER: &str = "id,status,series_order,enum_limit,mismatch_at,expected,actual,notes,elapsed_ms";

pub fn report_csv(r: &VerificationReport) -> String {
    let (at, expected, actual) = match &r.first_mismatch {
        Some(m) => (
            match m.at {
                MismatchAt::Exponent(k) => k.to_string(),
                MismatchAt::Cell(m, n) => format!("{m};{n}"),
            },
            m.expected.to_string(),
            m.actual.to_string(),
        ),
        None => (String::new(), String::new(), String::new()),
    };
    format!(
        "{},{},{},{},{},{},{},\"{}\",{}",
        r.id,
        r.status,
        r.series_order,
        r.enum_limit,
        at,
        expected,
        actual,
        r.notes.replace('"', "\"\""),
        r.elapsed_ms
    )
}

/// One row of a signed difference table.
pub struct TableRow {
    pub n: u64,
    pub even: u64,
    pub odd: u64,
    pub predicted: BigInt,
}

impl TableRow {
    pub fn difference(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }

    pub fn matches(&self) -> bool {
        BigInt::from(self.difference()) == self.predicted
    }
}

pub fn table_text(rows: &[TableRow]) -> String {
    let mut out = format!("{:>4} {:>10} {:>10} {:>10} {:>10}\n", "n", "even", "odd", "difference", "predicted");
    for r in rows {
        out.push_str(&format!(
            "{:>4} {:>10} {:>10} {:>10} {:>10}{}\n",
            r.n,
            r.even,
            r.odd,
            r.difference(),
            r.predicted,
            if r.matches() { "" } else { "  MISMATCH" }
        ));
    }
    out
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,even_count,odd_count,difference,predicted,match\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{},{},{}\n", r.n, r.even, r.odd, r.difference(), r.predicted, r.matches()));
    }
    out
}

pub fn table_json(class: &str, rows: &[TableRow]) -> Value {
    json!({
        "class": class,
        "rows": rows.iter().map(|r| json!({
            "n": r.n,
            "even_count": r.even,
            "odd_count": r.odd,
            "difference": r.difference(),
            "predicted": big(&r.predicted),
            "match": r.matches(),
        })).collect::<Vec<_>>(),
    })
}
