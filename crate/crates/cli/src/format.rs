//! Record rendering: CSV (primary) and JSON.

use serde::Serialize;

use crate::sweep::{model_label, SweepRecord};

/// Column header, in output order.
pub const CSV_HEADER: &str = "model,J,Delta,D,T,chi,entropy_rho,concurrence,valid";

const SIGNIFICANT_DIGITS: usize = 12;

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros
/// stripped, scientific notation when the exponent is below -4 or at
/// least 12.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if exp < -4 || exp >= SIGNIFICANT_DIGITS as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", strip_zeros(mantissa), sign, exp.abs())
    } else {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        strip_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// The value a reader of the emitted text would recover.
pub fn rounded(x: f64) -> f64 {
    format_sig(x).parse().unwrap_or(x)
}

fn opt(x: Option<f64>) -> String {
    x.map(format_sig).unwrap_or_default()
}

pub fn csv_row(r: &SweepRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        model_label(r.model),
        format_sig(r.j),
        opt(r.delta),
        opt(r.d),
        format_sig(r.t),
        opt(r.chi),
        opt(r.entropy_rho),
        opt(r.concurrence),
        r.valid.map(|v| v.to_string()).unwrap_or_default(),
    )
}

/// Header plus one LF-terminated line per record.
pub fn to_csv(records: &[SweepRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    model: &'a str,
    #[serde(rename = "J")]
    j: f64,
    #[serde(rename = "Delta")]
    delta: Option<f64>,
    #[serde(rename = "D")]
    d: Option<f64>,
    #[serde(rename = "T")]
    t: f64,
    chi: Option<f64>,
    entropy_rho: Option<f64>,
    concurrence: Option<f64>,
    valid: Option<bool>,
}

/// JSON array of records with the CSV field names; numbers carry the same
/// 12-digit rounding as the CSV.
pub fn to_json(records: &[SweepRecord]) -> String {
    let rows: Vec<JsonRecord> = records
        .iter()
        .map(|r| JsonRecord {
            model: model_label(r.model),
            j: rounded(r.j),
            delta: r.delta.map(rounded),
            d: r.d.map(rounded),
            t: rounded(r.t),
            chi: r.chi.map(rounded),
            entropy_rho: r.entropy_rho.map(rounded),
            concurrence: r.concurrence.map(rounded),
            valid: r.valid,
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&rows).expect("records serialize");
    out.push('\n');
    out
}
