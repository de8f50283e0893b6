//! Line-delimited run records: one self-contained JSON object per line with
//! a fixed field set {ts, cmd, config, verdict, value, bound, gap, seed, n,
//! k, kind, scope_note}. Exact rationals serialize as "p/q" strings, never
//! as decimals.

use crate::error::Result;
use crate::scalar::format_rational;
use crate::search::SearchOutcome;
use num::rational::BigRational;
use serde::Serialize;
use std::io::Write;
use std::path::Path;

/// A value field: "p/q" string when exact, JSON number when float.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum RecordScalar {
    Exact(String),
    Float(f64),
}

impl RecordScalar {
    pub fn exact(r: &BigRational) -> RecordScalar {
        RecordScalar::Exact(format_rational(r))
    }
}

/// One run record. Field order is the wire order.
#[derive(Clone, Debug, Serialize)]
pub struct RunRecord {
    pub ts: String,
    pub cmd: String,
    pub config: serde_json::Value,
    pub verdict: Option<String>,
    pub value: Option<RecordScalar>,
    pub bound: Option<RecordScalar>,
    pub gap: Option<RecordScalar>,
    pub seed: Option<u64>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub kind: Option<String>,
    pub scope_note: Option<String>,
}

impl RunRecord {
    pub fn new(cmd: &str, ts: String, config: serde_json::Value) -> RunRecord {
        RunRecord {
            ts,
            cmd: cmd.to_string(),
            config,
            verdict: None,
            value: None,
            bound: None,
            gap: None,
            seed: None,
            n: None,
            k: None,
            kind: None,
            scope_note: None,
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }

    /// Fill the search-related fields from an outcome. Certified values are
    /// written exactly; raw float search values as numbers.
    pub fn with_outcome(mut self, o: &SearchOutcome) -> RunRecord {
        self.verdict = Some(o.verdict.as_str().to_string());
        self.value = Some(match &o.certificate {
            Some(c) => RecordScalar::exact(&c.value),
            None => RecordScalar::Float(o.value),
        });
        self.bound = Some(match &o.certificate {
            Some(c) => RecordScalar::exact(&c.bound_total),
            None => RecordScalar::exact(&o.bound.stochastic_bound),
        });
        self.gap = Some(RecordScalar::Float(o.gap));
        self.seed = Some(o.seed);
        self.n = Some(o.n);
        self.k = Some(o.k);
        self.kind = Some(o.objective.kind().as_str().to_string());
        self.scope_note = Some(o.scope_note.to_string());
        self
    }
}

/// Wall-clock ISO-8601 timestamp; `SOURCE_DATE_EPOCH` overrides it for
/// reproducible runs.
pub fn timestamp_now() -> String {
    if let Ok(v) = std::env::var("SOURCE_DATE_EPOCH") {
        if let Ok(secs) = v.parse::<i64>() {
            if let Some(t) = chrono::DateTime::from_timestamp(secs, 0) {
                return t.format("%Y-%m-%dT%H:%M:%SZ").to_string();
            }
        }
    }
    chrono::Utc::now().format("%Y-%m-%dT%H:%M:%SZ").to_string()
}

/// Fixed logical timestamp used in sweep record files, which are contracted
/// to be byte-identical across runs of the same seed.
pub fn timestamp_epoch() -> String {
    if let Ok(v) = std::env::var("SOURCE_DATE_EPOCH") {
        if let Ok(secs) = v.parse::<i64>() {
            if let Some(t) = chrono::DateTime::from_timestamp(secs, 0) {
                return t.format("%Y-%m-%dT%H:%M:%SZ").to_string();
            }
        }
    }
    "1970-01-01T00:00:00Z".to_string()
}

/// FNV-1a digest of input files, recorded so a run can name its inputs.
pub fn digest_hex(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

pub fn append_records(path: &Path, records: &[RunRecord]) -> Result<()> {
    let mut f = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    for r in records {
        writeln!(f, "{}", r.to_line())?;
    }
    Ok(())
}

pub fn write_records(path: &Path, records: &[RunRecord]) -> Result<()> {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_line());
        out.push('\n');
    }
    std::fs::write(path, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::brat;

    #[test]
    fn record_has_all_twelve_fields_in_order() {
        let rec = RunRecord::new(
            "bound",
            "1970-01-01T00:00:00Z".into(),
            serde_json::json!({}),
        );
        let line = rec.to_line();
        let keys = [
            "\"ts\":",
            "\"cmd\":",
            "\"config\":",
            "\"verdict\":",
            "\"value\":",
            "\"bound\":",
            "\"gap\":",
            "\"seed\":",
            "\"n\":",
            "\"k\":",
            "\"kind\":",
            "\"scope_note\":",
        ];
        let mut last = 0;
        for key in keys {
            let pos = line
                .find(key)
                .unwrap_or_else(|| panic!("missing {key} in {line}"));
            assert!(pos >= last, "field {key} out of order in {line}");
            last = pos;
        }
        let parsed: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(parsed.as_object().unwrap().len(), 12);
    }

    #[test]
    fn exact_values_serialize_as_strings() {
        let mut rec = RunRecord::new("per", "t".into(), serde_json::json!({}));
        rec.value = Some(RecordScalar::exact(&brat(1, 2)));
        rec.gap = Some(RecordScalar::Float(0.25));
        let line = rec.to_line();
        assert!(line.contains("\"value\":\"1/2\""), "{line}");
        assert!(line.contains("\"gap\":0.25"), "{line}");
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest_hex(b""), "cbf29ce484222325");
        assert_eq!(digest_hex(b"abc"), digest_hex(b"abc"));
        assert_ne!(digest_hex(b"abc"), digest_hex(b"abd"));
    }
}
