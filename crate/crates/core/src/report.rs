//! Report serialization: JSON arrays and CSV with a header row, both in the
//! order the reports were produced.

use serde::Serialize;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "verified")]
    Verified,
    #[serde(rename = "FAILED")]
    Failed,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Failed => "FAILED",
        })
    }
}

pub fn to_json<T: Serialize>(items: &[T]) -> String {
    let mut out = serde_json::to_string_pretty(items).expect("report serialization");
    out.push('\n');
    out
}

pub fn to_csv<T: Serialize>(items: &[T]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for item in items {
        writer.serialize(item).expect("report serialization");
    }
    let bytes = writer.into_inner().expect("csv flush");
    String::from_utf8(bytes).expect("csv utf-8")
}
