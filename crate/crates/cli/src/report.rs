//! Report document shared by every subcommand, and its text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum ItemStatus {
    Pass,
    Fail,
}

impl ItemStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            ItemStatus::Pass
        } else {
            ItemStatus::Fail
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Item {
    pub id: String,
    pub status: ItemStatus,
    /// Always carries a `summary` string; `kind` selects the text layout.
    pub detail: Value,
}

impl Item {
    pub fn summary(&self) -> &str {
        self.detail.get("summary").and_then(Value::as_str).unwrap_or("")
    }

    fn is_value(&self) -> bool {
        self.detail.get("kind").and_then(Value::as_str) == Some("value")
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ReportDocument {
    pub version: String,
    pub config: Value,
    pub items: Vec<Item>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl ReportDocument {
    pub fn new(config: Value, items: Vec<Item>, elapsed_ms: u64) -> Self {
        let pass = items.iter().all(|i| i.status == ItemStatus::Pass);
        ReportDocument {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            items,
            pass,
            elapsed_ms,
        }
    }

    /// Process exit status; depends on nothing but `pass`.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Human-readable summary, a function of the document alone.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut failed = 0;
        for item in &self.items {
            if item.status == ItemStatus::Fail {
                failed += 1;
            }
            if item.is_value() {
                writeln!(out, "{}", item.summary()).unwrap();
            } else {
                let tag = match item.status {
                    ItemStatus::Pass => "PASS",
                    ItemStatus::Fail => "FAIL",
                };
                writeln!(out, "{tag}  {:<20} {}", item.id, item.summary()).unwrap();
            }
        }
        writeln!(
            out,
            "{} item(s), {failed} failed: {}",
            self.items.len(),
            if self.pass { "pass" } else { "fail" }
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn aggregate_follows_items() {
        let ok = Item {
            id: "a".into(),
            status: ItemStatus::Pass,
            detail: json!({"summary": "fine"}),
        };
        let bad = Item {
            id: "b".into(),
            status: ItemStatus::Fail,
            detail: json!({"summary": "broken"}),
        };
        assert!(ReportDocument::new(json!({}), vec![ok.clone()], 0).pass);
        let doc = ReportDocument::new(json!({}), vec![ok, bad], 3);
        assert!(!doc.pass);
        assert_eq!(doc.exit_code(), 1);
        assert!(doc.to_text().contains("FAIL  b"));
    }
}
