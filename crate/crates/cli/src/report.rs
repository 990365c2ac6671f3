use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Unknown,
}

/// Search bound of an undecided claim, or the timeout marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Level(u64),
    Timeout,
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Bound::Level(n) => s.serialize_u64(*n),
            Bound::Timeout => s.serialize_str("timeout"),
        }
    }
}

impl<'de> Deserialize<'de> for Bound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::Number(n) => n.as_u64().map(Bound::Level).ok_or_else(|| serde::de::Error::custom("bound must be a non-negative integer")),
            Value::String(s) if s == "timeout" => Ok(Bound::Timeout),
            _ => Err(serde::de::Error::custom("bound must be an integer or \"timeout\"")),
        }
    }
}

/// Outcome of one claim run. `verified` always carries a witness and
/// `unknown` always carries a bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub params: Value,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<Bound>,
    pub witness: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed_ms: u64,
    pub tool_version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteItem {
    pub criterion: u32,
    #[serde(flatten)]
    pub report: ClaimReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub tool_version: String,
    pub items: Vec<SuiteItem>,
}
