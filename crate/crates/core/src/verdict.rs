use serde::Serialize;

/// Tri-state outcome of a finite check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "bound", rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    /// No decision within the given search bound.
    Unknown(u64),
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Verified
        } else {
            Verdict::Refuted
        }
    }

    /// Refuted dominates unknown, which dominates verified.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Refuted, _) | (_, Refuted) => Refuted,
            (Unknown(a), Unknown(b)) => Unknown(a.max(b)),
            (Unknown(a), _) | (_, Unknown(a)) => Unknown(a),
            (Verified, Verified) => Verified,
        }
    }

    pub fn is_verified(self) -> bool {
        self == Verdict::Verified
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::Unknown(_) => "unknown",
        }
    }
}
