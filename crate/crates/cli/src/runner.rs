use std::fmt;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use ufdlab::Verdict;

use crate::claims::find;
use crate::params::Params;
use crate::report::{Bound, ClaimReport, Status};
use crate::TOOL_VERSION;

/// Per-claim wall-clock limit used by the binary unless overridden.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

/// Usage errors; all map to exit code 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimError {
    UnknownClaim(String),
    /// Malformed or missing parameters.
    Params(String),
    /// A library precondition failed; the message is passed through verbatim.
    Rejected(String),
}

impl fmt::Display for ClaimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimError::UnknownClaim(id) => write!(f, "unknown claim `{id}`; see `ufdlab claim list`"),
            ClaimError::Params(m) => write!(f, "bad parameters: {m}"),
            ClaimError::Rejected(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for ClaimError {}

pub(crate) fn fail<E: fmt::Display>(e: E) -> ClaimError {
    ClaimError::Rejected(e.to_string())
}

/// What a handler returns before timing and bookkeeping are attached.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub witness: Value,
    pub note: Option<String>,
}

impl Outcome {
    pub fn new(verdict: Verdict, witness: Value) -> Self {
        Outcome { verdict, witness, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// With `expect_rejection: "<substring>"` a claim asserts that the library
/// refuses the input with a message containing the substring.
fn dispatch(claim_id: &str, params: &Value) -> Result<Outcome, ClaimError> {
    let entry = find(claim_id).ok_or_else(|| ClaimError::UnknownClaim(claim_id.to_string()))?;
    let p = Params::new(params)?;
    let expected = if p.has("expect_rejection") { Some(p.str("expect_rejection")?) } else { None };
    let result = (entry.handler)(&p);
    match (expected, result) {
        (None, r) => r,
        (Some(want), Err(ClaimError::Rejected(msg))) => {
            let ok = msg.contains(want);
            Ok(Outcome::new(Verdict::from_bool(ok), json!({ "rejected": msg, "expected": want })))
        }
        (Some(_), Err(e)) => Err(e),
        (Some(want), Ok(o)) => Ok(Outcome::new(Verdict::Refuted, json!({ "accepted": o.witness, "expected": want }))),
    }
}

fn report(claim_id: &str, params: &Value, outcome: Outcome, elapsed: Duration) -> ClaimReport {
    let (status, bound) = match outcome.verdict {
        Verdict::Verified => (Status::Verified, None),
        Verdict::Refuted => (Status::Refuted, None),
        Verdict::Unknown(b) => (Status::Unknown, Some(Bound::Level(b))),
    };
    ClaimReport {
        claim_id: claim_id.to_string(),
        params: params.clone(),
        status,
        bound,
        witness: outcome.witness,
        note: outcome.note,
        elapsed_ms: elapsed.as_millis() as u64,
        tool_version: TOOL_VERSION.to_string(),
    }
}

/// Runs one claim on the calling thread.
pub fn run_claim(claim_id: &str, params: &Value) -> Result<ClaimReport, ClaimError> {
    let start = Instant::now();
    let outcome = dispatch(claim_id, params)?;
    Ok(report(claim_id, params, outcome, start.elapsed()))
}

type Pending = (String, Value, Instant, mpsc::Receiver<Result<ClaimReport, ClaimError>>);

fn spawn(claim_id: &str, params: &Value) -> Result<Pending, ClaimError> {
    find(claim_id).ok_or_else(|| ClaimError::UnknownClaim(claim_id.to_string()))?;
    let (tx, rx) = mpsc::channel();
    let (id, p) = (claim_id.to_string(), params.clone());
    // a timed-out worker is left to finish on its own; its result is dropped
    thread::spawn(move || {
        let _ = tx.send(run_claim(&id, &p));
    });
    Ok((claim_id.to_string(), params.clone(), Instant::now(), rx))
}

fn collect(pending: Pending, timeout: Duration) -> Result<ClaimReport, ClaimError> {
    let (id, params, start, rx) = pending;
    let left = timeout.saturating_sub(start.elapsed());
    match rx.recv_timeout(left) {
        Ok(r) => r,
        Err(_) => Ok(ClaimReport {
            claim_id: id,
            params,
            status: Status::Unknown,
            bound: Some(Bound::Timeout),
            witness: json!({ "timeout_ms": timeout.as_millis() as u64 }),
            note: Some("no answer within the time limit".into()),
            elapsed_ms: start.elapsed().as_millis() as u64,
            tool_version: TOOL_VERSION.to_string(),
        }),
    }
}

/// Runs one claim on a worker thread; past `timeout` the report is unknown
/// with bound `"timeout"`.
pub fn run_claim_with_timeout(claim_id: &str, params: &Value, timeout: Duration) -> Result<ClaimReport, ClaimError> {
    collect(spawn(claim_id, params)?, timeout)
}

/// Runs all claims concurrently, each under its own timeout, and returns the
/// results in input order.
pub fn run_many(items: &[(String, Value)], timeout: Duration) -> Vec<Result<ClaimReport, ClaimError>> {
    let pending: Vec<Result<Pending, ClaimError>> = items.iter().map(|(id, p)| spawn(id, p)).collect();
    pending.into_iter().map(|p| p.and_then(|p| collect(p, timeout))).collect()
}

/// 0 when every report is verified, 1 if any is refuted, 2 otherwise.
pub fn exit_code<'a>(reports: impl IntoIterator<Item = &'a ClaimReport>) -> i32 {
    let mut code = 0;
    for r in reports {
        match r.status {
            Status::Refuted => return 1,
            Status::Unknown => code = 2,
            Status::Verified => {}
        }
    }
    code
}
