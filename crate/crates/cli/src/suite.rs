//! Fixture suites shipped with the binary. Each fixture file lists the claims
//! run for one acceptance criterion.

use serde::Deserialize;
use serde_json::Value;

use crate::runner::ClaimError;

#[derive(Clone, Debug, Deserialize)]
pub struct FixtureItem {
    pub claim: String,
    pub params: Value,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Fixture {
    pub criterion: u32,
    pub title: String,
    pub items: Vec<FixtureItem>,
}

const ACCEPTANCE: [(&str, &str); 9] = [
    ("c01_groebner.json", include_str!("../fixtures/acceptance/c01_groebner.json")),
    ("c02_prime_avoid.json", include_str!("../fixtures/acceptance/c02_prime_avoid.json")),
    ("c03_samuel.json", include_str!("../fixtures/acceptance/c03_samuel.json")),
    ("c04_wchain.json", include_str!("../fixtures/acceptance/c04_wchain.json")),
    ("c05_level_identity.json", include_str!("../fixtures/acceptance/c05_level_identity.json")),
    ("c06_omega.json", include_str!("../fixtures/acceptance/c06_omega.json")),
    ("c07_counterexample.json", include_str!("../fixtures/acceptance/c07_counterexample.json")),
    ("c08_jacobian.json", include_str!("../fixtures/acceptance/c08_jacobian.json")),
    ("c09_trinomial.json", include_str!("../fixtures/acceptance/c09_trinomial.json")),
];

pub const SUITES: [&str; 1] = ["acceptance"];

pub fn load(suite: &str) -> Result<Vec<Fixture>, ClaimError> {
    let files: &[(&str, &str)] = match suite {
        "acceptance" => &ACCEPTANCE,
        other => return Err(ClaimError::Params(format!("unknown suite `{other}`; known: {}", SUITES.join(", ")))),
    };
    files
        .iter()
        .map(|(name, text)| serde_json::from_str(text).map_err(|e| ClaimError::Params(format!("fixture {name}: {e}"))))
        .collect()
}
