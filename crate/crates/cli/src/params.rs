use std::sync::Arc;

use serde_json::{Map, Value};
use ufdlab::coeff::Field;
use ufdlab::poly::{Polynomial, VarTable};

use crate::runner::{fail, ClaimError};

/// Typed read access to a claim's JSON parameter object.
#[derive(Clone, Copy, Debug)]
pub struct Params<'a> {
    map: &'a Map<String, Value>,
}

fn bad(key: &str, what: &str) -> ClaimError {
    ClaimError::Params(format!("parameter `{key}` must be {what}"))
}

impl<'a> Params<'a> {
    pub fn new(value: &'a Value) -> Result<Self, ClaimError> {
        match value {
            Value::Object(map) => Ok(Params { map }),
            _ => Err(ClaimError::Params("parameters must be a JSON object".into())),
        }
    }

    pub fn get(&self, key: &str) -> Option<&'a Value> {
        self.map.get(key)
    }

    pub fn has(&self, key: &str) -> bool {
        self.map.contains_key(key)
    }

    pub fn str(&self, key: &str) -> Result<&'a str, ClaimError> {
        match self.get(key) {
            Some(Value::String(s)) => Ok(s),
            Some(_) => Err(bad(key, "a string")),
            None => Err(ClaimError::Params(format!("missing parameter `{key}`"))),
        }
    }

    pub fn str_or(&self, key: &str, default: &'a str) -> Result<&'a str, ClaimError> {
        if self.has(key) {
            self.str(key)
        } else {
            Ok(default)
        }
    }

    pub fn field(&self, default: &'a str) -> Result<&'a str, ClaimError> {
        self.str_or("field", default)
    }

    pub fn i64(&self, key: &str) -> Result<i64, ClaimError> {
        match self.get(key) {
            Some(v) => v.as_i64().ok_or_else(|| bad(key, "an integer")),
            None => Err(ClaimError::Params(format!("missing parameter `{key}`"))),
        }
    }

    pub fn u64(&self, key: &str) -> Result<u64, ClaimError> {
        match self.get(key) {
            Some(v) => v.as_u64().ok_or_else(|| bad(key, "a non-negative integer")),
            None => Err(ClaimError::Params(format!("missing parameter `{key}`"))),
        }
    }

    pub fn u64_or(&self, key: &str, default: u64) -> Result<u64, ClaimError> {
        if self.has(key) {
            self.u64(key)
        } else {
            Ok(default)
        }
    }

    pub fn u32(&self, key: &str) -> Result<u32, ClaimError> {
        u32::try_from(self.u64(key)?).map_err(|_| bad(key, "a 32-bit integer"))
    }

    pub fn u32_or(&self, key: &str, default: u32) -> Result<u32, ClaimError> {
        if self.has(key) {
            self.u32(key)
        } else {
            Ok(default)
        }
    }

    pub fn i64_list(&self, key: &str) -> Result<Vec<i64>, ClaimError> {
        let arr = self.get(key).and_then(Value::as_array).ok_or_else(|| bad(key, "an array of integers"))?;
        arr.iter().map(|v| v.as_i64().ok_or_else(|| bad(key, "an array of integers"))).collect()
    }

    /// A list of strings; bare numbers are accepted and printed.
    pub fn str_list(&self, key: &str) -> Result<Vec<String>, ClaimError> {
        let arr = self.get(key).and_then(Value::as_array).ok_or_else(|| bad(key, "an array of strings"))?;
        arr.iter()
            .map(|v| match v {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                _ => Err(bad(key, "an array of strings")),
            })
            .collect()
    }

    pub fn str_list_or(&self, key: &str, default: &[&str]) -> Result<Vec<String>, ClaimError> {
        if self.has(key) {
            self.str_list(key)
        } else {
            Ok(default.iter().map(|s| s.to_string()).collect())
        }
    }

    /// Variable table from `key`, or `default` when absent.
    pub fn vars(&self, key: &str, default: &[&str]) -> Result<Arc<VarTable>, ClaimError> {
        VarTable::new(&self.str_list_or(key, default)?).map_err(fail)
    }

    pub fn poly<F: Field>(&self, vars: &Arc<VarTable>, key: &str) -> Result<Polynomial<F>, ClaimError> {
        let s = match self.get(key) {
            Some(Value::Number(n)) => n.to_string(),
            _ => self.str(key)?.to_string(),
        };
        Polynomial::parse(vars, &s).map_err(|e| ClaimError::Params(format!("parameter `{key}`: {e}")))
    }

    pub fn poly_list<F: Field>(&self, vars: &Arc<VarTable>, key: &str) -> Result<Vec<Polynomial<F>>, ClaimError> {
        self.str_list(key)?
            .iter()
            .map(|s| Polynomial::parse(vars, s).map_err(|e| ClaimError::Params(format!("parameter `{key}`: {e}"))))
            .collect()
    }

    /// Field constants given as integers or literals such as `"3/2"`.
    pub fn scalars<F: Field>(&self, key: &str) -> Result<Vec<F>, ClaimError> {
        self.str_list(key)?
            .iter()
            .map(|s| F::parse_literal(s).map_err(|e| ClaimError::Params(format!("parameter `{key}`: {e}"))))
            .collect()
    }
}

impl Params<'_> {
    pub fn i64_lists(&self, key: &str) -> Result<Vec<Vec<i64>>, ClaimError> {
        let arr = self.get(key).and_then(Value::as_array).ok_or_else(|| bad(key, "an array of integer arrays"))?;
        arr.iter()
            .map(|row| {
                let row = row.as_array().ok_or_else(|| bad(key, "an array of integer arrays"))?;
                row.iter().map(|v| v.as_i64().ok_or_else(|| bad(key, "an array of integer arrays"))).collect()
            })
            .collect()
    }

    pub fn str_lists(&self, key: &str) -> Result<Vec<Vec<String>>, ClaimError> {
        let arr = self.get(key).and_then(Value::as_array).ok_or_else(|| bad(key, "an array of string arrays"))?;
        arr.iter()
            .map(|row| {
                let row = row.as_array().ok_or_else(|| bad(key, "an array of string arrays"))?;
                row.iter().map(|v| v.as_str().map(str::to_string).ok_or_else(|| bad(key, "an array of string arrays"))).collect()
            })
            .collect()
    }
}
