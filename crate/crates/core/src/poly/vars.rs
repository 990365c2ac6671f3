use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Ordered variable names with a per-variable invertibility flag.
///
/// The order is fixed for the lifetime of a ring; it is also the variable
/// order of the lexicographic and graded orders.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VarTable {
    names: Vec<String>,
    invertible: Vec<bool>,
}

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>, PolyError> {
        Self::with_flags(names.iter().map(|n| (n.as_ref().to_string(), false)).collect())
    }

    /// Builds a table from `(name, invertible)` pairs.
    pub fn with_flags(entries: Vec<(String, bool)>) -> Result<Arc<Self>, PolyError> {
        let mut names = Vec::with_capacity(entries.len());
        let mut invertible = Vec::with_capacity(entries.len());
        for (name, inv) in entries {
            if !valid_name(&name) {
                return Err(PolyError::BadVariableName(name));
            }
            if names.contains(&name) {
                return Err(PolyError::DuplicateVariable(name));
            }
            names.push(name);
            invertible.push(inv);
        }
        Ok(Arc::new(VarTable { names, invertible }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn is_invertible(&self, i: usize) -> bool {
        self.invertible[i]
    }

    pub fn any_invertible(&self) -> bool {
        self.invertible.iter().any(|&b| b)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// A new table with extra (non-invertible) variables appended.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Arc<Self>, PolyError> {
        let mut entries: Vec<(String, bool)> =
            self.names.iter().cloned().zip(self.invertible.iter().copied()).collect();
        entries.extend(extra.iter().map(|n| (n.as_ref().to_string(), false)));
        Self::with_flags(entries)
    }

    /// A new table with extra (non-invertible) variables prepended.
    pub fn prepended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Arc<Self>, PolyError> {
        let mut entries: Vec<(String, bool)> = extra.iter().map(|n| (n.as_ref().to_string(), false)).collect();
        entries.extend(self.names.iter().cloned().zip(self.invertible.iter().copied()));
        Self::with_flags(entries)
    }

    /// A name of the form `{base}`, `{base}_1`, ... not already used.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..).map(|i| format!("{base}_{i}")).find(|n| self.index_of(n).is_none()).unwrap()
    }
}

impl fmt::Display for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.names.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}")?;
            if self.invertible[i] {
                write!(f, "^±1")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_unique() {
        assert!(VarTable::new(&["x", "y"]).is_ok());
        assert_eq!(VarTable::new(&["x", "x"]).unwrap_err(), PolyError::DuplicateVariable("x".into()));
        assert!(VarTable::new(&["2x"]).is_err());
    }

    #[test]
    fn fresh_names() {
        let t = VarTable::new(&["X", "X_1"]).unwrap();
        assert_eq!(t.fresh_name("X"), "X_2");
        assert_eq!(t.fresh_name("Z"), "Z");
    }
}
