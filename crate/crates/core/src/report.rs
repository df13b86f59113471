//! Named pass/fail assertions and observational notes collected by the
//! theorem checks.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Data recorded without being asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub assertions: Vec<Assertion>,
    pub observations: Vec<Observation>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.assertions.push(Assertion { name: name.into(), passed, detail: detail.into() });
        passed
    }

    pub fn observe(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.observations.push(Observation { name: name.into(), value: value.into() });
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.assertions.extend(other.assertions);
        self.observations.extend(other.observations);
    }

    /// Prefix every assertion and observation name with `scope/`.
    pub fn scoped(mut self, scope: &str) -> Self {
        for a in &mut self.assertions {
            a.name = format!("{scope}/{}", a.name);
        }
        for o in &mut self.observations {
            o.name = format!("{scope}/{}", o.name);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.passed)
    }

    pub fn find(&self, name: &str) -> Option<&Assertion> {
        self.assertions.iter().find(|a| a.name == name)
    }

    /// `Err(TheoremViolation)` naming the first failed assertion.
    pub fn into_result(self) -> Result<Self> {
        if let Some(a) = self.failures().next() {
            return Err(Error::TheoremViolation(format!("{}: {}", a.name, a.detail)));
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_surface() {
        let mut r = CheckReport::new();
        assert!(r.check("a", true, ""));
        r.observe("note", "3");
        assert!(r.clone().into_result().is_ok());
        r.check("b", false, "off by one");
        let r = r.scoped("s");
        assert_eq!(r.failures().map(|a| a.name.as_str()).collect::<Vec<_>>(), ["s/b"]);
        assert!(matches!(r.into_result(), Err(Error::TheoremViolation(m)) if m.contains("off by one")));
    }
}
