//! Tallies for identity suites.
//!
//! Every suite records, per identity, how many parameter cells were checked
//! and how many failed, together with the first counterexample seen.

use std::fmt;

use serde::Serialize;

use crate::error::Error;

/// A single failing cell of an identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub identity: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: lhs = {}, rhs = {}",
            self.identity, self.params, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub identity: String,
    pub checked: u64,
    pub failed: u64,
}

/// Aggregated result of one identity suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub suite: String,
    pub tallies: Vec<Tally>,
    pub first_failure: Option<Counterexample>,
}

impl IdentityReport {
    pub fn new(suite: impl Into<String>) -> Self {
        IdentityReport {
            suite: suite.into(),
            tallies: Vec::new(),
            first_failure: None,
        }
    }

    fn tally(&mut self, identity: &str) -> &mut Tally {
        let pos = match self.tallies.iter().position(|t| t.identity == identity) {
            Some(p) => p,
            None => {
                self.tallies.push(Tally {
                    identity: identity.to_string(),
                    checked: 0,
                    failed: 0,
                });
                self.tallies.len() - 1
            }
        };
        &mut self.tallies[pos]
    }

    /// Compare two sides of an identity; `params` is only rendered on failure.
    pub fn check<T, F>(&mut self, identity: &str, params: F, lhs: &T, rhs: &T) -> bool
    where
        T: PartialEq + fmt::Debug,
        F: FnOnce() -> String,
    {
        let ok = lhs == rhs;
        let t = self.tally(identity);
        t.checked += 1;
        if !ok {
            t.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(Counterexample {
                    identity: identity.to_string(),
                    params: params(),
                    lhs: format!("{lhs:?}"),
                    rhs: format!("{rhs:?}"),
                });
            }
        }
        ok
    }

    /// Record a boolean condition as an identity cell.
    pub fn check_true<F>(&mut self, identity: &str, params: F, cond: bool) -> bool
    where
        F: FnOnce() -> String,
    {
        self.check(identity, params, &cond, &true)
    }

    /// Record an operation that was expected to succeed but errored.
    pub fn record_error<F>(&mut self, identity: &str, params: F, err: &Error)
    where
        F: FnOnce() -> String,
    {
        let t = self.tally(identity);
        t.checked += 1;
        t.failed += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(Counterexample {
                identity: identity.to_string(),
                params: params(),
                lhs: format!("error: {err}"),
                rhs: String::new(),
            });
        }
    }

    pub fn merge(&mut self, other: IdentityReport) {
        for t in other.tallies {
            let mine = self.tally(&t.identity);
            mine.checked += t.checked;
            mine.failed += t.failed;
        }
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }

    pub fn passed(&self) -> bool {
        self.tallies.iter().all(|t| t.failed == 0)
    }

    pub fn total_checked(&self) -> u64 {
        self.tallies.iter().map(|t| t.checked).sum()
    }

    pub fn total_failed(&self) -> u64 {
        self.tallies.iter().map(|t| t.failed).sum()
    }

    /// Checked count for one identity, zero if never seen.
    pub fn checked(&self, identity: &str) -> u64 {
        self.tallies
            .iter()
            .find(|t| t.identity == identity)
            .map_or(0, |t| t.checked)
    }

    /// Convert a failing report into an error carrying its first counterexample.
    pub fn into_result(self) -> crate::Result<IdentityReport> {
        match (&self.first_failure, self.passed()) {
            (Some(c), false) => Err(Error::IdentityViolation(Box::new(c.clone()))),
            _ => Ok(self),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tallies_and_first_failure() {
        let mut r = IdentityReport::new("demo");
        assert!(r.check("a", || "n=1".into(), &1, &1));
        assert!(!r.check("a", || "n=2".into(), &1, &2));
        assert!(!r.check("b", || "n=3".into(), &5, &6));
        assert_eq!(r.total_checked(), 3);
        assert_eq!(r.total_failed(), 2);
        assert_eq!(r.first_failure.as_ref().unwrap().params, "n=2");
        assert!(!r.passed());
        assert!(r.into_result().is_err());
    }

    #[test]
    fn merge_accumulates() {
        let mut a = IdentityReport::new("x");
        a.check("i", String::new, &0, &0);
        let mut b = IdentityReport::new("y");
        b.check("i", String::new, &0, &0);
        b.check("j", String::new, &0, &0);
        a.merge(b);
        assert_eq!(a.checked("i"), 2);
        assert_eq!(a.checked("j"), 1);
        assert!(a.passed());
    }
}
