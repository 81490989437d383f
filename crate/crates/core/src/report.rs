//! Structured pass/fail reports for axiom suites.
//!
//! Violations are data, not errors: a suite runs to completion and reports
//! every broken equation together with the basis elements that witness it.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::wba::BasisId;

/// Cap on recorded witnesses per axiom; the total count is always exact.
const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    /// Basis elements at which the equation was evaluated.
    pub basis: Vec<BasisId>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    /// Stable identifier of the equation, e.g. `"wba.compat.delta-mul"`.
    pub axiom: String,
    /// Number of instances evaluated.
    pub checked: usize,
    /// Instances skipped because a product would leave the materialized window.
    pub skipped: usize,
    /// Total number of violations found.
    pub violations: usize,
    /// Recorded witnesses (at most a fixed cap).
    pub witnesses: Vec<Witness>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    /// Free-form context: parameters, cutoffs, strategies, tool version.
    pub context: BTreeMap<String, String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            context: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub fn with_context(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.context.insert(key.to_string(), value.to_string());
        self
    }

    pub fn set_context(&mut self, key: &str, value: impl fmt::Display) {
        self.context.insert(key.to_string(), value.to_string());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, axiom: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        for (k, v) in other.context {
            self.context.entry(k).or_insert(v);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.title,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for (k, v) in &self.context {
            writeln!(f, "  # {k} = {v}")?;
        }
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {} (checked {}, skipped {}, violations {})",
                if c.passed() { "ok" } else { "FAIL" },
                c.axiom,
                c.checked,
                c.skipped,
                c.violations
            )?;
            for w in &c.witnesses {
                let ids: Vec<String> = w.basis.iter().map(|b| b.to_string()).collect();
                writeln!(f, "      at ({}): lhs = {} ; rhs = {}", ids.join(", "), w.lhs, w.rhs)?;
            }
        }
        Ok(())
    }
}

/// Incremental builder for one axiom's tally.
pub struct CheckBuilder {
    check: Check,
}

impl CheckBuilder {
    pub fn new(axiom: impl Into<String>) -> Self {
        CheckBuilder {
            check: Check {
                axiom: axiom.into(),
                checked: 0,
                skipped: 0,
                violations: 0,
                witnesses: Vec::new(),
            },
        }
    }

    pub fn skip(&mut self) {
        self.check.skipped += 1;
    }

    pub fn pass(&mut self) {
        self.check.checked += 1;
    }

    pub fn fail(&mut self, basis: Vec<BasisId>, lhs: impl fmt::Display, rhs: impl fmt::Display) {
        self.check.checked += 1;
        self.check.violations += 1;
        if self.check.witnesses.len() < MAX_WITNESSES {
            self.check.witnesses.push(Witness {
                basis,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub fn record(
        &mut self,
        ok: bool,
        basis: &[BasisId],
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) {
        if ok {
            self.pass();
        } else {
            self.fail(basis.to_vec(), lhs, rhs);
        }
    }

    pub fn finish(self) -> Check {
        self.check
    }
}
