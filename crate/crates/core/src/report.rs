//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const SCHEMA: &str = "1";

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Item {
    pub id: String,
    pub status: Status,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Item {
    pub fn pass(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            status: Status::Pass,
            lhs: None,
            rhs: None,
            note: None,
        }
    }

    pub fn fail(id: impl Into<String>, lhs: Value, rhs: Value) -> Self {
        Self {
            id: id.into(),
            status: Status::Fail,
            lhs: Some(lhs),
            rhs: Some(rhs),
            note: None,
        }
    }

    /// Pass when `ok`, otherwise a failure carrying the lazily built sides.
    pub fn check(id: impl Into<String>, ok: bool, sides: impl FnOnce() -> (Value, Value)) -> Self {
        if ok {
            Self::pass(id)
        } else {
            let (l, r) = sides();
            Self::fail(id, l, r)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub suite: String,
    pub n: usize,
    pub items: Vec<Item>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>, n: usize, items: Vec<Item>) -> Self {
        let passed = items.iter().filter(|i| i.passed()).count();
        let summary = Summary {
            total: items.len(),
            passed,
            failed: items.len() - passed,
        };
        Self {
            schema: SCHEMA.into(),
            suite: suite.into(),
            n,
            items,
            summary,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| !i.passed())
    }

    pub fn item(&self, id: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.id == id)
    }

    /// Appends the items of `other` (same suite and `N`, disjoint item ids).
    pub fn merge(mut self, other: Report) -> Result<Self> {
        if self.suite != other.suite || self.n != other.n {
            return Err(Error::Config(format!(
                "cannot merge {}/{} into {}/{}",
                other.suite, other.n, self.suite, self.n
            )));
        }
        if let Some(dup) = other.items.iter().find(|i| self.item(&i.id).is_some()) {
            return Err(Error::Config(format!(
                "item {} present in both reports",
                dup.id
            )));
        }
        self.items.extend(other.items);
        self.notes.extend(other.notes);
        let notes = std::mem::take(&mut self.notes);
        Ok(Report::new(self.suite, self.n, self.items).with_notes(notes))
    }

    fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema != SCHEMA {
            return Err(Error::Parse(format!(
                "unsupported schema {:?}",
                self.schema
            )));
        }
        let passed = self.items.iter().filter(|i| i.passed()).count();
        let expect = Summary {
            total: self.items.len(),
            passed,
            failed: self.items.len() - passed,
        };
        if self.summary != expect {
            return Err(Error::Parse("summary does not match items".into()));
        }
        for item in &self.items {
            let has_sides = item.lhs.is_some() && item.rhs.is_some();
            match item.status {
                Status::Pass if item.lhs.is_some() || item.rhs.is_some() => {
                    return Err(Error::Parse(format!(
                        "passing item {} carries sides",
                        item.id
                    )))
                }
                Status::Fail if !has_sides => {
                    return Err(Error::Parse(format!(
                        "failing item {} lacks sides",
                        item.id
                    )))
                }
                _ => {}
            }
        }
        let mut ids: Vec<_> = self.items.iter().map(|i| i.id.as_str()).collect();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate item id".into()));
        }
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let r: Report = serde_json::from_str(s)?;
        r.validate()?;
        Ok(r)
    }

    /// File name used when writing one report per (suite, N).
    pub fn file_name(&self) -> String {
        format!("{}-n{}.json", self.suite, self.n)
    }
}
