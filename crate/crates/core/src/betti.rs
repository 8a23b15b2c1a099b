//! Sparse graded Betti tables of `R/I`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(i, j) -> β_{i,j}`, storing positive entries only.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

/// One record of the machine-readable form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table holding only `β_{0,0} = 1`.
    pub fn unit() -> Self {
        let mut t = Self::new();
        t.add(0, 0, 1);
        t
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries
            .iter()
            .map(|(&(i, j), &value)| BettiEntry { i, j, value })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn merge(&mut self, other: &BettiTable) {
        for e in other.entries() {
            self.add(e.i, e.j, e.value);
        }
    }

    /// Entries with internal degree `j` satisfying the predicate.
    pub fn filter_degrees(&self, keep: impl Fn(usize) -> bool) -> BettiTable {
        BettiTable {
            entries: self
                .entries
                .iter()
                .filter(|(&(_, j), _)| keep(j))
                .map(|(&k, &v)| (k, v))
                .collect(),
        }
    }

    /// Column `j = degree`.
    pub fn column(&self, degree: usize) -> BettiTable {
        self.filter_degrees(|j| j == degree)
    }

    /// `pd = max { i : β_{i,j} != 0 }`.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `reg = max { j - i : β_{i,j} != 0 }`.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j.saturating_sub(i)).max()
    }

    /// Sum of `β_{i,j}` over `j` for a fixed `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ii, _), _)| ii == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// `{"entries":[{"i":..,"j":..,"value":..},...]}` in `(i, j)` order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&BettiJson {
            entries: self.entries().collect(),
        })
        .expect("plain integers always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: BettiJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        let mut t = BettiTable::new();
        for e in parsed.entries {
            t.add(e.i, e.j, e.value);
        }
        Ok(t)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,value\n");
        for e in self.entries() {
            out.push_str(&format!("{},{},{}\n", e.i, e.j, e.value));
        }
        out
    }

    /// Grid with one row per homological degree `i` and one column per
    /// internal degree `j` that occurs; zeros print as `.`.
    pub fn to_text(&self) -> String {
        let mut js: Vec<usize> = self.entries.keys().map(|&(_, j)| j).collect();
        js.sort_unstable();
        js.dedup();
        let Some(max_i) = self.projective_dimension() else {
            return "(empty table)\n".into();
        };
        let cell = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .chain(js.iter().map(|j| j.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = format!("i={max_i}").len();
        let mut out = format!("{:>label$} |", "j");
        for j in &js {
            out.push_str(&format!(" {j:>cell$}"));
        }
        out.push('\n');
        out.push_str(&"-".repeat(label + 2 + js.len() * (cell + 1)));
        out.push('\n');
        for i in 0..=max_i {
            out.push_str(&format!("{:>label$} |", format!("i={i}")));
            for &j in &js {
                let v = self.get(i, j);
                let s = if v == 0 {
                    ".".to_string()
                } else {
                    v.to_string()
                };
                out.push_str(&format!(" {s:>cell$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Serializes as the list of entries.
impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries())
    }
}

/// Compact `{(i,j):v, ...}` form.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries()
            .map(|e| format!("({},{}):{}", e.i, e.j, e.value))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromIterator<BettiEntry> for BettiTable {
    fn from_iter<I: IntoIterator<Item = BettiEntry>>(iter: I) -> Self {
        let mut t = BettiTable::new();
        for e in iter {
            t.add(e.i, e.j, e.value);
        }
        t
    }
}
