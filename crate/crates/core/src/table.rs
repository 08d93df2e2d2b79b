//! Count tables indexed by genus and size.

use std::fmt;

use num_traits::Zero;

use crate::arith::Integer;

/// Which family of diagrams a table counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableClass {
    /// Linear chord diagrams, indexed by chord count.
    Full,
    /// Shapes, indexed by chord count.
    Shapes,
    /// Macromolecular diagrams with minimum stack size σ, indexed by backbone
    /// vertex count.
    Macromolecular { sigma: usize },
}

impl fmt::Display for TableClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableClass::Full => write!(f, "full"),
            TableClass::Shapes => write!(f, "shapes"),
            TableClass::Macromolecular { sigma } => write!(f, "macromolecular(sigma={sigma})"),
        }
    }
}

/// Exact counts `(g, n) ↦ count`, optionally refined by the number `m` of
/// 1-chords. Every cell for `g ≤ g_max`, `n ≤ n_max` is stored, including
/// the structural zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusTable {
    class: TableClass,
    n_max: usize,
    g_max: usize,
    counts: Vec<Vec<Integer>>,
    by_one_chords: Option<Vec<Vec<Vec<Integer>>>>,
}

impl GenusTable {
    pub fn new(class: TableClass, g_max: usize, n_max: usize) -> Self {
        GenusTable {
            class,
            n_max,
            g_max,
            counts: vec![vec![Integer::zero(); n_max + 1]; g_max + 1],
            by_one_chords: None,
        }
    }

    /// A table that also tracks the 1-chord statistic, m ∈ 0..=n.
    pub fn with_one_chords(class: TableClass, g_max: usize, n_max: usize) -> Self {
        let mut t = Self::new(class, g_max, n_max);
        t.by_one_chords = Some(
            (0..=g_max)
                .map(|_| (0..=n_max).map(|n| vec![Integer::zero(); n + 1]).collect())
                .collect(),
        );
        t
    }

    pub fn class(&self) -> TableClass {
        self.class
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn g_max(&self) -> usize {
        self.g_max
    }

    pub fn has_one_chords(&self) -> bool {
        self.by_one_chords.is_some()
    }

    pub fn get(&self, g: usize, n: usize) -> &Integer {
        &self.counts[g][n]
    }

    /// Count for (g, n, m); zero for m > n. Panics if the table does not
    /// track 1-chords.
    pub fn get_m(&self, g: usize, n: usize, m: usize) -> Integer {
        let by_m = self.by_one_chords.as_ref().expect("table does not track 1-chords");
        by_m[g][n].get(m).cloned().unwrap_or_default()
    }

    pub fn row(&self, g: usize) -> &[Integer] {
        &self.counts[g]
    }

    /// Σ_g count(g, n).
    pub fn column_sum(&self, n: usize) -> Integer {
        self.counts.iter().map(|row| &row[n]).sum()
    }

    /// Overwrites one cell. Used to build tables and to inject faults when
    /// exercising the verification reports.
    pub fn set(&mut self, g: usize, n: usize, value: Integer) {
        self.counts[g][n] = value;
    }

    pub(crate) fn add_m(&mut self, g: usize, n: usize, m: usize, value: Integer) {
        if let Some(by_m) = self.by_one_chords.as_mut() {
            by_m[g][n][m] += &value;
        }
        self.counts[g][n] += value;
    }

    /// Cells where two tables over the same range disagree, as (g, n, left, right).
    pub fn differences(&self, other: &GenusTable) -> Vec<(usize, usize, Integer, Integer)> {
        let g_max = self.g_max.min(other.g_max);
        let n_max = self.n_max.min(other.n_max);
        let mut out = Vec::new();
        for g in 0..=g_max {
            for n in 0..=n_max {
                if self.counts[g][n] != other.counts[g][n] {
                    out.push((g, n, self.counts[g][n].clone(), other.counts[g][n].clone()));
                }
            }
        }
        out
    }
}
