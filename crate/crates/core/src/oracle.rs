//! Brute-force ground truth.
//!
//! Every diagram of a class is generated once and its genus (and 1-chord
//! count) read off directly. Fixed-point-free involutions are produced by
//! pairing the smallest free vertex with each larger free vertex in turn;
//! partial matchings by deciding, vertex by vertex, whether it stays
//! unmatched or pairs forward. Work is split across threads by the fate of
//! vertex 1 and the per-thread tallies are summed, so results do not depend
//! on scheduling.

use rayon::prelude::*;

use crate::arith::Integer;
use crate::diagram::{self, ChordDiagram, PartialDiagram};
use crate::error::{Error, Result};
use crate::table::{GenusTable, TableClass};

pub const FULL_CAP_ENV: &str = "LINCHORD_FULL_CAP";
pub const PARTIAL_CAP_ENV: &str = "LINCHORD_PARTIAL_CAP";

/// Size limits for exhaustive enumeration. These are configuration: the
/// defaults keep every run at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCaps {
    /// Largest chord count for full diagrams ((2n−1)!! grows fast).
    pub full: usize,
    /// Largest backbone vertex count for partial diagrams.
    pub partial: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps { full: 9, partial: 14 }
    }
}

impl EnumerationCaps {
    /// Defaults overridden by `LINCHORD_FULL_CAP` / `LINCHORD_PARTIAL_CAP`.
    pub fn from_env() -> Result<Self> {
        let mut caps = Self::default();
        for (var, slot) in [(FULL_CAP_ENV, &mut caps.full), (PARTIAL_CAP_ENV, &mut caps.partial)] {
            if let Ok(v) = std::env::var(var) {
                *slot = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("{var}={v:?} is not a count")))?;
            }
        }
        Ok(caps)
    }

    fn check_full(&self, n: usize) -> Result<()> {
        if n > self.full {
            return Err(Error::CapExceeded {
                what: "chord count",
                value: n,
                cap: self.full,
                env_var: FULL_CAP_ENV,
            });
        }
        Ok(())
    }

    fn check_partial(&self, n: usize) -> Result<()> {
        if n > self.partial {
            return Err(Error::CapExceeded {
                what: "backbone vertex count",
                value: n,
                cap: self.partial,
                env_var: PARTIAL_CAP_ENV,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle {
    caps: EnumerationCaps,
}

impl Oracle {
    pub fn new(caps: EnumerationCaps) -> Self {
        Oracle { caps }
    }

    pub fn caps(&self) -> EnumerationCaps {
        self.caps
    }

    /// Every linear chord diagram with `n` chords, each exactly once.
    pub fn enumerate_chord_diagrams(&self, n: usize) -> Result<impl Iterator<Item = ChordDiagram>> {
        self.caps.check_full(n)?;
        let mut all = Vec::new();
        for_each_involution(2 * n, None, &mut |p| all.push(ChordDiagram::from_partner_unchecked(p.to_vec())));
        Ok(all.into_iter())
    }

    /// Every partial matching on `n` backbone vertices.
    pub fn enumerate_partial_diagrams(&self, n: usize) -> Result<impl Iterator<Item = PartialDiagram>> {
        self.caps.check_partial(n)?;
        let mut all = Vec::new();
        for_each_partial_matching(n, None, true, &mut |p| {
            all.push(PartialDiagram::from_partner_unchecked(p.to_vec()))
        });
        Ok(all.into_iter())
    }

    /// c_g(n) for all n ≤ n_max.
    pub fn cg(&self, n_max: usize) -> Result<GenusTable> {
        self.full_table(n_max, false, false)
    }

    /// c_g(n, m), refined by the number m of 1-chords.
    pub fn cg_onechords(&self, n_max: usize) -> Result<GenusTable> {
        self.full_table(n_max, false, true)
    }

    /// s_g(n, m): shapes by genus, size and 1-chords.
    pub fn shapes(&self, n_max: usize) -> Result<GenusTable> {
        self.full_table(n_max, true, true)
    }

    /// d_{g,σ}(n) for n ≤ n_max backbone vertices.
    pub fn macromolecular(&self, n_max: usize, sigma: usize) -> Result<GenusTable> {
        if sigma == 0 {
            return Err(Error::InvalidParameter("sigma must be at least 1".into()));
        }
        self.caps.check_partial(n_max)?;
        let g_max = n_max / 4;
        let mut table = GenusTable::new(TableClass::Macromolecular { sigma }, g_max, n_max);
        for n in 0..=n_max {
            let tally = partitioned(n, |first| {
                let mut counts = vec![0u64; g_max + 1];
                for_each_partial_matching(n, Some(first), false, &mut |p| {
                    if diagram::min_stack_of(p) >= sigma {
                        counts[diagram::genus_of(&diagram::compress(p))] += 1;
                    }
                });
                counts
            });
            for (g, c) in tally.into_iter().enumerate() {
                table.set(g, n, Integer::from(c));
            }
        }
        Ok(table)
    }

    fn full_table(&self, n_max: usize, shapes_only: bool, track_m: bool) -> Result<GenusTable> {
        self.caps.check_full(n_max)?;
        let g_max = n_max / 2;
        let class = if shapes_only { TableClass::Shapes } else { TableClass::Full };
        let mut table = if track_m {
            GenusTable::with_one_chords(class, g_max, n_max)
        } else {
            GenusTable::new(class, g_max, n_max)
        };
        for n in 0..=n_max {
            let width = n + 1;
            // flat [g][m] tally
            let tally = partitioned_full(n, |first| {
                let mut counts = vec![0u64; (g_max + 1) * width];
                for_each_involution(2 * n, Some(first), &mut |p| {
                    if shapes_only && diagram::stack_sizes_of(p).iter().any(|&s| s > 1) {
                        return;
                    }
                    let m = if track_m { diagram::one_chords_of(p) } else { 0 };
                    counts[diagram::genus_of(p) * width + m] += 1;
                });
                counts
            });
            for g in 0..=g_max {
                for m in 0..width {
                    let c = tally[g * width + m];
                    if c > 0 {
                        table.add_m(g, n, m, Integer::from(c));
                    }
                }
            }
        }
        Ok(table)
    }
}

/// Runs `work` once per choice for vertex 0 of a partial matching and sums
/// the resulting tallies.
fn partitioned(n: usize, work: impl Fn(FirstVertex) -> Vec<u64> + Sync + Send) -> Vec<u64> {
    let mut choices = vec![FirstVertex::Unmatched];
    choices.extend((1..n).map(FirstVertex::PairedWith));
    if n == 0 {
        choices = vec![FirstVertex::Any];
    }
    sum_tallies(choices.into_par_iter().map(work).collect())
}

fn partitioned_full(n: usize, work: impl Fn(FirstVertex) -> Vec<u64> + Sync + Send) -> Vec<u64> {
    let choices: Vec<FirstVertex> = if n == 0 {
        vec![FirstVertex::Any]
    } else {
        (1..2 * n).map(FirstVertex::PairedWith).collect()
    };
    sum_tallies(choices.into_par_iter().map(work).collect())
}

fn sum_tallies(parts: Vec<Vec<u64>>) -> Vec<u64> {
    parts
        .into_iter()
        .reduce(|mut acc, part| {
            acc.iter_mut().zip(part).for_each(|(a, b)| *a += b);
            acc
        })
        .unwrap_or_default()
}

/// How vertex 0 is constrained in a partitioned enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum FirstVertex {
    Any,
    Unmatched,
    PairedWith(usize),
}

/// Calls `visit` with the partner array of every fixed-point-free
/// involution on `0..len` (0-based), optionally fixing the partner of 0.
pub(crate) fn for_each_involution(len: usize, first: Option<FirstVertex>, visit: &mut dyn FnMut(&[usize])) {
    let mut partner = vec![diagram::unmatched(); len];
    if len == 0 {
        visit(&partner);
        return;
    }
    match first {
        Some(FirstVertex::PairedWith(w)) => {
            partner[0] = w;
            partner[w] = 0;
            involution_rec(&mut partner, 1, visit);
        }
        Some(FirstVertex::Unmatched) => {}
        _ => involution_rec(&mut partner, 0, visit),
    }
}

fn involution_rec(partner: &mut [usize], from: usize, visit: &mut dyn FnMut(&[usize])) {
    let free = diagram::unmatched();
    let Some(v) = (from..partner.len()).find(|&v| partner[v] == free) else {
        visit(partner);
        return;
    };
    for w in v + 1..partner.len() {
        if partner[w] == free {
            partner[v] = w;
            partner[w] = v;
            involution_rec(partner, v + 1, visit);
            partner[v] = free;
            partner[w] = free;
        }
    }
}

/// Calls `visit` with every partial matching on `0..n`. With
/// `allow_one_chords = false`, chords (v, v+1) are never formed.
pub(crate) fn for_each_partial_matching(
    n: usize,
    first: Option<FirstVertex>,
    allow_one_chords: bool,
    visit: &mut dyn FnMut(&[usize]),
) {
    let mut partner = vec![diagram::unmatched(); n];
    let min_gap = if allow_one_chords { 1 } else { 2 };
    if n == 0 {
        visit(&partner);
        return;
    }
    match first {
        Some(FirstVertex::Unmatched) => partial_rec(&mut partner, 1, min_gap, visit),
        Some(FirstVertex::PairedWith(w)) => {
            if w < min_gap {
                return;
            }
            partner[0] = w;
            partner[w] = 0;
            partial_rec(&mut partner, 1, min_gap, visit);
        }
        _ => partial_rec(&mut partner, 0, min_gap, visit),
    }
}

fn partial_rec(partner: &mut [usize], v: usize, min_gap: usize, visit: &mut dyn FnMut(&[usize])) {
    let free = diagram::unmatched();
    if v == partner.len() {
        visit(partner);
        return;
    }
    if partner[v] != free {
        partial_rec(partner, v + 1, min_gap, visit);
        return;
    }
    // v stays unmatched
    partial_rec(partner, v + 1, min_gap, visit);
    for w in v + min_gap..partner.len() {
        if partner[w] == free {
            partner[v] = w;
            partner[w] = v;
            partial_rec(partner, v + 1, min_gap, visit);
            partner[v] = free;
            partner[w] = free;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{double_factorial_odd, int};

    #[test]
    fn involution_counts() {
        let o = Oracle::default();
        assert_eq!(o.enumerate_chord_diagrams(0).unwrap().count(), 1);
        assert_eq!(o.enumerate_chord_diagrams(2).unwrap().count(), 3);
        assert_eq!(o.enumerate_chord_diagrams(4).unwrap().count(), 105);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let o = Oracle::default();
        let all: Vec<_> = o.enumerate_chord_diagrams(5).unwrap().collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        assert_eq!(all.len(), 945);
    }

    #[test]
    fn partial_matching_counts() {
        // involution numbers 1, 1, 2, 4, 10, 26, 76
        let o = Oracle::default();
        let counts: Vec<usize> = (0..=6).map(|n| o.enumerate_partial_diagrams(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76]);
    }

    #[test]
    fn cap_is_enforced() {
        let o = Oracle::new(EnumerationCaps { full: 3, partial: 5 });
        assert!(matches!(o.cg(4), Err(Error::CapExceeded { .. })));
        assert!(matches!(o.macromolecular(6, 1), Err(Error::CapExceeded { .. })));
        assert!(o.enumerate_chord_diagrams(4).is_err());
    }

    #[test]
    fn small_genus_counts() {
        let t = Oracle::default().cg(4).unwrap();
        assert_eq!(*t.get(0, 3), int(5));
        assert_eq!(*t.get(1, 3), int(10));
        assert_eq!(*t.get(1, 2), int(1));
        assert_eq!(*t.get(2, 4), int(21));
        for n in 0..=4 {
            assert_eq!(t.column_sum(n), double_factorial_odd(n as u64));
        }
    }

    #[test]
    fn one_chord_refinement() {
        let t = Oracle::default().cg_onechords(2).unwrap();
        assert_eq!(t.get_m(0, 1, 1), int(1));
        assert_eq!(t.get_m(0, 1, 0), int(0));
        assert_eq!(t.get_m(0, 2, 2), int(1));
        assert_eq!(t.get_m(0, 2, 1), int(1));
        assert_eq!(t.get_m(1, 2, 0), int(1));
        assert_eq!(t.get_m(0, 2, 0), int(0));
    }

    #[test]
    fn shape_counts() {
        let s = Oracle::default().shapes(3).unwrap();
        assert_eq!(s.get_m(0, 1, 1), int(1));
        assert_eq!(s.get_m(1, 2, 0), int(1));
        assert_eq!(s.get_m(0, 2, 2), int(1));
        assert_eq!(s.get_m(0, 2, 1), int(0));
    }

    #[test]
    fn macromolecular_small_values() {
        let o = Oracle::default();
        for sigma in 1..=3 {
            assert_eq!(*o.macromolecular(0, sigma).unwrap().get(0, 0), int(1));
        }
        let t1 = o.macromolecular(4, 1).unwrap();
        assert_eq!(*t1.get(1, 4), int(1));
        let t2 = o.macromolecular(8, 2).unwrap();
        for n in 0..8 {
            assert_eq!(*t2.get(1, n), int(0));
        }
        assert_eq!(*t2.get(1, 8), int(1));
    }
}
