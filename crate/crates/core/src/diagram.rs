//! Linear chord diagrams as permutation data.
//!
//! A diagram on a backbone of `n` vertices is stored as the partner array of
//! its chord involution ι. The backbone cycle τ = (1, 2, …, 2n) is implicit:
//! after collapsing the backbone to one vertex, the fatgraph is determined by
//! ι alone, its boundary components are the cycles of τ∘ι, and the genus
//! follows from the Euler relation 2 − 2g − r = 1 − n.
//!
//! Vertices are 1-based in the public API and in the text encoding
//! `n;p(1),p(2),…,p(n)` where `p(v)` is the partner of `v` or `0` when `v`
//! is unmatched.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const UNMATCHED: usize = usize::MAX;

/// A linear chord diagram with every backbone vertex on a chord: a
/// fixed-point-free involution on `{1, …, 2n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    // 0-based partners
    partner: Vec<usize>,
}

/// A partial linear chord diagram: a partial matching on `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialDiagram {
    partner: Vec<usize>,
}

/// Summary statistics of a (partial) diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramStats {
    pub genus: usize,
    /// Boundary components of the backbone-collapsed fatgraph.
    pub boundary_components: usize,
    pub chord_count: usize,
    pub one_chord_count: usize,
    /// Stack sizes in decreasing order.
    pub stack_sizes: Vec<usize>,
}

impl ChordDiagram {
    /// Builds a diagram from 1-based chord endpoints.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let d = PartialDiagram::from_pairs(2 * pairs.len(), pairs)?;
        ChordDiagram::try_from(d)
    }

    pub(crate) fn from_partner_unchecked(partner: Vec<usize>) -> Self {
        debug_assert!(is_fixed_point_free_involution(&partner));
        ChordDiagram { partner }
    }

    pub fn empty() -> Self {
        ChordDiagram { partner: Vec::new() }
    }

    pub fn chord_count(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len()
    }

    /// 1-based partner of 1-based vertex `v`.
    pub fn partner(&self, v: usize) -> usize {
        self.partner[v - 1] + 1
    }

    /// Chords as 1-based `(i, j)` with `i < j`, ordered by left endpoint.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        chords_of(&self.partner)
    }

    pub fn boundary_cycles(&self) -> usize {
        boundary_cycles_of(&self.partner)
    }

    pub fn genus(&self) -> usize {
        genus_of(&self.partner)
    }

    pub fn one_chord_count(&self) -> usize {
        one_chords_of(&self.partner)
    }

    pub fn stack_sizes(&self) -> Vec<usize> {
        stack_sizes_of(&self.partner)
    }

    /// Every stack has exactly one chord.
    pub fn is_shape(&self) -> bool {
        self.stack_sizes().iter().all(|&s| s == 1)
    }

    pub fn stats(&self) -> DiagramStats {
        let mut stack_sizes = self.stack_sizes();
        stack_sizes.sort_unstable_by(|a, b| b.cmp(a));
        DiagramStats {
            genus: self.genus(),
            boundary_components: self.boundary_cycles(),
            chord_count: self.chord_count(),
            one_chord_count: self.one_chord_count(),
            stack_sizes,
        }
    }

    pub fn to_partial(&self) -> PartialDiagram {
        PartialDiagram { partner: self.partner.clone() }
    }
}

impl TryFrom<PartialDiagram> for ChordDiagram {
    type Error = Error;
    fn try_from(d: PartialDiagram) -> Result<Self> {
        if let Some(v) = d.partner.iter().position(|&p| p == UNMATCHED) {
            return Err(Error::InvalidDiagram(format!("vertex {} is unmatched", v + 1)));
        }
        Ok(ChordDiagram { partner: d.partner })
    }
}

impl PartialDiagram {
    /// Builds a partial diagram on `n` backbone vertices from 1-based chords.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![UNMATCHED; n];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidDiagram(format!("chord ({a},{b}) outside 1..={n}")));
            }
            if a == b {
                return Err(Error::InvalidDiagram(format!("self-pair at vertex {a}")));
            }
            if partner[a - 1] != UNMATCHED || partner[b - 1] != UNMATCHED {
                return Err(Error::InvalidDiagram(format!("chord ({a},{b}) reuses a vertex")));
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        Ok(PartialDiagram { partner })
    }

    /// Builds from a 1-based partner list where `0` marks an unmatched vertex.
    pub fn from_partner_list(list: &[usize]) -> Result<Self> {
        let n = list.len();
        let mut partner = vec![UNMATCHED; n];
        for (v, &p) in list.iter().enumerate() {
            if p == 0 {
                continue;
            }
            if p > n {
                return Err(Error::InvalidDiagram(format!("partner {p} of vertex {} outside 1..={n}", v + 1)));
            }
            if p - 1 == v {
                return Err(Error::InvalidDiagram(format!("vertex {} paired with itself", v + 1)));
            }
            if list[p - 1] != v + 1 {
                return Err(Error::InvalidDiagram(format!(
                    "matching not symmetric: {} -> {p} but {p} -> {}",
                    v + 1,
                    list[p - 1]
                )));
            }
            partner[v] = p - 1;
        }
        Ok(PartialDiagram { partner })
    }

    pub(crate) fn from_partner_unchecked(partner: Vec<usize>) -> Self {
        PartialDiagram { partner }
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len()
    }

    pub fn chord_count(&self) -> usize {
        self.partner.iter().filter(|&&p| p != UNMATCHED).count() / 2
    }

    /// 1-based partner of `v`, or `None` if `v` is unmatched.
    pub fn partner(&self, v: usize) -> Option<usize> {
        match self.partner[v - 1] {
            UNMATCHED => None,
            p => Some(p + 1),
        }
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        chords_of(&self.partner)
    }

    pub fn one_chord_count(&self) -> usize {
        one_chords_of(&self.partner)
    }

    pub fn stack_sizes(&self) -> Vec<usize> {
        stack_sizes_of(&self.partner)
    }

    /// The stacks as lists of 1-based chords, outermost chord first.
    pub fn stacks(&self) -> Vec<Vec<(usize, usize)>> {
        stacks_of(&self.partner)
            .into_iter()
            .map(|s| s.into_iter().map(|(i, j)| (i + 1, j + 1)).collect())
            .collect()
    }

    /// Genus of the diagram obtained by deleting unmatched vertices.
    pub fn genus(&self) -> usize {
        genus_of(&compress(&self.partner))
    }

    pub fn boundary_cycles(&self) -> usize {
        boundary_cycles_of(&compress(&self.partner))
    }

    /// No 1-chords and every stack has at least `sigma` chords.
    pub fn is_macromolecular(&self, sigma: usize) -> bool {
        assert!(sigma >= 1, "minimum stack size must be at least 1");
        self.one_chord_count() == 0 && self.stack_sizes().iter().all(|&s| s >= sigma)
    }

    /// The shape projection: delete unmatched vertices, collapse every stack
    /// to its outermost chord, renumber.
    pub fn project_shape(&self) -> ChordDiagram {
        let full = compress(&self.partner);
        let mut keep = vec![true; full.len()];
        for (i, &j) in full.iter().enumerate() {
            // (i, j) is swallowed by the chord just outside it in the same stack
            if i < j && i > 0 && j + 1 < full.len() && full[i - 1] == j + 1 {
                keep[i] = false;
                keep[j] = false;
            }
        }
        let projected = restrict(&full, &keep);
        ChordDiagram::from_partner_unchecked(projected)
    }

    pub fn stats(&self) -> DiagramStats {
        let reduced = compress(&self.partner);
        let mut stack_sizes = self.stack_sizes();
        stack_sizes.sort_unstable_by(|a, b| b.cmp(a));
        DiagramStats {
            genus: genus_of(&reduced),
            boundary_components: boundary_cycles_of(&reduced),
            chord_count: self.chord_count(),
            one_chord_count: self.one_chord_count(),
            stack_sizes,
        }
    }

    /// Replaces chord `(i, j)` (1-based, i < j) by two nested parallel chords,
    /// inserting one new vertex next to each endpoint.
    pub fn double_chord(&self, i: usize, j: usize) -> Result<Self> {
        if self.partner(i) != Some(j) || i >= j {
            return Err(Error::InvalidDiagram(format!("({i},{j}) is not a chord")));
        }
        // 0-based: vertices up to i−1 stay, those strictly between the
        // endpoints shift by one, j−1 and beyond shift by two
        let map = |v: usize| -> usize {
            if v < i {
                v
            } else if v < j - 1 {
                v + 1
            } else {
                v + 2
            }
        };
        let n = self.partner.len() + 2;
        let mut partner = vec![UNMATCHED; n];
        for (v, &p) in self.partner.iter().enumerate() {
            if p != UNMATCHED {
                partner[map(v)] = map(p);
            }
        }
        let (outer_l, outer_r) = (i - 1, map(j - 1));
        partner[outer_l + 1] = outer_r - 1;
        partner[outer_r - 1] = outer_l + 1;
        Ok(PartialDiagram { partner })
    }
}

impl From<ChordDiagram> for PartialDiagram {
    fn from(d: ChordDiagram) -> Self {
        PartialDiagram { partner: d.partner }
    }
}

impl fmt::Display for PartialDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.partner.len())?;
        for (v, &p) in self.partner.iter().enumerate() {
            if v > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if p == UNMATCHED { 0 } else { p + 1 })?;
        }
        Ok(())
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_partial(), f)
    }
}

impl FromStr for PartialDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (head, body) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("{s:?}: expected `n;p(1),…,p(n)`")))?;
        let n: usize = head
            .parse()
            .map_err(|_| Error::Parse(format!("{head:?} is not a vertex count")))?;
        let list: Vec<usize> = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("{t:?} is not a vertex"))))
                .collect::<Result<_>>()?
        };
        if list.len() != n {
            return Err(Error::Parse(format!("header says {n} vertices, found {}", list.len())));
        }
        PartialDiagram::from_partner_list(&list)
    }
}

impl FromStr for ChordDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ChordDiagram::try_from(s.parse::<PartialDiagram>()?)
    }
}

// ---- slice kernels shared with the enumerators ----

pub(crate) fn is_fixed_point_free_involution(partner: &[usize]) -> bool {
    partner
        .iter()
        .enumerate()
        .all(|(v, &p)| p < partner.len() && p != v && partner[p] == v)
}

/// Number of cycles of τ∘ι, τ(v) = v + 1 mod 2n. One for the empty diagram.
pub(crate) fn boundary_cycles_of(partner: &[usize]) -> usize {
    let len = partner.len();
    if len == 0 {
        return 1;
    }
    if len <= 128 {
        let mut seen: u128 = 0;
        let mut cycles = 0;
        for start in 0..len {
            if seen >> start & 1 == 1 {
                continue;
            }
            cycles += 1;
            let mut v = start;
            while seen >> v & 1 == 0 {
                seen |= 1 << v;
                v = next_on_boundary(partner, v);
            }
        }
        cycles
    } else {
        let mut seen = vec![false; len];
        let mut cycles = 0;
        for start in 0..len {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = next_on_boundary(partner, v);
            }
        }
        cycles
    }
}

#[inline]
fn next_on_boundary(partner: &[usize], v: usize) -> usize {
    let w = partner[v] + 1;
    if w == partner.len() {
        0
    } else {
        w
    }
}

pub(crate) fn genus_of(partner: &[usize]) -> usize {
    let n = partner.len() / 2;
    let r = boundary_cycles_of(partner);
    assert!(
        r <= n + 1 && (n + 1 - r).is_multiple_of(2),
        "corrupted pairing: {n} chords with {r} boundary cycles"
    );
    (n + 1 - r) / 2
}

pub(crate) fn one_chords_of(partner: &[usize]) -> usize {
    partner
        .iter()
        .enumerate()
        .filter(|&(i, &j)| j != UNMATCHED && j == i + 1)
        .count()
}

fn chords_of(partner: &[usize]) -> Vec<(usize, usize)> {
    partner
        .iter()
        .enumerate()
        .filter(|&(i, &j)| j != UNMATCHED && i < j)
        .map(|(i, &j)| (i + 1, j + 1))
        .collect()
}

/// Stacks as 0-based chords, each listed from the outermost chord inward.
fn stacks_of(partner: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let len = partner.len();
    let is_chord = |i: usize, j: usize| i < j && partner[i] == j;
    let mut stacks = Vec::new();
    for (i, &j) in partner.iter().enumerate() {
        if j == UNMATCHED || i > j {
            continue;
        }
        let has_outer = i > 0 && j + 1 < len && is_chord(i - 1, j + 1);
        if has_outer {
            continue;
        }
        let mut stack = vec![(i, j)];
        let (mut a, mut b) = (i, j);
        while b >= 1 && a + 1 < b - 1 && is_chord(a + 1, b - 1) {
            a += 1;
            b -= 1;
            stack.push((a, b));
        }
        stacks.push(stack);
    }
    stacks
}

pub(crate) fn stack_sizes_of(partner: &[usize]) -> Vec<usize> {
    stacks_of(partner).iter().map(Vec::len).collect()
}

/// Smallest stack size, `usize::MAX` when there are no chords.
pub(crate) fn min_stack_of(partner: &[usize]) -> usize {
    stacks_of(partner).iter().map(Vec::len).min().unwrap_or(usize::MAX)
}

/// Deletes unmatched vertices and renumbers.
pub(crate) fn compress(partner: &[usize]) -> Vec<usize> {
    let keep: Vec<bool> = partner.iter().map(|&p| p != UNMATCHED).collect();
    restrict(partner, &keep)
}

fn restrict(partner: &[usize], keep: &[bool]) -> Vec<usize> {
    let mut index = vec![UNMATCHED; partner.len()];
    let mut next = 0;
    for (v, &k) in keep.iter().enumerate() {
        if k {
            index[v] = next;
            next += 1;
        }
    }
    partner
        .iter()
        .enumerate()
        .filter(|&(v, _)| keep[v])
        .map(|(_, &p)| index[p])
        .collect()
}

pub(crate) const fn unmatched() -> usize {
    UNMATCHED
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(pairs: &[(usize, usize)]) -> ChordDiagram {
        ChordDiagram::from_pairs(pairs).unwrap()
    }

    #[test]
    fn octagon_example() {
        let d = cd(&[(1, 5), (2, 3), (4, 7), (6, 8)]);
        assert_eq!(d.boundary_cycles(), 3);
        assert_eq!(d.genus(), 1);
    }

    #[test]
    fn single_chord() {
        let d = cd(&[(1, 2)]);
        assert_eq!(d.boundary_cycles(), 2);
        assert_eq!(d.genus(), 0);
    }

    #[test]
    fn empty_diagram() {
        let d = ChordDiagram::empty();
        assert_eq!(d.boundary_cycles(), 1);
        assert_eq!(d.genus(), 0);
        assert_eq!(d.to_string(), "0;");
        assert_eq!("0;".parse::<ChordDiagram>().unwrap(), d);
    }

    #[test]
    fn fully_nested_diagrams_are_planar() {
        for n in 0..=6 {
            let pairs: Vec<_> = (1..=n).map(|k| (k, 2 * n + 1 - k)).collect();
            let d = cd(&pairs);
            assert_eq!(d.boundary_cycles(), n + 1, "n = {n}");
            assert_eq!(d.genus(), 0);
        }
    }

    #[test]
    fn crossing_has_genus_one() {
        let d = cd(&[(1, 3), (2, 4)]);
        assert_eq!(d.boundary_cycles(), 1);
        assert_eq!(d.genus(), 1);
    }

    #[test]
    fn partial_genus_ignores_isolated_vertices() {
        let blank = PartialDiagram::from_pairs(5, &[]).unwrap();
        assert_eq!(blank.genus(), 0);
        let a = PartialDiagram::from_pairs(4, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(a.genus(), 1);
        let b = PartialDiagram::from_pairs(6, &[(1, 4), (2, 6)]).unwrap();
        assert_eq!(b.genus(), 1);
    }

    #[test]
    fn stacks() {
        let a = PartialDiagram::from_pairs(6, &[(1, 6), (2, 5)]).unwrap();
        assert_eq!(a.stack_sizes(), vec![2]);
        let b = PartialDiagram::from_pairs(4, &[(1, 4), (2, 3)]).unwrap();
        assert_eq!(b.stack_sizes(), vec![2]);
        assert_eq!(b.stacks(), vec![vec![(1, 4), (2, 3)]]);
        let c = PartialDiagram::from_pairs(4, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(c.stack_sizes(), vec![1, 1]);
        // a gap breaks consecutive parallelism
        let d = PartialDiagram::from_pairs(7, &[(1, 7), (3, 6)]).unwrap();
        assert_eq!(d.stack_sizes(), vec![1, 1]);
    }

    #[test]
    fn one_chords() {
        assert_eq!(cd(&[(1, 2), (3, 4)]).one_chord_count(), 2);
        assert_eq!(cd(&[(1, 4), (2, 3)]).one_chord_count(), 1);
        assert_eq!(cd(&[(1, 3), (2, 4)]).one_chord_count(), 0);
    }

    #[test]
    fn shape_and_macromolecular_predicates() {
        assert!(cd(&[(1, 3), (2, 4)]).is_shape());
        assert!(!cd(&[(1, 4), (2, 3)]).is_shape());
        let doubled = PartialDiagram::from_pairs(8, &[(1, 6), (2, 5), (3, 8), (4, 7)]).unwrap();
        assert_eq!(doubled.stack_sizes(), vec![2, 2]);
        assert!(doubled.is_macromolecular(2));
        assert!(!doubled.is_macromolecular(3));
        let with_hairpin = PartialDiagram::from_pairs(4, &[(2, 3)]).unwrap();
        assert!(!with_hairpin.is_macromolecular(1));
    }

    #[test]
    fn projection() {
        let nested = PartialDiagram::from_pairs(4, &[(1, 4), (2, 3)]).unwrap();
        assert_eq!(nested.project_shape(), cd(&[(1, 2)]));
        let doubled = PartialDiagram::from_pairs(8, &[(1, 6), (2, 5), (3, 8), (4, 7)]).unwrap();
        let shape = doubled.project_shape();
        assert_eq!(shape, cd(&[(1, 3), (2, 4)]));
        assert_eq!(shape.genus(), doubled.genus());
        let s = cd(&[(1, 3), (2, 4)]);
        assert_eq!(s.to_partial().project_shape(), s);
        // a bulge between two chords disappears before stacks collapse
        let bulge = PartialDiagram::from_pairs(5, &[(1, 5), (2, 3)]).unwrap();
        assert_eq!(bulge.project_shape(), cd(&[(1, 2)]));
        assert_eq!(PartialDiagram::from_pairs(3, &[]).unwrap().project_shape(), ChordDiagram::empty());
    }

    #[test]
    fn doubling_a_chord() {
        let d = PartialDiagram::from_pairs(4, &[(1, 3), (2, 4)]).unwrap();
        let dd = d.double_chord(1, 3).unwrap();
        assert_eq!(dd, PartialDiagram::from_pairs(6, &[(1, 5), (2, 4), (3, 6)]).unwrap());
        assert_eq!(dd.genus(), 1);
        assert!(d.double_chord(1, 2).is_err());
    }

    #[test]
    fn text_encoding() {
        let d = PartialDiagram::from_pairs(5, &[(1, 4), (2, 5)]).unwrap();
        assert_eq!(d.to_string(), "5;4,5,0,1,2");
        assert_eq!("5;4,5,0,1,2".parse::<PartialDiagram>().unwrap(), d);
        assert!("3;2,1".parse::<PartialDiagram>().is_err());
        assert!("2;2,2".parse::<PartialDiagram>().is_err());
        assert!("2;1,0".parse::<PartialDiagram>().is_err());
        assert!("4;4,5,0,1,2".parse::<PartialDiagram>().is_err());
        assert!("3;0,0,0".parse::<ChordDiagram>().is_err());
        assert!(ChordDiagram::from_pairs(&[(1, 2), (2, 3)]).is_err());
    }
}
