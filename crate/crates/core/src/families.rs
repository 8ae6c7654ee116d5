//! The four nestohedron families and their facet conflict predicates.
//!
//! | family        | graph on `[n]₀` | facets                                  |
//! |---------------|-----------------|-----------------------------------------|
//! | permutohedron | complete        | nonempty proper subsets                 |
//! | associahedron | path            | segments `[a,b]`, `a ≤ b`               |
//! | cyclohedron   | cycle           | cyclic segments                         |
//! | stellohedron  | star            | proper sets containing 0, and `{i}`     |
//!
//! Each family has a closed-form conflict rule; all of them agree with the
//! generic [`is_separated`](crate::nested::is_separated) predicate on the
//! connected-subset building set of the family's graph.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::nested::{BuildingSet, SimpleGraph, Subset, MAX_GROUND};
use crate::system::FacetSystem;

/// Largest `n` for which subset-labelled families are enumerated.
pub const MAX_SUBSET_FAMILY_N: usize = 16;
/// Largest `n` for which segment-labelled families are enumerated.
pub const MAX_SEGMENT_FAMILY_N: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Permutohedron,
    Associahedron,
    Cyclohedron,
    Stellohedron,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Permutohedron,
        Family::Associahedron,
        Family::Cyclohedron,
        Family::Stellohedron,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            Family::Permutohedron => "permuto",
            Family::Associahedron => "assoc",
            Family::Cyclohedron => "cyclo",
            Family::Stellohedron => "stello",
        }
    }

    /// The graph whose connected subsets form the family's building set.
    pub fn graph(self, n: usize) -> Result<SimpleGraph> {
        match self {
            Family::Permutohedron => SimpleGraph::complete(n),
            Family::Associahedron => SimpleGraph::path(n),
            Family::Cyclohedron => SimpleGraph::cycle(n),
            Family::Stellohedron => SimpleGraph::star(n),
        }
    }

    fn uses_segments(self) -> bool {
        matches!(self, Family::Associahedron | Family::Cyclohedron)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "permuto" | "permutohedron" => Ok(Family::Permutohedron),
            "assoc" | "associahedron" => Ok(Family::Associahedron),
            "cyclo" | "cyclohedron" => Ok(Family::Cyclohedron),
            "stello" | "stellohedron" | "astrohedron" => Ok(Family::Stellohedron),
            other => Err(Error::domain(format!("unknown family `{other}`"))),
        }
    }
}

/// A family together with its dimension `n ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyTag {
    family: Family,
    n: usize,
}

impl FamilyTag {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("dimension n must be at least 1"));
        }
        Ok(FamilyTag { family, n })
    }

    pub fn permutohedron(n: usize) -> Result<Self> {
        FamilyTag::new(Family::Permutohedron, n)
    }

    pub fn associahedron(n: usize) -> Result<Self> {
        FamilyTag::new(Family::Associahedron, n)
    }

    pub fn cyclohedron(n: usize) -> Result<Self> {
        FamilyTag::new(Family::Cyclohedron, n)
    }

    pub fn stellohedron(n: usize) -> Result<Self> {
        FamilyTag::new(Family::Stellohedron, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The rule-based building set of this family.
    pub fn building_set(&self) -> BuildingSet {
        BuildingSet::Rule(*self)
    }

    /// Closed-form facet count.
    pub fn facet_count(&self) -> u128 {
        let n = self.n as u128;
        match self.family {
            Family::Permutohedron => (1u128 << (n + 1)) - 2,
            Family::Associahedron => (n + 1) * (n + 2) / 2 - 1,
            Family::Cyclohedron => n * (n + 1),
            Family::Stellohedron => (1u128 << n) - 1 + n,
        }
    }

    fn enumeration_cap(&self) -> usize {
        if self.family.uses_segments() {
            MAX_SEGMENT_FAMILY_N
        } else {
            MAX_SUBSET_FAMILY_N
        }
    }

    /// Facets in canonical order: subsets by (cardinality, characteristic
    /// vector), segments by (length, start).
    pub fn facets(&self) -> Result<Vec<Facet>> {
        let n = self.n;
        let cap = self.enumeration_cap();
        if n > cap {
            return Err(Error::capacity("facet enumeration n", cap, n));
        }
        let out = match self.family {
            Family::Permutohedron | Family::Stellohedron => {
                let full = (1u64 << (n + 1)) - 1;
                let mut sets: Vec<u64> = (1..full)
                    .filter(|&b| {
                        self.family == Family::Permutohedron || b & 1 == 1 || b.count_ones() == 1
                    })
                    .collect();
                sets.sort_by_key(|&b| (b.count_ones(), b));
                sets.into_iter()
                    .map(|b| Facet::Set(Subset::from_bits_unchecked(n, b)))
                    .collect()
            }
            Family::Associahedron => (1..=n)
                .flat_map(|len| (0..=n + 1 - len).map(move |a| Segment::new(a, a + len - 1)))
                .map(Facet::Segment)
                .collect(),
            Family::Cyclohedron => (1..=n)
                .flat_map(|len| (0..=n).map(move |a| Segment::cyclic(a, len, n)))
                .map(Facet::Segment)
                .collect(),
        };
        Ok(out)
    }

    /// Checks that `facet` has the shape of a facet of this family.
    pub fn check_facet(&self, facet: &Facet) -> Result<()> {
        let n = self.n;
        let ok = match (self.family, facet) {
            (Family::Permutohedron, Facet::Set(s)) => s.n() == n && !s.is_empty() && s.is_proper(),
            (Family::Stellohedron, Facet::Set(s)) => {
                s.n() == n && !s.is_empty() && s.is_proper() && (s.contains(0) || s.len() == 1)
            }
            (Family::Associahedron, Facet::Segment(t)) => {
                t.start <= t.end && t.end <= n && !(t.start == 0 && t.end == n)
            }
            (Family::Cyclohedron, Facet::Segment(t)) => t.start <= n && t.end <= n && t.len(n) <= n,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{facet} is not a facet of the {self}"
            )))
        }
    }

    /// True iff the two facets share a vertex (are not separated).
    pub fn conflicts(&self, x: &Facet, y: &Facet) -> Result<bool> {
        self.check_facet(x)?;
        self.check_facet(y)?;
        Ok(self.conflicts_unchecked(x, y))
    }

    pub(crate) fn conflicts_unchecked(&self, x: &Facet, y: &Facet) -> bool {
        let n = self.n;
        match (x, y) {
            (Facet::Set(a), Facet::Set(b)) => match self.family {
                Family::Stellohedron => {
                    let singleton_leaf = |s: &Subset| s.len() == 1 && !s.contains(0);
                    (singleton_leaf(a) && singleton_leaf(b)) || a.comparable(*b)
                }
                _ => a.comparable(*b),
            },
            (Facet::Segment(s), Facet::Segment(t)) => match self.family {
                Family::Associahedron => !(segment_precedes(s, t) || segment_precedes(t, s)),
                _ => !(cyclic_precedes(s, t, n) || cyclic_precedes(t, s, n)),
            },
            _ => true,
        }
    }

    /// The connected-subset building set of the family graph, materialised.
    pub fn explicit_building_set(&self) -> Result<BuildingSet> {
        if self.n > MAX_GROUND {
            return Err(Error::capacity(
                "ground-set parameter n",
                MAX_GROUND,
                self.n,
            ));
        }
        crate::nested::connected_subsets(&self.family.graph(self.n)?)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::Permutohedron => "permutohedron",
            Family::Associahedron => "associahedron",
            Family::Cyclohedron => "cyclohedron",
            Family::Stellohedron => "stellohedron",
        };
        write!(f, "{}-dimensional {name}", self.n)
    }
}

impl FacetSystem for FamilyTag {
    type Facet = Facet;

    fn facets(&self) -> Result<Vec<Facet>> {
        FamilyTag::facets(self)
    }

    fn conflicts(&self, a: &Facet, b: &Facet) -> bool {
        self.conflicts_unchecked(a, b)
    }

    fn check_facet(&self, facet: &Facet) -> Result<()> {
        FamilyTag::check_facet(self, facet)
    }

    fn facet_count(&self) -> Result<u128> {
        Ok(FamilyTag::facet_count(self))
    }

    fn label(&self) -> String {
        self.to_string()
    }
}

/// A (possibly cyclic) segment `[start, end]` of `[n]₀`.
///
/// For the associahedron `start ≤ end`. For the cyclohedron `start > end`
/// means the segment wraps through `n` back to `0`. A proper cyclic segment
/// is determined by its start and length, so the pair is canonical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
}

impl Segment {
    pub const fn new(start: usize, end: usize) -> Self {
        Segment { start, end }
    }

    /// The cyclic segment of `[n]₀` starting at `start` with `len` elements.
    pub fn cyclic(start: usize, len: usize, n: usize) -> Self {
        debug_assert!(len >= 1 && len <= n + 1 && start <= n);
        Segment::new(start, cyclic_add(start, len - 1, n))
    }

    /// Number of elements, reading `start > end` as wrap-around.
    pub fn len(&self, n: usize) -> usize {
        if self.start <= self.end {
            self.end - self.start + 1
        } else {
            n + 1 - self.start + self.end + 1
        }
    }

    pub fn contains(&self, x: usize, n: usize) -> bool {
        (x + n + 1 - self.start) % (n + 1) < self.len(n)
    }

    pub fn to_subset(&self, n: usize) -> Result<Subset> {
        let len = self.len(n);
        Subset::from_elements(n, (0..len).map(|k| cyclic_add(self.start, k, n)))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

impl FromStr for Segment {
    type Err = Error;

    /// Parses `[a,b]`, spaces allowed.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("cannot parse segment {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Ok(Segment::new(a, b))
    }
}

/// Addition modulo `n + 1`.
#[inline]
pub fn cyclic_add(x: usize, k: usize, n: usize) -> usize {
    (x + k) % (n + 1)
}

/// A facet label of a nestohedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Facet {
    Set(Subset),
    Segment(Segment),
}

impl Facet {
    /// The facet as a subset of `[n]₀` (only for `n ≤ 63`).
    pub fn to_subset(&self, n: usize) -> Result<Subset> {
        match self {
            Facet::Set(s) => Ok(*s),
            Facet::Segment(t) => t.to_subset(n),
        }
    }

    pub fn as_segment(&self) -> Option<Segment> {
        match self {
            Facet::Segment(t) => Some(*t),
            Facet::Set(_) => None,
        }
    }

    pub fn as_set(&self) -> Option<Subset> {
        match self {
            Facet::Set(s) => Some(*s),
            Facet::Segment(_) => None,
        }
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Facet::Set(s) => s.fmt(f),
            Facet::Segment(t) => t.fmt(f),
        }
    }
}

/// `[a,b]` precedes `[c,d]` (linear segments) iff `a+1 ≤ c ≤ b+1` and `b < d`:
/// the two are incomparable and their union is again a segment.
pub fn segment_precedes(s: &Segment, t: &Segment) -> bool {
    s.start < t.start && t.start <= s.end + 1 && s.end < t.end
}

fn offset(from: usize, to: usize, n: usize) -> usize {
    (to + n + 1 - from) % (n + 1)
}

/// Set inclusion of cyclic segments.
pub fn cyclic_subset(s: &Segment, t: &Segment, n: usize) -> bool {
    offset(t.start, s.start, n) + s.len(n) <= t.len(n)
}

pub fn cyclic_disjoint(s: &Segment, t: &Segment, n: usize) -> bool {
    let o = offset(s.start, t.start, n);
    o >= s.len(n) && o + t.len(n) <= n + 1
}

/// `t` overlaps `s`: `t` starts after `s` (as integers) and the two are
/// neither disjoint nor comparable.
pub fn cyclic_overlaps(t: &Segment, s: &Segment, n: usize) -> bool {
    t.start > s.start
        && !cyclic_disjoint(s, t, n)
        && !cyclic_subset(s, t, n)
        && !cyclic_subset(t, s, n)
}

/// `t` follows `s`: `t` starts right after `s` ends.
pub fn cyclic_follows(t: &Segment, s: &Segment, n: usize) -> bool {
    cyclic_add(s.end, 1, n) == t.start
}

/// `s` precedes `t` when `t` overlaps or follows `s`.
pub fn cyclic_precedes(s: &Segment, t: &Segment, n: usize) -> bool {
    cyclic_follows(t, s, n) || cyclic_overlaps(t, s, n)
}

/// How the second segment sits relative to the first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyclicRelation {
    /// The second segment follows the first.
    Follows,
    /// The second overlaps the first (and does not follow it).
    Overlaps,
    /// The second precedes the first, and the first does not precede it.
    Precedes,
    None,
}

/// Classifies `t` relative to `s`. When `s` precedes `t` the answer is
/// [`CyclicRelation::Follows`] or [`CyclicRelation::Overlaps`]; the
/// complementary case where only `t` precedes `s` is
/// [`CyclicRelation::Precedes`].
pub fn cyclic_relation(s: &Segment, t: &Segment, n: usize) -> CyclicRelation {
    if cyclic_follows(t, s, n) {
        CyclicRelation::Follows
    } else if cyclic_overlaps(t, s, n) {
        CyclicRelation::Overlaps
    } else if cyclic_precedes(t, s, n) {
        CyclicRelation::Precedes
    } else {
        CyclicRelation::None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nested::is_separated;

    fn set(n: usize, xs: &[usize]) -> Facet {
        Facet::Set(Subset::from_elements(n, xs.iter().copied()).unwrap())
    }

    fn seg(a: usize, b: usize) -> Facet {
        Facet::Segment(Segment::new(a, b))
    }

    #[test]
    fn small_facet_lists() {
        assert_eq!(
            FamilyTag::associahedron(3).unwrap().facets().unwrap().len(),
            9
        );
        let cyclo7 = FamilyTag::cyclohedron(7).unwrap().facets().unwrap();
        assert_eq!(cyclo7.len(), 56);
        // independent count: every (start, length) pair names a distinct subset
        let distinct: std::collections::HashSet<u64> = cyclo7
            .iter()
            .map(|f| f.to_subset(7).unwrap().bits())
            .collect();
        assert_eq!(distinct.len(), 56);
        let brute = (1u64..255)
            .filter(|&b| {
                let x = b as u8;
                // a proper cyclic interval of 8 bits has exactly two boundary flips
                (x ^ x.rotate_left(1)).count_ones() == 2
            })
            .count();
        assert_eq!(brute, 56);
        assert_eq!(
            FamilyTag::stellohedron(3).unwrap().facets().unwrap().len(),
            10
        );
    }

    #[test]
    fn facet_counts_match_closed_forms() {
        for n in 1..=12 {
            for family in Family::ALL {
                let tag = FamilyTag::new(family, n).unwrap();
                let facets = tag.facets().unwrap();
                assert_eq!(facets.len() as u128, tag.facet_count(), "{tag}");
                let unique: std::collections::HashSet<_> = facets.iter().collect();
                assert_eq!(unique.len(), facets.len(), "{tag}");
            }
        }
    }

    #[test]
    fn enumeration_caps() {
        assert!(matches!(
            FamilyTag::permutohedron(17).unwrap().facets(),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            FamilyTag::cyclohedron(1001).unwrap().facets(),
            Err(Error::Capacity { .. })
        ));
        assert!(FamilyTag::new(Family::Associahedron, 0).is_err());
    }

    #[test]
    fn precedence_examples() {
        let s = |a, b| Segment::new(a, b);
        assert!(segment_precedes(&s(0, 1), &s(2, 3)));
        assert!(!segment_precedes(&s(1, 2), &s(1, 3)));
        assert!(!segment_precedes(&s(1, 3), &s(1, 2)));
        assert!(segment_precedes(&s(1, 2), &s(2, 3)));
    }

    #[test]
    fn cyclic_relation_examples() {
        let s = |a, b| Segment::new(a, b);
        assert_eq!(
            cyclic_relation(&s(0, 6), &s(7, 7), 7),
            CyclicRelation::Follows
        );
        assert_eq!(cyclic_relation(&s(3, 5), &s(3, 5), 7), CyclicRelation::None);
        assert_eq!(
            cyclic_relation(&s(2, 5), &s(4, 0), 7),
            CyclicRelation::Overlaps
        );
        assert_eq!(
            cyclic_relation(&s(4, 0), &s(2, 5), 7),
            CyclicRelation::Precedes
        );
        // [4,0] overlaps [2,5]: starts 4 > 2, they meet in {4,5}, neither contains the other
        let a = s(2, 5).to_subset(7).unwrap();
        let b = s(4, 0).to_subset(7).unwrap();
        assert!(a.intersection(b).bits() != 0 && !a.comparable(b));
    }

    #[test]
    fn conflict_examples() {
        let p = FamilyTag::permutohedron(3).unwrap();
        assert!(p.conflicts(&set(3, &[0]), &set(3, &[0, 1])).unwrap());
        assert!(!p.conflicts(&set(3, &[0]), &set(3, &[1])).unwrap());
        let st = FamilyTag::stellohedron(3).unwrap();
        assert!(st.conflicts(&set(3, &[1]), &set(3, &[2])).unwrap());
        assert!(!st.conflicts(&set(3, &[0]), &set(3, &[2])).unwrap());
        let c = FamilyTag::cyclohedron(7).unwrap();
        assert!(!c.conflicts(&seg(0, 6), &seg(7, 7)).unwrap());
    }

    #[test]
    fn conflicts_reject_foreign_facets() {
        let a = FamilyTag::associahedron(3).unwrap();
        assert!(a.conflicts(&seg(0, 3), &seg(0, 0)).is_err());
        assert!(a.conflicts(&set(3, &[0]), &seg(0, 0)).is_err());
        assert!(a.conflicts(&seg(2, 1), &seg(0, 0)).is_err());
        let st = FamilyTag::stellohedron(3).unwrap();
        assert!(st.conflicts(&set(3, &[1, 2]), &set(3, &[0])).is_err());
    }

    #[test]
    fn closed_forms_agree_with_generic_separation() {
        for n in 1..=8 {
            for family in Family::ALL {
                let tag = FamilyTag::new(family, n).unwrap();
                let building = tag.explicit_building_set().unwrap();
                let facets = tag.facets().unwrap();
                for (i, x) in facets.iter().enumerate() {
                    let xs = x.to_subset(n).unwrap();
                    assert!(building.contains(xs));
                    for y in &facets[i + 1..] {
                        let ys = y.to_subset(n).unwrap();
                        assert_eq!(
                            tag.conflicts(x, y).unwrap(),
                            !is_separated(xs, ys, &building),
                            "{tag}: {x} vs {y}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn associahedron_precedence_is_separation() {
        for n in 1..=9 {
            let tag = FamilyTag::associahedron(n).unwrap();
            let rule = tag.building_set();
            let facets = tag.facets().unwrap();
            for x in &facets {
                for y in &facets {
                    let (s, t) = (x.as_segment().unwrap(), y.as_segment().unwrap());
                    let (xs, ys) = (x.to_subset(n).unwrap(), y.to_subset(n).unwrap());
                    assert_eq!(
                        segment_precedes(&s, &t) || segment_precedes(&t, &s),
                        is_separated(xs, ys, &rule)
                    );
                }
            }
        }
    }

    #[test]
    fn cyclic_trichotomy_on_meeting_segments() {
        for n in 2..=9 {
            let facets = FamilyTag::cyclohedron(n).unwrap().facets().unwrap();
            for x in &facets {
                for y in &facets {
                    let (s, t) = (x.as_segment().unwrap(), y.as_segment().unwrap());
                    if s == t || cyclic_disjoint(&s, &t, n) {
                        continue;
                    }
                    let comparable = cyclic_subset(&s, &t, n) || cyclic_subset(&t, &s, n);
                    let st = cyclic_precedes(&s, &t, n);
                    let ts = cyclic_precedes(&t, &s, n);
                    assert!(comparable != (st || ts), "n={n} {s} {t}");
                    if s.len(n) + t.len(n) <= n + 1 || !covers_all(&s, &t, n) {
                        assert!(!(st && ts), "n={n} {s} {t}");
                    }
                }
            }
        }
    }

    fn covers_all(s: &Segment, t: &Segment, n: usize) -> bool {
        (0..=n).all(|x| s.contains(x, n) || t.contains(x, n))
    }

    #[test]
    fn cyclic_set_ops_match_bitsets() {
        for n in 1..=10 {
            let facets = FamilyTag::cyclohedron(n).unwrap().facets().unwrap();
            for x in &facets {
                for y in &facets {
                    let (s, t) = (x.as_segment().unwrap(), y.as_segment().unwrap());
                    let (xs, ys) = (x.to_subset(n).unwrap(), y.to_subset(n).unwrap());
                    assert_eq!(cyclic_subset(&s, &t, n), xs.is_subset_of(ys));
                    assert_eq!(cyclic_disjoint(&s, &t, n), xs.intersection(ys).is_empty());
                }
            }
        }
    }
}
