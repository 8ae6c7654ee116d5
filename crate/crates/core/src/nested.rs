//! Subsets of a ground set `[n]₀ = {0, …, n}`, building sets, nested sets and
//! the separation predicate shared by every nestohedron.
//!
//! A facet of a nestohedron is a proper member `X` of its building set `𝓑`.
//! Two facets `X`, `Y` have no vertex in common exactly when they are
//! incomparable and `X ∪ Y ∈ 𝓑`; this is [`is_separated`].

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::families::{Family, FamilyTag};

/// Largest supported ground-set parameter: `[63]₀` has 64 elements.
pub const MAX_GROUND: usize = 63;

/// A subset of `[n]₀` stored as a 64-bit characteristic vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u64,
    n: u8,
}

#[inline]
pub(crate) fn ground_mask(n: usize) -> u64 {
    if n >= 63 {
        u64::MAX
    } else {
        (1u64 << (n + 1)) - 1
    }
}

impl Subset {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::capacity("ground-set parameter n", MAX_GROUND, n));
        }
        if bits & !ground_mask(n) != 0 {
            return Err(Error::domain(format!(
                "bit pattern {bits:#x} is not a subset of [{n}]_0"
            )));
        }
        Ok(Subset { bits, n: n as u8 })
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self> {
        let mut bits = 0u64;
        for x in elements {
            if x > n {
                return Err(Error::domain(format!("element {x} is outside [{n}]_0")));
            }
            bits |= 1 << x;
        }
        Subset::new(n, bits)
    }

    pub fn singleton(n: usize, x: usize) -> Result<Self> {
        Subset::from_elements(n, [x])
    }

    /// The whole ground set `[n]₀`.
    pub fn full(n: usize) -> Result<Self> {
        Subset::new(n, ground_mask(n))
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert!(n <= MAX_GROUND && bits & !ground_mask(n) == 0);
        Subset { bits, n: n as u8 }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.bits >> x & 1 == 1
    }

    pub fn min(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.bits != 0).then(|| 63 - self.bits.leading_zeros() as usize)
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(x)
            }
        })
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits | other.bits,
            n: self.n.max(other.n),
        }
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits & other.bits,
            n: self.n.max(other.n),
        }
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn comparable(self, other: Subset) -> bool {
        self.is_subset_of(other) || other.is_subset_of(self)
    }

    /// True for subsets different from the whole ground set.
    pub fn is_proper(self) -> bool {
        self.bits != ground_mask(self.n as usize)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A simple undirected graph on the vertex set `[n]₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adjacency: Vec<u64>,
}

impl SimpleGraph {
    /// Builds a graph on `[n]₀` from an edge list. Loops are rejected,
    /// repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::capacity("ground-set parameter n", MAX_GROUND, n));
        }
        let mut adjacency = vec![0u64; n + 1];
        for &(u, v) in edges {
            if u > n || v > n {
                return Err(Error::domain(format!("edge ({u},{v}) leaves [{n}]_0")));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
        }
        Ok(SimpleGraph { n, adjacency })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        SimpleGraph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|u| (u, u + 1)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    /// The cycle `0 − 1 − … − n − 0`; for `n = 1` this is a single edge.
    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (0..n).map(|u| (u, u + 1)).collect();
        if n >= 2 {
            edges.push((n, 0));
        }
        SimpleGraph::from_edges(n, &edges)
    }

    /// The star with centre 0 and leaves `1, …, n`.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adjacency[v]
    }
}

/// A building set on `[n]₀`, either materialised or given by a family rule.
#[derive(Clone, Debug)]
pub enum BuildingSet {
    Explicit { n: usize, members: HashSet<Subset> },
    Rule(FamilyTag),
}

impl BuildingSet {
    /// Wraps a family of subsets after checking that it is a building set.
    pub fn explicit(n: usize, family: &[Subset]) -> Result<Self> {
        if !is_building_set(family, n) {
            return Err(Error::domain("family is not a building set"));
        }
        Ok(BuildingSet::Explicit {
            n,
            members: family.iter().copied().collect(),
        })
    }

    pub fn n(&self) -> usize {
        match self {
            BuildingSet::Explicit { n, .. } => *n,
            BuildingSet::Rule(tag) => tag.n(),
        }
    }

    pub fn contains(&self, s: Subset) -> bool {
        if s.is_empty() || s.bits & !ground_mask(self.n()) != 0 {
            return false;
        }
        match self {
            BuildingSet::Explicit { members, .. } => {
                members.contains(&Subset::from_bits_unchecked(self.n(), s.bits))
            }
            BuildingSet::Rule(tag) => rule_contains(tag.family(), tag.n(), s.bits),
        }
    }

    /// Members in (cardinality, bits) order. Rule-based sets are enumerated
    /// over all `2^{n+1}` subsets, so this is capped at `n ≤ 16`.
    pub fn members(&self) -> Result<Vec<Subset>> {
        let n = self.n();
        let mut out: Vec<Subset> = match self {
            BuildingSet::Explicit { members, .. } => members.iter().copied().collect(),
            BuildingSet::Rule(tag) => {
                if n > 16 {
                    return Err(Error::capacity(
                        "rule-based building set enumeration n",
                        16,
                        n,
                    ));
                }
                (1..=ground_mask(n))
                    .filter(|&b| rule_contains(tag.family(), n, b))
                    .map(|b| Subset::from_bits_unchecked(n, b))
                    .collect()
            }
        };
        out.sort_by_key(|s| (s.len(), s.bits));
        Ok(out)
    }
}

#[inline]
fn is_contiguous(bits: u64) -> bool {
    if bits == 0 {
        return false;
    }
    let shifted = bits >> bits.trailing_zeros();
    shifted & shifted.wrapping_add(1) == 0
}

fn rule_contains(family: Family, n: usize, bits: u64) -> bool {
    match family {
        Family::Permutohedron => bits != 0,
        Family::Associahedron => is_contiguous(bits),
        Family::Cyclohedron => {
            let complement = !bits & ground_mask(n);
            bits != 0 && (complement == 0 || is_contiguous(bits) || is_contiguous(complement))
        }
        Family::Stellohedron => bits & 1 == 1 || bits.count_ones() == 1,
    }
}

/// All nonempty vertex sets of `graph` that induce a connected subgraph.
pub fn connected_subsets(graph: &SimpleGraph) -> Result<BuildingSet> {
    let n = graph.n();
    let mut found = Vec::new();
    for root in 0..=n {
        let above = ground_mask(n) & !ground_mask(root);
        let below = ground_mask(root) & !(1u64 << root);
        grow_connected(
            graph,
            1 << root,
            graph.neighbours(root) & above,
            below,
            &mut found,
        );
    }
    Ok(BuildingSet::Explicit {
        n,
        members: found
            .into_iter()
            .map(|b| Subset::from_bits_unchecked(n, b))
            .collect(),
    })
}

// Each connected set containing the root is reached once: the lowest
// candidate in `frontier` is either added or forbidden for the rest of the
// branch.
fn grow_connected(
    graph: &SimpleGraph,
    set: u64,
    frontier: u64,
    forbidden: u64,
    out: &mut Vec<u64>,
) {
    out.push(set);
    let mut frontier = frontier;
    let mut forbidden = forbidden;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        let bit = 1u64 << v;
        frontier &= !bit;
        let next = (frontier | graph.neighbours(v)) & !set & !forbidden & !bit;
        grow_connected(graph, set | bit, next, forbidden, out);
        forbidden |= bit;
    }
}

/// Checks the building-set axioms: every member is a nonempty subset of
/// `[n]₀`, all singletons are present, and intersecting members have their
/// union in the family.
pub fn is_building_set(family: &[Subset], n: usize) -> bool {
    if n > MAX_GROUND {
        return false;
    }
    let mask = ground_mask(n);
    if family.iter().any(|s| s.is_empty() || s.bits & !mask != 0) {
        return false;
    }
    let members: HashSet<u64> = family.iter().map(|s| s.bits).collect();
    if (0..=n).any(|x| !members.contains(&(1u64 << x))) {
        return false;
    }
    let list: Vec<u64> = members.iter().copied().collect();
    list.iter().enumerate().all(|(i, &a)| {
        list[i + 1..]
            .iter()
            .all(|&b| a & b == 0 || members.contains(&(a | b)))
    })
}

/// A candidate nested set: a family of building-set members, not yet validated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NestedSetCandidate {
    pub members: Vec<Subset>,
}

impl NestedSetCandidate {
    pub fn new(members: Vec<Subset>) -> Self {
        NestedSetCandidate { members }
    }
}

impl FromIterator<Subset> for NestedSetCandidate {
    fn from_iter<I: IntoIterator<Item = Subset>>(iter: I) -> Self {
        NestedSetCandidate::new(iter.into_iter().collect())
    }
}

/// True iff no antichain of two or more members of `candidate` has its
/// union in `building`.
pub fn is_nested(candidate: &NestedSetCandidate, building: &BuildingSet) -> Result<bool> {
    if let Some(bad) = candidate.members.iter().find(|s| !building.contains(**s)) {
        return Err(Error::domain(format!(
            "{bad} is not a member of the building set"
        )));
    }
    let mut members: Vec<u64> = candidate.members.iter().map(|s| s.bits).collect();
    members.sort_unstable();
    members.dedup();
    let n = building.n();
    let mut chosen = Vec::with_capacity(members.len());
    Ok(!antichain_union_hits(
        &members,
        0,
        &mut chosen,
        0,
        &mut |u| building.contains(Subset::from_bits_unchecked(n, u)),
    ))
}

// Depth-first over antichains, extending only with members incomparable to
// everything already chosen; `hit` sees the union of every antichain of
// size at least two.
fn antichain_union_hits(
    members: &[u64],
    start: usize,
    chosen: &mut Vec<u64>,
    union: u64,
    hit: &mut impl FnMut(u64) -> bool,
) -> bool {
    for i in start..members.len() {
        let x = members[i];
        if chosen.iter().any(|&c| c & x == c || c & x == x) {
            continue;
        }
        if !chosen.is_empty() && hit(union | x) {
            return true;
        }
        chosen.push(x);
        let found = antichain_union_hits(members, i + 1, chosen, union | x, hit);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// Two facets are separated (share no vertex) iff they are incomparable and
/// their union belongs to the building set.
pub fn is_separated(x: Subset, y: Subset, building: &BuildingSet) -> bool {
    !x.comparable(y) && building.contains(x.union(y))
}
