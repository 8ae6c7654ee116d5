//! The simple permutoassociahedron `PA_n`.
//!
//! Its facets are the chains `S_s ⊂ S_{s+1} ⊂ … ⊂ S_t` of subsets of
//! `[n]₀` whose sizes run through a consecutive range `1 ≤ s ≤ t ≤ n`. Two
//! facets share a vertex when they lie in a common 1-nested set: either
//! one chain contains the other, or their union is a chain whose sizes are
//! not consecutive.

use std::fmt;

use crate::colourings::{alpha, assoc_colouring, Colouring};
use crate::error::{Error, Result};
use crate::families::{Facet, Segment};
use crate::nested::{ground_mask, Subset};
use crate::system::FacetSystem;

/// Largest `n` for which facets are enumerated.
pub const MAX_PA_N: usize = 6;

/// A chain of subsets of `[n]₀`, smallest first, each set one element
/// larger than the previous one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaFacet {
    n: u8,
    sets: Vec<u64>,
}

impl PaFacet {
    /// Checks the chain shape; the sets may be given in any order.
    pub fn new(n: usize, sets: Vec<Subset>) -> Result<Self> {
        if n == 0 || n > MAX_PA_N {
            return Err(Error::capacity(
                "permutoassociahedron dimension",
                MAX_PA_N,
                n,
            ));
        }
        let mut sets: Vec<Subset> = sets;
        sets.sort_by_key(|s| s.len());
        let ok = !sets.is_empty()
            && sets
                .iter()
                .all(|s| s.n() == n && !s.is_empty() && s.len() <= n)
            && sets
                .windows(2)
                .all(|w| w[1].len() == w[0].len() + 1 && w[0].is_subset_of(w[1]));
        if !ok {
            return Err(Error::domain(format!(
                "not a facet of the {n}-dimensional simple permutoassociahedron"
            )));
        }
        Ok(PaFacet {
            n: n as u8,
            sets: sets.iter().map(|s| s.bits()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn sets(&self) -> Vec<Subset> {
        self.sets
            .iter()
            .map(|&b| Subset::from_bits_unchecked(self.n(), b))
            .collect()
    }

    /// Number of sets in the chain.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `(|smallest|, |largest|)`.
    pub fn signature(&self) -> (usize, usize) {
        let size = |b: &u64| b.count_ones() as usize;
        (
            size(&self.sets[0]),
            size(self.sets.last().expect("nonempty chain")),
        )
    }

    /// The image `A^π`, with `pi[i]` the image of `i`.
    pub fn permute(&self, pi: &[usize]) -> Result<PaFacet> {
        let n = self.n();
        let image = pi
            .iter()
            .fold(0u64, |acc, &x| if x <= n { acc | 1 << x } else { acc });
        if pi.len() != n + 1 || image != ground_mask(n) {
            return Err(Error::domain("not a permutation of [n]₀"));
        }
        let sets = self
            .sets()
            .into_iter()
            .map(|s| Subset::from_elements(n, s.elements().map(|x| pi[x])))
            .collect::<Result<Vec<_>>>()?;
        PaFacet::new(n, sets)
    }

    fn contains_set(&self, b: u64) -> bool {
        self.sets.contains(&b)
    }
}

impl fmt::Display for PaFacet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, s) in self.sets().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// Closed-form facet count `Σ_{1≤s≤t≤n} C(n+1, t)·t!/s!`.
pub fn pa_facet_count(n: usize) -> u128 {
    let mut total = 0u128;
    for t in 1..=n {
        let choose = binomial(n as u128 + 1, t as u128);
        for s in 1..=t {
            let falling: u128 = ((s + 1)..=t).map(|x| x as u128).product();
            total += choose * falling;
        }
    }
    total
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All facets of `PA_n`, ordered by signature and then by their sets.
pub fn pa_facets(n: usize) -> Result<Vec<PaFacet>> {
    if n == 0 || n > MAX_PA_N {
        return Err(Error::capacity(
            "permutoassociahedron dimension",
            MAX_PA_N,
            n,
        ));
    }
    let full = ground_mask(n);
    let mut out = Vec::new();
    for base in 1..full {
        if base.count_ones() as usize > n {
            continue;
        }
        let mut chain = vec![base];
        grow_chain(n, full, &mut chain, &mut out);
    }
    out.sort_by(|a, b| (a.signature(), &a.sets).cmp(&(b.signature(), &b.sets)));
    Ok(out)
}

fn grow_chain(n: usize, full: u64, chain: &mut Vec<u64>, out: &mut Vec<PaFacet>) {
    out.push(PaFacet {
        n: n as u8,
        sets: chain.clone(),
    });
    let last = *chain.last().expect("nonempty chain");
    if last.count_ones() as usize == n {
        return;
    }
    let mut free = full & !last;
    while free != 0 {
        let x = free & free.wrapping_neg();
        free &= free - 1;
        chain.push(last | x);
        grow_chain(n, full, chain, out);
        chain.pop();
    }
}

/// True iff the two facets lie in a common 1-nested set, i.e. share a
/// vertex. A facet conflicts with itself.
pub fn pa_conflicts(a: &PaFacet, b: &PaFacet) -> bool {
    let a_in_b = a.sets.iter().all(|&s| b.contains_set(s));
    let b_in_a = b.sets.iter().all(|&s| a.contains_set(s));
    if a_in_b || b_in_a {
        return true;
    }
    let mut union: Vec<u64> = a.sets.iter().chain(&b.sets).copied().collect();
    union.sort_by_key(|s| (s.count_ones(), *s));
    union.dedup();
    let chain = union.windows(2).all(|w| w[0] & !w[1] == 0 && w[0] != w[1]);
    let consecutive = union
        .windows(2)
        .all(|w| w[1].count_ones() == w[0].count_ones() + 1);
    chain && !consecutive
}

/// `(|smallest|, |largest|)` of a facet.
pub fn pa_signature(a: &PaFacet) -> (usize, usize) {
    a.signature()
}

/// The maximal chain `M = {{n−1}, {n−1, n−2}, …, {n−1, …, 0}}`.
pub fn chain_m(n: usize) -> Result<PaFacet> {
    let sets = (1..=n)
        .map(|size| Subset::from_elements(n, (n - size)..n))
        .collect::<Result<Vec<_>>>()?;
    PaFacet::new(n, sets)
}

/// The facets contained in `M`: its subchains with consecutive sizes.
pub fn chain_m_members(n: usize) -> Result<Vec<PaFacet>> {
    let m = chain_m(n)?;
    let sets = m.sets();
    let mut out = Vec::new();
    for s in 1..=n {
        for t in s..=n {
            out.push(PaFacet::new(n, sets[s - 1..t].to_vec())?);
        }
    }
    Ok(out)
}

/// The colouring of `PA_n` with `α_{n−1} + 1` colours. A facet of
/// signature `(s, t)` takes the colour of the segment `[n−t, n−s]` in the
/// associahedron colouring of dimension `n − 1`; signature `(1, n)` takes
/// the extra colour.
pub fn pa_colouring(n: usize) -> Result<Colouring<PaFacet>> {
    let facets = pa_facets(n)?;
    let extra = alpha(n - 1) as u32 + 1;
    let assoc = if n >= 2 {
        Some(assoc_colouring(n - 1)?)
    } else {
        None
    };
    let colours = facets
        .iter()
        .map(|f| {
            let (s, t) = f.signature();
            if (s, t) == (1, n) {
                return extra;
            }
            let segment = Facet::Segment(Segment::new(n - t, n - s));
            assoc
                .as_ref()
                .and_then(|c| c.colour_of(&segment))
                .expect("every other signature names an associahedron facet")
        })
        .collect();
    Colouring::new(facets, colours)
}

/// `PA_n` as a [`FacetSystem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PermAssoc {
    n: usize,
}

impl PermAssoc {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_PA_N {
            return Err(Error::capacity(
                "permutoassociahedron dimension",
                MAX_PA_N,
                n,
            ));
        }
        Ok(PermAssoc { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl FacetSystem for PermAssoc {
    type Facet = PaFacet;

    fn facets(&self) -> Result<Vec<PaFacet>> {
        pa_facets(self.n)
    }

    fn conflicts(&self, a: &PaFacet, b: &PaFacet) -> bool {
        pa_conflicts(a, b)
    }

    fn check_facet(&self, facet: &PaFacet) -> Result<()> {
        if facet.n() != self.n {
            return Err(Error::domain(format!(
                "{facet} is not a facet of the {}",
                self.label()
            )));
        }
        PaFacet::new(self.n, facet.sets()).map(|_| ())
    }

    fn facet_count(&self) -> Result<u128> {
        Ok(pa_facet_count(self.n))
    }

    fn label(&self) -> String {
        format!("{}-dimensional simple permutoassociahedron", self.n)
    }
}
