//! Proper facet colourings: the container type, validation against a
//! [`FacetSystem`], and the constructive colourings of each family.

mod assoc;
mod cyclo;
mod sequences;
mod stello;

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::{Facet, FamilyTag};
use crate::system::FacetSystem;

pub use assoc::assoc_colouring;
pub use cyclo::{
    cyclo_colour_count, cyclo_colouring, cyclo_improve, cyclo_improve_with_budget,
    extended_classes, ExtendedClass,
};
pub use sequences::{
    alpha, alpha_bounds, alpha_bounds_with, assoc_sequences, cyclo_sequences, delta,
    gamma_interval, gamma_upper, sigma_bounds, stello_colour_count, HarmonicTable, SequencePair,
    SequenceVariant,
};
pub use stello::{stello_colouring, stello_h, HValue, StelloH};

/// Which half of a facet row an item came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    Left,
    Right,
}

/// Position of a facet in the row layout a colouring was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    /// Row label `i` (rows start at 2).
    pub row: usize,
    pub block: Block,
    /// Index within the row, counting across both blocks.
    pub position: usize,
}

/// A total assignment of colours `1..=m` to facets, with no unused colour.
#[derive(Clone, Debug)]
pub struct Colouring<F> {
    facets: Vec<F>,
    colours: Vec<u32>,
    count: u32,
    index: HashMap<F, usize>,
    placements: Option<Vec<Placement>>,
}

impl<F: Clone + Eq + Hash> Colouring<F> {
    /// Builds a colouring from parallel facet/colour lists. Colours must be
    /// positive; they are renumbered to `1..=m` keeping their order.
    pub fn new(facets: Vec<F>, colours: Vec<u32>) -> Result<Self> {
        if facets.len() != colours.len() {
            return Err(Error::domain(format!(
                "{} facets but {} colours",
                facets.len(),
                colours.len()
            )));
        }
        if colours.contains(&0) {
            return Err(Error::domain("colours are 1-based"));
        }
        let mut index = HashMap::with_capacity(facets.len());
        for (i, f) in facets.iter().enumerate() {
            if index.insert(f.clone(), i).is_some() {
                return Err(Error::domain("a facet is listed twice"));
            }
        }
        let mut used: Vec<u32> = colours.clone();
        used.sort_unstable();
        used.dedup();
        let rename: HashMap<u32, u32> = used
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32 + 1))
            .collect();
        let colours = colours.iter().map(|c| rename[c]).collect();
        Ok(Colouring {
            facets,
            colours,
            count: used.len() as u32,
            index,
            placements: None,
        })
    }

    pub(crate) fn with_placements(mut self, placements: Vec<Placement>) -> Self {
        debug_assert_eq!(placements.len(), self.facets.len());
        self.placements = Some(placements);
        self
    }

    /// Number of colours `m`.
    pub fn colour_count(&self) -> u32 {
        self.count
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> &[F] {
        &self.facets
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn colour_of(&self, facet: &F) -> Option<u32> {
        self.index.get(facet).map(|&i| self.colours[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&F, u32)> {
        self.facets.iter().zip(self.colours.iter().copied())
    }

    /// Facet indices grouped by colour; entry `c − 1` holds colour `c`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.count as usize];
        for (i, &c) in self.colours.iter().enumerate() {
            classes[c as usize - 1].push(i);
        }
        classes
    }

    /// Row layout of each facet, for colourings built by row packing.
    pub fn placements(&self) -> Option<&[Placement]> {
        self.placements.as_deref()
    }

    /// Same partition into colour classes (ignoring colour names).
    pub fn same_partition(&self, other: &Colouring<F>) -> bool {
        if self.len() != other.len() || self.count != other.count {
            return false;
        }
        let mut pairing: HashMap<u32, u32> = HashMap::new();
        self.iter().all(|(f, c)| match other.colour_of(f) {
            Some(d) => *pairing.entry(c).or_insert(d) == d,
            None => false,
        }) && pairing.values().collect::<HashSet<_>>().len() == pairing.len()
    }
}

fn check_total<S: FacetSystem>(colouring: &Colouring<S::Facet>, system: &S) -> Result<()> {
    for f in colouring.facets() {
        system.check_facet(f)?;
    }
    let expected = system.facet_count()?;
    if colouring.len() as u128 != expected {
        return Err(Error::domain(format!(
            "colouring covers {} facets, the {} has {expected}",
            colouring.len(),
            system.label()
        )));
    }
    Ok(())
}

/// First same-coloured pair of facets that share a vertex, if any.
///
/// Errors when the colouring is not total on the system's facets.
pub fn find_violation<S: FacetSystem>(
    colouring: &Colouring<S::Facet>,
    system: &S,
) -> Result<Option<(S::Facet, S::Facet)>> {
    check_total(colouring, system)?;
    let facets = colouring.facets();
    for class in colouring.classes() {
        for (k, &i) in class.iter().enumerate() {
            for &j in &class[k + 1..] {
                if system.conflicts(&facets[i], &facets[j]) {
                    return Ok(Some((facets[i].clone(), facets[j].clone())));
                }
            }
        }
    }
    Ok(None)
}

/// True iff every two facets of the same colour are separated.
pub fn validate<S: FacetSystem>(colouring: &Colouring<S::Facet>, system: &S) -> Result<bool> {
    Ok(find_violation(colouring, system)?.is_none())
}

/// Checks `samples` random same-coloured pairs instead of all of them.
pub fn validate_sampled<S: FacetSystem>(
    colouring: &Colouring<S::Facet>,
    system: &S,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    check_total(colouring, system)?;
    let classes = colouring.classes();
    let facets = colouring.facets();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let i = rng.gen_range(0..facets.len());
        let class = &classes[colouring.colours()[i] as usize - 1];
        if class.len() < 2 {
            continue;
        }
        let j = class[rng.gen_range(0..class.len())];
        if i != j && system.conflicts(&facets[i], &facets[j]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Class-size cap for associahedron colourings: a class containing a facet
/// of cardinality `κ` has at most `min{κ + 1, n − κ + 2}` members.
pub fn class_cap_check(colouring: &Colouring<Facet>, n: usize) -> bool {
    let facets = colouring.facets();
    colouring.classes().iter().all(|class| {
        class.iter().all(|&i| {
            let kappa = match facets[i] {
                Facet::Segment(s) => s.len(n),
                Facet::Set(s) => s.len(),
            };
            class.len() <= (kappa + 1).min(n + 2 - kappa)
        })
    })
}

/// The permutohedron colouring by cardinality, `f(X) = |X|`.
pub fn permuto_colouring(n: usize) -> Result<Colouring<Facet>> {
    let tag = FamilyTag::permutohedron(n)?;
    let facets = tag.facets()?;
    let colours = facets
        .iter()
        .map(|f| f.as_set().map_or(0, |s| s.len() as u32))
        .collect();
    Colouring::new(facets, colours)
}
