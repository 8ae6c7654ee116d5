use std::fmt;
use std::hash::Hash;

use crate::error::Result;

/// A polytope presented by its facet labels and the "share a vertex"
/// relation between them.
pub trait FacetSystem {
    type Facet: Clone + Eq + Hash + fmt::Display + fmt::Debug;

    /// All facets in canonical order.
    fn facets(&self) -> Result<Vec<Self::Facet>>;

    /// True iff `a` and `b` share a vertex. Both must have passed
    /// [`FacetSystem::check_facet`]; a facet conflicts with itself.
    fn conflicts(&self, a: &Self::Facet, b: &Self::Facet) -> bool;

    fn check_facet(&self, facet: &Self::Facet) -> Result<()>;

    fn facet_count(&self) -> Result<u128> {
        Ok(self.facets()?.len() as u128)
    }

    fn label(&self) -> String;
}
