//! Facet conflict structures and chromatic numbers of permutohedra,
//! associahedra, cyclohedra, stellohedra and simple permutoassociahedra.
//!
//! Two facets of a simple polytope conflict when they share a vertex; a
//! proper colouring gives conflicting facets different colours. For
//! nestohedra the facets are the proper members of a building set, and two
//! of them are separated (share no vertex) exactly when they are
//! incomparable and their union is again in the building set.
//!
//! ```
//! use nestochroma::{alpha, assoc_colouring, validate, FamilyTag};
//!
//! let tag = FamilyTag::associahedron(5)?;
//! let colouring = assoc_colouring(5)?;
//! assert_eq!(colouring.colour_count() as u64, alpha(5));
//! assert!(validate(&colouring, &tag)?);
//! # Ok::<(), nestochroma::Error>(())
//! ```

pub mod chroma;
pub mod colourings;
mod error;
pub mod families;
pub mod nested;
pub mod packing;
pub mod permassoc;
mod system;

pub use chroma::{
    brute_chromatic, clique_lower_bound, dsatur, exact_chromatic, max_clique, ChromaResult,
    ConflictGraph,
};
pub use colourings::{
    alpha, alpha_bounds, assoc_colouring, assoc_sequences, class_cap_check, cyclo_colouring,
    cyclo_improve, cyclo_improve_with_budget, cyclo_sequences, delta, find_violation,
    gamma_interval, gamma_upper, permuto_colouring, sigma_bounds, stello_colouring, stello_h,
    validate, validate_sampled, Colouring,
};
pub use error::{Error, Result};
pub use families::{Facet, Family, FamilyTag, Segment};
pub use nested::{is_nested, is_separated, BuildingSet, NestedSetCandidate, SimpleGraph, Subset};
pub use packing::{pack_optimal, pack_star, Packing, PackingInstance};
pub use permassoc::{pa_colouring, pa_conflicts, pa_facets, pa_signature, PaFacet, PermAssoc};
pub use system::FacetSystem;

// The guide's code listings run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/nested-sets.md")]
    mod nested_sets {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/colourings.md")]
    mod colourings {}
    #[doc = include_str!("../../../book/src/packing.md")]
    mod packing {}
    #[doc = include_str!("../../../book/src/permutoassociahedron.md")]
    mod permutoassociahedron {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
