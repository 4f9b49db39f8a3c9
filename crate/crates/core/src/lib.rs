//! Finite groups, the space of affinely commuting elements `E(2, G)`, and the
//! integral homology and fundamental-group data attached to it.
//!
//! Groups are stored as multiplication tables over canonically ordered
//! elements. Simplicial models produce sparse integer chain complexes whose
//! homology is computed by Smith normal form.

pub mod catalog;
pub mod error;
pub mod group;
pub mod homology;
pub mod pi1;
pub mod simplicial;

pub use catalog::{catalog_group, CatalogEntry};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupElement, Permutation, Subgroup};
pub use homology::{homology, homology_all, HomologyGroup, IntMatrix};
pub use pi1::{pi1_presentation, pi1_trivial_certificate, Presentation, TrivialityCertificate, Verdict};
pub use simplicial::{Budget, ChainComplex, SimplexTuple};
