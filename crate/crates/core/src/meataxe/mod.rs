//! Irreducibility testing, chopping, hom spaces and endomorphism rings.

mod chop;
mod endo;
mod hom;
mod irreducible;
mod isotypic;
mod spin;

pub use chop::{
    chop, composition_factors, distinct_factors, quotient_action, subspace_action, Chop,
};
pub use endo::{end_ring, recognize_field_extension, EndRing, FieldRecognition, NotFieldWitness};
pub use hom::{
    hom_basis, hom_basis_all_elements, hom_basis_reps, is_isomorphic, is_isomorphic_reps, HomBasis,
};
pub use irreducible::{is_irreducible, Irreducibility, RANDOM_TRIES};
pub use isotypic::{isotypic_decomposition, IsotypicComponent, IsotypicDecomposition};
pub use spin::{spin, spin_basis, spin_transposed};

use crate::groupcore::GroupError;
use crate::repmod::RepError;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum MeataxeError {
    #[error("zero-dimensional module")]
    ZeroDimension,
    #[error("cannot spin the zero vector")]
    ZeroSeed,
    #[error("irreducibility undecided after the deterministic budget")]
    Undecided,
    #[error("restriction is not semisimple: socle has dimension {socle} of {dim}")]
    NotSemisimple { socle: usize, dim: usize },
    #[error("modules are over different fields or have different generator counts")]
    Incompatible,
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("{0}")]
    Rep(#[from] RepError),
}
