//! Representation theory of the Weyl groups acting on torus homology:
//! characters, padded labels, multiplicity tables and their stability,
//! invariant dimensions, branching, and symmetric products.

mod branching;
mod characters;
mod labels;
mod multiplicity;
mod symprod;

pub use branching::induced_branching;
pub use characters::{
    character_hyperoctahedral, character_symmetric, hook_length_dimension,
    hyperoctahedral_dimension,
};
pub use labels::{padded_partition, seed_of, Label};
pub use multiplicity::{
    graded_character, invariant_dimension, multiplicity_table, multiplicity_table_with, uniform_stability_check,
    MultiplicityKey, MultiplicityTable, UniformStabilityReport,
};
pub use symprod::symmetric_product_series;
