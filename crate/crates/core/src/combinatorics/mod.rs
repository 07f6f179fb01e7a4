//! Signatures, Young diagrams, Frobenius coordinates, the embedding into `Ω`,
//! and the particles/holes involution on `X⁽ᴺ⁾`. All arithmetic here is exact.

mod halfint;
mod lattice;
mod omega;
mod signature;

pub use halfint::HalfInt;
pub use lattice::{
    check_lemma71, check_scaling_consistency, frobenius_image, inner_outer_split, invert_particle_hole,
    involution_set, lattice_to_signature, on_lattice, particle_hole_involution, scaled_involution,
    signature_to_lattice, LatticeConfig, LatticeSplit,
};
pub use omega::{embed_iota, omega_to_configuration, Configuration, OmegaPoint};
pub use signature::{frobenius, split_signature, FrobeniusCoords, Signature, YoungDiagram};
