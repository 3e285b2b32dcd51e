//! Branching data of G-covers of the line: signatures, generating vectors,
//! Riemann–Hurwitz, freeness of the diagonal action and surface invariants.

mod descriptor;
mod genvec;
mod invariants;
mod search;
mod signature;

pub use descriptor::{DescriptorError, PairDescriptor};
pub use genvec::{
    is_free_unmixed, stabilizer_elements, stabilizer_mask, verify_generating_indices, verify_generating_vector, FreenessCertificate, GenVector,
    GenVectorError, UnmixedPair,
};
pub use invariants::{genus_from_signature, sheet_count_genus, surface_invariants, InvariantError, SurfaceInvariants};
pub use search::{enumerate_generating_vectors, find_free_pair};
pub use signature::{Signature, SignatureError};
