//! Verification engine for surfaces isogenous to a product of unmixed type
//! with `p_g = q = 0`.
//!
//! The crate re-derives every finite computation behind the existence of odd
//! fake Q-homology quadrics: Hurwitz generating vectors, genera and
//! numerical invariants, freeness of the diagonal action, `H1(S, Z)` through
//! the fiber-product fundamental group, the canonical class in the basis of
//! reduced fibres, and the character-theoretic checks around the genus-4
//! curve with `A5` symmetry.

pub mod branching;
pub mod catalog;
pub mod chartab;
pub mod cli;
pub mod fundgroup;
pub mod parity;
pub mod permgroup;
