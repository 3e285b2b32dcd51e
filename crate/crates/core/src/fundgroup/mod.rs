//! Finitely presented groups and the first homology of `(C1 × C2)/G`:
//! polygonal presentations, the fiber-product coset table,
//! Reidemeister–Schreier rewriting and Smith normal form.

mod abelian;
mod coset;
mod presentation;
mod schreier;
mod smith;

use thiserror::Error;

pub use abelian::{AbelianInvariants, AbelianParseError};
pub use coset::{fiber_coset_table_raw, CosetTable, CosetTableError};
pub use presentation::{abelianization, free_reduce, invert_word, polygonal_presentation, product_presentation, FpGroup, PresentationError, Word};
pub use schreier::{reidemeister_schreier, SchreierPresentation};
pub use smith::{smith_normal_form, sparse_abelian_invariants, IntMatrix, SmithForm};

use crate::branching::{is_free_unmixed, UnmixedPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("diagonal action is not free")]
    NotFree,
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("internal consistency: {0}")]
    CosetTable(#[from] CosetTableError),
    #[error("H1 has free rank {0}; the family is not a Q-homology quadric")]
    PositiveRank(usize),
}

/// Presentation of `T1 × T2` together with the coset table of the fiber
/// product, validated against every relator.
pub fn fiber_coset_table(pair: &UnmixedPair) -> Result<(FpGroup, CosetTable), HomologyError> {
    if !is_free_unmixed(pair).free {
        return Err(HomologyError::NotFree);
    }
    let fp = product_presentation(pair.gv1.signature().given(), pair.gv2.signature().given())?;
    let table = fiber_coset_table_raw(pair.group(), pair.gv1.elements(), pair.gv2.elements());
    table.validate(&fp)?;
    Ok((fp, table))
}

/// Presentation of `π1(S)` as the fiber-product subgroup.
pub fn surface_group_presentation(pair: &UnmixedPair) -> Result<SchreierPresentation, HomologyError> {
    let (fp, table) = fiber_coset_table(pair)?;
    Ok(reidemeister_schreier(&fp, &table))
}

/// `H1(S, Z)` of the surface; an infinite group is reported as an error.
pub fn h1_surface(pair: &UnmixedPair) -> Result<AbelianInvariants, HomologyError> {
    let sp = surface_group_presentation(pair)?;
    let ab = abelianization(&sp.presentation);
    if ab.free_rank != 0 {
        return Err(HomologyError::PositiveRank(ab.free_rank));
    }
    Ok(ab)
}
