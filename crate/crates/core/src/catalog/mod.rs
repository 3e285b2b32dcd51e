//! The classification table, per-row reproduction, and the end-to-end
//! pipeline for the odd family.

mod main_theorem;
mod row;
mod table;
mod witnesses;

use thiserror::Error;

pub use main_theorem::{main_descriptor, verify_main_theorem, verify_main_with, MainInputs, MainReport, Stage, StageRecord, MAIN_PAIR};
pub use row::{parity_consistent, reproduce_row, RowMatches, RowReport, WitnessSource};
pub use table::{load_table, parse_table, serialize_table, FamilyRow, ParityAnnotation, TableParseError, TABLE_TEXT};
pub use witnesses::{cached_witness, emit_witness_file, render_witness_file, search_witness, witness_blocks, WITNESS_TEXT};

use crate::fundgroup::HomologyError;
use crate::permgroup::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no table row {0}; rows are numbered 1 to 12")]
    NoSuchRow(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// Looks up the printed parity of the row with this group and signature
/// pair (in either order).
pub fn published_parity(group: &crate::permgroup::GroupLabel, sig1: &crate::branching::Signature, sig2: &crate::branching::Signature) -> Option<ParityAnnotation> {
    load_table()
        .into_iter()
        .find(|r| &r.group == group && ((&r.sig1, &r.sig2) == (sig1, sig2) || (&r.sig1, &r.sig2) == (sig2, sig1)))
        .map(|r| r.parity_annotation)
}
