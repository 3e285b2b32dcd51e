//! Witness pairs for rows 2–12, cached in `data/witnesses.txt`.
//!
//! The cache is produced by [`emit_witness_file`] (first free pair of the
//! canonical search) and is re-certified on every use.

use std::sync::Arc;

use super::table::FamilyRow;
use crate::branching::{find_free_pair, PairDescriptor, UnmixedPair};
use crate::permgroup::Group;

pub const WITNESS_TEXT: &str = include_str!("../../data/witnesses.txt");

const HEADER: &str = "\
# Witness generating vectors for rows 2-12 of the classification table.
# provenance: engine-derived (first free pair in canonical depth-first search order),
# not transcribed from any publication. Regenerate with
#   cargo run --release --example emit_witnesses > data/witnesses.txt
";

/// Cached descriptor for `row`, if present and well-formed.
pub fn cached_witness(row: usize) -> Option<PairDescriptor> {
    witness_blocks(WITNESS_TEXT).into_iter().find(|(r, _)| *r == row).and_then(|(_, text)| PairDescriptor::parse(&text).ok())
}

/// `(row, descriptor text)` for every `[row N]` block.
pub fn witness_blocks(text: &str) -> Vec<(usize, String)> {
    let mut out: Vec<(usize, String)> = Vec::new();
    for line in text.lines() {
        let t = line.trim();
        if let Some(n) = t.strip_prefix("[row ").and_then(|s| s.strip_suffix(']')).and_then(|s| s.trim().parse().ok()) {
            out.push((n, String::new()));
        } else if let Some((_, body)) = out.last_mut() {
            body.push_str(line);
            body.push('\n');
        }
    }
    out
}

/// Fresh search for a free pair of the row's signatures.
pub fn search_witness(row: &FamilyRow, group: &Arc<Group>) -> Option<UnmixedPair> {
    find_free_pair(group, &row.sig1, &row.sig2)
}

/// Renders the cache file from the given `(row, pair)` list.
pub fn render_witness_file(rows: &[(FamilyRow, UnmixedPair)]) -> String {
    let mut out = HEADER.to_string();
    for (row, pair) in rows {
        out.push_str(&format!("\n[row {}]\n{}", row.index, PairDescriptor::from_pair(&row.group, pair)));
    }
    out
}

/// Searches every row except the first and renders the cache file; rows
/// whose group cannot be built are omitted.
pub fn emit_witness_file() -> String {
    let mut found = Vec::new();
    for row in super::load_table().into_iter().skip(1) {
        let Ok(group) = crate::permgroup::construct_group(&row.group) else { continue };
        if let Some(pair) = search_witness(&row, &Arc::new(group)) {
            found.push((row, pair));
        }
    }
    render_witness_file(&found)
}
