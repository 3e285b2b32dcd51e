use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::main_theorem::main_descriptor;
use super::table::{load_table, FamilyRow, ParityAnnotation};
use super::witnesses::{cached_witness, search_witness};
use super::CatalogError;
use crate::branching::{is_free_unmixed, PairDescriptor, UnmixedPair};
use crate::fundgroup::h1_surface;
use crate::parity::{parity_verdict, ParityVerdict, Verdict};
use crate::permgroup::{construct_group, GroupError, GroupLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessSource {
    Paper,
    Cache,
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowMatches {
    pub free: bool,
    pub d: bool,
    pub h1: bool,
    /// Computed Even only where printed even, Odd only where printed odd.
    pub parity_consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub row: usize,
    pub group: String,
    pub sig1: String,
    pub sig2: String,
    pub witness_source: Option<WitnessSource>,
    pub gv1: Option<String>,
    pub gv2: Option<String>,
    pub d_expected: usize,
    pub d_computed: Option<usize>,
    pub h1_expected: String,
    pub h1_computed: Option<String>,
    pub parity_annotation: ParityAnnotation,
    pub parity: Option<ParityVerdict>,
    pub matches: RowMatches,
    pub skipped: Option<String>,
}

impl RowReport {
    pub fn all_match(&self) -> bool {
        let m = &self.matches;
        self.skipped.is_none() && m.free && m.d && m.h1 && m.parity_consistent
    }
}

fn annotation_text(a: ParityAnnotation) -> Option<&'static str> {
    match a {
        ParityAnnotation::Even => Some("even"),
        ParityAnnotation::Odd => Some("odd"),
        ParityAnnotation::Unknown => None,
    }
}

/// Whether a computed verdict is compatible with a printed annotation.
pub fn parity_consistent(verdict: Verdict, annotation: ParityAnnotation) -> bool {
    match verdict {
        Verdict::Even => annotation == ParityAnnotation::Even,
        Verdict::Odd => annotation == ParityAnnotation::Odd,
        Verdict::Undetermined => true,
    }
}

fn witness(row: &FamilyRow, group: &Arc<crate::permgroup::Group>) -> Option<(WitnessSource, UnmixedPair)> {
    let certified = |d: PairDescriptor| d.certify_in(group).ok().filter(|p| is_free_unmixed(p).free && p.gv1.signature() == &row.sig1 && p.gv2.signature() == &row.sig2);
    if row.index == 1 {
        if let Some(p) = main_descriptor().ok().and_then(certified) {
            return Some((WitnessSource::Paper, p));
        }
    }
    if let Some(p) = cached_witness(row.index).filter(|d| d.group == row.group).and_then(certified) {
        return Some((WitnessSource::Cache, p));
    }
    search_witness(row, group).map(|p| (WitnessSource::Search, p))
}

/// Reproduces row `k` (1-based) of the table.
pub fn reproduce_row(k: usize) -> Result<RowReport, CatalogError> {
    let rows = load_table();
    let row = rows.get(k.wrapping_sub(1)).ok_or(CatalogError::NoSuchRow(k))?;
    let mut report = RowReport {
        row: k,
        group: row.group.to_string(),
        sig1: row.sig1.to_string(),
        sig2: row.sig2.to_string(),
        witness_source: None,
        gv1: None,
        gv2: None,
        d_expected: row.d_expected,
        d_computed: None,
        h1_expected: row.h1_expected.to_string(),
        h1_computed: None,
        parity_annotation: row.parity_annotation,
        parity: None,
        matches: RowMatches { free: false, d: false, h1: false, parity_consistent: false },
        skipped: None,
    };
    let group = match construct_group(&row.group) {
        Ok(g) => Arc::new(g),
        Err(e @ GroupError::Fingerprint { .. }) if matches!(row.group, GroupLabel::G32 | GroupLabel::G16) => {
            report.skipped = Some(format!("embedded presentation failed validation: {e}"));
            return Ok(report);
        }
        Err(e) => return Err(e.into()),
    };
    let Some((source, pair)) = witness(row, &group) else {
        return Ok(report);
    };
    report.witness_source = Some(source);
    report.gv1 = Some(pair.gv1.to_cycle_string());
    report.gv2 = Some(pair.gv2.to_cycle_string());
    report.matches.free = true;
    let d = pair.gv1.signature().moduli_contribution() + pair.gv2.signature().moduli_contribution();
    report.d_computed = Some(d);
    report.matches.d = d == row.d_expected;
    let h1 = h1_surface(&pair)?;
    report.h1_computed = Some(h1.to_string());
    report.matches.h1 = h1 == row.h1_expected;
    let verdict = parity_verdict(&pair, &h1, annotation_text(row.parity_annotation));
    report.matches.parity_consistent = parity_consistent(verdict.verdict, row.parity_annotation);
    report.parity = Some(verdict);
    Ok(report)
}

impl fmt::Display for RowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "MISMATCH" };
        writeln!(f, "row {}: {} {} {}", self.row, self.group, self.sig1, self.sig2)?;
        if let Some(reason) = &self.skipped {
            return writeln!(f, "  SKIPPED: {reason}");
        }
        match (&self.gv1, &self.gv2, self.witness_source) {
            (Some(a), Some(b), Some(src)) => writeln!(f, "  witness ({}): {a} | {b}", format!("{src:?}").to_lowercase())?,
            _ => return writeln!(f, "  no free pair found"),
        }
        writeln!(f, "  D  = {} (printed {}) {}", self.d_computed.unwrap_or(0), self.d_expected, mark(self.matches.d))?;
        writeln!(f, "  H1 = {} (printed {}) {}", self.h1_computed.as_deref().unwrap_or("-"), self.h1_expected, mark(self.matches.h1))?;
        let verdict = self.parity.as_ref().map_or(Verdict::Undetermined, |p| p.verdict);
        let printed = annotation_text(self.parity_annotation).unwrap_or("open");
        let computed = match verdict {
            Verdict::Undetermined => "undetermined by computation".to_string(),
            v => format!("computed {}", v.to_string().to_lowercase()),
        };
        writeln!(f, "  parity: {computed}; published: {printed} {}", mark(self.matches.parity_consistent))
    }
}
