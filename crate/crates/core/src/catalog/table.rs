use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::branching::Signature;
use crate::fundgroup::AbelianInvariants;
use crate::permgroup::GroupLabel;

/// The classification table as printed; one row per line,
/// `row | group | id | T1 | T2 | parity | D | H1`.
pub const TABLE_TEXT: &str = "\
1  | A5     | <60,5>  | [2,5,5]     | [3,3,3,3]     | odd  | 1 | (Z3)^2 x Z15
2  | A5     | <60,5>  | [5,5,5]     | [2,2,2,3]     | ?    | 1 | (Z10)^2
3  | A5     | <60,5>  | [3,3,5]     | [2,2,2,2,2]   | ?    | 2 | (Z2)^3 x Z6
4  | S4xZ2  | <48,48> | [2,4,6]     | [2,2,2,2,2,2] | ?    | 3 | (Z2)^4 x Z4
5  | G(32)  | <32,27> | [2,2,4,4]   | [2,2,2,4]     | ?    | 2 | (Z2)^2 x Z4 x Z8
6  | (Z5)^2 | <25,2>  | [5,5,5]     | [5,5,5]       | even | 0 | (Z5)^3
7  | S4     | <24,12> | [3,4,4]     | [2,2,2,2,2,2] | even | 3 | (Z2)^4 x Z8
8  | G(16)  | <16,3>  | [2,2,4,4]   | [2,2,4,4]     | even | 2 | (Z2)^2 x Z4 x Z8
9  | D4xZ2  | <16,11> | [2,2,2,4]   | [2,2,2,2,2,2] | ?    | 4 | (Z2)^3 x (Z4)^2
10 | (Z2)^4 | <16,14> | [2,2,2,2,2] | [2,2,2,2,2]   | even | 4 | (Z4)^4
11 | (Z3)^2 | <9,2>   | [3,3,3,3]   | [3,3,3,3]     | even | 2 | (Z3)^5
12 | (Z2)^3 | <8,5>   | [2,2,2,2,2] | [2,2,2,2,2,2] | ?    | 5 | (Z2)^4 x (Z4)^2
";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityAnnotation {
    Even,
    Odd,
    Unknown,
}

impl ParityAnnotation {
    fn token(self) -> &'static str {
        match self {
            ParityAnnotation::Even => "even",
            ParityAnnotation::Odd => "odd",
            ParityAnnotation::Unknown => "?",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub index: usize,
    pub group: GroupLabel,
    /// Small-groups identifier, documentation only.
    pub group_id: (u32, u32),
    pub sig1: Signature,
    pub sig2: Signature,
    pub parity_annotation: ParityAnnotation,
    pub d_expected: usize,
    /// Printed form of `H1(S, Z)`.
    pub h1_printed: String,
    pub h1_expected: AbelianInvariants,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("table line {line}: {message}")]
pub struct TableParseError {
    pub line: usize,
    pub message: String,
}

fn group_column(label: &GroupLabel) -> String {
    match label {
        GroupLabel::Abelian(orders) if !orders.is_empty() && orders.iter().all(|&o| o == orders[0]) => format!("(Z{})^{}", orders[0], orders.len()),
        other => other.to_string(),
    }
}

impl fmt::Display for FamilyRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | <{},{}> | {} | {} | {} | {} | {}",
            self.index,
            group_column(&self.group),
            self.group_id.0,
            self.group_id.1,
            self.sig1,
            self.sig2,
            self.parity_annotation.token(),
            self.d_expected,
            self.h1_printed
        )
    }
}

fn parse_row(line: usize, text: &str) -> Result<FamilyRow, TableParseError> {
    let err = |message: String| TableParseError { line, message };
    let cols: Vec<&str> = text.split('|').map(str::trim).collect();
    let [index, group, id, t1, t2, parity, d, h1] = cols.as_slice() else {
        return Err(err(format!("expected 8 columns, found {}", cols.len())));
    };
    let group_id = id
        .strip_prefix('<')
        .and_then(|s| s.strip_suffix('>'))
        .and_then(|s| s.split_once(','))
        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
        .ok_or_else(|| err(format!("bad group id '{id}'")))?;
    let parity_annotation = match *parity {
        "even" => ParityAnnotation::Even,
        "odd" => ParityAnnotation::Odd,
        "?" => ParityAnnotation::Unknown,
        other => return Err(err(format!("bad parity '{other}'"))),
    };
    Ok(FamilyRow {
        index: index.parse().map_err(|_| err(format!("bad row index '{index}'")))?,
        group: group.parse().map_err(|e| err(format!("{e}")))?,
        group_id,
        sig1: t1.parse().map_err(|e| err(format!("{e}")))?,
        sig2: t2.parse().map_err(|e| err(format!("{e}")))?,
        parity_annotation,
        d_expected: d.parse().map_err(|_| err(format!("bad D '{d}'")))?,
        h1_printed: h1.to_string(),
        h1_expected: h1.parse().map_err(|e| err(format!("{e}")))?,
    })
}

pub fn parse_table(text: &str) -> Result<Vec<FamilyRow>, TableParseError> {
    text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#')).map(|(i, l)| parse_row(i + 1, l)).collect()
}

pub fn serialize_table(rows: &[FamilyRow]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}

/// The twelve rows of the embedded table.
pub fn load_table() -> Vec<FamilyRow> {
    parse_table(TABLE_TEXT).expect("embedded table parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_as_printed() {
        let rows = load_table();
        assert_eq!(rows.len(), 12);
        let r1 = &rows[0];
        assert_eq!((r1.group.clone(), r1.group_id, r1.d_expected), (GroupLabel::A5, (60, 5), 1));
        assert_eq!(r1.h1_expected.torsion, vec![3, 3, 15]);
        assert_eq!(r1.parity_annotation, ParityAnnotation::Odd);
        let r4 = &rows[3];
        assert_eq!(r4.group, GroupLabel::S4xZ2);
        assert_eq!(r4.sig2.given(), &[2; 6]);
        assert_eq!(r4.parity_annotation, ParityAnnotation::Unknown);
        assert_eq!(r4.h1_expected.torsion, vec![2, 2, 2, 2, 4]);
        assert_eq!(rows[4].h1_expected.torsion, vec![2, 2, 4, 8]);
        assert_eq!(rows[9].h1_expected.torsion, vec![4, 4, 4, 4]);
    }

    #[test]
    fn moduli_dimension_column() {
        for r in load_table() {
            assert_eq!(r.sig1.len() - 3 + r.sig2.len() - 3, r.d_expected, "row {}", r.index);
        }
    }

    #[test]
    fn round_trip() {
        let rows = load_table();
        let text = serialize_table(&rows);
        assert_eq!(parse_table(&text).unwrap(), rows);
        assert!(parse_table("1 | A5 | <60,5> | [2,5,5]").is_err());
    }
}
