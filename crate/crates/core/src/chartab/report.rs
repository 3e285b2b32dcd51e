use std::fmt::{self, Write as _};

use serde::Serialize;

use super::CharTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassHeader {
    pub element_order: usize,
    pub size: usize,
}

/// Printable form of a table: exact values as polynomials in `z = ζ_e`,
/// plus a rounded decimal rendering for reading only.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharTableReport {
    pub group: String,
    pub order: usize,
    pub exponent: usize,
    pub prime: u64,
    pub classes: Vec<ClassHeader>,
    pub characters: Vec<Vec<String>>,
    pub approx: Vec<Vec<String>>,
}

fn approx(re: f64, im: f64) -> String {
    let clean = |x: f64| if x.abs() < 5e-7 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        format!("{re:.4}")
    } else {
        format!("{re:.4}{}{:.4}i", if im < 0.0 { "-" } else { "+" }, im.abs())
    }
}

impl CharTableReport {
    pub fn new(t: &CharTable) -> Self {
        let f = t.field();
        let cls = t.classes();
        CharTableReport {
            group: t.label().to_string(),
            order: t.group_order(),
            exponent: f.order(),
            prime: t.prime(),
            classes: (0..cls.len()).map(|c| ClassHeader { element_order: cls.element_order(c), size: cls.size(c) }).collect(),
            characters: t.irreducibles().iter().map(|chi| chi.values().iter().map(|v| f.format(v)).collect()).collect(),
            approx: t
                .irreducibles()
                .iter()
                .map(|chi| {
                    chi.values()
                        .iter()
                        .map(|v| {
                            let (re, im) = f.to_complex(v);
                            approx(re, im)
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl fmt::Display for CharTableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "character table of {} (order {}, z = exp(2πi/{}), computed mod {})", self.group, self.order, self.exponent, self.prime)?;
        let cells: Vec<Vec<String>> = std::iter::once(self.classes.iter().map(|c| format!("{}/{}", c.element_order, c.size)).collect())
            .chain(self.characters.iter().cloned())
            .collect();
        let widths: Vec<usize> = (0..self.classes.len()).map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0)).collect();
        for (i, row) in cells.iter().enumerate() {
            let mut line = if i == 0 { "ord/size".to_string() } else { format!("X.{i}") };
            while line.chars().count() < 9 {
                line.push(' ');
            }
            for (c, cell) in row.iter().enumerate() {
                let _ = write!(line, " {cell:>w$}", w = widths[c]);
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        if self.approx != self.characters {
            writeln!(f, "approximate values:")?;
            for (i, row) in self.approx.iter().enumerate() {
                writeln!(f, "X.{} {}", i + 1, row.join("  "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::chartab::character_table;
    use crate::permgroup::{construct_group, GroupLabel};

    #[test]
    fn a5_report_is_stable() {
        let t = character_table(&construct_group(&GroupLabel::A5).unwrap()).unwrap();
        let text = t.report().to_string();
        assert!(text.starts_with("character table of A5 (order 60, z = exp(2πi/30), computed mod 151)"));
        let heads: Vec<(usize, usize)> = t.report().classes.iter().map(|c| (c.element_order, c.size)).collect();
        assert_eq!(heads, vec![(1, 1), (2, 15), (3, 20), (5, 12), (5, 12)]);
        assert!(text.lines().nth(1).unwrap().starts_with("ord/size"));
        assert!(text.contains("approximate values:"));
        assert_eq!(text, t.report().to_string());
    }
}
