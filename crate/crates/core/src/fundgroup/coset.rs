use thiserror::Error;

use super::presentation::FpGroup;
use crate::permgroup::Group;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetTableError {
    #[error("table has {got} columns, presentation needs {expected}")]
    Shape { expected: usize, got: usize },
    #[error("entry out of range at coset {coset}, column {column}")]
    OutOfRange { coset: usize, column: usize },
    #[error("generator {generator} and its inverse are not mutually inverse at coset {coset}")]
    Incompatible { coset: usize, generator: usize },
    #[error("relator {relator} does not close at coset {coset}")]
    Trace { relator: usize, coset: usize },
}

/// A complete coset table: column `2g` is generator `g`, column `2g+1` its
/// inverse. Coset 0 is the subgroup itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    rows: Vec<Vec<usize>>,
}

impl CosetTable {
    /// Builds the table from the permutations `c ↦ c·g` of each generator.
    pub fn from_actions(actions: &[Vec<usize>]) -> Self {
        let n = actions.first().map_or(1, Vec::len);
        let mut rows = vec![vec![0usize; 2 * actions.len()]; n];
        for (g, act) in actions.iter().enumerate() {
            for (c, &d) in act.iter().enumerate() {
                rows[c][2 * g] = d;
                rows[d][2 * g + 1] = c;
            }
        }
        CosetTable { rows }
    }

    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_count(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len() / 2)
    }

    /// Image of coset `c` under a letter (`+(g+1)` or `-(g+1)`).
    #[inline]
    pub fn act(&self, c: usize, letter: i32) -> usize {
        let g = (letter.unsigned_abs() - 1) as usize;
        self.rows[c][if letter > 0 { 2 * g } else { 2 * g + 1 }]
    }

    pub fn trace(&self, c: usize, word: &[i32]) -> usize {
        word.iter().fold(c, |x, &l| self.act(x, l))
    }

    /// Completeness, compatibility and relator closure at every coset.
    pub fn validate(&self, fp: &FpGroup) -> Result<(), CosetTableError> {
        let ngens = fp.generator_count();
        for row in &self.rows {
            if row.len() != 2 * ngens {
                return Err(CosetTableError::Shape { expected: 2 * ngens, got: row.len() });
            }
        }
        let n = self.index();
        for (c, row) in self.rows.iter().enumerate() {
            for (column, &d) in row.iter().enumerate() {
                if d >= n {
                    return Err(CosetTableError::OutOfRange { coset: c, column });
                }
            }
            for g in 0..ngens {
                if self.rows[row[2 * g]][2 * g + 1] != c || self.rows[row[2 * g + 1]][2 * g] != c {
                    return Err(CosetTableError::Incompatible { coset: c, generator: g });
                }
            }
        }
        for (k, r) in fp.relators.iter().enumerate() {
            for c in 0..n {
                if self.trace(c, r) != c {
                    return Err(CosetTableError::Trace { relator: k, coset: c });
                }
            }
        }
        Ok(())
    }
}

/// Coset table of the fiber product `{(x, y) : φ1(x) = φ2(y)}` in `T1 × T2`.
/// Cosets are group elements (identity first); `x_i` sends `g` to
/// `v_i^{-1}·g` and `y_j` sends `g` to `g·w_j`.
pub fn fiber_coset_table_raw(group: &Group, v: &[usize], w: &[usize]) -> CosetTable {
    let n = group.order();
    let mut actions: Vec<Vec<usize>> = Vec::new();
    for &vi in v {
        let inv = group.inv(vi);
        actions.push((0..n).map(|g| group.mul(inv, g)).collect());
    }
    for &wj in w {
        actions.push((0..n).map(|g| group.mul(g, wj)).collect());
    }
    CosetTable::from_actions(&actions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fundgroup::presentation::product_presentation;
    use crate::permgroup::{group_closure, Perm};

    #[test]
    fn trivial_group_has_one_coset() {
        let g = group_closure(&[Perm::identity(2)], 10).unwrap();
        let t = fiber_coset_table_raw(&g, &[0, 0, 0], &[0, 0, 0]);
        assert_eq!(t.index(), 1);
        let fp = product_presentation(&[2, 2, 2], &[3, 3, 3]).unwrap();
        t.validate(&fp).unwrap();
    }

    #[test]
    fn detects_incompatible_tables() {
        let t = CosetTable { rows: vec![vec![1, 0], vec![1, 1]] };
        let fp = FpGroup::new(vec!["a".into()], vec![]);
        assert!(matches!(t.validate(&fp), Err(CosetTableError::Incompatible { .. })));
    }
}
