use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use super::abelian::AbelianInvariants;
use super::smith::sparse_abelian_invariants;
use crate::permgroup::Group;

/// A word is a sequence of letters `+(g+1)` (generator `g`) or `-(g+1)`
/// (its inverse).
pub type Word = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("signature needs at least 3 branch points, got {0}")]
    TooFewBranchPoints(usize),
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn invert_word(word: &[i32]) -> Word {
    word.iter().rev().map(|&l| -l).collect()
}

/// A finitely presented group with freely reduced relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpGroup {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl FpGroup {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        let relators = relators.iter().map(|r| free_reduce(r)).filter(|r| !r.is_empty()).collect();
        FpGroup { generators, relators }
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Presentation read off a BFS spanning tree of the right Cayley graph:
    /// one relator `t_x · s · t_{xs}^{-1}` per element and generator.
    pub fn from_cayley_graph(group: &Group) -> Self {
        let gens = group.generators();
        let n = group.order();
        let mut path: Vec<Option<Word>> = vec![None; n];
        path[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, &s) in gens.iter().enumerate() {
                let y = group.mul(x, s);
                if path[y].is_none() {
                    let mut w = path[x].clone().expect("visited");
                    w.push(k as i32 + 1);
                    path[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        let mut relators = Vec::new();
        for x in 0..n {
            for (k, &s) in gens.iter().enumerate() {
                let y = group.mul(x, s);
                let mut w = path[x].clone().expect("connected");
                w.push(k as i32 + 1);
                w.extend(invert_word(path[y].as_ref().expect("connected")));
                relators.push(w);
            }
        }
        let names = (0..gens.len()).map(|k| format!("g{}", k + 1)).collect();
        FpGroup::new(names, relators)
    }

    /// Parses `<x, y, z | x^2, y^5, z^5, x*y*z>` or the two-part form with
    /// generators and relators given separately.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let syntax = |column: usize, message: String| PresentationError::Syntax { line: 1, column, message };
        let t = text.trim();
        let inner = t.strip_prefix('<').and_then(|s| s.strip_suffix('>')).ok_or_else(|| syntax(1, "expected <generators | relators>".into()))?;
        let offset = text.find('<').unwrap_or(0) + 2;
        let (gens, rels) = inner.split_once('|').ok_or_else(|| syntax(offset, "missing '|'".into()))?;
        let generators: Vec<String> = gens.split(',').map(|g| g.trim().to_string()).filter(|g| !g.is_empty()).collect();
        let rel_offset = offset + gens.len() + 1;
        let mut relators = Vec::new();
        let mut col = rel_offset;
        for piece in rels.split(',') {
            if !piece.trim().is_empty() {
                relators.push(parse_word(piece, &generators).map_err(|(c, m)| syntax(col + c, m))?);
            }
            col += piece.len() + 1;
        }
        Ok(FpGroup::new(generators, relators))
    }

    pub fn format_word(&self, word: &[i32]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < word.len() {
            let mut j = i;
            while j < word.len() && word[j] == word[i] {
                j += 1;
            }
            let name = &self.generators[(word[i].unsigned_abs() - 1) as usize];
            let exp = (j - i) as i64 * word[i].signum() as i64;
            parts.push(if exp == 1 { name.clone() } else { format!("{name}^{exp}") });
            i = j;
        }
        parts.join("*")
    }

    /// Rows of the abelianized relation matrix in sparse form.
    pub fn exponent_rows(&self) -> Vec<Vec<(usize, i64)>> {
        self.relators
            .iter()
            .map(|r| r.iter().map(|&l| ((l.unsigned_abs() - 1) as usize, l.signum() as i64)).collect())
            .collect()
    }
}

impl fmt::Display for FpGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))
    }
}

/// Parses a word like `x^2*y^-1*z`; errors carry a 0-based column offset.
fn parse_word(text: &str, generators: &[String]) -> Result<Word, (usize, String)> {
    let mut word = Vec::new();
    let mut col = 0;
    for token in text.split('*') {
        let lead = token.len() - token.trim_start().len();
        let tok = token.trim();
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e.trim().parse().map_err(|_| (col + lead + n.len() + 1, format!("bad exponent in '{tok}'")))?;
                (n.trim(), e)
            }
            None => (tok, 1),
        };
        if name == "1" && exp == 1 {
            col += token.len() + 1;
            continue;
        }
        let g = generators.iter().position(|g| g == name).ok_or_else(|| (col + lead, format!("unknown generator '{name}'")))?;
        let letter = if exp >= 0 { g as i32 + 1 } else { -(g as i32 + 1) };
        word.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        col += token.len() + 1;
    }
    Ok(free_reduce(&word))
}

/// The orbifold group `⟨x_1..x_r | x_i^{m_i}, x_1···x_r⟩` of a genus-zero
/// signature, with generators in the given order.
pub fn polygonal_presentation(orders: &[u32]) -> Result<FpGroup, PresentationError> {
    polygonal_presentation_named(orders, "x")
}

pub(crate) fn polygonal_presentation_named(orders: &[u32], prefix: &str) -> Result<FpGroup, PresentationError> {
    if orders.len() < 3 {
        return Err(PresentationError::TooFewBranchPoints(orders.len()));
    }
    let generators = (1..=orders.len()).map(|i| format!("{prefix}{i}")).collect();
    let mut relators: Vec<Word> = orders.iter().enumerate().map(|(i, &m)| vec![i as i32 + 1; m as usize]).collect();
    relators.push((1..=orders.len() as i32).collect());
    Ok(FpGroup::new(generators, relators))
}

/// Presentation of `T1 × T2`: both polygonal presentations plus all
/// commutators `[x_i, y_j]`.
pub fn product_presentation(orders1: &[u32], orders2: &[u32]) -> Result<FpGroup, PresentationError> {
    let t1 = polygonal_presentation_named(orders1, "x")?;
    let t2 = polygonal_presentation_named(orders2, "y")?;
    let r = orders1.len() as i32;
    let mut relators = t1.relators.clone();
    relators.extend(t2.relators.iter().map(|w| w.iter().map(|&l| l + l.signum() * r).collect::<Word>()));
    for i in 1..=r {
        for j in 1..=orders2.len() as i32 {
            relators.push(vec![i, j + r, -i, -(j + r)]);
        }
    }
    let mut generators = t1.generators;
    generators.extend(t2.generators);
    Ok(FpGroup::new(generators, relators))
}

/// Abelianization through the exponent matrix.
pub fn abelianization(fp: &FpGroup) -> AbelianInvariants {
    sparse_abelian_invariants(fp.generator_count(), &fp.exponent_rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_group() {
        let fp = polygonal_presentation(&[2, 5, 5]).unwrap();
        assert_eq!(fp.to_string(), "<x1, x2, x3 | x1^2, x2^5, x3^5, x1*x2*x3>");
        assert_eq!(abelianization(&fp).torsion, vec![5]);
    }

    #[test]
    fn four_threes() {
        let fp = polygonal_presentation(&[3, 3, 3, 3]).unwrap();
        assert_eq!((fp.generator_count(), fp.relators.len()), (4, 5));
        let ab = abelianization(&fp);
        assert_eq!((ab.free_rank, ab.torsion.clone()), (0, vec![3, 3, 3]));
    }

    #[test]
    fn short_signature_rejected() {
        assert_eq!(polygonal_presentation(&[5]).unwrap_err(), PresentationError::TooFewBranchPoints(1));
    }

    #[test]
    fn parse_round_trip() {
        let fp = FpGroup::parse("<x, y | x^2, y^-3, x*y*x^-1*y^-1>").unwrap();
        assert_eq!(fp.relators, vec![vec![1, 1], vec![-2, -2, -2], vec![1, 2, -1, -2]]);
        assert_eq!(FpGroup::parse(&fp.to_string()).unwrap(), fp);
        let err = FpGroup::parse("<x, y | x^2, w>").unwrap_err();
        assert!(matches!(err, PresentationError::Syntax { column: 14, .. }), "{err:?}");
    }

    #[test]
    fn free_reduction() {
        assert_eq!(free_reduce(&[1, 2, -2, -1, 3]), vec![3]);
        let fp = FpGroup::new(vec!["a".into()], vec![vec![1, -1]]);
        assert!(fp.relators.is_empty());
    }
}
