use std::collections::VecDeque;

use super::coset::CosetTable;
use super::presentation::{FpGroup, Word};

/// Subgroup presentation produced by [`reidemeister_schreier`].
#[derive(Debug, Clone)]
pub struct SchreierPresentation {
    pub presentation: FpGroup,
    /// `index · generators` before spanning-tree edges are removed.
    pub total_schreier_generators: usize,
    pub tree_edges: usize,
}

/// Reidemeister–Schreier rewriting against a BFS spanning tree of the coset
/// graph. Tree edges give trivial Schreier generators and are dropped; every
/// relator is rewritten at every coset.
pub fn reidemeister_schreier(fp: &FpGroup, table: &CosetTable) -> SchreierPresentation {
    let n = table.index();
    let ngens = fp.generator_count();
    let mut trivial = vec![false; n * ngens];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut tree_edges = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for g in 0..ngens {
            for letter in [g as i32 + 1, -(g as i32 + 1)] {
                let d = table.act(c, letter);
                if !seen[d] {
                    seen[d] = true;
                    tree_edges += 1;
                    if letter > 0 {
                        trivial[c * ngens + g] = true;
                    } else {
                        trivial[d * ngens + g] = true;
                    }
                    queue.push_back(d);
                }
            }
        }
    }

    let mut number = vec![usize::MAX; n * ngens];
    let mut names = Vec::new();
    for c in 0..n {
        for g in 0..ngens {
            if !trivial[c * ngens + g] {
                number[c * ngens + g] = names.len();
                names.push(format!("{}_{}", fp.generators[g], c));
            }
        }
    }

    let mut relators: Vec<Word> = Vec::with_capacity(fp.relators.len() * n);
    for r in &fp.relators {
        for c in 0..n {
            let mut x = c;
            let mut word = Word::new();
            for &l in r {
                let g = (l.unsigned_abs() - 1) as usize;
                if l > 0 {
                    let k = number[x * ngens + g];
                    if k != usize::MAX {
                        word.push(k as i32 + 1);
                    }
                    x = table.act(x, l);
                } else {
                    let y = table.act(x, l);
                    let k = number[y * ngens + g];
                    if k != usize::MAX {
                        word.push(-(k as i32 + 1));
                    }
                    x = y;
                }
            }
            relators.push(word);
        }
    }
    SchreierPresentation { presentation: FpGroup::new(names, relators), total_schreier_generators: n * ngens, tree_edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fundgroup::presentation::abelianization;

    #[test]
    fn index_one_is_the_group_itself() {
        let fp = FpGroup::parse("<x, y | x^2, y^3, x*y*x*y>").unwrap();
        let table = CosetTable::from_actions(&[vec![0], vec![0]]);
        let sp = reidemeister_schreier(&fp, &table);
        assert_eq!(sp.presentation.generator_count(), 2);
        assert_eq!(sp.presentation.relators, fp.relators);
        assert_eq!(abelianization(&sp.presentation), abelianization(&fp));
    }

    #[test]
    fn index_two_in_cyclic_four() {
        // <x | x^4>, subgroup <x^2>: cosets {H, Hx}
        let fp = FpGroup::parse("<x | x^4>").unwrap();
        let table = CosetTable::from_actions(&[vec![1, 0]]);
        table.validate(&fp).unwrap();
        let sp = reidemeister_schreier(&fp, &table);
        assert_eq!(sp.presentation.generator_count(), 1);
        let ab = abelianization(&sp.presentation);
        assert_eq!((ab.free_rank, ab.torsion), (0, vec![2]));
    }
}
