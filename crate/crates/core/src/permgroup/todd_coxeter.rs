//! HLT coset enumeration over the trivial subgroup, used to turn an embedded
//! presentation into its regular permutation representation.

use super::perm::Perm;

/// Letters are `+(g+1)` for generator `g` and `-(g+1)` for its inverse.
pub type Letter = i32;

const MAX_COSETS: usize = 200_000;

struct Table {
    ngens: usize,
    rows: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
}

fn col(letter: Letter) -> usize {
    let g = (letter.unsigned_abs() - 1) as usize;
    if letter > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl Table {
    fn new(ngens: usize) -> Self {
        Table { ngens, rows: vec![vec![None; 2 * ngens]], parent: vec![0] }
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, String> {
        if self.rows.len() >= MAX_COSETS {
            return Err(format!("more than {MAX_COSETS} cosets"));
        }
        let n = self.rows.len();
        self.rows.push(vec![None; 2 * self.ngens]);
        self.parent.push(n);
        self.rows[c][x] = Some(n);
        self.rows[n][inv_col(x)] = Some(c);
        Ok(n)
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..2 * self.ngens {
                let Some(f) = self.rows[e][x] else { continue };
                if self.rows[f][inv_col(x)] == Some(e) {
                    self.rows[f][inv_col(x)] = None;
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                if let Some(t) = self.rows[e1][x] {
                    let t = self.rep(t);
                    self.merge(f1, t, &mut queue);
                } else if let Some(t) = self.rows[f1][inv_col(x)] {
                    let t = self.rep(t);
                    self.merge(e1, t, &mut queue);
                } else {
                    self.rows[e1][x] = Some(f1);
                    self.rows[f1][inv_col(x)] = Some(e1);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<(), String> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i: isize = 0;
        let mut j: isize = word.len() as isize - 1;
        loop {
            while i <= j {
                match self.rows[f][word[i as usize]] {
                    Some(t) => {
                        f = t;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                match self.rows[b][inv_col(word[j as usize])] {
                    Some(t) => {
                        b = t;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = word[i as usize];
                self.rows[f][x] = Some(b);
                self.rows[b][inv_col(x)] = Some(f);
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup in `⟨ngens | relators⟩` and
/// returns the generator permutations of the right regular action
/// (`perm[c] = c·g`). The enumeration must be finite.
pub fn regular_representation(ngens: usize, relators: &[Vec<Letter>]) -> Result<Vec<Perm>, String> {
    let words: Vec<Vec<usize>> = relators.iter().map(|r| r.iter().map(|&l| col(l)).collect()).collect();
    let mut t = Table::new(ngens);
    let mut c = 0;
    while c < t.rows.len() {
        if t.live(c) {
            for w in &words {
                if !t.live(c) {
                    break;
                }
                t.scan_and_fill(c, w)?;
            }
            for x in 0..2 * ngens {
                if t.live(c) && t.rows[c][x].is_none() {
                    t.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    let live: Vec<usize> = (0..t.rows.len()).filter(|&c| t.live(c)).collect();
    let mut rename = vec![usize::MAX; t.rows.len()];
    for (k, &c) in live.iter().enumerate() {
        rename[c] = k;
    }
    let mut perms = Vec::with_capacity(ngens);
    for g in 0..ngens {
        let mut images = Vec::with_capacity(live.len());
        for &c in &live {
            let target = t.rows[c][2 * g].ok_or("incomplete coset table")?;
            let target = t.rep(target);
            images.push(rename[target] as u32);
        }
        perms.push(Perm::from_images(images).map_err(|e| e.to_string())?);
    }
    // every relator must close at every coset
    for w in relators {
        for start in 0..live.len() {
            let mut x = start;
            for &l in w {
                let g = (l.unsigned_abs() - 1) as usize;
                x = if l > 0 { perms[g].apply(x) } else { perms[g].inverse().apply(x) };
            }
            if x != start {
                return Err("relator does not close in the enumerated table".into());
            }
        }
    }
    Ok(perms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::group::group_closure;

    #[test]
    fn cyclic_group() {
        let perms = regular_representation(1, &[vec![1, 1, 1, 1, 1]]).unwrap();
        assert_eq!(perms[0].degree(), 5);
    }

    #[test]
    fn dihedral_and_symmetric() {
        // D4 = <r, s | r^4, s^2, (rs)^2>
        let perms = regular_representation(2, &[vec![1; 4], vec![2, 2], vec![1, 2, 1, 2]]).unwrap();
        assert_eq!(perms[0].degree(), 8);
        assert_eq!(group_closure(&perms, 100).unwrap().order(), 8);
        // S4 = <a, b | a^2, b^3, (ab)^4>
        let perms = regular_representation(2, &[vec![1, 1], vec![2, 2, 2], vec![1, 2, 1, 2, 1, 2, 1, 2]]).unwrap();
        assert_eq!(perms[0].degree(), 24);
    }

    #[test]
    fn collapse_to_trivial() {
        // <a, b | a^2, b^3, ab> is trivial
        let perms = regular_representation(2, &[vec![1, 1], vec![2, 2, 2], vec![1, 2]]).unwrap();
        assert_eq!(perms[0].degree(), 1);
    }
}
