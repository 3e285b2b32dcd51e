use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("images do not form a bijection of 1..{0}")]
    NotBijective(usize),
}

/// A permutation of `{1..n}` stored in one-line form (0-based internally).
///
/// Composition is right-to-left: `compose(a, b)` sends `x` to `a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(PermError::NotBijective(n));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(one_based: &[u32]) -> Result<Self, PermError> {
        if one_based.contains(&0) {
            return Err(PermError::NotBijective(one_based.len()));
        }
        Self::from_images(one_based.iter().map(|&x| x - 1).collect())
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let a = a as usize;
                if a >= degree || touched[a] {
                    return Err(PermError::NotBijective(degree));
                }
                touched[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &x)| i as u32 == x).count()
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Number of cycles including fixed points.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len() + self.fixed_points()
    }

    /// Block sum: `self` on the first points and `other` shifted after them.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let shift = self.images.len() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + shift));
        Perm { images }
    }
}

/// Right-to-left composition: the result maps `x` to `a(b(x))`.
pub fn compose(a: &Perm, b: &Perm) -> Result<Perm, PermError> {
    if a.degree() != b.degree() {
        return Err(PermError::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    Ok(Perm { images: b.images.iter().map(|&x| a.images[x as usize]).collect() })
}

/// Left-to-right product `v_1 · v_2 · ... · v_r` under [`compose`].
pub fn product(perms: &[Perm]) -> Result<Option<Perm>, PermError> {
    let mut it = perms.iter();
    let Some(first) = it.next() else { return Ok(None) };
    let mut acc = first.clone();
    for p in it {
        acc = compose(&acc, p)?;
    }
    Ok(Some(acc))
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}; {}]", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Perm {
        let c: Vec<Vec<u32>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
        Perm::from_cycles(degree, &c).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let g = cyc(5, &[&[2, 1, 3, 4, 5]]);
        let id = Perm::identity(5);
        assert_eq!(compose(&id, &g).unwrap(), g);
        assert_eq!(compose(&g, &id).unwrap(), g);
    }

    #[test]
    fn right_to_left_application() {
        // (1,2) after (2,3): 2 -> 3 -> 3, 3 -> 2 -> 1
        let a = cyc(3, &[&[1, 2]]);
        let b = cyc(3, &[&[2, 3]]);
        let ab = compose(&a, &b).unwrap();
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
        assert_eq!(ab.apply(0), 1);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = compose(&Perm::identity(3), &Perm::identity(4)).unwrap_err();
        assert_eq!(err, PermError::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_one_line(&[1, 1, 2]).is_err());
        assert!(Perm::from_one_line(&[0, 1]).is_err());
        assert!(Perm::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn display_uses_one_based_cycles() {
        let g = cyc(5, &[&[2, 4], &[3, 5]]);
        assert_eq!(g.to_string(), "(2,4)(3,5)");
        assert_eq!(Perm::identity(4).to_string(), "()");
        assert_eq!(g.cycle_count(), 3);
    }
}
