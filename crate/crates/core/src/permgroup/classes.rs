use std::collections::BTreeMap;

use super::group::Group;

/// Conjugacy classes in canonical order: identity first, then by element
/// order, class size and smallest member.
#[derive(Debug, Clone)]
pub struct ConjClassSet {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    orders: Vec<usize>,
    inverse_class: Vec<usize>,
    power_maps: BTreeMap<u64, Vec<usize>>,
}

impl ConjClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, k: usize) -> &[usize] {
        &self.classes[k]
    }

    /// Smallest element index of each class.
    pub fn rep(&self, k: usize) -> usize {
        self.classes[k][0]
    }

    pub fn reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn size(&self, k: usize) -> usize {
        self.classes[k].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Order of the elements of class `k`.
    pub fn element_order(&self, k: usize) -> usize {
        self.orders[k]
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Class containing the inverses of class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    /// Precomputed power map for `k` (primes dividing the exponent, and 2).
    pub fn power_map(&self, k: u64) -> Option<&[usize]> {
        self.power_maps.get(&k).map(Vec::as_slice)
    }

    pub fn power_map_keys(&self) -> Vec<u64> {
        self.power_maps.keys().copied().collect()
    }

    /// Class of `g^k` for `g` in class `class`, computed from the representative.
    pub fn power_class(&self, group: &Group, class: usize, k: u64) -> usize {
        self.class_of[group.pow(self.rep(class), k)]
    }
}

/// Computes the conjugacy classes of `group` by brute-force conjugation.
pub fn conjugacy_classes(group: &Group) -> ConjClassSet {
    let n = group.order();
    let gens: Vec<usize> = if group.generators().is_empty() { (0..n).collect() } else { group.generators().to_vec() };
    let mut raw_class = vec![usize::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if raw_class[x] != usize::MAX {
            continue;
        }
        let id = raw.len();
        raw_class[x] = id;
        let mut members = vec![x];
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            for &g in &gens {
                let z = group.conjugate(y, g);
                if raw_class[z] == usize::MAX {
                    raw_class[z] = id;
                    members.push(z);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        raw.push(members);
    }

    raw.sort_by_key(|c| (group.order_of(c[0]), c.len(), c[0]));
    let mut class_of = vec![0; n];
    for (k, c) in raw.iter().enumerate() {
        for &x in c {
            class_of[x] = k;
        }
    }
    let orders: Vec<usize> = raw.iter().map(|c| group.order_of(c[0])).collect();
    let inverse_class = raw.iter().map(|c| class_of[group.inv(c[0])]).collect();

    let mut primes: Vec<u64> = prime_factors(group.exponent() as u64);
    if !primes.contains(&2) {
        primes.push(2);
    }
    primes.sort_unstable();
    let mut power_maps = BTreeMap::new();
    for p in primes {
        let map: Vec<usize> = raw
            .iter()
            .map(|c| {
                let target = class_of[group.pow(c[0], p)];
                for &x in c {
                    assert_eq!(class_of[group.pow(x, p)], target, "power map is not a class function");
                }
                target
            })
            .collect();
        power_maps.insert(p, map);
    }
    ConjClassSet { classes: raw, class_of, orders, inverse_class, power_maps }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{cycles::parse_perm, group::group_closure, perm::Perm};

    #[test]
    fn trivial_group_has_one_class() {
        let g = group_closure(&[Perm::identity(3)], 10).unwrap();
        let cc = conjugacy_classes(&g);
        assert_eq!(cc.len(), 1);
        assert_eq!(cc.sizes(), vec![1]);
    }

    #[test]
    fn a5_class_sizes_and_squaring() {
        let a5 = group_closure(&[parse_perm("(1,2,3,4,5)", 5).unwrap(), parse_perm("(1,2,3)", 5).unwrap()], 100).unwrap();
        let cc = conjugacy_classes(&a5);
        assert_eq!(cc.sizes(), vec![1, 15, 20, 12, 12]);
        assert_eq!((0..5).map(|k| cc.element_order(k)).collect::<Vec<_>>(), vec![1, 2, 3, 5, 5]);
        let sq = cc.power_map(2).unwrap();
        assert_eq!(sq, &[0, 0, 2, 4, 3]);
        assert_eq!(cc.power_map_keys(), vec![2, 3, 5]);
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(60), vec![2, 3, 5]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(49), vec![7]);
    }
}
