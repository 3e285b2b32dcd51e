use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use super::perm::{compose, Perm, PermError};

/// Default bound on the size of a closure.
pub const DEFAULT_CLOSURE_BOUND: usize = 5_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty generating set")]
    NoGenerators,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("closure exceeds the bound of {0} elements")]
    TooLarge(usize),
    #[error("element {0} is not in the group")]
    NotAMember(String),
    #[error("unknown group label '{0}'")]
    UnknownLabel(String),
    #[error("fingerprint mismatch for {label}: {detail}")]
    Fingerprint { label: String, detail: String },
    #[error("coset enumeration failed: {0}")]
    Enumeration(String),
}

/// A finite permutation group with its full multiplication table.
///
/// Elements are sorted lexicographically by one-line form, so the identity is
/// always index 0. Multiplication follows [`compose`]: `mul(i, j)` is the
/// index of `e_i ∘ e_j`.
#[derive(Clone)]
pub struct Group {
    label: String,
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<usize>,
}

impl Group {
    /// Builds the group from a closed element list; sorts and tabulates.
    fn from_closed_set(label: String, degree: usize, mut elements: Vec<Perm>, gens: &[Perm]) -> Self {
        elements.sort();
        let n = elements.len();
        let index: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mul = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let c = compose(a, b).expect("common degree");
                mul[i * n + j] = index[&c] as u32;
            }
        }
        let inv = elements.iter().map(|p| index[&p.inverse()] as u32).collect();
        let mut orders = vec![0u32; n];
        for i in 0..n {
            let mut k = 1;
            let mut x = i;
            while x != 0 {
                x = mul[x * n + i] as usize;
                k += 1;
            }
            orders[i] = k;
        }
        let mut generators: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        generators.dedup();
        Group { label, degree, elements, index, mul, inv, orders, generators }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Order of the element with index `a`.
    #[inline]
    pub fn order_of(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.orders[a] as u64;
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `h a h^{-1}`
    pub fn conjugate(&self, a: usize, h: usize) -> usize {
        self.mul(self.mul(h, a), self.inv(h))
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1usize, |acc, &o| num_integer::lcm(acc, o as usize))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Indices of central elements, ascending.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| self.generators.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Size of the subgroup generated by the given element indices.
    pub fn subgroup_order(&self, gens: &[usize]) -> usize {
        self.subgroup(gens).len()
    }

    /// Elements of the subgroup generated by the given indices (BFS order).
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// Regular right action of `g` on element indices: `x ↦ x·g`.
    pub fn right_regular(&self, g: usize) -> Perm {
        Perm::from_images((0..self.order()).map(|x| self.mul(x, g) as u32).collect()).expect("group table row is a bijection")
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order())
            .field("degree", &self.degree)
            .finish()
    }
}

/// Least `k ≥ 1` with `g^k = 1`, for a permutation known to lie in `group`.
pub fn element_order(group: &Group, g: &Perm) -> Result<usize, GroupError> {
    group.index_of(g).map(|i| group.order_of(i)).ok_or_else(|| GroupError::NotAMember(g.to_string()))
}

/// Breadth-first closure of a generating set, bounded in size.
pub fn group_closure(gens: &[Perm], bound: usize) -> Result<Group, GroupError> {
    group_closure_labeled("", gens, bound)
}

pub fn group_closure_labeled(label: &str, gens: &[Perm], bound: usize) -> Result<Group, GroupError> {
    let first = gens.first().ok_or(GroupError::NoGenerators)?;
    let degree = first.degree();
    for g in gens {
        if g.degree() != degree {
            return Err(PermError::DegreeMismatch { left: degree, right: g.degree() }.into());
        }
    }
    let id = Perm::identity(degree);
    let mut seen: HashMap<Perm, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g)?;
            if !seen.contains_key(&y) {
                if elements.len() >= bound {
                    return Err(GroupError::TooLarge(bound));
                }
                seen.insert(y.clone(), ());
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(Group::from_closed_set(label.to_string(), degree, elements, gens))
}
