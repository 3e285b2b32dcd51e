use std::sync::Arc;

use thiserror::Error;

use super::signature::{Signature, SignatureError};
use crate::permgroup::{Group, Perm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenVectorError {
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("{elements} elements for a signature with {branch_points} branch points")]
    LengthMismatch { elements: usize, branch_points: usize },
    #[error("element {position} ({element}) is not in {group}")]
    NotInGroup { position: usize, element: String, group: String },
    #[error("element {position} has order {got}, signature requires {expected}")]
    OrderMismatch { position: usize, expected: u32, got: usize },
    #[error("product of the elements is {product}, not the identity")]
    NontrivialProduct { product: String },
    #[error("elements generate a proper subgroup of order {generated} (group order {order})")]
    ProperSubgroup { generated: usize, order: usize },
    #[error("generating vectors live in different groups")]
    DifferentGroups,
}

/// A certified generating vector: prescribed orders, trivial product,
/// generates the whole group.
#[derive(Debug, Clone)]
pub struct GenVector {
    group: Arc<Group>,
    elements: Vec<usize>,
    signature: Signature,
}

impl GenVector {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    /// Element indices in the user's order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn perms(&self) -> Vec<Perm> {
        self.elements.iter().map(|&i| self.group.element(i).clone()).collect()
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// Cycle-notation rendering, elements separated by spaces.
    pub fn to_cycle_string(&self) -> String {
        self.perms().iter().map(Perm::to_string).collect::<Vec<_>>().join(" ")
    }

    /// The same vector conjugated elementwise by `h`.
    pub fn conjugated(&self, h: usize) -> GenVector {
        GenVector {
            group: self.group.clone(),
            elements: self.elements.iter().map(|&v| self.group.conjugate(v, h)).collect(),
            signature: self.signature.clone(),
        }
    }
}

/// Checks the three generating-vector conditions on element indices; the
/// error names the first one that fails.
pub fn verify_generating_indices(group: &Arc<Group>, elements: &[usize], multiplicities: &[u32]) -> Result<GenVector, GenVectorError> {
    let signature = Signature::new(multiplicities.to_vec())?;
    if elements.len() != multiplicities.len() {
        return Err(GenVectorError::LengthMismatch { elements: elements.len(), branch_points: multiplicities.len() });
    }
    for (position, (&v, &m)) in elements.iter().zip(multiplicities).enumerate() {
        let got = group.order_of(v);
        if got != m as usize {
            return Err(GenVectorError::OrderMismatch { position: position + 1, expected: m, got });
        }
    }
    let product = elements.iter().fold(group.identity(), |acc, &v| group.mul(acc, v));
    if product != group.identity() {
        return Err(GenVectorError::NontrivialProduct { product: group.element(product).to_string() });
    }
    let generated = group.subgroup_order(elements);
    if generated != group.order() {
        return Err(GenVectorError::ProperSubgroup { generated, order: group.order() });
    }
    Ok(GenVector { group: group.clone(), elements: elements.to_vec(), signature })
}

/// Certifies `(v_1, ..., v_r)` as a generating vector of the given
/// signature (multiplicities listed in the same order as the elements).
pub fn verify_generating_vector(group: &Arc<Group>, elements: &[Perm], multiplicities: &[u32]) -> Result<GenVector, GenVectorError> {
    Signature::new(multiplicities.to_vec())?;
    let mut idx = Vec::with_capacity(elements.len());
    for (position, p) in elements.iter().enumerate() {
        let i = group.index_of(p).ok_or_else(|| GenVectorError::NotInGroup {
            position: position + 1,
            element: p.to_string(),
            group: group.label().to_string(),
        })?;
        idx.push(i);
    }
    verify_generating_indices(group, &idx, multiplicities)
}

/// Nontrivial elements of all conjugates of the cyclic groups `⟨v_i⟩`,
/// as a membership mask over element indices.
pub fn stabilizer_mask(group: &Group, elements: &[usize]) -> Vec<bool> {
    let n = group.order();
    let mut mask = vec![false; n];
    for &v in elements {
        let mut powers = Vec::new();
        let mut x = v;
        while x != group.identity() {
            powers.push(x);
            x = group.mul(x, v);
        }
        for h in 0..n {
            for &p in &powers {
                mask[group.conjugate(p, h)] = true;
            }
        }
    }
    mask
}

/// Elements with fixed points on the curve of `gv`, ascending.
pub fn stabilizer_elements(gv: &GenVector) -> Vec<usize> {
    let mask = stabilizer_mask(&gv.group, &gv.elements);
    (0..mask.len()).filter(|&i| mask[i]).collect()
}

/// Two generating vectors over one group, defining `(C1 × C2)/G`.
#[derive(Debug, Clone)]
pub struct UnmixedPair {
    pub gv1: GenVector,
    pub gv2: GenVector,
}

impl UnmixedPair {
    pub fn new(gv1: GenVector, gv2: GenVector) -> Result<Self, GenVectorError> {
        if !Arc::ptr_eq(&gv1.group, &gv2.group) && gv1.group.elements() != gv2.group.elements() {
            return Err(GenVectorError::DifferentGroups);
        }
        Ok(UnmixedPair { gv1, gv2 })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.gv1.group
    }

    pub fn swapped(&self) -> UnmixedPair {
        UnmixedPair { gv1: self.gv2.clone(), gv2: self.gv1.clone() }
    }
}

/// Freeness of the diagonal action, with the offending elements when not free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessCertificate {
    pub free: bool,
    /// Elements (as cycle strings) stabilizing points on both curves.
    pub intersection: Vec<String>,
}

pub fn is_free_unmixed(pair: &UnmixedPair) -> FreenessCertificate {
    let group = pair.group();
    let a = stabilizer_mask(group, &pair.gv1.elements);
    let b = stabilizer_mask(group, &pair.gv2.elements);
    let intersection: Vec<String> = (0..group.order()).filter(|&i| a[i] && b[i]).map(|i| group.element(i).to_string()).collect();
    FreenessCertificate { free: intersection.is_empty(), intersection }
}
