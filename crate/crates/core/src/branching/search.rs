//! Deterministic depth-first search for generating vectors and free pairs.

use std::ops::ControlFlow;
use std::sync::Arc;

use super::genvec::{is_free_unmixed, verify_generating_indices, GenVector, UnmixedPair};
use super::signature::Signature;
use crate::permgroup::{conjugacy_classes, ConjClassSet, Group};

/// Visits every tuple of elements with the prescribed orders (sorted
/// signature) and trivial product, first entry restricted to class
/// representatives. Generation is left to the visitor.
fn for_each_candidate(group: &Group, classes: &ConjClassSet, orders: &[u32], mut visit: impl FnMut(&[usize]) -> ControlFlow<()>) {
    let r = orders.len();
    let first: Vec<usize> = (0..classes.len()).filter(|&k| classes.element_order(k) == orders[0] as usize).map(|k| classes.rep(k)).collect();
    let by_order: Vec<Vec<usize>> = orders.iter().map(|&m| (0..group.order()).filter(|&x| group.order_of(x) == m as usize).collect()).collect();
    let mut tuple = vec![0usize; r];
    let mut partial = vec![0usize; r];

    fn dfs(
        pos: usize,
        group: &Group,
        orders: &[u32],
        by_order: &[Vec<usize>],
        tuple: &mut [usize],
        partial: &mut [usize],
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let r = orders.len();
        let before = if pos == 0 { group.identity() } else { partial[pos - 1] };
        if pos == r - 1 {
            let last = group.inv(before);
            if group.order_of(last) == orders[pos] as usize {
                tuple[pos] = last;
                return visit(tuple);
            }
            return ControlFlow::Continue(());
        }
        for &x in &by_order[pos] {
            tuple[pos] = x;
            partial[pos] = group.mul(before, x);
            dfs(pos + 1, group, orders, by_order, tuple, partial, visit)?;
        }
        ControlFlow::Continue(())
    }

    for x in first {
        tuple[0] = x;
        partial[0] = x;
        if dfs(1, group, orders, &by_order, &mut tuple, &mut partial, &mut visit).is_break() {
            return;
        }
    }
}

/// Up to `limit` certified generating vectors for the sorted signature, in
/// canonical search order.
pub fn enumerate_generating_vectors(group: &Arc<Group>, sig: &Signature, limit: usize) -> Vec<GenVector> {
    let classes = conjugacy_classes(group);
    enumerate_with_classes(group, &classes, sig, limit)
}

pub(crate) fn enumerate_with_classes(group: &Arc<Group>, classes: &ConjClassSet, sig: &Signature, limit: usize) -> Vec<GenVector> {
    let orders = sig.sorted();
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    for_each_candidate(group, classes, &orders, |t| {
        if let Ok(gv) = verify_generating_indices(group, t, &orders) {
            out.push(gv);
            if out.len() >= limit {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    out
}

/// Classes met by the conjugates of `⟨v_i⟩` minus the identity, as a bitmask.
fn class_mask(group: &Group, classes: &ConjClassSet, tuple: &[usize]) -> u128 {
    let mut mask = 0u128;
    for &v in tuple {
        let mut x = v;
        while x != group.identity() {
            mask |= 1u128 << classes.class_of(x);
            x = group.mul(x, v);
        }
    }
    mask
}

/// One generating vector per distinct stabilizer set, in discovery order.
fn distinct_stabilizer_witnesses(group: &Arc<Group>, classes: &ConjClassSet, sig: &Signature) -> Vec<(u128, GenVector)> {
    let orders = sig.sorted();
    let mut found: Vec<(u128, GenVector)> = Vec::new();
    for_each_candidate(group, classes, &orders, |t| {
        let mask = class_mask(group, classes, t);
        if !found.iter().any(|(m, _)| *m == mask) {
            if let Ok(gv) = verify_generating_indices(group, t, &orders) {
                found.push((mask, gv));
            }
        }
        ControlFlow::Continue(())
    });
    found
}

/// First free pair in canonical search order, or `None` when no pair of
/// generating vectors of these signatures acts freely.
pub fn find_free_pair(group: &Arc<Group>, sig1: &Signature, sig2: &Signature) -> Option<UnmixedPair> {
    let classes = conjugacy_classes(group);
    assert!(classes.len() <= 128, "class bitmask holds at most 128 classes");
    let left = distinct_stabilizer_witnesses(group, &classes, sig1);
    let right = distinct_stabilizer_witnesses(group, &classes, sig2);
    for (m1, gv1) in &left {
        for (m2, gv2) in &right {
            if m1 & m2 == 0 {
                let pair = UnmixedPair::new(gv1.clone(), gv2.clone()).expect("same group");
                debug_assert!(is_free_unmixed(&pair).free);
                return Some(pair);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{construct_group, GroupLabel};

    fn group(label: GroupLabel) -> Arc<Group> {
        Arc::new(construct_group(&label).unwrap())
    }

    #[test]
    fn a5_triples() {
        let g = group(GroupLabel::A5);
        let found = enumerate_generating_vectors(&g, &"[2,5,5]".parse().unwrap(), 1);
        assert_eq!(found.len(), 1);
        assert!(enumerate_generating_vectors(&g, &"[2,2,2]".parse().unwrap(), 1).is_empty());
    }

    #[test]
    fn z5_squared() {
        let g = group(GroupLabel::Abelian(vec![5, 5]));
        let sig: Signature = "[5,5,5]".parse().unwrap();
        assert!(!enumerate_generating_vectors(&g, &sig, 1).is_empty());
        let pair = find_free_pair(&g, &sig, &sig).unwrap();
        assert!(is_free_unmixed(&pair).free);
    }

    #[test]
    fn limit_is_respected_and_deterministic() {
        let g = group(GroupLabel::A5);
        let sig: Signature = "[3,3,5]".parse().unwrap();
        let a = enumerate_generating_vectors(&g, &sig, 5);
        let b = enumerate_generating_vectors(&g, &sig, 5);
        assert_eq!(a.len(), 5);
        assert_eq!(a.iter().map(|v| v.elements().to_vec()).collect::<Vec<_>>(), b.iter().map(|v| v.elements().to_vec()).collect::<Vec<_>>());
    }
}
