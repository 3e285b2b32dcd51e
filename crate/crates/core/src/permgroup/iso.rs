//! Isomorphism certificates for small groups and central quotients.

use std::collections::VecDeque;

use super::classes::conjugacy_classes;
use super::group::{group_closure_labeled, Group, DEFAULT_CLOSURE_BOUND};
use super::perm::Perm;

/// A small generating set: the stored generators, greedily thinned.
fn small_generating_set(g: &Group) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut candidates: Vec<usize> = g.generators().to_vec();
    if g.subgroup_order(&candidates) != g.order() {
        candidates = (0..g.order()).collect();
    }
    // higher-order elements first generate faster
    candidates.sort_by_key(|&x| (std::cmp::Reverse(g.order_of(x)), x));
    let mut reached = 1;
    for c in candidates {
        if reached == g.order() {
            break;
        }
        let mut trial = gens.clone();
        trial.push(c);
        let n = g.subgroup_order(&trial);
        if n > reached {
            gens = trial;
            reached = n;
        }
    }
    gens
}

/// Extends generator images to a map on all elements by walking the Cayley
/// graph, and checks that it is a bijective homomorphism.
fn extend_to_isomorphism(src: &Group, dst: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = src.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = src.mul(x, s);
            let fy = dst.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    let mut hit = vec![false; dst.order()];
    for &v in &map {
        if v == usize::MAX || hit[v] {
            return None;
        }
        hit[v] = true;
    }
    Some(map)
}

/// Searches for an isomorphism `src → dst` by backtracking over generator
/// images constrained by element order and class size. Returns the element
/// map on success.
pub fn find_isomorphism(src: &Group, dst: &Group) -> Option<Vec<usize>> {
    if src.order() != dst.order() {
        return None;
    }
    let gens = small_generating_set(src);
    let src_cc = conjugacy_classes(src);
    let dst_cc = conjugacy_classes(dst);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let key = (src.order_of(s), src_cc.size(src_cc.class_of(s)));
            (0..dst.order()).filter(|&t| (dst.order_of(t), dst_cc.size(dst_cc.class_of(t))) == key).collect()
        })
        .collect();
    let mut choice = vec![0usize; gens.len()];
    fn search(
        k: usize,
        choice: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        src: &Group,
        dst: &Group,
        gens: &[usize],
    ) -> Option<Vec<usize>> {
        if k == gens.len() {
            return extend_to_isomorphism(src, dst, gens, choice);
        }
        for &c in &candidates[k] {
            choice[k] = c;
            if let Some(m) = search(k + 1, choice, candidates, src, dst, gens) {
                return Some(m);
            }
        }
        None
    }
    search(0, &mut choice, &candidates, src, dst, &gens)
}

/// Quotient `E / ⟨z⟩` for a central element `z`, realized as the action of
/// `E` on the cosets of `⟨z⟩`.
pub fn central_quotient(e: &Group, z: usize) -> Group {
    let sub = e.subgroup(&[z]);
    let n = e.order();
    let mut coset_id = vec![usize::MAX; n];
    let mut count = 0;
    for g in 0..n {
        if coset_id[g] == usize::MAX {
            for &s in &sub {
                coset_id[e.mul(g, s)] = count;
            }
            count += 1;
        }
    }
    let reps: Vec<usize> = (0..count).map(|c| coset_id.iter().position(|&x| x == c).expect("nonempty coset")).collect();
    let gens: Vec<Perm> = e
        .generators()
        .iter()
        .map(|&h| Perm::from_images(reps.iter().map(|&r| coset_id[e.mul(h, r)] as u32).collect()).expect("coset action"))
        .collect();
    group_closure_labeled(&format!("{}/Z", e.label()), &gens, DEFAULT_CLOSURE_BOUND).expect("quotient is no larger than E")
}

/// Outcome of a central-quotient check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralQuotientCertificate {
    pub center_order: usize,
    /// Central involution whose quotient matched, if any.
    pub kernel_generator: Option<usize>,
    pub isomorphism: Option<Vec<usize>>,
}

impl CentralQuotientCertificate {
    pub fn holds(&self) -> bool {
        self.isomorphism.is_some()
    }
}

/// Checks whether some central subgroup of order 2 in `e` has quotient
/// isomorphic to `target`.
pub fn central_quotient_certificate(e: &Group, target: &Group) -> CentralQuotientCertificate {
    let center = e.center();
    let mut cert = CentralQuotientCertificate { center_order: center.len(), kernel_generator: None, isomorphism: None };
    if e.order() != 2 * target.order() {
        return cert;
    }
    for &z in center.iter().filter(|&&z| e.order_of(z) == 2) {
        let q = central_quotient(e, z);
        if let Some(iso) = find_isomorphism(&q, target) {
            cert.kernel_generator = Some(z);
            cert.isomorphism = Some(iso);
            return cert;
        }
    }
    cert
}

pub fn verify_central_quotient(e: &Group, target: &Group) -> bool {
    central_quotient_certificate(e, target).holds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::construct::{construct_group, GroupLabel};

    #[test]
    fn sl25_over_center_is_a5() {
        let sl = construct_group(&GroupLabel::Sl25).unwrap();
        let a5 = construct_group(&GroupLabel::A5).unwrap();
        let cert = central_quotient_certificate(&sl, &a5);
        assert_eq!(cert.center_order, 2);
        assert!(cert.holds());
    }

    #[test]
    fn negative_cases() {
        let a5 = construct_group(&GroupLabel::A5).unwrap();
        assert!(!verify_central_quotient(&a5, &a5));
        let s5 = construct_group(&GroupLabel::S5).unwrap();
        assert!(!verify_central_quotient(&s5, &a5));
    }

    #[test]
    fn z4_over_its_involution() {
        let z4 = construct_group(&GroupLabel::Abelian(vec![4])).unwrap();
        let z2 = construct_group(&GroupLabel::Abelian(vec![2])).unwrap();
        assert!(verify_central_quotient(&z4, &z2));
        let v4 = construct_group(&GroupLabel::Abelian(vec![2, 2])).unwrap();
        assert!(find_isomorphism(&z4, &v4).is_none());
    }
}
