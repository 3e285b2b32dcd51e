//! Concrete realizations of the named groups of the catalog.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::classes::conjugacy_classes;
use super::group::{group_closure_labeled, Group, GroupError, DEFAULT_CLOSURE_BOUND};
use super::perm::Perm;
use super::todd_coxeter::{regular_representation, Letter};
use crate::fundgroup::{abelianization, FpGroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupLabel {
    A5,
    S5,
    Sl25,
    S4xZ2,
    /// SmallGroup(32, 27), the wreath product (Z2)^2 ≀ Z2.
    G32,
    S4,
    /// SmallGroup(16, 3), (Z4 × Z2) ⋊ Z2.
    G16,
    D4xZ2,
    /// Direct product of cyclic groups of the listed orders.
    Abelian(Vec<u32>),
}

impl GroupLabel {
    /// Every label that appears in the classification table.
    pub fn catalog() -> Vec<GroupLabel> {
        use GroupLabel::*;
        vec![A5, S5, Sl25, Abelian(vec![5, 5]), S4xZ2, G32, S4, G16, D4xZ2, Abelian(vec![2; 4]), Abelian(vec![3, 3]), Abelian(vec![2; 3])]
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::A5 => f.write_str("A5"),
            GroupLabel::S5 => f.write_str("S5"),
            GroupLabel::Sl25 => f.write_str("SL(2,5)"),
            GroupLabel::S4xZ2 => f.write_str("S4xZ2"),
            GroupLabel::G32 => f.write_str("G(32)"),
            GroupLabel::S4 => f.write_str("S4"),
            GroupLabel::G16 => f.write_str("G(16)"),
            GroupLabel::D4xZ2 => f.write_str("D4xZ2"),
            GroupLabel::Abelian(orders) if orders.is_empty() => f.write_str("1"),
            GroupLabel::Abelian(orders) => {
                // run-length: Z5^2 x Z3
                let mut parts = Vec::new();
                let mut i = 0;
                while i < orders.len() {
                    let mut j = i;
                    while j < orders.len() && orders[j] == orders[i] {
                        j += 1;
                    }
                    if j - i == 1 {
                        parts.push(format!("Z{}", orders[i]));
                    } else {
                        parts.push(format!("Z{}^{}", orders[i], j - i));
                    }
                    i = j;
                }
                f.write_str(&parts.join("x"))
            }
        }
    }
}

impl FromStr for GroupLabel {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_uppercase();
        let label = match compact.as_str() {
            "A5" => GroupLabel::A5,
            "S5" => GroupLabel::S5,
            "SL(2,5)" | "SL25" | "SL2_5" => GroupLabel::Sl25,
            "S4XZ2" | "S4×Z2" => GroupLabel::S4xZ2,
            "G(32)" | "G32" | "<32,27>" => GroupLabel::G32,
            "S4" => GroupLabel::S4,
            "G(16)" | "G16" | "<16,3>" => GroupLabel::G16,
            "D4XZ2" | "D4×Z2" => GroupLabel::D4xZ2,
            "1" | "TRIVIAL" => GroupLabel::Abelian(vec![]),
            _ => parse_abelian(&compact).ok_or_else(|| GroupError::UnknownLabel(s.to_string()))?,
        };
        Ok(label)
    }
}

fn parse_abelian(s: &str) -> Option<GroupLabel> {
    let mut orders = Vec::new();
    for part in s.split(['X', '×']) {
        let part = part.replace(['(', ')'], "");
        let body = part.strip_prefix('Z')?;
        let (n, k) = match body.split_once('^') {
            Some((n, k)) => (n.parse::<u32>().ok()?, k.parse::<usize>().ok()?),
            None => (body.parse::<u32>().ok()?, 1),
        };
        if n < 2 || k == 0 {
            return None;
        }
        orders.extend(std::iter::repeat_n(n, k));
    }
    Some(GroupLabel::Abelian(orders))
}

fn cyc(degree: usize, cycles: &[&[u32]]) -> Perm {
    let c: Vec<Vec<u32>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
    Perm::from_cycles(degree, &c).expect("static cycle data")
}

fn cyclic(n: u32) -> Perm {
    let c: Vec<u32> = (0..n).collect();
    Perm::from_cycles(n as usize, &[c]).expect("cycle")
}

/// Combines block generators into generators acting on the disjoint union.
fn direct_product(blocks: &[Vec<Perm>]) -> Vec<Perm> {
    let identities: Vec<Perm> = blocks.iter().map(|b| Perm::identity(b[0].degree())).collect();
    let mut out = Vec::new();
    for (k, block) in blocks.iter().enumerate() {
        for g in block {
            let mut p = Perm::identity(0);
            for (m, id) in identities.iter().enumerate() {
                p = p.direct_sum(if m == k { g } else { id });
            }
            out.push(p);
        }
    }
    out
}

/// Nonzero vectors of the plane over the field with five elements.
fn plane_points() -> Vec<(u32, u32)> {
    (0..5).flat_map(|x| (0..5).map(move |y| (x, y))).filter(|&v| v != (0, 0)).collect()
}

/// Permutation of the 24 nonzero vectors induced by a 2×2 matrix over F5.
pub fn sl25_matrix_action(m: [[u32; 2]; 2]) -> Perm {
    let pts = plane_points();
    let images = pts
        .iter()
        .map(|&(x, y)| {
            let img = ((m[0][0] * x + m[0][1] * y) % 5, (m[1][0] * x + m[1][1] * y) % 5);
            pts.iter().position(|&p| p == img).expect("invertible matrix") as u32
        })
        .collect();
    Perm::from_images(images).expect("invertible matrix")
}

/// Embedded presentations: generators and relators in signed-letter form.
pub(crate) fn embedded_presentation(label: &GroupLabel) -> Option<(usize, Vec<Vec<Letter>>)> {
    match label {
        // a, b, t: a² b² t² (ab)² (at)⁴ (bt)⁴ (a·tbt)²
        GroupLabel::G32 => Some((
            3,
            vec![
                vec![1, 1],
                vec![2, 2],
                vec![3, 3],
                vec![1, 2, 1, 2],
                vec![1, 3, 1, 3, 1, 3, 1, 3],
                vec![2, 3, 2, 3, 2, 3, 2, 3],
                vec![1, 3, 2, 3, 1, 3, 2, 3],
            ],
        )),
        // a, b, c: a⁴ b² c² [a,b] [b,c] c a c⁻¹ = a b
        GroupLabel::G16 => Some((
            3,
            vec![
                vec![1, 1, 1, 1],
                vec![2, 2],
                vec![3, 3],
                vec![1, 2, -1, -2],
                vec![2, 3, -2, -3],
                vec![3, 1, -3, -2, -1],
            ],
        )),
        _ => None,
    }
}

/// Invariants checked for groups built from presentations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelianization: Vec<u64>,
    pub exponent: usize,
    pub class_count: usize,
}

pub fn fingerprint(group: &Group) -> Fingerprint {
    let ab = group_abelianization(group);
    Fingerprint {
        order: group.order(),
        abelianization: ab,
        exponent: group.exponent(),
        class_count: conjugacy_classes(group).len(),
    }
}

fn expected_fingerprint(label: &GroupLabel) -> Option<Fingerprint> {
    match label {
        GroupLabel::G32 => Some(Fingerprint { order: 32, abelianization: vec![2, 2, 2], exponent: 4, class_count: 14 }),
        GroupLabel::G16 => Some(Fingerprint { order: 16, abelianization: vec![2, 4], exponent: 4, class_count: 10 }),
        _ => None,
    }
}

/// Torsion invariants of the abelianization, via the presentation read off
/// a spanning tree of the Cayley graph.
fn group_abelianization(group: &Group) -> Vec<u64> {
    let fp = FpGroup::from_cayley_graph(group);
    let ab = abelianization(&fp);
    assert_eq!(ab.free_rank, 0, "finite group has finite abelianization");
    ab.torsion
}

/// Builds the concrete group for a label; presentation-based groups are
/// fingerprint-checked.
pub fn construct_group(label: &GroupLabel) -> Result<Group, GroupError> {
    let name = label.to_string();
    let gens: Vec<Perm> = match label {
        GroupLabel::A5 => vec![cyc(5, &[&[1, 2, 3, 4, 5]]), cyc(5, &[&[1, 2, 3]])],
        GroupLabel::S5 => vec![cyc(5, &[&[1, 2, 3, 4, 5]]), cyc(5, &[&[1, 2]])],
        GroupLabel::S4 => vec![cyc(4, &[&[1, 2, 3, 4]]), cyc(4, &[&[1, 2]])],
        GroupLabel::S4xZ2 => direct_product(&[vec![cyc(4, &[&[1, 2, 3, 4]]), cyc(4, &[&[1, 2]])], vec![cyclic(2)]]),
        GroupLabel::D4xZ2 => direct_product(&[vec![cyc(4, &[&[1, 2, 3, 4]]), cyc(4, &[&[1, 3]])], vec![cyclic(2)]]),
        GroupLabel::Sl25 => vec![sl25_matrix_action([[1, 1], [0, 1]]), sl25_matrix_action([[0, 4], [1, 0]])],
        GroupLabel::Abelian(orders) if orders.is_empty() => vec![Perm::identity(1)],
        GroupLabel::Abelian(orders) => direct_product(&orders.iter().map(|&n| vec![cyclic(n)]).collect::<Vec<_>>()),
        GroupLabel::G32 | GroupLabel::G16 => {
            let (ngens, relators) = embedded_presentation(label).expect("embedded");
            regular_representation(ngens, &relators).map_err(GroupError::Enumeration)?
        }
    };
    let group = group_closure_labeled(&name, &gens, DEFAULT_CLOSURE_BOUND)?;

    let expected_order = match label {
        GroupLabel::A5 => Some(60),
        GroupLabel::S5 | GroupLabel::Sl25 => Some(120),
        GroupLabel::S4xZ2 => Some(48),
        GroupLabel::S4 => Some(24),
        GroupLabel::D4xZ2 => Some(16),
        GroupLabel::Abelian(orders) => Some(orders.iter().map(|&n| n as usize).product()),
        _ => None,
    };
    if let Some(n) = expected_order {
        if group.order() != n {
            return Err(GroupError::Fingerprint { label: name, detail: format!("order {} != {n}", group.order()) });
        }
    }
    if let Some(expected) = expected_fingerprint(label) {
        let got = fingerprint(&group);
        if got != expected {
            return Err(GroupError::Fingerprint { label: name, detail: format!("{got:?} != {expected:?}") });
        }
    }
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip() {
        for label in GroupLabel::catalog() {
            let text = label.to_string();
            assert_eq!(text.parse::<GroupLabel>().unwrap(), label, "{text}");
        }
        assert_eq!("(Z5)^2".parse::<GroupLabel>().unwrap(), GroupLabel::Abelian(vec![5, 5]));
        assert_eq!("Z4".parse::<GroupLabel>().unwrap(), GroupLabel::Abelian(vec![4]));
        assert!("Q8".parse::<GroupLabel>().is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(construct_group(&GroupLabel::A5).unwrap().order(), 60);
        let sl = construct_group(&GroupLabel::Sl25).unwrap();
        assert_eq!(sl.order(), 120);
        assert_eq!(sl.center().len(), 2);
        let z = construct_group(&GroupLabel::Abelian(vec![5, 5])).unwrap();
        assert_eq!((z.order(), z.exponent()), (25, 5));
    }

    #[test]
    fn presentation_groups_pass_fingerprints() {
        let g32 = construct_group(&GroupLabel::G32).unwrap();
        assert_eq!(g32.order(), 32);
        let g16 = construct_group(&GroupLabel::G16).unwrap();
        assert_eq!(g16.center().len(), 4);
    }
}
