//! H1(S, Z) of a pair file via the fiber-product subgroup of T1 x T2,
//! Reidemeister-Schreier and Smith normal form.
//!
//!     cargo run --release --example homology [PAIR_FILE]

use isoprod::branching::PairDescriptor;
use isoprod::fundgroup::{h1_surface, smith_normal_form, surface_group_presentation, IntMatrix};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/main.pair").into());
    let text = std::fs::read_to_string(&path).expect("pair file");
    let pair = PairDescriptor::parse(&text).expect("descriptor").certify().expect("certified pair");
    let sp = surface_group_presentation(&pair).expect("free pair");
    println!("pi1: {} Schreier generators ({} tree edges removed), {} relators", sp.presentation.generator_count(), sp.tree_edges, sp.presentation.relators.len());
    let h1 = h1_surface(&pair).expect("finite H1");
    println!("H1 = {h1}  (invariant factors {:?}, order {})", h1.torsion, h1.torsion_order());

    // Smith form with its certificate on a small matrix.
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&m);
    println!("SNF of [[2,4,4],[-6,6,12],[10,-4,-16]]: {:?}", s.invariants);
}
