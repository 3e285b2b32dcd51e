//! Generating vectors of a signature, genus by Riemann-Hurwitz and by
//! counting sheets, and the first free pair for two signatures.
//!
//!     cargo run --release --example generating_vectors [GROUP SIG1 SIG2]

use std::sync::Arc;

use isoprod::branching::{enumerate_generating_vectors, find_free_pair, genus_from_signature, sheet_count_genus, surface_invariants, Signature};
use isoprod::permgroup::{construct_group, GroupLabel};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (label, s1, s2) = match args.as_slice() {
        [g, a, b] => (g.clone(), a.clone(), b.clone()),
        _ => ("A5".into(), "[2,5,5]".into(), "[3,3,3,3]".into()),
    };
    let label: GroupLabel = label.parse().expect("group label");
    let g = Arc::new(construct_group(&label).expect("group"));
    let (s1, s2): (Signature, Signature) = (s1.parse().expect("signature"), s2.parse().expect("signature"));
    for sig in [&s1, &s2] {
        let found = enumerate_generating_vectors(&g, sig, 3);
        println!("{label} {sig}: genus {:?}", genus_from_signature(g.order() as u64, sig));
        for v in &found {
            println!("  {}  (sheet-count genus {})", v.to_cycle_string(), sheet_count_genus(v));
        }
    }
    match find_free_pair(&g, &s1, &s2) {
        Some(pair) => {
            println!("free pair:\n  {}\n  {}", pair.gv1.to_cycle_string(), pair.gv2.to_cycle_string());
            println!("{:?}", surface_invariants(&pair));
        }
        None => println!("no free pair"),
    }
}
