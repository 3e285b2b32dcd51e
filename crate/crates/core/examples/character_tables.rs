//! Exact character tables (Dixon's modular method, values in Q(zeta_e)),
//! then a few derived class functions on A5.
//!
//!     cargo run --release --example character_tables [GROUP]

use isoprod::chartab::{character_table, ClassFunction};
use isoprod::permgroup::{construct_group, GroupLabel};

fn main() {
    let label: GroupLabel = std::env::args().nth(1).unwrap_or_else(|| "SL(2,5)".into()).parse().expect("group label");
    let g = construct_group(&label).expect("group");
    let t = character_table(&g).expect("table");
    println!("{}", t.report());

    let a5 = construct_group(&GroupLabel::A5).unwrap();
    let t = character_table(&a5).unwrap();
    let f = t.field();
    let perm = t.permutation_character(&a5).unwrap();
    let v = ClassFunction::new(perm.values().iter().map(|x| f.sub(x, &f.one())).collect());
    let sym = t.sym_square(&v).unwrap();
    println!("A5: permutation character - 1 = {:?}", v.values().iter().map(|x| f.format(x)).collect::<Vec<_>>());
    println!("A5: sym^2 = {:?}, multiplicities {:?}", sym.values().iter().map(|x| f.format(x)).collect::<Vec<_>>(), t.decompose(&sym).unwrap());
}
