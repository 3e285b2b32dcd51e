//! Parity verdict with its evidence chain, and the theta-suite negative
//! controls.
//!
//!     cargo run --release --example parity [PAIR_FILE]

use isoprod::branching::PairDescriptor;
use isoprod::fundgroup::h1_surface;
use isoprod::parity::{parity_verdict, run_theta_suite, ThetaSuiteInputs};
use isoprod::permgroup::{construct_group, GroupLabel};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/main.pair").into());
    let pair = PairDescriptor::parse(&std::fs::read_to_string(&path).expect("pair file")).expect("descriptor").certify().expect("certified pair");
    let h1 = h1_surface(&pair).expect("finite H1");
    println!("{}\n", parity_verdict(&pair, &h1, None));

    let mut tampered = ThetaSuiteInputs::standard().unwrap();
    tampered.replace_chi_v_by_degree = Some(5);
    println!("degree-5 in place of V: {:?}", run_theta_suite(&tampered).unwrap_err());
    let mut tampered = ThetaSuiteInputs::standard().unwrap();
    tampered.extension = construct_group(&GroupLabel::S5).unwrap();
    println!("S5 in place of SL(2,5): {:?}", run_theta_suite(&tampered).unwrap_err());
}
