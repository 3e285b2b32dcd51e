//! End-to-end check of the A5 family [2,5,5] / [3,3,3,3]: tuples, genera,
//! invariants, freeness, canonical class, H1, theta suite, verdict.
//!
//!     cargo run --release --example verify_main

use isoprod::catalog::verify_main_theorem;

fn main() {
    let report = verify_main_theorem();
    println!("{report}");
    std::process::exit(if report.passed() { 0 } else { 1 });
}
