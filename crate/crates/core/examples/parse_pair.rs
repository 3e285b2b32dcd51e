//! Parses and certifies a pair descriptor, reporting positional errors.
//!
//!     cargo run --example parse_pair [PAIR_FILE]

use isoprod::branching::{is_free_unmixed, PairDescriptor};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/main.pair").into());
    let text = std::fs::read_to_string(&path).expect("pair file");
    let d = match PairDescriptor::parse(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{path}: {e}");
            std::process::exit(1);
        }
    };
    print!("{d}");
    match d.certify() {
        Ok(pair) => println!("certified; free: {}", is_free_unmixed(&pair).free),
        Err(e) => {
            eprintln!("{path}: {e}");
            std::process::exit(1);
        }
    }
    let broken = text.replacen("(3,4,5)", "(3,4,9)", 1);
    if let Err(e) = PairDescriptor::parse(&broken) {
        println!("with a bad point: {e}");
    }
}
