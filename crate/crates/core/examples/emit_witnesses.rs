//! Regenerates the witness cache for rows 2-12 by fresh search:
//!
//!     cargo run --release --example emit_witnesses > data/witnesses.txt

fn main() {
    print!("{}", isoprod::catalog::emit_witness_file());
}
