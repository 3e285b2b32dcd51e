//! Reproduces the classification table row by row (D, H1, parity).
//!
//!     cargo run --release --example table [ROW]

use isoprod::catalog::reproduce_row;

fn main() {
    let rows: Vec<usize> = match std::env::args().nth(1) {
        Some(k) => vec![k.parse().expect("row number")],
        None => (1..=12).collect(),
    };
    let mut all = true;
    for k in rows {
        let t = std::time::Instant::now();
        match reproduce_row(k) {
            Ok(r) => {
                all &= r.all_match();
                print!("{r}");
                eprintln!("  ({:.2?})", t.elapsed());
            }
            Err(e) => {
                all = false;
                println!("row {k}: error: {e}");
            }
        }
    }
    std::process::exit(if all { 0 } else { 1 });
}
