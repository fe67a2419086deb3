//! Seeded random digraphs and a small parameter sweep printed as CSV.
//!
//! ```bash
//! cargo run -p leafage --example random_sweep -- 5 20 7
//! ```

use leafage::sweep::{sweep, to_csv, SweepMode};
use leafage::SearchBudget;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(4) as usize;
    let count = args.get(1).copied().unwrap_or(10) as usize;
    let seed = args.get(2).copied().unwrap_or(7);

    let rows = sweep(
        n,
        SweepMode::Random { count, seed },
        &SearchBudget::default(),
    )
    .unwrap();
    print!("{}", to_csv(&rows));
    let gaps = rows.iter().filter(|r| r.l_star.0 > r.l.1).count();
    eprintln!("{gaps} of {count} digraphs have l < l*");
}
