//! Smallest identity orders that force a crossed pair, and the block
//! colorings of `M_{k,m}` that keep `f*` at the number of colors.
//!
//! ```bash
//! cargo run -p leafage --example crossed_pairs          # c = 2, 3
//! cargo run -p leafage --example crossed_pairs -- 4     # also c = 4 (slow)
//! ```

use std::time::Instant;

use leafage::ferrers::{
    block_coloring_labels, block_coloring_mkm, crossed_pair, min_n_forcing_crossed_pair,
    verify_ferrers_cover,
};
use leafage::{Family, Meter};

fn main() {
    let max_colors: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);

    for colors in 2..=max_colors {
        let start = Instant::now();
        let result = min_n_forcing_crossed_pair(colors, 8, &mut Meter::unlimited());
        println!(
            "c={colors}: smallest n forcing a crossed pair = {:?} ({:.2?})",
            result.answer,
            start.elapsed()
        );
        if let Some((n, coloring)) = result.free_partitions.last() {
            assert!(crossed_pair(coloring).is_none());
            println!("  crossed-pair-free partition of I_{n}:");
            for r in 0..*n {
                let row: String = (0..*n)
                    .map(|c| match coloring.color((r, c)) {
                        Some(color) => (b'A' + color as u8) as char,
                        None => '1',
                    })
                    .collect();
                println!("    {row}");
            }
        }
    }

    // Five colors, ten diagonal blocks of order 1: the below-diagonal letters.
    let labels = block_coloring_labels(5, 10, 1).unwrap();
    println!("block coloring of M_(10,1) with 5 colors:");
    for r in 0..10 {
        let row: String = (0..10)
            .map(|c| match labels.color((r, c)) {
                Some(color) => (b'A' + color as u8) as char,
                None => '1',
            })
            .collect();
        println!("    {row}");
    }

    for (colors, k, m) in [(3, 3, 2), (4, 6, 3), (5, 10, 2)] {
        let d = Family::Mkm(k, m).digraph();
        let cover = block_coloring_mkm(colors, k, m).unwrap();
        let verdict = verify_ferrers_cover(&d, &cover).unwrap();
        println!(
            "M_({k},{m}) with {colors} colors: {} parts, {}",
            cover.len(),
            if verdict.is_accept() {
                "verified"
            } else {
                "REJECTED"
            }
        );
    }
}
