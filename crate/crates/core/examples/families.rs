//! Prints every named family at a small order together with its parameter
//! chain.
//!
//! ```bash
//! cargo run -p leafage --example families
//! ```

use leafage::search::parameter_chain;
use leafage::{Family, SearchBudget};

fn main() {
    let families = [
        Family::Dn(3),
        Family::En(4),
        Family::Cn(4),
        Family::Fn(5),
        Family::Mkm(2, 2),
        Family::In(3),
        Family::PathLoops(5),
        Family::Closing5,
    ];
    for family in families {
        let d = family.digraph();
        println!("{family} (n = {}):", d.n());
        for line in d.to_matrix_text().lines() {
            println!("    {line}");
        }
        match parameter_chain(&d, &SearchBudget::default()) {
            Ok(report) => println!("  {report}\n"),
            Err(e) => println!("  chain failed: {e}\n"),
        }
    }
}
