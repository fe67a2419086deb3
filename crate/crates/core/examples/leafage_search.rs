//! Exact leafage l and catch leafage l* by host-tree search, with the
//! budget knobs and the interval returned when the budget runs out.
//!
//! ```bash
//! cargo run -p leafage --example leafage_search
//! ```

use std::time::Instant;

use leafage::search::{exact_catch_leafage, exact_leafage};
use leafage::{Family, SearchBudget};

fn main() {
    let budget = SearchBudget::default();
    for family in [
        Family::Cn(4),
        Family::En(4),
        Family::Fn(5),
        Family::Mkm(2, 3),
    ] {
        let d = family.digraph();
        let start = Instant::now();
        let l = exact_leafage(&d, &budget);
        let l_star = exact_catch_leafage(&d, &budget);
        println!(
            "{family}: l = {l} ({}), l* = {l_star} ({:.2?})",
            l.lower_bound_source,
            start.elapsed()
        );
        if let Some(rep) = &l.certificate {
            println!(
                "  l certificate on {} host vertices",
                rep.host.vertex_count()
            );
        }
    }

    let tight = SearchBudget::default().with_node_limit(50);
    let d = Family::Cn(5).digraph();
    let l = exact_leafage(&d, &tight);
    println!(
        "C_5 with 50 search nodes: l in {l}, budget exhausted: {}",
        l.budget_exhausted
    );
}
