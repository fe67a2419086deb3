//! Ferrers dimension f and its disjoint variant f*: the bipartite test on
//! the conflict graph, then the exact solvers with verified covers.
//!
//! ```bash
//! cargo run -p leafage --example ferrers_dimension
//! ```

use leafage::ferrers::{
    conflict_graph, exact_disjoint_ferrers_dimension, exact_ferrers_dimension, ferrers_dim_le2,
    verify_ferrers_cover, Le2Witness,
};
use leafage::Family;

fn main() {
    for family in [
        Family::Cn(5),
        Family::Mkm(2, 3),
        Family::En(5),
        Family::Dn(4),
    ] {
        let d = family.digraph();
        let h = conflict_graph(&d);
        println!(
            "{family}: {} zeros, conflict graph with {} edges",
            h.vertex_count(),
            h.edge_count()
        );

        let test = ferrers_dim_le2(&d);
        match &test.witness {
            Le2Witness::TwoColoring(_) => println!("  f <= 2 (conflict graph is bipartite)"),
            Le2Witness::OddCycle(cycle) => println!("  f > 2, odd cycle of length {}", cycle.len()),
        }

        let n = d.n();
        let f = exact_ferrers_dimension(&d, n);
        let f_star = exact_disjoint_ferrers_dimension(&d, n);
        println!("  f = {:?}, f* = {:?}", f.value(), f_star.value());
        if let Some(cover) = f_star.cover() {
            assert!(verify_ferrers_cover(&d, cover).unwrap().is_accept());
            for (i, part) in cover.parts.iter().enumerate() {
                let cells: Vec<String> = part
                    .iter()
                    .map(|(r, c)| format!("{}{}", r + 1, c + 1))
                    .collect();
                println!("    part {}: {}", i + 1, cells.join(" "));
            }
        }
    }
}
