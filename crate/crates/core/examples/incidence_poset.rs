//! The poset of predecessor sets: width by matching, a maximum antichain,
//! and the spider catch representation with one leaf per chain.
//!
//! ```bash
//! cargo run -p leafage --example incidence_poset
//! ```

use leafage::poset::{catch_rep_from_chains, incidence_poset, width_and_chains};
use leafage::tree::verify_representation;
use leafage::Family;

fn main() {
    for family in [Family::Fn(6), Family::PathLoops(6), Family::Cn(5)] {
        let d = family.digraph();
        let p = incidence_poset(&d);
        let w = width_and_chains(&p);
        println!("{family}: {} distinct columns, width {}", p.len(), w.width);
        for chain in &w.chains {
            let sets: Vec<String> = chain
                .iter()
                .map(|&e| {
                    let set: Vec<String> = p.elements()[e]
                        .set
                        .iter()
                        .map(|v| (v + 1).to_string())
                        .collect();
                    format!("{{{}}}", set.join(","))
                })
                .collect();
            println!("  chain {}", sets.join(" > "));
        }
        if p.has_unique_maximal() {
            println!("  unique maximal predecessor set");
        }

        if let Ok(catch) = catch_rep_from_chains(&d) {
            let rep = catch.as_ref();
            assert!(verify_representation(&d, rep).unwrap().is_accept());
            println!(
                "  spider: {} host vertices, {} leaves",
                rep.host.vertex_count(),
                rep.leaf_count()
            );
        }
    }
}
