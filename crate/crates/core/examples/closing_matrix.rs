//! The 5 x 5 closing matrix: its catch leafage and the branch points and
//! host sizes of its 4-leaf catch representations.
//!
//! ```bash
//! cargo run -p leafage --example closing_matrix
//! ```

use leafage::search::{exact_catch_leafage, min_branch_points_and_vertices};
use leafage::tree::export_dot;
use leafage::{Family, SearchBudget};

fn main() {
    let d = Family::Closing5.digraph();
    print!("{}", d.to_matrix_text());
    let budget = SearchBudget::default();
    println!("l* = {}", exact_catch_leafage(&d, &budget));

    let min = min_branch_points_and_vertices(&d, 4, &budget).unwrap();
    println!(
        "4 leaves: at least {} branch point(s), at least {} host vertices",
        min.branch_points, min.vertices
    );
    println!(
        "feasible (vertices, branch points): {:?}",
        min.feasible_hosts
    );
    print!("{}", export_dot(&min.witness));
}
