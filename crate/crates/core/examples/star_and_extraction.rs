//! The star representation every digraph has, and the Ferrers partition
//! read back off a representation: one part per leaf at most.
//!
//! ```bash
//! cargo run -p leafage --example star_and_extraction
//! ```

use leafage::ferrers::verify_ferrers_cover;
use leafage::tree::{
    extract_ferrers_partition, helly_point, star_representation, two_block_spider,
};
use leafage::tree::{verify_representation, HellyOutcome};
use leafage::Family;

fn main() {
    let d = Family::Cn(4).digraph();
    let star = star_representation(&d);
    let rep = star.as_ref();
    println!(
        "star for C_4: {} host vertices, {} leaves",
        rep.host.vertex_count(),
        rep.leaf_count()
    );
    assert!(verify_representation(&d, rep).unwrap().is_accept());

    let cover = extract_ferrers_partition(&d, rep).unwrap();
    println!("extracted {} disjoint Ferrers parts", cover.len());
    assert!(verify_ferrers_cover(&d, &cover).unwrap().is_accept());

    match helly_point(&rep.host, &rep.sources).unwrap() {
        HellyOutcome::Common(v) => println!("all source subtrees meet at host vertex {}", v + 1),
        HellyOutcome::Disjoint(i, j) => println!("sources {} and {} are disjoint", i + 1, j + 1),
    }

    // The spider with three legs of length two: three leaves for M_(2,3),
    // which needs three disjoint Ferrers parts.
    let spider = two_block_spider(3);
    let m = Family::Mkm(2, 3).digraph();
    assert!(verify_representation(&m, &spider).unwrap().is_accept());
    let cover = extract_ferrers_partition(&m, &spider).unwrap();
    println!(
        "M_(2,3) spider: {} leaves, {} extracted parts",
        spider.leaf_count(),
        cover.len()
    );
}
