//! JSON certificates: write a representation and a Ferrers cover, read
//! them back, verify them and catch a tampered one.
//!
//! ```bash
//! cargo run -p leafage --example certificates
//! ```

use leafage::cert::{verify_certificate, Certificate};
use leafage::ferrers::exact_disjoint_ferrers_dimension;
use leafage::tree::two_block_spider;
use leafage::Family;

fn main() {
    let d = Family::Mkm(2, 3).digraph();
    let cert = Certificate::from_representation(&two_block_spider(3));
    let text = cert.to_json();
    println!("{text}");
    let back = Certificate::from_json(&text).unwrap();
    println!("spider: {:?}", verify_certificate(&d, &back).unwrap());

    let cover = exact_disjoint_ferrers_dimension(&d, 6)
        .cover()
        .unwrap()
        .clone();
    let cover_cert = Certificate::from_cover(&cover);
    println!(
        "cover with {} parts: {:?}",
        cover.len(),
        verify_certificate(&d, &cover_cert).unwrap()
    );

    let mut tampered = cert.to_representation().unwrap();
    tampered.sinks.swap(0, 3);
    let verdict = verify_certificate(&d, &Certificate::from_representation(&tampered)).unwrap();
    println!(
        "tampered: {}",
        verdict
            .violation()
            .map_or("accepted?".into(), |v| v.clone())
    );
}
