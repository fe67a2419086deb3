use proptest::prelude::*;

use leafage::cert::{verify_certificate, Certificate};
use leafage::ferrers::{
    exact_disjoint_ferrers_dimension, exact_ferrers_dimension, ferrers_dim_le2,
};
use leafage::search::{exact_catch_leafage, parameter_chain};
use leafage::tree::{extract_ferrers_partition, star_representation};
use leafage::{Digraph, SearchBudget};

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n)
            .prop_map(move |cells| Digraph::from_fn(n, |u, v| cells[u * n + v]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_text_round_trips(d in digraph(8)) {
        prop_assert_eq!(Digraph::from_matrix_text(&d.to_matrix_text()).unwrap(), d);
    }

    #[test]
    fn chain_holds(d in digraph(4)) {
        let report = parameter_chain(&d, &SearchBudget::default()).unwrap();
        prop_assert!(report.violations().is_empty());
        prop_assert!(!report.is_budget_limited());
    }

    #[test]
    fn bipartite_test_decides_f_at_most_two(d in digraph(5)) {
        let f = exact_ferrers_dimension(&d, d.n()).value().unwrap();
        prop_assert_eq!(ferrers_dim_le2(&d).bipartite, f <= 2);
    }

    #[test]
    fn emitted_certificates_round_trip(d in digraph(5)) {
        let mut certs = vec![Certificate::from_representation(star_representation(&d).as_ref())];
        if let Some(rep) = exact_catch_leafage(&d, &SearchBudget::default()).certificate {
            certs.push(Certificate::from_representation(&rep));
        }
        if let Some(cover) = exact_disjoint_ferrers_dimension(&d, d.n()).cover() {
            certs.push(Certificate::from_cover(cover));
        }
        for cert in certs {
            let back = Certificate::from_json(&cert.to_json()).unwrap();
            prop_assert_eq!(&back, &cert);
            prop_assert!(verify_certificate(&d, &back).unwrap().is_accept());
        }
    }

    #[test]
    fn star_extraction_is_bounded_by_order(d in digraph(6)) {
        let star = star_representation(&d);
        if star.as_ref().leaf_count() >= 2 {
            let cover = extract_ferrers_partition(&d, star.as_ref()).unwrap();
            prop_assert!(cover.len() <= d.n());
            let f_star = exact_disjoint_ferrers_dimension(&d, d.n()).value().unwrap();
            prop_assert!(f_star <= cover.len());
        }
    }
}
