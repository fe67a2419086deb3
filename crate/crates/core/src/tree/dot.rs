use std::fmt::Write;

use crate::tree::rep::Representation;

/// Graphviz text for the host, each vertex labelled with the source and sink
/// subtrees containing it. Numbering is 1-indexed.
pub fn export_dot(rep: &Representation) -> String {
    let mut out = String::from("graph host {\n  node [shape=box];\n");
    for x in 0..rep.host.vertex_count() {
        let mut members: Vec<String> = Vec::new();
        members.extend(
            (0..rep.n())
                .filter(|&v| rep.sources[v].contains(x))
                .map(|v| format!("S{}", v + 1)),
        );
        members.extend(
            (0..rep.n())
                .filter(|&v| rep.sinks[v].contains(x))
                .map(|v| format!("T{}", v + 1)),
        );
        let label = if members.is_empty() {
            format!("{}", x + 1)
        } else {
            format!("{}: {}", x + 1, members.join(" "))
        };
        writeln!(out, "  v{} [label=\"{label}\"];", x + 1).unwrap();
    }
    for (a, b) in rep.host.edges() {
        writeln!(out, "  v{} -- v{};", a + 1, b + 1).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use crate::tree::{star_representation, two_block_spider, HostTree, Subtree};

    #[test]
    fn star_center_lists_all_sources() {
        let rep = star_representation(&Family::Dn(3).digraph());
        let dot = export_dot(rep.as_ref());
        assert!(dot.contains("v1 [label=\"1: S1 S2 S3\"]"));
        assert_eq!(dot.matches(" -- ").count(), 3);
    }

    #[test]
    fn single_vertex_host() {
        let rep = Representation {
            host: HostTree::single_vertex(),
            sources: vec![Subtree::empty()],
            sinks: vec![Subtree::empty()],
        };
        let dot = export_dot(&rep);
        assert_eq!(dot.matches("[label=").count(), 1);
        assert!(!dot.contains("--"));
    }

    #[test]
    fn spider_has_center_plus_two_per_leg() {
        let dot = export_dot(&two_block_spider(3));
        assert_eq!(dot.matches("[label=").count(), 7);
        assert_eq!(export_dot(&two_block_spider(3)), dot);
    }
}
