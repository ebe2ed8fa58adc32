//! Encode a few graphs to graph6 and edge lists, then decode them again.

use h4graph::generators::{heawood, petersen, theta};
use h4graph::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};

fn main() {
    for (name, g) in [("petersen", petersen()), ("heawood", heawood()), ("theta(3,5,6)", theta(3, 5, 6).unwrap())] {
        let g6 = write_graph6(&g);
        assert_eq!(parse_graph6(&g6).unwrap(), g);
        let edges = write_edge_list(&g);
        assert_eq!(parse_edge_list(&edges).unwrap(), g);
        println!("{name:<13} {g6}");
        println!("{}", edges.lines().take(3).collect::<Vec<_>>().join(" | "));
    }
}
