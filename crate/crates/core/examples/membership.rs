//! Classify a few small graphs for l = 4 and print the witness when a graph
//! falls outside the class.

use h4graph::generators::{cycle, petersen, theta};
use h4graph::{is_member, Graph};

fn main() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("theta(4,4,4)", theta(4, 4, 4).unwrap()),
        ("theta(1,7,7)", theta(1, 7, 7).unwrap()),
        ("C8", cycle(8)),
        ("C10", cycle(10)),
        ("petersen", petersen()),
    ];
    for (name, g) in &graphs {
        let v = is_member(g, 4);
        println!("{name:>14}: member={} girth={:?}", v.is_member, v.girth);
        if let Some(w) = &v.witness {
            println!("{:>14}  witness {w:?}", "");
        }
    }
}
