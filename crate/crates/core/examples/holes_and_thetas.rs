//! List the holes of a theta graph and check the ear-length rule on its
//! induced thetas.

use h4graph::cycles::enumerate_holes;
use h4graph::generators::theta;
use h4graph::theta::{check_theta_ear_lemma, find_theta_subgraphs};

fn main() {
    let (a, b, c) = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("ear length"))
        .collect::<Vec<usize>>()
        .get(..3)
        .map_or((3, 5, 6), |e| (e[0], e[1], e[2]));
    let g = theta(a, b, c).expect("valid ears");
    println!("theta({a},{b},{c}): {} vertices, {} edges", g.n(), g.m());
    for h in enumerate_holes(&g, 3, g.n()) {
        println!("  hole of length {:>2}: {:?}", h.len(), h.vertices());
    }
    for t in find_theta_subgraphs(&g, true) {
        let check = check_theta_ear_lemma(&t, 4).unwrap();
        println!(
            "  theta hubs {:?} ears {:?} cycles {:?}: {:?} pass={}",
            t.hubs, check.ears, check.cycle_lengths, check.case, check.pass
        );
    }
}
