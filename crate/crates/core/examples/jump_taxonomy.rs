//! Enumerate and classify the jumps over every even hole of a glued member.

use std::collections::BTreeMap;

use h4graph::cycles::enumerate_holes;
use h4graph::generators::{glue_at_edge, theta};
use h4graph::jumps::enumerate_jumps;

fn main() {
    let g = glue_at_edge(&theta(4, 4, 4).unwrap(), (0, 2), &theta(2, 6, 7).unwrap(), (0, 2));
    println!("{} vertices, {} edges", g.n(), g.m());
    for hole in enumerate_holes(&g, 4, g.n()).iter().filter(|h| h.is_even()) {
        let jumps = enumerate_jumps(&g, hole).unwrap();
        let mut tally: BTreeMap<String, usize> = BTreeMap::new();
        for j in &jumps {
            let name = format!("{:?}", j.kind);
            let name = name.split([' ', '{']).next().unwrap().to_string();
            *tally.entry(name).or_default() += 1;
        }
        println!("hole {:?}", hole.vertices());
        for (kind, count) in tally {
            println!("  {kind:<22} {count}");
        }
        for j in jumps.iter().filter(|j| j.is_short()).take(3) {
            println!("  e.g. short jump {:?} type {:?}", j.path, j.short_type);
        }
    }
}
