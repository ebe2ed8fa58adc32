//! 3-colour a random member by decomposition, verify it, and replay the
//! decomposition trace.

use h4graph::cli::member_pool;
use h4graph::coloring::{color3, replay_trace, verify_coloring};
use h4graph::generators::random_glued_member;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_glued_member(&mut rng, &member_pool(4), 4);
    println!("seed {seed}: {} vertices, {} edges", g.n(), g.m());

    let out = color3(&g).expect("members are 3-colourable");
    let check = verify_coloring(&g, &out.coloring).unwrap();
    println!("colours used {}, proper {}", out.coloring.colors_used(), check.proper);
    println!("cuts used: {}", out.trace.cuts().len());
    let replayed = replay_trace(&g, &out.trace).unwrap();
    println!("replayed colouring proper: {}", verify_coloring(&g, &replayed).unwrap().proper);
    println!("{}", serde_json::to_string_pretty(&out.trace).unwrap());
}
