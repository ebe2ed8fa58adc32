//! Stream graph6 input through the counterexample search. Reads the file
//! given on the command line, or the bundled girth-8 cage.

use std::io::BufReader;

use h4graph::audit::{search_counterexamples, AuditConfig};
use h4graph::io::{emit_record_line, Format, GraphStream};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/cages_girth8.g6").into());
    let file = std::fs::File::open(&path).expect("readable input");
    let items = GraphStream::new(&path, BufReader::new(file), Format::Graph6);
    let summary = search_counterexamples(items, &AuditConfig::default(), 0, |rec| println!("{}", emit_record_line(rec)));
    eprintln!("{summary:?}");
}
