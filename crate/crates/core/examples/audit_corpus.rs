//! Run every structural check over the small theta members and a few
//! out-of-class graphs, printing a per-check tally.

use std::collections::BTreeMap;

use h4graph::audit::{audit_graph, AuditConfig};
use h4graph::cli::theta_members;
use h4graph::generators::{cycle, petersen};

fn main() {
    let cfg = AuditConfig::default();
    let mut corpus = theta_members(10, 4);
    corpus.push(cycle(8));
    corpus.push(petersen());
    let mut tally: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    for (i, g) in corpus.iter().enumerate() {
        let rec = audit_graph(g, &format!("g{i}"), &cfg);
        for f in rec.findings {
            let status = if f.informational { format!("{:?} (informational)", f.status) } else { format!("{:?}", f.status) };
            *tally.entry(format!("{:?}", f.lemma)).or_default().entry(status).or_default() += 1;
        }
    }
    for (lemma, counts) in tally {
        println!("{lemma}");
        for (status, n) in counts {
            println!("  {status:<28} {n}");
        }
    }
}
