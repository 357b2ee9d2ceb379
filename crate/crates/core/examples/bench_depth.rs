use coverlab_core::config::HomologyOptions;
use coverlab_core::graph::Graph;
use coverlab_core::homological::invariants_of_quotient;
use std::time::Instant;

fn main() {
    let opts = HomologyOptions::default();
    let cases = vec![
        ("C5", Graph::cycle(5).unwrap(), 4u32),
        ("P4", Graph::path(4).unwrap(), 5),
        ("K13", Graph::star(4).unwrap(), 5),
        ("C4", Graph::cycle(4).unwrap(), 5),
        ("P3", Graph::path(3).unwrap(), 6),
        ("K3", Graph::complete(3).unwrap(), 6),
    ];
    for (name, g, k) in cases {
        let t = Instant::now();
        let inv = invariants_of_quotient(&g, k, &opts).unwrap();
        println!(
            "{name} k={k}: depth={:?} pd={:?} reg={:?}  ({:?})",
            inv.depth, inv.pd, inv.reg, t.elapsed()
        );
    }
}
