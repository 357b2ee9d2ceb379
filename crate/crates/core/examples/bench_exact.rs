use coverlab_core::config::StanleyOptions;
use coverlab_core::graph::Graph;
use coverlab_core::ideal::symbolic_power;
use coverlab_core::stanley::{sdepth_exact, Mode};
use std::time::Instant;

fn main() {
    let opts = StanleyOptions::default();
    let cases: Vec<(&str, Graph, u32)> = vec![
        ("K2", Graph::complete(2).unwrap(), 3),
        ("P3", Graph::path(3).unwrap(), 3),
        ("K3", Graph::complete(3).unwrap(), 3),
        ("P4", Graph::path(4).unwrap(), 3),
        ("C4", Graph::cycle(4).unwrap(), 3),
        ("C5", Graph::cycle(5).unwrap(), 2),
        ("P4", Graph::path(4).unwrap(), 5),
        ("C5", Graph::cycle(5).unwrap(), 4),
    ];
    for (name, g, k) in cases {
        let jk = symbolic_power(&g, k).unwrap();
        let t = Instant::now();
        let qi = sdepth_exact(&jk, Mode::Quotient, &opts).unwrap();
        let tq = t.elapsed();
        let t = Instant::now();
        let ii = sdepth_exact(&jk, Mode::Ideal, &opts).unwrap();
        let ti = t.elapsed();
        println!(
            "{name} k={k}: sdepth(S/J)={:?}[{:?}] ({tq:?});  sdepth(J)={:?}[{:?}] ({ti:?})",
            qi.value, qi.exactness, ii.value, ii.exactness
        );
    }
}
