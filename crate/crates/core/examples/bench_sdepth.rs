use coverlab_core::config::StanleyOptions;
use coverlab_core::graph::Graph;
use coverlab_core::ideal::symbolic_power;
use coverlab_core::stanley::{sdepth_at_least, Mode};
use std::time::Instant;

fn main() {
    let opts = StanleyOptions::default();
    // (name, graph, k, nu_o)
    let cases: Vec<(&str, Graph, u32, u32)> = vec![
        ("P3", Graph::path(3).unwrap(), 6, 1),
        ("K3", Graph::complete(3).unwrap(), 6, 1),
        ("P4", Graph::path(4).unwrap(), 5, 2),
        ("C4", Graph::cycle(4).unwrap(), 5, 1),
        ("K13", Graph::star(4).unwrap(), 5, 1),
        ("C5", Graph::cycle(5).unwrap(), 3, 2),
        ("C5", Graph::cycle(5).unwrap(), 4, 2),
    ];
    for (name, g, k, nu) in cases {
        let n = g.n() as u32;
        let jk = symbolic_power(&g, k).unwrap();
        let t = Instant::now();
        let qi = sdepth_at_least(&jk, Mode::Quotient, n - nu - 1, &opts).unwrap();
        let tq = t.elapsed();
        let t = Instant::now();
        let ii = sdepth_at_least(&jk, Mode::Ideal, n - nu, &opts).unwrap();
        let ti = t.elapsed();
        println!("{name} k={k}: quotient>= {} -> {qi:?} ({tq:?}); ideal>= {} -> {ii:?} ({ti:?})",
                 n - nu - 1, n - nu);
    }
}
