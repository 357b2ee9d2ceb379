//! Property tests on randomly generated small graphs and ideals.

use std::collections::BTreeMap;

use proptest::prelude::*;

use coverlab_core::config::StanleyOptions;
use coverlab_core::construction::{depolarize, polarize};
use coverlab_core::graph::Graph;
use coverlab_core::ideal::{symbolic_power, Monomial, MonomialIdeal};
use coverlab_core::stanley::{sdepth_exact, CharacteristicPoset, Mode};

/// Random graph on up to 6 vertices given by a lower-triangular edge bitmap.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=6, any::<u16>()).prop_map(|(n, bits)| {
        let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let mut edges = Vec::new();
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits >> (idx % 16) & 1 == 1 {
                    edges.push((labels[i].clone(), labels[j].clone()));
                }
                idx += 1;
            }
        }
        Graph::new(labels, &edges).unwrap()
    })
}

/// Random monomial ideal: up to 4 generators in up to 4 variables, exponents
/// at most 3.
fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        let gens = proptest::collection::vec(
            proptest::collection::vec(0u32..=3, n),
            0..=4,
        );
        gens.prop_map(move |gs| {
            MonomialIdeal::new(
                (1..=n).map(|i| format!("x{i}")).collect(),
                gs.into_iter().map(Monomial::new).collect(),
            )
        })
    })
}

fn arb_monomial_in(n: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..=4, n).prop_map(Monomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matching_invariant_chain(g in arb_graph()) {
        let r = g.matching_report();
        prop_assert!(r.induced_matching_number <= r.ordered_matching_number);
        prop_assert!(r.ordered_matching_number <= r.matching_number);
        if let Some(w) = &r.ordered_witness {
            prop_assert!(w.validate(&g).is_ok());
        }
        prop_assert!(g.is_matching(&r.matching_witness).unwrap());
        prop_assert!(g.is_induced_matching(&r.induced_witness).unwrap());
    }

    #[test]
    fn covers_cover_and_form_antichain(g in arb_graph()) {
        let covers = g.minimal_vertex_covers();
        for c in &covers {
            let mask: u64 = c.iter().map(|l| 1u64 << g.vertex_index(l).unwrap()).fold(0, |a, b| a | b);
            prop_assert!(g.is_vertex_cover(mask));
        }
        for (i, a) in covers.iter().enumerate() {
            for (j, b) in covers.iter().enumerate() {
                if i != j {
                    prop_assert!(!a.iter().all(|l| b.contains(l)));
                }
            }
        }
    }

    #[test]
    fn deletion_composes(g in arb_graph(), split in any::<u8>()) {
        let n = g.n();
        let a: Vec<String> = (0..n).filter(|&v| split >> (v % 8) & 1 == 1)
            .map(|v| g.label(v).to_string()).collect();
        let b: Vec<String> = (0..n).filter(|&v| split >> (v % 8) & 1 == 0 && v % 2 == 0)
            .map(|v| g.label(v).to_string()).collect();
        let mut both = a.clone();
        both.extend(b.clone());
        let step = g.delete_vertices(&a).unwrap().delete_vertices(&b).unwrap();
        let joint = g.delete_vertices(&both).unwrap();
        prop_assert_eq!(step, joint);
    }

    #[test]
    fn intersection_membership_duality(a in arb_ideal(), gens in proptest::collection::vec(proptest::collection::vec(0u32..=3, 4), 0..=4), m in arb_monomial_in(4)) {
        // reshape the second generating set onto a's ambient
        let n = a.num_vars();
        let b = MonomialIdeal::new(
            a.variables().to_vec(),
            gens.into_iter().map(|g| Monomial::new(g[..n].to_vec())).collect(),
        );
        let m = Monomial::new(m.exponents()[..n].to_vec());
        let both = a.intersect(&b).unwrap();
        prop_assert_eq!(both.contains(&m), a.contains(&m) && b.contains(&m));
    }

    #[test]
    fn colon_membership_adjunction(i in arb_ideal(), m in arb_monomial_in(4), w in arb_monomial_in(4)) {
        let n = i.num_vars();
        let m = Monomial::new(m.exponents()[..n].to_vec());
        let w = Monomial::new(w.exponents()[..n].to_vec());
        let colon = i.colon(&m);
        prop_assert_eq!(colon.contains(&w), i.contains(&w.mul(&m)));
    }

    #[test]
    fn depolarization_roundtrip(i in arb_ideal()) {
        let pol = polarize(&i);
        prop_assert!(pol.ideal.is_squarefree());
        prop_assert_eq!(pol.ideal.num_generators(), i.num_generators());
        prop_assert_eq!(depolarize(&pol), i);
    }

    #[test]
    fn restriction_agrees_on_monomials_avoiding_x(i in arb_ideal(), m in arb_monomial_in(4)) {
        let n = i.num_vars();
        let x = i.variables()[0].clone();
        let restricted = i.restrict(&x).unwrap();
        // monomial avoiding x, expressed over both ambients
        let mut full = m.exponents()[..n].to_vec();
        full[0] = 0;
        let small = Monomial::new(full[1..].to_vec());
        let full = Monomial::new(full);
        prop_assert_eq!(restricted.contains(&small), i.contains(&full));
    }

    #[test]
    fn sdepth_witness_revalidates(g in arb_graph()) {
        prop_assume!(!g.is_edgeless());
        let opts = StanleyOptions::default();
        let j = symbolic_power(&g, 2).unwrap();
        for mode in [Mode::Ideal, Mode::Quotient] {
            let out = sdepth_exact(&j, mode, &opts).unwrap();
            let poset = CharacteristicPoset::build(&j, mode, &opts).unwrap();
            let w = out.witness.expect("nonzero module has a witness");
            prop_assert!(w.validate(&poset).is_ok());
            prop_assert_eq!(w.sdepth_score(&poset), out.value.unwrap());
        }
    }

    #[test]
    fn symbolic_membership_box_scan(g in arb_graph(), k in 1u32..=3) {
        let jk = symbolic_power(&g, k).unwrap();
        // scan the generator-degree box and compare with the edgewise oracle
        let n = g.n();
        let total = (k as usize + 1).pow(n as u32);
        for code in (0..total).step_by(7) {
            let mut exps = Vec::with_capacity(n);
            let mut rest = code;
            for _ in 0..n {
                exps.push((rest % (k as usize + 1)) as u32);
                rest /= k as usize + 1;
            }
            let m = Monomial::new(exps);
            prop_assert_eq!(
                jk.contains(&m),
                coverlab_core::ideal::symbolic_membership(&g, k, &m)
            );
        }
    }

    #[test]
    fn ideal_json_roundtrip(i in arb_ideal()) {
        let v = i.to_json();
        prop_assert_eq!(MonomialIdeal::from_json(&v).unwrap(), i);
    }
}

#[test]
fn named_monomial_membership() {
    let p3 = Graph::path(3).unwrap();
    let j = symbolic_power(&p3, 2).unwrap();
    let mut m = BTreeMap::new();
    m.insert("x2".to_string(), 2u32);
    assert!(j.contains_named(&m).unwrap());
}
