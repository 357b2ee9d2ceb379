//! Structural constructions connecting symbolic powers of cover ideals to
//! squarefree combinatorics: polarization, the layered graph `G_k`, the
//! explicit induced matching inside `G_k` attached to an ordered matching,
//! and the embedding of `G_k` into `G_{k+1}` as an induced subgraph.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, OrderedMatching};
use crate::ideal::{cover_ideal, symbolic_power, Monomial, MonomialIdeal};

/// Rendered name of the level-`l` copy of a variable. The varmap returned by
/// [`polarize`] is authoritative; this rendering is cosmetic.
pub fn layer_label(base: &str, level: u32) -> String {
    format!("{base}#{level}")
}

/// Result of polarizing a monomial ideal: a squarefree ideal over leveled
/// copies of the original variables, plus the map back.
#[derive(Debug, Clone)]
pub struct PolarizationResult {
    pub ideal: MonomialIdeal,
    pub base_variables: Vec<String>,
    /// new variable -> (base variable, level), level starting at 1
    pub varmap: BTreeMap<String, (String, u32)>,
}

/// Polarization: the generator `prod x_i^{a_i}` becomes
/// `prod_i prod_{l<=a_i} x_{i,l}`. The number of levels per variable is its
/// maximum exponent across the minimal generators; the zero ideal polarizes
/// to the zero ideal over an empty ambient.
pub fn polarize(input: &MonomialIdeal) -> PolarizationResult {
    let caps = input.max_exponents();
    let mut vars: Vec<String> = Vec::new();
    let mut varmap = BTreeMap::new();
    // position of (base index, level) in the new ambient
    let mut pos: BTreeMap<(usize, u32), usize> = BTreeMap::new();
    for (i, &cap) in caps.iter().enumerate() {
        for l in 1..=cap {
            let name = layer_label(&input.variables()[i], l);
            pos.insert((i, l), vars.len());
            varmap.insert(name.clone(), (input.variables()[i].clone(), l));
            vars.push(name);
        }
    }
    let gens: Vec<Monomial> = input
        .generators()
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; vars.len()];
            for (i, &e) in g.exponents().iter().enumerate() {
                for l in 1..=e {
                    exps[pos[&(i, l)]] = 1;
                }
            }
            Monomial::new(exps)
        })
        .collect();
    let count = gens.len();
    let ideal = MonomialIdeal::new(vars, gens);
    debug_assert_eq!(
        ideal.num_generators(),
        count,
        "polarization preserves minimality of the generators"
    );
    PolarizationResult {
        ideal,
        base_variables: input.variables().to_vec(),
        varmap,
    }
}

/// Inverse of [`polarize`] on its image: each level of a base variable
/// contributes one to the exponent.
pub fn depolarize(pol: &PolarizationResult) -> MonomialIdeal {
    let base_index: BTreeMap<&str, usize> = pol
        .base_variables
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let gens = pol
        .ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; pol.base_variables.len()];
            for (j, &e) in g.exponents().iter().enumerate() {
                if e > 0 {
                    let (base, _) = &pol.varmap[&pol.ideal.variables()[j]];
                    exps[base_index[base.as_str()]] += e;
                }
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(pol.base_variables.clone(), gens)
}

/// The layered graph `G_k` on `k` copies of each vertex.
#[derive(Debug, Clone)]
pub struct LayeredGraph {
    pub base: Graph,
    pub levels: u32,
    pub graph: Graph,
}

impl LayeredGraph {
    /// Index of the level-`p` copy of base vertex `i` in the layered graph's
    /// vertex order (base-major).
    pub fn vertex(&self, base: usize, level: u32) -> usize {
        base * self.levels as usize + (level as usize - 1)
    }

    pub fn label(&self, base: usize, level: u32) -> String {
        layer_label(self.base.label(base), level)
    }
}

/// Builds `G_k`: vertices `x_{i,p}` for `1 <= p <= k` in base-major order,
/// edges between copies of adjacent base vertices whose levels satisfy
/// `p + q <= k + 1`.
pub fn build_gk(g: &Graph, k: u32) -> Result<LayeredGraph> {
    if k < 1 {
        return Err(Error::InvalidArgument("layer count must be at least 1".into()));
    }
    let n = g.n();
    let total = n * k as usize;
    if total > crate::graph::MAX_VERTICES {
        return Err(Error::GuardExceeded {
            what: "layered vertex count",
            limit: crate::graph::MAX_VERTICES,
            actual: total,
        });
    }
    let mut labels = Vec::with_capacity(total);
    for i in 0..n {
        for p in 1..=k {
            labels.push(layer_label(g.label(i), p));
        }
    }
    let mut edges: Vec<(String, String)> = Vec::new();
    for &(i, j) in g.edges() {
        for p in 1..=k {
            for q in 1..=k {
                if p + q <= k + 1 {
                    edges.push((layer_label(g.label(i), p), layer_label(g.label(j), q)));
                }
            }
        }
    }
    Ok(LayeredGraph {
        base: g.clone(),
        levels: k,
        graph: Graph::new(labels, &edges)?,
    })
}

/// Verifies that the polarization of `J(G)^(k)` is the cover ideal of `G_k`,
/// both sides computed independently and compared over the layered ambient.
pub fn check_polarization_is_cover_ideal(g: &Graph, k: u32) -> Result<bool> {
    let gk = build_gk(g, k)?;
    let target = cover_ideal(&gk.graph);
    let pol = polarize(&symbolic_power(g, k)?);
    // The polarized ambient only has levels for variables that occur; padding
    // to the full layered ambient makes the comparison exact.
    let aligned = pol.ideal.with_ambient(gk.graph.labels().to_vec())?;
    Ok(aligned == target)
}

/// The explicit induced matching of `G_k` attached to an ordered matching
/// `{(a_i, b_i)}` of size `t`: the edges `{a_i at level t+1-i, b_i at level
/// k+i-t}`. Requires `k >= 2t - 1`; the returned edges are re-validated as an
/// induced matching of `G_k` by the generic checker.
pub fn induced_matching_witness(
    g: &Graph,
    matching: &OrderedMatching,
    k: u32,
) -> Result<Vec<(String, String)>> {
    matching.validate(g)?;
    let t = matching.len() as u32;
    if k < 2 * t - 1 {
        return Err(Error::InvalidArgument(format!(
            "layer count {k} is below the threshold {} for a matching of size {t}",
            2 * t - 1
        )));
    }
    let gk = build_gk(g, k)?;
    let edges: Vec<(String, String)> = matching
        .pairs()
        .iter()
        .enumerate()
        .map(|(idx, (a, b))| {
            let i = idx as u32 + 1;
            (layer_label(a, t + 1 - i), layer_label(b, k + i - t))
        })
        .collect();
    if !gk.graph.is_induced_matching(&edges)? {
        return Err(Error::InvalidArgument(
            "constructed edge set failed induced-matching validation".into(),
        ));
    }
    Ok(edges)
}

/// The vertex map embedding `G_k` into `G_{k+1}` minus the middle layer.
#[derive(Debug, Clone)]
pub struct Embedding {
    /// level in `G_k` -> level in `G_{k+1}`: identity up to the split point,
    /// shifted by one above it
    pub vertex_map: Vec<(String, String)>,
    /// the removed layer `W` of `G_{k+1}`
    pub removed: Vec<String>,
    /// adjacency and non-adjacency both preserved, and the image is exactly
    /// `V(G_{k+1}) \ W`
    pub is_isomorphism: bool,
}

/// Builds the embedding `G_k -> G_{k+1} \ W` with
/// `W = {x_{i, floor((k+1)/2) + 1}}` and checks edge-by-edge, in both
/// directions, that it is an isomorphism onto the induced subgraph.
pub fn embed_gk(g: &Graph, k: u32) -> Result<Embedding> {
    if k < 1 {
        return Err(Error::InvalidArgument("layer count must be at least 1".into()));
    }
    let gk = build_gk(g, k)?;
    let gk1 = build_gk(g, k + 1)?;
    let split = (k + 1) / 2;
    let map_level = |j: u32| if j <= split { j } else { j + 1 };

    let mut vertex_map = Vec::new();
    let mut image_indices = Vec::new();
    for i in 0..g.n() {
        for p in 1..=k {
            let from = gk.label(i, p);
            let to = gk1.label(i, map_level(p));
            image_indices.push((gk.vertex(i, p), gk1.graph.vertex_index(&to)?));
            vertex_map.push((from, to));
        }
    }
    let removed: Vec<String> = (0..g.n()).map(|i| gk1.label(i, split + 1)).collect();

    // image must be exactly the complement of W
    let mut image: Vec<usize> = image_indices.iter().map(|&(_, v)| v).collect();
    image.sort_unstable();
    let mut complement: Vec<usize> = (0..gk1.graph.n())
        .filter(|&v| !removed.contains(&gk1.graph.label(v).to_string()))
        .collect();
    complement.sort_unstable();
    let onto = image == complement;

    let mut preserves = true;
    for (a, &(ua, va)) in image_indices.iter().enumerate() {
        for &(ub, vb) in image_indices.iter().skip(a + 1) {
            if gk.graph.has_edge(ua, ub) != gk1.graph.has_edge(va, vb) {
                preserves = false;
            }
        }
    }

    Ok(Embedding {
        vertex_map,
        removed,
        is_isomorphism: onto && preserves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            vars(n),
            gens.iter().map(|g| Monomial::new(g.to_vec())).collect(),
        )
    }

    #[test]
    fn polarize_symbolic_square_of_p3() {
        // (x2^2, x1x2x3, x1^2x3^2) -> (x2#1 x2#2, x1#1 x2#1 x3#1, x1#1 x1#2 x3#1 x3#2)
        let i = ideal(3, &[&[0, 2, 0], &[1, 1, 1], &[2, 0, 2]]);
        let pol = polarize(&i);
        assert!(pol.ideal.is_squarefree());
        assert_eq!(
            pol.ideal.variables(),
            &["x1#1", "x1#2", "x2#1", "x2#2", "x3#1", "x3#2"]
        );
        let rendered: Vec<String> = pol
            .ideal
            .generators()
            .iter()
            .map(|g| pol.ideal.format_monomial(g))
            .collect();
        assert!(rendered.contains(&"x2#1*x2#2".to_string()));
        assert!(rendered.contains(&"x1#1*x2#1*x3#1".to_string()));
        assert!(rendered.contains(&"x1#1*x1#2*x3#1*x3#2".to_string()));
        assert_eq!(depolarize(&pol), i);
    }

    #[test]
    fn polarize_squarefree_is_relabeling() {
        let i = ideal(3, &[&[0, 1, 0], &[1, 0, 1]]);
        let pol = polarize(&i);
        assert_eq!(pol.ideal.variables(), &["x1#1", "x2#1", "x3#1"]);
        assert_eq!(pol.ideal.num_generators(), 2);
        assert_eq!(depolarize(&pol), i);
    }

    #[test]
    fn polarize_single_power() {
        let i = ideal(1, &[&[2]]);
        let pol = polarize(&i);
        assert_eq!(pol.ideal.variables(), &["x1#1", "x1#2"]);
        assert_eq!(
            pol.ideal.generators(),
            &[Monomial::new(vec![1, 1])]
        );
    }

    #[test]
    fn polarize_zero_ideal() {
        let z = MonomialIdeal::zero(vars(2));
        let pol = polarize(&z);
        assert!(pol.ideal.is_zero());
        assert!(pol.ideal.variables().is_empty());
    }

    #[test]
    fn build_gk_k2_edges() {
        // levels with p + q <= 3: (1,1), (1,2), (2,1)
        let k2 = Graph::complete(2).unwrap();
        let gk = build_gk(&k2, 2).unwrap();
        assert_eq!(gk.graph.n(), 4);
        let mut edges = gk.graph.edge_labels();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                ("x1#1".to_string(), "x2#1".to_string()),
                ("x1#1".to_string(), "x2#2".to_string()),
                ("x1#2".to_string(), "x2#1".to_string()),
            ]
        );
    }

    #[test]
    fn build_g1_is_relabeling() {
        let p3 = Graph::path(3).unwrap();
        let g1 = build_gk(&p3, 1).unwrap();
        assert_eq!(g1.graph.n(), 3);
        assert_eq!(g1.graph.edge_count(), 2);
        assert!(build_gk(&p3, 0).is_err());
    }

    #[test]
    fn build_gk_p3_k2() {
        let p3 = Graph::path(3).unwrap();
        let gk = build_gk(&p3, 2).unwrap();
        assert_eq!(gk.graph.n(), 6);
        // each base edge contributes (1,1), (1,2), (2,1)
        assert_eq!(gk.graph.edge_count(), 6);
    }

    #[test]
    fn polarization_cover_ideal_identity() {
        for (g, kmax) in [
            (Graph::complete(2).unwrap(), 4),
            (Graph::path(3).unwrap(), 4),
            (Graph::complete(3).unwrap(), 3),
            (Graph::path(4).unwrap(), 3),
            (Graph::star(4).unwrap(), 3),
        ] {
            for k in 1..=kmax {
                assert!(
                    check_polarization_is_cover_ideal(&g, k).unwrap(),
                    "identity fails for {g} k={k}"
                );
            }
        }
    }

    #[test]
    fn witness_k2() {
        let k2 = Graph::complete(2).unwrap();
        let m = k2.ordered_matching_number().1.unwrap();
        let w = induced_matching_witness(&k2, &m, 1).unwrap();
        assert_eq!(w, vec![("x1#1".to_string(), "x2#1".to_string())]);
    }

    #[test]
    fn witness_p4_k3() {
        let p4 = Graph::path(4).unwrap();
        let (nu, m) = p4.ordered_matching_number();
        assert_eq!(nu, 2);
        let m = m.unwrap();
        // threshold k >= 2t - 1 = 3
        assert!(induced_matching_witness(&p4, &m, 2).is_err());
        let w = induced_matching_witness(&p4, &m, 3).unwrap();
        // witness (x1,x2),(x4,x3): levels t+1-i for a_i, k+i-t for b_i
        assert_eq!(
            w,
            vec![
                ("x1#2".to_string(), "x2#2".to_string()),
                ("x4#1".to_string(), "x3#3".to_string()),
            ]
        );
        let gk = build_gk(&p4, 3).unwrap();
        assert!(gk.graph.is_induced_matching(&w).unwrap());
    }

    #[test]
    fn witness_validates_for_corpus() {
        for g in [
            Graph::path(5).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::star(4).unwrap(),
        ] {
            let (nu, m) = g.ordered_matching_number();
            let m = m.unwrap();
            for k in [2 * nu as u32 - 1, 2 * nu as u32] {
                let w = induced_matching_witness(&g, &m, k).unwrap();
                assert_eq!(w.len(), nu);
            }
        }
    }

    #[test]
    fn embed_examples() {
        for (g, k) in [
            (Graph::complete(2).unwrap(), 1),
            (Graph::complete(2).unwrap(), 3),
            (Graph::path(3).unwrap(), 2),
        ] {
            let e = embed_gk(&g, k).unwrap();
            assert!(e.is_isomorphism, "embedding fails for {g} k={k}");
            assert_eq!(e.removed.len(), g.n());
        }
    }

    #[test]
    fn embed_k2_level_map() {
        let e = embed_gk(&Graph::complete(2).unwrap(), 1).unwrap();
        // W is the second layer of G_2
        assert_eq!(e.removed, vec!["x1#2".to_string(), "x2#2".to_string()]);
        assert_eq!(
            e.vertex_map,
            vec![
                ("x1#1".to_string(), "x1#1".to_string()),
                ("x2#1".to_string(), "x2#1".to_string()),
            ]
        );
    }
}
