//! Exact arithmetic on monomial ideals over a named variable list.
//!
//! Ideals are kept in minimal-generator normal form: generators are pairwise
//! incomparable under divisibility and sorted lexicographically on their
//! dense exponent vectors, so equal ideals compare equal structurally. The
//! unit ideal is represented by the single generator 1, the zero ideal by an
//! empty generator set.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::DEFAULT_GENERATOR_CAP;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A monomial as a dense exponent vector over some ambient variable list.
///
/// The ambient is carried by the enclosing [`MonomialIdeal`]; two monomials
/// are only comparable within the same ambient. The derived ordering is
/// lexicographic on the exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// The colon quotient `self : other`, i.e. `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Support as a bitmask (ambient limited to 64 variables).
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }
}

/// Serialized form: variable list plus one `{var: exp}` map per generator,
/// positive exponents only.
#[derive(Serialize, Deserialize)]
struct IdealJson {
    variables: Vec<String>,
    generators: Vec<BTreeMap<String, u32>>,
}

/// A monomial ideal in minimal-generator normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Normalizes an arbitrary generating set: drops generators divisible by
    /// another one and sorts the survivors.
    pub fn new(vars: Vec<String>, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.len(), vars.len(), "generator arity must match ambient");
        }
        MonomialIdeal {
            gens: minimize(gens),
            vars,
        }
    }

    /// The zero ideal (empty generator set).
    pub fn zero(vars: Vec<String>) -> Self {
        MonomialIdeal { gens: Vec::new(), vars }
    }

    /// The unit ideal (single generator 1).
    pub fn unit(vars: Vec<String>) -> Self {
        let n = vars.len();
        MonomialIdeal {
            gens: vec![Monomial::one(n)],
            vars,
        }
    }

    /// Builds an ideal from generators given as `{label: exponent}` maps.
    pub fn from_named_gens(vars: Vec<String>, gens: &[BTreeMap<String, u32>]) -> Result<Self> {
        let index: BTreeMap<&str, usize> = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            let mut exps = vec![0u32; vars.len()];
            for (name, &e) in g {
                let &i = index
                    .get(name.as_str())
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                exps[i] = e;
            }
            out.push(Monomial::new(exps));
        }
        Ok(MonomialIdeal::new(vars, out))
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn variable_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Minimal generators, sorted lexicographically.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Componentwise maximum exponent over the generators (the zero vector
    /// for the zero ideal).
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut g = vec![0u32; self.num_vars()];
        for m in &self.gens {
            for (gi, &e) in g.iter_mut().zip(m.exponents()) {
                *gi = (*gi).max(e);
            }
        }
        g
    }

    /// Membership test: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(m.len(), self.num_vars(), "monomial arity must match ambient");
        let mask = m.support_mask();
        self.gens
            .iter()
            .any(|g| g.support_mask() & !mask == 0 && g.divides(m))
    }

    /// Membership for a monomial given as a `{label: exponent}` map.
    pub fn contains_named(&self, m: &BTreeMap<String, u32>) -> Result<bool> {
        let mut exps = vec![0u32; self.num_vars()];
        for (name, &e) in m {
            exps[self.variable_index(name)?] = e;
        }
        Ok(self.contains(&Monomial::new(exps)))
    }

    /// Intersection via pairwise lcms, minimized. Errors on ambient mismatch
    /// or when the working generator count exceeds `cap`.
    pub fn intersect_capped(&self, other: &MonomialIdeal, cap: usize) -> Result<MonomialIdeal> {
        if self.vars != other.vars {
            return Err(Error::AmbientMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.vars.clone()));
        }
        let pairs = self.gens.len().saturating_mul(other.gens.len());
        if pairs > cap {
            return Err(Error::GuardExceeded {
                what: "generator count",
                limit: cap,
                actual: pairs,
            });
        }
        let mut cand = Vec::with_capacity(pairs);
        for a in &self.gens {
            for b in &other.gens {
                cand.push(a.lcm(b));
            }
        }
        let gens = minimize(cand);
        if gens.len() > cap {
            return Err(Error::GuardExceeded {
                what: "generator count",
                limit: cap,
                actual: gens.len(),
            });
        }
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens,
        })
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.intersect_capped(other, DEFAULT_GENERATOR_CAP)
    }

    /// Intersection of a list of ideals over a common ambient;
    /// the empty intersection is the unit ideal.
    pub fn intersect_all(vars: Vec<String>, ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(vars);
        for i in ideals {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// Product ideal, generated by pairwise products.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.vars != other.vars {
            return Err(Error::AmbientMismatch);
        }
        let mut cand = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cand.push(a.mul(b));
            }
        }
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimize(cand),
        })
    }

    /// Ordinary power by iterated multiplication; `power(0)` is the unit
    /// ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.vars.clone());
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Colon by a monomial: generated by `u : m` over generators `u`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        assert_eq!(m.len(), self.num_vars(), "monomial arity must match ambient");
        MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimize(self.gens.iter().map(|g| g.colon(m)).collect()),
        }
    }

    /// Restriction `I ∩ K[vars \ {x}]`: keeps the generators not divisible by
    /// `x`, over the smaller ambient.
    pub fn restrict(&self, x: &str) -> Result<MonomialIdeal> {
        let i = self.variable_index(x)?;
        let vars: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .filter(|g| g.exponent(i) == 0)
            .map(|g| {
                Monomial::new(
                    g.exponents()
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &e)| e)
                        .collect(),
                )
            })
            .collect();
        Ok(MonomialIdeal { vars, gens })
    }

    /// Re-expresses the ideal over a different ambient list. Every variable
    /// in the support of a generator must occur in `new_vars`; variables only
    /// in `new_vars` get exponent 0.
    pub fn with_ambient(&self, new_vars: Vec<String>) -> Result<MonomialIdeal> {
        let index: BTreeMap<&str, usize> = new_vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match index.get(v.as_str()) {
                Some(&j) => map.push(Some(j)),
                None => {
                    if self.gens.iter().any(|g| g.exponent(i) > 0) {
                        return Err(Error::UnknownVariable(v.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0u32; new_vars.len()];
                for (i, &e) in g.exponents().iter().enumerate() {
                    if e > 0 {
                        exps[map[i].expect("support checked above")] = e;
                    }
                }
                Monomial::new(exps)
            })
            .collect();
        Ok(MonomialIdeal {
            vars: new_vars,
            gens: minimize(gens),
        })
    }

    /// Renames variables through the given map, keeping positions.
    pub fn rename_variables(&self, rename: &BTreeMap<String, String>) -> MonomialIdeal {
        MonomialIdeal {
            vars: self
                .vars
                .iter()
                .map(|v| rename.get(v).cloned().unwrap_or_else(|| v.clone()))
                .collect(),
            gens: self.gens.clone(),
        }
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        format_monomial(&self.vars, m)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let generators = self
            .gens
            .iter()
            .map(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| e > 0)
                    .map(|(i, &e)| (self.vars[i].clone(), e))
                    .collect::<BTreeMap<String, u32>>()
            })
            .collect();
        serde_json::to_value(IdealJson {
            variables: self.vars.clone(),
            generators,
        })
        .expect("ideal serialization cannot fail")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: IdealJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidArgument(format!("malformed ideal JSON: {e}")))?;
        MonomialIdeal::from_named_gens(raw.variables, &raw.generators)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|g| format_monomial(&self.vars, g))
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

pub fn format_monomial(vars: &[String], m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

/// Divisibility-minimal subset of a generating set.
fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // Sorting by degree first means a generator can only be divided by one
    // already kept, so a single pass suffices.
    gens.sort_by(|a, b| (a.degree(), a).cmp(&(b.degree(), b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    let mut kept_masks: Vec<u64> = Vec::new();
    'cand: for m in gens {
        let mask = m.support_mask();
        for (g, gm) in kept.iter().zip(&kept_masks) {
            if gm & !mask == 0 && g.divides(&m) {
                continue 'cand;
            }
        }
        kept_masks.push(mask);
        kept.push(m);
    }
    kept.sort();
    kept
}

/// The edge ideal `I(G)`: one squarefree degree-2 generator per edge.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let vars = g.labels().to_vec();
    let gens = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut exps = vec![0u32; vars.len()];
            exps[u] = 1;
            exps[v] = 1;
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(vars, gens)
}

/// The prime ideal generated by the variables of `mask`.
fn vertex_prime(vars: &[String], mask: u64) -> MonomialIdeal {
    let gens = (0..vars.len())
        .filter(|&i| mask & (1 << i) != 0)
        .map(|i| {
            let mut exps = vec![0u32; vars.len()];
            exps[i] = 1;
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(vars.to_vec(), gens)
}

/// The cover ideal `J(G)`: intersection of the edge primes `(x_u, x_v)`.
/// For an edgeless graph this is the unit ideal.
pub fn cover_ideal(g: &Graph) -> MonomialIdeal {
    symbolic_power(g, 1).expect("k = 1 cannot exceed guards")
}

/// The `k`-th symbolic power of the cover ideal, computed by iterated
/// intersection of the `k`-th powers of the edge primes. `k = 0` gives the
/// unit ideal.
pub fn symbolic_power(g: &Graph, k: u32) -> Result<MonomialIdeal> {
    symbolic_power_capped(g, k, DEFAULT_GENERATOR_CAP)
}

pub fn symbolic_power_capped(g: &Graph, k: u32, cap: usize) -> Result<MonomialIdeal> {
    let vars = g.labels().to_vec();
    if k == 0 || g.is_edgeless() {
        return Ok(MonomialIdeal::unit(vars));
    }
    let mut acc = MonomialIdeal::unit(vars.clone());
    for &(u, v) in g.edges() {
        let prime_power = vertex_prime(&vars, (1 << u) | (1 << v)).power(k)?;
        acc = acc.intersect_capped(&prime_power, cap)?;
    }
    debug_assert!(
        acc.generators().iter().all(|m| symbolic_membership(g, k, m)),
        "every generated element must satisfy the edgewise degree criterion"
    );
    Ok(acc)
}

/// Membership oracle for symbolic powers of cover ideals without generator
/// expansion: `m` lies in the `k`-th symbolic power iff the exponents at the
/// two endpoints of every edge sum to at least `k`.
pub fn symbolic_membership(g: &Graph, k: u32, m: &Monomial) -> bool {
    assert_eq!(m.len(), g.n(), "monomial arity must match the vertex count");
    g.edges()
        .iter()
        .all(|&(u, v)| m.exponent(u) as u64 + m.exponent(v) as u64 >= k as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(vars(n), gens.iter().map(|g| mono(g)).collect())
    }

    #[test]
    fn minimize_examples() {
        // {x1, x1x2} -> {x1}
        let i = ideal(2, &[&[1, 0], &[1, 1]]);
        assert_eq!(i.generators(), &[mono(&[1, 0])]);
        // {x2^2, x1x2x3, x1x2^2} -> {x2^2, x1x2x3}
        let i = ideal(3, &[&[0, 2, 0], &[1, 1, 1], &[1, 2, 0]]);
        assert_eq!(i.generators(), &[mono(&[0, 2, 0]), mono(&[1, 1, 1])]);
        // empty -> zero ideal
        let z = ideal(2, &[]);
        assert!(z.is_zero());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(3, &[&[0, 1, 0], &[1, 0, 1]]); // (x2, x1x3)
        assert!(i.contains(&mono(&[1, 1, 0])));
        assert!(!i.contains(&mono(&[2, 0, 0])));
        let unit = MonomialIdeal::unit(vars(2));
        assert!(unit.contains(&Monomial::one(2)));
    }

    #[test]
    fn contains_named_rejects_unknown_variable() {
        let i = ideal(2, &[&[1, 0]]);
        let mut m = BTreeMap::new();
        m.insert("zz".to_string(), 1);
        assert!(i.contains_named(&m).is_err());
    }

    #[test]
    fn intersect_examples() {
        let a = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]); // (x1, x2)
        let b = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]); // (x2, x3)
        let c = a.intersect(&b).unwrap();
        assert_eq!(c, ideal(3, &[&[0, 1, 0], &[1, 0, 1]])); // (x2, x1x3)

        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(i.intersect(&MonomialIdeal::unit(vars(2))).unwrap(), i);
        let p = ideal(1, &[&[1]]);
        assert_eq!(p.intersect(&p).unwrap(), p);
    }

    #[test]
    fn intersect_rejects_ambient_mismatch() {
        let a = ideal(2, &[&[1, 0]]);
        let b = MonomialIdeal::new(
            vec!["y1".into(), "y2".into()],
            vec![mono(&[1, 0])],
        );
        assert!(matches!(a.intersect(&b), Err(Error::AmbientMismatch)));
    }

    #[test]
    fn multiply_and_power() {
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let sq = m.power(2).unwrap();
        assert_eq!(sq, ideal(2, &[&[0, 2], &[1, 1], &[2, 0]]));
        assert_eq!(m.power(1).unwrap(), m);
        assert!(m.power(0).unwrap().is_unit());

        let jk3 = cover_ideal(&Graph::complete(3).unwrap());
        let sq = jk3.power(2).unwrap();
        // all pairwise products of x1x2, x1x3, x2x3, minimized
        assert_eq!(
            sq,
            ideal(
                3,
                &[&[0, 2, 2], &[1, 1, 2], &[1, 2, 1], &[2, 0, 2], &[2, 1, 1], &[2, 2, 0]]
            )
        );
    }

    #[test]
    fn colon_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]); // (x1^2, x1x2)
        assert_eq!(i.colon(&mono(&[1, 0])), ideal(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(i.colon(&Monomial::one(2)), i);
    }

    #[test]
    fn colon_lemma_instance_p3() {
        // (J(P3)^(3) : x1x2x3) = J(P3)
        let p3 = Graph::path(3).unwrap();
        let j3 = symbolic_power(&p3, 3).unwrap();
        let res = j3.colon(&mono(&[1, 1, 1]));
        assert_eq!(res, cover_ideal(&p3));
    }

    #[test]
    fn restrict_examples() {
        let i = ideal(3, &[&[0, 1, 0], &[1, 0, 1]]); // (x2, x1x3)
        let r = i.restrict("x2").unwrap();
        assert_eq!(r.variables(), &["x1", "x3"]);
        assert_eq!(r.generators(), &[mono(&[1, 1])]);

        let p = ideal(2, &[&[1, 0]]);
        let r = p.restrict("x2").unwrap();
        assert_eq!(r.generators(), &[mono(&[1])]);

        let r = ideal(1, &[&[1]]).restrict("x1").unwrap();
        assert!(r.is_zero());
        assert!(ideal(1, &[&[1]]).restrict("zz").is_err());
    }

    #[test]
    fn edge_and_cover_ideals() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(edge_ideal(&p3), ideal(3, &[&[0, 1, 1], &[1, 1, 0]]));
        assert_eq!(cover_ideal(&p3), ideal(3, &[&[0, 1, 0], &[1, 0, 1]]));

        let k2 = Graph::complete(2).unwrap();
        assert_eq!(cover_ideal(&k2), ideal(2, &[&[0, 1], &[1, 0]]));

        let k3 = Graph::complete(3).unwrap();
        assert_eq!(edge_ideal(&k3), cover_ideal(&k3));

        let edgeless = Graph::new(vec!["a".into()], &[] as &[(&str, &str)]).unwrap();
        assert!(edge_ideal(&edgeless).is_zero());
        assert!(cover_ideal(&edgeless).is_unit());
    }

    #[test]
    fn cover_ideal_matches_minimal_covers() {
        for g in [
            Graph::path(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::star(4).unwrap(),
            Graph::complete(4).unwrap(),
        ] {
            let j = cover_ideal(&g);
            let from_covers: Vec<Monomial> = g
                .minimal_vertex_covers()
                .into_iter()
                .map(|c| {
                    let mut exps = vec![0u32; g.n()];
                    for l in c {
                        exps[g.vertex_index(&l).unwrap()] = 1;
                    }
                    Monomial::new(exps)
                })
                .collect();
            assert_eq!(j, MonomialIdeal::new(g.labels().to_vec(), from_covers));
        }
    }

    #[test]
    fn symbolic_power_examples() {
        let p3 = Graph::path(3).unwrap();
        let j2 = symbolic_power(&p3, 2).unwrap();
        assert_eq!(j2, ideal(3, &[&[0, 2, 0], &[1, 1, 1], &[2, 0, 2]]));
        assert_eq!(symbolic_power(&p3, 1).unwrap(), cover_ideal(&p3));
        assert!(symbolic_power(&p3, 0).unwrap().is_unit());

        // x1x2x3 lies in J(K3)^(2) but not in J(K3)^2
        let k3 = Graph::complete(3).unwrap();
        let j2 = symbolic_power(&k3, 2).unwrap();
        let m = mono(&[1, 1, 1]);
        assert!(j2.contains(&m));
        assert!(!cover_ideal(&k3).power(2).unwrap().contains(&m));
    }

    #[test]
    fn symbolic_membership_oracle() {
        let k3 = Graph::complete(3).unwrap();
        assert!(symbolic_membership(&k3, 2, &mono(&[1, 1, 1])));
        assert!(!symbolic_membership(&k3, 3, &mono(&[1, 1, 1])));
    }

    #[test]
    fn with_ambient_roundtrip() {
        let i = ideal(2, &[&[1, 1]]);
        let wide = i
            .with_ambient(vec!["x0".into(), "x1".into(), "x2".into()])
            .unwrap();
        assert_eq!(wide.generators(), &[mono(&[0, 1, 1])]);
        assert!(i.with_ambient(vec!["x1".into()]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let p3 = Graph::path(3).unwrap();
        let j = symbolic_power(&p3, 2).unwrap();
        let v = j.to_json();
        assert_eq!(MonomialIdeal::from_json(&v).unwrap(), j);
    }

    #[test]
    fn display_forms() {
        assert_eq!(ideal(2, &[]).to_string(), "(0)");
        assert_eq!(MonomialIdeal::unit(vars(2)).to_string(), "(1)");
        assert_eq!(
            ideal(3, &[&[0, 2, 0], &[1, 1, 1]]).to_string(),
            "(x2^2, x1*x2*x3)"
        );
    }
}
