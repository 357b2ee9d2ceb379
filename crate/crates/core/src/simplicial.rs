//! Simplicial complexes on small vertex sets and their reduced homology over
//! the rationals, computed exactly.
//!
//! Faces are bitmasks over at most 64 vertices. Homology dimensions come from
//! the ranks of the boundary matrices of the reduced chain complex (the empty
//! face sits in degree -1). Complexes are first shrunk by elementary
//! collapses, which preserve the homotopy type; the remaining ranks are
//! computed by fraction-free integer elimination, falling back to arbitrary
//! precision when `i128` would overflow.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::config::{CoefficientField, HomologyOptions};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// A simplicial complex as an explicit, subset-closed face list.
///
/// The void complex (no faces at all) is distinct from the complex `{∅}`
/// whose only face is the empty set.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    vertices: usize,
    faces: Vec<u64>,
}

impl SimplicialComplex {
    /// Wraps an already subset-closed face list.
    pub fn from_face_set(vertices: usize, mut faces: Vec<u64>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        debug_assert!(
            {
                let set: std::collections::HashSet<u64> = faces.iter().copied().collect();
                faces.iter().all(|&f| {
                    let mut m = f;
                    let mut ok = true;
                    while m != 0 {
                        let v = m.trailing_zeros();
                        ok &= set.contains(&(f & !(1 << v)));
                        m &= m - 1;
                    }
                    ok
                })
            },
            "face list must be closed under subsets"
        );
        SimplicialComplex { vertices, faces }
    }

    /// Closes a facet list downward.
    pub fn from_facets(vertices: usize, facets: &[u64]) -> Self {
        let mut faces: Vec<u64> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut stack: Vec<u64> = facets.to_vec();
        while let Some(f) = stack.pop() {
            if !seen.insert(f) {
                continue;
            }
            faces.push(f);
            let mut m = f;
            while m != 0 {
                let v = m.trailing_zeros();
                stack.push(f & !(1 << v));
                m &= m - 1;
            }
        }
        faces.sort_unstable();
        SimplicialComplex { vertices, faces }
    }

    /// The void complex.
    pub fn void(vertices: usize) -> Self {
        SimplicialComplex {
            vertices,
            faces: Vec::new(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension of the complex, or `None` when void.
    /// The complex `{∅}` has dimension -1.
    pub fn dim(&self) -> Option<i32> {
        self.faces
            .iter()
            .map(|f| f.count_ones() as i32 - 1)
            .max()
    }

    /// Dimensions of the reduced homology groups over the configured field.
    ///
    /// Entry `d + 1` of the returned vector is `dim H~_d`; index 0 is degree
    /// -1, which is 1 exactly for the complex `{∅}`. The void complex
    /// returns an empty vector.
    pub fn reduced_homology(&self, opts: &HomologyOptions) -> Result<Vec<usize>> {
        if self.vertices > opts.max_complex_vertices {
            return Err(Error::GuardExceeded {
                what: "complex vertex count",
                limit: opts.max_complex_vertices,
                actual: self.vertices,
            });
        }
        if self.is_void() {
            return Ok(Vec::new());
        }
        let top_dim = self.dim().expect("nonvoid") + 1; // report up to original dim
        let collapsed = collapse(&self.faces);
        let dims_len = (top_dim + 2) as usize;
        let mut out = vec![0usize; dims_len];
        if collapsed.is_empty() {
            // Collapsed to nothing: the original was collapsible, homology 0.
            return Ok(out);
        }

        // Group faces by dimension.
        let max_card = collapsed
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap();
        let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); max_card + 1];
        for &f in &collapsed {
            by_dim[f.count_ones() as usize].push(f);
        }
        for level in &mut by_dim {
            level.sort_unstable();
        }
        let index: Vec<HashMap<u64, usize>> = by_dim
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();

        // rank of the boundary map from card-(c) faces to card-(c-1) faces
        let mut ranks = vec![0usize; max_card + 2];
        for c in 1..=max_card {
            if by_dim[c].is_empty() || by_dim[c - 1].is_empty() {
                continue;
            }
            let rows: Vec<Vec<(usize, i64)>> = by_dim[c]
                .iter()
                .map(|&f| {
                    let mut entries = Vec::with_capacity(c);
                    let mut m = f;
                    let mut sign = 1i64;
                    while m != 0 {
                        let v = m.trailing_zeros();
                        let sub = f & !(1u64 << v);
                        if let Some(&col) = index[c - 1].get(&sub) {
                            entries.push((col, sign));
                        }
                        sign = -sign;
                        m &= m - 1;
                    }
                    entries.sort_unstable_by_key(|e| e.0);
                    entries
                })
                .collect();
            ranks[c] = match opts.field {
                CoefficientField::Rational => rank_exact(rows),
                CoefficientField::Prime(p) => rank_mod_p(rows, p),
            };
        }

        for c in 0..=max_card {
            let f_c = by_dim[c].len();
            let h = f_c - ranks[c] - ranks[c + 1];
            // dimension d = c - 1, stored at index d + 1 = c
            out[c] = h;
        }
        Ok(out)
    }
}

/// Faces `W` of the Stanley–Reisner complex of a squarefree ideal: supports
/// whose squarefree monomial avoids the ideal. Rejects non-squarefree input
/// and the unit ideal (whose complex would be void).
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::InvalidArgument(
            "Stanley-Reisner complex requires a squarefree ideal".into(),
        ));
    }
    if ideal.is_unit() {
        return Err(Error::InvalidArgument(
            "Stanley-Reisner complex of the unit ideal is undefined".into(),
        ));
    }
    let n = ideal.num_vars();
    if n > 64 {
        return Err(Error::GuardExceeded {
            what: "complex vertex count",
            limit: 64,
            actual: n,
        });
    }
    let nonfaces: Vec<u64> = ideal.generators().iter().map(|g| g.support_mask()).collect();
    let faces = enumerate_faces(n, &nonfaces);
    Ok(SimplicialComplex {
        vertices: n,
        faces,
    })
}

/// All subsets of `0..n` containing none of the given minimal non-faces.
/// Output-sensitive DFS: supersets of a non-face are pruned wholesale.
pub(crate) fn enumerate_faces(n: usize, nonfaces: &[u64]) -> Vec<u64> {
    enumerate_faces_within(((1u128 << n) - 1) as u64, nonfaces)
}

/// Same, restricted to subsets of `within`.
pub(crate) fn enumerate_faces_within(within: u64, nonfaces: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    // Candidate vertices above the highest set bit keep the DFS canonical.
    fn rec(cur: u64, from: u32, within: u64, nonfaces: &[u64], out: &mut Vec<u64>) {
        out.push(cur);
        let mut rest = within >> from << from;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let next = cur | (1u64 << v);
            if nonfaces
                .iter()
                .any(|&nf| nf & !next == 0 && nf & (1u64 << v) != 0)
            {
                continue;
            }
            rec(next, v + 1, within, nonfaces, out);
        }
    }
    if nonfaces.iter().any(|&nf| nf == 0) {
        return out; // 1 lies in the ideal: void complex
    }
    rec(0, 0, within, nonfaces, &mut out);
    out.sort_unstable();
    out
}

/// Removes free pairs until none remain. A face is free when it has exactly
/// one immediate coface and that coface is maximal; removing the pair is an
/// elementary collapse.
fn collapse(faces: &[u64]) -> Vec<u64> {
    let mut alive: HashMap<u64, bool> = faces.iter().map(|&f| (f, true)).collect();
    let universe: u64 = faces.iter().fold(0, |a, &f| a | f);
    let mut coface_count: HashMap<u64, u32> = faces.iter().map(|&f| (f, 0)).collect();
    for &f in faces {
        let mut m = f;
        while m != 0 {
            let v = m.trailing_zeros();
            *coface_count.get_mut(&(f & !(1u64 << v))).unwrap() += 1;
            m &= m - 1;
        }
    }

    let mut queue: Vec<u64> = faces
        .iter()
        .copied()
        .filter(|f| coface_count[f] == 1)
        .collect();

    while let Some(f) = queue.pop() {
        if !alive[&f] || coface_count[&f] != 1 {
            continue;
        }
        // locate the unique immediate coface
        let mut coface = None;
        let mut m = universe & !f;
        while m != 0 {
            let v = m.trailing_zeros();
            m &= m - 1;
            let c = f | (1u64 << v);
            if alive.get(&c).copied().unwrap_or(false) {
                coface = Some(c);
                break;
            }
        }
        let g = match coface {
            Some(g) if coface_count[&g] == 0 => g,
            _ => continue, // coface not maximal (yet); f may requeue later
        };
        alive.insert(f, false);
        alive.insert(g, false);
        for removed in [f, g] {
            let mut m = removed;
            while m != 0 {
                let v = m.trailing_zeros();
                m &= m - 1;
                let sub = removed & !(1u64 << v);
                if let Some(c) = coface_count.get_mut(&sub) {
                    *c -= 1;
                    if alive[&sub] {
                        let c = *c;
                        if c == 1 {
                            queue.push(sub);
                        } else if c == 0 {
                            // sub became maximal: its free subfaces wake up
                            let mut mm = sub;
                            while mm != 0 {
                                let w = mm.trailing_zeros();
                                mm &= mm - 1;
                                let s2 = sub & !(1u64 << w);
                                if alive.get(&s2).copied().unwrap_or(false)
                                    && coface_count[&s2] == 1
                                {
                                    queue.push(s2);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let mut out: Vec<u64> = alive
        .into_iter()
        .filter_map(|(f, live)| live.then_some(f))
        .collect();
    out.sort_unstable();
    out
}

/// Exact rank over the rationals of a sparse integer matrix given by rows.
/// Tries `i128` with overflow checks first, then restarts with `BigInt`.
pub(crate) fn rank_exact(rows: Vec<Vec<(usize, i64)>>) -> usize {
    let as_i128: Vec<Vec<(usize, i128)>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect())
        .collect();
    match rank_generic::<i128>(as_i128) {
        Some(r) => r,
        None => {
            let as_big: Vec<Vec<(usize, BigInt)>> = rows
                .iter()
                .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
                .collect();
            rank_generic::<BigInt>(as_big).expect("BigInt arithmetic cannot overflow")
        }
    }
}

trait Coef: Clone + PartialEq {
    fn zero_c() -> Self;
    fn is_zero_c(&self) -> bool;
    fn abs_is_one(&self) -> bool;
    /// `a * x - b * y`, or `None` on overflow.
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd_c(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
}

impl Coef for i128 {
    fn zero_c() -> Self {
        0
    }
    fn is_zero_c(&self) -> bool {
        *self == 0
    }
    fn abs_is_one(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        let p = a.checked_mul(*x)?;
        let q = b.checked_mul(*y)?;
        p.checked_sub(q)
    }
    fn gcd_c(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.unsigned_abs(), other.unsigned_abs());
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a as i128
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl Coef for BigInt {
    fn zero_c() -> Self {
        BigInt::zero()
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn abs_is_one(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd_c(&self, other: &Self) -> Self {
        let mut a = self.abs();
        let mut b = other.abs();
        while !b.is_zero() {
            let t = &a % &b;
            a = b;
            b = t;
        }
        a
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

/// Sparse Gaussian elimination over the integers (rank over Q). Rows are
/// sorted `(col, coef)` lists. Pivots prefer unit entries and short rows to
/// limit fill-in; eliminated rows are gcd-normalized. Returns `None` if the
/// coefficient type overflows.
fn rank_generic<T: Coef>(mut rows: Vec<Vec<(usize, T)>>) -> Option<usize> {
    rows.retain(|r| !r.is_empty());
    let mut rank = 0usize;
    while !rows.is_empty() {
        // pick pivot row: prefer |lead| == 1, then fewest entries
        let mut best = 0usize;
        let mut best_key = (2usize, usize::MAX);
        for (i, r) in rows.iter().enumerate() {
            let unit = if r[0].1.abs_is_one() { 0 } else { 1 };
            let key = (unit, r.len());
            if key < best_key {
                best_key = key;
                best = i;
                if key == (0, 1) {
                    break;
                }
            }
        }
        let pivot_row = rows.swap_remove(best);
        let (pcol, pval) = (pivot_row[0].0, pivot_row[0].1.clone());
        rank += 1;

        let zero = T::zero_c();
        let mut next_rows = Vec::with_capacity(rows.len());
        for row in rows {
            let lead = match row.iter().find(|&&(c, _)| c == pcol) {
                None => {
                    next_rows.push(row);
                    continue;
                }
                Some(&(_, ref v)) => v.clone(),
            };
            // row := pval * row - lead * pivot_row  (kills column pcol)
            let mut merged: Vec<(usize, T)> = Vec::with_capacity(row.len() + pivot_row.len());
            let (mut i, mut j) = (0usize, 0usize);
            while i < row.len() || j < pivot_row.len() {
                let v = if j >= pivot_row.len() || (i < row.len() && row[i].0 < pivot_row[j].0)
                {
                    let v = T::combine(&pval, &row[i].1, &lead, &zero)?;
                    let col = row[i].0;
                    i += 1;
                    (col, v)
                } else if i >= row.len() || pivot_row[j].0 < row[i].0 {
                    let v = T::combine(&pval, &zero, &lead, &pivot_row[j].1)?;
                    let col = pivot_row[j].0;
                    j += 1;
                    (col, v)
                } else {
                    let v = T::combine(&pval, &row[i].1, &lead, &pivot_row[j].1)?;
                    let col = row[i].0;
                    i += 1;
                    j += 1;
                    (col, v)
                };
                if !v.1.is_zero_c() {
                    merged.push(v);
                }
            }
            // gcd-normalize to keep entries small
            if !merged.is_empty() {
                let mut g = merged[0].1.clone();
                for (_, v) in merged.iter().skip(1) {
                    g = g.gcd_c(v);
                    if g.abs_is_one() {
                        break;
                    }
                }
                if !g.abs_is_one() && !g.is_zero_c() {
                    for e in merged.iter_mut() {
                        e.1 = e.1.div_exact(&g);
                    }
                }
                next_rows.push(merged);
            }
        }
        rows = next_rows;
    }
    Some(rank)
}

/// Rank modulo a prime (heuristic fast path).
pub(crate) fn rank_mod_p(rows: Vec<Vec<(usize, i64)>>, p: u64) -> usize {
    let p = p as i128;
    let norm = |v: i128| -> i128 { ((v % p) + p) % p };
    let mut rows: Vec<Vec<(usize, i128)>> = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .filter_map(|(c, v)| {
                    let v = norm(v as i128);
                    (v != 0).then_some((c, v))
                })
                .collect()
        })
        .filter(|r: &Vec<(usize, i128)>| !r.is_empty())
        .collect();
    let inv = |a: i128| -> i128 {
        // Fermat inverse
        let mut base = norm(a);
        let mut exp = p - 2;
        let mut acc = 1i128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    while !rows.is_empty() {
        let best = rows
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| r.len())
            .map(|(i, _)| i)
            .unwrap();
        let pivot_row = rows.swap_remove(best);
        let (pcol, pval) = pivot_row[0];
        let pinv = inv(pval);
        rank += 1;
        let mut next = Vec::with_capacity(rows.len());
        for row in rows {
            let lead = match row.iter().find(|&&(c, _)| c == pcol) {
                None => {
                    next.push(row);
                    continue;
                }
                Some(&(_, v)) => v,
            };
            let factor = lead * pinv % p;
            let mut merged = Vec::with_capacity(row.len() + pivot_row.len());
            let (mut i, mut j) = (0usize, 0usize);
            while i < row.len() || j < pivot_row.len() {
                if j >= pivot_row.len() || (i < row.len() && row[i].0 < pivot_row[j].0) {
                    merged.push(row[i]);
                    i += 1;
                } else if i >= row.len() || pivot_row[j].0 < row[i].0 {
                    let v = norm(-factor * pivot_row[j].1);
                    if v != 0 {
                        merged.push((pivot_row[j].0, v));
                    }
                    j += 1;
                } else {
                    let v = norm(row[i].1 - factor * pivot_row[j].1);
                    if v != 0 {
                        merged.push((row[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            if !merged.is_empty() {
                next.push(merged);
            }
        }
        rows = next;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> HomologyOptions {
        HomologyOptions::default()
    }

    #[test]
    fn two_points() {
        let c = SimplicialComplex::from_facets(2, &[0b01, 0b10]);
        let h = c.reduced_homology(&opts()).unwrap();
        assert_eq!(h[1], 1); // H~_0
        assert_eq!(h[0], 0);
    }

    #[test]
    fn hollow_triangle() {
        let c = SimplicialComplex::from_facets(3, &[0b011, 0b101, 0b110]);
        let h = c.reduced_homology(&opts()).unwrap();
        assert_eq!(h[1], 0);
        assert_eq!(h[2], 1); // H~_1 of a circle
    }

    #[test]
    fn full_simplex_contractible() {
        let c = SimplicialComplex::from_facets(3, &[0b111]);
        let h = c.reduced_homology(&opts()).unwrap();
        assert!(h.iter().all(|&d| d == 0));
    }

    #[test]
    fn irrelevant_complex() {
        let c = SimplicialComplex::from_face_set(0, vec![0]);
        let h = c.reduced_homology(&opts()).unwrap();
        assert_eq!(h[0], 1); // H~_{-1}
    }

    #[test]
    fn void_complex() {
        let c = SimplicialComplex::void(3);
        assert!(c.reduced_homology(&opts()).unwrap().is_empty());
    }

    #[test]
    fn hollow_tetrahedron_is_a_2_sphere() {
        let facets: Vec<u64> = (0..4).map(|v| 0b1111 & !(1u64 << v)).collect();
        let c = SimplicialComplex::from_facets(4, &facets);
        let h = c.reduced_homology(&opts()).unwrap();
        assert_eq!(h[3], 1); // H~_2
        assert_eq!(h[2], 0);
        assert_eq!(h[1], 0);
    }

    #[test]
    fn mod_p_matches_rational_on_sphere() {
        let facets: Vec<u64> = (0..4).map(|v| 0b1111 & !(1u64 << v)).collect();
        let c = SimplicialComplex::from_facets(4, &facets);
        let mut o = opts();
        o.field = CoefficientField::Prime(32749);
        assert_eq!(
            c.reduced_homology(&o).unwrap(),
            c.reduced_homology(&opts()).unwrap()
        );
    }

    #[test]
    fn stanley_reisner_examples() {
        use crate::graph::Graph;
        use crate::ideal::edge_ideal;

        // I(K2) = (x1x2): two points
        let c = stanley_reisner_complex(&edge_ideal(&Graph::complete(2).unwrap())).unwrap();
        assert_eq!(c.faces(), &[0b00, 0b01, 0b10]);

        // zero ideal in 2 vars: full simplex
        let z = MonomialIdeal::zero(vec!["x1".into(), "x2".into()]);
        let c = stanley_reisner_complex(&z).unwrap();
        assert_eq!(c.face_count(), 4);

        // I(P3): empty set, three vertices, {x1,x3}
        let c = stanley_reisner_complex(&edge_ideal(&Graph::path(3).unwrap())).unwrap();
        assert_eq!(c.faces(), &[0b000, 0b001, 0b010, 0b100, 0b101]);

        // non-squarefree input rejected
        let i = MonomialIdeal::new(
            vec!["x1".into()],
            vec![crate::ideal::Monomial::new(vec![2])],
        );
        assert!(stanley_reisner_complex(&i).is_err());
    }

    #[test]
    fn vertex_guard_enforced() {
        // guard triggers on vertex count, independent of face count
        let big = SimplicialComplex {
            vertices: 30,
            faces: vec![0],
        };
        assert!(matches!(
            big.reduced_homology(&opts()),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
