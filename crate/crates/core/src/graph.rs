//! Finite simple graphs with labeled vertices and the matching/cover
//! invariants used throughout the crate.
//!
//! The vertex order is significant: it is the canonical variable order for
//! every ideal built from the graph. All searches are exact and deterministic.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap: vertex sets are represented as `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// A simple graph: ordered vertex labels, undirected edges, no loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<u64>,
    /// Sorted list of edges `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from labels and edges given as label pairs.
    /// Duplicate edges are deduplicated; self-loops are rejected.
    pub fn new<S: AsRef<str>>(labels: Vec<String>, edge_pairs: &[(S, S)]) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::GuardExceeded {
                what: "vertex count",
                limit: MAX_VERTICES,
                actual: labels.len(),
            });
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate vertex label `{l}`")));
            }
        }
        let mut g = Graph {
            adj: vec![0; labels.len()],
            edges: Vec::new(),
            labels,
            index,
        };
        for (a, b) in edge_pairs {
            let u = g.vertex_index(a.as_ref())?;
            let v = g.vertex_index(b.as_ref())?;
            if u == v {
                return Err(Error::InvalidArgument(format!(
                    "self-loop at vertex `{}`",
                    a.as_ref()
                )));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g.rebuild_edges();
        Ok(g)
    }

    fn rebuild_edges(&mut self) {
        self.edges.clear();
        for u in 0..self.n() {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                self.edges.push((u, v));
                m &= m - 1;
            }
        }
    }

    /// Parses the edge-list text format.
    ///
    /// Each non-comment line holds two whitespace-separated labels. Lines
    /// starting with `#` are comments. An optional first content line
    /// `vertices: l1 l2 ... ln` fixes the vertex order; otherwise vertices
    /// appear in first-appearance order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut fixed_order = false;
        let mut raw_edges: Vec<(usize, usize)> = Vec::new();
        let mut seen_content = false;

        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            let lineno = lineno + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !seen_content {
                seen_content = true;
                if let Some(rest) = line.strip_prefix("vertices:") {
                    for tok in rest.split_whitespace() {
                        if index.insert(tok.to_string(), labels.len()).is_some() {
                            return Err(Error::Parse {
                                line: lineno,
                                msg: format!("duplicate vertex `{tok}` in header"),
                            });
                        }
                        labels.push(tok.to_string());
                    }
                    fixed_order = true;
                    continue;
                }
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected two labels, found {}", toks.len()),
                });
            }
            if toks[0] == toks[1] {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("self-loop at vertex `{}`", toks[0]),
                });
            }
            let mut resolve = |tok: &str| -> Result<usize> {
                if let Some(&i) = index.get(tok) {
                    return Ok(i);
                }
                if fixed_order {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("vertex `{tok}` not listed in the vertices header"),
                    });
                }
                index.insert(tok.to_string(), labels.len());
                labels.push(tok.to_string());
                Ok(labels.len() - 1)
            };
            let u = resolve(toks[0])?;
            let v = resolve(toks[1])?;
            raw_edges.push((u, v));
        }

        if labels.len() > MAX_VERTICES {
            return Err(Error::GuardExceeded {
                what: "vertex count",
                limit: MAX_VERTICES,
                actual: labels.len(),
            });
        }
        let mut g = Graph {
            adj: vec![0; labels.len()],
            edges: Vec::new(),
            labels,
            index,
        };
        for (u, v) in raw_edges {
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g.rebuild_edges();
        Ok(g)
    }

    /// The path `P_n` on vertices `x1..xn`.
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("path needs at least 1 vertex".into()));
        }
        let labels = standard_labels(n);
        let edges: Vec<(String, String)> = (1..n)
            .map(|i| (labels[i - 1].clone(), labels[i].clone()))
            .collect();
        Graph::new(labels, &edges)
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("cycle needs at least 3 vertices".into()));
        }
        let labels = standard_labels(n);
        let mut edges: Vec<(String, String)> = (1..n)
            .map(|i| (labels[i - 1].clone(), labels[i].clone()))
            .collect();
        edges.push((labels[n - 1].clone(), labels[0].clone()));
        Graph::new(labels, &edges)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("complete graph needs at least 1 vertex".into()));
        }
        let labels = standard_labels(n);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
        Graph::new(labels, &edges)
    }

    /// The complete bipartite graph `K_{a,b}` with parts `x1..xa` and
    /// `x{a+1}..x{a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a < 1 || b < 1 {
            return Err(Error::InvalidArgument("bipartite parts must be nonempty".into()));
        }
        let labels = standard_labels(a + b);
        let mut edges = Vec::new();
        for i in 0..a {
            for j in a..a + b {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
        Graph::new(labels, &edges)
    }

    /// The star `K_{1,n-1}` on `n` vertices: center `x1`, leaves `x2..xn`.
    pub fn star(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("star needs at least 1 vertex".into()));
        }
        let labels = standard_labels(n);
        let edges: Vec<(String, String)> = (1..n)
            .map(|i| (labels[0].clone(), labels[i].clone()))
            .collect();
        Graph::new(labels, &edges)
    }

    /// Dispatches on a family name: `path`, `cycle`, `complete`,
    /// `complete_bipartite`, `star`.
    pub fn family(name: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() != k {
                Err(Error::InvalidArgument(format!(
                    "family `{name}` takes {k} parameter(s), got {}",
                    params.len()
                )))
            } else {
                Ok(())
            }
        };
        match name {
            "path" => {
                want(1)?;
                Graph::path(params[0])
            }
            "cycle" => {
                want(1)?;
                Graph::cycle(params[0])
            }
            "complete" => {
                want(1)?;
                Graph::complete(params[0])
            }
            "complete_bipartite" => {
                want(2)?;
                Graph::complete_bipartite(params[0], params[1])
            }
            "star" => {
                want(1)?;
                Graph::star(params[0])
            }
            other => Err(Error::InvalidArgument(format!("unsupported family `{other}`"))),
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Edges as index pairs `(u, v)`, `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u] >> v) & 1 == 1
    }

    /// Open neighborhood as a bitmask.
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    /// Closed neighborhood `N[u]` as a bitmask.
    pub fn closed_neighborhood(&self, u: usize) -> u64 {
        self.adj[u] | (1 << u)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    fn full_mask(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// Deletes the vertices of `drop` (labels), keeping the induced order.
    pub fn delete_vertices<S: AsRef<str>>(&self, drop: &[S]) -> Result<Graph> {
        let mut mask = 0u64;
        for l in drop {
            mask |= 1 << self.vertex_index(l.as_ref())?;
        }
        Ok(self.delete_mask(mask))
    }

    /// Deletes the vertices in `mask`, keeping the induced order.
    pub fn delete_mask(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| mask & (1 << v) == 0).collect();
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (new_u, &u) in keep.iter().enumerate() {
            for (new_v, &v) in keep.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(u, v) {
                    edges.push((labels[new_u].clone(), labels[new_v].clone()));
                }
            }
            let _ = new_u;
        }
        Graph::new(labels, &edges).expect("induced subgraph is always valid")
    }

    /// True if `mask` is an independent set.
    pub fn is_independent(&self, mask: u64) -> bool {
        (0..self.n()).all(|v| mask & (1 << v) == 0 || self.adj[v] & mask == 0)
    }

    /// True if `mask` covers every edge.
    pub fn is_vertex_cover(&self, mask: u64) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| mask & ((1 << u) | (1 << v)) != 0)
    }

    /// All minimal vertex covers, as label sets sorted by (size, lex).
    ///
    /// Minimal covers are exactly the complements of maximal independent
    /// sets, which are enumerated by Bron–Kerbosch on the complement graph.
    pub fn minimal_vertex_covers(&self) -> Vec<Vec<String>> {
        let mut covers: Vec<Vec<usize>> = self
            .maximal_independent_sets()
            .into_iter()
            .map(|mis| {
                (0..self.n())
                    .filter(|&v| mis & (1 << v) == 0)
                    .collect::<Vec<usize>>()
            })
            .collect();
        covers.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        covers.dedup();
        covers
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.labels[v].clone()).collect())
            .collect()
    }

    /// Maximal independent sets as bitmasks (Bron–Kerbosch with pivoting on
    /// the complement graph), sorted.
    pub fn maximal_independent_sets(&self) -> Vec<u64> {
        let n = self.n();
        let full = self.full_mask();
        // "Adjacency" for the clique search: non-neighbors in the graph.
        let compl: Vec<u64> = (0..n).map(|v| full & !self.adj[v] & !(1 << v)).collect();
        let mut out = Vec::new();
        if n == 0 {
            out.push(0);
            return out;
        }
        fn bk(r: u64, mut p: u64, mut x: u64, compl: &[u64], out: &mut Vec<u64>) {
            if p == 0 && x == 0 {
                out.push(r);
                return;
            }
            // Pivot: vertex of p|x maximizing |p & compl[u]|.
            let mut pivot = usize::MAX;
            let mut best = -1i64;
            let mut px = p | x;
            while px != 0 {
                let u = px.trailing_zeros() as usize;
                let cnt = (p & compl[u]).count_ones() as i64;
                if cnt > best {
                    best = cnt;
                    pivot = u;
                }
                px &= px - 1;
            }
            let mut cand = p & !compl[pivot];
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                let bit = 1u64 << v;
                bk(r | bit, p & compl[v], x & compl[v], compl, out);
                p &= !bit;
                x |= bit;
                cand &= cand - 1;
            }
        }
        bk(0, full, 0, &compl, &mut out);
        out.sort_unstable();
        out
    }

    /// Maximum matching size with a witness, by exhaustive search with
    /// pruning. The witness is the lexicographically first optimum in edge
    /// order.
    pub fn matching_number(&self) -> (usize, Vec<(String, String)>) {
        self.max_matching(false)
    }

    /// Maximum induced matching size with a witness.
    pub fn induced_matching_number(&self) -> (usize, Vec<(String, String)>) {
        self.max_matching(true)
    }

    fn max_matching(&self, induced: bool) -> (usize, Vec<(String, String)>) {
        let edges = &self.edges;
        let mut best: Vec<(usize, usize)> = Vec::new();
        let mut cur: Vec<(usize, usize)> = Vec::new();

        fn rec(
            g: &Graph,
            induced: bool,
            start: usize,
            chosen: u64,
            cur: &mut Vec<(usize, usize)>,
            best: &mut Vec<(usize, usize)>,
        ) {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            // Bound: even taking every remaining edge cannot beat `best`.
            if cur.len() + (g.edges.len() - start).min(g.n() / 2 - cur.len()) <= best.len() {
                return;
            }
            for i in start..g.edges.len() {
                let (u, v) = g.edges[i];
                let bits = (1u64 << u) | (1u64 << v);
                if chosen & bits != 0 {
                    continue;
                }
                if induced && (g.adj[u] | g.adj[v]) & chosen != 0 {
                    continue;
                }
                cur.push((u, v));
                rec(g, induced, i + 1, chosen | bits, cur, best);
                cur.pop();
            }
        }

        if !edges.is_empty() {
            rec(self, induced, 0, 0, &mut cur, &mut best);
        }
        let witness = best
            .iter()
            .map(|&(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect();
        (best.len(), witness)
    }

    /// Exact ordered matching number with a witness.
    ///
    /// Branch-and-bound over sequences of oriented pairwise-disjoint edges.
    /// A partial sequence `(a_1,b_1),...,(a_r,b_r)` stays valid iff the new
    /// `a` is non-adjacent to all previous `a`s (independence of the a-side)
    /// and non-adjacent to all previous `b`s (the triangular condition).
    /// An edgeless graph has ordered matching number 0 and no witness.
    pub fn ordered_matching_number(&self) -> (usize, Option<OrderedMatching>) {
        if self.is_edgeless() {
            return (0, None);
        }
        // All oriented adjacent pairs in lex order; the DFS therefore visits
        // sequences in lex order and the first optimum found is the smallest.
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..self.n() {
            let mut m = self.adj[a];
            while m != 0 {
                let b = m.trailing_zeros() as usize;
                pairs.push((a, b));
                m &= m - 1;
            }
        }

        struct State<'a> {
            g: &'a Graph,
            pairs: &'a [(usize, usize)],
            best: Vec<(usize, usize)>,
        }
        fn rec(st: &mut State, cur: &mut Vec<(usize, usize)>, used: u64, a_mask: u64, b_mask: u64) {
            if cur.len() > st.best.len() {
                st.best = cur.clone();
            }
            let free = (st.g.full_mask() & !used).count_ones() as usize;
            if cur.len() + free / 2 <= st.best.len() {
                return;
            }
            for &(a, b) in st.pairs {
                let bits = (1u64 << a) | (1u64 << b);
                if used & bits != 0 {
                    continue;
                }
                // a-side must stay independent and must avoid earlier b's.
                if st.g.adj[a] & (a_mask | b_mask) != 0 {
                    continue;
                }
                cur.push((a, b));
                rec(st, cur, used | bits, a_mask | (1 << a), b_mask | (1 << b));
                cur.pop();
            }
        }

        let mut st = State {
            g: self,
            pairs: &pairs,
            best: Vec::new(),
        };
        let mut cur = Vec::new();
        rec(&mut st, &mut cur, 0, 0, 0);
        let witness = OrderedMatching {
            pairs: st
                .best
                .iter()
                .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                .collect(),
        };
        (witness.len(), Some(witness))
    }

    /// Full matching report: matching number, induced matching number and
    /// ordered matching number, each with one maximal witness.
    pub fn matching_report(&self) -> MatchingReport {
        let (matching_number, matching_witness) = self.matching_number();
        let (induced_matching_number, induced_witness) = self.induced_matching_number();
        let (ordered_matching_number, ordered_witness) = self.ordered_matching_number();
        MatchingReport {
            matching_number,
            induced_matching_number,
            ordered_matching_number,
            matching_witness,
            induced_witness,
            ordered_witness,
        }
    }

    /// Two-colorability. Returns a witness coloring (side per vertex, in
    /// vertex order) when the graph is bipartite, `None` otherwise.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                let mut m = self.adj[u];
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Checks that the given label pairs form a matching (edges, pairwise
    /// disjoint).
    pub fn is_matching<S: AsRef<str>>(&self, pairs: &[(S, S)]) -> Result<bool> {
        let mut used = 0u64;
        for (a, b) in pairs {
            let u = self.vertex_index(a.as_ref())?;
            let v = self.vertex_index(b.as_ref())?;
            if !self.has_edge(u, v) {
                return Ok(false);
            }
            let bits = (1u64 << u) | (1u64 << v);
            if used & bits != 0 {
                return Ok(false);
            }
            used |= bits;
        }
        Ok(true)
    }

    /// Checks that the given label pairs form an induced matching: a matching
    /// with no further edges among its endpoints.
    pub fn is_induced_matching<S: AsRef<str>>(&self, pairs: &[(S, S)]) -> Result<bool> {
        if !self.is_matching(pairs)? {
            return Ok(false);
        }
        let idx: Vec<(usize, usize)> = pairs
            .iter()
            .map(|(a, b)| {
                Ok((
                    self.vertex_index(a.as_ref())?,
                    self.vertex_index(b.as_ref())?,
                ))
            })
            .collect::<Result<_>>()?;
        for (i, &(u1, v1)) in idx.iter().enumerate() {
            for &(u2, v2) in idx.iter().skip(i + 1) {
                if self.has_edge(u1, u2)
                    || self.has_edge(u1, v2)
                    || self.has_edge(v1, u2)
                    || self.has_edge(v1, v2)
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Canonical text form (header plus sorted edge lines); input for graph
    /// hashing.
    pub fn canonical_text(&self) -> String {
        let mut s = String::from("vertices:");
        for l in &self.labels {
            s.push(' ');
            s.push_str(l);
        }
        s.push('\n');
        for &(u, v) in &self.edges {
            s.push_str(&self.labels[u]);
            s.push(' ');
            s.push_str(&self.labels[v]);
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={})", self.n(), self.edge_count())
    }
}

fn standard_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// An ordered matching: a sequence of oriented edges `(a_i, b_i)` whose
/// a-side is independent and which satisfies the triangular condition
/// ({a_i, b_j} an edge forces i <= j).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedMatching {
    pairs: Vec<(String, String)>,
}

impl OrderedMatching {
    pub fn new(pairs: Vec<(String, String)>) -> Self {
        OrderedMatching { pairs }
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Re-validates the definition against a host graph, independently of the
    /// search that produced the witness.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let r = self.pairs.len();
        if r == 0 {
            return Err(Error::InvalidArgument("ordered matching must be nonempty".into()));
        }
        let mut a_idx = Vec::with_capacity(r);
        let mut b_idx = Vec::with_capacity(r);
        let mut seen = 0u64;
        for (a, b) in &self.pairs {
            let u = g.vertex_index(a)?;
            let v = g.vertex_index(b)?;
            if !g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!("pair ({a}, {b}) is not an edge")));
            }
            for w in [u, v] {
                if seen & (1 << w) != 0 {
                    return Err(Error::InvalidArgument(format!(
                        "vertex `{}` repeats in the matching",
                        g.label(w)
                    )));
                }
                seen |= 1 << w;
            }
            a_idx.push(u);
            b_idx.push(v);
        }
        for i in 0..r {
            for j in 0..r {
                if i != j && g.has_edge(a_idx[i], a_idx[j]) {
                    return Err(Error::InvalidArgument("a-side is not independent".into()));
                }
                if i > j && g.has_edge(a_idx[i], b_idx[j]) {
                    return Err(Error::InvalidArgument(format!(
                        "edge ({}, {}) violates the order condition",
                        g.label(a_idx[i]),
                        g.label(b_idx[j])
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Matching invariants of a graph with one maximal witness of each kind.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatchingReport {
    pub matching_number: usize,
    pub induced_matching_number: usize,
    pub ordered_matching_number: usize,
    pub matching_witness: Vec<(String, String)>,
    pub induced_witness: Vec<(String, String)>,
    pub ordered_witness: Option<OrderedMatching>,
}
