//! Exact Stanley depth and Stanley regularity via interval partitions of the
//! characteristic poset.
//!
//! For a monomial ideal `I` with generator exponent cap `g`, the poset holds
//! the exponent vectors `a <= g` with `x^a` in `I` (ideal mode) or outside
//! `I` (quotient mode). A partition of the poset into boxes `[a, b]`
//! corresponds to a Stanley decomposition; its Stanley depth is the minimum
//! over the boxes of `rho(b) = #{i : b_i = g_i}` and its Stanley regularity
//! the maximum lower-endpoint degree. Stanley depth is the maximum of the
//! first score over partitions, Stanley regularity the minimum of the
//! second.
//!
//! The searches decide "is there a partition with score at least / at most
//! `s`" by backtracking exact cover: the minimal uncovered element must be
//! the lower endpoint of its interval, so the branching is only over upper
//! endpoints. Ideal-mode boxes are automatically inside the poset (upward
//! closure), quotient-mode boxes exactly when the upper endpoint is
//! (downward closure), which keeps candidate generation cheap.

use std::time::Instant;

use serde::Serialize;

use crate::config::StanleyOptions;
use crate::construction::build_gk;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{cover_ideal, symbolic_power, Monomial, MonomialIdeal};

/// Which module over the ambient ring the poset describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    Ideal,
    Quotient,
}

/// Finite carrier of the Stanley depth / regularity searches.
#[derive(Debug, Clone)]
pub struct CharacteristicPoset {
    vars: Vec<String>,
    cap: Vec<u32>,
    dims: Vec<usize>,
    strides: Vec<usize>,
    box_size: usize,
    member: Vec<bool>,
    /// member codes in ascending code order (a linear extension of the
    /// componentwise order)
    elements: Vec<usize>,
    /// per-code number of coordinates at the cap
    rho_table: Vec<u8>,
    /// per-code total degree
    deg_table: Vec<u16>,
    mode: Mode,
}

impl CharacteristicPoset {
    /// Builds the poset with the canonical cap (componentwise maximum of the
    /// generator exponents).
    pub fn build(ideal: &MonomialIdeal, mode: Mode, opts: &StanleyOptions) -> Result<Self> {
        Self::build_with_cap(ideal, mode, ideal.max_exponents(), opts)
    }

    /// Builds the poset over a custom cap `>= max_exponents`; the searched
    /// values are independent of the cap, which the tests exercise.
    pub fn build_with_cap(
        ideal: &MonomialIdeal,
        mode: Mode,
        cap: Vec<u32>,
        opts: &StanleyOptions,
    ) -> Result<Self> {
        assert_eq!(cap.len(), ideal.num_vars());
        assert!(
            cap.iter()
                .zip(ideal.max_exponents().iter())
                .all(|(c, g)| c >= g),
            "cap must dominate the generator exponents"
        );
        let dims: Vec<usize> = cap.iter().map(|&c| c as usize + 1).collect();
        let box_size = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .filter(|&s| s <= opts.max_poset_box)
            .ok_or(Error::GuardExceeded {
                what: "characteristic poset box",
                limit: opts.max_poset_box,
                actual: usize::MAX,
            })?;
        let n = dims.len();
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        let mut member = vec![false; box_size];
        let mut elements = Vec::new();
        let mut rho_table = vec![0u8; box_size];
        let mut deg_table = vec![0u16; box_size];
        let mut exps = vec![0u32; n];
        for code in 0..box_size {
            let inside = ideal.contains(&Monomial::new(exps.clone()));
            let is_member = match mode {
                Mode::Ideal => inside,
                Mode::Quotient => !inside,
            };
            if is_member {
                member[code] = true;
                elements.push(code);
            }
            rho_table[code] = exps
                .iter()
                .zip(&cap)
                .filter(|&(e, c)| e == c)
                .count() as u8;
            deg_table[code] = exps.iter().sum::<u32>() as u16;
            // increment mixed-radix counter (last coordinate fastest)
            for i in (0..n).rev() {
                exps[i] += 1;
                if (exps[i] as usize) < dims[i] {
                    break;
                }
                exps[i] = 0;
            }
        }
        Ok(CharacteristicPoset {
            vars: ideal.variables().to_vec(),
            cap,
            dims,
            strides,
            box_size,
            member,
            elements,
            rho_table,
            deg_table,
            mode,
        })
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn cap(&self) -> &[u32] {
        &self.cap
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn decode(&self, code: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut rest = code;
        for (&s, &d) in self.strides.iter().zip(&self.dims) {
            out.push((rest / s) as u32);
            rest %= s;
            let _ = d;
        }
        out
    }

    pub fn encode(&self, exps: &[u32]) -> usize {
        exps.iter()
            .zip(&self.strides)
            .map(|(&e, &s)| e as usize * s)
            .sum()
    }

    pub fn contains_code(&self, code: usize) -> bool {
        self.member[code]
    }

    /// Number of coordinates of the decoded vector sitting at the cap.
    pub fn rho(&self, exps: &[u32]) -> u32 {
        exps.iter()
            .zip(&self.cap)
            .filter(|&(e, c)| e == c)
            .count() as u32
    }
}

/// One box `[lower, upper]` of an interval partition, in exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lower: Vec<u32>,
    pub upper: Vec<u32>,
}

/// A witness partition of the characteristic poset into boxes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalPartition {
    pub intervals: Vec<Interval>,
}

impl IntervalPartition {
    /// The Stanley depth score: minimum `rho(upper)` over the boxes.
    pub fn sdepth_score(&self, poset: &CharacteristicPoset) -> u32 {
        self.intervals
            .iter()
            .map(|iv| poset.rho(&iv.upper))
            .min()
            .unwrap_or(0)
    }

    /// The Stanley regularity score: maximum lower-endpoint degree.
    pub fn sreg_score(&self) -> u32 {
        self.intervals
            .iter()
            .map(|iv| iv.lower.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Revalidates the partition: endpoints ordered and in the poset, every
    /// box cell in the poset, boxes disjoint, union equal to the poset.
    pub fn validate(&self, poset: &CharacteristicPoset) -> Result<()> {
        let mut covered = vec![false; poset.box_size];
        let mut count = 0usize;
        for iv in &self.intervals {
            if !iv.lower.iter().zip(&iv.upper).all(|(a, b)| a <= b)
                || !iv.upper.iter().zip(&poset.cap).all(|(b, c)| b <= c)
            {
                return Err(Error::InvalidArgument("malformed interval".into()));
            }
            for code in box_codes(poset, &iv.lower, &iv.upper) {
                if !poset.member[code] {
                    return Err(Error::InvalidArgument("interval leaves the poset".into()));
                }
                if covered[code] {
                    return Err(Error::InvalidArgument("intervals overlap".into()));
                }
                covered[code] = true;
                count += 1;
            }
        }
        if count != poset.len() {
            return Err(Error::InvalidArgument("intervals do not cover the poset".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "intervals": self.intervals.iter().map(|iv| {
                serde_json::json!({ "lower": iv.lower, "upper": iv.upper })
            }).collect::<Vec<_>>()
        })
    }
}

fn box_codes(poset: &CharacteristicPoset, lower: &[u32], upper: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = lower.to_vec();
    loop {
        out.push(poset.encode(&cur));
        let mut i = cur.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < upper[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lower[i];
        }
    }
}

/// How a reported value relates to the true one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    /// Budget ran out while improving a max-type value.
    LowerBound,
    /// Budget ran out while improving a min-type value.
    UpperBound,
}

/// Outcome of a Stanley search. `value = None` encodes the zero module
/// (Stanley depth +infinity; Stanley regularity undefined).
#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub value: Option<u32>,
    pub exactness: Exactness,
    #[serde(skip)]
    pub witness: Option<IntervalPartition>,
}

impl SearchOutcome {
    pub fn exact_value(&self) -> Result<Option<u32>> {
        if self.exactness == Exactness::Exact {
            Ok(self.value)
        } else {
            Err(Error::BudgetExhausted("an exact Stanley value was required".into()))
        }
    }
}

struct Search<'a> {
    poset: &'a CharacteristicPoset,
    covered: Vec<bool>,
    chosen: Vec<(usize, usize)>,
    deadline: Option<Instant>,
    ticks: u64,
    /// scratch buffer for the forward-checking sweep
    reach: Vec<bool>,
}

enum Target {
    /// every box upper endpoint needs `rho >= d`
    SdepthAtLeast(u32),
    /// every box lower endpoint needs degree `<= s`
    SregAtMost(u32),
}

impl<'a> Search<'a> {
    fn new(poset: &'a CharacteristicPoset, deadline: Option<Instant>) -> Self {
        Search {
            poset,
            covered: vec![false; poset.box_size],
            chosen: Vec::new(),
            deadline,
            ticks: 0,
            reach: vec![false; poset.box_size],
        }
    }

    /// Forward check: every free element must still reach, through free
    /// cells, an admissible interval endpoint (an upper endpoint with
    /// `rho >= d`, resp. a lower endpoint of degree `<= s`). The interval
    /// that would cover the element contains such a monotone path, so a
    /// failure here makes the branch infeasible.
    fn forward_check(&mut self, target: &Target) -> bool {
        let poset = self.poset;
        let n = poset.dims.len();
        match *target {
            Target::SdepthAtLeast(d) => {
                if d == 0 {
                    return true;
                }
                for code in (0..poset.box_size).rev() {
                    let free = poset.member[code] && !self.covered[code];
                    self.reach[code] = free
                        && (poset.rho_table[code] as u32 >= d || {
                            let mut ok = false;
                            for i in 0..n {
                                let digit = code / poset.strides[i] % poset.dims[i];
                                if digit < poset.dims[i] - 1 && self.reach[code + poset.strides[i]]
                                {
                                    ok = true;
                                    break;
                                }
                            }
                            ok
                        });
                }
            }
            Target::SregAtMost(s) => {
                for code in 0..poset.box_size {
                    let free = poset.member[code] && !self.covered[code];
                    self.reach[code] = free
                        && (poset.deg_table[code] as u32 <= s || {
                            let mut ok = false;
                            for i in 0..n {
                                let digit = code / poset.strides[i] % poset.dims[i];
                                if digit > 0 && self.reach[code - poset.strides[i]] {
                                    ok = true;
                                    break;
                                }
                            }
                            ok
                        });
                }
            }
        }
        self.poset
            .elements
            .iter()
            .all(|&c| self.covered[c] || self.reach[c])
    }

    fn out_of_time(&mut self) -> bool {
        self.ticks += 1;
        if self.ticks % 1024 != 0 {
            return false;
        }
        match self.deadline {
            Some(d) => Instant::now() >= d,
            None => false,
        }
    }

    /// Marks the box covered; rolls back and reports false when it collides
    /// with already covered cells.
    fn try_cover(&mut self, lower: &[u32], upper: &[u32]) -> bool {
        let codes = box_codes(self.poset, lower, upper);
        for (i, &c) in codes.iter().enumerate() {
            if self.covered[c] {
                for &r in &codes[..i] {
                    self.covered[r] = false;
                }
                return false;
            }
            self.covered[c] = true;
        }
        true
    }

    fn uncover(&mut self, lower: &[u32], upper: &[u32]) {
        for c in box_codes(self.poset, lower, upper) {
            self.covered[c] = false;
        }
    }

    /// Upper-endpoint candidates above `lower` satisfying the target's
    /// endpoint constraint, each with its box volume. Box membership in the
    /// poset is ensured by closure plus (in quotient mode) membership of the
    /// partial minimum completion, which prunes whole subtrees.
    fn candidates(&self, lower: &[u32], target: &Target) -> Vec<(Vec<u32>, usize)> {
        let poset = self.poset;
        let n = lower.len();
        let mut out = Vec::new();
        let mut b = lower.to_vec();

        fn rec(
            poset: &CharacteristicPoset,
            lower: &[u32],
            b: &mut Vec<u32>,
            i: usize,
            at_cap: u32,
            need_cap: u32,
            out: &mut Vec<(Vec<u32>, usize)>,
        ) {
            let n = lower.len();
            if i == n {
                if at_cap >= need_cap {
                    let vol = lower
                        .iter()
                        .zip(b.iter())
                        .map(|(&a, &x)| (x - a) as usize + 1)
                        .product();
                    out.push((b.clone(), vol));
                }
                return;
            }
            for v in lower[i]..=poset.cap[i] {
                b[i] = v;
                // remaining coordinates could still reach the cap
                let potential = at_cap
                    + u32::from(v == poset.cap[i])
                    + (n - i - 1) as u32;
                if potential < need_cap {
                    continue;
                }
                if poset.mode == Mode::Quotient {
                    // minimum completion of this prefix; if it already left
                    // the poset, every completion has (downward closure)
                    let probe: Vec<u32> = b[..=i]
                        .iter()
                        .copied()
                        .chain(lower[i + 1..].iter().copied())
                        .collect();
                    if !poset.member[poset.encode(&probe)] {
                        continue;
                    }
                }
                rec(
                    poset,
                    lower,
                    b,
                    i + 1,
                    at_cap + u32::from(v == poset.cap[i]),
                    need_cap,
                    out,
                );
            }
            b[i] = lower[i];
        }

        let need_cap = match target {
            Target::SdepthAtLeast(d) => *d,
            Target::SregAtMost(_) => 0,
        };
        rec(poset, lower, &mut b, 0, 0, need_cap, &mut out);
        // larger boxes first, then lexicographically smallest upper endpoint
        out.sort_by(|x, y| y.1.cmp(&x.1).then_with(|| x.0.cmp(&y.0)));
        out
    }

    /// Exact-cover decision. `None` means the deadline was hit.
    fn decide(&mut self, target: &Target) -> Option<bool> {
        self.rec(0, target)
    }

    fn rec(&mut self, mut scan: usize, target: &Target) -> Option<bool> {
        while scan < self.poset.elements.len() && self.covered[self.poset.elements[scan]] {
            scan += 1;
        }
        if scan == self.poset.elements.len() {
            return Some(true);
        }
        if self.out_of_time() {
            return None;
        }
        if !self.forward_check(target) {
            return Some(false);
        }
        let a_code = self.poset.elements[scan];
        let lower = self.poset.decode(a_code);
        if let Target::SregAtMost(s) = target {
            // the minimal uncovered element is forced to start an interval
            if lower.iter().sum::<u32>() > *s {
                return Some(false);
            }
        }
        for (upper, _) in self.candidates(&lower, target) {
            if !self.try_cover(&lower, &upper) {
                continue;
            }
            self.chosen.push((a_code, self.poset.encode(&upper)));
            match self.rec(scan + 1, target) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => {
                    self.uncover(&lower, &upper);
                    self.chosen.pop();
                    return None;
                }
            }
            self.uncover(&lower, &upper);
            self.chosen.pop();
        }
        Some(false)
    }

    fn witness(&self) -> IntervalPartition {
        IntervalPartition {
            intervals: self
                .chosen
                .iter()
                .map(|&(a, b)| Interval {
                    lower: self.poset.decode(a),
                    upper: self.poset.decode(b),
                })
                .collect(),
        }
    }
}

/// Exact Stanley depth of `I` (ideal mode) or `S/I` (quotient mode) on a
/// prebuilt poset. Decision targets increase from 0; each success certifies
/// a lower bound, the first failure pins the exact value, and a budget
/// timeout downgrades the result to a flagged lower bound.
pub fn sdepth_of_poset(poset: &CharacteristicPoset, opts: &StanleyOptions) -> SearchOutcome {
    if poset.is_empty() {
        return SearchOutcome {
            value: None,
            exactness: Exactness::Exact,
            witness: None,
        };
    }
    let deadline = opts.budget.map(|b| Instant::now() + b);
    let n = poset.vars.len() as u32;
    let mut best: Option<(u32, IntervalPartition)> = None;
    for d in 0..=n {
        let mut search = Search::new(poset, deadline);
        match search.decide(&Target::SdepthAtLeast(d)) {
            Some(true) => best = Some((d, search.witness())),
            Some(false) => break,
            None => {
                let (value, witness) = best.expect("target 0 is always feasible");
                return SearchOutcome {
                    value: Some(value),
                    exactness: Exactness::LowerBound,
                    witness: Some(witness),
                };
            }
        }
    }
    let (value, witness) = best.expect("target 0 is always feasible");
    SearchOutcome {
        value: Some(value),
        exactness: Exactness::Exact,
        witness: Some(witness),
    }
}

pub fn sdepth_exact(
    ideal: &MonomialIdeal,
    mode: Mode,
    opts: &StanleyOptions,
) -> Result<SearchOutcome> {
    let poset = CharacteristicPoset::build(ideal, mode, opts)?;
    Ok(sdepth_of_poset(&poset, opts))
}

/// Decision form: is the Stanley depth at least `d`? `Ok(None)` reports a
/// budget timeout (undecided). Much cheaper than the exact value when only a
/// bound is asserted.
pub fn sdepth_at_least(
    ideal: &MonomialIdeal,
    mode: Mode,
    d: u32,
    opts: &StanleyOptions,
) -> Result<Option<bool>> {
    let poset = CharacteristicPoset::build(ideal, mode, opts)?;
    if poset.is_empty() {
        return Ok(Some(true)); // zero module: sdepth = +infinity
    }
    if d == 0 {
        return Ok(Some(true));
    }
    let deadline = opts.budget.map(|b| Instant::now() + b);
    let mut search = Search::new(&poset, deadline);
    Ok(search.decide(&Target::SdepthAtLeast(d)))
}

/// Exact poset-restricted Stanley regularity. Starts from the singleton
/// partition (score = maximum element degree) and tightens the target
/// downward; the first infeasible target pins the exact value and a timeout
/// downgrades to a flagged upper bound.
pub fn sreg_poset(
    ideal: &MonomialIdeal,
    mode: Mode,
    opts: &StanleyOptions,
) -> Result<SearchOutcome> {
    let poset = CharacteristicPoset::build(ideal, mode, opts)?;
    if poset.is_empty() {
        return Ok(SearchOutcome {
            value: None,
            exactness: Exactness::Exact,
            witness: None,
        });
    }
    let deadline = opts.budget.map(|b| Instant::now() + b);
    let singleton = IntervalPartition {
        intervals: poset
            .elements
            .iter()
            .map(|&c| {
                let v = poset.decode(c);
                Interval {
                    lower: v.clone(),
                    upper: v,
                }
            })
            .collect(),
    };
    let mut best_value = singleton.sreg_score();
    let mut best_witness = singleton;
    while best_value > 0 {
        let mut search = Search::new(&poset, deadline);
        match search.decide(&Target::SregAtMost(best_value - 1)) {
            Some(true) => {
                let witness = search.witness();
                best_value = witness.sreg_score();
                best_witness = witness;
            }
            Some(false) => {
                return Ok(SearchOutcome {
                    value: Some(best_value),
                    exactness: Exactness::Exact,
                    witness: Some(best_witness),
                })
            }
            None => {
                return Ok(SearchOutcome {
                    value: Some(best_value),
                    exactness: Exactness::UpperBound,
                    witness: Some(best_witness),
                })
            }
        }
    }
    Ok(SearchOutcome {
        value: Some(0),
        exactness: Exactness::Exact,
        witness: Some(best_witness),
    })
}

/// Both duality identities relating Stanley regularity of an edge ideal to
/// Stanley depth of the cover ideal side: `sreg(I(G)) + sdepth(S/J(G)) = n`
/// and `sdepth(J(G)) + sreg(S/I(G)) = n`. Requires exact values; a graph
/// without edges is rejected.
pub fn dagger_check(g: &Graph, opts: &StanleyOptions) -> Result<bool> {
    if g.is_edgeless() {
        return Err(Error::InvalidArgument(
            "duality check needs a graph with at least one edge".into(),
        ));
    }
    let n = g.n() as u32;
    let ig = crate::ideal::edge_ideal(g);
    let jg = cover_ideal(g);
    let sreg_ig = sreg_poset(&ig, Mode::Ideal, opts)?
        .exact_value()?
        .expect("edge ideal is nonzero");
    let sdepth_sjg = sdepth_exact(&jg, Mode::Quotient, opts)?
        .exact_value()?
        .expect("cover ideal is proper");
    let sdepth_jg = sdepth_exact(&jg, Mode::Ideal, opts)?
        .exact_value()?
        .expect("cover ideal is nonzero");
    let sreg_sig = sreg_poset(&ig, Mode::Quotient, opts)?
        .exact_value()?
        .expect("edge ideal is proper");
    Ok(sreg_ig + sdepth_sjg == n && sdepth_jg + sreg_sig == n)
}

/// One step of the Stanley depth sequence of symbolic powers.
#[derive(Debug, Clone, Serialize)]
pub struct SequenceEntry {
    pub k: u32,
    pub ideal: Option<SearchOutcome>,
    pub quotient: Option<SearchOutcome>,
    pub note: Option<String>,
}

/// Stanley depths of `J(G)^(k)` and `S/J(G)^(k)` for `k = 1..k_max`. Guard
/// overruns are recorded per entry instead of failing the whole sequence.
pub fn sdepth_sequence(g: &Graph, k_max: u32, opts: &StanleyOptions) -> Result<Vec<SequenceEntry>> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        let jk = match symbolic_power(g, k) {
            Ok(i) => i,
            Err(e) => {
                out.push(SequenceEntry {
                    k,
                    ideal: None,
                    quotient: None,
                    note: Some(e.to_string()),
                });
                continue;
            }
        };
        let mut note = None;
        let ideal = match sdepth_exact(&jk, Mode::Ideal, opts) {
            Ok(o) => Some(o),
            Err(e) => {
                note = Some(e.to_string());
                None
            }
        };
        let quotient = match sdepth_exact(&jk, Mode::Quotient, opts) {
            Ok(o) => Some(o),
            Err(e) => {
                note = Some(e.to_string());
                None
            }
        };
        out.push(SequenceEntry {
            k,
            ideal,
            quotient,
            note,
        });
    }
    Ok(out)
}

/// The polarization shift identity for the quotient: the Stanley depth of
/// `T_r / J(G_r)` equals the Stanley depth of `S / J(G)^(r)` plus `n(r-1)`.
/// Both sides are computed by independent searches.
pub fn polarization_shift_check(g: &Graph, r: u32, opts: &StanleyOptions) -> Result<bool> {
    if g.is_edgeless() {
        return Err(Error::InvalidArgument(
            "shift check needs a graph with at least one edge".into(),
        ));
    }
    let n = g.n();
    let layered = n * r as usize;
    if layered > opts.max_shift_vars {
        return Err(Error::GuardExceeded {
            what: "polarization-shift ambient (n*r)",
            limit: opts.max_shift_vars,
            actual: layered,
        });
    }
    let gk = build_gk(g, r)?;
    let lhs = sdepth_exact(&cover_ideal(&gk.graph), Mode::Quotient, opts)?
        .exact_value()?
        .expect("layered cover ideal is proper");
    let rhs = sdepth_exact(&symbolic_power(g, r)?, Mode::Quotient, opts)?
        .exact_value()?
        .expect("symbolic power is proper");
    Ok(lhs == rhs + (n as u32) * (r - 1))
}

/// Variable-deletion monotonicity of the poset Stanley regularity: both
/// `sreg(I') <= sreg(I)` and `sreg(S'/I') <= sreg(S/I)` for the restriction
/// `I' = I ∩ K[vars \ {x}]`. A restriction collapsing to the zero ideal
/// satisfies the ideal-side inequality vacuously.
pub fn deletion_monotonicity_check(
    ideal: &MonomialIdeal,
    x: &str,
    opts: &StanleyOptions,
) -> Result<bool> {
    let restricted = ideal.restrict(x)?;
    let ideal_side = if restricted.is_zero() {
        true
    } else {
        let lhs = sreg_poset(&restricted, Mode::Ideal, opts)?
            .exact_value()?
            .expect("nonzero");
        let rhs = sreg_poset(ideal, Mode::Ideal, opts)?
            .exact_value()?
            .expect("nonzero");
        lhs <= rhs
    };
    let quotient_side = {
        let lhs = sreg_poset(&restricted, Mode::Quotient, opts)?.exact_value()?;
        let rhs = sreg_poset(ideal, Mode::Quotient, opts)?.exact_value()?;
        match (lhs, rhs) {
            (Some(l), Some(r)) => l <= r,
            // a zero quotient module only on the restricted side
            (None, _) => true,
            (Some(_), None) => false,
        }
    };
    Ok(ideal_side && quotient_side)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::ideal::edge_ideal;

    fn opts() -> StanleyOptions {
        StanleyOptions::default()
    }

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
    fn poset_examples() {
        let m2 = ideal(2, &[&[1, 0], &[0, 1]]);
        let p = CharacteristicPoset::build(&m2, Mode::Ideal, &opts()).unwrap();
        assert_eq!(p.len(), 3); // 10, 01, 11
        let q = CharacteristicPoset::build(&m2, Mode::Quotient, &opts()).unwrap();
        assert_eq!(q.len(), 1); // 00

        let p3 = Graph::path(3).unwrap();
        let j2 = symbolic_power(&p3, 2).unwrap();
        let p = CharacteristicPoset::build(&j2, Mode::Ideal, &opts()).unwrap();
        // 27-box; members satisfy both edge inequalities
        assert_eq!(p.box_size, 27);
        let q = CharacteristicPoset::build(&j2, Mode::Quotient, &opts()).unwrap();
        assert_eq!(p.len() + q.len(), 27);
    }

    #[test]
    fn poset_guard() {
        let big = ideal(6, &[&[9, 9, 9, 9, 9, 9]]);
        assert!(matches!(
            CharacteristicPoset::build(&big, Mode::Ideal, &opts()),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn sdepth_maximal_ideal_two_vars() {
        let m2 = ideal(2, &[&[1, 0], &[0, 1]]);
        let out = sdepth_exact(&m2, Mode::Ideal, &opts()).unwrap();
        assert_eq!(out.value, Some(1));
        assert_eq!(out.exactness, Exactness::Exact);
        let w = out.witness.unwrap();
        let poset = CharacteristicPoset::build(&m2, Mode::Ideal, &opts()).unwrap();
        w.validate(&poset).unwrap();
        assert_eq!(w.sdepth_score(&poset), 1);

        let out = sdepth_exact(&m2, Mode::Quotient, &opts()).unwrap();
        assert_eq!(out.value, Some(0));
    }

    #[test]
    fn sdepth_maximal_ideal_three_vars_is_two() {
        let m3 = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let out = sdepth_exact(&m3, Mode::Ideal, &opts()).unwrap();
        assert_eq!(out.value, Some(2)); // ceil(3/2)
    }

    #[test]
    fn sdepth_cover_ideal_p3() {
        let p3 = Graph::path(3).unwrap();
        let j = cover_ideal(&p3);
        assert_eq!(
            sdepth_exact(&j, Mode::Quotient, &opts()).unwrap().value,
            Some(1)
        );
        assert_eq!(
            sdepth_exact(&j, Mode::Ideal, &opts()).unwrap().value,
            Some(2)
        );
    }

    #[test]
    fn sdepth_zero_and_unit() {
        let z = MonomialIdeal::zero(vars(2));
        let out = sdepth_exact(&z, Mode::Ideal, &opts()).unwrap();
        assert_eq!(out.value, None); // zero module
        let out = sdepth_exact(&z, Mode::Quotient, &opts()).unwrap();
        assert_eq!(out.value, Some(2)); // S itself

        let u = MonomialIdeal::unit(vars(2));
        let out = sdepth_exact(&u, Mode::Ideal, &opts()).unwrap();
        assert_eq!(out.value, Some(2));
        let out = sdepth_exact(&u, Mode::Quotient, &opts()).unwrap();
        assert_eq!(out.value, None);
    }

    #[test]
    fn sreg_examples() {
        // sreg(I(P3)) = 2
        let ip3 = edge_ideal(&Graph::path(3).unwrap());
        let out = sreg_poset(&ip3, Mode::Ideal, &opts()).unwrap();
        assert_eq!(out.value, Some(2));
        let poset = CharacteristicPoset::build(&ip3, Mode::Ideal, &opts()).unwrap();
        let w = out.witness.unwrap();
        w.validate(&poset).unwrap();
        assert_eq!(w.sreg_score(), 2);

        // principal (x1): single interval
        let p = ideal(2, &[&[1, 0]]);
        assert_eq!(sreg_poset(&p, Mode::Ideal, &opts()).unwrap().value, Some(1));

        // sreg(S/I(K2)) = 1
        let ik2 = edge_ideal(&Graph::complete(2).unwrap());
        assert_eq!(
            sreg_poset(&ik2, Mode::Quotient, &opts()).unwrap().value,
            Some(1)
        );
        // sreg(I(K2)) = 2
        assert_eq!(sreg_poset(&ik2, Mode::Ideal, &opts()).unwrap().value, Some(2));
    }

    #[test]
    fn dagger_examples() {
        for g in [
            Graph::path(3).unwrap(),
            Graph::complete(2).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::path(4).unwrap(),
        ] {
            assert!(dagger_check(&g, &opts()).unwrap(), "duality fails on {g}");
        }
    }

    #[test]
    fn sdepth_at_least_matches_exact() {
        let p3 = Graph::path(3).unwrap();
        let j2 = symbolic_power(&p3, 2).unwrap();
        for mode in [Mode::Ideal, Mode::Quotient] {
            let exact = sdepth_exact(&j2, mode, &opts()).unwrap().value.unwrap();
            assert_eq!(
                sdepth_at_least(&j2, mode, exact, &opts()).unwrap(),
                Some(true)
            );
            assert_eq!(
                sdepth_at_least(&j2, mode, exact + 1, &opts()).unwrap(),
                Some(false)
            );
        }
    }

    #[test]
    fn sequence_monotone_small() {
        for g in [
            Graph::complete(2).unwrap(),
            Graph::path(3).unwrap(),
            Graph::complete(3).unwrap(),
        ] {
            let seq = sdepth_sequence(&g, 3, &opts()).unwrap();
            let quot: Vec<u32> = seq
                .iter()
                .map(|e| e.quotient.as_ref().unwrap().value.unwrap())
                .collect();
            let idl: Vec<u32> = seq
                .iter()
                .map(|e| e.ideal.as_ref().unwrap().value.unwrap())
                .collect();
            assert!(quot.windows(2).all(|w| w[0] >= w[1]), "{g}: {quot:?}");
            assert!(idl.windows(2).all(|w| w[0] >= w[1]), "{g}: {idl:?}");
            // main lower bounds
            let nu = g.ordered_matching_number().0 as u32;
            let n = g.n() as u32;
            assert!(idl.iter().all(|&v| v >= n - nu));
            assert!(quot.iter().all(|&v| v >= n - nu - 1));
        }
    }

    #[test]
    fn shift_identity_small() {
        assert!(polarization_shift_check(&Graph::complete(2).unwrap(), 1, &opts()).unwrap());
        assert!(polarization_shift_check(&Graph::complete(2).unwrap(), 2, &opts()).unwrap());
        assert!(polarization_shift_check(&Graph::path(3).unwrap(), 2, &opts()).unwrap());
        // guard: n*r too large
        assert!(matches!(
            polarization_shift_check(&Graph::cycle(5).unwrap(), 2, &opts()),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn deletion_monotonicity_examples() {
        let ip3 = edge_ideal(&Graph::path(3).unwrap());
        assert!(deletion_monotonicity_check(&ip3, "x3", &opts()).unwrap());
        let p = ideal(2, &[&[1, 0]]);
        assert!(deletion_monotonicity_check(&p, "x2", &opts()).unwrap());
        let j2 = symbolic_power(&Graph::path(4).unwrap(), 2).unwrap();
        assert!(deletion_monotonicity_check(&j2, "x1", &opts()).unwrap());
    }

    #[test]
    fn cap_independence() {
        let p3 = Graph::path(3).unwrap();
        let j2 = symbolic_power(&p3, 2).unwrap();
        for mode in [Mode::Ideal, Mode::Quotient] {
            let base = CharacteristicPoset::build(&j2, mode, &opts()).unwrap();
            let v0 = sdepth_of_poset(&base, &opts()).value;
            let mut cap = j2.max_exponents();
            cap[0] += 1;
            let bumped = CharacteristicPoset::build_with_cap(&j2, mode, cap, &opts()).unwrap();
            let v1 = sdepth_of_poset(&bumped, &opts()).value;
            assert_eq!(v0, v1, "cap bump changed sdepth in {mode:?}");
        }
    }
}
