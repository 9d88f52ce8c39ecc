//! Homomorphism search and exact (n,m)-chromatic numbers.
//!
//! A homomorphism maps vertices so that every arc (edge) lands on an arc
//! (edge) of the same type and direction. The chromatic number is the
//! smallest order of a target admitting one.

use std::fmt::{self, Write};

use serde::Serialize;

use crate::bitset::Bitset;
use crate::cliques::relative_clique_number;
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, NMGraph};
use crate::params::{Adjacency, AdjacencyLabel, NMParams};
use crate::seeing::seeing_graph;

const UNASSIGNED: usize = usize::MAX;

/// Relation on a target pair `c1 < c2`: the label of `c2` as seen from `c1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairRelation {
    pub c1: usize,
    pub c2: usize,
    pub label: AdjacencyLabel,
}

impl PairRelation {
    pub fn describe(&self, params: NMParams) -> String {
        match self.label.decode(params) {
            Adjacency::Out(t) => format!("arc {t} forward"),
            Adjacency::In(t) => format!("arc {t} backward"),
            Adjacency::Edge(t) => format!("edge {t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomorphismWitness {
    /// `mapping[v]` is the image of source vertex `v`.
    pub mapping: Vec<usize>,
    /// Relations committed on the target (chromatic solves only).
    pub pair_table: Option<Vec<PairRelation>>,
}

impl HomomorphismWitness {
    pub fn to_text(&self, params: NMParams) -> String {
        let mut out = String::new();
        for (v, t) in self.mapping.iter().enumerate() {
            let _ = writeln!(out, "map {v} {t}");
        }
        for rel in self.pair_table.iter().flatten() {
            let _ = writeln!(out, "pair {} {} {}", rel.c1, rel.c2, rel.describe(params));
        }
        out
    }
}

/// True when `mapping` sends every adjacency of `g` to an identical one of `h`.
pub fn verify_homomorphism(g: &NMGraph, h: &NMGraph, mapping: &[usize]) -> bool {
    if g.params() != h.params()
        || mapping.len() != g.vertex_count()
        || mapping.iter().any(|&t| t >= h.vertex_count())
    {
        return false;
    }
    let arcs_ok = g.arcs().iter().all(|a| {
        let (s, t) = (mapping[a.tail], mapping[a.head]);
        s != t && h.label(s, t) == g.label(a.tail, a.head)
    });
    let edges_ok = g.edges().iter().all(|e| {
        let (s, t) = (mapping[e.a], mapping[e.b]);
        s != t && h.label(s, t) == g.label(e.a, e.b)
    });
    arcs_ok && edges_ok
}

fn label_mask(g: &NMGraph, v: usize) -> Bitset {
    let mut mask = Bitset::new(g.params().p() + 1);
    for &w in g.neighbors(v) {
        mask.insert(g.raw_label(v, w) as usize);
    }
    mask
}

/// Decides whether `g` maps to `h`.
///
/// Backtracking with forward checking: domains start as the target vertices
/// offering every label the source vertex uses, and each assignment filters
/// the domains of unassigned neighbours to the matching labelled
/// neighbourhood of the image. Seeing pairs of `g` must also receive distinct
/// images. Variables are picked by smallest domain.
pub fn homomorphism_exists(g: &NMGraph, h: &NMGraph) -> Result<Option<HomomorphismWitness>> {
    if g.params() != h.params() {
        return Err(Error::ParamMismatch {
            source_params: g.params().to_string(),
            target_params: h.params().to_string(),
        });
    }
    let (n, t) = (g.vertex_count(), h.vertex_count());
    let p = g.params().p();
    let mut by_label = vec![vec![Bitset::new(t); p + 1]; t];
    for (x, row) in by_label.iter_mut().enumerate() {
        for &y in h.neighbors(x) {
            row[h.raw_label(x, y) as usize].insert(y);
        }
    }
    let target_masks: Vec<Bitset> = (0..t).map(|x| label_mask(h, x)).collect();
    let domains: Vec<Bitset> = (0..n)
        .map(|v| {
            let need = label_mask(g, v);
            let mut d = Bitset::new(t);
            for (x, mask) in target_masks.iter().enumerate() {
                if need.is_subset(mask) {
                    d.insert(x);
                }
            }
            d
        })
        .collect();
    if domains.iter().any(Bitset::is_empty) {
        return Ok(None);
    }
    let seeing = seeing_graph(g, None);
    let mut search = HomSearch {
        g,
        by_label,
        seeing: seeing.adjacency(),
        domains,
        mapping: vec![UNASSIGNED; n],
    };
    Ok(search.run().then_some(HomomorphismWitness {
        mapping: search.mapping,
        pair_table: None,
    }))
}

struct HomSearch<'a> {
    g: &'a NMGraph,
    by_label: Vec<Vec<Bitset>>,
    seeing: &'a [Bitset],
    domains: Vec<Bitset>,
    mapping: Vec<usize>,
}

impl HomSearch<'_> {
    fn run(&mut self) -> bool {
        let Some(u) = (0..self.mapping.len())
            .filter(|&v| self.mapping[v] == UNASSIGNED)
            .min_by_key(|&v| (self.domains[v].count(), v))
        else {
            return true;
        };
        let values: Vec<usize> = self.domains[u].iter().collect();
        for t in values {
            let mut trail: Vec<(usize, Bitset)> = Vec::new();
            self.mapping[u] = t;
            if self.propagate(u, t, &mut trail) && self.run() {
                return true;
            }
            self.mapping[u] = UNASSIGNED;
            for (w, old) in trail.into_iter().rev() {
                self.domains[w] = old;
            }
        }
        false
    }

    fn propagate(&mut self, u: usize, t: usize, trail: &mut Vec<(usize, Bitset)>) -> bool {
        let g = self.g;
        for &w in g.neighbors(u) {
            if self.mapping[w] != UNASSIGNED {
                continue;
            }
            let allowed = &self.by_label[t][g.raw_label(u, w) as usize];
            if !self.domains[w].is_subset(allowed) {
                trail.push((w, self.domains[w].clone()));
                self.domains[w].intersect_with(allowed);
                if self.domains[w].is_empty() {
                    return false;
                }
            }
        }
        for w in self.seeing[u].iter() {
            if self.mapping[w] == UNASSIGNED && self.domains[w].contains(t) {
                trail.push((w, self.domains[w].clone()));
                self.domains[w].remove(t);
                if self.domains[w].is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub value: usize,
    pub witness: HomomorphismWitness,
    /// The target built from the committed pair relations; order `value`.
    pub target: NMGraph,
    pub lower_bound_used: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ChromaticOutcome {
    Found(ChromaticResult),
    /// No target of order at most `max_order` admits a homomorphism.
    Exhausted { lower_bound_used: usize, max_order: usize },
}

impl ChromaticOutcome {
    pub fn lower_bound_used(&self) -> usize {
        match self {
            ChromaticOutcome::Found(r) => r.lower_bound_used,
            ChromaticOutcome::Exhausted { lower_bound_used, .. } => *lower_bound_used,
        }
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            ChromaticOutcome::Found(r) => Some(r.value),
            ChromaticOutcome::Exhausted { .. } => None,
        }
    }
}

/// Exact chromatic number, searching orders from the relative clique number
/// up to `max_order` (default: the order of `g`).
///
/// For each order `k` the search colours vertices with `0..k` and builds the
/// target lazily: the relation on a colour pair is fixed by the first source
/// adjacency that lands on it and must be matched by every later one. Adding
/// adjacencies to a target never destroys a homomorphism, so a lazily built
/// partial target exists exactly when some target of order `k` does.
pub fn chromatic_number(g: &NMGraph, max_order: Option<usize>) -> Result<ChromaticOutcome> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let max_order = max_order.unwrap_or(g.vertex_count());
    let (lower, _) = relative_clique_number(g);
    let seeing = seeing_graph(g, None);
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(seeing.degree(v)), v));
    for k in lower..=max_order {
        let mut search = ColouringSearch::new(g, seeing.adjacency(), &order, k);
        if search.run(0) {
            return Ok(ChromaticOutcome::Found(search.into_result(lower)));
        }
    }
    Ok(ChromaticOutcome::Exhausted {
        lower_bound_used: lower,
        max_order,
    })
}

struct ColouringSearch<'a> {
    g: &'a NMGraph,
    seeing: &'a [Bitset],
    order: &'a [usize],
    k: usize,
    colour: Vec<usize>,
    /// `table[c * k + d]`: label of colour `d` seen from colour `c`, 0 if free.
    table: Vec<u32>,
    /// Number of source adjacencies resting on each pair `c < d`.
    uses: Vec<u32>,
    per_colour: Vec<usize>,
    used: usize,
}

impl<'a> ColouringSearch<'a> {
    fn new(g: &'a NMGraph, seeing: &'a [Bitset], order: &'a [usize], k: usize) -> Self {
        Self {
            g,
            seeing,
            order,
            k,
            colour: vec![UNASSIGNED; g.vertex_count()],
            table: vec![0; k * k],
            uses: vec![0; k * k],
            per_colour: vec![0; k],
            used: 0,
        }
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        // colour c is only tried once colours 0..c are in use
        let limit = self.k.min(self.used + 1);
        for c in 0..limit {
            let mut touched = Vec::new();
            if self.assign(u, c, &mut touched)
                && self.forward_check(u) && self.run(depth + 1) {
                    return true;
                }
            self.unassign(u, c, touched);
        }
        false
    }

    fn assign(&mut self, u: usize, c: usize, touched: &mut Vec<(usize, usize)>) -> bool {
        if self.seeing[u].iter().any(|v| self.colour[v] == c) {
            return false;
        }
        self.colour[u] = c;
        self.per_colour[c] += 1;
        if c == self.used {
            self.used += 1;
        }
        let params = self.g.params();
        let k = self.k;
        for &v in self.g.neighbors(u) {
            let d = self.colour[v];
            if d == UNASSIGNED || v == u {
                continue;
            }
            let label = self.g.raw_label(u, v);
            let slot = c * k + d;
            let key = c.min(d) * k + c.max(d);
            match self.table[slot] {
                0 => {
                    self.table[slot] = label;
                    self.table[d * k + c] = AdjacencyLabel::from_raw(label).dual(params).raw();
                }
                existing if existing != label => return false,
                _ => {}
            }
            self.uses[key] += 1;
            touched.push((c, d));
        }
        true
    }

    fn unassign(&mut self, u: usize, c: usize, touched: Vec<(usize, usize)>) {
        if self.colour[u] != c {
            return;
        }
        let k = self.k;
        for (a, b) in touched {
            let key = a.min(b) * k + a.max(b);
            self.uses[key] -= 1;
            if self.uses[key] == 0 {
                self.table[a * k + b] = 0;
                self.table[b * k + a] = 0;
            }
        }
        self.colour[u] = UNASSIGNED;
        self.per_colour[c] -= 1;
        while self.used > 0 && self.per_colour[self.used - 1] == 0 {
            self.used -= 1;
        }
    }

    /// Could `w` still take colour `c` given the current partial target?
    fn admissible(&self, w: usize, c: usize) -> bool {
        if self.seeing[w].iter().any(|v| self.colour[v] == c) {
            return false;
        }
        self.g.neighbors(w).iter().all(|&v| {
            let d = self.colour[v];
            d == UNASSIGNED || {
                let existing = self.table[c * self.k + d];
                existing == 0 || existing == self.g.raw_label(w, v)
            }
        })
    }

    fn forward_check(&self, u: usize) -> bool {
        let limit = self.k.min(self.used + 1);
        self.seeing[u]
            .iter()
            .filter(|&w| self.colour[w] == UNASSIGNED)
            .all(|w| (0..limit).any(|c| self.admissible(w, c)))
    }

    fn into_result(self, lower: usize) -> ChromaticResult {
        let k = self.k;
        let params = self.g.params();
        let mut pairs = Vec::new();
        let mut builder = GraphBuilder::new(params, k);
        for c1 in 0..k {
            for c2 in c1 + 1..k {
                let raw = self.table[c1 * k + c2];
                if raw != 0 {
                    builder
                        .add_labeled(c1, c2, raw as usize)
                        .expect("pair table holds one relation per pair");
                    pairs.push(PairRelation {
                        c1,
                        c2,
                        label: AdjacencyLabel::from_raw(raw),
                    });
                }
            }
        }
        ChromaticResult {
            value: k,
            witness: HomomorphismWitness {
                mapping: self.colour,
                pair_table: Some(pairs),
            },
            target: builder.build(),
            lower_bound_used: lower,
        }
    }
}

impl fmt::Display for ChromaticOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChromaticOutcome::Found(r) => write!(f, "chromatic number {}", r.value),
            ChromaticOutcome::Exhausted { max_order, .. } => {
                write!(f, "no target of order at most {max_order}")
            }
        }
    }
}
