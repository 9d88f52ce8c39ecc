//! Brute-force reference implementations for small graphs.
//!
//! Nothing here calls the seeing-graph or clique kernels: the seeing test is
//! recomputed from the raw arc and edge lists, and chromatic numbers come
//! either from exhaustive target enumeration or from enumerating vertex
//! partitions whose quotient is a valid (n,m)-graph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cliques::{absolute_clique_number, relative_clique_number};
use crate::error::{Error, Result};
use crate::format::serialize;
use crate::graph::{GraphBuilder, NMGraph, VertexSet};
use crate::homomorphism::{chromatic_number, homomorphism_exists};
use crate::params::NMParams;

pub const MAX_RELATIVE_VERTICES: usize = 20;
pub const MAX_CHROMATIC_VERTICES: usize = 5;
pub const MAX_CHROMATIC_LABELS: usize = 3;
pub const MAX_QUOTIENT_VERTICES: usize = 10;
pub const MAX_ABSOLUTE_VERTICES: usize = 8;
pub const MAX_ENUMERATION_VERTICES: usize = 6;

fn refuse(what: &str, limit: usize, got: usize) -> Error {
    Error::OracleCap(format!("{what} accepts at most {limit} vertices, got {got}"))
}

/// Labels read straight from the arc and edge lists.
fn label_matrix(g: &NMGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let nn = g.params().n();
    let mut lab = vec![vec![0; n]; n];
    for a in g.arcs() {
        lab[a.tail][a.head] = 2 * a.ty;
        lab[a.head][a.tail] = 2 * a.ty - 1;
    }
    for e in g.edges() {
        lab[e.a][e.b] = 2 * nn + e.ty;
        lab[e.b][e.a] = 2 * nn + e.ty;
    }
    lab
}

fn naive_sees(lab: &[Vec<usize>], u: usize, v: usize) -> bool {
    lab[u][v] != 0
        || (0..lab.len()).any(|w| {
            w != u && w != v && lab[u][w] != 0 && lab[v][w] != 0 && lab[w][u] != lab[w][v]
        })
}

/// Largest vertex set whose pairs all see each other, by subset search.
pub fn brute_relative_clique(g: &NMGraph) -> Result<usize> {
    let n = g.vertex_count();
    if n > MAX_RELATIVE_VERTICES {
        return Err(refuse("brute_relative_clique", MAX_RELATIVE_VERTICES, n));
    }
    let lab = label_matrix(g);
    let sees: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u != v && naive_sees(&lab, u, v)).collect())
        .collect();
    fn extend(sees: &[Vec<bool>], chosen: &mut Vec<usize>, next: usize, best: &mut usize) {
        *best = (*best).max(chosen.len());
        if chosen.len() + (sees.len() - next) <= *best {
            return;
        }
        for v in next..sees.len() {
            if chosen.iter().all(|&u| sees[u][v]) {
                chosen.push(v);
                extend(sees, chosen, v + 1, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    extend(&sees, &mut Vec::new(), 0, &mut best);
    Ok(best)
}

fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Complete target on `k` vertices whose pair `(i, j)`, `i < j`, carries
/// label `states[idx]` for `j` as seen from `i`.
fn complete_target(params: NMParams, k: usize, states: &[usize]) -> NMGraph {
    let mut b = GraphBuilder::new(params, k);
    let mut idx = 0;
    for i in 0..k {
        for j in i + 1..k {
            b.add_labeled(i, j, states[idx]).expect("valid label on fresh pair");
            idx += 1;
        }
    }
    b.build()
}

/// Advances a mixed-radix counter with digits in `lo..=hi`; false on wrap.
fn next_digits(digits: &mut [usize], lo: usize, hi: usize) -> bool {
    for d in digits.iter_mut() {
        if *d < hi {
            *d += 1;
            return true;
        }
        *d = lo;
    }
    false
}

/// Smallest `k` such that `g` maps to some complete (n,m)-graph on `k`
/// vertices, trying every such target.
pub fn brute_chromatic(g: &NMGraph) -> Result<usize> {
    let n = g.vertex_count();
    let p = g.params().p();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_CHROMATIC_VERTICES {
        return Err(refuse("brute_chromatic", MAX_CHROMATIC_VERTICES, n));
    }
    if p > MAX_CHROMATIC_LABELS {
        return Err(Error::OracleCap(format!(
            "brute_chromatic accepts at most {MAX_CHROMATIC_LABELS} labels, got {p}"
        )));
    }
    for k in 1..=n {
        let mut states = vec![1; pair_count(k)];
        loop {
            let target = complete_target(g.params(), k, &states);
            if homomorphism_exists(g, &target)?.is_some() {
                return Ok(k);
            }
            if !next_digits(&mut states, 1, p) {
                break;
            }
        }
    }
    unreachable!("g maps into a complete target on its own vertex count")
}

/// Whether identifying vertices according to `blocks` yields a valid
/// (n,m)-graph: no adjacency inside a block and at most one relation per
/// pair of blocks.
fn quotient_is_valid(lab: &[Vec<usize>], blocks: &[usize], block_count: usize, params: NMParams) -> bool {
    let mut table = vec![0usize; block_count * block_count];
    let n = lab.len();
    for u in 0..n {
        for v in u + 1..n {
            let l = lab[u][v];
            if l == 0 {
                continue;
            }
            let (a, b) = (blocks[u], blocks[v]);
            if a == b {
                return false;
            }
            let slot = &mut table[a * block_count + b];
            if *slot == 0 {
                *slot = l;
                table[b * block_count + a] = params.label(l).expect("valid").dual(params).value();
            } else if *slot != l {
                return false;
            }
        }
    }
    true
}

/// Calls `visit` with every restricted growth string of length `n`
/// (one per set partition of `0..n`) and its block count.
fn for_each_partition(n: usize, mut visit: impl FnMut(&[usize], usize) -> bool) {
    fn rec(
        blocks: &mut Vec<usize>,
        n: usize,
        used: usize,
        visit: &mut dyn FnMut(&[usize], usize) -> bool,
    ) -> bool {
        if blocks.len() == n {
            return visit(blocks, used);
        }
        for b in 0..=used {
            blocks.push(b);
            let keep_going = rec(blocks, n, used.max(b + 1), visit);
            blocks.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    rec(&mut Vec::with_capacity(n), n, 0, &mut visit);
}

/// Chromatic number as the fewest blocks of a vertex partition with a valid
/// quotient; every homomorphic image arises this way.
pub fn quotient_chromatic(g: &NMGraph) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_QUOTIENT_VERTICES {
        return Err(refuse("quotient_chromatic", MAX_QUOTIENT_VERTICES, n));
    }
    let lab = label_matrix(g);
    let mut best = n;
    for_each_partition(n, |blocks, count| {
        if count < best && quotient_is_valid(&lab, blocks, count, g.params()) {
            best = count;
        }
        true
    });
    Ok(best)
}

/// Largest `A` whose induced subgraph has chromatic number `|A|`. Small
/// subgraphs go through `brute_chromatic`, larger ones through the
/// partition search.
pub fn brute_absolute_clique(g: &NMGraph) -> Result<usize> {
    let n = g.vertex_count();
    if n > MAX_ABSOLUTE_VERTICES {
        return Err(refuse("brute_absolute_clique", MAX_ABSOLUTE_VERTICES, n));
    }
    for size in (1..=n).rev() {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let set = VertexSet::new((0..n).filter(|v| mask & (1 << v) != 0), n)?;
            let sub = g.induced_subgraph(&set);
            let chi = if size <= MAX_CHROMATIC_VERTICES && g.params().p() <= MAX_CHROMATIC_LABELS {
                brute_chromatic(&sub)?
            } else {
                quotient_chromatic(&sub)?
            };
            if chi == size {
                return Ok(size);
            }
        }
    }
    Ok(0)
}

/// Pairs `u < v` that no homomorphism identifies, found by enumerating every
/// vertex partition with a valid quotient.
pub fn never_identified_pairs(g: &NMGraph) -> Result<BTreeSet<(usize, usize)>> {
    let n = g.vertex_count();
    if n > MAX_ABSOLUTE_VERTICES {
        return Err(refuse("never_identified_pairs", MAX_ABSOLUTE_VERTICES, n));
    }
    let lab = label_matrix(g);
    let mut merged = vec![vec![false; n]; n];
    for_each_partition(n, |blocks, count| {
        if quotient_is_valid(&lab, blocks, count, g.params()) {
            for u in 0..n {
                for v in u + 1..n {
                    if blocks[u] == blocks[v] {
                        merged[u][v] = true;
                    }
                }
            }
        }
        true
    });
    Ok((0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !merged[u][v])
        .collect())
}

/// Relative clique number straight from the definition: the largest set
/// that every homomorphism maps injectively.
pub fn definitional_relative_clique(g: &NMGraph) -> Result<usize> {
    let n = g.vertex_count();
    let never = never_identified_pairs(g)?;
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
        if vs.len() > best
            && vs
                .iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| never.contains(&(u, v))))
        {
            best = vs.len();
        }
    }
    Ok(best)
}

/// Pairs `u < v` that see each other, recomputed from raw labels.
pub fn naive_seeing_pairs(g: &NMGraph) -> BTreeSet<(usize, usize)> {
    let lab = label_matrix(g);
    let n = g.vertex_count();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| naive_sees(&lab, u, v))
        .collect()
}

fn graph_from_states(params: NMParams, k: usize, states: &[usize]) -> NMGraph {
    let mut b = GraphBuilder::new(params, k);
    let mut idx = 0;
    for i in 0..k {
        for j in i + 1..k {
            if states[idx] != 0 {
                b.add_labeled(i, j, states[idx]).expect("valid label on fresh pair");
            }
            idx += 1;
        }
    }
    b.build()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Smallest pair-state vector over all relabellings of the vertices.
fn canonical_code(params: NMParams, k: usize, states: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    let mut lab = vec![vec![0; k]; k];
    let mut idx = 0;
    for i in 0..k {
        for j in i + 1..k {
            if states[idx] != 0 {
                let l = params.label(states[idx]).expect("valid");
                lab[i][j] = l.value();
                lab[j][i] = l.dual(params).value();
            }
            idx += 1;
        }
    }
    perms
        .iter()
        .map(|perm| {
            // perm[new] = old
            let mut code = Vec::with_capacity(states.len());
            for i in 0..k {
                for j in i + 1..k {
                    code.push(lab[perm[i]][perm[j]]);
                }
            }
            code
        })
        .min()
        .unwrap_or_default()
}

/// Every labelled (n,m)-graph on `vertex_count` vertices: each of the
/// `C(k, 2)` pairs is absent or carries one of the `2n + m` labels, giving
/// `(2n + m + 1)^C(k, 2)` graphs. With `dedup`, one representative per
/// isomorphism class (its canonical form), in canonical order.
pub fn enumerate_nm_graphs(
    vertex_count: usize,
    params: NMParams,
    dedup: bool,
) -> Result<Box<dyn Iterator<Item = NMGraph>>> {
    if vertex_count > MAX_ENUMERATION_VERTICES {
        return Err(refuse("enumerate_nm_graphs", MAX_ENUMERATION_VERTICES, vertex_count));
    }
    let k = vertex_count;
    let p = params.p();
    let pairs = pair_count(k);
    if dedup {
        let perms = permutations(k);
        let mut codes = BTreeSet::new();
        let mut states = vec![0; pairs];
        loop {
            codes.insert(canonical_code(params, k, &states, &perms));
            if !next_digits(&mut states, 0, p) {
                break;
            }
        }
        return Ok(Box::new(
            codes
                .into_iter()
                .map(move |code| graph_from_states(params, k, &code)),
        ));
    }
    let mut states = Some(vec![0; pairs]);
    Ok(Box::new(std::iter::from_fn(move || {
        let current = states.take()?;
        let mut next = current.clone();
        if next_digits(&mut next, 0, p) {
            states = Some(next);
        }
        Some(graph_from_states(params, k, &current))
    })))
}

/// Result of checking one graph against every oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleComparison {
    pub relative_fast: usize,
    pub relative_brute: usize,
    pub relative_definitional: usize,
    pub absolute_fast: usize,
    pub absolute_brute: usize,
    pub chromatic_fast: usize,
    pub chromatic_brute: usize,
    /// Seeing pairs coincide with pairs no homomorphism identifies.
    pub pairwise_characterization: bool,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.relative_fast == self.relative_brute
            && self.relative_fast == self.relative_definitional
            && self.absolute_fast == self.absolute_brute
            && self.chromatic_fast == self.chromatic_brute
            && self.pairwise_characterization
    }

    /// `omega_a <= omega_r <= chi`.
    pub fn sandwich_holds(&self) -> bool {
        self.absolute_fast <= self.relative_fast && self.relative_fast <= self.chromatic_fast
    }
}

/// Runs the fast solvers and every oracle on `g` (nonempty, within caps).
pub fn compare(g: &NMGraph) -> Result<OracleComparison> {
    let chromatic_fast = chromatic_number(g, None)?
        .value()
        .expect("unbounded search always finds a value");
    Ok(OracleComparison {
        relative_fast: relative_clique_number(g).0,
        relative_brute: brute_relative_clique(g)?,
        relative_definitional: definitional_relative_clique(g)?,
        absolute_fast: absolute_clique_number(g).0,
        absolute_brute: brute_absolute_clique(g)?,
        chromatic_fast,
        chromatic_brute: brute_chromatic(g)?,
        pairwise_characterization: naive_seeing_pairs(g) == never_identified_pairs(g)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph: String,
    pub comparison: OracleComparison,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub graphs_checked: usize,
    pub disagreements: usize,
    pub sandwich_violations: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0 && self.sandwich_violations == 0
    }

    pub fn record(&mut self, g: &NMGraph, cmp: OracleComparison) {
        self.graphs_checked += 1;
        let bad_agree = !cmp.agrees();
        let bad_sandwich = !cmp.sandwich_holds();
        self.disagreements += bad_agree as usize;
        self.sandwich_violations += bad_sandwich as usize;
        if (bad_agree || bad_sandwich) && self.first_counterexample.is_none() {
            self.first_counterexample = Some(Counterexample {
                graph: serialize(g),
                comparison: cmp,
            });
        }
    }
}

/// Refuses sweeps that would hit an oracle cap partway through.
pub fn check_sweep_limits(max_vertices: usize, params: NMParams) -> Result<()> {
    if max_vertices > MAX_CHROMATIC_VERTICES {
        return Err(refuse("sweep", MAX_CHROMATIC_VERTICES, max_vertices));
    }
    if params.p() > MAX_CHROMATIC_LABELS {
        return Err(Error::OracleCap(format!(
            "sweep accepts at most {MAX_CHROMATIC_LABELS} labels, got {}",
            params.p()
        )));
    }
    Ok(())
}

/// Compares the fast solvers with the oracles on every labelled graph with
/// `1..=max_vertices` vertices.
pub fn sweep(max_vertices: usize, params: NMParams) -> Result<SweepReport> {
    check_sweep_limits(max_vertices, params)?;
    let mut report = SweepReport::default();
    for k in 1..=max_vertices {
        for g in enumerate_nm_graphs(k, params, false)? {
            let cmp = compare(&g)?;
            report.record(&g, cmp);
        }
    }
    Ok(report)
}
