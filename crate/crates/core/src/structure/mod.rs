//! Structural queries on the underlying graph and named configurations.

mod embedding;
mod planarity;

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

pub use embedding::{validate_embedding, EulerCheck, RotationSystem};
pub use planarity::is_planar;

use crate::graph::{NMGraph, VertexSet};
use crate::seeing::special_unchecked;

/// Length of a shortest cycle of the underlying graph; `None` for forests.
///
/// BFS from every vertex; a non-tree edge `(u, w)` closes a closed walk of
/// length `dist(u) + dist(w) + 1` through the root, and the minimum over all
/// roots is attained by a shortest cycle.
pub fn girth(g: &NMGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

pub fn is_triangle_free(g: &NMGraph) -> bool {
    let adj = g.underlying_adjacency();
    g.edges()
        .iter()
        .map(|e| (e.a, e.b))
        .chain(g.arcs().iter().map(|a| (a.tail, a.head)))
        .all(|(u, v)| !adj[u].intersects(&adj[v]))
}

/// Two poles with their common neighbours inside a designated set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FkOccurrence {
    pub x: usize,
    pub y: usize,
    pub good_common_neighbors: Vec<usize>,
}

impl FkOccurrence {
    pub fn k(&self) -> usize {
        self.good_common_neighbors.len()
    }
}

/// All pole pairs `x < y` with at least `k` common neighbours in `good`,
/// each reported with its full common-good-neighbour list.
pub fn find_fk(g: &NMGraph, good: &VertexSet, k: usize) -> Vec<FkOccurrence> {
    let k = k.max(1);
    let n = g.vertex_count();
    let adj = g.underlying_adjacency();
    let good_bits = good.to_bitset(n);
    let mut out = Vec::new();
    for x in 0..n {
        if g.degree(x) < k {
            continue;
        }
        let gx = adj[x].intersection(&good_bits);
        if gx.count() < k {
            continue;
        }
        for y in x + 1..n {
            let common = gx.intersection(&adj[y]);
            if common.count() >= k {
                out.push(FkOccurrence {
                    x,
                    y,
                    good_common_neighbors: common.iter().collect(),
                });
            }
        }
    }
    out
}

/// Two poles agreeing in label class on three good vertices that are
/// pairwise joined by special 2-paths through three distinct helpers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalOccurrence {
    pub x: usize,
    pub y: usize,
    pub goods: [usize; 3],
    /// Internal vertices for the pairs `(g1, g2)`, `(g1, g3)`, `(g2, g3)`.
    pub helpers: [usize; 3],
}

/// Every `(x, y, {g1, g2, g3}, {h12, h13, h23})` where the `g_i` are common
/// neighbours of `x < y` in `good` carrying one label from `x` and one label
/// from `y`, and the `h` are distinct vertices outside `{x, y, g1, g2, g3}`
/// with `g_i h g_j` a special 2-path.
pub fn find_exceptional_configuration(g: &NMGraph, good: &VertexSet) -> Vec<ExceptionalOccurrence> {
    let n = g.vertex_count();
    let adj = g.underlying_adjacency();
    let good_bits = good.to_bitset(n);
    let mut out = Vec::new();
    for x in 0..n {
        let gx = adj[x].intersection(&good_bits);
        if gx.count() < 3 {
            continue;
        }
        for y in x + 1..n {
            let common = gx.intersection(&adj[y]);
            if common.count() < 3 {
                continue;
            }
            let mut classes: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
            for v in common.iter() {
                classes
                    .entry((g.raw_label(x, v), g.raw_label(y, v)))
                    .or_default()
                    .push(v);
            }
            for members in classes.values().filter(|m| m.len() >= 3) {
                for (i, &g1) in members.iter().enumerate() {
                    for (j, &g2) in members.iter().enumerate().skip(i + 1) {
                        for &g3 in &members[j + 1..] {
                            collect_helpers(g, &adj, x, y, [g1, g2, g3], &mut out);
                        }
                    }
                }
            }
        }
    }
    out
}

fn collect_helpers(
    g: &NMGraph,
    adj: &[crate::bitset::Bitset],
    x: usize,
    y: usize,
    goods: [usize; 3],
    out: &mut Vec<ExceptionalOccurrence>,
) {
    let named = [x, y, goods[0], goods[1], goods[2]];
    let candidates = |a: usize, b: usize| -> Vec<usize> {
        adj[a]
            .intersection(&adj[b])
            .iter()
            .filter(|h| !named.contains(h) && special_unchecked(g, a, *h, b))
            .collect()
    };
    let h12 = candidates(goods[0], goods[1]);
    let h13 = candidates(goods[0], goods[2]);
    let h23 = candidates(goods[1], goods[2]);
    for &a in &h12 {
        for &b in h13.iter().filter(|&&b| b != a) {
            for &c in h23.iter().filter(|&&c| c != a && c != b) {
                out.push(ExceptionalOccurrence {
                    x,
                    y,
                    goods,
                    helpers: [a, b, c],
                });
            }
        }
    }
}
