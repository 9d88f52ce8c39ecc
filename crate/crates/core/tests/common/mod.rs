#![allow(dead_code)]

use nmgraph::{GraphBuilder, NMGraph, NMParams};
use rand::seq::SliceRandom;
use rand::Rng;

pub const MIXED_PARAMS: [(usize, usize); 7] = [(1, 0), (0, 2), (1, 1), (0, 3), (2, 0), (1, 2), (2, 1)];

pub fn params(n: usize, m: usize) -> NMParams {
    NMParams::new(n, m).unwrap()
}

pub fn random_params<R: Rng>(rng: &mut R) -> NMParams {
    let &(n, m) = MIXED_PARAMS.choose(rng).unwrap();
    params(n, m)
}

/// Each pair is present with probability `density` and then gets a uniform label.
pub fn random_graph<R: Rng>(rng: &mut R, params: NMParams, vertices: usize, density: f64) -> NMGraph {
    let mut b = GraphBuilder::new(params, vertices);
    for u in 0..vertices {
        for v in u + 1..vertices {
            if rng.gen_bool(density) {
                let label = rng.gen_range(1..=params.p());
                b.add_labeled(u, v, label).unwrap();
            }
        }
    }
    b.build()
}

pub fn random_permutation<R: Rng>(rng: &mut R, len: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..len).collect();
    perm.shuffle(rng);
    perm
}

/// Random type renaming and arc reversal, returned as `relabel` arguments.
pub fn random_relabel<R: Rng>(rng: &mut R, params: NMParams) -> (Vec<usize>, Vec<bool>, Vec<usize>) {
    let mut arc_perm: Vec<usize> = (1..=params.n()).collect();
    arc_perm.shuffle(rng);
    let arc_flip = (0..params.n()).map(|_| rng.gen_bool(0.5)).collect();
    let mut edge_perm: Vec<usize> = (1..=params.m()).collect();
    edge_perm.shuffle(rng);
    (arc_perm, arc_flip, edge_perm)
}

/// A copy of `h` with shuffled vertices, `extra` new vertices and random
/// adjacencies added on empty pairs, plus the embedding of `h` into it.
pub fn random_supergraph<R: Rng>(rng: &mut R, h: &NMGraph, extra: usize, density: f64) -> (NMGraph, Vec<usize>) {
    let params = h.params();
    let total = h.vertex_count() + extra;
    let perm = random_permutation(rng, total);
    let mut b = GraphBuilder::new(params, total);
    for u in 0..h.vertex_count() {
        for v in u + 1..h.vertex_count() {
            if let Some(l) = h.label(u, v) {
                b.add_labeled(perm[u], perm[v], l.value()).unwrap();
            }
        }
    }
    let inner = b.clone().build();
    for u in 0..total {
        for v in u + 1..total {
            if !inner.is_adjacent(u, v) && rng.gen_bool(density) {
                b.add_labeled(u, v, rng.gen_range(1..=params.p())).unwrap();
            }
        }
    }
    (b.build(), perm[..h.vertex_count()].to_vec())
}
