//! Relative and absolute clique numbers.
//!
//! A set is a relative clique when no homomorphism identifies two of its
//! vertices; this holds exactly when every pair sees each other in the whole
//! graph. An absolute clique is a set whose induced subgraph has chromatic
//! number equal to its order; equivalently every pair sees each other inside
//! the induced subgraph.

use std::fmt::{self, Write};

use serde::Serialize;

use crate::bitset::Bitset;
use crate::graph::{NMGraph, VertexSet};
use crate::maxclique;
use crate::seeing::{seeing_graph, special_unchecked, SeeWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CliqueKind {
    Relative,
    Absolute,
}

impl fmt::Display for CliqueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CliqueKind::Relative => "relative",
            CliqueKind::Absolute => "absolute",
        })
    }
}

/// A vertex set together with one seeing witness per pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueCertificate {
    pub kind: CliqueKind,
    pub vertices: VertexSet,
    /// `((u, v), witness)` for every pair `u < v`, ascending.
    pub witnesses: Vec<((usize, usize), SeeWitness)>,
}

impl CliqueCertificate {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn witness(&self, u: usize, v: usize) -> Option<SeeWitness> {
        let key = (u.min(v), u.max(v));
        self.witnesses
            .binary_search_by_key(&key, |(k, _)| *k)
            .ok()
            .map(|i| self.witnesses[i].1)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{}-clique {}:", self.kind, self.size());
        for v in self.vertices.iter() {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
        for ((u, v), w) in &self.witnesses {
            let _ = writeln!(out, "pair {u} {v} {w}");
        }
        out
    }
}

/// A pair inside a candidate set that does not see each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnseenPair {
    pub u: usize,
    pub v: usize,
}

impl fmt::Display for UnseenPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} and {} do not see each other", self.u, self.v)
    }
}

/// Witness for `u`, `v` using only internal vertices accepted by `inside`.
fn witness_within(g: &NMGraph, u: usize, v: usize, inside: impl Fn(usize) -> bool) -> Option<SeeWitness> {
    if g.is_adjacent(u, v) {
        return Some(SeeWitness::Direct);
    }
    g.neighbors(u)
        .iter()
        .copied()
        .find(|&w| w != v && inside(w) && special_unchecked(g, u, w, v))
        .map(SeeWitness::Via)
}

fn certify(
    g: &NMGraph,
    set: &VertexSet,
    kind: CliqueKind,
) -> Result<CliqueCertificate, UnseenPair> {
    let bits = set.to_bitset(g.vertex_count());
    let vs = set.as_slice();
    let mut witnesses = Vec::with_capacity(vs.len() * vs.len().saturating_sub(1) / 2);
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let w = match kind {
                CliqueKind::Relative => witness_within(g, u, v, |_| true),
                CliqueKind::Absolute => witness_within(g, u, v, |w| bits.contains(w)),
            };
            match w {
                Some(w) => witnesses.push(((u, v), w)),
                None => return Err(UnseenPair { u, v }),
            }
        }
    }
    Ok(CliqueCertificate {
        kind,
        vertices: set.clone(),
        witnesses,
    })
}

/// Certificate when every pair of `r` sees each other in `g`.
pub fn verify_relative_clique(g: &NMGraph, r: &VertexSet) -> Result<CliqueCertificate, UnseenPair> {
    certify(g, r, CliqueKind::Relative)
}

/// Certificate when every pair of `a` sees each other inside `g[a]`.
pub fn verify_absolute_clique(g: &NMGraph, a: &VertexSet) -> Result<CliqueCertificate, UnseenPair> {
    certify(g, a, CliqueKind::Absolute)
}

/// Relative clique number with the lexicographically smallest maximum set.
pub fn relative_clique_number(g: &NMGraph) -> (usize, CliqueCertificate) {
    let n = g.vertex_count();
    let seeing = seeing_graph(g, None);
    let all = Bitset::full(n);
    let size = maxclique::clique_number(seeing.adjacency(), &all);
    let set = maxclique::lex_first_clique_of_size(seeing.adjacency(), &all, size)
        .expect("a clique of the computed size exists");
    let cert = verify_relative_clique(g, &VertexSet::from_sorted(set))
        .expect("seeing-graph clique is a relative clique");
    (size, cert)
}

/// Absolute clique number with the lexicographically smallest maximum set.
///
/// Searches cliques of the global seeing graph (a superset of the absolute
/// cliques) and accepts those whose pairs see each other internally. The
/// colouring bound on the seeing graph stays sound because the internal
/// condition only removes candidates.
pub fn absolute_clique_number(g: &NMGraph) -> (usize, CliqueCertificate) {
    let n = g.vertex_count();
    let seeing = seeing_graph(g, None);
    let mut inside = Bitset::new(n);
    let set = maxclique::lex_first_maximum(seeing.adjacency(), &Bitset::full(n), |clique| {
        inside.clear();
        clique.iter().for_each(|&v| inside.insert(v));
        clique.iter().enumerate().all(|(i, &u)| {
            clique[i + 1..]
                .iter()
                .all(|&v| witness_within(g, u, v, |w| inside.contains(w)).is_some())
        })
    });
    let cert = verify_absolute_clique(g, &VertexSet::from_sorted(set))
        .expect("accepted set is an absolute clique");
    (cert.size(), cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::NMParams;

    fn c4_mono() -> NMGraph {
        NMGraph::new(
            NMParams::new(0, 2).unwrap(),
            4,
            [],
            [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)],
        )
        .unwrap()
    }

    #[test]
    fn monochromatic_four_cycle() {
        let g = c4_mono();
        let (size, cert) = relative_clique_number(&g);
        assert_eq!(size, 2);
        assert_eq!(cert.vertices.as_slice(), &[0, 1]);
        assert_eq!(absolute_clique_number(&g).0, 2);
    }

    #[test]
    fn isolated_pair_fails_with_pair() {
        let g = NMGraph::empty(NMParams::new(1, 0).unwrap(), 2);
        let r = VertexSet::new([0, 1], 2).unwrap();
        assert_eq!(verify_relative_clique(&g, &r).unwrap_err(), UnseenPair { u: 0, v: 1 });
        let single = VertexSet::new([1], 2).unwrap();
        assert!(verify_relative_clique(&g, &single).is_ok());
        assert_eq!(relative_clique_number(&g).0, 1);
    }

    #[test]
    fn empty_graph_has_clique_number_zero() {
        let g = NMGraph::empty(NMParams::new(1, 0).unwrap(), 0);
        assert_eq!(relative_clique_number(&g).0, 0);
        assert_eq!(absolute_clique_number(&g).0, 0);
    }

    #[test]
    fn special_2path_is_absolute_clique() {
        // arc 0 -> 1 and arc 1 -> 2: 0 and 2 carry labels 1 and 2 from 1
        let g = NMGraph::new(NMParams::new(1, 0).unwrap(), 3, [(0, 1, 1), (1, 2, 1)], []).unwrap();
        let a = VertexSet::all(3);
        let cert = verify_absolute_clique(&g, &a).unwrap();
        assert_eq!(cert.witness(0, 2), Some(SeeWitness::Via(1)));
        assert_eq!(absolute_clique_number(&g).0, 3);
        let edge = VertexSet::new([0, 1], 3).unwrap();
        assert!(verify_absolute_clique(&g, &edge).is_ok());
    }

    #[test]
    fn monochromatic_path_is_not_absolute_clique() {
        let g = NMGraph::new(NMParams::new(0, 2).unwrap(), 3, [], [(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(
            verify_absolute_clique(&g, &VertexSet::all(3)).unwrap_err(),
            UnseenPair { u: 0, v: 2 }
        );
        assert_eq!(absolute_clique_number(&g).0, 2);
    }

    #[test]
    fn absolute_needs_internal_witness() {
        // 0 and 2 see each other only through 1; {0, 2} is relative, not absolute
        let g = NMGraph::new(NMParams::new(1, 0).unwrap(), 3, [(0, 1, 1), (1, 2, 1)], []).unwrap();
        let pair = VertexSet::new([0, 2], 3).unwrap();
        assert!(verify_relative_clique(&g, &pair).is_ok());
        assert!(verify_absolute_clique(&g, &pair).is_err());
    }

    #[test]
    fn certificate_text() {
        let g = NMGraph::new(NMParams::new(1, 0).unwrap(), 3, [(0, 1, 1), (1, 2, 1)], []).unwrap();
        let (_, cert) = relative_clique_number(&g);
        assert_eq!(
            cert.to_text(),
            "relative-clique 3: 0 1 2\npair 0 1 direct\npair 0 2 via 1\npair 1 2 direct\n"
        );
    }
}
