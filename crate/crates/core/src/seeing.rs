//! Agreement, special 2-paths and the "sees" relation.
//!
//! Two vertices agree on a common neighbour `z` when `z` carries the same
//! label from both of them. A 2-path `u w v` is special when `u` and `v`
//! disagree on `w`. `u` sees `v` when they are adjacent or joined by a special
//! 2-path.

use std::collections::BTreeMap;
use std::fmt::{self, Write};

use serde::Serialize;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{NMGraph, VertexSet};

/// Why two vertices see each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "via")]
pub enum SeeWitness {
    Direct,
    Via(usize),
}

impl fmt::Display for SeeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeeWitness::Direct => f.write_str("direct"),
            SeeWitness::Via(w) => write!(f, "via {w}"),
        }
    }
}

fn check_distinct(g: &NMGraph, vs: &[usize]) -> Result<()> {
    for &v in vs {
        g.check_vertex(v)?;
    }
    for (i, a) in vs.iter().enumerate() {
        if vs[i + 1..].contains(a) {
            return Err(Error::NotDistinct);
        }
    }
    Ok(())
}

/// `x` and `y` agree on `z`. False when either is not adjacent to `z`.
pub fn agree(g: &NMGraph, x: usize, y: usize, z: usize) -> Result<bool> {
    check_distinct(g, &[x, y, z])?;
    Ok(agree_unchecked(g, x, y, z))
}

#[inline]
fn agree_unchecked(g: &NMGraph, x: usize, y: usize, z: usize) -> bool {
    let a = g.raw_label(x, z);
    a != 0 && a == g.raw_label(y, z)
}

pub fn is_special_2path(g: &NMGraph, u: usize, w: usize, v: usize) -> Result<bool> {
    check_distinct(g, &[u, w, v])?;
    Ok(special_unchecked(g, u, w, v))
}

#[inline]
pub(crate) fn special_unchecked(g: &NMGraph, u: usize, w: usize, v: usize) -> bool {
    g.is_adjacent(u, w) && g.is_adjacent(w, v) && !agree_unchecked(g, u, v, w)
}

/// First witness in the order direct, then ascending via-vertex.
pub fn sees(g: &NMGraph, u: usize, v: usize) -> Result<Option<SeeWitness>> {
    check_distinct(g, &[u, v])?;
    if g.is_adjacent(u, v) {
        return Ok(Some(SeeWitness::Direct));
    }
    Ok(g.neighbors(u)
        .iter()
        .copied()
        .find(|&w| w != v && special_unchecked(g, u, w, v))
        .map(SeeWitness::Via))
}

/// All witnesses for the pair, in canonical order.
pub fn all_witnesses(g: &NMGraph, u: usize, v: usize) -> Result<Vec<SeeWitness>> {
    check_distinct(g, &[u, v])?;
    let mut out = Vec::new();
    if g.is_adjacent(u, v) {
        out.push(SeeWitness::Direct);
    }
    out.extend(
        g.neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w != v && special_unchecked(g, u, w, v))
            .map(SeeWitness::Via),
    );
    Ok(out)
}

/// Simple graph of seeing pairs among a vertex subset, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeeingGraph {
    vertex_count: usize,
    members: VertexSet,
    adjacency: Vec<Bitset>,
    witnesses: BTreeMap<(usize, usize), Vec<SeeWitness>>,
}

impl SeeingGraph {
    /// Indices range over the whole host graph; non-members are isolated.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn adjacency(&self) -> &[Bitset] {
        &self.adjacency
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|a| a.contains(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.witnesses.len()
    }

    /// Pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.witnesses.keys().copied()
    }

    pub fn witnesses(&self, u: usize, v: usize) -> &[SeeWitness] {
        self.witnesses
            .get(&(u.min(v), u.max(v)))
            .map_or(&[], |w| w.as_slice())
    }

    /// Edge list with one comment per pair listing its witnesses.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "seeing {} {} {}",
            self.vertex_count,
            self.members.len(),
            self.edge_count()
        );
        for ((u, v), ws) in &self.witnesses {
            let _ = write!(out, "see {u} {v} #");
            for w in ws {
                let _ = write!(out, " {w};");
            }
            out.pop();
            out.push('\n');
        }
        out
    }
}

/// Builds the seeing graph on `restrict_to` (all vertices when `None`).
///
/// Internal vertices of special 2-paths may lie anywhere in `g`. Runs in
/// `O(sum of squared degrees)` by enumerating neighbour pairs of each vertex.
pub fn seeing_graph(g: &NMGraph, restrict_to: Option<&VertexSet>) -> SeeingGraph {
    let n = g.vertex_count();
    let members = restrict_to.cloned().unwrap_or_else(|| VertexSet::all(n));
    let member_bits = members.to_bitset(n);
    let mut witnesses: BTreeMap<(usize, usize), Vec<SeeWitness>> = BTreeMap::new();
    for u in members.iter() {
        for &v in g.neighbors(u) {
            if v > u && member_bits.contains(v) {
                witnesses.insert((u, v), vec![SeeWitness::Direct]);
            }
        }
    }
    // ascending w keeps each witness list sorted after the direct entry
    for w in 0..n {
        let ns: Vec<usize> = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&x| member_bits.contains(x))
            .collect();
        for (i, &u) in ns.iter().enumerate() {
            let lu = g.raw_label(w, u);
            for &v in &ns[i + 1..] {
                if g.raw_label(w, v) != lu {
                    witnesses.entry((u, v)).or_default().push(SeeWitness::Via(w));
                }
            }
        }
    }
    let mut adjacency = vec![Bitset::new(n); n];
    for &(u, v) in witnesses.keys() {
        adjacency[u].insert(v);
        adjacency[v].insert(u);
    }
    SeeingGraph {
        vertex_count: n,
        members,
        adjacency,
        witnesses,
    }
}
