use std::collections::BTreeSet;

use serde::Serialize;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::params::{Adjacency, AdjacencyLabel, NMParams};

/// Arc of type `ty` (1-based) from `tail` to `head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TypedArc {
    pub tail: usize,
    pub head: usize,
    pub ty: usize,
}

/// Undirected edge of type `ty` (1-based), stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TypedEdge {
    pub a: usize,
    pub b: usize,
    pub ty: usize,
}

/// Sorted set of distinct vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts the input; rejects duplicates and indices `>= vertex_count`.
    pub fn new(vertices: impl IntoIterator<Item = usize>, vertex_count: usize) -> Result<Self> {
        let mut vs: Vec<usize> = vertices.into_iter().collect();
        vs.sort_unstable();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidVertexSet(format!("vertex {} listed twice", w[0])));
        }
        if let Some(&v) = vs.last() {
            if v >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: vertex_count,
                });
            }
        }
        Ok(Self(vs))
    }

    pub(crate) fn from_sorted(vs: Vec<usize>) -> Self {
        debug_assert!(vs.windows(2).all(|w| w[0] < w[1]));
        Self(vs)
    }

    pub fn all(vertex_count: usize) -> Self {
        Self((0..vertex_count).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_bitset(&self, capacity: usize) -> Bitset {
        let mut b = Bitset::new(capacity);
        for &v in &self.0 {
            b.insert(v);
        }
        b
    }
}

/// A mixed graph with `n` arc types and `m` edge types on vertices
/// `0..vertex_count`. Immutable once built; use [`GraphBuilder`].
#[derive(Clone, Debug)]
pub struct NMGraph {
    params: NMParams,
    vertex_count: usize,
    arcs: Vec<TypedArc>,
    edges: Vec<TypedEdge>,
    /// `labels[x * vertex_count + y]` is the label of `y` seen from `x`, 0 if absent.
    labels: Vec<u32>,
    neighbors: Vec<Vec<usize>>,
}

impl PartialEq for NMGraph {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params
            && self.vertex_count == other.vertex_count
            && self.arcs == other.arcs
            && self.edges == other.edges
    }
}

impl Eq for NMGraph {}

impl NMGraph {
    pub fn new(
        params: NMParams,
        vertex_count: usize,
        arcs: impl IntoIterator<Item = (usize, usize, usize)>,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        let mut b = GraphBuilder::new(params, vertex_count);
        for (u, v, t) in arcs {
            b.add_arc(u, v, t)?;
        }
        for (u, v, t) in edges {
            b.add_edge(u, v, t)?;
        }
        Ok(b.build())
    }

    pub fn empty(params: NMParams, vertex_count: usize) -> Self {
        GraphBuilder::new(params, vertex_count).build()
    }

    pub fn params(&self) -> NMParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arcs(&self) -> &[TypedArc] {
        &self.arcs
    }

    pub fn edges(&self) -> &[TypedEdge] {
        &self.edges
    }

    /// Number of adjacent pairs (arcs plus edges).
    pub fn adjacency_count(&self) -> usize {
        self.arcs.len() + self.edges.len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            })
        }
    }

    /// Label of `y` as seen from `x`, or `None` when they are not adjacent.
    pub fn label_of(&self, x: usize, y: usize) -> Result<Option<AdjacencyLabel>> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::NotDistinct);
        }
        Ok(self.label(x, y))
    }

    /// Unchecked variant of [`label_of`](Self::label_of) for the kernels.
    #[inline]
    pub fn label(&self, x: usize, y: usize) -> Option<AdjacencyLabel> {
        match self.labels[x * self.vertex_count + y] {
            0 => None,
            l => Some(AdjacencyLabel::from_raw(l)),
        }
    }

    #[inline]
    pub(crate) fn raw_label(&self, x: usize, y: usize) -> u32 {
        self.labels[x * self.vertex_count + y]
    }

    #[inline]
    pub fn is_adjacent(&self, x: usize, y: usize) -> bool {
        self.labels[x * self.vertex_count + y] != 0
    }

    /// Underlying neighbourhood of `x`, ascending.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.neighbors[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.neighbors[x].len()
    }

    /// The set `N^alpha(x)`.
    pub fn neighbors_with_label(&self, x: usize, alpha: AdjacencyLabel) -> Result<VertexSet> {
        self.check_vertex(x)?;
        if alpha.value() > self.params.p() {
            return Err(Error::BadLabel {
                label: alpha.value(),
                p: self.params.p(),
            });
        }
        Ok(VertexSet::from_sorted(
            self.neighbors[x]
                .iter()
                .copied()
                .filter(|&y| self.raw_label(x, y) == alpha.raw())
                .collect(),
        ))
    }

    pub fn underlying_adjacency(&self) -> Vec<Bitset> {
        self.neighbors
            .iter()
            .map(|ns| {
                let mut b = Bitset::new(self.vertex_count);
                ns.iter().for_each(|&v| b.insert(v));
                b
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Renames types. `arc_perm[i - 1]` is the new name of arc type `i`;
    /// types with `arc_flip[i - 1]` set have their arcs reversed.
    pub fn relabel(&self, arc_perm: &[usize], arc_flip: &[bool], edge_perm: &[usize]) -> Result<Self> {
        check_permutation(arc_perm, self.params.n(), "arc")?;
        check_permutation(edge_perm, self.params.m(), "edge")?;
        if arc_flip.len() != self.params.n() {
            return Err(Error::InvalidPermutation(format!(
                "expected {} arc flip flags, got {}",
                self.params.n(),
                arc_flip.len()
            )));
        }
        let arcs = self.arcs.iter().map(|a| {
            let t = arc_perm[a.ty - 1];
            if arc_flip[a.ty - 1] {
                (a.head, a.tail, t)
            } else {
                (a.tail, a.head, t)
            }
        });
        let edges = self.edges.iter().map(|e| (e.a, e.b, edge_perm[e.ty - 1]));
        Self::new(self.params, self.vertex_count, arcs, edges)
    }

    /// Moves vertex `v` to `perm[v]`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertex_count {
            return Err(Error::InvalidPermutation(format!(
                "expected {} entries, got {}",
                self.vertex_count,
                perm.len()
            )));
        }
        let zero_based: Vec<usize> = perm.iter().map(|&v| v + 1).collect();
        check_permutation(&zero_based, self.vertex_count, "vertex")?;
        let arcs = self.arcs.iter().map(|a| (perm[a.tail], perm[a.head], a.ty));
        let edges = self.edges.iter().map(|e| (perm[e.a], perm[e.b], e.ty));
        Self::new(self.params, self.vertex_count, arcs, edges)
    }

    /// Subgraph induced by `set`, renumbered `0..set.len()` in ascending order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, v) in set.iter().enumerate() {
            index[v] = i;
        }
        let mut b = GraphBuilder::new(self.params, set.len());
        for a in &self.arcs {
            if index[a.tail] != usize::MAX && index[a.head] != usize::MAX {
                b.add_arc(index[a.tail], index[a.head], a.ty).expect("induced arc");
            }
        }
        for e in &self.edges {
            if index[e.a] != usize::MAX && index[e.b] != usize::MAX {
                b.add_edge(index[e.a], index[e.b], e.ty).expect("induced edge");
            }
        }
        b.build()
    }
}

fn check_permutation(perm: &[usize], size: usize, what: &str) -> Result<()> {
    if perm.len() != size {
        return Err(Error::InvalidPermutation(format!(
            "{what} permutation has {} entries, expected {size}",
            perm.len()
        )));
    }
    let distinct: BTreeSet<usize> = perm.iter().copied().collect();
    if distinct.len() != size || perm.iter().any(|&t| t == 0 || t > size) {
        return Err(Error::InvalidPermutation(format!(
            "{what} permutation {perm:?} is not a permutation of 1..={size}"
        )));
    }
    Ok(())
}

/// Incremental constructor enforcing simplicity as adjacencies are added.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    params: NMParams,
    vertex_count: usize,
    arcs: Vec<TypedArc>,
    edges: Vec<TypedEdge>,
    labels: Vec<u32>,
}

impl GraphBuilder {
    pub fn new(params: NMParams, vertex_count: usize) -> Self {
        Self {
            params,
            vertex_count,
            arcs: Vec::new(),
            edges: Vec::new(),
            labels: vec![0; vertex_count * vertex_count],
        }
    }

    pub fn params(&self) -> NMParams {
        self.params
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    count: self.vertex_count,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.labels[u * self.vertex_count + v] != 0 {
            return Err(Error::DuplicateAdjacency(u.min(v), u.max(v)));
        }
        Ok(())
    }

    fn set(&mut self, x: usize, y: usize, label: AdjacencyLabel) {
        let n = self.vertex_count;
        self.labels[x * n + y] = label.raw();
        self.labels[y * n + x] = label.dual(self.params).raw();
    }

    pub fn add_arc(&mut self, tail: usize, head: usize, ty: usize) -> Result<&mut Self> {
        let label = AdjacencyLabel::encode(Adjacency::Out(ty), self.params)?;
        self.check_pair(tail, head)?;
        self.set(tail, head, label);
        self.arcs.push(TypedArc { tail, head, ty });
        Ok(self)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, ty: usize) -> Result<&mut Self> {
        let label = AdjacencyLabel::encode(Adjacency::Edge(ty), self.params)?;
        self.check_pair(u, v)?;
        self.set(u, v, label);
        self.edges.push(TypedEdge {
            a: u.min(v),
            b: u.max(v),
            ty,
        });
        Ok(self)
    }

    /// Adds the adjacency that makes `y` carry `label` as seen from `x`.
    pub fn add_labeled(&mut self, x: usize, y: usize, label: usize) -> Result<&mut Self> {
        let label = AdjacencyLabel::new(label, self.params)?;
        match label.decode(self.params) {
            Adjacency::Out(t) => self.add_arc(x, y, t),
            Adjacency::In(t) => self.add_arc(y, x, t),
            Adjacency::Edge(t) => self.add_edge(x, y, t),
        }
    }

    pub fn build(mut self) -> NMGraph {
        self.arcs.sort_unstable();
        self.edges.sort_unstable();
        let n = self.vertex_count;
        let neighbors = (0..n)
            .map(|x| (0..n).filter(|&y| self.labels[x * n + y] != 0).collect())
            .collect();
        NMGraph {
            params: self.params,
            vertex_count: n,
            arcs: self.arcs,
            edges: self.edges,
            labels: self.labels,
            neighbors,
        }
    }
}

impl Serialize for NMGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("NMGraph", 5)?;
        s.serialize_field("params", &self.params())?;
        s.serialize_field("vertices", &self.vertex_count())?;
        s.serialize_field("arcs", self.arcs())?;
        s.serialize_field("edges", self.edges())?;
        s.end()
    }
}
