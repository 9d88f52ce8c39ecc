//! Left-right planarity test with embedding construction.
//!
//! DFS orientation computes lowpoints and a nesting order of the outgoing
//! edges at every vertex; a second DFS maintains a stack of conflict pairs of
//! return-edge intervals and fails when some interval would have to lie on
//! both sides. On success the side assignment of every edge, resolved through
//! the `ref` chains, yields the rotation system.

use std::collections::HashMap;

use crate::graph::NMGraph;
use crate::structure::RotationSystem;

type EdgeId = usize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// Cyclic neighbour lists with clockwise / counterclockwise links.
#[derive(Default)]
struct Embedding {
    cw: HashMap<(usize, usize), usize>,
    ccw: HashMap<(usize, usize), usize>,
    first: HashMap<usize, usize>,
}

impl Embedding {
    fn add_alone(&mut self, v: usize, w: usize) {
        self.cw.insert((v, w), w);
        self.ccw.insert((v, w), w);
        self.first.insert(v, w);
    }

    /// Inserts `w` clockwise after `reference` around `v`.
    fn add_cw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        let Some(r) = reference.filter(|_| self.first.contains_key(&v)) else {
            self.add_alone(v, w);
            return;
        };
        let after = self.cw[&(v, r)];
        self.cw.insert((v, r), w);
        self.cw.insert((v, w), after);
        self.ccw.insert((v, after), w);
        self.ccw.insert((v, w), r);
    }

    /// Inserts `w` counterclockwise before `reference` around `v`.
    fn add_ccw(&mut self, v: usize, w: usize, reference: usize) {
        let before = self.ccw[&(v, reference)];
        self.add_cw(v, w, Some(before));
        if self.first.get(&v) == Some(&reference) {
            self.first.insert(v, w);
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        match self.first.get(&v).copied() {
            Some(f) => self.add_ccw(v, w, f),
            None => self.add_alone(v, w),
        }
        self.first.insert(v, w);
    }

    fn clockwise(&self, v: usize) -> Vec<usize> {
        let Some(&start) = self.first.get(&v) else {
            return Vec::new();
        };
        let mut out = vec![start];
        let mut cur = self.cw[&(v, start)];
        while cur != start {
            out.push(cur);
            cur = self.cw[&(v, cur)];
        }
        out
    }
}

struct LrState<'a> {
    adj: &'a [Vec<usize>],
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    roots: Vec<usize>,
    // oriented edges
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: HashMap<(usize, usize), EdgeId>,
    out_edges: Vec<Vec<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    // testing phase
    refs: Vec<Option<EdgeId>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<Option<EdgeId>>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
    embedding: Embedding,
}

impl<'a> LrState<'a> {
    fn new(adj: &'a [Vec<usize>], edge_count: usize) -> Self {
        let n = adj.len();
        Self {
            adj,
            height: vec![None; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            src: Vec::with_capacity(edge_count),
            dst: Vec::with_capacity(edge_count),
            oriented: HashMap::with_capacity(2 * edge_count),
            out_edges: vec![Vec::new(); n],
            lowpt: Vec::with_capacity(edge_count),
            lowpt2: Vec::with_capacity(edge_count),
            nesting_depth: Vec::with_capacity(edge_count),
            refs: Vec::new(),
            side: Vec::new(),
            stack: Vec::new(),
            stack_bottom: Vec::new(),
            lowpt_edge: Vec::new(),
            left_ref: vec![usize::MAX; n],
            right_ref: vec![usize::MAX; n],
            embedding: Embedding::default(),
        }
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        let adj = self.adj;
        for &w in &adj[v] {
            if self.oriented.contains_key(&(v, w)) || self.oriented.contains_key(&(w, v)) {
                continue;
            }
            let vw = self.src.len();
            self.src.push(v);
            self.dst.push(w);
            self.oriented.insert((v, w), vw);
            self.out_edges[v].push(vw);
            let hv = self.height[v].expect("visited");
            self.lowpt.push(hv);
            self.lowpt2.push(hv);
            self.nesting_depth.push(0);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[vw] = hw,
            }
            self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < hv {
                // chordal
                self.nesting_depth[vw] += 1;
            }
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: EdgeId) -> bool {
        !i.is_empty() && self.lowpt[i.high.expect("non-empty interval")] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on stack"),
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let edges = self.out_edges[v].clone();
        for (idx, &ei) in edges.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < self.height[v].expect("visited") {
                if idx == 0 {
                    let e = e.expect("non-root vertex has a parent edge");
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e.expect("non-root vertex has a parent edge")) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_right_low = q.right.low.expect("non-empty right interval");
            if self.lowpt[q_right_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low.expect("non-empty")] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q_right_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(low) = p.right.low {
                self.refs[low] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(low) = p.left.low {
                self.refs[low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.src[e];
        let hu = self.height[u].expect("visited");
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().expect("checked");
            if let Some(low) = p.left.low {
                self.side[low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high.filter(|&h| self.dst[h] == u) {
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.refs[low] = p.right.low;
                    self.side[low] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high.filter(|&h| self.dst[h] == u) {
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.refs[low] = p.left.low;
                    self.side[low] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }

    fn sign(&mut self, e: EdgeId) -> i64 {
        // iterative resolution of the ref chain
        let mut chain = vec![e];
        while let Some(r) = self.refs[*chain.last().expect("non-empty")] {
            chain.push(r);
        }
        let mut acc = self.side[*chain.last().expect("non-empty")];
        for &c in chain.iter().rev().skip(1) {
            acc *= self.side[c];
            self.side[c] = acc;
            self.refs[c] = None;
        }
        self.side[e]
    }

    fn embed(&mut self, v: usize) {
        let edges = self.out_edges[v].clone();
        for ei in edges {
            let w = self.dst[ei];
            if self.parent_edge[w] == Some(ei) {
                self.embedding.add_first(w, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.embed(w);
            } else if self.side[ei] == 1 {
                let r = self.right_ref[w];
                self.embedding.add_cw(w, v, Some(r));
            } else {
                let l = self.left_ref[w];
                self.embedding.add_ccw(w, v, l);
                self.left_ref[w] = v;
            }
        }
    }
}

/// Planar rotation system of the underlying graph, or `None` if it is not
/// planar.
pub fn is_planar(g: &NMGraph) -> Option<RotationSystem> {
    let n = g.vertex_count();
    let e = g.adjacency_count();
    if n > 2 && e > 3 * n - 6 {
        return None;
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut st = LrState::new(&adj, e);
    for v in 0..n {
        if st.height[v].is_none() {
            st.height[v] = Some(0);
            st.roots.push(v);
            st.orient(v);
        }
    }
    let m = st.src.len();
    st.refs = vec![None; m];
    st.side = vec![1; m];
    st.stack_bottom = vec![0; m];
    st.lowpt_edge = vec![None; m];
    for v in 0..n {
        let mut out = std::mem::take(&mut st.out_edges[v]);
        out.sort_by_key(|&ei| st.nesting_depth[ei]);
        st.out_edges[v] = out;
    }
    for r in st.roots.clone() {
        if !st.test(r) {
            return None;
        }
    }
    for ei in 0..m {
        let s = st.sign(ei);
        st.nesting_depth[ei] *= s;
    }
    for v in 0..n {
        let mut out = std::mem::take(&mut st.out_edges[v]);
        out.sort_by_key(|&ei| st.nesting_depth[ei]);
        let mut previous = None;
        for &ei in &out {
            let w = st.dst[ei];
            st.embedding.add_cw(v, w, previous);
            previous = Some(w);
        }
        st.out_edges[v] = out;
    }
    for r in st.roots.clone() {
        st.embed(r);
    }
    // the construction produces clockwise order; store counterclockwise
    let rotations = (0..n)
        .map(|v| {
            let mut cw = st.embedding.clockwise(v);
            cw.reverse();
            cw
        })
        .collect();
    Some(RotationSystem::normalized(rotations))
}
