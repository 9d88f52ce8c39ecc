//! Generators for the extremal triangle-free planar graph and the test
//! gadgets used by the configuration queries.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::NmgDocument;
use crate::graph::{GraphBuilder, NMGraph, VertexSet};
use crate::params::NMParams;
use crate::cliques::{relative_clique_number, verify_relative_clique};
use crate::structure::{girth, is_planar, validate_embedding, RotationSystem};

/// Role of a vertex in the tight construction. Labels are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "role", rename_all = "lowercase")]
pub enum VertexRole {
    X,
    Y,
    /// `g(alpha, beta)`: an `alpha`-neighbour of `x` and `beta`-neighbour of `y`.
    G { alpha: usize, beta: usize },
    /// The mate of `g(alpha, beta)` with the same labels.
    GPrime { alpha: usize, beta: usize },
    /// Helper joining the two mates; it sees `g` with label 1 and `g'` with
    /// label 2, so the mates disagree on it.
    H { alpha: usize, beta: usize },
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::X => f.write_str("x"),
            VertexRole::Y => f.write_str("y"),
            VertexRole::G { alpha, beta } => write!(f, "g({alpha},{beta})"),
            VertexRole::GPrime { alpha, beta } => write!(f, "g'({alpha},{beta})"),
            VertexRole::H { alpha, beta } => write!(f, "h({alpha},{beta})"),
        }
    }
}

/// `K_{2,2p^2}` with poles `x`, `y`, one mate pair `g`, `g'` per label pair
/// `(alpha, beta)`, and a special 2-path through a helper for each mate pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightConstruction {
    pub graph: NMGraph,
    pub embedding: RotationSystem,
    /// `x`, `y` and every `g`, `g'`: a relative clique of order `2p^2 + 2`.
    pub good_set: VertexSet,
    pub roles: Vec<VertexRole>,
}

impl TightConstruction {
    pub const X: usize = 0;
    pub const Y: usize = 1;

    pub fn g(p: usize, alpha: usize, beta: usize) -> usize {
        2 + 2 * ((alpha - 1) * p + (beta - 1))
    }

    pub fn g_prime(p: usize, alpha: usize, beta: usize) -> usize {
        Self::g(p, alpha, beta) + 1
    }

    pub fn h(p: usize, alpha: usize, beta: usize) -> usize {
        2 + 2 * p * p + ((alpha - 1) * p + (beta - 1))
    }

    pub fn to_document(&self) -> NmgDocument {
        let p = self.graph.params();
        NmgDocument {
            graph: self.graph.clone(),
            embedding: Some(self.embedding.clone()),
            good: Some(self.good_set.clone()),
            comments: vec![format!(
                "tight construction for (n, m) = ({}, {}), p = {}",
                p.n(),
                p.m(),
                p.p()
            )],
        }
    }
}

/// Builds the tight construction. Requires `p = 2n + m >= 2`, which
/// [`NMParams`] already guarantees.
///
/// Vertex numbering: `x = 0`, `y = 1`, `g(a, b) = 2 + 2((a-1)p + (b-1))`,
/// `g'(a, b) = g(a, b) + 1`, `h(a, b) = 2 + 2p^2 + (a-1)p + (b-1)`.
pub fn generate_tight(params: NMParams) -> TightConstruction {
    let p = params.p();
    let count = 2 + 3 * p * p;
    let (x, y) = (TightConstruction::X, TightConstruction::Y);
    let mut b = GraphBuilder::new(params, count);
    let mut roles = vec![VertexRole::X; count];
    roles[y] = VertexRole::Y;
    let mut rotations = vec![Vec::new(); count];
    for alpha in 1..=p {
        for beta in 1..=p {
            let g = TightConstruction::g(p, alpha, beta);
            let g2 = g + 1;
            let h = TightConstruction::h(p, alpha, beta);
            roles[g] = VertexRole::G { alpha, beta };
            roles[g2] = VertexRole::GPrime { alpha, beta };
            roles[h] = VertexRole::H { alpha, beta };
            for v in [g, g2] {
                b.add_labeled(x, v, alpha).expect("fresh pair, valid label");
                b.add_labeled(y, v, beta).expect("fresh pair, valid label");
            }
            b.add_labeled(h, g, 1).expect("fresh pair, valid label");
            b.add_labeled(h, g2, 2).expect("fresh pair, valid label");
            // g's on a horizontal line between x (above) and y (below); each
            // helper sits between its two mates
            rotations[x].extend([g, g2]);
            rotations[g] = vec![h, x, y];
            rotations[g2] = vec![x, h, y];
            rotations[h] = vec![g2, g];
        }
    }
    rotations[y] = rotations[x].iter().rev().copied().collect();
    let graph = b.build();
    let embedding = RotationSystem::new(&graph, rotations).expect("rotation lists match neighbourhoods");
    let good_set = VertexSet::from_sorted((0..2 + 2 * p * p).collect());
    TightConstruction {
        graph,
        embedding,
        good_set,
        roles,
    }
}

/// A generated gadget with its designated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub graph: NMGraph,
    pub x: usize,
    pub y: usize,
    pub good_set: VertexSet,
}

impl Gadget {
    pub fn to_document(&self, description: &str) -> NmgDocument {
        NmgDocument {
            graph: self.graph.clone(),
            embedding: None,
            good: Some(self.good_set.clone()),
            comments: vec![
                description.to_string(),
                format!("poles: {} {}", self.x, self.y),
            ],
        }
    }
}

/// The exceptional configuration: poles `x = 0`, `y = 1`, good vertices
/// `2, 3, 4` in `N^alpha(x) ∩ N^beta(y)`, and helpers `5, 6, 7` joining the
/// pairs `(2, 3)`, `(3, 4)`, `(2, 4)` by special 2-paths (labels 1 and 2 as
/// seen from the helper). The good set is `{x, y, g1, g2, g3}`.
pub fn generate_exceptional(params: NMParams, alpha: usize, beta: usize) -> Result<Gadget> {
    params.label(alpha)?;
    params.label(beta)?;
    let mut b = GraphBuilder::new(params, 8);
    let goods = [2, 3, 4];
    for &g in &goods {
        b.add_labeled(0, g, alpha)?;
        b.add_labeled(1, g, beta)?;
    }
    for (h, (gi, gj)) in [(5, (2, 3)), (6, (3, 4)), (7, (2, 4))] {
        b.add_labeled(h, gi, 1)?;
        b.add_labeled(h, gj, 2)?;
    }
    Ok(Gadget {
        graph: b.build(),
        x: 0,
        y: 1,
        good_set: VertexSet::from_sorted(vec![0, 1, 2, 3, 4]),
    })
}

/// Poles `x = 0`, `y = 1` and common neighbours `g_i = 1 + i` with
/// `g_i ∈ N^{alpha_i}(x) ∩ N^{beta_i}(y)`. The good set is the `g_i`.
pub fn generate_fk(params: NMParams, label_pairs: &[(usize, usize)]) -> Result<Gadget> {
    if label_pairs.is_empty() {
        return Err(Error::InvalidVertexSet("at least one common neighbour required".into()));
    }
    let k = label_pairs.len();
    let mut b = GraphBuilder::new(params, 2 + k);
    for (i, &(alpha, beta)) in label_pairs.iter().enumerate() {
        b.add_labeled(0, 2 + i, alpha)?;
        b.add_labeled(1, 2 + i, beta)?;
    }
    Ok(Gadget {
        graph: b.build(),
        x: 0,
        y: 1,
        good_set: VertexSet::from_sorted((2..2 + k).collect()),
    })
}

/// Outcome of checking the tight construction for one parameter pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightCheck {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub vertices: usize,
    pub adjacencies: usize,
    pub girth: Option<usize>,
    pub planar: bool,
    pub euler_holds: bool,
    pub good_set_is_relative_clique: bool,
    pub omega_r: usize,
    pub expected_omega_r: usize,
}

impl TightCheck {
    pub fn passed(&self) -> bool {
        self.girth == Some(4)
            && self.planar
            && self.euler_holds
            && self.good_set_is_relative_clique
            && self.omega_r == self.expected_omega_r
    }

    /// `omega_r = 20 = 2*3^2+2 PASS`
    pub fn summary_line(&self) -> String {
        format!(
            "omega_r = {} = 2*{}^2+2 {}",
            self.omega_r,
            self.p,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Generates the tight construction and checks girth 4, planarity, the
/// emitted embedding and `omega_r = 2p^2 + 2`.
pub fn check_tight(params: NMParams) -> TightCheck {
    let t = generate_tight(params);
    let p = params.p();
    TightCheck {
        n: params.n(),
        m: params.m(),
        p,
        vertices: t.graph.vertex_count(),
        adjacencies: t.graph.adjacency_count(),
        girth: girth(&t.graph),
        planar: is_planar(&t.graph).is_some(),
        euler_holds: validate_embedding(&t.graph, &t.embedding).is_ok_and(|c| c.euler_holds),
        good_set_is_relative_clique: verify_relative_clique(&t.graph, &t.good_set).is_ok(),
        omega_r: relative_clique_number(&t.graph).0,
        expected_omega_r: 2 * p * p + 2,
    }
}
