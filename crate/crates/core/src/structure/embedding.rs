use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::NMGraph;

/// Counterclockwise cyclic neighbour order at every vertex.
///
/// Each list is stored rotated so that it starts at its smallest neighbour,
/// which makes equality and serialization independent of the starting point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RotationSystem {
    rotations: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Checks that `rotations[v]` is a permutation of the underlying
    /// neighbourhood of `v` for every vertex.
    pub fn new(g: &NMGraph, rotations: Vec<Vec<usize>>) -> Result<Self> {
        if rotations.len() != g.vertex_count() {
            return Err(Error::InvalidRotation(format!(
                "{} rotation lists for {} vertices",
                rotations.len(),
                g.vertex_count()
            )));
        }
        for (v, rot) in rotations.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::InvalidRotation(format!(
                    "rotation at {v} is {rot:?}, neighbourhood is {:?}",
                    g.neighbors(v)
                )));
            }
        }
        Ok(Self::normalized(rotations))
    }

    pub(crate) fn normalized(mut rotations: Vec<Vec<usize>>) -> Self {
        for rot in &mut rotations {
            if let Some(pos) = rot.iter().enumerate().min_by_key(|(_, &w)| w).map(|(i, _)| i) {
                rot.rotate_left(pos);
            }
        }
        Self { rotations }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    /// Same embedding seen from the other side of the plane.
    pub fn mirrored(&self) -> Self {
        Self::normalized(
            self.rotations
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        )
    }
}

/// Result of face tracing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCheck {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_holds: bool,
}

/// Traces the faces of `rot` and checks `V - E + F = 2`.
///
/// The face containing dart `(u, v)` continues with `(v, w)` where `w` follows
/// `u` in the rotation at `v`. Only connected graphs are accepted.
pub fn validate_embedding(g: &NMGraph, rot: &RotationSystem) -> Result<EulerCheck> {
    let rot = RotationSystem::new(g, rot.rotations.clone())?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let e = g.adjacency_count();
    // position of each neighbour inside the rotation at v
    let pos: Vec<std::collections::HashMap<usize, usize>> = rot
        .rotations
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
        .collect();
    let dart_index: Vec<usize> = {
        let mut acc = 0;
        rot.rotations
            .iter()
            .map(|r| {
                let start = acc;
                acc += r.len();
                start
            })
            .collect()
    };
    let mut visited = vec![false; 2 * e];
    let mut faces = 0;
    for u in 0..n {
        for (i, &v) in rot.rotations[u].iter().enumerate() {
            if visited[dart_index[u] + i] {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, v);
            loop {
                let idx = dart_index[a] + pos[a][&b];
                if visited[idx] {
                    break;
                }
                visited[idx] = true;
                let r = &rot.rotations[b];
                let next = r[(pos[b][&a] + 1) % r.len()];
                a = b;
                b = next;
            }
        }
    }
    if e == 0 {
        faces = 1;
    }
    Ok(EulerCheck {
        vertices: n,
        edges: e,
        faces,
        euler_holds: n as i64 - e as i64 + faces as i64 == 2,
    })
}
