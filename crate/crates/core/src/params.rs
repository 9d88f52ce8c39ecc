use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Numbers of arc types (`n`) and edge types (`m`).
///
/// `(0, 0)` and `(0, 1)` are rejected: with fewer than two adjacency labels the
/// seeing relation degenerates to plain adjacency.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NMParams {
    n: usize,
    m: usize,
}

impl NMParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if 2 * n + m < 2 {
            return Err(Error::InvalidParams { n, m });
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of distinct adjacency labels, `2n + m`.
    pub fn p(&self) -> usize {
        2 * self.n + self.m
    }

    pub fn label(&self, value: usize) -> Result<AdjacencyLabel> {
        AdjacencyLabel::new(value, *self)
    }

    pub fn labels(&self) -> impl Iterator<Item = AdjacencyLabel> {
        (1..=self.p()).map(|v| AdjacencyLabel(v as u32))
    }
}

impl fmt::Display for NMParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.m)
    }
}

/// Label of a vertex `y` as seen from a neighbour `x`.
///
/// An arc of type `i` from `x` to `y` gives `y` the label `2i` from `x` and `x`
/// the label `2i - 1` from `y`. An edge of type `j` gives both endpoints the
/// label `2n + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct AdjacencyLabel(u32);

/// Decoded form of an [`AdjacencyLabel`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjacency {
    /// Arc of the given type leaving the observing vertex.
    Out(usize),
    /// Arc of the given type entering the observing vertex.
    In(usize),
    Edge(usize),
}

impl AdjacencyLabel {
    pub fn new(value: usize, params: NMParams) -> Result<Self> {
        if value == 0 || value > params.p() {
            return Err(Error::BadLabel {
                label: value,
                p: params.p(),
            });
        }
        Ok(Self(value as u32))
    }

    pub(crate) fn from_raw(value: u32) -> Self {
        debug_assert!(value > 0);
        Self(value)
    }

    pub fn value(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn raw(self) -> u32 {
        self.0
    }

    /// The label the other endpoint carries.
    pub fn dual(self, params: NMParams) -> Self {
        let v = self.value();
        if v > 2 * params.n() {
            self
        } else if v.is_multiple_of(2) {
            Self(self.0 - 1)
        } else {
            Self(self.0 + 1)
        }
    }

    pub fn decode(self, params: NMParams) -> Adjacency {
        let v = self.value();
        if v > 2 * params.n() {
            Adjacency::Edge(v - 2 * params.n())
        } else if v.is_multiple_of(2) {
            Adjacency::Out(v / 2)
        } else {
            Adjacency::In(v.div_ceil(2))
        }
    }

    pub fn encode(adjacency: Adjacency, params: NMParams) -> Result<Self> {
        match adjacency {
            Adjacency::Out(t) if (1..=params.n()).contains(&t) => Ok(Self(2 * t as u32)),
            Adjacency::In(t) if (1..=params.n()).contains(&t) => Ok(Self(2 * t as u32 - 1)),
            Adjacency::Out(t) | Adjacency::In(t) => Err(Error::BadArcType {
                ty: t,
                n: params.n(),
            }),
            Adjacency::Edge(t) if (1..=params.m()).contains(&t) => {
                Ok(Self((2 * params.n() + t) as u32))
            }
            Adjacency::Edge(t) => Err(Error::BadEdgeType {
                ty: t,
                m: params.m(),
            }),
        }
    }
}

impl fmt::Display for AdjacencyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_params() {
        assert!(NMParams::new(0, 0).is_err());
        assert!(NMParams::new(0, 1).is_err());
        assert!(NMParams::new(1, 0).is_ok());
        assert!(NMParams::new(0, 2).is_ok());
    }

    #[test]
    fn dual_pairs_arc_labels_and_fixes_edge_labels() {
        let params = NMParams::new(2, 3).unwrap();
        for label in params.labels() {
            assert_eq!(label.dual(params).dual(params), label);
            match label.decode(params) {
                Adjacency::Out(t) => assert_eq!(label.dual(params).decode(params), Adjacency::In(t)),
                Adjacency::In(t) => assert_eq!(label.dual(params).decode(params), Adjacency::Out(t)),
                Adjacency::Edge(_) => assert_eq!(label.dual(params), label),
            }
            assert_eq!(AdjacencyLabel::encode(label.decode(params), params).unwrap(), label);
        }
    }

    #[test]
    fn label_range() {
        let params = NMParams::new(1, 1).unwrap();
        assert!(params.label(0).is_err());
        assert!(params.label(4).is_err());
        assert_eq!(params.label(3).unwrap().decode(params), Adjacency::Edge(1));
    }
}
