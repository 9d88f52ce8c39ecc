//! Typed (n,m)-graphs: the seeing relation, relative and absolute cliques,
//! homomorphisms and chromatic numbers, planarity, and the extremal
//! triangle-free planar construction.

pub mod bitset;
pub mod cliques;
pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod homomorphism;
mod maxclique;
pub mod oracle;
pub mod params;
pub mod seeing;
pub mod structure;

pub use cliques::{
    absolute_clique_number, relative_clique_number, verify_absolute_clique, verify_relative_clique,
    CliqueCertificate, CliqueKind, UnseenPair,
};
pub use constructions::{
    check_tight, generate_exceptional, generate_fk, generate_tight, Gadget, TightCheck,
    TightConstruction, VertexRole,
};
pub use error::{Error, Result};
pub use format::{parse, parse_document, serialize, serialize_document, NmgDocument};
pub use graph::{GraphBuilder, NMGraph, TypedArc, TypedEdge, VertexSet};
pub use homomorphism::{
    chromatic_number, homomorphism_exists, verify_homomorphism, ChromaticOutcome, ChromaticResult,
    HomomorphismWitness, PairRelation,
};
pub use params::{Adjacency, AdjacencyLabel, NMParams};
pub use seeing::{agree, all_witnesses, is_special_2path, seeing_graph, sees, SeeWitness, SeeingGraph};
pub use structure::{
    find_exceptional_configuration, find_fk, girth, is_planar, is_triangle_free, validate_embedding,
    EulerCheck, ExceptionalOccurrence, FkOccurrence, RotationSystem,
};
