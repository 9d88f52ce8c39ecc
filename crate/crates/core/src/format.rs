//! The line-based `.nmg` text format.
//!
//! ```text
//! # comment
//! nm <n> <m>
//! vertices <count>
//! arc <u> <v> <t>
//! edge <u> <v> <t>
//! embed <v> <w1> <w2> ...
//! ```
//!
//! A `# good: v1 v2 ...` comment designates a vertex set. Serialization is
//! canonical: arcs sorted by `(u, v, t)`, edges by `(min, max, t)`, then the
//! `embed` block in vertex order.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, NMGraph, VertexSet};
use crate::params::NMParams;
use crate::structure::RotationSystem;

/// A parsed `.nmg` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NmgDocument {
    pub graph: NMGraph,
    pub embedding: Option<RotationSystem>,
    pub good: Option<VertexSet>,
    /// Free comment lines other than `good:`, without the leading `#`.
    pub comments: Vec<String>,
}

impl NmgDocument {
    pub fn new(graph: NMGraph) -> Self {
        Self {
            graph,
            embedding: None,
            good: None,
            comments: Vec::new(),
        }
    }
}

pub fn parse(text: &str) -> Result<NMGraph> {
    parse_document(text).map(|d| d.graph)
}

pub fn serialize(g: &NMGraph) -> String {
    serialize_document(&NmgDocument::new(g.clone()))
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} '{tok}'")))
}

pub fn parse_document(text: &str) -> Result<NmgDocument> {
    let mut params: Option<NMParams> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut embed: Vec<Option<Vec<usize>>> = Vec::new();
    let mut embed_seen = false;
    let mut good: Option<(usize, Vec<usize>)> = None;
    let mut comments = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(rest) = comment.strip_prefix("good:") {
                let vs = rest
                    .split_whitespace()
                    .map(|t| number(Some(t), line, "good vertex"))
                    .collect::<Result<Vec<_>>>()?;
                good = Some((line, vs));
            } else {
                comments.push(comment.to_string());
            }
            continue;
        }
        let content = trimmed.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let keyword = toks.next().unwrap_or_default();
        match keyword {
            "nm" => {
                if params.is_some() {
                    return Err(Error::parse(line, "duplicate 'nm' line"));
                }
                let n = number(toks.next(), line, "n")?;
                let m = number(toks.next(), line, "m")?;
                params = Some(NMParams::new(n, m).map_err(|e| Error::parse(line, e.to_string()))?);
            }
            "vertices" => {
                let p = params.ok_or_else(|| Error::parse(line, "'vertices' before 'nm'"))?;
                if builder.is_some() {
                    return Err(Error::parse(line, "duplicate 'vertices' line"));
                }
                let count = number(toks.next(), line, "vertex count")?;
                builder = Some(GraphBuilder::new(p, count));
                embed = vec![None; count];
            }
            "arc" | "edge" => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| Error::parse(line, format!("'{keyword}' before 'vertices'")))?;
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                let t = number(toks.next(), line, "type")?;
                let res = if keyword == "arc" {
                    b.add_arc(u, v, t).map(|_| ())
                } else {
                    b.add_edge(u, v, t).map(|_| ())
                };
                res.map_err(|e| Error::parse(line, e.to_string()))?;
            }
            "embed" => {
                if builder.is_none() {
                    return Err(Error::parse(line, "'embed' before 'vertices'"));
                }
                embed_seen = true;
                let v = number(toks.next(), line, "vertex")?;
                let slot = embed
                    .get_mut(v)
                    .ok_or_else(|| Error::parse(line, format!("embed vertex {v} out of range")))?;
                if slot.is_some() {
                    return Err(Error::parse(line, format!("vertex {v} embedded twice")));
                }
                *slot = Some(
                    toks.map(|t| number(Some(t), line, "neighbour"))
                        .collect::<Result<Vec<_>>>()?,
                );
                continue;
            }
            other => return Err(Error::parse(line, format!("unknown keyword '{other}'"))),
        }
        if toks.next().is_some() {
            return Err(Error::parse(line, "trailing tokens"));
        }
    }

    let last = text.lines().count().max(1);
    let graph = builder
        .ok_or_else(|| Error::parse(last, "missing 'nm' or 'vertices' line"))?
        .build();
    let embedding = if embed_seen {
        let rotations = embed
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or_else(|| Error::parse(last, format!("no embed line for vertex {v}"))))
            .collect::<Result<Vec<_>>>()?;
        Some(RotationSystem::new(&graph, rotations).map_err(|e| Error::parse(last, e.to_string()))?)
    } else {
        None
    };
    let good = match good {
        Some((line, vs)) => Some(
            VertexSet::new(vs, graph.vertex_count()).map_err(|e| Error::parse(line, e.to_string()))?,
        ),
        None => None,
    };
    Ok(NmgDocument {
        graph,
        embedding,
        good,
        comments,
    })
}

pub fn serialize_document(doc: &NmgDocument) -> String {
    let g = &doc.graph;
    let mut out = String::new();
    for c in &doc.comments {
        if c.is_empty() {
            out.push_str("#\n");
        } else {
            let _ = writeln!(out, "# {c}");
        }
    }
    if let Some(good) = &doc.good {
        out.push_str("# good:");
        for v in good.iter() {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "nm {} {}", g.params().n(), g.params().m());
    let _ = writeln!(out, "vertices {}", g.vertex_count());
    for a in g.arcs() {
        let _ = writeln!(out, "arc {} {} {}", a.tail, a.head, a.ty);
    }
    for e in g.edges() {
        let _ = writeln!(out, "edge {} {} {}", e.a, e.b, e.ty);
    }
    if let Some(rot) = &doc.embedding {
        for (v, r) in rot.rotations().iter().enumerate() {
            let _ = write!(out, "embed {v}");
            for w in r {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_arc() {
        let g = parse("nm 1 0\nvertices 2\narc 0 1 1\n").unwrap();
        assert_eq!(g.arcs().len(), 1);
        assert_eq!(g.label(0, 1).unwrap().value(), 2);
    }

    #[test]
    fn rejects_double_adjacency_with_line_number() {
        let err = parse("nm 1 1\nvertices 2\narc 0 1 1\nedge 0 1 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    }

    #[test]
    fn error_paths() {
        let cases = [
            ("nm 0 1\nvertices 2\n", 1),
            ("vertices 2\n", 1),
            ("nm 1 0\nvertices 2\narc 0 0 1\n", 3),
            ("nm 1 0\nvertices 2\narc 0 1 2\n", 3),
            ("nm 1 0\nvertices 2\narc 0 1\n", 3),
            ("nm 1 0\nvertices 2\nfoo 1\n", 3),
            ("nm 1 0\nvertices 2\narc 0 x 1\n", 3),
            ("nm 1 0\nvertices 2\narc 0 1 1 9\n", 3),
            ("nm 1 0\n# good: 0 5\nvertices 2\n", 2),
        ];
        for (text, line) in cases {
            match parse_document(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn canonical_order_and_comments() {
        let text = "# demo\nnm 1 1\nvertices 3\nedge 2 1 1  # trailing\narc 1 0 1\n# good: 2 0\n";
        let doc = parse_document(text).unwrap();
        assert_eq!(doc.good.as_ref().unwrap().as_slice(), &[0, 2]);
        assert_eq!(
            serialize_document(&doc),
            "# demo\n# good: 0 2\nnm 1 1\nvertices 3\narc 1 0 1\nedge 1 2 1\n"
        );
    }

    #[test]
    fn embed_block_round_trip_and_validation() {
        let text = "nm 0 2\nvertices 3\nedge 0 1 1\nedge 1 2 2\nembed 0 1\nembed 1 2 0\nembed 2 1\n";
        let doc = parse_document(text).unwrap();
        assert_eq!(doc.embedding.as_ref().unwrap().rotation(1), &[0, 2]);
        assert_eq!(parse_document(&serialize_document(&doc)).unwrap(), doc);
        assert!(parse_document("nm 0 2\nvertices 2\nedge 0 1 1\nembed 0 1\n").is_err());
        assert!(parse_document("nm 0 2\nvertices 2\nedge 0 1 1\nembed 0 1\nembed 1\n").is_err());
        assert!(parse_document("nm 0 2\nvertices 2\nedge 0 1 1\nembed 0 1\nembed 0 1\n").is_err());
    }
}
